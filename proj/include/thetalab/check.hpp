#pragma once

#include <cstdint>
#include <string>

namespace thetalab {

/// Outcome of a structural verification: pass/fail, how many facts were
/// checked, and the first counterexample found (empty when ok).
struct CheckReport {
    bool ok = true;
    std::int64_t checked = 0;
    std::string witness;

    void fail_with(std::string w) {
        if (ok) {
            ok = false;
            witness = std::move(w);
        }
    }
};

} // namespace thetalab
