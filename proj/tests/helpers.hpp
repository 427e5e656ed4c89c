// Shared helpers for the Catch2 suite.
#pragma once

#include <catch_amalgamated.hpp>

#include <string>
#include <utility>

#include "thetalab/error.hpp"
#include "thetalab/io.hpp"

// Runs fn, which must throw a thetalab::Error, and hands back its kind.
template <typename F>
thetalab::ErrorKind error_kind_of(F&& fn) {
    try {
        std::forward<F>(fn)();
    } catch (const thetalab::Error& err) {
        return err.kind();
    }
    FAIL("expected a thetalab::Error to be thrown");
    return thetalab::ErrorKind::ConsistencyError; // unreachable
}

inline thetalab::ParsedGraphFile load_fixture(const std::string& name) {
    return thetalab::load_graph_file(std::string(THETALAB_DATA_DIR) + "/" + name + ".graph");
}
