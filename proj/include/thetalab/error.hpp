#pragma once

#include <stdexcept>
#include <string>

namespace thetalab {

// Every failure the library reports deliberately, as opposed to a plain
// std::logic_error signalling a bug in the library itself.
enum class ErrorKind {
    LoopEdge,
    DuplicateEdge,
    Disconnected,
    NotBipartite,
    NotInTheta,
    NotPartialCube,
    ClassRemovalNotTwoComponents,
    GroundSetMismatch,
    EulerViolation,
    NotFullerene,
    NotTriangulation,
    NotChordal,
    Not2Connected,
    SyntaxError,
    ConsistencyError,
    FamilyMismatch,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::LoopEdge: return "LoopEdge";
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::NotBipartite: return "NotBipartite";
        case ErrorKind::NotInTheta: return "NotInTheta";
        case ErrorKind::NotPartialCube: return "NotPartialCube";
        case ErrorKind::ClassRemovalNotTwoComponents: return "ClassRemovalNotTwoComponents";
        case ErrorKind::GroundSetMismatch: return "GroundSetMismatch";
        case ErrorKind::EulerViolation: return "EulerViolation";
        case ErrorKind::NotFullerene: return "NotFullerene";
        case ErrorKind::NotTriangulation: return "NotTriangulation";
        case ErrorKind::NotChordal: return "NotChordal";
        case ErrorKind::Not2Connected: return "Not2Connected";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::ConsistencyError: return "ConsistencyError";
        case ErrorKind::FamilyMismatch: return "FamilyMismatch";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace thetalab
