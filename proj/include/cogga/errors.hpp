#pragma once

#include <stdexcept>
#include <string>

namespace cogga {

struct CoggaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scene generation exhausted its retry budget.
struct UngeneratableError : CoggaError {
    explicit UngeneratableError(const std::string& what) : CoggaError("ungeneratable: " + what) {}
};

struct PoseInCollisionError : CoggaError {
    explicit PoseInCollisionError(const std::string& what) : CoggaError("pose-in-collision: " + what) {}
};

// No grid path between the queried points.
struct DisconnectedError : CoggaError {
    explicit DisconnectedError(const std::string& what) : CoggaError("disconnected: " + what) {}
};

struct BackendUnavailableError : CoggaError {
    explicit BackendUnavailableError(const std::string& what) : CoggaError("backend-unavailable: " + what) {}
};

struct CassetteMissError : CoggaError {
    explicit CassetteMissError(const std::string& what) : CoggaError("cassette-miss: " + what) {}
};

struct PlannerUnavailableError : CoggaError {
    explicit PlannerUnavailableError(const std::string& what) : CoggaError("planner-unavailable: " + what) {}
};

struct ParseError : CoggaError {
    explicit ParseError(const std::string& what) : CoggaError("parse error: " + what) {}
};

}  // namespace cogga
