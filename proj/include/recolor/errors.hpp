#pragma once

#include <stdexcept>
#include <string>

namespace recolor {

// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

// Embedded-graph loading / plane graph surgery.
struct EmbeddingInvalid : Error {
    using Error::Error;
};
struct NotSimple : Error {
    using Error::Error;
};
struct NotACycle : Error {
    using Error::Error;
};
struct NotSeparating : Error {
    using Error::Error;
};
struct SeparatorNotInduced : Error {
    using Error::Error;
};

// Sequence replay.
struct ImproperStep : Error {
    int index;
    ImproperStep(int idx, const std::string& msg) : Error(msg), index(idx) {}
};
struct ListViolation : Error {
    int index;
    ListViolation(int idx, const std::string& msg) : Error(msg), index(idx) {}
};
struct OnceOnlyViolation : Error {
    int vertex;
    OnceOnlyViolation(int v, const std::string& msg) : Error(msg), vertex(v) {}
};
struct LatenessViolation : Error {
    int index;
    LatenessViolation(int idx, const std::string& msg) : Error(msg), index(idx) {}
};
struct MaxRecoloringsViolation : Error {
    int index;
    MaxRecoloringsViolation(int idx, const std::string& msg) : Error(msg), index(idx) {}
};

// Witness composition.
struct IncompatibleEndpoints : Error {
    using Error::Error;
};
struct IntersectionMismatch : Error {
    using Error::Error;
};

// Pipeline / oracle limits.
struct PreconditionViolated : Error {
    using Error::Error;
};
struct SearchExhausted : Error {
    using Error::Error;
};
struct StateSpaceTooLarge : Error {
    using Error::Error;
};
struct ListSolverFailed : Error {
    using Error::Error;
};
struct Unreachable : Error {
    using Error::Error;
};
struct BadParams : Error {
    using Error::Error;
};

// A bug: an operation whose preconditions provably guarantee success failed
// anyway.  Carries a machine-readable dump of the offending configuration.
struct InternalError : Error {
    std::string dump;
    explicit InternalError(const std::string& msg, std::string dump_ = {})
        : Error(msg), dump(std::move(dump_)) {}
};

}  // namespace recolor
