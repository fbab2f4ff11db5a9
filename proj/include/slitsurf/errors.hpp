#pragma once

#include <stdexcept>
#include <string>

namespace slitsurf {

enum class Err {
    FieldMismatch,
    BadDiscriminant,
    DivisionByZero,
    DegenerateLattice,
    NotPrimitive,
    ParallelToW,
    CrossTooLarge,
    H2Mismatch,
    ZeroTwist,
    NotAllowed,
    InvalidResult,
    LemmaViolation,
    SigmaZero,
    FrameImpossible,
    Precondition,
    TraceOverflow,
    ParseError,
    UnknownExample,
};

class Error : public std::runtime_error {
public:
    Error(Err kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Err kind() const { return kind_; }

private:
    Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& what) { throw Error(kind, what); }

} // namespace slitsurf
