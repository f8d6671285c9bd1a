#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>

namespace salembraid {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& msg) : Error(msg) {}
};

// A certified comparison could not be decided at the current working
// precision.  Callers escalate precision (see with_precision) and treat a
// throw at the precision cap as an Unknown outcome, never as a verdict.
struct PrecisionInsufficient : Error {
    explicit PrecisionInsufficient(const std::string& msg) : Error(msg) {}
};

// A denominator ball contains zero.  Subtype of PrecisionInsufficient so
// that escalation loops retry it; if it persists at the cap the point is
// treated as a certified evaluation failure.
struct DenominatorVanishes : PrecisionInsufficient {
    explicit DenominatorVanishes(const std::string& msg) : PrecisionInsufficient(msg) {}
};

struct ParseError : Error {
    int line;
    int col;
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " + std::to_string(col_) + ")"),
          line(line_), col(col_) {}
};

struct RelationFailure : Error {
    explicit RelationFailure(const std::string& msg) : Error(msg) {}
};

struct FixtureInconsistent : Error {
    explicit FixtureInconsistent(const std::string& msg) : Error(msg) {}
};

struct EvenDimension : Error {
    explicit EvenDimension(const std::string& msg) : Error(msg) {}
};

struct SingularInput : Error {
    explicit SingularInput(const std::string& msg) : Error(msg) {}
};

struct DegenerateResult : Error {
    explicit DegenerateResult(const std::string& msg) : Error(msg) {}
};

// The evaluated form is consistent with being singular at the point: the
// determinant enclosure contains zero at the precision cap.
struct DegenerateAtPoint : Error {
    explicit DegenerateAtPoint(const std::string& msg) : Error(msg) {}
};

struct NoCommonParent : Error {
    explicit NoCommonParent(const std::string& msg) : Error(msg) {}
};

struct ParityMismatch : Error {
    explicit ParityMismatch(const std::string& msg) : Error(msg) {}
};

// Working-precision policy for ball computations: start at `start` bits and
// double on PrecisionInsufficient up to `cap` bits.  Both are powers of two.
struct Precision {
    long start = 128;
    long cap = 4096;
};

// Runs f(prec) under the escalation policy.  f must be a pure function of
// its precision argument; any PrecisionInsufficient below the cap triggers a
// retry at doubled precision, and a throw at the cap propagates to the
// caller, who maps it to an Unknown verdict.
template <class F>
auto with_precision(const Precision& pc, F&& f) -> decltype(f(long(0))) {
    long p = std::max(pc.start, 2L);
    for (;;) {
        try {
            return f(p);
        } catch (const PrecisionInsufficient&) {
            if (p >= pc.cap) throw;
            p = std::min(p * 2, pc.cap);
        }
    }
}

}  // namespace salembraid
