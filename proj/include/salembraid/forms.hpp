#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "salembraid/reps.hpp"
#include "salembraid/ring.hpp"
#include "salembraid/salem.hpp"

namespace salembraid {

// Basis of the solution space of the invariance equations
// star(g) J g = J, the m^2 entries of J treated as unknowns over the
// fraction field.  Each basis element satisfies the equations exactly and
// has its first nonzero entry (row-major) normalized to 1.
struct FormSolution {
    std::vector<RingMatrix> basis;
    size_t dim_solution_space = 0;
};

FormSolution solve_invariant_form(const Representation& rep);

// beta J + bar(beta) star(J).  Always star-symmetric; throws
// DegenerateResult when the combination collapses to a singular matrix, in
// which case the caller retries with a beta not fixed by the involution.
RingMatrix hermitianize(const RingMatrix& J, const RatFunc& beta);

// Evaluation points are supplied as a function of the working precision so
// that certified verdicts can escalate: the point is re-evaluated at each
// precision level.
using PointFn = std::function<std::vector<ComplexBall>(long)>;

// Exact point (for instance a = i, L = 1), usable at any precision.
PointFn gaussian_point(std::vector<GaussianRational> pt);

// A form evaluated at a point together with a bound on how far the balls
// are from being exactly Hermitian.  Evaluation refuses points at which the
// matrix is certifiably not Hermitian.
struct HermitianEval {
    size_t dim = 0;
    BallMatrix entries;
    RealBall hermitian_defect;
};

HermitianEval evaluate_hermitian(const RingMatrix& J, const std::vector<ComplexBall>& point);

// Certified positive definiteness via the signs of the leading principal
// minors (pivots of the ball LDL* factorization in natural order).  Throws
// PrecisionInsufficient at the escalation cap, DenominatorVanishes if an
// entry denominator vanishes at the point.
bool is_positive_definite_at(const RingMatrix& J, const PointFn& point, const Precision& pc = {});

// Certified inertia counts; positives + negatives = dim on success.
struct SignatureResult {
    long positives = 0;
    long negatives = 0;
    bool operator==(const SignatureResult& o) const {
        return positives == o.positives && negatives == o.negatives;
    }
};

// Certified signature via ball LDL* with symmetric pivoting; an isotropic
// diagonal is handled by certified hyperbolic 2x2 pivots.  Throws
// DegenerateAtPoint when the determinant enclosure still contains zero at
// the cap, PrecisionInsufficient otherwise.
SignatureResult signature_at(const RingMatrix& J, const PointFn& point, const Precision& pc = {});

// lambda = det(J1)/det(J2) for same-dimension odd Hermitian inputs; then
// det(J1) and det(lambda J2) differ by a square of the fraction field.
// Throws EvenDimension or SingularInput.
RatFunc determinant_class_scaling(const RingMatrix& J1, const RingMatrix& J2);

// Classification check for single-variable forms specialized at powers of
// one Salem number: J1 at t = s^n against J2 at t = s^m.  Dimensions must
// match and be odd (determinant classes then always match by scaling), so
// the verdict reduces to comparing certified signatures at every
// unit-circle conjugate embedding.  nullopt means some embedding stayed
// undecidable at the precision cap while no embedding certified a
// difference.
std::optional<bool> forms_equivalent_salem(const RingMatrix& J1, const RingMatrix& J2,
                                           const SalemCert& cert, std::pair<long, long> exps,
                                           const Precision& pc = {});

}  // namespace salembraid
