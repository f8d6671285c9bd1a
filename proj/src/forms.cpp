#include "salembraid/forms.hpp"

#include <algorithm>
#include <cassert>

namespace salembraid {

FormSolution solve_invariant_form(const Representation& rep) {
    if (rep.generators.empty()) throw Error("solve_invariant_form: no generators");
    const size_t m = rep.dim;
    const VarsPtr& vars = rep.vars;
    std::vector<std::vector<RatFunc>> rows;
    RatFunc one = RatFunc::constant(vars, 1);
    for (const auto& g : rep.generators) {
        RingMatrix gs = g.star();
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) {
                // coefficient of unknown J_{k,l} in (star(g) J g - J)_{i,j}
                std::vector<RatFunc> row;
                row.reserve(m * m);
                for (size_t k = 0; k < m; ++k)
                    for (size_t l = 0; l < m; ++l) {
                        RatFunc c = gs.at(i, k) * g.at(l, j);
                        if (k == i && l == j) c = c - one;
                        row.push_back(std::move(c));
                    }
                rows.push_back(std::move(row));
            }
    }
    FormSolution sol;
    for (auto& v : nullspace(rows, vars, m * m)) {
        RingMatrix b(vars, m);
        for (size_t k = 0; k < m; ++k)
            for (size_t l = 0; l < m; ++l) b.at(k, l) = std::move(v[k * m + l]);
        sol.basis.push_back(std::move(b));
    }
    sol.dim_solution_space = sol.basis.size();
    return sol;
}

RingMatrix hermitianize(const RingMatrix& J, const RatFunc& beta) {
    RingMatrix r = J.scale(beta) + J.star().scale(beta.bar());
    if (r.determinant().num().is_zero())
        throw DegenerateResult("hermitianize: result singular for this beta");
    return r;
}

PointFn gaussian_point(std::vector<GaussianRational> pt) {
    return [pt = std::move(pt)](long prec) {
        std::vector<ComplexBall> out;
        out.reserve(pt.size());
        for (const auto& g : pt)
            out.emplace_back(RealBall::from_mpq(g.re, prec), RealBall::from_mpq(g.im, prec));
        return out;
    };
}

HermitianEval evaluate_hermitian(const RingMatrix& J, const std::vector<ComplexBall>& point) {
    BallMatrix a = J.evaluate(point);
    const size_t n = a.n;
    long prec = point.empty() ? 64 : point[0].re.prec();
    RealBall defect = RealBall::exact_int(0, prec);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            ComplexBall d = a.at(i, j) - a.at(j, i).conj();
            if (!d.contains_zero())
                throw Error("evaluate_hermitian: matrix certifiably not Hermitian at this point");
            defect = defect + d.abs();
        }
    return HermitianEval{n, std::move(a), std::move(defect)};
}

namespace {

// Determinant of a ball matrix by Laplace expansion; used only as a small
// diagnostic to separate degeneracy from imprecision.
ComplexBall ball_det(const BallMatrix& a, std::vector<size_t> rows, std::vector<size_t> cols,
                     long prec) {
    if (rows.size() == 1) return a.at(rows[0], cols[0]);
    ComplexBall acc = ComplexBall::exact_int(0, prec);
    std::vector<size_t> sub_rows(rows.begin() + 1, rows.end());
    for (size_t k = 0; k < cols.size(); ++k) {
        std::vector<size_t> sub_cols;
        for (size_t j = 0; j < cols.size(); ++j)
            if (j != k) sub_cols.push_back(cols[j]);
        ComplexBall term = a.at(rows[0], cols[k]) * ball_det(a, sub_rows, sub_cols, prec);
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

bool det_consistent_with_zero(const RingMatrix& J, const std::vector<ComplexBall>& point,
                              long prec) {
    if (J.dim() > 8) return false;
    BallMatrix a = J.evaluate(point);
    std::vector<size_t> idx(a.n);
    for (size_t i = 0; i < a.n; ++i) idx[i] = i;
    return ball_det(a, idx, idx, prec).contains_zero();
}

// Inertia of a Hermitian ball matrix by LDL* with symmetric pivoting.
// Certified 1x1 pivots classify one index; a certified hyperbolic 2x2 block
// (negative determinant with isotropic diagonal) classifies a (+1, -1)
// pair.  Throws PrecisionInsufficient when no pivot is certifiable.
SignatureResult ball_signature(BallMatrix a) {
    SignatureResult sig;
    std::vector<size_t> act(a.n);
    for (size_t i = 0; i < a.n; ++i) act[i] = i;
    while (!act.empty()) {
        size_t best = act.size();
        double best_mag = -1;
        for (size_t t = 0; t < act.size(); ++t) {
            const RealBall& d = a.at(act[t], act[t]).re;
            if (d.contains_zero()) continue;
            double mag = std::abs(d.mid_d());
            if (mag > best_mag) {
                best_mag = mag;
                best = t;
            }
        }
        if (best < act.size()) {
            size_t r = act[best];
            const RealBall& d = a.at(r, r).re;
            (d.gt_zero() ? sig.positives : sig.negatives) += 1;
            ComplexBall dc = ComplexBall::from_real(d);
            act.erase(act.begin() + best);
            for (size_t i : act)
                for (size_t j : act) a.at(i, j) = a.at(i, j) - a.at(i, r) * a.at(r, j) / dc;
            continue;
        }
        // isotropic diagonal: look for a certified hyperbolic pair
        bool stepped = false;
        for (size_t tr = 0; tr < act.size() && !stepped; ++tr)
            for (size_t tc = tr + 1; tc < act.size() && !stepped; ++tc) {
                size_t r = act[tr], c = act[tc];
                RealBall det2 = a.at(r, r).re * a.at(c, c).re - a.at(r, c).abs2();
                if (!det2.lt_zero()) continue;
                sig.positives += 1;
                sig.negatives += 1;
                ComplexBall b00 = a.at(r, r), b01 = a.at(r, c), b10 = a.at(c, r),
                            b11 = a.at(c, c);
                ComplexBall dc = b00 * b11 - b01 * b10;
                std::vector<size_t> rest;
                for (size_t i : act)
                    if (i != r && i != c) rest.push_back(i);
                for (size_t i : rest)
                    for (size_t j : rest) {
                        ComplexBall w0 = b11 * a.at(r, j) - b01 * a.at(c, j);
                        ComplexBall w1 = b00 * a.at(c, j) - b10 * a.at(r, j);
                        a.at(i, j) = a.at(i, j) - (a.at(i, r) * w0 + a.at(i, c) * w1) / dc;
                    }
                act = std::move(rest);
                stepped = true;
            }
        if (!stepped) throw PrecisionInsufficient("signature: no certifiable pivot");
    }
    return sig;
}

}  // namespace

bool is_positive_definite_at(const RingMatrix& J, const PointFn& point, const Precision& pc) {
    return with_precision(pc, [&](long prec) -> bool {
        HermitianEval h = evaluate_hermitian(J, point(prec));
        BallMatrix a = std::move(h.entries);
        for (size_t k = 0; k < a.n; ++k) {
            const RealBall d = a.at(k, k).re;
            if (d.lt_zero()) return false;  // leading minor sign flip, certified
            if (!d.gt_zero()) throw PrecisionInsufficient("positive definiteness undecided");
            ComplexBall dc = ComplexBall::from_real(d);
            for (size_t i = k + 1; i < a.n; ++i)
                for (size_t j = k + 1; j < a.n; ++j)
                    a.at(i, j) = a.at(i, j) - a.at(i, k) * a.at(k, j) / dc;
        }
        return true;
    });
}

SignatureResult signature_at(const RingMatrix& J, const PointFn& point, const Precision& pc) {
    try {
        return with_precision(pc, [&](long prec) -> SignatureResult {
            return ball_signature(evaluate_hermitian(J, point(prec)).entries);
        });
    } catch (const PrecisionInsufficient&) {
        bool degenerate = false;
        try {
            degenerate = det_consistent_with_zero(J, point(pc.cap), pc.cap);
        } catch (const Error&) {
        }
        if (degenerate)
            throw DegenerateAtPoint("signature: determinant enclosure contains zero at the cap");
        throw;
    }
}

RatFunc determinant_class_scaling(const RingMatrix& J1, const RingMatrix& J2) {
    if (J1.dim() != J2.dim())
        throw DimensionMismatch("determinant_class_scaling: dimensions differ");
    if (J1.dim() % 2 == 0)
        throw EvenDimension("determinant_class_scaling: undefined for even dimension");
    require_same_vars(J1.vars(), J2.vars());
    RatFunc d1 = J1.determinant(), d2 = J2.determinant();
    if (d1.num().is_zero() || d2.num().is_zero())
        throw SingularInput("determinant_class_scaling: singular input form");
    return d1 / d2;
}

std::optional<bool> forms_equivalent_salem(const RingMatrix& J1, const RingMatrix& J2,
                                           const SalemCert& cert, std::pair<long, long> exps,
                                           const Precision& pc) {
    if (J1.dim() != J2.dim())
        throw DimensionMismatch("forms_equivalent_salem: dimensions differ");
    if (J1.dim() % 2 == 0)
        throw EvenDimension("forms_equivalent_salem: restricted to odd dimension");
    if (J1.vars()->size() != 1 || J2.vars()->size() != 1)
        throw Error("forms_equivalent_salem: forms must be over a single variable");

    // At each unit-circle embedding (s - 1/s)^2 < 0, so the signature there
    // is part of the classification; the surviving real embedding imposes
    // nothing.
    bool any_unknown = false;
    for (size_t j = 0; j < cert.arg_balls.size(); ++j) {
        auto point_at = [&](long e) {
            return [&, e](long prec) -> std::vector<ComplexBall> {
                SalemCert c = cert.precision_bits >= prec ? cert : refine_cert(cert.poly, prec);
                return {ComplexBall::unit(c.arg_balls[j].mul_z(mpz_class(e)))};
            };
        };
        try {
            SignatureResult s1 = signature_at(J1, point_at(exps.first), pc);
            SignatureResult s2 = signature_at(J2, point_at(exps.second), pc);
            if (!(s1 == s2)) return false;
        } catch (const PrecisionInsufficient&) {
            any_unknown = true;
        }
    }
    if (any_unknown) return std::nullopt;
    return true;
}

}  // namespace salembraid
