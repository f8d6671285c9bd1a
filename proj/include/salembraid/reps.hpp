#pragma once

#include <optional>
#include <string>
#include <vector>

#include "salembraid/ring.hpp"

namespace salembraid {

// A braid-group representation: generators over a shared variable
// declaration.  The declaration doubles as the involution: variables marked
// inverted map to their reciprocals under bar, the rest stay fixed.
struct Representation {
    std::string name;
    size_t dim = 0;
    VarsPtr vars;
    std::vector<RingMatrix> generators;
};

// Exact verification of the braid relations: g_i g_j = g_j g_i for
// |i-j| > 1 and g_i g_{i+1} g_i = g_{i+1} g_i g_{i+1}.  Also rejects
// singular generators.  Throws RelationFailure naming the violated
// relation.
void check_braid_relations(const std::vector<RingMatrix>& gens);

// Reduced Burau representation of B_{n+1}: n generators of size n x n over
// Z[x, 1/x] with t = x^2.  Generator i is the identity outside row i, which
// carries (x, -x^2, x) centered on the diagonal.  This convention is pinned
// by the invariance check against squier_form, not by fiat; see the
// regression tests.
Representation burau_generators(long n);

// Squier's sesquilinear form: tridiagonal with diagonal x + 1/x and
// off-diagonal -1.  star(J) = J and star(g) J g = J for the Burau
// generators.
RingMatrix squier_form(long n);

// (x^{2n+2} - 1) / (x^n (x^2 - 1)), returned as an exact Laurent
// polynomial.
RatFunc det_squier_closed_form(long n);

// determinant(squier_form(n)) == det_squier_closed_form(n), exactly.
bool verify_det_formula(long n);

// The two 3x3 matrices of the B_3 BMW representation for the single-box
// Young diagram, over {l inverted, m fixed}.  The braid relation is checked
// at construction; a failed check throws FixtureInconsistent rather than
// silently fixing the transcription.
Representation bmw_b3_generators();

// Diagonal 6x6 invariant form of the B_4 BMW representation, over
// {a, L, both inverted}.  Evaluating at a = i, L = 1 gives 2 Id.
RingMatrix bmw_b4_form();

// Invariant 5x5 form of the B_6 Jones representation for the 2x3
// rectangular Young diagram, over {q inverted}.  Its q = 1 specialization
// is a positive definite integer matrix.
RingMatrix jones_rect_form();

// REPZ text format: `dim <n>`, `vars <name>[!]...` (`!` marks a variable
// inverted by the involution), then for each generator `gen <k>` followed
// by n rows of `;`-separated entry expressions, then an optional `form`
// section with the same row syntax.
struct RepFile {
    Representation rep;
    std::optional<RingMatrix> form;
};

RepFile parse_repz(const std::string& text, const std::string& name = "repz",
                   bool verify_relations = true);
RepFile load_representation(const std::string& path, bool verify_relations = true);

// Canonical serialization; parse_repz(save_representation(r)) round-trips.
std::string save_representation(const Representation& rep, const RingMatrix* form = nullptr);

// True iff star(g) J g = J exactly for every generator.
bool verify_invariance(const Representation& rep, const RingMatrix& J);

}  // namespace salembraid
