#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfact/hopf_ore.hpp"
#include "hopfact/linalg.hpp"
#include "hopfact/quiver.hpp"

namespace hopfact {

using Permutation = std::vector<std::size_t>;

/// Group action on Q0 and the scalars gamma_i.
struct VertexAction {
    std::vector<Permutation> perms;  // per generator: perms[g][i] = g.i
    std::vector<FieldElement> gamma;  // per vertex
};

/// Group action on kQ1 and the correction term sigma.
struct ArrowAction {
    std::vector<Matrix> mats;        // per generator; entry (b, a) is the coefficient of b in g.a
    std::vector<PathElement> sigma;  // per arrow
};

/// Full data of a filtered action of R on kQ.
///
/// Construction only checks shapes (sizes, fields, bijectivity of the vertex
/// permutations); the algebraic conditions are checked by verify() and the
/// oracle, so invalid data can be represented and reported on.
class ActionData {
public:
    ActionData(HopfOreDescriptor descriptor, QuiverPtr quiver, VertexAction vertex, ArrowAction arrow);

    const HopfOreDescriptor& descriptor() const noexcept { return d_; }
    const Field& field() const noexcept { return d_.field; }
    const QuiverPtr& quiver_ptr() const noexcept { return q_; }
    const Quiver& quiver() const noexcept { return *q_; }
    const VertexAction& vertex() const noexcept { return v_; }
    const ArrowAction& arrow() const noexcept { return a_; }

    /// w.i for every vertex i; letters act right to left.
    Permutation word_perm(const Word& w) const;
    /// Matrix of w on kQ1. Throws InvalidAction when w needs the inverse of a
    /// singular generator matrix.
    Matrix word_matrix(const Word& w) const;
    bool has_inverse(std::size_t gen) const { return inverse_mats_.at(gen).has_value(); }

    const Permutation& h_perm() const noexcept { return h_perm_; }
    const Matrix& h_matrix() const noexcept { return h_matrix_; }
    /// chi(h) and alpha(h).
    const FieldElement& chi_h() const noexcept { return chi_h_; }
    const FieldElement& alpha_h() const noexcept { return alpha_h_; }

    /// Cached x.e_i, x.a and h.a.
    const PathElement& x_vertex(std::size_t i) const { return x_vertex_.at(i); }
    const PathElement& x_arrow(std::size_t a) const { return x_arrow_.at(a); }
    const PathElement& h_arrow(std::size_t a) const { return h_arrow_.at(a); }

    PathElement zero() const { return PathElement(q_, d_.field); }

private:
    HopfOreDescriptor d_;
    QuiverPtr q_;
    VertexAction v_;
    ArrowAction a_;
    std::vector<Permutation> inverse_perms_;
    std::vector<std::optional<Matrix>> inverse_mats_;
    Permutation h_perm_;
    Matrix h_matrix_;
    FieldElement chi_h_;
    FieldElement alpha_h_;
    std::vector<PathElement> x_vertex_;
    std::vector<PathElement> x_arrow_;
    std::vector<PathElement> h_arrow_;
};

/// One failed check: which axiom, the instance, and both sides.
struct Violation {
    std::string axiom;
    std::vector<std::string> witnesses;
    std::string lhs;
    std::string rhs;
};

struct Report {
    std::vector<Violation> violations;
    std::vector<std::string> warnings;

    bool ok() const noexcept { return violations.empty(); }
    void merge(const Report& o);
};

Report verify_descriptor(const HopfOreDescriptor& d);
Report verify_vertex_action(const ActionData& ad);
Report verify_arrow_action(const ActionData& ad);
/// Descriptor, vertex and arrow checks together.
Report verify(const ActionData& ad);

PathElement x_on_vertex(const ActionData& ad, std::size_t i);
PathElement x_on_arrow(const ActionData& ad, std::size_t a);
PathElement x_on_path(const ActionData& ad, const Path& p);
/// Linear extension of x_on_path.
PathElement x_on_element(const ActionData& ad, const PathElement& u);
PathElement g_on_path(const ActionData& ad, const Permutation& perm, const Matrix& mat, const Path& p);
PathElement g_on_element(const ActionData& ad, const Word& w, const PathElement& u);
/// (w, x^k) acts as w after k applications of x.
PathElement act(const ActionData& ad, const RElement& r, const PathElement& u);

struct OracleOptions {
    std::size_t max_len = 3;
    bool stop_at_first = false;
};

/// Brute-force check of the module-algebra axioms on basis paths up to
/// max_len: multiplicativity for x and every generator (and inverse), unit
/// conditions, relators, the commutation relation of R, and the filtration.
Report oracle_hopf_check(const ActionData& ad, const OracleOptions& opts = {});

/// Checks the vertex annihilation consequences: for x.e_i = 0 with h.i != i,
/// x.e_{g.i} = 0 iff alpha(g) = 0; for h.i = i, x.e_{w.i} = 0 for every word
/// of length <= max_word.
Report check_vertex_annihilation(const ActionData& ad, std::size_t max_word = 3);

/// All gamma vectors compatible with the permutation action.
AffineFamily enumerate_vertex_actions(const HopfOreDescriptor& d, const Quiver& q,
                                      const std::vector<Permutation>& perms);

/// Allowed target of sigma(a): an arrow b with s(b) = s(a), t(b) = h.t(a),
/// or the trivial path at s(a) when h.t(a) = s(a).
struct SigmaSlot {
    std::size_t arrow;
    Path target;
};

struct SigmaSpace {
    std::vector<SigmaSlot> slots;  // one coordinate each
    AffineFamily family;
};

std::vector<SigmaSlot> sigma_slots(const Quiver& q, const Permutation& h_perm);

SigmaSpace solve_sigma_space(const HopfOreDescriptor& d, const QuiverPtr& q, const VertexAction& vertex,
                             const std::vector<Matrix>& mats);

/// sigma assignment from slot coordinates.
std::vector<PathElement> sigma_from_coordinates(const QuiverPtr& q, const Field& f,
                                                const std::vector<SigmaSlot>& slots,
                                                const std::vector<FieldElement>& values);

/// Group action only: relator and bijectivity checks on permutations.
bool perms_respect_relators(const GroupPresentation& g, const std::vector<Permutation>& perms);

Permutation compose_word(const std::vector<Permutation>& perms, const std::vector<Permutation>& inverses,
                         const Word& w);

}  // namespace hopfact
