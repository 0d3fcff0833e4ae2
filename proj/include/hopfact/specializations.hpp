#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopfact/action.hpp"

namespace hopfact {

enum class SpecializationKind { H_ntq, B_tilde, C_nq, Uq_b };

std::string to_string(SpecializationKind k);
/// Inverse of to_string; throws InvalidParams for unknown names.
SpecializationKind specialization_kind_from_string(const std::string& s);

/// Parameters of a named family. Unused integers are ignored: H_ntq uses
/// n, t, m; B_tilde uses n (w only matters for the factor check); C_nq uses
/// n; Uq_b uses none.
struct SpecializationParams {
    SpecializationKind kind = SpecializationKind::Uq_b;
    long n = 0;
    long t = 0;
    long m = 0;
    long w = 0;
    FieldElement q;
};

/// Throws InvalidParams naming the violated condition.
void validate_params(const SpecializationParams& p);

/// H_ntq:  G = <g | g^n>, h = g^-t, chi(g) = q^m, alpha = 0.
/// B_tilde: G = <g, h | [g, h]>, chi(g) = 1, chi(h) = q, alpha = 0.
/// C_nq:   G = <g>, h = g^(n-1), chi(g) = q, alpha(g) = -1.
/// Uq_b:   G = <g>, h = g, chi(g) = q^-1, alpha = 0.
HopfOreDescriptor build_specialization(const SpecializationParams& p);

/// Same group, h, chi and alpha (field included).
bool same_descriptor(const HopfOreDescriptor& a, const HopfOreDescriptor& b);

/// gamma_i^n (e_i - e_{h^n.i}). Requires alpha(h) = 0 and chi(h) a
/// primitive n-th root of unity (HypothesesNotMet otherwise).
PathElement xn_on_vertex_closed(const ActionData& ad, std::size_t i, long n);

/// sigma applied n times, sigma extended linearly and by zero on trivial paths.
PathElement sigma_power(const ActionData& ad, const PathElement& u, long n);
PathElement sigma_power(const ActionData& ad, std::size_t a, long n);

/// c_t gamma_{ta}^n a - c_s gamma_{sa}^n (h^n.a) + sigma^n(a) with c = 1.
/// Requires alpha = 0 on every generator and chi(h) a primitive n-th root
/// of unity (HypothesesNotMet otherwise).
PathElement xn_on_arrow_closed(const ActionData& ad, std::size_t a, long n);

/// Same as xn_on_arrow_closed with an explicit c_i per endpoint; used to
/// compare against the variant with c_i = 2 at h^n-moved vertices.
PathElement xn_on_arrow_with_coefficients(const ActionData& ad, std::size_t a, long n, const FieldElement& c_source,
                                          const FieldElement& c_target);

struct VertexFactorEntry {
    std::size_t vertex = 0;
    bool hn_fixed = false;
    FieldElement gamma_power;  // gamma_i^n
    bool root_ok = false;      // hn_fixed or gamma_i^n = 1
    bool orbit_ok = false;     // g^w.i = h^n.i
    bool pass() const noexcept { return root_ok && orbit_ok; }
};

struct ArrowFactorEntry {
    std::size_t arrow = 0;
    FieldElement c_source;
    FieldElement c_target;
    FieldElement gamma_prime_source;  // 1 - gamma_{sa}^n
    FieldElement gamma_prime_target;  // 1 - gamma_{ta}^n
    PathElement sigma_n;
    PathElement required;  // gamma'_{ta} a - gamma'_{sa} (h^n.a)
    bool orbit_ok = false;  // h^n.a = g^w.a
    bool sigma_ok = false;
    bool pass() const noexcept { return orbit_ok && sigma_ok; }
};

/// Whether an action of the B_tilde family descends to the quotient by
/// x^n - 1 + h^n and g^w - h^n.
struct FactorCertificate {
    long n = 0;
    long w = 0;
    std::vector<VertexFactorEntry> vertices;
    std::vector<ArrowFactorEntry> arrows;
    /// Direct check: both relations act by zero on kQ0 + kQ1.
    bool relations_annihilate = false;
    std::vector<std::string> relation_witnesses;

    bool vertices_pass() const;
    bool arrows_pass() const;
    bool pass() const { return vertices_pass() && arrows_pass(); }
};

/// Both throw HypothesesNotMet unless the descriptor is of B_tilde shape
/// (generators g, h; h-word h; chi(g) = 1; chi(h) a primitive n-th root;
/// alpha = 0).
FactorCertificate factor_check_B_vertices(const ActionData& ad, long n, long w);
FactorCertificate factor_check_B_arrows(const ActionData& ad, long n, long w);
/// Vertex and arrow parts plus the direct relation check.
FactorCertificate factor_check_B(const ActionData& ad, long n, long w);

/// Basis elements of kQ0 + kQ1 on which r does not act by zero, as
/// "path: value" strings.
std::vector<std::string> annihilation_witnesses(const ActionData& ad, const RElement& r);

/// A linear constraint as a coefficient table over named symbols.
using SymbolicForm = std::map<std::string, FieldElement>;

struct ConstraintComparison {
    std::string constraint;
    SymbolicForm specialized;  // from the general conditions
    SymbolicForm stated;       // from the family's own description
    bool match() const;
};

struct ReductionReport {
    SpecializationKind kind = SpecializationKind::Uq_b;
    std::vector<ConstraintComparison> rows;
    std::size_t mismatches() const;
};

/// Specializes the general vertex, x-action and sigma conditions to the
/// descriptor and sets them next to the family's own description. Throws
/// KindMismatch unless d equals build_specialization(p).
ReductionReport reduction_report(const HopfOreDescriptor& d, const SpecializationParams& p);

std::string form_to_string(const SymbolicForm& f);

}  // namespace hopfact
