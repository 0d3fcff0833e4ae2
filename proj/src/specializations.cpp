#include "hopfact/specializations.hpp"

#include "hopfact/errors.hpp"

namespace hopfact {

namespace {

const Letter G1{0, 1};

Word gen_power(std::size_t gen, long k) { return word_power(Word{Letter{gen, 1}}, k); }

// 1 + q + ... + q^(k-1); 0 for k <= 0
FieldElement geometric_sum(const FieldElement& q, long k) {
    FieldElement s = q.field().zero(), p = q.field().one();
    for (long i = 0; i < k; ++i) {
        s += p;
        p *= q;
    }
    return s;
}

void require_primitive_h(const ActionData& ad, long n) {
    if (n < 1) throw HypothesesNotMet("n must be positive");
    if (!is_primitive_root_of_unity(ad.chi_h(), static_cast<int>(n)))
        throw HypothesesNotMet("chi(h) = " + ad.chi_h().to_string() + " is not a primitive " + std::to_string(n) + "-th root of unity");
}

void require_alpha_zero(const ActionData& ad) {
    for (std::size_t g = 0; g < ad.descriptor().alpha.size(); ++g)
        if (!ad.descriptor().alpha[g].is_zero())
            throw HypothesesNotMet("alpha(" + ad.descriptor().group.generators()[g] + ") is nonzero");
}

// generators g, h; h-word h; chi(g) = 1; chi(h) primitive; alpha = 0
void require_b_tilde(const ActionData& ad, long n) {
    const auto& d = ad.descriptor();
    const auto& gens = d.group.generators();
    if (gens.size() != 2 || gens[0] != "g" || gens[1] != "h")
        throw HypothesesNotMet("expected generators g, h");
    if (d.h_word != Word{Letter{1, 1}}) throw HypothesesNotMet("expected h-word h");
    if (!d.chi[0].is_one()) throw HypothesesNotMet("expected chi(g) = 1");
    require_alpha_zero(ad);
    require_primitive_h(ad, n);
}

PathElement arrow_image(const ActionData& ad, const Word& w, std::size_t a) {
    return g_on_element(ad, w, PathElement::arrow(ad.quiver_ptr(), ad.field(), a));
}

void add(SymbolicForm& f, const std::string& sym, const FieldElement& c) {
    auto it = f.find(sym);
    if (it == f.end()) {
        if (!c.is_zero()) f.emplace(sym, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) f.erase(it);
}

SymbolicForm form(std::initializer_list<std::pair<std::string, FieldElement>> entries) {
    SymbolicForm f;
    for (const auto& [s, c] : entries) add(f, s, c);
    return f;
}

const char* kGamma = "gamma_i";
const char* kOne = "1";
const char* kEi = "gamma_i e_i";
const char* kEhiGamma = "gamma_i e_{h.i}";
const char* kEhi = "e_{h.i}";
const char* kTa = "gamma_{ta} a";
const char* kSaH = "gamma_{sa} (h.a)";
const char* kH = "(h.a)";
const char* kSigma = "sigma(a)";
const char* kGSigma = "g.sigma(a)";
const char* kHGGamma = "gamma_{sa} (h.g.a)";
const char* kHG = "(h.g.a)";
const char* kProjected = "(e_{g.sa} - e_{gh.sa})(g.a)e_{hg.ta}";

// General conditions specialized to d, for generator g.
SymbolicForm general_vertex(const HopfOreDescriptor& d, std::size_t g) {
    return form({{kGamma, d.chi[g]}, {kOne, d.alpha[g]}});
}

SymbolicForm general_x_vertex(const HopfOreDescriptor& d) {
    auto ch = chi_extend(d, d.h_word), ah = alpha_extend(d, d.h_word);
    return form({{kEi, d.field.one()}, {kEhiGamma, -ch}, {kEhi, -ah}});
}

SymbolicForm general_x_arrow(const HopfOreDescriptor& d) {
    auto ch = chi_extend(d, d.h_word), ah = alpha_extend(d, d.h_word);
    return form({{kTa, d.field.one()}, {kSaH, -ch}, {kH, -ah}, {kSigma, d.field.one()}});
}

// sigma(g.a) in terms of g.sigma(a), with gamma_{g.sa} = chi(g) gamma_{sa} + alpha(g)
// substituted and g, h commuting.
SymbolicForm general_sigma(const HopfOreDescriptor& d, std::size_t g) {
    auto ch = chi_extend(d, d.h_word), ah = alpha_extend(d, d.h_word);
    const auto& c = d.chi[g];
    const auto& a = d.alpha[g];
    return form({{kGSigma, c}, {kHGGamma, ch * c - c * ch}, {kHG, ch * a + ah - a - c * ah}});
}

ConstraintComparison row(std::string name, SymbolicForm specialized, SymbolicForm stated) {
    return ConstraintComparison{std::move(name), std::move(specialized), std::move(stated)};
}

}  // namespace

std::string to_string(SpecializationKind k) {
    switch (k) {
    case SpecializationKind::H_ntq: return "H_ntq";
    case SpecializationKind::B_tilde: return "B_tilde";
    case SpecializationKind::C_nq: return "C_nq";
    case SpecializationKind::Uq_b: return "Uq_b";
    }
    return "?";
}

SpecializationKind specialization_kind_from_string(const std::string& s) {
    for (auto k : {SpecializationKind::H_ntq, SpecializationKind::B_tilde, SpecializationKind::C_nq, SpecializationKind::Uq_b})
        if (to_string(k) == s) return k;
    throw InvalidParams("unknown specialization kind '" + s + "'");
}

void validate_params(const SpecializationParams& p) {
    switch (p.kind) {
    case SpecializationKind::H_ntq:
        if (p.n < 1) throw InvalidParams("H_ntq needs n >= 1");
        if (p.t < 1 || p.t > p.n) throw InvalidParams("H_ntq needs 1 <= t <= n");
        if (p.m < 1 || p.m > p.n) throw InvalidParams("H_ntq needs 1 <= m <= n");
        if (!is_primitive_root_of_unity(p.q, static_cast<int>(p.n)))
            throw InvalidParams("H_ntq needs q a primitive n-th root of unity");
        break;
    case SpecializationKind::B_tilde:
        if (p.n <= 1) throw InvalidParams("B_tilde needs n > 1");
        if (!is_primitive_root_of_unity(p.q, static_cast<int>(p.n)))
            throw InvalidParams("B_tilde needs q a primitive n-th root of unity");
        break;
    case SpecializationKind::C_nq:
        if (p.q.is_zero()) throw InvalidParams("C_nq needs q != 0");
        break;
    case SpecializationKind::Uq_b: {
        const auto& F = p.q.field();
        if (p.q == F.one() || p.q == -F.one()) throw InvalidParams("Uq_b needs q != 1 and q != -1");
        if (p.q.is_zero()) throw InvalidParams("Uq_b needs q != 0");
        break;
    }
    }
}

namespace {

HopfOreDescriptor build_unchecked(const SpecializationParams& p) {
    const Field F = p.q.field();
    switch (p.kind) {
    case SpecializationKind::H_ntq:
        return make_descriptor(F, GroupPresentation({"g"}, {gen_power(0, p.n)}), gen_power(0, -p.t),
                               {{"g", pow(p.q, p.m)}}, {});
    case SpecializationKind::B_tilde:
        return make_descriptor(F, GroupPresentation({"g", "h"}, {{G1, Letter{1, 1}, Letter{0, -1}, Letter{1, -1}}}),
                               Word{Letter{1, 1}}, {{"g", F.one()}, {"h", p.q}}, {});
    case SpecializationKind::C_nq:
        return make_descriptor(F, GroupPresentation({"g"}, {}), gen_power(0, p.n - 1), {{"g", p.q}}, {{"g", -F.one()}});
    case SpecializationKind::Uq_b:
        break;
    }
    return make_descriptor(F, GroupPresentation({"g"}, {}), Word{G1}, {{"g", p.q.inverse()}}, {});
}

}  // namespace

HopfOreDescriptor build_specialization(const SpecializationParams& p) {
    validate_params(p);
    auto d = build_unchecked(p);
    if (!validate_descriptor(d).valid()) throw InvalidParams("parameters give an inconsistent descriptor");
    return d;
}

bool same_descriptor(const HopfOreDescriptor& a, const HopfOreDescriptor& b) {
    return a.field == b.field && a.group.generators() == b.group.generators() &&
           a.group.relators() == b.group.relators() && reduce_word(a.h_word) == reduce_word(b.h_word) &&
           a.chi == b.chi && a.alpha == b.alpha;
}

PathElement xn_on_vertex_closed(const ActionData& ad, std::size_t i, long n) {
    if (i >= ad.quiver().vertex_count()) throw UnknownVertex("vertex index " + std::to_string(i));
    if (!ad.alpha_h().is_zero()) throw HypothesesNotMet("alpha(h) is nonzero");
    require_primitive_h(ad, n);
    auto hn = ad.word_perm(word_power(ad.descriptor().h_word, n));
    const auto& qp = ad.quiver_ptr();
    auto e = PathElement::vertex(qp, ad.field(), i) - PathElement::vertex(qp, ad.field(), hn[i]);
    return e * pow(ad.vertex().gamma[i], n);
}

PathElement sigma_power(const ActionData& ad, const PathElement& u, long n) {
    PathElement cur = u;
    for (long k = 0; k < n; ++k) {
        PathElement next = ad.zero();
        for (const auto& [p, c] : cur.terms())
            if (p.length() == 1) next += ad.arrow().sigma[p.arrows[0]] * c;
        cur = std::move(next);
    }
    return cur;
}

PathElement sigma_power(const ActionData& ad, std::size_t a, long n) {
    return sigma_power(ad, PathElement::arrow(ad.quiver_ptr(), ad.field(), a), n);
}

PathElement xn_on_arrow_with_coefficients(const ActionData& ad, std::size_t a, long n, const FieldElement& c_source,
                                          const FieldElement& c_target) {
    if (a >= ad.quiver().arrow_count()) throw UnknownArrow("arrow index " + std::to_string(a));
    const auto& arr = ad.quiver().arrow(a);
    const auto& gamma = ad.vertex().gamma;
    auto hn_a = arrow_image(ad, word_power(ad.descriptor().h_word, n), a);
    return PathElement::arrow(ad.quiver_ptr(), ad.field(), a) * (c_target * pow(gamma[arr.target], n)) -
           hn_a * (c_source * pow(gamma[arr.source], n)) + sigma_power(ad, a, n);
}

PathElement xn_on_arrow_closed(const ActionData& ad, std::size_t a, long n) {
    if (a >= ad.quiver().arrow_count()) throw UnknownArrow("arrow index " + std::to_string(a));
    require_alpha_zero(ad);
    require_primitive_h(ad, n);
    return xn_on_arrow_with_coefficients(ad, a, n, ad.field().one(), ad.field().one());
}

bool FactorCertificate::vertices_pass() const {
    for (const auto& v : vertices)
        if (!v.pass()) return false;
    return true;
}

bool FactorCertificate::arrows_pass() const {
    for (const auto& a : arrows)
        if (!a.pass()) return false;
    return true;
}

FactorCertificate factor_check_B_vertices(const ActionData& ad, long n, long w) {
    require_b_tilde(ad, n);
    FactorCertificate cert;
    cert.n = n;
    cert.w = w;
    auto hn = ad.word_perm(gen_power(1, n));
    auto gw = ad.word_perm(gen_power(0, w));
    for (std::size_t i = 0; i < ad.quiver().vertex_count(); ++i) {
        VertexFactorEntry e;
        e.vertex = i;
        e.hn_fixed = hn[i] == i;
        e.gamma_power = pow(ad.vertex().gamma[i], n);
        e.root_ok = e.hn_fixed || e.gamma_power.is_one();
        e.orbit_ok = gw[i] == hn[i];
        cert.vertices.push_back(e);
    }
    return cert;
}

FactorCertificate factor_check_B_arrows(const ActionData& ad, long n, long w) {
    require_b_tilde(ad, n);
    FactorCertificate cert;
    cert.n = n;
    cert.w = w;
    const auto& F = ad.field();
    const auto& gamma = ad.vertex().gamma;
    for (std::size_t a = 0; a < ad.quiver().arrow_count(); ++a) {
        const auto& arr = ad.quiver().arrow(a);
        auto hn_a = arrow_image(ad, gen_power(1, n), a);
        auto gw_a = arrow_image(ad, gen_power(0, w), a);
        auto gps = F.one() - pow(gamma[arr.source], n);
        auto gpt = F.one() - pow(gamma[arr.target], n);
        auto sigma_n = sigma_power(ad, a, n);
        auto required = PathElement::arrow(ad.quiver_ptr(), F, a) * gpt - hn_a * gps;
        bool sigma_ok = sigma_n == required;
        ArrowFactorEntry e{a, F.one(), F.one(), gps, gpt, std::move(sigma_n), std::move(required), hn_a == gw_a, sigma_ok};
        cert.arrows.push_back(std::move(e));
    }
    return cert;
}

std::vector<std::string> annihilation_witnesses(const ActionData& ad, const RElement& r) {
    std::vector<std::string> out;
    for (const auto& p : enumerate_paths(ad.quiver(), 1)) {
        auto v = act(ad, r, PathElement::basis(ad.quiver_ptr(), ad.field(), p));
        if (!v.is_zero()) out.push_back(ad.quiver().path_name(p) + ": " + v.to_string());
    }
    return out;
}

FactorCertificate factor_check_B(const ActionData& ad, long n, long w) {
    FactorCertificate cert = factor_check_B_vertices(ad, n, w);
    cert.arrows = factor_check_B_arrows(ad, n, w).arrows;
    const auto& d = ad.descriptor();
    auto hn = word_element(d, gen_power(1, n));
    auto rel1 = x_power(d, static_cast<std::size_t>(n)) - RElement::unit(d.field) + hn;
    auto rel2 = word_element(d, gen_power(0, w)) - hn;
    for (const auto& s : annihilation_witnesses(ad, rel1)) cert.relation_witnesses.push_back("x^n - 1 + h^n on " + s);
    for (const auto& s : annihilation_witnesses(ad, rel2)) cert.relation_witnesses.push_back("g^w - h^n on " + s);
    cert.relations_annihilate = cert.relation_witnesses.empty();
    return cert;
}

bool ConstraintComparison::match() const { return specialized == stated; }

std::size_t ReductionReport::mismatches() const {
    std::size_t k = 0;
    for (const auto& r : rows)
        if (!r.match()) ++k;
    return k;
}

std::string form_to_string(const SymbolicForm& f) {
    if (f.empty()) return "0";
    std::string out;
    for (const auto& [sym, c] : f) {
        if (!out.empty()) out += " + ";
        auto cs = c.to_string();
        if (cs.find_first_of("+- ", 1) != std::string::npos) cs = "(" + cs + ")";
        out += sym == kOne ? cs : cs + "*" + sym;
    }
    return out;
}

ReductionReport reduction_report(const HopfOreDescriptor& d, const SpecializationParams& p) {
    auto built = [&] {
        try {
            return build_specialization(p);
        } catch (const InvalidParams& e) {
            throw KindMismatch(std::string("parameters do not describe a family: ") + e.what());
        }
    }();
    if (!same_descriptor(d, built)) throw KindMismatch("descriptor is not the " + to_string(p.kind) + " descriptor for these parameters");

    const Field& F = d.field;
    const auto one = F.one();
    const auto& q = p.q;
    ReductionReport rep;
    rep.kind = p.kind;
    auto support = [&](const Word& stated) {
        return row("sigma(a) = e_{sa} sigma(a) e_{w.ta}",
                   form({{"w = " + d.group.word_to_string(reduce_word(d.h_word)), one}}),
                   form({{"w = " + d.group.word_to_string(reduce_word(stated)), one}}));
    };
    switch (p.kind) {
    case SpecializationKind::H_ntq: {
        auto qm = pow(q, p.m);
        rep.rows.push_back(row("gamma_{g.i}", general_vertex(d, 0), form({{kGamma, qm}})));
        rep.rows.push_back(row("x.e_i", general_x_vertex(d), form({{kEi, one}, {kEhiGamma, -pow(q, p.m * p.t)}})));
        rep.rows.push_back(row("x.a", general_x_arrow(d), form({{kTa, one}, {kSaH, -qm}, {kSigma, one}})));
        rep.rows.push_back(support(gen_power(0, -p.t)));
        rep.rows.push_back(row("sigma(g.a)", general_sigma(d, 0), form({{kGSigma, qm}})));
        break;
    }
    case SpecializationKind::B_tilde:
        rep.rows.push_back(row("gamma_{g.i}", general_vertex(d, 0), form({{kGamma, one}})));
        rep.rows.push_back(row("gamma_{h.i}", general_vertex(d, 1), form({{kGamma, q}})));
        rep.rows.push_back(row("x.e_i", general_x_vertex(d), form({{kEi, one}, {kEhiGamma, -q}})));
        rep.rows.push_back(row("x.a", general_x_arrow(d), form({{kTa, one}, {kSaH, -q}, {kSigma, one}})));
        rep.rows.push_back(support(Word{Letter{1, 1}}));
        rep.rows.push_back(row("sigma(g.a)", general_sigma(d, 0), form({{kGSigma, one}})));
        rep.rows.push_back(row("sigma(h.a)", general_sigma(d, 1), form({{kGSigma, q}})));
        break;
    case SpecializationKind::C_nq: {
        auto s = geometric_sum(q, p.n - 1);
        rep.rows.push_back(row("gamma_{g.i}", general_vertex(d, 0), form({{kGamma, q}})));
        rep.rows.push_back(row("x.e_i", general_x_vertex(d), form({{kEi, one}, {kEhiGamma, s}})));
        rep.rows.push_back(row("x.a", general_x_arrow(d), form({{kTa, one}, {kSaH, s}, {kSigma, one}})));
        rep.rows.push_back(support(gen_power(0, p.n - 1)));
        rep.rows.push_back(row("sigma(g.a)", general_sigma(d, 0), form({{kGSigma, q}, {kProjected, -one}})));
        break;
    }
    case SpecializationKind::Uq_b:
        rep.rows.push_back(row("gamma_{g.i}", general_vertex(d, 0), form({{kGamma, q.inverse()}})));
        rep.rows.push_back(row("x.e_i", general_x_vertex(d), form({{kEi, one}, {kEhiGamma, -q.inverse()}})));
        break;
    }
    return rep;
}

}  // namespace hopfact
