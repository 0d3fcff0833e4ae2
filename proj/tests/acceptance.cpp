// Acceptance run: one PASS/FAIL line per criterion, details indented below it.
// Usage: acceptance [criterion...]   (no arguments runs all eight)

#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "hopfact/errors.hpp"
#include "hopfact/problem_io.hpp"
#include "random_actions.hpp"
#include "support.hpp"

using namespace hopfact;
using namespace hopfact::testutil;

namespace {

constexpr std::uint64_t seed = 0x40F;

struct Outcome {
    bool pass = true;
    std::string summary;
    std::vector<std::string> details;

    void fail(const std::string& why) {
        if (details.size() < 25) details.push_back(why);
        pass = false;
    }
};

SpecializationParams params(SpecializationKind k, long n, long t, long m, FieldElement q) {
    SpecializationParams p;
    p.kind = k;
    p.n = n;
    p.t = t;
    p.m = m;
    p.q = std::move(q);
    return p;
}

FieldElement generic_q() { return Field::rational_functions("q").generator(); }

// The four descriptors of the soundness run.
struct NamedDescriptor {
    std::string name;
    HopfOreDescriptor d;
};

std::vector<NamedDescriptor> soundness_descriptors() {
    return {{"Uq_b", build_specialization(params(SpecializationKind::Uq_b, 0, 0, 0, generic_q()))},
            {"H(2,1,1,-1)", build_specialization(params(SpecializationKind::H_ntq, 2, 1, 1, Field::rationals().from_int(-1)))},
            {"B_tilde(3)", b_tilde(3)},
            {"C(2,q)", build_specialization(params(SpecializationKind::C_nq, 2, 0, 0, generic_q()))}};
}

// Group action on Jordan, A2 or Kronecker: vertices fixed, one scalar or swap per generator.
struct Setting {
    std::string quiver_name;
    QuiverPtr q;
    std::vector<Permutation> perms;
    std::vector<Matrix> mats;
};

std::vector<Setting> soundness_settings(const NamedDescriptor& nd) {
    const auto& F = nd.d.field;
    auto q = nd.d.field.kind() == FieldKind::rational_function ? F.generator() : F.from_int(2);
    std::vector<Setting> out;
    for (auto [name, quiver] : {std::pair{"Jordan", jordan_quiver()}, {"A2", a2_quiver()}, {"Kronecker", kronecker_quiver()}}) {
        const auto& Q = *quiver;
        std::vector<Permutation> perms(nd.d.group.size(), identity_perm(Q));
        auto scalar = [&](const FieldElement& c) {
            Matrix m(F, Q.arrow_count(), Q.arrow_count());
            for (std::size_t i = 0; i < Q.arrow_count(); ++i) m(i, i) = c;
            return m;
        };
        auto swap = [&] { return mat_of(Q, F, {{"a", "b", F.one()}, {"b", "a", F.one()}}); };
        auto diag = [&] { return mat_of(Q, F, {{"a", "a", F.one()}, {"b", "b", q}}); };
        std::vector<Matrix> mats;
        bool kron = Q.arrow_count() == 2, jordan = std::string(name) == "Jordan";
        if (nd.name == "Uq_b") mats.push_back(kron ? diag() : jordan ? scalar(q.inverse()) : scalar(F.one()));
        else if (nd.name == "H(2,1,1,-1)") mats.push_back(kron ? swap() : scalar(-F.one()));
        else if (nd.name == "B_tilde(3)") {
            mats.push_back(kron || jordan ? scalar(F.one()) : scalar(-F.one()));
            mats.push_back(kron ? swap() : jordan ? scalar(primitive_root(3)) : scalar(F.one()));
        } else mats.push_back(kron ? swap() : jordan ? scalar(F.from_int(2)) : scalar(q));
        out.push_back({name, quiver, perms, mats});
    }
    return out;
}

Outcome criterion_1() {
    Outcome o;
    Rng rng(seed);
    int runs = 0, clean = 0;
    for (const auto& nd : soundness_descriptors())
        for (const auto& s : soundness_settings(nd))
            for (int k = 0; k < 5; ++k) {
                ++runs;
                auto ad = random_member(nd.d, s.q, s.perms, s.mats, rng);
                std::string tag = nd.name + " on " + s.quiver_name + " #" + std::to_string(k);
                if (!ad) {
                    o.fail(tag + ": enumerated family is empty");
                    continue;
                }
                auto r = oracle_hopf_check(*ad, {3, false});
                if (!r.ok()) {
                    const auto& v = r.violations.front();
                    o.fail(tag + ": " + std::to_string(r.violations.size()) + " violation(s), first " + v.axiom + ": " + v.lhs + " vs " + v.rhs);
                    continue;
                }
                ++clean;
            }
    o.summary = std::to_string(clean) + "/" + std::to_string(runs) + " sampled actions with zero oracle violations (max_len 3)";
    return o;
}

// Exhaustive 3-point grid on one quiver with g of order 2 swapping the two vertices.
struct GridCase {
    std::string name;
    QuiverPtr q;
    Matrix mat;
};

Outcome criterion_2() {
    Outcome o;
    auto Q = Field::rationals();
    std::vector<NamedDescriptor> descs{
        {"alpha=0", build_specialization(params(SpecializationKind::H_ntq, 2, 1, 1, Q.from_int(-1)))},
        {"alpha(g)=1", cyclic_descriptor(Q, 2, Q.from_int(-1), Q.one(), 1)}};
    auto a2 = a2_quiver();
    auto bare = make_quiver({"1", "2"}, {});
    auto doubled = make_quiver({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}});
    std::vector<GridCase> cases{{"A2", a2, Matrix(Q, 1, 1)},
                                {"two vertices, no arrows", bare, Matrix(Q, 0, 0)},
                                {"doubled A2", doubled, mat_of(*doubled, Q, {{"a", "b", Q.one()}, {"b", "a", Q.one()}})}};
    const std::vector<FieldElement> grid{Q.from_int(-1), Q.zero(), Q.one()};
    std::size_t total = 0, members = 0, passing = 0;
    for (const auto& nd : descs)
        for (const auto& c : cases) {
            auto perm = perm_of(*c.q, {{"1", "2"}, {"2", "1"}});
            auto slots = sigma_slots(*c.q, perm);
            auto fam = enumerate_vertex_actions(nd.d, *c.q, {perm});
            bool group_ok = c.mat.inverse().has_value() && (c.mat * c.mat).is_identity();
            std::size_t dim = 2 + slots.size(), count = 1;
            for (std::size_t k = 0; k < dim; ++k) count *= grid.size();
            std::size_t case_members = 0, case_pass = 0;
            for (std::size_t idx = 0; idx < count; ++idx) {
                std::vector<FieldElement> pt;
                for (std::size_t k = 0, r = idx; k < dim; ++k, r /= grid.size()) pt.push_back(grid[r % grid.size()]);
                std::vector<FieldElement> gamma(pt.begin(), pt.begin() + 2), sig(pt.begin() + 2, pt.end());
                bool in_family = false;
                if (group_ok && fam.contains(gamma)) {
                    auto space = solve_sigma_space(nd.d, c.q, {{perm}, gamma}, {c.mat});
                    in_family = !space.family.empty && space.family.contains(sig);
                }
                bool oracle_ok = false;
                try {
                    ActionData ad(nd.d, c.q, {{perm}, gamma}, {{c.mat}, sigma_from_coordinates(c.q, Q, slots, sig)});
                    oracle_ok = oracle_hopf_check(ad, {3, true}).ok();
                } catch (const InvalidAction&) {
                    // h = g^-1 needs the inverse of a singular arrow matrix: no action at all
                }
                case_members += in_family;
                case_pass += oracle_ok;
                if (in_family != oracle_ok) {
                    std::ostringstream s;
                    s << nd.name << ", " << c.name << ": point";
                    for (const auto& v : pt) s << " " << v.to_string();
                    s << (in_family ? " is in the family but fails the oracle" : " passes the oracle but is not in the family");
                    o.fail(s.str());
                }
            }
            total += count;
            members += case_members;
            passing += case_pass;
            o.details.push_back(nd.name + ", " + c.name + ": " + std::to_string(count) + " grid points, " +
                                std::to_string(case_members) + " in family, " + std::to_string(case_pass) + " pass oracle");
        }
    o.summary = std::to_string(total) + " grid points, " + std::to_string(members) + " in family, " + std::to_string(passing) +
                " pass oracle";
    return o;
}

// Verified B_tilde actions: templates (all endpoint patterns) alternating with random quivers.
std::vector<ActionData> verified_b_tilde(long n, std::size_t want, Rng& rng, Outcome& o) {
    std::vector<ActionData> out;
    for (std::size_t trial = 0; out.size() < want && trial < 20 * want; ++trial) {
        std::optional<ActionData> ad;
        if (trial % 2 == 0) ad = b_tilde_template(n, std::uniform_int_distribution<long>(0, 2 * n - 1)(rng), rng);
        else ad = random_b_tilde(n, 5, rng);
        if (!ad) continue;
        if (!verify(*ad).ok()) {
            o.fail("generated action for n = " + std::to_string(n) + " does not verify");
            continue;
        }
        out.push_back(*ad);
    }
    if (out.size() < want) o.fail("only " + std::to_string(out.size()) + " verified actions for n = " + std::to_string(n));
    return out;
}

PathElement iterate_x(const ActionData& ad, PathElement u, long n) {
    for (long k = 0; k < n; ++k) u = x_on_element(ad, u);
    return u;
}

Outcome criterion_3() {
    Outcome o;
    Rng rng(seed + 3);
    std::size_t compared = 0, actions = 0;
    for (long n : {2L, 3L, 4L})
        for (const auto& ad : verified_b_tilde(n, 20, rng, o)) {
            ++actions;
            for (std::size_t i = 0; i < ad.quiver().vertex_count(); ++i) {
                ++compared;
                auto closed = xn_on_vertex_closed(ad, i, n);
                auto iter = iterate_x(ad, PathElement::vertex(ad.quiver_ptr(), ad.field(), i), n);
                if (!(closed == iter))
                    o.fail("n = " + std::to_string(n) + ", vertex " + ad.quiver().vertices()[i] + ": closed " + closed.to_string() +
                           " vs iterated " + iter.to_string());
            }
        }
    o.summary = std::to_string(compared) + " vertex comparisons over " + std::to_string(actions) + " verified actions (n = 2, 3, 4)";
    return o;
}

Outcome criterion_4() {
    Outcome o;
    Rng rng(seed + 4);
    std::size_t compared = 0, actions = 0, variant_diff = 0, variant_total = 0;
    std::map<std::pair<bool, bool>, std::size_t> cases;
    for (long n : {2L, 3L})
        for (const auto& ad : verified_b_tilde(n, 20, rng, o)) {
            ++actions;
            const auto& F = ad.field();
            auto hn = perm_power(ad.h_perm(), n);
            auto xn = x_power(ad.descriptor(), n);
            for (std::size_t a = 0; a < ad.quiver().arrow_count(); ++a) {
                const auto& arr = ad.quiver().arrow(a);
                bool sf = hn[arr.source] == arr.source, tf = hn[arr.target] == arr.target;
                ++cases[{sf, tf}];
                ++compared;
                auto truth = act(ad, xn, PathElement::arrow(ad.quiver_ptr(), F, a));
                auto closed = xn_on_arrow_closed(ad, a, n);
                if (!(closed == truth))
                    o.fail("n = " + std::to_string(n) + ", arrow " + arr.name + ": closed " + closed.to_string() + " vs " + truth.to_string());
                auto two = F.from_int(2);
                auto variant = xn_on_arrow_with_coefficients(ad, a, n, sf ? F.one() : two, tf ? F.one() : two);
                ++variant_total;
                variant_diff += !(variant == truth);
            }
        }
    const char* names[2] = {"moved", "fixed"};
    for (auto [k, v] : cases)
        o.details.push_back(std::string("source ") + names[k.first] + ", target " + names[k.second] + ": " + std::to_string(v) + " arrows");
    if (cases.size() < 4) o.fail("not all four fixed/moved endpoint patterns were exercised");
    o.details.push_back("note: coefficient 2 at h^n-moved endpoints disagrees with x^n on " + std::to_string(variant_diff) + "/" +
                        std::to_string(variant_total) + " arrows; the shipped closed form uses coefficient 1");
    o.summary = std::to_string(compared) + " arrow comparisons over " + std::to_string(actions) + " verified actions (n = 2, 3)";
    return o;
}

// 2n-cycle rotated by h with g = h^n, gamma_i = q^(i+k); arrows (0 -> 1) plus extra seeds (0 -> j).
ActionData cycle_action(long n, long k, Rng& rng) {
    auto d = b_tilde(n);
    const auto& F = d.field;
    std::size_t len = 2 * static_cast<std::size_t>(n);
    Permutation h(len);
    for (std::size_t i = 0; i < len; ++i) h[i] = (i + 1) % len;
    auto g = perm_power(h, n);
    std::vector<std::pair<std::size_t, std::size_t>> seeds{{0, 1}};
    for (std::size_t j = 2; j < len; ++j)
        if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) seeds.push_back({0, j});
    auto oq = close_arrows(len, {g, h}, seeds, F);
    auto q = d.chi[1];
    std::vector<FieldElement> gamma;
    for (std::size_t i = 0; i < len; ++i) gamma.push_back(pow(q, static_cast<long>(i) + k));
    VertexAction v{{g, h}, gamma};
    auto sig = solve_sigma_space(d, oq.quiver, v, oq.mats);
    auto sigma = sigma_from_coordinates(oq.quiver, F, sig.slots, sig.family.point(small_point(F, sig.family.dimension(), rng)));
    return ActionData(d, oq.quiver, v, ArrowAction{oq.mats, sigma});
}

ActionData with_gamma_scaled(const ActionData& ad, const FieldElement& c) {
    auto v = ad.vertex();
    for (auto& x : v.gamma) x *= c;
    return ActionData(ad.descriptor(), ad.quiver_ptr(), v, ad.arrow());
}

ActionData with_sigma_scaled(const ActionData& ad, const FieldElement& c) {
    auto a = ad.arrow();
    for (auto& s : a.sigma) s = s * c;
    return ActionData(ad.descriptor(), ad.quiver_ptr(), ad.vertex(), a);
}

bool relations_annihilate(const ActionData& ad, long n, long w, std::vector<std::string>& witnesses) {
    auto hn = "h^" + std::to_string(n);
    auto r1 = parse_r_element(ad.descriptor(), "x^" + std::to_string(n) + " - 1 + " + hn);
    auto r2 = parse_r_element(ad.descriptor(), "g^" + std::to_string(w) + " - " + hn);
    auto w1 = annihilation_witnesses(ad, r1), w2 = annihilation_witnesses(ad, r2);
    witnesses = w1;
    witnesses.insert(witnesses.end(), w2.begin(), w2.end());
    return w1.empty() && w2.empty();
}

Outcome criterion_5() {
    Outcome o;
    Rng rng(seed + 5);
    struct Case {
        std::string tag;
        ActionData ad;
        long n, w;
    };
    std::vector<Case> bases;
    for (int k = 0; bases.size() < 10 && k < 60; ++k) {
        long n = 2 + k % 2;
        auto ad = cycle_action(n, k % n, rng);
        long w = 1 + 2 * (k % 2);
        if (!verify(ad).ok()) {
            o.fail("base action " + std::to_string(k) + " does not verify");
            continue;
        }
        if (factor_check_B(ad, n, w).pass()) bases.push_back({"base " + std::to_string(bases.size()), ad, n, w});
    }
    std::vector<Case> cases = bases;
    const char* kinds[3] = {"w + 1", "gamma * 2", "sigma * 2"};
    for (std::size_t b = 0; b < bases.size(); ++b)
        for (int t = 0; t < 3; ++t) {
            const auto& base = bases[b];
            auto F = base.ad.field();
            Case c{std::string(kinds[t]) + " of base " + std::to_string(b), base.ad, base.n, base.w};
            if (t == 0) c.w += 1;
            if (t == 1) c.ad = with_gamma_scaled(base.ad, F.from_int(2));
            if (t == 2) c.ad = with_sigma_scaled(base.ad, F.from_int(2));
            if (!verify(c.ad).ok()) {
                o.fail(c.tag + ": perturbed data is no longer an action");
                continue;
            }
            cases.push_back(c);
        }
    std::size_t pass = 0, fail = 0;
    for (const auto& c : cases) {
        auto cert = factor_check_B(c.ad, c.n, c.w);
        std::vector<std::string> wit;
        bool direct = relations_annihilate(c.ad, c.n, c.w, wit);
        (cert.pass() ? pass : fail) += 1;
        if (cert.pass() != direct)
            o.fail(c.tag + ": certificate says " + (cert.pass() ? "pass" : "fail") + ", relations " +
                   (direct ? "annihilate" : "do not annihilate (" + wit.front() + ")"));
    }
    if (pass < 10) o.fail("only " + std::to_string(pass) + " passing fixtures");
    if (fail < 10) o.fail("only " + std::to_string(fail) + " failing fixtures");
    o.summary = std::to_string(cases.size()) + " fixtures (" + std::to_string(pass) + " factor, " + std::to_string(fail) +
                " do not); certificate and relation check agree on every one";
    if (!o.pass) o.summary = std::to_string(cases.size()) + " fixtures (" + std::to_string(pass) + " factor, " + std::to_string(fail) + " do not)";
    return o;
}

// Four vertices, h swaps 1<->2 and 3<->4, g swaps 1<->3 and 2<->4; chi(g) = -1, alpha(g) = 1, chi(h) = 1.
ActionData cocycle_square() {
    auto Q = Field::rationals();
    auto q = make_quiver({"1", "2", "3", "4"}, {});
    Word g{Letter{0, 1}}, h{Letter{1, 1}};
    GroupPresentation G({"g", "h"}, {word_power(g, 2), word_power(h, 2), {Letter{0, 1}, Letter{1, 1}, Letter{0, -1}, Letter{1, -1}}});
    auto d = make_descriptor(Q, G, h, {{"g", Q.from_int(-1)}, {"h", Q.one()}}, {{"g", Q.one()}, {"h", Q.zero()}});
    VertexAction v{{perm_of(*q, {{"1", "3"}, {"3", "1"}, {"2", "4"}, {"4", "2"}}), perm_of(*q, {{"1", "2"}, {"2", "1"}, {"3", "4"}, {"4", "3"}})},
                   {Q.zero(), Q.zero(), Q.one(), Q.one()}};
    return ActionData(d, q, v, ArrowAction{{Matrix(Q, 0, 0), Matrix(Q, 0, 0)}, {}});
}

Outcome criterion_6() {
    Outcome o;
    std::vector<std::pair<std::string, ActionData>> pool;
    for (const auto& entry : std::filesystem::directory_iterator(HOPFACT_FIXTURE_DIR)) {
        if (entry.path().extension() != ".json") continue;
        auto p = load_problem(entry.path().string());
        if (!p.action || !p.action->gamma) continue;
        pool.emplace_back(entry.path().filename().string(), to_action_data(p));
    }
    pool.emplace_back("cocycle square", cocycle_square());
    Rng rng(seed + 6);
    for (const auto& nd : soundness_descriptors())
        for (const auto& s : soundness_settings(nd))
            if (auto ad = random_member(nd.d, s.q, s.perms, s.mats, rng)) pool.emplace_back(nd.name + " on " + s.quiver_name, *ad);
    for (long n : {2L, 3L, 4L})
        for (int k = 0; k < 4; ++k) pool.emplace_back("B_tilde template n=" + std::to_string(n), b_tilde_template(n, k, rng));

    std::size_t verified = 0, moved = 0, moved_alpha = 0, fixed = 0;
    for (const auto& [name, ad] : pool) {
        if (!verify(ad).ok()) continue;
        ++verified;
        const auto& d = ad.descriptor();
        const auto& Q = ad.quiver();
        for (std::size_t i = 0; i < Q.vertex_count(); ++i) {
            if (ad.h_perm()[i] == i) {
                ++fixed;
                continue;
            }
            if (!ad.x_vertex(i).is_zero()) continue;
            for (std::size_t g = 0; g < d.group.size(); ++g) {
                ++moved;
                moved_alpha += !d.alpha[g].is_zero();
            }
        }
        auto r = check_vertex_annihilation(ad, 3);
        for (const auto& v : r.violations) {
            std::string w;
            for (const auto& x : v.witnesses) w += " " + x;
            o.fail(name + ": " + v.axiom + w + ": " + v.lhs + " vs " + v.rhs);
        }
    }
    o.details.push_back(std::to_string(moved) + " (vertex, generator) pairs with x.e_i = 0 and h.i != i, " + std::to_string(moved_alpha) +
                        " of them with alpha(g) != 0; " + std::to_string(fixed) + " h-fixed vertices");
    if (moved_alpha == 0) o.fail("no instance with alpha(g) != 0 was exercised");
    o.summary = std::to_string(verified) + " verified fixtures checked";
    return o;
}

Outcome criterion_7() {
    Outcome o;
    auto Q = Field::rationals();
    std::vector<SpecializationParams> ps{
        params(SpecializationKind::H_ntq, 2, 1, 1, Q.from_int(-1)),   params(SpecializationKind::H_ntq, 3, 1, 1, primitive_root(3)),
        params(SpecializationKind::H_ntq, 4, 1, 2, primitive_root(4)), params(SpecializationKind::H_ntq, 4, 3, 1, primitive_root(4)),
        params(SpecializationKind::B_tilde, 2, 0, 0, Q.from_int(-1)),  params(SpecializationKind::B_tilde, 3, 0, 0, primitive_root(3)),
        params(SpecializationKind::C_nq, 2, 0, 0, generic_q()),        params(SpecializationKind::C_nq, 3, 0, 0, generic_q()),
        params(SpecializationKind::Uq_b, 0, 0, 0, generic_q())};
    std::size_t rows = 0, bad = 0;
    for (const auto& p : ps) {
        auto rep = reduction_report(build_specialization(p), p);
        std::string tag = to_string(p.kind) + "(n=" + std::to_string(p.n) + ", t=" + std::to_string(p.t) + ", m=" + std::to_string(p.m) + ")";
        rows += rep.rows.size();
        bad += rep.mismatches();
        o.details.push_back(tag + ": " + std::to_string(rep.rows.size()) + " rows, " + std::to_string(rep.mismatches()) + " mismatches");
        for (const auto& r : rep.rows)
            if (!r.match())
                o.fail(tag + " " + r.constraint + ": specialized " + form_to_string(r.specialized) + " | stated " + form_to_string(r.stated));
    }
    o.summary = std::to_string(rows) + " constraint rows, " + std::to_string(bad) + " mismatches";
    return o;
}

Outcome criterion_8() {
    Outcome o;
    std::mt19937_64 rng(seed + 8);
    std::vector<std::pair<std::string, std::function<Field(int)>>> kinds{
        {"rational", [](int) { return Field::rationals(); }},
        {"cyclotomic", [](int k) { return Field::cyclotomic(1 + k % 12, "z"); }},
        {"rational_function", [](int) { return Field::rational_functions("q"); }}};
    for (const auto& [name, make] : kinds) {
        std::size_t failures = 0;
        for (int k = 0; k < 1000; ++k) {
            auto F = make(k);
            auto a = random_element(F, rng), b = random_element(F, rng), c = random_element(F, rng);
            bool ok = (a + b) + c == a + (b + c) && a + b == b + a && (a * b) * c == a * (b * c) && a * b == b * a &&
                      a * (b + c) == a * b + a * c && a + F.zero() == a && a * F.one() == a && (a + (-a)).is_zero() &&
                      a - b == a + (-b) && (a.is_zero() || a * a.inverse() == F.one()) && (b.is_zero() || (a / b) * b == a);
            if (!ok) {
                ++failures;
                o.fail(name + ": axiom failure at a = " + a.to_string() + ", b = " + b.to_string() + ", c = " + c.to_string());
            }
        }
        o.details.push_back(name + ": 1000 checks, " + std::to_string(failures) + " failures");
    }
    for (int n = 1; n <= 12; ++n) {
        auto z = primitive_root(n);
        auto one = z.field().one();
        auto p = one;
        int order = 0;
        for (int k = 1; k <= 24; ++k) {
            p *= z;
            if (p == one) {
                order = k;
                break;
            }
        }
        if (order != n) o.fail("zeta_" + std::to_string(n) + " has order " + std::to_string(order));
    }
    o.summary = "3000 randomized axiom checks, zeta_N orders for N = 1..12";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::function<Outcome()>> all{criterion_1, criterion_2, criterion_3, criterion_4,
                                              criterion_5, criterion_6, criterion_7, criterion_8};
    std::vector<int> which;
    for (int i = 1; i < argc; ++i) {
        int k = std::atoi(argv[i]);
        if (k < 1 || k > 8) {
            std::cerr << "usage: acceptance [1-8]...\n";
            return 2;
        }
        which.push_back(k);
    }
    if (which.empty())
        for (int k = 1; k <= 8; ++k) which.push_back(k);
    bool ok = true;
    for (int k : which) {
        Outcome o;
        try {
            o = all[k - 1]();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k << ": " << o.summary << "\n";
        for (const auto& d : o.details) std::cout << "  " << d << "\n";
        ok = ok && o.pass;
    }
    return ok ? 0 : 1;
}
