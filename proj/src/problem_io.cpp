#include "hopfact/problem_io.hpp"

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "hopfact/errors.hpp"

namespace hopfact {

namespace {

std::string escape(const std::string& token) {
    std::string out;
    for (char c : token) {
        if (c == '~') out += "~0";
        else if (c == '/') out += "~1";
        else out += c;
    }
    return out;
}

std::string at(const std::string& pointer, const std::string& token) { return pointer + "/" + escape(token); }
std::string at(const std::string& pointer, std::size_t index) { return pointer + "/" + std::to_string(index); }

void expect_keys(const Json& j, const std::string& pointer, const std::set<std::string>& required,
                 const std::set<std::string>& optional) {
    if (!j.is_object()) throw SchemaError(pointer.empty() ? "/" : pointer, "expected an object");
    for (const auto& k : required)
        if (!j.contains(k)) throw SchemaError(pointer.empty() ? "/" : pointer, "missing key '" + k + "'");
    for (const auto& [k, _] : j.items())
        if (!required.count(k) && !optional.count(k)) throw SchemaError(at(pointer, k), "unexpected key");
}

const Json& object_at(const Json& j, const std::string& pointer) {
    if (!j.is_object()) throw SchemaError(pointer, "expected an object");
    return j;
}

const Json& array_at(const Json& j, const std::string& pointer) {
    if (!j.is_array()) throw SchemaError(pointer, "expected an array");
    return j;
}

std::string string_at(const Json& j, const std::string& pointer) {
    if (!j.is_string()) throw SchemaError(pointer, "expected a string");
    return j.get<std::string>();
}

long integer_at(const Json& j, const std::string& pointer) {
    if (!j.is_number_integer()) throw SchemaError(pointer, "expected an integer");
    return j.get<long>();
}

std::vector<std::string> strings_at(const Json& j, const std::string& pointer) {
    std::vector<std::string> out;
    const auto& a = array_at(j, pointer);
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(string_at(a[i], at(pointer, i)));
    return out;
}

Rational rational_at(const Json& j, const std::string& pointer) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw SchemaError(pointer, "expected a rational literal");
    static const std::regex re(R"(-?[0-9]+(/[0-9]+)?)");
    auto s = j.get<std::string>();
    if (!std::regex_match(s, re)) throw SchemaError(pointer, "malformed rational '" + s + "'");
    Rational r(s);
    if (r.get_den() == 0) throw SchemaError(pointer, "zero denominator");
    r.canonicalize();
    return r;
}

std::vector<Rational> rationals_at(const Json& j, const std::string& pointer) {
    std::vector<Rational> out;
    const auto& a = array_at(j, pointer);
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(rational_at(a[i], at(pointer, i)));
    return out;
}

Json rationals_to_json(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& r : v) a.push_back(r.get_str());
    return a;
}

std::size_t vertex_at(const Quiver& q, const Json& j, const std::string& pointer) {
    auto name = string_at(j, pointer);
    try {
        return q.vertex_index(name);
    } catch (const UnknownVertex&) {
        throw ResolutionError(pointer, "unknown vertex '" + name + "'");
    }
}

std::size_t vertex_key(const Quiver& q, const std::string& name, const std::string& pointer) {
    try {
        return q.vertex_index(name);
    } catch (const UnknownVertex&) {
        throw ResolutionError(pointer, "unknown vertex '" + name + "'");
    }
}

std::size_t arrow_key(const Quiver& q, const std::string& name, const std::string& pointer) {
    try {
        return q.arrow_index(name);
    } catch (const UnknownArrow&) {
        throw ResolutionError(pointer, "unknown arrow '" + name + "'");
    }
}

std::size_t generator_key(const GroupPresentation& g, const std::string& name, const std::string& pointer) {
    try {
        return g.generator_index(name);
    } catch (const UnknownGenerator&) {
        throw ResolutionError(pointer, "unknown generator '" + name + "'");
    }
}

Word word_at(const GroupPresentation& g, const Json& j, const std::string& pointer) {
    auto tokens = strings_at(j, pointer);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        auto t = tokens[i];
        if (t.size() > 3 && t.compare(t.size() - 3, 3, "^-1") == 0) t.resize(t.size() - 3);
        generator_key(g, t, at(pointer, i));
    }
    return g.word_from_tokens(tokens);
}

Json word_to_json(const GroupPresentation& g, const Word& w) { return Json(g.word_to_tokens(w)); }

QuiverPtr quiver_from_json(const Json& j) {
    const std::string p = "/quiver";
    expect_keys(j, p, {"vertices", "arrows"}, {});
    auto vertices = strings_at(j["vertices"], at(p, "vertices"));
    std::set<std::string> declared(vertices.begin(), vertices.end());
    std::vector<Quiver::ArrowSpec> arrows;
    const auto& arr = array_at(j["arrows"], at(p, "arrows"));
    for (std::size_t i = 0; i < arr.size(); ++i) {
        auto ap = at(at(p, "arrows"), i);
        expect_keys(arr[i], ap, {"name", "source", "target"}, {});
        Quiver::ArrowSpec s{string_at(arr[i]["name"], at(ap, "name")), string_at(arr[i]["source"], at(ap, "source")),
                            string_at(arr[i]["target"], at(ap, "target"))};
        if (!declared.count(s.source)) throw ResolutionError(at(ap, "source"), "undeclared vertex '" + s.source + "'");
        if (!declared.count(s.target)) throw ResolutionError(at(ap, "target"), "undeclared vertex '" + s.target + "'");
        arrows.push_back(std::move(s));
    }
    try {
        return std::make_shared<Quiver>(std::move(vertices), std::move(arrows));
    } catch (const InvalidQuiver& e) {
        throw SchemaError(p, e.what());
    }
}

Json quiver_to_json(const Quiver& q) {
    Json arrows = Json::array();
    for (const auto& a : q.arrows())
        arrows.push_back({{"name", a.name}, {"source", q.vertices()[a.source]}, {"target", q.vertices()[a.target]}});
    return {{"vertices", q.vertices()}, {"arrows", arrows}};
}

std::map<std::string, FieldElement> generator_map(const Field& f, const GroupPresentation& g, const Json& j,
                                                  const std::string& pointer) {
    std::map<std::string, FieldElement> out;
    for (const auto& [k, v] : object_at(j, pointer).items()) {
        generator_key(g, k, at(pointer, k));
        out.emplace(k, literal_from_json(f, v, at(pointer, k)));
    }
    return out;
}

SpecializationParams specialization_from_json(const Field& f, const Json& j) {
    const std::string p = "/specialization";
    expect_keys(j, p, {"kind", "q"}, {"n", "t", "m", "w"});
    SpecializationParams sp;
    try {
        sp.kind = specialization_kind_from_string(string_at(j["kind"], at(p, "kind")));
    } catch (const InvalidParams& e) {
        throw SchemaError(at(p, "kind"), e.what());
    }
    for (const auto& [key, field] : {std::pair{"n", &sp.n}, {"t", &sp.t}, {"m", &sp.m}, {"w", &sp.w}})
        if (j.contains(key)) *field = integer_at(j[key], at(p, key));
    sp.q = literal_from_json(f, j["q"], at(p, "q"));
    return sp;
}

ActionBlock action_from_json(const HopfOreDescriptor& d, const QuiverPtr& qp, const Json& j) {
    const std::string p = "/action";
    const auto& q = *qp;
    const auto& G = d.group;
    const auto& F = d.field;
    expect_keys(j, p, {"vertex_perms"}, {"gamma", "arrow_mats", "sigma"});
    ActionBlock block;

    auto pp = at(p, "vertex_perms");
    const auto& perms = object_at(j["vertex_perms"], pp);
    block.perms.assign(G.size(), Permutation{});
    std::vector<bool> seen(G.size(), false);
    for (const auto& [gen, map] : perms.items()) {
        auto gp = at(pp, gen);
        auto g = generator_key(G, gen, gp);
        Permutation perm(q.vertex_count());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::vector<bool> hit(q.vertex_count(), false);
        for (const auto& [from, to] : object_at(map, gp).items()) {
            auto i = vertex_key(q, from, at(gp, from));
            perm[i] = vertex_at(q, to, at(gp, from));
        }
        for (auto v : perm) {
            if (hit[v]) throw SchemaError(gp, "not a bijection of the vertices");
            hit[v] = true;
        }
        block.perms[g] = std::move(perm);
        seen[g] = true;
    }
    for (std::size_t g = 0; g < G.size(); ++g)
        if (!seen[g]) throw SchemaError(pp, "missing generator '" + G.generators()[g] + "'");

    if (j.contains("gamma")) {
        auto gp = at(p, "gamma");
        std::vector<std::optional<FieldElement>> gamma(q.vertex_count());
        for (const auto& [v, lit] : object_at(j["gamma"], gp).items())
            gamma[vertex_key(q, v, at(gp, v))] = literal_from_json(F, lit, at(gp, v));
        std::vector<FieldElement> out;
        for (std::size_t i = 0; i < gamma.size(); ++i) {
            if (!gamma[i]) throw SchemaError(gp, "missing vertex '" + q.vertices()[i] + "'");
            out.push_back(*gamma[i]);
        }
        block.gamma = std::move(out);
    }

    if (j.contains("arrow_mats")) {
        auto mp = at(p, "arrow_mats");
        std::vector<std::optional<Matrix>> mats(G.size());
        for (const auto& [gen, cols] : object_at(j["arrow_mats"], mp).items()) {
            auto gp = at(mp, gen);
            auto g = generator_key(G, gen, gp);
            Matrix m(F, q.arrow_count(), q.arrow_count());
            for (const auto& [a, col] : object_at(cols, gp).items()) {
                auto ap = at(gp, a);
                auto ai = arrow_key(q, a, ap);
                for (const auto& [b, lit] : object_at(col, ap).items())
                    m(arrow_key(q, b, at(ap, b)), ai) = literal_from_json(F, lit, at(ap, b));
            }
            mats[g] = std::move(m);
        }
        std::vector<Matrix> out;
        for (std::size_t g = 0; g < G.size(); ++g) {
            if (!mats[g]) throw SchemaError(mp, "missing generator '" + G.generators()[g] + "'");
            out.push_back(*mats[g]);
        }
        block.mats = std::move(out);
    }

    if (j.contains("sigma")) {
        auto sp = at(p, "sigma");
        std::vector<PathElement> sigma(q.arrow_count(), PathElement(qp, F));
        for (const auto& [a, terms] : object_at(j["sigma"], sp).items()) {
            auto ap = at(sp, a);
            auto ai = arrow_key(q, a, ap);
            for (const auto& [target, lit] : object_at(terms, ap).items()) {
                auto tp = at(ap, target);
                bool is_arrow = true, is_vertex = false;
                std::size_t idx = 0;
                try {
                    idx = q.arrow_index(target);
                } catch (const UnknownArrow&) {
                    is_arrow = false;
                }
                if (target.rfind("e_", 0) == 0) {
                    try {
                        auto v = q.vertex_index(target.substr(2));
                        is_vertex = true;
                        if (!is_arrow) idx = v;
                    } catch (const UnknownVertex&) {
                    }
                }
                if (is_arrow && is_vertex) throw ResolutionError(tp, "'" + target + "' names both an arrow and a trivial path");
                if (!is_arrow && !is_vertex) throw ResolutionError(tp, "unknown arrow or trivial path '" + target + "'");
                Path path = is_arrow ? q.arrow_path(idx) : Path::vertex(idx);
                sigma[ai].add_term(path, literal_from_json(F, lit, tp));
            }
        }
        block.sigma = std::move(sigma);
    }
    return block;
}

Json action_to_json(const HopfOreDescriptor& d, const Quiver& q, const ActionBlock& a) {
    Json out;
    Json perms = Json::object();
    for (std::size_t g = 0; g < a.perms.size(); ++g) {
        Json map = Json::object();
        for (std::size_t i = 0; i < a.perms[g].size(); ++i) map[q.vertices()[i]] = q.vertices()[a.perms[g][i]];
        perms[d.group.generators()[g]] = map;
    }
    out["vertex_perms"] = perms;
    if (a.gamma) {
        Json gamma = Json::object();
        for (std::size_t i = 0; i < a.gamma->size(); ++i) gamma[q.vertices()[i]] = literal_to_json((*a.gamma)[i]);
        out["gamma"] = gamma;
    }
    if (a.mats) {
        Json mats = Json::object();
        for (std::size_t g = 0; g < a.mats->size(); ++g) {
            const auto& m = (*a.mats)[g];
            Json cols = Json::object();
            for (std::size_t c = 0; c < q.arrow_count(); ++c) {
                Json col = Json::object();
                for (std::size_t r = 0; r < q.arrow_count(); ++r)
                    if (!m(r, c).is_zero()) col[q.arrow(r).name] = literal_to_json(m(r, c));
                cols[q.arrow(c).name] = col;
            }
            mats[d.group.generators()[g]] = cols;
        }
        out["arrow_mats"] = mats;
    }
    if (a.sigma) {
        Json sigma = Json::object();
        for (std::size_t k = 0; k < a.sigma->size(); ++k)
            if (!(*a.sigma)[k].is_zero()) sigma[q.arrow(k).name] = path_element_to_json((*a.sigma)[k]);
        out["sigma"] = sigma;
    }
    return out;
}

}  // namespace

Json field_to_json(const Field& f) {
    switch (f.kind()) {
    case FieldKind::rational: return {{"kind", "rational"}};
    case FieldKind::cyclotomic: return {{"kind", "cyclotomic"}, {"order", f.order()}, {"symbol", f.symbol()}};
    case FieldKind::rational_function: return {{"kind", "rational_function"}, {"symbol", f.symbol()}};
    }
    return {};
}

Field field_from_json(const Json& j, const std::string& pointer) {
    if (!j.is_object() || !j.contains("kind")) throw SchemaError(pointer, "expected an object with 'kind'");
    auto kind = string_at(j["kind"], at(pointer, "kind"));
    if (kind == "rational") {
        expect_keys(j, pointer, {"kind"}, {});
        return Field::rationals();
    }
    if (kind == "cyclotomic") {
        expect_keys(j, pointer, {"kind", "order"}, {"symbol"});
        long n = integer_at(j["order"], at(pointer, "order"));
        if (n < 1 || n > 1000) throw SchemaError(at(pointer, "order"), "order must be between 1 and 1000");
        std::string s = j.contains("symbol") ? string_at(j["symbol"], at(pointer, "symbol")) : "z";
        return Field::cyclotomic(static_cast<int>(n), s);
    }
    if (kind == "rational_function") {
        expect_keys(j, pointer, {"kind"}, {"symbol"});
        std::string s = j.contains("symbol") ? string_at(j["symbol"], at(pointer, "symbol")) : "q";
        return Field::rational_functions(s);
    }
    throw SchemaError(at(pointer, "kind"), "unknown field kind '" + kind + "'");
}

Json literal_to_json(const FieldElement& e) {
    if (e.is_rational()) return e.to_rational().get_str();
    if (e.field().kind() == FieldKind::cyclotomic) return rationals_to_json(e.numerator().coeffs());
    return {{"num", rationals_to_json(e.numerator().coeffs())}, {"den", rationals_to_json(e.denominator().coeffs())}};
}

FieldElement literal_from_json(const Field& f, const Json& j, const std::string& pointer) {
    if (j.is_string() || j.is_number_integer()) return f.from_rational(rational_at(j, pointer));
    if (j.is_array()) {
        if (f.kind() != FieldKind::cyclotomic) throw SchemaError(pointer, "coefficient arrays are only valid in a cyclotomic field");
        return FieldElement::from_coefficients(f, rationals_at(j, pointer));
    }
    if (j.is_object()) {
        if (f.kind() != FieldKind::rational_function) throw SchemaError(pointer, "fractions are only valid in a rational function field");
        expect_keys(j, pointer, {"num", "den"}, {});
        Poly num(rationals_at(j["num"], at(pointer, "num")));
        Poly den(rationals_at(j["den"], at(pointer, "den")));
        if (den.is_zero()) throw SchemaError(at(pointer, "den"), "zero denominator");
        return FieldElement::from_fraction(f, num, den);
    }
    throw SchemaError(pointer, "expected a field literal");
}

ProblemFile problem_from_json(const Json& j) {
    expect_keys(j, "", {"field", "quiver"}, {"group", "chi", "alpha", "action", "specialization"});
    Field F = field_from_json(j["field"]);
    auto q = quiver_from_json(j["quiver"]);

    std::optional<SpecializationParams> spec;
    if (j.contains("specialization")) spec = specialization_from_json(F, j["specialization"]);

    std::optional<HopfOreDescriptor> d;
    if (j.contains("group")) {
        const std::string p = "/group";
        expect_keys(j["group"], p, {"generators", "h"}, {"relators"});
        auto gens = strings_at(j["group"]["generators"], at(p, "generators"));
        std::set<std::string> names;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (!names.insert(gens[i]).second) throw SchemaError(at(at(p, "generators"), i), "duplicate generator");
        GroupPresentation bare(gens, {});
        std::vector<Word> relators;
        if (j["group"].contains("relators")) {
            auto rp = at(p, "relators");
            const auto& rs = array_at(j["group"]["relators"], rp);
            for (std::size_t i = 0; i < rs.size(); ++i) relators.push_back(word_at(bare, rs[i], at(rp, i)));
        }
        auto h = word_at(bare, j["group"]["h"], at(p, "h"));
        if (!j.contains("chi")) throw SchemaError("/", "missing key 'chi'");
        auto chi = generator_map(F, bare, j["chi"], "/chi");
        std::map<std::string, FieldElement> alpha;
        if (j.contains("alpha")) alpha = generator_map(F, bare, j["alpha"], "/alpha");
        for (const auto& g : gens)
            if (!chi.count(g)) throw SchemaError("/chi", "missing generator '" + g + "'");
        try {
            d = make_descriptor(F, GroupPresentation(gens, relators), h, chi, alpha);
        } catch (const InvalidDescriptor& e) {
            throw SchemaError(p, e.what());
        }
    } else {
        if (j.contains("chi") || j.contains("alpha")) throw SchemaError("/", "'chi' and 'alpha' need a 'group'");
        if (!spec) throw SchemaError("/", "missing key 'group' (or a 'specialization' to build it from)");
    }
    if (spec) {
        HopfOreDescriptor built = [&] {
            try {
                return build_specialization(*spec);
            } catch (const InvalidParams& e) {
                throw SchemaError("/specialization", e.what());
            }
        }();
        if (!d) d = built;
        else if (!same_descriptor(*d, built))
            throw SchemaError("/specialization", "does not match the declared group, chi and alpha");
    }

    ProblemFile out{*d, q, std::nullopt, spec};
    if (j.contains("action")) out.action = action_from_json(*d, q, j["action"]);
    return out;
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw IoError("'" + path + "' is not valid JSON: " + e.what());
    }
    return problem_from_json(j);
}

Json problem_to_json(const ProblemFile& p) {
    const auto& d = p.descriptor;
    Json j;
    j["field"] = field_to_json(d.field);
    j["quiver"] = quiver_to_json(*p.quiver);
    Json rel = Json::array();
    for (const auto& r : d.group.relators()) rel.push_back(word_to_json(d.group, r));
    j["group"] = {{"generators", d.group.generators()}, {"relators", rel}, {"h", word_to_json(d.group, d.h_word)}};
    Json chi = Json::object(), alpha = Json::object();
    for (std::size_t g = 0; g < d.group.size(); ++g) {
        chi[d.group.generators()[g]] = literal_to_json(d.chi[g]);
        alpha[d.group.generators()[g]] = literal_to_json(d.alpha[g]);
    }
    j["chi"] = chi;
    j["alpha"] = alpha;
    if (p.action) j["action"] = action_to_json(d, *p.quiver, *p.action);
    if (p.specialization) {
        const auto& s = *p.specialization;
        j["specialization"] = {{"kind", to_string(s.kind)}, {"n", s.n}, {"t", s.t}, {"m", s.m}, {"w", s.w}, {"q", literal_to_json(s.q)}};
    }
    return j;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

ActionData to_action_data(const ProblemFile& p) {
    if (!p.action) throw SchemaError("/action", "the problem has no action block");
    const auto& a = *p.action;
    if (!a.gamma) throw SchemaError("/action", "missing key 'gamma'");
    std::vector<Matrix> mats;
    if (a.mats) mats = *a.mats;
    else if (p.quiver->arrow_count() == 0) mats.assign(p.descriptor.group.size(), Matrix(p.descriptor.field, 0, 0));
    else throw SchemaError("/action", "missing key 'arrow_mats'");
    std::vector<PathElement> sigma;
    if (a.sigma) sigma = *a.sigma;
    return ActionData(p.descriptor, p.quiver, VertexAction{a.perms, *a.gamma}, ArrowAction{mats, sigma});
}

Json path_element_to_json(const PathElement& u) {
    Json out = Json::object();
    for (const auto& [p, c] : u.terms()) out[u.quiver().path_name(p)] = literal_to_json(c);
    return out;
}

Json report_to_json(const Report& r) {
    Json v = Json::array();
    for (const auto& x : r.violations)
        v.push_back({{"axiom", x.axiom}, {"witnesses", x.witnesses}, {"lhs", x.lhs}, {"rhs", x.rhs}});
    return {{"ok", r.ok()}, {"violations", v}, {"warnings", r.warnings}};
}

Json family_to_json(const AffineFamily& fam) {
    Json out{{"coordinates", fam.coordinates}, {"empty", fam.empty}};
    if (fam.empty) return out;
    Json base = Json::array();
    for (const auto& b : fam.base) base.push_back(literal_to_json(b));
    Json dirs = Json::array();
    for (const auto& d : fam.directions) {
        Json v = Json::array();
        for (const auto& c : d) v.push_back(literal_to_json(c));
        dirs.push_back(v);
    }
    Json free = Json::array();
    for (auto k : fam.free_coordinates) free.push_back(fam.coordinates[k]);
    out["base"] = base;
    out["directions"] = dirs;
    out["free"] = free;
    out["dimension"] = fam.dimension();
    return out;
}

Json sigma_space_to_json(const SigmaSpace& s, const Quiver& q) {
    Json slots = Json::array();
    for (const auto& sl : s.slots) slots.push_back({{"arrow", q.arrow(sl.arrow).name}, {"target", q.path_name(sl.target)}});
    return {{"slots", slots}, {"family", family_to_json(s.family)}};
}

Json certificate_to_json(const FactorCertificate& c, const Quiver& q) {
    Json vs = Json::array();
    for (const auto& v : c.vertices)
        vs.push_back({{"vertex", q.vertices()[v.vertex]},
                      {"hn_fixed", v.hn_fixed},
                      {"gamma_power", literal_to_json(v.gamma_power)},
                      {"root_ok", v.root_ok},
                      {"orbit_ok", v.orbit_ok},
                      {"pass", v.pass()}});
    Json as = Json::array();
    for (const auto& a : c.arrows)
        as.push_back({{"arrow", q.arrow(a.arrow).name},
                      {"c_source", literal_to_json(a.c_source)},
                      {"c_target", literal_to_json(a.c_target)},
                      {"gamma_prime_source", literal_to_json(a.gamma_prime_source)},
                      {"gamma_prime_target", literal_to_json(a.gamma_prime_target)},
                      {"sigma_n", path_element_to_json(a.sigma_n)},
                      {"required", path_element_to_json(a.required)},
                      {"orbit_ok", a.orbit_ok},
                      {"sigma_ok", a.sigma_ok},
                      {"pass", a.pass()}});
    return {{"n", c.n},
            {"w", c.w},
            {"vertices", vs},
            {"arrows", as},
            {"relations_annihilate", c.relations_annihilate},
            {"relation_witnesses", c.relation_witnesses},
            {"pass", c.pass()}};
}

Json reduction_to_json(const ReductionReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"constraint", row.constraint},
                        {"specialized", form_to_string(row.specialized)},
                        {"stated", form_to_string(row.stated)},
                        {"match", row.match()}});
    return {{"kind", to_string(r.kind)}, {"rows", rows}, {"mismatches", r.mismatches()}};
}

}  // namespace hopfact
