#include "hopfact/action.hpp"

#include "hopfact/errors.hpp"

namespace hopfact {

namespace {

bool is_bijection(const Permutation& p, std::size_t n) {
    if (p.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (auto v : p) {
        if (v >= n || hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

Permutation invert_perm(const Permutation& p) {
    Permutation inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
    return inv;
}

bool is_identity_perm(const Permutation& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != i) return false;
    return true;
}

std::string vertex_name(const Quiver& q, std::size_t v) { return "e_" + q.vertices().at(v); }

// sum_b m(b, a) b
PathElement matrix_column(const QuiverPtr& q, const Field& f, const Matrix& m, std::size_t a) {
    PathElement out(q, f);
    for (std::size_t b = 0; b < m.rows(); ++b)
        if (!m(b, a).is_zero()) out.add_term(q->arrow_path(b), m(b, a));
    return out;
}

Violation violation(std::string axiom, std::vector<std::string> witnesses, std::string lhs, std::string rhs) {
    return Violation{std::move(axiom), std::move(witnesses), std::move(lhs), std::move(rhs)};
}

// Forced value of sigma(g.a) - chi(g) g.sigma(a), read off from the
// commutation relation on a given the vertex data:
//   (chi(h) gamma_{g.s(a)} + alpha(h) - alpha(g)) h.g.a
//   - chi(g) (chi(h) gamma_{s(a)} + alpha(h)) g.h.a
// It vanishes whenever g and h commute on the arrows and the cocycle is
// consistent on [g, h].
PathElement sigma_forcing(const ActionData& ad, std::size_t g, std::size_t a) {
    const auto& d = ad.descriptor();
    const auto& f = d.field;
    const auto& m = ad.arrow().mats[g];
    const auto& p = ad.vertex().perms[g];
    const auto& gamma = ad.vertex().gamma;
    std::size_t sa = ad.quiver().arrow(a).source;
    auto hg = matrix_column(ad.quiver_ptr(), f, ad.h_matrix() * m, a);
    auto gh = matrix_column(ad.quiver_ptr(), f, m * ad.h_matrix(), a);
    auto c1 = ad.chi_h() * gamma[p[sa]] + ad.alpha_h() - d.alpha[g];
    auto c2 = d.chi[g] * (ad.chi_h() * gamma[sa] + ad.alpha_h());
    return hg * c1 - gh * c2;
}

}  // namespace

Permutation compose_word(const std::vector<Permutation>& perms, const std::vector<Permutation>& inverses,
                         const Word& w) {
    std::size_t n = perms.empty() ? 0 : perms.front().size();
    Permutation res(n);
    for (std::size_t i = 0; i < n; ++i) res[i] = i;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        const auto& p = it->exp > 0 ? perms.at(it->gen) : inverses.at(it->gen);
        for (auto& v : res) v = p[v];
    }
    return res;
}

bool perms_respect_relators(const GroupPresentation& g, const std::vector<Permutation>& perms) {
    std::vector<Permutation> inv;
    for (const auto& p : perms) inv.push_back(invert_perm(p));
    for (const auto& r : g.relators())
        if (!is_identity_perm(compose_word(perms, inv, r))) return false;
    return true;
}

ActionData::ActionData(HopfOreDescriptor descriptor, QuiverPtr quiver, VertexAction vertex, ArrowAction arrow)
    : d_(std::move(descriptor)),
      q_(std::move(quiver)),
      v_(std::move(vertex)),
      a_(std::move(arrow)),
      h_matrix_(d_.field, 0, 0) {
    if (!q_) throw InvalidAction("action without a quiver");
    const std::size_t nv = q_->vertex_count(), na = q_->arrow_count(), ng = d_.group.size();
    if (v_.perms.size() != ng) throw InvalidAction("need one vertex permutation per generator");
    for (std::size_t g = 0; g < ng; ++g)
        if (!is_bijection(v_.perms[g], nv))
            throw InvalidAction("generator " + d_.group.generators()[g] + " does not permute the vertices");
    if (v_.gamma.size() != nv) throw InvalidAction("need one gamma per vertex");
    for (const auto& c : v_.gamma)
        if (!(c.field() == d_.field)) throw MixedFields("gamma lies in another field");
    if (a_.mats.size() != ng) throw InvalidAction("need one arrow matrix per generator");
    for (const auto& m : a_.mats) {
        if (m.rows() != na || m.cols() != na) throw InvalidAction("arrow matrix has the wrong size");
        if (!(m.field() == d_.field)) throw MixedFields("arrow matrix lies in another field");
    }
    if (a_.sigma.empty()) a_.sigma.assign(na, PathElement(q_, d_.field));
    if (a_.sigma.size() != na) throw InvalidAction("need one sigma value per arrow");
    for (const auto& s : a_.sigma) {
        if (!(s.quiver() == *q_)) throw MixedQuivers("sigma value over another quiver");
        if (!(s.field() == d_.field)) throw MixedFields("sigma value over another field");
    }

    for (const auto& p : v_.perms) inverse_perms_.push_back(invert_perm(p));
    for (const auto& m : a_.mats) inverse_mats_.push_back(m.inverse());

    h_perm_ = word_perm(d_.h_word);
    h_matrix_ = word_matrix(d_.h_word);
    chi_h_ = chi_extend(d_, d_.h_word);
    alpha_h_ = alpha_extend(d_, d_.h_word);

    for (std::size_t i = 0; i < nv; ++i) {
        PathElement x = PathElement::vertex(q_, d_.field, i) * v_.gamma[i];
        x -= PathElement::vertex(q_, d_.field, h_perm_[i]) * (chi_h_ * v_.gamma[i] + alpha_h_);
        x_vertex_.push_back(std::move(x));
    }
    for (std::size_t a = 0; a < na; ++a) {
        const auto& arr = q_->arrow(a);
        h_arrow_.push_back(matrix_column(q_, d_.field, h_matrix_, a));
        PathElement x = PathElement::arrow(q_, d_.field, a) * v_.gamma[arr.target];
        x -= h_arrow_.back() * (chi_h_ * v_.gamma[arr.source] + alpha_h_);
        x += a_.sigma[a];
        x_arrow_.push_back(std::move(x));
    }
}

Permutation ActionData::word_perm(const Word& w) const {
    for (const auto& l : w)
        if (l.gen >= d_.group.size()) throw UnknownGenerator("word uses an undeclared generator");
    if (d_.group.size() == 0) {
        Permutation id(q_->vertex_count());
        for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
        return id;
    }
    return compose_word(v_.perms, inverse_perms_, w);
}

Matrix ActionData::word_matrix(const Word& w) const {
    Matrix m = Matrix::identity(d_.field, q_->arrow_count());
    for (const auto& l : w) {
        if (l.gen >= d_.group.size()) throw UnknownGenerator("word uses an undeclared generator");
        if (l.exp > 0) {
            m = m * a_.mats[l.gen];
        } else {
            if (!inverse_mats_[l.gen])
                throw InvalidAction("generator " + d_.group.generators()[l.gen] + " acts by a singular matrix");
            m = m * *inverse_mats_[l.gen];
        }
    }
    return m;
}

void Report::merge(const Report& o) {
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    warnings.insert(warnings.end(), o.warnings.begin(), o.warnings.end());
}

Report verify_descriptor(const HopfOreDescriptor& d) {
    Report rep;
    for (const auto& c : validate_descriptor(d).relators) {
        std::string r = d.group.word_to_string(d.group.relators()[c.relator]);
        if (!c.chi_ok) rep.violations.push_back(violation("character-relator", {"relator=" + r}, "chi(" + r + ") = " + c.chi_value.to_string(), "1"));
        if (!c.alpha_ok)
            rep.violations.push_back(violation("cocycle-relator", {"relator=" + r}, "alpha(" + r + ") = " + c.alpha_value.to_string(), "0"));
    }
    return rep;
}

Report verify_vertex_action(const ActionData& ad) {
    Report rep;
    const auto& d = ad.descriptor();
    const auto& q = ad.quiver();
    for (const auto& r : d.group.relators()) {
        auto p = ad.word_perm(r);
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] != i)
                rep.violations.push_back(violation("vertex-relator", {"relator=" + d.group.word_to_string(r), "vertex=" + q.vertices()[i]},
                                                   vertex_name(q, p[i]), vertex_name(q, i)));
    }
    for (std::size_t g = 0; g < d.group.size(); ++g) {
        const auto& gen = d.group.generators()[g];
        for (std::size_t i = 0; i < q.vertex_count(); ++i) {
            std::size_t j = ad.vertex().perms[g][i];
            FieldElement expected = d.chi[g] * ad.vertex().gamma[i] + d.alpha[g];
            if (!(ad.vertex().gamma[j] == expected))
                rep.violations.push_back(violation(
                    "gamma-equivariance", {"generator=" + gen, "vertex=" + q.vertices()[i]},
                    "gamma_" + q.vertices()[j] + " = " + ad.vertex().gamma[j].to_string(),
                    "chi(" + gen + ")*gamma_" + q.vertices()[i] + " + alpha(" + gen + ") = " + expected.to_string()));
        }
        const auto& p = ad.vertex().perms[g];
        const auto& h = ad.h_perm();
        for (std::size_t i = 0; i < q.vertex_count(); ++i)
            if (p[h[i]] != h[p[i]]) {
                rep.warnings.push_back("h does not commute with " + gen + " on the vertices");
                break;
            }
    }
    for (std::size_t i = 0; i < q.vertex_count(); ++i)
        if (ad.h_perm()[i] == i && !ad.x_vertex(i).is_zero())
            rep.violations.push_back(violation("fixed-vertex", {"vertex=" + q.vertices()[i]}, ad.x_vertex(i).to_string(), "0"));
    return rep;
}

Report verify_arrow_action(const ActionData& ad) {
    Report rep;
    const auto& d = ad.descriptor();
    const auto& q = ad.quiver();
    const auto& f = ad.field();
    const auto& qp = ad.quiver_ptr();
    const std::size_t na = q.arrow_count();
    if (na == 0) return rep;

    for (std::size_t g = 0; g < d.group.size(); ++g) {
        const auto& gen = d.group.generators()[g];
        const auto& m = ad.arrow().mats[g];
        const auto& p = ad.vertex().perms[g];
        for (std::size_t a = 0; a < na; ++a)
            for (std::size_t b = 0; b < na; ++b) {
                if (m(b, a).is_zero()) continue;
                if (q.arrow(b).source != p[q.arrow(a).source] || q.arrow(b).target != p[q.arrow(a).target])
                    rep.violations.push_back(violation("arrow-endpoints", {"generator=" + gen, "arrow=" + q.arrow(a).name, "image=" + q.arrow(b).name},
                                                       m(b, a).to_string(), "0"));
            }
        if (!ad.has_inverse(g))
            rep.violations.push_back(violation("invertibility", {"generator=" + gen}, "singular arrow matrix", "invertible"));
        else if (!(m * ad.h_matrix() == ad.h_matrix() * m))
            rep.warnings.push_back("h does not commute with " + gen + " on the arrows");
    }
    for (const auto& r : d.group.relators()) {
        std::string rs = d.group.word_to_string(r);
        try {
            auto m = ad.word_matrix(r);
            for (std::size_t a = 0; a < na; ++a) {
                auto col = matrix_column(qp, f, m, a);
                auto want = PathElement::arrow(qp, f, a);
                if (!(col == want))
                    rep.violations.push_back(violation("arrow-relator", {"relator=" + rs, "arrow=" + q.arrow(a).name}, col.to_string(), want.to_string()));
            }
        } catch (const InvalidAction& e) {
            rep.violations.push_back(violation("arrow-relator", {"relator=" + rs}, e.what(), "identity"));
        }
    }

    auto slots = sigma_slots(q, ad.h_perm());
    for (std::size_t a = 0; a < na; ++a) {
        for (const auto& [path, c] : ad.arrow().sigma[a].terms()) {
            bool allowed = false;
            for (const auto& s : slots)
                if (s.arrow == a && s.target == path) allowed = true;
            if (!allowed)
                rep.violations.push_back(violation("sigma-support", {"arrow=" + q.arrow(a).name, "term=" + q.path_name(path)}, c.to_string(), "0"));
        }
    }

    for (std::size_t g = 0; g < d.group.size(); ++g) {
        const auto& gen = d.group.generators()[g];
        const auto& m = ad.arrow().mats[g];
        const auto& p = ad.vertex().perms[g];
        for (std::size_t a = 0; a < na; ++a) {
            PathElement lhs(qp, f);
            for (std::size_t b = 0; b < na; ++b)
                if (!m(b, a).is_zero()) lhs += ad.arrow().sigma[b] * m(b, a);
            PathElement rhs(qp, f);
            for (const auto& [path, c] : ad.arrow().sigma[a].terms()) rhs += g_on_path(ad, p, m, path) * (c * d.chi[g]);
            rhs += sigma_forcing(ad, g, a);
            if (!(lhs == rhs))
                rep.violations.push_back(violation("sigma-equivariance", {"generator=" + gen, "arrow=" + q.arrow(a).name}, lhs.to_string(), rhs.to_string()));
        }
    }
    return rep;
}

Report verify(const ActionData& ad) {
    Report rep = verify_descriptor(ad.descriptor());
    rep.merge(verify_vertex_action(ad));
    rep.merge(verify_arrow_action(ad));
    return rep;
}

PathElement x_on_vertex(const ActionData& ad, std::size_t i) {
    if (i >= ad.quiver().vertex_count()) throw UnknownVertex("no vertex with index " + std::to_string(i));
    return ad.x_vertex(i);
}

PathElement x_on_arrow(const ActionData& ad, std::size_t a) {
    if (a >= ad.quiver().arrow_count()) throw UnknownArrow("no arrow with index " + std::to_string(a));
    return ad.x_arrow(a);
}

PathElement x_on_path(const ActionData& ad, const Path& p) {
    if (p.is_trivial()) return x_on_vertex(ad, p.start);
    const auto& qp = ad.quiver_ptr();
    const auto& f = ad.field();
    const std::size_t l = p.length();
    // suffix[j] = (h.a_j) ... (h.a_l)
    std::vector<PathElement> suffix(l + 1, PathElement::unit(qp, f));
    for (std::size_t j = l; j-- > 1;) suffix[j] = ad.h_arrow(p.arrows[j]) * suffix[j + 1];
    PathElement out(qp, f);
    for (std::size_t j = 0; j < l; ++j) {
        PathElement term = ad.x_arrow(p.arrows[j]);
        if (j + 1 < l) term = term * suffix[j + 1];
        if (j > 0) {
            Path prefix{p.start, std::vector<std::size_t>(p.arrows.begin(), p.arrows.begin() + j)};
            term = PathElement::basis(qp, f, prefix) * term;
        }
        out += term;
    }
    return out;
}

PathElement x_on_element(const ActionData& ad, const PathElement& u) {
    if (!(u.quiver() == ad.quiver())) throw MixedQuivers("element over another quiver");
    if (!(u.field() == ad.field())) throw MixedFields("element over another field");
    PathElement out = ad.zero();
    for (const auto& [p, c] : u.terms()) out += x_on_path(ad, p) * c;
    return out;
}

PathElement g_on_path(const ActionData& ad, const Permutation& perm, const Matrix& mat, const Path& p) {
    const auto& qp = ad.quiver_ptr();
    const auto& f = ad.field();
    if (p.is_trivial()) return PathElement::vertex(qp, f, perm.at(p.start));
    PathElement out = matrix_column(qp, f, mat, p.arrows[0]);
    for (std::size_t j = 1; j < p.length(); ++j) out = out * matrix_column(qp, f, mat, p.arrows[j]);
    return out;
}

PathElement g_on_element(const ActionData& ad, const Word& w, const PathElement& u) {
    if (!(u.quiver() == ad.quiver())) throw MixedQuivers("element over another quiver");
    if (!(u.field() == ad.field())) throw MixedFields("element over another field");
    if (w.empty()) return u;
    auto perm = ad.word_perm(w);
    auto mat = ad.word_matrix(w);
    PathElement out = ad.zero();
    for (const auto& [p, c] : u.terms()) out += g_on_path(ad, perm, mat, p) * c;
    return out;
}

PathElement act(const ActionData& ad, const RElement& r, const PathElement& u) {
    if (!(r.field() == ad.field())) throw MixedFields("element of R over another field");
    if (!(u.quiver() == ad.quiver())) throw MixedQuivers("element over another quiver");
    if (!(u.field() == ad.field())) throw MixedFields("element over another field");
    // group terms by x-power so each power of x is applied once
    std::map<std::size_t, std::vector<std::pair<Word, FieldElement>>> by_power;
    for (const auto& [key, c] : r.terms()) by_power[key.second].emplace_back(key.first, c);
    PathElement out = ad.zero();
    PathElement xu = u;
    std::size_t done = 0;
    for (const auto& [k, terms] : by_power) {
        for (; done < k; ++done) xu = x_on_element(ad, xu);
        for (const auto& [w, c] : terms) out += g_on_element(ad, w, xu) * c;
    }
    return out;
}

Report oracle_hopf_check(const ActionData& ad, const OracleOptions& opts) {
    Report rep;
    const auto& d = ad.descriptor();
    const auto& q = ad.quiver();
    const auto& qp = ad.quiver_ptr();
    const auto& f = ad.field();
    auto paths = enumerate_paths(q, opts.max_len);
    auto add = [&](Violation v) {
        rep.violations.push_back(std::move(v));
        return opts.stop_at_first;
    };
    auto basis = [&](const Path& p) { return PathElement::basis(qp, f, p); };

    struct GroupOp {
        std::string name;
        Word word;
        Permutation perm;
        Matrix mat;
    };
    std::vector<GroupOp> ops;
    for (std::size_t g = 0; g < d.group.size(); ++g) {
        Word w{Letter{g, 1}};
        ops.push_back(GroupOp{d.group.generators()[g], w, ad.word_perm(w), ad.arrow().mats[g]});
        if (ad.has_inverse(g)) {
            Word wi{Letter{g, -1}};
            ops.push_back(GroupOp{d.group.generators()[g] + "^-1", wi, ad.word_perm(wi), ad.word_matrix(wi)});
        } else if (add(violation("invertibility", {"r=" + d.group.generators()[g]}, "singular arrow matrix", "invertible"))) {
            return rep;
        }
    }

    // (a) multiplicativity
    std::vector<PathElement> x_of(paths.size(), ad.zero()), h_of(paths.size(), ad.zero());
    for (std::size_t i = 0; i < paths.size(); ++i) {
        x_of[i] = x_on_path(ad, paths[i]);
        h_of[i] = g_on_path(ad, ad.h_perm(), ad.h_matrix(), paths[i]);
    }
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = 0; j < paths.size(); ++j) {
            auto prod = q.concat(paths[i], paths[j]);
            std::vector<std::string> wit{"p=" + q.path_name(paths[i]), "q=" + q.path_name(paths[j])};
            PathElement lhs = prod ? x_on_path(ad, *prod) : ad.zero();
            PathElement rhs = basis(paths[i]) * x_of[j] + x_of[i] * h_of[j];
            if (!(lhs == rhs)) {
                auto w = wit;
                w.insert(w.begin(), "r=x");
                if (add(violation("multiplicativity", w, lhs.to_string(), rhs.to_string()))) return rep;
            }
            for (const auto& op : ops) {
                PathElement gl = prod ? g_on_path(ad, op.perm, op.mat, *prod) : ad.zero();
                PathElement gr = g_on_path(ad, op.perm, op.mat, paths[i]) * g_on_path(ad, op.perm, op.mat, paths[j]);
                if (!(gl == gr)) {
                    auto w = wit;
                    w.insert(w.begin(), "r=" + op.name);
                    if (add(violation("multiplicativity", w, gl.to_string(), gr.to_string()))) return rep;
                }
            }
        }

    // (b) unit
    auto one = PathElement::unit(qp, f);
    auto x1 = x_on_element(ad, one);
    if (!x1.is_zero() && add(violation("unit", {"r=x"}, x1.to_string(), "0"))) return rep;
    for (const auto& op : ops) {
        PathElement g1 = ad.zero();
        for (std::size_t i = 0; i < q.vertex_count(); ++i) g1 += g_on_path(ad, op.perm, op.mat, Path::vertex(i));
        if (!(g1 == one) && add(violation("unit", {"r=" + op.name}, g1.to_string(), one.to_string()))) return rep;
    }

    std::vector<Path> low;
    for (const auto& p : paths)
        if (p.length() <= 1) low.push_back(p);

    // (c) relators
    for (const auto& r : d.group.relators()) {
        std::string rs = d.group.word_to_string(r);
        try {
            auto perm = ad.word_perm(r);
            auto mat = ad.word_matrix(r);
            for (const auto& p : low) {
                auto img = g_on_path(ad, perm, mat, p);
                if (!(img == basis(p)) &&
                    add(violation("relator", {"relator=" + rs, "u=" + q.path_name(p)}, img.to_string(), q.path_name(p))))
                    return rep;
            }
        } catch (const InvalidAction& e) {
            if (add(violation("relator", {"relator=" + rs}, e.what(), "identity"))) return rep;
        }
    }

    // (d) x g = chi(g) g x + alpha(g) (1 - h) g, by composing the maps
    for (const auto& op : ops) {
        FieldElement chi = chi_extend(d, op.word), alpha = alpha_extend(d, op.word);
        for (const auto& p : low) {
            auto gp = g_on_path(ad, op.perm, op.mat, p);
            auto lhs = x_on_element(ad, gp);
            PathElement xp = x_on_path(ad, p);
            PathElement gxp = ad.zero();
            for (const auto& [path, c] : xp.terms()) gxp += g_on_path(ad, op.perm, op.mat, path) * c;
            PathElement hgp = ad.zero();
            for (const auto& [path, c] : gp.terms()) hgp += g_on_path(ad, ad.h_perm(), ad.h_matrix(), path) * c;
            auto rhs = gxp * chi + (gp - hgp) * alpha;
            if (!(lhs == rhs) &&
                add(violation("commutation", {"g=" + op.name, "u=" + q.path_name(p)}, lhs.to_string(), rhs.to_string())))
                return rep;
        }
    }

    // (e) filtration
    for (std::size_t i = 0; i < paths.size(); ++i) {
        long l = static_cast<long>(paths[i].length());
        if (x_of[i].max_length() > l &&
            add(violation("filtration", {"r=x", "p=" + q.path_name(paths[i])}, x_of[i].to_string(), "degree <= " + std::to_string(l))))
            return rep;
        for (const auto& op : ops) {
            auto img = g_on_path(ad, op.perm, op.mat, paths[i]);
            if (img.max_length() > l &&
                add(violation("filtration", {"r=" + op.name, "p=" + q.path_name(paths[i])}, img.to_string(), "degree <= " + std::to_string(l))))
                return rep;
        }
    }
    return rep;
}

Report check_vertex_annihilation(const ActionData& ad, std::size_t max_word) {
    Report rep;
    const auto& d = ad.descriptor();
    const auto& q = ad.quiver();
    const auto& h = ad.h_perm();
    for (std::size_t i = 0; i < q.vertex_count(); ++i) {
        if (h[i] == i || !ad.x_vertex(i).is_zero()) continue;
        for (std::size_t g = 0; g < d.group.size(); ++g) {
            std::size_t j = ad.vertex().perms[g][i];
            bool killed = ad.x_vertex(j).is_zero();
            bool alpha_zero = d.alpha[g].is_zero();
            if (killed != alpha_zero)
                rep.violations.push_back(violation("moved-vertex-annihilation", {"vertex=" + q.vertices()[i], "generator=" + d.group.generators()[g]},
                                                   killed ? "x.e_{g.i} = 0" : "x.e_{g.i} != 0",
                                                   alpha_zero ? "alpha(g) = 0" : "alpha(g) != 0"));
        }
    }
    // words of length <= max_word over generators and inverses
    std::vector<Letter> letters;
    for (std::size_t g = 0; g < d.group.size(); ++g) {
        letters.push_back(Letter{g, 1});
        letters.push_back(Letter{g, -1});
    }
    std::vector<Word> frontier{Word{}};
    std::vector<Word> words{Word{}};
    for (std::size_t len = 1; len <= max_word; ++len) {
        std::vector<Word> next;
        for (const auto& w : frontier)
            for (const auto& l : letters) {
                Word v = w;
                v.push_back(l);
                next.push_back(v);
            }
        words.insert(words.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    for (std::size_t i = 0; i < q.vertex_count(); ++i) {
        if (h[i] != i) continue;
        for (const auto& w : words) {
            std::size_t j = ad.word_perm(w)[i];
            if (!ad.x_vertex(j).is_zero()) {
                rep.violations.push_back(violation("fixed-vertex-orbit", {"vertex=" + q.vertices()[i], "word=" + d.group.word_to_string(w)},
                                                   ad.x_vertex(j).to_string(), "0"));
                break;
            }
        }
    }
    return rep;
}

AffineFamily enumerate_vertex_actions(const HopfOreDescriptor& d, const Quiver& q,
                                      const std::vector<Permutation>& perms) {
    const std::size_t nv = q.vertex_count();
    if (perms.size() != d.group.size()) throw InvalidAction("need one vertex permutation per generator");
    for (const auto& p : perms)
        if (!is_bijection(p, nv)) throw InvalidAction("vertex map is not a permutation");
    if (!perms_respect_relators(d.group, perms)) throw RelatorsNotRespected("a relator moves some vertex");
    std::vector<std::string> coords;
    for (const auto& v : q.vertices()) coords.push_back("gamma_" + v);
    std::vector<LinearEquation> eqs;
    for (std::size_t g = 0; g < d.group.size(); ++g)
        for (std::size_t i = 0; i < nv; ++i) {
            LinearEquation e{std::vector<FieldElement>(nv, d.field.zero()), d.alpha[g]};
            e.coeffs[perms[g][i]] += d.field.one();
            e.coeffs[i] -= d.chi[g];
            eqs.push_back(std::move(e));
        }
    return solve_affine(d.field, std::move(coords), eqs);
}

std::vector<SigmaSlot> sigma_slots(const Quiver& q, const Permutation& h_perm) {
    std::vector<SigmaSlot> slots;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        std::size_t sa = q.arrow(a).source, hta = h_perm.at(q.arrow(a).target);
        if (hta == sa) slots.push_back(SigmaSlot{a, Path::vertex(sa)});
        for (std::size_t b = 0; b < q.arrow_count(); ++b)
            if (q.arrow(b).source == sa && q.arrow(b).target == hta) slots.push_back(SigmaSlot{a, q.arrow_path(b)});
    }
    return slots;
}

std::vector<PathElement> sigma_from_coordinates(const QuiverPtr& q, const Field& f,
                                                const std::vector<SigmaSlot>& slots,
                                                const std::vector<FieldElement>& values) {
    if (values.size() != slots.size()) throw InvalidParams("one value per sigma slot required");
    std::vector<PathElement> sigma(q->arrow_count(), PathElement(q, f));
    for (std::size_t k = 0; k < slots.size(); ++k) sigma[slots[k].arrow].add_term(slots[k].target, values[k]);
    return sigma;
}

SigmaSpace solve_sigma_space(const HopfOreDescriptor& d, const QuiverPtr& q, const VertexAction& vertex,
                             const std::vector<Matrix>& mats) {
    if (!perms_respect_relators(d.group, vertex.perms)) throw RelatorsNotRespected("a relator moves some vertex");
    VertexAction v = vertex;
    if (v.gamma.size() != q->vertex_count()) v.gamma.assign(q->vertex_count(), d.field.zero());
    ActionData ad(d, q, v, ArrowAction{mats, {}});
    for (const auto& r : d.group.relators()) {
        Matrix m(d.field, 0, 0);
        try {
            m = ad.word_matrix(r);
        } catch (const InvalidAction&) {
            throw RelatorsNotRespected("a relator needs the inverse of a singular matrix");
        }
        if (!m.is_identity()) throw RelatorsNotRespected("relator " + d.group.word_to_string(r) + " acts nontrivially on the arrows");
    }

    SigmaSpace out;
    out.slots = sigma_slots(*q, ad.h_perm());
    const std::size_t n = out.slots.size();
    std::vector<std::string> coords;
    for (const auto& s : out.slots) coords.push_back("sigma_" + q->arrow(s.arrow).name + "_" + q->path_name(s.target));

    std::vector<LinearEquation> eqs;
    for (std::size_t g = 0; g < d.group.size(); ++g) {
        const auto& m = mats[g];
        const auto& p = vertex.perms[g];
        for (std::size_t a = 0; a < q->arrow_count(); ++a) {
            // sigma(g.a) - chi(g) g.sigma(a) = inhomogeneous term, per basis path
            std::map<Path, std::vector<FieldElement>> rows;
            auto row = [&](const Path& path) -> std::vector<FieldElement>& {
                auto it = rows.find(path);
                if (it == rows.end()) it = rows.emplace(path, std::vector<FieldElement>(n, d.field.zero())).first;
                return it->second;
            };
            for (std::size_t k = 0; k < n; ++k) {
                const auto& s = out.slots[k];
                if (!m(s.arrow, a).is_zero()) row(s.target)[k] += m(s.arrow, a);
                if (s.arrow == a) {
                    auto img = g_on_path(ad, p, m, s.target);
                    for (const auto& [path, c] : img.terms()) row(path)[k] -= d.chi[g] * c;
                }
            }
            PathElement rhs = sigma_forcing(ad, g, a);
            for (const auto& [path, c] : rhs.terms()) row(path);
            for (auto& [path, coeffs] : rows) eqs.push_back(LinearEquation{coeffs, rhs.coeff(path)});
        }
    }
    out.family = solve_affine(d.field, std::move(coords), eqs);
    return out;
}

}  // namespace hopfact
