#include "hopfact/quiver.hpp"

#include <algorithm>
#include <set>

#include "hopfact/errors.hpp"
#include "lexer.hpp"

namespace hopfact {

std::strong_ordering operator<=>(const Path& a, const Path& b) {
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    if (a.is_trivial()) return a.start <=> b.start;
    return a.arrows <=> b.arrows;
}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<ArrowSpec> arrows)
    : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw InvalidQuiver("a quiver needs at least one vertex");
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i].empty()) throw InvalidQuiver("empty vertex name");
        if (!vertex_ids_.emplace(vertices_[i], i).second)
            throw InvalidQuiver("duplicate vertex '" + vertices_[i] + "'");
    }
    std::sort(arrows.begin(), arrows.end(),
              [](const ArrowSpec& x, const ArrowSpec& y) { return x.name < y.name; });
    for (const auto& spec : arrows) {
        if (spec.name.empty()) throw InvalidQuiver("empty arrow name");
        if (vertex_ids_.count(spec.name))
            throw InvalidQuiver("arrow '" + spec.name + "' shares a name with a vertex");
        auto s = find_vertex(spec.source);
        auto t = find_vertex(spec.target);
        if (!s) throw UnknownVertex("arrow '" + spec.name + "' has undeclared source '" + spec.source + "'");
        if (!t) throw UnknownVertex("arrow '" + spec.name + "' has undeclared target '" + spec.target + "'");
        if (!arrow_ids_.emplace(spec.name, arrows_.size()).second)
            throw InvalidQuiver("duplicate arrow '" + spec.name + "'");
        arrows_.push_back(Arrow{spec.name, *s, *t});
    }
}

bool Quiver::arrow_specs_equal(const Quiver& o) const {
    if (arrows_.size() != o.arrows_.size()) return false;
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        const auto& x = arrows_[i];
        const auto& y = o.arrows_[i];
        if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
    }
    return true;
}

std::optional<std::size_t> Quiver::find_vertex(const std::string& name) const {
    auto it = vertex_ids_.find(name);
    if (it == vertex_ids_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& name) const {
    auto it = arrow_ids_.find(name);
    if (it == arrow_ids_.end()) return std::nullopt;
    return it->second;
}

std::size_t Quiver::vertex_index(const std::string& name) const {
    if (auto v = find_vertex(name)) return *v;
    throw UnknownVertex("unknown vertex '" + name + "'");
}

std::size_t Quiver::arrow_index(const std::string& name) const {
    if (auto a = find_arrow(name)) return *a;
    throw UnknownArrow("unknown arrow '" + name + "'");
}

Path Quiver::arrow_path(std::size_t a) const { return Path{arrow(a).source, {a}}; }

std::size_t Quiver::source(const Path& p) const {
    return p.is_trivial() ? p.start : arrow(p.arrows.front()).source;
}

std::size_t Quiver::target(const Path& p) const {
    return p.is_trivial() ? p.start : arrow(p.arrows.back()).target;
}

bool Quiver::is_valid(const Path& p) const {
    if (p.is_trivial()) return p.start < vertices_.size();
    for (auto a : p.arrows)
        if (a >= arrows_.size()) return false;
    if (p.start != arrows_[p.arrows.front()].source) return false;
    for (std::size_t j = 1; j < p.arrows.size(); ++j)
        if (arrows_[p.arrows[j - 1]].target != arrows_[p.arrows[j]].source) return false;
    return true;
}

std::optional<Path> Quiver::concat(const Path& p, const Path& p2) const {
    if (!is_valid(p) || !is_valid(p2)) throw InvalidQuiver("path does not belong to this quiver");
    if (target(p) != source(p2)) return std::nullopt;
    if (p.is_trivial()) return p2;
    if (p2.is_trivial()) return p;
    Path r = p;
    r.arrows.insert(r.arrows.end(), p2.arrows.begin(), p2.arrows.end());
    return r;
}

std::string Quiver::path_name(const Path& p) const {
    if (p.is_trivial()) return "e_" + vertices_.at(p.start);
    std::string out;
    for (std::size_t j = 0; j < p.arrows.size(); ++j) {
        if (j) out += "*";
        out += arrows_.at(p.arrows[j]).name;
    }
    return out;
}

std::vector<Path> enumerate_paths(const Quiver& q, std::size_t max_len) {
    std::vector<Path> out;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) out.push_back(Path::vertex(v));
    std::vector<Path> layer;
    if (max_len >= 1)
        for (std::size_t a = 0; a < q.arrow_count(); ++a) layer.push_back(q.arrow_path(a));
    for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
        // extending a sorted layer arrow by arrow in index order keeps it sorted
        out.insert(out.end(), layer.begin(), layer.end());
        if (len == max_len) break;
        std::vector<Path> next;
        for (const auto& p : layer) {
            for (std::size_t a = 0; a < q.arrow_count(); ++a) {
                if (q.arrow(a).source != q.target(p)) continue;
                Path e = p;
                e.arrows.push_back(a);
                next.push_back(std::move(e));
            }
        }
        layer = std::move(next);
    }
    return out;
}

// --- PathElement -------------------------------------------------------------

PathElement::PathElement(QuiverPtr quiver, Field field)
    : quiver_(std::move(quiver)), field_(std::move(field)) {
    if (!quiver_) throw InvalidQuiver("path element without a quiver");
}

PathElement PathElement::basis(QuiverPtr quiver, Field field, const Path& p) {
    PathElement e(std::move(quiver), std::move(field));
    if (!e.quiver().is_valid(p)) throw InvalidQuiver("invalid path");
    e.terms_.emplace(p, e.field_.one());
    return e;
}

PathElement PathElement::vertex(QuiverPtr quiver, Field field, std::size_t v) {
    return basis(std::move(quiver), std::move(field), Path::vertex(v));
}

PathElement PathElement::arrow(QuiverPtr quiver, Field field, std::size_t a) {
    Path p = quiver->arrow_path(a);
    return basis(std::move(quiver), std::move(field), p);
}

PathElement PathElement::unit(QuiverPtr quiver, Field field) {
    PathElement e(std::move(quiver), std::move(field));
    for (std::size_t v = 0; v < e.quiver().vertex_count(); ++v) e.terms_.emplace(Path::vertex(v), e.field_.one());
    return e;
}

FieldElement PathElement::coeff(const Path& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? field_.zero() : it->second;
}

void PathElement::add_term(const Path& p, const FieldElement& c) {
    if (c.is_zero()) return;
    if (!(c.field() == field_)) throw MixedFields("coefficient field differs from element field");
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

long PathElement::max_length() const {
    long m = -1;
    for (const auto& [p, c] : terms_) m = std::max(m, static_cast<long>(p.length()));
    return m;
}

PathElement PathElement::homogeneous_part(std::size_t l) const {
    PathElement r(quiver_, field_);
    for (const auto& [p, c] : terms_)
        if (p.length() == l) r.terms_.emplace(p, c);
    return r;
}

void PathElement::require_compatible(const PathElement& o) const {
    if (quiver_ != o.quiver_ && !(*quiver_ == *o.quiver_))
        throw MixedQuivers("path elements belong to different quivers");
    if (!(field_ == o.field_)) throw MixedFields("path elements have different coefficient fields");
}

PathElement PathElement::operator-() const {
    PathElement r = *this;
    for (auto& [p, c] : r.terms_) c = -c;
    return r;
}

PathElement& PathElement::operator+=(const PathElement& o) {
    require_compatible(o);
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

PathElement& PathElement::operator-=(const PathElement& o) {
    require_compatible(o);
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
}

PathElement& PathElement::operator*=(const FieldElement& c) {
    if (!(c.field() == field_)) throw MixedFields("scalar field differs from element field");
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, v] : terms_) v *= c;
    return *this;
}

PathElement operator*(const PathElement& u, const PathElement& v) {
    u.require_compatible(v);
    PathElement r(u.quiver_, u.field_);
    const Quiver& q = *u.quiver_;
    for (const auto& [p, c] : u.terms_) {
        for (const auto& [p2, c2] : v.terms_) {
            if (q.target(p) != q.source(p2)) continue;
            r.add_term(*q.concat(p, p2), c * c2);
        }
    }
    return r;
}

bool operator==(const PathElement& a, const PathElement& b) {
    a.require_compatible(b);
    return a.terms_ == b.terms_;
}

std::string PathElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [p, c] : terms_) {
        std::string coeff = c.to_string();
        std::string name = quiver_->path_name(p);
        bool negative = c.is_rational() && c.to_rational() < 0;
        if (!out.empty()) out += negative ? " - " : " + ";
        else if (negative) out += "-";
        if (negative) coeff = (-c).to_string();
        bool compound = coeff.find_first_of(" +") != std::string::npos ||
                        (coeff.size() > 1 && coeff.find('-', 1) != std::string::npos);
        if (coeff == "1") {
            out += name;
        } else {
            out += compound ? "(" + coeff + ")" : coeff;
            out += "*" + name;
        }
    }
    return out;
}

PathElement parse_path_element(QuiverPtr quiver, const Field& field, const std::string& text) {
    detail::Lexer lex(text);
    PathElement result(quiver, field);
    const Quiver& q = *quiver;
    bool first = true;
    while (true) {
        bool negate = false;
        if (lex.peek().kind == detail::TokenKind::end) {
            if (first) throw SyntaxError("empty expression", lex.peek().position);
            break;
        }
        if (lex.peek().kind == detail::TokenKind::plus || lex.peek().kind == detail::TokenKind::minus) {
            negate = lex.next().kind == detail::TokenKind::minus;
        } else if (!first) {
            throw SyntaxError("expected '+' or '-'", lex.peek().position);
        }
        first = false;
        FieldElement scalar = field.one();
        PathElement term = PathElement::unit(quiver, field);
        while (true) {
            auto tok = lex.next();
            if (tok.kind == detail::TokenKind::number) {
                scalar *= field.from_rational(tok.number);
            } else if (tok.kind == detail::TokenKind::identifier) {
                long exponent = 1;
                if (lex.peek().kind == detail::TokenKind::caret) {
                    lex.next();
                    exponent = lex.expect_integer();
                }
                if (field.kind() != FieldKind::rational && tok.text == field.symbol()) {
                    scalar *= pow(field.generator(), exponent);
                    if (lex.peek().kind != detail::TokenKind::star) break;
                    lex.next();
                    continue;
                }
                PathElement factor(quiver, field);
                if (tok.text.rfind("e_", 0) == 0 && q.find_vertex(tok.text.substr(2))) {
                    factor = PathElement::vertex(quiver, field, *q.find_vertex(tok.text.substr(2)));
                } else if (auto a = q.find_arrow(tok.text)) {
                    factor = PathElement::arrow(quiver, field, *a);
                } else {
                    throw SyntaxError("unknown vertex or arrow '" + tok.text + "'", tok.position);
                }
                if (exponent < 0) throw SyntaxError("negative power of a path", tok.position);
                for (long k = 0; k < exponent; ++k) term = term * factor;
            } else {
                throw SyntaxError("expected a scalar, vertex or arrow", tok.position);
            }
            if (lex.peek().kind != detail::TokenKind::star) break;
            lex.next();
        }
        term *= negate ? -scalar : scalar;
        result += term;
    }
    return result;
}

}  // namespace hopfact
