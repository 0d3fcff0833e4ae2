#include "hopfact/hopf_ore.hpp"

#include <set>

#include "hopfact/errors.hpp"
#include "lexer.hpp"

namespace hopfact {

Word reduce_word(Word w) {
    Word out;
    out.reserve(w.size());
    for (const auto& l : w) {
        if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word invert_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(Letter{it->gen, -it->exp});
    return out;
}

Word word_product(const Word& u, const Word& v) {
    Word w = u;
    w.insert(w.end(), v.begin(), v.end());
    return reduce_word(std::move(w));
}

Word word_power(const Word& w, long k) {
    Word base = k < 0 ? invert_word(w) : w;
    Word out;
    for (long i = 0; i < (k < 0 ? -k : k); ++i) out.insert(out.end(), base.begin(), base.end());
    return reduce_word(std::move(out));
}

GroupPresentation::GroupPresentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)), relators_(std::move(relators)) {
    std::set<std::string> seen;
    for (const auto& g : generators_) {
        if (g.empty()) throw InvalidDescriptor("empty generator name");
        if (!seen.insert(g).second) throw InvalidDescriptor("duplicate generator '" + g + "'");
    }
    for (const auto& r : relators_)
        for (const auto& l : r) {
            if (l.gen >= generators_.size()) throw UnknownGenerator("relator uses an undeclared generator");
            if (l.exp != 1 && l.exp != -1) throw InvalidDescriptor("letter exponent must be 1 or -1");
        }
}

std::size_t GroupPresentation::generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i] == name) return i;
    throw UnknownGenerator("unknown generator '" + name + "'");
}

std::string GroupPresentation::word_to_string(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += '*';
        s += generators_.at(w[i].gen);
        if (w[i].exp < 0) s += "^-1";
    }
    return s;
}

std::vector<std::string> GroupPresentation::word_to_tokens(const Word& w) const {
    std::vector<std::string> out;
    for (const auto& l : w) out.push_back(generators_.at(l.gen) + (l.exp < 0 ? "^-1" : ""));
    return out;
}

Word GroupPresentation::word_from_tokens(const std::vector<std::string>& tokens) const {
    Word w;
    for (const auto& t : tokens) {
        if (t.size() > 3 && t.compare(t.size() - 3, 3, "^-1") == 0)
            w.push_back(letter(t.substr(0, t.size() - 3), -1));
        else
            w.push_back(letter(t, 1));
    }
    return w;
}

HopfOreDescriptor make_descriptor(Field field, GroupPresentation group, Word h_word,
                                  const std::map<std::string, FieldElement>& chi,
                                  const std::map<std::string, FieldElement>& alpha) {
    HopfOreDescriptor d;
    d.field = std::move(field);
    for (const auto& g : group.generators()) {
        if (g == "x") throw InvalidDescriptor("generator name 'x' is reserved");
        if (d.field.kind() != FieldKind::rational && g == d.field.symbol())
            throw InvalidDescriptor("generator '" + g + "' clashes with the field symbol");
    }
    for (const auto& l : h_word)
        if (l.gen >= group.size()) throw UnknownGenerator("h_word uses an undeclared generator");
    for (const auto& [name, _] : chi) group.generator_index(name);
    for (const auto& [name, _] : alpha) group.generator_index(name);
    for (const auto& g : group.generators()) {
        auto c = chi.find(g);
        if (c == chi.end()) throw InvalidDescriptor("chi missing for generator '" + g + "'");
        if (!(c->second.field() == d.field)) throw InvalidDescriptor("chi(" + g + ") lies in another field");
        if (c->second.is_zero()) throw InvalidDescriptor("chi(" + g + ") is zero");
        d.chi.push_back(c->second);
        auto a = alpha.find(g);
        if (a == alpha.end()) {
            d.alpha.push_back(d.field.zero());
        } else {
            if (!(a->second.field() == d.field)) throw InvalidDescriptor("alpha(" + g + ") lies in another field");
            d.alpha.push_back(a->second);
        }
    }
    d.h_word = reduce_word(std::move(h_word));
    d.group = std::move(group);
    return d;
}

namespace {

void require_letters(const HopfOreDescriptor& d, const Word& w) {
    for (const auto& l : w)
        if (l.gen >= d.group.size()) throw UnknownGenerator("word uses an undeclared generator");
}

FieldElement letter_chi(const HopfOreDescriptor& d, const Letter& l) {
    return l.exp > 0 ? d.chi[l.gen] : d.chi[l.gen].inverse();
}

FieldElement letter_alpha(const HopfOreDescriptor& d, const Letter& l) {
    return l.exp > 0 ? d.alpha[l.gen] : -(d.chi[l.gen].inverse() * d.alpha[l.gen]);
}

}  // namespace

FieldElement chi_extend(const HopfOreDescriptor& d, const Word& w) {
    require_letters(d, w);
    FieldElement v = d.field.one();
    for (const auto& l : w) v *= letter_chi(d, l);
    return v;
}

FieldElement alpha_extend(const HopfOreDescriptor& d, const Word& w) {
    require_letters(d, w);
    // alpha(l u) = alpha(l) + chi(l) alpha(u), read left to right
    FieldElement acc = d.field.zero();
    FieldElement prefix = d.field.one();
    for (const auto& l : w) {
        acc += prefix * letter_alpha(d, l);
        prefix *= letter_chi(d, l);
    }
    return acc;
}

bool DescriptorReport::valid() const {
    for (const auto& r : relators)
        if (!r.chi_ok || !r.alpha_ok) return false;
    return true;
}

DescriptorReport validate_descriptor(const HopfOreDescriptor& d) {
    DescriptorReport rep;
    for (std::size_t i = 0; i < d.group.relators().size(); ++i) {
        const auto& r = d.group.relators()[i];
        RelatorCheck c;
        c.relator = i;
        c.chi_value = chi_extend(d, r);
        c.alpha_value = alpha_extend(d, r);
        c.chi_ok = c.chi_value.is_one();
        c.alpha_ok = c.alpha_value.is_zero();
        rep.relators.push_back(std::move(c));
    }
    return rep;
}

RElement RElement::monomial(const Field& f, const Word& w, std::size_t k, FieldElement c) {
    RElement e(f);
    e.add_term(w, k, c);
    return e;
}

FieldElement RElement::coeff(const Word& w, std::size_t k) const {
    auto it = terms_.find(Key{w, k});
    return it == terms_.end() ? field_.zero() : it->second;
}

void RElement::add_term(const Word& w, std::size_t k, const FieldElement& c) {
    if (!(c.field() == field_)) throw MixedFields("coefficient from another field");
    if (c.is_zero()) return;
    Key key{reduce_word(w), k};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

RElement& RElement::operator+=(const RElement& o) {
    if (!(o.field_ == field_)) throw MixedFields("adding elements of R over different fields");
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

RElement& RElement::operator-=(const RElement& o) {
    if (!(o.field_ == field_)) throw MixedFields("subtracting elements of R over different fields");
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

RElement& RElement::operator*=(const FieldElement& c) {
    if (!(c.field() == field_)) throw MixedFields("scalar from another field");
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

bool operator==(const RElement& a, const RElement& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
}

std::string RElement::to_string(const GroupPresentation& g) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        std::string mono;
        if (!key.first.empty()) mono = g.word_to_string(key.first);
        if (key.second > 0) {
            if (!mono.empty()) mono += '*';
            mono += "x";
            if (key.second > 1) mono += "^" + std::to_string(key.second);
        }
        std::string coeff = c.to_string();
        bool compound = coeff.find(" + ") != std::string::npos || coeff.find(" - ") != std::string::npos;
        bool negative = !compound && !coeff.empty() && coeff[0] == '-';
        if (negative) coeff = coeff.substr(1);
        std::string body;
        if (mono.empty())
            body = compound ? "(" + coeff + ")" : coeff;
        else if (coeff == "1")
            body = mono;
        else
            body = (compound ? "(" + coeff + ")" : coeff) + "*" + mono;
        if (first)
            s += negative ? "-" + body : body;
        else
            s += (negative ? " - " : " + ") + body;
        first = false;
    }
    return s;
}

RElement word_element(const HopfOreDescriptor& d, const Word& w) {
    require_letters(d, w);
    return RElement::monomial(d.field, w, 0);
}

RElement left_mul_x(const HopfOreDescriptor& d, const RElement& e) {
    // Pushing x through a word letter by letter and moving each inserted h to
    // the front (h is central) gives x w = chi(w) w x + alpha(w) (1 - h) w.
    RElement out(d.field);
    for (const auto& [key, c] : e.terms()) {
        const auto& [w, k] = key;
        if (k + 1 > d.max_x_power)
            throw XPowerLimit("x-power exceeds the cap of " + std::to_string(d.max_x_power));
        out.add_term(w, k + 1, c * chi_extend(d, w));
        FieldElement a = alpha_extend(d, w);
        if (!a.is_zero()) {
            out.add_term(w, k, c * a);
            out.add_term(word_product(d.h_word, w), k, -(c * a));
        }
    }
    return out;
}

RElement x_power(const HopfOreDescriptor& d, std::size_t k) {
    if (k > d.max_x_power) throw XPowerLimit("x-power exceeds the cap of " + std::to_string(d.max_x_power));
    return RElement::monomial(d.field, {}, k);
}

RElement mul(const HopfOreDescriptor& d, const RElement& a, const RElement& b) {
    if (!(a.field() == d.field) || !(b.field() == d.field)) throw MixedFields("element of R over another field");
    RElement out(d.field);
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            // w1 x^k1 w2 x^k2: push x^k1 through w2 first
            RElement mid = RElement::monomial(d.field, kb.first, 0);
            for (std::size_t i = 0; i < ka.second; ++i) mid = left_mul_x(d, mid);
            for (const auto& [km, cm] : mid.terms()) {
                std::size_t k = km.second + kb.second;
                if (k > d.max_x_power)
                    throw XPowerLimit("x-power exceeds the cap of " + std::to_string(d.max_x_power));
                out.add_term(word_product(ka.first, km.first), k, ca * cb * cm);
            }
        }
    }
    return out;
}

RElement r_normalize(const HopfOreDescriptor& d, const std::vector<RawTerm>& terms) {
    RElement out(d.field);
    for (const auto& t : terms) {
        if (!(t.coeff.field() == d.field)) throw MixedFields("coefficient from another field");
        RElement acc = RElement::monomial(d.field, {}, 0, t.coeff);
        // build from the right so every x meets an already normal suffix
        for (auto it = t.letters.rbegin(); it != t.letters.rend(); ++it) {
            if (it->is_x) {
                acc = left_mul_x(d, acc);
                continue;
            }
            if (it->letter.gen >= d.group.size()) throw UnknownGenerator("undeclared generator in product");
            RElement next(d.field);
            for (const auto& [key, c] : acc.terms())
                next.add_term(word_product(Word{it->letter}, key.first), key.second, c);
            acc = std::move(next);
        }
        out += acc;
    }
    return out;
}

RElement r_normalize(const HopfOreDescriptor& d, const RElement& e) {
    RElement out(d.field);
    for (const auto& [key, c] : e.terms()) {
        require_letters(d, key.first);
        out.add_term(key.first, key.second, c);
    }
    return out;
}

RElement parse_r_element(const HopfOreDescriptor& d, const std::string& text) {
    using detail::TokenKind;
    detail::Lexer lex(text);
    std::vector<RawTerm> terms;
    bool first = true;
    while (true) {
        if (lex.peek().kind == TokenKind::end) {
            if (first) throw SyntaxError("empty expression", lex.peek().position);
            break;
        }
        bool negate = false;
        if (lex.peek().kind == TokenKind::plus || lex.peek().kind == TokenKind::minus) {
            negate = lex.next().kind == TokenKind::minus;
        } else if (!first) {
            throw SyntaxError("expected '+' or '-'", lex.peek().position);
        }
        first = false;
        RawTerm term{d.field.one(), {}};
        while (true) {
            auto tok = lex.next();
            if (tok.kind == TokenKind::number) {
                term.coeff *= d.field.from_rational(tok.number);
            } else if (tok.kind == TokenKind::identifier) {
                long exponent = 1;
                if (lex.peek().kind == TokenKind::caret) {
                    lex.next();
                    exponent = lex.expect_integer();
                }
                if (d.field.kind() != FieldKind::rational && tok.text == d.field.symbol()) {
                    term.coeff *= pow(d.field.generator(), exponent);
                } else if (tok.text == "x") {
                    if (exponent < 0) throw SyntaxError("negative power of x", tok.position);
                    if (static_cast<std::size_t>(exponent) > d.max_x_power)
                        throw XPowerLimit("x-power exceeds the cap of " + std::to_string(d.max_x_power));
                    for (long k = 0; k < exponent; ++k) term.letters.push_back(RawLetter{true, {}});
                } else {
                    std::size_t g = 0;
                    try {
                        g = d.group.generator_index(tok.text);
                    } catch (const UnknownGenerator&) {
                        throw UnknownGenerator("unknown generator '" + tok.text + "' at position " +
                                               std::to_string(tok.position));
                    }
                    int e = exponent < 0 ? -1 : 1;
                    for (long k = 0; k < (exponent < 0 ? -exponent : exponent); ++k)
                        term.letters.push_back(RawLetter{false, Letter{g, e}});
                }
            } else {
                throw SyntaxError("expected a scalar, generator or x", tok.position);
            }
            if (lex.peek().kind != TokenKind::star) break;
            lex.next();
        }
        if (negate) term.coeff = -term.coeff;
        terms.push_back(std::move(term));
    }
    return r_normalize(d, terms);
}

}  // namespace hopfact
