#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfact/field.hpp"

namespace hopfact {

/// g or g^-1, by generator index.
struct Letter {
    std::size_t gen = 0;
    int exp = 1;

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Cancels adjacent g g^-1 pairs.
Word reduce_word(Word w);
Word invert_word(const Word& w);
/// reduce(u v)
Word word_product(const Word& u, const Word& v);
/// w^k for any integer k.
Word word_power(const Word& w, long k);

class GroupPresentation {
public:
    GroupPresentation() = default;
    GroupPresentation(std::vector<std::string> generators, std::vector<Word> relators);

    const std::vector<std::string>& generators() const noexcept { return generators_; }
    const std::vector<Word>& relators() const noexcept { return relators_; }
    std::size_t size() const noexcept { return generators_.size(); }

    std::size_t generator_index(const std::string& name) const;  // UnknownGenerator
    Letter letter(const std::string& name, int exp = 1) const { return Letter{generator_index(name), exp}; }

    /// "1" for the empty word, otherwise letters joined by '*'.
    std::string word_to_string(const Word& w) const;
    /// "g^-1" style tokens, as used in problem files.
    std::vector<std::string> word_to_tokens(const Word& w) const;
    Word word_from_tokens(const std::vector<std::string>& tokens) const;

private:
    std::vector<std::string> generators_;
    std::vector<Word> relators_;
};

/// Data of kG(chi, h, alpha): x g = chi(g) g x + alpha(g) (1 - h) g and
/// Delta(x) = 1 (x) x + x (x) h.
struct HopfOreDescriptor {
    Field field;
    GroupPresentation group;
    Word h_word;
    std::vector<FieldElement> chi;    // per generator, nonzero
    std::vector<FieldElement> alpha;  // per generator
    std::size_t max_x_power = 64;
};

/// Checks names, sizes, fields and nonvanishing of chi; throws
/// InvalidDescriptor. Relator consistency is reported by validate_descriptor.
HopfOreDescriptor make_descriptor(Field field, GroupPresentation group, Word h_word,
                                  const std::map<std::string, FieldElement>& chi,
                                  const std::map<std::string, FieldElement>& alpha);

FieldElement chi_extend(const HopfOreDescriptor& d, const Word& w);
FieldElement alpha_extend(const HopfOreDescriptor& d, const Word& w);

struct RelatorCheck {
    std::size_t relator = 0;
    FieldElement chi_value;
    FieldElement alpha_value;
    bool chi_ok = false;
    bool alpha_ok = false;
};

struct DescriptorReport {
    std::vector<RelatorCheck> relators;
    bool valid() const;
};

DescriptorReport validate_descriptor(const HopfOreDescriptor& d);

/// Element of R in the basis {w x^k}, words freely reduced.
class RElement {
public:
    using Key = std::pair<Word, std::size_t>;
    using Terms = std::map<Key, FieldElement>;

    explicit RElement(Field field) : field_(std::move(field)) {}
    static RElement unit(const Field& f) { return monomial(f, {}, 0); }
    static RElement monomial(const Field& f, const Word& w, std::size_t k, FieldElement c);
    static RElement monomial(const Field& f, const Word& w, std::size_t k) { return monomial(f, w, k, f.one()); }

    const Field& field() const noexcept { return field_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    FieldElement coeff(const Word& w, std::size_t k) const;
    void add_term(const Word& w, std::size_t k, const FieldElement& c);

    RElement& operator+=(const RElement& o);
    RElement& operator-=(const RElement& o);
    RElement& operator*=(const FieldElement& c);
    friend RElement operator+(RElement a, const RElement& b) { return a += b; }
    friend RElement operator-(RElement a, const RElement& b) { return a -= b; }
    friend RElement operator*(RElement a, const FieldElement& c) { return a *= c; }
    friend bool operator==(const RElement& a, const RElement& b);

    std::string to_string(const GroupPresentation& g) const;

private:
    Field field_;
    Terms terms_;
};

/// x * e, pushed back into normal form. Throws XPowerLimit past max_x_power.
RElement left_mul_x(const HopfOreDescriptor& d, const RElement& e);
/// Product in R.
RElement mul(const HopfOreDescriptor& d, const RElement& a, const RElement& b);
/// x^k
RElement x_power(const HopfOreDescriptor& d, std::size_t k);
/// The group word w as an element of R.
RElement word_element(const HopfOreDescriptor& d, const Word& w);

/// A letter of an unnormalised product: a group letter or x.
struct RawLetter {
    bool is_x = false;
    Letter letter;
};

struct RawTerm {
    FieldElement coeff;
    std::vector<RawLetter> letters;
};

/// Rewrites products of group letters and x into {w x^k} form by moving every
/// x to the right.
RElement r_normalize(const HopfOreDescriptor& d, const std::vector<RawTerm>& terms);
/// Re-reduces words and drops zero terms; the identity on normal forms.
RElement r_normalize(const HopfOreDescriptor& d, const RElement& e);

/// Sum of terms; a term is '*'-separated factors drawn from scalar literals,
/// the field symbol (with ^k), generator names (with ^k, k may be negative)
/// and x (with ^k, k >= 0).
RElement parse_r_element(const HopfOreDescriptor& d, const std::string& text);

}  // namespace hopfact
