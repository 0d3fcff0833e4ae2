#pragma once

#include <string>

#include "hopfact/polynomial.hpp"

namespace hopfact {

enum class FieldKind { rational, cyclotomic, rational_function };

class FieldElement;

/// One of the three coefficient fields: Q, Q(zeta_N), or Q(q).
///
/// The symbol names the adjoined element in printed output and in parsed
/// expressions ("z" for zeta_N and "q" for the transcendental by default). For
/// Q(q) the symbol is part of the field's identity; for Q(zeta_N) it is only
/// cosmetic.
class Field {
public:
    Field() = default;

    static Field rationals();
    static Field cyclotomic(int order, std::string symbol = "z");
    static Field rational_functions(std::string symbol = "q");

    FieldKind kind() const noexcept { return kind_; }
    int order() const noexcept { return order_; }
    const std::string& symbol() const noexcept { return symbol_; }
    /// Dimension over Q (phi(N) for cyclotomic fields, 1 for Q).
    /// Rational function fields report 0.
    std::size_t degree() const;
    std::string name() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_rational(const Rational& r) const;
    FieldElement from_int(long v) const;
    /// zeta_N or q. Throws InvalidParams for Q.
    FieldElement generator() const;

    friend bool operator==(const Field& a, const Field& b);

private:
    FieldKind kind_ = FieldKind::rational;
    int order_ = 0;
    std::string symbol_;
};

/// Exact element of a Field. Immutable value type; arithmetic between
/// elements of different fields throws MixedFields.
class FieldElement {
public:
    /// The rational zero. Prefer Field::zero() for a specific field.
    FieldElement();

    /// Cyclotomic element from power-basis coefficients (any length; reduced
    /// modulo Phi_N). For Q the vector must have at most one entry.
    static FieldElement from_coefficients(const Field& f, std::vector<Rational> coeffs);
    static FieldElement from_fraction(const Field& f, Poly num, Poly den);

    const Field& field() const noexcept { return field_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const;

    /// Rational value (Q), residue coefficients (Q(zeta_N)) or numerator (Q(q)).
    const Poly& numerator() const noexcept { return num_; }
    /// 1 except for Q(q).
    const Poly& denominator() const noexcept { return den_; }
    /// Rational value; throws InvalidParams unless the element lies in Q.
    Rational to_rational() const;
    bool is_rational() const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);
    FieldElement inverse() const;

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    friend bool operator==(const FieldElement& a, const FieldElement& b);

    std::string to_string() const;

private:
    FieldElement(Field f, Poly num, Poly den);
    void require_same_field(const FieldElement& o) const;
    void canonicalize();

    Field field_;
    Poly num_;
    Poly den_;
};

FieldElement pow(const FieldElement& e, long k);

/// zeta_n as an element of Q(zeta_n).
FieldElement primitive_root(int n);

/// True iff e^n == 1, by exact exponentiation.
bool is_nth_root_of_unity(const FieldElement& e, int n);

/// Smallest k in [1, limit] with e^k == 1, or 0 if there is none.
int multiplicative_order(const FieldElement& e, int limit);

/// Exact primitive n-th root test: e^n == 1 and e^k != 1 for 0 < k < n.
bool is_primitive_root_of_unity(const FieldElement& e, int n);

}  // namespace hopfact
