#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace hopfact {

using Rational = mpq_class;

/// Dense univariate polynomial over Q, coefficients stored low degree first.
/// Trailing zero coefficients are never stored, so the zero polynomial is empty.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    explicit Poly(const Rational& constant);

    static Poly monomial(const Rational& c, std::size_t degree);

    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    Rational coeff(std::size_t i) const;
    const Rational& leading() const { return coeffs_.back(); }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string(const std::string& var) const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws DivisionByZero when `b` is zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly monic(const Poly& p);
/// Monic gcd (zero if both inputs are zero).
Poly gcd(Poly a, Poly b);

struct ExtendedGcd {
    Poly g;  // monic
    Poly s;
    Poly t;  // s*a + t*b == g
};
ExtendedGcd extended_gcd(const Poly& a, const Poly& b);

/// The n-th cyclotomic polynomial, obtained by dividing x^n - 1 by every
/// Phi_d with d | n, d < n. Results are cached; safe to call concurrently.
const Poly& cyclotomic_polynomial(int n);

}  // namespace hopfact
