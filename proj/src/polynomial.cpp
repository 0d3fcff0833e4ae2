#include "hopfact/polynomial.hpp"

#include <map>
#include <mutex>

#include "hopfact/errors.hpp"

namespace hopfact {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

Poly::Poly(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

Poly Poly::monomial(const Rational& c, std::size_t degree) {
    if (c == 0) return {};
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return Poly(std::move(v));
}

Rational Poly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
}

std::string Poly::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        bool unit = (mag == 1);
        if (k == 0 || !unit) out += mag.get_str();
        if (k > 0) {
            if (!unit) out += "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly{}, a};
    std::vector<Rational> rem = a.coeffs();
    std::vector<Rational> quot(rem.size() - b.coeffs().size() + 1, Rational(0));
    const auto& bc = b.coeffs();
    const Rational& lead = b.leading();
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational c = rem[k + bc.size() - 1] / lead;
        quot[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) rem[k + j] -= c * bc[j];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly monic(const Poly& p) {
    if (p.is_zero()) return p;
    Rational inv = 1 / p.leading();
    return p * inv;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

ExtendedGcd extended_gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly s0(Rational(1)), s1;
    Poly t0, t1(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rational inv = 1 / r0.leading();
    return {r0 * inv, s0 * inv, t0 * inv};
}

const Poly& cyclotomic_polynomial(int n) {
    if (n < 1) throw InvalidParams("cyclotomic order must be positive");
    static std::mutex mutex;
    static std::map<int, Poly> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    // x^n - 1 divided by every Phi_d, d a proper divisor of n. Computed
    // without recursion into this function so the lock is held once.
    auto compute = [](int m, const std::map<int, Poly>& known) {
        Poly p = Poly::monomial(1, static_cast<std::size_t>(m)) - Poly(Rational(1));
        for (int d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            p = divmod(p, known.at(d)).first;
        }
        return p;
    };
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0 || cache.count(d)) continue;
        // divisors of d are divisors of n, and are visited first
        cache.emplace(d, compute(d, cache));
    }
    return cache.at(n);
}

}  // namespace hopfact
