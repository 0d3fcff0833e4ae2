#include "hopfact/field.hpp"

#include "hopfact/errors.hpp"

namespace hopfact {

namespace {

std::size_t euler_phi(int n) {
    std::size_t result = 0;
    for (int k = 1; k <= n; ++k) {
        int a = k, b = n;
        while (b != 0) {
            int t = a % b;
            a = b;
            b = t;
        }
        if (a == 1) ++result;
    }
    return result;
}

}  // namespace

Field Field::rationals() { return Field{}; }

Field Field::cyclotomic(int order, std::string symbol) {
    if (order < 1) throw InvalidParams("cyclotomic order must be positive");
    Field f;
    f.kind_ = FieldKind::cyclotomic;
    f.order_ = order;
    f.symbol_ = std::move(symbol);
    return f;
}

Field Field::rational_functions(std::string symbol) {
    Field f;
    f.kind_ = FieldKind::rational_function;
    f.symbol_ = std::move(symbol);
    return f;
}

std::size_t Field::degree() const {
    switch (kind_) {
        case FieldKind::rational: return 1;
        case FieldKind::cyclotomic: return euler_phi(order_);
        case FieldKind::rational_function: return 0;
    }
    return 0;
}

std::string Field::name() const {
    switch (kind_) {
        case FieldKind::rational: return "Q";
        case FieldKind::cyclotomic: return "Q(zeta_" + std::to_string(order_) + ")";
        case FieldKind::rational_function: return "Q(" + symbol_ + ")";
    }
    return "?";
}

bool operator==(const Field& a, const Field& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
        case FieldKind::rational: return true;
        case FieldKind::cyclotomic: return a.order_ == b.order_;
        case FieldKind::rational_function: return a.symbol_ == b.symbol_;
    }
    return false;
}

FieldElement Field::zero() const { return from_rational(Rational(0)); }
FieldElement Field::one() const { return from_rational(Rational(1)); }
FieldElement Field::from_int(long v) const { return from_rational(Rational(v)); }

FieldElement Field::from_rational(const Rational& r) const {
    return FieldElement::from_fraction(*this, Poly(r), Poly(Rational(1)));
}

FieldElement Field::generator() const {
    switch (kind_) {
        case FieldKind::rational: throw InvalidParams("Q has no adjoined generator");
        case FieldKind::cyclotomic:
            return FieldElement::from_coefficients(*this, {Rational(0), Rational(1)});
        case FieldKind::rational_function:
            return FieldElement::from_fraction(*this, Poly::monomial(1, 1), Poly(Rational(1)));
    }
    throw InvalidParams("unknown field kind");
}

FieldElement::FieldElement() : den_(Rational(1)) {}

FieldElement::FieldElement(Field f, Poly num, Poly den)
    : field_(std::move(f)), num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

FieldElement FieldElement::from_coefficients(const Field& f, std::vector<Rational> coeffs) {
    if (f.kind() == FieldKind::rational && coeffs.size() > 1) {
        Poly p(coeffs);
        if (p.degree() > 0) throw InvalidParams("rational literal has more than one coefficient");
    }
    return FieldElement(f, Poly(std::move(coeffs)), Poly(Rational(1)));
}

FieldElement FieldElement::from_fraction(const Field& f, Poly num, Poly den) {
    if (den.is_zero()) throw DivisionByZero("zero denominator");
    if (f.kind() != FieldKind::rational_function) {
        if (den.degree() > 0) throw InvalidParams("non-constant denominator outside Q(q)");
        Rational d = den.coeff(0);
        num *= 1 / d;
        den = Poly(Rational(1));
    }
    if (f.kind() == FieldKind::rational && num.degree() > 0)
        throw InvalidParams("rational literal has a non-constant part");
    return FieldElement(f, std::move(num), std::move(den));
}

void FieldElement::canonicalize() {
    switch (field_.kind()) {
        case FieldKind::rational:
            den_ = Poly(Rational(1));
            break;
        case FieldKind::cyclotomic:
            num_ = divmod(num_, cyclotomic_polynomial(field_.order())).second;
            den_ = Poly(Rational(1));
            break;
        case FieldKind::rational_function: {
            if (num_.is_zero()) {
                den_ = Poly(Rational(1));
                break;
            }
            Poly g = gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = divmod(num_, g).first;
                den_ = divmod(den_, g).first;
            }
            Rational lead_inv = 1 / den_.leading();
            num_ *= lead_inv;
            den_ *= lead_inv;
            break;
        }
    }
}

void FieldElement::require_same_field(const FieldElement& o) const {
    if (!(field_ == o.field_))
        throw MixedFields("cannot combine elements of " + field_.name() + " and " + o.field_.name());
}

bool FieldElement::is_one() const {
    return den_ == Poly(Rational(1)) && num_ == Poly(Rational(1));
}

bool FieldElement::is_rational() const { return num_.degree() <= 0 && den_.degree() <= 0; }

Rational FieldElement::to_rational() const {
    if (!is_rational()) throw InvalidParams(to_string() + " is not rational");
    return num_.coeff(0);
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    r.num_ = -r.num_;
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    require_same_field(o);
    if (field_.kind() == FieldKind::rational_function) {
        if (den_ == o.den_) {
            num_ += o.num_;
        } else {
            num_ = num_ * o.den_ + o.num_ * den_;
            den_ = den_ * o.den_;
        }
        canonicalize();
    } else {
        num_ += o.num_;
    }
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    require_same_field(o);
    num_ = num_ * o.num_;
    if (field_.kind() == FieldKind::rational_function) den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in " + field_.name());
    switch (field_.kind()) {
        case FieldKind::rational:
            return FieldElement(field_, Poly(1 / num_.coeff(0)), Poly(Rational(1)));
        case FieldKind::cyclotomic: {
            // Phi_N is irreducible, so gcd(num, Phi_N) = 1 and s is the inverse.
            auto eg = extended_gcd(num_, cyclotomic_polynomial(field_.order()));
            return FieldElement(field_, eg.s, Poly(Rational(1)));
        }
        case FieldKind::rational_function:
            return FieldElement(field_, den_, num_);
    }
    throw InvalidParams("unknown field kind");
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
    require_same_field(o);
    if (o.is_zero()) throw DivisionByZero("division by zero in " + field_.name());
    return *this *= o.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.num_ == b.num_ && a.den_ == b.den_;
}

std::string FieldElement::to_string() const {
    switch (field_.kind()) {
        case FieldKind::rational: return num_.coeff(0).get_str();
        case FieldKind::cyclotomic: return num_.to_string(field_.symbol());
        case FieldKind::rational_function: {
            if (den_.degree() == 0) return num_.to_string(field_.symbol());
            std::string n = num_.to_string(field_.symbol());
            if (num_.coeffs().size() > 1 || n.find(' ') != std::string::npos) n = "(" + n + ")";
            return n + "/(" + den_.to_string(field_.symbol()) + ")";
        }
    }
    return "?";
}

FieldElement pow(const FieldElement& e, long k) {
    FieldElement base = k < 0 ? e.inverse() : e;
    unsigned long n = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    FieldElement result = e.field().one();
    while (n > 0) {
        if (n & 1UL) result *= base;
        n >>= 1;
        if (n > 0) base *= base;
    }
    return result;
}

FieldElement primitive_root(int n) { return Field::cyclotomic(n).generator(); }

bool is_nth_root_of_unity(const FieldElement& e, int n) {
    if (n < 1) return false;
    return pow(e, n).is_one();
}

int multiplicative_order(const FieldElement& e, int limit) {
    if (e.is_zero()) return 0;
    FieldElement acc = e;
    for (int k = 1; k <= limit; ++k) {
        if (acc.is_one()) return k;
        acc *= e;
    }
    return 0;
}

bool is_primitive_root_of_unity(const FieldElement& e, int n) {
    return n >= 1 && multiplicative_order(e, n) == n;
}

}  // namespace hopfact
