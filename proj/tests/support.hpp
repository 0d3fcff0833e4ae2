#pragma once

// Helpers shared by the unit and acceptance tests.

#include <random>

#include "hopfact/field.hpp"

namespace hopfact::testutil {

inline Rational random_rational(std::mt19937_64& rng, long bound = 5) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline FieldElement random_element(const Field& f, std::mt19937_64& rng, long bound = 5) {
    switch (f.kind()) {
        case FieldKind::rational: return f.from_rational(random_rational(rng, bound));
        case FieldKind::cyclotomic: {
            std::vector<Rational> c;
            for (std::size_t i = 0; i < f.degree() + 1; ++i) c.push_back(random_rational(rng, bound));
            return FieldElement::from_coefficients(f, c);
        }
        case FieldKind::rational_function: {
            std::uniform_int_distribution<int> deg(0, 2);
            std::vector<Rational> n, d;
            for (int i = 0, e = deg(rng); i <= e; ++i) n.push_back(random_rational(rng, bound));
            for (int i = 0, e = deg(rng); i <= e; ++i) d.push_back(random_rational(rng, bound));
            Poly den(d);
            if (den.is_zero()) den = Poly(Rational(1));
            return FieldElement::from_fraction(f, Poly(n), den);
        }
    }
    return f.zero();
}

inline FieldElement random_nonzero(const Field& f, std::mt19937_64& rng, long bound = 5) {
    while (true) {
        auto e = random_element(f, rng, bound);
        if (!e.is_zero()) return e;
    }
}

}  // namespace hopfact::testutil
