#include "hartogs/algebra.hpp"

#include <stdexcept>

namespace hartogs {

RationalPoly raising_factorial(const Rational& shift, unsigned m) {
    RationalPoly out = RationalPoly::constant(Rational(1));
    for (unsigned i = 0; i < m; ++i) out *= RationalPoly{shift + Rational(i), Rational(1)};
    return out;
}

Rational raising_factorial_at(const Rational& s, unsigned m) {
    Rational out(1);
    for (unsigned i = 0; i < m; ++i) out *= s + Rational(i);
    return out;
}

RationalPoly hua_poly(const DomainSpec& spec) {
    RationalPoly chi = RationalPoly::constant(Rational(1));
    for (int j = 1; j <= spec.r; ++j) {
        Rational shift = Rational(1) + Rational(j - 1) * Rational(spec.a) / 2;
        unsigned m = static_cast<unsigned>(1 + spec.b + (spec.r - j) * spec.a);
        chi *= raising_factorial(shift, m);
    }
    return chi;
}

RationalPoly chi_tilde(const DomainSpec& spec, const Rational& mu) {
    return hua_poly(spec).compose_linear(mu, Rational(-spec.p));
}

Rational finite_difference(const RationalPoly& f, unsigned k, const Rational& x0) {
    Rational acc(0);
    for (unsigned j = 0; j <= k; ++j) {
        Rational term = Rational(binomial(k, j)) * f(x0 - Rational(j));
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

RationalPoly difference_poly(const RationalPoly& f, unsigned k) {
    RationalPoly out = f;
    for (unsigned i = 0; i < k; ++i)
        out = out - out.compose_linear(Rational(1), Rational(-1));
    return out;
}

std::vector<Rational> difference_values(const RationalPoly& f, const Rational& x0, unsigned max_k) {
    std::vector<Rational> vals(max_k + 1);
    for (unsigned j = 0; j <= max_k; ++j) vals[j] = f(x0 - Rational(j));
    std::vector<Rational> out(max_k + 1);
    for (unsigned k = 0; k <= max_k; ++k) {
        Rational acc(0);
        for (unsigned j = 0; j <= k; ++j) {
            Rational term = Rational(binomial(k, j)) * vals[j];
            if (j % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        out[k] = acc;
    }
    return out;
}

Rational pochhammer_partition(const Rational& s, const Partition& lambda, int a) {
    Rational out(1);
    const auto& parts = lambda.parts();
    for (std::size_t j = 0; j < parts.size(); ++j) {
        Rational shifted = s - Rational(static_cast<long>(j)) * Rational(a) / 2;
        out *= raising_factorial_at(shifted, static_cast<unsigned>(parts[j]));
    }
    return out;
}

std::vector<Rational> alpha_expansion_coeffs(int d, int d0, int k) {
    if (d < 1 || d0 < 1 || k < 0)
        throw std::invalid_argument("alpha_expansion_coeffs: need d, d0 >= 1 and k >= 0");
    if (k > d) throw std::invalid_argument("alpha_expansion_coeffs: k must be <= d");
    RationalPoly poly = raising_factorial(Rational(-(d + d0)), static_cast<unsigned>(d0 + k));
    std::vector<Rational> out(static_cast<std::size_t>(d0 + k) + 1, Rational(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = poly.coeff(i);
    return out;
}

Rational c2_invariant(const DomainSpec& spec) {
    Rational r(spec.r), a(spec.a), d(spec.d), p(spec.p);
    return d * d * p * p / 4 - r * (p - 1) * p * (2 * p - 1) / 6 +
           r * (r - 1) * a * (3 * p * p - 3 * p + 1) / 12 -
           (r - 1) * r * (2 * r - 1) * a * a * (p - 1) / 24 +
           r * r * (r - 1) * (r - 1) * a * a * a / 48;
}

ChiTildeTopCoeffs closed_c0c1c2(const DomainSpec& spec, const Rational& mu) {
    ChiTildeTopCoeffs out;
    out.c0 = rational_pow(mu, spec.d);
    out.c1 = -rational_pow(mu, spec.d - 1) * Rational(spec.d) * Rational(spec.p) / 2;
    if (spec.d >= 2) out.c2 = rational_pow(mu, spec.d - 2) * c2_invariant(spec) / 2;
    return out;
}

RationalPoly difference_power_A(int d) {
    if (d < 1) throw std::domain_error("difference_power_A: requires d >= 1");
    Rational half_fact = Rational(factorial(static_cast<unsigned long>(d))) / 2;
    return RationalPoly{half_fact * Rational(1 - d), half_fact * 2};
}

RationalPoly difference_power_B(int d) {
    if (d < 2) throw std::domain_error("difference_power_B: requires d >= 2");
    Rational f24 = Rational(factorial(static_cast<unsigned long>(d))) / 24;
    return RationalPoly{f24 * Rational(3 * d * d - 11 * d + 10), f24 * Rational(-12 * (d - 2)),
                        f24 * 12};
}

ClosedDifferenceValues closed_D_values(const DomainSpec& spec, const Rational& mu) {
    const int d = spec.d;
    const Rational p(spec.p);
    ClosedDifferenceValues out;
    out.first = Rational(d) * rational_pow(mu, d - 1) / 2 * (mu * Rational(d + 1) - p);
    if (d >= 2) {
        Rational quad = Rational((d - 1)) * Rational(d) * Rational(d + 1) * Rational(3 * d + 10) / 24;
        Rational lin = p * Rational(d - 1) * Rational(d) * Rational(d + 2) / 4;
        out.second =
            rational_pow(mu, d - 2) * (quad * mu * mu - lin * mu + c2_invariant(spec) / 2);
    }
    return out;
}

}  // namespace hartogs
