#include "hartogs/classify.hpp"

#include "hartogs/algebra.hpp"

namespace hartogs {

Rational a1_constant_mu(const DomainSpec& spec) { return Rational(spec.p) / Rational(spec.d + 1); }

Rational classification_residual(const DomainSpec& spec) {
    Rational p(spec.p);
    return Rational(12) * Rational(spec.d + 1) * c2_invariant(spec) -
           Rational(spec.d - 1) * Rational(spec.d) * Rational(3 * spec.d + 2) * p * p;
}

std::optional<Rational> factored_residual(const DomainSpec& spec) {
    switch (spec.kind) {
        case DomainKind::TypeI: {
            Rational m(spec.params[0]), n(spec.params[1]);
            return Rational(2) * m * n * (m * m - 1) * (n * n - 1);
        }
        case DomainKind::TypeII: {
            int size = spec.params[0];
            Rational k(size / 2);
            if (size % 2 == 0)
                return Rational(4) * k * k *
                       (8 * k * k * k * k - 20 * k * k * k + 10 * k * k + 5 * k - 3);
            return Rational(4) * k * (2 * k - 1) * (2 * k + 1) * (2 * k + 1) * (k - 1) * (k + 1);
        }
        case DomainKind::TypeIII: {
            Rational n(spec.params[0]);
            return n * n * (n * n * n * n + 5 * n * n * n + 5 * n * n - 5 * n - 6) / 8;
        }
        case DomainKind::TypeIV: {
            Rational n(spec.params[0]);
            return n * (n * n + n - 2);
        }
        default:
            return std::nullopt;
    }
}

ClassificationVerdict a2_constancy(const DomainSpec& spec, const Rational& mu) {
    ClassificationVerdict v;
    v.spec = spec;
    v.mu = mu;
    v.mu_star = a1_constant_mu(spec);
    v.a1_constant_iff_mu = v.mu_star;
    v.residual = classification_residual(spec);
    if (spec.d == 1)
        v.a2_constant = mu == 1;
    else
        v.a2_constant = mu == v.mu_star && v.residual == 0;
    v.hyperbolic = spec.r == 1 && v.mu_star == 1;
    return v;
}

std::vector<ClassificationVerdict> classify_sweep(const SweepRanges& ranges) {
    std::vector<DomainSpec> specs;
    for (int m = 1; m <= ranges.type_i_max_n; ++m)
        for (int n = m; n <= ranges.type_i_max_n; ++n) specs.push_back(type_i(m, n));
    for (int n = ranges.type_ii_min_n; n <= ranges.type_ii_max_n; ++n) specs.push_back(type_ii(n));
    for (int n = ranges.type_iii_min_n; n <= ranges.type_iii_max_n; ++n)
        specs.push_back(type_iii(n));
    for (int n = ranges.type_iv_min_n; n <= ranges.type_iv_max_n; ++n) specs.push_back(type_iv(n));
    if (ranges.include_exceptional) {
        specs.push_back(make_domain(DomainKind::TypeV16));
        specs.push_back(make_domain(DomainKind::TypeVI27));
    }

    std::vector<ClassificationVerdict> out;
    out.reserve(specs.size());
    for (const auto& spec : specs) {
        if (ranges.max_dim && spec.d > *ranges.max_dim) continue;
        out.push_back(a2_constancy(spec, a1_constant_mu(spec)));
    }
    return out;
}

}  // namespace hartogs
