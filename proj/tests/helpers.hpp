#ifndef HARTOGS_TEST_HELPERS_HPP
#define HARTOGS_TEST_HELPERS_HPP

#include <vector>

#include "hartogs/catalog.hpp"
#include "hartogs/rational.hpp"
#include "hartogs/verify.hpp"

namespace hartogs::test {

/// Every classical spec with d <= max_d, in deterministic family order.
inline std::vector<DomainSpec> classical_catalog(int max_d) {
    std::vector<DomainSpec> out;
    for (int m = 1; m * m <= max_d; ++m)
        for (int n = m; m * n <= max_d; ++n) out.push_back(type_i(m, n));
    for (int n = 4; n * (n - 1) / 2 <= max_d; ++n) out.push_back(type_ii(n));
    for (int n = 2; n * (n + 1) / 2 <= max_d; ++n) out.push_back(type_iii(n));
    for (int n = 5; n <= max_d; ++n) out.push_back(type_iv(n));
    return out;
}

inline std::vector<DomainSpec> full_catalog(int max_d) {
    auto out = classical_catalog(max_d);
    if (max_d >= 16) out.push_back(make_domain(DomainKind::TypeV16));
    if (max_d >= 27) out.push_back(make_domain(DomainKind::TypeVI27));
    return out;
}

/// The sweep of fiber exponents used by the exact identities.
inline std::vector<Rational> mu_sweep(const DomainSpec& spec) {
    return {Rational(1, 2), Rational(1), Rational(4, 5), Rational(Rational(spec.p) / Rational(spec.d + 1))};
}

/// Deterministic small rational in (0, bound]: numerator/denominator from
/// the counter stream.
inline Rational random_rational(std::uint64_t seed, std::uint64_t index, int bound = 12) {
    auto num = static_cast<long>(counter_uniform(seed, 2 * index) * bound) + 1;
    auto den = static_cast<long>(counter_uniform(seed, 2 * index + 1) * bound) + 1;
    return Rational(num) / Rational(den);
}

}  // namespace hartogs::test

#endif
