#ifndef HARTOGS_CLASSIFY_HPP
#define HARTOGS_CLASSIFY_HPP

#include <optional>
#include <vector>

#include "hartogs/catalog.hpp"
#include "hartogs/rational.hpp"

namespace hartogs {

/// Constancy verdict for the expansion coefficients a_1, a_2 of a domain
/// at a given fiber exponent mu.
struct ClassificationVerdict {
    DomainSpec spec;
    Rational mu;                   // exponent the verdict was computed at
    Rational mu_star;              // Kaehler-Einstein value p/(d+1)
    Rational a1_constant_iff_mu;   // a_1 is constant exactly at this mu (= mu_star)
    bool a2_constant = false;
    /// Exact value of 12(d+1)*c2_invariant - (d-1)d(3d+2)p^2, the
    /// obstruction at mu = mu_star; zero is necessary for a_2 constancy
    /// when d >= 2.
    Rational residual;
    bool hyperbolic = false;       // r == 1 and mu_star == 1
};

/// The unique mu making a_1 constant: p/(d+1), exact.
Rational a1_constant_mu(const DomainSpec& spec);

/// The constancy obstruction evaluated from (r, a, d, p) alone.
Rational classification_residual(const DomainSpec& spec);

/// The corresponding factored per-family polynomial (equal to the raw
/// residual; the proportionality factor is exactly 1 for every family):
///   TypeI(m,n):   2mn(m^2-1)(n^2-1)
///   TypeII(2k):   4k^2(8k^4-20k^3+10k^2+5k-3)
///   TypeII(2k+1): 4k(2k-1)(2k+1)^2(k-1)(k+1)
///   TypeIII(n):   n^2(n^4+5n^3+5n^2-5n-6)/8
///   TypeIV(n):    n(n^2+n-2)
/// Exceptional kinds have no factored form (nullopt).
std::optional<Rational> factored_residual(const DomainSpec& spec);

/// Decides whether a_2 is constant at the given mu: for d = 1 exactly at
/// mu = 1; for d >= 2 exactly when mu = p/(d+1) and the residual vanishes.
ClassificationVerdict a2_constancy(const DomainSpec& spec, const Rational& mu);

/// Parameter ranges swept by classify_sweep, in deterministic order
/// (TypeI by (m, n), then TypeII, TypeIII, TypeIV, then exceptional).
struct SweepRanges {
    int type_i_max_n = 6;    // all 1 <= m <= n <= this
    int type_ii_min_n = 4;
    int type_ii_max_n = 9;
    int type_iii_min_n = 2;
    int type_iii_max_n = 6;
    int type_iv_min_n = 5;
    int type_iv_max_n = 10;
    bool include_exceptional = true;
    std::optional<int> max_dim;  // keep only specs with d <= max_dim
};

/// Verdicts at mu = p/(d+1) for every spec in range.
std::vector<ClassificationVerdict> classify_sweep(const SweepRanges& ranges);

}  // namespace hartogs

#endif
