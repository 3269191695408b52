#ifndef HARTOGS_ALGEBRA_HPP
#define HARTOGS_ALGEBRA_HPP

#include <optional>
#include <vector>

#include "hartogs/catalog.hpp"
#include "hartogs/partition.hpp"
#include "hartogs/polynomial.hpp"
#include "hartogs/rational.hpp"

namespace hartogs {

/// The polynomial (x + shift)(x + shift + 1) ... (x + shift + m - 1);
/// m = 0 gives the constant 1.
RationalPoly raising_factorial(const Rational& shift, unsigned m);

/// (s)_m = s(s+1)...(s+m-1) at a concrete rational s.
Rational raising_factorial_at(const Rational& s, unsigned m);

/// Hua polynomial of the domain:
///   chi(s) = prod_{j=1}^{r} (s + 1 + (j-1)a/2)_{1 + b + (r-j)a},
/// monic of degree d. Defined for every kind (it only needs r, a, b).
RationalPoly hua_poly(const DomainSpec& spec);

/// chi(mu*x - p): degree d, leading coefficient mu^d.
RationalPoly chi_tilde(const DomainSpec& spec, const Rational& mu);

/// Backward difference D^k f at x0 via the alternating binomial sum
///   sum_{j=0}^{k} C(k,j) (-1)^j f(x0 - j).
Rational finite_difference(const RationalPoly& f, unsigned k, const Rational& x0);

/// D^k f as a polynomial, by k-fold f(x) - f(x-1). Cross-check route for
/// finite_difference; also used to validate the closed difference forms.
RationalPoly difference_poly(const RationalPoly& f, unsigned k);

/// D^k f(x0) for every k = 0..max_k at once (shared evaluations).
std::vector<Rational> difference_values(const RationalPoly& f, const Rational& x0, unsigned max_k);

/// Generalized Pochhammer symbol (s)_lambda = prod_j (s - (j-1)a/2)_{lambda_j}.
Rational pochhammer_partition(const Rational& s, const Partition& lambda, int a);

/// Coefficients (ascending in alpha) of (alpha - d - d0)_{d0+k}.
std::vector<Rational> alpha_expansion_coeffs(int d, int d0, int k);

/// Leading coefficients of chi_tilde in closed form:
///   c0 = mu^d, c1 = -(1/2) mu^{d-1} d p, and for d >= 2 the quadratic
///   correction c2 built from (r, a, d, p). c2 is absent when d < 2.
struct ChiTildeTopCoeffs {
    Rational c0;
    Rational c1;
    std::optional<Rational> c2;
};
ChiTildeTopCoeffs closed_c0c1c2(const DomainSpec& spec, const Rational& mu);

/// The (r, a, d, p)-polynomial entering both c2 and the classification
/// residual (c2 = (1/2) mu^{d-2} * this).
Rational c2_invariant(const DomainSpec& spec);

/// Closed forms of the iterated differences of x^d:
///   A_d = D^{d-1} x^d = (d!/2)(2x - d + 1)                    (d >= 1)
///   B_d = D^{d-2} x^d = (d!/24)(12x^2 - 12(d-2)x + 3d^2-11d+10) (d >= 2)
RationalPoly difference_power_A(int d);
RationalPoly difference_power_B(int d);

/// D^{d-1} chi~(d)/(d-1)! and, for d >= 2, D^{d-2} chi~(d)/(d-2)! in
/// closed form. The first is (d mu^{d-1}/2)(mu(d+1) - p).
struct ClosedDifferenceValues {
    Rational first;
    std::optional<Rational> second;
};
ClosedDifferenceValues closed_D_values(const DomainSpec& spec, const Rational& mu);

}  // namespace hartogs

#endif
