#ifndef HARTOGS_KERNEL_HPP
#define HARTOGS_KERNEL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hartogs/algebra.hpp"
#include "hartogs/catalog.hpp"

namespace hartogs {

/// Weighted-kernel parameters over the Hartogs domain: base spec, fiber
/// exponent mu, fiber dimension d0 and weight alpha. The closed formulas
/// are rational in alpha and are evaluated for any alpha; `admissible()`
/// reports whether alpha > max{d + d0, (p-1)/mu}, the range where the
/// weighted Hilbert space interpretation holds.
struct KernelParams {
    DomainSpec spec;
    Rational mu = Rational(1);
    int d0 = 1;
    Rational alpha = Rational(0);

    bool admissible() const;
    /// max{d + d0, (p-1)/mu}
    Rational admissibility_threshold() const;
};

/// Determinant of the metric's complex Hessian:
///   mu^d C_Omega N^{mu(d+1)-p} / (N^mu - ||w||^2)^{d+d0+1}.
double metric_det(const KernelParams& params, const PointCH& point);

/// Weighted Bergman kernel. Diagonal when point2 is omitted; otherwise the
/// sesquiholomorphic polarization (N(z, xi-bar), <w, w2>).
Complex bergman_kernel(const KernelParams& params, const PointCH& point,
                       const std::optional<PointCH>& point2 = std::nullopt);

/// The kernel prefactor computed the long way, via Euclidean volumes
///   pi^{d+d0} / (C_Omega mu^d chi1(0) chi2(0) V(Omega) V(B^{d0})),
/// which collapses to mu^{-d} analytically. Cross-check path.
double kernel_prefactor_via_volumes(const KernelParams& params);

/// epsilon_alpha = exp(-alpha Phi) K_alpha at the point (real scalar).
double epsilon(const KernelParams& params, const PointCH& point);

/// Exact evaluation of the epsilon-function through the carrier variable
/// X = 1 - ||w||^2 / N^mu:
///   (1/mu^d) sum_{k=0}^{d} D^k chi~(d)/k! * X^{d-k} * (alpha-d-d0)_{k+d0}.
/// Works for every kind including the exceptional domains.
Rational epsilon_at_X(const DomainSpec& spec, const Rational& mu, int d0, const Rational& alpha,
                      const Rational& X);

/// Coefficients a_j of the expansion epsilon = sum_j a_j alpha^{d+d0-j},
/// each a polynomial in X = 1 - ||w||^2/N^mu. a_0 is identically 1 and
/// deg a_j <= min(j, d).
struct EpsilonExpansion {
    Rational mu;
    int d0 = 1;
    int d = 1;
    std::vector<RationalPoly> coeffs;  // indexed j = 0..d+d0

    Rational eval(const Rational& alpha, const Rational& X) const;
    double eval_double(double alpha, double X) const;
};

EpsilonExpansion epsilon_coefficients(const DomainSpec& spec, const Rational& mu, int d0);

/// Closed forms of a_1 and a_2 (as polynomials in X), dispatching on d = 1
/// versus d >= 2 for a_2.
std::pair<RationalPoly, RationalPoly> a1_a2_closed(const DomainSpec& spec, const Rational& mu,
                                                   int d0);

/// X = 1 - ||w||^2 / N(z,z)^mu at a point (double path).
double carrier_X(const DomainSpec& spec, const Rational& mu, const PointCH& point);

}  // namespace hartogs

#endif
