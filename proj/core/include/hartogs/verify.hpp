#ifndef HARTOGS_VERIFY_HPP
#define HARTOGS_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hartogs/catalog.hpp"
#include "hartogs/kernel.hpp"
#include "hartogs/polynomial.hpp"
#include "hartogs/rational.hpp"

namespace hartogs {

enum class QuadScheme { TensorGauss, MonteCarlo };

/// Deterministic quadrature/sampling request: the same spec always yields
/// bit-identical estimates (sample randomness is a pure function of
/// (seed, index), independent of any worker count).
struct QuadratureSpec {
    QuadScheme scheme = QuadScheme::TensorGauss;
    int n = 64;  // nodes per axis (tensor) or sample count (monte carlo)
    std::uint64_t seed = 0;
};

struct CheckReport {
    std::string name;
    double expected = 0.0;
    std::string expected_exact;  // "num/den" when the expected side is exact, else empty
    double observed = 0.0;
    double tolerance = 0.0;      // relative to max(1, |expected|)
    bool passed = false;
};

CheckReport make_report(std::string name, double expected, double observed, double tolerance);

/// Integrates N(z,z)^s over the base domain and compares against
/// chi(0)/chi(s) * V(Omega). Tensor-Gauss supports the rank-one balls
/// (d <= 2 at tolerance 1e-8); Monte Carlo covers the other classical
/// kinds with d <= 4 at tolerance 1e-2.
CheckReport hua_integral_check(const DomainSpec& spec, const Rational& s,
                               const QuadratureSpec& quad);

/// Orthonormalizes the monomials z^i w^j (disk base, d0 = 1) by nested
/// radial quadrature, forms the truncated diagonal kernel, weights it by
/// exp(-alpha Phi) and compares against the closed epsilon at each point.
std::vector<CheckReport> brute_force_epsilon(const DomainSpec& spec, const Rational& mu,
                                             const Rational& alpha,
                                             const std::vector<PointCH>& points,
                                             const QuadratureSpec& quad, int degree_cutoff = 40);

/// Central-difference complex Hessian of Phi (step 1e-4, one Richardson
/// level); its determinant must match metric_det to 1e-5 relative.
CheckReport hessian_check(const DomainSpec& spec, const Rational& mu, int d0,
                          const PointCH& point);

/// Numerical Hessian determinant of -log N at z = 0 versus the closed
/// C_Omega value, 1e-6 relative.
CheckReport c_omega_check(const DomainSpec& spec);

/// Scalar operator identity: phi(t d/dt)(1-tz)^{-n0} against the closed
/// difference expansion sum_k D^k phi(-n0)/k! (n0)_k (1-tz)^{-n0-k},
/// compared coefficient-by-coefficient (exact rationals) through the
/// given truncation order.
CheckReport operator_identity_check(const RationalPoly& phi, const Rational& n0,
                                    const Rational& z, int order);

/// Rank-one kernel-expansion partial sums: sum_{k<terms} (s)_k t^k / k!
/// against (1-t)^{-s}.
CheckReport fk_rank1_check(const Rational& s, const Rational& normsq, int terms);

/// One term coeff * z^zdeg * w^wdeg of a test function on the disk-based
/// Hartogs domain.
struct Monomial {
    int zdeg = 0;
    int wdeg = 0;
    Complex coeff = Complex(1.0, 0.0);
};

/// Integrates f against the conjugated polarized closed-form kernel under
/// the weighted inner product (4D tensor quadrature: Gauss radial x
/// trapezoid angular) and compares with f(point). Disk base, d0 = 1.
CheckReport reproducing_check(const DomainSpec& spec, const Rational& mu, const Rational& alpha,
                              const std::vector<Monomial>& f, const PointCH& point,
                              const QuadratureSpec& quad);

/// The default verification suite in deterministic order.
std::vector<CheckReport> default_suite(std::uint64_t seed, int degree_cutoff = 40);

/// Sample index -> uniform double in [0,1); pure function of (seed, index).
double counter_uniform(std::uint64_t seed, std::uint64_t index);

}  // namespace hartogs

#endif
