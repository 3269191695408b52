#include "hartogs/kernel.hpp"

#include <cmath>
#include <numbers>

namespace hartogs {

namespace {

// D^k chi~(d)/k! * (alpha - d - d0)_{k+d0} / mu^d for k = 0..d; the shared
// coefficient list behind epsilon and the kernel.
std::vector<Rational> term_coefficients(const DomainSpec& spec, const Rational& mu, int d0,
                                        const Rational& alpha) {
    const int d = spec.d;
    auto dvals = difference_values(chi_tilde(spec, mu), Rational(d), static_cast<unsigned>(d));
    const Rational mu_d = rational_pow(mu, d);
    std::vector<Rational> out(static_cast<std::size_t>(d) + 1);
    Rational kfact(1);
    for (int k = 0; k <= d; ++k) {
        if (k > 0) kfact *= k;
        out[static_cast<std::size_t>(k)] =
            dvals[static_cast<std::size_t>(k)] / kfact *
            raising_factorial_at(alpha - Rational(d + d0), static_cast<unsigned>(k + d0)) / mu_d;
    }
    return out;
}

void require_fiber(const KernelParams& params, const PointCH& point) {
    if (point.w.size() != static_cast<std::size_t>(params.d0))
        throw std::invalid_argument("fiber coordinate vector must have " +
                                    std::to_string(params.d0) + " entries");
}

}  // namespace

Rational KernelParams::admissibility_threshold() const {
    Rational dim_bound(spec.d + d0);
    Rational weight_bound = Rational(spec.p - 1) / mu;
    return dim_bound > weight_bound ? dim_bound : weight_bound;
}

bool KernelParams::admissible() const { return alpha > admissibility_threshold(); }

double metric_det(const KernelParams& params, const PointCH& point) {
    const DomainSpec& spec = params.spec;
    require_fiber(params, point);
    if (!is_interior(spec, params.mu, point))
        throw membership_error("metric_det: point is not interior");
    const double mu = to_double(params.mu);
    const double n_diag = generic_norm_diag(spec, point.z);
    const int n_total = spec.d + params.d0;
    return std::pow(mu, spec.d) * to_double(c_omega(spec)) *
           std::pow(n_diag, mu * (spec.d + 1) - spec.p) /
           std::pow(std::pow(n_diag, mu) - squared_norm(point.w), n_total + 1);
}

Complex bergman_kernel(const KernelParams& params, const PointCH& point,
                       const std::optional<PointCH>& point2) {
    const DomainSpec& spec = params.spec;
    require_fiber(params, point);
    const bool diagonal = !point2.has_value();
    if (diagonal && !is_interior(spec, params.mu, point))
        throw membership_error("bergman_kernel: point is not interior");
    if (!diagonal) require_fiber(params, *point2);

    const double mu = to_double(params.mu);
    const double alpha = to_double(params.alpha);
    const int d = spec.d;

    Complex norm = diagonal ? Complex(generic_norm_diag(spec, point.z), 0.0)
                            : generic_norm(spec, point.z, point2->z);
    Complex pairing = diagonal ? Complex(squared_norm(point.w), 0.0)
                               : hermitian_pairing(point.w, point2->w);
    Complex norm_mu = std::pow(norm, mu);
    Complex x = Complex(1.0, 0.0) - pairing / norm_mu;

    auto coeffs = term_coefficients(spec, params.mu, params.d0, params.alpha);
    Complex sum(0.0, 0.0);
    for (int k = 0; k <= d; ++k)
        sum += to_double(coeffs[static_cast<std::size_t>(k)]) *
               std::pow(x, -(alpha - d + k));
    return std::pow(norm, -mu * alpha) * sum;
}

double kernel_prefactor_via_volumes(const KernelParams& params) {
    const DomainSpec& spec = params.spec;
    const int d = spec.d;
    const int d0 = params.d0;
    // chi2 is the Hua polynomial of the fiber ball, chi2(0) = d0!.
    const double chi1_at_0 = to_double(hua_poly(spec)(Rational(0)));
    const double chi2_at_0 = to_double(Rational(factorial(static_cast<unsigned long>(d0))));
    const double vol_fiber = std::pow(std::numbers::pi, d0) / chi2_at_0;
    return std::pow(std::numbers::pi, d + d0) /
           (to_double(c_omega(spec)) * std::pow(to_double(params.mu), d) * chi1_at_0 *
            chi2_at_0 * volume(spec) * vol_fiber);
}

double epsilon(const KernelParams& params, const PointCH& point) {
    const DomainSpec& spec = params.spec;
    require_fiber(params, point);
    if (!is_interior(spec, params.mu, point))
        throw membership_error("epsilon: point is not interior");
    const double x = carrier_X(spec, params.mu, point);
    auto coeffs = term_coefficients(spec, params.mu, params.d0, params.alpha);
    double acc = 0.0;
    for (int k = 0; k <= spec.d; ++k)
        acc += to_double(coeffs[static_cast<std::size_t>(k)]) * std::pow(x, spec.d - k);
    return acc;
}

Rational epsilon_at_X(const DomainSpec& spec, const Rational& mu, int d0, const Rational& alpha,
                      const Rational& X) {
    auto coeffs = term_coefficients(spec, mu, d0, alpha);
    Rational acc(0);
    for (int k = 0; k <= spec.d; ++k)
        acc += coeffs[static_cast<std::size_t>(k)] * rational_pow(X, spec.d - k);
    return acc;
}

Rational EpsilonExpansion::eval(const Rational& alpha, const Rational& X) const {
    Rational acc(0);
    const int n = d + d0;
    for (int j = 0; j <= n; ++j)
        acc += coeffs[static_cast<std::size_t>(j)](X) * rational_pow(alpha, n - j);
    return acc;
}

double EpsilonExpansion::eval_double(double alpha, double X) const {
    double acc = 0.0;
    const int n = d + d0;
    for (int j = 0; j <= n; ++j)
        acc += coeffs[static_cast<std::size_t>(j)].eval_double(X) * std::pow(alpha, n - j);
    return acc;
}

EpsilonExpansion epsilon_coefficients(const DomainSpec& spec, const Rational& mu, int d0) {
    if (d0 < 1) throw std::invalid_argument("epsilon_coefficients: d0 must be positive");
    const int d = spec.d;
    const Rational mu_d = rational_pow(mu, d);
    auto dvals = difference_values(chi_tilde(spec, mu), Rational(d), static_cast<unsigned>(d));

    // Pochhammer coefficient tables: poch[k][i] is the alpha^i coefficient
    // of (alpha - d - d0)_{d0+k}.
    std::vector<std::vector<Rational>> poch(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) poch[static_cast<std::size_t>(k)] = alpha_expansion_coeffs(d, d0, k);

    std::vector<Rational> dk_over_fact(static_cast<std::size_t>(d) + 1);
    Rational kfact(1);
    for (int k = 0; k <= d; ++k) {
        if (k > 0) kfact *= k;
        dk_over_fact[static_cast<std::size_t>(k)] = dvals[static_cast<std::size_t>(k)] / kfact;
    }

    EpsilonExpansion expansion;
    expansion.mu = mu;
    expansion.d0 = d0;
    expansion.d = d;
    expansion.coeffs.resize(static_cast<std::size_t>(d + d0) + 1);
    for (int j = 0; j <= d + d0; ++j) {
        std::vector<Rational> poly_coeffs(static_cast<std::size_t>(std::min(j, d)) + 1, Rational(0));
        for (int k = std::max(d - j, 0); k <= d; ++k) {
            // alpha^{d+d0-j} coefficient of (alpha-d-d0)_{d0+k}.
            poly_coeffs[static_cast<std::size_t>(d - k)] =
                poch[static_cast<std::size_t>(k)][static_cast<std::size_t>(d + d0 - j)] / mu_d *
                dk_over_fact[static_cast<std::size_t>(k)];
        }
        expansion.coeffs[static_cast<std::size_t>(j)] = RationalPoly(std::move(poly_coeffs));
    }
    return expansion;
}

std::pair<RationalPoly, RationalPoly> a1_a2_closed(const DomainSpec& spec, const Rational& mu,
                                                   int d0) {
    const int d = spec.d;
    const int n = d + d0;
    const Rational mu_d = rational_pow(mu, d);
    auto dv = closed_D_values(spec, mu);

    RationalPoly a1{Rational(-n) * Rational(n + 1) / 2, dv.first / mu_d};

    RationalPoly a2;
    if (d >= 2) {
        Rational quad = *dv.second / mu_d;
        Rational lin = -dv.first / mu_d * (Rational(n) * Rational(n + 1) / 2 - 1);
        Rational cst =
            Rational(n - 1) * Rational(n) * Rational(n + 1) * Rational(3 * n + 2) / 24;
        a2 = RationalPoly{cst, lin, quad};
    } else {
        Rational lin = -(mu - 1) / mu * (Rational(1 + d0) * Rational(2 + d0) / 2 - 1);
        Rational cst =
            Rational(d0) * Rational(d0 + 1) * Rational(d0 + 2) * Rational(3 * d0 + 5) / 24;
        a2 = RationalPoly{cst, lin};
    }
    return {a1, a2};
}

double carrier_X(const DomainSpec& spec, const Rational& mu, const PointCH& point) {
    const double n_diag = generic_norm_diag(spec, point.z);
    return 1.0 - squared_norm(point.w) / std::pow(n_diag, to_double(mu));
}

}  // namespace hartogs
