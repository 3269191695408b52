#include "hartogs/verify.hpp"

#include <Eigen/Dense>
#include <boost/math/special_functions/legendre.hpp>

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "hartogs/algebra.hpp"

namespace hartogs {

namespace {

constexpr double kPi = std::numbers::pi;

struct GaussRule {
    std::vector<double> nodes;    // on [0, 1]
    std::vector<double> weights;  // sum to 1
};

// Gauss-Legendre rule mapped to [0,1]; nodes from the Legendre zeros,
// weights 2/((1-x^2) P_n'(x)^2).
GaussRule gauss_legendre_01(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre_01: need n >= 1");
    GaussRule rule;
    rule.nodes.reserve(static_cast<std::size_t>(n));
    rule.weights.reserve(static_cast<std::size_t>(n));
    auto positive = boost::math::legendre_p_zeros<double>(n);
    std::vector<double> zeros;
    for (auto it = positive.rbegin(); it != positive.rend(); ++it)
        if (*it > 0.0) zeros.push_back(-*it);
    if (n % 2 == 1) zeros.push_back(0.0);
    for (double x : positive)
        if (x > 0.0) zeros.push_back(x);
    for (double x : zeros) {
        double dp = boost::math::legendre_p_prime(n, x);
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes.push_back(0.5 * (x + 1.0));
        rule.weights.push_back(0.5 * w);
    }
    return rule;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// "3" for integers, "3/2" otherwise; check-name friendly
std::string q_label(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return rational_string(q);
}

std::string point_label(const PointCH& point) {
    std::ostringstream os;
    os.precision(3);
    os << "(";
    for (std::size_t i = 0; i < point.z.size(); ++i) {
        if (i) os << ",";
        os << point.z[i].real();
        if (point.z[i].imag() != 0.0) os << (point.z[i].imag() > 0 ? "+" : "") << point.z[i].imag() << "i";
    }
    os << ";";
    for (std::size_t i = 0; i < point.w.size(); ++i) {
        if (i) os << ",";
        os << point.w[i].real();
        if (point.w[i].imag() != 0.0) os << (point.w[i].imag() > 0 ? "+" : "") << point.w[i].imag() << "i";
    }
    os << ")";
    return os.str();
}

// ---- real-coordinate packing for finite differences ----

std::vector<double> pack_point(const PointCH& point) {
    std::vector<double> x;
    x.reserve(2 * (point.z.size() + point.w.size()));
    for (const auto& c : point.z) {
        x.push_back(c.real());
        x.push_back(c.imag());
    }
    for (const auto& c : point.w) {
        x.push_back(c.real());
        x.push_back(c.imag());
    }
    return x;
}

PointCH unpack_point(const std::vector<double>& x, std::size_t zn, std::size_t wn) {
    PointCH p;
    p.z.reserve(zn);
    p.w.reserve(wn);
    for (std::size_t i = 0; i < zn; ++i) p.z.emplace_back(x[2 * i], x[2 * i + 1]);
    for (std::size_t i = 0; i < wn; ++i)
        p.w.emplace_back(x[2 * zn + 2 * i], x[2 * zn + 2 * i + 1]);
    return p;
}

using RealFn = std::function<double(const std::vector<double>&)>;

double second_difference(const RealFn& f, std::vector<double> x, std::size_t u, std::size_t v,
                         double h) {
    if (u == v) {
        double x0 = x[u];
        x[u] = x0 + h;
        double fp = f(x);
        x[u] = x0 - h;
        double fm = f(x);
        x[u] = x0;
        double f0 = f(x);
        return (fp - 2.0 * f0 + fm) / (h * h);
    }
    double xu = x[u], xv = x[v];
    double acc = 0.0;
    for (int su : {+1, -1})
        for (int sv : {+1, -1}) {
            x[u] = xu + su * h;
            x[v] = xv + sv * h;
            acc += su * sv * f(x);
        }
    x[u] = xu;
    x[v] = xv;
    return acc / (4.0 * h * h);
}

// One Richardson extrapolation level over the O(h^2) central stencil.
double second_derivative(const RealFn& f, const std::vector<double>& x, std::size_t u,
                         std::size_t v, double h) {
    double coarse = second_difference(f, x, u, v, h);
    double fine = second_difference(f, x, u, v, h / 2.0);
    return (4.0 * fine - coarse) / 3.0;
}

// Complex Hessian d^2 f / dz_i dz_j-bar from the real one.
Eigen::MatrixXcd complex_hessian(const RealFn& f, const std::vector<double>& x, std::size_t n,
                                 double h) {
    Eigen::MatrixXcd out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double xx = second_derivative(f, x, 2 * i, 2 * j, h);
            double yy = second_derivative(f, x, 2 * i + 1, 2 * j + 1, h);
            double xy = second_derivative(f, x, 2 * i, 2 * j + 1, h);
            double yx = second_derivative(f, x, 2 * i + 1, 2 * j, h);
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                0.25 * Complex(xx + yy, xy - yx);
        }
    return out;
}

double interior_margin(const DomainSpec& spec, const Rational& mu, const PointCH& point) {
    if (!is_interior(spec, mu, point)) return -1.0;
    double n_diag = generic_norm_diag(spec, point.z);
    double fiber = std::pow(n_diag, to_double(mu)) - squared_norm(point.w);
    double base;
    if (spec.kind == DomainKind::TypeIV)
        base = std::min(1.0 - squared_norm(point.z), n_diag);
    else
        // the diagonal norm vanishes exactly on the base boundary
        base = n_diag;
    return std::min(fiber, base);
}

// ---- disk-base machinery (d = 1, d0 = 1) ----

void require_disk_base(const DomainSpec& spec, const char* what) {
    if (spec.kind != DomainKind::TypeI || spec.params[0] != 1 || spec.params[1] != 1)
        throw std::invalid_argument(std::string(what) + ": requires the disk base TypeI(1,1)");
}

void require_admissible(const KernelParams& params, const char* what) {
    if (!params.admissible())
        throw std::domain_error(std::string(what) + ": alpha is below the admissibility threshold");
}

// Monomial norms ||z^i w^j||^2 under the weighted inner product, by nested
// radial quadrature in t = |z|^2 and u = |w|^2 / N^mu:
//   norm(i,j) = mu * int int t^i (u N^mu)^j N^{mu alpha - 2} (1-u)^{alpha-3} dt du.
std::vector<std::vector<double>> monomial_norms(const Rational& mu_q, const Rational& alpha_q,
                                                int cutoff, int nodes) {
    const double mu = to_double(mu_q);
    const double alpha = to_double(alpha_q);
    GaussRule rule = gauss_legendre_01(nodes);
    std::vector<std::vector<double>> norms(static_cast<std::size_t>(cutoff) + 1,
                                           std::vector<double>(static_cast<std::size_t>(cutoff) + 1, 0.0));
    for (int it = 0; it < nodes; ++it) {
        const double t = rule.nodes[static_cast<std::size_t>(it)];
        const double wt = rule.weights[static_cast<std::size_t>(it)];
        const double n_mu = std::pow(1.0 - t, mu);
        const double outer = mu * wt * std::pow(1.0 - t, mu * alpha - 2.0);
        for (int iu = 0; iu < nodes; ++iu) {
            const double u = rule.nodes[static_cast<std::size_t>(iu)];
            const double base = outer * rule.weights[static_cast<std::size_t>(iu)] *
                                std::pow(1.0 - u, alpha - 3.0);
            double tp = 1.0;
            for (int i = 0; i <= cutoff; ++i) {
                double up = 1.0;
                const double row = base * tp;
                auto& norms_i = norms[static_cast<std::size_t>(i)];
                for (int j = 0; j <= cutoff; ++j) {
                    norms_i[static_cast<std::size_t>(j)] += row * up;
                    up *= u * n_mu;
                }
                tp *= t;
            }
        }
    }
    return norms;
}

double truncated_kernel_diag(const std::vector<std::vector<double>>& norms, const PointCH& point) {
    const double zz = std::norm(point.z[0]);
    const double ww = std::norm(point.w[0]);
    double acc = 0.0;
    double zp = 1.0;
    for (std::size_t i = 0; i < norms.size(); ++i) {
        double wp = 1.0;
        for (std::size_t j = 0; j < norms[i].size(); ++j) {
            acc += zp * wp / norms[i][j];
            wp *= ww;
        }
        zp *= zz;
    }
    return acc;
}

}  // namespace

double counter_uniform(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = splitmix64(seed ^ splitmix64(index));
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

CheckReport make_report(std::string name, double expected, double observed, double tolerance) {
    CheckReport r;
    r.name = std::move(name);
    r.expected = expected;
    r.observed = observed;
    r.tolerance = tolerance;
    r.passed = std::abs(observed - expected) <= tolerance * std::max(1.0, std::abs(expected));
    return r;
}

CheckReport hua_integral_check(const DomainSpec& spec, const Rational& s,
                               const QuadratureSpec& quad) {
    if (!spec.classical())
        throw unsupported_kind_error("hua_integral_check: exceptional domain " + spec.name());
    if (spec.d > 4)
        throw unsupported_kind_error("hua_integral_check: dimension " + std::to_string(spec.d) +
                                     " is beyond quadrature feasibility (d <= 4)");
    if (s <= -1) throw std::invalid_argument("hua_integral_check: requires s > -1");

    const double s_d = to_double(s);
    RationalPoly chi = hua_poly(spec);
    const double expected = to_double(chi(Rational(0)) / chi(s)) * volume(spec);

    std::ostringstream name;
    name << "hua-integral/" << spec.name() << "/s=" << q_label(s);

    double observed;
    double tolerance;
    if (quad.scheme == QuadScheme::TensorGauss) {
        const bool ball = spec.kind == DomainKind::TypeI && spec.params[0] == 1;
        if (!ball || spec.d > 2)
            throw unsupported_kind_error(
                "hua_integral_check: tensor-gauss supports only the rank-one balls with d <= 2");
        const int d = spec.d;
        GaussRule rule = gauss_legendre_01(quad.n);
        // Ball integral through the iterated simplex map:
        //   int_{sum t_i < 1} (1 - sum t)^s dt = prod_i int (1-u_i)^{s + d - i} du_i,
        // swept as a full tensor product.
        double acc = 0.0;
        if (d == 1) {
            for (int i = 0; i < quad.n; ++i)
                acc += rule.weights[static_cast<std::size_t>(i)] *
                       std::pow(1.0 - rule.nodes[static_cast<std::size_t>(i)], s_d);
        } else {
            for (int i = 0; i < quad.n; ++i)
                for (int j = 0; j < quad.n; ++j)
                    acc += rule.weights[static_cast<std::size_t>(i)] *
                           rule.weights[static_cast<std::size_t>(j)] *
                           std::pow(1.0 - rule.nodes[static_cast<std::size_t>(i)], s_d + 1.0) *
                           std::pow(1.0 - rule.nodes[static_cast<std::size_t>(j)], s_d);
        }
        observed = std::pow(kPi, d) * acc;
        tolerance = 1e-8;
    } else {
        const std::size_t dim = base_coordinate_count(spec);
        const std::uint64_t samples = static_cast<std::uint64_t>(quad.n);
        double acc = 0.0;
        ComplexVec z(dim);
        for (std::uint64_t i = 0; i < samples; ++i) {
            for (std::size_t c = 0; c < dim; ++c) {
                double re = -1.0 + 2.0 * counter_uniform(quad.seed, i * 2 * dim + 2 * c);
                double im = -1.0 + 2.0 * counter_uniform(quad.seed, i * 2 * dim + 2 * c + 1);
                z[c] = Complex(re, im);
            }
            if (!in_base_domain(spec, z)) continue;
            acc += std::pow(generic_norm_diag(spec, z), s_d);
        }
        observed = std::pow(4.0, static_cast<double>(dim)) * acc / static_cast<double>(samples);
        tolerance = 1e-2;
    }
    CheckReport report = make_report(name.str(), expected, observed, tolerance);
    report.expected_exact = "";
    return report;
}

std::vector<CheckReport> brute_force_epsilon(const DomainSpec& spec, const Rational& mu,
                                             const Rational& alpha,
                                             const std::vector<PointCH>& points,
                                             const QuadratureSpec& quad, int degree_cutoff) {
    require_disk_base(spec, "brute_force_epsilon");
    KernelParams params{spec, mu, 1, alpha};
    require_admissible(params, "brute_force_epsilon");

    auto norms = monomial_norms(mu, alpha, degree_cutoff, quad.n);
    const double mu_d = to_double(mu);
    const double alpha_d = to_double(alpha);

    std::vector<CheckReport> out;
    out.reserve(points.size());
    for (const auto& point : points) {
        if (!is_interior(spec, mu, point))
            throw membership_error("brute_force_epsilon: point is not interior");
        const double n_diag = 1.0 - std::norm(point.z[0]);
        const double weight = std::pow(std::pow(n_diag, mu_d) - std::norm(point.w[0]), alpha_d);
        const double observed = weight * truncated_kernel_diag(norms, point);
        const double expected = epsilon(params, point);
        std::ostringstream name;
        name << "brute-epsilon/mu=" << q_label(mu) << "/alpha=" << q_label(alpha)
             << "/" << point_label(point);
        out.push_back(make_report(name.str(), expected, observed, 1e-6));
    }
    return out;
}

CheckReport hessian_check(const DomainSpec& spec, const Rational& mu, int d0,
                          const PointCH& point) {
    if (!spec.classical())
        throw unsupported_kind_error("hessian_check: exceptional domain " + spec.name());
    const double h = 1e-4;
    if (interior_margin(spec, mu, point) < 10.0 * h)
        throw membership_error("hessian_check: point too close to the boundary (margin < 10h)");

    const std::size_t zn = point.z.size();
    const std::size_t wn = point.w.size();
    const std::size_t n = zn + wn;
    const double mu_d = to_double(mu);
    RealFn phi = [&](const std::vector<double>& x) {
        PointCH p = unpack_point(x, zn, wn);
        double norm = generic_norm_diag(spec, p.z);
        double arg = std::pow(norm, mu_d) - squared_norm(p.w);
        if (arg <= 0.0)
            throw membership_error("hessian_check: finite-difference sample left the domain");
        return -std::log(arg);
    };

    Eigen::MatrixXcd hess = complex_hessian(phi, pack_point(point), n, h);
    const double observed = hess.determinant().real();
    const double expected = metric_det(KernelParams{spec, mu, d0, Rational(0)}, point);

    std::ostringstream name;
    name << "hessian/" << spec.name() << "/mu=" << q_label(mu) << "/d0=" << d0 << "/"
         << point_label(point);
    return make_report(name.str(), expected, observed, 1e-5);
}

CheckReport c_omega_check(const DomainSpec& spec) {
    Rational closed = c_omega(spec);  // throws for exceptional kinds
    const std::size_t dim = base_coordinate_count(spec);
    RealFn neg_log_norm = [&](const std::vector<double>& x) {
        PointCH p = unpack_point(x, dim, 0);
        return -std::log(generic_norm_diag(spec, p.z));
    };
    std::vector<double> origin(2 * dim, 0.0);
    Eigen::MatrixXcd hess = complex_hessian(neg_log_norm, origin, dim, 1e-3);
    const double observed = hess.determinant().real();
    CheckReport report =
        make_report("c-omega/" + spec.name(), to_double(closed), observed, 1e-6);
    report.expected_exact = rational_string(closed);
    return report;
}

CheckReport operator_identity_check(const RationalPoly& phi, const Rational& n0,
                                    const Rational& z, int order) {
    if (phi.degree() > 5)
        throw std::invalid_argument("operator_identity_check: deg(phi) must be <= 5");
    if (order < phi.degree() + 10)
        throw std::invalid_argument("operator_identity_check: order must be >= deg(phi) + 10");
    const int deg = std::max(phi.degree(), 0);

    // D^k phi(-n0)/k! * (n0)_k for k = 0..deg(phi).
    std::vector<Rational> rhs_coeffs(static_cast<std::size_t>(deg) + 1);
    Rational kfact(1);
    for (int k = 0; k <= deg; ++k) {
        if (k > 0) kfact *= k;
        rhs_coeffs[static_cast<std::size_t>(k)] =
            finite_difference(phi, static_cast<unsigned>(k), -n0) / kfact *
            raising_factorial_at(n0, static_cast<unsigned>(k));
    }

    bool all_equal = true;
    double max_diff = 0.0;
    Rational zm(1);   // z^m
    Rational mfact(1);
    for (int m = 0; m <= order; ++m) {
        if (m > 0) {
            zm *= z;
            mfact *= m;
        }
        Rational lhs = phi(Rational(m)) * raising_factorial_at(n0, static_cast<unsigned>(m)) * zm / mfact;
        Rational rhs(0);
        for (int k = 0; k <= deg; ++k)
            rhs += rhs_coeffs[static_cast<std::size_t>(k)] *
                   raising_factorial_at(n0 + Rational(k), static_cast<unsigned>(m));
        rhs *= zm / mfact;
        if (lhs != rhs) {
            all_equal = false;
            max_diff = std::max(max_diff, std::abs(to_double(lhs - rhs)));
        }
    }

    std::ostringstream name;
    name << "operator-identity/phi=" << phi.pretty() << "/n0=" << q_label(n0)
         << "/order=" << order;
    CheckReport report;
    report.name = name.str();
    report.expected = 0.0;
    report.expected_exact = "0/1";
    report.observed = max_diff;
    report.tolerance = 0.0;
    report.passed = all_equal;
    return report;
}

CheckReport fk_rank1_check(const Rational& s, const Rational& normsq, int terms) {
    if (normsq < 0 || normsq > Rational(9, 10))
        throw std::invalid_argument("fk_rank1_check: normsq must lie in [0, 9/10]");
    Rational partial(0);
    Rational term(1);  // (s)_k t^k / k!
    for (int k = 0; k < terms; ++k) {
        partial += term;
        term *= (s + Rational(k)) * normsq / Rational(k + 1);
    }
    const double expected = std::pow(1.0 - to_double(normsq), -to_double(s));
    std::ostringstream name;
    name << "fk-rank1/s=" << q_label(s) << "/t=" << q_label(normsq)
         << "/terms=" << terms;
    return make_report(name.str(), expected, to_double(partial), 1e-8);
}

CheckReport reproducing_check(const DomainSpec& spec, const Rational& mu, const Rational& alpha,
                              const std::vector<Monomial>& f, const PointCH& point,
                              const QuadratureSpec& quad) {
    require_disk_base(spec, "reproducing_check");
    KernelParams params{spec, mu, 1, alpha};
    require_admissible(params, "reproducing_check");
    if (!is_interior(spec, mu, point))
        throw membership_error("reproducing_check: point is not interior");

    const double mu_d = to_double(mu);
    const double alpha_d = to_double(alpha);
    const Complex z0 = point.z[0];
    const Complex w0 = point.w[0];

    // Kernel coefficients D^k chi~(1)/k! (alpha-2)_{k+1} / mu, hoisted out
    // of the quadrature loop; the inline evaluation below is the closed
    // polarized kernel.
    auto dvals = difference_values(chi_tilde(spec, mu), Rational(1), 1);
    const double c0 =
        to_double(dvals[0] * raising_factorial_at(alpha - 2, 1) / mu);
    const double c1 =
        to_double(dvals[1] * raising_factorial_at(alpha - 2, 2) / mu);

    auto kernel_at = [&](Complex zeta, Complex omega) {
        Complex norm = Complex(1.0, 0.0) - zeta * std::conj(z0);
        Complex norm_mu = std::pow(norm, mu_d);
        Complex x = Complex(1.0, 0.0) - omega * std::conj(w0) / norm_mu;
        Complex sum = c0 * std::pow(x, -(alpha_d - 1.0)) + c1 * std::pow(x, -alpha_d);
        return std::pow(norm, -mu_d * alpha_d) * sum;
    };

    auto f_at = [&](Complex zeta, Complex omega) {
        Complex acc(0.0, 0.0);
        for (const auto& term : f)
            acc += term.coeff * std::pow(zeta, term.zdeg) * std::pow(omega, term.wdeg);
        return acc;
    };

    // the hoisted evaluation must agree with the library kernel
    {
        PointCH probe{{Complex(0.17, 0.05)}, {Complex(0.12, -0.08)}};
        Complex reference = bergman_kernel(params, probe, point);
        Complex inlined = kernel_at(probe.z[0], probe.w[0]);
        if (std::abs(reference - inlined) > 1e-10 * std::max(1.0, std::abs(reference)))
            throw std::logic_error("reproducing_check: kernel evaluation drifted");
    }

    const int n_rad = quad.n;
    const int n_ang = 2 * quad.n;
    GaussRule rule = gauss_legendre_01(n_rad);
    const double dtheta = 2.0 * kPi / n_ang;

    Complex integral(0.0, 0.0);
    for (int it = 0; it < n_rad; ++it) {
        const double t = rule.nodes[static_cast<std::size_t>(it)];
        const double n_mu = std::pow(1.0 - t, mu_d);
        const double rho = std::sqrt(t);
        const double outer =
            rule.weights[static_cast<std::size_t>(it)] * std::pow(1.0 - t, mu_d * alpha_d - 2.0);
        for (int iu = 0; iu < n_rad; ++iu) {
            const double u = rule.nodes[static_cast<std::size_t>(iu)];
            const double sigma = std::sqrt(u * n_mu);
            const double radial = outer * rule.weights[static_cast<std::size_t>(iu)] *
                                  std::pow(1.0 - u, alpha_d - 3.0);
            for (int ia = 0; ia < n_ang; ++ia) {
                const Complex zeta = std::polar(rho, ia * dtheta);
                for (int ib = 0; ib < n_ang; ++ib) {
                    const Complex omega = std::polar(sigma, ib * dtheta);
                    integral += radial * f_at(zeta, omega) * std::conj(kernel_at(zeta, omega));
                }
            }
        }
    }
    integral *= mu_d / (4.0 * kPi * kPi) * dtheta * dtheta;

    const Complex expected = f_at(z0, w0);
    std::ostringstream name;
    name << "reproducing/terms=" << f.size() << "/mu=" << q_label(mu)
         << "/alpha=" << q_label(alpha) << "/" << point_label(point);
    CheckReport report;
    report.name = name.str();
    report.expected = expected.real();
    report.observed = integral.real();
    report.tolerance = 1e-5;
    report.passed = std::abs(integral - expected) <= 1e-5 * std::max(1.0, std::abs(expected));
    return report;
}

std::vector<CheckReport> default_suite(std::uint64_t seed, int degree_cutoff) {
    std::vector<CheckReport> reports;
    auto disk = type_i(1, 1);
    auto ball2 = type_i(1, 2);

    QuadratureSpec tensor_disk{QuadScheme::TensorGauss, 200, seed};
    QuadratureSpec tensor_ball{QuadScheme::TensorGauss, 96, seed};
    QuadratureSpec mc{QuadScheme::MonteCarlo, 6000000, seed};

    reports.push_back(hua_integral_check(disk, Rational(0), tensor_disk));
    reports.push_back(hua_integral_check(disk, Rational(1), tensor_disk));
    reports.push_back(hua_integral_check(disk, Rational(3, 2), tensor_disk));
    reports.push_back(hua_integral_check(ball2, Rational(0), tensor_ball));
    reports.push_back(hua_integral_check(ball2, Rational(1), tensor_ball));
    reports.push_back(hua_integral_check(type_i(2, 2), Rational(1), mc));
    reports.push_back(hua_integral_check(type_iii(2), Rational(0), mc));
    reports.push_back(hua_integral_check(type_iii(2), Rational(1), mc));

    for (const auto& spec :
         {type_i(2, 2), type_ii(4), type_iii(2), type_iii(3), type_iv(5), type_iv(6)})
        reports.push_back(c_omega_check(spec));

    auto disk_pt = [](Complex z, Complex w) { return PointCH{{z}, {w}}; };
    reports.push_back(hessian_check(disk, Rational(1), 1, disk_pt({0, 0}, {0, 0})));
    reports.push_back(
        hessian_check(disk, Rational(1), 1, disk_pt({0, 0}, {std::sqrt(0.5), 0})));
    reports.push_back(
        hessian_check(disk, Rational(1), 1, disk_pt({std::sqrt(0.5), 0}, {0, 0})));
    reports.push_back(
        hessian_check(disk, Rational(2), 1, disk_pt({0.3, 0.2}, {0.4, 0.1})));
    PointCH p22{{Complex(0.25, 0.1), Complex(-0.2, 0.05), Complex(0.1, -0.15), Complex(0.05, 0.2)},
                {Complex(0.3, 0.1)}};
    reports.push_back(hessian_check(type_i(2, 2), Rational(1), 1, p22));
    PointCH p3{{Complex(0.2, 0.1), Complex(0.1, -0.1), Complex(-0.15, 0.05)},
               {Complex(0.2, 0.0), Complex(0.1, 0.1)}};
    reports.push_back(hessian_check(type_iii(2), Rational(1, 2), 2, p3));
    PointCH p4{{Complex(0.15, 0.05), Complex(0.1, 0.0), Complex(-0.05, 0.1), Complex(0.0, 0.05),
                Complex(0.1, -0.1)},
               {Complex(0.25, 0.0)}};
    reports.push_back(hessian_check(type_iv(5), Rational(1), 1, p4));
    PointCH p2{{Complex(0.2, 0.05), Complex(0.1, -0.1), Complex(-0.1, 0.1), Complex(0.05, 0.0),
                Complex(0.0, 0.15), Complex(0.1, 0.1)},
               {Complex(0.3, 0.0)}};
    reports.push_back(hessian_check(type_ii(4), Rational(3, 2), 1, p2));

    reports.push_back(
        operator_identity_check(RationalPoly::constant(Rational(1)), Rational(1), Rational(1, 3), 15));
    reports.push_back(
        operator_identity_check(RationalPoly::identity(), Rational(1), Rational(1, 2), 20));
    reports.push_back(operator_identity_check(RationalPoly{Rational(0), Rational(0), Rational(1)},
                                              Rational(2), Rational(2, 5), 25));
    reports.push_back(
        operator_identity_check(RationalPoly{Rational(1), Rational(-1), Rational(0), Rational(1)},
                                Rational(2), Rational(1, 4), 30));

    reports.push_back(fk_rank1_check(Rational(2), Rational(1, 4), 60));
    reports.push_back(fk_rank1_check(Rational(1), Rational(1, 2), 60));
    reports.push_back(fk_rank1_check(Rational(1, 2), Rational(1, 2), 60));
    reports.push_back(fk_rank1_check(Rational(3), Rational(3, 10), 60));

    QuadratureSpec brute{QuadScheme::TensorGauss, 80, seed};
    std::vector<PointCH> pts1 = {disk_pt({0, 0}, {0, 0}),
                                 disk_pt({0, 0}, {std::sqrt(0.5), 0}),
                                 disk_pt({0.5, 0}, {0.3, 0}),
                                 disk_pt({0.3, 0.4}, {0, 0.2}),
                                 disk_pt({0.6, 0}, {0.5, 0})};
    for (auto& r : brute_force_epsilon(disk, Rational(1), Rational(5), pts1, brute, degree_cutoff))
        reports.push_back(std::move(r));
    std::vector<PointCH> pts2 = {disk_pt({0, 0}, {0, 0}),
                                 disk_pt({0, 0}, {std::sqrt(0.5), 0}),
                                 disk_pt({0.5, 0}, {0.3, 0})};
    for (auto& r : brute_force_epsilon(disk, Rational(2), Rational(6), pts2, brute, degree_cutoff))
        reports.push_back(std::move(r));

    QuadratureSpec repro{QuadScheme::TensorGauss, 24, seed};
    reports.push_back(reproducing_check(disk, Rational(1), Rational(5), {Monomial{0, 0, {1, 0}}},
                                        disk_pt({0, 0}, {0, 0}), repro));
    reports.push_back(reproducing_check(disk, Rational(1), Rational(5), {Monomial{1, 0, {1, 0}}},
                                        disk_pt({0.3, 0}, {0, 0}), repro));
    reports.push_back(reproducing_check(disk, Rational(1), Rational(5), {Monomial{1, 1, {1, 0}}},
                                        disk_pt({0.2, 0}, {0.3, 0}), repro));
    return reports;
}

}  // namespace hartogs
