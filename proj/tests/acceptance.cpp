// Acceptance suite: runs every published-identity criterion end to end and
// prints one PASS/FAIL line per criterion. Exit code 0 only if all pass.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <vector>

#include "hartogs/algebra.hpp"
#include "hartogs/catalog.hpp"
#include "hartogs/classify.hpp"
#include "hartogs/kernel.hpp"
#include "hartogs/verify.hpp"

using namespace hartogs;

namespace {

struct Criterion {
    std::string label;
    std::function<bool(std::string&)> body;
    double time_limit_s;  // 0 = unlimited
};

std::vector<DomainSpec> classical_catalog(int max_d) {
    std::vector<DomainSpec> out;
    for (int m = 1; m * m <= max_d; ++m)
        for (int n = m; m * n <= max_d; ++n) out.push_back(type_i(m, n));
    for (int n = 4; n * (n - 1) / 2 <= max_d; ++n) out.push_back(type_ii(n));
    for (int n = 2; n * (n + 1) / 2 <= max_d; ++n) out.push_back(type_iii(n));
    for (int n = 5; n <= max_d; ++n) out.push_back(type_iv(n));
    return out;
}

std::vector<Rational> mu_values(const DomainSpec& spec) {
    return {Rational(1, 2), Rational(1), Rational(4, 5), Rational(spec.p) / Rational(spec.d + 1)};
}

PointCH disk_pt(Complex z, Complex w) { return PointCH{{z}, {w}}; }

bool criterion1(std::string& detail) {
    for (const auto& spec : classical_catalog(60)) {
        RationalPoly chi = hua_poly(spec);
        const int d = spec.d;
        const Rational fact1(factorial(static_cast<unsigned long>(d - 1)));
        const Rational fact2 = d >= 2 ? Rational(factorial(static_cast<unsigned long>(d - 2))) : Rational(1);
        for (const auto& mu : mu_values(spec)) {
            RationalPoly ct = chi.compose_linear(mu, Rational(-spec.p));
            auto closed = closed_D_values(spec, mu);
            Rational direct1 = finite_difference(ct, static_cast<unsigned>(d - 1), Rational(d)) / fact1;
            if (closed.first != direct1) {
                detail = spec.name() + " first difference mismatch";
                return false;
            }
            if (d >= 2) {
                Rational direct2 =
                    finite_difference(ct, static_cast<unsigned>(d - 2), Rational(d)) / fact2;
                if (closed.second.value() != direct2) {
                    detail = spec.name() + " second difference mismatch";
                    return false;
                }
            }
        }
    }
    return true;
}

bool criterion2(std::string& detail) {
    auto c22 = closed_c0c1c2(type_i(2, 2), Rational(1));
    if (c22.c0 != 1 || c22.c1 != -8 || c22.c2.value() != 23) {
        detail = "hand-verified TypeI(2,2) coefficients wrong";
        return false;
    }
    for (const auto& spec : classical_catalog(60)) {
        RationalPoly chi = hua_poly(spec);
        const auto dd = static_cast<std::size_t>(spec.d);
        for (const auto& mu : mu_values(spec)) {
            RationalPoly ct = chi.compose_linear(mu, Rational(-spec.p));
            auto closed = closed_c0c1c2(spec, mu);
            if (closed.c0 != ct.coeff(dd) || closed.c1 != ct.coeff(dd - 1) ||
                (spec.d >= 2 && closed.c2.value() != ct.coeff(dd - 2))) {
                detail = spec.name() + " top-coefficient mismatch";
                return false;
            }
        }
    }
    return true;
}

bool criterion3(std::string& detail) {
    for (int d = 1; d <= 20; ++d) {
        RationalPoly xd = RationalPoly::monomial(Rational(1), static_cast<std::size_t>(d));
        if (difference_power_A(d) != difference_poly(xd, static_cast<unsigned>(d - 1))) {
            detail = "A_" + std::to_string(d) + " mismatch";
            return false;
        }
        if (d >= 2 && difference_power_B(d) != difference_poly(xd, static_cast<unsigned>(d - 2))) {
            detail = "B_" + std::to_string(d) + " mismatch";
            return false;
        }
        Rational dfact(factorial(static_cast<unsigned long>(d)));
        if (d >= 2 && difference_power_A(d) !=
                          Rational(d) * difference_power_A(d - 1) -
                              RationalPoly::constant(dfact / 2)) {
            detail = "A recurrence fails at d=" + std::to_string(d);
            return false;
        }
        if (d >= 3 && difference_power_B(d) !=
                          Rational(d) * difference_power_B(d - 1) -
                              Rational(d) * Rational(d - 1) / 2 * difference_power_A(d - 2) +
                              RationalPoly::constant(dfact / 6)) {
            detail = "B recurrence fails at d=" + std::to_string(d);
            return false;
        }
    }
    return true;
}

bool criterion4(std::string& detail) {
    std::vector<DomainSpec> specs = classical_catalog(16);
    specs.push_back(make_domain(DomainKind::TypeV16));
    specs.push_back(make_domain(DomainKind::TypeVI27));
    for (const auto& spec : specs) {
        for (const auto& mu : {Rational(1), Rational(1, 2), Rational(Rational(spec.p) / Rational(spec.d + 1))}) {
            const int d0 = 1 + static_cast<int>(spec.d % 2);
            auto expansion = epsilon_coefficients(spec, mu, d0);
            if (!(expansion.coeffs[0] == RationalPoly::constant(Rational(1)))) {
                detail = spec.name() + " a0 != 1";
                return false;
            }
            auto [a1, a2] = a1_a2_closed(spec, mu, d0);
            if (!(expansion.coeffs[1] == a1) || !(expansion.coeffs[2] == a2)) {
                detail = spec.name() + " closed a1/a2 mismatch";
                return false;
            }
            for (std::uint64_t t = 0; t < 20; ++t) {
                Rational alpha =
                    Rational(1 + static_cast<long>(counter_uniform(5, 80 * t) * 40)) / 3 + spec.d;
                Rational x = Rational(1 + static_cast<long>(counter_uniform(9, 80 * t + 1) * 11)) /
                             Rational(1 + static_cast<long>(counter_uniform(13, 80 * t + 2) * 7));
                if (expansion.eval(alpha, x) != epsilon_at_X(spec, mu, d0, alpha, x)) {
                    detail = spec.name() + " expansion/epsilon mismatch";
                    return false;
                }
            }
        }
    }
    return true;
}

bool criterion5(std::string& detail) {
    SweepRanges ranges;  // TypeI m<=n<=6, TypeII 4..9, TypeIII 2..6, TypeIV 5..10 + exceptional
    auto verdicts = classify_sweep(ranges);
    for (const auto& v : verdicts) {
        bool should_be_constant = v.spec.kind == DomainKind::TypeI && v.spec.params[0] == 1;
        if (v.a2_constant != should_be_constant) {
            detail = v.spec.name() + " wrong constancy verdict";
            return false;
        }
        if (v.spec.classical()) {
            auto factored = factored_residual(v.spec);
            if (!factored || v.residual != *factored) {
                detail = v.spec.name() + " residual does not match the factored form";
                return false;
            }
        }
    }
    auto v22 = a2_constancy(type_i(2, 2), Rational(4, 5));
    auto v45 = a2_constancy(type_iv(5), Rational(5, 6));
    if (v22.residual != 72 || v45.residual != 140) {
        detail = "hand-verified residuals wrong";
        return false;
    }
    return true;
}

bool criterion6(std::string& detail) {
    for (int d = 1; d <= 4; ++d)
        for (int d0 = 1; d0 <= 3; ++d0) {
            auto spec = type_i(1, d);
            Rational alpha = Rational(4 * (d + d0) + 1) / 4;
            Rational expected(1);
            for (int j = 1; j <= d + d0; ++j) expected *= alpha - j;
            for (int t = 0; t < 10; ++t) {
                // rational interior point: coordinates with small rational parts
                Rational zsq(0);
                for (int i = 0; i < d; ++i) {
                    Rational re = Rational(1 + (t + i) % 5) / 10;
                    Rational im = Rational(1 + (t + 2 * i) % 3) / 12;
                    zsq += re * re + im * im;
                }
                Rational n = Rational(1) - zsq;  // generic norm of the ball, exactly
                if (n <= 0) {
                    detail = "sample point left the ball";
                    return false;
                }
                Rational wsq = Rational(1 + t % 7) / 9 * n / 2;
                Rational x = Rational(1) - wsq / n;  // mu = 1
                if (epsilon_at_X(spec, Rational(1), d0, alpha, x) != expected) {
                    detail = "epsilon not constant on the hyperbolic ball d=" + std::to_string(d);
                    return false;
                }
            }
        }
    return true;
}

bool criterion7(std::string& detail) {
    auto disk = type_i(1, 1);
    QuadratureSpec quad{QuadScheme::TensorGauss, 80, 0};
    std::vector<PointCH> pts = {disk_pt({0, 0}, {0, 0}),
                                disk_pt({0, 0}, {std::sqrt(0.5), 0}),
                                disk_pt({0.5, 0}, {0.3, 0}),
                                disk_pt({0.3, 0.4}, {0, 0.2}),
                                disk_pt({0.6, 0}, {0.5, 0})};
    for (const auto& r : brute_force_epsilon(disk, Rational(1), Rational(5), pts, quad)) {
        if (!r.passed || std::abs(r.expected - 12.0) > 1e-9) {
            detail = r.name + " failed (expected 12)";
            return false;
        }
    }
    std::vector<PointCH> pts2 = {disk_pt({0, 0}, {0, 0}), disk_pt({0, 0}, {std::sqrt(0.5), 0}),
                                 disk_pt({0.4, 0}, {0.2, 0}), disk_pt({0.2, 0.2}, {0.3, 0}),
                                 disk_pt({0.5, 0}, {0.1, 0.1})};
    auto reports = brute_force_epsilon(disk, Rational(2), Rational(6), pts2, quad);
    if (std::abs(reports[0].expected - 22.0) > 1e-9 || std::abs(reports[1].expected - 21.0) > 1e-9) {
        detail = "mu=2 closed values are not 22/21 at X=1, 1/2";
        return false;
    }
    for (const auto& r : reports)
        if (!r.passed) {
            detail = r.name + " failed";
            return false;
        }
    return true;
}

bool criterion8(std::string& detail) {
    auto disk = type_i(1, 1);
    std::vector<PointCH> disk_pts = {disk_pt({0, 0}, {0, 0}),
                                     disk_pt({0, 0}, {std::sqrt(0.5), 0}),
                                     disk_pt({std::sqrt(0.5), 0}, {0, 0}),
                                     disk_pt({0.3, 0.2}, {0.4, 0.1}),
                                     disk_pt({-0.25, 0.35}, {0.2, -0.3})};
    for (const auto& pt : disk_pts) {
        auto r = hessian_check(disk, Rational(1), 1, pt);
        if (!r.passed) {
            detail = r.name + " failed";
            return false;
        }
    }
    std::vector<PointCH> pts22 = {
        PointCH{{Complex(0, 0), Complex(0, 0), Complex(0, 0), Complex(0, 0)}, {Complex(0, 0)}},
        PointCH{{Complex(0.25, 0.1), Complex(-0.2, 0.05), Complex(0.1, -0.15), Complex(0.05, 0.2)},
                {Complex(0.3, 0.1)}},
        PointCH{{Complex(0.3, 0), Complex(0.1, 0.1), Complex(-0.1, 0.2), Complex(0, -0.25)},
                {Complex(0, 0.35)}},
        PointCH{{Complex(0.15, -0.1), Complex(0.05, 0.05), Complex(0.2, 0.1), Complex(-0.15, 0)},
                {Complex(0.25, 0.25)}},
        PointCH{{Complex(0.1, 0.1), Complex(0.1, -0.1), Complex(-0.1, 0.1), Complex(0.1, 0.1)},
                {Complex(0.45, 0)}}};
    for (const auto& pt : pts22) {
        auto r = hessian_check(type_i(2, 2), Rational(1), 1, pt);
        if (!r.passed) {
            detail = r.name + " failed";
            return false;
        }
    }
    return true;
}

bool criterion9(std::string& detail) {
    QuadratureSpec tensor{QuadScheme::TensorGauss, 200, 0};
    auto disk = type_i(1, 1);
    for (const auto& s : {Rational(0), Rational(1), Rational(3, 2)}) {
        auto r = hua_integral_check(disk, s, tensor);
        if (!r.passed) {
            detail = r.name + " failed";
            return false;
        }
    }
    QuadratureSpec tensor2{QuadScheme::TensorGauss, 96, 0};
    auto ball2 = type_i(1, 2);
    for (const auto& s : {Rational(0), Rational(1)}) {
        auto r = hua_integral_check(ball2, s, tensor2);
        if (!r.passed) {
            detail = r.name + " failed";
            return false;
        }
    }
    return true;
}

bool criterion10(std::string& detail) {
    RationalPoly x = RationalPoly::identity();
    std::vector<RationalPoly> phis = {RationalPoly::constant(Rational(1)), x, x * x, x * x * x,
                                      x * x * x - x + RationalPoly::constant(Rational(1))};
    for (const auto& phi : phis)
        for (const auto& n0 : {Rational(1), Rational(2)}) {
            auto r = operator_identity_check(phi, n0, Rational(1, 3), 30);
            if (!r.passed) {
                detail = r.name + " failed";
                return false;
            }
        }
    return true;
}

bool criterion11(std::string& detail) {
    for (int k = 0; k <= 12; ++k) {
        RationalPoly rhs;
        for (const auto& lambda : partitions(k, std::max(k, 1)))
            rhs += RationalPoly::monomial(Rational(factorial(static_cast<unsigned long>(k))) /
                                              Rational(lambda.symmetry_factor()),
                                          static_cast<std::size_t>(lambda.length()));
        if (!(raising_factorial(Rational(0), static_cast<unsigned>(k)) == rhs)) {
            detail = "partition identity fails at k=" + std::to_string(k);
            return false;
        }
    }
    for (const auto& s : {Rational(1, 2), Rational(1), Rational(2), Rational(3), Rational(7, 3)})
        for (const auto& t : {Rational(1, 10), Rational(1, 4), Rational(1, 2)}) {
            auto r = fk_rank1_check(s, t, 60);
            if (!r.passed) {
                detail = r.name + " failed";
                return false;
            }
        }
    return true;
}

bool criterion12(std::string& detail) {
    std::vector<DomainSpec> specs = classical_catalog(64);
    specs.push_back(make_domain(DomainKind::TypeV16));
    specs.push_back(make_domain(DomainKind::TypeVI27));
    for (const auto& spec : specs) {
        if (spec.d != spec.r * (spec.r - 1) / 2 * spec.a + spec.r * spec.b + spec.r ||
            spec.p != (spec.r - 1) * spec.a + spec.b + 2) {
            detail = spec.name() + " violates the structural identities";
            return false;
        }
    }
    for (const auto& spec : {type_i(1, 1), type_i(2, 2), type_ii(4), type_ii(5), type_iii(2),
                             type_iii(3), type_iv(5), type_iv(6)}) {
        auto r = c_omega_check(spec);
        if (!r.passed) {
            detail = r.name + " failed";
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"1 closed difference values vs direct differences (d<=60, 4 mu)", criterion1, 5.0},
        {"2 closed c0,c1,c2 vs expanded chi~ (d<=60, 4 mu)", criterion2, 5.0},
        {"3 A_d/B_d closed forms and recurrences (d<=20)", criterion3, 0.0},
        {"4 expansion reproduces epsilon; a0=1; closed a1,a2", criterion4, 0.0},
        {"5 classification sweep and factored residuals", criterion5, 5.0},
        {"6 hyperbolic constancy on rank-one balls", criterion6, 0.0},
        {"7 brute-force monomial kernel oracle (disk)", criterion7, 30.0},
        {"8 numerical Hessian vs metric determinant", criterion8, 10.0},
        {"9 Hua integral quadrature (disk, 2-ball)", criterion9, 5.0},
        {"10 operator identity series check", criterion10, 0.0},
        {"11 partition identity and rank-one expansion", criterion11, 0.0},
        {"12 structural invariants and C_Omega oracles", criterion12, 0.0},
    };

    bool all_passed = true;
    for (auto& criterion : criteria) {
        std::string detail;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criterion.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criterion.time_limit_s > 0 && elapsed > criterion.time_limit_s) {
            ok = false;
            if (detail.empty())
                detail = "time limit exceeded (" + std::to_string(criterion.time_limit_s) + "s)";
        }
        std::ostringstream line;
        line << (ok ? "PASS" : "FAIL") << " criterion " << criterion.label << " ["
             << static_cast<int>(elapsed * 1000) << " ms]";
        if (!ok && !detail.empty()) line << " -- " << detail;
        std::cout << line.str() << "\n";
        all_passed = all_passed && ok;
    }
    std::cout << (all_passed ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES present")
              << std::endl;
    return all_passed ? 0 : 1;
}
