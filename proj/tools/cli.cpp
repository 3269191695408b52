#include "cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

#include "hartogs/algebra.hpp"
#include "hartogs/catalog.hpp"
#include "hartogs/classify.hpp"
#include "hartogs/kernel.hpp"
#include "hartogs/serialize.hpp"
#include "hartogs/verify.hpp"

namespace hartogs::cli {

namespace {

struct DomainFlags {
    std::string type;
    int m = 0;
    int n = 0;

    DomainSpec build() const {
        DomainKind kind = kind_from_name(type);
        switch (kind) {
            case DomainKind::TypeI:
                if (m < 1 || n < 1)
                    throw std::invalid_argument("--type I requires --m and --n");
                return make_domain(kind, {m, n});
            case DomainKind::TypeII:
            case DomainKind::TypeIII:
            case DomainKind::TypeIV:
                if (n < 1)
                    throw std::invalid_argument("--type " + type + " requires --n");
                return make_domain(kind, {n});
            default:
                return make_domain(kind, {});
        }
    }
};

void add_domain_flags(CLI::App* cmd, DomainFlags& flags, bool required = true) {
    auto* opt = cmd->add_option("--type", flags.type, "domain kind: I, II, III, IV, V16, VI27");
    if (required) opt->required();
    cmd->add_option("--m", flags.m, "rows for TypeI");
    cmd->add_option("--n", flags.n, "size parameter");
}

Rational mu_or_default(const std::string& mu_text, const DomainSpec& spec, bool& defaulted) {
    if (mu_text.empty()) {
        defaulted = true;
        return a1_constant_mu(spec);  // Kaehler-Einstein value p/(d+1)
    }
    defaulted = false;
    Rational mu = parse_rational(mu_text);
    if (mu <= 0) throw std::invalid_argument("--mu must be positive");
    return mu;
}

void print_invariants(std::ostream& out, const DomainSpec& spec, bool json) {
    if (json) {
        out << spec_to_json(spec).dump() << "\n";
        return;
    }
    out << spec.name() << ": r=" << spec.r << " a=" << spec.a << " b=" << spec.b
        << " d=" << spec.d << " p=" << spec.p << "\n";
}

int cmd_invariants(const DomainFlags& flags, bool json, std::ostream& out) {
    print_invariants(out, flags.build(), json);
    return 0;
}

int cmd_hua(const DomainFlags& flags, const std::string& mu_text, bool json, std::ostream& out) {
    DomainSpec spec = flags.build();
    RationalPoly chi = hua_poly(spec);
    if (json) {
        Json j;
        j["spec"] = spec_to_json(spec);
        j["chi"] = poly_to_json(chi);
        j["chi_at_0"] = rational_string(chi(Rational(0)));
        if (!mu_text.empty()) {
            Rational mu = parse_rational(mu_text);
            j["mu"] = rational_string(mu);
            j["chi_tilde"] = poly_to_json(chi_tilde(spec, mu));
        }
        out << j.dump() << "\n";
        return 0;
    }
    out << spec.name() << "\n";
    out << "  chi(s)  = " << chi.pretty("s") << "\n";
    out << "  chi(0)  = " << rational_string(chi(Rational(0))) << "\n";
    if (!mu_text.empty()) {
        Rational mu = parse_rational(mu_text);
        out << "  chi~(x) = " << chi_tilde(spec, mu).pretty("x") << "   (mu = "
            << rational_string(mu) << ")\n";
    }
    return 0;
}

int cmd_coeffs(const DomainFlags& flags, const std::string& mu_text, int d0, bool json,
               std::ostream& out) {
    DomainSpec spec = flags.build();
    bool mu_defaulted = false;
    Rational mu = mu_or_default(mu_text, spec, mu_defaulted);
    EpsilonExpansion expansion = epsilon_coefficients(spec, mu, d0);
    if (json) {
        Json j = expansion_to_json(expansion);
        j["spec"] = spec_to_json(spec);
        j["mu_defaulted"] = mu_defaulted;
        out << j.dump() << "\n";
        return 0;
    }
    out << spec.name() << ", mu = " << rational_string(mu) << (mu_defaulted ? " (default p/(d+1))" : "")
        << ", d0 = " << d0 << "\n";
    for (std::size_t j = 0; j < expansion.coeffs.size(); ++j)
        out << "  a_" << j << "(X) = " << expansion.coeffs[j].pretty("X") << "\n";
    return 0;
}

int cmd_epsilon(const DomainFlags& flags, const std::string& mu_text, int d0,
                const std::string& alpha_text, const std::string& point_text, bool json,
                std::ostream& out) {
    DomainSpec spec = flags.build();
    bool mu_defaulted = false;
    Rational mu = mu_or_default(mu_text, spec, mu_defaulted);
    if (alpha_text.empty()) throw std::invalid_argument("epsilon requires --alpha");
    Rational alpha = parse_rational(alpha_text);
    KernelParams params{spec, mu, d0, alpha};
    EpsilonExpansion expansion = epsilon_coefficients(spec, mu, d0);

    bool exact = point_text.empty();
    double x_value = 1.0;
    Rational value_exact;
    double value_double = 0.0;
    if (exact) {
        // No point given: evaluate at the origin, X = 1, exactly.
        value_exact = expansion.eval(alpha, Rational(1));
    } else {
        PointCH point = point_from_json(Json::parse(point_text));
        if (!is_interior(spec, mu, point))
            throw membership_error("--point is not interior to the Hartogs domain");
        x_value = carrier_X(spec, mu, point);
        value_double = expansion.eval_double(to_double(alpha), x_value);
    }

    if (json) {
        Json j;
        j["spec"] = spec_to_json(spec);
        j["mu"] = rational_string(mu);
        j["mu_defaulted"] = mu_defaulted;
        j["d0"] = d0;
        j["alpha"] = rational_string(alpha);
        j["admissible"] = params.admissible();
        j["X"] = exact ? Json("1/1") : Json(x_value);
        j["value"] = exact ? Json(rational_string(value_exact)) : Json(value_double);
        j["coeffs"] = expansion_to_json(expansion)["coeffs"];
        out << j.dump() << "\n";
        return 0;
    }
    out << spec.name() << ", mu = " << rational_string(mu) << ", d0 = " << d0
        << ", alpha = " << rational_string(alpha)
        << (params.admissible() ? "" : "  [inadmissible alpha]") << "\n";
    if (exact)
        out << "  epsilon(origin) = " << rational_string(value_exact) << " = "
            << to_double(value_exact) << "\n";
    else
        out << "  X = " << std::setprecision(17) << x_value << "\n  epsilon = " << value_double
            << "\n";
    return 0;
}

int cmd_classify(const DomainFlags& flags, const std::string& mu_text, int sweep_max_dim,
                 bool json, std::ostream& out) {
    std::vector<ClassificationVerdict> verdicts;
    if (!flags.type.empty()) {
        DomainSpec spec = flags.build();
        bool mu_defaulted = false;
        Rational mu = mu_or_default(mu_text, spec, mu_defaulted);
        verdicts.push_back(a2_constancy(spec, mu));
    } else {
        SweepRanges ranges;
        if (sweep_max_dim > 0) {
            ranges.max_dim = sweep_max_dim;
            // widen the families so the dimension cap is the only limit
            ranges.type_i_max_n = sweep_max_dim;
            while (ranges.type_ii_max_n * (ranges.type_ii_max_n - 1) / 2 <= sweep_max_dim)
                ++ranges.type_ii_max_n;
            while (ranges.type_iii_max_n * (ranges.type_iii_max_n + 1) / 2 <= sweep_max_dim)
                ++ranges.type_iii_max_n;
            ranges.type_iv_max_n = std::max(sweep_max_dim, ranges.type_iv_min_n);
        }
        verdicts = classify_sweep(ranges);
    }

    if (json) {
        for (const auto& v : verdicts) out << verdict_to_json(v).dump() << "\n";
    } else {
        out << std::left << std::setw(16) << "domain" << std::setw(8) << "d" << std::setw(10)
            << "mu" << std::setw(10) << "mu*" << std::setw(14) << "a2_constant" << "residual\n";
        for (const auto& v : verdicts)
            out << std::left << std::setw(16) << v.spec.name() << std::setw(8) << v.spec.d
                << std::setw(10) << rational_string(v.mu) << std::setw(10)
                << rational_string(v.mu_star) << std::setw(14)
                << (v.a2_constant ? "yes" : "no") << rational_string(v.residual) << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int degree_cutoff, bool json,
               std::ostream& out) {
    if (suite != "all") throw std::invalid_argument("unknown --suite '" + suite + "'");
    auto reports = default_suite(seed, degree_cutoff);
    bool all_passed = true;
    if (json) {
        Json arr = Json::array();
        for (const auto& r : reports) {
            arr.push_back(report_to_json(r));
            all_passed = all_passed && r.passed;
        }
        out << arr.dump() << "\n";
    } else {
        for (const auto& r : reports) {
            out << (r.passed ? "PASS " : "FAIL ") << r.name << "  expected=" << std::setprecision(12)
                << (r.expected_exact.empty() ? std::to_string(r.expected) : r.expected_exact)
                << " observed=" << r.observed << " tol=" << r.tolerance << "\n";
            all_passed = all_passed && r.passed;
        }
        out << (all_passed ? "all checks passed" : "SOME CHECKS FAILED") << " ("
            << reports.size() << " checks)\n";
    }
    return all_passed ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weighted Bergman kernels, epsilon-function expansions and a2-constancy "
                 "classification for Cartan-Hartogs domains"};
    app.require_subcommand(1);
    app.fallthrough();  // let --json appear after the subcommand

    bool json = false;
    app.add_flag("--json", json, "machine-readable JSON output");

    DomainFlags inv_flags;
    auto* inv = app.add_subcommand("invariants", "numerical invariants (r, a, b, d, p)");
    add_domain_flags(inv, inv_flags);

    DomainFlags hua_flags;
    std::string hua_mu;
    auto* hua = app.add_subcommand("hua", "Hua polynomial chi (and chi~ when --mu given)");
    add_domain_flags(hua, hua_flags);
    hua->add_option("--mu", hua_mu, "fiber exponent as 'p/q' or decimal");

    DomainFlags coeff_flags;
    std::string coeff_mu;
    int coeff_d0 = 1;
    auto* coeffs = app.add_subcommand("coeffs", "epsilon-expansion coefficients a_j(X)");
    add_domain_flags(coeffs, coeff_flags);
    coeffs->add_option("--mu", coeff_mu, "fiber exponent (default p/(d+1))");
    coeffs->add_option("--d0", coeff_d0, "fiber dimension")->check(CLI::PositiveNumber);

    DomainFlags eps_flags;
    std::string eps_mu, eps_alpha, eps_point;
    int eps_d0 = 1;
    auto* eps = app.add_subcommand("epsilon", "epsilon-function value at a point");
    add_domain_flags(eps, eps_flags);
    eps->add_option("--mu", eps_mu, "fiber exponent (default p/(d+1))");
    eps->add_option("--d0", eps_d0, "fiber dimension")->check(CLI::PositiveNumber);
    eps->add_option("--alpha", eps_alpha, "weight as 'p/q' or decimal")->required();
    eps->add_option("--point", eps_point, "point as JSON {\"z\": [[re,im],...], \"w\": [...]}");

    DomainFlags cls_flags;
    std::string cls_mu;
    int sweep_max_dim = 0;
    auto* cls = app.add_subcommand("classify", "a2-constancy verdicts");
    add_domain_flags(cls, cls_flags, /*required=*/false);
    cls->add_option("--mu", cls_mu, "fiber exponent (default p/(d+1))");
    cls->add_option("--sweep-max-dim", sweep_max_dim, "sweep all families up to dimension d");

    std::string suite = "all";
    std::uint64_t seed = 0;
    int degree_cutoff = 40;
    auto* ver = app.add_subcommand("verify", "run the verification suite");
    ver->add_option("--suite", suite, "which suite to run (all)");
    ver->add_option("--seed", seed, "seed for the Monte Carlo checks");
    ver->add_option("--degree-cutoff", degree_cutoff, "monomial degree cutoff for the brute-force kernel")
        ->check(CLI::PositiveNumber);

    std::vector<std::string> argv(args.rbegin(), args.rend());  // CLI11 wants reversed args
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (inv->parsed()) return cmd_invariants(inv_flags, json, out);
        if (hua->parsed()) return cmd_hua(hua_flags, hua_mu, json, out);
        if (coeffs->parsed()) return cmd_coeffs(coeff_flags, coeff_mu, coeff_d0, json, out);
        if (eps->parsed())
            return cmd_epsilon(eps_flags, eps_mu, eps_d0, eps_alpha, eps_point, json, out);
        if (cls->parsed()) return cmd_classify(cls_flags, cls_mu, sweep_max_dim, json, out);
        if (ver->parsed()) return cmd_verify(suite, seed, degree_cutoff, json, out);
    } catch (const Json::parse_error& e) {
        err << "error: malformed JSON argument: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand given\n";
    return 2;
}

}  // namespace hartogs::cli
