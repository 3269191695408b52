#include "hartogs/serialize.hpp"

namespace hartogs {

Json spec_to_json(const DomainSpec& spec) {
    Json j;
    j["kind"] = kind_name(spec.kind);
    j["params"] = spec.params;
    j["r"] = spec.r;
    j["a"] = spec.a;
    j["b"] = spec.b;
    j["d"] = spec.d;
    j["p"] = spec.p;
    return j;
}

DomainSpec spec_from_json(const Json& j) {
    return make_domain(kind_from_name(j.at("kind").get<std::string>()),
                       j.value("params", std::vector<int>{}));
}

Json poly_to_json(const RationalPoly& poly) {
    Json j = Json::array();
    for (const auto& s : poly.to_strings()) j.push_back(s);
    return j;
}

RationalPoly poly_from_json(const Json& j) {
    std::vector<std::string> parts;
    for (const auto& item : j) parts.push_back(item.get<std::string>());
    return RationalPoly::from_strings(parts);
}

Json expansion_to_json(const EpsilonExpansion& expansion) {
    Json j;
    j["mu"] = rational_string(expansion.mu);
    j["d0"] = expansion.d0;
    Json coeffs = Json::array();
    for (const auto& poly : expansion.coeffs) coeffs.push_back(poly_to_json(poly));
    j["coeffs"] = coeffs;
    return j;
}

EpsilonExpansion expansion_from_json(const Json& j) {
    EpsilonExpansion expansion;
    expansion.mu = parse_rational(j.at("mu").get<std::string>());
    expansion.d0 = j.at("d0").get<int>();
    for (const auto& item : j.at("coeffs")) expansion.coeffs.push_back(poly_from_json(item));
    // coeffs run j = 0..d+d0
    expansion.d = static_cast<int>(expansion.coeffs.size()) - 1 - expansion.d0;
    if (expansion.d < 1) throw std::invalid_argument("expansion_from_json: inconsistent d0/coeffs");
    return expansion;
}

Json verdict_to_json(const ClassificationVerdict& verdict) {
    Json j;
    j["spec"] = spec_to_json(verdict.spec);
    j["mu"] = rational_string(verdict.mu);
    j["mu_star"] = rational_string(verdict.mu_star);
    j["a1_constant_iff_mu"] = rational_string(verdict.a1_constant_iff_mu);
    j["a2_constant"] = verdict.a2_constant;
    j["residual"] = rational_string(verdict.residual);
    j["hyperbolic"] = verdict.hyperbolic;
    return j;
}

Json report_to_json(const CheckReport& report) {
    Json j;
    j["name"] = report.name;
    if (report.expected_exact.empty())
        j["expected"] = report.expected;
    else
        j["expected"] = report.expected_exact;
    j["observed"] = report.observed;
    j["tolerance"] = report.tolerance;
    j["passed"] = report.passed;
    return j;
}

namespace {

Complex complex_from_json(const Json& j) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2)
        return Complex(j[0].get<double>(), j[1].get<double>());
    throw std::invalid_argument("point coordinate must be a number or [re, im]");
}

}  // namespace

PointCH point_from_json(const Json& j) {
    PointCH point;
    for (const auto& item : j.at("z")) point.z.push_back(complex_from_json(item));
    if (j.contains("w"))
        for (const auto& item : j.at("w")) point.w.push_back(complex_from_json(item));
    return point;
}

Json point_to_json(const PointCH& point) {
    Json j;
    Json z = Json::array();
    for (const auto& c : point.z) z.push_back(Json::array({c.real(), c.imag()}));
    Json w = Json::array();
    for (const auto& c : point.w) w.push_back(Json::array({c.real(), c.imag()}));
    j["z"] = z;
    j["w"] = w;
    return j;
}

}  // namespace hartogs
