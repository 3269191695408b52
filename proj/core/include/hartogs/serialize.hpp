#ifndef HARTOGS_SERIALIZE_HPP
#define HARTOGS_SERIALIZE_HPP

#include <nlohmann/json.hpp>

#include "hartogs/catalog.hpp"
#include "hartogs/classify.hpp"
#include "hartogs/kernel.hpp"
#include "hartogs/polynomial.hpp"
#include "hartogs/verify.hpp"

namespace hartogs {

using Json = nlohmann::ordered_json;

/// {kind, params, r, a, b, d, p}
Json spec_to_json(const DomainSpec& spec);
DomainSpec spec_from_json(const Json& j);

/// Arrays of "num/den" strings, ascending degree.
Json poly_to_json(const RationalPoly& poly);
RationalPoly poly_from_json(const Json& j);

/// {mu, d0, coeffs: [[rational strings], ...]}
Json expansion_to_json(const EpsilonExpansion& expansion);
EpsilonExpansion expansion_from_json(const Json& j);

Json verdict_to_json(const ClassificationVerdict& verdict);

/// {name, expected (number, or "num/den" when exact), observed, tolerance, passed}
Json report_to_json(const CheckReport& report);

/// {"z": [[re, im], ...], "w": [[re, im], ...]}; bare numbers are accepted
/// as real coordinates.
PointCH point_from_json(const Json& j);
Json point_to_json(const PointCH& point);

}  // namespace hartogs

#endif
