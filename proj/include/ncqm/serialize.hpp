#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "coadjoint.hpp"
#include "gauge.hpp"
#include "group.hpp"
#include "hermite.hpp"
#include "uir.hpp"
#include "weyl.hpp"

namespace ncqm {

/// Insertion-ordered JSON so identical inputs always serialize to identical
/// bytes.
using Json = nlohmann::ordered_json;

/// Exact scalars print as "p/q" (or "p"); floats as the shortest decimal that
/// round-trips; radicals in their evident textual form.
std::string scalar_str(const Rational& r);
std::string scalar_str(double v);
std::string scalar_str(const QSqrt& v);

/// Comma-separated scalar list, each entry "p/q" or a plain decimal. With
/// expect != 0 the length is enforced (invalid_argument otherwise).
std::vector<Rational> parse_rational_list(const std::string& csv, std::size_t expect = 0);
ExtensionParamsQ parse_extension_params(const std::string& csv);
GroupElementQ parse_group_element(const std::string& csv);
DualVectorQ parse_dual_vector(const std::string& csv);

Json to_json(const GroupElementQ& g);
Json to_json(const DualVectorQ& F);
Json to_json(const MasterUnknowns& u);

/// {"family", "params", "dimension", "representative"}.
Json orbit_to_json(const OrbitClass& c, const ExtensionParamsQ& ep);

/// List of {"mono":[a,b,c,d],"re":…,"im":…} in the canonical term order.
Json to_json(const WeylPolyX& p);
Json to_json(const WeylPolyD& p);

/// List of {"z":a,"zbar":b,"re":…,"im":…}.
Json to_json(const BiPoly& p);
Json to_json(const BiPolyD& p);

/// Row-major 16-entry list over the (Q1, P2, Q2, P1) ordering.
Json to_json(const Mat4Q& m);
Json to_json(const Mat4D& m);

/// CSV with header "rho,sigma,tau", decimal values, one point per row.
std::string points_to_csv(const std::vector<SurfacePoint>& pts);
Json points_to_json(const std::vector<SurfacePoint>& pts);

}  // namespace ncqm
