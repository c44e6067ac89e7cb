#include "dcover/serialize.hpp"

namespace dcover {

using nlohmann::json;

json integer_json(const Integer& v) {
  if (auto small = to_int64(v)) return *small;
  return v.str();
}

json rational_json(const Rational& r) {
  return {{"num", integer_json(numerator(r))},
          {"den", integer_json(denominator(r))},
          {"text", to_string(r)}};
}

json to_json(const DivisorClass& d) {
  json out{{"base", d.base().is_plane() ? "p2" : "fe"}, {"label", d.label()}};
  if (d.base().is_plane()) {
    out["d"] = integer_json(d.degree());
  } else {
    out["e"] = integer_json(d.base().e());
    out["alpha"] = integer_json(d.alpha());
    out["beta"] = integer_json(d.beta());
  }
  return out;
}

json to_json(const Polarization& p) {
  json out{{"base", p.base().is_plane() ? "p2" : "fe"}, {"label", p.label()}};
  if (p.base().is_plane()) {
    out["d"] = integer_json(p.hyperplane().degree());
  } else {
    out["e"] = integer_json(p.base().e());
    out["a"] = integer_json(p.hyperplane().alpha());
    out["b"] = integer_json(p.hyperplane().beta());
  }
  out["N"] = integer_json(p.ambient_dimension());
  return out;
}

json to_json(const CohomologyTable& t) {
  return {{"h0", integer_json(t.h0)},
          {"h1", integer_json(t.h1)},
          {"h2", integer_json(t.h2)},
          {"chi", integer_json(t.chi)}};
}

json to_json(const CoverInvariants& inv) {
  return {{"p_g", integer_json(inv.p_g)},     {"q", integer_json(inv.q)},
          {"chi", integer_json(inv.chi)},     {"c1_sq", integer_json(inv.c1_sq)},
          {"c2", integer_json(inv.c2)},       {"chern_ratio", rational_json(inv.chern_ratio)}};
}

json to_json(const AuditReport& report) {
  json conditions = json::array();
  for (const auto& c : report.conditions) {
    json checks = json::array();
    for (const auto& x : c.cohomology)
      checks.push_back({{"role", x.role},
                        {"class", to_json(x.divisor)},
                        {"group", group_name(x.group)},
                        {"table", to_json(x.table)},
                        {"required", integer_json(x.required)},
                        {"passed", x.passed}});
    json predicates = json::array();
    for (const auto& x : c.predicates)
      predicates.push_back({{"name", x.name}, {"class", to_json(x.divisor)}, {"value", x.value}});
    conditions.push_back({{"id", c.id},
                          {"description", c.description},
                          {"cohomology", checks},
                          {"predicates", predicates},
                          {"notes", c.notes},
                          {"passed", c.passed}});
  }
  return {{"polarization", to_json(report.polarization)},
          {"conditions", conditions},
          {"failing", report.failing_conditions()},
          {"verdict", report.verdict},
          {"notes", report.notes}};
}

json to_json(const GeographyPoint& pt) {
  json prov = json::array();
  for (const auto& p : pt.provenance) prov.push_back(to_json(p));
  return {{"x", integer_json(pt.x)}, {"y", integer_json(pt.y)}, {"provenance", prov}};
}

json to_json(const XiSearch& search) {
  json candidates = json::array();
  for (const auto& c : search.candidates) {
    json prov = json::array();
    for (const auto& p : c.provenance) prov.push_back(to_json(p));
    candidates.push_back({{"x_prime", integer_json(c.x_prime)},
                          {"y", integer_json(c.y)},
                          {"provenance", prov},
                          {"s_side_verified", c.s_side_verified}});
  }
  return {{"m", integer_json(search.m)},
          {"bound", integer_json(search.bound)},
          {"candidates", candidates}};
}

json to_json(const ExamplesReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"id", c.id},
                      {"description", c.description},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"passed", c.passed}});
  return {{"checks", checks}, {"all_passed", report.all_passed}};
}

json envelope(const std::string& command, json payload, const std::vector<std::string>& warnings) {
  return {{"version", kVersion},
          {"command", command},
          {"payload", std::move(payload)},
          {"warnings", warnings}};
}

}  // namespace dcover
