#include "mahler/serialize.hpp"

namespace mahler {

using nlohmann::json;

RegionSummary summarize(const RegionModel& m, bool family) {
  RegionSummary s;
  s.a = m.a;
  s.b = m.b;
  s.n_angles = m.n_angles;
  s.raster_res = m.raster_res;
  s.half_width = m.half_width;
  s.max_modulus = m.max_modulus;
  s.bounded_components = m.bounded_count();
  s.components = m.components;
  if (family) {
    s.extremes = family_extremes(m.a, m.b);
    s.conditions = ellipse_conditions(m.a, m.b);
  }
  return s;
}

void to_json(json& j, const GridSpec& v) {
  j = json{{"nodes_per_dim", v.nodes_per_dim},
           {"refinement_levels", v.refinement_levels},
           {"singular_threshold", v.singular_threshold}};
}
void from_json(const json& j, GridSpec& v) {
  j.at("nodes_per_dim").get_to(v.nodes_per_dim);
  j.at("refinement_levels").get_to(v.refinement_levels);
  j.at("singular_threshold").get_to(v.singular_threshold);
}

void to_json(json& j, const QuadResult& v) {
  j = json{{"value", v.value},
           {"est_error", v.est_error},
           {"nodes_used", v.nodes_used},
           {"skipped_nodes", v.skipped_nodes},
           {"refined_nodes", v.refined_nodes},
           {"low_confidence", v.low_confidence}};
}
void from_json(const json& j, QuadResult& v) {
  j.at("value").get_to(v.value);
  j.at("est_error").get_to(v.est_error);
  j.at("nodes_used").get_to(v.nodes_used);
  j.at("skipped_nodes").get_to(v.skipped_nodes);
  j.at("refined_nodes").get_to(v.refined_nodes);
  j.at("low_confidence").get_to(v.low_confidence);
}

void to_json(json& j, const MeasureResult& v) {
  j = json{{"value", v.value},
           {"est_error", v.est_error},
           {"method", to_string(v.method)},
           {"terms", v.terms},
           {"quad", v.quad ? json(*v.quad) : json(nullptr)}};
}
void from_json(const json& j, MeasureResult& v) {
  j.at("value").get_to(v.value);
  j.at("est_error").get_to(v.est_error);
  v.method = method_from_string(j.at("method").get<std::string>());
  j.at("terms").get_to(v.terms);
  if (j.contains("quad") && !j.at("quad").is_null()) {
    v.quad = j.at("quad").get<QuadResult>();
  } else {
    v.quad.reset();
  }
}

void to_json(json& j, const IndexCount& v) {
  j = json{{"nu", v.nu}, {"raw", v.raw}, {"residual", v.residual}};
}
void from_json(const json& j, IndexCount& v) {
  j.at("nu").get_to(v.nu);
  j.at("raw").get_to(v.raw);
  j.at("residual").get_to(v.residual);
}

void to_json(json& j, const RhoReport& v) {
  j = json{{"role", to_string(v.role)},
           {"counts", v.counts},
           {"flagged", v.flagged},
           {"constant", v.constant},
           {"count", v.count}};
}
void from_json(const json& j, RhoReport& v) {
  v.role = role_from_string(j.at("role").get<std::string>());
  j.at("counts").get_to(v.counts);
  j.at("flagged").get_to(v.flagged);
  j.at("constant").get_to(v.constant);
  j.at("count").get_to(v.count);
}

void to_json(json& j, const RegionComponent& v) {
  j = json{{"bounded", v.bounded},
           {"representative", v.representative},
           {"pixels", v.pixels},
           {"clearance", v.clearance}};
}
void from_json(const json& j, RegionComponent& v) {
  j.at("bounded").get_to(v.bounded);
  j.at("representative").get_to(v.representative);
  j.at("pixels").get_to(v.pixels);
  j.at("clearance").get_to(v.clearance);
}

void to_json(json& j, const FamilyExtremes& v) {
  j = json{{"r_max", v.r_max}, {"r_min", v.r_min}, {"im_max", v.im_max}};
}
void from_json(const json& j, FamilyExtremes& v) {
  j.at("r_max").get_to(v.r_max);
  j.at("r_min").get_to(v.r_min);
  j.at("im_max").get_to(v.im_max);
}

void to_json(json& j, const EllipseConditions& v) {
  j = json{{"outer_ok", v.outer_ok},
           {"inner_ok", v.inner_ok},
           {"inner_defined", v.inner_defined},
           {"x", v.x},
           {"y", v.y}};
}
void from_json(const json& j, EllipseConditions& v) {
  j.at("outer_ok").get_to(v.outer_ok);
  j.at("inner_ok").get_to(v.inner_ok);
  j.at("inner_defined").get_to(v.inner_defined);
  j.at("x").get_to(v.x);
  j.at("y").get_to(v.y);
}

void to_json(json& j, const RegionSummary& v) {
  j = json{{"a", v.a},
           {"b", v.b},
           {"n_angles", v.n_angles},
           {"raster_res", v.raster_res},
           {"half_width", v.half_width},
           {"max_modulus", v.max_modulus},
           {"bounded_components", v.bounded_components},
           {"components", v.components},
           {"extremes", v.extremes ? json(*v.extremes) : json(nullptr)},
           {"conditions", v.conditions ? json(*v.conditions) : json(nullptr)}};
}
void from_json(const json& j, RegionSummary& v) {
  j.at("a").get_to(v.a);
  j.at("b").get_to(v.b);
  j.at("n_angles").get_to(v.n_angles);
  j.at("raster_res").get_to(v.raster_res);
  j.at("half_width").get_to(v.half_width);
  j.at("max_modulus").get_to(v.max_modulus);
  j.at("bounded_components").get_to(v.bounded_components);
  j.at("components").get_to(v.components);
  v.extremes.reset();
  v.conditions.reset();
  if (!j.at("extremes").is_null()) v.extremes = j.at("extremes").get<FamilyExtremes>();
  if (!j.at("conditions").is_null()) v.conditions = j.at("conditions").get<EllipseConditions>();
}

void to_json(json& j, const RelationReport& v) {
  j = json{{"lhs", v.lhs},
           {"rhs_base", v.rhs_base},
           {"nu", v.nu},
           {"nu_detail", v.nu_detail},
           {"rhs", v.rhs},
           {"discrepancy", v.discrepancy},
           {"tol", v.tol},
           {"pass", v.pass}};
}
void from_json(const json& j, RelationReport& v) {
  j.at("lhs").get_to(v.lhs);
  j.at("rhs_base").get_to(v.rhs_base);
  j.at("nu").get_to(v.nu);
  j.at("nu_detail").get_to(v.nu_detail);
  j.at("rhs").get_to(v.rhs);
  j.at("discrepancy").get_to(v.discrepancy);
  j.at("tol").get_to(v.tol);
  j.at("pass").get_to(v.pass);
}

void to_json(json& j, const BoundedValue& v) {
  j = json{{"value", v.value},
           {"branch", to_string(v.branch)},
           {"nu", v.nu},
           {"role", to_string(v.role)},
           {"coefficient_measure", v.coefficient_measure}};
}
void from_json(const json& j, BoundedValue& v) {
  j.at("value").get_to(v.value);
  v.branch = j.at("branch").get<std::string>() == "leading" ? CoefficientBranch::Leading
                                                            : CoefficientBranch::Constant;
  j.at("nu").get_to(v.nu);
  v.role = role_from_string(j.at("role").get<std::string>());
  j.at("coefficient_measure").get_to(v.coefficient_measure);
}

void to_json(json& j, const SeriesCoeffs& v) { j = json{{"N", v.N}, {"coeffs", v.coeffs}}; }
void from_json(const json& j, SeriesCoeffs& v) {
  j.at("N").get_to(v.N);
  j.at("coeffs").get_to(v.coeffs);
}

void to_json(json& j, const SeriesResult& v) {
  j = json{{"value", v.value},
           {"terms", v.terms},
           {"radius_bound", v.radius_bound},
           {"tail_bound", v.tail_bound},
           {"coeffs", v.coeffs}};
}
void from_json(const json& j, SeriesResult& v) {
  j.at("value").get_to(v.value);
  j.at("terms").get_to(v.terms);
  j.at("radius_bound").get_to(v.radius_bound);
  j.at("tail_bound").get_to(v.tail_bound);
  j.at("coeffs").get_to(v.coeffs);
}

void to_json(json& j, const Q4Params& v) {
  j = json{{"a", v.a}, {"b", v.b}, {"c", v.c}, {"d", v.d}, {"A", v.A},
           {"mu", v.mu ? json(*v.mu) : json(nullptr)}};
}
void from_json(const json& j, Q4Params& v) {
  j.at("a").get_to(v.a);
  j.at("b").get_to(v.b);
  j.at("c").get_to(v.c);
  j.at("d").get_to(v.d);
  j.at("A").get_to(v.A);
  v.mu.reset();
  if (!j.at("mu").is_null()) v.mu = j.at("mu").get<double>();
}

void to_json(json& j, const Q4Value& v) {
  j = json{{"value", v.value}, {"branch", to_string(v.branch)}, {"params", v.params}};
}
void from_json(const json& j, Q4Value& v) {
  j.at("value").get_to(v.value);
  v.branch = j.at("branch").get<std::string>() == "logs" ? Q4Branch::Logs : Q4Branch::Dilog;
  j.at("params").get_to(v.params);
}

void to_json(json& j, const ArcSplit& v) {
  j = json{{"case", to_string(v.kind)}, {"A", v.A}, {"start", v.start}, {"end", v.end}};
}
void from_json(const json& j, ArcSplit& v) {
  const auto c = j.at("case").get<std::string>();
  v.kind = c == "all_below" ? ArcSplit::AllBelow : c == "all_above" ? ArcSplit::AllAbove
                                                                    : ArcSplit::Split;
  j.at("A").get_to(v.A);
  j.at("start").get_to(v.start);
  j.at("end").get_to(v.end);
}

void to_json(json& j, const DilogValue<double>& v) {
  j = json{{"value", v.value}, {"est_error", v.est_error}};
}
void from_json(const json& j, DilogValue<double>& v) {
  j.at("value").get_to(v.value);
  j.at("est_error").get_to(v.est_error);
}
void to_json(json& j, const DilogValue<std::complex<double>>& v) {
  j = json{{"value", v.value}, {"est_error", v.est_error}};
}
void from_json(const json& j, DilogValue<std::complex<double>>& v) {
  j.at("value").get_to(v.value);
  j.at("est_error").get_to(v.est_error);
}

}  // namespace mahler
