#pragma once

#include <nlohmann/json.hpp>
#include <optional>

#include "mahler/measure.hpp"
#include "mahler/q4.hpp"
#include "mahler/region.hpp"
#include "mahler/special.hpp"
#include "mahler/theorems.hpp"
#include "mahler/winding.hpp"

namespace mahler {

inline constexpr const char* kSchema = "mahler/1";

// JSON-facing summary of a RegionModel (the raster goes to CSV).
struct RegionSummary {
  double a = 1, b = 1;
  int n_angles = 0;
  int raster_res = 0;
  double half_width = 0;
  double max_modulus = 0;
  int bounded_components = 0;
  std::vector<RegionComponent> components;
  std::optional<FamilyExtremes> extremes;
  std::optional<EllipseConditions> conditions;
};
RegionSummary summarize(const RegionModel& m, bool family);

}  // namespace mahler

namespace nlohmann {
// Complex numbers as {"re": .., "im": ..}.
template <>
struct adl_serializer<std::complex<double>> {
  static void to_json(json& j, const std::complex<double>& z) {
    j = json{{"re", z.real()}, {"im", z.imag()}};
  }
  static void from_json(const json& j, std::complex<double>& z) {
    z = {j.at("re").get<double>(), j.at("im").get<double>()};
  }
};
}  // namespace nlohmann

namespace mahler {

void to_json(nlohmann::json& j, const GridSpec& v);
void from_json(const nlohmann::json& j, GridSpec& v);
void to_json(nlohmann::json& j, const QuadResult& v);
void from_json(const nlohmann::json& j, QuadResult& v);
void to_json(nlohmann::json& j, const MeasureResult& v);
void from_json(const nlohmann::json& j, MeasureResult& v);
void to_json(nlohmann::json& j, const IndexCount& v);
void from_json(const nlohmann::json& j, IndexCount& v);
void to_json(nlohmann::json& j, const RhoReport& v);
void from_json(const nlohmann::json& j, RhoReport& v);
void to_json(nlohmann::json& j, const RegionComponent& v);
void from_json(const nlohmann::json& j, RegionComponent& v);
void to_json(nlohmann::json& j, const FamilyExtremes& v);
void from_json(const nlohmann::json& j, FamilyExtremes& v);
void to_json(nlohmann::json& j, const EllipseConditions& v);
void from_json(const nlohmann::json& j, EllipseConditions& v);
void to_json(nlohmann::json& j, const RegionSummary& v);
void from_json(const nlohmann::json& j, RegionSummary& v);
void to_json(nlohmann::json& j, const RelationReport& v);
void from_json(const nlohmann::json& j, RelationReport& v);
void to_json(nlohmann::json& j, const BoundedValue& v);
void from_json(const nlohmann::json& j, BoundedValue& v);
void to_json(nlohmann::json& j, const SeriesCoeffs& v);
void from_json(const nlohmann::json& j, SeriesCoeffs& v);
void to_json(nlohmann::json& j, const SeriesResult& v);
void from_json(const nlohmann::json& j, SeriesResult& v);
void to_json(nlohmann::json& j, const Q4Params& v);
void from_json(const nlohmann::json& j, Q4Params& v);
void to_json(nlohmann::json& j, const Q4Value& v);
void from_json(const nlohmann::json& j, Q4Value& v);
void to_json(nlohmann::json& j, const ArcSplit& v);
void from_json(const nlohmann::json& j, ArcSplit& v);
void to_json(nlohmann::json& j, const DilogValue<double>& v);
void from_json(const nlohmann::json& j, DilogValue<double>& v);
void to_json(nlohmann::json& j, const DilogValue<std::complex<double>>& v);
void from_json(const nlohmann::json& j, DilogValue<std::complex<double>>& v);

}  // namespace mahler
