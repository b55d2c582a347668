#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "booth/analysis.hpp"

namespace booth {

/// Fixed 15-significant-digit float formatting, used for every emitted
/// number so identical configs produce byte-identical files.
std::string fmt15(double x);
std::string fmt15(cdouble z);

nlohmann::json to_json(const MembershipReport& rep);
nlohmann::json to_json(const AreaReport& rep);
nlohmann::json to_json(const RangeReport& rep);
nlohmann::json to_json(const DistortionBounds& b);
nlohmann::json to_json(const CoefficientReport& rep);
nlohmann::json series_to_json(const Series& s);

/// Coefficient file: JSON array of [re, im] pairs, index = power.
Series series_from_json_file(const std::string& path);

/// CSV rows "theta,x,y" of the lemniscate boundary.
void write_boundary_csv(std::ostream& os, BoothParam p, int resolution);

/// Single-polyline SVG of the boundary, viewBox fitted with 5% padding.
void write_boundary_svg(std::ostream& os, BoothParam p, int resolution);

}  // namespace booth
