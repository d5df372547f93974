#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "splitplane/conformal_grid.hpp"
#include "splitplane/holomorphy.hpp"
#include "splitplane/wave.hpp"

namespace splitplane {

inline constexpr const char* kVersion = "1.0.0";

/// {"version", "command", "parameters"}
nlohmann::json metadata(const std::string& command, const nlohmann::json& parameters);

/// JSON text with every floating-point number written with 17 significant
/// digits and keys in sorted order, so equal inputs give identical bytes.
std::string dump_fixed(const nlohmann::json& j, int indent = 2);

nlohmann::json to_json(const DoubleNumber& h);
nlohmann::json to_json(const std::vector<Polyline>& lines);
nlohmann::json to_json(const VerifyReport& r);

/// "# metadata <json>" followed by the CSV body.
std::string polylines_csv(const std::vector<Polyline>& lines, const nlohmann::json& meta);
std::string residuals_csv(const std::vector<ResidualSample>& samples, const nlohmann::json& meta);
std::string slice_csv(double t, const std::vector<SlicePoint>& slice, const nlohmann::json& meta);

/// One path per polyline (runs split at breaks), viewBox fitted to the
/// points, the cone of 0 drawn dashed. Metadata goes into a comment.
std::string polylines_svg(const std::vector<Polyline>& lines, const nlohmann::json& meta);

}  // namespace splitplane
