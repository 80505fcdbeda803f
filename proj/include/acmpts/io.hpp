#pragma once

// JSON file formats: configurations {"n": 3, "points": [[1,1,1], ...]} with
// optional "labels", and construction configs for the liaison and layer
// constructions. Malformed input raises Error(ParseError).

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "acmpts/constructions.hpp"
#include "acmpts/grid.hpp"

namespace acmpts {

struct ConfigurationFile {
  int n = 0;
  std::vector<GridPoint> points;    // as written, not canonicalized
  std::vector<std::string> labels;  // empty or parallel to points

  /// Canonical point set; throws EmptyConfiguration for an empty file.
  PointSet configuration() const;
  /// Label of a canonical point, if the file carries labels.
  std::optional<std::string> label_of(const GridPoint& canonical) const;
};

ConfigurationFile parse_configuration(const std::string& text);
ConfigurationFile load_configuration(const std::filesystem::path& path);

/// One point per line; parse_configuration(serialize(f)) == f.
std::string serialize_configuration(const ConfigurationFile& file);
ConfigurationFile to_file(const PointSet& X);

struct LiaisonConfig {
  LiaisonInput input;
  std::optional<MultiDegree> box;  // additivity check box
};

struct LayerConfig {
  ConfigurationFile base;
  int direction = 1;
  LayerSide side = LayerSide::after;
  std::optional<MultiDegree> box;
};

using ConstructConfig = std::variant<LiaisonConfig, LayerConfig>;

/// {"mode": "liaison", "n": 3, "summands": [[[1,1,1]], ...],
///  "forms": [{"direction": 1, "support": [2,3]}, ...], "box": [3,3,3]}
/// {"mode": "layer", "n": 3, "points": [...], "direction": 1,
///  "side": "after" | "before", "box": [...]}
ConstructConfig parse_construct_config(const std::string& text);
ConstructConfig load_construct_config(const std::filesystem::path& path);

/// Comma-separated integers such as "3,3,3".
std::vector<int> parse_int_list(const std::string& text);

}  // namespace acmpts
