#include "acmpts/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include <json.hpp>

#include "acmpts/error.hpp"

namespace acmpts {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) fail(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

int as_int(const json& v, const std::string& what) {
  if (!v.is_number_integer()) fail(what + " must be an integer");
  const auto value = v.get<std::int64_t>();
  if (value < std::numeric_limits<int>::min() || value > std::numeric_limits<int>::max()) {
    fail(what + " is out of range");
  }
  return static_cast<int>(value);
}

int dimension_of(const json& doc) {
  const int n = as_int(field(doc, "n"), "\"n\"");
  if (n < 1) fail("\"n\" must be positive");
  return n;
}

std::vector<int> int_array(const json& v, const std::string& what) {
  if (!v.is_array()) fail(what + " must be an array");
  std::vector<int> out;
  for (const auto& e : v) out.push_back(as_int(e, what + " entry"));
  return out;
}

GridPoint point_of(const json& v, int n) {
  GridPoint p(int_array(v, "point"));
  if (p.dimension() != n) {
    fail("point " + to_string(p) + " does not have " + std::to_string(n) + " coordinates");
  }
  for (int c : p.coords) {
    if (c < 1) fail("point " + to_string(p) + " has a non-positive level");
  }
  return p;
}

std::vector<GridPoint> points_of(const json& v, int n) {
  if (!v.is_array()) fail("points must be an array");
  std::vector<GridPoint> out;
  for (const auto& e : v) out.push_back(point_of(e, n));
  return out;
}

std::optional<MultiDegree> box_of(const json& doc, int n) {
  if (!doc.contains("box")) return std::nullopt;
  MultiDegree box = int_array(doc.at("box"), "\"box\"");
  if (static_cast<int>(box.size()) != n) fail("\"box\" needs " + std::to_string(n) + " entries");
  for (int t : box) {
    if (t < 0) fail("\"box\" entries must be nonnegative");
  }
  return box;
}

ConfigurationFile file_of(const json& doc) {
  ConfigurationFile f;
  f.n = dimension_of(doc);
  f.points = points_of(field(doc, "points"), f.n);
  if (doc.contains("labels")) {
    const auto& labels = doc.at("labels");
    if (!labels.is_array() || labels.size() != f.points.size()) {
      fail("\"labels\" must be an array parallel to \"points\"");
    }
    for (const auto& l : labels) {
      if (!l.is_string()) fail("labels must be strings");
      f.labels.push_back(l.get<std::string>());
    }
  }
  return f;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LiaisonConfig liaison_of(const json& doc) {
  const int n = dimension_of(doc);
  LiaisonConfig cfg;
  const auto& summands = field(doc, "summands");
  if (!summands.is_array()) fail("\"summands\" must be an array");
  for (const auto& s : summands) cfg.input.summands.push_back(points_of(s, n));
  const auto& forms = field(doc, "forms");
  if (!forms.is_array()) fail("\"forms\" must be an array");
  for (const auto& f : forms) {
    DirectionForm form;
    form.direction = as_int(field(f, "direction"), "form direction");
    for (int level : int_array(field(f, "support"), "form support")) form.support.insert(level);
    cfg.input.forms.push_back(std::move(form));
  }
  std::sort(cfg.input.forms.begin(), cfg.input.forms.end(),
            [](const auto& a, const auto& b) { return a.direction < b.direction; });
  cfg.box = box_of(doc, n);
  return cfg;
}

LayerConfig layer_of(const json& doc) {
  LayerConfig cfg;
  cfg.base = file_of(doc);
  cfg.direction = as_int(field(doc, "direction"), "\"direction\"");
  if (doc.contains("side")) {
    const auto& side = doc.at("side");
    if (side == "after") {
      cfg.side = LayerSide::after;
    } else if (side == "before") {
      cfg.side = LayerSide::before;
    } else {
      fail("\"side\" must be \"after\" or \"before\"");
    }
  }
  cfg.box = box_of(doc, cfg.base.n);
  return cfg;
}

}  // namespace

PointSet ConfigurationFile::configuration() const {
  if (points.empty()) throw Error(ErrorCode::EmptyConfiguration, "file has no points");
  return canonicalize(std::span<const GridPoint>(points));
}

std::optional<std::string> ConfigurationFile::label_of(const GridPoint& canonical) const {
  if (labels.empty()) return std::nullopt;
  // Canonical coordinates are ranks among the levels used in each direction.
  std::vector<std::vector<int>> used(n);
  for (const auto& p : points) {
    for (int k = 0; k < n; ++k) used[k].push_back(p.coords[k]);
  }
  for (auto& u : used) {
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
  }
  for (std::size_t m = 0; m < points.size(); ++m) {
    bool match = true;
    for (int k = 0; k < n && match; ++k) {
      const auto rank = std::lower_bound(used[k].begin(), used[k].end(), points[m].coords[k]) -
                        used[k].begin() + 1;
      match = rank == canonical.coords[k];
    }
    if (match) return labels[m];
  }
  return std::nullopt;
}

ConfigurationFile parse_configuration(const std::string& text) { return file_of(parse_json(text)); }

ConfigurationFile load_configuration(const std::filesystem::path& path) {
  return parse_configuration(read_file(path));
}

std::string serialize_configuration(const ConfigurationFile& file) {
  std::string out = "{\n  \"n\": " + std::to_string(file.n) + ",\n  \"points\": [";
  for (std::size_t m = 0; m < file.points.size(); ++m) {
    out += m ? ",\n    [" : "\n    [";
    const auto& c = file.points[m].coords;
    for (std::size_t k = 0; k < c.size(); ++k) out += (k ? "," : "") + std::to_string(c[k]);
    out += "]";
  }
  out += file.points.empty() ? "]" : "\n  ]";
  if (!file.labels.empty()) {
    out += ",\n  \"labels\": [";
    for (std::size_t m = 0; m < file.labels.size(); ++m) {
      out += (m ? ", " : "") + json(file.labels[m]).dump();
    }
    out += "]";
  }
  return out + "\n}\n";
}

ConfigurationFile to_file(const PointSet& X) {
  ConfigurationFile f;
  f.n = X.n();
  f.points = X.points();
  return f;
}

ConstructConfig parse_construct_config(const std::string& text) {
  const json doc = parse_json(text);
  const auto& mode = field(doc, "mode");
  if (mode == "liaison") return liaison_of(doc);
  if (mode == "layer") return layer_of(doc);
  fail("\"mode\" must be \"liaison\" or \"layer\"");
}

ConstructConfig load_construct_config(const std::filesystem::path& path) {
  return parse_construct_config(read_file(path));
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      fail("\"" + text + "\" is not a comma-separated integer list");
    }
    if (used != item.size()) fail("\"" + text + "\" is not a comma-separated integer list");
    out.push_back(value);
  }
  if (out.empty() || text.back() == ',') fail("\"" + text + "\" is not a comma-separated integer list");
  return out;
}

}  // namespace acmpts
