#include "acmpts/constructions.hpp"

#include <algorithm>
#include <map>

#include "acmpts/error.hpp"
#include "acmpts/hilbert.hpp"

namespace acmpts {
namespace {

void validate(const LiaisonInput& input) {
  const int n = static_cast<int>(input.forms.size());
  if (n < 2) throw Error(ErrorCode::DimensionMismatch, "liaison addition needs n >= 2 forms");
  if (static_cast<int>(input.summands.size()) != n) {
    throw Error(ErrorCode::DimensionMismatch, "need one summand per form");
  }
  for (int i = 1; i <= n; ++i) {
    const auto& form = input.forms[i - 1];
    if (form.direction != i) {
      throw Error(ErrorCode::BadDirection, "form " + std::to_string(i) + " must lie in direction " +
                                               std::to_string(i));
    }
    if (form.support.empty() || *form.support.begin() < 1) {
      throw Error(ErrorCode::BadLevel, "form " + std::to_string(i) + " needs a positive support");
    }
  }
  for (const auto& summand : input.summands) {
    if (summand.empty()) throw Error(ErrorCode::EmptyConfiguration, "empty summand");
    for (const auto& p : summand) {
      if (p.dimension() != n) throw Error(ErrorCode::DimensionMismatch, to_string(p));
    }
  }

  // A point shared by V_i and V_j would violate either vanishing of F_i or
  // the guard on V_i, so overlap is reported first as the actual cause.
  std::map<GridPoint, int> owner;
  for (int j = 1; j <= n; ++j) {
    for (const auto& p : input.summands[j - 1]) {
      auto [it, inserted] = owner.emplace(p, j);
      if (!inserted && it->second != j) {
        throw Error(ErrorCode::OverlappingSummands,
                    to_string(p) + " lies in V_" + std::to_string(it->second) + " and V_" +
                        std::to_string(j));
      }
    }
  }

  // Vanishing is reported before the reducedness guard: it is the main
  // hypothesis, and a form that is too small often trips both.
  for (int i = 1; i <= n; ++i) {
    const auto& support = input.forms[i - 1].support;
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      for (const auto& p : input.summands[j - 1]) {
        if (!support.contains(p.coords[i - 1])) {
          throw Error(ErrorCode::VanishingConditionViolated,
                      "F_" + std::to_string(i) + " does not vanish at " + to_string(p) +
                          " of V_" + std::to_string(j));
        }
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (const auto& p : input.summands[i - 1]) {
      if (input.forms[i - 1].support.contains(p.coords[i - 1])) {
        throw Error(ErrorCode::ReducednessGuardViolated,
                    "F_" + std::to_string(i) + " vanishes at " + to_string(p) + " of V_" +
                        std::to_string(i));
      }
    }
  }
}

MultiDegree shifted(const MultiDegree& t, int direction, int by) {
  MultiDegree s = t;
  s[direction - 1] -= by;
  return s;
}

std::int64_t h_or_zero(std::span<const GridPoint> points, const MultiDegree& t) {
  for (int d : t) {
    if (d < 0) return 0;
  }
  return hilbert_value(points, t);
}

void check_direction(const PointSet& X, int i) {
  if (X.n() < 2) throw Error(ErrorCode::BadDirection, "layer construction needs n >= 2");
  if (i < 1 || i > X.n()) {
    throw Error(ErrorCode::BadDirection,
                "direction " + std::to_string(i) + " outside 1.." + std::to_string(X.n()));
  }
}

}  // namespace

std::vector<GridPoint> form_box(std::span<const DirectionForm> forms) {
  std::vector<GridPoint> box{GridPoint{}};
  for (const auto& form : forms) {
    std::vector<GridPoint> next;
    for (const auto& prefix : box) {
      for (int level : form.support) {
        GridPoint p = prefix;
        p.coords.push_back(level);
        next.push_back(std::move(p));
      }
    }
    box = std::move(next);
  }
  return box;
}

LiaisonResult liaison_addition(const LiaisonInput& input) {
  validate(input);
  std::map<GridPoint, std::string> labelled;
  for (const auto& p : form_box(input.forms)) labelled.emplace(p, "box");
  for (std::size_t j = 0; j < input.summands.size(); ++j) {
    for (const auto& p : input.summands[j]) labelled[p] = "V" + std::to_string(j + 1);
  }
  LiaisonResult result;
  for (auto& [p, label] : labelled) {
    result.points.push_back(p);
    result.labels.push_back(label);
  }
  result.configuration = canonicalize(std::span<const GridPoint>(result.points));
  return result;
}

MultiDegree default_additivity_box(const LiaisonInput& input) {
  int total = 0;
  for (const auto& form : input.forms) total += form.degree();
  return MultiDegree(input.forms.size(), total);
}

bool verify_hf_additivity(const LiaisonInput& input, std::span<const GridPoint> z,
                          const MultiDegree& box) {
  validate(input);
  const auto v = form_box(input.forms);
  const HilbertTable hz = hilbert_table(z, box);
  for (std::size_t flat = 0; flat < hz.size(); ++flat) {
    const MultiDegree t = hz.degree_at(flat);
    std::int64_t rhs = h_or_zero(v, t);
    for (std::size_t i = 0; i < input.summands.size(); ++i) {
      const int direction = static_cast<int>(i) + 1;
      rhs += h_or_zero(input.summands[i], shifted(t, direction, input.forms[i].degree()));
    }
    if (hz[flat] != rhs) return false;
  }
  return true;
}

std::vector<GridPoint> layer_points(const PointSet& X, int i, LayerSide side) {
  check_direction(X, i);
  const int level = side == LayerSide::after ? X.dims()[i - 1] + 1 : 0;
  std::vector<GridPoint> layer;
  for (const auto& p : X.points()) {
    GridPoint q = p;
    q.coords[i - 1] = level;
    layer.push_back(std::move(q));
  }
  std::sort(layer.begin(), layer.end());
  layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
  return layer;
}

PointSet add_layer(const PointSet& X, int i, LayerSide side) {
  if (X.is_empty()) throw Error(ErrorCode::EmptyConfiguration, "layer over the empty configuration");
  std::vector<GridPoint> all = layer_points(X, i, side);
  all.insert(all.end(), X.points().begin(), X.points().end());
  return canonicalize(std::span<const GridPoint>(all));
}

bool verify_layer_hf(const PointSet& X, int i, const MultiDegree& box, LayerSide side) {
  const auto layer = layer_points(X, i, side);
  std::vector<GridPoint> z = layer;
  z.insert(z.end(), X.points().begin(), X.points().end());
  const HilbertTable hz = hilbert_table(z, box);
  for (std::size_t flat = 0; flat < hz.size(); ++flat) {
    const MultiDegree t = hz.degree_at(flat);
    const std::int64_t rhs = h_or_zero(layer, t) + h_or_zero(X.points(), shifted(t, i, 1));
    if (hz[flat] != rhs) return false;
  }
  return true;
}

}  // namespace acmpts
