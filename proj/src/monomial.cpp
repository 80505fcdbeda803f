#include "acmpts/monomial.hpp"

#include <algorithm>

#include "acmpts/error.hpp"

namespace acmpts {

std::string to_string(const GridVariable& v) {
  return "a_{" + std::to_string(v.direction) + "," + std::to_string(v.level) + "}";
}

Monomial::Monomial(std::initializer_list<GridVariable> vars) {
  for (const auto& v : vars) ++exponents_[v];
}

Monomial::Monomial(std::map<GridVariable, int> exponents) {
  for (const auto& [v, e] : exponents) {
    if (e > 0) exponents_.emplace(v, e);
  }
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : exponents_) d += e;
  return d;
}

MultiDegree Monomial::multidegree(int n) const {
  MultiDegree t(n, 0);
  for (const auto& [v, e] : exponents_) {
    if (v.direction < 1 || v.direction > n) {
      throw Error(ErrorCode::BadDirection, "variable " + to_string(v) + " outside n");
    }
    t[v.direction - 1] += e;
  }
  return t;
}

bool Monomial::is_squarefree() const {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](const auto& kv) { return kv.second == 1; });
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& [v, e] : exponents_) {
    auto it = other.exponents_.find(v);
    if (it == other.exponents_.end() || it->second < e) return false;
  }
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::map<GridVariable, int> out = a.exponents_;
  for (const auto& [v, e] : b.exponents_) {
    auto& slot = out[v];
    slot = std::max(slot, e);
  }
  return Monomial(std::move(out));
}

std::string to_string(const Monomial& m) {
  if (m.exponents().empty()) return "1";
  std::string out;
  for (const auto& [v, e] : m.exponents()) {
    out += to_string(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

MonomialIdeal::MonomialIdeal(std::vector<Monomial> generators) {
  // Ascending degree first, so a divisor is always met before its multiples.
  std::sort(generators.begin(), generators.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
  });
  for (auto& g : generators) {
    const bool redundant = std::any_of(generators_.begin(), generators_.end(),
                                       [&](const Monomial& kept) { return kept.divides(g); });
    if (!redundant) generators_.push_back(std::move(g));
  }
  std::sort(generators_.begin(), generators_.end());
}

std::string to_string(const MonomialIdeal& I) {
  std::string out = "(";
  for (std::size_t k = 0; k < I.generators().size(); ++k) {
    if (k) out += ", ";
    out += to_string(I.generators()[k]);
  }
  return out + ")";
}

MonomialIdeal point_prime(const GridPoint& p) {
  std::vector<Monomial> gens;
  for (int k = 0; k < p.dimension(); ++k) gens.push_back(Monomial{GridVariable{k + 1, p.coords[k]}});
  return MonomialIdeal(std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  std::vector<Monomial> lcms;
  lcms.reserve(I.generators().size() * J.generators().size());
  for (const auto& f : I.generators()) {
    for (const auto& g : J.generators()) lcms.push_back(lcm(f, g));
  }
  return MonomialIdeal(std::move(lcms));
}

MonomialIdeal configuration_ideal(const PointSet& X) {
  if (X.is_empty()) throw Error(ErrorCode::EmptyConfiguration, "ideal of the empty configuration");
  MonomialIdeal J = point_prime(X.points().front());
  for (std::size_t k = 1; k < X.size(); ++k) J = intersect(J, point_prime(X.points()[k]));
  return J;
}

bool contains(const MonomialIdeal& I, const Monomial& m) {
  return std::any_of(I.generators().begin(), I.generators().end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

std::vector<Monomial> ci_generators(const GridPoint& p, const GridPoint& q) {
  if (p.dimension() != q.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, to_string(p) + " vs " + to_string(q));
  }
  std::vector<Monomial> gens;
  for (int k = 0; k < p.dimension(); ++k) {
    const GridVariable a{k + 1, p.coords[k]};
    if (p.coords[k] == q.coords[k]) {
      gens.push_back(Monomial{a});
    } else {
      gens.push_back(Monomial{a, GridVariable{k + 1, q.coords[k]}});
    }
  }
  return gens;
}

}  // namespace acmpts
