#pragma once

// Monomial ideals in the grid variables a_{i,j} (one per grid hyperplane
// A_{i,j}). Point primes, their intersections and membership are all that
// the Stanley-Reisner model of a configuration needs.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "acmpts/grid.hpp"

namespace acmpts {

struct GridVariable {
  int direction = 0;
  int level = 0;

  auto operator<=>(const GridVariable&) const = default;
};

std::string to_string(const GridVariable& v);

class Monomial {
 public:
  Monomial() = default;
  /// Each variable with exponent 1.
  explicit Monomial(std::initializer_list<GridVariable> vars);
  explicit Monomial(std::map<GridVariable, int> exponents);

  const std::map<GridVariable, int>& exponents() const noexcept { return exponents_; }
  int degree() const;
  /// Per-direction degree (length n).
  MultiDegree multidegree(int n) const;
  bool is_squarefree() const;
  bool divides(const Monomial& other) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::map<GridVariable, int> exponents_;  // exponents >= 1
};

std::string to_string(const Monomial& m);

/// Ideal kept as its sorted set of minimal generators.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Drops redundant generators.
  explicit MonomialIdeal(std::vector<Monomial> generators);

  const std::vector<Monomial>& generators() const noexcept { return generators_; }

  bool operator==(const MonomialIdeal&) const = default;

 private:
  std::vector<Monomial> generators_;
};

std::string to_string(const MonomialIdeal& I);

/// (a_{1,p_1}, ..., a_{n,p_n}).
MonomialIdeal point_prime(const GridPoint& p);

/// Minimal generators of I ∩ J from pairwise lcms.
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

/// J_X: intersection of the point primes of X (squarefree, height n).
MonomialIdeal configuration_ideal(const PointSet& X);

/// True iff some generator of I divides m.
bool contains(const MonomialIdeal& I, const Monomial& m);

/// Generators of Y_{P,Q}: a_{i,P_i} where P_i = Q_i, else a_{i,P_i} a_{i,Q_i}.
/// Throws DimensionMismatch.
std::vector<Monomial> ci_generators(const GridPoint& p, const GridPoint& q);

}  // namespace acmpts
