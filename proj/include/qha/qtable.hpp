#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "qha/cartan.hpp"
#include "qha/rational.hpp"

namespace qha {

// Parameters Q_{i,j}(u,v) of the quiver Hecke presentation, stored as
// monomial tables for i < j; Q_{j,i}(u,v) = Q_{i,j}(v,u) and Q_{i,i} = 0.
struct QTable {
  CartanPtr cd;
  // (i,j) with i<j  ->  list of (p, q, t_{i,j;p,q})
  std::map<std::pair<int, int>, std::vector<std::tuple<int, int, Rat>>> table;
  std::string id = "standard";

  // monomials of Q_{i,j}(u,v); empty when i == j
  std::vector<std::tuple<int, int, Rat>> q_monomials(int i, int j) const;
  // monomials (pu, pv, pw) of (Q_{i,j}(u,v) - Q_{i,j}(w,v)) / (u - w)
  std::vector<std::tuple<int, int, int, Rat>> qbar_monomials(int i, int j) const;

  // exponent pairs with p(a_i,a_i) + q(a_j,a_j) = -2(a_i,a_j), p,q >= 0
  static std::vector<std::pair<int, int>> admissible(const CartanDatum& cd, int i, int j);

  // all admissible coefficients set to 1
  static std::shared_ptr<const QTable> standard(CartanPtr cd);
  // override coefficients for selected pairs; validates admissibility,
  // symmetry and the unit leading coefficient t_{i,j;-a_ij,0}
  static std::shared_ptr<const QTable> with_overrides(
      CartanPtr cd,
      const std::map<std::pair<int, int>, std::vector<std::tuple<int, int, Rat>>>& ov,
      std::string id);
};

using QTablePtr = std::shared_ptr<const QTable>;

}  // namespace qha
