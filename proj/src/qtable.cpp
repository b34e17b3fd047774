#include "qha/qtable.hpp"

#include <algorithm>
#include <stdexcept>

namespace qha {

std::vector<std::pair<int, int>> QTable::admissible(const CartanDatum& cd, int i, int j) {
  std::vector<std::pair<int, int>> out;
  if (i == j) return out;
  long target = -2 * cd.root_form(i, j);
  long di = cd.root_form(i, i), dj = cd.root_form(j, j);
  for (int p = 0; p * di <= target; ++p) {
    long rem = target - p * di;
    if (rem % dj == 0) out.emplace_back(p, static_cast<int>(rem / dj));
  }
  return out;
}

std::vector<std::tuple<int, int, Rat>> QTable::q_monomials(int i, int j) const {
  if (i == j) return {};
  if (i < j) {
    auto it = table.find({i, j});
    return it == table.end() ? std::vector<std::tuple<int, int, Rat>>{} : it->second;
  }
  auto sw = q_monomials(j, i);
  for (auto& [p, q, c] : sw) std::swap(p, q);
  return sw;
}

std::vector<std::tuple<int, int, int, Rat>> QTable::qbar_monomials(int i, int j) const {
  // (u^p - w^p)/(u - w) = sum_{s<p} u^s w^{p-1-s}
  std::vector<std::tuple<int, int, int, Rat>> out;
  for (const auto& [p, q, c] : q_monomials(i, j))
    for (int s = 0; s < p; ++s) out.emplace_back(s, q, p - 1 - s, c);
  return out;
}

std::shared_ptr<const QTable> QTable::standard(CartanPtr cd) {
  auto qt = std::make_shared<QTable>();
  qt->cd = cd;
  for (int i = 0; i < cd->rank(); ++i)
    for (int j = i + 1; j < cd->rank(); ++j) {
      std::vector<std::tuple<int, int, Rat>> mons;
      for (auto [p, q] : admissible(*cd, i, j)) mons.emplace_back(p, q, Rat(1));
      qt->table[{i, j}] = std::move(mons);
    }
  return qt;
}

std::shared_ptr<const QTable> QTable::with_overrides(
    CartanPtr cd,
    const std::map<std::pair<int, int>, std::vector<std::tuple<int, int, Rat>>>& ov,
    std::string id) {
  auto base = standard(cd);
  auto qt = std::make_shared<QTable>(*base);
  qt->id = std::move(id);
  for (const auto& [pr, mons] : ov) {
    auto [i, j] = pr;
    if (i == j) throw std::invalid_argument("Q_{i,i} is identically zero");
    if (i > j) throw std::invalid_argument("store overrides with i < j");
    auto adm = admissible(*cd, i, j);
    bool lead_ok = false;
    int lead_p = -cd->cartan[i][j];
    for (const auto& [p, q, c] : mons) {
      if (std::find(adm.begin(), adm.end(), std::make_pair(p, q)) == adm.end())
        throw std::invalid_argument("override exponent not admissible");
      if (p == lead_p && q == 0 && c != 0) lead_ok = true;
    }
    if (!lead_ok)
      throw std::invalid_argument("override drops the unit leading coefficient");
    qt->table[{i, j}] = mons;
  }
  return qt;
}

}  // namespace qha
