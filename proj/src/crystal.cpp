#include "qha/crystal.hpp"

#include <functional>
#include <set>
#include <stdexcept>

namespace qha {

GradedModule ftilde(const GradedModule& m, int i, const Limits& lim) {
  GradedModule li = simple_L(m.cd, m.qt, i);
  GradedModule out = head_afr(li, m, lim);
  out.known_simple = true;
  return normalize_selfdual(out);
}

GradedModule etilde(const GradedModule& m, int i, const Limits& lim) {
  int n = eps_i(m, i);
  if (n == 0) {
    GradedModule z;
    z.cd = m.cd;
    z.qt = m.qt;
    z.beta = m.beta;  // conventional; the zero module has no weight
    return z;
  }
  auto [m0, got] = e_max(m, i, lim);
  (void)got;
  if (n == 1) return normalize_selfdual(m0);
  GradedModule ln1 = simple_Ln(m.cd, m.qt, i, n - 1, lim);
  GradedModule out = head_unmixed(ln1, m0, lim);
  out.known_simple = true;
  return normalize_selfdual(out);
}

namespace {

bool in_Bw_chain(const GradedModule& m, const WeylElement& w, const Limits& lim) {
  GradedModule cur = m;
  for (int i : w.word) {
    auto [next, n] = e_max(cur, i, lim);
    (void)n;
    cur = std::move(next);
  }
  return cur.dim() == 1 && ht(cur.beta) == 0;
}

bool in_Bw_composition(const GradedModule& m, const WeylElement& w) {
  // exists (a_k) with wt(M) = -sum a_k alpha_{i_k} and e(i_1^{a_1},...)M != 0
  std::set<Sector> words;
  for (const auto& b : m.basis) words.insert(b.word);
  int l = w.length();
  std::function<bool(std::size_t, Root, Sector&)> rec =
      [&](std::size_t k, Root rest, Sector& acc) {
        if (k == static_cast<std::size_t>(l))
          return ht(rest) == 0 && words.count(acc) > 0;
        int i = w.word[k];
        int maxa = rest[i];
        std::size_t base = acc.size();
        for (int a = 0; a <= maxa; ++a) {
          Root r2 = rest;
          r2[i] -= a;
          for (int t = 0; t < a; ++t) acc.push_back(static_cast<std::uint8_t>(i));
          if (rec(k + 1, r2, acc)) return true;
          acc.resize(base);
        }
        return false;
      };
  Root beta = m.beta;
  Sector acc;
  return rec(0, beta, acc);
}

}  // namespace

bool in_Bw(const GradedModule& m, const WeylElement& w, const Limits& lim) {
  bool a = in_Bw_chain(m, w, lim);
  bool d = in_Bw_composition(m, w);
  if (a != d)
    throw std::logic_error("in_Bw criteria disagree: chain=" + std::to_string(a) +
                           " composition=" + std::to_string(d));
  return a;
}

bool q_kernel(const GradedModule& x, const WeylElement& w) {
  if (x.is_zero()) return true;
  for (const auto& b : x.basis) {
    // is the word a concatenation i_1^{a_1} * ... * i_l^{a_l}? reduced words
    // have no equal adjacent letters, so greedy run consumption is exact
    std::size_t pos = 0;
    for (int i : w.word) {
      while (pos < b.word.size() && b.word[pos] == i) ++pos;
    }
    if (pos == b.word.size()) return false;
  }
  return true;
}

}  // namespace qha
