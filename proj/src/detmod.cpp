#include "qha/detmod.hpp"

#include <map>
#include <stdexcept>

namespace qha {

namespace {

struct CacheKey {
  std::string qt_id;
  std::vector<int> word;
  std::vector<long> al, la;
  auto operator<=>(const CacheKey&) const = default;
};

std::map<CacheKey, GradedModule>& cache() {
  static std::map<CacheKey, GradedModule> c;
  return c;
}

}  // namespace

void clear_detmod_cache() { cache().clear(); }

GradedModule gen_detmod(CartanPtr cd, QTablePtr qt, const WeylElement& w,
                        const Weight& lam, const Limits& lim) {
  if (!is_w_dominant(lam, w))
    throw std::invalid_argument("gen_detmod: weight is not w-dominant");
  CacheKey key{qt->id, w.word, lam.al, lam.la};
  if (auto it = cache().find(key); it != cache().end()) return it->second;

  // process the canonical word from the right: base case is the unit module
  GradedModule cur = unit_module(cd, qt);
  Weight lk = lam;  // s_{i_{k+1}} ... s_{i_r} lam while walking up
  std::vector<std::pair<int, int>> steps;  // (index, divided power)
  for (std::size_t k = w.word.size(); k-- > 0;) {
    int i = w.word[k];
    long m = cd->pairing(i, lk);
    if (m < 0) throw std::logic_error("gen_detmod: negative power on w-dominant weight");
    steps.emplace_back(i, static_cast<int>(m));
    lk = cd->reflect(i, lk);
  }
  for (const auto& [i, m] : steps) {
    if (m == 0) continue;
    if (eps_i(cur, i) != 0)
      throw std::logic_error("gen_detmod: eps_i nonzero before head step");
    GradedModule ln = simple_Ln(cd, qt, i, m, lim);
    cur = head_unmixed(ln, cur, lim);
    cur = normalize_selfdual(cur);
  }
  cur.known_simple = true;
  // M(w la, la) for dominant la is a determinantial module, hence real affreal
  cur.known_real_afr = cd->is_dominant(lam);
  cache()[key] = cur;
  return cur;
}

GradedModule detmod_pair(CartanPtr cd, QTablePtr qt, const WeylElement& w,
                         const WeylElement& v, const Weight& Lam, const Limits& lim) {
  if (!cd->is_dominant(Lam)) throw std::invalid_argument("detmod_pair: Lambda not dominant");
  if (!bruhat_le(v, w)) throw std::invalid_argument("detmod_pair: needs v <= w");
  GradedModule cur = gen_detmod(cd, qt, w, Lam, lim);
  // strip E*^(n_k) along the canonical word of v, innermost letter first
  Weight mu = Lam;
  std::vector<std::pair<int, int>> steps;
  for (std::size_t k = v.word.size(); k-- > 0;) {
    int j = v.word[k];
    long n = cd->pairing(j, mu);
    if (n < 0) throw std::logic_error("detmod_pair: negative divided power");
    steps.emplace_back(j, static_cast<int>(n));
    mu = cd->reflect(j, mu);
  }
  for (const auto& [j, n] : steps) {
    if (n == 0) continue;
    int have = eps_star_i(cur, j);
    if (have != n)
      throw std::logic_error("detmod_pair: eps* mismatch, expected " +
                             std::to_string(n) + " got " + std::to_string(have));
    auto [next, got] = e_star_max(cur, j, lim);
    cur = normalize_selfdual(next);
    (void)got;
  }
  cur.known_simple = true;
  cur.known_real_afr = true;  // M(w Lam, v Lam) is a determinantial module
  return cur;
}

}  // namespace qha
