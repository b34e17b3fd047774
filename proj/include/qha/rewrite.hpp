#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "qha/cartan.hpp"
#include "qha/qtable.hpp"
#include "qha/rational.hpp"

namespace qha {

// Word of label indices selecting an idempotent sector e(nu).
using Sector = std::vector<std::uint8_t>;

// A generator symbol; sequences read left to right as algebra products.
struct Sym {
  bool is_x;
  int idx;  // strand (x_k) or crossing (tau_l), 0-based
};

inline Sym sym_x(int k) { return {true, k}; }
inline Sym sym_tau(int l) { return {false, l}; }

// Normal-form term key: tau_w x^{xe} (times e(nu0), which is implicit).
struct NTKey {
  Perm w;
  std::vector<std::uint8_t> xe;
  auto operator<=>(const NTKey&) const = default;
};

using NF = std::map<NTKey, Rat>;

// Element of the straightened spanning set: c * tau_u * tau_y * x^{xe} with u
// a minimal coset representative and y block-diagonal, so that tau_y x^{xe}
// acts through the factors of an induced module.
struct SplitTerm {
  Rat c;
  Perm u;
  Perm y;
  std::vector<std::uint8_t> xe;
};

// Rewriting engine for products of quiver Hecke generators on n strands,
// anchored at a fixed right idempotent e(nu0). Straightening uses only the
// defining relations; each correction strictly drops the tau-letter count,
// which gives termination.
class StrandAlgebra {
 public:
  StrandAlgebra(CartanPtr cd, QTablePtr qt, int n);

  int strands() const { return n_; }
  const CartanDatum& cartan() const { return *cd_; }
  const QTable& qtable() const { return *qt_; }

  // normal form of the product of symbols applied to e(nu0)
  NF eval(const std::vector<Sym>& syms, const Sector& nu0) const;
  NF leftmul(const Sym& s, const NF& nf, const Sector& nu0) const;

  // intertwiner phi_{word} expanded into the normal form (word reduced)
  NF intertwiner(const std::vector<int>& word, const Sector& nu0) const;
  NF leftmul_phi(int k, const NF& nf, const Sector& nu0) const;

  // straighten into coset-split form for the given block composition
  std::vector<SplitTerm> split(const NF& nf, const std::vector<int>& blocks,
                               const Sector& nu0) const;
  std::vector<SplitTerm> straighten(const std::vector<Sym>& syms,
                                    const std::vector<int>& blocks,
                                    const Sector& nu0) const;

  // homogeneous degree of a normal-form term over e(nu0)
  long term_degree(const NTKey& k, const Sector& nu0) const;
  long sector_degree_tau(const Perm& w, const Sector& nu0) const;

  Sector apply_perm(const Perm& w, const Sector& nu) const;  // w . nu

 private:
  struct Correction {
    Rat c;
    std::vector<Sym> seq;
  };
  struct MoveResult {
    std::vector<int> word;
    std::vector<Correction> corr;
  };

  NF leftmul_tau(int p, const Perm& w, const Sector& nu0) const;
  NF leftmul_x(int p, const Perm& w, const Sector& nu0) const;
  MoveResult to_first(const std::vector<int>& word, int d, const Sector& nu0) const;
  MoveResult to_target(const std::vector<int>& word, const std::vector<int>& target,
                       const Sector& nu0) const;
  std::vector<SplitTerm> split_term(const Perm& w, const std::vector<int>& blocks,
                                    const Sector& nu0) const;
  Sector sector_after(const std::vector<int>& word, std::size_t k,
                      const Sector& nu0) const;

  CartanPtr cd_;
  QTablePtr qt_;
  int n_;

  struct TauKey {
    int p;
    Perm w;
    Sector nu;
    auto operator<=>(const TauKey&) const = default;
  };
  struct SplitKey {
    Perm w;
    std::vector<int> blocks;
    Sector nu;
    auto operator<=>(const SplitKey&) const = default;
  };
  mutable std::map<TauKey, NF> memo_tau_;
  mutable std::map<TauKey, NF> memo_x_;
  mutable std::map<SplitKey, std::vector<SplitTerm>> memo_split_;
};

}  // namespace qha
