#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qha/rational.hpp"

namespace qha {

// Element of the root lattice in alpha coordinates (internal index order).
using Root = std::vector<int>;

int ht(const Root& b);
Root root_add(const Root& a, const Root& b);
Root root_sub(const Root& a, const Root& b);
bool root_nonneg(const Root& a);

// Lattice element with coordinates over {alpha_i} u {Lambda_i}. The bilinear
// form is only defined when at least one argument lies in the root lattice;
// no identity involving (Lambda_i, Lambda_j) is ever needed.
struct Weight {
  std::vector<long> al;  // alpha part
  std::vector<long> la;  // Lambda part

  bool operator==(const Weight&) const = default;
};

struct CartanDatum : std::enable_shared_from_this<CartanDatum> {
  std::vector<int> labels;               // external names of the indices
  std::vector<std::vector<int>> cartan;  // A[i][j] = <h_i, alpha_j>
  std::vector<int> sym;                  // d_i with (alpha_i,alpha_i)=2 d_i
  std::string preset;                    // name when built from a preset

  int rank() const { return static_cast<int>(labels.size()); }
  int index_of(int label) const;

  long root_form(int i, int j) const { return static_cast<long>(sym[i]) * cartan[i][j]; }
  // (x, y) with at least one side in the root lattice
  long form(const Weight& x, const Weight& y) const;
  long form_root(const Root& a, const Root& b) const;
  long form_weight_root(const Weight& x, const Root& b) const;
  long pairing(int i, const Weight& x) const;  // <h_i, x>
  long pairing_root(int i, const Root& b) const;

  Weight alpha(int i) const;
  Weight lambda(int i) const;
  Weight zero_weight() const;
  Weight weight_add(const Weight& x, const Weight& y) const;
  Weight weight_sub(const Weight& x, const Weight& y) const;
  Weight weight_neg(const Weight& x) const;
  Weight weight_of_root(const Root& b) const;
  std::optional<Root> root_part(const Weight& x) const;  // nullopt if la != 0
  bool is_dominant(const Weight& x) const;

  Weight reflect(int i, const Weight& x) const;  // s_i(x)
  Root reflect_root(int i, const Root& b) const;

  std::optional<Root> null_root() const;  // delta for affine type
  // positive roots gamma with gamma <= bound coordinatewise (real roots via
  // reflection closure, imaginary multiples of delta in affine type)
  std::vector<Root> positive_roots_below(const Root& bound) const;
  bool is_positive_root(const Root& g) const;

  static std::shared_ptr<const CartanDatum> make(
      std::vector<std::vector<int>> a, std::vector<int> d,
      std::vector<int> labels = {}, std::string preset = "");
  static std::shared_ptr<const CartanDatum> preset_by_name(const std::string& name);
  static std::vector<std::string> preset_names();
};

using CartanPtr = std::shared_ptr<const CartanDatum>;

// ---------------------------------------------------------------------------
// Weyl group elements, stored as canonical (lexicographically minimal)
// reduced words. Equality of group elements goes through canonical words.
struct WeylElement {
  CartanPtr cd;
  std::vector<int> word;  // canonical reduced word (internal indices)

  int length() const { return static_cast<int>(word.size()); }
  bool is_identity() const { return word.empty(); }
  bool operator==(const WeylElement& o) const { return word == o.word; }
};

WeylElement weyl_reduce(const CartanPtr& cd, const std::vector<int>& word);
WeylElement weyl_mult(const WeylElement& a, const WeylElement& b);
WeylElement weyl_inverse(const WeylElement& w);
Weight weyl_act(const WeylElement& w, const Weight& x);
Root weyl_act_root(const WeylElement& w, const Root& b);
bool bruhat_le(const WeylElement& v, const WeylElement& w);
bool is_w_dominant(const Weight& lam, const WeylElement& w);
// Delta_+ cap w Delta_-  (inversion roots of w)
std::vector<Root> inversion_roots(const WeylElement& w);
// all reduced words (small elements only; used for word-independence checks)
std::vector<std::vector<int>> all_reduced_words(const WeylElement& w);
// the lexicographically largest reduced word, as an independent second word
std::vector<int> lexmax_reduced_word(const WeylElement& w);

// ---------------------------------------------------------------------------
// Symmetric group utilities for the shuffle combinatorics.
using Perm = std::vector<int>;  // one-line notation, 0-based

Perm perm_id(int n);
Perm perm_mult(const Perm& p, const Perm& q);  // (p*q)(i) = p[q[i]]
Perm perm_inv(const Perm& p);
int perm_len(const Perm& p);
Perm perm_of_word(const std::vector<int>& word, int n);
// canonical reduced word: repeatedly strip the minimal left descent
std::vector<int> lexmin_word(const Perm& p);
bool is_increasing_on_blocks(const Perm& p, const std::vector<int>& blocks);
// minimal-length left coset representatives of S_n / (S_b1 x ... x S_bk)
std::vector<Perm> coset_reps(const std::vector<int>& blocks);
Perm block_swap(int m, int n);  // w[m,n]: first m strands over last n
// w = u * y with u a minimal coset representative and y block-diagonal
void coset_split(const Perm& w, const std::vector<int>& blocks, Perm& u, Perm& y);

struct CosetRep {
  Perm perm;
  bool minimal;  // increasing on both blocks
};
std::vector<CosetRep> coset_reps_flagged(int m, int l);

}  // namespace qha
