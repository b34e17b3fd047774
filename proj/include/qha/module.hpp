#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qha/linalg.hpp"
#include "qha/rewrite.hpp"

namespace qha {

struct BasisVec {
  Sector word;
  long deg = 0;
};

// Finite-dimensional graded R(beta)-module given by a sector- and
// degree-homogeneous basis plus exact generator matrices.
struct GradedModule {
  CartanPtr cd;
  QTablePtr qt;
  Root beta;
  std::vector<BasisVec> basis;
  std::vector<SMat> x;    // one per strand
  std::vector<SMat> tau;  // one per adjacent pair

  // provenance flags: route fast paths, never substitute for a check
  bool known_simple = false;
  bool known_real_afr = false;

  int dim() const { return static_cast<int>(basis.size()); }
  int strands() const { return ht(beta); }
  bool is_zero() const { return basis.empty(); }
  std::map<Sector, std::vector<int>> sector_index() const;

  SVec apply_x(int k, const SVec& v) const { return x[k].apply(v); }
  SVec apply_tau(int l, const SVec& v) const { return tau[l].apply(v); }
  SVec apply_tau_word(const std::vector<int>& word, SVec v) const;
};

// --- constructors ------------------------------------------------------------
GradedModule unit_module(CartanPtr cd, QTablePtr qt);
GradedModule simple_L(CartanPtr cd, QTablePtr qt, int i);  // internal index
// one-dimensional module <v1,...,vn>; throws if the defining relations fail
GradedModule one_dim_module(CartanPtr cd, QTablePtr qt, const std::vector<int>& word);
GradedModule shift_module(const GradedModule& m, long a);  // q^a M
GradedModule dual_module(const GradedModule& m);
GradedModule psi_star(const GradedModule& m);

// --- relations ---------------------------------------------------------------
std::vector<std::string> relation_violations(const GradedModule& m);
void verify_relations(const GradedModule& m);  // throws on failure

// --- restriction -------------------------------------------------------------
// e(a,b)M with its two commuting block actions
struct SectorRestriction {
  Root a, b;
  std::vector<int> rows;  // indices into the parent basis
  std::vector<BasisVec> basis;
  std::vector<SMat> x1, tau1;  // R(a) action
  std::vector<SMat> x2, tau2;  // R(b) action
  int dim() const { return static_cast<int>(rows.size()); }
};
SectorRestriction restrict_module(const GradedModule& m, const Root& a, const Root& b);

// --- characters --------------------------------------------------------------
using LPoly = std::map<long, long>;            // exponent -> coefficient
using QChar = std::map<Sector, LPoly>;         // word -> graded multiplicity

QChar qcharacter(const GradedModule& m);
QChar qchar_shift(const QChar& c, long a);
QChar qchar_bar(const QChar& c);  // q -> q^{-1}
QChar qchar_shuffle(const CartanDatum& cd, const QChar& a, const QChar& b);
long qchar_dim(const QChar& c);
std::optional<long> qchar_shift_match(const QChar& from, const QChar& to);  // to = q^t from
std::optional<long> selfdual_shift_of(const QChar& c);

// shift m so its character is bar-symmetric; returns m unchanged if no such
// shift exists
GradedModule normalize_selfdual(const GradedModule& m);

// --- statistics --------------------------------------------------------------
struct ModuleStats {
  int eps = 0;
  int eps_star = 0;
  long wt_i = 0;
  long delta = 0;
};
int eps_i(const GradedModule& m, int i);
int eps_star_i(const GradedModule& m, int i);
ModuleStats stats(const GradedModule& m, int i);

// character equality up to shift; the isomorphism test for simples
std::optional<long> iso_simple(const GradedModule& a, const GradedModule& b);

}  // namespace qha
