#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qha/rational.hpp"

namespace qha {

// Sparse vector: index-sorted, zero-free.
using SVec = std::vector<std::pair<int, Rat>>;

inline void sv_normalize(SVec& v) {
  std::size_t k = 0;
  for (auto& e : v)
    if (e.second != 0) v[k++] = std::move(e);
  v.resize(k);
}

// y += c*x
void sv_axpy(SVec& y, const Rat& c, const SVec& x);
Rat sv_get(const SVec& v, int i);
void sv_set(SVec& v, int i, const Rat& c);
inline void sv_scale(SVec& v, const Rat& c) {
  if (c == 0) {
    v.clear();
    return;
  }
  for (auto& e : v) e.second *= c;
}

// Column-major sparse matrix over Q.
struct SMat {
  int nr = 0, nc = 0;
  std::vector<SVec> col;

  SMat() = default;
  SMat(int r, int c) : nr(r), nc(c), col(c) {}
  static SMat identity(int n);

  void add_entry(int r, int c, const Rat& v);
  Rat get(int r, int c) const { return sv_get(col[c], r); }
  bool is_zero() const;
  SVec apply(const SVec& x) const;  // A * x
  SMat transpose() const;
  std::size_t nnz() const;
};

SMat smul(const SMat& a, const SMat& b);
SMat sadd(const SMat& a, const Rat& c, const SMat& b);  // a + c*b
SMat sscale(const SMat& a, const Rat& c);
bool seq(const SMat& a, const SMat& b);

// Row-space echelon form; rows normalized to pivot coefficient 1.
struct Echelon {
  std::map<int, SVec> rows;

  SVec reduce(SVec v) const;
  bool insert(SVec v);  // true iff rank grew
  int dim() const { return static_cast<int>(rows.size()); }
  bool contains(const SVec& v) const;
  std::vector<SVec> basis() const;
};

// Echelon that tracks how each reduced row decomposes over the inserted
// vectors, so arbitrary vectors can be expressed in the inserted basis.
struct SpanSolver {
  struct Row {
    SVec vec;    // reduced, pivot coeff 1
    SVec combo;  // coordinates over inserted vectors
  };
  std::map<int, Row> rows;
  int n_inserted = 0;

  bool insert(const SVec& v);
  // coordinates of u over the inserted vectors, or nullopt if u is outside.
  std::optional<SVec> express(const SVec& u) const;
  int dim() const { return static_cast<int>(rows.size()); }
};

// Basis of {x : row . x = 0 for all rows}, x in Q^nvars.
std::vector<SVec> nullspace(std::vector<SVec> rows, int nvars);

int rank_of(const std::vector<SVec>& vecs);

}  // namespace qha
