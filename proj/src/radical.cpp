#include "qha/radical.hpp"

#include <stdexcept>

#include "qha/homspace.hpp"

namespace qha {

namespace {

SVec flatten(const SMat& a) {
  SVec v;
  for (int c = 0; c < a.nc; ++c)
    for (const auto& [r, val] : a.col[c]) v.emplace_back(r * a.nc + c, val);
  std::sort(v.begin(), v.end());
  return v;
}

Rat trace_pair(const SMat& a, const SMat& b) {
  // tr(a b) = sum_{r,c} a[r][c] b[c][r]
  Rat t = 0;
  for (int c = 0; c < b.nc; ++c)
    for (const auto& [r, v] : b.col[c]) t += a.get(c, r) * v;
  return t;
}

// split into (word, degree)-pure components; valid for vectors of a graded
// subspace, which radical and socle are
void split_by_class(const GradedModule& m, const SVec& v, std::vector<SVec>& out) {
  std::map<std::pair<Sector, long>, SVec> parts;
  for (const auto& [i, c] : v)
    parts[{m.basis[i].word, m.basis[i].deg}].emplace_back(i, c);
  for (auto& [k, p] : parts) out.push_back(std::move(p));
}

}  // namespace

ActionClosure close_algebra(const GradedModule& m, const Limits& lim) {
  ActionClosure ac;
  int d = m.dim();
  Echelon span;
  auto push = [&](SMat mat, long deg) {
    if (mat.is_zero()) return false;
    if (!span.insert(flatten(mat))) return false;
    ac.basis.push_back(std::move(mat));
    ac.degs.push_back(deg);
    return true;
  };
  // sector projectors seed the closure
  auto sectors = m.sector_index();
  for (const auto& [w, idx] : sectors) {
    SMat p(d, d);
    for (int i : idx) p.add_entry(i, i, Rat(1));
    push(std::move(p), 0);
  }
  std::vector<long> xdeg(m.strands()), tdeg(m.strands() > 0 ? m.strands() - 1 : 0);
  for (std::size_t head = 0; head < ac.basis.size(); ++head) {
    if (static_cast<int>(ac.basis.size()) > lim.closure_max)
      throw ResourceCapError("action closure exceeds cap");
    SMat cur = ac.basis[head];  // copy: push may reallocate
    long cdeg = ac.degs[head];
    for (int k = 0; k < m.strands(); ++k) {
      SMat nx = smul(m.x[k], cur);
      if (!nx.is_zero()) {
        // x_k is homogeneous only sector by sector; the product still is
        // homogeneous because cur routes into fixed sectors. Recompute the
        // degree from a nonzero entry.
        long deg = 0;
        for (int c = 0; c < nx.nc && deg == 0; ++c)
          if (!nx.col[c].empty())
            deg = m.basis[nx.col[c].front().first].deg - m.basis[c].deg;
        push(std::move(nx), deg);
      }
    }
    for (int l = 0; l + 1 < m.strands(); ++l) {
      SMat nt = smul(m.tau[l], cur);
      if (!nt.is_zero()) {
        long deg = 0;
        for (int c = 0; c < nt.nc && deg == 0; ++c)
          if (!nt.col[c].empty())
            deg = m.basis[nt.col[c].front().first].deg - m.basis[c].deg;
        push(std::move(nt), deg);
      }
    }
    (void)cdeg;
  }
  return ac;
}

namespace {

std::vector<SMat> radical_matrices(const GradedModule& m, const Limits& lim) {
  if (m.is_zero()) return {};
  ActionClosure ac = close_algebra(m, lim);
  int na = static_cast<int>(ac.basis.size());
  // rad(A) = { a : tr(a b) = 0 for all b }, graded; pair only opposite degrees
  std::vector<SVec> rows(na);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      if (ac.degs[i] + ac.degs[j] != 0) continue;
      Rat t = trace_pair(ac.basis[j], ac.basis[i]);
      if (t != 0) sv_set(rows[j], i, t);
    }
  auto rad = nullspace(std::move(rows), na);
  std::vector<SMat> mats;
  for (const auto& coeffs : rad) {
    SMat r(m.dim(), m.dim());
    for (const auto& [i, c] : coeffs) r = sadd(r, c, ac.basis[i]);
    if (!r.is_zero()) mats.push_back(std::move(r));
  }
  return mats;
}

}  // namespace

std::vector<SVec> radical_vectors(const GradedModule& m, const Limits& lim) {
  std::vector<SVec> vecs;
  for (const auto& r : radical_matrices(m, lim))
    for (const auto& col : r.col)
      if (!col.empty()) split_by_class(m, col, vecs);
  return vecs;
}

GradedModule head(const GradedModule& m, const Limits& lim) {
  if (m.is_zero()) return m;
  auto rad = radical_vectors(m, lim);
  if (rad.empty()) return m;
  return quotient_module(m, rad);
}

GradedModule socle(const GradedModule& m, const Limits& lim) {
  if (m.is_zero()) return m;
  auto mats = radical_matrices(m, lim);
  if (mats.empty()) return m;
  // socle = common kernel of rad(A)
  std::vector<SVec> constraints;
  for (const auto& r : mats) {
    SMat rt = r.transpose();
    for (const auto& row : rt.col)
      if (!row.empty()) constraints.push_back(row);
  }
  auto ker = nullspace(std::move(constraints), m.dim());
  std::vector<SVec> pure;
  for (const auto& v : ker) split_by_class(m, v, pure);
  return submodule(m, std::move(pure), false);
}

bool is_simple_closure(const GradedModule& m, const Limits& lim) {
  if (m.is_zero()) return false;
  auto rad = radical_vectors(m, lim);
  if (!rad.empty()) return false;
  // semisimple: simple iff the endomorphism criterion agrees
  return is_simple_module(m);
}

}  // namespace qha
