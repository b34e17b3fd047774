#include "qha/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace qha {

Limits Limits::from_env() {
  Limits lim;
  if (const char* s = std::getenv("QHA_HT_MAX")) lim.ht_max = std::atoi(s);
  if (const char* s = std::getenv("QHA_DIM_MAX")) lim.dim_max = std::atoi(s);
  return lim;
}

void sv_axpy(SVec& y, const Rat& c, const SVec& x) {
  if (c == 0 || x.empty()) return;
  SVec out;
  out.reserve(y.size() + x.size());
  auto iy = y.begin();
  auto ix = x.begin();
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
      out.push_back(*iy++);
    } else if (iy == y.end() || ix->first < iy->first) {
      out.emplace_back(ix->first, c * ix->second);
      ++ix;
    } else {
      Rat v = iy->second + c * ix->second;
      if (v != 0) out.emplace_back(iy->first, std::move(v));
      ++iy;
      ++ix;
    }
  }
  y = std::move(out);
}

Rat sv_get(const SVec& v, int i) {
  auto it = std::lower_bound(v.begin(), v.end(), i,
                             [](const auto& e, int k) { return e.first < k; });
  if (it != v.end() && it->first == i) return it->second;
  return Rat(0);
}

void sv_set(SVec& v, int i, const Rat& c) {
  auto it = std::lower_bound(v.begin(), v.end(), i,
                             [](const auto& e, int k) { return e.first < k; });
  if (it != v.end() && it->first == i) {
    if (c == 0)
      v.erase(it);
    else
      it->second = c;
  } else if (c != 0) {
    v.insert(it, {i, c});
  }
}

SMat SMat::identity(int n) {
  SMat m(n, n);
  for (int i = 0; i < n; ++i) m.col[i] = {{i, Rat(1)}};
  return m;
}

void SMat::add_entry(int r, int c, const Rat& v) {
  if (v == 0) return;
  Rat cur = sv_get(col[c], r);
  sv_set(col[c], r, cur + v);
}

bool SMat::is_zero() const {
  for (const auto& c : col)
    if (!c.empty()) return false;
  return true;
}

SVec SMat::apply(const SVec& x) const {
  SVec y;
  for (const auto& [j, v] : x) sv_axpy(y, v, col[j]);
  return y;
}

SMat SMat::transpose() const {
  SMat t(nc, nr);
  for (int j = 0; j < nc; ++j)
    for (const auto& [i, v] : col[j]) t.col[i].emplace_back(j, v);
  return t;  // entries pushed in increasing j per row: already sorted
}

std::size_t SMat::nnz() const {
  std::size_t n = 0;
  for (const auto& c : col) n += c.size();
  return n;
}

SMat smul(const SMat& a, const SMat& b) {
  SMat r(a.nr, b.nc);
  for (int j = 0; j < b.nc; ++j) r.col[j] = a.apply(b.col[j]);
  return r;
}

SMat sadd(const SMat& a, const Rat& c, const SMat& b) {
  SMat r = a;
  for (int j = 0; j < b.nc; ++j) sv_axpy(r.col[j], c, b.col[j]);
  return r;
}

SMat sscale(const SMat& a, const Rat& c) {
  SMat r = a;
  for (auto& cc : r.col) sv_scale(cc, c);
  return r;
}

bool seq(const SMat& a, const SMat& b) {
  if (a.nr != b.nr || a.nc != b.nc) return false;
  for (int j = 0; j < a.nc; ++j)
    if (a.col[j] != b.col[j]) return false;
  return true;
}

SVec Echelon::reduce(SVec v) const {
  for (;;) {
    if (v.empty()) return v;
    auto it = rows.find(v.front().first);
    if (it == rows.end()) {
      // try deeper pivots too
      bool hit = false;
      for (const auto& [i, c] : v) {
        auto jt = rows.find(i);
        if (jt != rows.end()) {
          sv_axpy(v, -c, jt->second);
          hit = true;
          break;
        }
      }
      if (!hit) return v;
    } else {
      sv_axpy(v, -v.front().second, it->second);
    }
  }
}

bool Echelon::insert(SVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Rat lead = v.front().second;
  sv_scale(v, Rat(1) / lead);
  rows.emplace(v.front().first, std::move(v));
  return true;
}

bool Echelon::contains(const SVec& v) const { return reduce(v).empty(); }

std::vector<SVec> Echelon::basis() const {
  std::vector<SVec> b;
  b.reserve(rows.size());
  for (const auto& [p, r] : rows) b.push_back(r);
  return b;
}

bool SpanSolver::insert(const SVec& v) {
  SVec cur = v;
  SVec combo = {{n_inserted, Rat(1)}};
  ++n_inserted;
  for (;;) {
    if (cur.empty()) return false;
    auto it = rows.find(cur.front().first);
    if (it == rows.end()) break;
    Rat c = cur.front().second;
    sv_axpy(cur, -c, it->second.vec);
    sv_axpy(combo, -c, it->second.combo);
  }
  Rat lead = cur.front().second;
  sv_scale(cur, Rat(1) / lead);
  sv_scale(combo, Rat(1) / lead);
  rows.emplace(cur.front().first, Row{std::move(cur), std::move(combo)});
  return true;
}

std::optional<SVec> SpanSolver::express(const SVec& u) const {
  SVec cur = u, combo;
  while (!cur.empty()) {
    auto it = rows.find(cur.front().first);
    if (it == rows.end()) return std::nullopt;
    Rat c = cur.front().second;
    sv_axpy(cur, -c, it->second.vec);
    sv_axpy(combo, c, it->second.combo);
  }
  return combo;
}

std::vector<SVec> nullspace(std::vector<SVec> rows, int nvars) {
  // RREF over the constraint rows, then read off free-variable solutions.
  std::map<int, SVec> red;  // pivot -> row with pivot coeff 1
  for (auto& r : rows) {
    SVec v = std::move(r);
    for (;;) {
      sv_normalize(v);
      if (v.empty()) break;
      auto it = red.find(v.front().first);
      if (it == red.end()) break;
      sv_axpy(v, -v.front().second, it->second);
    }
    if (v.empty()) continue;
    sv_scale(v, Rat(1) / v.front().second);
    red.emplace(v.front().first, std::move(v));
  }
  // back-substitute to full RREF (descending pivots: larger rows are clean)
  for (auto it = red.rbegin(); it != red.rend(); ++it) {
    SVec& r = it->second;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [j, c] : r) {
        if (j == it->first) continue;
        auto jt = red.find(j);
        if (jt != red.end()) {
          sv_axpy(r, -c, jt->second);
          changed = true;
          break;
        }
      }
    }
  }
  std::vector<SVec> basis;
  for (int f = 0; f < nvars; ++f) {
    if (red.count(f)) continue;
    SVec sol = {{f, Rat(1)}};
    for (const auto& [p, r] : red) {
      Rat c = sv_get(r, f);
      if (c != 0) sv_set(sol, p, -c);
    }
    sv_normalize(sol);
    basis.push_back(std::move(sol));
  }
  return basis;
}

int rank_of(const std::vector<SVec>& vecs) {
  Echelon e;
  for (const auto& v : vecs) e.insert(v);
  return e.dim();
}

}  // namespace qha
