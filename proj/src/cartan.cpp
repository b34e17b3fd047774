#include "qha/cartan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qha/linalg.hpp"

namespace qha {

int ht(const Root& b) { return std::accumulate(b.begin(), b.end(), 0); }

Root root_add(const Root& a, const Root& b) {
  Root r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Root root_sub(const Root& a, const Root& b) {
  Root r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

bool root_nonneg(const Root& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; });
}

int CartanDatum::index_of(int label) const {
  for (int i = 0; i < rank(); ++i)
    if (labels[i] == label) return i;
  throw std::invalid_argument("unknown index label " + std::to_string(label));
}

long CartanDatum::form_root(const Root& a, const Root& b) const {
  long s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < rank(); ++j)
      if (b[j]) s += static_cast<long>(a[i]) * b[j] * root_form(i, j);
  }
  return s;
}

long CartanDatum::form_weight_root(const Weight& x, const Root& b) const {
  // (alpha_i, alpha_j) = d_i a_ij, (Lambda_i, alpha_j) = delta_ij d_j
  long s = 0;
  for (int j = 0; j < rank(); ++j) {
    if (!b[j]) continue;
    long col = 0;
    for (int i = 0; i < rank(); ++i) col += x.al[i] * root_form(i, j);
    col += x.la[j] * sym[j];
    s += col * b[j];
  }
  return s;
}

long CartanDatum::form(const Weight& x, const Weight& y) const {
  auto xr = root_part(x);
  if (xr) return form_weight_root(y, *xr);
  auto yr = root_part(y);
  if (yr) return form_weight_root(x, *yr);
  throw std::logic_error("bilinear form needs one root-lattice argument");
}

long CartanDatum::pairing(int i, const Weight& x) const {
  long s = x.la[i];
  for (int j = 0; j < rank(); ++j) s += static_cast<long>(cartan[i][j]) * x.al[j];
  return s;
}

long CartanDatum::pairing_root(int i, const Root& b) const {
  long s = 0;
  for (int j = 0; j < rank(); ++j) s += static_cast<long>(cartan[i][j]) * b[j];
  return s;
}

Weight CartanDatum::alpha(int i) const {
  Weight w = zero_weight();
  w.al[i] = 1;
  return w;
}

Weight CartanDatum::lambda(int i) const {
  Weight w = zero_weight();
  w.la[i] = 1;
  return w;
}

Weight CartanDatum::zero_weight() const {
  Weight w;
  w.al.assign(rank(), 0);
  w.la.assign(rank(), 0);
  return w;
}

Weight CartanDatum::weight_add(const Weight& x, const Weight& y) const {
  Weight w = x;
  for (int i = 0; i < rank(); ++i) {
    w.al[i] += y.al[i];
    w.la[i] += y.la[i];
  }
  return w;
}

Weight CartanDatum::weight_sub(const Weight& x, const Weight& y) const {
  Weight w = x;
  for (int i = 0; i < rank(); ++i) {
    w.al[i] -= y.al[i];
    w.la[i] -= y.la[i];
  }
  return w;
}

Weight CartanDatum::weight_neg(const Weight& x) const {
  Weight w = x;
  for (int i = 0; i < rank(); ++i) {
    w.al[i] = -w.al[i];
    w.la[i] = -w.la[i];
  }
  return w;
}

Weight CartanDatum::weight_of_root(const Root& b) const {
  Weight w = zero_weight();
  for (int i = 0; i < rank(); ++i) w.al[i] = b[i];
  return w;
}

std::optional<Root> CartanDatum::root_part(const Weight& x) const {
  for (int i = 0; i < rank(); ++i)
    if (x.la[i] != 0) return std::nullopt;
  Root r(rank());
  for (int i = 0; i < rank(); ++i) r[i] = static_cast<int>(x.al[i]);
  return r;
}

bool CartanDatum::is_dominant(const Weight& x) const {
  for (int i = 0; i < rank(); ++i)
    if (pairing(i, x) < 0) return false;
  return true;
}

Weight CartanDatum::reflect(int i, const Weight& x) const {
  long c = pairing(i, x);
  Weight w = x;
  w.al[i] -= c;
  return w;
}

Root CartanDatum::reflect_root(int i, const Root& b) const {
  Root r = b;
  r[i] -= static_cast<int>(pairing_root(i, b));
  return r;
}

std::optional<Root> CartanDatum::null_root() const {
  // primitive positive integer kernel vector of the GCM, if any
  std::vector<SVec> rows;
  for (int i = 0; i < rank(); ++i) {
    SVec r;
    for (int j = 0; j < rank(); ++j)
      if (cartan[i][j]) r.emplace_back(j, Rat(cartan[i][j]));
    rows.push_back(std::move(r));
  }
  auto ns = nullspace(std::move(rows), rank());
  if (ns.empty()) return std::nullopt;
  if (ns.size() > 1) throw std::invalid_argument("Cartan matrix has corank > 1");
  // scale to integers
  mpz_class lcm = 1;
  for (auto& [j, c] : ns[0]) lcm = lcm * c.get_den() / gcd(lcm, c.get_den());
  Root d(rank(), 0);
  mpz_class g = 0;
  for (auto& [j, c] : ns[0]) {
    mpz_class v = c.get_num() * (lcm / c.get_den());
    d[j] = static_cast<int>(v.get_si());
    g = gcd(g, v);
  }
  for (auto& x : d) x /= static_cast<int>(g.get_si());
  if (d[0] < 0)
    for (auto& x : d) x = -x;
  if (!root_nonneg(d)) throw std::invalid_argument("non-affine degenerate Cartan matrix");
  return d;
}

std::vector<Root> CartanDatum::positive_roots_below(const Root& bound) const {
  auto below = [&](const Root& g) {
    for (int i = 0; i < rank(); ++i)
      if (g[i] > bound[i]) return false;
    return true;
  };
  std::set<Root> seen;
  std::vector<Root> work;
  for (int i = 0; i < rank(); ++i) {
    Root a(rank(), 0);
    a[i] = 1;
    if (below(a)) {
      seen.insert(a);
      work.push_back(a);
    }
  }
  // reflection closure; coordinates only grow along upward chains, so
  // clipping by the bound loses nothing
  while (!work.empty()) {
    Root g = work.back();
    work.pop_back();
    for (int i = 0; i < rank(); ++i) {
      Root h = reflect_root(i, g);
      if (!root_nonneg(h) || !below(h)) continue;
      if (seen.insert(h).second) work.push_back(h);
    }
  }
  if (auto d = null_root()) {
    for (int n = 1;; ++n) {
      Root nd(rank());
      for (int i = 0; i < rank(); ++i) nd[i] = n * (*d)[i];
      if (!below(nd)) break;
      seen.insert(nd);
    }
  }
  return {seen.begin(), seen.end()};
}

bool CartanDatum::is_positive_root(const Root& g) const {
  if (!root_nonneg(g) || ht(g) == 0) return false;
  auto roots = positive_roots_below(g);
  return std::find(roots.begin(), roots.end(), g) != roots.end();
}

std::shared_ptr<const CartanDatum> CartanDatum::make(
    std::vector<std::vector<int>> a, std::vector<int> d,
    std::vector<int> labels, std::string preset) {
  auto cd = std::make_shared<CartanDatum>();
  int n = static_cast<int>(a.size());
  if (n == 0) throw std::invalid_argument("empty Cartan matrix");
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("Cartan matrix is not square");
  if (static_cast<int>(d.size()) != n)
    throw std::invalid_argument("symmetrizer size mismatch");
  for (int i = 0; i < n; ++i) {
    if (a[i][i] != 2) throw std::invalid_argument("GCM needs 2 on the diagonal");
    if (d[i] <= 0) throw std::invalid_argument("symmetrizer must be positive");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) throw std::invalid_argument("GCM off-diagonal must be <= 0");
      if ((a[i][j] == 0) != (a[j][i] == 0))
        throw std::invalid_argument("GCM zero pattern must be symmetric");
      if (static_cast<long>(d[i]) * a[i][j] != static_cast<long>(d[j]) * a[j][i])
        throw std::invalid_argument("symmetrizer does not symmetrize the matrix");
    }
  }
  if (labels.empty()) {
    labels.resize(n);
    std::iota(labels.begin(), labels.end(), 1);
  }
  cd->labels = std::move(labels);
  cd->cartan = std::move(a);
  cd->sym = std::move(d);
  cd->preset = std::move(preset);
  return cd;
}

std::shared_ptr<const CartanDatum> CartanDatum::preset_by_name(const std::string& name) {
  if (name == "A1") return make({{2}}, {1}, {1}, name);
  if (name == "A2") return make({{2, -1}, {-1, 2}}, {1, 1}, {1, 2}, name);
  if (name == "A3")
    return make({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {1, 1, 1}, {1, 2, 3}, name);
  if (name == "A1^(1)" || name == "A1(1)")
    return make({{2, -2}, {-2, 2}}, {1, 1}, {0, 1}, "A1^(1)");
  if (name == "A2^(1)" || name == "A2(1)")
    return make({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}, {1, 1, 1}, {0, 1, 2},
                "A2^(1)");
  throw std::invalid_argument("unknown Cartan preset: " + name);
}

std::vector<std::string> CartanDatum::preset_names() {
  return {"A1", "A2", "A3", "A1^(1)", "A2^(1)"};
}

// ---------------------------------------------------------------------------
// Weyl elements

namespace {

// integer matrix of the root-lattice action, column j = image of alpha_j
using IMat = std::vector<std::vector<long>>;

IMat imat_id(int n) {
  IMat m(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IMat refl_mat(const CartanDatum& cd, int i) {
  int n = cd.rank();
  IMat m = imat_id(n);
  for (int j = 0; j < n; ++j) m[i][j] -= cd.cartan[i][j];
  return m;
}

IMat imat_mult(const IMat& a, const IMat& b) {
  int n = static_cast<int>(a.size());
  IMat c(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (!a[i][k]) continue;
      for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

bool imat_is_id(const IMat& a) {
  int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a[i][j] != (i == j)) return false;
  return true;
}

}  // namespace

WeylElement weyl_reduce(const CartanPtr& cd, const std::vector<int>& word) {
  int n = cd->rank();
  for (int i : word)
    if (i < 0 || i >= n) throw std::invalid_argument("word index out of range");
  IMat m = imat_id(n), minv = imat_id(n);
  for (int i : word) m = imat_mult(m, refl_mat(*cd, i));
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    minv = imat_mult(minv, refl_mat(*cd, *it));
  WeylElement w{cd, {}};
  while (!imat_is_id(m)) {
    int pick = -1;
    for (int i = 0; i < n && pick < 0; ++i) {
      // w^{-1} alpha_i < 0 iff column i of minv is <= 0
      bool neg = true, nonzero = false;
      for (int r = 0; r < n; ++r) {
        if (minv[r][i] > 0) neg = false;
        if (minv[r][i] != 0) nonzero = true;
      }
      if (neg && nonzero) pick = i;
    }
    if (pick < 0) throw std::logic_error("descent search failed");
    w.word.push_back(pick);
    m = imat_mult(refl_mat(*cd, pick), m);
    minv = imat_mult(minv, refl_mat(*cd, pick));
  }
  // the loop peeled w = s_{i1} w' from the left, so the collected word is
  // already in group order
  return w;
}

WeylElement weyl_mult(const WeylElement& a, const WeylElement& b) {
  std::vector<int> w = a.word;
  w.insert(w.end(), b.word.begin(), b.word.end());
  return weyl_reduce(a.cd, w);
}

WeylElement weyl_inverse(const WeylElement& w) {
  std::vector<int> rev(w.word.rbegin(), w.word.rend());
  return weyl_reduce(w.cd, rev);
}

Weight weyl_act(const WeylElement& w, const Weight& x) {
  Weight y = x;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
    y = w.cd->reflect(*it, y);
  return y;
}

Root weyl_act_root(const WeylElement& w, const Root& b) {
  Root y = b;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
    y = w.cd->reflect_root(*it, y);
  return y;
}

namespace {

bool bruhat_le_words(const CartanPtr& cd, const WeylElement& v, const WeylElement& w) {
  if (v.length() > w.length()) return false;
  if (v.is_identity()) return true;
  int i = w.word.front();
  WeylElement sw{cd, std::vector<int>(w.word.begin() + 1, w.word.end())};
  // left-descent test on canonical words: i is a left descent of v iff
  // l(s_i v) < l(v)
  std::vector<int> siv = {i};
  siv.insert(siv.end(), v.word.begin(), v.word.end());
  WeylElement sv = weyl_reduce(cd, siv);
  if (sv.length() < v.length()) return bruhat_le_words(cd, sv, sw);
  return bruhat_le_words(cd, v, sw);
}

}  // namespace

bool bruhat_le(const WeylElement& v, const WeylElement& w) {
  return bruhat_le_words(v.cd, v, w);
}

bool is_w_dominant(const Weight& lam, const WeylElement& w) {
  const auto& cd = *w.cd;
  Weight cur = lam;
  std::vector<long> vals;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
    vals.push_back(cd.pairing(*it, cur));
    cur = cd.reflect(*it, cur);
  }
  return std::all_of(vals.begin(), vals.end(), [](long v) { return v >= 0; });
}

std::vector<Root> inversion_roots(const WeylElement& w) {
  const auto& cd = *w.cd;
  std::vector<Root> out;
  for (std::size_t k = 0; k < w.word.size(); ++k) {
    Root g(cd.rank(), 0);
    g[w.word[k]] = 1;
    for (std::size_t j = k; j-- > 0;) g = cd.reflect_root(w.word[j], g);
    out.push_back(g);
  }
  return out;
}

namespace {

void reduced_words_rec(const WeylElement& w, std::vector<int>& acc,
                       std::vector<std::vector<int>>& out) {
  if (w.is_identity()) {
    out.push_back(acc);
    return;
  }
  const auto& cd = w.cd;
  for (int i = 0; i < cd->rank(); ++i) {
    std::vector<int> siw = {i};
    siw.insert(siw.end(), w.word.begin(), w.word.end());
    WeylElement sw = weyl_reduce(cd, siw);
    if (sw.length() < w.length()) {
      acc.push_back(i);
      reduced_words_rec(sw, acc, out);
      acc.pop_back();
    }
  }
}

}  // namespace

std::vector<std::vector<int>> all_reduced_words(const WeylElement& w) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  reduced_words_rec(w, acc, out);
  return out;
}

std::vector<int> lexmax_reduced_word(const WeylElement& w) {
  std::vector<int> word;
  WeylElement cur = w;
  while (!cur.is_identity()) {
    int pick = -1;
    WeylElement next;
    for (int i = cur.cd->rank(); i-- > 0;) {
      std::vector<int> siw = {i};
      siw.insert(siw.end(), cur.word.begin(), cur.word.end());
      WeylElement sw = weyl_reduce(cur.cd, siw);
      if (sw.length() < cur.length()) {
        pick = i;
        next = sw;
        break;
      }
    }
    word.push_back(pick);
    cur = next;
  }
  return word;
}

// ---------------------------------------------------------------------------
// Symmetric group utilities

Perm perm_id(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_mult(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

Perm perm_inv(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

int perm_len(const Perm& p) {
  int n = static_cast<int>(p.size()), c = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p[i] > p[j]) ++c;
  return c;
}

Perm perm_of_word(const std::vector<int>& word, int n) {
  Perm p = perm_id(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    Perm s = perm_id(n);
    std::swap(s[*it], s[*it + 1]);
    p = perm_mult(s, p);
  }
  return p;
}

std::vector<int> lexmin_word(const Perm& p) {
  std::vector<int> word;
  Perm cur = p;
  int n = static_cast<int>(p.size());
  for (;;) {
    int k = -1;
    Perm inv = perm_inv(cur);
    for (int i = 0; i + 1 < n; ++i)
      if (inv[i] > inv[i + 1]) {
        k = i;
        break;
      }
    if (k < 0) break;
    word.push_back(k);
    Perm s = perm_id(n);
    std::swap(s[k], s[k + 1]);
    cur = perm_mult(s, cur);
  }
  return word;
}

bool is_increasing_on_blocks(const Perm& p, const std::vector<int>& blocks) {
  int lo = 0;
  for (int b : blocks) {
    for (int i = lo; i + 1 < lo + b; ++i)
      if (p[i] > p[i + 1]) return false;
    lo += b;
  }
  return true;
}

namespace {

void coset_rec(const std::vector<int>& blocks, std::size_t b, std::vector<int>& left,
               Perm& acc, std::vector<Perm>& out) {
  if (b == blocks.size()) {
    out.push_back(acc);
    return;
  }
  // choose increasing values for block b from the remaining pool
  int k = blocks[b];
  int m = static_cast<int>(left.size());
  std::vector<int> idx(k);
  std::function<void(int, int)> choose = [&](int start, int depth) {
    if (depth == k) {
      std::vector<int> rest;
      std::size_t pos = acc.size();
      for (int t = 0; t < m; ++t) {
        bool used = std::find(idx.begin(), idx.begin() + k, t) != idx.begin() + k;
        if (!used) rest.push_back(left[t]);
      }
      for (int t = 0; t < k; ++t) acc.push_back(left[idx[t]]);
      std::vector<int> saved = left;
      left = rest;
      coset_rec(blocks, b + 1, left, acc, out);
      left = saved;
      acc.resize(pos);
      return;
    }
    for (int t = start; t < m; ++t) {
      idx[depth] = t;
      choose(t + 1, depth + 1);
    }
  };
  choose(0, 0);
}

}  // namespace

std::vector<Perm> coset_reps(const std::vector<int>& blocks) {
  int n = std::accumulate(blocks.begin(), blocks.end(), 0);
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  Perm acc;
  std::vector<Perm> out;
  coset_rec(blocks, 0, pool, acc, out);
  return out;
}

Perm block_swap(int m, int n) {
  Perm p(m + n);
  for (int k = 0; k < m; ++k) p[k] = k + n;
  for (int k = 0; k < n; ++k) p[m + k] = k;
  return p;
}

void coset_split(const Perm& w, const std::vector<int>& blocks, Perm& u, Perm& y) {
  int n = static_cast<int>(w.size());
  u.assign(n, 0);
  y.assign(n, 0);
  int lo = 0;
  for (int b : blocks) {
    std::vector<std::pair<int, int>> vals;  // (value, position in block)
    for (int i = 0; i < b; ++i) vals.emplace_back(w[lo + i], i);
    std::sort(vals.begin(), vals.end());
    for (int i = 0; i < b; ++i) {
      u[lo + i] = vals[i].first;
      y[lo + vals[i].second] = lo + i;
    }
    lo += b;
  }
}

std::vector<CosetRep> coset_reps_flagged(int m, int l) {
  // every permutation of S_{m+l}, flagged by minimality; kept exhaustive since
  // it is only used at desk scale
  int n = m + l;
  std::vector<CosetRep> out;
  Perm p = perm_id(n);
  std::sort(p.begin(), p.end());
  do {
    out.push_back({p, is_increasing_on_blocks(p, {m, l})});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace qha
