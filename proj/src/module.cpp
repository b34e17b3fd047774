#include "qha/module.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qha {

std::map<Sector, std::vector<int>> GradedModule::sector_index() const {
  std::map<Sector, std::vector<int>> idx;
  for (int i = 0; i < dim(); ++i) idx[basis[i].word].push_back(i);
  return idx;
}

SVec GradedModule::apply_tau_word(const std::vector<int>& word, SVec v) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = tau[*it].apply(v);
  return v;
}

GradedModule unit_module(CartanPtr cd, QTablePtr qt) {
  GradedModule m;
  m.cd = std::move(cd);
  m.qt = std::move(qt);
  m.beta.assign(m.cd->rank(), 0);
  m.basis.push_back(BasisVec{{}, 0});
  m.known_simple = true;
  m.known_real_afr = true;
  return m;
}

GradedModule simple_L(CartanPtr cd, QTablePtr qt, int i) {
  GradedModule m;
  m.cd = std::move(cd);
  m.qt = std::move(qt);
  m.beta.assign(m.cd->rank(), 0);
  m.beta[i] = 1;
  m.basis.push_back(BasisVec{Sector{static_cast<std::uint8_t>(i)}, 0});
  m.x.push_back(SMat(1, 1));
  m.known_simple = true;
  m.known_real_afr = true;
  return m;
}

GradedModule one_dim_module(CartanPtr cd, QTablePtr qt, const std::vector<int>& word) {
  int n = static_cast<int>(word.size());
  for (int k = 0; k + 1 < n; ++k) {
    if (cd->root_form(word[k], word[k + 1]) >= 0)
      throw std::invalid_argument("one_dim_module: needs (a_{v_k}, a_{v_{k+1}}) < 0");
    if (k + 2 < n && word[k] == word[k + 2])
      throw std::invalid_argument("one_dim_module: needs a_{v_k} != a_{v_{k+2}}");
  }
  GradedModule m;
  m.cd = cd;
  m.qt = std::move(qt);
  m.beta.assign(cd->rank(), 0);
  Sector s;
  for (int v : word) {
    m.beta[v] += 1;
    s.push_back(static_cast<std::uint8_t>(v));
  }
  m.basis.push_back(BasisVec{s, 0});
  m.x.assign(n, SMat(1, 1));
  m.tau.assign(n > 0 ? n - 1 : 0, SMat(1, 1));
  verify_relations(m);  // zero actions must close the relations
  m.known_simple = true;
  return m;
}

GradedModule shift_module(const GradedModule& m, long a) {
  GradedModule r = m;
  for (auto& b : r.basis) b.deg += a;
  return r;
}

GradedModule dual_module(const GradedModule& m) {
  GradedModule r = m;
  for (auto& b : r.basis) b.deg = -b.deg;
  for (auto& mtx : r.x) mtx = mtx.transpose();
  for (auto& mtx : r.tau) mtx = mtx.transpose();
  r.known_simple = m.known_simple;
  r.known_real_afr = m.known_real_afr;
  return r;
}

GradedModule psi_star(const GradedModule& m) {
  GradedModule r = m;
  int n = m.strands();
  for (auto& b : r.basis) std::reverse(b.word.begin(), b.word.end());
  for (int k = 0; k < n; ++k) r.x[k] = m.x[n - 1 - k];
  for (int l = 0; l + 1 < n; ++l) r.tau[l] = sscale(m.tau[n - 2 - l], Rat(-1));
  return r;
}

// --- relations ---------------------------------------------------------------

namespace {

SVec basis_e(int i) { return SVec{{i, Rat(1)}}; }

std::string fmt_word(const Sector& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << int(w[i]);
  return os.str();
}

}  // namespace

std::vector<std::string> relation_violations(const GradedModule& m) {
  std::vector<std::string> bad;
  const auto& cd = *m.cd;
  const auto& qt = *m.qt;
  int n = m.strands(), d = m.dim();
  auto complain = [&](const std::string& s) {
    if (bad.size() < 32) bad.push_back(s);
  };

  // structural checks: sector routing and homogeneous degrees
  for (int k = 0; k < n; ++k) {
    if (m.x[k].nr != d || m.x[k].nc != d) complain("x matrix shape");
    for (int c = 0; c < d; ++c)
      for (const auto& [r, v] : m.x[k].col[c]) {
        if (m.basis[r].word != m.basis[c].word) complain("x_k mixes sectors");
        long want = cd.root_form(m.basis[c].word[k], m.basis[c].word[k]);
        if (m.basis[r].deg != m.basis[c].deg + want) complain("x_k degree");
      }
  }
  for (int l = 0; l + 1 < n; ++l) {
    for (int c = 0; c < d; ++c) {
      Sector sw = m.basis[c].word;
      std::swap(sw[l], sw[l + 1]);
      long want = -cd.root_form(m.basis[c].word[l], m.basis[c].word[l + 1]);
      for (const auto& [r, v] : m.tau[l].col[c]) {
        if (m.basis[r].word != sw) complain("tau_l sector routing");
        if (m.basis[r].deg != m.basis[c].deg + want) complain("tau_l degree");
      }
    }
  }

  auto eqv = [](const SVec& a, const SVec& b) { return a == b; };

  for (int c = 0; c < d; ++c) {
    const Sector& w = m.basis[c].word;
    SVec e = basis_e(c);
    // x_k x_l = x_l x_k
    for (int k = 0; k < n; ++k)
      for (int l = k + 1; l < n; ++l)
        if (!eqv(m.x[k].apply(m.x[l].apply(e)), m.x[l].apply(m.x[k].apply(e))))
          complain("x_k x_l != x_l x_k");
    // far commutativity
    for (int k = 0; k + 1 < n; ++k)
      for (int l = k + 2; l + 1 < n; ++l)
        if (!eqv(m.tau[k].apply(m.tau[l].apply(e)), m.tau[l].apply(m.tau[k].apply(e))))
          complain("far tau commutativity");
    // tau_k^2 = Q(x_k, x_{k+1})
    for (int k = 0; k + 1 < n; ++k) {
      SVec lhs = m.tau[k].apply(m.tau[k].apply(e));
      SVec rhs;
      for (const auto& [pu, pv, coef] : qt.q_monomials(w[k], w[k + 1])) {
        SVec t = e;
        for (int s = 0; s < pu; ++s) t = m.x[k].apply(t);
        for (int s = 0; s < pv; ++s) t = m.x[k + 1].apply(t);
        sv_axpy(rhs, coef, t);
      }
      if (!eqv(lhs, rhs)) complain("tau_k^2 != Q on sector " + fmt_word(w));
    }
    // (tau_k x_l - x_{s_k(l)} tau_k) e(v)
    for (int k = 0; k + 1 < n; ++k)
      for (int l = 0; l < n; ++l) {
        int skl = (l == k) ? k + 1 : (l == k + 1 ? k : l);
        SVec lhs = m.tau[k].apply(m.x[l].apply(e));
        SVec rhs = m.x[skl].apply(m.tau[k].apply(e));
        SVec diff = lhs;
        sv_axpy(diff, Rat(-1), rhs);
        SVec want;
        if (w[k] == w[k + 1] && l == k) want = SVec{{c, Rat(-1)}};
        if (w[k] == w[k + 1] && l == k + 1) want = SVec{{c, Rat(1)}};
        if (!eqv(diff, want)) complain("tau-x commutation");
      }
    // braid
    for (int k = 0; k + 2 < n; ++k) {
      SVec lhs = m.tau[k + 1].apply(m.tau[k].apply(m.tau[k + 1].apply(e)));
      SVec rhs = m.tau[k].apply(m.tau[k + 1].apply(m.tau[k].apply(e)));
      SVec diff = lhs;
      sv_axpy(diff, Rat(-1), rhs);
      SVec want;
      if (w[k] == w[k + 2]) {
        for (const auto& [pu, pv, pw, coef] : qt.qbar_monomials(w[k], w[k + 1])) {
          SVec t = e;
          for (int s = 0; s < pu; ++s) t = m.x[k].apply(t);
          for (int s = 0; s < pv; ++s) t = m.x[k + 1].apply(t);
          for (int s = 0; s < pw; ++s) t = m.x[k + 2].apply(t);
          sv_axpy(want, coef, t);
        }
      }
      if (!eqv(diff, want)) complain("braid relation on sector " + fmt_word(w));
    }
  }
  // nilpotency of each x_k (forced by grading; checked as a sanity bound)
  for (int k = 0; k < n; ++k) {
    SMat p = m.x[k];
    for (int it = 0; it < d && !p.is_zero(); ++it) p = smul(p, m.x[k]);
    if (!p.is_zero()) complain("x_k not nilpotent");
  }
  return bad;
}

void verify_relations(const GradedModule& m) {
  auto bad = relation_violations(m);
  if (!bad.empty()) {
    std::string msg = "relation check failed:";
    for (const auto& s : bad) msg += " [" + s + "]";
    throw std::logic_error(msg);
  }
}

// --- restriction -------------------------------------------------------------

SectorRestriction restrict_module(const GradedModule& m, const Root& a, const Root& b) {
  if (root_add(a, b) != m.beta)
    throw std::invalid_argument("restrict: a + b must equal beta");
  if (!root_nonneg(a) || !root_nonneg(b))
    throw std::invalid_argument("restrict: a, b must lie in Q+");
  SectorRestriction r;
  r.a = a;
  r.b = b;
  int na = ht(a), nb = ht(b);
  std::vector<int> back(m.dim(), -1);
  for (int i = 0; i < m.dim(); ++i) {
    Root pre(m.cd->rank(), 0);
    for (int k = 0; k < na; ++k) pre[m.basis[i].word[k]] += 1;
    if (pre == a) {
      back[i] = static_cast<int>(r.rows.size());
      r.rows.push_back(i);
      r.basis.push_back(m.basis[i]);
    }
  }
  auto cut = [&](const SMat& g) {
    SMat out(r.dim(), r.dim());
    for (int c = 0; c < r.dim(); ++c)
      for (const auto& [row, v] : g.col[r.rows[c]])
        if (back[row] >= 0) out.add_entry(back[row], c, v);
    return out;
  };
  for (int k = 0; k < na; ++k) r.x1.push_back(cut(m.x[k]));
  for (int l = 0; l + 1 < na; ++l) r.tau1.push_back(cut(m.tau[l]));
  for (int k = 0; k < nb; ++k) r.x2.push_back(cut(m.x[na + k]));
  for (int l = 0; l + 1 < nb; ++l) r.tau2.push_back(cut(m.tau[na + l]));
  return r;
}

// --- characters --------------------------------------------------------------

QChar qcharacter(const GradedModule& m) {
  QChar c;
  for (const auto& b : m.basis) c[b.word][b.deg] += 1;
  return c;
}

QChar qchar_shift(const QChar& c, long a) {
  QChar out;
  for (const auto& [w, p] : c)
    for (const auto& [d, k] : p) out[w][d + a] = k;
  return out;
}

QChar qchar_bar(const QChar& c) {
  QChar out;
  for (const auto& [w, p] : c)
    for (const auto& [d, k] : p) out[w][-d] = k;
  return out;
}

QChar qchar_shuffle(const CartanDatum& cd, const QChar& a, const QChar& b) {
  QChar out;
  for (const auto& [wa, pa] : a)
    for (const auto& [wb, pb] : b) {
      int mlen = static_cast<int>(wa.size()), nlen = static_cast<int>(wb.size());
      Sector cat = wa;
      cat.insert(cat.end(), wb.begin(), wb.end());
      for (const Perm& w : coset_reps({mlen, nlen})) {
        long tdeg = 0;
        for (int k = 0; k < mlen; ++k)
          for (int l = mlen; l < mlen + nlen; ++l)
            if (w[k] > w[l]) tdeg -= cd.root_form(cat[k], cat[l]);
        Sector word(cat.size());
        Perm inv = perm_inv(w);
        for (std::size_t j = 0; j < cat.size(); ++j) word[j] = cat[inv[j]];
        for (const auto& [da, ka] : pa)
          for (const auto& [db, kb] : pb) out[word][da + db + tdeg] += ka * kb;
      }
    }
  return out;
}

long qchar_dim(const QChar& c) {
  long n = 0;
  for (const auto& [w, p] : c)
    for (const auto& [d, k] : p) n += k;
  return n;
}

std::optional<long> qchar_shift_match(const QChar& from, const QChar& to) {
  if (from.size() != to.size()) return std::nullopt;
  if (from.empty()) return 0L;
  long t = to.begin()->second.begin()->first - from.begin()->second.begin()->first;
  return qchar_shift(from, t) == to ? std::optional<long>(t) : std::nullopt;
}

std::optional<long> selfdual_shift_of(const QChar& c) {
  // q^a c bar-symmetric needs -(d+a) matching (d+a): center -a = (min+max)/2
  std::optional<long> center;
  for (const auto& [w, p] : c) {
    long lo = p.begin()->first, hi = p.rbegin()->first;
    if ((lo + hi) % 2 != 0) return std::nullopt;
    long mid = (lo + hi) / 2;
    if (center && *center != mid) return std::nullopt;
    center = mid;
  }
  if (!center) return 0L;
  long a = -*center;
  return qchar_bar(qchar_shift(c, a)) == qchar_shift(c, a) ? std::optional<long>(a)
                                                           : std::nullopt;
}

GradedModule normalize_selfdual(const GradedModule& m) {
  auto a = selfdual_shift_of(qcharacter(m));
  return a ? shift_module(m, *a) : m;
}

// --- statistics --------------------------------------------------------------

int eps_i(const GradedModule& m, int i) {
  int best = 0;
  for (const auto& b : m.basis) {
    int run = 0;
    while (run < static_cast<int>(b.word.size()) && b.word[run] == i) ++run;
    best = std::max(best, run);
  }
  return best;
}

int eps_star_i(const GradedModule& m, int i) {
  int best = 0;
  for (const auto& b : m.basis) {
    int run = 0, n = static_cast<int>(b.word.size());
    while (run < n && b.word[n - 1 - run] == i) ++run;
    best = std::max(best, run);
  }
  return best;
}

ModuleStats stats(const GradedModule& m, int i) {
  if (m.is_zero()) throw std::invalid_argument("stats of the zero module");
  ModuleStats s;
  s.eps = eps_i(m, i);
  s.eps_star = eps_star_i(m, i);
  s.wt_i = -m.cd->pairing_root(i, m.beta);
  s.delta = s.eps + s.eps_star + s.wt_i;
  return s;
}

std::optional<long> iso_simple(const GradedModule& a, const GradedModule& b) {
  if (a.beta != b.beta) return std::nullopt;
  return qchar_shift_match(qcharacter(a), qcharacter(b));
}

}  // namespace qha
