#include "qha/conv.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qha {

int ConvModule::tag(int rep, const std::vector<int>& t) const {
  int idx = rep;
  for (std::size_t j = 0; j < t.size(); ++j) idx = idx * fdim[j] + t[j];
  return idx;
}

std::vector<int> ConvModule::tuple_of(int tg) const {
  std::vector<int> t(fdim.size());
  for (std::size_t j = fdim.size(); j-- > 0;) {
    t[j] = tg % fdim[j];
    tg /= fdim[j];
  }
  return t;
}

ConvModule convolve_list(const std::vector<const GradedModule*>& factors,
                         const Limits& lim) {
  if (factors.empty()) throw std::invalid_argument("convolve_list: no factors");
  CartanPtr cd = factors[0]->cd;
  QTablePtr qt = factors[0]->qt;
  ConvModule cm;
  cm.factors.reserve(factors.size());
  Root beta(cd->rank(), 0);
  for (const auto* f : factors) {
    if (f->cd != cd || f->qt != qt)
      throw std::invalid_argument("convolve_list: mixed Cartan/Q contexts");
    cm.factors.push_back(*f);
    cm.blocks.push_back(f->strands());
    cm.fdim.push_back(f->dim());
    beta = root_add(beta, f->beta);
  }
  bool any_zero = std::any_of(factors.begin(), factors.end(),
                              [](const GradedModule* f) { return f->is_zero(); });
  if (any_zero) {
    cm.mod.cd = cd;
    cm.mod.qt = qt;
    cm.mod.beta = beta;
    int nz = ht(beta);
    cm.mod.x.assign(nz, SMat(0, 0));
    cm.mod.tau.assign(nz > 0 ? nz - 1 : 0, SMat(0, 0));
    return cm;
  }
  if (ht(beta) > lim.ht_max)
    throw ResourceCapError("convolution exceeds ht cap " + std::to_string(lim.ht_max));
  int n = ht(beta);
  cm.reps = coset_reps(cm.blocks);
  cm.tuples = std::accumulate(cm.fdim.begin(), cm.fdim.end(), 1, std::multiplies<>());
  long dim = static_cast<long>(cm.reps.size()) * cm.tuples;
  if (dim > lim.dim_max)
    throw ResourceCapError("convolution dimension " + std::to_string(dim) +
                           " exceeds cap");
  for (std::size_t r = 0; r < cm.reps.size(); ++r)
    if (cm.reps[r] == perm_id(n)) cm.e_rep = static_cast<int>(r);

  GradedModule& m = cm.mod;
  m.cd = cd;
  m.qt = qt;
  m.beta = beta;
  StrandAlgebra alg(cd, qt, n);

  // enumerate tags: basis words and degrees
  std::vector<int> t(factors.size(), 0);
  m.basis.resize(dim);
  std::map<Perm, int> rep_index;
  for (std::size_t r = 0; r < cm.reps.size(); ++r) rep_index[cm.reps[r]] = static_cast<int>(r);
  auto for_each_tuple = [&](auto&& fn) {
    std::vector<int> tt(factors.size(), 0);
    for (;;) {
      fn(tt);
      int j = static_cast<int>(factors.size()) - 1;
      while (j >= 0 && ++tt[j] == cm.fdim[j]) tt[j--] = 0;
      if (j < 0) break;
    }
  };
  for_each_tuple([&](const std::vector<int>& tt) {
    Sector cat;
    long deg = 0;
    for (std::size_t j = 0; j < factors.size(); ++j) {
      const auto& b = cm.factors[j].basis[tt[j]];
      cat.insert(cat.end(), b.word.begin(), b.word.end());
      deg += b.deg;
    }
    for (std::size_t r = 0; r < cm.reps.size(); ++r) {
      const Perm& u = cm.reps[r];
      BasisVec bv;
      bv.word = alg.apply_perm(u, cat);
      bv.deg = deg + alg.sector_degree_tau(u, cat);
      m.basis[cm.tag(static_cast<int>(r), tt)] = std::move(bv);
    }
  });

  // generator action through the rewriting engine
  m.x.assign(n, SMat(static_cast<int>(dim), static_cast<int>(dim)));
  m.tau.assign(n - 1 >= 0 ? n - 1 : 0, SMat(static_cast<int>(dim), static_cast<int>(dim)));

  struct ActKey {
    bool is_x;
    int g;
    int rep;
    Sector nu;
    auto operator<=>(const ActKey&) const = default;
  };
  std::map<ActKey, std::vector<SplitTerm>> memo;
  std::vector<int> off(factors.size(), 0);
  for (std::size_t j = 1; j < factors.size(); ++j) off[j] = off[j - 1] + cm.blocks[j - 1];

  auto eval_block = [&](const SplitTerm& st, const std::vector<int>& tt) {
    // returns factor-wise sparse vectors v_j = tau_{y_j} x^{xe_j} b_{t_j}
    std::vector<SVec> parts(factors.size());
    for (std::size_t j = 0; j < factors.size(); ++j) {
      const GradedModule& f = cm.factors[j];
      SVec v = {{tt[j], Rat(1)}};
      for (int k = 0; k < cm.blocks[j]; ++k)
        for (int e = 0; e < st.xe[off[j] + k]; ++e) v = f.x[k].apply(v);
      Perm local(cm.blocks[j]);
      for (int k = 0; k < cm.blocks[j]; ++k) local[k] = st.y[off[j] + k] - off[j];
      v = f.apply_tau_word(lexmin_word(local), std::move(v));
      parts[j] = std::move(v);
    }
    return parts;
  };

  for_each_tuple([&](const std::vector<int>& tt) {
    Sector cat;
    for (std::size_t j = 0; j < factors.size(); ++j) {
      const auto& b = cm.factors[j].basis[tt[j]];
      cat.insert(cat.end(), b.word.begin(), b.word.end());
    }
    for (std::size_t r = 0; r < cm.reps.size(); ++r) {
      int col = cm.tag(static_cast<int>(r), tt);
      for (int gi = 0; gi < 2 * n - 1; ++gi) {
        bool is_x = gi < n;
        int g = is_x ? gi : gi - n;
        ActKey key{is_x, g, static_cast<int>(r), cat};
        auto it = memo.find(key);
        if (it == memo.end()) {
          std::vector<Sym> seq = {is_x ? sym_x(g) : sym_tau(g)};
          for (int c : lexmin_word(cm.reps[r])) seq.push_back(sym_tau(c));
          it = memo.emplace(key, alg.straighten(seq, cm.blocks, cat)).first;
        }
        SMat& target = is_x ? m.x[g] : m.tau[g];
        for (const SplitTerm& st : it->second) {
          auto ri = rep_index.find(st.u);
          if (ri == rep_index.end()) throw std::logic_error("split produced non-rep");
          auto parts = eval_block(st, tt);
          // expand the tensor product of sparse factor vectors
          std::vector<std::pair<std::vector<int>, Rat>> combos = {{{}, st.c}};
          for (const auto& part : parts) {
            std::vector<std::pair<std::vector<int>, Rat>> next;
            for (const auto& [prefix, c] : combos)
              for (const auto& [bi, bc] : part) {
                auto p2 = prefix;
                p2.push_back(bi);
                next.emplace_back(std::move(p2), c * bc);
              }
            combos = std::move(next);
          }
          for (const auto& [tuple2, c] : combos)
            target.add_entry(cm.tag(ri->second, tuple2), col, c);
        }
      }
    }
  });
  return cm;
}

GradedModule convolve(const GradedModule& a, const GradedModule& b, const Limits& lim) {
  return convolve_list({&a, &b}, lim).mod;
}

GradedModule simple_Ln(CartanPtr cd, QTablePtr qt, int i, int n, const Limits& lim) {
  if (n == 0) return unit_module(cd, qt);
  GradedModule li = simple_L(cd, qt, i);
  std::vector<const GradedModule*> fs(n, &li);
  Limits wide = lim;
  wide.ht_max = std::max(lim.ht_max, n);
  GradedModule m = convolve_list(fs, wide).mod;
  long di = cd->root_form(i, i) / 2;
  m = shift_module(m, di * (static_cast<long>(n) * (n - 1) / 2));
  m.known_simple = true;
  m.known_real_afr = true;
  return m;
}

SMat induce_hom(const ConvModule& src, const GradedModule& tgt,
                const std::function<SVec(const std::vector<int>&)>& estratum) {
  SMat F(tgt.dim(), src.mod.dim());
  std::map<std::vector<int>, SVec> images;
  for (int col = 0; col < src.mod.dim(); ++col) {
    auto t = src.tuple_of(col % src.tuples);
    auto it = images.find(t);
    if (it == images.end()) it = images.emplace(t, estratum(t)).first;
    SVec v = tgt.apply_tau_word(lexmin_word(src.reps[src.rep_of(col)]), it->second);
    F.col[col] = std::move(v);
  }
  return F;
}

GradedModule submodule(const GradedModule& m, std::vector<SVec> gens, bool close) {
  Echelon ech;
  std::vector<SVec> work;
  for (auto& g : gens) {
    SVec r = ech.reduce(g);
    if (!r.empty()) {
      ech.insert(r);
      work.push_back(r);
    }
  }
  if (close) {
    while (!work.empty()) {
      SVec v = work.back();
      work.pop_back();
      for (int k = 0; k < m.strands(); ++k) {
        SVec w = ech.reduce(m.x[k].apply(v));
        if (!w.empty()) {
          ech.insert(w);
          work.push_back(w);
        }
      }
      for (int l = 0; l + 1 < m.strands(); ++l) {
        SVec w = ech.reduce(m.tau[l].apply(v));
        if (!w.empty()) {
          ech.insert(w);
          work.push_back(w);
        }
      }
    }
  }
  auto rows = ech.basis();
  // each spanning vector must be sector/degree pure
  GradedModule sub;
  sub.cd = m.cd;
  sub.qt = m.qt;
  sub.beta = m.beta;
  SpanSolver solver;
  for (const auto& r : rows) {
    const BasisVec& ref = m.basis[r.front().first];
    for (const auto& [i, c] : r)
      if (m.basis[i].word != ref.word || m.basis[i].deg != ref.deg)
        throw std::logic_error("submodule spanned by non-homogeneous vectors");
    sub.basis.push_back(ref);
    solver.insert(r);
  }
  int d = sub.dim();
  auto express_matrix = [&](const SMat& g) {
    SMat out(d, d);
    for (int c = 0; c < d; ++c) {
      auto coords = solver.express(g.apply(rows[c]));
      if (!coords) throw std::logic_error("submodule not action-stable");
      out.col[c] = *coords;
    }
    return out;
  };
  for (int k = 0; k < m.strands(); ++k) sub.x.push_back(express_matrix(m.x[k]));
  for (int l = 0; l + 1 < m.strands(); ++l) sub.tau.push_back(express_matrix(m.tau[l]));
  return sub;
}

GradedModule quotient_module(const GradedModule& m, const std::vector<SVec>& subv) {
  Echelon ech;
  for (const auto& v : subv) ech.insert(v);
  std::vector<int> keep;  // non-pivot coordinates survive
  for (int i = 0; i < m.dim(); ++i)
    if (!ech.rows.count(i)) keep.push_back(i);
  std::vector<int> back(m.dim(), -1);
  for (std::size_t j = 0; j < keep.size(); ++j) back[keep[j]] = static_cast<int>(j);
  GradedModule q;
  q.cd = m.cd;
  q.qt = m.qt;
  q.beta = m.beta;
  for (int i : keep) q.basis.push_back(m.basis[i]);
  int d = static_cast<int>(keep.size());
  auto project = [&](const SMat& g) {
    SMat out(d, d);
    for (int c = 0; c < d; ++c) {
      SVec v = ech.reduce(g.col[keep[c]]);
      for (const auto& [i, val] : v) {
        if (back[i] < 0) throw std::logic_error("quotient projection failed");
        out.add_entry(back[i], c, val);
      }
    }
    return out;
  };
  for (int k = 0; k < m.strands(); ++k) q.x.push_back(project(m.x[k]));
  for (int l = 0; l + 1 < m.strands(); ++l) q.tau.push_back(project(m.tau[l]));
  return q;
}

namespace {

// K = { h(u_gen) : h in Hom_{block2}(L, e(a,b)M) }, the multiplicity space of
// the known simple tensor factor L in the given block, carrying the action of
// the other block.
GradedModule extract_factor(const GradedModule& m, const SectorRestriction& res,
                            const GradedModule& ln, bool ln_in_second_block) {
  const auto& bx = ln_in_second_block ? res.x2 : res.x1;
  const auto& bt = ln_in_second_block ? res.tau2 : res.tau1;
  const auto& kx = ln_in_second_block ? res.x1 : res.x2;
  const auto& kt = ln_in_second_block ? res.tau1 : res.tau2;
  int nb = static_cast<int>(bx.size());
  int dV = res.dim(), dL = ln.dim();
  if (dV == 0) throw std::logic_error("extract_factor on empty restriction");
  // solve for block-linear maps L -> V; the L-block of V sits at a fixed word
  // offset, so sector matching is implicit in the full-word grouping below
  int off = ln_in_second_block ? ht(res.a) : 0;
  auto var = [&](int r, int c) { return r * dL + c; };
  std::vector<SVec> rows;
  auto add_rows = [&](const SMat& gV, const SMat& gL) {
    // F gL - gV F = 0
    for (int r = 0; r < dV; ++r)
      for (int c = 0; c < dL; ++c) {
        SVec row;
        for (const auto& [k, v] : gL.col[c]) sv_set(row, var(r, k), sv_get(row, var(r, k)) + v);
        for (int k = 0; k < dV; ++k) {
          Rat g = gV.get(r, k);
          if (g != 0) sv_set(row, var(k, c), sv_get(row, var(k, c)) - g);
        }
        sv_normalize(row);
        if (!row.empty()) rows.push_back(std::move(row));
      }
  };
  for (int k = 0; k < nb; ++k) add_rows(bx[k], ln.x[k]);
  for (int l = 0; l + 1 < nb; ++l) add_rows(bt[l], ln.tau[l]);
  // sector constraints: F[r][c] = 0 unless the L-block word of row r matches
  // word of L-basis c (and the K-block word is constant along L-orbits)
  for (int r = 0; r < dV; ++r)
    for (int c = 0; c < dL; ++c) {
      bool ok = true;
      for (int k = 0; k < nb; ++k)
        if (res.basis[r].word[off + k] != ln.basis[c].word[k]) ok = false;
      if (!ok) rows.push_back(SVec{{var(r, c), Rat(1)}});
    }
  auto homs = nullspace(std::move(rows), dV * dL);
  // evaluate each hom at a generating vector of L (any nonzero vector of a
  // simple module generates)
  int ugen = 0;
  std::vector<SVec> kvecs;
  for (const auto& h : homs) {
    SVec v;
    for (const auto& [id, c] : h)
      if (id % dL == ugen) sv_set(v, id / dL, c);
    sv_normalize(v);
    if (!v.empty()) kvecs.push_back(std::move(v));
  }
  // the multiplicity space inside V, as a module over the complementary block
  GradedModule proxy;
  proxy.cd = m.cd;
  proxy.qt = m.qt;
  proxy.beta = ln_in_second_block ? res.a : res.b;
  int nk = ht(proxy.beta);
  proxy.basis.reserve(dV);
  int koff = ln_in_second_block ? 0 : ht(res.a);
  for (int r = 0; r < dV; ++r) {
    BasisVec bv;
    bv.word.assign(res.basis[r].word.begin() + koff,
                   res.basis[r].word.begin() + koff + nk);
    bv.deg = res.basis[r].deg - ln.basis[ugen].deg;
    proxy.basis.push_back(std::move(bv));
  }
  proxy.x = kx;
  proxy.tau = kt;
  GradedModule out = submodule(proxy, kvecs, false);
  return normalize_selfdual(out);
}

}  // namespace

std::pair<GradedModule, int> e_max(const GradedModule& m, int i, const Limits& lim) {
  int n = eps_i(m, i);
  if (n == 0) return {m, 0};
  Root na(m.cd->rank(), 0);
  na[i] = n;
  auto res = restrict_module(m, na, root_sub(m.beta, na));
  GradedModule ln = simple_Ln(m.cd, m.qt, i, n, lim);
  GradedModule k = extract_factor(m, res, ln, false);
  k.known_simple = m.known_simple;
  return {std::move(k), n};
}

std::pair<GradedModule, int> e_star_max(const GradedModule& m, int i, const Limits& lim) {
  int n = eps_star_i(m, i);
  if (n == 0) return {m, 0};
  Root na(m.cd->rank(), 0);
  na[i] = n;
  auto res = restrict_module(m, root_sub(m.beta, na), na);
  GradedModule ln = simple_Ln(m.cd, m.qt, i, n, lim);
  GradedModule k = extract_factor(m, res, ln, true);
  k.known_simple = m.known_simple;
  return {std::move(k), n};
}

}  // namespace qha
