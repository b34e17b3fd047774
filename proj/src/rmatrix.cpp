#include "qha/rmatrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "qha/localization.hpp"
#include "qha/radical.hpp"

namespace qha {

RPair r_matrix(const GradedModule& m, const GradedModule& n, const Limits& lim) {
  RPair p{convolve_list({&m, &n}, lim), convolve_list({&n, &m}, lim), {}};
  auto homs = hom_space(p.mn.mod, p.nm.mod);
  if (homs.size() != 1) throw HomDimError(static_cast<int>(homs.size()));
  p.r = homs[0];
  p.r.src = &p.mn.mod;
  p.r.tgt = &p.nm.mod;
  return p;
}

long lambda_of(const GradedModule& m, const GradedModule& n, const Limits& lim) {
  return r_matrix(m, n, lim).r.deg;
}

LambdaData lambda_data(const GradedModule& m, const GradedModule& n, const Limits& lim) {
  LambdaData d;
  d.lambda = lambda_of(m, n, lim);
  long pairing = m.cd->form_root(m.beta, n.beta);  // (wt M, wt N) = (beta, gamma)
  if ((d.lambda + pairing) % 2 != 0)
    throw std::logic_error("Lambda + (wt,wt) is odd");
  d.lambda_tilde = (d.lambda + pairing) / 2;
  long lrev = lambda_of(n, m, lim);
  if ((d.lambda + lrev) % 2 != 0) throw std::logic_error("Lambda sum is odd");
  d.d = (d.lambda + lrev) / 2;
  return d;
}

bool is_unmixed(const GradedModule& m, const GradedModule& n) {
  auto sm = weight_sets(m).gw_star;
  auto gn = weight_sets(n).gw;
  for (const auto& a : sm) {
    if (ht(a) == 0) continue;
    for (const auto& b : gn)
      if (a == b) return false;
  }
  return true;
}

RPair unmixed_r(const GradedModule& m, const GradedModule& n, const Limits& lim) {
  if (!is_unmixed(m, n)) throw std::invalid_argument("pair is not unmixed");
  RPair p{convolve_list({&m, &n}, lim), convolve_list({&n, &m}, lim), {}};
  int hm = m.strands(), hn = n.strands();
  const GradedModule& tgt = p.nm.mod;
  std::vector<int> sw_word = lexmin_word(block_swap(hn, hm));
  GradedMorphism f;
  f.src = &p.mn.mod;
  f.tgt = &p.nm.mod;
  f.deg = -m.cd->form_root(m.beta, n.beta);
  f.mat = induce_hom(p.mn, tgt, [&](const std::vector<int>& t) {
    // u x v  |->  tau_{w[n,m]} (v x u)
    SVec e = {{p.nm.tag_e({t[1], t[0]}), Rat(1)}};
    return tgt.apply_tau_word(sw_word, std::move(e));
  });
  normalize_morphism(f.mat);
  p.r = f;
  return p;
}

GradedModule head_unmixed(const GradedModule& m, const GradedModule& n,
                          const Limits& lim) {
  RPair p = unmixed_r(m, n, lim);
  if (p.r.is_zero()) throw std::logic_error("unmixed r-matrix vanished");
  GradedModule img = morphism_image(p.r);
  img.known_simple = m.known_simple && n.known_simple;
  return img;
}

GradedModule head_afr(const GradedModule& m, const GradedModule& n, const Limits& lim) {
  if (is_unmixed(m, n)) return head_unmixed(m, n, lim);
  if (!m.known_real_afr && !n.known_real_afr)
    throw std::invalid_argument("head_afr needs a real affreal factor or unmixed pair");
  RPair p = r_matrix(m, n, lim);
  GradedModule img = morphism_image(p.r);
  img.known_simple = true;
  return img;
}

RPair braider_eval(const GradedModule& c, const GradedModule& x, const Limits& lim) {
  return r_matrix(c, x, lim);
}

namespace {

// embed a morphism image vector of the (a,b) pair convolution into the big
// convolution at the given slot
struct SwapStep {
  ConvModule big_src;
  ConvModule big_tgt;
  SMat mat;
  long deg;
};

SwapStep swap_step(const std::vector<const GradedModule*>& order, int slot,
                   const Limits& lim) {
  SwapStep st{convolve_list(order, lim), {}, {}, 0};
  std::vector<const GradedModule*> order2 = order;
  std::swap(order2[slot], order2[slot + 1]);
  st.big_tgt = convolve_list(order2, lim);
  RPair pr = r_matrix(*order[slot], *order[slot + 1], lim);
  st.deg = pr.r.deg;
  int off = 0;
  for (int j = 0; j < slot; ++j) off += order[j]->strands();
  int npair = order[slot]->strands() + order[slot + 1]->strands();
  int ntot = st.big_src.mod.strands();
  const GradedModule& tgt = st.big_tgt.mod;
  st.mat = induce_hom(st.big_src, tgt, [&](const std::vector<int>& t) {
    // image of b_slot x b_{slot+1} under r, other factors fixed
    int col = pr.mn.tag_e({t[slot], t[slot + 1]});
    SVec out;
    for (const auto& [ptag, c] : pr.r.mat.col[col]) {
      int prep = pr.nm.rep_of(ptag);
      auto ptuple = pr.nm.tuple_of(ptag % pr.nm.tuples);
      // embed the pair rep at offset
      Perm big = perm_id(ntot);
      const Perm& u = pr.nm.reps[prep];
      for (int k = 0; k < npair; ++k) big[off + k] = off + u[k];
      std::vector<int> t2 = t;
      t2[slot] = ptuple[0];
      t2[slot + 1] = ptuple[1];
      // locate the embedded rep among the target representatives
      auto it = std::find(st.big_tgt.reps.begin(), st.big_tgt.reps.end(), big);
      if (it == st.big_tgt.reps.end()) throw std::logic_error("embedded rep missing");
      int rix = static_cast<int>(it - st.big_tgt.reps.begin());
      sv_set(out, st.big_tgt.tag(rix, t2), sv_get(out, st.big_tgt.tag(rix, t2)) + c);
    }
    return out;
  });
  return st;
}

}  // namespace

NormalSeqResult normal_sequence(const std::vector<const GradedModule*>& ms,
                                const Limits& lim) {
  NormalSeqResult res;
  int r = static_cast<int>(ms.size());
  if (r < 2) {
    res.normal = true;
    return res;
  }
  std::vector<const GradedModule*> order = ms;
  SMat acc;  // composite, built left-to-right over the swap chain
  bool first = true;
  long deg = 0;
  // phase a bubbles the a-th module through all later ones
  for (int a = 0; a < r - 1; ++a) {
    for (int slot = 0; slot < r - 1 - a; ++slot) {
      SwapStep st = swap_step(order, slot, lim);
      deg += st.deg;
      acc = first ? st.mat : smul(st.mat, acc);
      first = false;
      std::swap(order[slot], order[slot + 1]);
      if (acc.is_zero()) {
        res.normal = false;
        return res;
      }
    }
  }
  res.normal = !acc.is_zero();
  res.composite_deg = deg;
  if (!res.normal) return res;
  // the image of the composite is the head of the full convolution
  ConvModule full = convolve_list(ms, lim);
  std::vector<const GradedModule*> rev(ms.rbegin(), ms.rend());
  ConvModule revc = convolve_list(rev, lim);
  GradedMorphism comp;
  comp.src = &full.mod;
  comp.tgt = &revc.mod;
  comp.deg = deg;
  comp.mat = acc;
  GradedModule img = morphism_image(comp);
  res.image_simple = is_simple_module(img);
  try {
    GradedModule hd = head(full.mod, lim);
    res.head_checked = true;
    res.image_is_head = iso_simple(img, hd).has_value();
  } catch (const ResourceCapError&) {
    res.head_checked = false;
  }
  return res;
}

}  // namespace qha
