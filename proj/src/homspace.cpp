#include "qha/homspace.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qha/conv.hpp"

namespace qha {

std::vector<GradedMorphism> hom_space(const GradedModule& src, const GradedModule& tgt) {
  std::vector<GradedMorphism> out;
  if (src.beta != tgt.beta || src.is_zero() || tgt.is_zero()) return out;
  int ds = src.dim(), dt = tgt.dim();

  // candidate degree shifts from word-matching basis pairs
  std::set<long> shifts;
  auto tsec = tgt.sector_index();
  for (int j = 0; j < ds; ++j) {
    auto it = tsec.find(src.basis[j].word);
    if (it == tsec.end()) continue;
    for (int i : it->second) shifts.insert(tgt.basis[i].deg - src.basis[j].deg);
  }

  for (long s : shifts) {
    // unknowns F[i][j] with matching word and deg_t = deg_s + s
    std::vector<std::pair<int, int>> vars;
    std::map<std::pair<int, int>, int> vid;
    for (int j = 0; j < ds; ++j) {
      auto it = tsec.find(src.basis[j].word);
      if (it == tsec.end()) continue;
      for (int i : it->second)
        if (tgt.basis[i].deg == src.basis[j].deg + s) {
          vid[{i, j}] = static_cast<int>(vars.size());
          vars.emplace_back(i, j);
        }
    }
    if (vars.empty()) continue;

    std::vector<SVec> rows;
    auto add_gen = [&](const SMat& gs, const SMat& gt) {
      // constraint per (i, j): (F gs)_{ij} - (gt F)_{ij} = 0, assembled from
      // the variable side to stay sparse
      SMat gst = gs.transpose();
      SMat gtt = gt.transpose();
      std::map<std::pair<int, int>, SVec> eq;
      for (std::size_t vi = 0; vi < vars.size(); ++vi) {
        auto [i, k] = vars[vi];
        // F[i][k] enters (F gs)_{i,j} with weight gs[k][j]
        for (const auto& [j, v] : gst.col[k]) {
          auto& r = eq[{i, j}];
          sv_set(r, static_cast<int>(vi), sv_get(r, static_cast<int>(vi)) + v);
        }
        // and (gt F)_{i',k} with weight gt[i'][i]
        for (const auto& [ip, v] : gtt.col[i]) {
          auto& r = eq[{ip, k}];
          sv_set(r, static_cast<int>(vi), sv_get(r, static_cast<int>(vi)) - v);
        }
      }
      for (auto& [key, r] : eq) {
        sv_normalize(r);
        if (!r.empty()) rows.push_back(std::move(r));
      }
    };
    for (int k = 0; k < src.strands(); ++k) add_gen(src.x[k], tgt.x[k]);
    for (int l = 0; l + 1 < src.strands(); ++l) add_gen(src.tau[l], tgt.tau[l]);

    for (const auto& sol : nullspace(std::move(rows), static_cast<int>(vars.size()))) {
      GradedMorphism f;
      f.src = &src;
      f.tgt = &tgt;
      f.deg = s;
      f.mat = SMat(dt, ds);
      for (const auto& [id, c] : sol) f.mat.add_entry(vars[id].first, vars[id].second, c);
      normalize_morphism(f.mat);
      out.push_back(std::move(f));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const GradedMorphism& a, const GradedMorphism& b) { return a.deg < b.deg; });
  return out;
}

void normalize_morphism(SMat& f) {
  // first nonzero entry in row-major order scaled to 1
  int best_r = -1, best_c = -1;
  Rat val;
  for (int c = 0; c < f.nc; ++c)
    for (const auto& [r, v] : f.col[c]) {
      if (best_r < 0 || r < best_r || (r == best_r && c < best_c)) {
        best_r = r;
        best_c = c;
        val = v;
      }
    }
  if (best_r < 0) return;
  for (auto& col : f.col)
    for (auto& [r, v] : col) v /= val;
}

GradedMorphism compose(const GradedMorphism& g, const GradedMorphism& f) {
  if (f.tgt != g.src && f.tgt->dim() != g.src->dim())
    throw std::invalid_argument("compose: middle modules disagree");
  GradedMorphism h;
  h.src = f.src;
  h.tgt = g.tgt;
  h.deg = f.deg + g.deg;
  h.mat = smul(g.mat, f.mat);
  return h;
}

GradedModule morphism_image(const GradedMorphism& f) {
  std::vector<SVec> cols;
  for (const auto& c : f.mat.col)
    if (!c.empty()) cols.push_back(c);
  GradedModule img = submodule(*f.tgt, std::move(cols), false);
  return normalize_selfdual(img);
}

bool is_simple_module(const GradedModule& m) {
  if (m.is_zero()) return false;
  if (m.dim() == 1) return true;
  auto endo = hom_space(m, m);
  if (endo.size() != 1) return false;
  GradedModule d = dual_module(m);
  auto todual = hom_space(m, d);
  if (todual.size() != 1) return false;
  Echelon e;
  for (const auto& c : todual[0].mat.col) e.insert(c);
  return e.dim() == m.dim();
}

}  // namespace qha
