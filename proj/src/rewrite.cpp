#include "qha/rewrite.hpp"

#include <algorithm>
#include <stdexcept>

namespace qha {

namespace {

std::vector<Sym> tau_syms(const std::vector<int>& word) {
  std::vector<Sym> s;
  s.reserve(word.size());
  for (int c : word) s.push_back(sym_tau(c));
  return s;
}

Perm perm_refl(int n, int k) {
  Perm s = perm_id(n);
  std::swap(s[k], s[k + 1]);
  return s;
}

}  // namespace

StrandAlgebra::StrandAlgebra(CartanPtr cd, QTablePtr qt, int n)
    : cd_(std::move(cd)), qt_(std::move(qt)), n_(n) {}

Sector StrandAlgebra::apply_perm(const Perm& w, const Sector& nu) const {
  Sector out(nu.size());
  Perm inv = perm_inv(w);
  for (std::size_t j = 0; j < nu.size(); ++j) out[j] = nu[inv[j]];
  return out;
}

Sector StrandAlgebra::sector_after(const std::vector<int>& word, std::size_t k,
                                   const Sector& nu0) const {
  // sector seen by the letter at position k: apply letters k+1..end to nu0
  Sector nu = nu0;
  for (std::size_t j = word.size(); j-- > k + 1;) std::swap(nu[word[j]], nu[word[j] + 1]);
  return nu;
}

long StrandAlgebra::sector_degree_tau(const Perm& w, const Sector& nu0) const {
  long d = 0;
  int n = static_cast<int>(w.size());
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l)
      if (w[k] > w[l]) d -= cd_->root_form(nu0[k], nu0[l]);
  return d;
}

long StrandAlgebra::term_degree(const NTKey& k, const Sector& nu0) const {
  long d = sector_degree_tau(k.w, nu0);
  for (int s = 0; s < n_; ++s)
    d += static_cast<long>(k.xe[s]) * cd_->root_form(nu0[s], nu0[s]);
  return d;
}

// --- word transformations ---------------------------------------------------

StrandAlgebra::MoveResult StrandAlgebra::to_first(const std::vector<int>& word, int d,
                                                  const Sector& nu0) const {
  MoveResult res;
  if (word.empty()) throw std::logic_error("to_first on empty word");
  int c = word.front();
  if (c == d) {
    res.word = word;
    return res;
  }
  std::vector<int> w1(word.begin() + 1, word.end());
  MoveResult r1 = to_first(w1, d, nu0);
  for (auto& corr : r1.corr) {
    corr.seq.insert(corr.seq.begin(), sym_tau(c));
    res.corr.push_back(std::move(corr));
  }
  std::vector<int> w2(r1.word.begin() + 1, r1.word.end());
  if (std::abs(c - d) > 1) {
    res.word = {d, c};
    res.word.insert(res.word.end(), w2.begin(), w2.end());
    return res;
  }
  // adjacent: bring the braid segment (c,d,c) together, then flip it
  MoveResult r2 = to_first(w2, c, nu0);
  for (auto& corr : r2.corr) {
    corr.seq.insert(corr.seq.begin(), {sym_tau(c), sym_tau(d)});
    res.corr.push_back(std::move(corr));
  }
  std::vector<int> w3(r2.word.begin() + 1, r2.word.end());
  res.word = {d, c, d};
  res.word.insert(res.word.end(), w3.begin(), w3.end());

  Sector mu = nu0;
  for (std::size_t j = w3.size(); j-- > 0;) std::swap(mu[w3[j]], mu[w3[j] + 1]);
  int a = std::min(c, d);
  if (mu[a] == mu[a + 2]) {
    // tau_{a+1} tau_a tau_{a+1} = tau_a tau_{a+1} tau_a + Qbar(x_a,x_{a+1},x_{a+2})
    Rat sign = (c == a + 1) ? Rat(1) : Rat(-1);
    for (const auto& [pu, pv, pw, coef] : qt_->qbar_monomials(mu[a], mu[a + 1])) {
      Correction corr;
      corr.c = sign * coef;
      for (int t = 0; t < pu; ++t) corr.seq.push_back(sym_x(a));
      for (int t = 0; t < pv; ++t) corr.seq.push_back(sym_x(a + 1));
      for (int t = 0; t < pw; ++t) corr.seq.push_back(sym_x(a + 2));
      auto tail = tau_syms(w3);
      corr.seq.insert(corr.seq.end(), tail.begin(), tail.end());
      res.corr.push_back(std::move(corr));
    }
  }
  return res;
}

StrandAlgebra::MoveResult StrandAlgebra::to_target(const std::vector<int>& word,
                                                   const std::vector<int>& target,
                                                   const Sector& nu0) const {
  MoveResult res;
  if (word.size() != target.size()) throw std::logic_error("to_target length mismatch");
  if (word.empty()) return res;
  MoveResult head = to_first(word, target.front(), nu0);
  res.corr = std::move(head.corr);
  std::vector<int> tail_from(head.word.begin() + 1, head.word.end());
  std::vector<int> tail_to(target.begin() + 1, target.end());
  MoveResult rec = to_target(tail_from, tail_to, nu0);
  for (auto& corr : rec.corr) {
    corr.seq.insert(corr.seq.begin(), sym_tau(target.front()));
    res.corr.push_back(std::move(corr));
  }
  res.word = target;
  return res;
}

// --- left multiplication ----------------------------------------------------

NF StrandAlgebra::leftmul_x(int p, const Perm& w, const Sector& nu0) const {
  TauKey key{p, w, nu0};
  if (auto it = memo_x_.find(key); it != memo_x_.end()) return it->second;
  NF out;
  std::vector<int> word = lexmin_word(w);
  int pos = p;
  for (std::size_t k = 0; k < word.size(); ++k) {
    int c = word[k];
    if (pos != c && pos != c + 1) continue;
    Sector mu = sector_after(word, k, nu0);
    if (mu[c] == mu[c + 1]) {
      Rat sign = (pos == c + 1) ? Rat(1) : Rat(-1);
      std::vector<int> cw(word.begin(), word.begin() + k);
      cw.insert(cw.end(), word.begin() + k + 1, word.end());
      NF sub = eval(tau_syms(cw), nu0);
      for (auto& [kk, vv] : sub) {
        Rat& slot = out[kk];
        slot += sign * vv;
        if (slot == 0) out.erase(kk);
      }
    }
    pos = (pos == c) ? c + 1 : c;
  }
  NTKey main{w, std::vector<std::uint8_t>(n_, 0)};
  main.xe[pos] += 1;
  out[main] += 1;
  if (out[main] == 0) out.erase(main);
  memo_x_[key] = out;
  return out;
}

NF StrandAlgebra::leftmul_tau(int p, const Perm& w, const Sector& nu0) const {
  TauKey key{p, w, nu0};
  if (auto it = memo_tau_.find(key); it != memo_tau_.end()) return it->second;
  NF out;
  Perm wp = perm_mult(perm_refl(n_, p), w);
  std::vector<int> word = lexmin_word(w);
  auto add_nf = [&out](const NF& nf, const Rat& c) {
    for (const auto& [k, v] : nf) {
      Rat& slot = out[k];
      slot += c * v;
      if (slot == 0) out.erase(k);
    }
  };
  if (perm_len(wp) > perm_len(w)) {
    std::vector<int> from = {p};
    from.insert(from.end(), word.begin(), word.end());
    std::vector<int> target = lexmin_word(wp);
    if (from == target) {
      out[NTKey{wp, std::vector<std::uint8_t>(n_, 0)}] = 1;
    } else {
      MoveResult mv = to_target(from, target, nu0);
      out[NTKey{wp, std::vector<std::uint8_t>(n_, 0)}] = 1;
      for (const auto& corr : mv.corr) add_nf(eval(corr.seq, nu0), corr.c);
    }
  } else {
    // p is a left descent of w: rewrite w's word to start with p, absorb tau_p^2
    MoveResult mv = to_first(word, p, nu0);
    std::vector<int> v(mv.word.begin() + 1, mv.word.end());
    Sector mu = nu0;
    for (std::size_t j = v.size(); j-- > 0;) std::swap(mu[v[j]], mu[v[j] + 1]);
    // tau_p^2 e(mu) = Q_{mu_p, mu_{p+1}}(x_p, x_{p+1}) e(mu)
    for (const auto& [pu, pv, coef] : qt_->q_monomials(mu[p], mu[p + 1])) {
      std::vector<Sym> seq;
      for (int t = 0; t < pu; ++t) seq.push_back(sym_x(p));
      for (int t = 0; t < pv; ++t) seq.push_back(sym_x(p + 1));
      auto tail = tau_syms(v);
      seq.insert(seq.end(), tail.begin(), tail.end());
      add_nf(eval(seq, nu0), coef);
    }
    for (const auto& corr : mv.corr) {
      std::vector<Sym> seq = {sym_tau(p)};
      seq.insert(seq.end(), corr.seq.begin(), corr.seq.end());
      add_nf(eval(seq, nu0), corr.c);
    }
  }
  memo_tau_[key] = out;
  return out;
}

NF StrandAlgebra::leftmul(const Sym& s, const NF& nf, const Sector& nu0) const {
  NF out;
  for (const auto& [k, c] : nf) {
    NF part = s.is_x ? leftmul_x(s.idx, k.w, nu0) : leftmul_tau(s.idx, k.w, nu0);
    for (const auto& [pk, pc] : part) {
      NTKey nk = pk;
      for (int t = 0; t < n_; ++t) nk.xe[t] += k.xe[t];
      Rat& slot = out[nk];
      slot += c * pc;
      if (slot == 0) out.erase(nk);
    }
  }
  return out;
}

NF StrandAlgebra::eval(const std::vector<Sym>& syms, const Sector& nu0) const {
  NF acc;
  acc[NTKey{perm_id(n_), std::vector<std::uint8_t>(n_, 0)}] = 1;
  for (auto it = syms.rbegin(); it != syms.rend(); ++it) acc = leftmul(*it, acc, nu0);
  return acc;
}

NF StrandAlgebra::leftmul_phi(int k, const NF& nf, const Sector& nu0) const {
  NF out;
  auto add = [&out](const NF& nf2, const Rat& c) {
    for (const auto& [kk, vv] : nf2) {
      Rat& slot = out[kk];
      slot += c * vv;
      if (slot == 0) out.erase(kk);
    }
  };
  for (const auto& [key, c] : nf) {
    Sector left = apply_perm(key.w, nu0);
    NF single;
    single[key] = 1;
    if (left[k] != left[k + 1]) {
      add(leftmul(sym_tau(k), single, nu0), c);
    } else {
      // (tau_k (x_k - x_{k+1}) + 1) e(...)
      NF xk = leftmul(sym_x(k), single, nu0);
      NF xk1 = leftmul(sym_x(k + 1), single, nu0);
      add(leftmul(sym_tau(k), xk, nu0), c);
      add(leftmul(sym_tau(k), xk1, nu0), -c);
      add(single, c);
    }
  }
  return out;
}

NF StrandAlgebra::intertwiner(const std::vector<int>& word, const Sector& nu0) const {
  if (perm_len(perm_of_word(word, n_)) != static_cast<int>(word.size()))
    throw std::invalid_argument("intertwiner needs a reduced word");
  NF acc;
  acc[NTKey{perm_id(n_), std::vector<std::uint8_t>(n_, 0)}] = 1;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    acc = leftmul_phi(*it, acc, nu0);
  return acc;
}

// --- coset splitting ---------------------------------------------------------

std::vector<SplitTerm> StrandAlgebra::split_term(const Perm& w,
                                                 const std::vector<int>& blocks,
                                                 const Sector& nu0) const {
  SplitKey key{w, blocks, nu0};
  if (auto it = memo_split_.find(key); it != memo_split_.end()) return it->second;
  Perm u, y;
  coset_split(w, blocks, u, y);
  std::vector<int> target = lexmin_word(u);
  {
    // block part: local lexmin words, embedded
    int lo = 0;
    for (int b : blocks) {
      Perm local(b);
      for (int t = 0; t < b; ++t) local[t] = y[lo + t] - lo;
      for (int c : lexmin_word(local)) target.push_back(c + lo);
      lo += b;
    }
  }
  std::vector<SplitTerm> out;
  std::vector<int> from = lexmin_word(w);
  MoveResult mv = (from == target) ? MoveResult{target, {}} : to_target(from, target, nu0);
  out.push_back(SplitTerm{Rat(1), u, y, std::vector<std::uint8_t>(n_, 0)});
  for (const auto& corr : mv.corr) {
    NF nf = eval(corr.seq, nu0);
    for (const auto& [k, c] : nf) {
      for (auto st : split_term(k.w, blocks, nu0)) {
        st.c *= corr.c * c;
        for (int t = 0; t < n_; ++t) st.xe[t] += k.xe[t];
        out.push_back(std::move(st));
      }
    }
  }
  // merge duplicates
  std::map<std::tuple<Perm, Perm, std::vector<std::uint8_t>>, Rat> acc;
  for (auto& st : out) acc[{st.u, st.y, st.xe}] += st.c;
  out.clear();
  for (auto& [k, c] : acc)
    if (c != 0) out.push_back(SplitTerm{c, std::get<0>(k), std::get<1>(k), std::get<2>(k)});
  memo_split_[key] = out;
  return out;
}

std::vector<SplitTerm> StrandAlgebra::split(const NF& nf, const std::vector<int>& blocks,
                                            const Sector& nu0) const {
  std::map<std::tuple<Perm, Perm, std::vector<std::uint8_t>>, Rat> acc;
  for (const auto& [key, c] : nf) {
    for (const auto& st : split_term(key.w, blocks, nu0)) {
      auto xe = st.xe;
      for (int t = 0; t < n_; ++t) xe[t] += key.xe[t];
      acc[{st.u, st.y, xe}] += c * st.c;
    }
  }
  std::vector<SplitTerm> out;
  for (auto& [k, c] : acc)
    if (c != 0) out.push_back(SplitTerm{c, std::get<0>(k), std::get<1>(k), std::get<2>(k)});
  return out;
}

std::vector<SplitTerm> StrandAlgebra::straighten(const std::vector<Sym>& syms,
                                                 const std::vector<int>& blocks,
                                                 const Sector& nu0) const {
  return split(eval(syms, nu0), blocks, nu0);
}

}  // namespace qha
