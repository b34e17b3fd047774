#pragma once

#include <vector>

#include "qha/conv.hpp"
#include "qha/homspace.hpp"

namespace qha {

// gW(M) = { g : e(g, b-g) M != 0 } and the * variant, as explicit sets.
struct WeightSets {
  std::vector<Root> gw;
  std::vector<Root> gw_star;
};
WeightSets weight_sets(const GradedModule& m);

struct CategoryMembership {
  bool in_Cw = false;
  bool in_Cstar_v = false;
  bool in_Cwv = false;
};
// C_w: gW cap Delta_+ inside w Delta_-;  C_{*,v}: gW* cap Delta_+ inside v Delta_+
CategoryMembership category_membership(const GradedModule& m, const WeylElement& w,
                                       const WeylElement& v);

// lambda_i = w Lambda_i + Lambda_i (zero when w fixes Lambda_i)
Weight lambda_i_weight(const CartanPtr& cd, const WeylElement& w, int i);
// phi_i(beta) = -(lambda_i, beta)
long phi_i_of(const CartanPtr& cd, const WeylElement& w, int i, const Root& beta);
// H(Lambda_i, Lambda_j) = (Lambda_i, w Lambda_j - Lambda_j)
long H_pair(const CartanPtr& cd, const WeylElement& w, int i, int j);
long H_bilinear(const CartanPtr& cd, const WeylElement& w,
                const std::vector<long>& a, const std::vector<long>& b);

// Object of the localized category at the Grothendieck level: a simple-module
// character with an exponent vector over the fundamental weights and an
// explicit q-shift.
struct LocalizedClass {
  CartanPtr cd;
  QTablePtr qt;
  WeylElement w;
  QChar ch;                // character of the underlying simple
  Root beta;               // weight of the underlying simple
  std::vector<long> exps;  // exponents over {Lambda_i}
  long qshift = 0;
};

LocalizedClass loc_class(const GradedModule& m, const std::vector<long>& exps,
                         const WeylElement& w);
LocalizedClass loc_tensor(const LocalizedClass& a, const LocalizedClass& b);
bool loc_equal(const LocalizedClass& a, const LocalizedClass& b, const Limits& lim);

// ---------------------------------------------------------------------------
// The braider psi_{w,v,lambda} of the category C_{*,v}, built by restricting
// the braider of M(w lambda, lambda) and stripping the M(v lambda, lambda)
// tensor factor.
struct BraiderWV {
  // restricted morphism between the multiplicity spaces, in coordinates of
  // the extracted modules u1 (= M(wl,vl) o N) and u2 (= N o M(wl,vl))
  GradedModule u1, u2;
  SMat psi;       // u1 -> u2
  long deg = 0;   // raises degrees by deg; equals (w l + v l, gamma)
  long phi = 0;   // the braider exponent phi_{w,v,l}(gamma) = -(wl+vl, gamma)
  bool nonzero = false;
  bool iso = false;
};
BraiderWV braider_wv(const GradedModule& n, const WeylElement& w, const WeylElement& v,
                     const Weight& lam, const Limits& lim);

}  // namespace qha
