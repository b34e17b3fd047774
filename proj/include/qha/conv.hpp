#pragma once

#include <functional>
#include <vector>

#include "qha/module.hpp"

namespace qha {

// Convolution product presented on the shuffle basis tau_u (b_1 x ... x b_r),
// u running over minimal coset representatives.
struct ConvModule {
  GradedModule mod;
  std::vector<GradedModule> factors;
  std::vector<int> blocks;
  std::vector<Perm> reps;
  std::vector<int> fdim;
  int tuples = 1;
  int e_rep = 0;  // index of the identity representative

  int tag(int rep, const std::vector<int>& t) const;
  std::vector<int> tuple_of(int tag) const;
  int rep_of(int tag) const { return tag / tuples; }
  int tag_e(const std::vector<int>& t) const { return tag(e_rep, t); }
};

ConvModule convolve_list(const std::vector<const GradedModule*>& factors,
                         const Limits& lim);
GradedModule convolve(const GradedModule& a, const GradedModule& b, const Limits& lim);
GradedModule simple_Ln(CartanPtr cd, QTablePtr qt, int i, int n, const Limits& lim);

// R-linear extension of a map defined on the e-stratum b_1 x ... x b_r.
// estratum(t) returns the image in tgt; result maps src.mod -> tgt.
SMat induce_hom(const ConvModule& src, const GradedModule& tgt,
                const std::function<SVec(const std::vector<int>&)>& estratum);

// Submodule spanned by the given homogeneous vectors (closed under the action
// when close = true); basis vectors must be sector/degree homogeneous.
GradedModule submodule(const GradedModule& m, std::vector<SVec> gens, bool close);
GradedModule quotient_module(const GradedModule& m, const std::vector<SVec>& sub);

// E_i / E_i^* with maximal divided powers, via the known tensor-factor
// structure e(n a_i, beta - n a_i) M = L(i^n) (x) E_i^max M.
std::pair<GradedModule, int> e_max(const GradedModule& m, int i, const Limits& lim);
std::pair<GradedModule, int> e_star_max(const GradedModule& m, int i, const Limits& lim);

}  // namespace qha
