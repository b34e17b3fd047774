#pragma once

#include "qha/conv.hpp"
#include "qha/rmatrix.hpp"

namespace qha {

// Kashiwara operators on simples: ftilde = hd(L(i) o M), etilde = hd(E_i M).
GradedModule ftilde(const GradedModule& m, int i, const Limits& lim);
// returns the zero module (dim 0) when eps_i(M) = 0
GradedModule etilde(const GradedModule& m, int i, const Limits& lim);

// membership in B_w(infty), checked by both the e-max chain and the
// composition criterion; disagreement is an internal error.
bool in_Bw(const GradedModule& m, const WeylElement& w, const Limits& lim);

// Q_w(X) = 0 test: no basis word of X is of the form i_1^{a_1} ... i_l^{a_l}
bool q_kernel(const GradedModule& x, const WeylElement& w);

}  // namespace qha
