#pragma once

#include "qha/conv.hpp"
#include "qha/rmatrix.hpp"

namespace qha {

// Generalized determinantial module M_w(w lambda, lambda) for w-dominant
// lambda, by the head recursion along the canonical reduced word of w.
GradedModule gen_detmod(CartanPtr cd, QTablePtr qt, const WeylElement& w,
                        const Weight& lam, const Limits& lim);

// M(w Lambda, v Lambda) for dominant Lambda and v <= w, by stripping maximal
// divided powers E*_i along the canonical word of v.
GradedModule detmod_pair(CartanPtr cd, QTablePtr qt, const WeylElement& w,
                         const WeylElement& v, const Weight& Lam, const Limits& lim);

void clear_detmod_cache();

}  // namespace qha
