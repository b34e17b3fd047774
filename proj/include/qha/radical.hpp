#pragma once

#include <vector>

#include "qha/conv.hpp"
#include "qha/module.hpp"

namespace qha {

// Image of R(beta) in End(M): a spanning set of matrices, built by closing the
// sector projectors under left multiplication by the generators.
struct ActionClosure {
  std::vector<SMat> basis;
  std::vector<long> degs;  // homogeneous degree of each element
};

ActionClosure close_algebra(const GradedModule& m, const Limits& lim);

// rad(A) M via the characteristic-zero trace criterion on the closure
std::vector<SVec> radical_vectors(const GradedModule& m, const Limits& lim);

GradedModule head(const GradedModule& m, const Limits& lim);
GradedModule socle(const GradedModule& m, const Limits& lim);

// closure-based simplicity (small modules; cross-checks is_simple_module)
bool is_simple_closure(const GradedModule& m, const Limits& lim);

}  // namespace qha
