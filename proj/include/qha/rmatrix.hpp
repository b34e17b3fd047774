#pragma once

#include <optional>
#include <vector>

#include "qha/conv.hpp"
#include "qha/homspace.hpp"

namespace qha {

// Hom between convolutions is not one-dimensional where the theory needs it:
// the operational stand-in for the affreal hypothesis failed.
struct HomDimError : std::runtime_error {
  int dim;
  explicit HomDimError(int d)
      : std::runtime_error("Hom space dimension " + std::to_string(d) +
                           ", expected 1"),
        dim(d) {}
};

struct LambdaData {
  long lambda = 0;        // deg r_{M,N}
  long lambda_tilde = 0;  // (lambda + (wt M, wt N)) / 2
  long d = 0;             // (Lambda(M,N) + Lambda(N,M)) / 2
};

// Convolutions kept alive next to a morphism between them.
struct RPair {
  ConvModule mn;
  ConvModule nm;
  GradedMorphism r;  // mn.mod -> nm.mod
};

// unique (up to scalar) homomorphism M o N -> N o M; throws HomDimError
RPair r_matrix(const GradedModule& m, const GradedModule& n, const Limits& lim);

long lambda_of(const GradedModule& m, const GradedModule& n, const Limits& lim);
LambdaData lambda_data(const GradedModule& m, const GradedModule& n, const Limits& lim);

bool is_unmixed(const GradedModule& m, const GradedModule& n);
// explicit unmixed morphism u x v -> tau_{w[n,m]} (v x u), of degree -(beta,gamma)
RPair unmixed_r(const GradedModule& m, const GradedModule& n, const Limits& lim);

// simple head of M o N as the image of the distinguished morphism.
// Requires one factor flagged real affreal (or an unmixed pair).
GradedModule head_afr(const GradedModule& m, const GradedModule& n, const Limits& lim);
GradedModule head_unmixed(const GradedModule& m, const GradedModule& n, const Limits& lim);

// graded braider component R_C(X); unique hom with its degree
RPair braider_eval(const GradedModule& c, const GradedModule& x, const Limits& lim);

struct NormalSeqResult {
  bool normal = false;
  bool image_simple = false;
  bool image_is_head = false;   // checked when resources permit
  bool head_checked = false;
  long composite_deg = 0;
};
NormalSeqResult normal_sequence(const std::vector<const GradedModule*>& ms,
                                const Limits& lim);

}  // namespace qha
