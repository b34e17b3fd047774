#pragma once

#include <vector>

#include "qha/module.hpp"

namespace qha {

// Homogeneous module homomorphism f: q^deg src -> tgt, i.e. the matrix raises
// basis degrees by deg. Scalar-normalized so the first nonzero entry in
// row-major order is 1.
struct GradedMorphism {
  const GradedModule* src = nullptr;
  const GradedModule* tgt = nullptr;
  long deg = 0;
  SMat mat;  // tgt.dim x src.dim

  bool is_zero() const { return mat.is_zero(); }
};

// Complete basis of HOM(src, tgt), sorted by degree. Solved degree by degree
// as the kernel of the commutation constraints with every generator.
std::vector<GradedMorphism> hom_space(const GradedModule& src, const GradedModule& tgt);

void normalize_morphism(SMat& f);
GradedMorphism compose(const GradedMorphism& g, const GradedMorphism& f);  // g o f

// image of f as a submodule of *f.tgt (self-dual normalized when possible)
GradedModule morphism_image(const GradedMorphism& f);

// is_simple via the endomorphism criterion: X is simple iff END(X) is one
// dimensional and HOM(X, X*) is one dimensional with invertible generator.
bool is_simple_module(const GradedModule& m);

}  // namespace qha
