#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qha {

// Exact rational scalar. All module/morphism arithmetic runs over Q.
using Rat = mpq_class;

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

struct ResourceCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Desk-scale guards. ht_max bounds the weight height a convolution may reach,
// dim_max the dimension of any single module, closure_max the dimension of an
// action-closure algebra used for radical computations.
struct Limits {
  int ht_max = 6;
  int dim_max = 5000;
  int closure_max = 8000;
  static Limits from_env();
};

}  // namespace qha
