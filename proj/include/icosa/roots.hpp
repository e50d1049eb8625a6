#pragma once

#include <vector>

#include "icosa/bigfloat.hpp"

namespace icosa {

struct RootCluster {
  BigComplex value;
  int multiplicity;
};

struct RootReport {
  std::vector<RootCluster> roots;  // multiplicities sum to the degree
  long precision_bits;             // certification precision requested
  long working_precision_bits;     // precision at which refinement certified
  double min_cluster_separation;   // between distinct cluster centers
  int iterations;                  // total simultaneous-iteration steps
};

// Roots of c[0] z^n + ... + c[n] (descending coefficients) with multiplicity.
//
// Exactly-zero leading coefficients are stripped first (the remaining degree
// must be >= 1), exactly-zero trailing coefficients become roots at 0.
// Estimates are seeded from double-precision companion-matrix eigenvalues and
// refined by Aberth simultaneous iteration at MPFR precision. Approximants
// with relative separation below 2^(-precision/4) are clustered into a
// multiple root at their centroid. Certificate per cluster center r with
// multiplicity m, checked for every j < m:
//   |p^(j)(r)| <= 2^(-precision/2) * max_k |p^(j)_k| * max(1, |r|)^(deg-j).
// On certificate failure the working precision is doubled and refinement
// rerun; after the retry budget a std::runtime_error is thrown.
RootReport complex_roots(const std::vector<BigComplex>& coeffs, long precision_bits);

}  // namespace icosa
