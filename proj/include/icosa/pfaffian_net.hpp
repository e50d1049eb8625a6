#pragma once

#include <array>
#include <vector>

#include "icosa/pfaffian.hpp"
#include "icosa/so3.hpp"

// The net of coordinate skew forms restricted to the orthogonal complement
// W = f^perp of a harmonic form f, the Pfaffian plane curve of the net, and
// the Chern-number arithmetic of the Mukai-Umemura threefold.

namespace icosa {

struct SkewFormNet {
  int d = 0;
  std::vector<MultiPoly<QISqrt5>> w_basis;  // 2d vectors spanning f^perp
  std::vector<SkewMatrix<QISqrt5>> omegas;  // omega_x for x = e1, e2, e3
};

// Exact basis of W = f^perp under the invariant pairing, with the three skew
// matrices omega_x(w_i, w_j) = (x.w_i, w_j). f must be a nonzero harmonic
// form of degree 1..5.
SkewFormNet skew_net(const MultiPoly<QISqrt5>& f);

// Pfaffian of x1 omega_1 + x2 omega_2 + x3 omega_3, an exact ternary form of
// degree d (or zero for degenerate nets).
MultiPoly<QISqrt5> pfaffian_curve(const SkewFormNet& net);

// The Pfaffian curve of the net of f is proportional to f itself; this
// reports the exact constant lambda with Pf = lambda * f. The net depends on
// f only through W = f^perp, so scaling f by c scales lambda by 1/c. Degrees
// 1..4. Throws domain_error when the Pfaffian vanishes identically.
struct PfaffianProportionality {
  QISqrt5 lambda;
  bool exact = false;  // Pf - lambda*f == 0 identically
};
PfaffianProportionality proportionality_check(const MultiPoly<QISqrt5>& f);

// Chern-number arithmetic in the graded ring Q[x,y]/(x^2 - 22y) with the
// top-degree evaluation xy -> 1: starting from c1 = x, c2 = 24y (Todd genus
// 1), c3 = 4xy it derives the dual-bundle Chern data and solves the degree
// equation 2k(k-10) = 22.
struct MuCohomologyConstants {
  Rational c1_cubed;                // x^3 -> 22
  Rational c1c2;                    // 24
  Rational c3;                      // 4
  Rational c2_dual_y;               // c1^2 - (1/2) c2, in units of y
  Rational c3_dual;                 // (1/10)(c3 + 4 c1^3 - 3 c1 c2)
  std::array<Rational, 2> k_roots;  // roots of 2k(k-10) = 22, ascending
  Rational k_selected;              // the negative root
};
MuCohomologyConstants mu_cohomology_constants();

}  // namespace icosa
