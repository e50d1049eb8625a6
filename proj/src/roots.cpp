#include "icosa/roots.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace icosa {

namespace {

std::vector<BigComplex> poly_derivative(const std::vector<BigComplex>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<BigComplex> d;
  d.reserve(n > 0 ? n : 0);
  for (int k = 0; k < n; ++k) d.push_back(c[k] * BigComplex(n - k));
  return d;
}

BigComplex horner(const std::vector<BigComplex>& c, const BigComplex& z) {
  BigComplex out = c[0];
  for (size_t i = 1; i < c.size(); ++i) out = out * z + c[i];
  return out;
}

BigFloat sup_norm(const std::vector<BigComplex>& c, long prec) {
  BigFloat out = BigFloat::zero_at(prec);
  for (const BigComplex& v : c) out = max(out, v.abs_value());
  return out;
}

// Double-precision seed roots: companion-matrix eigenvalues of the monic
// normalization, or points on a Cauchy-bound circle if doubles overflow.
std::vector<std::complex<double>> seed_roots(const std::vector<BigComplex>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<std::complex<double>> cd(c.size());
  double scale = 0.0;
  for (size_t i = 0; i < c.size(); ++i) {
    cd[i] = c[i].to_complex_double();
    scale = std::max(scale, std::abs(cd[i]));
  }
  bool ok = scale > 0.0 && std::isfinite(scale);
  std::vector<std::complex<double>> monic(n);
  if (ok) {
    const std::complex<double> lead = cd[0] / scale;
    if (std::abs(lead) < 1e-250) ok = false;
    for (int i = 1; ok && i <= n; ++i) {
      monic[i - 1] = (cd[i] / scale) / lead;
      if (!std::isfinite(monic[i - 1].real()) || !std::isfinite(monic[i - 1].imag()))
        ok = false;
    }
  }
  std::vector<std::complex<double>> out(n);
  if (ok && n > 1) {
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n - 1; ++i) comp(i + 1, i) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -monic[n - 1 - i];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    if (es.info() == Eigen::Success) {
      for (int i = 0; i < n; ++i) out[i] = es.eigenvalues()(i);
      return out;
    }
  }
  if (ok && n == 1) {
    out[0] = -monic[0];
    return out;
  }
  // Fallback: spread the seeds on a circle of radius 1 + max |c_i/c_0|.
  double r = 1.0;
  if (ok) {
    for (int i = 0; i < n; ++i) r = std::max(r, std::abs(monic[i]));
    r += 1.0;
  }
  for (int i = 0; i < n; ++i) {
    const double t = 2.0 * M_PI * i / n + 0.4;
    out[i] = std::polar(r, t);
  }
  return out;
}

struct Refined {
  std::vector<BigComplex> z;
  int iterations = 0;
};

// Aberth simultaneous iteration at working precision `wp`. Simple roots
// converge quadratically; an m-fold root makes its m approximants converge
// linearly (ratio about (m-1)/m) to accuracy about 2^(-wp/m), which is all
// the clustering step needs.
Refined aberth_refine(const std::vector<BigComplex>& c, const std::vector<BigComplex>& dc,
                      std::vector<BigComplex> z, long wp) {
  const int n = static_cast<int>(z.size());
  const BigFloat tiny = BigFloat::two_pow(-(wp - 8), wp);
  const BigFloat jiggle = BigFloat::two_pow(-wp / 2, wp);
  const int max_iter = 600;
  Refined out;
  for (int iter = 0; iter < max_iter; ++iter) {
    ++out.iterations;
    BigFloat max_rel_step = BigFloat::zero_at(wp);
    for (int i = 0; i < n; ++i) {
      const BigComplex pv = horner(c, z[i]);
      BigComplex dv = horner(dc, z[i]);
      if (is_zero(dv)) {
        z[i].re += jiggle;
        dv = horner(dc, z[i]);
        if (is_zero(dv)) continue;
      }
      const BigComplex w = pv / dv;  // Newton correction
      BigComplex s(0);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        BigComplex diff = z[i] - z[j];
        if (is_zero(diff)) diff.re += jiggle;
        s += BigComplex(1) / diff;
      }
      const BigComplex denom = BigComplex(1) - w * s;
      const BigComplex step = is_zero(denom) ? w : w / denom;
      z[i] -= step;
      const BigFloat rel = step.abs_value() / (BigFloat(1) + z[i].abs_value());
      max_rel_step = max(max_rel_step, rel);
    }
    if (max_rel_step < tiny) break;
  }
  out.z = std::move(z);
  return out;
}

struct Clustered {
  std::vector<BigComplex> centers;
  std::vector<int> mult;
};

Clustered cluster_roots(const std::vector<BigComplex>& z, const BigFloat& threshold, long wp) {
  const int n = static_cast<int>(z.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const BigFloat sep = (z[i] - z[j]).abs_value();
      const BigFloat rel = sep / max(BigFloat(1), z[i].abs_value());
      if (rel < threshold) parent[find(i)] = find(j);
    }
  Clustered out;
  std::vector<int> root_of(n, -1);
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    if (root_of[r] == -1) {
      root_of[r] = static_cast<int>(out.centers.size());
      out.centers.push_back(BigComplex(BigFloat::zero_at(wp), BigFloat::zero_at(wp)));
      out.mult.push_back(0);
    }
    out.centers[root_of[r]] += z[i];
    out.mult[root_of[r]] += 1;
  }
  for (size_t k = 0; k < out.centers.size(); ++k)
    out.centers[k] = out.centers[k] / BigComplex(out.mult[k]);
  return out;
}

bool certify(const std::vector<BigComplex>& c, const Clustered& cl,
             const BigFloat& bound_factor, long wp) {
  const int deg = static_cast<int>(c.size()) - 1;
  std::vector<std::vector<BigComplex>> derivs{c};
  int max_mult = 0;
  for (int m : cl.mult) max_mult = std::max(max_mult, m);
  for (int j = 1; j < max_mult; ++j) derivs.push_back(poly_derivative(derivs.back()));
  for (size_t k = 0; k < cl.centers.size(); ++k) {
    const BigComplex& r = cl.centers[k];
    BigFloat growth(1);
    const BigFloat rr = max(BigFloat(1), r.abs_value());
    for (int t = 0; t < deg; ++t) growth *= rr;
    for (int j = 0; j < cl.mult[k]; ++j) {
      const BigFloat residual = horner(derivs[j], r).abs_value();
      const BigFloat bound = bound_factor * sup_norm(derivs[j], wp) * growth;
      if (!(residual <= bound)) return false;
      growth = growth / rr;  // max(1,|r|)^(deg-j) decreases with j
    }
  }
  return true;
}

}  // namespace

RootReport complex_roots(const std::vector<BigComplex>& coeffs, long precision_bits) {
  if (precision_bits < 8) precision_bits = 53;
  // Strip exactly-zero leading coefficients.
  size_t first = 0;
  while (first < coeffs.size() && is_zero(coeffs[first])) ++first;
  std::vector<BigComplex> c(coeffs.begin() + first, coeffs.end());
  if (c.size() < 2) throw std::invalid_argument("complex_roots needs degree >= 1");
  // Exactly-zero trailing coefficients are roots at 0.
  int zero_roots = 0;
  while (c.size() > 1 && is_zero(c.back())) {
    c.pop_back();
    ++zero_roots;
  }

  RootReport report;
  report.precision_bits = precision_bits;
  report.iterations = 0;

  Clustered cl;
  long wp = std::max<long>(precision_bits + 32, 64);
  bool certified = false;
  const int degree = static_cast<int>(c.size()) - 1;
  for (int attempt = 0; attempt < 4 && !certified; ++attempt, wp *= 2) {
    if (degree == 0) {  // only zero roots remain
      cl.centers.clear();
      cl.mult.clear();
      certified = true;
      report.working_precision_bits = wp;
      break;
    }
    std::vector<BigComplex> z;
    for (const std::complex<double>& s : seed_roots(c))
      z.push_back(BigComplex::from_complex_double(s, wp));
    Refined ref = aberth_refine(c, poly_derivative(c), std::move(z), wp);
    report.iterations += ref.iterations;
    const BigFloat threshold = BigFloat::two_pow(-precision_bits / 4, wp);
    cl = cluster_roots(ref.z, threshold, wp);
    const BigFloat bound_factor = BigFloat::two_pow(-precision_bits / 2, wp);
    certified = certify(c, cl, bound_factor, wp);
    if (certified) report.working_precision_bits = wp;
  }
  if (!certified)
    throw std::runtime_error("root refinement failed to certify at the requested precision");

  if (zero_roots > 0) {
    cl.centers.push_back(BigComplex(BigFloat::zero_at(report.working_precision_bits),
                                    BigFloat::zero_at(report.working_precision_bits)));
    cl.mult.push_back(zero_roots);
  }
  for (size_t k = 0; k < cl.centers.size(); ++k)
    report.roots.push_back({cl.centers[k], cl.mult[k]});

  report.min_cluster_separation = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < report.roots.size(); ++i)
    for (size_t j = i + 1; j < report.roots.size(); ++j) {
      const double sep =
          (report.roots[i].value - report.roots[j].value).abs_value().to_double();
      report.min_cluster_separation = std::min(report.min_cluster_separation, sep);
    }
  return report;
}

}  // namespace icosa
