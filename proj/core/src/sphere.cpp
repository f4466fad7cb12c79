#include "necklab/sphere.hpp"

#include <cmath>
#include <functional>

namespace necklab {

double sphere_volume(int n) {
  return 2.0 * std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n);
}

namespace {

// Integral over S^{n-1} of x^e. Zero for odd exponents; otherwise
// vol(S^{n-1}) * prod (2b_i - 1)!! / prod_{j<|b|} (n + 2j), b_i = e_i/2.
double monomial_moment(int n, const Polynomial::Expo& e) {
  long total = 0;
  double num = 1.0;
  for (int a : e) {
    if (a % 2 != 0) return 0.0;
    int b = a / 2;
    total += b;
    for (int k = 1; k <= b; ++k) num *= (2 * k - 1);
  }
  double den = 1.0;
  for (long j = 0; j < total; ++j) den *= (n + 2.0 * j);
  return sphere_volume(n) * num / den;
}

}  // namespace

double integrate_sphere(const Polynomial& p) {
  double s = 0.0;
  for (const auto& [e, c] : p.terms()) s += c * monomial_moment(p.vars(), e);
  return s;
}

Polynomial radial_derivative(const Polynomial& p) {
  int n = p.vars();
  Polynomial r(n);
  for (int i = 0; i < n; ++i)
    r += Polynomial::coordinate(n, i) * p.derivative(i);
  return r;
}

Polynomial sphere_laplacian(const Polynomial& p) {
  int n = p.vars();
  Polynomial hess(n);  // x^t D^2 p x
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      hess += Polynomial::coordinate(n, i) * Polynomial::coordinate(n, j) *
              p.derivative(i).derivative(j);
  return p.laplacian() - hess - (n - 1.0) * radial_derivative(p);
}

PolyVec sphere_gradient(const Polynomial& p) {
  int n = p.vars();
  PolyVec v(n);
  Polynomial rad = radial_derivative(p);
  for (int i = 0; i < n; ++i)
    v.comp[i] = p.derivative(i) - Polynomial::coordinate(n, i) * rad;
  return v;
}

Polynomial divergence_tangent(const PolyVec& v) {
  int n = v.vars();
  Polynomial div(n), quad(n);
  for (int i = 0; i < n; ++i) div += v.comp[i].derivative(i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      quad += Polynomial::coordinate(n, i) * Polynomial::coordinate(n, j) *
              v.comp[i].derivative(j);
  return div - quad;
}

PolyVec sphere_vector_laplacian(const PolyVec& v) {
  int n = v.vars();
  PolyVec out(n);
  Polynomial div_s = divergence_tangent(v);
  for (int i = 0; i < n; ++i) {
    // lap v_i - D^2 v_i (x, x)
    Polynomial term = v.comp[i].laplacian();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        term -= Polynomial::coordinate(n, a) * Polynomial::coordinate(n, b) *
                v.comp[i].derivative(a).derivative(b);
    // -(n-1) (Dv) x
    for (int a = 0; a < n; ++a)
      term -= (n - 1.0) * (v.comp[i].derivative(a) * Polynomial::coordinate(n, a));
    // + 2 div_S(v) x_i + v_i
    term += 2.0 * (div_s * Polynomial::coordinate(n, i));
    term += v.comp[i];
    out.comp[i] = term;
  }
  return out;
}

PolyVec lie_bracket(const PolyVec& a, const PolyVec& b) {
  int n = a.vars();
  PolyVec out(n);
  for (int i = 0; i < n; ++i) {
    Polynomial t(n);
    for (int j = 0; j < n; ++j)
      t += b.comp[i].derivative(j) * a.comp[j] - a.comp[i].derivative(j) * b.comp[j];
    out.comp[i] = t;
  }
  return out;
}

PolyMat lie_derivative_round(const PolyVec& v) {
  int n = v.vars();
  PolyMat m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.comp[i][j] = v.comp[i].derivative(j) + v.comp[j].derivative(i);
  return m;
}

double harmonic_eigenvalue(int n, int level) {
  return level * (level + n - 2.0);  // l(l+n-2) on S^{n-1}
}

std::vector<HarmonicFunction> harmonic_basis(int n, int level) {
  std::vector<HarmonicFunction> basis;
  if (level == 0) {
    basis.push_back({0, 0.0, Polynomial::constant(n, 1.0)});
    return basis;
  }
  if (level == 1) {
    for (int i = 0; i < n; ++i)
      basis.push_back({1, double(n - 1), Polynomial::coordinate(n, i)});
    return basis;
  }
  if (level != 2) throw std::invalid_argument("harmonic_basis: level > 2 unsupported");

  double lam = 2.0 * n;
  // Off-diagonal x_i x_j are mutually L2-orthogonal and orthogonal to the
  // diagonal family.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      basis.push_back({2, lam, Polynomial::coordinate(n, i) * Polynomial::coordinate(n, j)});
  // Diagonal traceless: u_k = x_1^2 + ... + x_k^2 - k x_{k+1}^2, k = 1..n-1.
  for (int k = 1; k < n; ++k) {
    Polynomial p(n);
    for (int i = 0; i < k; ++i)
      p += Polynomial::coordinate(n, i) * Polynomial::coordinate(n, i);
    p -= double(k) * (Polynomial::coordinate(n, k) * Polynomial::coordinate(n, k));
    basis.push_back({2, lam, p});
  }
  return basis;
}

QuadratureResult quadrature(const Polynomial& p) {
  return {integrate_sphere(p), 0.0, true};
}

QuadratureResult quadrature(int n, const std::function<double(const VectorXd&)>& f,
                            std::uint64_t seed, int samples) {
  Rng rng(seed);
  double vol = sphere_volume(n);
  double sum = 0.0, sumsq = 0.0;
  for (int k = 0; k < samples; ++k) {
    double v = f(rng.sphere_point(n));
    sum += v;
    sumsq += v * v;
  }
  double mean = sum / samples;
  double var = std::max(0.0, sumsq / samples - mean * mean);
  return {vol * mean, vol * std::sqrt(var / samples), false};
}

LevelProjection project_levels(const Polynomial& p) {
  int n = p.vars();
  LevelProjection out;
  Polynomial rem = p;
  for (int level = 0; level <= 2; ++level) {
    auto basis = harmonic_basis(n, level);
    for (const auto& h : basis) {
      double g = sphere_inner(h.poly, h.poly);
      double c = sphere_inner(rem, h.poly) / g;
      out.coeff_by_level[level].push_back(c);
      rem -= c * h.poly;
    }
  }
  out.residual_l2 = std::sqrt(std::max(0.0, sphere_inner(rem, rem)));
  return out;
}

}  // namespace necklab
