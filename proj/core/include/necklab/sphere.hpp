#pragma once

#include "necklab/polynomial.hpp"
#include "necklab/rng.hpp"

#include <optional>

namespace necklab {

// Exact calculus on the unit sphere S^{n-1} in R^n. Everything here is
// polynomial identities through ambient extension:
//   grad_S P = grad P - (x.grad P) x
//   lap_S P  = lap P - x^t (D^2 P) x - (n-1) x.grad P
// and for tangent polynomial fields V (i.e. <V(x),x> = 0 on |x|=1),
//   div_S V  = div V - x^t (DV) x
//   lap_S V  = (lap V - D^2V(x,x)) - (n-1)(DV)x + 2 div_S(V) x + V
// where DV is the ambient Jacobian. All formulas restrict to |x| = 1.

double sphere_volume(int n);

// Exact integral of an ambient polynomial restricted to S^{n-1}.
double integrate_sphere(const Polynomial& p);

// L2(S^{n-1}) pairing of polynomial restrictions.
inline double sphere_inner(const Polynomial& p, const Polynomial& q) {
  return integrate_sphere(p * q);
}

Polynomial radial_derivative(const Polynomial& p);     // x.grad P
Polynomial sphere_laplacian(const Polynomial& p);      // lap_S of restriction
PolyVec sphere_gradient(const Polynomial& p);          // tangential gradient

Polynomial divergence_tangent(const PolyVec& v);       // div_S for tangent v
PolyVec sphere_vector_laplacian(const PolyVec& v);     // rough Laplacian, tangent v
PolyVec lie_bracket(const PolyVec& a, const PolyVec& b);

// (L_V g_S)(X,Y) = X^t (J + J^t) Y for tangent X, Y.
PolyMat lie_derivative_round(const PolyVec& v);

struct HarmonicFunction {
  int level = 0;          // 0, 1, or 2
  double eigenvalue = 0;  // of -lap_S
  Polynomial poly;        // homogeneous harmonic ambient polynomial
};

// L2-orthogonal bases: level 0 -> {1}; level 1 -> {x_i};
// level 2 -> traceless quadratics (dimension n(n+1)/2 - 1).
std::vector<HarmonicFunction> harmonic_basis(int n, int level);

double harmonic_eigenvalue(int n, int level);

struct QuadratureResult {
  double value = 0;
  double stderr_est = 0;   // 0 for the exact polynomial path
  bool exact = false;
};

// Exact for polynomials (any degree); seeded Monte Carlo otherwise.
QuadratureResult quadrature(int n, const std::function<double(const VectorXd&)>& f,
                            std::uint64_t seed, int samples = 200000);
QuadratureResult quadrature(const Polynomial& p);

// Projection of the sphere restriction of p onto harmonic level <= 2 span;
// returns coefficients per basis function and the L2 norm of the remainder.
struct LevelProjection {
  std::vector<double> coeff_by_level[3];
  double residual_l2 = 0;
};
LevelProjection project_levels(const Polynomial& p);

}  // namespace necklab
