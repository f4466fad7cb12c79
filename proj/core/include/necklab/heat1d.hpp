#pragma once

#include <functional>
#include <vector>
#include <cstdint>

namespace necklab {

// One-dimensional Dirichlet heat problem on [-L, L]: image-charge kernel,
// representation formula, and a Crank-Nicolson solver.

struct DirichletKernel {
  double L = 0;
  int K = 0;              // retained image pairs |k| <= K
  double tail_bound = 0;  // a priori bound for the dropped images

  static DirichletKernel make(double L, double t, double tol = 1e-14);
};

// S(z, t; w) = (4 pi t)^{-1/2} [ sum_k e^{-(z-w+4kL)^2/4t} - sum_k e^{-(z+w+4kL-2L)^2/4t} ]
double kernel_eval(double z, double t, double w, double L, int K);
double kernel_eval(double z, double t, double w, const DirichletKernel& k);
double kernel_dw(double z, double t, double w, double L, int K);  // dS/dw

struct HeatField {
  std::vector<double> z;      // uniform grid on [-L, L]
  std::vector<double> t;      // t[0] = t0, uniform
  std::vector<std::vector<double>> u;  // u[it][iz]

  double at(int it, int iz) const { return u[it][iz]; }
};

using ScalarFn = std::function<double(double)>;

// Crank-Nicolson with Thomas solve. Steps are subdivided to keep
// dt <= dz^2, which also makes the update monotone (discrete maximum
// principle holds exactly).
HeatField fd_solve(const ScalarFn& initial, const ScalarFn& left, const ScalarFn& right,
                   double L, double t0, double t1, int nz, double dt);

// Representation-formula evaluation: initial data at time t0 = -L, Dirichlet
// boundary data at z = +-L, query at (z, t). Initial integral by composite
// Simpson on nz panels; boundary integrals by adaptive Gauss-Kronrod.
double representation_solve(const ScalarFn& initial, const ScalarFn& left,
                            const ScalarFn& right, double L, double z, double t,
                            int nz = 2000, double tol = 1e-10);

// Value |dS/dw(z, t-s; +-L)| and the frozen-constant bound
// C L (t-s)^{-3/2} exp(-L^2 / (100 (t-s))).
struct KernelBound {
  double value = 0;
  double bound = 0;
};
KernelBound boundary_kernel_bound(double z, double t, double s, double L,
                                  double c_frozen);

// int_{-L}^{L} |S(z, t; w)| dw by Simpson.
double kernel_l1(double z, double t, double L, int nz = 4000);

// Adaptive Gauss-Kronrod 15(7) on [a, b].
double integrate_gk(const ScalarFn& f, double a, double b, double tol = 1e-10,
                    int max_depth = 48);

}  // namespace necklab
