#pragma once

#include <optional>
#include <stdexcept>
#include <vector>
#include <cmath>

namespace necklab {

// Shrinking round cylinder (-2(n-2)t) g_{S^{n-1}} + dz^2 for t < 0.
struct CylinderBackground {
  int n;
  static double reference_time(int n) { return -1.0 / (2.0 * (n - 2.0)); }
  static double radius(int n, double t) {
    if (t >= 0) throw std::invalid_argument("cylinder: t < 0 required");
    return std::sqrt(-2.0 * (n - 2.0) * t);
  }
  static double scalar_curvature(int n, double t) {
    if (t >= 0) throw std::invalid_argument("cylinder: t < 0 required");
    return (n - 1.0) / (-2.0 * t);
  }
};

inline double cylinder_scalar_curvature(int n, double t) {
  return CylinderBackground::scalar_curvature(n, t);
}

// Rotationally symmetric metric dz^2 + phi(z)^2 g_{S^{n-1}} on a uniform
// z-grid; f is an optional soliton potential stored on the same grid.
struct WarpedProfile {
  int n = 4;
  std::vector<double> z;
  std::vector<double> phi;
  std::vector<double> f;  // empty when absent

  double dz() const { return z.size() > 1 ? z[1] - z[0] : 0.0; }
  void validate() const;
};

struct WarpedCurvatures {
  // Interior grid values (ends dropped by the central differences).
  std::vector<double> z;
  std::vector<double> k_rad;  // -phi'' / phi
  std::vector<double> k_sph;  // (1 - phi'^2) / phi^2
  std::vector<double> scal;   // 2(n-1) k_rad + (n-1)(n-2) k_sph
};

WarpedCurvatures warped_curvatures(const WarpedProfile& p);

// One explicit Heun (RK2) step of dphi/dt = phi_zz - (n-2)(1-phi_z^2)/phi
// with Dirichlet ends frozen in time. Throws if positivity fails.
struct NeckpinchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
WarpedProfile ricci_flow_step(const WarpedProfile& p, double dt);

// Bryant steady soliton by shooting from the tip with the series start
// phi = z - z^3/(6n(n-1)), f' = -z/n + O(z^3), normalized so R + f'^2 = 1.
struct BryantResult {
  WarpedProfile profile;
  double normalization_residual = 0;  // max |R + f'^2 - 1| over the grid
  bool converged = false;
};
BryantResult bryant_profile(int n, double z_max, double dz = 1e-3);

// Scalar curvature of a warped profile at grid interior via the soliton
// module's central differences.
std::vector<double> warped_scalar_curvature(const WarpedProfile& p);

}  // namespace necklab
