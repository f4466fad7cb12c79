#pragma once

#include "necklab/curvature.hpp"

#include <Eigen/Dense>
#include <array>
#include <optional>

namespace necklab {

// Dimension-four block data of the curvature operator on
// Lambda^2 = Lambda_+ (+) Lambda_-, in the orthonormal basis
//   {(e12+e34)/sqrt2, (e13-e24)/sqrt2, (e14+e23)/sqrt2} for Lambda_+,
//   {(e12-e34)/sqrt2, (e13+e24)/sqrt2, (e14-e23)/sqrt2} for Lambda_-,
// with operator entries M_{(ab),(cd)} = R_abcd. In this normalization the
// frame minimum of the PIC form equals 2 min{a1+a2, c1+c2}.
struct FourDBlocks {
  Eigen::Matrix3d A, B, C;
  std::array<double, 3> a{}, b{}, c{};  // eigen/singular values, ascending

  void refresh();  // recompute a, b, c from A, B, C
  double tr_gap() const { return std::abs(A.trace() - C.trace()); }
};

FourDBlocks block_decompose_4d(const CurvatureOperator& r);

// Cofactor (adjugate) matrix, computed algebraically so singular input is fine.
Eigen::Matrix3d cofactor3(const Eigen::Matrix3d& x);

// Reaction system dA = A^2 + 2A# + BB^t, dC = C^2 + 2C# + B^tB,
// dB = AB + BC + 2B#. Its trace obeys d tr A = (tr A)^2 + sum b_i^2.
FourDBlocks hamilton_rhs(const FourDBlocks& m);
FourDBlocks hamilton_ode_step(const FourDBlocks& m, double dt);  // one RK4 step

struct ConeSpec {
  enum class Kind { C0, Cs, CsTilde } kind = Kind::C0;
  double phi = 1.0;
  double s = 0.0;  // for Cs / CsTilde; Cs defaults to s0(phi) when s <= 0

  static double s0(double phi) { return 1.0 / (3.0 * (phi + 1.0) * (4.0 * phi + 3.0)); }
  static double q(double s) { return (s + 1.0) / (2.0 * s); }
};

// Signed slacks of the defining inequalities (nonnegative iff satisfied).
//   C0:      Phi(a1+a2)(c1+c2) - (b2+b3)^2,
//            (Phi+1)(a1+a2) - (a2+a3), (Phi+1)(c1+c2) - (c2+c3)
//   C(s):    a1 - s(a1+a2+a3), c1 - s(c1+c2+c3)   (on top of C0)
//   C~(s):   a1 c1 - s b3^2, q(s)(a1+a2)(c1+c2) - (b2+b3)^2
std::vector<double> cone_margin(const FourDBlocks& m, const ConeSpec& cone);

struct OdeTrajectory {
  std::vector<double> times;
  std::vector<FourDBlocks> states;
  bool blew_up = false;
  double min_margin_c0 = 0, min_margin_cs = 0;
};

// Integrate with dt <= dt_base / (1 + tr A); stop at tr A > blowup or t_max.
OdeTrajectory integrate_hamilton(const FourDBlocks& start, double t_max,
                                 double dt_base = 0.01, double blowup = 1e6,
                                 const std::optional<ConeSpec>& track_c0 = {},
                                 const std::optional<ConeSpec>& track_cs = {});

}  // namespace necklab
