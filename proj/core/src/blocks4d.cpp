#include "necklab/blocks4d.hpp"

#include <cmath>
#include <stdexcept>

namespace necklab {

namespace {

// Orthonormal self-dual / anti-self-dual bases as coefficient vectors over
// the pair basis {e12, e13, e14, e23, e24, e34}.
const double inv_sq2 = 0.7071067811865475244;

struct PairBasis {
  // rows: 3 self-dual then 3 anti-self-dual; columns: pair index
  Eigen::Matrix<double, 6, 6> t;
  PairBasis() {
    t.setZero();
    // e12 e13 e14 e23 e24 e34
    t(0, 0) = inv_sq2; t(0, 5) = inv_sq2;    // (e12+e34)/sqrt2
    t(1, 1) = inv_sq2; t(1, 4) = -inv_sq2;   // (e13-e24)/sqrt2
    t(2, 2) = inv_sq2; t(2, 3) = inv_sq2;    // (e14+e23)/sqrt2
    t(3, 0) = inv_sq2; t(3, 5) = -inv_sq2;   // (e12-e34)/sqrt2
    t(4, 1) = inv_sq2; t(4, 4) = inv_sq2;    // (e13+e24)/sqrt2
    t(5, 2) = inv_sq2; t(5, 3) = -inv_sq2;   // (e14-e23)/sqrt2
  }
};

std::array<double, 3> sorted_eigs(const Eigen::Matrix3d& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(0.5 * (m + m.transpose()));
  auto v = es.eigenvalues();
  return {v[0], v[1], v[2]};
}

std::array<double, 3> singular_values_ascending(const Eigen::Matrix3d& m) {
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(m);
  auto s = svd.singularValues();  // descending
  return {s[2], s[1], s[0]};
}

}  // namespace

void FourDBlocks::refresh() {
  a = sorted_eigs(A);
  c = sorted_eigs(C);
  b = singular_values_ascending(B);
}

FourDBlocks block_decompose_4d(const CurvatureOperator& r) {
  if (r.n() != 4) throw std::invalid_argument("block_decompose_4d: n must be 4");
  static const PairBasis pb;
  const std::pair<int, int> pairs[6] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  Eigen::Matrix<double, 6, 6> m;
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q)
      m(p, q) = r.at(pairs[p].first, pairs[p].second, pairs[q].first, pairs[q].second);
  Eigen::Matrix<double, 6, 6> mm = pb.t * m * pb.t.transpose();
  FourDBlocks out;
  out.A = mm.block<3, 3>(0, 0);
  out.B = mm.block<3, 3>(0, 3);
  out.C = mm.block<3, 3>(3, 3);
  out.refresh();
  return out;
}

Eigen::Matrix3d cofactor3(const Eigen::Matrix3d& x) {
  Eigen::Matrix3d c;
  c(0, 0) = x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1);
  c(0, 1) = x(1, 2) * x(2, 0) - x(1, 0) * x(2, 2);
  c(0, 2) = x(1, 0) * x(2, 1) - x(1, 1) * x(2, 0);
  c(1, 0) = x(2, 1) * x(0, 2) - x(2, 2) * x(0, 1);
  c(1, 1) = x(2, 2) * x(0, 0) - x(2, 0) * x(0, 2);
  c(1, 2) = x(2, 0) * x(0, 1) - x(2, 1) * x(0, 0);
  c(2, 0) = x(0, 1) * x(1, 2) - x(0, 2) * x(1, 1);
  c(2, 1) = x(0, 2) * x(1, 0) - x(0, 0) * x(1, 2);
  c(2, 2) = x(0, 0) * x(1, 1) - x(0, 1) * x(1, 0);
  return c;
}

FourDBlocks hamilton_rhs(const FourDBlocks& m) {
  FourDBlocks d;
  d.A = m.A * m.A + 2.0 * cofactor3(m.A) + m.B * m.B.transpose();
  d.C = m.C * m.C + 2.0 * cofactor3(m.C) + m.B.transpose() * m.B;
  d.B = m.A * m.B + m.B * m.C + 2.0 * cofactor3(m.B);
  return d;
}

FourDBlocks hamilton_ode_step(const FourDBlocks& m, double dt) {
  if (dt <= 0) throw std::invalid_argument("hamilton_ode_step: dt > 0");
  auto axpy = [](const FourDBlocks& x, double s, const FourDBlocks& y) {
    FourDBlocks r;
    r.A = x.A + s * y.A;
    r.B = x.B + s * y.B;
    r.C = x.C + s * y.C;
    return r;
  };
  FourDBlocks k1 = hamilton_rhs(m);
  FourDBlocks k2 = hamilton_rhs(axpy(m, 0.5 * dt, k1));
  FourDBlocks k3 = hamilton_rhs(axpy(m, 0.5 * dt, k2));
  FourDBlocks k4 = hamilton_rhs(axpy(m, dt, k3));
  FourDBlocks out;
  out.A = m.A + (dt / 6.0) * (k1.A + 2 * k2.A + 2 * k3.A + k4.A);
  out.B = m.B + (dt / 6.0) * (k1.B + 2 * k2.B + 2 * k3.B + k4.B);
  out.C = m.C + (dt / 6.0) * (k1.C + 2 * k2.C + 2 * k3.C + k4.C);
  out.refresh();
  return out;
}

std::vector<double> cone_margin(const FourDBlocks& m, const ConeSpec& cone) {
  const auto& a = m.a;
  const auto& b = m.b;
  const auto& c = m.c;
  double a12 = a[0] + a[1], c12 = c[0] + c[1];
  double b23 = b[1] + b[2];
  switch (cone.kind) {
    case ConeSpec::Kind::C0:
      return {cone.phi * a12 * c12 - b23 * b23,
              (cone.phi + 1.0) * a12 - (a[1] + a[2]),
              (cone.phi + 1.0) * c12 - (c[1] + c[2])};
    case ConeSpec::Kind::Cs: {
      double s = cone.s > 0 ? cone.s : ConeSpec::s0(cone.phi);
      return {a[0] - s * (a[0] + a[1] + a[2]), c[0] - s * (c[0] + c[1] + c[2])};
    }
    case ConeSpec::Kind::CsTilde: {
      if (cone.s <= 0 || cone.s >= 1)
        throw std::invalid_argument("CsTilde requires 0 < s < 1");
      double q = ConeSpec::q(cone.s);
      return {a[0] * c[0] - cone.s * b[2] * b[2], q * a12 * c12 - b23 * b23};
    }
  }
  return {};
}

OdeTrajectory integrate_hamilton(const FourDBlocks& start, double t_max, double dt_base,
                                 double blowup, const std::optional<ConeSpec>& track_c0,
                                 const std::optional<ConeSpec>& track_cs) {
  OdeTrajectory traj;
  traj.min_margin_c0 = std::numeric_limits<double>::infinity();
  traj.min_margin_cs = std::numeric_limits<double>::infinity();
  FourDBlocks m = start;
  m.refresh();
  double t = 0.0;
  traj.times.push_back(t);
  traj.states.push_back(m);
  auto track = [&](const FourDBlocks& s) {
    if (track_c0) {
      for (double g : cone_margin(s, *track_c0))
        traj.min_margin_c0 = std::min(traj.min_margin_c0, g);
    }
    if (track_cs) {
      for (double g : cone_margin(s, *track_cs))
        traj.min_margin_cs = std::min(traj.min_margin_cs, g);
    }
  };
  track(m);
  while (t < t_max) {
    double tr = m.A.trace();
    if (tr > blowup) { traj.blew_up = true; break; }
    double dt = std::min(dt_base / (1.0 + std::abs(tr)), t_max - t);
    m = hamilton_ode_step(m, dt);
    t += dt;
    traj.times.push_back(t);
    traj.states.push_back(m);
    track(m);
    if (traj.states.size() > 4000000) break;  // hard cap
  }
  return traj;
}

}  // namespace necklab
