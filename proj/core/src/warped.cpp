#include "necklab/warped.hpp"

#include <cmath>

namespace necklab {

void WarpedProfile::validate() const {
  if (z.size() < 5) throw std::invalid_argument("WarpedProfile: need >= 5 grid points");
  if (phi.size() != z.size()) throw std::invalid_argument("WarpedProfile: phi/z size mismatch");
  if (!f.empty() && f.size() != z.size())
    throw std::invalid_argument("WarpedProfile: f/z size mismatch");
  double h = z[1] - z[0];
  for (std::size_t i = 1; i + 1 < z.size(); ++i)
    if (std::abs((z[i + 1] - z[i]) - h) > 1e-9 * std::max(1.0, std::abs(h)))
      throw std::invalid_argument("WarpedProfile: grid not uniform");
  for (double v : phi)
    if (!(v > 0)) throw std::invalid_argument("WarpedProfile: phi must be positive");
}

WarpedCurvatures warped_curvatures(const WarpedProfile& p) {
  p.validate();
  WarpedCurvatures out;
  double h = p.dz();
  int m = (int)p.z.size();
  out.z.reserve(m - 2);
  for (int i = 1; i + 1 < m; ++i) {
    double d1 = (p.phi[i + 1] - p.phi[i - 1]) / (2 * h);
    double d2 = (p.phi[i + 1] - 2 * p.phi[i] + p.phi[i - 1]) / (h * h);
    double krad = -d2 / p.phi[i];
    double ksph = (1.0 - d1 * d1) / (p.phi[i] * p.phi[i]);
    out.z.push_back(p.z[i]);
    out.k_rad.push_back(krad);
    out.k_sph.push_back(ksph);
    out.scal.push_back(2.0 * (p.n - 1) * krad + (p.n - 1.0) * (p.n - 2.0) * ksph);
  }
  return out;
}

std::vector<double> warped_scalar_curvature(const WarpedProfile& p) {
  return warped_curvatures(p).scal;
}

WarpedProfile ricci_flow_step(const WarpedProfile& p, double dt) {
  p.validate();
  double h = p.dz();
  if (dt > h * h / 4.0)
    throw std::invalid_argument("ricci_flow_step: dt <= dz^2/4 required");
  int m = (int)p.z.size();
  auto rhs = [&](const std::vector<double>& phi, int i) {
    double d1 = (phi[i + 1] - phi[i - 1]) / (2 * h);
    double d2 = (phi[i + 1] - 2 * phi[i] + phi[i - 1]) / (h * h);
    return d2 - (p.n - 2.0) * (1.0 - d1 * d1) / phi[i];
  };
  // Heun: predictor-corrector keeps the step second order in dt.
  std::vector<double> stage(p.phi), next(p.phi);
  for (int i = 1; i + 1 < m; ++i) stage[i] = p.phi[i] + dt * rhs(p.phi, i);
  for (int i = 1; i + 1 < m; ++i)
    next[i] = p.phi[i] + 0.5 * dt * (rhs(p.phi, i) + rhs(stage, i));
  for (int i = 0; i < m; ++i)
    if (!(next[i] > 0)) throw NeckpinchError("ricci_flow_step: phi <= 0 (neckpinch)");
  WarpedProfile out = p;
  out.phi = std::move(next);
  return out;
}

namespace {

struct SolitonState {
  double phi, u, v, f;  // u = phi', v = f'
};

SolitonState soliton_rhs(int n, const SolitonState& s) {
  double ddphi = (n - 2.0) * (1.0 - s.u * s.u) / s.phi - s.v * s.u;
  return {s.u, ddphi, -(n - 1.0) * ddphi / s.phi, s.v};
}

SolitonState rk4(int n, const SolitonState& s, double h) {
  auto ax = [](const SolitonState& x, double c, const SolitonState& d) {
    return SolitonState{x.phi + c * d.phi, x.u + c * d.u, x.v + c * d.v, x.f + c * d.f};
  };
  SolitonState k1 = soliton_rhs(n, s);
  SolitonState k2 = soliton_rhs(n, ax(s, 0.5 * h, k1));
  SolitonState k3 = soliton_rhs(n, ax(s, 0.5 * h, k2));
  SolitonState k4 = soliton_rhs(n, ax(s, h, k3));
  return {s.phi + h / 6 * (k1.phi + 2 * k2.phi + 2 * k3.phi + k4.phi),
          s.u + h / 6 * (k1.u + 2 * k2.u + 2 * k3.u + k4.u),
          s.v + h / 6 * (k1.v + 2 * k2.v + 2 * k3.v + k4.v),
          s.f + h / 6 * (k1.f + 2 * k2.f + 2 * k3.f + k4.f)};
}

double scalar_curv(int n, const SolitonState& s) {
  double ddphi = (n - 2.0) * (1.0 - s.u * s.u) / s.phi - s.v * s.u;
  return -2.0 * (n - 1.0) * ddphi / s.phi +
         (n - 1.0) * (n - 2.0) * (1.0 - s.u * s.u) / (s.phi * s.phi);
}

}  // namespace

BryantResult bryant_profile(int n, double z_max, double dz) {
  if (z_max <= 0) throw std::invalid_argument("bryant_profile: z_max > 0 required");
  const double z0 = 1e-3;
  // Tip series: phi = z + p3 z^3, f' = z/n; p3 fixed by R(0) = 1.
  const double p3 = -1.0 / (6.0 * n * (n - 1.0));
  SolitonState s{z0 + p3 * z0 * z0 * z0, 1.0 + 3.0 * p3 * z0 * z0, z0 / n,
                 0.5 * z0 * z0 / n};

  BryantResult out;
  WarpedProfile& prof = out.profile;
  prof.n = n;
  long steps = std::lround((z_max - z0) / dz);
  prof.z.reserve(steps + 1);
  prof.phi.reserve(steps + 1);
  prof.f.reserve(steps + 1);
  double worst = 0.0;
  double zcur = z0;
  auto record = [&](double z, const SolitonState& st) {
    prof.z.push_back(z);
    prof.phi.push_back(st.phi);
    prof.f.push_back(st.f);
    worst = std::max(worst, std::abs(scalar_curv(n, st) + st.v * st.v - 1.0));
  };
  record(zcur, s);
  for (long k = 0; k < steps; ++k) {
    s = rk4(n, s, dz);
    zcur += dz;
    if (!(s.phi > 0)) return out;  // shooting failure, converged stays false
    record(zcur, s);
  }
  // Rescale by the soliton scaling action so R + f'^2 is exactly 1 at the
  // first grid point (removes series/integration drift in the conserved
  // quantity): (z, phi) -> (c z, c phi), f' -> f'/c scales R + f'^2 by c^-2.
  double s0val;
  {
    SolitonState st{prof.phi[0], 1.0 + 3.0 * p3 * z0 * z0, z0 / n, prof.f[0]};
    s0val = scalar_curv(n, st) + st.v * st.v;
  }
  if (std::abs(s0val - 1.0) > 1e-13 && s0val > 0) {
    double c = std::sqrt(s0val);
    for (auto& z : prof.z) z *= c;
    for (auto& p : prof.phi) p *= c;
    worst = std::max(worst, std::abs(s0val - 1.0));
  }
  out.normalization_residual = worst;
  out.converged = true;
  return out;
}

}  // namespace necklab
