#include "necklab/heat1d.hpp"

#include <cmath>
#include <stdexcept>

namespace necklab {

DirichletKernel DirichletKernel::make(double L, double t, double tol) {
  if (t <= 0) throw std::invalid_argument("DirichletKernel: t > 0 required");
  DirichletKernel k;
  k.L = L;
  auto bound = [&](int kk) {
    double arg = 4.0 * kk * L - 4.0 * L;
    if (arg < 0) arg = 0;
    return 2.0 * std::exp(-arg * arg / (4.0 * t)) / std::sqrt(4.0 * M_PI * t);
  };
  int kk = 2;
  while (kk < 64 && bound(kk) > tol) ++kk;
  k.K = kk;
  k.tail_bound = bound(kk);
  return k;
}

double kernel_eval(double z, double t, double w, double L, int K) {
  if (t <= 0) throw std::invalid_argument("kernel_eval: t > 0 required");
  double s = 0.0;
  for (int k = -K; k <= K; ++k) {
    double d1 = z - w + 4.0 * k * L;
    double d2 = z + w + 4.0 * k * L - 2.0 * L;
    s += std::exp(-d1 * d1 / (4.0 * t)) - std::exp(-d2 * d2 / (4.0 * t));
  }
  return s / std::sqrt(4.0 * M_PI * t);
}

double kernel_eval(double z, double t, double w, const DirichletKernel& k) {
  return kernel_eval(z, t, w, k.L, k.K);
}

double kernel_dw(double z, double t, double w, double L, int K) {
  if (t <= 0) throw std::invalid_argument("kernel_dw: t > 0 required");
  double s = 0.0;
  for (int k = -K; k <= K; ++k) {
    double d1 = z - w + 4.0 * k * L;
    double d2 = z + w + 4.0 * k * L - 2.0 * L;
    s += std::exp(-d1 * d1 / (4.0 * t)) * d1 / (2.0 * t) +
         std::exp(-d2 * d2 / (4.0 * t)) * (-d2 / (2.0 * t));
  }
  return s / std::sqrt(4.0 * M_PI * t);
}

HeatField fd_solve(const ScalarFn& initial, const ScalarFn& left, const ScalarFn& right,
                   double L, double t0, double t1, int nz, double dt) {
  if (nz < 5) throw std::invalid_argument("fd_solve: need >= 5 grid points");
  if (dt <= 0 || t1 <= t0) throw std::invalid_argument("fd_solve: bad time range");
  HeatField f;
  double dz = 2.0 * L / (nz - 1);
  f.z.resize(nz);
  for (int i = 0; i < nz; ++i) f.z[i] = -L + i * dz;

  int nt = (int)std::ceil((t1 - t0) / dt);
  dt = (t1 - t0) / nt;
  // Monotone Crank-Nicolson: subdivide until dt <= dz^2.
  int sub = std::max(1, (int)std::ceil(dt / (dz * dz)));
  double h = dt / sub;
  double r = h / (2.0 * dz * dz);

  std::vector<double> u(nz), un(nz);
  for (int i = 0; i < nz; ++i) u[i] = initial(f.z[i]);
  u[0] = left(t0);
  u[nz - 1] = right(t0);

  f.t.resize(nt + 1);
  f.u.assign(nt + 1, std::vector<double>(nz));
  f.t[0] = t0;
  f.u[0] = u;

  int m = nz - 2;
  std::vector<double> cp(m), dp(m);
  double tcur = t0;
  for (int step = 1; step <= nt; ++step) {
    for (int s = 0; s < sub; ++s) {
      double tn = tcur + h;
      double bl = left(tn), br = right(tn);
      // rhs = (1 + r d2) u interior, plus boundary contributions at t_{n+1}.
      // Thomas solve of (1 - r d2) un = rhs.
      auto rhs_at = [&](int i) {
        double v = r * u[i - 1] + (1.0 - 2.0 * r) * u[i] + r * u[i + 1];
        if (i == 1) v += r * bl;
        if (i == nz - 2) v += r * br;
        return v;
      };
      double bdiag = 1.0 + 2.0 * r;
      cp[0] = -r / bdiag;
      dp[0] = rhs_at(1) / bdiag;
      for (int i = 1; i < m; ++i) {
        double denom = bdiag + r * cp[i - 1];
        cp[i] = -r / denom;
        dp[i] = (rhs_at(i + 1) + r * dp[i - 1]) / denom;
      }
      un[nz - 1] = br;
      un[0] = bl;
      double carry = dp[m - 1];
      un[m] = carry;
      for (int i = m - 2; i >= 0; --i) {
        carry = dp[i] - cp[i] * carry;
        un[i + 1] = carry;
      }
      u = un;
      tcur = tn;
    }
    f.t[step] = t0 + step * dt;
    f.u[step] = u;
  }
  return f;
}

double integrate_gk(const ScalarFn& f, double a, double b, double tol, int max_depth) {
  // Gauss-Kronrod 15(7) nodes/weights on [-1, 1].
  static const double xgk[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                                0.741531185599394, 0.586087235467691, 0.405845151377397,
                                0.207784955007898, 0.0};
  static const double wgk[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                                0.140653259715525, 0.169004726639267, 0.190350578064785,
                                0.204432940075298, 0.209482141084728};
  static const double wg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                               0.417959183673469};
  struct Seg { double a, b; int depth; };
  std::function<double(double, double, int)> go = [&](double lo, double hi,
                                                      int depth) -> double {
    double c = 0.5 * (lo + hi), hw = 0.5 * (hi - lo);
    double rk = 0, rg = 0;
    for (int i = 0; i < 8; ++i) {
      double fv;
      if (i == 7) {
        fv = f(c);
        rk += wgk[7] * fv;
        rg += wg[3] * fv;
      } else {
        double f1 = f(c - hw * xgk[i]), f2 = f(c + hw * xgk[i]);
        rk += wgk[i] * (f1 + f2);
        if (i % 2 == 1) rg += wg[i / 2] * (f1 + f2);
      }
    }
    rk *= hw;
    rg *= hw;
    double err = std::abs(rk - rg);
    if (err < tol * std::max(1.0, std::abs(rk)) || depth >= max_depth) return rk;
    return go(lo, c, depth + 1) + go(c, hi, depth + 1);
  };
  if (a == b) return 0.0;
  return go(a, b, 0);
}

namespace {

double simpson(const ScalarFn& f, double a, double b, int n) {
  if (n % 2 == 1) ++n;
  double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace

double representation_solve(const ScalarFn& initial, const ScalarFn& left,
                            const ScalarFn& right, double L, double z, double t,
                            int nz, double tol) {
  if (std::abs(z) > L || t < -L || t > 0)
    throw std::invalid_argument("representation_solve: query outside [-L,L] x [-L,0]");
  if (std::abs(z) > 4000.0 || t < -4000.0)
    throw std::invalid_argument("representation_solve: query outside the scaled window");
  double tk = t + L;  // elapsed time since the initial slice
  DirichletKernel ker = DirichletKernel::make(L, std::max(tk, 1e-12));
  double v = simpson([&](double w) { return kernel_eval(z, tk, w, ker) * initial(w); },
                     -L, L, nz);
  if (tk > 0) {
    auto bnd = [&](double s) {
      double tau = t - s;
      if (tau <= 0) return 0.0;
      return kernel_dw(z, tau, L, L, ker.K) * right(s) -
             kernel_dw(z, tau, -L, L, ker.K) * left(s);
    };
    v += integrate_gk(bnd, -L, t, tol);
  }
  return v;
}

KernelBound boundary_kernel_bound(double z, double t, double s, double L, double c_frozen) {
  if (s >= t) throw std::invalid_argument("boundary_kernel_bound: s < t required");
  double tau = t - s;
  DirichletKernel ker = DirichletKernel::make(L, tau);
  KernelBound out;
  out.value = std::max(std::abs(kernel_dw(z, tau, L, L, ker.K)),
                       std::abs(kernel_dw(z, tau, -L, L, ker.K)));
  out.bound = c_frozen * L * std::pow(tau, -1.5) * std::exp(-L * L / (100.0 * tau));
  return out;
}

double kernel_l1(double z, double t, double L, int nz) {
  DirichletKernel ker = DirichletKernel::make(L, t);
  return simpson([&](double w) { return std::abs(kernel_eval(z, t, w, ker)); }, -L, L, nz);
}

}  // namespace necklab
