#include "necklab/curvature.hpp"
#include "necklab/blocks4d.hpp"

#include <cmath>
#include <stdexcept>

namespace necklab {

CurvatureOperator::CurvatureOperator(int n, std::vector<double> components, bool project)
    : n_(n), r_(std::move(components)) {
  if (n < 4) throw std::invalid_argument("CurvatureOperator: n >= 4 required");
  if (r_.size() != std::size_t(n) * n * n * n)
    throw std::invalid_argument("CurvatureOperator: component count mismatch");
  if (project) project_symmetries();
}

CurvatureOperator CurvatureOperator::zero(int n) {
  return CurvatureOperator(n, std::vector<double>(std::size_t(n) * n * n * n, 0.0), false);
}

CurvatureOperator CurvatureOperator::from_a_matrix(const Eigen::MatrixXd& a, double tol) {
  int n = (int)a.rows();
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("from_a_matrix: A must be symmetric");
  std::vector<double> r(std::size_t(n) * n * n * n, 0.0);
  auto idx = [n](int i, int j, int k, int l) {
    return ((std::size_t(i) * n + j) * n + k) * n + l;
  };
  auto d = [](int i, int j) { return i == j ? 1.0 : 0.0; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          r[idx(i, j, k, l)] =
              d(i, k) * a(j, l) + d(j, l) * a(i, k) - d(i, l) * a(j, k) - d(j, k) * a(i, l);
  return CurvatureOperator(n, std::move(r), false);
}

void CurvatureOperator::project_symmetries() {
  int n = n_;
  std::vector<double> s(r_.size());
  // Antisymmetry in both pairs.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          s[idx(i, j, k, l)] = 0.25 * (r_[idx(i, j, k, l)] - r_[idx(j, i, k, l)] -
                                       r_[idx(i, j, l, k)] + r_[idx(j, i, l, k)]);
  // Pair symmetry.
  std::vector<double> p(r_.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          p[idx(i, j, k, l)] = 0.5 * (s[idx(i, j, k, l)] + s[idx(k, l, i, j)]);
  // Remove the Lambda^4 part: the cyclic average of a tensor in S^2(Lambda^2)
  // is totally antisymmetric, and subtracting it enforces first Bianchi.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          r_[idx(i, j, k, l)] =
              p[idx(i, j, k, l)] -
              (p[idx(i, j, k, l)] + p[idx(i, k, l, j)] + p[idx(i, l, j, k)]) / 3.0;
}

double CurvatureOperator::scal() const {
  double s = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) s += at(i, j, i, j);
  return s;
}

Eigen::MatrixXd CurvatureOperator::ricci() const {
  Eigen::MatrixXd ric = Eigen::MatrixXd::Zero(n_, n_);
  for (int j = 0; j < n_; ++j)
    for (int l = 0; l < n_; ++l)
      for (int i = 0; i < n_; ++i) ric(j, l) += at(i, j, i, l);
  return ric;
}

double CurvatureOperator::contract(const Eigen::VectorXd& u, const Eigen::VectorXd& v,
                                   const Eigen::VectorXd& w, const Eigen::VectorXd& z) const {
  // Two-stage contraction keeps this O(n^4 + n^2).
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      double uv = u[i] * v[j];
      if (uv == 0.0) continue;
      for (int k = 0; k < n_; ++k)
        for (int l = 0; l < n_; ++l) m(k, l) += uv * at(i, j, k, l);
    }
  double s = 0.0;
  for (int k = 0; k < n_; ++k)
    for (int l = 0; l < n_; ++l) s += m(k, l) * w[k] * z[l];
  return s;
}

double CurvatureOperator::two_form_value(const Eigen::MatrixXd& phi) const {
  double s = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        for (int l = 0; l < n_; ++l) s += at(i, j, k, l) * phi(i, j) * phi(k, l);
  return s;
}

double CurvatureOperator::symmetry_defect() const {
  double worst = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        for (int l = 0; l < n_; ++l) {
          double v = at(i, j, k, l);
          worst = std::max(worst, std::abs(v + at(j, i, k, l)));
          worst = std::max(worst, std::abs(v + at(i, j, l, k)));
          worst = std::max(worst, std::abs(v - at(k, l, i, j)));
          worst = std::max(worst, std::abs(v + at(i, k, l, j) + at(i, l, j, k)));
        }
  return worst;
}

void FourFrame::validate(double tol) const {
  if (e.cols() != 4) throw std::invalid_argument("FourFrame: need 4 columns");
  Eigen::MatrixXd g = e.transpose() * e;
  if ((g - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("FourFrame: frame not orthonormal");
  if (lambda < -tol || lambda > 1 + tol || mu < -tol || mu > 1 + tol)
    throw std::invalid_argument("FourFrame: lambda, mu must lie in [0,1]");
}

namespace {

// Curvature as a quadratic form on Lambda^2 for fast repeated frame
// evaluation: M_{(ab),(cd)} = R_abcd over pairs a<b.
struct BivectorOperator {
  int n;
  std::vector<std::pair<int, int>> pairs;
  Eigen::MatrixXd m;

  explicit BivectorOperator(const CurvatureOperator& r) : n(r.n()) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    int nn = (int)pairs.size();
    m.resize(nn, nn);
    for (int p = 0; p < nn; ++p)
      for (int q = 0; q < nn; ++q)
        m(p, q) = r.at(pairs[p].first, pairs[p].second, pairs[q].first, pairs[q].second);
  }

  Eigen::VectorXd wedge(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const {
    Eigen::VectorXd w(pairs.size());
    for (int p = 0; p < (int)pairs.size(); ++p)
      w[p] = u[pairs[p].first] * v[pairs[p].second] - u[pairs[p].second] * v[pairs[p].first];
    return w;
  }

  // Coefficients of the isotropic form for a frame:
  // F = c0 + a l^2 + b m^2 + c l^2 m^2 - 2 d l m.
  void coefficients(const Eigen::MatrixXd& e, double& c0, double& a, double& b,
                    double& c, double& d) const {
    Eigen::VectorXd w13 = wedge(e.col(0), e.col(2));
    Eigen::VectorXd w14 = wedge(e.col(0), e.col(3));
    Eigen::VectorXd w23 = wedge(e.col(1), e.col(2));
    Eigen::VectorXd w24 = wedge(e.col(1), e.col(3));
    Eigen::VectorXd w12 = wedge(e.col(0), e.col(1));
    Eigen::VectorXd w34 = wedge(e.col(2), e.col(3));
    c0 = w13.dot(m * w13);
    a = w14.dot(m * w14);
    b = w23.dot(m * w23);
    c = w24.dot(m * w24);
    d = w12.dot(m * w34);
  }
};

double eval_form(double c0, double a, double b, double c, double d, double l, double m) {
  return c0 + a * l * l + b * m * m + c * l * l * m * m - 2.0 * d * l * m;
}

double min_lambda_mu_coeffs(double c0, double a, double b, double c, double d,
                            PicMode mode, double& lmin, double& mmin) {
  if (mode == PicMode::PIC) {
    lmin = mmin = 1.0;
    return eval_form(c0, a, b, c, d, 1.0, 1.0);
  }
  auto consider = [&](double l, double m, double& best) {
    l = std::clamp(l, 0.0, 1.0);
    m = std::clamp(m, 0.0, 1.0);
    double v = eval_form(c0, a, b, c, d, l, m);
    if (v < best) { best = v; lmin = l; mmin = m; }
  };
  double best = std::numeric_limits<double>::infinity();
  if (mode == PicMode::PIC1) {
    // mu = 1; quadratic in lambda on [0,1].
    lmin = 0.0; mmin = 1.0;
    consider(0.0, 1.0, best);
    consider(1.0, 1.0, best);
    double q = a + c;
    if (q > 0.0) consider(d / q, 1.0, best);
    return best;
  }
  // PIC2: corners, edge-interior critical points, interior critical points.
  consider(0.0, 0.0, best);
  consider(1.0, 0.0, best);
  consider(0.0, 1.0, best);
  consider(1.0, 1.0, best);
  if (b + c > 0.0) consider(1.0, d / (b + c), best);  // edge lambda = 1
  if (a + c > 0.0) consider(d / (a + c), 1.0, best);  // edge mu = 1
  // Interior: stationarity gives b c^2 y^2 + 2abc y + a(ab - d^2) = 0, y = mu^2,
  // with lambda = d mu / (a + c mu^2).
  if (std::abs(c) > 1e-300 && std::abs(b) > 1e-300) {
    double A2 = b * c * c, B2 = 2.0 * a * b * c, C2 = a * (a * b - d * d);
    double disc = B2 * B2 - 4.0 * A2 * C2;
    if (disc >= 0.0) {
      double sq = std::sqrt(disc);
      for (double y : {(-B2 + sq) / (2.0 * A2), (-B2 - sq) / (2.0 * A2)}) {
        if (y <= 0.0 || y > 1.0) continue;
        double mu = std::sqrt(y);
        double den = a + c * y;
        if (std::abs(den) < 1e-300) continue;
        consider(d * mu / den, mu, best);
      }
    }
  }
  // Safety net: coarse grid + local polish (handles degenerate coefficients).
  const int g = 12;
  double bl = lmin, bm = mmin;
  for (int i = 0; i <= g; ++i)
    for (int j = 0; j <= g; ++j) consider(double(i) / g, double(j) / g, best);
  if (lmin != bl || mmin != bm) {
    double step = 0.5 / g;
    for (int it = 0; it < 40; ++it) {
      double l0 = lmin, m0 = mmin;
      consider(l0 + step, m0, best);
      consider(l0 - step, m0, best);
      consider(l0, m0 + step, best);
      consider(l0, m0 - step, best);
      if (lmin == l0 && mmin == m0) step *= 0.5;
      if (step < 1e-12) break;
    }
  }
  return best;
}

}  // namespace

double isotropic_value(const CurvatureOperator& r, const FourFrame& f) {
  f.validate();
  double c0 = r.contract(f.e.col(0), f.e.col(2), f.e.col(0), f.e.col(2));
  double a = r.contract(f.e.col(0), f.e.col(3), f.e.col(0), f.e.col(3));
  double b = r.contract(f.e.col(1), f.e.col(2), f.e.col(1), f.e.col(2));
  double c = r.contract(f.e.col(1), f.e.col(3), f.e.col(1), f.e.col(3));
  double d = r.contract(f.e.col(0), f.e.col(1), f.e.col(2), f.e.col(3));
  return eval_form(c0, a, b, c, d, f.lambda, f.mu);
}

double min_over_lambda_mu(const CurvatureOperator& r, const Eigen::MatrixXd& frame,
                          PicMode mode, double* lam_out, double* mu_out) {
  BivectorOperator biv(r);
  double c0, a, b, c, d;
  biv.coefficients(frame, c0, a, b, c, d);
  double l = 1.0, m = 1.0;
  double v = min_lambda_mu_coeffs(c0, a, b, c, d, mode, l, m);
  if (lam_out) *lam_out = l;
  if (mu_out) *mu_out = m;
  return v;
}

MinIsotropicResult min_isotropic(const CurvatureOperator& r, PicMode mode,
                                 long budget, std::uint64_t seed, int polish_starts) {
  if (budget < 1) throw std::invalid_argument("min_isotropic: budget >= 1");
  const int n = r.n();
  BivectorOperator biv(r);
  Rng rng(seed);

  auto eval_frame = [&](const Eigen::MatrixXd& e, double& l, double& m) {
    double c0, a, b, c, d;
    biv.coefficients(e, c0, a, b, c, d);
    return min_lambda_mu_coeffs(c0, a, b, c, d, mode, l, m);
  };

  MinIsotropicResult out;
  out.value = std::numeric_limits<double>::infinity();
  std::vector<std::pair<double, Eigen::MatrixXd>> pool;
  for (long k = 0; k < budget; ++k) {
    Eigen::MatrixXd e = rng.frame(n, 4);
    double l, m;
    double v = eval_frame(e, l, m);
    ++out.frames_sampled;
    if (v < out.value) {
      out.value = v;
      out.argmin = {e, l, m};
    }
    if ((int)pool.size() < polish_starts)
      pool.emplace_back(v, e);
    else {
      int worst = 0;
      for (int i = 1; i < (int)pool.size(); ++i)
        if (pool[i].first > pool[worst].first) worst = i;
      if (v < pool[worst].first) pool[worst] = {v, e};
    }
  }

  // Projected gradient with Gram-Schmidt retraction on the top pool.
  auto retract = [](Eigen::MatrixXd e) {
    for (int c = 0; c < 4; ++c) {
      for (int p = 0; p < c; ++p) e.col(c) -= e.col(p).dot(e.col(c)) * e.col(p);
      e.col(c).normalize();
    }
    return e;
  };
  const double fd = 1e-6;
  for (auto& [v0, e0] : pool) {
    Eigen::MatrixXd e = e0;
    double l, m;
    double v = eval_frame(e, l, m);
    double step = 0.1;
    bool converged = false;
    for (int it = 0; it < 120; ++it) {
      Eigen::MatrixXd grad(n, 4);
      for (int ccol = 0; ccol < 4; ++ccol)
        for (int row = 0; row < n; ++row) {
          Eigen::MatrixXd ep = e, em = e;
          ep(row, ccol) += fd;
          em(row, ccol) -= fd;
          double lp, mp;
          grad(row, ccol) =
              (eval_frame(retract(ep), lp, mp) - eval_frame(retract(em), lp, mp)) / (2 * fd);
        }
      double gn = grad.norm();
      if (gn < 1e-10) { converged = true; break; }
      bool improved = false;
      while (step > 1e-12) {
        Eigen::MatrixXd trial = retract(e - (step / gn) * grad);
        double lt, mt;
        double vt = eval_frame(trial, lt, mt);
        if (vt < v - 1e-14) {
          e = trial;
          v = vt;
          l = lt;
          m = mt;
          improved = true;
          step *= 1.5;
          break;
        }
        step *= 0.5;
      }
      if (!improved) { converged = true; break; }
    }
    if (v < out.value) {
      out.value = v;
      out.argmin = {e, l, m};
      out.refined = converged;
    }
    out.refined = out.refined || converged;
  }
  return out;
}

UniformPicReport is_uniformly_pic(const CurvatureOperator& r, double alpha,
                                  long budget, std::uint64_t seed) {
  if (alpha <= 0) throw std::invalid_argument("is_uniformly_pic: alpha > 0 required");
  UniformPicReport rep;
  rep.scal = r.scal();
  if (r.n() == 4) {
    FourDBlocks blocks = block_decompose_4d(r);
    double a12 = blocks.a[0] + blocks.a[1];
    double c12 = blocks.c[0] + blocks.c[1];
    rep.min_pic = 2.0 * std::min(a12, c12);
    rep.used_blocks = true;
    double maxev = std::max({blocks.a[2], blocks.b[2], blocks.c[2]});
    rep.margin_def21 = std::min(a12, c12) - alpha * maxev;
  } else {
    rep.min_pic = min_isotropic(r, PicMode::PIC, budget, seed).value;
  }
  rep.margin = rep.min_pic - alpha * rep.scal;
  rep.holds = rep.margin >= 0.0;
  return rep;
}

}  // namespace necklab
