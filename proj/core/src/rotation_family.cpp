#include "necklab/rotation_family.hpp"

#include <cmath>
#include <stdexcept>

namespace necklab {

RotationFamily RotationFamily::canonical(int n) {
  std::vector<Eigen::MatrixXd> basis;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
      m(i, j) = 1.0;
      m(j, i) = -1.0;
      basis.push_back(m);
    }
  return RotationFamily(n, std::move(basis));
}

RotationFamily RotationFamily::conjugated(int n, const Eigen::MatrixXd& omega) {
  RotationFamily can = canonical(n);
  int N = can.size();
  if (omega.rows() != N || omega.cols() != N)
    throw std::invalid_argument("conjugated: omega must be N x N, N = n(n-1)/2");
  std::vector<Eigen::MatrixXd> basis(N, Eigen::MatrixXd::Zero(n, n));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) basis[a] += omega(a, b) * can.matrix(b);
  return RotationFamily(n, std::move(basis));
}

double RotationFamily::inner(int a, int b) const {
  return 0.5 * (basis_[a].transpose() * basis_[b]).trace();
}

bool RotationFamily::is_orthonormal(double tol) const {
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b) {
      double want = (a == b) ? 1.0 : 0.0;
      if (std::abs(inner(a, b) - want) > tol) return false;
    }
  return true;
}

double RotationFamily::standard_scale(int n) {
  // Gram of E_{ij} x fields on the unit sphere is (2 vol / n) delta; the
  // area normalization divides by vol^{(n+1)/(n-1)}.
  double vol = sphere_volume(n);
  return std::sqrt(0.5 * n) * std::pow(vol, 1.0 / (n - 1.0));
}

PolyVec RotationFamily::field(int a, double scale) const {
  PolyVec v(n_);
  const Eigen::MatrixXd& m = basis_[a];
  for (int i = 0; i < n_; ++i) {
    Polynomial p(n_);
    for (int j = 0; j < n_; ++j)
      if (m(i, j) != 0.0) p += m(i, j) * Polynomial::coordinate(n_, j);
    v.comp[i] = scale * p;
  }
  return v;
}

int RotationFamily::index_of_pair(int i, int j) const {
  if (i >= j) throw std::invalid_argument("index_of_pair expects i < j");
  int a = 0;
  for (int p = 0; p < n_; ++p)
    for (int q = p + 1; q < n_; ++q) {
      if (p == i && q == j) return a;
      ++a;
    }
  throw std::logic_error("pair out of range");
}

namespace {

Eigen::MatrixXd bracket(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return a * b - b * a;
}

// Canonical constants: E_{ij} = [E_{ik}, E_{kj}] for any k not in {i, j}.
// [E_{ik}, E_{kj}] = E_{ij} holds with the sign convention E_{ji} = -E_{ij}.
std::vector<Eigen::MatrixXd> canonical_constants(const RotationFamily& fam) {
  int n = fam.n(), N = fam.size();
  std::vector<Eigen::MatrixXd> k(N, Eigen::MatrixXd::Zero(N, N));
  int a = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++a) {
      int mid = -1;
      for (int c = 0; c < n; ++c)
        if (c != i && c != j) { mid = c; break; }
      // E_{ij} = [E_{i,mid}, E_{mid,j}] with orientation signs.
      double s1 = 1.0, s2 = 1.0;
      int p1 = std::min(i, mid), q1 = std::max(i, mid);
      if (p1 != i) s1 = -1.0;
      int p2 = std::min(mid, j), q2 = std::max(mid, j);
      if (p2 != mid) s2 = -1.0;
      int b = fam.index_of_pair(p1, q1);
      int c = fam.index_of_pair(p2, q2);
      k[a](b, c) = s1 * s2;
    }
  return k;
}

}  // namespace

StructureConstants structure_constants(const RotationFamily& family) {
  if (!family.is_orthonormal())
    throw std::invalid_argument("structure_constants: basis not orthonormal");
  int n = family.n(), N = family.size();
  RotationFamily can = RotationFamily::canonical(n);
  std::vector<Eigen::MatrixXd> ktilde = canonical_constants(can);

  // Recover omega with sigma^(a) = sum_d omega_ad E^(d): omega_ad = <sigma^a, E^d>.
  Eigen::MatrixXd omega(N, N);
  for (int a = 0; a < N; ++a)
    for (int d = 0; d < N; ++d)
      omega(a, d) = 0.5 * (family.matrix(a).transpose() * can.matrix(d)).trace();

  // k_abc = sum_{d,e,f} omega_ad omega_be omega_cf ktilde_def.
  StructureConstants out;
  out.k.assign(N, Eigen::MatrixXd::Zero(N, N));
  for (int a = 0; a < N; ++a) {
    Eigen::MatrixXd kk = Eigen::MatrixXd::Zero(N, N);
    for (int d = 0; d < N; ++d) {
      if (omega(a, d) == 0.0) continue;
      for (int e = 0; e < N; ++e)
        for (int f = 0; f < N; ++f) {
          double v = ktilde[d](e, f);
          if (v == 0.0) continue;
          kk += (omega(a, d) * v) * (omega.col(e) * omega.col(f).transpose());
        }
    }
    out.k[a] = kk;
  }

  for (int a = 0; a < N; ++a) {
    Eigen::MatrixXd rec = Eigen::MatrixXd::Zero(n, n);
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c)
        if (out.k[a](b, c) != 0.0)
          rec += out.k[a](b, c) * bracket(family.matrix(b), family.matrix(c));
    out.reconstruction_residual =
        std::max(out.reconstruction_residual, (rec - family.matrix(a)).norm());
    out.max_abs = std::max(out.max_abs, out.k[a].cwiseAbs().maxCoeff());
  }
  return out;
}

}  // namespace necklab
