#pragma once

#include <Eigen/Dense>
#include <random>
#include <cstdint>

namespace necklab {

// All randomness flows through explicitly seeded engines; nothing global.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform(double a = 0.0, double b = 1.0) {
    return std::uniform_real_distribution<double>(a, b)(eng_);
  }
  double gaussian(double mean = 0.0, double sigma = 1.0) {
    return std::normal_distribution<double>(mean, sigma)(eng_);
  }
  int uniform_int(int a, int b) {  // inclusive
    return std::uniform_int_distribution<int>(a, b)(eng_);
  }

  Eigen::VectorXd gaussian_vector(int n) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = gaussian();
    return v;
  }

  Eigen::VectorXd sphere_point(int n) {
    Eigen::VectorXd v = gaussian_vector(n);
    double r = v.norm();
    while (r < 1e-12) { v = gaussian_vector(n); r = v.norm(); }
    return v / r;
  }

  Eigen::MatrixXd gaussian_matrix(int rows, int cols) {
    Eigen::MatrixXd m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = gaussian();
    return m;
  }

  // Haar-ish orthogonal matrix via QR with sign fix.
  Eigen::MatrixXd orthogonal(int n) {
    Eigen::MatrixXd a = gaussian_matrix(n, n);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    Eigen::MatrixXd q = qr.householderQ();
    Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i)
      if (r(i, i) < 0) q.col(i) *= -1.0;
    return q;
  }

  // Orthonormal k-frame in R^n (first k columns of an orthogonal matrix).
  Eigen::MatrixXd frame(int n, int k) {
    Eigen::MatrixXd a = gaussian_matrix(n, k);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, k);
    return q;
  }

  std::mt19937_64& engine() { return eng_; }

private:
  std::mt19937_64 eng_;
};

// Stable per-case sub-seed so parallel suite execution stays deterministic.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
  std::uint64_t x = base ^ (0x9e3779b97f4a7c15ULL + salt + (base << 6) + (base >> 2));
  x ^= x >> 30; x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27; x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

}  // namespace necklab
