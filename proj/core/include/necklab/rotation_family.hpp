#pragma once

#include "necklab/sphere.hpp"

#include <Eigen/Dense>

namespace necklab {

// Families of rotational vector fields x -> M x for M in so(n), together
// with the Lie-algebra bookkeeping: orthonormal bases under
// <M, M'> = tr(M^t M') / 2, structure constants reconstructing each basis
// element from brackets, and the area-normalized Gram convention that makes
// the standard family orthonormal on every shrinking-cylinder slice.
class RotationFamily {
public:
  // Canonical basis E_{ij}, i < j, in lexicographic order.
  static RotationFamily canonical(int n);
  // Basis conjugated by omega in O(N), sigma^(a) = sum_b omega_ab E^(b).
  static RotationFamily conjugated(int n, const Eigen::MatrixXd& omega);

  int n() const { return n_; }
  int size() const { return (int)basis_.size(); }  // n(n-1)/2
  const Eigen::MatrixXd& matrix(int a) const { return basis_[a]; }

  // <M,M'> = tr(M^t M')/2; the canonical E_{ij} are orthonormal.
  double inner(int a, int b) const;
  bool is_orthonormal(double tol = 1e-12) const;

  // Scale c making U^(a) = c * M^(a) x satisfy
  // area(S^{n-1})^{-(n+1)/(n-1)} \int <U^a, U^b> = delta_ab on the unit
  // sphere (and, by scale invariance, on every cylinder slice).
  static double standard_scale(int n);

  PolyVec field(int a, double scale = 1.0) const;

  int index_of_pair(int i, int j) const;  // a for E_{ij}, i < j

private:
  RotationFamily(int n, std::vector<Eigen::MatrixXd> basis)
      : n_(n), basis_(std::move(basis)) {}
  int n_;
  std::vector<Eigen::MatrixXd> basis_;
};

struct StructureConstants {
  // k[a](b,c) with sigma^a = sum_{b,c} k[a](b,c) [sigma^b, sigma^c]
  std::vector<Eigen::MatrixXd> k;
  double max_abs = 0;
  double reconstruction_residual = 0;  // max Frobenius error over a
};

// For the canonical ordering |k| <= 1; for a conjugated basis the constants
// come from the triple-omega contraction of the canonical ones.
StructureConstants structure_constants(const RotationFamily& family);

}  // namespace necklab
