#include <doctest.h>

#include "necklab/sphere.hpp"
#include "necklab/rotation_family.hpp"

using namespace necklab;

TEST_CASE("sphere volume and exact moments") {
  CHECK(sphere_volume(4) == doctest::Approx(2.0 * M_PI * M_PI).epsilon(1e-14));
  for (int n : {4, 5, 6}) {
    double vol = sphere_volume(n);
    Polynomial one = Polynomial::constant(n, 1.0);
    Polynomial x1 = Polynomial::coordinate(n, 0);
    CHECK(integrate_sphere(one) == doctest::Approx(vol).epsilon(1e-14));
    CHECK(integrate_sphere(x1 * x1) == doctest::Approx(vol / n).epsilon(1e-13));
    CHECK(integrate_sphere(x1 * x1 * x1 * x1) ==
          doctest::Approx(3.0 * vol / (n * (n + 2.0))).epsilon(1e-13));
    // odd moments vanish
    CHECK(integrate_sphere(x1) == 0.0);
    CHECK(integrate_sphere(x1 * x1 * x1) == 0.0);
  }
}

TEST_CASE("monte carlo quadrature agrees with the exact path") {
  int n = 4;
  Polynomial p = Polynomial::coordinate(n, 0) * Polynomial::coordinate(n, 0);
  double exact = integrate_sphere(p);
  auto mc = quadrature(n, [&](const VectorXd& x) { return x[0] * x[0]; }, 99, 200000);
  CHECK(std::abs(mc.value - exact) < 5 * mc.stderr_est + 1e-3);
  CHECK(mc.stderr_est > 0);
}

TEST_CASE("int over S^{n-1} of x_i x_j = delta_ij vol/n") {
  int n = 4;
  double vol = sphere_volume(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double v = integrate_sphere(Polynomial::coordinate(n, i) * Polynomial::coordinate(n, j));
      double want = (i == j) ? vol / n : 0.0;
      CHECK(v == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("harmonic levels: counts, eigenvalues, orthogonality") {
  for (int n : {4, 5}) {
    auto b0 = harmonic_basis(n, 0);
    auto b1 = harmonic_basis(n, 1);
    auto b2 = harmonic_basis(n, 2);
    CHECK((int)b0.size() == 1);
    CHECK((int)b1.size() == n);
    CHECK((int)b2.size() == n * (n + 1) / 2 - 1);
    CHECK(b1[0].eigenvalue == doctest::Approx(n - 1.0));
    CHECK(b2[0].eigenvalue == doctest::Approx(2.0 * n));
    // ambient harmonicity and sphere eigenvalue via exact polynomial calculus
    Rng rng(3);
    for (const auto& h : b2) {
      CHECK(h.poly.laplacian().is_zero());
      Polynomial lap = sphere_laplacian(h.poly);
      Polynomial residual = lap + h.eigenvalue * h.poly;
      for (int s = 0; s < 20; ++s) {
        VectorXd x = rng.sphere_point(n);
        CHECK(std::abs(residual.eval(x)) < 1e-12);
      }
    }
    // pairwise orthogonality across all levels
    std::vector<HarmonicFunction> all;
    for (auto* b : {&b0, &b1, &b2}) all.insert(all.end(), b->begin(), b->end());
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j)
        CHECK(std::abs(sphere_inner(all[i].poly, all[j].poly)) < 1e-12);
  }
}

TEST_CASE("gradient fields: conformal Killing identity and vector Laplacian") {
  for (int n : {4, 5, 6}) {
    Polynomial u = Polynomial::coordinate(n, 0);
    PolyVec grad = sphere_gradient(u);
    // div_S grad u = lap_S u = -(n-1) u
    Polynomial divg = divergence_tangent(grad);
    Polynomial want = -(n - 1.0) * u;
    Rng rng(7);
    for (int s = 0; s < 100; ++s) {
      VectorXd x = rng.sphere_point(n);
      CHECK(std::abs(divg.eval(x) - want.eval(x)) < 1e-12);
      // tangency
      CHECK(std::abs(grad.eval(x).dot(x)) < 1e-12);
    }
    // L_{grad u} g_S = (2/(n-1)) div(grad u) g_S, checked on tangent pairs
    PolyMat lie = lie_derivative_round(grad);
    for (int s = 0; s < 100; ++s) {
      VectorXd x = rng.sphere_point(n);
      MatrixXd L = lie.eval(x);
      double factor = 2.0 / (n - 1.0) * divg.eval(x);
      MatrixXd P = MatrixXd::Identity(n, n) - x * x.transpose();
      MatrixXd diff = P * (L - factor * MatrixXd::Identity(n, n)) * P;
      CHECK(diff.cwiseAbs().maxCoeff() < 1e-12);
    }
    // (lap_S + (n-2)) grad u = (n-3) grad u
    PolyVec lap = sphere_vector_laplacian(grad);
    for (int s = 0; s < 100; ++s) {
      VectorXd x = rng.sphere_point(n);
      VectorXd lhs = lap.eval(x) + (n - 2.0) * grad.eval(x);
      VectorXd rhs = (n - 3.0) * grad.eval(x);
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("rotational fields are Killing and their brackets close") {
  int n = 5;
  RotationFamily fam = RotationFamily::canonical(n);
  Rng rng(11);
  PolyVec v1 = fam.field(0), v2 = fam.field(1);
  PolyMat lie = lie_derivative_round(v1);
  for (int s = 0; s < 50; ++s) {
    VectorXd x = rng.sphere_point(n);
    MatrixXd P = MatrixXd::Identity(n, n) - x * x.transpose();
    CHECK((P * lie.eval(x) * P).cwiseAbs().maxCoeff() < 1e-13);
  }
  // bracket of rotations is the rotation by the matrix commutator
  PolyVec br = lie_bracket(v1, v2);
  Eigen::MatrixXd m = fam.matrix(1) * fam.matrix(0) - fam.matrix(0) * fam.matrix(1);
  for (int s = 0; s < 50; ++s) {
    VectorXd x = rng.sphere_point(n);
    CHECK((br.eval(x) - m * x).cwiseAbs().maxCoeff() < 1e-13);
  }
  // Killing fields solve (lap_S + (n-2)) K = 0
  PolyVec lap = sphere_vector_laplacian(v1);
  for (int s = 0; s < 50; ++s) {
    VectorXd x = rng.sphere_point(n);
    CHECK((lap.eval(x) + (n - 2.0) * v1.eval(x)).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("structure constants: canonical and conjugated (Lemma reconstruction)") {
  for (int n : {4, 5}) {
    RotationFamily fam = RotationFamily::canonical(n);
    CHECK(fam.is_orthonormal());
    auto sc = structure_constants(fam);
    CHECK(sc.reconstruction_residual < 1e-14);
    CHECK(sc.max_abs <= 1.0 + 1e-14);

    // [E_12, E_23] = E_13 exactly
    Eigen::MatrixXd b = fam.matrix(fam.index_of_pair(0, 1)) * fam.matrix(fam.index_of_pair(1, 2)) -
                        fam.matrix(fam.index_of_pair(1, 2)) * fam.matrix(fam.index_of_pair(0, 1));
    CHECK((b - fam.matrix(fam.index_of_pair(0, 2))).norm() == 0.0);

    Rng rng(23 + n);
    int N = fam.size();
    Eigen::MatrixXd omega = rng.orthogonal(N);
    RotationFamily conj = RotationFamily::conjugated(n, omega);
    CHECK(conj.is_orthonormal(1e-12));
    auto sc2 = structure_constants(conj);
    CHECK(sc2.reconstruction_residual < 1e-12);
  }
}

TEST_CASE("standard family Gram normalization on the unit sphere") {
  for (int n : {4, 5}) {
    RotationFamily fam = RotationFamily::canonical(n);
    double c = RotationFamily::standard_scale(n);
    double area = sphere_volume(n);
    double norm = std::pow(area, -(n + 1.0) / (n - 1.0));
    for (int a = 0; a < fam.size(); ++a)
      for (int b = a; b < fam.size(); ++b) {
        PolyVec ua = fam.field(a, c), ub = fam.field(b, c);
        Polynomial dot(n);
        for (int i = 0; i < n; ++i) dot += ua.comp[i] * ub.comp[i];
        double gram = norm * integrate_sphere(dot);
        double want = (a == b) ? 1.0 : 0.0;
        CHECK(gram == doctest::Approx(want).epsilon(1e-12));
      }
  }
}

TEST_CASE("level projection splits a quadratic exactly") {
  int n = 4;
  Polynomial p = Polynomial::constant(n, 2.0) + 3.0 * Polynomial::coordinate(n, 1) +
                 Polynomial::coordinate(n, 0) * Polynomial::coordinate(n, 2);
  auto proj = project_levels(p);
  CHECK(proj.residual_l2 < 1e-12);
  CHECK(proj.coeff_by_level[1][1] == doctest::Approx(3.0).epsilon(1e-12));
}
