#pragma once

#include <Eigen/Dense>
#include <map>
#include <vector>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace necklab {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Sparse polynomial in n ambient variables x_1..x_n. Exponent vectors are
// dense (length n) since n stays small (<= 8 in practice).
class Polynomial {
public:
  using Expo = std::vector<int>;

  Polynomial() : n_(0) {}
  explicit Polynomial(int n) : n_(n) {}

  static Polynomial constant(int n, double c) {
    Polynomial p(n);
    if (c != 0.0) p.terms_[Expo(n, 0)] = c;
    return p;
  }
  static Polynomial coordinate(int n, int i) {
    Polynomial p(n);
    Expo e(n, 0);
    e[i] = 1;
    p.terms_[e] = 1.0;
    return p;
  }
  static Polynomial monomial(int n, const Expo& e, double c) {
    Polynomial p(n);
    if (c != 0.0) p.terms_[e] = c;
    return p;
  }

  int vars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int k : e) s += k;
      d = std::max(d, s);
    }
    return d;
  }

  Polynomial& operator+=(const Polynomial& o) {
    bind(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    bind(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(double s) {
    if (s == 0.0) { terms_.clear(); return *this; }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, double s) { return a *= s; }
  friend Polynomial operator*(double s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(std::max(a.n_, b.n_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Expo e(r.n_, 0);
        for (int i = 0; i < (int)ea.size(); ++i) e[i] += ea[i];
        for (int i = 0; i < (int)eb.size(); ++i) e[i] += eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  Polynomial derivative(int i) const {
    Polynomial r(n_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Expo d = e;
      d[i] -= 1;
      r.add_term(d, c * e[i]);
    }
    return r;
  }

  double eval(const VectorXd& x) const {
    double s = 0.0;
    for (const auto& [e, c] : terms_) {
      double m = c;
      for (int i = 0; i < n_; ++i)
        for (int k = 0; k < e[i]; ++k) m *= x[i];
      s += m;
    }
    return s;
  }

  // Flat (ambient) Laplacian.
  Polynomial laplacian() const {
    Polynomial r(n_);
    for (int i = 0; i < n_; ++i) r += derivative(i).derivative(i);
    return r;
  }

  const std::map<Expo, double>& terms() const { return terms_; }

  void prune(double tol = 0.0) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (std::abs(it->second) <= tol) it = terms_.erase(it);
      else ++it;
    }
  }

private:
  void bind(const Polynomial& o) {
    if (n_ == 0) n_ = o.n_;
    else if (o.n_ != 0 && o.n_ != n_)
      throw std::invalid_argument("polynomial arity mismatch");
  }
  void add_term(const Expo& e, double c) {
    if (c == 0.0) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0.0) terms_.erase(it);
    }
  }

  int n_;
  std::map<Expo, double> terms_;
};

// Vector of polynomials; used for polynomial maps R^n -> R^n.
struct PolyVec {
  std::vector<Polynomial> comp;

  PolyVec() = default;
  explicit PolyVec(int n) : comp(n, Polynomial(n)) {}
  int vars() const { return (int)comp.size(); }

  VectorXd eval(const VectorXd& x) const {
    VectorXd v(comp.size());
    for (int i = 0; i < (int)comp.size(); ++i) v[i] = comp[i].eval(x);
    return v;
  }
  PolyVec& operator+=(const PolyVec& o) {
    for (int i = 0; i < (int)comp.size(); ++i) comp[i] += o.comp[i];
    return *this;
  }
  PolyVec& operator*=(double s) {
    for (auto& p : comp) p *= s;
    return *this;
  }
  friend PolyVec operator+(PolyVec a, const PolyVec& b) { return a += b; }
  friend PolyVec operator*(PolyVec a, double s) { return a *= s; }
  friend PolyVec operator*(double s, PolyVec a) { return a *= s; }

  // Jacobian evaluated at x: J_ij = d comp_i / d x_j.
  MatrixXd jacobian(const VectorXd& x) const {
    int n = vars();
    MatrixXd J(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) J(i, j) = comp[i].derivative(j).eval(x);
    return J;
  }
};

// Matrix of polynomials; symmetric 2-tensors in ambient form.
struct PolyMat {
  std::vector<std::vector<Polynomial>> comp;

  PolyMat() = default;
  explicit PolyMat(int n) : comp(n, std::vector<Polynomial>(n, Polynomial(n))) {}
  int vars() const { return (int)comp.size(); }

  MatrixXd eval(const VectorXd& x) const {
    int n = vars();
    MatrixXd M(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) M(i, j) = comp[i][j].eval(x);
    return M;
  }
};

}  // namespace necklab
