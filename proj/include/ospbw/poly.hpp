#pragma once

#include <stdexcept>
#include <vector>

#include "ospbw/rational.hpp"

namespace ospbw {

/// Polynomial in the loop parameter t with exact rational coefficients.
/// Canonical form: no trailing zero coefficients; zero is the empty vector.
class PolyT {
 public:
  PolyT() = default;
  explicit PolyT(Rational constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
  }
  explicit PolyT(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }

  static PolyT zero() { return PolyT{}; }
  static PolyT one() { return PolyT{Rational(1)}; }

  /// t^k
  static PolyT t_power(int k) {
    std::vector<Rational> c(static_cast<size_t>(k) + 1);
    c.back() = 1;
    return PolyT{std::move(c)};
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[i];
  }

  PolyT& operator+=(const PolyT& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }
  PolyT& operator-=(const PolyT& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
  }
  friend PolyT operator+(PolyT a, const PolyT& b) { return a += b; }
  friend PolyT operator-(PolyT a, const PolyT& b) { return a -= b; }
  friend PolyT operator-(const PolyT& a) {
    PolyT r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend PolyT operator*(const PolyT& a, const PolyT& b) {
    if (a.is_zero() || b.is_zero()) return PolyT{};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j)
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return PolyT{std::move(c)};
  }

  PolyT& operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    normalize();
    return *this;
  }
  friend PolyT operator*(PolyT a, const Rational& s) { return a *= s; }
  friend PolyT operator*(const Rational& s, PolyT a) { return a *= s; }

  PolyT& operator/=(const Rational& s) {
    if (s == 0) throw std::invalid_argument("PolyT: division by zero");
    for (auto& c : coeffs_) c /= s;
    return *this;
  }

  Rational eval(const Rational& t) const {
    Rational r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * t + *it;
    return r;
  }

  bool operator==(const PolyT& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const PolyT& o) const { return !(*this == o); }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

}  // namespace ospbw
