#pragma once

#include <string>
#include <string_view>

#include "qcr/scalar.hpp"

namespace qcr {

/// w + x i + y j + z k with rational coefficients.
class Quaternion {
 public:
  Quaternion() = default;
  Quaternion(long w) : w_(w) {}  // NOLINT(implicit)
  Quaternion(Rational w, Rational x, Rational y, Rational z)
      : w_(std::move(w)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}

  static Quaternion unit_i() { return {0, 1, 0, 0}; }
  static Quaternion unit_j() { return {0, 0, 1, 0}; }
  static Quaternion unit_k() { return {0, 0, 0, 1}; }
  /// Basis element 0..3 of (1, i, j, k).
  static Quaternion basis(int index);

  const Rational& w() const { return w_; }
  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  const Rational& z() const { return z_; }
  const Rational& coeff(int index) const;

  bool is_zero() const;
  bool is_imaginary() const { return sgn(w_) == 0; }
  Quaternion conj() const { return {w_, -x_, -y_, -z_}; }
  /// Squared norm w^2 + x^2 + y^2 + z^2 (multiplicative).
  Rational norm2() const { return w_ * w_ + x_ * x_ + y_ * y_ + z_ * z_; }
  Quaternion inverse() const;

  Quaternion operator-() const { return {-w_, -x_, -y_, -z_}; }
  Quaternion& operator+=(const Quaternion& o);
  Quaternion& operator-=(const Quaternion& o);
  Quaternion& operator*=(const Quaternion& o);

  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator*(const Rational& s, const Quaternion& q) {
    return {s * q.w_, s * q.x_, s * q.y_, s * q.z_};
  }
  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w_ == b.w_ && a.x_ == b.x_ && a.y_ == b.y_ && a.z_ == b.z_;
  }

 private:
  Rational w_{0}, x_{0}, y_{0}, z_{0};
};

inline bool is_zero(const Quaternion& q) { return q.is_zero(); }

/// "w,x,y,z".
std::string to_string(const Quaternion& q);
Quaternion parse_quaternion(std::string_view text);

}  // namespace qcr
