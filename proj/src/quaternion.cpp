#include "qcr/quaternion.hpp"

#include <sstream>
#include <vector>

#include "qcr/error.hpp"

namespace qcr {

Quaternion Quaternion::basis(int index) {
  switch (index) {
    case 0: return {1, 0, 0, 0};
    case 1: return unit_i();
    case 2: return unit_j();
    case 3: return unit_k();
    default: throw Error("invalid-input", "exact-algebra", "quaternion basis index out of range");
  }
}

const Rational& Quaternion::coeff(int index) const {
  switch (index) {
    case 0: return w_;
    case 1: return x_;
    case 2: return y_;
    case 3: return z_;
    default: throw Error("invalid-input", "exact-algebra", "quaternion coefficient index out of range");
  }
}

bool Quaternion::is_zero() const { return sgn(w_) == 0 && sgn(x_) == 0 && sgn(y_) == 0 && sgn(z_) == 0; }

Quaternion Quaternion::inverse() const {
  Rational n = norm2();
  if (sgn(n) == 0) throw Error("division-by-zero", "exact-algebra", "inverse of zero quaternion");
  Rational s = 1 / n;
  return s * conj();
}

Quaternion& Quaternion::operator+=(const Quaternion& o) {
  w_ += o.w_;
  x_ += o.x_;
  y_ += o.y_;
  z_ += o.z_;
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
  w_ -= o.w_;
  x_ -= o.x_;
  y_ -= o.y_;
  z_ -= o.z_;
  return *this;
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w_ * b.w_ - a.x_ * b.x_ - a.y_ * b.y_ - a.z_ * b.z_,
          a.w_ * b.x_ + a.x_ * b.w_ + a.y_ * b.z_ - a.z_ * b.y_,
          a.w_ * b.y_ - a.x_ * b.z_ + a.y_ * b.w_ + a.z_ * b.x_,
          a.w_ * b.z_ + a.x_ * b.y_ - a.y_ * b.x_ + a.z_ * b.w_};
}

Quaternion& Quaternion::operator*=(const Quaternion& o) { return *this = *this * o; }

std::string to_string(const Quaternion& q) {
  return q.w().get_str() + "," + q.x().get_str() + "," + q.y().get_str() + "," + q.z().get_str();
}

Quaternion parse_quaternion(std::string_view text) {
  std::vector<Rational> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    parts.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 4) throw ParseError("quaternion literal needs four components: '" + std::string(text) + "'");
  return {parts[0], parts[1], parts[2], parts[3]};
}

}  // namespace qcr
