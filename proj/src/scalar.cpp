#include "qcr/scalar.hpp"

#include <cctype>

#include "qcr/error.hpp"

namespace qcr {

namespace {

bool valid_rational_literal(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
  if (digits == 0) return false;
  if (i == text.size()) return true;
  if (text[i] != '/') return false;
  ++i;
  digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
  return digits > 0 && i == text.size();
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (!valid_rational_literal(text)) throw ParseError("bad rational literal '" + std::string(text) + "'");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw ParseError("bad rational literal '" + s + "'");
  if (sgn(r.get_den()) == 0) throw ParseError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

GaussianRational GaussianRational::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw Error("division-by-zero", "exact-algebra", "inverse of zero Gaussian rational");
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (sgn(o.im_) == 0) {
    if (sgn(o.re_) == 0) throw Error("division-by-zero", "exact-algebra", "division by zero");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string to_string(const GaussianRational& z) {
  std::string out = z.re().get_str();
  if (sgn(z.im()) < 0) {
    out += "-";
    out += Rational(-z.im()).get_str();
  } else {
    out += "+";
    out += z.im().get_str();
  }
  out += "i";
  return out;
}

GaussianRational parse_gaussian(std::string_view text) {
  if (text.empty()) throw ParseError("empty Gaussian rational literal");
  if (text.back() != 'i') return GaussianRational(parse_rational(text));
  std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      split = i;
      break;
    }
  }
  auto imag_part = [](std::string_view s) -> Rational {
    if (s.empty() || s == "+") return Rational(1);
    if (s == "-") return Rational(-1);
    return parse_rational(s);
  };
  if (split == std::string_view::npos) return {Rational(0), imag_part(body)};
  return {parse_rational(body.substr(0, split)), imag_part(body.substr(split))};
}

}  // namespace qcr
