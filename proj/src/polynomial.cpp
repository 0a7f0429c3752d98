#include "qcr/polynomial.hpp"

#include "qcr/error.hpp"

namespace qcr {

Polynomial::Polynomial(GaussianRational c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

Polynomial::Polynomial(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussianRational Polynomial::coeff(int power) const {
  if (power < 0 || power > degree()) return GaussianRational(0);
  return coeffs_[static_cast<std::size_t>(power)];
}

GaussianRational Polynomial::eval(const GaussianRational& at) const {
  GaussianRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  GaussianRational inv = leading().inverse();
  std::vector<GaussianRational> c = coeffs_;
  for (auto& x : c) x *= inv;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& x : p.coeffs_) x = -x;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw Error("division-by-zero", "exact-algebra", "polynomial division by zero");
  if (degree() < divisor.degree()) return {Polynomial(), *this};
  std::vector<GaussianRational> rem = coeffs_;
  std::vector<GaussianRational> quot(coeffs_.size() - divisor.coeffs_.size() + 1);
  GaussianRational lead_inv = divisor.leading().inverse();
  const std::size_t dd = divisor.coeffs_.size() - 1;
  for (std::size_t pos = rem.size(); pos-- > dd;) {
    if (rem[pos].is_zero()) continue;
    GaussianRational q = rem[pos] * lead_inv;
    std::size_t shift = pos - dd;
    for (std::size_t j = 0; j <= dd; ++j) rem[shift + j] -= q * divisor.coeffs_[j];
    quot[shift] = std::move(q);
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {

std::string coeff_text(const GaussianRational& c) {
  if (c.is_real()) return c.re().get_str();
  if (sgn(c.re()) == 0) {
    if (c.im() == 1) return "i";
    if (c.im() == -1) return "-i";
    return c.im().get_str() + "i";
  }
  return "(" + to_string(c) + ")";
}

}  // namespace

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int d = p.degree(); d >= 0; --d) {
    const GaussianRational& c = p.coeffs()[static_cast<std::size_t>(d)];
    if (c.is_zero()) continue;
    std::string term;
    bool unit = c == GaussianRational(1);
    bool minus_unit = c == GaussianRational(-1);
    if (d == 0) {
      term = coeff_text(c);
    } else {
      if (minus_unit) term = "-";
      else if (!unit) term = coeff_text(c) + "*";
      term += d == 1 ? "zeta" : "zeta^" + std::to_string(d);
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

}  // namespace qcr
