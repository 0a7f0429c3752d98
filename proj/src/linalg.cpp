#include "qcr/linalg.hpp"

#include <utility>

namespace qcr {

namespace {

template <class F>
void swap_rows(Matrix<F>& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(r1, c), a(r2, c));
}

// In-place Gauss-Jordan on a; returns the pivot columns. When `limit` is
// given, only columns < limit are used as pivots.
template <class F>
std::vector<std::size_t> gauss_jordan(Matrix<F>& a, std::size_t limit) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    swap_rows(a, r, p);
    F inv = inverse(a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j)
      if (!is_zero(a(r, j))) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      F factor = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!is_zero(a(r, j))) a(i, j) -= factor * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

template <class F>
RrefResult<F> rref(const Matrix<F>& m) {
  Matrix<F> a = m;
  auto pivots = gauss_jordan(a, a.cols());
  RrefResult<F> out;
  out.rank = pivots.size();
  out.basis = a.block(0, 0, out.rank, a.cols());
  out.pivots = std::move(pivots);
  return out;
}

RrefResult<Polynomial> rref(const Matrix<Polynomial>&) {
  throw Error("unsupported-ring", "exact-algebra", "rref requires a field; got a polynomial matrix");
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  // Forward elimination only.
  Matrix<F> a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    swap_rows(a, r, p);
    F inv = inverse(a(r, c));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (is_zero(a(i, c))) continue;
      F factor = a(i, c) * inv;
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!is_zero(a(r, j))) a(i, j) -= factor * a(r, j);
    }
    ++r;
  }
  return r;
}

template <class F>
Matrix<F> kernel(const Matrix<F>& m) {
  auto red = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  Matrix<F> out(n - red.rank, n);
  std::size_t row = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    out(row, f) = F(1);
    for (std::size_t i = 0; i < red.rank; ++i) out(row, red.pivots[i]) = -red.basis(i, f);
    ++row;
  }
  return out;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix<F> a = hstack(m, Matrix<F>::identity(n));
  auto pivots = gauss_jordan(a, n);
  if (pivots.size() != n) return std::nullopt;
  return a.block(0, n, n, n);
}

template <class F>
std::optional<Matrix<F>> solve(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) throw Error("dimension-mismatch", "exact-algebra", "solve: row mismatch");
  Matrix<F> aug = hstack(a, b);
  auto pivots = gauss_jordan(aug, a.cols());
  const std::size_t r = pivots.size();
  for (std::size_t i = r; i < aug.rows(); ++i)
    for (std::size_t j = a.cols(); j < aug.cols(); ++j)
      if (!is_zero(aug(i, j))) return std::nullopt;
  Matrix<F> x(a.cols(), b.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[i], j) = aug(i, a.cols() + j);
  return x;
}

template <class F>
F determinant(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw Error("dimension-mismatch", "exact-algebra", "determinant of non-square matrix");
  Matrix<F> a = m;
  F det(1);
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(a(p, c))) ++p;
    if (p == n) return F(0);
    if (p != c) {
      swap_rows(a, c, p);
      det = -det;
    }
    det *= a(c, c);
    F inv = inverse(a(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(a(i, c))) continue;
      F factor = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= factor * a(c, j);
    }
  }
  return det;
}

Matrix<GaussianRational> complexify(const Matrix<Rational>& m) {
  return m.map([](const Rational& x) { return GaussianRational(x); });
}

#define QCR_INSTANTIATE_FIELD(F)                                             \
  template RrefResult<F> rref<F>(const Matrix<F>&);                          \
  template std::size_t rank<F>(const Matrix<F>&);                            \
  template Matrix<F> kernel<F>(const Matrix<F>&);                            \
  template std::optional<Matrix<F>> inverse<F>(const Matrix<F>&);            \
  template std::optional<Matrix<F>> solve<F>(const Matrix<F>&, const Matrix<F>&); \
  template F determinant<F>(const Matrix<F>&);

QCR_INSTANTIATE_FIELD(Rational)
QCR_INSTANTIATE_FIELD(GaussianRational)

#undef QCR_INSTANTIATE_FIELD

}  // namespace qcr
