#include "qcr/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace qcr {

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Nonzero entry of least degree in the trailing block starting at (t, t).
std::optional<Position> min_degree_entry(const Matrix<Polynomial>& a, std::size_t t) {
  std::optional<Position> best;
  int best_degree = 0;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      const Polynomial& p = a(i, j);
      if (p.is_zero()) continue;
      if (!best || p.degree() < best_degree) {
        best = Position{i, j};
        best_degree = p.degree();
        if (best_degree == 0) return best;
      }
    }
  return best;
}

void swap_rows(Matrix<Polynomial>& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(r1, c), a(r2, c));
}

void swap_cols(Matrix<Polynomial>& a, std::size_t c1, std::size_t c2) {
  if (c1 == c2) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, c1), a(r, c2));
}

}  // namespace

std::vector<Polynomial> smith_normal_form(const Matrix<Polynomial>& m) {
  Matrix<Polynomial> a = m;
  std::vector<Polynomial> factors;
  const std::size_t n = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      auto pivot = min_degree_entry(a, t);
      if (!pivot) return factors;
      swap_rows(a, t, pivot->row);
      swap_cols(a, t, pivot->col);

      // Scale the pivot row so the pivot is monic (a unit operation).
      GaussianRational scale = a(t, t).leading().inverse();
      if (!(scale == GaussianRational(1)))
        for (std::size_t j = t; j < a.cols(); ++j)
          if (!a(t, j).is_zero()) a(t, j) *= Polynomial(scale);
      const Polynomial pivot_value = a(t, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t).is_zero()) continue;
        auto [q, r] = a(i, t).divmod(pivot_value);
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (!a(t, j).is_zero()) a(i, j) -= q * a(t, j);
        a(i, t) = r;
        if (!r.is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j).is_zero()) continue;
        auto [q, r] = a(t, j).divmod(pivot_value);
        for (std::size_t i = t + 1; i < a.rows(); ++i)
          if (!a(i, t).is_zero()) a(i, j) -= a(i, t) * q;
        a(t, j) = r;
        if (!r.is_zero()) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < a.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
          if (a(i, j).is_zero() || pivot_value.is_constant()) continue;
          if (!a(i, j).divmod(pivot_value).second.is_zero()) {
            for (std::size_t c = t; c < a.cols(); ++c) a(t, c) += a(i, c);
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    factors.push_back(a(t, t).monic());
  }
  return factors;
}

}  // namespace qcr
