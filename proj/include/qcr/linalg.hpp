#pragma once

#include <optional>
#include <vector>

#include "qcr/matrix.hpp"
#include "qcr/polynomial.hpp"
#include "qcr/scalar.hpp"

namespace qcr {

template <class F>
struct RrefResult {
  std::size_t rank = 0;
  /// Nonzero rows of the reduced row-echelon form; spans the row space.
  Matrix<F> basis;
  std::vector<std::size_t> pivots;
};

// The field routines below are instantiated for Rational and
// GaussianRational only. The Polynomial overload of rref exists so that
// callers get a named error instead of a compile failure.

template <class F>
RrefResult<F> rref(const Matrix<F>& m);
RrefResult<Polynomial> rref(const Matrix<Polynomial>& m);

template <class F>
std::size_t rank(const Matrix<F>& m);

/// Basis of {x : m x = 0}, one vector per row.
template <class F>
Matrix<F> kernel(const Matrix<F>& m);

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m);

/// Some X with a X = b, or nullopt when inconsistent.
template <class F>
std::optional<Matrix<F>> solve(const Matrix<F>& a, const Matrix<F>& b);

template <class F>
F determinant(const Matrix<F>& m);

Matrix<GaussianRational> complexify(const Matrix<Rational>& m);

}  // namespace qcr
