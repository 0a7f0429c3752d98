#pragma once

#include <vector>

#include "qcr/linalg.hpp"

namespace qcr {

/// Linear subspace of F^n stored by its canonical RREF basis (rows), so two
/// subspaces are equal iff their bases are identical.
template <class F>
class Subspace {
 public:
  Subspace() = default;

  /// Row span of `rows` inside F^ambient.
  static Subspace span(std::size_t ambient, const Matrix<F>& rows);
  static Subspace zero(std::size_t ambient) { return Subspace(ambient, Matrix<F>(0, ambient)); }
  static Subspace whole(std::size_t ambient) { return Subspace(ambient, Matrix<F>::identity(ambient)); }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<F>& basis() const { return basis_; }

  bool contains(const std::vector<F>& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(std::size_t ambient, Matrix<F> basis) : ambient_(ambient), basis_(std::move(basis)) {}

  std::size_t ambient_ = 0;
  Matrix<F> basis_;
};

template <class F>
Subspace<F> sum(const Subspace<F>& a, const Subspace<F>& b);
template <class F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b);
/// Annihilator in the dual space, coordinates w.r.t. the dual basis
/// (bilinear pairing, no conjugation).
template <class F>
Subspace<F> annihilator(const Subspace<F>& a);
/// Surjection F^n -> F^(n - dim a) with kernel exactly a (rows of the
/// canonical annihilator basis).
template <class F>
Matrix<F> quotient_map(const Subspace<F>& a);
/// {m x : x in a}.
template <class F>
Subspace<F> image(const Matrix<F>& m, const Subspace<F>& a);
/// {x : m x in a}.
template <class F>
Subspace<F> preimage(const Matrix<F>& m, const Subspace<F>& a);

Subspace<GaussianRational> complexify(const Subspace<Rational>& a);

}  // namespace qcr
