#include "qcr/subspace.hpp"

namespace qcr {

template <class F>
Subspace<F> Subspace<F>::span(std::size_t ambient, const Matrix<F>& rows) {
  if (rows.rows() == 0) return zero(ambient);
  if (rows.cols() != ambient) throw Error("ambient-mismatch", "exact-algebra", "spanning vectors have wrong length");
  return Subspace(ambient, rref(rows).basis);
}

template <class F>
bool Subspace<F>::contains(const std::vector<F>& v) const {
  if (v.size() != ambient_) throw Error("ambient-mismatch", "exact-algebra", "vector has wrong length");
  return rank(vstack(basis_, row_matrix(v))) == dim();
}

template <class F>
bool Subspace<F>::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error("ambient-mismatch", "exact-algebra", "subspaces live in different spaces");
  if (other.dim() == 0) return true;
  return rank(vstack(basis_, other.basis_)) == dim();
}

template <class F>
Subspace<F> sum(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient() != b.ambient()) throw Error("ambient-mismatch", "exact-algebra", "sum of subspaces of different spaces");
  return Subspace<F>::span(a.ambient(), vstack(a.basis(), b.basis()));
}

template <class F>
Subspace<F> annihilator(const Subspace<F>& a) {
  if (a.dim() == 0) return Subspace<F>::whole(a.ambient());
  return Subspace<F>::span(a.ambient(), kernel(a.basis()));
}

template <class F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient() != b.ambient())
    throw Error("ambient-mismatch", "exact-algebra", "intersection of subspaces of different spaces");
  return annihilator(sum(annihilator(a), annihilator(b)));
}

template <class F>
Matrix<F> quotient_map(const Subspace<F>& a) {
  const auto ann = annihilator(a);
  if (ann.dim() == 0) return Matrix<F>(0, a.ambient());
  return ann.basis();
}

template <class F>
Subspace<F> image(const Matrix<F>& m, const Subspace<F>& a) {
  if (m.cols() != a.ambient()) throw Error("ambient-mismatch", "exact-algebra", "image: map/domain mismatch");
  if (a.dim() == 0) return Subspace<F>::zero(m.rows());
  return Subspace<F>::span(m.rows(), a.basis() * m.transpose());
}

template <class F>
Subspace<F> preimage(const Matrix<F>& m, const Subspace<F>& a) {
  if (m.rows() != a.ambient()) throw Error("ambient-mismatch", "exact-algebra", "preimage: map/codomain mismatch");
  const Matrix<F> q = quotient_map(a);
  if (q.rows() == 0) return Subspace<F>::whole(m.cols());
  const Matrix<F> ker = kernel(q * m);
  return Subspace<F>::span(m.cols(), ker);
}

Subspace<GaussianRational> complexify(const Subspace<Rational>& a) {
  return Subspace<GaussianRational>::span(a.ambient(), complexify(a.basis()));
}

#define QCR_INSTANTIATE_SUBSPACE(F)                                      \
  template class Subspace<F>;                                            \
  template Subspace<F> sum<F>(const Subspace<F>&, const Subspace<F>&);   \
  template Subspace<F> intersect<F>(const Subspace<F>&, const Subspace<F>&); \
  template Subspace<F> annihilator<F>(const Subspace<F>&);               \
  template Matrix<F> quotient_map<F>(const Subspace<F>&);                \
  template Subspace<F> image<F>(const Matrix<F>&, const Subspace<F>&);   \
  template Subspace<F> preimage<F>(const Matrix<F>&, const Subspace<F>&);

QCR_INSTANTIATE_SUBSPACE(Rational)
QCR_INSTANTIATE_SUBSPACE(GaussianRational)

#undef QCR_INSTANTIATE_SUBSPACE

}  // namespace qcr
