#include "qcr/fstructures.hpp"

namespace qcr {

namespace {

constexpr const char* kModule = "f-structures";

bool is_canonical_sign(const Quaternion& q) {
  for (int c = 0; c < 4; ++c)
    if (q.coeff(c) != 0) return q.coeff(c) > 0;
  return true;
}

}  // namespace

std::vector<std::string> validate_triple(const FQuatTriple& t, std::size_t samples) {
  std::vector<std::string> out;
  const std::size_t n = t.structure.dim();
  if (t.u.ambient() != n || t.v.ambient() != n) {
    out.push_back("ambient-dimension");
    return out;
  }
  if (t.u.dim() + t.v.dim() != n || intersect(t.u, t.v).dim() != 0) out.push_back("direct-sum");
  const char* names[] = {"I(V) in U", "J(V) in U", "K(V) in U"};
  for (int g = 0; g < 3; ++g)
    if (!t.u.contains(image(t.structure.generator(g), t.v))) out.push_back(names[g]);
  if (n > 0) {
    if (!is_cr_pair(Pair(t.structure, t.u), samples)) out.push_back("U is CR");
    if (!is_co_cr_pair(Pair(t.structure, t.v), samples)) out.push_back("V is co-CR");
  }
  return out;
}

Pair cr_side(const FQuatTriple& t, std::size_t samples) {
  const auto violations = validate_triple(t, samples);
  if (!violations.empty()) throw Error("invalid-triple", kModule, "not an f-quaternionic triple", violations);
  return Pair(t.structure, t.u);
}

Pair cocr_side(const FQuatTriple& t, std::size_t samples) {
  const auto violations = validate_triple(t, samples);
  if (!violations.empty()) throw Error("invalid-triple", kModule, "not an f-quaternionic triple", violations);
  return Pair(t.structure, t.v);
}

GroupElement::GroupElement(RationalMatrix a, Quaternion q, Matrix<Quaternion> b)
    : a_(std::move(a)), q_(std::move(q)), b_(std::move(b)) {
  if (a_.rows() != a_.cols() || b_.rows() != b_.cols())
    throw Error("dimension-mismatch", kModule, "group element blocks must be square");
  if (q_.is_zero()) throw Error("invalid-input", kModule, "q must be nonzero");
  if (!inverse(a_)) throw Error("invalid-input", kModule, "A is singular");
  quaternion_matrix_inverse(b_);
  if (!is_canonical_sign(q_)) {
    q_ = Quaternion(-1) * q_;
    b_ = Quaternion(-1) * b_;
  }
}

GroupElement GroupElement::identity(std::size_t l, std::size_t m) {
  return GroupElement(RationalMatrix::identity(l), Quaternion(1), Matrix<Quaternion>::identity(m));
}

bool equivalent(const GroupElement& g, const GroupElement& h) {
  return g.l() == h.l() && g.m() == h.m() && induced_automorphism(g) == induced_automorphism(h);
}

Matrix<Quaternion> quaternion_matrix_inverse(const Matrix<Quaternion>& b) {
  const std::size_t n = b.rows();
  if (b.cols() != n) throw Error("dimension-mismatch", kModule, "inverse of a non-square matrix");
  Matrix<Quaternion> work = b;
  Matrix<Quaternion> inv = Matrix<Quaternion>::identity(n);
  // Gauss-Jordan with row operations acting from the left.
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && work(pivot, c).is_zero()) ++pivot;
    if (pivot == n) throw Error("singular-matrix", kModule, "quaternionic matrix is singular");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(work(c, j), work(pivot, j));
      std::swap(inv(c, j), inv(pivot, j));
    }
    const Quaternion scale = work(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      work(c, j) = scale * work(c, j);
      inv(c, j) = scale * inv(c, j);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || work(r, c).is_zero()) continue;
      const Quaternion factor = work(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        work(r, j) = work(r, j) - factor * work(c, j);
        inv(r, j) = inv(r, j) - factor * inv(c, j);
      }
    }
  }
  return inv;
}

std::vector<Quaternion> group_act(const GroupElement& g, const std::vector<Quaternion>& point) {
  const std::size_t l = g.l(), m = g.m();
  if (point.size() != l + m) throw Error("dimension-mismatch", kModule, "point has the wrong number of coordinates");
  for (std::size_t a = 0; a < l; ++a)
    if (!point[a].is_imaginary()) throw Error("invalid-input", kModule, "X coordinates must be imaginary");
  const Quaternion q_inv = g.q().inverse();
  const Matrix<Quaternion> b_inv = quaternion_matrix_inverse(g.b());
  std::vector<Quaternion> out(l + m);
  for (std::size_t a = 0; a < l; ++a) {
    Quaternion ax;
    for (std::size_t b = 0; b < l; ++b) ax = ax + g.a()(a, b) * point[b];
    out[a] = g.q() * ax * q_inv;
  }
  for (std::size_t c = 0; c < m; ++c) {
    Quaternion y;
    for (std::size_t d = 0; d < m; ++d) y = y + point[l + d] * b_inv(d, c);
    out[l + c] = g.q() * y;
  }
  return out;
}

RationalMatrix induced_automorphism(const GroupElement& g) {
  const RationalMatrix conj = left_mult_matrix(g.q()) * right_mult_matrix(g.q().inverse());
  RationalMatrix x_part(4 * g.l(), 4 * g.l());
  for (std::size_t a = 0; a < g.l(); ++a)
    for (std::size_t b = 0; b < g.l(); ++b) x_part.set_block(4 * a, 4 * b, g.a()(a, b) * conj);
  const RationalMatrix y_part = quaternionic_action_matrix(g.q(), quaternion_matrix_inverse(g.b()));
  return block_diag(x_part, y_part);
}

GroupElement group_compose(const GroupElement& g, const GroupElement& h) {
  if (g.l() != h.l() || g.m() != h.m()) throw Error("dimension-mismatch", kModule, "group elements of different shape");
  return GroupElement(g.a() * h.a(), g.q() * h.q(), g.b() * h.b());
}

RationalMatrix rho(const GroupElement& g) { return conjugation_rotation(g.q()); }

GroupElement random_group_element(std::size_t l, std::size_t m, Rng& rng) {
  for (;;) {
    RationalMatrix a(l, l);
    for (std::size_t r = 0; r < l; ++r)
      for (std::size_t c = 0; c < l; ++c) a(r, c) = Rational(rng.uniform(-3, 3)) / rng.uniform(1, 3);
    Matrix<Quaternion> b(m, m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) b(r, c) = random_quaternion(rng, 3);
    const Quaternion q = rng.coin() ? random_unit_quaternion(rng) : random_quaternion(rng, 3);
    try {
      return GroupElement(a, q, b);
    } catch (const Error&) {
      // singular draw, resample
    }
  }
}

FQuatTriple conformal_3d(const RationalMatrix& gram, const RationalMatrix& frame) {
  if (gram.rows() != 3 || gram.cols() != 3 || frame.rows() != 3 || frame.cols() != 3)
    throw Error("dimension-mismatch", kModule, "conformal_3d needs 3x3 gram and frame matrices");
  if (gram.transpose() != gram) throw Error("invalid-frame", kModule, "inner product is not symmetric");
  const RationalMatrix products = frame.transpose() * gram * frame;
  const Rational c = products(0, 0);
  if (c <= 0 || products != c * RationalMatrix::identity(3))
    throw Error("invalid-frame", kModule, "frame is not conformally orthonormal");
  if (determinant(frame) <= 0) throw Error("wrong-orientation", kModule, "frame is negatively oriented");
  const RationalMatrix p = block_diag(RationalMatrix::identity(1), frame);
  const RationalMatrix p_inv = *inverse(p);
  const auto standard = standard_structure(1);
  HypercomplexStructure s(p * standard.i() * p_inv, p * standard.j() * p_inv, p * standard.k() * p_inv);
  RationalMatrix w(3, 4), r(1, 4);
  for (std::size_t a = 0; a < 3; ++a) w(a, a + 1) = 1;
  r(0, 0) = 1;
  return {std::move(s), Subspace<Rational>::span(4, w), Subspace<Rational>::span(4, r)};
}

}  // namespace qcr
