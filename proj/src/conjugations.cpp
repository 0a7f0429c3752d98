#include "qcr/conjugations.hpp"

#include "qcr/models.hpp"

namespace qcr {

namespace {

constexpr const char* kModule = "conjugations";

// Real square root of a non-negative rational when it is rational.
std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  mpz_class num = x.get_num(), den = x.get_den();
  mpz_class rn = sqrt(num), rd = sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

// Unit axis fixed by a rotation by pi, first nonzero coordinate positive.
std::vector<Rational> rotation_axis(const RationalMatrix& r) {
  const RationalMatrix projector = Rational(1) / 2 * (r + RationalMatrix::identity(3));
  std::size_t c = 0;
  while (c < 3 && projector(c, c) == 0) ++c;
  if (c == 3) throw Error("invalid-conjugation", kModule, "sphere map fixes no axis");
  const auto root = rational_sqrt(projector(c, c));
  if (!root) throw Error("irrational-axis", kModule, "fixed axis has no rational unit generator");
  std::vector<Rational> axis(3);
  for (std::size_t r2 = 0; r2 < 3; ++r2) axis[r2] = projector(r2, c) / *root;
  for (const auto& x : axis) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : axis) y = -y;
    break;
  }
  return axis;
}

RationalMatrix combine(const HypercomplexStructure& s, const std::vector<Rational>& axis) {
  return axis[0] * s.i() + axis[1] * s.j() + axis[2] * s.k();
}

bool is_quaternionic_subspace(const Subspace<Rational>& c, const HypercomplexStructure& s) {
  return c.contains(image(s.i(), c)) && c.contains(image(s.j(), c));
}

// Structure induced on the quotient by q (rows spanning the annihilator of an invariant subspace).
HypercomplexStructure quotient_structure(const RationalMatrix& q, const HypercomplexStructure& s) {
  const RationalMatrix right_inverse = q.transpose() * *inverse(q * q.transpose());
  return HypercomplexStructure(q * s.i() * right_inverse, q * s.j() * right_inverse, q * s.k() * right_inverse);
}

}  // namespace

Quaternionification quaternionify(std::size_t n) {
  if (n == 0) throw Error("invalid-input", kModule, "quaternionification needs n >= 1");
  return {n, standard_structure(n)};
}

RationalMatrix quaternionify_map(const RationalMatrix& f) {
  RationalMatrix out(4 * f.rows(), 4 * f.cols());
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c)
      if (f(r, c) != 0)
        for (std::size_t d = 0; d < 4; ++d) out(4 * r + d, 4 * c + d) = f(r, c);
  return out;
}

ConjugationMap tau(const Quaternion& q, std::size_t n) {
  if (!q.is_imaginary() || q.norm2() != 1) throw Error("invalid-input", kModule, "tau needs an imaginary unit quaternion");
  const RationalMatrix block = -(left_mult_matrix(q) * right_mult_matrix(q));
  RationalMatrix map(4 * n, 4 * n);
  for (std::size_t a = 0; a < n; ++a) map.set_block(4 * a, 4 * a, block);
  return {std::move(map), conjugation_rotation(q)};
}

ConjugationMap as_conjugation(const RationalMatrix& m, const HypercomplexStructure& s) {
  const std::size_t n = s.dim();
  if (m.rows() != n || m.cols() != n) throw Error("dimension-mismatch", kModule, "matrix size differs from the space");
  const auto id = RationalMatrix::identity(n);
  if (m * m != id) throw Error("invalid-conjugation", kModule, "not an involution");
  if (m == id) throw Error("invalid-conjugation", kModule, "the identity is not a conjugation");
  const auto r = is_quaternionic_map(m, s, s);
  if (!r) throw Error("invalid-conjugation", kModule, "not a quaternionic map");
  if (*r * *r != RationalMatrix::identity(3) || *r == RationalMatrix::identity(3))
    throw Error("invalid-conjugation", kModule, "sphere map is not a symmetry in a line");
  return {m, *r};
}

bool is_conjugation(const RationalMatrix& m, const HypercomplexStructure& s) {
  try {
    as_conjugation(m, s);
    return true;
  } catch (const Error& e) {
    if (e.name() == "invalid-conjugation") return false;
    throw;
  }
}

RealForm recover_real_form(const HypercomplexStructure& s, const RationalMatrix& t1, const RationalMatrix& t2) {
  const ConjugationMap c1 = as_conjugation(t1, s);
  const ConjugationMap c2 = as_conjugation(t2, s);
  if (t1 == t2) throw Error("invalid-input", kModule, "conjugations must be distinct");
  if (t1 * t2 != t2 * t1) throw Error("invalid-input", kModule, "conjugations must commute");
  const auto a1 = rotation_axis(c1.rotation);
  const auto a2 = rotation_axis(c2.rotation);
  if (a1[0] * a2[0] + a1[1] * a2[1] + a1[2] * a2[2] != 0)
    throw Error("invalid-input", kModule, "fixed lines of the conjugations are not orthogonal");
  const RationalMatrix i1 = combine(s, a1);
  const RationalMatrix j1 = combine(s, a2);
  const RationalMatrix k1 = i1 * j1;

  const std::size_t n = s.dim();
  const auto id = RationalMatrix::identity(n);
  const auto fixed1 = Subspace<Rational>::span(n, kernel(t1 - id));
  const auto fixed2 = Subspace<Rational>::span(n, kernel(t2 - id));
  RealForm out;
  out.u = intersect(fixed1, fixed2);
  const std::size_t d = out.u.dim();
  if (4 * d != n) throw Error("inconsistent-conjugations", kModule, "common fixed space has the wrong dimension");
  out.iso = RationalMatrix(n, n);
  const RationalMatrix basis = out.u.basis().transpose();
  const RationalMatrix images[] = {basis, i1 * basis, j1 * basis, k1 * basis};
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t c = 0; c < 4; ++c)
      for (std::size_t r = 0; r < n; ++r) out.iso(r, 4 * a + c) = images[c](r, a);
  const auto iso_inv = inverse(out.iso);
  if (!iso_inv) throw Error("inconsistent-conjugations", kModule, "U + IU + JU + KU is not direct");
  const auto rotation = is_quaternionic_map(out.iso, quaternionify(d).structure, s);
  if (!rotation) throw Error("internal-error", kModule, "recovered isomorphism is not quaternionic");
  out.rotation = *rotation;
  if (*iso_inv * t1 * out.iso != tau(Quaternion::unit_i(), d).map ||
      *iso_inv * t2 * out.iso != tau(Quaternion::unit_j(), d).map)
    throw Error("inconsistent-conjugations", kModule, "conjugations do not become tau(i), tau(j)");
  return out;
}

Subspace<Rational> graph_subspace(const HypercomplexStructure& s) {
  const std::size_t n = s.dim();
  RationalMatrix rows(n, 4 * n);
  const RationalMatrix* parts[] = {nullptr, &s.i(), &s.j(), &s.k()};
  for (std::size_t e = 0; e < n; ++e) {
    rows(e, 4 * e) = 1;
    for (std::size_t c = 1; c < 4; ++c)
      for (std::size_t a = 0; a < n; ++a) rows(e, 4 * a + c) = -(*parts[c])(a, e);
  }
  return Subspace<Rational>::span(4 * n, rows);
}

Subspace<Rational> cosum_subspace(const Subspace<Rational>& b) {
  if (b.ambient() % 4 != 0) throw Error("dimension-mismatch", kModule, "ambient is not a quaternionification");
  const std::size_t n = b.ambient() / 4;
  Subspace<Rational> out = Subspace<Rational>::zero(b.ambient());
  for (const auto& q : {Quaternion::unit_i(), Quaternion::unit_j(), Quaternion::unit_k()})
    out = sum(out, image(tau(q, n).map, b));
  return out;
}

std::vector<Quaternion> conjugation_sample(std::size_t extra, std::uint64_t seed) {
  std::vector<Quaternion> out = {Quaternion::unit_i(), Quaternion::unit_j(), Quaternion::unit_k()};
  Rng rng(seed);
  for (std::size_t c = 0; c < extra; ++c) out.push_back(random_imaginary_unit(rng));
  return out;
}

std::vector<std::string> graph_decomposition_violations(const HypercomplexStructure& s, std::size_t extra,
                                                        std::uint64_t seed) {
  std::vector<std::string> out;
  const std::size_t n = s.dim();
  const auto b = graph_subspace(s);
  const auto c = cosum_subspace(b);
  const auto q = quaternionify(n).structure;
  if (b.dim() + c.dim() != 4 * n || intersect(b, c).dim() != 0) out.push_back("B + C is not a direct sum");
  if (!is_quaternionic_subspace(b, q)) out.push_back("B is not quaternionic");
  if (!is_quaternionic_subspace(c, q)) out.push_back("C is not quaternionic");
  Subspace<Rational> meet = Subspace<Rational>::whole(4 * n);
  for (const auto& unit : conjugation_sample(extra, seed)) meet = intersect(meet, image(tau(unit, n).map, c));
  if (!(meet == b)) out.push_back("B differs from the intersection of tau(C)");
  return out;
}

Pair cr_from_subspace(const Subspace<Rational>& c, std::size_t extra, std::uint64_t seed) {
  if (c.ambient() % 4 != 0 || c.ambient() == 0)
    throw Error("dimension-mismatch", kModule, "ambient is not a quaternionification");
  const std::size_t n = c.ambient() / 4;
  const auto q = quaternionify(n).structure;
  if (!is_quaternionic_subspace(c, q)) throw Error("not-quaternionic", kModule, "C is not a quaternionic subspace");
  const auto units = conjugation_sample(extra, seed);
  Subspace<Rational> meet = c;
  for (const auto& unit : units) {
    const auto moved = image(tau(unit, n).map, c);
    meet = intersect(meet, moved);
    if (sum(c, moved).dim() != 4 * n)
      throw Error("condition-failed", kModule, "C + tau(C) is not everything", {"(ii2)", to_string(unit)});
  }
  if (meet.dim() != 0) throw Error("condition-failed", kModule, "C meets the intersection of tau(C)", {"(ii1)"});

  const RationalMatrix quotient = quotient_map(c);
  const HypercomplexStructure e = quotient_structure(quotient, q);
  RationalMatrix u_image(n, quotient.rows());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t r = 0; r < quotient.rows(); ++r) u_image(a, r) = quotient(r, 4 * a);
  Pair out(e, Subspace<Rational>::span(quotient.rows(), u_image));
  if (!is_cr_pair(out)) throw Error("certification-failed", kModule, "constructed pair is not CR");
  return out;
}

Subspace<Rational> subspace_from_cr(const Pair& p) {
  if (!is_cr_pair(p)) throw Error("not-cr", kModule, "pair is not CR");
  const auto c_e = cosum_subspace(graph_subspace(p.structure));
  const RationalMatrix inclusion = p.subspace.basis().transpose();
  return preimage(quaternionify_map(inclusion), c_e);
}

Pair cocr_from_subspace(const Subspace<Rational>& b, std::size_t extra, std::uint64_t seed) {
  // The standard structure is its own dual and every tau_q is orthogonal, so
  // the annihilator is taken in the same coordinates.
  const Pair cr = cr_from_subspace(annihilator(b), extra, seed);
  Pair out = dual_pair(cr);
  if (!is_co_cr_pair(out)) throw Error("certification-failed", kModule, "constructed pair is not co-CR");
  return out;
}

}  // namespace qcr
