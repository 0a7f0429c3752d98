#include "qcr/quaternionic.hpp"

#include <numeric>
#include <set>
#include <tuple>

#include "qcr/subspace.hpp"

namespace qcr {

namespace {

constexpr const char* kModule = "quaternion-structures";

bool is_neg_identity(const RationalMatrix& m) { return m == -RationalMatrix::identity(m.rows()); }

}  // namespace

std::vector<std::string> structure_violations(const RationalMatrix& i, const RationalMatrix& j,
                                              const RationalMatrix& k) {
  std::vector<std::string> bad;
  const std::size_t n = i.rows();
  for (const auto* m : {&i, &j, &k})
    if (m->rows() != n || m->cols() != n) {
      bad.emplace_back("square matrices of equal size");
      return bad;
    }
  if (n % 4 != 0) bad.emplace_back("dimension divisible by 4");
  if (!is_neg_identity(i * i)) bad.emplace_back("I^2 = -Id");
  if (!is_neg_identity(j * j)) bad.emplace_back("J^2 = -Id");
  if (!is_neg_identity(k * k)) bad.emplace_back("K^2 = -Id");
  const RationalMatrix ij = i * j;
  if (!(ij == k)) bad.emplace_back("IJ = K");
  if (!(j * k == i)) bad.emplace_back("JK = I");
  if (!(k * i == j)) bad.emplace_back("KI = J");
  if (!(j * i == -ij)) bad.emplace_back("IJ = -JI");
  return bad;
}

HypercomplexStructure::HypercomplexStructure(RationalMatrix i, RationalMatrix j, RationalMatrix k)
    : i_(std::move(i)), j_(std::move(j)), k_(std::move(k)) {
  auto bad = structure_violations(i_, j_, k_);
  if (!bad.empty()) {
    std::string msg = "not a hypercomplex structure:";
    for (const auto& b : bad) msg += " [" + b + "]";
    throw Error("invalid-structure", kModule, msg, bad);
  }
}

const RationalMatrix& HypercomplexStructure::generator(int index) const {
  switch (index) {
    case 0: return i_;
    case 1: return j_;
    case 2: return k_;
    default: throw Error("invalid-input", kModule, "generator index out of range");
  }
}

AdmissiblePoint chart_to_sphere(const SphereChart& z) {
  if (z.at_infinity()) return {Rational(-1), Rational(0), Rational(0)};
  const GaussianRational& zeta = *z.zeta;
  Rational n = zeta.norm();
  Rational d = 1 + n;
  return {(1 - n) / d, 2 * zeta.re() / d, 2 * zeta.im() / d};
}

SphereChart sphere_to_chart(const AdmissiblePoint& p) {
  if (!p.on_sphere()) throw Error("invalid-input", kModule, "point is not on the unit sphere");
  if (p.a == -1) return SphereChart::infinity();
  Rational d = 1 + p.a;
  return SphereChart::at(GaussianRational(p.b / d, p.c / d));
}

std::vector<SphereChart> sphere_samples(std::size_t count) {
  std::vector<SphereChart> out;
  if (count == 0) return out;
  out.push_back(SphereChart::infinity());
  std::set<std::pair<std::string, std::string>> seen;
  auto push = [&](Rational re, Rational im) {
    if (out.size() >= count) return;
    if (seen.insert({re.get_str(), im.get_str()}).second)
      out.push_back(SphereChart::at(GaussianRational(std::move(re), std::move(im))));
  };
  push(0, 0);
  push(1, 0);
  push(0, 1);
  // Enumerate (a + b i) / c by height |a| + |b| + c.
  for (long h = 2; out.size() < count; ++h)
    for (long c = 1; c <= h && out.size() < count; ++c)
      for (long a = -(h - c); a <= h - c && out.size() < count; ++a) {
        long rest = h - c - std::labs(a);
        for (long b : {rest, -rest}) {
          push(Rational(a) / c, Rational(b) / c);
          if (rest == 0) break;
        }
      }
  return out;
}

RationalMatrix left_mult_matrix(const Quaternion& q) {
  RationalMatrix m(4, 4);
  for (int c = 0; c < 4; ++c) {
    Quaternion img = q * Quaternion::basis(c);
    for (int r = 0; r < 4; ++r) m(r, c) = img.coeff(r);
  }
  return m;
}

RationalMatrix right_mult_matrix(const Quaternion& q) {
  RationalMatrix m(4, 4);
  for (int c = 0; c < 4; ++c) {
    Quaternion img = Quaternion::basis(c) * q;
    for (int r = 0; r < 4; ++r) m(r, c) = img.coeff(r);
  }
  return m;
}

RationalMatrix conjugation_rotation(const Quaternion& q) {
  const Quaternion inv = q.inverse();
  RationalMatrix m(3, 3);
  for (int c = 0; c < 3; ++c) {
    Quaternion img = q * Quaternion::basis(c + 1) * inv;
    for (int r = 0; r < 3; ++r) m(r, c) = img.coeff(r + 1);
  }
  return m;
}

RationalMatrix quaternionic_action_matrix(const Quaternion& a, const Matrix<Quaternion>& b) {
  const std::size_t k = b.rows();
  if (b.cols() != k) throw Error("dimension-mismatch", kModule, "quaternionic matrix must be square");
  const RationalMatrix la = left_mult_matrix(a);
  RationalMatrix m(4 * k, 4 * k);
  // (a x B)_j = sum_c a x_c B_{cj}
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t c = 0; c < k; ++c)
      if (!b(c, j).is_zero()) m.set_block(4 * j, 4 * c, la * right_mult_matrix(b(c, j)));
  return m;
}

HypercomplexStructure standard_structure(std::size_t k) {
  if (k == 0) throw Error("invalid-input", kModule, "standard_structure requires k >= 1");
  RationalMatrix i(4 * k, 4 * k), j(4 * k, 4 * k), kk(4 * k, 4 * k);
  const RationalMatrix li = left_mult_matrix(Quaternion::unit_i());
  const RationalMatrix lj = left_mult_matrix(Quaternion::unit_j());
  const RationalMatrix lk = left_mult_matrix(Quaternion::unit_k());
  for (std::size_t c = 0; c < k; ++c) {
    i.set_block(4 * c, 4 * c, li);
    j.set_block(4 * c, 4 * c, lj);
    kk.set_block(4 * c, 4 * c, lk);
  }
  return {std::move(i), std::move(j), std::move(kk)};
}

RationalMatrix admissible_operator(const HypercomplexStructure& s, const AdmissiblePoint& p) {
  if (!p.on_sphere()) throw Error("invalid-input", kModule, "admissible point must satisfy a^2 + b^2 + c^2 = 1");
  return p.a * s.i() + p.b * s.j() + p.c * s.k();
}

RationalMatrix admissible_operator(const HypercomplexStructure& s, const SphereChart& z) {
  return admissible_operator(s, chart_to_sphere(z));
}

HypercomplexStructure dual_structure(const HypercomplexStructure& s) {
  return {-s.i().transpose(), -s.j().transpose(), -s.k().transpose()};
}

HypercomplexStructure direct_sum(const HypercomplexStructure& a, const HypercomplexStructure& b) {
  return {block_diag(a.i(), b.i()), block_diag(a.j(), b.j()), block_diag(a.k(), b.k())};
}

bool is_rotation(const RationalMatrix& r) {
  if (r.rows() != 3 || r.cols() != 3) return false;
  if (!(r.transpose() * r == RationalMatrix::identity(3))) return false;
  return determinant(r) == 1;
}

HypercomplexStructure rotate_representative(const HypercomplexStructure& s, const RationalMatrix& rotation) {
  if (!is_rotation(rotation)) throw Error("invalid-input", kModule, "representative rotation must lie in SO(3)");
  auto column_operator = [&](std::size_t c) {
    return rotation(0, c) * s.i() + rotation(1, c) * s.j() + rotation(2, c) * s.k();
  };
  return {column_operator(0), column_operator(1), column_operator(2)};
}

HypercomplexStructure transport(const HypercomplexStructure& s, const RationalMatrix& phi) {
  auto inv = inverse(phi);
  if (!inv) throw Error("invalid-input", kModule, "transport along a singular map");
  return {phi * s.i() * *inv, phi * s.j() * *inv, phi * s.k() * *inv};
}

std::optional<RationalMatrix> is_quaternionic_map(const RationalMatrix& t, const HypercomplexStructure& from,
                                                  const HypercomplexStructure& to) {
  if (t.cols() != from.dim() || t.rows() != to.dim())
    throw Error("dimension-mismatch", kModule, "map dimensions do not match the structures");
  if (t.is_zero()) return RationalMatrix::identity(3);
  const std::size_t entries = t.rows() * t.cols();
  // Columns vec(I' t), vec(J' t), vec(K' t); the coefficient vector for
  // generator g is column g of the rotation.
  RationalMatrix system(entries, 3);
  for (int g = 0; g < 3; ++g) {
    RationalMatrix img = to.generator(g) * t;
    for (std::size_t r = 0; r < t.rows(); ++r)
      for (std::size_t c = 0; c < t.cols(); ++c) system(r * t.cols() + c, static_cast<std::size_t>(g)) = img(r, c);
  }
  RationalMatrix rhs(entries, 3);
  for (int g = 0; g < 3; ++g) {
    RationalMatrix img = t * from.generator(g);
    for (std::size_t r = 0; r < t.rows(); ++r)
      for (std::size_t c = 0; c < t.cols(); ++c) rhs(r * t.cols() + c, static_cast<std::size_t>(g)) = img(r, c);
  }
  auto sol = solve(system, rhs);
  if (!sol) return std::nullopt;
  if (!(system * *sol == rhs)) return std::nullopt;
  if (!is_rotation(*sol)) return std::nullopt;
  return sol;
}

QuaternionicMap standardize(const HypercomplexStructure& s) {
  const std::size_t n = s.dim();
  RationalMatrix basis(n, 0);
  auto span = Subspace<Rational>::zero(n);
  for (std::size_t e = 0; e < n && span.dim() < n; ++e) {
    std::vector<Rational> v(n, Rational(0));
    v[e] = 1;
    if (span.contains(v)) continue;
    RationalMatrix col(n, 1);
    col(e, 0) = 1;
    RationalMatrix block = hstack(hstack(col, s.i() * col), hstack(s.j() * col, s.k() * col));
    basis = hstack(basis, block);
    span = Subspace<Rational>::span(n, basis.transpose());
  }
  auto inv = inverse(basis);
  if (!inv || basis.cols() != n) throw Error("internal-error", kModule, "quaternionic spans failed to form a basis");
  return {*inv, RationalMatrix::identity(3)};
}

Quaternion random_quaternion(Rng& rng, long bound) {
  return {Rational(rng.uniform(-bound, bound)), Rational(rng.uniform(-bound, bound)),
          Rational(rng.uniform(-bound, bound)), Rational(rng.uniform(-bound, bound))};
}

Quaternion random_unit_quaternion(Rng& rng) {
  Quaternion q;
  do q = random_quaternion(rng, 3);
  while (q.is_zero());
  Rational n = q.norm2();
  return (1 / n) * (q * q);
}

RationalMatrix random_rotation(Rng& rng) {
  Quaternion q;
  do q = random_quaternion(rng, 3);
  while (q.is_zero());
  return conjugation_rotation(q);
}

Quaternion random_imaginary_unit(Rng& rng) {
  Quaternion q;
  do q = random_quaternion(rng, 3);
  while (q.is_zero());
  return q * Quaternion::unit_i() * q.inverse();
}

RationalMatrix random_invertible(Rng& rng, std::size_t n) {
  while (true) {
    RationalMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = Rational(rng.uniform(-3, 3));
    if (inverse(m)) return m;
  }
}

namespace {

QuaternionicMap automorphism_from(const HypercomplexStructure& s, const Quaternion& a, Rng& rng) {
  const std::size_t k = s.quaternionic_dim();
  const QuaternionicMap to_std = standardize(s);
  const RationalMatrix from_std = *inverse(to_std.map);
  while (true) {
    Matrix<Quaternion> b(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) b(r, c) = random_quaternion(rng, 2);
    RationalMatrix act = quaternionic_action_matrix(a, b);
    if (!inverse(act)) continue;
    return {from_std * act * to_std.map, conjugation_rotation(a)};
  }
}

}  // namespace

QuaternionicMap random_automorphism(const HypercomplexStructure& s, Rng& rng) {
  Quaternion a = random_unit_quaternion(rng);
  return automorphism_from(s, a, rng);
}

QuaternionicMap random_automorphism(const HypercomplexStructure& s, std::uint64_t seed) {
  Rng rng(seed);
  return random_automorphism(s, rng);
}

QuaternionicMap random_hypercomplex_automorphism(const HypercomplexStructure& s, Rng& rng) {
  return automorphism_from(s, Quaternion(1), rng);
}

}  // namespace qcr
