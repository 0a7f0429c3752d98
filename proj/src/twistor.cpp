#include "qcr/twistor.hpp"

#include <algorithm>
#include <numeric>

#include "qcr/smith.hpp"

namespace qcr {

namespace {

constexpr const char* kModule = "twistor-pencil";

Matrix<Polynomial> pencil_matrix(const ComplexMatrix& constant, const ComplexMatrix& linear) {
  Matrix<Polynomial> m(constant.rows(), constant.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = Polynomial::linear(constant(r, c), linear(r, c));
  return m;
}

// Multiset of minimal indices from the stable increment sequence.
std::vector<int> minimal_indices(const std::vector<std::size_t>& increments) {
  std::vector<int> out;
  std::size_t previous = 0;
  for (std::size_t j = 0; j < increments.size(); ++j) {
    if (increments[j] < previous)
      throw Error("internal-error", kModule, "kernel dimension sequence is not consistent with any splitting");
    for (std::size_t c = previous; c < increments[j]; ++c) out.push_back(static_cast<int>(j));
    previous = increments[j];
  }
  return out;
}

int valuation_at_zero(const Polynomial& p) {
  int v = 0;
  while (v <= p.degree() && p.coeff(v).is_zero()) ++v;
  return v;
}

struct Analysis {
  SheafPencil pencil;
  PencilIndices indices;
  bool cr = false;
  bool co_cr = false;
};

// rank N(zeta) and the direct definition are tied by
//   dim(U + JU) = 2 dim U - 4k + 2 rank N(zeta)
// (U cap JU is isomorphic, as a complex space, to U^C cap E^{0,1}).
void cross_check(const Pair& p, const Analysis& a, std::size_t samples) {
  const RationalMatrix& u = p.subspace.basis();
  const long du = static_cast<long>(p.subspace.dim());
  const long dim = static_cast<long>(p.dim());
  for (const auto& z : sphere_samples(samples)) {
    const std::size_t fibre_rank = rank(a.pencil.at(z));
    if (fibre_rank > a.indices.generic_rank || (a.indices.constant_rank() && fibre_rank != a.indices.generic_rank))
      throw Error("internal-error", kModule, "fibre rank contradicts the pencil invariants");
    long span_dim = du;
    if (du > 0) {
      const RationalMatrix jop = admissible_operator(p.structure, z);
      span_dim = static_cast<long>(rank(vstack(u, u * jop.transpose())));
    }
    if (span_dim != 2 * du - dim + 2 * static_cast<long>(fibre_rank))
      throw Error("internal-error", kModule, "sheaf pencil disagrees with the direct definition at a sample point");
    if (a.cr && span_dim != dim) throw Error("internal-error", kModule, "CR decision contradicted at a sample point");
    if (a.co_cr && span_dim != 2 * du)
      throw Error("internal-error", kModule, "co-CR decision contradicted at a sample point");
  }
}

Analysis analyze(const Pair& p, std::size_t samples) {
  Analysis a;
  a.pencil = sheaf_pencil(p);
  a.indices = pencil_indices(a.pencil);
  const bool steady = a.indices.constant_rank();
  a.cr = steady && a.indices.generic_rank == a.pencil.rows();
  a.co_cr = steady && a.indices.generic_rank == a.pencil.cols();
  cross_check(p, a, samples);
  return a;
}

SplittingType kernel_type(const PencilIndices& indices) {
  std::vector<int> degrees;
  for (int e : indices.right) degrees.push_back(-1 - e);
  return SplittingType(std::move(degrees));
}

std::size_t smith_degree(const SheafPencil& n, const FiberProfile& profile) {
  std::size_t total = 0;
  for (const auto& f : profile.finite_factors) total += static_cast<std::size_t>(f.degree());
  if (profile.rank_at_infinity < profile.generic_rank)
    for (const auto& f : smith_normal_form(n.reversed())) total += static_cast<std::size_t>(valuation_at_zero(f));
  return total;
}

// Torsion factors, checked against the regular degree from the indices.
std::vector<std::string> checked_torsion_factors(const SheafPencil& n, const PencilIndices& indices) {
  const FiberProfile profile = fiber_profile(n);
  if (profile.generic_rank != indices.generic_rank || smith_degree(n, profile) != indices.regular_degree)
    throw Error("internal-error", kModule, "Smith form disagrees with the Kronecker indices");
  return torsion_factors(n);
}

}  // namespace

Pair::Pair(HypercomplexStructure s, Subspace<Rational> u) : structure(std::move(s)), subspace(std::move(u)) {
  if (subspace.ambient() != structure.dim())
    throw Error("ambient-mismatch", kModule, "subspace ambient dimension differs from the quaternionic space");
}

ComplexMatrix AntiholoFrame::at(const SphereChart& z) const {
  if (z.at_infinity()) return m1;
  return m0 + *z.zeta * m1;
}

ComplexMatrix SheafPencil::at(const SphereChart& z) const {
  if (z.at_infinity()) return n1;
  return n0 + *z.zeta * n1;
}

Matrix<Polynomial> SheafPencil::polynomial() const { return pencil_matrix(n0, n1); }
Matrix<Polynomial> SheafPencil::reversed() const { return pencil_matrix(n1, n0); }

SplittingType::SplittingType(std::vector<int> d) : degrees(std::move(d)) { std::sort(degrees.begin(), degrees.end()); }

long SplittingType::total() const { return std::accumulate(degrees.begin(), degrees.end(), 0L); }

const SplittingType& SheafReport::plus_splitting() const {
  if (const auto* s = std::get_if<SplittingType>(&plus)) return *s;
  throw Error("torsion-detected", kModule, "cokernel is not locally free", std::get<TorsionMarker>(plus).factors);
}

AntiholoFrame antiholomorphic_frame(const HypercomplexStructure& s) {
  const std::size_t n = s.dim();
  const GaussianRational i = GaussianRational::i();
  const ComplexMatrix ci = complexify(s.i());
  const ComplexMatrix shifted = ci + i * ComplexMatrix::identity(n);
  AntiholoFrame f;
  f.m0 = kernel(shifted).transpose();
  if (f.m0.cols() * 2 != n) throw Error("invalid-structure", kModule, "-i eigenspace of I has the wrong dimension");
  const ComplexMatrix half_k_ij = GaussianRational(Rational(1) / 2) * (complexify(s.k()) + i * complexify(s.j()));
  f.m1 = half_k_ij * f.m0;
  return f;
}

SheafPencil sheaf_pencil(const Pair& p) {
  const AntiholoFrame frame = antiholomorphic_frame(p.structure);
  const ComplexMatrix q = complexify(quotient_map(p.subspace));
  if (q.rows() == 0) return {ComplexMatrix(0, frame.m0.cols()), ComplexMatrix(0, frame.m0.cols())};
  return {q * frame.m0, q * frame.m1};
}

PencilIndices pencil_indices(const SheafPencil& n) {
  PencilIndices out;
  out.right = minimal_indices(chain_increments(n.n0, n.n1));
  out.left = minimal_indices(chain_increments(n.n0.transpose(), n.n1.transpose()));
  out.generic_rank = n.cols() - out.right.size();
  if (n.rows() - out.left.size() != out.generic_rank)
    throw Error("internal-error", kModule, "left and right minimal indices give different generic ranks");
  const auto sum = [](const std::vector<int>& v) { return static_cast<std::size_t>(std::accumulate(v.begin(), v.end(), 0)); };
  const std::size_t singular = sum(out.right) + sum(out.left);
  if (singular > out.generic_rank)
    throw Error("internal-error", kModule, "minimal indices exceed the generic rank");
  out.regular_degree = out.generic_rank - singular;
  return out;
}

FiberProfile fiber_profile(const SheafPencil& n) {
  FiberProfile profile;
  const auto factors = smith_normal_form(n.polynomial());
  profile.generic_rank = factors.size();
  for (const auto& f : factors)
    if (!f.is_constant()) profile.finite_factors.push_back(f);
  profile.rank_at_infinity = rank(n.n1);
  return profile;
}

std::vector<std::string> torsion_factors(const SheafPencil& n) {
  const FiberProfile profile = fiber_profile(n);
  std::vector<std::string> out;
  for (const auto& f : profile.finite_factors) out.push_back(to_string(f));
  if (profile.rank_at_infinity < profile.generic_rank) {
    for (const auto& f : smith_normal_form(n.reversed())) {
      const int v = valuation_at_zero(f);
      if (v > 0) out.push_back("inf^" + std::to_string(v));
    }
  }
  return out;
}

bool cr_at(const Pair& p, const AdmissiblePoint& point) {
  if (p.subspace.dim() == 0) return p.dim() == 0;
  const RationalMatrix& u = p.subspace.basis();
  const RationalMatrix jop = admissible_operator(p.structure, point);
  return rank(vstack(u, u * jop.transpose())) == p.dim();
}

bool co_cr_at(const Pair& p, const AdmissiblePoint& point) {
  if (p.subspace.dim() == 0) return true;
  const RationalMatrix& u = p.subspace.basis();
  const RationalMatrix jop = admissible_operator(p.structure, point);
  return rank(vstack(u, u * jop.transpose())) == 2 * p.subspace.dim();
}

bool is_cr_pair(const Pair& p, std::size_t samples) { return analyze(p, samples).cr; }

bool is_co_cr_pair(const Pair& p, std::size_t samples) { return analyze(p, samples).co_cr; }

std::vector<std::size_t> chain_increments(const ComplexMatrix& a, const ComplexMatrix& b) {
  using Space = Subspace<GaussianRational>;
  const std::size_t cols = a.cols();
  if (b.cols() != cols || b.rows() != a.rows())
    throw Error("dimension-mismatch", kModule, "pencil coefficients differ in shape");
  const Space ker_b = Space::span(cols, kernel(b));
  Space w = Space::span(cols, kernel(a));
  std::vector<std::size_t> increments;
  // The W_j increase, so they stabilise after at most cols steps.
  for (std::size_t step = 0; step <= cols + 1; ++step) {
    increments.push_back(intersect(w, ker_b).dim());
    Space next = preimage(a, image(b, w));
    if (next == w) return increments;
    w = std::move(next);
  }
  throw Error("internal-error", kModule, "Wong sequence failed to stabilise");
}

SplittingType kernel_splitting(const SheafPencil& n) { return kernel_type(pencil_indices(n)); }

SplittingType cokernel_splitting(const SheafPencil& n) {
  const PencilIndices indices = pencil_indices(n);
  if (!indices.constant_rank())
    throw Error("torsion-detected", kModule, "fibre rank drops; cokernel is not locally free",
                checked_torsion_factors(n, indices));
  return SplittingType(indices.left);
}

SheafReport analyze_pair(const Pair& p, std::size_t samples) {
  const Analysis a = analyze(p, samples);
  SheafReport report;
  report.is_cr = a.cr;
  report.is_co_cr = a.co_cr;
  report.minus = kernel_type(a.indices);
  const long k2 = static_cast<long>(a.pencil.cols());
  if (a.cr && report.minus.total() != -k2) throw Error("internal-error", kModule, "kernel degree checksum failed");
  if (a.indices.constant_rank()) {
    report.plus = SplittingType(a.indices.left);
    // deg coker = 2k + deg ker when the cokernel is a bundle.
    if (report.plus_splitting().total() != k2 + report.minus.total())
      throw Error("internal-error", kModule, "cokernel degree checksum failed");
  } else {
    report.plus = TorsionMarker{checked_torsion_factors(a.pencil, a.indices)};
  }
  return report;
}

}  // namespace qcr
