#include "qcr/selftest.hpp"

#include <functional>
#include <optional>

#include "qcr/conjugations.hpp"
#include "qcr/fstructures.hpp"
#include "qcr/json_io.hpp"
#include "qcr/models.hpp"
#include "qcr/smith.hpp"

namespace qcr {

namespace {

// Product of basis units e_a e_b = sign * e_index, basis (1, i, j, k).
struct UnitProduct {
  int sign;
  int index;
};

using UnitTable = std::array<std::array<UnitProduct, 4>, 4>;

UnitTable unit_table(bool corrupt) {
  UnitTable t = {{{{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
                  {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
                  {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
                  {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}}}};
  if (corrupt) t[1][2].sign = -t[1][2].sign;
  return t;
}

// A failing trial returns a description of its input.
using Trial = std::function<std::optional<std::string>(Rng&, std::size_t)>;

class Runner {
 public:
  explicit Runner(std::uint64_t seed) : seed_(seed) {}

  void check(const std::string& module, const std::string& invariant, std::size_t trials, const Trial& trial) {
    InvariantResult result{module, invariant, true, trials, {}};
    // Each invariant gets its own stream so suites stay reproducible in isolation.
    Rng rng(seed_ ^ (std::hash<std::string>{}(module + "/" + invariant) & 0xffffffffULL));
    for (std::size_t t = 0; t < trials && result.passed; ++t) {
      std::optional<std::string> failure;
      try {
        failure = trial(rng, t);
      } catch (const Error& e) {
        failure = "trial " + std::to_string(t) + " raised " + e.name() + ": " + e.what();
      }
      if (failure) {
        result.passed = false;
        result.reproducer = "seed=" + std::to_string(seed_) + " trial=" + std::to_string(t) + " " + *failure;
      }
    }
    summary_.results.push_back(std::move(result));
  }

  SelftestSummary take() { return std::move(summary_); }

 private:
  std::uint64_t seed_;
  SelftestSummary summary_;
};

std::string describe(const Pair& p) { return "pair=" + io::to_json(p).dump(); }
std::string describe(const HypercomplexStructure& s) { return "structure=" + io::to_json(s).dump(); }

RationalMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(rng.uniform(-3, 3)) / rng.uniform(1, 3);
  return m;
}

HypercomplexStructure random_structure(Rng& rng, std::size_t k) {
  return transport(standard_structure(k), random_invertible(rng, 4 * k));
}

std::string describe(const Decomposition& d) { return "factors=" + io::to_json(d).dump(); }

void exact_algebra_suite(Runner& run) {
  const std::string m = "exact-algebra";
  run.check(m, "field axioms in Q(i)", 30, [](Rng& rng, std::size_t) -> std::optional<std::string> {
    auto g = [&] { return GaussianRational(Rational(rng.uniform(-5, 5)) / rng.uniform(1, 5), Rational(rng.uniform(-5, 5)) / rng.uniform(1, 5)); };
    const auto a = g(), b = g(), c = g();
    if ((a * b) * c != a * (b * c) || a * (b + c) != a * b + a * c) return "a=" + to_string(a) + " b=" + to_string(b);
    if (!a.is_zero() && a * a.inverse() != GaussianRational(1)) return "a=" + to_string(a);
    return std::nullopt;
  });
  run.check(m, "rref is idempotent", 20, [](Rng& rng, std::size_t t) -> std::optional<std::string> {
    const auto a = random_matrix(rng, 1 + t % 4, 1 + t % 5);
    const auto r = rref(a);
    if (rref(r.basis).basis != r.basis || r.rank != rank(a)) return "matrix=" + io::to_json(a).dump();
    return std::nullopt;
  });
  run.check(m, "dim(A+B) + dim(A cap B) = dim A + dim B", 20, [](Rng& rng, std::size_t t) -> std::optional<std::string> {
    const std::size_t n = 2 + t % 5;
    const auto a = Subspace<Rational>::span(n, random_matrix(rng, rng.uniform(0, n), n));
    const auto b = Subspace<Rational>::span(n, random_matrix(rng, rng.uniform(0, n), n));
    if (sum(a, b).dim() + intersect(a, b).dim() != a.dim() + b.dim())
      return "A=" + io::to_json(a.basis()).dump() + " B=" + io::to_json(b.basis()).dump();
    return std::nullopt;
  });
  run.check(m, "Smith invariant factors divide each other", 10, [](Rng& rng, std::size_t t) -> std::optional<std::string> {
    const std::size_t n = 1 + t % 3;
    const auto a = complexify(random_matrix(rng, n, n)), b = complexify(random_matrix(rng, n, n));
    Matrix<Polynomial> p(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) p(r, c) = Polynomial::linear(a(r, c), b(r, c));
    const auto factors = smith_normal_form(p);
    for (std::size_t f = 1; f < factors.size(); ++f)
      if (!factors[f].divmod(factors[f - 1]).second.is_zero()) return "pencil of size " + std::to_string(n);
    return std::nullopt;
  });
}

void quaternion_suite(Runner& run, const UnitTable& table) {
  const std::string m = "quaternion-structures";
  run.check(m, "unit table matches the quaternion product", 1, [&](Rng&, std::size_t) -> std::optional<std::string> {
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        const auto& e = table[a][b];
        if (Quaternion::basis(a) * Quaternion::basis(b) != Quaternion(e.sign) * Quaternion::basis(e.index))
          return "entry (" + std::to_string(a) + "," + std::to_string(b) + ")";
      }
    return std::nullopt;
  });
  run.check(m, "table left multiplications satisfy IJ = K", 1, [&](Rng&, std::size_t) -> std::optional<std::string> {
    RationalMatrix gens[3] = {RationalMatrix(4, 4), RationalMatrix(4, 4), RationalMatrix(4, 4)};
    for (int u = 1; u < 4; ++u)
      for (int b = 0; b < 4; ++b) gens[u - 1](table[u][b].index, b) = table[u][b].sign;
    const auto violations = structure_violations(gens[0], gens[1], gens[2]);
    if (!violations.empty()) return "violated: " + violations.front();
    if (!(HypercomplexStructure(gens[0], gens[1], gens[2]) == standard_structure(1))) return "differs from standard";
    return std::nullopt;
  });
  run.check(m, "random automorphisms are quaternionic", 10, [](Rng& rng, std::size_t t) -> std::optional<std::string> {
    const auto s = random_structure(rng, 1 + t % 2);
    const auto phi = random_automorphism(s, rng);
    const auto r = is_quaternionic_map(phi.map, s, s);
    if (!r || *r != phi.rotation || !is_rotation(*r)) return describe(s);
    return std::nullopt;
  });
  run.check(m, "dual structure is involutive", 5, [](Rng& rng, std::size_t t) -> std::optional<std::string> {
    const auto s = random_structure(rng, 1 + t % 2);
    if (!(dual_structure(dual_structure(s)) == s)) return describe(s);
    return std::nullopt;
  });
  run.check(m, "sphere chart round trip", 1, [](Rng&, std::size_t) -> std::optional<std::string> {
    for (const auto& z : sphere_samples(40))
      if (!(sphere_to_chart(chart_to_sphere(z)) == z) || !chart_to_sphere(z).on_sphere())
        return "zeta=" + (z.at_infinity() ? std::string("inf") : to_string(*z.zeta));
    return std::nullopt;
  });
}

void twistor_suite(Runner& run, std::size_t samples) {
  const std::string m = "twistor-pencil";
  run.check(m, "frame identity J M = -i M", 4, [=](Rng& rng, std::size_t t) -> std::optional<std::string> {
    const auto s = random_structure(rng, 1 + t % 2);
    const auto frame = antiholomorphic_frame(s);
    for (const auto& z : sphere_samples(samples)) {
      const auto mz = frame.at(z);
      if (complexify(admissible_operator(s, z)) * mz != -GaussianRational::i() * mz) return describe(s);
    }
    return std::nullopt;
  });
  run.check(m, "model splitting types", 1, [=](Rng&, std::size_t) -> std::optional<std::string> {
    for (int k = 1; k <= 2; ++k)
      if (analyze_pair(model_V(k), samples).plus_splitting().degrees != std::vector<int>{2 * k})
        return "model_V(" + std::to_string(k) + ")";
    for (int k = 0; k <= 1; ++k)
      if (analyze_pair(model_Vp(k), samples).plus_splitting().degrees != std::vector<int>{2 * k + 1, 2 * k + 1})
        return "model_Vp(" + std::to_string(k) + ")";
    return std::nullopt;
  });
  run.check(m, "report invariant under automorphisms", 6, [=](Rng& rng, std::size_t t) -> std::optional<std::string> {
    const Pair p = t % 2 == 0 ? model_V(1 + t / 3) : Pair(random_structure(rng, 1), Subspace<Rational>::span(4, random_matrix(rng, 1 + t % 3, 4)));
    const auto phi = random_automorphism(p.structure, rng);
    const auto before = analyze_pair(p, samples);
    const auto after = analyze_pair(Pair(p.structure, image(phi.map, p.subspace)), samples);
    // A nontrivial rotation moves torsion points on the sphere; only their presence is invariant.
    const bool same = phi.rotation == RationalMatrix::identity(3) || !before.plus_is_torsion()
                          ? after == before
                          : after.is_cr == before.is_cr && after.is_co_cr == before.is_co_cr &&
                                after.minus == before.minus && after.plus_is_torsion();
    if (!same) return describe(p);
    return std::nullopt;
  });
  run.check(m, "checksums and flag laws", 10, [=](Rng& rng, std::size_t t) -> std::optional<std::string> {
    const std::size_t k = 1 + t % 2;
    const Pair p(random_structure(rng, k), Subspace<Rational>::span(4 * k, random_matrix(rng, rng.uniform(0, 4 * k), 4 * k)));
    const auto r = analyze_pair(p, samples);
    const long twice_k = 2 * static_cast<long>(k);
    if (r.is_cr && (r.minus.total() != -twice_k || r.plus_is_torsion() || !r.plus_splitting().empty())) return describe(p);
    if (r.is_co_cr && (!r.minus.empty() || r.plus_splitting().total() != twice_k)) return describe(p);
    return std::nullopt;
  });
}

void models_suite(Runner& run, std::size_t samples) {
  const std::string m = "models-classification";
  run.check(m, "classification round trip", 4, [=](Rng& rng, std::size_t t) -> std::optional<std::string> {
    const auto input = random_decomposition(rng, t % 2 == 0, 3);
    if (classify(random_presentation(model_product(input), rng), samples) != input) return describe(input);
    return std::nullopt;
  });
  run.check(m, "dual pair swaps tags", 3, [=](Rng& rng, std::size_t) -> std::optional<std::string> {
    const auto input = random_decomposition(rng, true, 3);
    Decomposition duals;
    for (const auto& f : input) duals.push_back(dual_factor(f));
    std::sort(duals.begin(), duals.end());
    if (classify(dual_pair(model_product(input)), samples) != duals) return describe(input);
    return std::nullopt;
  });
}

void fstructures_suite(Runner& run) {
  const std::string m = "f-structures";
  run.check(m, "group action preserves the model triple", 9, [](Rng& rng, std::size_t t) -> std::optional<std::string> {
    const std::pair<int, int> shapes[] = {{1, 0}, {2, 1}, {1, 2}};
    const auto [l, mm] = shapes[t % 3];
    const auto triple = model_f_triple(l, mm);
    const auto g = random_group_element(l, mm, rng);
    const auto phi = induced_automorphism(g);
    const auto r = is_quaternionic_map(phi, triple.structure, triple.structure);
    if (!(image(phi, triple.u) == triple.u) || !(image(phi, triple.v) == triple.v) || !r || *r != rho(g))
      return "element=" + io::to_json(g).dump();
    return std::nullopt;
  });
  run.check(m, "composition is a homomorphism", 10, [](Rng& rng, std::size_t t) -> std::optional<std::string> {
    const std::size_t l = t % 2, mm = 1 + t % 2;
    const auto g = random_group_element(l, mm, rng), h = random_group_element(l, mm, rng);
    if (induced_automorphism(group_compose(g, h)) != induced_automorphism(g) * induced_automorphism(h) ||
        rho(group_compose(g, h)) != rho(g) * rho(h))
      return "g=" + io::to_json(g).dump() + " h=" + io::to_json(h).dump();
    return std::nullopt;
  });
}

void conjugations_suite(Runner& run) {
  const std::string m = "conjugations";
  run.check(m, "tau_q is an involution", 10, [](Rng& rng, std::size_t) -> std::optional<std::string> {
    const Quaternion q = random_imaginary_unit(rng);
    const auto t = tau(q, 2);
    if (t.map * t.map != RationalMatrix::identity(8) || !is_conjugation(t.map, standard_structure(2)))
      return "q=" + to_string(q);
    return std::nullopt;
  });
  run.check(m, "real form recovery is equivariant", 4, [](Rng& rng, std::size_t t) -> std::optional<std::string> {
    const std::size_t n = 1 + t % 2;
    const auto q = quaternionify(n).structure;
    const RationalMatrix phi = random_invertible(rng, 4 * n);
    const RationalMatrix inv = *inverse(phi);
    const auto form = recover_real_form(transport(q, phi), phi * tau(Quaternion::unit_i(), n).map * inv,
                                        phi * tau(Quaternion::unit_j(), n).map * inv);
    RationalMatrix axes(n, 4 * n);
    for (std::size_t a = 0; a < n; ++a) axes(a, 4 * a) = 1;
    if (form.u.dim() != n || !(form.u == image(phi, Subspace<Rational>::span(4 * n, axes))) ||
        form.rotation != RationalMatrix::identity(3))
      return "phi=" + io::to_json(phi).dump();
    return std::nullopt;
  });
  run.check(m, "graph and cosum decompose the quaternionification", 2, [](Rng& rng, std::size_t t) -> std::optional<std::string> {
    const auto s = random_structure(rng, 1 + t);
    const auto violations = graph_decomposition_violations(s);
    if (!violations.empty()) return describe(s) + " violated: " + violations.front();
    return std::nullopt;
  });
  run.check(m, "CR subspace round trip", 2, [](Rng& rng, std::size_t) -> std::optional<std::string> {
    const Pair p = dual_pair(model_for(FactorSpec{FactorTag::CoV, static_cast<int>(rng.uniform(1, 2))}));
    const Pair back = cr_from_subspace(subspace_from_cr(p));
    if (!(analyze_pair(back) == analyze_pair(p))) return describe(p);
    return std::nullopt;
  });
}

}  // namespace

std::size_t SelftestSummary::passed() const {
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; }));
}

std::size_t SelftestSummary::failed() const { return results.size() - passed(); }

SelftestSummary run_selftest(const SelftestOptions& options) {
  Runner run(options.seed);
  const UnitTable table = unit_table(options.corrupt_quaternion_table);
  exact_algebra_suite(run);
  quaternion_suite(run, table);
  twistor_suite(run, options.samples);
  models_suite(run, options.samples);
  fstructures_suite(run);
  conjugations_suite(run);
  return run.take();
}

}  // namespace qcr
