#include "qcr/models.hpp"

#include <algorithm>
#include <map>

namespace qcr {

namespace {

constexpr const char* kModule = "models-classification";

// Real coordinates of the pattern (z1, conj(z1) + z2 j, z3 - conj(z2) j, ...)
// in `slots` quaternion slots, for z_t = x_t + y_t i with t = 1..params.
// Parameter vector layout: (x1, y1, x2, y2, ...).
RationalMatrix pattern_map(std::size_t slots, std::size_t params) {
  RationalMatrix m(4 * slots, 2 * params);
  auto x = [](std::size_t t) { return 2 * (t - 1); };
  auto y = [](std::size_t t) { return 2 * (t - 1) + 1; };
  for (std::size_t s = 1; s <= slots; ++s) {
    const std::size_t base = 4 * (s - 1);
    if (s == 1) {
      if (params == 0) continue;
      m(base, x(1)) = 1;
      m(base + 1, y(1)) = 1;
    } else if (s % 2 == 0) {
      // conj(z_{s-1}) + z_s j, with z j = x j + y k.
      m(base, x(s - 1)) = 1;
      m(base + 1, y(s - 1)) = -1;
      if (s <= params) {
        m(base + 2, x(s)) = 1;
        m(base + 3, y(s)) = 1;
      }
    } else {
      // z_s - conj(z_{s-1}) j, with conj(z) j = x j - y k.
      if (s <= params) {
        m(base, x(s)) = 1;
        m(base + 1, y(s)) = 1;
      }
      m(base + 2, x(s - 1)) = -1;
      m(base + 3, y(s - 1)) = 1;
    }
  }
  return m;
}

Pair pair_from_columns(std::size_t slots, const RationalMatrix& columns) {
  return Pair(standard_structure(slots), Subspace<Rational>::span(4 * slots, columns.transpose()));
}

}  // namespace

void FactorSpec::validate() const {
  const bool primed = tag == FactorTag::CoVp || tag == FactorTag::CrVp;
  if (k < (primed ? 0 : 1))
    throw Error("invalid-input", kModule, tag_name(tag) + " needs k >= " + (primed ? "0" : "1"));
}

std::string tag_name(FactorTag tag) {
  switch (tag) {
    case FactorTag::CoV: return "CoV";
    case FactorTag::CoVp: return "CoVp";
    case FactorTag::CrV: return "CrV";
    case FactorTag::CrVp: return "CrVp";
  }
  return "?";
}

FactorTag parse_tag(const std::string& name) {
  for (FactorTag t : {FactorTag::CoV, FactorTag::CoVp, FactorTag::CrV, FactorTag::CrVp})
    if (tag_name(t) == name) return t;
  throw ParseError("unknown factor tag '" + name + "'");
}

std::string to_string(const FactorSpec& f) { return tag_name(f.tag) + ":" + std::to_string(f.k); }

FactorSpec parse_factor(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("factor must look like TAG:k, got '" + text + "'");
  FactorSpec f;
  f.tag = parse_tag(text.substr(0, colon));
  const std::string digits = text.substr(colon + 1);
  if (digits.empty() || digits.size() > 6 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
    throw ParseError("factor index must be a small non-negative integer, got '" + digits + "'");
  f.k = std::stoi(digits);
  f.validate();
  return f;
}

FactorSpec dual_factor(const FactorSpec& f) {
  switch (f.tag) {
    case FactorTag::CoV: return {FactorTag::CrV, f.k};
    case FactorTag::CoVp: return {FactorTag::CrVp, f.k};
    case FactorTag::CrV: return {FactorTag::CoV, f.k};
    case FactorTag::CrVp: return {FactorTag::CoVp, f.k};
  }
  return f;
}

Pair model_V(int k) {
  FactorSpec{FactorTag::CoV, k}.validate();
  const auto n = static_cast<std::size_t>(k);
  const RationalMatrix pattern = pattern_map(n, n);
  // conj(z_k) = (-1)^k z_k: z_k real for even k, imaginary for odd k.
  const std::size_t dropped = 2 * (n - 1) + (k % 2 == 0 ? 1 : 0);
  RationalMatrix columns(4 * n, 2 * n - 1);
  for (std::size_t c = 0, out = 0; c < 2 * n; ++c) {
    if (c == dropped) continue;
    for (std::size_t r = 0; r < 4 * n; ++r) columns(r, out) = pattern(r, c);
    ++out;
  }
  Pair p = pair_from_columns(n, columns);
  if (p.subspace.dim() != 2 * n - 1) throw Error("internal-error", kModule, "model V_k has the wrong dimension");
  return p;
}

Pair model_Vp(int k) {
  FactorSpec{FactorTag::CoVp, k}.validate();
  const auto n = static_cast<std::size_t>(k);
  Pair p = pair_from_columns(2 * n + 1, pattern_map(2 * n + 1, 2 * n));
  if (p.subspace.dim() != 4 * n) throw Error("internal-error", kModule, "model V'_k has the wrong dimension");
  return p;
}

Pair model_for(const FactorSpec& f) {
  switch (f.tag) {
    case FactorTag::CoV: return model_V(f.k);
    case FactorTag::CoVp: return model_Vp(f.k);
    case FactorTag::CrV: return dual_pair(model_V(f.k));
    case FactorTag::CrVp: return dual_pair(model_Vp(f.k));
  }
  throw Error("invalid-input", kModule, "unknown factor tag");
}

std::size_t quaternionic_dim(const FactorSpec& f) {
  const auto k = static_cast<std::size_t>(f.k);
  return f.tag == FactorTag::CoV || f.tag == FactorTag::CrV ? k : 2 * k + 1;
}

std::size_t quaternionic_dim(const Decomposition& d) {
  std::size_t total = 0;
  for (const auto& f : d) total += quaternionic_dim(f);
  return total;
}

Decomposition random_decomposition(Rng& rng, bool co, std::size_t max_quaternionic_dim) {
  if (max_quaternionic_dim == 0) throw Error("invalid-input", kModule, "dimension budget must be positive");
  std::size_t budget = max_quaternionic_dim;
  Decomposition out;
  while (budget > 0 && (out.empty() || rng.coin())) {
    const bool primed = rng.coin();
    FactorSpec f{co ? (primed ? FactorTag::CoVp : FactorTag::CoV) : (primed ? FactorTag::CrVp : FactorTag::CrV), 0};
    const long top = primed ? static_cast<long>((budget - 1) / 2) : static_cast<long>(budget);
    if (!primed && top < 1) continue;
    f.k = static_cast<int>(rng.uniform(primed ? 0 : 1, top));
    budget -= quaternionic_dim(f);
    out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Pair random_presentation(const Pair& p, Rng& rng) {
  const QuaternionicMap phi = random_automorphism(p.structure, rng);
  const RationalMatrix basis = random_invertible(rng, p.dim());
  const RationalMatrix map = basis * phi.map;
  return Pair(rotate_representative(transport(p.structure, basis), random_rotation(rng)), image(map, p.subspace));
}

Pair dual_pair(const Pair& p) { return Pair(dual_structure(p.structure), annihilator(p.subspace)); }

Pair direct_sum(const Pair& a, const Pair& b) {
  const std::size_t n = a.dim() + b.dim();
  return Pair(direct_sum(a.structure, b.structure),
              Subspace<Rational>::span(n, block_diag(a.subspace.basis(), b.subspace.basis())));
}

Pair model_product(const Decomposition& factors) {
  Pair out(HypercomplexStructure(RationalMatrix(0, 0), RationalMatrix(0, 0), RationalMatrix(0, 0)),
           Subspace<Rational>::zero(0));
  for (const auto& f : factors) out = direct_sum(out, model_for(f));
  return out;
}

FQuatTriple model_f_triple(int l, int m) {
  if (l < 0 || m < 0 || l + m < 1) throw Error("invalid-input", kModule, "model_f_triple needs l, m >= 0 and l + m >= 1");
  const auto n = static_cast<std::size_t>(l + m);
  RationalMatrix u(4 * n - static_cast<std::size_t>(l), 4 * n), v(static_cast<std::size_t>(l), 4 * n);
  for (std::size_t idx = 0, ur = 0, vr = 0; idx < 4 * n; ++idx) {
    if (idx % 4 == 0 && idx / 4 < static_cast<std::size_t>(l))
      v(vr++, idx) = 1;
    else
      u(ur++, idx) = 1;
  }
  return {standard_structure(n), Subspace<Rational>::span(4 * n, u), Subspace<Rational>::span(4 * n, v)};
}

std::vector<std::string> co_cr_degree_violations(const SplittingType& plus, std::size_t quaternionic_dim) {
  std::vector<std::string> out;
  if (plus.total() != 2 * static_cast<long>(quaternionic_dim))
    out.push_back("degree sum " + std::to_string(plus.total()) + " differs from 2k = " +
                  std::to_string(2 * quaternionic_dim));
  std::map<int, int> multiplicity;
  for (int d : plus.degrees) ++multiplicity[d];
  for (const auto& [d, count] : multiplicity) {
    if (d < 1) out.push_back("degree " + std::to_string(d) + " is below 1");
    if (d % 2 != 0 && count % 2 != 0)
      out.push_back("odd degree " + std::to_string(d) + " occurs " + std::to_string(count) + " times");
  }
  return out;
}

Decomposition decomposition_from_report(const SheafReport& report) {
  std::vector<int> degrees;
  bool co = false;
  if (report.is_co_cr) {
    co = true;
    degrees = report.plus_splitting().degrees;
  } else if (report.is_cr) {
    for (int d : report.minus.degrees) degrees.push_back(-d);
  } else {
    throw Error("not-classifiable", kModule, "pair is neither CR nor co-CR");
  }
  std::map<int, int> multiplicity;
  for (int d : degrees) ++multiplicity[d];
  Decomposition out;
  for (const auto& [d, count] : multiplicity) {
    if (d <= 0)
      throw Error("inconsistency", kModule, "splitting degree " + std::to_string(d) + " violates the degree laws");
    if (d % 2 == 0) {
      for (int c = 0; c < count; ++c) out.push_back({co ? FactorTag::CoV : FactorTag::CrV, d / 2});
    } else {
      if (count % 2 != 0)
        throw Error("inconsistency", kModule, "odd degree " + std::to_string(d) + " does not pair up");
      for (int c = 0; c < count / 2; ++c) out.push_back({co ? FactorTag::CoVp : FactorTag::CrVp, (d - 1) / 2});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Decomposition classify(const Pair& p, std::size_t samples) {
  const SheafReport report = analyze_pair(p, samples);
  Decomposition out = decomposition_from_report(report);
  const Pair rebuilt = model_product(out);
  if (rebuilt.dim() != p.dim() || rebuilt.subspace.dim() != p.subspace.dim() ||
      !(analyze_pair(rebuilt, samples) == report))
    throw Error("inconsistency", kModule, "model product does not reproduce the sheaf report");
  return out;
}

}  // namespace qcr
