#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "qcr/json_io.hpp"
#include "qcr/selftest.hpp"

namespace {

using qcr::Error;
using qcr::ParseError;
using qcr::io::Json;

constexpr const char* kModule = "cli";

struct Options {
  std::uint64_t seed = 1;
  bool json = false;
  bool text = false;
  bool timing = false;
  std::size_t max_dim = 32;
  std::size_t samples = qcr::kDefaultSphereSamples;
};

struct Outcome {
  Json document;
  int status = 0;
};

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json read_document(const std::string& path) {
  Json doc = qcr::io::parse_document(read_text(path));
  qcr::io::forward_upstream_error(doc);
  return doc;
}

void guard(const Options& o, std::size_t dim) {
  if (dim > o.max_dim)
    throw Error("dimension-guard", kModule,
                "real dimension " + std::to_string(dim) + " exceeds --max-dim " + std::to_string(o.max_dim));
}

qcr::Pair read_pair(const Options& o, const std::string& path) {
  qcr::Pair p = qcr::io::pair_from_json(read_document(path));
  guard(o, p.dim());
  return p;
}

Json with_seed(Json doc, const Options& o) {
  doc["seed"] = o.seed;
  return doc;
}

Outcome run_check(const Options& o, const std::string& path, const std::string& kind) {
  const qcr::Pair p = read_pair(o, path);
  const qcr::SheafReport r = qcr::analyze_pair(p, o.samples);
  Json doc = Json::object();
  if (kind != "cocr") doc["cr"] = r.is_cr;
  if (kind != "cr") doc["cocr"] = r.is_co_cr;
  return {with_seed(std::move(doc), o)};
}

Outcome run_splitting(const Options& o, const std::string& path) {
  const qcr::Pair p = read_pair(o, path);
  Json doc = qcr::io::to_json(qcr::analyze_pair(p, o.samples));
  doc["pair"] = qcr::io::to_json(p);
  return {with_seed(std::move(doc), o)};
}

Outcome run_classify(const Options& o, const std::string& path) {
  const qcr::Pair p = read_pair(o, path);
  Json doc = Json::object();
  doc["decomposition"] = qcr::io::to_json(qcr::classify(p, o.samples));
  return {with_seed(std::move(doc), o)};
}

Outcome run_model(const Options& o, const std::vector<std::string>& factors) {
  qcr::Decomposition d;
  for (const auto& text : factors) d.push_back(qcr::parse_factor(text));
  guard(o, 4 * qcr::quaternionic_dim(d));
  Json doc = Json::object();
  doc["factors"] = qcr::io::to_json(d);
  doc["pair"] = qcr::io::to_json(qcr::model_product(d));
  return {with_seed(std::move(doc), o)};
}

Outcome run_dual(const Options& o, const std::string& path) {
  Json doc = Json::object();
  doc["pair"] = qcr::io::to_json(qcr::dual_pair(read_pair(o, path)));
  return {with_seed(std::move(doc), o)};
}

std::pair<int, int> parse_shape(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    const int l = std::stoi(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(text);
    const std::string rest = text.substr(comma + 1);
    const int m = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return {l, m};
  } catch (const std::logic_error&) {
    throw ParseError("--model expects 'l,m', got '" + text + "'");
  }
}

Outcome run_ftriple(const Options& o, const std::string& path, const std::string& model, const std::string& conformal) {
  qcr::FQuatTriple t;
  if (!model.empty()) {
    const auto [l, m] = parse_shape(model);
    guard(o, 4 * static_cast<std::size_t>(std::max(0, l + m)));
    t = qcr::model_f_triple(l, m);
  } else if (!conformal.empty()) {
    const Json doc = read_document(conformal);
    if (!doc.is_object() || !doc.contains("gram") || !doc.contains("frame"))
      throw ParseError("conformal input needs \"gram\" and \"frame\"");
    t = qcr::conformal_3d(qcr::io::square_matrix_from_json(doc["gram"]), qcr::io::square_matrix_from_json(doc["frame"]));
  } else {
    t = qcr::io::triple_from_json(read_document(path));
    guard(o, t.structure.dim());
  }
  const auto violations = qcr::validate_triple(t, o.samples);
  Json doc = Json::object();
  doc["triple"] = qcr::io::to_json(t);
  doc["valid"] = violations.empty();
  doc["violations"] = violations;
  if (violations.empty()) {
    doc["cr_side"] = qcr::io::to_json(qcr::analyze_pair(qcr::cr_side(t, o.samples), o.samples));
    doc["cocr_side"] = qcr::io::to_json(qcr::analyze_pair(qcr::cocr_side(t, o.samples), o.samples));
  }
  return {with_seed(std::move(doc), o)};
}

Outcome run_conjugation_recover(const Options& o, const std::string& path, std::size_t random_n) {
  Json doc = Json::object();
  qcr::HypercomplexStructure s;
  qcr::RationalMatrix t1, t2;
  if (random_n > 0) {
    guard(o, 4 * random_n);
    qcr::Rng rng(o.seed);
    const qcr::RationalMatrix phi = qcr::random_invertible(rng, 4 * random_n);
    const qcr::RationalMatrix inv = *qcr::inverse(phi);
    s = qcr::transport(qcr::quaternionify(random_n).structure, phi);
    t1 = phi * qcr::tau(qcr::Quaternion::unit_i(), random_n).map * inv;
    t2 = phi * qcr::tau(qcr::Quaternion::unit_j(), random_n).map * inv;
    doc["input"] = {{"structure", qcr::io::to_json(s)}, {"t1", qcr::io::to_json(t1)}, {"t2", qcr::io::to_json(t2)}};
  } else {
    const Json in = read_document(path);
    if (!in.is_object() || !in.contains("structure") || !in.contains("t1") || !in.contains("t2"))
      throw ParseError("conjugation input needs \"structure\", \"t1\" and \"t2\"");
    s = qcr::io::structure_from_json(in["structure"]);
    guard(o, s.dim());
    t1 = qcr::io::square_matrix_from_json(in["t1"]);
    t2 = qcr::io::square_matrix_from_json(in["t2"]);
  }
  doc["real_form"] = qcr::io::to_json(qcr::recover_real_form(s, t1, t2));
  return {with_seed(std::move(doc), o)};
}

Outcome run_random(const Options& o, std::size_t count, std::size_t max_qdim, const std::string& kind) {
  qcr::Rng rng(o.seed);
  Json trials = Json::array();
  std::size_t matched = 0;
  for (std::size_t t = 0; t < count; ++t) {
    const bool co = kind == "co" || (kind == "mixed" && rng.coin());
    const qcr::Decomposition input = qcr::random_decomposition(rng, co, max_qdim);
    guard(o, 4 * qcr::quaternionic_dim(input));
    const qcr::Pair p = qcr::random_presentation(qcr::model_product(input), rng);
    const qcr::Decomposition recovered = qcr::classify(p, o.samples);
    const bool match = recovered == input;
    matched += match ? 1 : 0;
    trials.push_back({{"input", qcr::io::to_json(input)}, {"recovered", qcr::io::to_json(recovered)}, {"match", match}});
  }
  Json doc = Json::object();
  doc["count"] = count;
  doc["matched"] = matched;
  doc["trials"] = std::move(trials);
  return {with_seed(std::move(doc), o), matched == count ? 0 : 1};
}

Outcome run_selftest(const Options& o, bool mutate) {
  qcr::SelftestOptions options;
  options.seed = o.seed;
  options.samples = o.samples;
  options.corrupt_quaternion_table = mutate;
  const qcr::SelftestSummary summary = qcr::run_selftest(options);
  Json failures = Json::array();
  for (const auto& r : summary.results)
    if (!r.passed) failures.push_back({{"module", r.module}, {"invariant", r.invariant}, {"input", r.reproducer}});
  Json doc = Json::object();
  doc["seed"] = o.seed;
  doc["passed"] = summary.passed();
  doc["failed"] = summary.failed();
  doc["failures"] = std::move(failures);
  return {std::move(doc), summary.failed() == 0 ? 0 : 1};
}

std::string render_text(const Json& doc) {
  std::ostringstream out;
  for (const auto& [key, value] : doc.items()) {
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << key << ":\n";
      for (const auto& item : value) out << "  " << item.dump() << "\n";
    } else {
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
  return out.str();
}

void emit(const Options& o, const Json& doc) {
  if (o.text && !o.json)
    std::cout << render_text(doc);
  else
    std::cout << doc.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact CR / co-CR analysis of subspaces of quaternionic vector spaces"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--seed", o.seed, "Seed for every randomized step")->capture_default_str();
  app.add_flag("--json", o.json, "JSON output (default)");
  app.add_flag("--text", o.text, "Human-readable output");
  app.add_flag("--timing", o.timing, "Add wall-clock milliseconds to the report");
  app.add_option("--max-dim", o.max_dim, "Refuse inputs of larger real dimension")->capture_default_str();
  app.add_option("--samples", o.samples, "Sphere points used by the cross checks")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  std::string input = "-";
  const auto add_input = [&](CLI::App* sub) { sub->add_option("input", input, "Input file, '-' for stdin"); };

  std::string kind = "both";
  auto* check = app.add_subcommand("check", "Decide whether a pair is CR and/or co-CR");
  add_input(check);
  check->add_option("--kind", kind, "cr, cocr or both")->check(CLI::IsMember({"cr", "cocr", "both"}));

  auto* splitting = app.add_subcommand("splitting", "Splitting types of the twistor sheaves of a pair");
  add_input(splitting);

  auto* classify = app.add_subcommand("classify", "Model factors of a CR or co-CR pair");
  add_input(classify);

  std::vector<std::string> factors;
  auto* model = app.add_subcommand("model", "Direct sum of model factors");
  model->add_option("--factor", factors, "Factor TAG:k with TAG in CoV, CoVp, CrV, CrVp (repeatable)")->required();

  auto* dual = app.add_subcommand("dual", "Dual pair (Ann U, E*)");
  add_input(dual);

  std::string shape, conformal;
  auto* ftriple = app.add_subcommand("ftriple", "Validate an f-quaternionic triple and analyze its sides");
  add_input(ftriple);
  auto* shape_opt = ftriple->add_option("--model", shape, "Model triple l,m");
  ftriple->add_option("--conformal", conformal, "File with {\"gram\", \"frame\"} of a 3-space")->excludes(shape_opt);

  std::size_t random_n = 0;
  auto* recover = app.add_subcommand("conjugation-recover", "Real form from two anticommuting conjugations");
  add_input(recover);
  recover->add_option("--random", random_n, "Generate a disguised quaternionification of R^n")
      ->check(CLI::PositiveNumber);

  std::size_t count = 10, max_qdim = 6;
  std::string random_kind = "mixed";
  auto* random = app.add_subcommand("random", "Seeded classification round trips");
  random->add_option("--count", count, "Number of trials")->capture_default_str();
  random->add_option("--max-qdim", max_qdim, "Quaternionic dimension budget per trial")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  random->add_option("--kind", random_kind, "co, cr or mixed")->check(CLI::IsMember({"co", "cr", "mixed"}));

  bool mutate = false;
  auto* selftest = app.add_subcommand("selftest", "Run the invariant suites of every module");
  selftest->add_flag("--mutate", mutate, "Corrupt the built-in unit table (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome out;
    if (check->parsed()) out = run_check(o, input, kind);
    else if (splitting->parsed()) out = run_splitting(o, input);
    else if (classify->parsed()) out = run_classify(o, input);
    else if (model->parsed()) out = run_model(o, factors);
    else if (dual->parsed()) out = run_dual(o, input);
    else if (ftriple->parsed()) out = run_ftriple(o, input, shape, conformal);
    else if (recover->parsed()) out = run_conjugation_recover(o, input, random_n);
    else if (random->parsed()) out = run_random(o, count, max_qdim, random_kind);
    else out = run_selftest(o, mutate);
    if (o.timing) {
      const auto elapsed = std::chrono::steady_clock::now() - start;
      out.document["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    emit(o, out.document);
    return out.status;
  } catch (const ParseError& e) {
    emit(o, qcr::io::error_document(e));
    std::cerr << "qcr: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    const ParseError wrapped(e.what());
    emit(o, qcr::io::error_document(wrapped));
    std::cerr << "qcr: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    emit(o, qcr::io::error_document(e));
    std::cerr << "qcr: " << e.name() << ": " << e.what() << "\n";
    return 1;
  }
}
