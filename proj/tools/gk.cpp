// gk: command-line front end for computations in G_k.
//
//   gk index2 --k 2
//   gk verify lemma3 --k 2
//   gk cosets --spec '{"kind":"index_three","params":{"A1":[1,3],"A2":[2]},"k":2}'
//   gk color --spec data/specs/parity_123.json --depth 3 --format dot --out tree.dot
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 bound exceeded or coset table not closed.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gk/coset_table.hpp"
#include "gk/error.hpp"
#include "gk/subgroup_oracle.hpp"
#include "gk/tree.hpp"
#include "gk/verify.hpp"

namespace {

using json = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kFailed = 1, kUsage = 2, kBound = 3 };

struct RunConfig {
  int k = 2;
  std::string spec;
  std::string hom;
  std::string tag;
  std::size_t max_radius = gk::default_max_radius;
  std::size_t h_bound = gk::default_h_bound;
  std::size_t g_bound = gk::default_g_bound;
  std::size_t depth = 3;
  std::string format = "text";
  std::string out;
  std::uint64_t seed = 1;
};

// GK_MAX_MEMORY: byte budget, optionally suffixed K, M or G.
gk::Limits limits_from_env(int k) {
  gk::Limits limits;
  const char* raw = std::getenv("GK_MAX_MEMORY");
  if (raw == nullptr || *raw == '\0') return limits;
  std::string s(raw);
  std::size_t scale = 1;
  switch (s.back()) {
    case 'K': case 'k': scale = 1ull << 10; s.pop_back(); break;
    case 'M': case 'm': scale = 1ull << 20; s.pop_back(); break;
    case 'G': case 'g': scale = 1ull << 30; s.pop_back(); break;
    default: break;
  }
  std::size_t bytes = 0;
  try {
    bytes = std::stoull(s) * scale;
  } catch (const std::exception&) {
    throw gk::InvalidArgument("GK_MAX_MEMORY must be a byte count, got '" +
                              std::string(raw) + "'");
  }
  limits.max_cosets = gk::Limits::cosets_for_memory(bytes, k + 1);
  limits.max_tree_vertices = bytes / 128;
  return limits;
}

// Inline JSON when the argument starts with '{', otherwise a file path.
json load_json_arg(const std::string& arg) {
  std::string text = arg;
  if (arg.find_first_not_of(" \t\n") == std::string::npos ||
      arg[arg.find_first_not_of(" \t\n")] != '{') {
    std::ifstream in(arg);
    if (!in) throw gk::InvalidArgument("cannot read '" + arg + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw gk::InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
}

gk::SubgroupOracle load_oracle(const RunConfig& cfg, const gk::Limits& limits) {
  if (!cfg.hom.empty()) {
    json h = load_json_arg(cfg.hom);
    if (!h.contains("k")) h["k"] = cfg.k;
    return gk::kernel_oracle(gk::homomorphism_from_json(h, limits));
  }
  if (cfg.spec.empty()) throw gk::InvalidArgument("--spec or --hom is required");
  json s = load_json_arg(cfg.spec);
  if (!s.contains("k")) s["k"] = cfg.k;
  return gk::oracle_from_json(s, limits);
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw gk::InvalidArgument("cannot write '" + cfg.out + "'");
  f << text;
}

int cmd_index2(const RunConfig& cfg) {
  const gk::Limits limits = limits_from_env(cfg.k);
  const gk::GroupContext ctx(cfg.k, limits);
  const auto subsets = gk::verify::nonempty_subsets(ctx);
  json report;
  report["command"] = "index2";
  report["k"] = cfg.k;
  report["seed"] = cfg.seed;
  report["bounds"] = {{"max_radius", cfg.max_radius},
                      {"h_bound", cfg.h_bound},
                      {"g_bound", cfg.g_bound}};
  bool ok = true;
  auto groups = json::array();
  std::ostringstream text;
  text << "k=" << cfg.k << ": " << subsets.size() << " parity subgroups H_A\n";
  for (gk::GenSet a : subsets) {
    const auto oracle = gk::parity_oracle(a, ctx);
    const auto t = gk::enumerate_cosets(oracle, cfg.max_radius, limits);
    const auto v = gk::check_normality(oracle, t, cfg.h_bound, cfg.g_bound);
    ok = ok && t.index() == 2 &&
         std::holds_alternative<gk::CertifiedNormalVerdict>(v);
    groups.push_back({{"A", a.indices()},
                      {"index", t.index()},
                      {"normality", gk::verdict_name(v)}});
    text << "  H_" << a.to_string() << "  index " << t.index() << "  "
         << gk::verdict_name(v) << "\n";
  }
  auto pairs = json::array();
  std::size_t separated = 0;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      const gk::Word w =
          gk::Word::generator(ctx, (subsets[i] ^ subsets[j]).min());
      const bool in_a = gk::parity_oracle(subsets[i], ctx).contains(w);
      const bool in_b = gk::parity_oracle(subsets[j], ctx).contains(w);
      separated += in_a != in_b;
      pairs.push_back({{"A", subsets[i].indices()},
                       {"B", subsets[j].indices()},
                       {"word", gk::to_string(w)},
                       {"in_A", in_a},
                       {"in_B", in_b}});
    }
  }
  ok = ok && separated == pairs.size();
  text << "  " << separated << " of " << pairs.size()
       << " pairs separated by a distinguishing word\n"
       << (ok ? "PASS" : "FAIL") << "\n";
  report["subgroups"] = std::move(groups);
  report["distinguishing"] = std::move(pairs);
  report["passed"] = ok;
  emit(cfg, cfg.format == "json" ? report.dump(2) + "\n" : text.str());
  return ok ? kOk : kFailed;
}

int cmd_verify(const RunConfig& cfg) {
  gk::verify::Options o;
  o.k = cfg.k;
  o.max_radius = cfg.max_radius;
  o.h_bound = cfg.h_bound;
  o.g_bound = cfg.g_bound;
  o.seed = cfg.seed;
  o.limits = limits_from_env(cfg.k);
  std::vector<std::string> tags;
  if (cfg.tag == "all") {
    tags = gk::verify::suite_names();
  } else {
    tags.push_back(cfg.tag);
  }
  json reports = json::array();
  std::ostringstream text;
  bool ok = true;
  for (const std::string& tag : tags) {
    const gk::verify::Report r = gk::verify::run(tag, o);
    ok = ok && r.passed();
    reports.push_back(gk::verify::to_json(r));
    text << (r.passed() ? "PASS " : "FAIL ") << r.suite << " ("
         << r.checks.size() << " checks, " << r.failures() << " failed)\n";
    for (const auto& c : r.checks) {
      if (!c.passed || tags.size() == 1) {
        text << "  [" << (c.passed ? "ok" : "FAILED") << "] " << c.name << " "
             << c.inputs.dump() << (c.detail.empty() ? "" : "  " + c.detail)
             << "\n";
      }
    }
    if (!r.info.empty()) text << "  info: " << r.info.dump() << "\n";
  }
  json doc;
  doc["command"] = "verify";
  doc["tag"] = cfg.tag;
  doc["seed"] = cfg.seed;
  doc["passed"] = ok;
  doc["reports"] = std::move(reports);
  emit(cfg, cfg.format == "json" ? doc.dump(2) + "\n" : text.str());
  return ok ? kOk : kFailed;
}

int cmd_cosets(const RunConfig& cfg) {
  const gk::Limits limits = limits_from_env(cfg.k);
  const gk::SubgroupOracle oracle = load_oracle(cfg, limits);
  const gk::CosetTable t = gk::enumerate_cosets(oracle, cfg.max_radius, limits);
  const gk::NormalityVerdict v =
      gk::check_normality(oracle, t, cfg.h_bound, cfg.g_bound);
  json doc;
  doc["command"] = "cosets";
  doc["seed"] = cfg.seed;
  doc["bounds"] = {{"max_radius", cfg.max_radius},
                   {"h_bound", cfg.h_bound},
                   {"g_bound", cfg.g_bound}};
  doc["table"] = gk::to_json(t);
  doc["normality"] = gk::to_json(v);
  if (cfg.format == "json") {
    emit(cfg, doc.dump(2) + "\n");
    return kOk;
  }
  std::ostringstream text;
  text << "subgroup: " << t.subgroup.dump() << "\n"
       << "index: " << t.index() << "\n"
       << "closure radius: " << t.closure_radius << "\n"
       << "normality: " << gk::verdict_name(v);
  if (const auto* w = std::get_if<gk::NotNormalVerdict>(&v)) {
    text << " (h=" << gk::to_string(w->h) << ", g=" << gk::to_string(w->g)
         << ", g^-1 h g=" << gk::to_string(gk::conjugate(w->h, w->g))
         << " not in H)";
  } else if (const auto* b = std::get_if<gk::NormalUpToBoundVerdict>(&v)) {
    text << " (no violation with |h| <= " << b->h_bound
         << ", |g| <= " << b->g_bound << "; not a proof)";
  }
  text << "\n";
  if (cfg.out.empty()) {
    std::cout << text.str();
  } else {
    emit(cfg, doc.dump(2) + "\n");
    std::cout << text.str() << "table written to " << cfg.out << "\n";
  }
  return kOk;
}

int cmd_color(const RunConfig& cfg) {
  const gk::Limits limits = limits_from_env(cfg.k);
  const gk::SubgroupOracle oracle = load_oracle(cfg, limits);
  const gk::CosetTable t = gk::enumerate_cosets(oracle, cfg.max_radius, limits);
  const gk::TreeSlice slice = gk::build_slice(oracle.context(), cfg.depth, limits);
  const gk::PeriodicColoring c = gk::color_slice(slice, t);
  const auto format =
      gk::parse_export_format(cfg.format == "text" ? "dot" : cfg.format);
  emit(cfg, gk::export_coloring(c, format));
  if (!cfg.out.empty()) {
    std::cout << cfg.out << "\n";
    std::cerr << c.slice.vertices.size() << " vertices, "
              << gk::distinct_colors(c) << " colors\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in G_k, the free product of k+1 groups of order 2"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--k", cfg.k, "Tree order k (generators a_1..a_{k+1})")
        ->check(CLI::Range(1, 6));
    sub->add_option("--max-radius", cfg.max_radius, "Coset enumeration radius")
        ->check(CLI::Range(1, 24));
    sub->add_option("--h-bound", cfg.h_bound, "Normality search bound on |h|");
    sub->add_option("--g-bound", cfg.g_bound, "Normality search bound on |g|");
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_option("--out", cfg.out, "Write output to this file");
    sub->add_option("--seed", cfg.seed, "Seed for randomized checks");
  };

  auto* index2 = app.add_subcommand("index2", "Index-2 parity subgroups H_A");
  add_common(index2);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  add_common(verify);
  verify->add_option("tag", cfg.tag, "Suite: prop1, thm-odd-index, prop-abelian, "
                                     "thm-kernels, prop-index2n, thm-2n, "
                                     "lemma3, prop-index3, all")
      ->required();

  auto* cosets = app.add_subcommand("cosets", "Enumerate right cosets");
  add_common(cosets);
  cosets->add_option("--spec", cfg.spec, "Subgroup spec (JSON file or inline)");
  cosets->add_option("--hom", cfg.hom,
                     "Homomorphism descriptor; uses its kernel (JSON file or inline)");

  auto* color = app.add_subcommand("color", "Periodic coloring of a tree slice");
  add_common(color);
  color->add_option("--spec", cfg.spec, "Subgroup spec (JSON file or inline)");
  color->add_option("--hom", cfg.hom, "Homomorphism descriptor (JSON file or inline)");
  color->add_option("--depth", cfg.depth, "Slice depth")->check(CLI::Range(0, 24));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*index2) return cmd_index2(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*cosets) return cmd_cosets(cfg);
    if (*color) return cmd_color(cfg);
  } catch (const gk::BoundExceeded& e) {
    std::cerr << "gk: " << e.what() << "\n";
    return kBound;
  } catch (const gk::Error& e) {
    std::cerr << "gk: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
