#pragma once

// Command-line front end. Exit codes: 0 success/verified, 1 falsified or invalid
// certificate, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "blobrep/blobrep.hpp"

namespace blobrep::cli {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed;

struct CommandConfig {
  int n = 2;
  int m = 1;
  int south = -1;
  std::uint64_t seed = kDefaultSeed;
  int jobs = 1;
  int trials = 25;
  std::string out;
  std::string convention = "standard";
  bool blob = false;
  std::string word;
  std::string diagram;
  std::string left;
  std::string right;
  std::string pair;
};

namespace detail {

inline IndexConvention convention_of(const std::string& s) {
  if (s == "standard") return IndexConvention::standard;
  if (s == "shifted") return IndexConvention::shifted;
  throw std::invalid_argument("unknown convention: " + s);
}

// Inline JSON when the argument starts with '{' or '[', otherwise a file path.
inline json load_json(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("cannot open " + arg);
  return json::parse(in);
}

inline void emit(const json& j, const CommandConfig& cfg, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) throw std::invalid_argument("cannot write " + cfg.out);
  file << text;
}

inline json word_entry(const GenWord& w) {
  const auto ev = eval_word(w);
  return {{"word", to_string(w)},
          {"diagram", to_json(ev.diagram)},
          {"plain_loops", ev.plain_loops},
          {"blob_loops", ev.blob_loops},
          {"blob_merges", ev.blob_merges}};
}

inline int cmd_enumerate(const CommandConfig& cfg, std::ostream& out) {
  json diagrams = json::array();
  const int south = cfg.south < 0 ? cfg.n : cfg.south;
  if (cfg.blob) {
    if (south != cfg.n) throw std::invalid_argument("blob enumeration is for (n,n) diagrams");
    for (const auto& d : enumerate_blob(cfg.n)) diagrams.push_back(to_json(d));
  } else {
    for (const auto& d : enumerate_tl(cfg.n, south)) diagrams.push_back(to_json(d));
  }
  emit({{"n", cfg.n}, {"m", south}, {"blob", cfg.blob}, {"count", diagrams.size()}, {"diagrams", diagrams}}, cfg,
       out);
  return 0;
}

inline int cmd_compose(const CommandConfig& cfg, std::ostream& out) {
  const BlobPairing left = diagram_from_json(load_json(cfg.left));
  const BlobPairing right = diagram_from_json(load_json(cfg.right));
  const auto params = BlobParams<LaurentInt>::integral(cfg.m);
  const auto [res, scalar] = compose_blob(left, right, params);
  json j = {{"diagram", to_json(res.diagram)},
            {"plain_loops", res.plain_loops},
            {"blob_loops", res.blob_loops},
            {"blob_merges", res.blob_merges},
            {"scalar", to_json(scalar)},
            {"m", cfg.m}};
  emit(j, cfg, out);
  return 0;
}

inline int cmd_rmatrix(const CommandConfig& cfg, std::ostream& out) {
  Pairing d = Pairing::identity(0);
  if (!cfg.diagram.empty()) {
    const BlobPairing b = diagram_from_json(load_json(cfg.diagram));
    if (b.blob_count() != 0) throw std::invalid_argument("rmatrix takes a diagram without blobs");
    d = b.base();
  } else {
    const auto ev = eval_word(parse_word(cfg.word, cfg.n, convention_of(cfg.convention)));
    if (ev.diagram.blob_count() != 0) throw std::invalid_argument("rmatrix takes a Temperley-Lieb word");
    d = ev.diagram.base();
  }
  emit({{"diagram", to_json(d)}, {"matrix", to_json(r_matrix(d))}}, cfg, out);
  return 0;
}

inline int cmd_walkword(const CommandConfig& cfg, std::ostream& out) {
  std::vector<WalkPair> pairs;
  if (!cfg.pair.empty()) {
    const auto comma = cfg.pair.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("--pair expects a,b");
    pairs.emplace_back(Walk(cfg.pair.substr(0, comma)), Walk(cfg.pair.substr(comma + 1)));
  } else {
    pairs = enumerate_pairs(cfg.n);
  }
  json list = json::array();
  for (const auto& p : pairs) {
    json entry = word_entry(pair_word(p));
    entry["pair"] = to_json(p);
    list.push_back(entry);
  }
  emit({{"n", pairs.empty() ? cfg.n : pairs.front().n()}, {"pairs", list}}, cfg, out);
  return 0;
}

inline int cmd_lattice(const CommandConfig& cfg, std::ostream& out) {
  const auto pairs = enumerate_pairs(cfg.n);
  json nodes = json::array();
  for (const auto& p : pairs) nodes.push_back(to_json(p));
  json edges = json::array();
  for (const auto& [i, j] : hasse_edges(pairs)) edges.push_back({i, j});
  json order = json::array();
  for (const auto& p : linear_extension(pairs)) order.push_back(to_json(p));
  emit({{"n", cfg.n}, {"pairs", nodes}, {"edges", edges}, {"linear_extension", order}}, cfg, out);
  return 0;
}

inline int cmd_verify_tl(const CommandConfig& cfg, std::ostream& out) {
  const auto presentation = verify_presentation(tl_representation(cfg.n), cfg.n, quantum_integer(2));
  const auto triangular = triangularity_report(cfg.n, cfg.jobs);
  const auto cert = verify_tl_faithful(cfg.n, cfg.seed, cfg.jobs);
  const auto overlays = verify_mask_independence(cfg.n, cfg.trials, cfg.seed);
  json violated = json::array();
  for (const auto& v : presentation.violations) violated.push_back(v.relation);
  const json residuals = {{"presentation", {{"checked", presentation.checked}, {"violations", violated}}},
                          {"triangularity", to_json(triangular)},
                          {"mask_overlays", to_json(overlays)}};
  emit(to_json(cert, residuals), cfg, out);
  return cert.valid() && presentation.ok() && triangular.ok() && overlays.ok() ? 0 : 1;
}

inline json blob_report(const CommandConfig& cfg, const Representation<CycloLaurent>& rep, bool& ok) {
  const auto stated = BlobParams<LaurentInt>::integral(cfg.m);
  const auto params = embed(stated);
  const auto basis = blob_basis_words(cfg.n);
  const auto report = verify_blob_representation(rep, cfg.n, params, basis, cfg.jobs);
  json j = to_json(report, std::optional{stated});
  // Defining relations under the normalisation the structure check found.
  Representation<CycloLaurent> normalized = rep;
  if (report.normalization == -1) normalized.e = CycloLaurent(-1) * *rep.e;
  const auto presentation = verify_presentation(normalized, cfg.n, params.delta, std::optional{params});
  json violated = json::array();
  for (const auto& v : presentation.violations) violated.push_back(v.relation);
  j["presentation"] = {{"checked", presentation.checked}, {"violations", violated}};
  ok = report.ok() && presentation.ok();
  return j;
}

inline int cmd_verify_blob(const CommandConfig& cfg, std::ostream& out) {
  bool ok = false;
  json j = blob_report(cfg, rho0({cfg.n, cfg.m}), ok);
  j["m"] = cfg.m;
  j["seed"] = cfg.seed;
  j["tool_version"] = kToolVersion;
  emit(j, cfg, out);
  return ok ? 0 : 1;
}

inline int cmd_certify_rho0(const CommandConfig& cfg, std::ostream& out) {
  const auto rep = rho0({cfg.n, cfg.m});
  std::vector<std::pair<SparseMatrix<CycloLaurent>, SparseMatrix<CycloLaurent>>> factors;
  for (int i = 1; i <= cfg.n - 1; ++i) factors.push_back(rep.u_factors.at(i));
  const auto cert = certify_mirror(*rep.e, factors, cfg.n, blob_basis_words(cfg.n), cfg.seed);
  bool relations_ok = false;
  json residuals = blob_report(cfg, rep, relations_ok);
  json j = blobrep::to_json(cert, residuals);
  j["m"] = cfg.m;
  emit(j, cfg, out);
  return cert.valid() ? 0 : 1;
}

}  // namespace detail

/// Runs one subcommand; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Exact tensor-space representations of Temperley-Lieb and blob algebras", "blobrep"};
  app.require_subcommand(1);
  CommandConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "algebra size")->check(CLI::PositiveNumber);
    sub->add_option("--m", cfg.m, "blob parameter m");
    sub->add_option("--seed", cfg.seed, "seed for randomised checks");
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out, "write JSON here instead of stdout");
    sub->add_option("--convention", cfg.convention, "generator indices")
        ->check(CLI::IsMember({"standard", "shifted"}));
  };

  auto* enumerate = app.add_subcommand("enumerate", "list D(n,m) or D^b(n,n)");
  common(enumerate);
  enumerate->add_option("--south", cfg.south, "southern node count (default n)");
  enumerate->add_flag("--blob", cfg.blob, "blob diagrams");

  auto* compose = app.add_subcommand("compose", "compose two diagrams");
  common(compose);
  compose->add_option("left", cfg.left, "diagram JSON (file or inline)")->required();
  compose->add_option("right", cfg.right, "diagram JSON (file or inline)")->required();

  auto* rmatrix = app.add_subcommand("rmatrix", "tensor-space matrix of a diagram or word");
  common(rmatrix);
  auto* word_opt = rmatrix->add_option("--word", cfg.word, "word such as \"u1 u3\"");
  auto* diagram_opt = rmatrix->add_option("--diagram", cfg.diagram, "diagram JSON (file or inline)");
  word_opt->excludes(diagram_opt);

  auto* walkword = app.add_subcommand("walkword", "word map on walk pairs");
  common(walkword);
  walkword->add_option("--pair", cfg.pair, "a,b (e.g. 112,121)");

  auto* lattice = app.add_subcommand("lattice", "Hasse diagram of the walk-pair order");
  common(lattice);

  auto* verify_tl = app.add_subcommand("verify-tl", "Temperley-Lieb faithfulness certificate");
  common(verify_tl);
  verify_tl->add_option("--trials", cfg.trials, "random mask overlays")->check(CLI::PositiveNumber);

  auto* verify_blob = app.add_subcommand("verify-blob", "structure constants of rho_0");
  common(verify_blob);

  auto* certify = app.add_subcommand("certify-rho0", "mirror certificate for rho_0");
  common(certify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  if (*rmatrix && word_opt->count() == 0 && diagram_opt->count() == 0) {
    err << "usage error: rmatrix needs --word or --diagram\n" << rmatrix->help();
    return 2;
  }

  try {
    if (*enumerate) return detail::cmd_enumerate(cfg, out);
    if (*compose) return detail::cmd_compose(cfg, out);
    if (*rmatrix) return detail::cmd_rmatrix(cfg, out);
    if (*walkword) return detail::cmd_walkword(cfg, out);
    if (*lattice) return detail::cmd_lattice(cfg, out);
    if (*verify_tl) return detail::cmd_verify_tl(cfg, out);
    if (*verify_blob) return detail::cmd_verify_blob(cfg, out);
    if (*certify) return detail::cmd_certify_rho0(cfg, out);
  } catch (const json::exception& e) {
    err << "malformed input: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace blobrep::cli
