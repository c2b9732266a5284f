#pragma once

// JSON forms of ring elements, diagrams, words, walks, matrices and reports.
//
//   LaurentInt    {"<x exponent>": coefficient}
//   CycloLaurent  {"<x exponent>": [c0, c1, c2, c3]}
//   diagram       {"n", "m", "pairs": [["t1","b1"], ...], "blobs": [[...], ...]}
//   matrix        {"rows_log2", "cols_log2", "ring", "entries": [[row, col, coeff], ...]}
//
// All emitters produce canonical ordering so output is byte-stable.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "blobrep/diagrams.hpp"
#include "blobrep/faithful.hpp"
#include "blobrep/rings.hpp"
#include "blobrep/tensorrep.hpp"
#include "blobrep/walks.hpp"
#include "blobrep/words.hpp"

namespace blobrep {

using json = nlohmann::json;

template <class R>
struct RingName;
template <>
struct RingName<LaurentInt> {
  static constexpr const char* value = "laurent";
};
template <>
struct RingName<CycloLaurent> {
  static constexpr const char* value = "cyclo";
};

namespace detail {

inline int parse_exponent(const std::string& key) {
  std::size_t used = 0;
  int e = 0;
  try {
    e = std::stoi(key, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad exponent key: " + key);
  }
  if (used != key.size()) throw std::invalid_argument("bad exponent key: " + key);
  return e;
}

inline json coeff_to_json(const CheckedInt& c) { return c.value(); }
inline json coeff_to_json(const CycloInt& c) {
  return json::array({c.coeff(0).value(), c.coeff(1).value(), c.coeff(2).value(), c.coeff(3).value()});
}

template <class C>
C coeff_from_json(const json& j);

template <>
inline CheckedInt coeff_from_json<CheckedInt>(const json& j) {
  if (!j.is_number_integer()) throw std::invalid_argument("integer coefficient expected");
  return j.get<std::int64_t>();
}

template <>
inline CycloInt coeff_from_json<CycloInt>(const json& j) {
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("cyclotomic coefficient must be [c0,c1,c2,c3]");
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument("cyclotomic coefficient entries must be integers");
  }
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>(), j[2].get<std::int64_t>(), j[3].get<std::int64_t>()};
}

}  // namespace detail

template <class C>
json to_json(const Laurent<C>& p) {
  json out = json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = detail::coeff_to_json(c);
  return out;
}

template <class R>
R ring_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("ring element must be a JSON object");
  std::vector<typename R::Term> terms;
  for (const auto& [key, value] : j.items()) {
    terms.emplace_back(detail::parse_exponent(key), detail::coeff_from_json<typename R::Coeff>(value));
  }
  return R::from_terms(std::move(terms));
}

inline Node parse_node(const std::string& s) {
  if (s.size() < 2 || (s[0] != 't' && s[0] != 'b')) throw std::invalid_argument("bad node name: " + s);
  std::size_t used = 0;
  int idx = 0;
  try {
    idx = std::stoi(s.substr(1), &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad node name: " + s);
  }
  if (used != s.size() - 1) throw std::invalid_argument("bad node name: " + s);
  return {s[0] == 't' ? Side::top : Side::bottom, idx};
}

inline json to_json(const BlobPairing& d) {
  const Pairing& base = d.base();
  json pairs = json::array();
  for (const auto& [a, b] : base.pairs()) pairs.push_back({to_string(base.node(a)), to_string(base.node(b))});
  json blobs = json::array();
  for (int key : d.blobs()) blobs.push_back({to_string(base.node(key)), to_string(base.node(base.partner(key)))});
  return {{"n", base.north()}, {"m", base.south()}, {"pairs", pairs}, {"blobs", blobs}};
}

inline json to_json(const Pairing& d) { return to_json(BlobPairing(d)); }

inline BlobPairing diagram_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("m") || !j.contains("pairs")) {
    throw std::invalid_argument("diagram JSON needs n, m and pairs");
  }
  const int n = j.at("n").get<int>();
  const int m = j.at("m").get<int>();
  std::vector<std::pair<Node, Node>> pairs;
  for (const auto& p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 2) throw std::invalid_argument("each pair must list two nodes");
    pairs.emplace_back(parse_node(p[0].get<std::string>()), parse_node(p[1].get<std::string>()));
  }
  Pairing base = Pairing::from_pairs(n, m, pairs);
  std::vector<int> blobbed;
  if (j.contains("blobs")) {
    for (const auto& p : j.at("blobs")) {
      if (!p.is_array() || p.size() != 2) throw std::invalid_argument("each blob must name a pair");
      const int a = base.id(parse_node(p[0].get<std::string>()));
      const int b = base.id(parse_node(p[1].get<std::string>()));
      if (a < 0 || a >= base.node_count() || base.partner(a) != b) {
        throw std::invalid_argument("blob names a pair that is not in the diagram");
      }
      blobbed.push_back(a);
    }
  }
  return {std::move(base), blobbed};
}

inline json to_json(const GenWord& w) {
  json letters = json::array();
  for (const Letter& l : w.letters) letters.push_back(to_string(l));
  return letters;
}

/// Accepts the text form ("e u1 u-2") or the list form (["e","u1","u-2"]).
inline GenWord word_from_json(const json& j, int n, IndexConvention convention) {
  if (j.is_string()) return parse_word(j.get<std::string>(), n, convention);
  if (!j.is_array()) throw std::invalid_argument("word must be a string or a list of letters");
  GenWord w{{}, convention, n};
  for (const auto& t : j) w.letters.push_back(parse_letter(t.get<std::string>()));
  w.validate();
  return w;
}

template <class R>
json to_json(const SparseMatrix<R>& a) {
  json entries = json::array();
  for (std::uint32_t r = 0; r < a.rows(); ++r) {
    for (const auto& [c, v] : a.row(r)) entries.push_back({r, c, to_json(v)});
  }
  return {{"rows_log2", a.rows_log2()}, {"cols_log2", a.cols_log2()}, {"ring", RingName<R>::value},
          {"entries", entries}};
}

template <class R>
SparseMatrix<R> matrix_from_json(const json& j) {
  if (j.at("ring").get<std::string>() != RingName<R>::value) throw std::invalid_argument("matrix ring tag mismatch");
  std::vector<std::tuple<std::uint32_t, std::uint32_t, R>> triplets;
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3) throw std::invalid_argument("matrix entry must be [row, col, coeff]");
    triplets.emplace_back(e[0].get<std::uint32_t>(), e[1].get<std::uint32_t>(), ring_from_json<R>(e[2]));
  }
  return SparseMatrix<R>::from_triplets(j.at("rows_log2").get<int>(), j.at("cols_log2").get<int>(), triplets);
}

inline json to_json(const WalkPair& p) { return json::array({p.a.str(), p.b.str()}); }

inline json to_json(const TriangularityReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"pair", to_json(f.pair)},
                        {"row", sequence_string(f.row, r.n)},
                        {"col", sequence_string(f.col, r.n)},
                        {"clause", f.clause}});
  }
  return {{"n", r.n}, {"ok", r.ok()}, {"failures", failures}, {"non_walk_entries", r.non_walk_entries}};
}

inline json to_json(const MaskIndependenceResult& r) {
  return {{"n", r.n}, {"basis_size", r.basis_size}, {"trial_ranks", r.trial_ranks}, {"ok", r.ok()}};
}

template <class R>
json to_json(const StructureReport<R>& r, const std::optional<BlobParams<LaurentInt>>& stated = std::nullopt) {
  auto residual_list = [](const std::vector<PairResidual>& v) {
    json out = json::array();
    for (const auto& p : v) {
      out.push_back({{"left", to_json(p.left)}, {"right", to_json(p.right)}, {"nonzeros", p.residual_nonzeros}});
    }
    return out;
  };
  auto opt = [](const std::optional<R>& v) { return v ? to_json(*v) : json(nullptr); };
  json out = {{"n", r.n},
              {"pairs_checked", r.pairs_checked},
              {"failing_pairs", r.residuals.size()},
              {"residuals", residual_list(r.residuals)},
              {"normalization", r.normalization == 1    ? json("none")
                                : r.normalization == -1 ? json("e -> -e")
                                                        : json(nullptr)},
              {"ok", r.ok()},
              {"empirical", {{"delta", opt(r.empirical_delta)},
                             {"gamma", opt(r.empirical_gamma)},
                             {"delta_e", opt(r.empirical_delta_e)}}}};
  if (r.normalization != 1) {
    out["failing_pairs_negated_e"] = r.residuals_negated_e.size();
    out["residuals_negated_e"] = residual_list(r.residuals_negated_e);
  }
  if (stated) {
    out["stated"] = {{"gamma", to_json(stated->gamma)}, {"delta_e", to_json(stated->delta_e)}};
  }
  return out;
}

inline json to_json(const FaithfulnessCertificate& c, const json& residual_report = nullptr) {
  json checks = json::array();
  for (const auto& m : c.mask_checks) checks.push_back({{"name", m.name}, {"passed", m.passed}});
  return {{"n", c.n},
          {"basis_size", c.basis_size},
          {"rank", c.rank},
          {"method", c.method},
          {"mask_checks", checks},
          {"residual_report", residual_report},
          {"seed", c.seed},
          {"valid", c.valid()},
          {"tool_version", kToolVersion}};
}

}  // namespace blobrep
