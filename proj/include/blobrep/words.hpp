#pragma once

// Words in the generators e, U_i; their diagrammatic evaluation; presentation checks;
// the loop-free blob basis words B_n and the folding map f into T_{2n}.

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "blobrep/diagrams.hpp"
#include "blobrep/rings.hpp"
#include "blobrep/tensorrep.hpp"

namespace blobrep {

struct Letter {
  enum class Kind { e, u };
  Kind kind = Kind::u;
  int index = 0;

  static Letter E() { return {Kind::e, 0}; }
  static Letter U(int i) { return {Kind::u, i}; }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

inline std::string to_string(const Letter& l) {
  return l.kind == Letter::Kind::e ? std::string("e") : "u" + std::to_string(l.index);
}

/// A word read left to right; the empty word is 1. Left factors sit on top.
struct GenWord {
  std::vector<Letter> letters;
  IndexConvention convention = IndexConvention::standard;
  int n = 1;

  [[nodiscard]] bool empty() const { return letters.empty(); }
  [[nodiscard]] std::size_t size() const { return letters.size(); }

  [[nodiscard]] GenWord operator*(const GenWord& o) const {
    if (o.n != n || o.convention != convention) throw std::invalid_argument("concatenating words of different algebras");
    GenWord out = *this;
    out.letters.insert(out.letters.end(), o.letters.begin(), o.letters.end());
    return out;
  }

  void validate() const {
    for (const Letter& l : letters) {
      if (l.kind == Letter::Kind::e) {
        if (convention != IndexConvention::standard) throw std::invalid_argument("e is not a generator of T_{2n}");
      } else {
        absolute_position(l.index, n, convention);
      }
    }
  }

  friend bool operator==(const GenWord&, const GenWord&) = default;
};

/// Whitespace-separated letters, e.g. "e u1 u-2".
inline std::string to_string(const GenWord& w) {
  std::string s;
  for (const Letter& l : w.letters) {
    if (!s.empty()) s += ' ';
    s += to_string(l);
  }
  return s;
}

inline Letter parse_letter(const std::string& token) {
  if (token == "e" || token == "E") return Letter::E();
  if (token.size() >= 2 && (token[0] == 'u' || token[0] == 'U')) {
    std::size_t used = 0;
    int idx = 0;
    try {
      idx = std::stoi(token.substr(1), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed letter: " + token);
    }
    if (used != token.size() - 1) throw std::invalid_argument("malformed letter: " + token);
    return Letter::U(idx);
  }
  throw std::invalid_argument("malformed letter: " + token);
}

inline GenWord parse_word(const std::string& text, int n, IndexConvention convention = IndexConvention::standard) {
  GenWord w{{}, convention, n};
  std::istringstream in(text);
  std::string token;
  while (in >> token) w.letters.push_back(parse_letter(token));
  w.validate();
  return w;
}

struct WordEvaluation {
  BlobPairing diagram;
  int plain_loops = 0;
  int blob_loops = 0;
  int blob_merges = 0;

  [[nodiscard]] bool loop_free() const { return plain_loops == 0 && blob_loops == 0 && blob_merges == 0; }
};

inline BlobPairing letter_diagram(const Letter& l, int n, IndexConvention convention) {
  if (l.kind == Letter::Kind::e) return blob_e(n);
  return BlobPairing(generator_u(l.index, n, convention));
}

/// Left-to-right fold of the generator diagrams with loop and blob accounting.
inline WordEvaluation eval_word(const GenWord& w) {
  w.validate();
  const int strands = strand_count(w.n, w.convention);
  WordEvaluation acc{BlobPairing(Pairing::identity(strands)), 0, 0, 0};
  for (const Letter& l : w.letters) {
    auto step = compose_blob_counts(acc.diagram, letter_diagram(l, w.n, w.convention));
    acc.diagram = std::move(step.diagram);
    acc.plain_loops += step.plain_loops;
    acc.blob_loops += step.blob_loops;
    acc.blob_merges += step.blob_merges;
  }
  return acc;
}

/// The scalar picked up by evaluating a word: delta^plain gamma^blob_loops delta_e^merges.
template <class R>
R evaluation_scalar(const WordEvaluation& ev, const BlobParams<R>& params) {
  return params.delta.pow(ev.plain_loops) * params.gamma.pow(ev.blob_loops) * params.delta_e.pow(ev.blob_merges);
}

/// Product of generator images along the word; the empty word gives the identity.
template <class R>
SparseMatrix<R> evaluate_in(const Representation<R>& rep, const GenWord& w) {
  SparseMatrix<R> acc = SparseMatrix<R>::identity(rep.factors);
  for (const Letter& l : w.letters) {
    if (l.kind == Letter::Kind::e) {
      if (!rep.e) throw std::invalid_argument("representation has no image for e");
      acc = acc * *rep.e;
    } else {
      auto it = rep.u.find(l.index);
      if (it == rep.u.end()) throw std::invalid_argument("representation has no image for " + to_string(l));
      acc = acc * it->second;
    }
  }
  return acc;
}

template <class R>
struct RelationViolation {
  std::string relation;
  SparseMatrix<R> residual;
};

template <class R>
struct PresentationReport {
  int checked = 0;
  bool degenerate = false;  // every generator image is zero
  std::vector<RelationViolation<R>> violations;

  [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Checks U_i^2 = delta U_i, U_i U_{i+-1} U_i = U_i and U_i U_j = U_j U_i (|i-j| > 1)
/// on U_1..U_{n-1}. When `blob` is given and rep.e is present, also e^2 = delta_e e,
/// U_1 e U_1 = gamma U_1 and e U_i = U_i e (i >= 2).
template <class R>
PresentationReport<R> verify_presentation(const Representation<R>& rep, int n, const R& delta,
                                          const std::optional<BlobParams<R>>& blob = std::nullopt) {
  PresentationReport<R> report;
  auto check_shape = [&](const SparseMatrix<R>& a) {
    if (a.rows_log2() != rep.factors || a.cols_log2() != rep.factors) {
      throw std::invalid_argument("generator image has the wrong dimension");
    }
  };
  auto gen = [&](int i) -> const SparseMatrix<R>& {
    auto it = rep.u.find(i);
    if (it == rep.u.end()) throw std::invalid_argument("missing image of u" + std::to_string(i));
    check_shape(it->second);
    return it->second;
  };
  auto record = [&](std::string name, SparseMatrix<R> residual) {
    ++report.checked;
    if (!residual.is_zero()) report.violations.push_back({std::move(name), std::move(residual)});
  };
  bool all_zero = true;
  for (int i = 1; i <= n - 1; ++i) {
    const auto& ui = gen(i);
    all_zero = all_zero && ui.is_zero();
    record("u" + std::to_string(i) + "^2 = delta u" + std::to_string(i), ui * ui - delta * ui);
    for (int j = 1; j <= n - 1; ++j) {
      const auto& uj = gen(j);
      if (j == i + 1 || j == i - 1) {
        record("u" + std::to_string(i) + " u" + std::to_string(j) + " u" + std::to_string(i) + " = u" +
                   std::to_string(i),
               ui * uj * ui - ui);
      } else if (j > i + 1) {
        record("u" + std::to_string(i) + " u" + std::to_string(j) + " = u" + std::to_string(j) + " u" +
                   std::to_string(i),
               ui * uj - uj * ui);
      }
    }
  }
  if (blob && rep.e) {
    const auto& e = *rep.e;
    check_shape(e);
    all_zero = all_zero && e.is_zero();
    record("e^2 = delta_e e", e * e - blob->delta_e * e);
    if (n >= 2) record("u1 e u1 = gamma u1", gen(1) * e * gen(1) - blob->gamma * gen(1));
    for (int i = 2; i <= n - 1; ++i) record("e u" + std::to_string(i) + " = u" + std::to_string(i) + " e", e * gen(i) - gen(i) * e);
  }
  report.degenerate = all_zero;
  return report;
}

/// (2n)! / (n! n!)
inline std::uint64_t central_binomial(int n) {
  std::uint64_t c = 1;
  for (int k = 1; k <= n; ++k) c = c * static_cast<std::uint64_t>(n + k) / static_cast<std::uint64_t>(k);
  return c;
}

/// One loop-free word for every blob diagram of D^b(n,n).
using BasisWordTable = std::map<BlobPairing, GenWord>;

/// Breadth-first search from the empty word, extending on the right by e, U_1, ...,
/// U_{n-1} in that order and keeping only steps that discard no loop and merge no blob.
/// The first word reaching a diagram is kept.
inline BasisWordTable blob_basis_words(int n) {
  if (n < 1) throw std::invalid_argument("blob_basis_words: n must be >= 1");
  std::vector<Letter> generators{Letter::E()};
  for (int i = 1; i <= n - 1; ++i) generators.push_back(Letter::U(i));
  std::vector<BlobPairing> generator_diagrams;
  for (const Letter& g : generators) generator_diagrams.push_back(letter_diagram(g, n, IndexConvention::standard));

  BasisWordTable table;
  const BlobPairing start(Pairing::identity(n));
  table.emplace(start, GenWord{{}, IndexConvention::standard, n});
  std::deque<BlobPairing> frontier{start};
  while (!frontier.empty()) {
    const BlobPairing current = frontier.front();
    frontier.pop_front();
    const GenWord word = table.at(current);
    for (std::size_t g = 0; g < generators.size(); ++g) {
      auto step = compose_blob_counts(current, generator_diagrams[g]);
      if (step.plain_loops != 0 || step.blob_loops != 0 || step.blob_merges != 0) continue;
      if (table.contains(step.diagram)) continue;
      GenWord next = word;
      next.letters.push_back(generators[g]);
      table.emplace(step.diagram, std::move(next));
      frontier.push_back(std::move(step.diagram));
    }
  }
  if (table.size() != central_binomial(n)) {
    throw std::logic_error("blob_basis_words: search reached " + std::to_string(table.size()) + " of " +
                           std::to_string(central_binomial(n)) + " diagrams");
  }
  return table;
}

/// e -> U_0, U_i -> U_{-i} U_i, as a word of T_{2n} in shifted indices.
inline GenWord f_map(const GenWord& w) {
  if (w.convention != IndexConvention::standard) throw std::invalid_argument("f_map expects a blob word");
  GenWord out{{}, IndexConvention::shifted, w.n};
  for (const Letter& l : w.letters) {
    if (l.kind == Letter::Kind::e) {
      out.letters.push_back(Letter::U(0));
    } else {
      out.letters.push_back(Letter::U(-l.index));
      out.letters.push_back(Letter::U(l.index));
    }
  }
  out.validate();
  return out;
}

}  // namespace blobrep
