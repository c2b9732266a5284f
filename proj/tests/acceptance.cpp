// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "blobrep/blobrep.hpp"

using namespace blobrep;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& ex) {
    o = {false, std::string("exception: ") + ex.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::ostringstream line;
  line.precision(2);
  line << std::fixed << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << title << " (" << secs << "s)";
  if (!o.detail.empty()) line << ": " << o.detail;
  std::cout << line.str() << std::endl;
}

// Shared between criteria 5, 6 and 12.
std::map<int, bool> triangular_ok;
std::map<int, std::size_t> tl_rank;
std::map<int, std::size_t> tl_size;

}  // namespace

int main() {
  criterion(1, "R-matrices satisfy the TL relations, n = 2..8", [] {
    Outcome o;
    for (int n = 2; n <= 8; ++n) {
      const auto report = verify_presentation(tl_representation(n), n, quantum_integer(2));
      o.detail += "n=" + std::to_string(n) + ":" + std::to_string(report.checked) + " ";
      if (!report.ok() || report.degenerate) {
        o.pass = false;
        o.detail += "(violated) ";
      }
    }
    return o;
  });

  criterion(2, "R(D)R(D') = [2]^loops R(D o D') for all D, D' in D(n,n), n <= 5", [] {
    Outcome o;
    for (int n = 1; n <= 5; ++n) {
      const auto all = enumerate_tl(n, n);
      std::vector<SparseMatrix<LaurentInt>> images;
      for (const auto& d : all) images.push_back(r_matrix(d));
      std::size_t bad = 0;
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = 0; j < all.size(); ++j) {
          const auto c = compose_tl(all[i], all[j]);
          if (images[i] * images[j] != quantum_integer(2).pow(c.plain_loops) * r_matrix(c.diagram)) ++bad;
        }
      }
      o.detail += "n=" + std::to_string(n) + ":" + std::to_string(all.size() * all.size()) + " pairs ";
      if (bad != 0) {
        o.pass = false;
        o.detail += "(" + std::to_string(bad) + " failing) ";
      }
    }
    return o;
  });

  criterion(3, "masks of R(D) agree under two independent formal parameters, D in D(4,4)", [] {
    Outcome o;
    const BiLaurent y = BiLaurent::x_power(1);
    const BiLaurent xy = y * embed_inner(LaurentInt::x_power(1));
    std::size_t count = 0;
    for (const auto& d : enumerate_tl(4, 4)) {
      const auto base = mask(r_matrix(d));
      if (!mask_eq(base, mask(r_matrix<BiLaurent>(d, y))) || !mask_eq(base, mask(r_matrix<BiLaurent>(d, xy)))) {
        o.pass = false;
      }
      ++count;
    }
    o.detail = std::to_string(count) + " diagrams";
    return o;
  });

  criterion(4, "pair_word is loop-free and bijective onto D(n,n), n <= 6", [] {
    Outcome o;
    for (int n = 1; n <= 6; ++n) {
      std::set<Pairing> seen;
      bool loop_free = true;
      const auto pairs = enumerate_pairs(n);
      for (const auto& p : pairs) {
        const auto ev = eval_word(pair_word(p));
        loop_free = loop_free && ev.loop_free();
        seen.insert(ev.diagram.base());
      }
      const auto all = enumerate_tl(n, n);
      const bool bijective = seen == std::set<Pairing>(all.begin(), all.end()) && pairs.size() == all.size();
      if (!loop_free || !bijective) o.pass = false;
      o.detail += "n=" + std::to_string(n) + ":" + std::to_string(pairs.size()) + " ";
    }
    return o;
  });

  criterion(5, "triangularity holds for n <= 6; anchor <1212|R(U1 U3)|1212> = q^2", [] {
    Outcome o;
    for (int n = 1; n <= 6; ++n) {
      const auto report = triangularity_report(n);
      triangular_ok[n] = report.ok();
      if (!report.ok()) o.pass = false;
      o.detail += "n=" + std::to_string(n) + ":" + std::to_string(report.failures.size()) + " failures ";
    }
    const auto m = word_matrix(WalkPair(Walk("1212"), Walk("1212")));
    const auto anchor = m.at(sequence_index("1212"), sequence_index("1212"));
    if (anchor != q_power(2)) o.pass = false;
    o.detail += "anchor=" + anchor.str();
    return o;
  });

  criterion(6, "exact rank of {R(w(p))} equals |D(n,n)|, n = 2..5", [] {
    Outcome o;
    for (int n = 2; n <= 5; ++n) {
      const auto cert = verify_tl_faithful(n);
      tl_rank[n] = cert.rank;
      tl_size[n] = cert.basis_size;
      if (!cert.valid()) o.pass = false;
      o.detail += "n=" + std::to_string(n) + ":" + std::to_string(cert.rank) + "/" + std::to_string(cert.basis_size) + " ";
    }
    return o;
  });

  criterion(7, "25 seeded random overlays keep full rank, n <= 4", [] {
    Outcome o;
    for (int n = 2; n <= 4; ++n) {
      const auto r = verify_mask_independence(n, 25, 0x5eed + static_cast<std::uint64_t>(n));
      if (!r.ok()) o.pass = false;
      std::size_t low = r.basis_size;
      for (std::size_t k : r.trial_ranks) low = std::min(low, k);
      o.detail += "n=" + std::to_string(n) + ":min " + std::to_string(low) + "/" + std::to_string(r.basis_size) + " ";
    }
    return o;
  });

  criterion(8, "|D^b(n,n)| = (2n)!/(n!n!), n = 1..5", [] {
    Outcome o;
    for (int n = 1; n <= 5; ++n) {
      const auto count = enumerate_blob(n).size();
      if (count != central_binomial(n)) o.pass = false;
      o.detail += std::to_string(count) + " ";
    }
    return o;
  });

  criterion(9, "loop-free blob words exist (n <= 5); folded images are distinct and symmetric (n <= 4)", [] {
    Outcome o;
    for (int n = 1; n <= 5; ++n) {
      const auto table = blob_basis_words(n);
      std::set<Pairing> folded;
      bool symmetric = true;
      for (const auto& [d, w] : table) {
        const auto ev = eval_word(w);
        if (!ev.loop_free() || ev.diagram != d) o.pass = false;
        if (n <= 4) {
          const Pairing f = eval_word(f_map(w)).diagram.base();
          symmetric = symmetric && reflect(f) == f;
          folded.insert(f);
        }
      }
      if (table.size() != central_binomial(n)) o.pass = false;
      if (n <= 4 && (!symmetric || folded.size() != central_binomial(n))) o.pass = false;
      o.detail += "n=" + std::to_string(n) + ":" + std::to_string(table.size());
      if (n <= 4) o.detail += "/f " + std::to_string(folded.size());
      o.detail += " ";
    }
    return o;
  });

  auto mirror_run = [](int n, int m) {
    const auto rep = rho0({n, m});
    std::vector<std::pair<SparseMatrix<CycloLaurent>, SparseMatrix<CycloLaurent>>> factors;
    for (int i = 1; i < n; ++i) factors.push_back(rep.u_factors.at(i));
    return certify_mirror(*rep.e, factors, n, blob_basis_words(n));
  };

  criterion(10, "rho_0 passes mask checks and has full rank on B_n, n <= 4, m in {1,2,3}", [&] {
    Outcome o;
    for (int n = 1; n <= 3; ++n) {
      for (int m = 1; m <= 3; ++m) {
        const auto cert = mirror_run(n, m);
        if (!cert.valid()) o.pass = false;
        o.detail += "(" + std::to_string(n) + "," + std::to_string(m) + "):" + std::to_string(cert.rank) + "/" +
                    std::to_string(cert.basis_size) + (cert.masks_ok() ? "" : " mask-fail") + " ";
      }
    }
    // n = 4: 70 basis words, matrices of side 256
    for (int m = 1; m <= 3; ++m) {
      const auto cert = mirror_run(4, m);
      o.detail += "stretch (4," + std::to_string(m) + "):" + std::to_string(cert.rank) + "/" +
                  std::to_string(cert.basis_size) + " ";
      if (!cert.valid()) o.pass = false;
    }
    return o;
  });

  criterion(11, "rho_0 structure constants exact after at most one sign normalization, n <= 3, m in {1,2,3}", [] {
    Outcome o;
    for (int n = 1; n <= 3; ++n) {
      for (int m = 1; m <= 3; ++m) {
        const auto stated = BlobParams<>::integral(m);
        const auto report = verify_blob_representation(rho0({n, m}), n, embed(stated), blob_basis_words(n));
        if (!report.ok()) o.pass = false;
        o.detail += "\n    n=" + std::to_string(n) + " m=" + std::to_string(m) + " pairs=" +
                    std::to_string(report.pairs_checked) + " normalization=" +
                    (report.normalization == 1 ? "none" : report.normalization == -1 ? "e->-e" : "FAILED");
        o.detail += " delta_e found " + (report.empirical_delta_e ? report.empirical_delta_e->str() : "n/a") +
                    " stated q^m-q^-m=" + stated.delta_e.str();
        if (n >= 2) {
          o.detail += "; gamma found " + (report.empirical_gamma ? report.empirical_gamma->str() : "n/a (image is 0)") +
                      " stated q^(m-1)-q^(1-m)=" + stated.gamma.str();
        }
      }
    }
    return o;
  });

  criterion(12, "triangularity and direct rank agree, n = 2..5", [] {
    Outcome o;
    for (int n = 2; n <= 5; ++n) {
      if (!triangular_ok.contains(n) || !tl_rank.contains(n)) {
        o.pass = false;
        o.detail += "n=" + std::to_string(n) + ":missing ";
        continue;
      }
      const bool full = tl_rank[n] == tl_size[n];
      if (triangular_ok[n] != full) o.pass = false;
      o.detail += "n=" + std::to_string(n) + ":" + (triangular_ok[n] ? "tri" : "no-tri") + "/" + (full ? "full" : "deficient") + " ";
    }
    return o;
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
