// Acceptance gate: prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails.

#include "lincolor/lincolor.hpp"
#include "report.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace lincolor;

namespace {

// Pinned limits. All comparisons below are exact integer equalities; the only
// tolerances are wall-clock budgets.
constexpr double kCycleBudgetSeconds = 1.0;
constexpr double kSweepBudgetSeconds = 300.0;
constexpr std::size_t kSweepMaxN = 7;
constexpr std::size_t kVerifierMaxN = 5;
constexpr std::size_t kColoringsPerClass = 1000;
constexpr std::size_t kSmallSweepMaxN = 6;
constexpr std::size_t kThresholdSamples = 200;
constexpr std::size_t kThresholdMaxN = 9;
constexpr std::size_t kStronglyChordalSamples = 200;
constexpr std::size_t kStronglyChordalMaxN = 12;
constexpr std::size_t kSplitAttempts = 20000;
constexpr std::uint64_t kSeed = 20240601;

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.size() << " edges=[";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    os << (first ? "" : ",") << u << '-' << v;
    first = false;
  }
  os << ']';
  return os.str();
}

std::string describe(const VertexSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Vertex v : s) {
    os << (first ? "" : ",") << v;
    first = false;
  }
  os << '}';
  return os.str();
}

std::uint64_t derive_seed(std::uint64_t i) {
  std::seed_seq seq{kSeed, i};
  std::mt19937_64 rng(seq);
  return rng();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> extra;
  std::string failure;

  void fail(const std::string& what) {
    if (pass) failure = what;
    pass = false;
  }
};

Outcome criterion1() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t n = 5; n <= 12; ++n) {
    const auto k = linear_chromatic_number(gen_cycle(n));
    if (k != n) o.fail("lambda(C" + std::to_string(n) + ")=" + std::to_string(k));
  }
  const auto elapsed = seconds_since(start);
  if (elapsed >= kCycleBudgetSeconds) o.fail("took " + std::to_string(elapsed) + " s");
  o.detail = "lambda(C_n)=n for n=5..12 in " + std::to_string(elapsed) + " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto c4 = linear_chromatic_number(gen_cycle(4));
  const auto two_k2 = gen_2k2();
  const auto chi = brute_chromatic(two_k2);
  const auto report = cli::analyze(two_k2, {.id = "2K2"});
  const auto r_chi = report["numbers"]["chi"].get<std::size_t>();
  const auto r_lam = report["numbers"]["lambda_complement"].get<std::size_t>();
  if (c4 != 4) o.fail("lambda(C4)=" + std::to_string(c4));
  if (chi != 2) o.fail("chi(2K2)=" + std::to_string(chi));
  if (r_chi != 2 || r_lam != 4) o.fail("report shows chi=" + std::to_string(r_chi) + " lambda(co-G)=" + std::to_string(r_lam));
  o.detail = "lambda(C4)=" + std::to_string(c4) + ", report for 2K2: chi=" + std::to_string(r_chi) +
             " lambda(co-G)=" + std::to_string(r_lam);
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::size_t classes = 0;
  for (std::size_t n = 1; n <= kSweepMaxN; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      ++classes;
      const auto pipeline = linear_chromatic_number(g);
      if (brute_chromatic(g) > linear_chromatic_number(complement(g))) o.fail("chi > lambda(co-G) on " + describe(g));
      if (pipeline != brute_lambda(g)) o.fail("pipeline lambda != brute lambda on " + describe(g));
    }
  }
  const auto elapsed = seconds_since(start);
  if (elapsed >= kSweepBudgetSeconds) o.fail("took " + std::to_string(elapsed) + " s");
  o.detail = std::to_string(classes) + " classes (n<=7), chi<=lambda(co-G) and pipeline=brute, " +
             std::to_string(elapsed) + " s";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  std::size_t trials = 0, disagreements = 0;
  for (std::size_t n = 1; n <= kVerifierMaxN; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      for (std::size_t t = 0; t < kColoringsPerClass; ++t) {
        const auto k = 1 + rng() % n;
        std::vector<std::size_t> color(n);
        for (auto& c : color) c = 1 + rng() % k;
        ++trials;
        if (verify_linear_coloring(g, color).has_value() != verify_linear_coloring_cliquesets(g, color).has_value()) {
          ++disagreements;
          o.fail("disagreement on " + describe(g));
        }
      }
    }
  }
  o.detail = std::to_string(trials) + " colorings, " + std::to_string(disagreements) + " disagreements";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t classes = 0, colinear = 0;
  for (std::size_t n = 1; n <= kSmallSweepMaxN; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      ++classes;
      const bool a = is_colinear(g).holds;
      colinear += a;
      if (a != colinear_via_actual_edges(g).holds) o.fail("disagreement on " + describe(g));
    }
  }
  o.detail = std::to_string(classes) + " classes (n<=6), " + std::to_string(colinear) + " co-linear, both routes agree";
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (std::size_t i = 0; i < kThresholdSamples; ++i) {
    const auto t = gen_threshold(1 + i % kThresholdMaxN, derive_seed(i));
    if (!is_threshold(t) || !is_colinear(t)) o.fail("threshold " + describe(t));
    const auto q = gen_quasi_threshold(1 + i % kThresholdMaxN, derive_seed(kThresholdSamples + i));
    const auto co_q = complement(q);
    if (!is_quasi_threshold(q) || !is_colinear(co_q)) o.fail("quasi-threshold complement " + describe(co_q));
  }
  o.detail = std::to_string(kThresholdSamples) + " threshold graphs and " + std::to_string(kThresholdSamples) +
             " quasi-threshold complements are co-linear";
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto two_k2 = gen_2k2();
  const auto co_p6 = complement(gen_path(6));
  std::size_t colinear = 0, linear = 0;
  for (std::size_t n = 1; n <= kSmallSweepMaxN; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      if (is_colinear(g)) {
        ++colinear;
        if (!is_co_chordal(g)) o.fail("co-linear but not co-chordal: " + describe(g));
        if (find_induced(g, two_k2) || find_antihole(g) || find_induced(g, co_p6)) {
          o.fail("co-linear with a forbidden subgraph: " + describe(g));
        }
      }
      if (is_linear(g)) {
        ++linear;
        if (!is_chordal(g).chordal) o.fail("linear but not chordal: " + describe(g));
      }
    }
  }
  o.detail = std::to_string(colinear) + " co-linear and " + std::to_string(linear) + " linear classes (n<=6) checked";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t accepted = 0, attempts = 0;
  while (accepted < kStronglyChordalSamples) {
    const auto n = 1 + attempts % kStronglyChordalMaxN;
    const auto g = gen_strongly_chordal(n, derive_seed(1'000'000 + attempts));
    ++attempts;
    if (!is_p6_free(g) || !is_strongly_chordal(g).strongly_chordal) continue;
    ++accepted;
    const auto a = independence_number(g);
    const auto ord = strong_elimination_ordering(g);
    if (!verify_strong_peo(g, ord.sigma)) o.fail("ordering is not a strong PEO on " + describe(g));
    if (ord.independent.size() != a) o.fail("|I| != alpha on " + describe(g));
    const auto kappa = kappa_coloring(g, ord);
    if (kappa.k != a || verify_linear_coloring(g, kappa.color)) o.fail("kappa check failed on " + describe(g));
    if (linear_chromatic_number(g) != a) o.fail("lambda != alpha on " + describe(g));
  }
  o.detail = std::to_string(accepted) + " P6-free strongly chordal graphs (n<=12) from " + std::to_string(attempts) +
             " generated";
  return o;
}

Outcome criterion9() {
  Outcome o;
  for (std::size_t k = 3; k <= 5; ++k) {
    const auto sun = k_sun(k);
    const auto a = independence_number(sun);
    const auto lam = linear_chromatic_number(sun);
    const auto brute = brute_lambda(sun);
    if (!is_linear(sun) || lam != a || brute != a) o.fail(std::to_string(k) + "-sun");
    o.extra.push_back(std::to_string(k) + "-sun: alpha=" + std::to_string(a) + " lambda=" + std::to_string(lam) +
                      " brute lambda=" + std::to_string(brute));
  }
  o.detail = "k-suns k=3..5 are linear with lambda=alpha";
  return o;
}

bool isomorphic(const Graph& a, const Graph& b) {
  return a.size() == b.size() && a.edge_count() == b.edge_count() && canonical_code(a) == canonical_code(b);
}

Outcome criterion10() {
  Outcome o;
  std::size_t minimal = 0;
  for (std::size_t n = 1; n <= kSweepMaxN; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      if (is_linear(g)) continue;
      bool all_deletions_linear = true;
      for (Vertex v = 0; v < n && all_deletions_linear; ++v) {
        auto rest = VertexSet::full(n);
        rest.erase(v);
        all_deletions_linear = is_linear(induced_subgraph(g, rest).graph).holds;
      }
      if (!all_deletions_linear) continue;
      ++minimal;
      std::string kind;
      if (n >= 4 && isomorphic(g, gen_cycle(n))) {
        kind = "C" + std::to_string(n);
      } else if (isomorphic(g, gen_path(6))) {
        kind = "P6";
      } else if (auto sun = find_k_sun(g, n / 2)) {
        kind = "contains " + std::to_string(sun->k) + "-sun";
      }
      if (kind.empty()) o.fail("unclassified minimal non-linear graph " + describe(g));
      o.extra.push_back(describe(g) + " -> " + (kind.empty() ? "UNCLASSIFIED" : kind));
    }
  }
  o.detail = std::to_string(minimal) + " minimal non-linear graphs (n<=7), all classified";
  return o;
}

Outcome criterion11() {
  Outcome o;
  std::optional<std::string> found;
  auto record = [&](const Graph& g) {
    const auto r = is_colinear(g);
    if (r) return false;
    found = describe(g) + " witness A=" + describe(r.witness->subset) + " chi=" + std::to_string(r.witness->lhs) +
            " lambda(co-G_A)=" + std::to_string(r.witness->rhs);
    return true;
  };
  for (std::size_t n = 1; n <= kSweepMaxN && !found; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      if (is_split(g) && record(g)) break;
    }
  }
  std::size_t attempts = 0;
  for (; attempts < kSplitAttempts && !found; ++attempts) {
    const auto seed = derive_seed(2'000'000 + attempts);
    const std::size_t clique = 2 + seed % 5, independent = 2 + (seed >> 8) % 6;
    const auto g = gen_split(clique, independent, static_cast<unsigned>(20 + (seed >> 16) % 60), seed);
    if (!is_split(g)) {
      o.fail("generator produced a non-split graph " + describe(g));
      break;
    }
    // Cheap whole-graph test first; the hereditary sweep only runs on hits.
    if (brute_chromatic(g) != linear_chromatic_number(complement(g))) record(g);
  }
  if (!found) o.fail("no split non-co-linear graph found");
  o.detail = "split graph that is not co-linear found after " + std::to_string(attempts) + " random tries";
  if (found) o.extra.push_back(*found);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                       criterion5, criterion6, criterion7, criterion8,
                                                       criterion9, criterion10, criterion11};
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": " << o.detail << '\n';
    for (const auto& line : o.extra) std::cout << "    " << line << '\n';
    if (!o.pass) std::cout << "    first failure: " << o.failure << '\n';
  }
  std::cout << (all ? "all criteria pass" : "some criteria FAIL") << '\n';
  return all ? 0 : 1;
}
