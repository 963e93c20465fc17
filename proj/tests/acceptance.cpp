// Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.
// Exit status is 0 iff every line passes.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "oracles.hpp"
#include "parklc/corpus.hpp"
#include "parklc/enumerators.hpp"
#include "parklc/matroid.hpp"
#include "parklc/parking.hpp"
#include "parklc/tutte.hpp"
#include "parklc/verify.hpp"

using namespace parklc;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      note << "[failed: " << what << "] ";
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double budget_seconds,
               const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (budget_seconds > 0) {
    std::ostringstream budget;
    budget << "wall time " << seconds << " s exceeds " << budget_seconds << " s";
    o.require(seconds < budget_seconds, budget.str());
  }
  if (!o.passed) ++failures;
  std::printf("%s  %2d  %-40s %8.3fs  %s\n", o.passed ? "PASS" : "FAIL", id, name.c_str(), seconds,
              o.note.str().c_str());
  std::fflush(stdout);
}

Integer power(long base, unsigned exp) {
  Integer r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

std::vector<CheckResult> only(const std::vector<CheckResult>& all, const std::string& name) {
  std::vector<CheckResult> out;
  for (const auto& r : all) {
    if (r.check_name == name) out.push_back(r);
  }
  return out;
}

bool has_instance(const std::vector<CheckResult>& rs, const std::string& instance) {
  for (const auto& r : rs) {
    if (r.instance == instance) return true;
  }
  return false;
}

std::size_t count_failed(const std::vector<CheckResult>& rs, Outcome& o) {
  std::size_t failed = 0;
  for (const auto& r : rs) {
    if (!r.passed) {
      ++failed;
      o.require(false, r.check_name + " " + r.instance + " " + r.detail);
    }
  }
  return failed;
}

// Interior indices i of the support range where a_i^2 == a_{i-1} a_{i+1}.
std::size_t tight_inequalities(const IntPolynomial& f) {
  if (f.term_count() < 3) return 0;
  std::size_t tight = 0;
  for (Exponent i = f.min_degree() + 1; i < f.degree(); ++i) {
    const Integer a = f.coefficient(i);
    tight += (a * a == f.coefficient(i - 1) * f.coefficient(i + 1));
  }
  return tight;
}

}  // namespace

int main() {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  std::printf("parklc acceptance (hardware threads: %u)\n", hw);

  criterion(1, "parking-function cardinality", 30, [&](Outcome& o) {
    const long expected[] = {1, 3, 16, 125, 1296, 16807, 262144};
    for (unsigned n = 1; n <= 7; ++n) {
      const Integer count = pf_sum_enumerator(n, hw).evaluate(1);
      o.require(count == expected[n - 1] && count == power(n + 1, n - 1),
                "n=" + std::to_string(n) + " gave " + count.get_str());
    }
    o.note << "n=1..7: 1 3 16 125 1296 16807 262144";
  });

  criterion(2, "sum enumerator vs tree inversions", 180, [&](Outcome& o) {
    VerifyContext ctx(hw);
    for (unsigned n = 1; n <= 7; ++n) {
      const CheckResult r = check_eq_pftree(n, ctx);
      o.require(r.passed, "n=" + std::to_string(n) + " " + r.detail);
    }
    // Both sides at n = 3 against the hand-derived polynomial.
    const IntPolynomial p3{0, 0, 0, 1, 3, 6, 6};
    o.require(pf_sum_enumerator(3) == p3, "P_3");
    o.require(reciprocal_reverse(inversion_enumerator(4), 6) == p3, "reversed I_4");
    o.note << "n=1..7";
  });

  criterion(3, "Tutte specialization vs inversions", 0, [&](Outcome& o) {
    VerifyContext ctx(hw);
    for (Vertex n = 2; n <= 7; ++n) {
      const CheckResult r = check_tutte_inversion(n, ctx);
      o.require(r.passed, "n=" + std::to_string(n) + " " + r.detail);
    }
    const IntPolynomial i4{6, 6, 3, 1};
    o.require(inversion_enumerator(4) == i4, "I_4");
    o.require(specialize(tutte_delcon(complete_graph(4)), PinnedAxis::X) == i4, "T_K4(1,y)");
    o.note << "n=2..7; I_4 = T_K4(1,y) = " << to_string(i4, "y");
  });

  criterion(4, "deletion-contraction vs rank sum", 120, [&](Outcome& o) {
    std::vector<MultiGraph> graphs = connected_multigraphs(5, 8, true);
    const std::size_t exhaustive = graphs.size();
    for (Vertex n = 3; n <= 6; ++n) graphs.push_back(complete_graph(n));
    std::vector<char> ok(graphs.size(), 0);
    std::atomic<std::size_t> next{0};
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < hw; ++w) {
        pool.emplace_back([&] {
          TutteEngine engine(1);
          for (std::size_t k = next++; k < graphs.size(); k = next++) {
            ok[k] = engine.compute(graphs[k]) ==
                    tutte_by_rank_sum(RankOracleMatroid::graphic(graphs[k]), 1);
          }
        });
      }
    }
    for (std::size_t k = 0; k < graphs.size(); ++k) {
      if (!ok[k]) {
        o.require(false, describe(graphs[k]));
      }
    }
    o.note << exhaustive << " multigraphs (<=5 vertices, <=8 edges, loops included) + K3..K6";
  });

  // Criteria 5-8 and 10 read the full default suite.
  std::vector<CheckResult> suite;
  double suite_seconds = 0;
  {
    const auto start = Clock::now();
    suite = run_suite({"default", std::nullopt, hw});
    suite_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  }

  criterion(5, "matroid duality on default corpus", 0, [&](Outcome& o) {
    const auto rs = only(suite, "duality");
    count_failed(rs, o);
    bool parallel = false, looped = false;
    for (const NamedGraph& ng : named_corpus(6, true)) {
      for (const Edge& e : ng.graph.edges()) {
        // A non-loop parallel class turns into a loop once one copy is contracted.
        parallel = parallel || (!e.is_loop() && ng.graph.multiplicity(e.u, e.v) > 1);
      }
      looped = looped || ng.graph.has_loops();
    }
    o.require(parallel && looped, "corpus lacks a parallel-edge or looped instance");
    o.require(has_instance(rs, "banana") && has_instance(rs, "complete:4"), "named instances");
    o.require(rs.size() > 100, "corpus size");
    o.note << rs.size() << " instances (parallel edges and loops present)";
  });

  criterion(6, "connected graphs vs shifted inversions", 0, [&](Outcome& o) {
    VerifyContext ctx(hw);
    for (Vertex n = 1; n <= 6; ++n) {
      const CheckResult r = check_connected_identity(n, ctx);
      o.require(r.passed, "n=" + std::to_string(n) + " " + r.detail);
    }
    const IntPolynomial c4{0, 0, 0, 16, 15, 6, 1};
    o.require(connected_edge_enumerator(4) == c4, "C_4 by enumeration");
    o.require(poly_mul(IntPolynomial::monomial(3), shift_compose(inversion_enumerator(4))) == c4,
              "C_4 from I_4");
    o.require(oracle::connected_by_recurrence(4) == c4, "C_4 by recurrence");
    o.note << "n=1..6; C_4 = " << to_string(c4);
  });

  criterion(7, "G-parking vs Tutte on default corpus", 0, [&](Outcome& o) {
    const auto rs = only(suite, "gpf_identity");
    count_failed(rs, o);
    for (const char* name : {"banana", "cycle:3", "cycle:4", "cycle:5", "cycle:6", "complete:3", "complete:4", "complete:5"}) {
      o.require(has_instance(rs, name), std::string("missing ") + name);
    }
    std::size_t exhaustive = 0;
    for (const MultiGraph& g : connected_multigraphs(4, 6, false)) exhaustive += g.edge_count() > 0;
    std::size_t seen = 0;
    for (const auto& r : rs) seen += r.instance.rfind("multigraph ", 0) == 0;
    o.require(seen == exhaustive, "exhaustive corpus incomplete");
    o.note << rs.size() << " instances incl. all " << exhaustive
           << " multigraphs on <=4 vertices with <=6 edges";
  });

  criterion(8, "log-concavity suite", 0, [&](Outcome& o) {
    std::size_t lc = 0;
    for (const char* name : {"lc_parking", "no_internal_zeros_parking", "lc_connected", "lc_inversion",
                             "no_internal_zeros_inversion", "lc_shifted_inversion", "lc_gparking",
                             "lc_tutte_x1"}) {
      const auto rs = only(suite, name);
      o.require(!rs.empty(), std::string("no ") + name + " checks");
      count_failed(rs, o);
      lc += rs.size();
    }
    for (unsigned n = 1; n <= 8; ++n) {
      o.require(has_instance(only(suite, "lc_parking"), "n=" + std::to_string(n)), "P_n coverage");
    }
    for (unsigned n = 1; n <= 6; ++n) {
      o.require(has_instance(only(suite, "lc_connected"), "n=" + std::to_string(n)), "C_n coverage");
    }
    o.require(only(suite, "lc_gparking").size() == only(suite, "gpf_identity").size(),
              "P_G coverage");
    o.require(has_instance(only(suite, "lc_tutte_x1"), "M(complete:5)"), "T_M(K5)(x,1)");

    // The non-strict inequality: P_3 must pass, and an exactly tight
    // sequence must pass while a one-unit perturbation fails.
    const IntPolynomial p3 = pf_sum_enumerator(3);
    o.require(lc_diagnostics(p3).is_log_concave, "P_3");
    o.require(lc_diagnostics(IntPolynomial{1, 6, 36}).is_log_concave, "tight 6^2 = 1*36");
    o.require(!lc_diagnostics(IntPolynomial{1, 6, 37}).is_log_concave, "perturbed tight case");
    std::size_t tight = 0;
    for (unsigned n = 1; n <= 8; ++n) tight += tight_inequalities(pf_sum_enumerator(n, hw));
    o.note << lc << " checks; P_3 = " << to_string(p3) << " passes; tight equalities in P_1..P_8: "
           << tight;
  });

  criterion(9, "deterministic reports", 0, [&](Outcome& o) {
    const std::string first = to_json(suite).dump();
    const std::string again = to_json(run_suite({"default", std::nullopt, hw})).dump();
    const std::string one = to_json(run_suite({"default", std::nullopt, 1})).dump();
    const std::string eight = to_json(run_suite({"default", std::nullopt, 8})).dump();
    o.require(first == again, "two runs differ");
    o.require(one == eight, "threads 1 vs 8 differ");
    o.require(first == one, "hardware thread count differs from 1");
    o.note << "byte-identical JSON (" << first.size() << " bytes) across runs and threads 1/8/"
           << hw;
  });

  criterion(10, "full default suite wall time", 0, [&](Outcome& o) {
    o.require(all_passed(suite), "suite has failures");
    o.require(suite_seconds < 600, "over 10 minutes");
    o.note << suite.size() << " checks in " << suite_seconds << " s with " << hw << " threads";
  });

  std::printf("%s: %d failing criteria\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
