#include "parklc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

#include "parklc/corpus.hpp"
#include "parklc/enumerators.hpp"
#include "parklc/matroid.hpp"
#include "parklc/parking.hpp"

namespace parklc {

namespace {

std::string first_difference(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  auto l = lhs.terms().begin();
  auto r = rhs.terms().begin();
  while (l != lhs.terms().end() || r != rhs.terms().end()) {
    Exponent e;
    if (r == rhs.terms().end() || (l != lhs.terms().end() && l->first < r->first)) {
      e = l->first;
    } else {
      e = r->first;
    }
    const Integer a = lhs.coefficient(e);
    const Integer b = rhs.coefficient(e);
    if (a != b) {
      return "exponent " + std::to_string(e) + ": lhs " + a.get_str() + " vs rhs " + b.get_str();
    }
    if (l != lhs.terms().end() && l->first == e) ++l;
    if (r != rhs.terms().end() && r->first == e) ++r;
  }
  return {};
}

std::string first_difference(const BivariatePolynomial& lhs, const BivariatePolynomial& rhs) {
  std::vector<BivariatePolynomial::Monomial> keys;
  for (const auto& [m, c] : lhs.terms()) keys.push_back(m);
  for (const auto& [m, c] : rhs.terms()) keys.push_back(m);
  std::sort(keys.begin(), keys.end());
  for (const auto& m : keys) {
    const Integer a = lhs.coefficient(m.first, m.second);
    const Integer b = rhs.coefficient(m.first, m.second);
    if (a != b) {
      return "x^" + std::to_string(m.first) + " y^" + std::to_string(m.second) + ": lhs " +
             a.get_str() + " vs rhs " + b.get_str();
    }
  }
  return {};
}

std::string complete_name(Vertex n) { return "complete:" + std::to_string(n); }

}  // namespace

CheckResult compare_identity(std::string check_name, std::string instance, const IntPolynomial& lhs,
                             const IntPolynomial& rhs) {
  CheckResult r{std::move(check_name), std::move(instance), lhs == rhs, to_json(lhs), to_json(rhs), {}};
  if (!r.passed) r.detail = first_difference(lhs, rhs);
  return r;
}

CheckResult compare_identity(std::string check_name, std::string instance,
                             const BivariatePolynomial& lhs, const BivariatePolynomial& rhs) {
  CheckResult r{std::move(check_name), std::move(instance), lhs == rhs, to_json(lhs), to_json(rhs), {}};
  if (!r.passed) r.detail = first_difference(lhs, rhs);
  return r;
}

CheckResult check_lc(std::string check_name, std::string instance, const IntPolynomial& f,
                     LcDemand demand) {
  const LcReport report = lc_diagnostics(f);
  CheckResult r{std::move(check_name), std::move(instance), false, to_json(f), std::nullopt, {}};
  if (demand == LcDemand::LogConcave) {
    r.passed = report.is_log_concave;
    if (!r.passed) r.detail = "log-concavity fails at exponent " + std::to_string(*report.first_violation);
  } else {
    r.passed = !report.has_internal_zeros;
    if (!r.passed) r.detail = "internal zero coefficient";
  }
  return r;
}

CheckResult check_eq_pftree(unsigned n, VerifyContext& ctx) {
  const IntPolynomial lhs = pf_sum_enumerator(n, ctx.threads());
  const Exponent top = static_cast<Exponent>(n * (n + 1) / 2);
  const IntPolynomial rhs = reciprocal_reverse(inversion_enumerator(n + 1, ctx.threads()), top);
  return compare_identity("eq_pftree", "n=" + std::to_string(n), lhs, rhs);
}

CheckResult check_tutte_inversion(Vertex n, VerifyContext& ctx) {
  const IntPolynomial lhs = inversion_enumerator(n, ctx.threads());
  const IntPolynomial rhs = specialize(ctx.engine().compute(complete_graph(n)), PinnedAxis::X);
  return compare_identity("tutte_inversion", "n=" + std::to_string(n), lhs, rhs);
}

CheckResult check_duality(const MultiGraph& g, const std::string& instance, VerifyContext& ctx) {
  const BivariatePolynomial lhs = ctx.engine().compute(g).swapped();
  const RankOracleMatroid dual = RankOracleMatroid::dual(RankOracleMatroid::graphic(g));
  const BivariatePolynomial rhs = tutte_by_rank_sum(dual, ctx.threads());
  return compare_identity("duality", instance, lhs, rhs);
}

CheckResult check_connected_identity(Vertex n, VerifyContext& ctx) {
  const IntPolynomial lhs = connected_edge_enumerator(n, ctx.threads());
  const IntPolynomial rhs = poly_mul(IntPolynomial::monomial(n - 1),
                                     shift_compose(inversion_enumerator(n, ctx.threads())));
  return compare_identity("connected_identity", "n=" + std::to_string(n), lhs, rhs);
}

CheckResult check_gpf_identity(const MultiGraph& g, const std::string& instance, VerifyContext& ctx) {
  if (g.has_loops()) throw std::invalid_argument("check_gpf_identity: graph has loops");
  if (!g.is_connected()) throw std::invalid_argument("check_gpf_identity: graph is disconnected");
  const IntPolynomial lhs = specialize(ctx.engine().compute(g), PinnedAxis::X);
  const IntPolynomial rhs =
      reciprocal_reverse(gpf_sum_enumerator(g, ctx.threads()), static_cast<Exponent>(g.edge_count()));
  return compare_identity("gpf_identity", instance, lhs, rhs);
}

std::vector<CheckResult> logconcavity_suite(const LcSuiteSpec& spec, VerifyContext& ctx) {
  std::vector<CheckResult> out;
  for (unsigned n = 1; n <= spec.max_pf_n; ++n) {
    const IntPolynomial p = pf_sum_enumerator(n, ctx.threads());
    const std::string inst = "n=" + std::to_string(n);
    out.push_back(check_lc("lc_parking", inst, p));
    out.push_back(check_lc("no_internal_zeros_parking", inst, p, LcDemand::NoInternalZeros));
  }
  for (Vertex n = 1; n <= spec.max_connected_n; ++n) {
    out.push_back(check_lc("lc_connected", "n=" + std::to_string(n),
                           connected_edge_enumerator(n, ctx.threads())));
  }
  for (Vertex n = 2; n <= spec.max_tree_n; ++n) {
    const IntPolynomial inv = inversion_enumerator(n, ctx.threads());
    const std::string inst = "n=" + std::to_string(n);
    out.push_back(check_lc("lc_inversion", inst, inv));
    out.push_back(check_lc("no_internal_zeros_inversion", inst, inv, LcDemand::NoInternalZeros));
    out.push_back(check_lc("lc_shifted_inversion", inst, shift_compose(inv)));
  }
  for (const NamedGraph& ng : spec.gparking_graphs) {
    out.push_back(check_lc("lc_gparking", ng.name, gpf_sum_enumerator(ng.graph, ctx.threads())));
  }
  for (const NamedGraph& ng : spec.matroid_graphs) {
    const BivariatePolynomial t = ctx.engine().compute(ng.graph);
    out.push_back(check_lc("lc_tutte_x1", "M(" + ng.name + ")", specialize(t, PinnedAxis::Y)));
    // T_{M^dual}(x, 1) = T_M(1, x)
    out.push_back(check_lc("lc_tutte_x1", "M(" + ng.name + ")^dual", specialize(t, PinnedAxis::X)));
  }
  return out;
}

namespace {

std::vector<NamedGraph> exhaustive(Vertex max_vertices, std::size_t max_edges, bool loops) {
  std::vector<NamedGraph> out;
  for (MultiGraph& g : connected_multigraphs(max_vertices, max_edges, loops)) {
    if (g.edge_count() == 0) continue;
    out.push_back({"multigraph " + describe(g), std::move(g)});
  }
  return out;
}

std::vector<NamedGraph> concat(std::vector<NamedGraph> a, const std::vector<NamedGraph>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

using Task = std::function<std::vector<CheckResult>(VerifyContext&)>;

}  // namespace

std::vector<CheckResult> run_suite(const SuiteOptions& options) {
  Vertex corpus_vertices = 0;
  std::size_t corpus_edges = 0;
  unsigned cap = options.max_n.value_or(100);
  if (options.name == "default") {
    corpus_vertices = 4;
    corpus_edges = 6;
  } else if (options.name == "quick") {
    corpus_vertices = 3;
    corpus_edges = 4;
    cap = std::min(cap, 5u);
  } else {
    throw std::invalid_argument("unknown suite '" + options.name + "' (expected default or quick)");
  }
  auto bound = [&](unsigned family_max) { return std::min(family_max, cap); };

  const Vertex max_complete = std::max<Vertex>(2, bound(6));
  const auto duality_graphs =
      concat(named_corpus(max_complete, true), exhaustive(corpus_vertices, corpus_edges, true));
  const auto gparking_graphs =
      concat(named_corpus(max_complete, false), exhaustive(corpus_vertices, corpus_edges, false));

  std::vector<Task> tasks;
  for (unsigned n = 1; n <= bound(7); ++n) {
    tasks.push_back([n](VerifyContext& c) { return std::vector{check_eq_pftree(n, c)}; });
  }
  for (Vertex n = 2; n <= bound(7); ++n) {
    tasks.push_back([n](VerifyContext& c) { return std::vector{check_tutte_inversion(n, c)}; });
  }
  for (Vertex n = 1; n <= bound(6); ++n) {
    tasks.push_back([n](VerifyContext& c) { return std::vector{check_connected_identity(n, c)}; });
  }
  for (const NamedGraph& ng : duality_graphs) {
    tasks.push_back([&ng](VerifyContext& c) { return std::vector{check_duality(ng.graph, ng.name, c)}; });
  }
  for (const NamedGraph& ng : gparking_graphs) {
    tasks.push_back(
        [&ng](VerifyContext& c) { return std::vector{check_gpf_identity(ng.graph, ng.name, c)}; });
  }

  LcSuiteSpec lc;
  lc.max_pf_n = bound(8);
  lc.max_connected_n = bound(6);
  lc.max_tree_n = std::max<Vertex>(2, bound(8));
  lc.gparking_graphs = gparking_graphs;
  lc.matroid_graphs = duality_graphs;
  for (Vertex n = max_complete + 1; n <= bound(7); ++n) {
    lc.matroid_graphs.push_back({complete_name(n), complete_graph(n)});
  }
  tasks.push_back([&lc](VerifyContext& c) { return logconcavity_suite(lc, c); });

  // Tasks share one context (and Tutte cache); enumerations inside a task run
  // single-threaded when tasks themselves are spread over workers.
  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, tasks.size()));
  VerifyContext ctx(workers > 1 ? 1 : options.threads);
  std::vector<std::vector<CheckResult>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) slots[k] = tasks[k](ctx);
  };
  if (workers == 1) {
    drain();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(drain);
  }

  std::vector<CheckResult> out;
  for (auto& slot : slots) {
    for (auto& r : slot) out.push_back(std::move(r));
  }
  return out;
}

nlohmann::ordered_json to_json(const CheckResult& r) {
  nlohmann::ordered_json j;
  j["check"] = r.check_name;
  j["instance"] = r.instance;
  j["passed"] = r.passed;
  j["lhs"] = r.lhs ? *r.lhs : nlohmann::ordered_json(nullptr);
  j["rhs"] = r.rhs ? *r.rhs : nlohmann::ordered_json(nullptr);
  j["detail"] = r.detail;
  return j;
}

nlohmann::ordered_json to_json(const std::vector<CheckResult>& results) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CheckResult& r : results) arr.push_back(to_json(r));
  return arr;
}

std::string render_table(const std::vector<CheckResult>& results) {
  std::size_t name_width = 5;
  for (const CheckResult& r : results) name_width = std::max(name_width, r.check_name.size());
  std::ostringstream out;
  std::size_t failed = 0;
  for (const CheckResult& r : results) {
    failed += !r.passed;
    out << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(name_width))
        << r.check_name << "  " << r.instance;
    if (!r.detail.empty()) out << "  [" << r.detail << ']';
    out << '\n';
  }
  out << results.size() - failed << '/' << results.size() << " checks passed\n";
  return out.str();
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace parklc
