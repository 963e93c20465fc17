#ifndef PARKLC_VERIFY_HPP
#define PARKLC_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "parklc/corpus.hpp"
#include "parklc/multigraph.hpp"
#include "parklc/polynomial.hpp"
#include "parklc/tutte.hpp"

namespace parklc {

struct CheckResult {
  std::string check_name;
  std::string instance;
  bool passed = false;
  std::optional<nlohmann::ordered_json> lhs;
  std::optional<nlohmann::ordered_json> rhs;
  std::string detail;
};

// Exact coefficient-by-coefficient comparison. detail names the first
// differing exponent when the sides disagree.
CheckResult compare_identity(std::string check_name, std::string instance, const IntPolynomial& lhs,
                             const IntPolynomial& rhs);
CheckResult compare_identity(std::string check_name, std::string instance,
                             const BivariatePolynomial& lhs, const BivariatePolynomial& rhs);

enum class LcDemand { LogConcave, NoInternalZeros };

CheckResult check_lc(std::string check_name, std::string instance, const IntPolynomial& f,
                     LcDemand demand = LcDemand::LogConcave);

// Shared state for a batch of checks: worker bound and one Tutte cache.
class VerifyContext {
 public:
  explicit VerifyContext(unsigned threads = 1) : threads_(threads), engine_(threads) {}
  unsigned threads() const { return threads_; }
  TutteEngine& engine() { return engine_; }

 private:
  unsigned threads_;
  TutteEngine engine_;
};

// P_n(x) against x^C(n+1,2) · I_{n+1}(1/x).
CheckResult check_eq_pftree(unsigned n, VerifyContext& ctx);
// I_n(y) against T_{M(K_n)}(1, y).
CheckResult check_tutte_inversion(Vertex n, VerifyContext& ctx);
// T_{M(G)}(y, x) from the engine against the rank-sum T of the dual matroid.
CheckResult check_duality(const MultiGraph& g, const std::string& instance, VerifyContext& ctx);
// C_n(x) against x^(n-1) · I_n(1 + x).
CheckResult check_connected_identity(Vertex n, VerifyContext& ctx);
// T_{M(G)}(1, y) against y^e(G) · P_G(1/y).
CheckResult check_gpf_identity(const MultiGraph& g, const std::string& instance, VerifyContext& ctx);

struct LcSuiteSpec {
  unsigned max_pf_n = 8;         // P_n for n = 1..max_pf_n
  Vertex max_connected_n = 6;    // C_n for n = 1..max
  Vertex max_tree_n = 8;         // I_n for n = 2..max (internal zeros, shifted form)
  std::vector<NamedGraph> gparking_graphs;  // P_G
  std::vector<NamedGraph> matroid_graphs;   // T(x,1) of M(G) and M(G)^dual
};

std::vector<CheckResult> logconcavity_suite(const LcSuiteSpec& spec, VerifyContext& ctx);

struct SuiteOptions {
  std::string name = "default";  // "default" or "quick"
  std::optional<unsigned> max_n;
  unsigned threads = 1;
};

// Throws std::invalid_argument for an unknown suite name. Results are ordered
// by a fixed task order, independent of thread count.
std::vector<CheckResult> run_suite(const SuiteOptions& options);

nlohmann::ordered_json to_json(const CheckResult& r);
nlohmann::ordered_json to_json(const std::vector<CheckResult>& results);
std::string render_table(const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace parklc

#endif  // PARKLC_VERIFY_HPP
