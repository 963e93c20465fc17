#include "parklc/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <thread>

#include "CLI11.hpp"
#include "parklc/enumerators.hpp"
#include "parklc/matroid.hpp"
#include "parklc/parking.hpp"
#include "parklc/tutte.hpp"
#include "parklc/verify.hpp"

namespace parklc {

namespace {

enum class Format { Text, Json, Csv };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nlohmann::json read_json_file(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw UsageError(std::string("cannot open ") + what + " file '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("malformed ") + what + " file '" + path + "': " + e.what());
  }
}

MultiGraph load_graph(const std::string& spec) {
  if (auto named = named_graph(spec)) return *named;
  const nlohmann::json j = read_json_file(spec, "graph");
  try {
    return multigraph_from_json(j);
  } catch (const std::exception& e) {
    throw UsageError("malformed graph file '" + spec + "': " + e.what());
  }
}

void emit(std::ostream& out, Format format, const IntPolynomial& p) {
  switch (format) {
    case Format::Text: out << to_string(p) << '\n'; break;
    case Format::Json: out << to_json(p).dump() << '\n'; break;
    case Format::Csv: out << to_csv(p); break;
  }
}

void emit(std::ostream& out, Format format, const BivariatePolynomial& t) {
  switch (format) {
    case Format::Text: out << to_string(t) << '\n'; break;
    case Format::Json: out << to_json(t).dump() << '\n'; break;
    case Format::Csv: out << to_csv(t); break;
  }
}

void emit_value(std::ostream& out, Format format, const Integer& v) {
  switch (format) {
    case Format::Text: out << v.get_str() << '\n'; break;
    case Format::Json: out << nlohmann::ordered_json{{"value", v.get_str()}}.dump() << '\n'; break;
    case Format::Csv: out << "value\n" << v.get_str() << '\n'; break;
  }
}

Integer parse_integer_arg(const std::string& text) {
  Integer z;
  if (text.empty() || z.set_str(text, 10) != 0) throw UsageError("not an integer: '" + text + "'");
  return z;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact parking-function, tree-inversion and Tutte polynomial computations", "parklc"};
  app.require_subcommand(1);
  app.fallthrough();

  Format format = Format::Text;
  const std::map<std::string, Format> formats{
      {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
  app.add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--threads", threads, "Worker bound (default: available parallelism)")
      ->check(CLI::PositiveNumber);

  unsigned n = 0;
  auto* pf = app.add_subcommand("pf-poly", "P_n(x): parking functions of length N by entry sum");
  pf->add_option("N", n)->required();
  auto* inv = app.add_subcommand(
      "inv-poly", "I_N(x): labeled trees on N vertices {0..N-1} by inversions (P_n pairs with I_{n+1})");
  inv->add_option("N", n)->required();
  auto* conn = app.add_subcommand("connected-poly", "C_N(x): connected labeled graphs by edge count");
  conn->add_option("N", n)->required();

  std::string graph_spec;
  auto* gpf = app.add_subcommand("gpf", "P_G(x): G-parking functions by entry sum (root 0)");
  gpf->add_option("--graph", graph_spec, "Graph JSON file or built-in name")->required();

  std::vector<std::string> at;
  std::string method;
  auto* tutte = app.add_subcommand("tutte", "Tutte polynomial T_{M(G)}(x, y)");
  tutte->add_option("--graph", graph_spec, "Graph JSON file or built-in name")->required();
  tutte->add_option("--at", at, "Evaluate at integers X Y")->expected(2);
  tutte->add_option("--method", method, "delcon (default) or rank-sum")
      ->check(CLI::IsMember({"delcon", "rank-sum"}));

  auto* dual = app.add_subcommand("dual-tutte", "Tutte polynomial of the dual matroid M(G)^dual");
  dual->add_option("--graph", graph_spec, "Graph JSON file or built-in name")->required();
  dual->add_option("--method", method, "rank-sum (default) or swap")
      ->check(CLI::IsMember({"rank-sum", "swap"}));

  std::string suite = "default";
  std::optional<unsigned> max_n;
  auto* verify = app.add_subcommand("verify", "Run the identity and log-concavity checks");
  verify->add_option("--suite", suite, "default or quick");
  verify->add_option("--max-n", max_n, "Upper bound on n for every family");

  std::string poly_path;
  auto* diag = app.add_subcommand("diagnostics", "Log-concavity report for a polynomial JSON file");
  diag->add_option("--poly", poly_path, "Polynomial JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (pf->parsed()) {
      emit(out, format, pf_sum_enumerator(n, threads));
    } else if (inv->parsed()) {
      if (n < 1) throw UsageError("inv-poly needs N >= 1");
      emit(out, format, inversion_enumerator(n, threads));
    } else if (conn->parsed()) {
      if (n < 1) throw UsageError("connected-poly needs N >= 1");
      emit(out, format, connected_edge_enumerator(n, threads));
    } else if (gpf->parsed()) {
      const MultiGraph g = load_graph(graph_spec);
      if (g.has_loops() || !g.is_connected()) {
        throw UsageError("gpf needs a connected loopless graph");
      }
      emit(out, format, gpf_sum_enumerator(g, threads));
    } else if (tutte->parsed()) {
      const MultiGraph g = load_graph(graph_spec);
      const BivariatePolynomial t = method == "rank-sum"
                                        ? tutte_by_rank_sum(RankOracleMatroid::graphic(g), threads)
                                        : tutte_delcon(g, threads);
      if (at.empty()) {
        emit(out, format, t);
      } else {
        emit_value(out, format, t.evaluate(parse_integer_arg(at[0]), parse_integer_arg(at[1])));
      }
    } else if (dual->parsed()) {
      const MultiGraph g = load_graph(graph_spec);
      const BivariatePolynomial t =
          method == "swap"
              ? tutte_delcon(g, threads).swapped()
              : tutte_by_rank_sum(RankOracleMatroid::dual(RankOracleMatroid::graphic(g)), threads);
      emit(out, format, t);
    } else if (verify->parsed()) {
      const auto results = run_suite({suite, max_n, threads});
      switch (format) {
        case Format::Json: out << to_json(results).dump() << '\n'; break;
        case Format::Text: out << render_table(results); break;
        case Format::Csv:
          out << "check,instance,passed\n";
          for (const auto& r : results) {
            out << r.check_name << ",\"" << r.instance << "\"," << (r.passed ? "true" : "false")
                << '\n';
          }
          break;
      }
      return all_passed(results) ? kExitOk : kExitCheckFailed;
    } else if (diag->parsed()) {
      IntPolynomial p;
      try {
        p = int_polynomial_from_json(read_json_file(poly_path, "polynomial"));
      } catch (const std::invalid_argument& e) {
        throw UsageError("malformed polynomial file '" + poly_path + "': " + e.what());
      }
      const LcReport r = lc_diagnostics(p);
      switch (format) {
        case Format::Json: {
          nlohmann::ordered_json j = to_json(r);
          j["polynomial"] = to_json(p);
          out << j.dump() << '\n';
          break;
        }
        case Format::Text:
          out << "polynomial: " << to_string(p) << '\n'
              << "log_concave: " << (r.is_log_concave ? "yes" : "no") << '\n'
              << "unimodal: " << (r.is_unimodal ? "yes" : "no") << '\n'
              << "internal_zeros: " << (r.has_internal_zeros ? "yes" : "no") << '\n';
          if (r.first_violation) out << "first_violation: " << *r.first_violation << '\n';
          break;
        case Format::Csv:
          out << "is_log_concave,is_unimodal,has_internal_zeros,first_violation\n"
              << std::boolalpha << r.is_log_concave << ',' << r.is_unimodal << ','
              << r.has_internal_zeros << ',' << std::noboolalpha
              << (r.first_violation ? std::to_string(*r.first_violation) : "") << '\n';
          break;
      }
    }
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace parklc
