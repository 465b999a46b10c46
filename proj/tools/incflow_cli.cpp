// incflow — replay, generate and benchmark edge-insertion streams.
//
// Query outputs go to stdout, one line per 'q' event; statistics go to
// stderr so golden files stay byte-stable. Exit code 0 on success, 1 on
// parse/verification/runtime failures.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "incflow/incflow.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open stream file '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

incflow::WorkloadModel model_from_flags(const std::string& model, int n, std::int64_t m,
                                        int width, int depth, std::int64_t paths, int len) {
  if (model == "gnm") return incflow::GnmModel{n, m};
  if (model == "layered") return incflow::LayeredModel{width, depth};
  return incflow::ParallelPathsModel{paths, len};
}

int run_command(const std::string& stream_path, const std::string& strategy_name,
                double epsilon, const std::string& mu, bool verify,
                const std::string& stats_format) {
  incflow::Stream stream = incflow::parse_stream(read_input(stream_path));

  incflow::Strategy strategy;
  if (strategy_name == "approx") {
    std::optional<int> threshold;
    if (mu != "auto") {
      threshold = std::stoi(mu);
    } else if (stream_path == "-") {
      throw std::runtime_error("--mu auto needs a finite stream file; pass an explicit --mu "
                               "when reading from stdin");
    }
    strategy = incflow::ApproxStrategy{epsilon, threshold};
  } else if (strategy_name == "exact-bmf") {
    if (mu == "auto")
      throw std::runtime_error("strategy exact-bmf needs an explicit --mu cutoff");
    strategy = incflow::ExactBmfStrategy{std::stoi(mu)};
  } else {
    strategy = incflow::NaiveStaticStrategy{};
  }

  incflow::RunReport report = incflow::run_stream(stream, strategy, verify);
  for (const incflow::QueryOutput& out : report.outputs)
    std::cout << incflow::format_query_output(out) << "\n";

  std::cerr << (stats_format == "json" ? incflow::stats_report_json(report)
                                       : incflow::stats_report_text(report));
  return 0;
}

int bench_command(const std::vector<std::int64_t>& sizes, double epsilon, int len,
                  std::uint64_t seed, const std::string& stats_format) {
  nlohmann::json rows = nlohmann::json::array();
  double previous = 0.0;
  if (stats_format != "json")
    std::cout << "m mu insert_seconds us_per_insert ratio_vs_prev\n";
  for (std::int64_t size : sizes) {
    std::int64_t paths = (size + len - 1) / len;
    incflow::Stream stream =
        incflow::gen_workload(incflow::ParallelPathsModel{paths, len}, seed, 0);
    std::int64_t inserts = stream.insert_count();
    int threshold = std::clamp(incflow::suggested_threshold(inserts, epsilon), 1,
                               stream.vertex_count);
    incflow::RunReport report =
        incflow::run_stream(stream, incflow::ApproxStrategy{epsilon, threshold}, false);
    double per_insert = report.insert_seconds / static_cast<double>(inserts);
    double ratio = previous > 0.0 ? per_insert / previous : 0.0;
    previous = per_insert;
    if (stats_format == "json") {
      rows.push_back({{"m", inserts},
                      {"mu", threshold},
                      {"insert_seconds", report.insert_seconds},
                      {"us_per_insert", per_insert * 1e6},
                      {"ratio_vs_prev", ratio}});
    } else {
      char buf[160];
      std::snprintf(buf, sizeof(buf), "%lld %d %.6f %.3f %.3f\n",
                    static_cast<long long>(inserts), threshold, report.insert_seconds,
                    per_insert * 1e6, ratio);
      std::cout << buf;
    }
  }
  if (stats_format == "json") std::cout << rows.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"incremental max-flow stream replay"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "replay a stream file through a strategy");
  std::string stream_path;
  run->add_option("--stream", stream_path, "stream file path, or - for stdin")->required();
  std::string strategy{"approx"};
  run->add_option("--strategy", strategy, "approx | exact-bmf | naive-static")
      ->check(CLI::IsMember({"approx", "exact-bmf", "naive-static"}));
  double epsilon = 0.5;
  run->add_option("--epsilon", epsilon, "approximation parameter (approx strategy)");
  std::string mu{"auto"};
  run->add_option("--mu", mu, "threshold/cutoff, or auto (approx only)");
  bool verify = false;
  run->add_flag("--verify", verify, "check every query against the Edmonds-Karp oracle");
  std::string stats_format{"text"};
  run->add_option("--stats", stats_format, "statistics format on stderr")
      ->check(CLI::IsMember({"text", "json"}));

  // gen
  auto* gen = app.add_subcommand("gen", "generate a workload stream on stdout");
  std::string model{"gnm"};
  gen->add_option("--model", model, "gnm | layered | parallel-paths")
      ->check(CLI::IsMember({"gnm", "layered", "parallel-paths"}));
  int gen_n = 0;
  std::int64_t gen_m = 0;
  gen->add_option("--n", gen_n, "gnm vertex count");
  gen->add_option("--m", gen_m, "gnm edge count");
  int width = 0, depth = 0;
  gen->add_option("--width", width, "layered width");
  gen->add_option("--depth", depth, "layered depth");
  std::int64_t paths = 0;
  int len = 1;
  gen->add_option("--paths,--k", paths, "parallel-paths path count");
  gen->add_option("--len", len, "parallel-paths edges per path");
  std::uint64_t seed = 0;
  gen->add_option("--seed", seed, "rng seed (gnm model)");
  std::int64_t query_every = 1;
  gen->add_option("--query-every", query_every,
                  "query after every k-th insert; 0 = single trailing query");

  // bench
  auto* bench = app.add_subcommand("bench", "amortized insert-time scaling report");
  std::vector<std::int64_t> sizes{10000, 40000, 160000};
  bench->add_option("--sizes", sizes, "insert counts to benchmark")->delimiter(',');
  double bench_epsilon = 0.5;
  bench->add_option("--epsilon", bench_epsilon, "approximation parameter");
  int bench_len = 10;
  bench->add_option("--len", bench_len, "edges per generated path");
  std::uint64_t bench_seed = 0;
  bench->add_option("--seed", bench_seed, "rng seed");
  std::string bench_stats{"text"};
  bench->add_option("--stats", bench_stats, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed())
      return run_command(stream_path, strategy, epsilon, mu, verify, stats_format);
    if (gen->parsed()) {
      incflow::Stream stream = incflow::gen_workload(
          model_from_flags(model, gen_n, gen_m, width, depth, paths, len), seed, query_every);
      std::cout << incflow::serialize_stream(stream);
      return 0;
    }
    return bench_command(sizes, bench_epsilon, bench_len, bench_seed, bench_stats);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
}
