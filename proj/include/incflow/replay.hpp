// Stream replay: drive a strategy over a parsed stream, optionally checking
// every query against the Edmonds-Karp oracle, and account the work done.
//
// Query output format (one line per 'q'): the strategy's value, and with
// verification enabled " <exact> <ratio>" where ratio = exact/value printed
// to six decimals (1.000000 when both are zero).

#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "incflow/approx_maxflow.hpp"
#include "incflow/bounded_maxflow.hpp"
#include "incflow/flow_network.hpp"
#include "incflow/static_maxflow.hpp"
#include "incflow/stream.hpp"

namespace incflow {

struct ApproxStrategy {
  double epsilon = 0.5;
  std::optional<int> threshold;  // nullopt: suggested_threshold clamped to [1, n]
};

struct ExactBmfStrategy {
  int cutoff = 0;
};

struct NaiveStaticStrategy {};  // recompute with the static solver per query

using Strategy = std::variant<ApproxStrategy, ExactBmfStrategy, NaiveStaticStrategy>;

struct QueryOutput {
  int value = 0;
  std::optional<int> exact;  // oracle value, set when verification ran
};

class VerificationError : public std::runtime_error {
 public:
  VerificationError(std::int64_t event_index, int line, const std::string& message)
      : std::runtime_error("event " + std::to_string(event_index) +
                           (line > 0 ? " (line " + std::to_string(line) + ")" : "") +
                           ": " + message),
        event_index_(event_index),
        line_(line) {}

  std::int64_t event_index() const { return event_index_; }
  int line() const { return line_; }

 private:
  std::int64_t event_index_;
  int line_;
};

struct RunReport {
  std::string strategy;  // "approx" | "exact-bmf" | "naive-static"
  double epsilon = 0.0;  // approx only
  int threshold = -1;    // approx threshold / exact-bmf cutoff
  bool verified = false;

  std::int64_t inserts = 0;
  std::int64_t queries = 0;
  std::vector<QueryOutput> outputs;

  FrameworkStats framework{};                 // approx
  BoundedMaxFlow::WorkCounters bounded_work{};  // exact-bmf
  std::int64_t bounded_accepted = 0;          // exact-bmf: inserts before saturation
  std::int64_t bounded_dropped = 0;           // exact-bmf: inserts ignored after
  std::int64_t static_solver_scans = 0;       // naive-static queries / approx rebuilds

  double insert_seconds = 0.0;
  double query_seconds = 0.0;
  double verify_seconds = 0.0;
};

inline std::string format_query_output(const QueryOutput& out) {
  std::string line = std::to_string(out.value);
  if (out.exact.has_value()) {
    double ratio = out.value == 0
                       ? 1.0
                       : static_cast<double>(*out.exact) / static_cast<double>(out.value);
    char buf[64];
    std::snprintf(buf, sizeof(buf), " %d %.6f", *out.exact, ratio);
    line += buf;
  }
  return line;
}

namespace detail {

class StopWatch {
 public:
  void start() { begin_ = std::chrono::steady_clock::now(); }
  double stop() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - begin_).count();
  }

 private:
  std::chrono::steady_clock::time_point begin_;
};

inline int resolve_auto_threshold(const Stream& stream, double epsilon) {
  std::int64_t inserts = std::max<std::int64_t>(1, stream.insert_count());
  int suggested = suggested_threshold(inserts, epsilon);
  return std::clamp(suggested, 1, stream.vertex_count);
}

}  // namespace detail

inline RunReport run_stream(const Stream& stream, const Strategy& strategy, bool verify) {
  RunReport report;
  report.verified = verify;

  std::variant<std::monostate, ApproxMaxFlow, BoundedMaxFlow, FlowNetwork> state;
  if (const auto* approx = std::get_if<ApproxStrategy>(&strategy)) {
    report.strategy = "approx";
    report.epsilon = approx->epsilon;
    report.threshold = approx->threshold.has_value()
                           ? *approx->threshold
                           : detail::resolve_auto_threshold(stream, approx->epsilon);
    state.emplace<ApproxMaxFlow>(stream.vertex_count, stream.source, stream.target,
                                 approx->epsilon, report.threshold);
  } else if (const auto* bmf = std::get_if<ExactBmfStrategy>(&strategy)) {
    report.strategy = "exact-bmf";
    report.threshold = bmf->cutoff;
    state.emplace<BoundedMaxFlow>(stream.vertex_count, stream.source, stream.target,
                                  bmf->cutoff);
  } else {
    report.strategy = "naive-static";
    state.emplace<FlowNetwork>(stream.vertex_count, stream.source, stream.target);
  }

  // Shadow graph holding every insert, for the oracle. The bounded strategy
  // drops post-saturation edges, so it cannot serve as the oracle's input.
  std::optional<FlowNetwork> shadow;
  if (verify) shadow.emplace(stream.vertex_count, stream.source, stream.target);

  detail::StopWatch watch;
  for (std::size_t index = 0; index < stream.events.size(); ++index) {
    const StreamEvent& ev = stream.events[index];
    int line = index < stream.event_lines.size() ? stream.event_lines[index] : 0;

    if (ev.kind == StreamEvent::Kind::comment) continue;

    if (ev.kind == StreamEvent::Kind::insert) {
      ++report.inserts;
      watch.start();
      if (auto* approx = std::get_if<ApproxMaxFlow>(&state)) {
        approx->insert(ev.u, ev.v);
      } else if (auto* bmf = std::get_if<BoundedMaxFlow>(&state)) {
        if (bmf->saturated())
          ++report.bounded_dropped;
        else
          ++report.bounded_accepted;
        bmf->insert(ev.u, ev.v);
      } else {
        std::get<FlowNetwork>(state).insert_edge(ev.u, ev.v);
      }
      report.insert_seconds += watch.stop();
      if (shadow) shadow->insert_edge(ev.u, ev.v);
      continue;
    }

    ++report.queries;
    watch.start();
    QueryOutput out;
    if (auto* approx = std::get_if<ApproxMaxFlow>(&state)) {
      out.value = approx->value();
    } else if (auto* bmf = std::get_if<BoundedMaxFlow>(&state)) {
      out.value = bmf->value();
    } else {
      FlowResult solved = dinic_max_flow(std::get<FlowNetwork>(state), stream.source,
                                         stream.target);
      report.static_solver_scans += solved.arc_scans;
      out.value = solved.value;
    }
    report.query_seconds += watch.stop();

    if (verify) {
      watch.start();
      int exact = edmonds_karp(*shadow, stream.source, stream.target).value;
      out.exact = exact;
      report.verify_seconds += watch.stop();
      if (const auto* approx_strategy = std::get_if<ApproxStrategy>(&strategy)) {
        if (out.value > exact)
          throw VerificationError(static_cast<std::int64_t>(index), line,
                                  "estimate " + std::to_string(out.value) +
                                      " exceeds exact value " + std::to_string(exact));
        if (out.value == 0 && exact != 0)
          throw VerificationError(static_cast<std::int64_t>(index), line,
                                  "estimate 0 against exact value " + std::to_string(exact));
        if (out.value > 0 &&
            static_cast<double>(exact) >
                (1.0 + approx_strategy->epsilon) * static_cast<double>(out.value) + 1e-9)
          throw VerificationError(static_cast<std::int64_t>(index), line,
                                  "exact value " + std::to_string(exact) +
                                      " outside (1+epsilon) * " + std::to_string(out.value));
      } else if (const auto* bmf_strategy = std::get_if<ExactBmfStrategy>(&strategy)) {
        bool saturated_report = out.value == bmf_strategy->cutoff + 1;
        if (saturated_report ? exact < out.value : exact != out.value)
          throw VerificationError(static_cast<std::int64_t>(index), line,
                                  "bounded value " + std::to_string(out.value) +
                                      " disagrees with exact value " + std::to_string(exact));
      } else if (exact != out.value) {
        throw VerificationError(static_cast<std::int64_t>(index), line,
                                "static value " + std::to_string(out.value) +
                                    " disagrees with oracle " + std::to_string(exact));
      }
    }
    report.outputs.push_back(out);
  }

  if (auto* approx = std::get_if<ApproxMaxFlow>(&state)) {
    report.framework = approx->stats();
    report.static_solver_scans = report.framework.static_arc_scans;
    report.bounded_work = report.framework.bounded;
  } else if (auto* bmf = std::get_if<BoundedMaxFlow>(&state)) {
    report.bounded_work = bmf->work();
  }
  return report;
}

namespace detail {

inline double per_insert(std::int64_t total, std::int64_t inserts) {
  return inserts == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(inserts);
}

}  // namespace detail

inline std::string stats_report_text(const RunReport& r) {
  auto line = [](const std::string& key, const std::string& value) {
    return key + ": " + value + "\n";
  };
  auto num = [](double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return std::string(buf);
  };

  std::string out;
  out += line("strategy", r.strategy);
  if (r.strategy == "approx") {
    out += line("epsilon", num(r.epsilon));
    out += line("mu", std::to_string(r.threshold));
  } else if (r.strategy == "exact-bmf") {
    out += line("mu", std::to_string(r.threshold));
  }
  out += line("inserts", std::to_string(r.inserts));
  out += line("queries", std::to_string(r.queries));
  out += line("verify", r.verified ? "on" : "off");
  if (r.strategy == "approx") {
    out += line("forwarded", std::to_string(r.framework.forwarded));
    out += line("stale", std::to_string(r.framework.stale));
    out += line("rebuilds", std::to_string(r.framework.rebuilds));
    out += line("bmf queries", std::to_string(r.framework.bounded_queries));
  }
  if (r.strategy == "exact-bmf") {
    out += line("accepted", std::to_string(r.bounded_accepted));
    out += line("dropped", std::to_string(r.bounded_dropped));
  }
  if (r.strategy != "naive-static") {
    out += line("bmf arc scans", std::to_string(r.bounded_work.residual_arc_scans));
    out += line("bmf tree rebuilds", std::to_string(r.bounded_work.tree_rebuilds));
    out += line("amortized bmf scans per insert",
                num(detail::per_insert(r.bounded_work.residual_arc_scans, r.inserts)));
  }
  out += line("static solver arc scans", std::to_string(r.static_solver_scans));
  out += line("amortized static scans per insert",
              num(detail::per_insert(r.static_solver_scans, r.inserts)));
  out += line("insert wall seconds", num(r.insert_seconds));
  out += line("query wall seconds", num(r.query_seconds));
  if (r.verified) out += line("verify wall seconds", num(r.verify_seconds));
  return out;
}

inline std::string stats_report_json(const RunReport& r) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["strategy"] = r.strategy;
  if (r.strategy == "approx") {
    j["epsilon"] = r.epsilon;
    j["mu"] = r.threshold;
  } else if (r.strategy == "exact-bmf") {
    j["mu"] = r.threshold;
  }
  j["events"] = {{"inserts", r.inserts}, {"queries", r.queries}};
  j["verify"] = {{"enabled", r.verified}};
  if (r.strategy == "approx") {
    j["framework"] = {{"forwarded", r.framework.forwarded},
                      {"stale", r.framework.stale},
                      {"rebuilds", r.framework.rebuilds},
                      {"bmf_queries", r.framework.bounded_queries}};
  }
  if (r.strategy == "exact-bmf") {
    j["bmf_inserts"] = {{"accepted", r.bounded_accepted}, {"dropped", r.bounded_dropped}};
  }
  if (r.strategy != "naive-static") {
    j["bmf"] = {{"arc_scans", r.bounded_work.residual_arc_scans},
                {"tree_rebuilds", r.bounded_work.tree_rebuilds}};
  }
  j["static"] = {{"arc_scans", r.static_solver_scans}};
  j["amortized"] = {
      {"bmf_scans_per_insert", detail::per_insert(r.bounded_work.residual_arc_scans, r.inserts)},
      {"static_scans_per_insert", detail::per_insert(r.static_solver_scans, r.inserts)}};
  j["time"] = {{"insert_seconds", r.insert_seconds},
               {"query_seconds", r.query_seconds},
               {"verify_seconds", r.verify_seconds}};
  return j.dump(2) + "\n";
}

}  // namespace incflow
