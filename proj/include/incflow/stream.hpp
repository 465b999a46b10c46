// Insertion/query stream files and workload generators.
//
// Format, one event per line, LF endings, 0-based decimal ids:
//
//   p inc <n> <s> <t>    header; required before any event, exactly one
//   a <u> <v>            insert directed edge u -> v
//   q                    query the maintained flow value
//   c <text>             comment; skipped by the parser
//
// Parsing is strict: unknown line kinds, extra tokens, CR line endings and
// out-of-range ids are all rejected with a line-numbered diagnostic.

#pragma once

#include <charconv>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "incflow/flow_network.hpp"

namespace incflow {

struct StreamEvent {
  enum class Kind { insert, query, comment };

  Kind kind = Kind::query;
  VertexId u = -1;
  VertexId v = -1;
  std::string text;  // comment payload

  friend bool operator==(const StreamEvent&, const StreamEvent&) = default;
};

struct Stream {
  int vertex_count = 0;
  VertexId source = -1;
  VertexId target = -1;
  std::vector<StreamEvent> events;
  std::vector<int> event_lines;  // parallel to events; 0 when not from a file

  std::int64_t insert_count() const {
    std::int64_t count = 0;
    for (const StreamEvent& ev : events)
      if (ev.kind == StreamEvent::Kind::insert) ++count;
    return count;
  }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

namespace detail {

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

inline std::int64_t parse_number(std::string_view token, int line, const char* what) {
  std::int64_t value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw ParseError(line, std::string("malformed ") + what + " '" + std::string(token) + "'");
  return value;
}

inline VertexId parse_vertex(std::string_view token, int n, int line, const char* what) {
  std::int64_t value = parse_number(token, line, what);
  if (value < 0 || value >= n)
    throw ParseError(line, std::string(what) + " " + std::to_string(value) +
                               " out of range [0, " + std::to_string(n) + ")");
  return static_cast<VertexId>(value);
}

}  // namespace detail

inline Stream parse_stream(std::string_view text) {
  Stream stream;
  bool header_seen = false;
  int line_no = 0;
  std::size_t pos = 0;

  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = eol == std::string_view::npos
                                ? text.substr(pos)
                                : text.substr(pos, eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (line.empty() && pos > text.size()) break;  // no trailing fragment

    if (line.find('\r') != std::string_view::npos)
      throw ParseError(line_no, "carriage return found; stream files use LF line endings");

    std::vector<std::string_view> tokens = detail::split_tokens(line);
    if (tokens.empty()) continue;

    if (tokens[0] == "c") continue;

    if (tokens[0] == "p") {
      if (header_seen) throw ParseError(line_no, "duplicate header");
      if (tokens.size() != 5 || tokens[1] != "inc")
        throw ParseError(line_no, "header must be 'p inc <n> <s> <t>'");
      std::int64_t n = detail::parse_number(tokens[2], line_no, "vertex count");
      if (n < 2 || n > (std::int64_t{1} << 30))
        throw ParseError(line_no, "vertex count must be in [2, 2^30]");
      stream.vertex_count = static_cast<int>(n);
      stream.source = detail::parse_vertex(tokens[3], stream.vertex_count, line_no, "source");
      stream.target = detail::parse_vertex(tokens[4], stream.vertex_count, line_no, "target");
      if (stream.source == stream.target)
        throw ParseError(line_no, "source and target must differ");
      header_seen = true;
      continue;
    }

    if (!header_seen) throw ParseError(line_no, "event before 'p inc' header");

    if (tokens[0] == "a") {
      if (tokens.size() != 3) throw ParseError(line_no, "insert must be 'a <u> <v>'");
      StreamEvent ev;
      ev.kind = StreamEvent::Kind::insert;
      ev.u = detail::parse_vertex(tokens[1], stream.vertex_count, line_no, "vertex id");
      ev.v = detail::parse_vertex(tokens[2], stream.vertex_count, line_no, "vertex id");
      stream.events.push_back(ev);
      stream.event_lines.push_back(line_no);
      continue;
    }

    if (tokens[0] == "q") {
      if (tokens.size() != 1) throw ParseError(line_no, "query must be a bare 'q'");
      stream.events.push_back(StreamEvent{StreamEvent::Kind::query, -1, -1, {}});
      stream.event_lines.push_back(line_no);
      continue;
    }

    throw ParseError(line_no, "unrecognized line kind '" + std::string(tokens[0]) + "'");
  }

  if (!header_seen) throw ParseError(std::max(1, line_no), "missing 'p inc <n> <s> <t>' header");
  return stream;
}

inline std::string serialize_stream(const Stream& stream) {
  std::string out = "p inc " + std::to_string(stream.vertex_count) + " " +
                    std::to_string(stream.source) + " " +
                    std::to_string(stream.target) + "\n";
  for (const StreamEvent& ev : stream.events) {
    switch (ev.kind) {
      case StreamEvent::Kind::insert:
        out += "a " + std::to_string(ev.u) + " " + std::to_string(ev.v) + "\n";
        break;
      case StreamEvent::Kind::query:
        out += "q\n";
        break;
      case StreamEvent::Kind::comment:
        out += ev.text.empty() ? "c\n" : "c " + ev.text + "\n";
        break;
    }
  }
  return out;
}

// Workload models. gnm draws edges uniformly (tails != heads, parallels
// allowed); layered is a width*depth grid of complete bipartite layers with
// max flow = width; parallel_paths is that many vertex-disjoint s-t paths of
// path_edges edges each, max flow = paths.
struct GnmModel {
  int vertex_count = 0;
  std::int64_t edges = 0;
};

struct LayeredModel {
  int width = 0;
  int depth = 0;
};

struct ParallelPathsModel {
  std::int64_t paths = 0;
  int path_edges = 1;
};

using WorkloadModel = std::variant<GnmModel, LayeredModel, ParallelPathsModel>;

namespace detail {

struct WorkloadEdges {
  int vertex_count = 0;
  VertexId source = 0;
  VertexId target = 0;
  std::string comment;
  std::vector<std::pair<VertexId, VertexId>> edges;
};

inline WorkloadEdges build_edges(const GnmModel& model, std::uint64_t seed) {
  if (model.vertex_count < 2) throw std::invalid_argument("gnm needs at least 2 vertices");
  if (model.edges < 0) throw std::invalid_argument("gnm edge count must be non-negative");
  WorkloadEdges out;
  out.vertex_count = model.vertex_count;
  out.source = 0;
  out.target = model.vertex_count - 1;
  out.comment = "gnm n=" + std::to_string(model.vertex_count) +
                " m=" + std::to_string(model.edges) + " seed=" + std::to_string(seed);
  std::mt19937_64 rng(seed);
  const auto n = static_cast<std::uint64_t>(model.vertex_count);
  out.edges.reserve(static_cast<std::size_t>(model.edges));
  for (std::int64_t i = 0; i < model.edges; ++i) {
    auto u = static_cast<VertexId>(rng() % n);
    auto v = static_cast<VertexId>(rng() % (n - 1));
    if (v >= u) ++v;  // uniform over ordered pairs with u != v
    out.edges.emplace_back(u, v);
  }
  return out;
}

inline WorkloadEdges build_edges(const LayeredModel& model, std::uint64_t) {
  if (model.width < 1 || model.depth < 1)
    throw std::invalid_argument("layered needs positive width and depth");
  WorkloadEdges out;
  const int w = model.width;
  const int d = model.depth;
  out.vertex_count = w * d + 2;
  out.source = 0;
  out.target = static_cast<VertexId>(w * d + 1);
  out.comment = "layered width=" + std::to_string(w) + " depth=" + std::to_string(d);
  auto cell = [w](int layer, int j) { return static_cast<VertexId>(1 + layer * w + j); };
  for (int j = 0; j < w; ++j) out.edges.emplace_back(out.source, cell(0, j));
  for (int layer = 0; layer + 1 < d; ++layer)
    for (int i = 0; i < w; ++i)
      for (int j = 0; j < w; ++j) out.edges.emplace_back(cell(layer, i), cell(layer + 1, j));
  for (int j = 0; j < w; ++j) out.edges.emplace_back(cell(d - 1, j), out.target);
  return out;
}

inline WorkloadEdges build_edges(const ParallelPathsModel& model, std::uint64_t) {
  if (model.paths < 1 || model.path_edges < 1)
    throw std::invalid_argument("parallel-paths needs positive path count and length");
  WorkloadEdges out;
  const std::int64_t k = model.paths;
  const int len = model.path_edges;
  const std::int64_t inner = static_cast<std::int64_t>(len - 1);
  out.vertex_count = static_cast<int>(k * inner + 2);
  out.source = 0;
  out.target = static_cast<VertexId>(k * inner + 1);
  out.comment = "parallel-paths k=" + std::to_string(k) + " len=" + std::to_string(len);
  for (std::int64_t i = 0; i < k; ++i) {
    VertexId prev = out.source;
    for (std::int64_t j = 0; j < inner; ++j) {
      auto mid = static_cast<VertexId>(1 + i * inner + j);
      out.edges.emplace_back(prev, mid);
      prev = mid;
    }
    out.edges.emplace_back(prev, out.target);
  }
  return out;
}

}  // namespace detail

// Deterministic for a fixed model and seed. query_every = 1 queries after
// every insert, k > 1 after every k-th insert (plus a final query), and 0
// emits a single trailing query.
inline Stream gen_workload(const WorkloadModel& model, std::uint64_t seed,
                           std::int64_t query_every = 1) {
  if (query_every < 0) throw std::invalid_argument("query cadence must be non-negative");
  detail::WorkloadEdges built =
      std::visit([&](const auto& m) { return detail::build_edges(m, seed); }, model);

  Stream stream;
  stream.vertex_count = built.vertex_count;
  stream.source = built.source;
  stream.target = built.target;
  stream.events.push_back(StreamEvent{StreamEvent::Kind::comment, -1, -1, built.comment});

  std::int64_t since_query = 0;
  bool last_was_query = false;
  for (const auto& [u, v] : built.edges) {
    stream.events.push_back(StreamEvent{StreamEvent::Kind::insert, u, v, {}});
    last_was_query = false;
    if (query_every > 0 && ++since_query == query_every) {
      stream.events.push_back(StreamEvent{StreamEvent::Kind::query, -1, -1, {}});
      since_query = 0;
      last_was_query = true;
    }
  }
  if (!last_was_query)
    stream.events.push_back(StreamEvent{StreamEvent::Kind::query, -1, -1, {}});
  stream.event_lines.assign(stream.events.size(), 0);
  return stream;
}

}  // namespace incflow
