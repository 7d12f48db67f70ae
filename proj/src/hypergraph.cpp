#include "hskern/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

#include "hskern/key_list.hpp"

namespace hskern {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Hypergraph Hypergraph::from_edges(VertexId n, const std::vector<std::vector<VertexId>>& edges) {
  Hypergraph h;
  h.n_ = n;
  std::size_t total = 0;
  for (const auto& e : edges) total += e.size();
  h.vertices_.reserve(total);
  h.offsets_.reserve(edges.size() + 1);

  // Edge indices already stored, looked up by content.
  struct StoredHash {
    const Hypergraph* g;
    std::size_t operator()(std::size_t i) const noexcept { return KeyHash{}(g->edge(i)); }
  };
  struct StoredEqual {
    const Hypergraph* g;
    bool operator()(std::size_t a, std::size_t b) const noexcept { return KeyEqual{}(g->edge(a), g->edge(b)); }
  };
  std::unordered_set<std::size_t, StoredHash, StoredEqual> seen(edges.size() * 2 + 1, StoredHash{&h}, StoredEqual{&h});

  std::vector<VertexId> buf;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    buf = edges[i];
    if (buf.empty()) throw std::invalid_argument("edge " + std::to_string(i) + " is empty");
    std::sort(buf.begin(), buf.end());
    buf.erase(std::unique(buf.begin(), buf.end()), buf.end());
    if (buf.front() < 1 || buf.back() > n)
      throw std::invalid_argument("edge " + std::to_string(i) + " has a vertex outside 1.." + std::to_string(n));
    h.vertices_.insert(h.vertices_.end(), buf.begin(), buf.end());
    h.offsets_.push_back(h.vertices_.size());
    if (!seen.insert(h.edge_count() - 1).second) {
      h.vertices_.resize(h.offsets_[h.offsets_.size() - 2]);
      h.offsets_.pop_back();
      continue;
    }
    h.d_ = std::max(h.d_, buf.size());
  }
  return h;
}

Hypergraph Hypergraph::subgraph(std::span<const EdgeIndex> indices) const {
  Hypergraph g;
  g.n_ = n_;
  g.offsets_.reserve(indices.size() + 1);
  for (EdgeIndex i : indices) {
    EdgeView e = edge(i);
    g.vertices_.insert(g.vertices_.end(), e.begin(), e.end());
    g.offsets_.push_back(g.vertices_.size());
    g.d_ = std::max(g.d_, e.size());
  }
  return g;
}

std::size_t Hypergraph::live_vertex_count() const {
  std::vector<bool> live(static_cast<std::size_t>(n_) + 1, false);
  std::size_t count = 0;
  for (VertexId v : vertices_) {
    if (!live[v]) {
      live[v] = true;
      ++count;
    }
  }
  return count;
}

std::vector<std::vector<VertexId>> Hypergraph::edge_lists() const {
  std::vector<std::vector<VertexId>> out;
  out.reserve(edge_count());
  for (std::size_t i = 0; i < edge_count(); ++i) out.emplace_back(edge(i).begin(), edge(i).end());
  return out;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

template <typename T>
T parse_number(std::string_view token, std::size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  return value;
}

}  // namespace

Hypergraph parse(std::string_view text, const ParseOptions& options) {
  bool have_header = false;
  VertexId n = 0;
  std::size_t m = 0;
  std::vector<std::vector<VertexId>> edges;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_ws(line);
    if (!tokens.empty() && tokens.front().front() == 'c') continue;

    if (!have_header) {
      if (tokens.empty()) continue;
      if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != "hs")
        throw ParseError(line_no, "expected header 'p hs <n> <m>'");
      n = parse_number<VertexId>(tokens[2], line_no);
      m = parse_number<std::size_t>(tokens[3], line_no);
      have_header = true;
      edges.reserve(m);
      continue;
    }

    if (edges.size() == m) {
      if (tokens.empty()) continue;
      throw ParseError(line_no, "more than " + std::to_string(m) + " edge lines");
    }
    if (tokens.empty()) throw ParseError(line_no, "empty hyperedge");
    std::vector<VertexId> e;
    e.reserve(tokens.size());
    for (auto t : tokens) {
      VertexId v = parse_number<VertexId>(t, line_no);
      if (v < 1 || v > n) throw ParseError(line_no, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
      e.push_back(v);
    }
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (options.max_cardinality && e.size() > *options.max_cardinality)
      throw ParseError(line_no, "edge cardinality " + std::to_string(e.size()) + " exceeds maximum " +
                                    std::to_string(*options.max_cardinality));
    edges.push_back(std::move(e));
  }

  if (!have_header) throw ParseError(line_no, "missing header 'p hs <n> <m>'");
  if (edges.size() != m)
    throw ParseError(line_no, "expected " + std::to_string(m) + " edge lines, found " + std::to_string(edges.size()));
  return Hypergraph::from_edges(n, edges);
}

std::string serialize(const Hypergraph& h) {
  std::string out = "p hs " + std::to_string(h.vertex_count()) + " " + std::to_string(h.edge_count()) + "\n";
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    EdgeView e = h.edge(i);
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(e[j]);
    }
    out += '\n';
  }
  return out;
}

bool is_subset(KeyView small, KeyView large) noexcept {
  return std::includes(large.begin(), large.end(), small.begin(), small.end());
}

std::size_t intersection_size(KeyView a, KeyView b) noexcept {
  std::size_t i = 0, j = 0, count = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

bool hits(KeyView edge, const std::vector<bool>& chosen) noexcept {
  return std::ranges::any_of(edge, [&](VertexId v) { return chosen[v]; });
}

}  // namespace hskern
