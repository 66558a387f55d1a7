#include "lks/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace lks {

namespace {

[[noreturn]] void fail_at(size_t offset, const std::string& what) {
  throw InputError("byte " + std::to_string(offset) + ": " + what);
}

// Integer tokens with their byte offsets.
struct Tokens {
  std::vector<std::pair<long long, size_t>> items;
  explicit Tokens(const std::string& text) {
    size_t i = 0;
    while (i < text.size()) {
      unsigned char c = static_cast<unsigned char>(text[i]);
      if (std::isspace(c) || c == ',') {
        ++i;
        continue;
      }
      if (c == '#') {
        while (i < text.size() && text[i] != '\n') ++i;
        continue;
      }
      size_t start = i;
      if (text[i] == '-' || text[i] == '+') ++i;
      size_t digits = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == digits || (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ','))
        fail_at(start, "expected an integer");
      try {
        items.emplace_back(std::stoll(text.substr(start, i - start)), start);
      } catch (const std::exception&) {
        fail_at(start, "integer out of range");
      }
    }
  }
};

}  // namespace

Graph parse_graph6(const std::string& raw) {
  std::string s = raw;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  size_t p = 0;
  const std::string header = ">>graph6<<";
  if (s.compare(0, header.size(), header) == 0) p = header.size();
  auto byte = [&](size_t i) -> int {
    if (i >= s.size()) fail_at(i, "truncated graph6");
    int c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) fail_at(i, "byte outside the graph6 range 63..126");
    return c - 63;
  };
  long long n = 0;
  if (p >= s.size()) fail_at(p, "empty graph6");
  if (byte(p) < 63) {
    n = byte(p);
    p += 1;
  } else if (p + 1 < s.size() && byte(p + 1) < 63) {
    for (int i = 1; i <= 3; ++i) n = n * 64 + byte(p + i);
    p += 4;
  } else {
    for (int i = 2; i <= 7; ++i) n = n * 64 + byte(p + i);
    p += 8;
  }
  if (n > 1000000) fail_at(p, "graph6 order too large");
  long long bits = n * (n - 1) / 2;
  size_t need = static_cast<size_t>((bits + 5) / 6);
  if (s.size() < p + need) fail_at(s.size(), "truncated graph6 (need " + std::to_string(need) + " data bytes)");
  if (s.size() > p + need) fail_at(p + need, "trailing bytes after graph6 data");
  Graph g(static_cast<int>(n));
  long long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int b = byte(p + k / 6);
      if (b >> (5 - k % 6) & 1) g.add_edge(i, j);
    }
  if (bits % 6 != 0) {
    int last = byte(p + need - 1);
    if (last & ((1 << (6 - bits % 6)) - 1)) fail_at(p + need - 1, "nonzero graph6 padding bits");
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  long long n = g.n();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n < 258048) {
    out.push_back(126);
    for (int sh = 12; sh >= 0; sh -= 6) out.push_back(static_cast<char>(((n >> sh) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int sh = 30; sh >= 0; sh -= 6) out.push_back(static_cast<char>(((n >> sh) & 63) + 63));
  }
  int acc = 0, used = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = acc << 1 | (g.has_edge(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = used = 0;
      }
    }
  if (used) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

Graph parse_edgelist(const std::string& text) {
  Tokens tk(text);
  if (tk.items.size() < 2) fail_at(text.size(), "edge list needs an 'n m' header");
  long long n = tk.items[0].first, m = tk.items[1].first;
  if (n < 0 || n > 10000000) fail_at(tk.items[0].second, "bad vertex count");
  if (m < 0) fail_at(tk.items[1].second, "bad edge count");
  if (static_cast<long long>(tk.items.size()) != 2 + 2 * m)
    fail_at(text.size(), "expected " + std::to_string(m) + " edges, found " + std::to_string((tk.items.size() - 2) / 2) +
                             (tk.items.size() % 2 ? " and a dangling endpoint" : ""));
  Graph g(static_cast<int>(n));
  for (long long e = 0; e < m; ++e) {
    auto [u, uo] = tk.items[2 + 2 * e];
    auto [v, vo] = tk.items[3 + 2 * e];
    if (u < 0 || u >= n) fail_at(uo, "endpoint out of range");
    if (v < 0 || v >= n) fail_at(vo, "endpoint out of range");
    if (u == v) fail_at(uo, "loop");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

std::string to_edgelist(const Graph& g) {
  std::ostringstream os;
  os << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Graph parse_graph(const std::string& text, GraphFormat fmt) {
  if (fmt == GraphFormat::Auto) {
    size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    // graph6 bytes are 63..126, so a leading digit means an edge list.
    bool numeric = i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]));
    fmt = numeric ? GraphFormat::EdgeList : GraphFormat::Graph6;
  }
  if (fmt == GraphFormat::EdgeList) return parse_edgelist(text);
  size_t a = text.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) fail_at(0, "empty input");
  size_t b = text.find_last_not_of(" \t\r\n");
  std::string line = text.substr(a, b - a + 1);
  if (line.find('\n') != std::string::npos) fail_at(a + line.find('\n'), "more than one graph6 line");
  try {
    return parse_graph6(line);
  } catch (const InputError& e) {
    if (a == 0) throw;
    throw InputError(std::string(e.what()) + " (after " + std::to_string(a) + " leading whitespace bytes)");
  }
}

std::vector<Graph> parse_graph6_stream(const std::string& text) {
  std::vector<Graph> out;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) {
      try {
        out.push_back(parse_graph6(line));
      } catch (const InputError& e) {
        throw InputError("line at byte " + std::to_string(start) + ": " + e.what());
      }
    }
    start = end + 1;
  }
  return out;
}

RootedTree parse_tree(const std::string& text, std::optional<int> root) {
  Tokens tk(text);
  if (root) {
    Graph g = parse_edgelist(text);
    if (*root < 0 || *root >= g.n()) throw InputError("root out of range");
    return RootedTree::from_graph(g, *root);
  }
  if (tk.items.size() < 2) fail_at(text.size(), "tree file needs an 'n root' header");
  long long n = tk.items[0].first, r = tk.items[1].first;
  if (n < 1) fail_at(tk.items[0].second, "bad tree order");
  if (r < 0 || r >= n) fail_at(tk.items[1].second, "root out of range");
  if (static_cast<long long>(tk.items.size()) != 2 + n)
    fail_at(text.size(), "expected " + std::to_string(n) + " parent entries");
  std::vector<int> par(n);
  for (long long v = 0; v < n; ++v) {
    long long p = tk.items[2 + v].first;
    if (p < -1 || p >= n) fail_at(tk.items[2 + v].second, "parent out of range");
    par[v] = static_cast<int>(p);
  }
  if (par[r] != -1) fail_at(tk.items[2 + r].second, "root must have parent -1");
  return RootedTree(par);
}

std::string to_tree_text(const RootedTree& t) {
  std::ostringstream os;
  os << t.n() << ' ' << t.root() << '\n';
  for (int v = 0; v < t.n(); ++v) os << t.parent(v) << (v + 1 == t.n() ? '\n' : ' ');
  return os.str();
}

VertexSet parse_vertex_list(const std::string& text) {
  Tokens tk(text);
  VertexSet out;
  for (auto [v, off] : tk.items) {
    if (v < 0 || v > 100000000) fail_at(off, "bad vertex id");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace lks
