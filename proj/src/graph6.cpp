#include "topoindex/graph6.hpp"

#include <sstream>
#include <stdexcept>

namespace topo {

namespace {

constexpr int kMaxOrder = 258047;  // largest order of the 4-byte size form

size_t header_bytes(int n) { return n <= 62 ? 1 : 4; }

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kMaxOrder) throw std::invalid_argument("graph6: order too large");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  const long long nbits = static_cast<long long>(n) * (n - 1) / 2;
  std::string bits((nbits + 5) / 6, 0);
  for (auto [u, v] : g.edges()) {
    long long p = static_cast<long long>(v) * (v - 1) / 2 + u;  // u < v
    bits[p / 6] |= static_cast<char>(1 << (5 - p % 6));
  }
  for (char b : bits) out.push_back(static_cast<char>(b + 63));
  return out;
}

Graph graph6_decode(const std::string& line) {
  std::string s = line;
  if (s.rfind(">>", 0) == 0) {
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) != 0)
      throw std::invalid_argument("graph6: malformed format header");
    s = s.substr(header.size());
  }
  if (s.empty()) throw std::invalid_argument("graph6: empty input");
  for (unsigned char c : s)
    if (c < 63 || c > 126)
      throw std::invalid_argument("graph6: character out of range");

  int n;
  if (s[0] != '~') {
    n = s[0] - 63;
  } else {
    if (s.size() >= 2 && s[1] == '~')
      throw std::invalid_argument("graph6: order beyond supported range");
    if (s.size() < 4) throw std::invalid_argument("graph6: truncated order field");
    n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
    if (n <= 62) throw std::invalid_argument("graph6: non-minimal order encoding");
  }
  if (n < 1) throw std::invalid_argument("graph6: order must be at least 1");

  const long long nbits = static_cast<long long>(n) * (n - 1) / 2;
  const size_t expect = header_bytes(n) + static_cast<size_t>((nbits + 5) / 6);
  if (s.size() < expect) throw std::invalid_argument("graph6: truncated bit vector");
  if (s.size() > expect) throw std::invalid_argument("graph6: trailing data");

  std::vector<Edge> edges;
  long long p = 0;
  size_t at = header_bytes(n);
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++p) {
      int bit = ((s[at + p / 6] - 63) >> (5 - p % 6)) & 1;
      if (bit) edges.emplace_back(u, v);
    }
  }
  // padding must be zero
  for (long long q = nbits; q < static_cast<long long>((nbits + 5) / 6) * 6; ++q) {
    if (((s[at + q / 6] - 63) >> (5 - q % 6)) & 1)
      throw std::invalid_argument("graph6: nonzero padding bits");
  }
  return Graph(n, std::move(edges));
}

std::string edgelist_encode(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph edgelist_decode(const std::string& text) {
  std::istringstream in(text);
  long long n, m;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing 'n m' header");
  if (n < 1 || m < 0) throw std::invalid_argument("edge list: invalid 'n m' header");
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u, v;
    if (!(in >> u >> v))
      throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                  " edges, got " + std::to_string(i));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge list: endpoint out of range: (" +
                                  std::to_string(u) + "," + std::to_string(v) + ")");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  long long extra;
  if (in >> extra) throw std::invalid_argument("edge list: trailing data");
  return Graph(static_cast<int>(n), std::move(edges));
}

}  // namespace topo
