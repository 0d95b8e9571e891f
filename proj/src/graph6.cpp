#include "alg/graph6.hpp"

#include <stdexcept>
#include <vector>

#include "alg/errors.hpp"

namespace alg {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

}  // namespace

SimpleGraph from_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kHeader)) base = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.size() <= base) throw ParseError("empty graph6 string", base);

  for (std::size_t i = base; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("byte outside graph6 alphabet", i);
  }
  const int n = static_cast<unsigned char>(text[base]) - kBias;
  if (n == kGraph6MaxVertices + 1) {
    throw ParseError("long-form graph6 (n > 62) is not supported", base);
  }

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = (bits + 5) / 6;
  const std::size_t have = text.size() - base - 1;
  if (have < expected) throw ParseError("truncated graph6 bit vector", text.size());
  if (have > expected) throw ParseError("trailing bytes after graph6 bit vector", base + 1 + expected);

  // Bits run over the upper triangle column by column: (0,1),(0,2),(1,2),(0,3),...
  std::vector<std::pair<int, int>> pairs;
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int byte = static_cast<unsigned char>(text[base + 1 + k / 6]) - kBias;
      if ((byte >> (5 - k % 6)) & 1) pairs.emplace_back(u, v);
    }
  }
  return SimpleGraph::from_edge_list(pairs, n);
}

std::string to_graph6(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (n > kGraph6MaxVertices) {
    throw std::invalid_argument("graph6 short form supports at most 62 vertices");
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<int> packed((bits + 5) / 6, 0);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      if (g.has_edge(u, v)) packed[k / 6] |= 1 << (5 - k % 6);
    }
  }
  std::string out;
  out.reserve(packed.size() + 1);
  out.push_back(static_cast<char>(n + kBias));
  for (int b : packed) out.push_back(static_cast<char>(b + kBias));
  return out;
}

bool looks_like_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) return true;
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  if (text.empty() || text.find('\n') != std::string_view::npos) return false;
  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    if (u < 63 || u > 126) return false;
  }
  return true;
}

}  // namespace alg
