#include "mdlab/graph6.hpp"

#include <vector>

#include "mdlab/errors.hpp"

namespace mdlab {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

[[noreturn]] void fail(std::size_t offset, const std::string& what) {
  throw ParseError("graph6: " + what + " at offset " + std::to_string(offset));
}

}  // namespace

Graph from_graph6(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && is_space(text[begin])) ++begin;
  while (end > begin && is_space(text[end - 1])) --end;
  if (text.substr(begin, kHeader.size()) == kHeader) begin += kHeader.size();
  if (begin == end) fail(begin, "empty input");

  const int first = static_cast<unsigned char>(text[begin]);
  if (first == 126) fail(begin, "long-form length byte (n > 62) is not supported");
  if (first < kBias || first > 126) fail(begin, "malformed length byte '" + std::string(1, text[begin]) + "'");
  const int n = first - kBias;

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t expected = (bits + 5) / 6;
  const std::size_t body = begin + 1;
  if (end - body != expected) {
    fail(end - body < expected ? end : body + expected,
         "expected " + std::to_string(expected) + " data bytes for n=" + std::to_string(n) + ", found " +
             std::to_string(end - body));
  }

  for (std::size_t i = 0; i < expected; ++i) {
    const int value = static_cast<unsigned char>(text[body + i]) - kBias;
    if (value < 0 || value > 63) fail(body + i, "character out of range");
  }
  std::vector<Edge> edges;
  std::size_t k = 0;  // bit index in the upper-triangle, column-major stream
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int value = static_cast<unsigned char>(text[body + k / 6]) - kBias;
      if ((value >> (5 - k % 6)) & 1) edges.push_back({u, v});
    }
  }
  if (bits % 6 != 0) {
    const std::size_t offset = body + expected - 1;
    const int value = static_cast<unsigned char>(text[offset]) - kBias;
    const int pad = 6 - static_cast<int>(bits % 6);
    if ((value & ((1 << pad) - 1)) != 0) fail(offset, "nonzero padding bits");
  }
  return Graph(n, std::move(edges));
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) {
    throw CapacityError("graph6: order " + std::to_string(n) + " needs the long form, which is not supported");
  }
  std::string out(1, static_cast<char>(n + kBias));
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  std::vector<int> chunks((bits + 5) / 6, 0);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      if (g.has_edge(u, v)) chunks[k / 6] |= 1 << (5 - k % 6);
    }
  }
  for (int c : chunks) out.push_back(static_cast<char>(c + kBias));
  return out;
}

}  // namespace mdlab
