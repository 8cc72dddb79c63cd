#include "booksat/graph6.hpp"

namespace booksat {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int decode_char(char c) {
  int v = static_cast<unsigned char>(c);
  if (v < 63 || v > 126) throw Graph6Error("invalid graph6 character");
  return v - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty graph6 string");

  size_t pos = 0;
  long n;
  if (text[0] != '~') {
    n = decode_char(text[0]);
    pos = 1;
  } else {
    // Long form: '~' then 18 bits in three characters. (The '~~' 36-bit
    // form only encodes n > 258047, far past our 128 cap.)
    if (text.size() < 4 || text[1] == '~') throw Graph6Error("malformed length prefix");
    n = 0;
    for (size_t i = 1; i <= 3; ++i) n = (n << 6) | decode_char(text[i]);
    pos = 4;
  }
  if (n > Graph::max_vertices)
    throw Graph6Error("graph6 value has " + std::to_string(n) + " vertices, cap is 128");

  long nbits = n * (n - 1) / 2;
  size_t want = pos + static_cast<size_t>((nbits + 5) / 6);
  if (text.size() != want)
    throw Graph6Error("graph6 body has wrong length (expected " +
                      std::to_string(want) + " chars, got " + std::to_string(text.size()) + ")");

  GraphBuilder b(static_cast<int>(n));
  long bit = 0;
  for (size_t i = pos; i < text.size(); ++i) {
    int group = decode_char(text[i]);
    for (int k = 5; k >= 0; --k, ++bit) {
      bool on = (group >> k) & 1;
      if (bit >= nbits) {
        if (on) throw Graph6Error("nonzero trailing padding bits");
        continue;
      }
      if (on) {
        // Upper triangle, column-major: columns v = 1..n-1, rows u = 0..v-1.
        long t = bit;
        long v = 1;
        while (t >= v) t -= v, ++v;
        b.add_edge(static_cast<int>(t), static_cast<int>(v));
      }
    }
  }
  return std::move(b).freeze();
}

std::string to_graph6(const Graph& g) {
  int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int group = 0, filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

}  // namespace booksat
