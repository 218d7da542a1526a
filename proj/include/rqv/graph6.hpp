#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "rqv/error.hpp"
#include "rqv/graph.hpp"

namespace rqv {

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

/// graph6 encoding: N(n) followed by the upper triangle read column by
/// column, six bits per printable byte (value + 63), zero padded.
inline std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 0x3F) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 0x3F) + 63));
    out.push_back(static_cast<char>((n & 0x3F) + 63));
  }
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j) {
    const VertexSet row = g.neighbours(j);
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | static_cast<int>((row >> i) & 1U);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

inline Graph read_graph6(std::string_view line) {
  std::size_t base = 0;
  if (line.substr(0, kGraph6Header.size()) == kGraph6Header) {
    base = kGraph6Header.size();
    line.remove_prefix(kGraph6Header.size());
  }
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  if (line.empty()) throw ParseError("empty graph6 string", base);
  auto value = [&](std::size_t i) {
    const int c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) throw ParseError("byte outside the graph6 range 63..126", base + i);
    return c - 63;
  };
  for (std::size_t i = 0; i < line.size(); ++i) value(i);
  int n = 0;
  std::size_t pos = 0;
  if (value(0) == 63) {
    if (line.size() < 4) throw ParseError("truncated 4-byte vertex count", base + line.size());
    if (value(1) == 63) throw ParseError("8-byte vertex counts are not supported", base + 1);
    n = (value(1) << 12) | (value(2) << 6) | value(3);
    pos = 4;
    if (n <= 62) throw ParseError("non-minimal vertex count encoding", base + 1);
  } else {
    n = value(0);
    pos = 1;
  }
  if (n < 1 || n > kMaxVertices) {
    throw ParseError("vertex count " + std::to_string(n) + " outside [1, 64]", base);
  }
  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (line.size() != pos + nbytes) {
    throw ParseError("expected " + std::to_string(pos + nbytes) + " bytes, got " +
                         std::to_string(line.size()),
                     base + std::min(line.size(), pos + nbytes));
  }
  std::vector<VertexSet> rows(n, 0);
  std::size_t t = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++t) {
      const int byte = value(pos + t / 6);
      if ((byte >> (5 - t % 6)) & 1) {
        rows[i] |= bit(j);
        rows[j] |= bit(i);
      }
    }
  }
  if (nbits % 6 != 0) {
    const std::size_t last = pos + nbytes - 1;
    const int pad = static_cast<int>(6 - nbits % 6);
    if (value(last) & ((1 << pad) - 1)) throw ParseError("nonzero padding bits", base + last);
  }
  return Graph::from_rows(n, rows);
}

/// Reads one graph per non-empty line. Errors carry the 1-based line number
/// in their message.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line == kGraph6Header) continue;
    try {
      out.push_back(read_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.message(), e.offset());
    }
  }
  return out;
}

}  // namespace rqv
