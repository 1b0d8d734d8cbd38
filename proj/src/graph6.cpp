// SPDX-License-Identifier: Apache-2.0
//
// graph6 codec (McKay's format): 6-bit printable encoding of the order
// followed by the upper triangle of the adjacency matrix in column-major
// order, padded with zero bits to a multiple of six.

#include <stdexcept>
#include <string>

#include "pg/graph.hpp"

namespace pg {

namespace {

constexpr const char* kHeader = ">>graph6<<";

void append_sextets(std::string& out, const std::vector<bool>& bits) {
  for (size_t i = 0; i < bits.size(); i += 6) {
    int v = 0;
    for (size_t j = 0; j < 6; ++j) v = (v << 1) | (i + j < bits.size() && bits[i + j] ? 1 : 0);
    out.push_back(char(v + 63));
  }
}

}  // namespace

std::string serialize_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(char(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(char(((n >> s) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6) out.push_back(char(((n >> s) & 63) + 63));
  }
  std::vector<bool> bits;
  bits.reserve((size_t)n * (n - 1) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j));
  append_sextets(out, bits);
  return out;
}

Graph parse_graph6(const std::string& text_in) {
  std::string text = text_in;
  if (text.rfind(kHeader, 0) == 0) text = text.substr(std::string(kHeader).size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  if (text.empty()) throw std::invalid_argument("empty graph6 record");
  for (char c : text)
    if (c < 63 || c > 126) throw std::invalid_argument("graph6 character out of range 63..126");

  size_t pos = 0;
  long long n;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) throw std::invalid_argument("truncated graph6 length header");
    n = 0;
    for (int k = 1; k <= 3; ++k) n = (n << 6) | (text[k] - 63);
    pos = 4;
  } else {
    if (text.size() < 8) throw std::invalid_argument("truncated graph6 length header");
    n = 0;
    for (int k = 2; k <= 7; ++k) n = (n << 6) | (text[k] - 63);
    pos = 8;
  }

  long long nbits = n * (n - 1) / 2;
  size_t need = (size_t)((nbits + 5) / 6);
  if (text.size() - pos != need) throw std::invalid_argument("graph6 body has wrong length");

  std::vector<Edge> edges;
  long long bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      int c = text[pos + bit / 6] - 63;
      if ((c >> (5 - bit % 6)) & 1) edges.push_back({i, (int)j});
    }
  // Padding bits must be zero.
  for (long long b = nbits; b < (long long)need * 6; ++b) {
    int c = text[pos + b / 6] - 63;
    if ((c >> (5 - b % 6)) & 1) throw std::invalid_argument("graph6 trailing bits nonzero");
  }
  return Graph((int)n, edges);
}

}  // namespace pg
