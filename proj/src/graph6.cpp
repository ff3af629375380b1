#include "agx/graph6.hpp"

#include <vector>

#include "agx/error.hpp"

namespace agx {

std::string encode_graph6(int order, std::span<const std::uint64_t> rows) {
  std::string out;
  if (order <= 62) {
    out.push_back(static_cast<char>(order + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((order >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((order >> 6) & 63) + 63));
    out.push_back(static_cast<char>((order & 63) + 63));
  }
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | static_cast<int>((rows[i] >> j) & 1U);
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

std::string encode_graph6(const ChemicalGraph& g) { return encode_graph6(g.order(), g.rows()); }

namespace {

[[noreturn]] void malformed(const std::string& why) { throw Error(ErrorCode::MalformedGraph6, why); }

int sextet(char c) {
  const int v = static_cast<unsigned char>(c) - 63;
  if (v < 0 || v > 63) malformed("byte outside printable graph6 range");
  return v;
}

}  // namespace

ChemicalGraph decode_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' ||
                           text.back() == '\t')) {
    text.remove_suffix(1);
  }
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) malformed("empty string");

  std::size_t pos = 0;
  int order = 0;
  if (text[0] == '~') {
    if (text.size() < 4) malformed("truncated size field");
    if (text[1] == '~') malformed("order beyond 64 is not supported");
    order = (sextet(text[1]) << 12) | (sextet(text[2]) << 6) | sextet(text[3]);
    if (order < 63) malformed("non-minimal size field");
    pos = 4;
  } else {
    order = sextet(text[0]);
    pos = 1;
  }
  if (order < 1) malformed("order 0 is not supported");
  if (order > ChemicalGraph::kMaxOrder) malformed("order beyond 64 is not supported");

  const std::size_t bits = static_cast<std::size_t>(order) * (order - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) malformed("data length does not match order");

  std::vector<std::uint64_t> rows(order, 0);
  std::size_t k = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text[pos + k / 6]);
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  }
  for (; k < bytes * 6; ++k) {
    if ((sextet(text[pos + k / 6]) >> (5 - static_cast<int>(k % 6))) & 1) {
      malformed("nonzero padding bits");
    }
  }
  return ChemicalGraph::from_rows(order, rows);
}

}  // namespace agx
