#pragma once

// graph6 text format: N(n) followed by the upper triangle of the adjacency
// matrix in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed
// into 6-bit groups offset by 63.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "agx/graph.hpp"

namespace agx {

std::string encode_graph6(const ChemicalGraph& g);
std::string encode_graph6(int order, std::span<const std::uint64_t> rows);

/// Throws MalformedGraph6 on bad input and DegreeExceedsFour for non-chemical graphs.
/// An optional ">>graph6<<" header and surrounding whitespace are accepted.
ChemicalGraph decode_graph6(std::string_view text);

}  // namespace agx
