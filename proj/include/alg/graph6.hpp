#pragma once

#include <string>
#include <string_view>

#include "alg/graph.hpp"

namespace alg {

/// Largest vertex count representable in the one-byte graph6 header.
inline constexpr int kGraph6MaxVertices = 62;

/// Decodes a graph6 string (short form, n <= 62). An optional ">>graph6<<"
/// prefix is accepted. Throws ParseError carrying the byte offset of the
/// first bad byte.
SimpleGraph from_graph6(std::string_view text);

/// Encodes in graph6 short form. Throws std::invalid_argument for n > 62.
std::string to_graph6(const SimpleGraph& g);

/// True when the text looks like graph6 rather than an edge list.
bool looks_like_graph6(std::string_view text);

}  // namespace alg
