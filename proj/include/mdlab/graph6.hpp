#pragma once

#include <string>
#include <string_view>

#include "mdlab/graph.hpp"

namespace mdlab {

/// Largest order representable in the short (single length byte) graph6 form.
inline constexpr int kGraph6MaxOrder = 62;

/// Decodes one graph6 line (short form only). Surrounding whitespace and an
/// optional ">>graph6<<" header are ignored. Throws ParseError naming the
/// offending byte offset.
Graph from_graph6(std::string_view text);

/// Encodes g in short-form graph6. Throws CapacityError when n > 62.
std::string to_graph6(const Graph& g);

}  // namespace mdlab
