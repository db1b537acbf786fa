#pragma once

#include <helix/codec.hpp>
#include <helix/graph.hpp>

#include <cstdint>
#include <vector>

namespace helix
{
    /// coloring[v - 1] is the color of vertex v.
    using Coloring = std::vector<Color>;

    /// Largest graph the oracle will enumerate.
    inline constexpr Vertex oracle_vertex_cap = 24;

    /// True iff no edge is monochromatic. Throws GraphError if the coloring
    /// length differs from the vertex count.
    auto is_proper(const Graph & g, const Coloring & c) -> bool;

    /// Every proper k-coloring, in lexicographic order. Plain backtracking
    /// over an adjacency matrix; shares nothing with the tube machine.
    auto enumerate_colorings(const Graph & g, Color k) -> std::vector<Coloring>;

    /// Number of proper k-colorings, without materialising them.
    auto count_colorings(const Graph & g, Color k) -> std::uint64_t;
}
