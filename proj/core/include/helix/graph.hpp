#pragma once

#include <compare>
#include <cstdint>
#include <istream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace helix
{
    /// Vertices are 1-based, matching DIMACS.
    using Vertex = std::int32_t;

    /// Undirected edge, always stored with u < v.
    struct Edge
    {
        Vertex u;
        Vertex v;

        auto operator<=>(const Edge &) const = default;
    };

    /// Undirected simple graph on vertices 1..n.
    class Graph
    {
    public:
        Graph() = default;

        /// Normalizes each pair to u < v and drops duplicates. Throws
        /// GraphError on self-loops, endpoints outside 1..n, or negative n.
        Graph(Vertex n, std::span<const Edge> edges);
        Graph(Vertex n, std::initializer_list<Edge> edges);

        [[nodiscard]] auto vertex_count() const noexcept -> Vertex { return _n; }
        [[nodiscard]] auto edge_count() const noexcept -> std::size_t { return _edges.size(); }
        [[nodiscard]] auto edges() const noexcept -> const std::set<Edge> & { return _edges; }
        [[nodiscard]] auto adjacent(Vertex a, Vertex b) const -> bool;

        /// Neighbours of v in increasing order.
        [[nodiscard]] auto neighbours(Vertex v) const -> std::span<const Vertex>;

        /// Subgraph induced by `vertices`, relabelled so that vertices[i]
        /// becomes vertex i + 1.
        [[nodiscard]] auto induced(std::span<const Vertex> vertices) const -> Graph;

        auto operator==(const Graph & other) const -> bool
        {
            return _n == other._n && _edges == other._edges;
        }

    private:
        void build_adjacency();

        Vertex _n = 0;
        std::set<Edge> _edges;
        std::vector<std::vector<Vertex>> _adjacency;
    };

    struct DimacsResult
    {
        Graph graph;
        std::size_t declared_edges = 0;
        /// Some edge appeared more than once (either orientation).
        bool duplicate_edges = false;
        /// Declared m differs from the number of distinct edges.
        bool edge_count_mismatch = false;
    };

    /// Reads a DIMACS .col document. Accepts LF and CRLF line endings.
    auto parse_dimacs(std::istream & in) -> DimacsResult;
    auto parse_dimacs(std::string_view text) -> DimacsResult;

    /// Writes `p edge n m` followed by the edges in sorted order.
    auto render_dimacs(const Graph & g) -> std::string;

    /// k3, k4, c5, p4, k33, petersen.
    auto builtin_graph(std::string_view name) -> Graph;
    auto builtin_graph_names() -> std::span<const std::string_view>;
}
