#include <helix/errors.hpp>
#include <helix/graph.hpp>

#include <array>
#include <vector>

namespace helix
{
    namespace
    {
        constexpr std::array<std::string_view, 6> names{"k3", "k4", "c5", "p4", "k33", "petersen"};

        auto complete(Vertex n) -> Graph
        {
            std::vector<Edge> edges;
            for (Vertex u = 1; u <= n; ++u)
                for (Vertex v = u + 1; v <= n; ++v)
                    edges.push_back({u, v});
            return Graph{n, edges};
        }

        auto cycle(Vertex n) -> Graph
        {
            std::vector<Edge> edges;
            for (Vertex v = 1; v < n; ++v)
                edges.push_back({v, v + 1});
            edges.push_back({1, n});
            return Graph{n, edges};
        }

        auto petersen() -> Graph
        {
            std::vector<Edge> edges;
            for (Vertex i = 1; i <= 5; ++i) {
                edges.push_back({i, i % 5 + 1});              // outer cycle
                edges.push_back({i + 5, (i + 1) % 5 + 6});    // pentagram: 6-8, 7-9, 8-10, 9-6, 10-7
                edges.push_back({i, i + 5});                  // spokes
            }
            return Graph{10, edges};
        }
    }

    auto builtin_graph_names() -> std::span<const std::string_view>
    {
        return names;
    }

    auto builtin_graph(std::string_view name) -> Graph
    {
        if (name == "k3")
            return complete(3);
        if (name == "k4")
            return complete(4);
        if (name == "c5")
            return cycle(5);
        if (name == "p4")
            return Graph{4, {{1, 2}, {2, 3}, {3, 4}}};
        if (name == "k33") {
            std::vector<Edge> edges;
            for (Vertex u = 1; u <= 3; ++u)
                for (Vertex v = 4; v <= 6; ++v)
                    edges.push_back({u, v});
            return Graph{6, edges};
        }
        if (name == "petersen")
            return petersen();

        std::string valid;
        for (auto n : names)
            valid += (valid.empty() ? "" : ", ") + std::string{n};
        throw LookupError("unknown builtin graph '" + std::string{name} + "' (valid: " + valid + ")");
    }
}
