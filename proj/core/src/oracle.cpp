#include <helix/errors.hpp>
#include <helix/oracle.hpp>

using std::size_t;
using std::vector;

namespace helix
{
    namespace
    {
        // Dense adjacency, built straight from the edge set.
        struct Matrix
        {
            size_t n;
            vector<char> cells;

            explicit Matrix(const Graph & g) :
                n(static_cast<size_t>(g.vertex_count())),
                cells(n * n, 0)
            {
                for (auto [u, v] : g.edges()) {
                    cells[(u - 1) * n + (v - 1)] = 1;
                    cells[(v - 1) * n + (u - 1)] = 1;
                }
            }

            [[nodiscard]] auto operator()(size_t a, size_t b) const -> bool { return cells[a * n + b] != 0; }
        };

        void check_budget(const Graph & g, Color k)
        {
            if (k < 1)
                throw BudgetError("oracle needs at least one color");
            if (g.vertex_count() > oracle_vertex_cap)
                throw BudgetError("oracle refuses graphs with more than " + std::to_string(oracle_vertex_cap)
                    + " vertices (got " + std::to_string(g.vertex_count()) + ")");
        }

        template <typename Visit>
        void backtrack(const Matrix & adj, Color k, Coloring & partial, size_t pos, Visit & visit)
        {
            if (pos == adj.n) {
                visit(partial);
                return;
            }
            for (Color c = 0; c < k; ++c) {
                bool clash = false;
                for (size_t earlier = 0; earlier < pos && ! clash; ++earlier)
                    clash = adj(pos, earlier) && partial[earlier] == c;
                if (clash)
                    continue;
                partial[pos] = c;
                backtrack(adj, k, partial, pos + 1, visit);
            }
        }
    }

    auto is_proper(const Graph & g, const Coloring & c) -> bool
    {
        if (c.size() != static_cast<size_t>(g.vertex_count()))
            throw GraphError("coloring has " + std::to_string(c.size()) + " entries for a graph with "
                + std::to_string(g.vertex_count()) + " vertices");
        for (auto [u, v] : g.edges())
            if (c[u - 1] == c[v - 1])
                return false;
        return true;
    }

    auto enumerate_colorings(const Graph & g, Color k) -> vector<Coloring>
    {
        check_budget(g, k);
        Matrix adj{g};
        Coloring partial(adj.n, 0);
        vector<Coloring> out;
        auto visit = [&](const Coloring & c) { out.push_back(c); };
        backtrack(adj, k, partial, 0, visit);
        return out;
    }

    auto count_colorings(const Graph & g, Color k) -> std::uint64_t
    {
        check_budget(g, k);
        Matrix adj{g};
        Coloring partial(adj.n, 0);
        std::uint64_t count = 0;
        auto visit = [&](const Coloring &) { ++count; };
        backtrack(adj, k, partial, 0, visit);
        return count;
    }
}
