#include <helix/errors.hpp>
#include <helix/graph.hpp>

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

using std::size_t;
using std::string;
using std::string_view;
using std::vector;

namespace helix
{
    ParseError::ParseError(Kind kind, size_t line, const string & message) :
        Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        _kind(kind),
        _line(line)
    {
    }

    Graph::Graph(Vertex n, std::span<const Edge> edges) :
        _n(n)
    {
        if (n < 0)
            throw GraphError("vertex count must be non-negative");

        for (auto [u, v] : edges) {
            if (u == v)
                throw GraphError("self-loop on vertex " + std::to_string(u));
            if (u < 1 || u > n || v < 1 || v > n)
                throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside 1.." + std::to_string(n));
            _edges.insert(Edge{std::min(u, v), std::max(u, v)});
        }
        build_adjacency();
    }

    Graph::Graph(Vertex n, std::initializer_list<Edge> edges) :
        Graph(n, std::span<const Edge>{edges.begin(), edges.size()})
    {
    }

    void Graph::build_adjacency()
    {
        _adjacency.assign(static_cast<size_t>(_n) + 1, {});
        for (auto [u, v] : _edges) {
            _adjacency[u].push_back(v);
            _adjacency[v].push_back(u);
        }
        for (auto & list : _adjacency)
            std::sort(list.begin(), list.end());
    }

    auto Graph::adjacent(Vertex a, Vertex b) const -> bool
    {
        if (a == b)
            return false;
        return _edges.contains(Edge{std::min(a, b), std::max(a, b)});
    }

    auto Graph::neighbours(Vertex v) const -> std::span<const Vertex>
    {
        if (v < 1 || v > _n)
            return {};
        return _adjacency[v];
    }

    auto Graph::induced(std::span<const Vertex> vertices) const -> Graph
    {
        vector<Vertex> relabel(static_cast<size_t>(_n) + 1, 0);
        for (size_t i = 0; i < vertices.size(); ++i) {
            auto v = vertices[i];
            if (v < 1 || v > _n)
                throw GraphError("induced: vertex " + std::to_string(v) + " not in graph");
            if (relabel[v] != 0)
                throw GraphError("induced: vertex " + std::to_string(v) + " listed twice");
            relabel[v] = static_cast<Vertex>(i + 1);
        }

        vector<Edge> kept;
        for (auto [u, v] : _edges)
            if (relabel[u] != 0 && relabel[v] != 0)
                kept.push_back(Edge{relabel[u], relabel[v]});
        return Graph{static_cast<Vertex>(vertices.size()), kept};
    }

    namespace
    {
        auto trim(string_view s) -> string_view
        {
            while (! s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
                s.remove_suffix(1);
            while (! s.empty() && (s.front() == ' ' || s.front() == '\t'))
                s.remove_prefix(1);
            return s;
        }

        auto split_words(string_view s) -> vector<string_view>
        {
            vector<string_view> words;
            size_t pos = 0;
            while (pos < s.size()) {
                while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t'))
                    ++pos;
                size_t start = pos;
                while (pos < s.size() && s[pos] != ' ' && s[pos] != '\t')
                    ++pos;
                if (pos > start)
                    words.push_back(s.substr(start, pos - start));
            }
            return words;
        }

        auto to_integer(string_view word, size_t line) -> long long
        {
            long long value = 0;
            auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
            if (ec != std::errc{} || ptr != word.data() + word.size())
                throw ParseError(ParseError::Kind::malformed, line, "expected an integer, got '" + string(word) + "'");
            return value;
        }
    }

    auto parse_dimacs(std::istream & in) -> DimacsResult
    {
        DimacsResult result;
        bool seen_header = false;
        long long n = 0;
        vector<Edge> edges;
        std::set<Edge> distinct;

        string raw;
        size_t line_no = 0;
        while (std::getline(in, raw)) {
            ++line_no;
            auto line = trim(raw);
            if (line.empty() || line.front() == 'c')
                continue;

            auto words = split_words(line);
            if (words[0] == "p") {
                if (seen_header)
                    throw ParseError(ParseError::Kind::malformed, line_no, "second 'p' line");
                if (words.size() != 4 || words[1] != "edge")
                    throw ParseError(ParseError::Kind::malformed, line_no, "expected 'p edge <n> <m>'");
                n = to_integer(words[2], line_no);
                auto m = to_integer(words[3], line_no);
                if (n < 1 || n > std::numeric_limits<Vertex>::max())
                    throw ParseError(ParseError::Kind::malformed, line_no, "vertex count must be positive");
                if (m < 0)
                    throw ParseError(ParseError::Kind::malformed, line_no, "edge count must be non-negative");
                result.declared_edges = static_cast<size_t>(m);
                seen_header = true;
            }
            else if (words[0] == "e") {
                if (! seen_header)
                    throw ParseError(ParseError::Kind::missing_header, line_no, "edge line before 'p edge' line");
                if (words.size() != 3)
                    throw ParseError(ParseError::Kind::malformed, line_no, "expected 'e <u> <v>'");
                auto u = to_integer(words[1], line_no);
                auto v = to_integer(words[2], line_no);
                if (u < 1 || u > n || v < 1 || v > n)
                    throw ParseError(ParseError::Kind::out_of_range, line_no,
                        "endpoint outside 1.." + std::to_string(n));
                if (u == v)
                    throw ParseError(ParseError::Kind::self_loop, line_no,
                        "self-loop on vertex " + std::to_string(u) + " is not allowed");
                Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
                if (! distinct.insert(e).second)
                    result.duplicate_edges = true;
                edges.push_back(e);
            }
            else
                throw ParseError(ParseError::Kind::malformed, line_no, "unrecognised line '" + string(line) + "'");
        }

        if (! seen_header)
            throw ParseError(ParseError::Kind::missing_header, 0, "missing 'p edge <n> <m>' line");

        result.graph = Graph{static_cast<Vertex>(n), edges};
        result.edge_count_mismatch = result.declared_edges != result.graph.edge_count();
        return result;
    }

    auto parse_dimacs(string_view text) -> DimacsResult
    {
        std::istringstream in{string{text}};
        return parse_dimacs(in);
    }

    auto render_dimacs(const Graph & g) -> string
    {
        std::ostringstream out;
        out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
        for (auto [u, v] : g.edges())
            out << "e " << u << ' ' << v << '\n';
        return out.str();
    }
}
