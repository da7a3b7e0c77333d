#include "domgame/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

#include "domgame/errors.hpp"

namespace domgame {

char to_char(Color c) { return c == Color::A ? 'A' : 'B'; }

Color color_from_char(char c)
{
    switch (c) {
    case 'A': return Color::A;
    case 'B': return Color::B;
    default: throw InputError(std::string("invalid color '") + c + "', expected A or B");
    }
}

std::vector<Color> parse_colors(std::string_view s)
{
    std::vector<Color> out;
    out.reserve(s.size());
    for (char c : s)
        out.push_back(color_from_char(c));
    return out;
}

std::string colors_to_string(std::span<const Color> colors)
{
    std::string s;
    s.reserve(colors.size());
    for (Color c : colors)
        s.push_back(to_char(c));
    return s;
}

Graph::Graph(int n, std::span<const Edge> edges, std::optional<std::vector<Color>> colors)
    : adjacency_(n < 0 ? 0 : static_cast<std::size_t>(n)), colors_(std::move(colors))
{
    if (n < 0)
        throw InputError("negative vertex count");
    if (colors_ && static_cast<int>(colors_->size()) != n)
        throw InputError("color string length " + std::to_string(colors_->size()) + " does not match n = " +
                         std::to_string(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v)
            throw InputError("self-loop at vertex " + std::to_string(u));
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& adj : adjacency_) {
        std::sort(adj.begin(), adj.end());
        if (std::adjacent_find(adj.begin(), adj.end()) != adj.end())
            throw InputError("multi-edge in input");
    }
    edge_count_ = edges.size();
    if (n <= kMaxMaskVertices) {
        closed_.resize(adjacency_.size());
        for (Vertex v = 0; v < n; ++v) {
            VertexMask m = bit(v);
            for (Vertex u : adjacency_[v])
                m |= bit(u);
            closed_[v] = m;
        }
    }
}

void Graph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= vertex_count())
        throw InputError("vertex " + std::to_string(v) + " out of range [0," + std::to_string(vertex_count()) + ")");
}

std::span<const Vertex> Graph::neighbors(Vertex v) const
{
    check_vertex(v);
    return adjacency_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<Vertex> Graph::closed_neighborhood(Vertex v) const
{
    check_vertex(v);
    std::vector<Vertex> out(adjacency_[v]);
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return out;
}

VertexMask Graph::closed_mask(Vertex v) const
{
    check_vertex(v);
    if (closed_.empty())
        throw SizeGuardError("bitmask operations need at most 64 vertices");
    return closed_[v];
}

Color Graph::color(Vertex v) const
{
    check_vertex(v);
    if (!colors_)
        throw UsageError("graph is not colored");
    return (*colors_)[v];
}

VertexMask Graph::color_mask(Color c) const
{
    if (!colors_)
        throw UsageError("graph is not colored");
    if (vertex_count() > kMaxMaskVertices)
        throw SizeGuardError("bitmask operations need at most 64 vertices");
    VertexMask m = 0;
    for (Vertex v = 0; v < vertex_count(); ++v)
        if ((*colors_)[v] == c)
            m |= bit(v);
    return m;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Graph Graph::with_colors(std::optional<std::vector<Color>> colors) const
{
    auto e = edges();
    return Graph(vertex_count(), e, std::move(colors));
}

bool Graph::operator==(const Graph& other) const
{
    return adjacency_ == other.adjacency_ && colors_ == other.colors_;
}

Graph build_path(int n)
{
    if (n < 1)
        throw InputError("path needs n >= 1");
    std::vector<Edge> e;
    for (Vertex v = 0; v + 1 < n; ++v)
        e.emplace_back(v, v + 1);
    return Graph(n, e);
}

Graph build_cycle(int n)
{
    if (n < 3)
        throw InputError("cycle needs n >= 3");
    std::vector<Edge> e;
    for (Vertex v = 0; v + 1 < n; ++v)
        e.emplace_back(v, v + 1);
    e.emplace_back(0, n - 1);
    return Graph(n, e);
}

Graph build_complete(int n)
{
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            e.emplace_back(u, v);
    return Graph(n, e);
}

Graph build_union(std::span<const Graph> parts)
{
    int n = 0;
    std::size_t colored_parts = 0;
    std::vector<Edge> e;
    std::vector<Color> colors;
    for (const Graph& g : parts) {
        for (auto [u, v] : g.edges())
            e.emplace_back(u + n, v + n);
        if (g.colored()) {
            ++colored_parts;
            colors.insert(colors.end(), g.colors()->begin(), g.colors()->end());
        }
        n += g.vertex_count();
    }
    if (colored_parts != 0 && colored_parts != parts.size())
        throw InputError("cannot mix colored and uncolored components");
    if (colored_parts != 0)
        return Graph(n, e, std::move(colors));
    return Graph(n, e);
}

Graph colored_path(std::string_view colors)
{
    return build_path(static_cast<int>(colors.size())).with_colors(parse_colors(colors));
}

Graph colored_cycle(std::string_view colors)
{
    return build_cycle(static_cast<int>(colors.size())).with_colors(parse_colors(colors));
}

std::vector<int> bfs_distances(const Graph& g, Vertex source)
{
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<Vertex> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

int diameter(const Graph& g)
{
    int best = 0;
    for (Vertex s = 0; s < g.vertex_count(); ++s)
        for (int d : bfs_distances(g, s)) {
            if (d < 0)
                return -1;
            best = std::max(best, d);
        }
    return best;
}

bool connected(const Graph& g)
{
    if (g.vertex_count() == 0)
        return true;
    auto d = bfs_distances(g, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

namespace {

int parse_int(const std::string& tok, int line)
{
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size())
            throw InputError("");
        return v;
    } catch (const std::exception&) {
        throw InputError("line " + std::to_string(line) + ": expected integer, got '" + tok + "'");
    }
}

} // namespace

Graph read_graph(std::istream& in)
{
    std::optional<int> n;
    std::optional<std::vector<Color>> colors;
    std::vector<Edge> edges;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream ls(raw);
        std::string key;
        if (!(ls >> key))
            continue;
        std::vector<std::string> args;
        for (std::string tok; ls >> tok;)
            args.push_back(tok);
        if (key == "n") {
            if (n || args.size() != 1)
                throw InputError("line " + std::to_string(line) + ": malformed 'n' line");
            n = parse_int(args[0], line);
            if (*n < 0)
                throw InputError("line " + std::to_string(line) + ": negative vertex count");
        } else if (key == "colors") {
            if (!n || colors || !edges.empty() || args.size() > 1)
                throw InputError("line " + std::to_string(line) + ": 'colors' must directly follow 'n'");
            colors = parse_colors(args.empty() ? std::string_view{} : std::string_view{args[0]});
        } else if (key == "e") {
            if (!n || args.size() != 2)
                throw InputError("line " + std::to_string(line) + ": malformed edge line");
            edges.emplace_back(parse_int(args[0], line), parse_int(args[1], line));
        } else {
            throw InputError("line " + std::to_string(line) + ": unknown record '" + key + "'");
        }
    }
    if (!n)
        throw InputError("missing 'n' line");
    return Graph(*n, edges, std::move(colors));
}

Graph parse_graph(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return read_graph(in);
}

Graph load_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open graph file '" + path + "'");
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g, std::span<const std::string> header_comments)
{
    for (const auto& c : header_comments)
        out << "# " << c << '\n';
    out << "n " << g.vertex_count() << '\n';
    if (g.colored())
        out << "colors " << colors_to_string(*g.colors()) << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u << ' ' << v << '\n';
}

std::string graph_to_string(const Graph& g, std::span<const std::string> header_comments)
{
    std::ostringstream os;
    write_graph(os, g, header_comments);
    return os.str();
}

} // namespace domgame
