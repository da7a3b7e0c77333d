#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace domgame {

using Vertex = int;

// Bitset over vertex indices; game positions require n <= 64.
using VertexMask = std::uint64_t;

inline constexpr int kMaxMaskVertices = 64;

constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }

constexpr VertexMask full_mask(int n)
{
    return n >= kMaxMaskVertices ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

enum class Color : std::uint8_t { A, B };

constexpr Color opponent(Color c) { return c == Color::A ? Color::B : Color::A; }
char to_char(Color c);
Color color_from_char(char c);

std::vector<Color> parse_colors(std::string_view s);
std::string colors_to_string(std::span<const Color> colors);

using Edge = std::pair<Vertex, Vertex>;

/// Immutable undirected simple graph with an optional A/B vertex coloring.
///
/// Vertices are 0-based. A colored graph is a partizan instance: Alice
/// selects only A vertices and Bob only B vertices.
class Graph {
public:
    Graph() = default;

    /// Throws InputError on self-loops, multi-edges, out-of-range endpoints,
    /// or a color vector whose length differs from n.
    Graph(int n, std::span<const Edge> edges, std::optional<std::vector<Color>> colors = std::nullopt);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const;

    /// {v} together with its neighbors, sorted ascending.
    std::vector<Vertex> closed_neighborhood(Vertex v) const;

    /// Closed neighborhood as a mask; only for graphs with at most 64 vertices.
    VertexMask closed_mask(Vertex v) const;

    bool colored() const { return colors_.has_value(); }
    Color color(Vertex v) const;
    const std::optional<std::vector<Color>>& colors() const { return colors_; }

    /// Mask of vertices with color c (colored graphs with n <= 64 only).
    VertexMask color_mask(Color c) const;

    /// All edges (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;

    /// Same graph with colors replaced (or removed).
    Graph with_colors(std::optional<std::vector<Color>> colors) const;

    bool operator==(const Graph& other) const;

private:
    void check_vertex(Vertex v) const;

    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<VertexMask> closed_;
    std::optional<std::vector<Color>> colors_;
    std::size_t edge_count_ = 0;
};

Graph build_path(int n);
Graph build_cycle(int n);
Graph build_complete(int n);

/// Disjoint union; component i's vertices follow those of components 0..i-1.
/// The result is colored iff every part is colored; mixing colored and
/// uncolored parts is an InputError.
Graph build_union(std::span<const Graph> parts);

Graph colored_path(std::string_view colors);
Graph colored_cycle(std::string_view colors);

std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Longest shortest path; -1 when the graph is disconnected.
int diameter(const Graph& g);
bool connected(const Graph& g);

// Text format:
//   n <count>
//   colors <A/B string>      (optional)
//   e <u> <v>                (one per edge, 0-based)
// '#' starts a comment. The writer sorts edges by (u, v) with u < v.
Graph read_graph(std::istream& in);
Graph parse_graph(std::string_view text);
Graph load_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g, std::span<const std::string> header_comments = {});
std::string graph_to_string(const Graph& g, std::span<const std::string> header_comments = {});

} // namespace domgame
