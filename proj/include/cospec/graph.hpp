#ifndef COSPEC_GRAPH_HPP
#define COSPEC_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cospec {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// Sorted, duplicate-free list of vertex indices.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> members);
    explicit VertexSet(std::vector<Vertex> members);

    const std::vector<Vertex>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(Vertex v) const;

    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> members_;
};

/// Simple undirected graph on vertices 0..n-1, immutable once built.
///
/// Adjacency is kept as packed bit rows (64 vertices per word), so a row
/// intersection is a handful of popcounts. Two graphs compare equal when
/// they have the same order and the same adjacency; the label is a free
/// provenance tag and takes no part in equality.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n, std::span<const Edge> edges = {}, std::string label = {});
    Graph(std::size_t n, std::initializer_list<Edge> edges, std::string label = {});

    std::size_t order() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return m_; }
    const std::string& label() const noexcept { return label_; }
    Graph with_label(std::string label) const;

    bool has_edge(Vertex u, Vertex v) const;
    std::size_t degree(Vertex v) const;
    std::vector<Vertex> neighbors(Vertex v) const;
    // Number of neighbours of v inside the given packed row mask.
    std::size_t degree_into(Vertex v, std::span<const std::uint64_t> mask) const;

    // Edges (u, v) with u < v, in row-major order.
    std::vector<Edge> edges() const;

    std::size_t words_per_row() const noexcept { return words_; }
    std::span<const std::uint64_t> row(Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

private:
    void set_edge(Vertex u, Vertex v);

    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
    std::string label_;
};

// Relabel: vertex v of g becomes perm[v] in the result.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Malformed graph6 input. position() is the 0-based byte offset of the
/// offending character within the line.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at byte " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// One graph6 line; an optional ">>graph6<<" header and trailing newline are skipped.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

std::vector<Graph> read_graph6_lines(std::string_view text);

std::vector<std::size_t> degree_sequence(const Graph& g);
std::optional<std::size_t> is_regular(const Graph& g);

struct Bipartition {
    std::vector<int> side; // 0 or 1 per vertex
    std::size_t first_size = 0;
    std::size_t second_size = 0;
};

std::optional<Bipartition> is_bipartite(const Graph& g);
bool is_connected(const Graph& g);
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

Graph empty_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t r, std::size_t s);

} // namespace cospec

#endif // COSPEC_GRAPH_HPP
