#include "cospec/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

namespace cospec {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr int kByteOffset = 63;
constexpr std::size_t kMaxOrder = 1u << 16;

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

} // namespace

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

Graph::Graph(std::size_t n, std::span<const Edge> edges, std::string label)
    : n_(n), words_(words_for(n)), bits_(n * words_for(n), 0), label_(std::move(label)) {
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n)
            throw std::out_of_range("edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("self-loops are not allowed");
        set_edge(u, v);
    }
}

Graph::Graph(std::size_t n, std::initializer_list<Edge> edges, std::string label)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(label)) {}

void Graph::set_edge(Vertex u, Vertex v) {
    auto& word = bits_[u * words_ + v / 64];
    const std::uint64_t bit = std::uint64_t{1} << (v % 64);
    if (word & bit)
        return;
    word |= bit;
    bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    ++m_;
}

Graph Graph::with_label(std::string label) const {
    Graph copy = *this;
    copy.label_ = std::move(label);
    return copy;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_)
        throw std::out_of_range("vertex out of range");
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1u;
}

std::size_t Graph::degree(Vertex v) const {
    std::size_t d = 0;
    for (auto w : row(v))
        d += static_cast<std::size_t>(std::popcount(w));
    return d;
}

std::size_t Graph::degree_into(Vertex v, std::span<const std::uint64_t> mask) const {
    auto r = row(v);
    std::size_t d = 0;
    for (std::size_t i = 0; i < words_; ++i)
        d += static_cast<std::size_t>(std::popcount(r[i] & mask[i]));
    return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    auto r = row(v);
    for (std::size_t i = 0; i < words_; ++i) {
        std::uint64_t w = r[i];
        while (w) {
            out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::span<const std::uint64_t> Graph::row(Vertex v) const {
    if (v >= n_)
        throw std::out_of_range("vertex out of range");
    return {bits_.data() + v * words_, words_};
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    if (perm.size() != g.order())
        throw std::invalid_argument("permutation size does not match graph order");
    std::vector<bool> seen(g.order(), false);
    for (auto p : perm) {
        if (p >= g.order() || seen[p])
            throw std::invalid_argument("not a permutation");
        seen[p] = true;
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        edges.emplace_back(perm[u], perm[v]);
    return Graph(g.order(), edges, g.label());
}

// graph6: size prefix, then the upper triangle in column-major order
// (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, big-endian within
// each byte, each byte offset by 63, padded with zero bits.
Graph parse_graph6(std::string_view text) {
    std::size_t base = 0;
    if (text.starts_with(kGraph6Header))
        base = kGraph6Header.size();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.size() <= base)
        throw Graph6Error("empty graph6 string", base);

    for (std::size_t i = base; i < text.size(); ++i) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw Graph6Error("byte " + std::to_string(c) + " outside the graph6 range 63..126", i);
    }
    auto value = [&](std::size_t i) -> std::size_t {
        return static_cast<unsigned char>(text[i]) - kByteOffset;
    };

    std::size_t pos = base;
    std::size_t n = 0;
    if (value(pos) < 63) {
        n = value(pos);
        pos += 1;
    } else if (pos + 1 < text.size() && value(pos + 1) == 63) {
        if (pos + 8 > text.size())
            throw Graph6Error("truncated 8-byte size prefix", text.size());
        for (std::size_t i = pos + 2; i < pos + 8; ++i)
            n = (n << 6) | value(i);
        pos += 8;
    } else {
        if (pos + 4 > text.size())
            throw Graph6Error("truncated 4-byte size prefix", text.size());
        for (std::size_t i = pos + 1; i < pos + 4; ++i)
            n = (n << 6) | value(i);
        pos += 4;
    }
    if (n > kMaxOrder)
        throw Graph6Error("graph order " + std::to_string(n) + " exceeds supported maximum", base);

    const std::size_t nbits = n * (n > 0 ? n - 1 : 0) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() - pos != nbytes) {
        const std::size_t where = std::min(text.size(), pos + nbytes);
        throw Graph6Error("expected " + std::to_string(nbytes) + " adjacency bytes for n=" +
                              std::to_string(n) + ", found " + std::to_string(text.size() - pos),
                          where);
    }
    if (nbits % 6 != 0) {
        const std::size_t last = text.size() - 1;
        const std::size_t pad = 6 - nbits % 6;
        if (value(last) & ((std::size_t{1} << pad) - 1))
            throw Graph6Error("nonzero padding bits", last);
    }

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const std::size_t byte = value(pos + k / 6);
            if ((byte >> (5 - k % 6)) & 1u)
                edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    auto put = [&](std::size_t v) { out.push_back(static_cast<char>(v + kByteOffset)); };
    if (n <= 62) {
        put(n);
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            put((n >> shift) & 63u);
    } else {
        out.append("~~");
        for (int shift = 30; shift >= 0; shift -= 6)
            put((n >> shift) & 63u);
    }
    std::size_t acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1u : 0u);
            if (++filled == 6) {
                put(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        put(acc << (6 - filled));
    return out;
}

std::vector<Graph> read_graph6_lines(std::string_view text) {
    std::vector<Graph> out;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (!line.empty() && line != kGraph6Header)
            out.push_back(parse_graph6(line));
        start = end + 1;
    }
    return out;
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
    std::vector<std::size_t> out(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        out[v] = g.degree(v);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::size_t> is_regular(const Graph& g) {
    if (g.order() == 0)
        return 0;
    const std::size_t d = g.degree(0);
    for (Vertex v = 1; v < g.order(); ++v)
        if (g.degree(v) != d)
            return std::nullopt;
    return d;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
    Bipartition b;
    b.side.assign(g.order(), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (b.side[s] != -1)
            continue;
        b.side[s] = 0;
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop_front();
            for (Vertex v : g.neighbors(u)) {
                if (b.side[v] == -1) {
                    b.side[v] = 1 - b.side[u];
                    queue.push_back(v);
                } else if (b.side[v] == b.side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    b.first_size = static_cast<std::size_t>(std::count(b.side.begin(), b.side.end(), 0));
    b.second_size = g.order() - b.first_size;
    return b;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<std::vector<Vertex>> out;
    std::vector<bool> seen(g.order(), false);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s])
            continue;
        std::vector<Vertex> comp{s};
        seen[s] = true;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (Vertex v : g.neighbors(comp[i]))
                if (!seen[v]) {
                    seen[v] = true;
                    comp.push_back(v);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) {
    return g.order() == 0 || connected_components(g).size() == 1;
}

Graph empty_graph(std::size_t n) { return Graph(n, {}, "E" + std::to_string(n)); }

Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph(n, edges, "K" + std::to_string(n));
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        edges.emplace_back(v - 1, v);
    return Graph(n, edges, "P" + std::to_string(n));
}

Graph cycle_graph(std::size_t n) {
    if (n < 3)
        throw std::invalid_argument("a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v)
        edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges, "C" + std::to_string(n));
}

Graph complete_bipartite_graph(std::size_t r, std::size_t s) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < r; ++u)
        for (Vertex v = 0; v < s; ++v)
            edges.emplace_back(u, r + v);
    return Graph(r + s, edges, "K" + std::to_string(r) + "," + std::to_string(s));
}

} // namespace cospec
