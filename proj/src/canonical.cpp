#include "cospec/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>

namespace cospec {

namespace {

using Cells = std::vector<std::vector<Vertex>>;
using Certificate = std::vector<std::uint64_t>;

constexpr std::size_t kNoJump = std::numeric_limits<std::size_t>::max();

class Searcher {
public:
    explicit Searcher(const Graph& g) : g_(g), n_(g.order()), words_(g.words_per_row()) {}

    CanonicalLabeling run() {
        CanonicalLabeling out;
        if (n_ == 0)
            return out;
        std::vector<Vertex> all(n_);
        std::iota(all.begin(), all.end(), 0);
        std::vector<Vertex> path;
        search(Cells{all}, path);
        out.labeling.assign(n_, 0);
        for (std::size_t i = 0; i < n_; ++i)
            out.labeling[best_order_[i]] = i;
        out.generators = generators_;
        out.leaves = leaves_;
        return out;
    }

private:
    // Split cells by neighbour counts into a splitter cell until no cell splits.
    // Every choice depends only on the cell structure, never on vertex names.
    void refine(Cells& cells) const {
        std::vector<std::uint64_t> mask(words_);
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
                std::fill(mask.begin(), mask.end(), 0);
                for (Vertex v : cells[s])
                    mask[v / 64] |= std::uint64_t{1} << (v % 64);
                for (std::size_t c = 0; c < cells.size(); ++c) {
                    if (cells[c].size() == 1)
                        continue;
                    std::vector<std::pair<std::size_t, Vertex>> keyed;
                    keyed.reserve(cells[c].size());
                    for (Vertex v : cells[c])
                        keyed.emplace_back(g_.degree_into(v, mask), v);
                    std::sort(keyed.begin(), keyed.end());
                    if (keyed.front().first == keyed.back().first)
                        continue;
                    Cells parts;
                    for (std::size_t i = 0; i < keyed.size(); ++i) {
                        if (i == 0 || keyed[i].first != keyed[i - 1].first)
                            parts.emplace_back();
                        parts.back().push_back(keyed[i].second);
                    }
                    cells.erase(cells.begin() + static_cast<long>(c));
                    cells.insert(cells.begin() + static_cast<long>(c), parts.begin(), parts.end());
                    changed = true;
                    break;
                }
            }
        }
    }

    Certificate certificate(const std::vector<Vertex>& order) const {
        Certificate cert(n_ * words_, 0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (i != j && g_.has_edge(order[i], order[j]))
                    cert[i * words_ + j / 64] |= std::uint64_t{1} << (63 - j % 64);
        return cert;
    }

    // Automorphism sending from[i] to to[i] for every position i.
    void record_automorphism(const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
        std::vector<Vertex> gamma(n_);
        bool identity = true;
        for (std::size_t i = 0; i < n_; ++i) {
            gamma[from[i]] = to[i];
            identity = identity && from[i] == to[i];
        }
        if (!identity)
            generators_.push_back(std::move(gamma));
    }

    static std::size_t common_prefix(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
        std::size_t d = 0;
        while (d < a.size() && d < b.size() && a[d] == b[d])
            ++d;
        return d;
    }

    // Orbits of the group generated by the known automorphisms that fix the prefix pointwise.
    std::vector<Vertex> stabilizer_orbits(const std::vector<Vertex>& prefix) const {
        std::vector<Vertex> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](Vertex x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& gamma : generators_) {
            const bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](Vertex p) { return gamma[p] == p; });
            if (!fixes)
                continue;
            for (Vertex x = 0; x < n_; ++x) {
                const Vertex a = find(x);
                const Vertex b = find(gamma[x]);
                if (a != b)
                    parent[std::max(a, b)] = std::min(a, b);
            }
        }
        for (Vertex x = 0; x < n_; ++x)
            parent[x] = find(x);
        return parent;
    }

    std::size_t leaf(const Cells& cells, const std::vector<Vertex>& path) {
        ++leaves_;
        std::vector<Vertex> order;
        order.reserve(n_);
        for (const auto& c : cells)
            order.push_back(c.front());
        Certificate cert = certificate(order);
        if (first_order_.empty()) {
            first_order_ = best_order_ = order;
            first_path_ = best_path_ = path;
            first_cert_ = best_cert_ = std::move(cert);
            return kNoJump;
        }
        if (cert == first_cert_) {
            record_automorphism(first_order_, order);
            return common_prefix(path, first_path_);
        }
        if (cert == best_cert_) {
            record_automorphism(best_order_, order);
            return common_prefix(path, best_path_);
        }
        if (cert > best_cert_) {
            best_cert_ = std::move(cert);
            best_order_ = std::move(order);
            best_path_ = path;
        }
        return kNoJump;
    }

    // Returns the depth of the ancestor at which the search should resume, or kNoJump.
    std::size_t search(Cells cells, std::vector<Vertex>& path) {
        refine(cells);
        if (cells.size() == n_)
            return leaf(cells, path);

        std::size_t target = 0;
        while (cells[target].size() == 1)
            ++target;
        const std::vector<Vertex> candidates = cells[target];
        std::vector<Vertex> tried;
        for (Vertex v : candidates) {
            if (!tried.empty()) {
                const auto orbit = stabilizer_orbits(path);
                const bool equivalent =
                    std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return orbit[u] == orbit[v]; });
                if (equivalent)
                    continue;
            }
            Cells child = cells;
            std::vector<Vertex> rest;
            for (Vertex u : candidates)
                if (u != v)
                    rest.push_back(u);
            child[target] = {v};
            child.insert(child.begin() + static_cast<long>(target) + 1, rest);

            path.push_back(v);
            const std::size_t jump = search(std::move(child), path);
            path.pop_back();
            tried.push_back(v);
            if (jump != kNoJump && jump < path.size())
                return jump;
        }
        return kNoJump;
    }

    const Graph& g_;
    std::size_t n_;
    std::size_t words_;
    std::vector<Vertex> first_order_, first_path_, best_order_, best_path_;
    Certificate first_cert_, best_cert_;
    std::vector<std::vector<Vertex>> generators_;
    std::size_t leaves_ = 0;
};

} // namespace

CanonicalLabeling canonical_labeling(const Graph& g) { return Searcher(g).run(); }

std::string canonical_form(const Graph& g) {
    if (g.order() == 0)
        return write_graph6(g);
    const auto lab = canonical_labeling(g);
    return write_graph6(relabel(g, lab.labeling));
}

} // namespace cospec
