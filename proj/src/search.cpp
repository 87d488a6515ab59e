#include "cospec/search.hpp"

#include "cospec/canonical.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cospec {

std::string encode_coefficients(const IntPolynomial& p) {
    std::ostringstream out;
    bool first = true;
    for (const auto& c : p.coeffs()) {
        if (!first)
            out << ',';
        out << c;
        first = false;
    }
    return out.str();
}

Fingerprint fingerprint(const Graph& g) {
    Fingerprint f;
    f.order = g.order();
    f.edges = g.edge_count();
    const IntPolynomial cp = char_poly(g);
    f.inertia = inertia_from_char_poly(cp);
    f.rank = f.inertia.rank();
    f.cp_key = encode_coefficients(cp);
    f.ac_key = encode_coefficients(strip_zero_roots(cp).reduced);
    f.sc_key = encode_coefficients(strip_zero_roots(squared_char_poly(cp)).reduced);
    return f;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

namespace {

struct Member {
    std::string canonical;
    Fingerprint fp;
};

struct LineOutcome {
    bool skipped = false;
    std::optional<Member> member;
    std::optional<ScanError> error;
};

bool is_blank_or_header(std::string_view line) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
        line.remove_suffix(1);
    return line.empty() || line == ">>graph6<<";
}

LineOutcome process_line(const std::string& line, std::size_t line_number) {
    LineOutcome out;
    if (is_blank_or_header(line)) {
        out.skipped = true;
        return out;
    }
    try {
        const Graph g = parse_graph6(line);
        out.member = Member{canonical_form(g), fingerprint(g)};
    } catch (const Graph6Error& e) {
        out.error = ScanError{line_number, e.position(), e.what()};
    } catch (const std::exception& e) {
        out.error = ScanError{line_number, 0, e.what()};
    }
    return out;
}

bool canonical_less(const std::string& a, const std::string& b) {
    return std::make_tuple(a.size(), std::string_view(a)) < std::make_tuple(b.size(), std::string_view(b));
}

// Groups are keyed by sc_key; members are unique canonical forms.
SearchResult finalize(std::vector<std::vector<Member>> groups, std::vector<ScanError> errors, ScanStats stats) {
    SearchResult result;
    for (auto& members : groups) {
        std::sort(members.begin(), members.end(),
                  [](const Member& a, const Member& b) { return canonical_less(a.canonical, b.canonical); });
        Bucket b;
        b.sc_key = members.front().fp.sc_key;
        b.edges = members.front().fp.edges;
        b.rank = members.front().fp.rank;
        for (const auto& m : members) {
            b.members.push_back(m.canonical);
            b.orders.push_back(m.fp.order);
        }
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                if (members[i].fp.cp_key == members[j].fp.cp_key) {
                    b.cospectral_pairs.emplace_back(i, j);
                } else {
                    b.ncsc_pairs.emplace_back(i, j);
                    if (members[i].fp.ac_key == members[j].fp.ac_key)
                        b.almost_cospectral_pairs.emplace_back(i, j);
                }
            }
        stats.ncsc_pairs += b.ncsc_pairs.size();
        stats.cospectral_pairs += b.cospectral_pairs.size();
        stats.almost_cospectral_pairs += b.almost_cospectral_pairs.size();
        if (b.members.size() >= 2)
            ++stats.shared_buckets;
        result.buckets.push_back(std::move(b));
    }
    std::sort(result.buckets.begin(), result.buckets.end(), [](const Bucket& a, const Bucket& b) {
        return std::tie(a.edges, a.rank, a.sc_key) < std::tie(b.edges, b.rank, b.sc_key);
    });
    stats.buckets = result.buckets.size();
    stats.parse_errors = errors.size();
    result.errors = std::move(errors);
    result.stats = stats;
    return result;
}

// Hash key salted with the cheap invariants every SC pair shares.
std::string salted_key(const Fingerprint& f) {
    return std::to_string(f.edges) + '|' + std::to_string(f.rank) + '|' + f.sc_key;
}

} // namespace

SearchResult scan(std::span<const std::string> lines, const ScanOptions& options) {
    const auto started = std::chrono::steady_clock::now();
    const std::size_t workers = std::max<std::size_t>(1, options.workers);
    std::vector<LineOutcome> outcomes(lines.size());

    const auto count = static_cast<long>(lines.size());
#pragma omp parallel for num_threads(static_cast<int>(workers)) schedule(dynamic, 8)
    for (long i = 0; i < count; ++i)
        outcomes[static_cast<std::size_t>(i)] =
            process_line(lines[static_cast<std::size_t>(i)], static_cast<std::size_t>(i) + 1);

    ScanStats stats;
    stats.lines = lines.size();
    stats.workers = workers;
    std::vector<ScanError> errors;
    std::unordered_set<std::string> seen;
    std::unordered_map<std::string, std::size_t> bucket_of;
    std::vector<std::vector<Member>> groups;
    for (auto& o : outcomes) {
        if (o.skipped)
            continue;
        if (o.error) {
            errors.push_back(std::move(*o.error));
            continue;
        }
        ++stats.graphs_scanned;
        if (!seen.insert(o.member->canonical).second) {
            ++stats.duplicates;
            continue;
        }
        ++stats.unique_graphs;
        auto [it, inserted] = bucket_of.try_emplace(salted_key(o.member->fp), groups.size());
        if (inserted)
            groups.emplace_back();
        groups[it->second].push_back(std::move(*o.member));
    }
    auto result = finalize(std::move(groups), std::move(errors), stats);
    result.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

SearchResult scan_reference(std::span<const std::string> lines) {
    const auto started = std::chrono::steady_clock::now();
    ScanStats stats;
    stats.lines = lines.size();
    std::vector<ScanError> errors;
    std::set<std::string> seen;
    std::map<std::string, std::vector<Member>> by_key;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        LineOutcome o = process_line(lines[i], i + 1);
        if (o.skipped)
            continue;
        if (o.error) {
            errors.push_back(*o.error);
            continue;
        }
        ++stats.graphs_scanned;
        if (seen.contains(o.member->canonical)) {
            ++stats.duplicates;
            continue;
        }
        seen.insert(o.member->canonical);
        ++stats.unique_graphs;
        by_key[o.member->fp.sc_key].push_back(std::move(*o.member));
    }
    std::vector<std::vector<Member>> groups;
    for (auto& [key, members] : by_key)
        groups.push_back(std::move(members));
    auto result = finalize(std::move(groups), std::move(errors), stats);
    result.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

} // namespace cospec
