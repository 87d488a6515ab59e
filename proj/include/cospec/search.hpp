#ifndef COSPEC_SEARCH_HPP
#define COSPEC_SEARCH_HPP

#include "cospec/exact.hpp"
#include "cospec/graph.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace cospec {

/// Exact spectral keys of one graph. Two graphs share sc_key exactly when
/// they are singularly cospectral, cp_key when cospectral, ac_key when
/// almost cospectral.
struct Fingerprint {
    std::size_t order = 0;
    std::size_t edges = 0;
    std::size_t rank = 0;
    Inertia inertia;
    std::string sc_key;
    std::string cp_key;
    std::string ac_key;
};

// Decimal coefficients, lowest power first, comma separated.
std::string encode_coefficients(const IntPolynomial& p);

Fingerprint fingerprint(const Graph& g);

struct ScanError {
    std::size_t line = 0; // 1-based
    std::size_t position = 0;
    std::string message;
};

using IndexPair = std::pair<std::size_t, std::size_t>;

// One class of singularly cospectral graphs, isomorphs removed.
struct Bucket {
    std::string sc_key;
    std::size_t edges = 0;
    std::size_t rank = 0;
    std::vector<std::string> members; // canonical graph6, sorted
    std::vector<std::size_t> orders;
    std::vector<IndexPair> ncsc_pairs;
    std::vector<IndexPair> cospectral_pairs;        // nonisomorphic cospectral mates
    std::vector<IndexPair> almost_cospectral_pairs; // AC but not cospectral (different orders)
};

struct ScanStats {
    std::size_t lines = 0;
    std::size_t graphs_scanned = 0;
    std::size_t unique_graphs = 0;
    std::size_t duplicates = 0;
    std::size_t buckets = 0;
    std::size_t shared_buckets = 0; // buckets with two or more members
    std::size_t ncsc_pairs = 0;
    std::size_t cospectral_pairs = 0;
    std::size_t almost_cospectral_pairs = 0;
    std::size_t parse_errors = 0;
    std::size_t workers = 1;
    double wall_seconds = 0;
};

struct SearchResult {
    std::vector<Bucket> buckets; // every bucket, ordered by (edges, rank, sc_key)
    std::vector<ScanError> errors;
    ScanStats stats;
};

struct ScanOptions {
    std::size_t workers = 1;
};

/// Parallel scan: lines are parsed, canonicalized and fingerprinted
/// independently across workers, then merged in input order by a single
/// owner. Blank lines and ">>graph6<<" header lines are skipped.
SearchResult scan(std::span<const std::string> lines, const ScanOptions& options = {});

// Plain serial implementation of the same contract, kept as the test reference.
SearchResult scan_reference(std::span<const std::string> lines);

std::vector<std::string> split_lines(const std::string& text);

} // namespace cospec

#endif // COSPEC_SEARCH_HPP
