#include "grouptest/hypergraph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace gt {

Hypergraph::Hypergraph(std::uint32_t vertices, std::uint32_t edge_size,
                       std::vector<std::vector<std::uint32_t>> edges)
    : vertices_(vertices), edge_size_(edge_size), edges_(std::move(edges)) {
    if (edge_size_ < 2) throw std::invalid_argument("hypergraph: edge size must be >= 2");
    if (vertices_ < edge_size_)
        throw std::invalid_argument("hypergraph: fewer vertices than the edge size");
    for (auto& e : edges_) {
        std::sort(e.begin(), e.end());
        if (e.size() != edge_size_ ||
            std::adjacent_find(e.begin(), e.end()) != e.end())
            throw std::invalid_argument("hypergraph: edge must have " +
                                        std::to_string(edge_size_) + " distinct vertices");
        if (e.back() >= vertices_)
            throw std::invalid_argument("hypergraph: vertex out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

Rational Hypergraph::density() const {
    BigInt total = binomial(vertices_, edge_size_);
    if (total > BigInt(std::numeric_limits<std::int64_t>::max()))
        throw std::overflow_error("hypergraph: C(V, c) exceeds 64 bits");
    return Rational(static_cast<std::int64_t>(edges_.size()),
                    static_cast<std::int64_t>(total));
}

std::vector<std::vector<std::uint32_t>> greedy_maximal_matching(const Hypergraph& graph) {
    std::vector<bool> used(graph.vertices(), false);
    std::vector<std::vector<std::uint32_t>> matching;
    for (const auto& edge : graph.edges()) {
        bool free = true;
        for (std::uint32_t v : edge)
            if (used[v]) {
                free = false;
                break;
            }
        if (!free) continue;
        for (std::uint32_t v : edge) used[v] = true;
        matching.push_back(edge);
    }
    return matching;
}

BoundReport check_matching_lemma(const Hypergraph& graph) {
    const std::uint64_t V = graph.vertices();
    const std::uint64_t c = graph.edge_size();
    const BigInt total = binomial(V, c);
    const BigInt edges = graph.edges().size();
    const std::uint64_t matched = greedy_maximal_matching(graph).size();

    // matching >= (|E| / C(V,c)) (V - c + 1) / c^2, cross-multiplied.
    const BigInt lhs = BigInt(matched) * c * c * total;
    const BigInt rhs = edges * (V - c + 1);

    BoundReport report;
    report.name = "matching";
    report.computed = graph.density() * Rational(static_cast<std::int64_t>(V - c + 1),
                                                 static_cast<std::int64_t>(c * c));
    report.satisfied = lhs >= rhs;
    report.detail = "greedy matching of size " + std::to_string(matched) +
                    (report.satisfied ? " meets" : " misses") + " the density bound " +
                    report.computed.str();
    return report;
}

} // namespace gt
