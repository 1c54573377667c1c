#pragma once

#include <cstdint>
#include <vector>

#include "grouptest/analysis.hpp"
#include "grouptest/rational.hpp"

namespace gt {

// c-uniform hypergraph on [0, vertices).  Edges are canonicalized: sorted
// within, sorted across, deduplicated.  Every edge must have exactly
// edge_size distinct vertices.
class Hypergraph {
public:
    Hypergraph(std::uint32_t vertices, std::uint32_t edge_size,
               std::vector<std::vector<std::uint32_t>> edges);

    std::uint32_t vertices() const { return vertices_; }
    std::uint32_t edge_size() const { return edge_size_; }
    const std::vector<std::vector<std::uint32_t>>& edges() const { return edges_; }

    // |E| / C(V, c), exact.
    Rational density() const;

private:
    std::uint32_t vertices_ = 0;
    std::uint32_t edge_size_ = 0;
    std::vector<std::vector<std::uint32_t>> edges_;
};

// Scans edges in canonical order, keeping each edge disjoint from those
// already taken.  Deterministic; the result is maximal but not maximum.
std::vector<std::vector<std::uint32_t>> greedy_maximal_matching(const Hypergraph& graph);

// Density-eps c-hypergraphs have matchings of size >= (eps/c^2)(V - c + 1);
// checks the greedy matching against that bound exactly.
BoundReport check_matching_lemma(const Hypergraph& graph);

} // namespace gt
