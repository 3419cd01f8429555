#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gss/errors.hpp"

namespace gss {

/// Undirected simple graph with a fixed vertex order. Edges are stored as
/// one bit per unordered pair, lower-triangle row-major: (2,1), (3,1), (3,2),
/// (4,1), (4,2), (4,3), ... in 1-based terms. Vertices are 0-based in the API.
/// Equality is positional: two graphs are equal iff the vertex counts and all
/// edge bits match.
class Graph {
public:
    Graph() : n_(1) {}
    Graph(std::uint32_t n, std::vector<std::uint8_t> triangle_bits);

    static std::size_t triangle_size(std::uint32_t n) {
        return static_cast<std::size_t>(n) * (n - 1) / 2;
    }

    /// Position of the pair (i, j), i > j, within the triangle bit sequence.
    static std::size_t pair_index(std::uint32_t i, std::uint32_t j);

    std::uint32_t vertex_count() const { return n_; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }
    bool has_edge(std::uint32_t i, std::uint32_t j) const;
    std::size_t edge_count() const;

    bool operator==(const Graph&) const = default;

private:
    std::uint32_t n_;
    std::vector<std::uint8_t> bits_; // length n(n-1)/2, entries 0/1
};

/// Per-vertex color digits from the palette {0, ..., k-1}.
class Coloring {
public:
    Coloring() : k_(1), colors_(1, 0) {}
    Coloring(std::uint32_t k, std::vector<std::uint32_t> colors);

    std::uint32_t palette_size() const { return k_; }
    std::uint32_t size() const { return static_cast<std::uint32_t>(colors_.size()); }
    const std::vector<std::uint32_t>& colors() const { return colors_; }
    std::uint32_t color_of(std::uint32_t v) const { return colors_.at(v); }

    bool operator==(const Coloring&) const = default;

private:
    std::uint32_t k_;
    std::vector<std::uint32_t> colors_;
};

/// A graph paired with a coloring of matching length. The coloring is not
/// required to be proper; properness is a predicate, not an invariant.
struct ColoredGraph {
    Graph graph;
    Coloring coloring;

    ColoredGraph();
    ColoredGraph(Graph g, Coloring c);

    /// Structure-only view: palette of size 1, all colors zero.
    static ColoredGraph structure_only(Graph g);

    bool operator==(const ColoredGraph&) const = default;
};

enum class PredicateKind { connected, proper_coloring, bipartite, any };

const char* predicate_name(PredicateKind kind);
std::optional<PredicateKind> predicate_from_name(const std::string& name);

/// Decidable graph restriction. proper_coloring may carry a reference graph
/// against which the instance's coloring is checked (same vertex count
/// required); without one the instance's own structure is used.
struct Predicate {
    PredicateKind kind = PredicateKind::any;
    std::optional<Graph> reference;
};

bool is_connected(const Graph& g);
bool is_proper_coloring(const ColoredGraph& cg);

/// A proper 2-coloring of g, if one exists.
std::optional<Coloring> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

bool evaluate_predicate(const Predicate& p, const ColoredGraph& cg);

/// Color classes in canonical form: empty classes omitted, each class sorted,
/// classes ordered by smallest member. Equal partitions compare equal with ==.
using Partition = std::vector<std::vector<std::uint32_t>>;
Partition partition_of(const Coloring& coloring);

} // namespace gss
