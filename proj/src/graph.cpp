#include "gss/graph.hpp"

#include <algorithm>
#include <map>

namespace gss {

Graph::Graph(std::uint32_t n, std::vector<std::uint8_t> triangle_bits)
    : n_(n), bits_(std::move(triangle_bits)) {
    if (n_ < 1) {
        throw CodecError("graph needs at least one vertex");
    }
    if (bits_.size() != triangle_size(n_)) {
        throw CodecError("edge bit count does not match vertex count");
    }
    for (std::uint8_t b : bits_) {
        if (b > 1) {
            throw CodecError("edge bits must be 0 or 1");
        }
    }
}

std::size_t Graph::pair_index(std::uint32_t i, std::uint32_t j) {
    if (i < j) {
        std::swap(i, j);
    }
    // row for vertex i (0-based) starts at i(i-1)/2
    return static_cast<std::size_t>(i) * (i - 1) / 2 + j;
}

bool Graph::has_edge(std::uint32_t i, std::uint32_t j) const {
    if (i == j || i >= n_ || j >= n_) {
        return false;
    }
    return bits_[pair_index(i, j)] != 0;
}

std::size_t Graph::edge_count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

Coloring::Coloring(std::uint32_t k, std::vector<std::uint32_t> colors)
    : k_(k), colors_(std::move(colors)) {
    if (k_ < 1) {
        throw CodecError("palette size must be at least 1");
    }
    for (std::uint32_t c : colors_) {
        if (c >= k_) {
            throw CodecError("color out of palette range");
        }
    }
}

ColoredGraph::ColoredGraph() : graph(), coloring(1, {0}) {}

ColoredGraph::ColoredGraph(Graph g, Coloring c)
    : graph(std::move(g)), coloring(std::move(c)) {
    if (coloring.size() != graph.vertex_count()) {
        throw CodecError("coloring length does not match vertex count");
    }
}

ColoredGraph ColoredGraph::structure_only(Graph g) {
    std::uint32_t n = g.vertex_count();
    return ColoredGraph(std::move(g), Coloring(1, std::vector<std::uint32_t>(n, 0)));
}

const char* predicate_name(PredicateKind kind) {
    switch (kind) {
    case PredicateKind::connected: return "connected";
    case PredicateKind::proper_coloring: return "proper_coloring";
    case PredicateKind::bipartite: return "bipartite";
    case PredicateKind::any: return "any";
    }
    return "any";
}

std::optional<PredicateKind> predicate_from_name(const std::string& name) {
    if (name == "connected") return PredicateKind::connected;
    if (name == "proper_coloring") return PredicateKind::proper_coloring;
    if (name == "bipartite") return PredicateKind::bipartite;
    if (name == "any") return PredicateKind::any;
    return std::nullopt;
}

bool is_connected(const Graph& g) {
    const std::uint32_t n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<std::uint32_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::uint32_t u = stack.back();
        stack.pop_back();
        for (std::uint32_t w = 0; w < n; ++w) {
            if (!seen[w] && g.has_edge(u, w)) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

bool is_proper_coloring(const ColoredGraph& cg) {
    const std::uint32_t n = cg.graph.vertex_count();
    for (std::uint32_t i = 1; i < n; ++i) {
        for (std::uint32_t j = 0; j < i; ++j) {
            if (cg.graph.has_edge(i, j) &&
                cg.coloring.color_of(i) == cg.coloring.color_of(j)) {
                return false;
            }
        }
    }
    return true;
}

std::optional<Coloring> bipartition(const Graph& g) {
    const std::uint32_t n = g.vertex_count();
    std::vector<int> side(n, -1);
    for (std::uint32_t start = 0; start < n; ++start) {
        if (side[start] != -1) {
            continue;
        }
        side[start] = 0;
        std::vector<std::uint32_t> queue{start};
        while (!queue.empty()) {
            std::uint32_t u = queue.back();
            queue.pop_back();
            for (std::uint32_t w = 0; w < n; ++w) {
                if (!g.has_edge(u, w)) {
                    continue;
                }
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                } else if (side[w] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<std::uint32_t> colors(n);
    for (std::uint32_t v = 0; v < n; ++v) {
        colors[v] = static_cast<std::uint32_t>(side[v]);
    }
    return Coloring(2, std::move(colors));
}

bool is_bipartite(const Graph& g) {
    return bipartition(g).has_value();
}

bool evaluate_predicate(const Predicate& p, const ColoredGraph& cg) {
    switch (p.kind) {
    case PredicateKind::any:
        return true;
    case PredicateKind::connected:
        return is_connected(cg.graph);
    case PredicateKind::bipartite:
        return is_bipartite(cg.graph);
    case PredicateKind::proper_coloring:
        if (p.reference) {
            if (p.reference->vertex_count() != cg.graph.vertex_count()) {
                throw ProtocolError("reference graph size differs from instance");
            }
            return is_proper_coloring(ColoredGraph(*p.reference, cg.coloring));
        }
        return is_proper_coloring(cg);
    }
    return true;
}

Partition partition_of(const Coloring& coloring) {
    // Keyed by first occurrence, which already orders classes by smallest member.
    std::map<std::uint32_t, std::size_t> class_of_color;
    Partition classes;
    for (std::uint32_t v = 0; v < coloring.size(); ++v) {
        std::uint32_t c = coloring.color_of(v);
        auto it = class_of_color.find(c);
        if (it == class_of_color.end()) {
            class_of_color.emplace(c, classes.size());
            classes.push_back({v});
        } else {
            classes[it->second].push_back(v);
        }
    }
    return classes;
}

} // namespace gss
