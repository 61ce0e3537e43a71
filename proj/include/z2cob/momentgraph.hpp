#pragma once

// Moment graphs: regular graphs with edges colored by characters.

#include <optional>
#include <string>
#include <vector>

#include "z2cob/polytopes.hpp"
#include "z2cob/representations.hpp"

namespace z2cob {

struct GraphEdge {
    int u;
    int v;
    Character color;
};

class MomentGraph {
public:
    MomentGraph() = default;
    MomentGraph(int n, std::vector<std::string> vertex_labels, std::vector<GraphEdge> edges);

    int dim() const { return n_; }
    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::string>& vertex_labels() const { return labels_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }
    // Edge indices at vertex p (E_p).
    const std::vector<int>& incident(int p) const { return incident_[p]; }
    int other_end(int edge, int p) const;

    // Empty when the graph is n-regular, loop-free and has nonzero colors.
    std::vector<std::string> structure_problems() const;

private:
    int n_ = 0;
    std::vector<std::string> labels_;
    std::vector<GraphEdge> edges_;
    std::vector<std::vector<int>> incident_;
};

MomentGraph moment_graph(const SmallCover& c);

struct AxiomReport {
    std::vector<std::string> span_failures;        // vertices whose colors do not span
    std::vector<std::string> congruence_failures;  // edges breaking the mod alpha(e) relation
    std::vector<std::string> structure_failures;
    bool all_single_edges = true;                  // |E_e| = 1 for every edge
    bool ok() const { return span_failures.empty() && congruence_failures.empty() && structure_failures.empty(); }
    std::string to_string() const;
};

AxiomReport check_axial_axioms(const MomentGraph& g);

// A nest: vertex set and edge set (indices into the graph), sorted.
struct Nest {
    std::vector<int> vertices;
    std::vector<int> edges;
    friend bool operator==(const Nest&, const Nest&) = default;
    friend auto operator<=>(const Nest&, const Nest&) = default;
};

// With the polytope: its k-faces. Without: connected components of the
// subgraph colored inside a k-dimensional span of k edges at a vertex, kept
// when k-regular with span dimension k.
std::vector<Nest> nests(const MomentGraph& g, int k, const SimplePolytope* polytope = nullptr);
// Every connected k-valent subgraph with span dimension k, maximal or not.
// Only for k <= 2 and graphs with at most 32 vertices.
std::vector<Nest> all_nests(const MomentGraph& g, int k);

std::vector<BitVec> nest_span(const Nest& nest, const MomentGraph& g);
// Annihilator of the span of the nest colors, a basis of the dual space.
std::vector<BitVec> eta(const Nest& nest, const MomentGraph& g);

// |V| - |E| + number of 2-nests.
int euler_characteristic(const MomentGraph& g, const SimplePolytope* polytope = nullptr);

std::string to_dot(const MomentGraph& g);

}  // namespace z2cob
