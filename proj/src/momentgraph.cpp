#include "z2cob/momentgraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "z2cob/error.hpp"

namespace z2cob {

namespace {

std::uint32_t reduce_mod(std::uint32_t x, std::uint32_t a) { return std::min(x, x ^ a); }

int span_dim(const std::vector<BitVec>& vs) {
    std::vector<std::uint64_t> rows;
    for (const auto& v : vs) rows.push_back(v.bits());
    return rank(rows);
}

bool in_span(const std::vector<std::uint64_t>& basis_rows, std::uint32_t x) {
    std::vector<std::uint64_t> rows = basis_rows;
    int before = rank(rows);
    rows.push_back(x);
    return rank(rows) == before;
}

Nest make_nest(std::set<int> vs, std::set<int> es) {
    return Nest{{vs.begin(), vs.end()}, {es.begin(), es.end()}};
}

// Connected component of p in the subgraph made of `allowed` edges.
Nest component(const MomentGraph& g, int p, const std::vector<char>& allowed) {
    std::set<int> vs{p}, es;
    std::vector<int> stack{p};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int e : g.incident(x)) {
            if (!allowed[e]) continue;
            es.insert(e);
            int y = g.other_end(e, x);
            if (vs.insert(y).second) stack.push_back(y);
        }
    }
    return make_nest(vs, es);
}

bool is_regular(const MomentGraph& g, const Nest& n, int k) {
    std::map<int, int> degree;
    for (int v : n.vertices) degree[v] = 0;
    for (int e : n.edges) {
        ++degree[g.edges()[e].u];
        ++degree[g.edges()[e].v];
    }
    return std::all_of(degree.begin(), degree.end(), [&](const auto& kv) { return kv.second == k; });
}

std::vector<Nest> vertex_nests(const MomentGraph& g) {
    std::vector<Nest> out;
    for (int v = 0; v < g.vertex_count(); ++v) out.push_back(Nest{{v}, {}});
    return out;
}

}  // namespace

MomentGraph::MomentGraph(int n, std::vector<std::string> vertex_labels, std::vector<GraphEdge> edges)
    : n_(n), labels_(std::move(vertex_labels)), edges_(std::move(edges)), incident_(labels_.size()) {
    for (int i = 0; i < edge_count(); ++i) {
        const auto& e = edges_[i];
        if (e.u < 0 || e.v < 0 || e.u >= vertex_count() || e.v >= vertex_count())
            throw Error(ErrorCode::InvalidGraph, "edge endpoint out of range");
        if (e.color.dim() != n) throw Error(ErrorCode::DimensionMismatch, "edge color of wrong dimension");
        incident_[e.u].push_back(i);
        if (e.v != e.u) incident_[e.v].push_back(i);
    }
}

int MomentGraph::other_end(int edge, int p) const {
    const auto& e = edges_[edge];
    return e.u == p ? e.v : e.u;
}

std::vector<std::string> MomentGraph::structure_problems() const {
    std::vector<std::string> out;
    for (int i = 0; i < edge_count(); ++i) {
        if (edges_[i].u == edges_[i].v) out.push_back("self-loop at " + labels_[edges_[i].u]);
        if (edges_[i].color.is_zero()) out.push_back("zero color on an edge at " + labels_[edges_[i].u]);
    }
    for (int p = 0; p < vertex_count(); ++p)
        if (static_cast<int>(incident_[p].size()) != n_)
            out.push_back(labels_[p] + " has valence " + std::to_string(incident_[p].size()));
    return out;
}

MomentGraph moment_graph(const SmallCover& c) {
    const auto& p = c.polytope();
    std::vector<std::string> labels;
    for (int v = 0; v < p.vertex_count(); ++v) labels.push_back("v" + std::to_string(v + 1));
    std::vector<GraphEdge> edges;
    for (const auto& e : p.edges()) {
        const auto& fs = p.vertex(e.u);
        std::vector<BitVec> vals;
        int missing = -1;
        for (int i = 0; i < static_cast<int>(fs.size()); ++i) {
            vals.push_back(c.coloring()[fs[i]]);
            if (!std::binary_search(e.facets.begin(), e.facets.end(), fs[i])) missing = i;
        }
        BitMatrix inv = invert(BitMatrix::from_columns(vals));
        edges.push_back({e.u, e.v, inv.row(missing)});
    }
    return MomentGraph(c.dim(), std::move(labels), std::move(edges));
}

std::string AxiomReport::to_string() const {
    std::ostringstream out;
    out << "axiom 1 (span): " << (span_failures.empty() ? "pass" : "fail") << "\n";
    for (const auto& s : span_failures) out << "  " << s << "\n";
    out << "axiom 2 (congruence): " << (congruence_failures.empty() ? "pass" : "fail") << "\n";
    for (const auto& s : congruence_failures) out << "  " << s << "\n";
    for (const auto& s : structure_failures) out << "structure: " << s << "\n";
    out << "single edges: " << (all_single_edges ? "yes" : "no") << "\n";
    return out.str();
}

AxiomReport check_axial_axioms(const MomentGraph& g) {
    AxiomReport r;
    r.structure_failures = g.structure_problems();
    for (int p = 0; p < g.vertex_count(); ++p) {
        std::vector<BitVec> colors;
        for (int e : g.incident(p)) colors.push_back(g.edges()[e].color);
        if (span_dim(colors) != g.dim())
            r.span_failures.push_back(g.vertex_labels()[p] + " colors span dimension " +
                                      std::to_string(span_dim(colors)));
    }
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edges()[i];
        const std::uint32_t a = e.color.bits();
        auto opposite = [&](int p) {
            std::vector<std::uint32_t> rest;
            for (int f : g.incident(p)) {
                const auto& x = g.edges()[f];
                bool joins = (x.u == e.u && x.v == e.v) || (x.u == e.v && x.v == e.u);
                if (!joins) rest.push_back(reduce_mod(x.color.bits(), a));
            }
            std::sort(rest.begin(), rest.end());
            return rest;
        };
        int parallel = 0;
        for (int f : g.incident(e.u)) {
            const auto& x = g.edges()[f];
            if ((x.u == e.u && x.v == e.v) || (x.u == e.v && x.v == e.u)) ++parallel;
        }
        if (parallel != 1) r.all_single_edges = false;
        if (opposite(e.u) != opposite(e.v))
            r.congruence_failures.push_back("edge " + g.vertex_labels()[e.u] + "-" + g.vertex_labels()[e.v] +
                                            " colored " + character_to_string(e.color));
    }
    return r;
}

std::vector<Nest> nests(const MomentGraph& g, int k, const SimplePolytope* polytope) {
    if (k < 0 || k > g.dim()) throw Error(ErrorCode::DimensionMismatch, "nest dimension out of range");
    if (k == 0) return vertex_nests(g);
    std::set<Nest> found;
    if (polytope) {
        const int codim = polytope->dim() - k;
        // Faces of dimension k: nonempty intersections of codim facets.
        std::set<std::vector<int>> faces;
        for (const auto& fs : polytope->vertices()) {
            std::vector<int> pick(fs.size(), 0);
            std::fill(pick.begin(), pick.begin() + codim, 1);
            std::sort(pick.begin(), pick.end());
            do {
                std::vector<int> s;
                for (std::size_t i = 0; i < fs.size(); ++i)
                    if (pick[i]) s.push_back(fs[i]);
                faces.insert(s);
            } while (std::next_permutation(pick.begin(), pick.end()));
        }
        const auto pedges = polytope->edges();
        for (const auto& face : faces) {
            std::set<int> vs, es;
            for (int v = 0; v < polytope->vertex_count(); ++v)
                if (std::includes(polytope->vertex(v).begin(), polytope->vertex(v).end(), face.begin(), face.end()))
                    vs.insert(v);
            for (int i = 0; i < static_cast<int>(pedges.size()); ++i)
                if (std::includes(pedges[i].facets.begin(), pedges[i].facets.end(), face.begin(), face.end()))
                    es.insert(i);
            found.insert(make_nest(vs, es));
        }
        return {found.begin(), found.end()};
    }
    for (int p = 0; p < g.vertex_count(); ++p) {
        const auto& inc = g.incident(p);
        std::vector<int> pick(inc.size(), 0);
        if (k > static_cast<int>(inc.size())) continue;
        std::fill(pick.end() - k, pick.end(), 1);
        do {
            std::vector<std::uint64_t> basis;
            for (std::size_t i = 0; i < inc.size(); ++i)
                if (pick[i]) basis.push_back(g.edges()[inc[i]].color.bits());
            if (rank(basis) != k) continue;
            std::vector<char> allowed(static_cast<std::size_t>(g.edge_count()), 0);
            for (int e = 0; e < g.edge_count(); ++e) allowed[e] = in_span(basis, g.edges()[e].color.bits());
            Nest n = component(g, p, allowed);
            if (is_regular(g, n, k) && span_dim(nest_span(n, g)) == k) found.insert(n);
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return {found.begin(), found.end()};
}

std::vector<Nest> all_nests(const MomentGraph& g, int k) {
    if (k < 0 || k > 2) throw Error(ErrorCode::Unsupported, "exhaustive nest search supports k <= 2");
    if (g.vertex_count() > 32) throw Error(ErrorCode::Unsupported, "exhaustive nest search supports <= 32 vertices");
    if (k == 0) return vertex_nests(g);
    std::set<Nest> found;
    if (k == 1) {
        for (int e = 0; e < g.edge_count(); ++e) {
            const auto& x = g.edges()[e];
            if (x.u != x.v) found.insert(make_nest({x.u, x.v}, {e}));
        }
        return {found.begin(), found.end()};
    }
    // k == 2: simple cycles whose colors span a plane, rooted at their smallest vertex.
    // Paths whose colors already span three dimensions are cut off.
    std::vector<int> path_edges;
    std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<std::uint64_t> path_colors;
    std::function<void(int, int, int)> walk = [&](int root, int x, int via) {
        for (int e : g.incident(x)) {
            if (e == via) continue;
            int y = g.other_end(e, x);
            if (y < root) continue;
            path_colors.push_back(g.edges()[e].color.bits());
            bool planar = rank(path_colors) <= 2;
            path_colors.pop_back();
            if (!planar) continue;
            if (y == root && path_edges.size() >= 1) {
                path_edges.push_back(e);
                std::set<int> vs, es(path_edges.begin(), path_edges.end());
                for (int f : path_edges) {
                    vs.insert(g.edges()[f].u);
                    vs.insert(g.edges()[f].v);
                }
                Nest n = make_nest(vs, es);
                if (n.edges.size() == n.vertices.size() && is_regular(g, n, 2) && span_dim(nest_span(n, g)) == 2)
                    found.insert(n);
                path_edges.pop_back();
                continue;
            }
            if (on_path[y]) continue;
            on_path[y] = 1;
            path_edges.push_back(e);
            path_colors.push_back(g.edges()[e].color.bits());
            walk(root, y, e);
            path_colors.pop_back();
            path_edges.pop_back();
            on_path[y] = 0;
        }
    };
    for (int root = 0; root < g.vertex_count(); ++root) {
        on_path[root] = 1;
        walk(root, root, -1);
        on_path[root] = 0;
    }
    return {found.begin(), found.end()};
}

std::vector<BitVec> nest_span(const Nest& nest, const MomentGraph& g) {
    std::vector<BitVec> colors;
    for (int e : nest.edges) colors.push_back(g.edges()[e].color);
    return span_basis(colors);
}

std::vector<BitVec> eta(const Nest& nest, const MomentGraph& g) {
    return null_space(nest_span(nest, g), g.dim());
}

int euler_characteristic(const MomentGraph& g, const SimplePolytope* polytope) {
    if (g.dim() != 3) throw Error(ErrorCode::Unsupported, "Euler characteristic bookkeeping is for n = 3");
    return g.vertex_count() - g.edge_count() + static_cast<int>(nests(g, 2, polytope).size());
}

std::string to_dot(const MomentGraph& g) {
    static const char* palette[] = {"black", "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta"};
    std::ostringstream out;
    out << "graph moment {\n";
    for (const auto& l : g.vertex_labels()) out << "  \"" << l << "\";\n";
    for (const auto& e : g.edges()) {
        out << "  \"" << g.vertex_labels()[e.u] << "\" -- \"" << g.vertex_labels()[e.v] << "\" [label=\""
            << character_to_string(e.color) << "\", color=" << palette[e.color.bits() % 8] << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace z2cob
