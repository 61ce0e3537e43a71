#pragma once

// Simple polytopes as facet/vertex incidence structures, characteristic
// functions on them, and the small covers they define.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "z2cob/representations.hpp"
#include "z2cob/z2algebra.hpp"

namespace z2cob {

struct Edge {
    int u;
    int v;
    std::vector<int> facets;  // the dim-1 facets containing the edge, sorted
};

class SimplePolytope {
public:
    SimplePolytope() = default;
    // Facet indices inside each vertex are sorted; nothing else is checked here.
    SimplePolytope(int dim, std::vector<std::string> facet_labels, std::vector<std::vector<int>> vertices);

    int dim() const { return dim_; }
    int facet_count() const { return static_cast<int>(facets_.size()); }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    const std::vector<std::string>& facet_labels() const { return facets_; }
    const std::vector<std::vector<int>>& vertices() const { return vertices_; }
    const std::vector<int>& vertex(int i) const { return vertices_[i]; }
    std::optional<int> facet_index(std::string_view label) const;

    // Facet subsets of size dim-1 shared by exactly two vertices.
    std::vector<Edge> edges() const;
    std::vector<int> vertices_on_facet(int f) const;

    friend bool operator==(const SimplePolytope&, const SimplePolytope&) = default;

private:
    int dim_ = 0;
    std::vector<std::string> facets_;
    std::vector<std::vector<int>> vertices_;
};

struct Violation {
    std::string kind;  // "vertex degree", "edge", "facet cycle", "Euler", "connectivity", ...
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    bool has(std::string_view kind) const;
    std::string to_string() const;
};

ValidationReport validate(const SimplePolytope& p);

enum class Builtin { Simplex3, Prism3, Cube3 };
SimplePolytope builtin(Builtin which);
// "simplex3", "prism3" or "cube3"; throws SyntaxError otherwise.
SimplePolytope builtin(std::string_view name);

// Facet index -> value in Hom(Z2, (Z2)^n).
using Coloring = std::vector<BitVec>;

// Empty when valid, otherwise a description of the first failing vertex.
std::optional<std::string> coloring_problem(const SimplePolytope& p, const Coloring& c);

class SmallCover {
public:
    SmallCover() = default;
    // Throws InvalidColoring when c is not a characteristic function on p.
    SmallCover(SimplePolytope p, Coloring c);

    const SimplePolytope& polytope() const { return polytope_; }
    const Coloring& coloring() const { return coloring_; }
    int dim() const { return polytope_.dim(); }

    friend bool operator==(const SmallCover&, const SmallCover&) = default;

private:
    SimplePolytope polytope_;
    Coloring coloring_;
};

// Standard coloring of the simplex: e1, e2, e3, e1+e2+e3.
Coloring lambda0();
// The five prism colorings lambda_1 .. lambda_5 (facets F1..F5).
Coloring prism_lambda(int i);

// sigma o lambda.
Coloring compose(const BitMatrix& sigma, const Coloring& c);

std::vector<Coloring> enumerate_colorings(const SimplePolytope& p, int n);

struct ColoringOrbit {
    Coloring representative;  // minimal element of the orbit
    std::size_t size;
    bool free;  // size equals |GL(n, Z2)|
};
std::vector<ColoringOrbit> coloring_orbits(const std::vector<Coloring>& colorings, int n);

// Dual basis of the given independent facet values.
RepMonomial dual_basis(std::span<const BitVec> values);
RepMonomial vertex_monomial(const SmallCover& c, int vertex);
RepSet tangent_rep_set(const SmallCover& c);
PrimeRepSet prime_set(const SmallCover& c);
bool is_bounding(const SmallCover& c);

// {sigma : prime set of sigma o lambda equals that of lambda}.
std::vector<BitMatrix> coloring_class_stabilizer(const SmallCover& c);

// First vertex (in index order) whose tangent monomial is m.
std::optional<int> find_vertex(const SmallCover& c, const RepMonomial& m);

// Glue a at va to sigma o b at vb. Facets of the result are F1.., a's first.
SmallCover connected_sum(const SmallCover& a, int va, const SmallCover& b, int vb, const BitMatrix& sigma);

std::string serialize_polytope(const SimplePolytope& p);
SimplePolytope parse_polytope(std::string_view text);
// Polytope lines followed by one "color <facet> <bits>" line per facet.
std::string serialize_small_cover(const SmallCover& c);
SmallCover parse_small_cover(std::string_view text);

}  // namespace z2cob
