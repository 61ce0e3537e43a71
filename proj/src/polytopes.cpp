#include "z2cob/polytopes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "z2cob/error.hpp"

namespace z2cob {

namespace {

using Adjacency = std::vector<std::vector<int>>;

Adjacency adjacency(int n_vertices, const std::vector<Edge>& edges, int skip = -1) {
    Adjacency adj(static_cast<std::size_t>(n_vertices));
    for (const auto& e : edges) {
        if (e.u == skip || e.v == skip) continue;
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

int count_reached(const Adjacency& adj, int start, int skip) {
    std::vector<char> seen(adj.size(), 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 0;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        ++reached;
        for (int y : adj[x])
            if (y != skip && !seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
    }
    return reached;
}

// Articulation points of the graph with `skip` deleted (iterative Tarjan).
std::vector<int> articulation_points(const Adjacency& adj, int skip) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<char> is_cut(n, 0);
    int timer = 0;
    for (int root = 0; root < n; ++root) {
        if (root == skip || disc[root] >= 0) continue;
        int root_children = 0;
        std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            auto& [x, idx] = stack.back();
            if (idx < adj[x].size()) {
                int y = adj[x][idx++];
                if (y == skip) continue;
                if (disc[y] < 0) {
                    parent[y] = x;
                    disc[y] = low[y] = timer++;
                    if (x == root) ++root_children;
                    stack.emplace_back(y, 0);
                } else if (y != parent[x]) {
                    low[x] = std::min(low[x], disc[y]);
                }
            } else {
                int done = x;
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().first;
                    low[p] = std::min(low[p], low[done]);
                    if (p != root && low[done] >= disc[p]) is_cut[p] = 1;
                }
            }
        }
        if (root_children > 1) is_cut[root] = 1;
    }
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (is_cut[i]) out.push_back(i);
    return out;
}

std::vector<std::vector<int>> subsets_dropping_one(const std::vector<int>& v) {
    std::vector<std::vector<int>> out;
    for (std::size_t skip = 0; skip < v.size(); ++skip) {
        std::vector<int> s;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (i != skip) s.push_back(v[i]);
        out.push_back(std::move(s));
    }
    return out;
}

std::string vertex_text(const SimplePolytope& p, int v) {
    std::string s = "v" + std::to_string(v + 1) + " {";
    for (std::size_t i = 0; i < p.vertex(v).size(); ++i) {
        int f = p.vertex(v)[i];
        if (i) s += ",";
        s += (f >= 0 && f < p.facet_count()) ? p.facet_labels()[f] : "?";
    }
    return s + "}";
}

std::uint32_t coloring_key_part(const BitVec& v) { return v.bits(); }

bool less_coloring(const Coloring& a, const Coloring& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const BitVec& x, const BitVec& y) { return x.bits() < y.bits(); });
}

std::vector<std::string> numbered_labels(int count) {
    std::vector<std::string> labels;
    for (int i = 1; i <= count; ++i) labels.push_back("F" + std::to_string(i));
    return labels;
}

struct ParsedFile {
    SimplePolytope polytope;
    std::vector<std::pair<std::string, std::string>> colors;
};

ParsedFile parse_file(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    int dim = -1;
    int declared = -1;
    std::vector<std::string> facets;
    std::vector<std::vector<std::string>> vertex_labels;
    ParsedFile out;
    auto fail = [&](const std::string& why) {
        throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        std::vector<std::string> tok;
        for (std::string w; words >> w;) tok.push_back(w);
        if (tok.empty()) continue;
        if (tok[0] == "polytope") {
            if (dim >= 0) fail("repeated header");
            if (tok.size() != 3 || tok[1].rfind("dim=", 0) != 0 || tok[2].rfind("facets=", 0) != 0)
                fail("header must be 'polytope dim=<d> facets=<k>'");
            try {
                std::size_t used = 0;
                dim = std::stoi(tok[1].substr(4), &used);
                if (used != tok[1].size() - 4) fail("bad dim");
                declared = std::stoi(tok[2].substr(7), &used);
                if (used != tok[2].size() - 7) fail("bad facet count");
            } catch (const std::logic_error&) {
                fail("bad header number");
            }
            if (dim < 1 || dim > 3) fail("dim must be 1..3");
            continue;
        }
        if (dim < 0) fail("missing 'polytope' header");
        if (tok[0] == "facet") {
            if (tok.size() != 2) fail("facet line needs one label");
            if (std::find(facets.begin(), facets.end(), tok[1]) != facets.end()) fail("duplicate facet " + tok[1]);
            facets.push_back(tok[1]);
        } else if (tok[0] == "vertex") {
            if (static_cast<int>(tok.size()) != dim + 1)
                fail("vertex line needs " + std::to_string(dim) + " facet labels");
            vertex_labels.emplace_back(tok.begin() + 1, tok.end());
        } else if (tok[0] == "color") {
            if (tok.size() != 3) fail("color line needs a facet label and a bit string");
            out.colors.emplace_back(tok[1], tok[2]);
        } else {
            fail("unknown keyword '" + tok[0] + "'");
        }
    }
    if (dim < 0) throw Error(ErrorCode::SyntaxError, "empty polytope file");
    if (declared != static_cast<int>(facets.size()))
        throw Error(ErrorCode::SyntaxError, "header declares " + std::to_string(declared) + " facets but " +
                                                std::to_string(facets.size()) + " are listed");
    std::vector<std::vector<int>> vertices;
    for (const auto& labels : vertex_labels) {
        std::vector<int> idx;
        for (const auto& l : labels) {
            auto it = std::find(facets.begin(), facets.end(), l);
            if (it == facets.end()) throw Error(ErrorCode::SyntaxError, "vertex names unknown facet " + l);
            idx.push_back(static_cast<int>(it - facets.begin()));
        }
        vertices.push_back(std::move(idx));
    }
    out.polytope = SimplePolytope(dim, std::move(facets), std::move(vertices));
    ValidationReport report = validate(out.polytope);
    if (!report.ok()) throw Error(ErrorCode::InvalidIncidence, report.to_string());
    return out;
}

}  // namespace

SimplePolytope::SimplePolytope(int dim, std::vector<std::string> facet_labels, std::vector<std::vector<int>> vertices)
    : dim_(dim), facets_(std::move(facet_labels)), vertices_(std::move(vertices)) {
    for (auto& v : vertices_) std::sort(v.begin(), v.end());
}

std::optional<int> SimplePolytope::facet_index(std::string_view label) const {
    for (int i = 0; i < facet_count(); ++i)
        if (facets_[i] == label) return i;
    return std::nullopt;
}

std::vector<Edge> SimplePolytope::edges() const {
    std::map<std::vector<int>, std::vector<int>> by_subset;
    for (int v = 0; v < vertex_count(); ++v)
        for (auto& s : subsets_dropping_one(vertices_[v])) by_subset[s].push_back(v);
    std::vector<Edge> out;
    for (auto& [facets, vs] : by_subset)
        if (vs.size() == 2) out.push_back({vs[0], vs[1], facets});
    std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.u, a.v, a.facets) < std::tie(b.u, b.v, b.facets);
    });
    return out;
}

std::vector<int> SimplePolytope::vertices_on_facet(int f) const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (std::binary_search(vertices_[v].begin(), vertices_[v].end(), f)) out.push_back(v);
    return out;
}

bool ValidationReport::has(std::string_view kind) const {
    return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::to_string() const {
    if (ok()) return "valid";
    std::string s = "invalid:";
    for (const auto& v : violations) s += " [" + v.kind + ": " + v.detail + "]";
    return s;
}

ValidationReport validate(const SimplePolytope& p) {
    ValidationReport r;
    auto add = [&](std::string kind, std::string detail) { r.violations.push_back({std::move(kind), std::move(detail)}); };
    const int d = p.dim();
    if (p.vertex_count() == 0) add("empty", "no vertices");
    bool incidence_ok = true;
    for (int v = 0; v < p.vertex_count(); ++v) {
        const auto& fs = p.vertex(v);
        bool bad_index = std::any_of(fs.begin(), fs.end(), [&](int f) { return f < 0 || f >= p.facet_count(); });
        bool repeated = std::adjacent_find(fs.begin(), fs.end()) != fs.end();
        if (bad_index) add("unknown facet", vertex_text(p, v));
        if (static_cast<int>(fs.size()) != d || repeated) {
            add("vertex degree", vertex_text(p, v) + " lies on " + std::to_string(fs.size()) + " facets, need " +
                                     std::to_string(d) + " distinct");
            incidence_ok = false;
        }
        if (bad_index) incidence_ok = false;
    }
    std::set<std::vector<int>> seen;
    for (int v = 0; v < p.vertex_count(); ++v)
        if (!seen.insert(p.vertex(v)).second) add("duplicate vertex", vertex_text(p, v));
    for (int f = 0; f < p.facet_count(); ++f)
        if (p.vertices_on_facet(f).empty()) add("empty facet", p.facet_labels()[f]);
    if (!incidence_ok || d < 2) return r;

    std::map<std::vector<int>, int> subset_count;
    for (int v = 0; v < p.vertex_count(); ++v)
        for (auto& s : subsets_dropping_one(p.vertex(v))) ++subset_count[s];
    for (int v = 0; v < p.vertex_count(); ++v)
        for (auto& s : subsets_dropping_one(p.vertex(v)))
            if (subset_count[s] != 2) {
                add("edge", vertex_text(p, v) + " has an edge shared by " + std::to_string(subset_count[s]) +
                                " vertices");
                break;
            }
    const auto edges = p.edges();
    const int V = p.vertex_count();
    const auto adj = adjacency(V, edges);
    if (V > 0 && count_reached(adj, 0, -1) != V) add("connectivity", "1-skeleton is disconnected");
    if (d != 3 || !r.ok()) return r;

    for (int f = 0; f < p.facet_count(); ++f) {
        auto on = p.vertices_on_facet(f);
        std::map<int, std::vector<int>> local;
        for (const auto& e : edges)
            if (std::binary_search(e.facets.begin(), e.facets.end(), f)) {
                local[e.u].push_back(e.v);
                local[e.v].push_back(e.u);
            }
        bool cycle = on.size() >= 3;
        for (int v : on)
            if (local[v].size() != 2) cycle = false;
        if (cycle) {
            std::set<int> reached{on.front()};
            std::vector<int> stack{on.front()};
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int y : local[x])
                    if (reached.insert(y).second) stack.push_back(y);
            }
            cycle = reached.size() == on.size();
        }
        if (!cycle) add("facet cycle", "facet " + p.facet_labels()[f] + " is not bounded by a single cycle");
    }
    const int E = static_cast<int>(edges.size());
    const int F = p.facet_count();
    if (V - E + F != 2)
        add("Euler", "V - E + F = " + std::to_string(V) + " - " + std::to_string(E) + " + " + std::to_string(F) +
                         " = " + std::to_string(V - E + F));
    if (V >= 4 && r.ok()) {
        for (int x = 0; x < V; ++x) {
            int start = x == 0 ? 1 : 0;
            bool split = count_reached(adj, start, x) != V - 1 || !articulation_points(adj, x).empty();
            if (split) {
                add("3-connectivity", "removing " + vertex_text(p, x) + " leaves a cut vertex");
                break;
            }
        }
    }
    return r;
}

SimplePolytope builtin(Builtin which) {
    switch (which) {
    case Builtin::Simplex3:
        return SimplePolytope(3, numbered_labels(4), {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    case Builtin::Prism3:
        // F1, F2, F4 are the squares; F3 and F5 the triangles.
        return SimplePolytope(3, numbered_labels(5),
                              {{2, 0, 1}, {2, 1, 3}, {2, 0, 3}, {4, 0, 1}, {4, 1, 3}, {4, 0, 3}});
    case Builtin::Cube3: {
        // Opposite pairs (F1,F2), (F3,F4), (F5,F6).
        std::vector<std::vector<int>> vs;
        for (int x : {0, 1})
            for (int y : {2, 3})
                for (int z : {4, 5}) vs.push_back({x, y, z});
        return SimplePolytope(3, numbered_labels(6), vs);
    }
    }
    throw Error(ErrorCode::Unsupported, "unknown builtin");
}

SimplePolytope builtin(std::string_view name) {
    if (name == "simplex3") return builtin(Builtin::Simplex3);
    if (name == "prism3") return builtin(Builtin::Prism3);
    if (name == "cube3") return builtin(Builtin::Cube3);
    throw Error(ErrorCode::SyntaxError, "unknown builtin polytope '" + std::string(name) + "'");
}

std::optional<std::string> coloring_problem(const SimplePolytope& p, const Coloring& c) {
    if (static_cast<int>(c.size()) != p.facet_count())
        return "coloring has " + std::to_string(c.size()) + " values for " + std::to_string(p.facet_count()) +
               " facets";
    for (const auto& v : c) {
        if (v.dim() != p.dim()) return std::string("coloring value of wrong dimension");
        if (v.is_zero()) return std::string("zero coloring value");
    }
    for (int v = 0; v < p.vertex_count(); ++v) {
        std::vector<BitVec> vals;
        for (int f : p.vertex(v)) vals.push_back(c[f]);
        if (!linearly_independent(vals)) return "values at " + vertex_text(p, v) + " are dependent";
    }
    return std::nullopt;
}

SmallCover::SmallCover(SimplePolytope p, Coloring c) : polytope_(std::move(p)), coloring_(std::move(c)) {
    if (auto problem = coloring_problem(polytope_, coloring_)) throw Error(ErrorCode::InvalidColoring, *problem);
}

Coloring lambda0() {
    return {BitVec(3, 0b001), BitVec(3, 0b010), BitVec(3, 0b100), BitVec(3, 0b111)};
}

Coloring prism_lambda(int i) {
    const BitVec e1(3, 1), e2(3, 2), e3(3, 4);
    switch (i) {
    case 1: return {e1, e2, e3, e1 + e2, e1 + e2 + e3};
    case 2: return {e1, e2, e3, e1 + e2, e1 + e3};
    case 3: return {e1, e2, e3, e1 + e2, e2 + e3};
    case 4: return {e1, e2, e3, e1 + e2, e3};
    case 5: return {e1, e2, e3, e1 + e2 + e3, e3};
    }
    throw Error(ErrorCode::Unsupported, "prism colorings are numbered 1..5");
}

Coloring compose(const BitMatrix& sigma, const Coloring& c) {
    Coloring out;
    out.reserve(c.size());
    for (const auto& v : c) out.push_back(sigma * v);
    return out;
}

std::vector<Coloring> enumerate_colorings(const SimplePolytope& p, int n) {
    if (n != p.dim()) throw Error(ErrorCode::DimensionMismatch, "coloring dimension must equal polytope dimension");
    if (n > 3) throw Error(ErrorCode::DimensionTooLarge, "coloring enumeration supports dim <= 3");
    const int F = p.facet_count();
    std::vector<std::vector<int>> touching(static_cast<std::size_t>(F));
    for (int v = 0; v < p.vertex_count(); ++v)
        for (int f : p.vertex(v)) touching[f].push_back(v);
    std::vector<Coloring> out;
    std::vector<std::uint32_t> values(static_cast<std::size_t>(F), 0);
    const std::uint32_t limit = 1u << n;

    // Partial independence of the assigned values at every vertex through facet f.
    auto consistent = [&](int f) {
        for (int v : touching[f]) {
            std::vector<std::uint64_t> rows;
            for (int g : p.vertex(v))
                if (g <= f) rows.push_back(values[g]);
            if (rank(rows) != static_cast<int>(rows.size())) return false;
        }
        return true;
    };
    std::function<void(int)> extend = [&](int f) {
        if (f == F) {
            Coloring c;
            for (auto v : values) c.emplace_back(n, v);
            out.push_back(std::move(c));
            return;
        }
        for (std::uint32_t val = 1; val < limit; ++val) {
            values[f] = val;
            if (consistent(f)) extend(f + 1);
        }
        values[f] = 0;
    };
    extend(0);
    return out;
}

std::vector<ColoringOrbit> coloring_orbits(const std::vector<Coloring>& colorings, int n) {
    std::vector<ColoringOrbit> out;
    if (colorings.empty()) return out;
    const auto group = enumerate_gl(n);
    auto key = [](const Coloring& c) {
        std::vector<std::uint32_t> k;
        for (const auto& v : c) k.push_back(coloring_key_part(v));
        return k;
    };
    std::set<std::vector<std::uint32_t>> assigned;
    std::vector<Coloring> sorted = colorings;
    std::sort(sorted.begin(), sorted.end(), less_coloring);
    for (const auto& c : sorted) {
        if (assigned.count(key(c))) continue;
        std::set<std::vector<std::uint32_t>> images;
        Coloring best = c;
        for (const auto& g : group) {
            Coloring img = compose(g, c);
            if (less_coloring(img, best)) best = img;
            images.insert(key(img));
        }
        assigned.insert(images.begin(), images.end());
        out.push_back({best, images.size(), images.size() == group.size()});
    }
    std::sort(out.begin(), out.end(),
              [](const ColoringOrbit& a, const ColoringOrbit& b) { return less_coloring(a.representative, b.representative); });
    return out;
}

RepMonomial dual_basis(std::span<const BitVec> values) {
    BitMatrix a = BitMatrix::from_columns(values);
    BitMatrix inv = invert(a);
    std::vector<Character> chars;
    for (int i = 0; i < inv.dim(); ++i) chars.push_back(inv.row(i));
    return monomial_from_chars(chars);
}

RepMonomial vertex_monomial(const SmallCover& c, int vertex) {
    std::vector<BitVec> vals;
    for (int f : c.polytope().vertex(vertex)) vals.push_back(c.coloring()[f]);
    return dual_basis(vals);
}

RepSet tangent_rep_set(const SmallCover& c) {
    RepSet s(c.dim());
    for (int v = 0; v < c.polytope().vertex_count(); ++v) s.add(vertex_monomial(c, v));
    return s;
}

PrimeRepSet prime_set(const SmallCover& c) { return prime_reduce(tangent_rep_set(c)); }

bool is_bounding(const SmallCover& c) { return prime_set(c).empty(); }

std::vector<BitMatrix> coloring_class_stabilizer(const SmallCover& c) {
    const PrimeRepSet base = prime_set(c);
    std::vector<BitMatrix> out;
    for (const auto& g : enumerate_gl(c.dim()))
        if (prime_set(SmallCover(c.polytope(), compose(g, c.coloring()))) == base) out.push_back(g);
    return out;
}

std::optional<int> find_vertex(const SmallCover& c, const RepMonomial& m) {
    for (int v = 0; v < c.polytope().vertex_count(); ++v)
        if (vertex_monomial(c, v) == m) return v;
    return std::nullopt;
}

SmallCover connected_sum(const SmallCover& a, int va, const SmallCover& b, int vb, const BitMatrix& sigma) {
    const auto& pa = a.polytope();
    const auto& pb = b.polytope();
    if (pa.dim() != 3 || pb.dim() != 3) throw Error(ErrorCode::Unsupported, "connected sums are built for dim 3");
    if (va < 0 || va >= pa.vertex_count() || vb < 0 || vb >= pb.vertex_count())
        throw Error(ErrorCode::DimensionMismatch, "glue vertex out of range");
    const Coloring cb = compose(sigma, b.coloring());
    const SmallCover b2(pb, cb);
    const RepMonomial ma = vertex_monomial(a, va);
    const RepMonomial mb = vertex_monomial(b2, vb);
    if (ma != mb)
        throw Error(ErrorCode::NoMatchingMonomial, "monomial " + ma.to_string() + " at a differs from " +
                                                       mb.to_string() + " at b");
    // partner[j] = facet of a glued to facet j of b, or -1.
    std::vector<int> partner(static_cast<std::size_t>(pb.facet_count()), -1);
    for (int fa : pa.vertex(va)) {
        int match = -1;
        for (int fb : pb.vertex(vb))
            if (cb[fb] == a.coloring()[fa]) match = fb;
        if (match < 0)
            throw Error(ErrorCode::NoFacetPairing, "no facet at b carries value " + a.coloring()[fa].to_string());
        partner[match] = fa;
    }
    std::vector<int> b_index(static_cast<std::size_t>(pb.facet_count()));
    int next = pa.facet_count();
    Coloring colors = a.coloring();
    for (int j = 0; j < pb.facet_count(); ++j) {
        if (partner[j] >= 0) {
            b_index[j] = partner[j];
        } else {
            b_index[j] = next++;
            colors.push_back(cb[j]);
        }
    }
    std::vector<std::vector<int>> vertices;
    for (int v = 0; v < pa.vertex_count(); ++v)
        if (v != va) vertices.push_back(pa.vertex(v));
    for (int v = 0; v < pb.vertex_count(); ++v) {
        if (v == vb) continue;
        std::vector<int> fs;
        for (int f : pb.vertex(v)) fs.push_back(b_index[f]);
        vertices.push_back(std::move(fs));
    }
    SimplePolytope p(3, numbered_labels(next), std::move(vertices));
    ValidationReport report = validate(p);
    if (!report.ok()) throw Error(ErrorCode::InvalidIncidence, "connected sum: " + report.to_string());
    return SmallCover(std::move(p), std::move(colors));
}

std::string serialize_polytope(const SimplePolytope& p) {
    std::ostringstream out;
    out << "polytope dim=" << p.dim() << " facets=" << p.facet_count() << "\n";
    for (const auto& f : p.facet_labels()) out << "facet " << f << "\n";
    for (const auto& v : p.vertices()) {
        out << "vertex";
        for (int f : v) out << ' ' << p.facet_labels()[f];
        out << "\n";
    }
    return out.str();
}

SimplePolytope parse_polytope(std::string_view text) {
    ParsedFile f = parse_file(text);
    if (!f.colors.empty()) throw Error(ErrorCode::SyntaxError, "polytope file contains color lines");
    return f.polytope;
}

std::string serialize_small_cover(const SmallCover& c) {
    std::string s = serialize_polytope(c.polytope());
    for (int f = 0; f < c.polytope().facet_count(); ++f)
        s += "color " + c.polytope().facet_labels()[f] + " " + c.coloring()[f].to_string() + "\n";
    return s;
}

SmallCover parse_small_cover(std::string_view text) {
    ParsedFile f = parse_file(text);
    const auto& p = f.polytope;
    std::vector<std::optional<BitVec>> vals(static_cast<std::size_t>(p.facet_count()));
    for (const auto& [label, bits] : f.colors) {
        auto idx = p.facet_index(label);
        if (!idx) throw Error(ErrorCode::SyntaxError, "color line names unknown facet " + label);
        if (vals[*idx]) throw Error(ErrorCode::SyntaxError, "facet " + label + " colored twice");
        BitVec v = BitVec::from_string(bits);
        if (v.dim() != p.dim())
            throw Error(ErrorCode::SyntaxError, "color for " + label + " must have " + std::to_string(p.dim()) + " bits");
        vals[*idx] = v;
    }
    Coloring c;
    for (int i = 0; i < p.facet_count(); ++i) {
        if (!vals[i]) throw Error(ErrorCode::InvalidColoring, "facet " + p.facet_labels()[i] + " has no color");
        c.push_back(*vals[i]);
    }
    return SmallCover(p, std::move(c));
}

}  // namespace z2cob
