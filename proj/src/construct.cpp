#include "z2cob/construct.hpp"

#include <map>
#include <mutex>

#include "z2cob/error.hpp"
#include "z2cob/reference_data.hpp"

namespace z2cob {

namespace {

const RepMonomial& standard_monomial() {
    static const RepMonomial m = parse_monomial("r1r2r3", 3);
    return m;
}

SmallCover cover_for_mask(std::uint32_t mask) {
    const auto& cat = catalog();
    const LabeledClass* g = cat.find(mask);
    if (!g) throw Error(ErrorCode::ConstructionFailed, "class " + class_id(mask) + " is not a catalog generator");
    return stock_cover(*g);
}

void fail_unless(bool ok, const std::string& why) {
    if (!ok) throw Error(ErrorCode::ConstructionFailed, why);
}

struct Glue {
    int left_vertex;
    int piece_vertex;
    BitMatrix sigma;
    RepMonomial monomial;
};

// First monomial of the piece (vertex order) carried by some vertex of the running cover.
std::optional<Glue> find_glue(const SmallCover& left, const SmallCover& piece, const BitMatrix& sigma) {
    std::map<RepMonomial, int> left_vertex;
    for (int v = left.polytope().vertex_count() - 1; v >= 0; --v) left_vertex[vertex_monomial(left, v)] = v;
    const SmallCover moved(piece.polytope(), compose(sigma, piece.coloring()));
    for (int v = 0; v < moved.polytope().vertex_count(); ++v) {
        RepMonomial m = vertex_monomial(moved, v);
        auto it = left_vertex.find(m);
        if (it != left_vertex.end()) return Glue{it->second, v, sigma, m};
    }
    return std::nullopt;
}

SmallCover apply_step(SumPlan& plan, const SmallCover& left, const std::string& left_name, const SmallCover& piece,
                      const std::string& piece_name, const Glue& g) {
    SmallCover next = connected_sum(left, g.left_vertex, piece, g.piece_vertex, g.sigma);
    plan.steps.push_back(
        {left_name, g.left_vertex, piece_name, g.piece_vertex, g.sigma, g.monomial, next.polytope().vertex_count()});
    return next;
}

}  // namespace

std::string SumStep::trace_line(int k) const {
    return "step " + std::to_string(k) + ": sum " + left + "@v" + std::to_string(left_vertex + 1) + " with " + piece +
           "@v" + std::to_string(piece_vertex + 1) + " via sigma=" + sigma.to_string();
}

std::string SumPlan::trace() const {
    std::string s = "start " + start + " vertices=" + std::to_string(start_vertices) + "\n";
    for (std::size_t i = 0; i < steps.size(); ++i) s += steps[i].trace_line(static_cast<int>(i + 1)) + "\n";
    return s;
}

SmallCover stock_cover(const LabeledClass& generator) {
    static std::mutex lock;
    static std::map<std::uint32_t, SmallCover> cache;
    {
        std::lock_guard<std::mutex> guard(lock);
        if (auto it = cache.find(generator.mask); it != cache.end()) return it->second;
    }
    const int card = generator.cls.card();
    SimplePolytope p;
    Coloring base;
    if (card == 4) {
        p = builtin(Builtin::Simplex3);
        base = lambda0();
    } else if (card == 6) {
        p = builtin(Builtin::Prism3);
        base = prism_lambda(1);
    } else {
        throw Error(ErrorCode::ConstructionFailed, "no stock cover for " + generator.label);
    }
    for (const auto& g : enumerate_gl(3)) {
        SmallCover c(p, compose(g, base));
        if (prime_set(c) == generator.cls.prime()) {
            std::lock_guard<std::mutex> guard(lock);
            cache.emplace(generator.mask, c);
            return c;
        }
    }
    throw Error(ErrorCode::ConstructionFailed, "no automorphism realizes " + generator.label);
}

SmallCover phi0_phi1_cover() {
    const auto& idx = MonomialIndex::instance();
    SmallCover a = cover_for_mask(idx.mask(parse_prime_set(reference::kTableII[0], 3)));
    SmallCover b = cover_for_mask(idx.mask(parse_prime_set(reference::kTableII[1], 3)));
    auto va = find_vertex(a, standard_monomial());
    auto vb = find_vertex(b, standard_monomial());
    fail_unless(va && vb, "Phi0 and Phi1 do not share r1r2r3");
    return connected_sum(a, *va, b, *vb, BitMatrix::identity(3));
}

SmallCover bridge_cover() {
    static const SmallCover bridge = [] {
        SmallCover half = phi0_phi1_cover();
        auto v = find_vertex(half, parse_monomial("r1(r1+r2)(r1+r3)", 3));
        fail_unless(v.has_value(), "Phi0 # Phi1 lacks r1(r1+r2)(r1+r3)");
        return connected_sum(half, *v, half, *v, BitMatrix::identity(3));
    }();
    return bridge;
}

SmallCover universal_cover() {
    static const SmallCover universal = [] {
        const auto& cat = catalog();
        SmallCover current = bridge_cover();
        for (const auto& t : cat.rp_classes) {
            SmallCover piece = stock_cover(t);
            auto g = find_glue(current, piece, BitMatrix::identity(3));
            fail_unless(g.has_value(), "bridge shares no monomial with " + t.label);
            current = connected_sum(current, g->left_vertex, piece, g->piece_vertex, g->sigma);
        }
        return current;
    }();
    return universal;
}

const SmallCover& doubled_universal_cover() {
    static const SmallCover doubled = [] {
        SmallCover m = universal_cover();
        auto v = find_vertex(m, standard_monomial());
        fail_unless(v.has_value(), "universal cover lacks r1r2r3");
        return connected_sum(m, *v, m, *v, BitMatrix::identity(3));
    }();
    return doubled;
}

Representative representative(const CobordismClass& beta, const GeneratorCatalog& cat) {
    const std::uint32_t target = class_mask(beta);
    const std::uint32_t coeff = decompose_mask(target, cat);
    Representative out;
    if (target == 0) {
        out.cover = bridge_cover();
        out.plan.start = "bridge";
        out.plan.start_vertices = out.cover.polytope().vertex_count();
    } else if (const LabeledClass* g = cat.find(target)) {
        out.cover = stock_cover(*g);
        out.plan.start = g->label;
        out.plan.start_vertices = out.cover.polytope().vertex_count();
    } else {
        out.cover = doubled_universal_cover();
        out.plan.start = "MM";
        out.plan.start_vertices = out.cover.polytope().vertex_count();
        const auto group = enumerate_gl(3);
        std::string name = "MM";
        for (std::size_t i = 0; i < cat.basis13.size(); ++i) {
            if (!((coeff >> i) & 1u)) continue;
            const LabeledClass& gen = cat.basis13[i];
            const SmallCover piece = stock_cover(gen);
            while (true) {
                std::optional<Glue> glue;
                for (const auto& sigma : group) {
                    // sigma must keep the generator's class.
                    if (act(sigma, gen.cls.prime()) != gen.cls.prime()) continue;
                    glue = find_glue(out.cover, piece, sigma);
                    if (glue) break;
                }
                if (glue) {
                    out.cover = apply_step(out.plan, out.cover, name, piece, gen.label, *glue);
                    break;
                }
                if (++out.plan.bridge_insertions > kMaxBridgeInsertions)
                    throw Error(ErrorCode::ConstructionFailed, "bridge insertion cap reached for " + class_id(target));
                const SmallCover& mm = doubled_universal_cover();
                auto contact = find_glue(out.cover, mm, BitMatrix::identity(3));
                fail_unless(contact.has_value(), "bounding insert shares no monomial");
                out.cover = apply_step(out.plan, out.cover, name, mm, "MM", *contact);
                name = "R" + std::to_string(out.plan.steps.size());
            }
            name = "R" + std::to_string(out.plan.steps.size());
        }
    }
    fail_unless(prime_set(out.cover) == beta.prime(), "representative does not realize " + class_id(target));
    return out;
}

bool verify_representative(const SmallCover& c, const CobordismClass& beta) {
    if (!validate(c.polytope()).ok()) return false;
    if (coloring_problem(c.polytope(), c.coloring())) return false;
    PrimeRepSet p = prime_set(c);
    if (beta.dim() == 0) return p.empty();
    return p == beta.prime();
}

}  // namespace z2cob
