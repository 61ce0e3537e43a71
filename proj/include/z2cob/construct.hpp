#pragma once

// Small-cover representatives for classes in dimension 3, built by
// equivariant connected sums of stock covers.

#include <string>
#include <vector>

#include "z2cob/cobordism.hpp"
#include "z2cob/polytopes.hpp"

namespace z2cob {

struct SumStep {
    std::string left;   // name of the running cover before the step
    int left_vertex;    // 0-based
    std::string piece;  // name of the glued piece
    int piece_vertex;
    BitMatrix sigma;
    RepMonomial monomial;
    int vertices_after;

    // "step k: sum A@v3 with T0@v1 via sigma=100010001"
    std::string trace_line(int k) const;
};

struct SumPlan {
    std::string start;  // name of the starting cover
    int start_vertices = 0;
    std::vector<SumStep> steps;
    int bridge_insertions = 0;

    std::string trace() const;
};

struct Representative {
    SmallCover cover;
    SumPlan plan;
};

// The cover of a named generator: the simplex or prism under some sigma.
SmallCover stock_cover(const LabeledClass& generator);

// Phi0 and Phi1 (printed prism table) summed at r1r2r3.
SmallCover phi0_phi1_cover();
// Two copies of phi0_phi1_cover summed at r1(r1+r2)(r1+r3): 18 vertices, bounding.
SmallCover bridge_cover();
// The bridge summed with one stock cover of each Ti: prime set is all 28 monomials.
SmallCover universal_cover();
// Two copies of the universal cover summed at r1r2r3.
const SmallCover& doubled_universal_cover();

inline constexpr int kMaxBridgeInsertions = 16;

Representative representative(const CobordismClass& beta, const GeneratorCatalog& cat);
bool verify_representative(const SmallCover& c, const CobordismClass& beta);

}  // namespace z2cob
