#pragma once

// Published tables, transcribed verbatim (including one stray parenthesis in
// the Phi6 row of the prism table). Generators are written r1, r2, r3 and
// factors are juxtaposed as in print.

#include <array>
#include <string_view>

#include "z2cob/z2algebra.hpp"

namespace z2cob::reference {

// Tangent sets of the seven real projective space covers T0..T6.
inline constexpr std::array<std::string_view, 7> kTableI = {
    "{r1r2r3, r1(r1+r2)(r1+r3), r2(r1+r2)(r2+r3), r3(r1+r3)(r2+r3)}",
    "{r1(r1+r2)(r1+r2+r3), r1r2(r2+r3), r2r3(r1+r2), r3(r2+r3)(r1+r2+r3)}",
    "{r1(r1+r3)(r1+r2+r3), r1r3(r2+r3), r2r3(r1+r3), r2(r2+r3)(r1+r2+r3)}",
    "{r2(r1+r2)(r1+r2+r3), r1r2(r1+r3), r1r3(r1+r2), r3(r1+r3)(r1+r2+r3)}",
    "{r1(r1+r2)(r2+r3), r1r2(r1+r2+r3), r2(r1+r2)(r1+r3), (r1+r3)(r2+r3)(r1+r2+r3)}",
    "{r1(r1+r3)(r2+r3), r1r3(r1+r2+r3), r3(r1+r2)(r1+r3), (r1+r2)(r2+r3)(r1+r2+r3)}",
    "{r2(r1+r3)(r2+r3), r2r3(r1+r2+r3), (r1+r2)(r1+r3)(r1+r2+r3), r3(r1+r2)(r2+r3)}",
};

// The 21 prism classes Phi0..Phi20 as printed.
inline constexpr std::array<std::string_view, 21> kTableII = {
    "{r1r2r3, r1r2(r2+r3), r1r3(r2+r3), r1(r1+r2)(r1+r3), r1(r1+r2)(r2+r3), r1(r1+r3)(r2+r3)}",
    "{r1r2r3, r1r2(r1+r3), r2r3(r1+r3), r2(r1+r2)(r1+r3), r2(r1+r2)(r2+r3), r2(r1+r3)(r2+r3)}",
    "{r1r2r3, r1r3(r1+r2), r2r3(r1+r2), r3(r1+r2)(r1+r3), r3(r1+r2)(r2+r3), r3(r1+r3)(r2+r3)}",
    "{r1r2r3, r1r2(r1+r3), r2r3(r1+r2), r2r3(r1+r3), r2r3(r1+r2+r3), r2(r1+r2)(r1+r2+r3)}",
    "{r1r2(r1+r2+r3), r1r3(r1+r2+r3), r1(r1+r2)(r1+r2+r3), r1(r1+r3)(r1+r2+r3), r2(r1+r2)(r1+r2+r3), "
    "r3(r1+r3)(r1+r2+r3)}",
    "{r1r3(r1+r2), r1(r1+r2)(r1+r3), r2(r1+r2)(r1+r3), r3(r1+r2)(r1+r3), r2(r1+r2)(r1+r2+r3), "
    "(r1+r2)(r1+r3)(r1+r2+r3)}",
    "{r1r2r3, r1r2(r2+r3), r1r3(r1+r2), r1r3(r2+r3), r1r3)(r1+r2+r3), r1(r1+r2)(r1+r2+r3)}",
    "{r1r2(r1+r2+r3), r2r3(r1+r2+r3), r1(r1+r2)(r1+r2+r3), r2(r1+r2)(r1+r2+r3), r2(r2+r3)(r1+r2+r3), "
    "r3(r2+r3)(r1+r2+r3)}",
    "{r2r3(r1+r2), r2(r1+r2)(r2+r3), r1(r1+r2)(r2+r3), r3(r1+r2)(r2+r3), r1(r1+r2)(r1+r2+r3), "
    "(r1+r2)(r2+r3)(r1+r2+r3)}",
    "{r1r2r3, r1r2(r1+r3), r1r2(r2+r3), r1r2(r1+r2+r3), r1r3(r2+r3), r1(r1+r3)(r1+r2+r3)}",
    "{r1r3(r1+r2+r3), r2r3(r1+r2+r3), r1(r1+r3)(r1+r2+r3), r2(r2+r3)(r1+r2+r3), r3(r1+r3)(r1+r2+r3), "
    "r3(r2+r3)(r1+r2+r3)}",
    "{r2r3(r1+r3), r1(r1+r3)(r2+r3), r1(r1+r3)(r1+r2+r3), r2(r1+r3)(r2+r3), r3(r1+r3)(r2+r3), "
    "(r1+r3)(r2+r3)(r1+r2+r3)}",
    "{r1r2(r2+r3), r1(r1+r2)(r2+r3), r2(r1+r2)(r2+r3), r2(r1+r3)(r2+r3), r2(r2+r3)(r1+r2+r3), "
    "(r1+r3)(r2+r3)(r1+r2+r3)}",
    "{r1r2(r1+r3), r1r2(r1+r2+r3), r1(r1+r2)(r1+r3), r1(r1+r2)(r2+r3), r1(r1+r3)(r2+r3), "
    "r1(r1+r3)(r1+r2+r3)}",
    "{r1(r1+r2)(r2+r3), r1(r1+r2)(r1+r2+r3), r2(r1+r2)(r1+r3), r2(r1+r2)(r1+r2+r3), "
    "(r1+r2)(r1+r3)(r1+r2+r3), (r1+r2)(r2+r3)(r1+r2+r3)}",
    "{r1r3(r2+r3), r1(r1+r3)(r2+r3), r3(r1+r2)(r2+r3), r3(r1+r3)(r2+r3), r3(r2+r3)(r1+r2+r3), "
    "(r1+r2)(r2+r3)(r1+r2+r3)}",
    "{r1r3(r1+r2), r1(r1+r2)(r1+r3), r1(r1+r2)(r2+r3), r1(r1+r2)(r1+r2+r3), r3(r1+r2)(r1+r3), "
    "(r1+r2)(r2+r3)(r1+r2+r3)}",
    "{r1r3(r1+r2+r3), r1(r1+r3)(r1+r2+r3), (r1+r2)(r1+r3)(r1+r2+r3), r3(r1+r3)(r1+r2+r3), "
    "(r1+r2)(r2+r3)(r1+r2+r3), (r1+r3)(r2+r3)(r1+r2+r3)}",
    "{r2r3(r1+r3), r2(r1+r3)(r2+r3), r3(r1+r2)(r1+r3), r3(r1+r3)(r1+r2+r3), r3(r1+r3)(r2+r3), "
    "(r1+r2)(r1+r3)(r1+r2+r3)}",
    "{r2r3(r1+r2), r2(r1+r2)(r1+r3), r2(r1+r2)(r2+r3), r2(r1+r2)(r1+r2+r3), r3(r1+r2)(r2+r3), "
    "(r1+r2)(r1+r3)(r1+r2+r3)}",
    "{r2r3(r1+r2+r3), r2(r2+r3)(r1+r2+r3), (r1+r2)(r1+r3)(r1+r2+r3), r3(r2+r3)(r1+r2+r3), "
    "(r1+r2)(r2+r3)(r1+r2+r3), (r1+r3)(r2+r3)(r1+r2+r3)}",
};

// The six prism classes attached to T0, indexed u = 1..6.
inline constexpr std::array<std::string_view, 6> kPhi0u = {
    "{r1r2r3, r1(r1+r2)(r1+r3), r1r2(r2+r3), r1r3(r2+r3), r1(r1+r2)(r2+r3), r1(r1+r3)(r2+r3)}",
    "{r1r2r3, r1r2(r1+r3), r2r3(r1+r3), r2(r1+r2)(r2+r3), r2(r1+r2)(r1+r3), r2(r1+r3)(r2+r3)}",
    "{r1r2r3, r1r3(r1+r2), r2r3(r1+r2), r3(r1+r3)(r2+r3), r3(r1+r2)(r1+r3), r3(r1+r2)(r2+r3)}",
    "{r1(r1+r2)(r1+r3), r1r3(r1+r2), r3(r1+r2)(r1+r3), r2(r1+r2)(r2+r3), r2r3(r1+r2), r3(r1+r2)(r2+r3)}",
    "{r1(r1+r2)(r1+r3), r1r2(r1+r3), r2(r1+r2)(r1+r3), r3(r1+r3)(r2+r3), r2r3(r1+r3), r2(r1+r3)(r2+r3)}",
    "{r2(r1+r2)(r2+r3), r1r2(r2+r3), r1(r1+r2)(r2+r3), r3(r1+r3)(r2+r3), r1r3(r2+r3), r1(r1+r3)(r2+r3)}",
};

// Pairs (u, u') with Phi0u + Phi0u' + T0 = 0.
inline constexpr std::array<std::array<int, 2>, 3> kPhi0Pairs = {{{1, 6}, {2, 5}, {3, 4}}};

// Ten-monomial set of the first connected sum in the bridge construction.
inline constexpr std::string_view kPhi0PlusPhi1 =
    "{r1r2(r2+r3), r1r3(r2+r3), r1(r1+r2)(r1+r3), r1(r1+r2)(r2+r3), r1(r1+r3)(r2+r3), r1r2(r1+r3), "
    "r2r3(r1+r3), r2(r1+r2)(r1+r3), r2(r1+r2)(r2+r3), r2(r1+r3)(r2+r3)}";

// Indices into kTableII of the prism generators named in the 13-element basis.
inline constexpr std::array<int, 6> kNamedPrismBasis = {0, 1, 2, 3, 4, 6};

inline BitMatrix sigma1() { return BitMatrix::from_rows({{1, 0, 0}, {1, 1, 0}, {0, 0, 1}}); }
inline BitMatrix sigma2() { return BitMatrix::from_rows({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}); }

inline std::array<BitMatrix, 4> taus() {
    return {BitMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
            BitMatrix::from_rows({{1, 0, 0}, {1, 1, 0}, {0, 0, 1}}),
            BitMatrix::from_rows({{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}),
            BitMatrix::from_rows({{1, 0, 0}, {1, 1, 1}, {0, 0, 1}})};
}

}  // namespace z2cob::reference
