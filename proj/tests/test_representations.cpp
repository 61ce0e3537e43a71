#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "z2cob/error.hpp"
#include "z2cob/reference_data.hpp"
#include "z2cob/representations.hpp"

using namespace z2cob;

namespace {

Character ch(const char* s) { return BitVec::from_string(s); }

std::vector<std::uint32_t> masks(const RepMonomial& m) {
    std::vector<std::uint32_t> out;
    for (const auto& c : m.chars()) out.push_back(c.bits());
    return out;
}

}  // namespace

TEST_CASE("monomial_from_chars") {
    CHECK(monomial_from_chars({ch("100"), ch("010"), ch("001")}).to_string() == "r1*r2*r3");
    CHECK(monomial_from_chars({ch("110"), ch("100"), ch("101")}) == parse_monomial("r1(r1+r2)(r1+r3)", 3));
    CHECK_THROWS_AS(monomial_from_chars({ch("100"), ch("010"), ch("110")}), Error);
    CHECK_THROWS_AS(monomial_from_chars({ch("100"), ch("010")}), Error);
    CHECK_THROWS_AS(monomial_from_chars({ch("100"), ch("100"), ch("001")}), Error);
}

TEST_CASE("monomial_from_matrix reads columns") {
    CHECK(monomial_from_matrix(BitMatrix::identity(3)) == parse_monomial("r1r2r3", 3));
    CHECK(monomial_from_matrix(delta_matrix(3, 2)) == parse_monomial("r2(r1+r2)(r2+r3)", 3));
    CHECK_THROWS_AS(monomial_from_matrix(BitMatrix(3)), Error);
    // coset property: permuting the columns does not change the monomial
    for (const auto& m : enumerate_gl(3)) {
        CHECK(monomial_from_matrix(m * exchange_matrix(3, 0, 2)) == monomial_from_matrix(m));
        CHECK(monomial_from_matrix(monomial_from_matrix(m).matrix()) == monomial_from_matrix(m));
    }
}

TEST_CASE("enumerate_monomials against brute-force bases") {
    CHECK(enumerate_monomials(1).size() == 1);
    CHECK(enumerate_monomials(2).size() == 3);
    CHECK(enumerate_monomials(3).size() == 28);
    for (int n = 1; n <= 4; ++n) {
        auto got = enumerate_monomials(n);
        auto want = oracle::all_bases(n);
        REQUIRE(got.size() == want.size());
        std::set<std::vector<std::uint32_t>> a, b(want.begin(), want.end());
        for (const auto& m : got) a.insert(masks(m));
        CHECK(a == b);
        CHECK(got.size() == gl_order(n) / (n == 4 ? 24 : (n == 3 ? 6 : n)));
    }
    CHECK_THROWS_AS(enumerate_monomials(5), Error);
}

TEST_CASE("parsing and printing") {
    for (const auto& m : enumerate_monomials(3)) CHECK(parse_monomial(m.to_string(), 3) == m);
    CHECK(parse_monomial("r1 * (r1 + r2) * r3", 3) == parse_monomial("r1(r1+r2)r3", 3));
    CHECK(character_to_string(ch("111")) == "(r1+r2+r3)");
    CHECK(character_to_string(ch("010")) == "r2");
    CHECK(parse_character("(r1+r3)", 3) == ch("101"));
    CHECK(parse_character("r2+r3", 3) == ch("011"));
    CHECK_THROWS_AS(parse_monomial("r1r2(r1+r2)", 3), Error);
    CHECK_THROWS_AS(parse_monomial("r1r2r4", 3), Error);
    CHECK_THROWS_AS(parse_monomial("r1r2(r3", 3), Error);
    CHECK_THROWS_AS(parse_prime_set("{r1r2r3, r1r2r3}", 3), Error);
    for (auto row : reference::kTableI) {
        PrimeRepSet s = parse_prime_set(row, 3);
        CHECK(s.size() == 4);
        CHECK(parse_prime_set(s.to_string(), 3) == s);
    }
    CHECK(parse_prime_set("{}", 3).empty());
}

TEST_CASE("prime_reduce") {
    RepSet twice(3);
    twice.add(parse_monomial("r1r2r3", 3), 2);
    CHECK(twice.size() == 2);
    CHECK(prime_reduce(twice).empty());
    PrimeRepSet t0 = parse_prime_set(reference::kTableI[0], 3);
    CHECK(prime_reduce(t0.as_multiset()) == t0);

    RepSet sum(3);
    sum += parse_prime_set(reference::kPhi0u[0], 3).as_multiset();
    sum += parse_prime_set(reference::kPhi0u[5], 3).as_multiset();
    sum += t0.as_multiset();
    CHECK(sum.size() == 16);
    CHECK(prime_reduce(sum).empty());
}

TEST_CASE("standard real projective sets") {
    CHECK(rp_standard_multiset(1).size() == 2);
    CHECK(rp_standard_set(1).empty());
    CHECK(rp_standard_set(2) == parse_prime_set("{r1r2, r1(r1+r2), r2(r1+r2)}", 2));
    CHECK(rp_standard_set(3) == parse_prime_set(reference::kTableI[0], 3));
    CHECK(rp_standard_set(4).size() == 5);
}

TEST_CASE("act is a group action and preserves structure") {
    auto group = enumerate_gl(3);
    auto ms = enumerate_monomials(3);
    std::mt19937 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const auto& a = group[rng() % group.size()];
        const auto& b = group[rng() % group.size()];
        PrimeRepSet s(3);
        for (const auto& m : ms)
            if (rng() & 1u) s.insert(m);
        CHECK(act(a * b, s) == act(a, act(b, s)));
        CHECK(act(a, s).size() == s.size());
        PrimeRepSet t(3);
        for (const auto& m : ms)
            if (rng() & 1u) t.insert(m);
        CHECK(act(a, s ^ t) == (act(a, s) ^ act(a, t)));
    }
    PrimeRepSet t0 = rp_standard_set(3);
    CHECK(act(BitMatrix::identity(3), t0) == t0);
    // act(sigma) applies (sigma^-1)^T to each character
    for (const auto& g : group) {
        BitMatrix h = invert(g).transpose();
        for (std::uint32_t v = 1; v < 8; ++v) CHECK(act(g, BitVec(3, v)) == h * BitVec(3, v));
    }
}

TEST_CASE("stabilizer and orbit") {
    PrimeRepSet t0 = rp_standard_set(3);
    CHECK(stabilizer(t0).size() == 24);
    auto orb = orbit(t0);
    REQUIRE(orb.size() == 7);
    std::set<RepMonomial> all;
    for (const auto& s : orb) {
        CHECK(s.size() == 4);
        for (const auto& m : s.entries()) CHECK(all.insert(m).second);
    }
    CHECK(all.size() == 28);
    CHECK(stabilizer(PrimeRepSet(3)).size() == 168);
    CHECK(orbit(PrimeRepSet(3)).size() == 1);

    // orbit-stabilizer on random subsets, against a direct count
    auto group = enumerate_gl(3);
    auto ms = enumerate_monomials(3);
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        PrimeRepSet s(3);
        for (const auto& m : ms)
            if (rng() % 5 == 0) s.insert(m);
        std::set<PrimeRepSet> images;
        std::size_t fixed = 0;
        for (const auto& g : group) {
            images.insert(act(g, s));
            fixed += act(g, s) == s;
        }
        CHECK(stabilizer(s).size() == fixed);
        CHECK(orbit(s).size() == images.size());
        CHECK(images.size() * fixed == 168);
    }
}

TEST_CASE("bounds") {
    CHECK(rep_bounds(3).lower == 4);
    CHECK(rep_bounds(3).upper == 28);
    CHECK(rep_bounds(2).lower == 3);
    CHECK(rep_bounds(2).upper == 3);
    CHECK(rep_bounds(1).lower == 2);
    CHECK(rep_bounds(1).upper == 1);
    CHECK_FALSE(rep_bounds(1).consistent());
    CHECK(max_span_class(3).size() == 28);
    CHECK(max_span_class(2).size() == 3);
    CHECK(essential_bound(3).value == 14);
    CHECK(essential_bound(3).exact);
    CHECK(essential_bound(2).value == 1);
    CHECK(essential_bound(1).value == 0);
    CHECK_FALSE(essential_bound(1).exact);
}
