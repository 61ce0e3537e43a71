#include <bit>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "z2cob/cobordism.hpp"
#include "z2cob/error.hpp"
#include "z2cob/polytopes.hpp"
#include "z2cob/reference_data.hpp"

using namespace z2cob;

namespace {

std::uint32_t mask_of(std::string_view printed) {
    return MonomialIndex::instance().mask(parse_prime_set(printed, 3));
}

// Close a generator list under xor, with no linear algebra involved.
std::set<std::uint32_t> closure(const std::vector<std::uint32_t>& gens) {
    std::set<std::uint32_t> span{0};
    for (auto g : gens) {
        if (span.count(g)) continue;
        std::set<std::uint32_t> next = span;
        for (auto s : span) next.insert(s ^ g);
        span = std::move(next);
    }
    return span;
}

const std::vector<std::uint32_t>& universe() {
    static const std::vector<std::uint32_t> u = enumerate_group_masks(catalog());
    return u;
}

bool essential_by_definition(std::uint32_t beta, const std::set<std::uint32_t>& all) {
    const int b = std::popcount(beta);
    for (auto g : all) {
        if (g == 0 || std::popcount(g) >= b) continue;
        if (std::popcount(beta ^ g) < b) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("monomial index and class ids") {
    const auto& idx = MonomialIndex::instance();
    CHECK(idx.size() == 28);
    for (int i = 0; i < 28; ++i) CHECK(idx.index_of(idx.monomials()[i]) == i);
    std::mt19937 rng(1);
    for (int t = 0; t < 100; ++t) {
        std::uint32_t m = rng() & ((1u << 28) - 1);
        CHECK(idx.mask(idx.set(m)) == m);
        CHECK(parse_class_id(class_id(m)) == m);
        CHECK(class_id(m).size() == 9);
    }
    CHECK(class_id(0u) == "0x0000000");
    CHECK_FALSE(parse_class_id("0xZZ").has_value());
    CHECK_FALSE(parse_class_id("0x10000000").has_value());
    CHECK(class_line(class_from_mask(mask_of(reference::kTableI[0]))).rfind("class 0x", 0) == 0);
    CHECK(class_line(class_from_mask(mask_of(reference::kTableI[0]))).find("card=4 {") != std::string::npos);
}

TEST_CASE("add") {
    auto a = class_from_mask(mask_of(reference::kTableI[0]));
    auto b = class_from_mask(mask_of(reference::kTableI[3]));
    CHECK(add(a, a).is_zero());
    CHECK(add(a, b).card() == 8);
    auto p0 = class_from_mask(mask_of(reference::kTableII[0]));
    auto p1 = class_from_mask(mask_of(reference::kTableII[1]));
    CHECK(add(p0, p1).prime() == parse_prime_set(reference::kPhi0PlusPhi1, 3));
    CHECK_THROWS_AS(add(a, CobordismClass::zero(2)), Error);
}

TEST_CASE("catalog") {
    const auto& cat = catalog();
    REQUIRE(cat.rp_classes.size() == 7);
    REQUIRE(cat.prism_classes.size() == 42);
    CHECK(cat.selected_half.size() == 21);
    CHECK(cat.basis13.size() == 13);
    for (int i = 0; i < 7; ++i) {
        CHECK(cat.rp_classes[i].label == "T" + std::to_string(i));
        CHECK(cat.rp_classes[i].cls.prime() == parse_prime_set(reference::kTableI[i], 3));
    }
    CHECK(check_table_one(cat).matched == 7);
    CHECK(check_table_one(cat).problems.empty());
    for (std::size_t j = 0; j < 42; ++j) {
        CHECK(cat.prism_classes[j].cls.card() == 6);
        if (j) CHECK(cat.prism_classes[j - 1].cls.prime() < cat.prism_classes[j].cls.prime());
    }
    CHECK(cat.find("T3") == &cat.rp_classes[3]);
    CHECK(cat.find("P41") == &cat.prism_classes[41]);
    CHECK(cat.find("Q1") == nullptr);
    CHECK(cat.generators().size() == 49);

    // the prism orbit is exactly the set of prime sets of nonbounding prism covers
    std::set<std::uint32_t> from_covers;
    SimplePolytope prism = builtin(Builtin::Prism3);
    for (const auto& c : enumerate_colorings(prism, 3)) {
        auto s = prime_set(SmallCover(prism, c));
        if (!s.empty()) from_covers.insert(MonomialIndex::instance().mask(s));
    }
    std::set<std::uint32_t> from_cat;
    for (const auto& p : cat.prism_classes) from_cat.insert(p.mask);
    CHECK(from_covers == from_cat);
}

TEST_CASE("pairing of prism classes") {
    const auto& cat = catalog();
    std::set<std::pair<int, int>> pairs;
    for (int j = 0; j < 42; ++j) {
        int k = cat.prism_partner[j];
        CHECK(cat.prism_partner[k] == j);
        CHECK(k != j);
        std::uint32_t t = cat.prism_classes[j].mask ^ cat.prism_classes[k].mask;
        CHECK(t == cat.rp_classes[cat.prism_pair_rp[j]].mask);
        // the pair a prism class shares with its rp class, and one monomial with four others
        int twos = 0, ones = 0;
        for (const auto& r : cat.rp_classes) {
            int meet = std::popcount(r.mask & cat.prism_classes[j].mask);
            twos += meet == 2;
            ones += meet == 1;
        }
        CHECK(twos == 1);
        CHECK(ones == 4);
        // only one rp class completes it
        int completions = 0;
        for (int m = 0; m < 42; ++m)
            for (const auto& r : cat.rp_classes) completions += (cat.prism_classes[j].mask ^ cat.prism_classes[m].mask) == r.mask;
        CHECK(completions == 1);
        pairs.insert({std::min(j, k), std::max(j, k)});
    }
    CHECK(pairs.size() == 21);
    for (int j : cat.selected_half) CHECK(j < cat.prism_partner[j]);
}

TEST_CASE("six prism classes per rp class") {
    const auto& cat = catalog();
    for (int t = 0; t < 7; ++t) {
        auto six = six_correspondence(t, cat);
        CHECK(six.prism.size() == 6);
        CHECK(six.pairs.size() == 3);
        for (int j : six.prism) CHECK(std::popcount(cat.prism_classes[j].mask & cat.rp_classes[t].mask) == 2);
        for (auto [a, b] : six.pairs)
            CHECK((cat.prism_classes[a].mask ^ cat.prism_classes[b].mask ^ cat.rp_classes[t].mask) == 0);
    }
    auto six = six_correspondence(0, cat);
    std::set<std::uint32_t> got, printed;
    for (int j : six.prism) got.insert(cat.prism_classes[j].mask);
    for (auto s : reference::kPhi0u) printed.insert(mask_of(s));
    CHECK(got == printed);
    for (auto [u, w] : reference::kPhi0Pairs)
        CHECK((mask_of(reference::kPhi0u[u - 1]) ^ mask_of(reference::kPhi0u[w - 1]) ^ cat.rp_classes[0].mask) == 0);
    RepMonomial a = parse_monomial("r1r2r3", 3), b = parse_monomial("r1(r1+r2)(r1+r3)", 3);
    int holding = 0;
    for (int j : six.prism) {
        const auto& s = cat.prism_classes[j].cls.prime();
        if (s.contains(a) && s.contains(b)) {
            ++holding;
            CHECK(s == parse_prime_set(reference::kPhi0u[0], 3));
        }
    }
    CHECK(holding == 1);
}

TEST_CASE("relation matrix and rank") {
    const auto& cat = catalog();
    RectBitMatrix a = relation_matrix(cat);
    CHECK(a.rows() == 28);
    CHECK(a.cols() == 28);
    for (int j = 0; j < 28; ++j) CHECK(a.column_count(j) == (j < 7 ? 4 : 6));
    for (int i = 0; i < 28; ++i) CHECK(a.row_count(i) >= 1);
    CHECK(rank(a) == 13);
    std::vector<std::uint32_t> cols;
    for (const auto& g : cat.generators()) cols.push_back(g->mask);
    CHECK(closure(cols).size() == 8192);
    CHECK(matrix_text(a).size() == 28 * 29);
}

TEST_CASE("group enumeration matches an xor closure") {
    const auto& cat = catalog();
    const auto& u = universe();
    REQUIRE(u.size() == 8192);
    std::vector<std::uint32_t> gens;
    for (const auto& g : cat.generators()) gens.push_back(g->mask);
    auto ref = closure(gens);
    CHECK(std::set<std::uint32_t>(u.begin(), u.end()) == ref);
    CHECK(std::is_sorted(u.begin(), u.end()));
    CHECK(u.front() == 0);
    std::vector<std::uint32_t> b13;
    for (const auto& b : cat.basis13) b13.push_back(b.mask);
    CHECK(closure(b13) == ref);
    // the 13 generators named in print span too
    std::vector<std::uint32_t> named;
    for (const auto& r : cat.rp_classes) named.push_back(r.mask);
    for (int row : reference::kNamedPrismBasis) {
        auto s = parse_printed_set(reference::kTableII[row], true);
        REQUIRE(s.has_value());
        named.push_back(MonomialIndex::instance().mask(*s));
    }
    CHECK(closure(named) == ref);
    CHECK(closure(named).size() == (1u << named.size()));
    // max span class is the sum of the rp classes
    std::uint32_t all = 0;
    for (const auto& r : cat.rp_classes) all ^= r.mask;
    CHECK(all == MonomialIndex::instance().mask(max_span_class(3)));
    CHECK(ref.count(all));
}

TEST_CASE("decompose and fold") {
    const auto& cat = catalog();
    CHECK(decompose_mask(0, cat) == 0);
    for (std::size_t i = 0; i < cat.basis13.size(); ++i) CHECK(decompose(cat.basis13[i].cls, cat) == (1u << i));
    auto t0 = cat.rp_classes[0].cls, t3 = cat.rp_classes[3].cls;
    CHECK(decompose(add(t0, t3), cat) == (decompose(t0, cat) ^ decompose(t3, cat)));
    for (std::uint32_t c = 0; c < 8192; c += 61) CHECK(decompose(fold(c, cat), cat) == c);
    for (std::size_t k = 0; k < universe().size(); k += 53)
        CHECK(class_mask(fold(decompose_mask(universe()[k], cat), cat)) == universe()[k]);
    try {
        decompose(CobordismClass(parse_prime_set("{r1r2r3}", 3)), cat);
        FAIL("expected NotInSpan");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotInSpan);
    }
}

TEST_CASE("cardinality spectrum") {
    auto spectrum = cardinality_spectrum(universe());
    int total = 0;
    for (auto [card, count] : spectrum) {
        total += count;
        CHECK(card % 2 == 0);
        CHECK(card != 2);
        if (card) CHECK(card >= 4);
        CHECK(card <= 28);
    }
    CHECK(total == 8192);
    CHECK(spectrum.at(0) == 1);
    CHECK(spectrum.at(4) == 7);
    CHECK(spectrum.at(6) == 42);
    CHECK(spectrum.count(28));
}

TEST_CASE("essential generators") {
    const auto& u = universe();
    auto ess = essential_set(u);
    CHECK(ess.size() == 49);
    std::set<std::uint32_t> gens;
    for (const auto& g : catalog().generators()) gens.insert(g->mask);
    CHECK(std::set<std::uint32_t>(ess.begin(), ess.end()) == gens);
    for (auto e : ess) {
        CHECK(std::popcount(e) <= 6);
        CHECK(static_cast<std::uint64_t>(std::popcount(e)) <= essential_bound(3).value);
    }

    auto t0 = catalog().rp_classes[0].cls, t3 = catalog().rp_classes[3].cls;
    CHECK(is_essential(t0, u));
    CHECK(is_essential(catalog().prism_classes[17].cls, u));
    CHECK_FALSE(is_essential(add(t0, t3), u));
    CHECK_THROWS_AS(is_essential(0u, u), Error);

    std::set<std::uint32_t> all(u.begin(), u.end());
    std::mt19937 rng(41);
    for (int t = 0; t < 120; ++t) {
        std::uint32_t b = u[1 + rng() % 8191];
        CHECK(is_essential(b, u) == essential_by_definition(b, all));
        CHECK(is_essential(b, u) == (std::popcount(b) <= 6));
    }
}

TEST_CASE("group axioms on samples") {
    const auto& u = universe();
    std::set<std::uint32_t> all(u.begin(), u.end());
    std::mt19937 rng(43);
    for (int t = 0; t < 300; ++t) {
        auto a = class_from_mask(u[rng() % 8192]);
        auto b = class_from_mask(u[rng() % 8192]);
        auto c = class_from_mask(u[rng() % 8192]);
        CHECK(all.count(class_mask(add(a, b))));
        CHECK(add(a, b) == add(b, a));
        CHECK(add(add(a, b), c) == add(a, add(b, c)));
        CHECK(add(a, CobordismClass::zero(3)) == a);
        CHECK(add(a, a).is_zero());
    }
}

TEST_CASE("printed prism table diff") {
    auto d = diff_table_two(catalog());
    REQUIRE(d.entries.size() == 21);
    CHECK(d.in_orbit() == 21);
    CHECK(d.mismatches() == 1);
    CHECK(d.entries[6].status == "repaired+selected");
    CHECK(d.pair_conflicts.empty());
    bool repaired = false;
    CHECK_FALSE(parse_printed_set(reference::kTableII[6], false).has_value());
    auto fixed = parse_printed_set(reference::kTableII[6], true, &repaired);
    CHECK(repaired);
    REQUIRE(fixed.has_value());
    CHECK(fixed->size() == 6);
    REQUIRE(d.entries[0].prism_index.has_value());
    CHECK(catalog().prism_classes[*d.entries[0].prism_index].cls.prime() == parse_prime_set(reference::kTableII[0], 3));
}
