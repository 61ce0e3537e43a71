#pragma once

// The cobordism group of 3-dimensional 2-torus manifolds, modeled through
// prime tangent sets. At n = 3 a class is also a 28-bit mask over
// enumerate_monomials(3); the mask doubles as the class id.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "z2cob/representations.hpp"

namespace z2cob {

class CobordismClass {
public:
    CobordismClass() = default;
    explicit CobordismClass(PrimeRepSet prime) : prime_(std::move(prime)) {}
    static CobordismClass zero(int n) { return CobordismClass(PrimeRepSet(n)); }

    int dim() const { return prime_.dim(); }
    const PrimeRepSet& prime() const { return prime_; }
    int card() const { return prime_.size(); }
    bool is_zero() const { return prime_.empty(); }

    friend bool operator==(const CobordismClass&, const CobordismClass&) = default;
    friend auto operator<=>(const CobordismClass&, const CobordismClass&) = default;

private:
    PrimeRepSet prime_;
};

CobordismClass add(const CobordismClass& a, const CobordismClass& b);

// Bijection between the 28 monomials of dimension 3 and bits 0..27.
class MonomialIndex {
public:
    static const MonomialIndex& instance();

    int size() const { return static_cast<int>(monomials_.size()); }
    const std::vector<RepMonomial>& monomials() const { return monomials_; }
    int index_of(const RepMonomial& m) const;
    std::uint32_t mask(const PrimeRepSet& s) const;
    PrimeRepSet set(std::uint32_t mask) const;

private:
    MonomialIndex();
    std::vector<RepMonomial> monomials_;
    std::map<RepMonomial, int> index_;
};

std::uint32_t class_mask(const CobordismClass& c);
CobordismClass class_from_mask(std::uint32_t mask);
// "0x" followed by seven hex digits.
std::string class_id(const CobordismClass& c);
std::string class_id(std::uint32_t mask);
std::optional<std::uint32_t> parse_class_id(std::string_view text);

struct LabeledClass {
    std::string label;
    CobordismClass cls;
    std::uint32_t mask = 0;
};

struct GeneratorCatalog {
    std::vector<LabeledClass> rp_classes;     // T0..T6
    std::vector<LabeledClass> prism_classes;  // P0..P41, sorted by prime set
    // For prism class j: the partner prism class and the rp class of its pair.
    std::vector<int> prism_partner;
    std::vector<int> prism_pair_rp;
    std::vector<int> selected_half;  // prism indices, the smaller of each pair
    std::vector<LabeledClass> basis13;

    // Every generator: rp classes then prism classes.
    std::vector<const LabeledClass*> generators() const;
    const LabeledClass* find(std::string_view label) const;
    const LabeledClass* find(std::uint32_t mask) const;
};

// Throws CatalogInconsistent if any expected count fails.
GeneratorCatalog build_catalog();
const GeneratorCatalog& catalog();

// 28 x 28: rows are monomials, columns the 7 rp classes then the selected half.
RectBitMatrix relation_matrix(const GeneratorCatalog& cat);
std::string matrix_text(const RectBitMatrix& m);

// All 2^13 classes as masks, ascending.
std::vector<std::uint32_t> enumerate_group_masks(const GeneratorCatalog& cat);
std::vector<CobordismClass> enumerate_group(const GeneratorCatalog& cat);

// Bit i set when basis13[i] occurs; throws NotInSpan.
std::uint32_t decompose(const CobordismClass& beta, const GeneratorCatalog& cat);
std::uint32_t decompose_mask(std::uint32_t mask, const GeneratorCatalog& cat);
CobordismClass fold(std::uint32_t coefficients, const GeneratorCatalog& cat);

bool is_essential(std::uint32_t beta, const std::vector<std::uint32_t>& universe);
bool is_essential(const CobordismClass& beta, const std::vector<std::uint32_t>& universe);
std::vector<std::uint32_t> essential_set(const std::vector<std::uint32_t>& universe);

struct SixCorrespondence {
    std::vector<int> prism;                      // the six prism indices
    std::vector<std::pair<int, int>> pairs;      // three pairs summing with t to zero
};
SixCorrespondence six_correspondence(int rp_index, const GeneratorCatalog& cat);

// Cardinality -> number of classes.
std::map<int, int> cardinality_spectrum(const std::vector<std::uint32_t>& universe);

std::string class_line(const CobordismClass& c);

// Comparison of the printed tables with derived data.
struct TableOneCheck {
    int matched = 0;
    std::vector<std::string> problems;
};
TableOneCheck check_table_one(const GeneratorCatalog& cat);

struct TableTwoEntry {
    int row;
    std::string status;  // "selected", "partner", "repaired+selected", "repaired+partner", "not in orbit", "unparseable"
    std::string detail;
    std::optional<int> prism_index;
};
struct TableTwoDiff {
    std::vector<TableTwoEntry> entries;
    std::vector<std::string> pair_conflicts;  // two printed rows that sum to an rp class
    int in_orbit() const;
    int mismatches() const;  // rows that are not clean members of the orbit
};
TableTwoDiff diff_table_two(const GeneratorCatalog& cat);

// Parse a printed set, optionally dropping unmatched closing parentheses.
std::optional<PrimeRepSet> parse_printed_set(std::string_view text, bool repair, bool* repaired = nullptr);

}  // namespace z2cob
