#pragma once

// Tangent representation calculus: characters, degree-n square-free
// monomials (unordered bases of the dual space), multisets of monomials and
// their mod-2 reductions, and the GL(n, Z2) action on all of these.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "z2cob/z2algebra.hpp"

namespace z2cob {

// A nonzero element of Hom((Z2)^n, Z2). Ordered by integer value of the bits.
using Character = BitVec;

Character make_character(const BitVec& v);

class RepMonomial {
public:
    RepMonomial() = default;

    int dim() const { return dim_; }
    const std::vector<Character>& chars() const { return chars_; }
    bool contains(const Character& c) const;
    // Columns are the characters, in canonical order.
    BitMatrix matrix() const;

    std::string to_string() const;

    friend bool operator==(const RepMonomial&, const RepMonomial&) = default;
    friend auto operator<=>(const RepMonomial& a, const RepMonomial& b) {
        if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
        return a.chars_ <=> b.chars_;
    }

private:
    friend RepMonomial monomial_from_chars(std::span<const Character> chars);
    int dim_ = 0;
    std::vector<Character> chars_;
};

RepMonomial monomial_from_chars(std::span<const Character> chars);
RepMonomial monomial_from_chars(std::initializer_list<Character> chars);
// The characters of a tangent matrix are its columns.
RepMonomial monomial_from_matrix(const BitMatrix& m);

class PrimeRepSet;

// Multiset of monomials with true multiplicities.
class RepSet {
public:
    explicit RepSet(int dim = 0) : dim_(dim) {}

    int dim() const { return dim_; }
    void add(const RepMonomial& m, int count = 1);
    int count(const RepMonomial& m) const;
    // Total number of entries counting multiplicity.
    int size() const;
    bool empty() const { return entries_.empty(); }
    const std::map<RepMonomial, int>& entries() const { return entries_; }

    RepSet& operator+=(const RepSet& other);
    friend bool operator==(const RepSet&, const RepSet&) = default;

    std::string to_string() const;

private:
    int dim_;
    std::map<RepMonomial, int> entries_;
};

class PrimeRepSet {
public:
    explicit PrimeRepSet(int dim = 0) : dim_(dim) {}
    PrimeRepSet(int dim, std::span<const RepMonomial> monomials);

    int dim() const { return dim_; }
    const std::set<RepMonomial>& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }
    bool contains(const RepMonomial& m) const { return entries_.count(m) != 0; }
    // Duplicates are ignored.
    void insert(const RepMonomial& m);

    // Symmetric difference (sum of classes).
    PrimeRepSet operator^(const PrimeRepSet& other) const;
    PrimeRepSet intersect(const PrimeRepSet& other) const;
    RepSet as_multiset() const;

    std::string to_string() const;

    friend bool operator==(const PrimeRepSet&, const PrimeRepSet&) = default;
    friend auto operator<=>(const PrimeRepSet& a, const PrimeRepSet& b) {
        if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
        return a.entries_ <=> b.entries_;
    }

private:
    int dim_;
    std::set<RepMonomial> entries_;
};

std::vector<RepMonomial> enumerate_monomials(int n);

// act(sigma, .) sends each character rho to (sigma^-1)^T rho.
Character act(const BitMatrix& sigma, const Character& c);
RepMonomial act(const BitMatrix& sigma, const RepMonomial& m);
RepSet act(const BitMatrix& sigma, const RepSet& s);
PrimeRepSet act(const BitMatrix& sigma, const PrimeRepSet& s);
// Plain left multiplication on characters, kept for comparison with act.
PrimeRepSet act_left(const BitMatrix& sigma, const PrimeRepSet& s);

PrimeRepSet prime_reduce(const RepSet& s);

// Monomials of Delta_0, ..., Delta_n as a multiset, and its prime reduction.
RepSet rp_standard_multiset(int n);
PrimeRepSet rp_standard_set(int n);

std::vector<BitMatrix> stabilizer(const PrimeRepSet& s);
std::vector<BitMatrix> stabilizer_left(const PrimeRepSet& s);
std::vector<PrimeRepSet> orbit(const PrimeRepSet& s);

struct RepBounds {
    std::uint64_t lower;
    std::uint64_t upper;
    bool consistent() const { return lower <= upper; }
};
RepBounds rep_bounds(int n);

PrimeRepSet max_span_class(int n);

struct EssentialBound {
    std::uint64_t value;  // floor of the formula
    bool exact;           // false when the formula is not an integer
};
EssentialBound essential_bound(int n);

// Text forms: "r1*(r1+r2)*(r1+r3)" and "{r1*r2*r3, r1*(r1+r2)*(r1+r3)}".
std::string character_to_string(const Character& c);
Character parse_character(std::string_view text, int n);
RepMonomial parse_monomial(std::string_view text, int n);
PrimeRepSet parse_prime_set(std::string_view text, int n);

}  // namespace z2cob
