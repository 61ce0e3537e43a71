#pragma once

// Exact linear algebra over GF(2).
//
// Bit convention: coordinate i (0-based) of a vector is bit i of the word, so
// the first generator is the least significant bit. Vectors are columns and
// matrices act on the left. Square matrices store rows; bit j of row i is the
// entry (i, j).

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace z2cob {

inline constexpr int kMaxDim = 32;
inline constexpr int kMaxGLDim = 5;

class BitVec {
public:
    BitVec() = default;
    BitVec(int dim, std::uint32_t bits);

    static BitVec zero(int dim) { return BitVec(dim, 0); }
    static BitVec unit(int dim, int i);
    // "110" -> first two generators set. Leftmost character is coordinate 0.
    static BitVec from_string(std::string_view bits);

    int dim() const { return dim_; }
    std::uint32_t bits() const { return bits_; }
    bool get(int i) const { return (bits_ >> i) & 1u; }
    bool is_zero() const { return bits_ == 0; }
    int weight() const;

    std::string to_string() const;

    BitVec operator+(const BitVec& other) const;
    BitVec& operator+=(const BitVec& other);

    // Pairing of Hom((Z2)^n, Z2) with (Z2)^n.
    bool dot(const BitVec& other) const;

    friend bool operator==(const BitVec&, const BitVec&) = default;
    friend auto operator<=>(const BitVec& a, const BitVec& b) {
        if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

private:
    std::uint32_t bits_ = 0;
    int dim_ = 0;
};

class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(int dim);
    BitMatrix(int dim, std::vector<std::uint32_t> rows);

    static BitMatrix identity(int dim);
    static BitMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
    static BitMatrix from_columns(std::span<const BitVec> columns);
    // Row-major bit string of length dim*dim ("100010001" is the identity).
    static BitMatrix from_string(std::string_view bits);

    int dim() const { return dim_; }
    const std::vector<std::uint32_t>& rows() const { return rows_; }
    bool get(int i, int j) const { return (rows_[i] >> j) & 1u; }
    void set(int i, int j, bool value);

    BitVec row(int i) const { return BitVec(dim_, rows_[i]); }
    BitVec column(int j) const;

    BitMatrix transpose() const;
    BitMatrix operator*(const BitMatrix& other) const;
    BitVec operator*(const BitVec& v) const;

    bool is_identity() const;
    std::string to_string() const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;
    friend auto operator<=>(const BitMatrix& a, const BitMatrix& b) {
        if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
        return a.rows_ <=> b.rows_;
    }

private:
    std::vector<std::uint32_t> rows_;
    int dim_ = 0;
};

// Rectangular matrix with at most 64 columns. Used for relation matrices.
class RectBitMatrix {
public:
    RectBitMatrix(int rows, int cols);

    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    bool get(int i, int j) const { return (rows_[i] >> j) & 1u; }
    void set(int i, int j, bool value);
    std::uint64_t row_bits(int i) const { return rows_[i]; }
    int row_count(int i) const;
    int column_count(int j) const;

    // One line per row, '0'/'1' per column, column 0 leftmost.
    std::string to_string() const;

private:
    std::vector<std::uint64_t> rows_;
    int cols_;
};

int rank(const BitMatrix& m);
int rank(const RectBitMatrix& m);
// Rank of a list of row words (any width up to 64).
int rank(std::span<const std::uint64_t> rows);

BitMatrix invert(const BitMatrix& m);
BitVec solve(const BitMatrix& m, const BitVec& v);

// Basis of {x : m x = 0} for a list of constraint rows of dimension n,
// in reduced echelon form (deterministic).
std::vector<BitVec> null_space(std::span<const BitVec> constraint_rows, int n);
std::vector<BitVec> span_basis(std::span<const BitVec> vectors);
bool linearly_independent(std::span<const BitVec> vectors);

// Order of GL(n, Z2); throws DimensionTooLarge when it does not fit 64 bits (n > 8).
std::uint64_t gl_order(int n);

// Every invertible n x n matrix once, rows compared lexicographically as words.
std::vector<BitMatrix> enumerate_gl(int n);

// Identity with row i (1-based) replaced by all ones; i = 0 gives the identity.
BitMatrix delta_matrix(int n, int i);
// Identity with columns i and j (0-based) exchanged.
BitMatrix exchange_matrix(int n, int i, int j);

}  // namespace z2cob
