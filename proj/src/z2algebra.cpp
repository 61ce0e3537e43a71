#include "z2cob/z2algebra.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <utility>

#include "z2cob/error.hpp"

namespace z2cob {

namespace {

std::uint32_t dim_mask(int dim) {
    return dim >= 32 ? ~0u : ((1u << dim) - 1u);
}

void check_dim(int dim) {
    if (dim < 1 || dim > kMaxDim)
        throw Error(ErrorCode::DimensionTooLarge, "dimension " + std::to_string(dim) + " outside 1.." +
                                                      std::to_string(kMaxDim));
}

bool parity(std::uint64_t x) { return std::popcount(x) & 1; }

// Reduce `v` against an echelon basis kept as (pivot bit -> word) pairs.
// Returns true and appends when v is new.
bool insert_into_basis(std::vector<std::uint64_t>& basis, std::uint64_t v) {
    for (std::uint64_t b : basis) {
        std::uint64_t pivot = b & (~b + 1);  // lowest set bit
        if (v & pivot) v ^= b;
    }
    if (v == 0) return false;
    std::uint64_t pivot = v & (~v + 1);
    for (auto& b : basis)
        if (b & pivot) b ^= v;
    basis.push_back(v);
    return true;
}

}  // namespace

BitVec::BitVec(int dim, std::uint32_t bits) : bits_(bits), dim_(dim) {
    check_dim(dim);
    if (bits & ~dim_mask(dim))
        throw Error(ErrorCode::DimensionMismatch, "bits exceed dimension " + std::to_string(dim));
}

BitVec BitVec::unit(int dim, int i) {
    if (i < 0 || i >= dim) throw Error(ErrorCode::DimensionMismatch, "unit index out of range");
    return BitVec(dim, 1u << i);
}

BitVec BitVec::from_string(std::string_view bits) {
    std::uint32_t value = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            value |= 1u << i;
        else if (bits[i] != '0')
            throw Error(ErrorCode::SyntaxError, "bad bit string '" + std::string(bits) + "'");
    }
    return BitVec(static_cast<int>(bits.size()), value);
}

int BitVec::weight() const { return std::popcount(bits_); }

std::string BitVec::to_string() const {
    std::string s(dim_, '0');
    for (int i = 0; i < dim_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitVec BitVec::operator+(const BitVec& other) const {
    BitVec r = *this;
    r += other;
    return r;
}

BitVec& BitVec::operator+=(const BitVec& other) {
    if (dim_ != other.dim_) throw Error(ErrorCode::DimensionMismatch, "vector dimensions differ");
    bits_ ^= other.bits_;
    return *this;
}

bool BitVec::dot(const BitVec& other) const {
    if (dim_ != other.dim_) throw Error(ErrorCode::DimensionMismatch, "vector dimensions differ");
    return parity(bits_ & other.bits_);
}

BitMatrix::BitMatrix(int dim) : rows_(static_cast<std::size_t>(dim), 0u), dim_(dim) { check_dim(dim); }

BitMatrix::BitMatrix(int dim, std::vector<std::uint32_t> rows) : rows_(std::move(rows)), dim_(dim) {
    check_dim(dim);
    if (static_cast<int>(rows_.size()) != dim) throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
    for (auto r : rows_)
        if (r & ~dim_mask(dim)) throw Error(ErrorCode::DimensionMismatch, "row exceeds dimension");
}

BitMatrix BitMatrix::identity(int dim) {
    BitMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.rows_[i] = 1u << i;
    return m;
}

BitMatrix BitMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    const int n = static_cast<int>(rows.size());
    BitMatrix m(n);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n) throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
        int j = 0;
        for (int entry : row) m.set(i, j++, entry != 0);
        ++i;
    }
    return m;
}

BitMatrix BitMatrix::from_columns(std::span<const BitVec> columns) {
    const int n = static_cast<int>(columns.size());
    BitMatrix m(n);
    for (int j = 0; j < n; ++j) {
        if (columns[j].dim() != n) throw Error(ErrorCode::DimensionMismatch, "column dimension differs");
        for (int i = 0; i < n; ++i) m.set(i, j, columns[j].get(i));
    }
    return m;
}

BitMatrix BitMatrix::from_string(std::string_view bits) {
    int n = 0;
    while (n * n < static_cast<int>(bits.size())) ++n;
    if (n * n != static_cast<int>(bits.size()) || n == 0)
        throw Error(ErrorCode::SyntaxError, "matrix bit string length is not a square");
    BitMatrix m(n);
    for (int k = 0; k < n * n; ++k) {
        if (bits[k] != '0' && bits[k] != '1') throw Error(ErrorCode::SyntaxError, "bad matrix bit string");
        m.set(k / n, k % n, bits[k] == '1');
    }
    return m;
}

void BitMatrix::set(int i, int j, bool value) {
    if (value)
        rows_[i] |= 1u << j;
    else
        rows_[i] &= ~(1u << j);
}

BitVec BitMatrix::column(int j) const {
    std::uint32_t bits = 0;
    for (int i = 0; i < dim_; ++i)
        if (get(i, j)) bits |= 1u << i;
    return BitVec(dim_, bits);
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            if (get(i, j)) t.rows_[j] |= 1u << i;
    return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& other) const {
    if (dim_ != other.dim_) throw Error(ErrorCode::DimensionMismatch, "matrix dimensions differ");
    BitMatrix p(dim_);
    for (int i = 0; i < dim_; ++i) {
        std::uint32_t acc = 0;
        for (std::uint32_t r = rows_[i]; r; r &= r - 1) acc ^= other.rows_[std::countr_zero(r)];
        p.rows_[i] = acc;
    }
    return p;
}

BitVec BitMatrix::operator*(const BitVec& v) const {
    if (dim_ != v.dim()) throw Error(ErrorCode::DimensionMismatch, "matrix/vector dimensions differ");
    std::uint32_t bits = 0;
    for (int i = 0; i < dim_; ++i)
        if (parity(rows_[i] & v.bits())) bits |= 1u << i;
    return BitVec(dim_, bits);
}

bool BitMatrix::is_identity() const { return *this == identity(dim_); }

std::string BitMatrix::to_string() const {
    std::string s;
    s.reserve(static_cast<std::size_t>(dim_ * dim_));
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) s.push_back(get(i, j) ? '1' : '0');
    return s;
}

RectBitMatrix::RectBitMatrix(int rows, int cols) : rows_(static_cast<std::size_t>(rows), 0), cols_(cols) {
    if (rows < 1 || cols < 1 || cols > 64)
        throw Error(ErrorCode::DimensionTooLarge, "rectangular matrix must have 1..64 columns and a row");
}

void RectBitMatrix::set(int i, int j, bool value) {
    if (value)
        rows_[i] |= std::uint64_t{1} << j;
    else
        rows_[i] &= ~(std::uint64_t{1} << j);
}

int RectBitMatrix::row_count(int i) const { return std::popcount(rows_[i]); }

int RectBitMatrix::column_count(int j) const {
    int c = 0;
    for (auto r : rows_) c += (r >> j) & 1u;
    return c;
}

std::string RectBitMatrix::to_string() const {
    std::ostringstream out;
    for (int i = 0; i < rows(); ++i) {
        for (int j = 0; j < cols_; ++j) out << (get(i, j) ? '1' : '0');
        out << '\n';
    }
    return out.str();
}

int rank(std::span<const std::uint64_t> rows) {
    std::vector<std::uint64_t> basis;
    for (auto r : rows) insert_into_basis(basis, r);
    return static_cast<int>(basis.size());
}

int rank(const BitMatrix& m) {
    std::vector<std::uint64_t> rows(m.rows().begin(), m.rows().end());
    return rank(rows);
}

int rank(const RectBitMatrix& m) {
    std::vector<std::uint64_t> rows;
    rows.reserve(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row_bits(i));
    return rank(rows);
}

BitMatrix invert(const BitMatrix& m) {
    const int n = m.dim();
    // Augmented rows: low n bits = m, next n bits = identity.
    std::vector<std::uint64_t> aug(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) aug[i] = std::uint64_t{m.rows()[i]} | (std::uint64_t{1} << (n + i));
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if ((aug[r] >> col) & 1u) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw Error(ErrorCode::Singular, "matrix " + m.to_string() + " is singular");
        std::swap(aug[col], aug[pivot]);
        for (int r = 0; r < n; ++r)
            if (r != col && ((aug[r] >> col) & 1u)) aug[r] ^= aug[col];
    }
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rows[i] = static_cast<std::uint32_t>(aug[i] >> n);
    return BitMatrix(n, std::move(rows));
}

BitVec solve(const BitMatrix& m, const BitVec& v) {
    if (m.dim() != v.dim()) throw Error(ErrorCode::DimensionMismatch, "matrix/vector dimensions differ");
    const int n = m.dim();
    std::vector<std::uint64_t> aug(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) aug[i] = std::uint64_t{m.rows()[i]} | (std::uint64_t{v.get(i)} << n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if ((aug[r] >> col) & 1u) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw Error(ErrorCode::Singular, "matrix " + m.to_string() + " is singular");
        std::swap(aug[col], aug[pivot]);
        for (int r = 0; r < n; ++r)
            if (r != col && ((aug[r] >> col) & 1u)) aug[r] ^= aug[col];
    }
    std::uint32_t bits = 0;
    for (int i = 0; i < n; ++i)
        if ((aug[i] >> n) & 1u) bits |= 1u << i;
    return BitVec(n, bits);
}

std::vector<BitVec> span_basis(std::span<const BitVec> vectors) {
    std::vector<std::uint64_t> basis;
    int n = vectors.empty() ? 0 : vectors.front().dim();
    for (const auto& v : vectors) {
        if (v.dim() != n) throw Error(ErrorCode::DimensionMismatch, "vector dimensions differ");
        insert_into_basis(basis, v.bits());
    }
    std::vector<BitVec> out;
    for (auto b : basis) out.emplace_back(n, static_cast<std::uint32_t>(b));
    std::sort(out.begin(), out.end());
    return out;
}

bool linearly_independent(std::span<const BitVec> vectors) {
    std::vector<std::uint64_t> basis;
    for (const auto& v : vectors)
        if (!insert_into_basis(basis, v.bits())) return false;
    return true;
}

std::vector<BitVec> null_space(std::span<const BitVec> constraint_rows, int n) {
    check_dim(n);
    // Row-reduce the constraints to reduced echelon form, pivots on lowest free column.
    std::vector<std::uint32_t> rows;
    for (const auto& r : constraint_rows) {
        if (r.dim() != n) throw Error(ErrorCode::DimensionMismatch, "constraint dimension differs");
        rows.push_back(r.bits());
    }
    std::vector<int> pivot_col;
    std::size_t rank_rows = 0;
    for (int col = 0; col < n && rank_rows < rows.size(); ++col) {
        std::size_t p = rank_rows;
        while (p < rows.size() && !((rows[p] >> col) & 1u)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rank_rows], rows[p]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank_rows && ((rows[r] >> col) & 1u)) rows[r] ^= rows[rank_rows];
        pivot_col.push_back(col);
        ++rank_rows;
    }
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<BitVec> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::uint32_t x = 1u << free;
        for (std::size_t k = 0; k < pivot_col.size(); ++k)
            if ((rows[k] >> free) & 1u) x |= 1u << pivot_col[k];
        basis.emplace_back(n, x);
    }
    return basis;
}

std::uint64_t gl_order(int n) {
    if (n < 1) throw Error(ErrorCode::DimensionMismatch, "gl_order needs n >= 1");
    if (n > 8) throw Error(ErrorCode::DimensionTooLarge, "|GL(n,2)| exceeds 64 bits for n > 8");
    std::uint64_t order = std::uint64_t{1} << (n * (n - 1) / 2);
    for (int i = 1; i <= n; ++i) order *= (std::uint64_t{1} << i) - 1;
    return order;
}

std::vector<BitMatrix> enumerate_gl(int n) {
    if (n < 1) throw Error(ErrorCode::DimensionMismatch, "enumerate_gl needs n >= 1");
    if (n > kMaxGLDim) throw Error(ErrorCode::DimensionTooLarge, "enumerate_gl supports n <= 5");
    std::vector<BitMatrix> out;
    out.reserve(static_cast<std::size_t>(gl_order(n)));
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(n));
    const std::uint32_t limit = 1u << n;

    // Rows are chosen in increasing word order; each must be independent of the earlier ones.
    auto extend = [&](auto&& self, int depth, const std::vector<std::uint64_t>& basis) -> void {
        if (depth == n) {
            out.emplace_back(n, rows);
            return;
        }
        for (std::uint32_t r = 1; r < limit; ++r) {
            auto next = basis;
            if (!insert_into_basis(next, r)) continue;
            rows[depth] = r;
            self(self, depth + 1, next);
        }
    };
    extend(extend, 0, {});
    return out;
}

BitMatrix delta_matrix(int n, int i) {
    if (i < 0 || i > n) throw Error(ErrorCode::DimensionMismatch, "delta index out of range");
    BitMatrix m = BitMatrix::identity(n);
    if (i > 0)
        for (int j = 0; j < n; ++j) m.set(i - 1, j, true);
    return m;
}

BitMatrix exchange_matrix(int n, int i, int j) {
    BitMatrix m(n);
    for (int k = 0; k < n; ++k) {
        int src = k == i ? j : (k == j ? i : k);
        m.set(k, src, true);
    }
    return m;
}

}  // namespace z2cob
