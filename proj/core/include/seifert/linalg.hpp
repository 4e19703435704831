/**
 * @file linalg.hpp
 * @brief Exact linear algebra: F_p row reduction and quotient coordinates,
 *        sparse integer maps, and Smith normal form over arbitrary precision.
 */
#ifndef SEIFERT_LINALG_HPP
#define SEIFERT_LINALG_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace seifert {

using BigInt = boost::multiprecision::cpp_int;
using FpVector = std::vector<std::uint32_t>;

class LinalgError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Residue of x in [0, p).
std::uint32_t mod_p(std::int64_t x, std::uint32_t p);
std::uint32_t mul_mod(std::uint32_t x, std::uint32_t y, std::uint32_t p);
std::uint32_t add_mod(std::uint32_t x, std::uint32_t y, std::uint32_t p);
std::uint32_t sub_mod(std::uint32_t x, std::uint32_t y, std::uint32_t p);
/// Inverse of x mod p; throws if x == 0 mod p.
std::uint32_t inv_mod(std::uint32_t x, std::uint32_t p);
/// Signed representative in (-p/2, p/2].
std::int64_t centered(std::uint32_t x, std::uint32_t p);

/// Dense matrix over F_p, column-major.
class PrimeFieldMatrix {
public:
    PrimeFieldMatrix() = default;
    PrimeFieldMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);
    static PrimeFieldMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                                      std::uint32_t p);
    /// Matrix whose columns are the given vectors (all of length rows).
    static PrimeFieldMatrix from_columns(const std::vector<FpVector>& cols, std::size_t rows,
                                         std::uint32_t p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t modulus() const { return p_; }

    std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[c * rows_ + r]; }
    std::uint32_t& at(std::size_t r, std::size_t c) { return data_[c * rows_ + r]; }
    void set(std::size_t r, std::size_t c, std::int64_t v) { at(r, c) = mod_p(v, p_); }

    FpVector column(std::size_t c) const;
    PrimeFieldMatrix transpose() const;
    FpVector apply(const FpVector& x) const;

    friend bool operator==(const PrimeFieldMatrix&, const PrimeFieldMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::uint32_t p_ = 2;
    std::vector<std::uint32_t> data_;
};

struct RrefResult {
    PrimeFieldMatrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

RrefResult rref(const PrimeFieldMatrix& m);
std::size_t rank(const PrimeFieldMatrix& m);
/// Basis of the right null space {x : M x = 0}.
std::vector<FpVector> kernel_basis(const PrimeFieldMatrix& m);
/// Some solution of M x = b (free variables set to zero), or nullopt.
std::optional<FpVector> solve(const PrimeFieldMatrix& m, const FpVector& b);

/**
 * Incremental echelon basis that tracks, for every stored vector, its
 * coordinates with respect to a designated list of "generators".
 * Vectors inserted as relations carry zero generator coordinates.
 */
class QuotientBasis {
public:
    QuotientBasis(std::size_t dim, std::uint32_t p) : dim_(dim), p_(p) {}

    /// Inserts a relation (coboundary); returns true if it raised the rank.
    bool add_relation(const FpVector& v);
    /// Inserts a generator; returns false if dependent modulo previous vectors.
    bool add_generator(const FpVector& v);

    std::size_t generator_count() const { return n_gens_; }
    std::size_t rank() const { return pivots_.size(); }
    std::uint32_t modulus() const { return p_; }

    /// Coordinates of v in the generator basis modulo relations, or nullopt
    /// when v is outside the span.
    std::optional<FpVector> try_coords(const FpVector& v) const;
    FpVector coords(const FpVector& v) const;
    /// True if v lies in the span of the relations alone.
    bool in_relation_span(const FpVector& v) const;

private:
    struct Row {
        std::size_t pivot;
        FpVector vec;
        FpVector tag;
    };
    bool insert(FpVector v, FpVector tag);
    void reduce(FpVector& v, FpVector& tag) const;

    std::size_t dim_;
    std::uint32_t p_;
    std::size_t n_gens_ = 0;
    std::vector<Row> pivots_;
};

/// One-shot form of QuotientBasis: coordinates of [v] in the basis
/// induced by cocycle_basis modulo coboundary_basis.
FpVector quotient_coords(const FpVector& v, const std::vector<FpVector>& cocycle_basis,
                         const std::vector<FpVector>& coboundary_basis, std::uint32_t p);

/// Sparse integer matrix stored by columns; used for boundaries and chain maps.
class SparseIntMatrix {
public:
    using Entry = std::pair<std::size_t, std::int64_t>;

    SparseIntMatrix() = default;
    SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void add(std::size_t r, std::size_t c, std::int64_t v);
    const std::vector<Entry>& column(std::size_t c) const { return data_[c]; }
    std::int64_t get(std::size_t r, std::size_t c) const;

    SparseIntMatrix operator*(const SparseIntMatrix& rhs) const;
    bool is_zero() const;
    friend bool operator==(const SparseIntMatrix& x, const SparseIntMatrix& y);

    /// y = M^t x over Z (cochain pull-back).
    std::vector<std::int64_t> apply_transpose(const std::vector<std::int64_t>& x) const;
    FpVector apply_transpose(const FpVector& x, std::uint32_t p) const;
    std::vector<std::int64_t> apply(const std::vector<std::int64_t>& x) const;

    PrimeFieldMatrix to_fp(std::uint32_t p) const;
    PrimeFieldMatrix transpose_to_fp(std::uint32_t p) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::vector<Entry>> data_;
};

/// Dense arbitrary-precision integer matrix, row-major.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static IntegerMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
    static IntegerMatrix from_sparse(const SparseIntMatrix& m);
    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntegerMatrix operator*(const IntegerMatrix& rhs) const;
    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

struct SmithForm {
    IntegerMatrix d;  ///< diagonal, d_i | d_{i+1}, non-negative
    IntegerMatrix u;  ///< unimodular, rows x rows
    IntegerMatrix v;  ///< unimodular, cols x cols
    std::vector<BigInt> diagonal;  ///< nonzero invariant factors in order
};

/// U * M * V = D.
SmithForm smith_normal_form(const IntegerMatrix& m);

/// Determinant by fraction-free elimination (Bareiss); square input only.
BigInt determinant(const IntegerMatrix& m);

}  // namespace seifert

#endif
