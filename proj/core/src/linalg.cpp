/**
 * @file linalg.cpp
 * @brief F_p elimination, sparse integer maps and Smith normal form.
 */
#include "seifert/linalg.hpp"

#include <algorithm>

namespace seifert {

std::uint32_t mod_p(std::int64_t x, std::uint32_t p) {
    std::int64_t r = x % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t mul_mod(std::uint32_t x, std::uint32_t y, std::uint32_t p) {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(x) * y) % p);
}

std::uint32_t add_mod(std::uint32_t x, std::uint32_t y, std::uint32_t p) {
    std::uint64_t s = static_cast<std::uint64_t>(x) + y;
    return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

std::uint32_t sub_mod(std::uint32_t x, std::uint32_t y, std::uint32_t p) {
    return x >= y ? x - y : static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) + p - y);
}

std::uint32_t inv_mod(std::uint32_t x, std::uint32_t p) {
    x %= p;
    if (x == 0) throw LinalgError("inverse of zero mod p");
    // Fermat: x^(p-2)
    std::uint64_t result = 1, base = x, e = p - 2;
    while (e > 0) {
        if (e & 1U) result = result * base % p;
        base = base * base % p;
        e >>= 1U;
    }
    return static_cast<std::uint32_t>(result);
}

std::int64_t centered(std::uint32_t x, std::uint32_t p) {
    return 2 * static_cast<std::int64_t>(x) > static_cast<std::int64_t>(p)
               ? static_cast<std::int64_t>(x) - p
               : static_cast<std::int64_t>(x);
}

// ---------------------------------------------------------------- dense F_p

PrimeFieldMatrix::PrimeFieldMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {
    if (p < 2) throw LinalgError("modulus must be at least 2");
}

PrimeFieldMatrix PrimeFieldMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                                             std::uint32_t p) {
    const std::size_t nr = rows.size();
    const std::size_t nc = nr == 0 ? 0 : rows.front().size();
    PrimeFieldMatrix m(nr, nc, p);
    for (std::size_t r = 0; r < nr; ++r) {
        if (rows[r].size() != nc) throw LinalgError("ragged row list");
        for (std::size_t c = 0; c < nc; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

PrimeFieldMatrix PrimeFieldMatrix::from_columns(const std::vector<FpVector>& cols,
                                                std::size_t rows, std::uint32_t p) {
    PrimeFieldMatrix m(rows, cols.size(), p);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw LinalgError("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r] % p;
    }
    return m;
}

FpVector PrimeFieldMatrix::column(std::size_t c) const {
    return FpVector(data_.begin() + static_cast<std::ptrdiff_t>(c * rows_),
                    data_.begin() + static_cast<std::ptrdiff_t>((c + 1) * rows_));
}

PrimeFieldMatrix PrimeFieldMatrix::transpose() const {
    PrimeFieldMatrix t(cols_, rows_, p_);
    for (std::size_t c = 0; c < cols_; ++c) {
        for (std::size_t r = 0; r < rows_; ++r) t.at(c, r) = (*this)(r, c);
    }
    return t;
}

FpVector PrimeFieldMatrix::apply(const FpVector& x) const {
    if (x.size() != cols_) throw LinalgError("apply: size mismatch");
    FpVector y(rows_, 0);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (x[c] == 0) continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            y[r] = add_mod(y[r], mul_mod((*this)(r, c), x[c], p_), p_);
        }
    }
    return y;
}

RrefResult rref(const PrimeFieldMatrix& m) {
    RrefResult out{m, {}, 0};
    PrimeFieldMatrix& a = out.reduced;
    const std::uint32_t p = a.modulus();
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a(piv, col) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row) {
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(piv, c), a.at(row, c));
        }
        const std::uint32_t inv = inv_mod(a(row, col), p);
        for (std::size_t c = col; c < a.cols(); ++c) a.at(row, c) = mul_mod(a(row, c), inv, p);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row) continue;
            const std::uint32_t f = a(r, col);
            if (f == 0) continue;
            for (std::size_t c = col; c < a.cols(); ++c) {
                a.at(r, c) = sub_mod(a(r, c), mul_mod(f, a(row, c), p), p);
            }
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.rank = row;
    return out;
}

std::size_t rank(const PrimeFieldMatrix& m) {
    // Eliminate on whichever orientation is smaller in rows.
    return rref(m).rank;
}

std::optional<FpVector> solve(const PrimeFieldMatrix& m, const FpVector& b) {
    if (b.size() != m.rows()) throw LinalgError("solve: right-hand side has the wrong length");
    PrimeFieldMatrix aug(m.rows(), m.cols() + 1, m.modulus());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        for (std::size_t r = 0; r < m.rows(); ++r) aug.at(r, c) = m(r, c);
    }
    for (std::size_t r = 0; r < m.rows(); ++r) aug.at(r, m.cols()) = b[r] % m.modulus();
    const RrefResult r = rref(aug);
    FpVector x(m.cols(), 0);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        if (r.pivots[i] == m.cols()) return std::nullopt;
        x[r.pivots[i]] = r.reduced(i, m.cols());
    }
    return x;
}

std::vector<FpVector> kernel_basis(const PrimeFieldMatrix& m) {
    const RrefResult r = rref(m);
    const std::uint32_t p = m.modulus();
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;
    std::vector<FpVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        FpVector v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) {
            v[r.pivots[i]] = sub_mod(0, r.reduced(i, free), p);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------------------------------------------------------- QuotientBasis

void QuotientBasis::reduce(FpVector& v, FpVector& tag) const {
    for (const Row& row : pivots_) {
        const std::uint32_t lambda = v[row.pivot];
        if (lambda == 0) continue;
        for (std::size_t i = row.pivot; i < dim_; ++i) {
            if (row.vec[i] != 0) v[i] = sub_mod(v[i], mul_mod(lambda, row.vec[i], p_), p_);
        }
        for (std::size_t i = 0; i < row.tag.size(); ++i) {
            if (row.tag[i] != 0) tag[i] = sub_mod(tag[i], mul_mod(lambda, row.tag[i], p_), p_);
        }
    }
}

bool QuotientBasis::insert(FpVector v, FpVector tag) {
    if (v.size() != dim_) throw LinalgError("QuotientBasis: dimension mismatch");
    for (auto& x : v) x %= p_;
    tag.resize(n_gens_, 0);
    reduce(v, tag);
    auto it = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
    if (it == v.end()) return false;
    const auto piv = static_cast<std::size_t>(it - v.begin());
    const std::uint32_t inv = inv_mod(v[piv], p_);
    for (auto& x : v) x = mul_mod(x, inv, p_);
    for (auto& x : tag) x = mul_mod(x, inv, p_);
    pivots_.push_back({piv, std::move(v), std::move(tag)});
    return true;
}

bool QuotientBasis::add_relation(const FpVector& v) { return insert(v, {}); }

bool QuotientBasis::add_generator(const FpVector& v) {
    ++n_gens_;
    for (Row& row : pivots_) row.tag.resize(n_gens_, 0);
    FpVector tag(n_gens_, 0);
    tag[n_gens_ - 1] = 1;
    if (!insert(v, std::move(tag))) {
        --n_gens_;
        for (Row& row : pivots_) row.tag.resize(n_gens_);
        return false;
    }
    return true;
}

std::optional<FpVector> QuotientBasis::try_coords(const FpVector& v) const {
    if (v.size() != dim_) throw LinalgError("QuotientBasis: dimension mismatch");
    FpVector w = v;
    for (auto& x : w) x %= p_;
    FpVector tag(n_gens_, 0);
    reduce(w, tag);
    if (std::any_of(w.begin(), w.end(), [](std::uint32_t x) { return x != 0; })) {
        return std::nullopt;
    }
    for (auto& x : tag) x = sub_mod(0, x, p_);
    return tag;
}

FpVector QuotientBasis::coords(const FpVector& v) const {
    auto c = try_coords(v);
    if (!c) throw LinalgError("vector is not in the span of cocycle generators and relations");
    return *c;
}

bool QuotientBasis::in_relation_span(const FpVector& v) const {
    auto c = try_coords(v);
    return c && std::all_of(c->begin(), c->end(), [](std::uint32_t x) { return x == 0; });
}

FpVector quotient_coords(const FpVector& v, const std::vector<FpVector>& cocycle_basis,
                         const std::vector<FpVector>& coboundary_basis, std::uint32_t p) {
    QuotientBasis q(v.size(), p);
    for (const auto& b : coboundary_basis) q.add_relation(b);
    for (const auto& g : cocycle_basis) {
        if (!q.add_generator(g)) {
            throw LinalgError("cocycle basis is dependent modulo coboundaries");
        }
    }
    return q.coords(v);
}

// ---------------------------------------------------------- sparse integer

void SparseIntMatrix::add(std::size_t r, std::size_t c, std::int64_t v) {
    if (r >= rows_ || c >= cols_) throw LinalgError("sparse index out of range");
    if (v == 0) return;
    auto& col = data_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const Entry& e, std::size_t row) { return e.first < row; });
    if (it != col.end() && it->first == r) {
        it->second += v;
        if (it->second == 0) col.erase(it);
    } else {
        col.insert(it, {r, v});
    }
}

std::int64_t SparseIntMatrix::get(std::size_t r, std::size_t c) const {
    for (const auto& [row, v] : data_[c]) {
        if (row == r) return v;
    }
    return 0;
}

SparseIntMatrix SparseIntMatrix::operator*(const SparseIntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw LinalgError("sparse product: shape mismatch");
    SparseIntMatrix out(rows_, rhs.cols_);
    for (std::size_t c = 0; c < rhs.cols_; ++c) {
        for (const auto& [k, v] : rhs.data_[c]) {
            for (const auto& [r, w] : data_[k]) out.add(r, c, v * w);
        }
    }
    return out;
}

bool SparseIntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const auto& c) { return c.empty(); });
}

bool operator==(const SparseIntMatrix& x, const SparseIntMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
}

std::vector<std::int64_t> SparseIntMatrix::apply_transpose(const std::vector<std::int64_t>& x) const {
    if (x.size() != rows_) throw LinalgError("apply_transpose: size mismatch");
    std::vector<std::int64_t> y(cols_, 0);
    for (std::size_t c = 0; c < cols_; ++c) {
        for (const auto& [r, v] : data_[c]) y[c] += v * x[r];
    }
    return y;
}

FpVector SparseIntMatrix::apply_transpose(const FpVector& x, std::uint32_t p) const {
    if (x.size() != rows_) throw LinalgError("apply_transpose: size mismatch");
    FpVector y(cols_, 0);
    for (std::size_t c = 0; c < cols_; ++c) {
        std::uint32_t acc = 0;
        for (const auto& [r, v] : data_[c]) acc = add_mod(acc, mul_mod(mod_p(v, p), x[r], p), p);
        y[c] = acc;
    }
    return y;
}

std::vector<std::int64_t> SparseIntMatrix::apply(const std::vector<std::int64_t>& x) const {
    if (x.size() != cols_) throw LinalgError("apply: size mismatch");
    std::vector<std::int64_t> y(rows_, 0);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (x[c] == 0) continue;
        for (const auto& [r, v] : data_[c]) y[r] += v * x[c];
    }
    return y;
}

PrimeFieldMatrix SparseIntMatrix::to_fp(std::uint32_t p) const {
    PrimeFieldMatrix m(rows_, cols_, p);
    for (std::size_t c = 0; c < cols_; ++c) {
        for (const auto& [r, v] : data_[c]) m.set(r, c, v);
    }
    return m;
}

PrimeFieldMatrix SparseIntMatrix::transpose_to_fp(std::uint32_t p) const {
    PrimeFieldMatrix m(cols_, rows_, p);
    for (std::size_t c = 0; c < cols_; ++c) {
        for (const auto& [r, v] : data_[c]) m.set(c, r, v);
    }
    return m;
}

// ---------------------------------------------------------- dense integer

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t nr = rows.size();
    const std::size_t nc = nr == 0 ? 0 : rows.front().size();
    IntegerMatrix m(nr, nc);
    for (std::size_t r = 0; r < nr; ++r) {
        if (rows[r].size() != nc) throw LinalgError("ragged row list");
        for (std::size_t c = 0; c < nc; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

IntegerMatrix IntegerMatrix::from_sparse(const SparseIntMatrix& s) {
    IntegerMatrix m(s.rows(), s.cols());
    for (std::size_t c = 0; c < s.cols(); ++c) {
        for (const auto& [r, v] : s.column(c)) m(r, c) = v;
    }
    return m;
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw LinalgError("integer product: shape mismatch");
    IntegerMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const BigInt& a = (*this)(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
        }
    }
    return out;
}

namespace {

void swap_rows(IntegerMatrix& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
}

void swap_cols(IntegerMatrix& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
}

// row_i += f * row_j
void add_row(IntegerMatrix& m, std::size_t i, std::size_t j, const BigInt& f) {
    if (f == 0) return;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (m(j, c) != 0) m(i, c) += f * m(j, c);
    }
}

void add_col(IntegerMatrix& m, std::size_t i, std::size_t j, const BigInt& f) {
    if (f == 0) return;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (m(r, j) != 0) m(r, i) += f * m(r, j);
    }
}

void negate_row(IntegerMatrix& m, std::size_t i) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = -m(i, c);
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
    SmithForm out{m, IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.cols()), {}};
    IntegerMatrix& a = out.d;
    IntegerMatrix& u = out.u;
    IntegerMatrix& v = out.v;
    const std::size_t nr = a.rows(), nc = a.cols();
    std::size_t t = 0;
    while (t < nr && t < nc) {
        // Pick the smallest nonzero entry in the trailing block as pivot.
        bool found = false;
        std::size_t pr = t, pc = t;
        BigInt best;
        for (std::size_t r = t; r < nr; ++r) {
            for (std::size_t c = t; c < nc; ++c) {
                if (a(r, c) == 0) continue;
                BigInt mag = abs(a(r, c));
                if (!found || mag < best) {
                    best = mag;
                    pr = r;
                    pc = c;
                    found = true;
                }
            }
        }
        if (!found) break;
        swap_rows(a, t, pr);
        swap_rows(u, t, pr);
        swap_cols(a, t, pc);
        swap_cols(v, t, pc);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t r = t + 1; r < nr; ++r) {
                if (a(r, t) == 0) continue;
                const BigInt q = floor_div(a(r, t), a(t, t));
                add_row(a, r, t, -q);
                add_row(u, r, t, -q);
                if (a(r, t) != 0) {
                    swap_rows(a, t, r);
                    swap_rows(u, t, r);
                    clean = false;
                }
            }
            for (std::size_t c = t + 1; c < nc; ++c) {
                if (a(t, c) == 0) continue;
                const BigInt q = floor_div(a(t, c), a(t, t));
                add_col(a, c, t, -q);
                add_col(v, c, t, -q);
                if (a(t, c) != 0) {
                    swap_cols(a, t, c);
                    swap_cols(v, t, c);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Divisibility: the pivot must divide the whole trailing block.
            for (std::size_t r = t + 1; r < nr && clean; ++r) {
                for (std::size_t c = t + 1; c < nc; ++c) {
                    if (a(r, c) % a(t, t) != 0) {
                        add_row(a, t, r, 1);
                        add_row(u, t, r, 1);
                        clean = false;
                        break;
                    }
                }
            }
        }
        if (a(t, t) < 0) {
            negate_row(a, t);
            negate_row(u, t);
        }
        out.diagonal.push_back(a(t, t));
        ++t;
    }
    return out;
}

BigInt determinant(const IntegerMatrix& m) {
    if (m.rows() != m.cols()) throw LinalgError("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntegerMatrix a = m;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a(r, k) == 0) ++r;
            if (r == n) return 0;
            swap_rows(a, k, r);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

}  // namespace seifert
