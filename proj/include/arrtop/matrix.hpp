/**
 * Dense and sparse integer matrices.
 *
 * Element types are std::int64_t (checked: every add/sub/mul that overflows
 * throws ArithmeticOverflow) or BigInt.  Algorithms are written once over
 * both and the caller retries with BigInt on overflow.
 */

#ifndef ARRTOP_MATRIX_HPP
#define ARRTOP_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <queue>
#include <string>
#include <utility>
#include <vector>
#include "errors.hpp"
#include "rational.hpp"

namespace arrtop {

namespace detail {

inline std::int64_t add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw ArithmeticOverflow();
    return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw ArithmeticOverflow();
    return r;
}
inline std::int64_t mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ArithmeticOverflow();
    return r;
}
inline std::int64_t quot(std::int64_t a, std::int64_t b)
{
    if (b == -1 && a == INT64_MIN)
        throw ArithmeticOverflow();
    return a / b;
}
inline std::int64_t neg(std::int64_t a) { return sub(0, a); }
inline std::uint64_t magnitude(std::int64_t a) { return a < 0 ? 0 - std::uint64_t(a) : std::uint64_t(a); }
inline bool isZero(std::int64_t a) { return a == 0; }
inline bool isUnit(std::int64_t a) { return a == 1 || a == -1; }

inline BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt quot(const BigInt& a, const BigInt& b) { return a / b; }   // truncates
inline BigInt neg(const BigInt& a) { return -a; }
inline BigInt magnitude(const BigInt& a) { return abs(a); }
inline bool isZero(const BigInt& a) { return a.is_zero(); }
inline bool isUnit(const BigInt& a) { return a == 1 || a == -1; }

inline BigInt toBig(std::int64_t a) { return BigInt(a); }
inline BigInt toBig(const BigInt& a) { return a; }

}   // namespace detail

/** Row-major dense matrix. */
template <typename T>
class DenseMatrix
{
    private:
        std::size_t rows_ = 0, cols_ = 0;
        std::vector<T> data_;

    public:
        DenseMatrix() = default;
        DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
        DenseMatrix(std::size_t rows, std::size_t cols, std::vector<T> data)
            : rows_(rows), cols_(cols), data_(std::move(data))
        {
            if (data_.size() != rows_ * cols_)
                throw ShapeMismatch("matrix data has the wrong size");
        }

        static DenseMatrix identity(std::size_t n)
        {
            DenseMatrix m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                m(i, i) = T(1);
            return m;
        }

        std::size_t rows() const { return rows_; }
        std::size_t cols() const { return cols_; }
        T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
        const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
        const std::vector<T>& data() const { return data_; }

        void swapRows(std::size_t a, std::size_t b)
        {
            if (a == b)
                return;
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap((*this)(a, j), (*this)(b, j));
        }
        void swapCols(std::size_t a, std::size_t b)
        {
            if (a == b)
                return;
            for (std::size_t i = 0; i < rows_; ++i)
                std::swap((*this)(i, a), (*this)(i, b));
        }
        /** row dst += q * row src */
        void addRow(std::size_t dst, std::size_t src, const T& q, std::size_t from = 0)
        {
            for (std::size_t j = from; j < cols_; ++j)
                if (!detail::isZero((*this)(src, j)))
                    (*this)(dst, j) = detail::add((*this)(dst, j), detail::mul(q, (*this)(src, j)));
        }
        /** col dst += q * col src */
        void addCol(std::size_t dst, std::size_t src, const T& q, std::size_t from = 0)
        {
            for (std::size_t i = from; i < rows_; ++i)
                if (!detail::isZero((*this)(i, src)))
                    (*this)(i, dst) = detail::add((*this)(i, dst), detail::mul(q, (*this)(i, src)));
        }
        void negateRow(std::size_t r)
        {
            for (std::size_t j = 0; j < cols_; ++j)
                (*this)(r, j) = detail::neg((*this)(r, j));
        }
        void negateCol(std::size_t c)
        {
            for (std::size_t i = 0; i < rows_; ++i)
                (*this)(i, c) = detail::neg((*this)(i, c));
        }

        DenseMatrix rowRange(std::size_t begin, std::size_t end) const
        {
            DenseMatrix out(end - begin, cols_);
            for (std::size_t i = begin; i < end; ++i)
                for (std::size_t j = 0; j < cols_; ++j)
                    out(i - begin, j) = (*this)(i, j);
            return out;
        }
        DenseMatrix colRange(std::size_t begin, std::size_t end) const
        {
            DenseMatrix out(rows_, end - begin);
            for (std::size_t i = 0; i < rows_; ++i)
                for (std::size_t j = begin; j < end; ++j)
                    out(i, j - begin) = (*this)(i, j);
            return out;
        }
        DenseMatrix transposed() const
        {
            DenseMatrix out(cols_, rows_);
            for (std::size_t i = 0; i < rows_; ++i)
                for (std::size_t j = 0; j < cols_; ++j)
                    out(j, i) = (*this)(i, j);
            return out;
        }

        bool isZero() const
        {
            return std::all_of(data_.begin(), data_.end(), [](const T& x) { return detail::isZero(x); });
        }

        bool operator==(const DenseMatrix&) const = default;
};

using IntMatrix = DenseMatrix<BigInt>;

template <typename T>
DenseMatrix<T> operator*(const DenseMatrix<T>& a, const DenseMatrix<T>& b)
{
    if (a.cols() != b.rows())
        throw ShapeMismatch("matrix product: " + std::to_string(a.cols()) + " columns vs " +
                            std::to_string(b.rows()) + " rows");
    DenseMatrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
        {
            const T& x = a(i, k);
            if (detail::isZero(x))
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!detail::isZero(b(k, j)))
                    c(i, j) = detail::add(c(i, j), detail::mul(x, b(k, j)));
        }
    return c;
}

template <typename T>
DenseMatrix<T> operator+(const DenseMatrix<T>& a, const DenseMatrix<T>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeMismatch("matrix sum of different shapes");
    DenseMatrix<T> c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = detail::add(a(i, j), b(i, j));
    return c;
}

template <typename T>
IntMatrix toBigMatrix(const DenseMatrix<T>& m)
{
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = detail::toBig(m(i, j));
    return out;
}

/** Convert a BigInt matrix to int64, throwing ArithmeticOverflow if an entry does not fit. */
inline DenseMatrix<std::int64_t> toInt64Matrix(const IntMatrix& m)
{
    DenseMatrix<std::int64_t> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
        {
            if (m(i, j) > INT64_MAX || m(i, j) < INT64_MIN)
                throw ArithmeticOverflow();
            out(i, j) = static_cast<std::int64_t>(m(i, j));
        }
    return out;
}

/** Column-compressed sparse matrix; each column is sorted by row. */
template <typename T>
struct SparseMatrix
{
    using Entry = std::pair<std::uint32_t, T>;

    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<Entry> > columns;

    SparseMatrix() = default;
    SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

    std::size_t nonZeros() const
    {
        std::size_t nz = 0;
        for (const auto& col : columns)
            nz += col.size();
        return nz;
    }

    DenseMatrix<T> toDense() const
    {
        DenseMatrix<T> d(rows, cols);
        for (std::size_t j = 0; j < cols; ++j)
            for (const auto& [i, v] : columns[j])
                d(i, j) = v;
        return d;
    }

    template <typename U>
    SparseMatrix<U> convert() const
    {
        SparseMatrix<U> out(rows, cols);
        for (std::size_t j = 0; j < cols; ++j)
            for (const auto& [i, v] : columns[j])
                out.columns[j].emplace_back(i, U(v));
        return out;
    }
};

/** Result of eliminating unit pivots: the count and the residual block. */
template <typename T>
struct UnitElimination
{
    std::size_t unit_pivots = 0;
    DenseMatrix<T> residual;
};

/**
 * Gaussian elimination on +-1 pivots only.  Each unit pivot splits off an
 * invariant factor 1, so the Smith form of the input is 1^k (+) the Smith
 * form of the residual.  Pivots are chosen from the sparsest columns first.
 */
template <typename T>
UnitElimination<T> eliminateUnitPivots(SparseMatrix<T> a)
{
    using Entry = typename SparseMatrix<T>::Entry;
    std::vector<std::vector<std::uint32_t> > row_cols(a.rows);
    for (std::size_t j = 0; j < a.cols; ++j)
        for (const auto& e : a.columns[j])
            row_cols[e.first].push_back(static_cast<std::uint32_t>(j));
    std::vector<char> row_dead(a.rows, 0), col_dead(a.cols, 0);

    using Key = std::pair<std::size_t, std::uint32_t>;
    std::priority_queue<Key, std::vector<Key>, std::greater<Key> > queue;
    for (std::size_t j = 0; j < a.cols; ++j)
        if (!a.columns[j].empty())
            queue.emplace(a.columns[j].size(), static_cast<std::uint32_t>(j));

    auto find_in = [](const std::vector<Entry>& col, std::uint32_t row) -> const Entry* {
        auto it = std::lower_bound(col.begin(), col.end(), row,
                                   [](const Entry& e, std::uint32_t r) { return e.first < r; });
        return (it != col.end() && it->first == row) ? &*it : nullptr;
    };

    UnitElimination<T> out;
    std::vector<Entry> merged;
    while (!queue.empty())
    {
        auto [size, p] = queue.top();
        queue.pop();
        auto& pivot_col = a.columns[p];
        if (col_dead[p] || pivot_col.size() != size || pivot_col.empty())
            continue;

        // unit entry whose row touches the fewest columns
        const Entry* pivot = nullptr;
        for (const auto& e : pivot_col)
            if (detail::isUnit(e.second) && (!pivot || row_cols[e.first].size() < row_cols[pivot->first].size()))
                pivot = &e;
        if (!pivot)
            continue;   // re-queued if a later update touches this column

        const std::uint32_t r = pivot->first;
        const T v = pivot->second;
        std::vector<std::uint32_t> targets;
        std::swap(targets, row_cols[r]);
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        for (std::uint32_t c : targets)
        {
            if (c == p || col_dead[c])
                continue;
            auto& col = a.columns[c];
            const Entry* hit = find_in(col, r);
            if (!hit)
                continue;
            // col_c -= (a_rc / v) * col_p, and 1/v = v for a unit
            const T factor = detail::mul(hit->second, v);
            merged.clear();
            std::size_t x = 0, y = 0;
            while (x < col.size() || y < pivot_col.size())
            {
                if (y == pivot_col.size() || (x < col.size() && col[x].first < pivot_col[y].first))
                {
                    merged.push_back(col[x++]);
                }
                else if (x == col.size() || pivot_col[y].first < col[x].first)
                {
                    const auto& e = pivot_col[y++];
                    if (!row_dead[e.first])
                    {
                        merged.emplace_back(e.first, detail::neg(detail::mul(factor, e.second)));
                        row_cols[e.first].push_back(c);
                    }
                }
                else
                {
                    T value = detail::sub(col[x].second, detail::mul(factor, pivot_col[y].second));
                    if (!detail::isZero(value))
                        merged.emplace_back(col[x].first, std::move(value));
                    ++x;
                    ++y;
                }
            }
            col.swap(merged);
            queue.emplace(col.size(), c);
        }
        row_dead[r] = 1;
        col_dead[p] = 1;
        pivot_col.clear();
        ++out.unit_pivots;
    }

    // Residual on surviving rows and nonempty surviving columns
    std::vector<std::int64_t> row_map(a.rows, -1);
    std::size_t live_rows = 0;
    std::vector<std::size_t> live_cols;
    for (std::size_t j = 0; j < a.cols; ++j)
    {
        if (col_dead[j] || a.columns[j].empty())
            continue;
        live_cols.push_back(j);
        for (const auto& e : a.columns[j])
            if (row_map[e.first] < 0)
                row_map[e.first] = static_cast<std::int64_t>(live_rows++);
    }
    out.residual = DenseMatrix<T>(live_rows, live_cols.size());
    for (std::size_t k = 0; k < live_cols.size(); ++k)
        for (const auto& e : a.columns[live_cols[k]])
            out.residual(static_cast<std::size_t>(row_map[e.first]), k) = e.second;
    return out;
}

}   // namespace arrtop

#endif
