/**
 * Smith normal form over the integers with optional unimodular
 * certificates U, V (and their inverses) such that U * M * V = D.
 */

#ifndef ARRTOP_SMITH_HPP
#define ARRTOP_SMITH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>
#include "errors.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace arrtop {

struct SmithOptions
{
    bool row_transform = false;     // U and U^-1
    bool col_transform = false;     // V and V^-1
};

template <typename T>
struct SmithResult
{
    std::vector<T> diagonal;        // d_1 | d_2 | ... | d_r, all positive
    std::optional<DenseMatrix<T> > U, Uinv, V, Vinv;

    std::size_t rank() const { return diagonal.size(); }
};

namespace detail {

template <typename T>
bool magnitudeLess(const T& a, const T& b)
{
    return magnitude(a) < magnitude(b);
}

template <typename T>
class SmithReducer
{
    private:
        DenseMatrix<T>& a_;
        SmithResult<T>& res_;

        void swapRows(std::size_t i, std::size_t j)
        {
            a_.swapRows(i, j);
            if (res_.U)
            {
                res_.U->swapRows(i, j);
                res_.Uinv->swapCols(i, j);
            }
        }
        void swapCols(std::size_t i, std::size_t j)
        {
            a_.swapCols(i, j);
            if (res_.V)
            {
                res_.V->swapCols(i, j);
                res_.Vinv->swapRows(i, j);
            }
        }
        // row dst += q * row src
        void addRow(std::size_t dst, std::size_t src, const T& q, std::size_t from)
        {
            a_.addRow(dst, src, q, from);
            if (res_.U)
            {
                res_.U->addRow(dst, src, q);
                res_.Uinv->addCol(src, dst, neg(q));
            }
        }
        // col dst += q * col src
        void addCol(std::size_t dst, std::size_t src, const T& q, std::size_t from)
        {
            a_.addCol(dst, src, q, from);
            if (res_.V)
            {
                res_.V->addCol(dst, src, q);
                res_.Vinv->addRow(src, dst, neg(q));
            }
        }
        void negateRow(std::size_t r)
        {
            a_.negateRow(r);
            if (res_.U)
            {
                res_.U->negateRow(r);
                res_.Uinv->negateCol(r);
            }
        }

        // Move the smallest nonzero entry of row t / column t (from t on) to (t, t)
        bool pivotFromCross(std::size_t t)
        {
            std::size_t bi = t, bj = t;
            bool found = false;
            for (std::size_t i = t; i < a_.rows(); ++i)
                if (!isZero(a_(i, t)) && (!found || magnitudeLess(a_(i, t), a_(bi, bj))))
                {
                    bi = i;
                    bj = t;
                    found = true;
                }
            for (std::size_t j = t + 1; j < a_.cols(); ++j)
                if (!isZero(a_(t, j)) && (!found || magnitudeLess(a_(t, j), a_(bi, bj))))
                {
                    bi = t;
                    bj = j;
                    found = true;
                }
            if (!found)
                return false;
            swapRows(t, bi);
            swapCols(t, bj);
            return true;
        }

    public:
        SmithReducer(DenseMatrix<T>& a, SmithResult<T>& res) : a_(a), res_(res) {}

        void run()
        {
            const std::size_t limit = std::min(a_.rows(), a_.cols());
            for (std::size_t t = 0; t < limit; ++t)
            {
                // global minimum-magnitude pivot in the trailing block
                std::size_t bi = a_.rows(), bj = a_.cols();
                for (std::size_t i = t; i < a_.rows(); ++i)
                    for (std::size_t j = t; j < a_.cols(); ++j)
                        if (!isZero(a_(i, j)) && (bi == a_.rows() || magnitudeLess(a_(i, j), a_(bi, bj))))
                            bi = i, bj = j;
                if (bi == a_.rows())
                    break;
                swapRows(t, bi);
                swapCols(t, bj);

                for (;;)
                {
                    bool clean = true;
                    for (std::size_t i = t + 1; i < a_.rows(); ++i)
                    {
                        if (isZero(a_(i, t)))
                            continue;
                        addRow(i, t, neg(quot(a_(i, t), a_(t, t))), t);
                        clean = clean && isZero(a_(i, t));
                    }
                    for (std::size_t j = t + 1; j < a_.cols(); ++j)
                    {
                        if (isZero(a_(t, j)))
                            continue;
                        addCol(j, t, neg(quot(a_(t, j), a_(t, t))), t);
                        clean = clean && isZero(a_(t, j));
                    }
                    if (!clean)
                    {
                        pivotFromCross(t);
                        continue;
                    }
                    // divisibility of the trailing block by the pivot
                    std::size_t bad = a_.rows();
                    for (std::size_t i = t + 1; i < a_.rows() && bad == a_.rows(); ++i)
                        for (std::size_t j = t + 1; j < a_.cols(); ++j)
                            if (!isZero(a_(i, j)) && !isZero(sub(a_(i, j), mul(quot(a_(i, j), a_(t, t)), a_(t, t)))))
                            {
                                bad = i;
                                break;
                            }
                    if (bad == a_.rows())
                        break;
                    addRow(t, bad, T(1), t);
                }
                if (a_(t, t) < 0)
                    negateRow(t);
                res_.diagonal.push_back(a_(t, t));
            }
        }
};

}   // namespace detail

/**
 * Smith normal form of M computed in element type T.  For T = int64_t
 * the computation throws ArithmeticOverflow if an intermediate entry
 * leaves the 64-bit range.
 */
template <typename T>
SmithResult<T> smithNormalFormIn(DenseMatrix<T> m, SmithOptions opts = {})
{
    SmithResult<T> res;
    if (opts.row_transform)
    {
        res.U = DenseMatrix<T>::identity(m.rows());
        res.Uinv = DenseMatrix<T>::identity(m.rows());
    }
    if (opts.col_transform)
    {
        res.V = DenseMatrix<T>::identity(m.cols());
        res.Vinv = DenseMatrix<T>::identity(m.cols());
    }
    detail::SmithReducer<T>(m, res).run();
    return res;
}

template <typename T>
SmithResult<BigInt> toBigResult(const SmithResult<T>& r)
{
    SmithResult<BigInt> out;
    for (const auto& d : r.diagonal)
        out.diagonal.push_back(detail::toBig(d));
    if (r.U)
    {
        out.U = toBigMatrix(*r.U);
        out.Uinv = toBigMatrix(*r.Uinv);
    }
    if (r.V)
    {
        out.V = toBigMatrix(*r.V);
        out.Vinv = toBigMatrix(*r.Vinv);
    }
    return out;
}

/**
 * Smith normal form of an integer matrix.  Runs in 64-bit arithmetic and
 * falls back to arbitrary precision if any entry overflows.
 */
inline SmithResult<BigInt> smithNormalForm(const IntMatrix& m, SmithOptions opts = {})
{
    try
    {
        return toBigResult(smithNormalFormIn(toInt64Matrix(m), opts));
    }
    catch (const ArithmeticOverflow&)
    {
        return smithNormalFormIn(m, opts);
    }
}

/** The diagonal matrix D with the same shape as M. */
inline IntMatrix smithDiagonalMatrix(std::size_t rows, std::size_t cols, const std::vector<BigInt>& diagonal)
{
    IntMatrix d(rows, cols);
    for (std::size_t i = 0; i < diagonal.size(); ++i)
        d(i, i) = diagonal[i];
    return d;
}

/**
 * Check a Smith form against its input: the divisibility chain, U M V = D
 * and U Uinv = I, V Vinv = I for whichever certificates are present.
 */
inline bool verifySmith(const IntMatrix& m, const SmithResult<BigInt>& r)
{
    for (std::size_t i = 0; i < r.diagonal.size(); ++i)
    {
        if (r.diagonal[i] <= 0)
            return false;
        if (i + 1 < r.diagonal.size() && r.diagonal[i + 1] % r.diagonal[i] != 0)
            return false;
    }
    const IntMatrix d = smithDiagonalMatrix(m.rows(), m.cols(), r.diagonal);
    IntMatrix left = r.U ? *r.U * m : m;
    IntMatrix both = r.V ? left * *r.V : left;
    if (r.U && r.V && !(both == d))
        return false;
    if (r.U && !(*r.U * *r.Uinv == IntMatrix::identity(m.rows())))
        return false;
    if (r.V && !(*r.V * *r.Vinv == IntMatrix::identity(m.cols())))
        return false;
    return true;
}

}   // namespace arrtop

#endif
