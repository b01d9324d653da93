// Slow, independent reference computations used only by the tests.
#ifndef ARRTOP_TESTS_ORACLES_HPP
#define ARRTOP_TESTS_ORACLES_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>
#include "arrtop/arrtop.hpp"

namespace oracle {

using arrtop::BigInt;
using arrtop::Rational;
using arrtop::RationalVector;

/** Determinant by cofactor expansion along the first row. */
template <typename T>
T cofactorDeterminant(const std::vector<std::vector<T> >& a)
{
    const std::size_t n = a.size();
    if (n == 0)
        return T(1);
    if (n == 1)
        return a[0][0];
    T det(0);
    for (std::size_t j = 0; j < n; ++j)
    {
        if (a[0][j] == 0)
            continue;
        std::vector<std::vector<T> > minor;
        for (std::size_t i = 1; i < n; ++i)
        {
            std::vector<T> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j)
                    row.push_back(a[i][k]);
            minor.push_back(std::move(row));
        }
        T term = a[0][j] * cofactorDeterminant(minor);
        det += (j % 2 == 0) ? term : T(-term);
    }
    return det;
}

inline void combinations(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn)
{
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n)
        return;
    while (true)
    {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

/** All k x k minors of a matrix given as rows. */
template <typename T>
std::vector<T> minors(const std::vector<std::vector<T> >& a, std::size_t cols, std::size_t k)
{
    std::vector<T> out;
    combinations(a.size(), k, [&](const std::vector<std::size_t>& rs) {
        combinations(cols, k, [&](const std::vector<std::size_t>& cs) {
            std::vector<std::vector<T> > sub;
            for (std::size_t r : rs)
            {
                std::vector<T> row;
                for (std::size_t c : cs)
                    row.push_back(a[r][c]);
                sub.push_back(std::move(row));
            }
            out.push_back(cofactorDeterminant(sub));
        });
    });
    return out;
}

/** Rank as the size of the largest nonvanishing minor. */
inline std::size_t rankByMinors(const std::vector<RationalVector>& rows, std::size_t cols)
{
    std::size_t rank = 0;
    for (std::size_t k = 1; k <= std::min(rows.size(), cols); ++k)
    {
        auto ms = minors(rows, cols, k);
        if (std::any_of(ms.begin(), ms.end(), [](const Rational& x) { return x != 0; }))
            rank = k;
        else
            break;
    }
    return rank;
}

/** Invariant factors d_k / d_{k-1} from gcds of k x k minors. */
inline std::vector<BigInt> determinantalInvariantFactors(const arrtop::IntMatrix& m)
{
    std::vector<std::vector<BigInt> > rows(m.rows(), std::vector<BigInt>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            rows[i][j] = m(i, j);
    std::vector<BigInt> factors;
    BigInt previous = 1;
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k)
    {
        BigInt g = 0;
        for (const auto& x : minors(rows, m.cols(), k))
            g = gcd(g, abs(x));
        if (g == 0)
            break;
        factors.push_back(g / previous);
        previous = g;
    }
    return factors;
}

/** Sign vectors of integer grid points in [-radius, radius]^d off every hyperplane. */
inline std::set<std::uint64_t> gridChambers(const arrtop::Arrangement& arr, int radius)
{
    const std::size_t d = arr.dim();
    std::set<std::uint64_t> seen;
    std::vector<int> x(d, -radius);
    while (true)
    {
        std::uint64_t mask = 0;
        bool generic = true;
        for (std::size_t h = 0; h < arr.size() && generic; ++h)
        {
            Rational s = 0;
            for (std::size_t k = 0; k < d; ++k)
                s += arr.normal(h)[k] * x[k];
            if (s == 0)
                generic = false;
            else if (s < 0)
                mask |= std::uint64_t(1) << h;
        }
        if (generic)
            seen.insert(mask);
        std::size_t k = 0;
        while (k < d && x[k] == radius)
            x[k++] = -radius;
        if (k == d)
            break;
        ++x[k];
    }
    return seen;
}

/** Rank over Q by plain Gaussian elimination on rationals. */
inline std::size_t rationalRank(std::vector<RationalVector> rows)
{
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c)
    {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0)
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r)
        {
            if (rows[r][c] == 0)
                continue;
            Rational f = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < cols; ++k)
                rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

/** Boundary of dimension k (rows: (k-1)-faces) over Q built straight from the face lists. */
inline std::size_t boundaryRankQ(const std::vector<arrtop::Simplex>& lower, const std::vector<arrtop::Simplex>& upper)
{
    if (lower.empty() || upper.empty())
        return 0;
    std::vector<RationalVector> rows(lower.size(), RationalVector(upper.size(), Rational(0)));
    for (std::size_t j = 0; j < upper.size(); ++j)
        for (std::size_t drop = 0; drop < upper[j].size(); ++drop)
        {
            arrtop::Simplex face = upper[j];
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
            auto it = std::lower_bound(lower.begin(), lower.end(), face);
            rows[static_cast<std::size_t>(it - lower.begin())][j] = (drop % 2 == 0) ? 1 : -1;
        }
    return rationalRank(std::move(rows));
}

/** Rational Betti numbers b_0..b_max_dim from the complete face lattice. */
inline std::vector<std::size_t> rationalBetti(const arrtop::SimplicialComplex& k, std::size_t max_dim)
{
    std::vector<std::vector<arrtop::Simplex> > faces(max_dim + 2);
    std::set<arrtop::Simplex> all;
    for (const auto& f : k.facets())
    {
        const std::size_t n = f.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask)
        {
            if (static_cast<std::size_t>(std::popcount(mask)) > max_dim + 2)
                continue;
            arrtop::Simplex s;
            for (std::size_t i = 0; i < n; ++i)
                if ((mask >> i) & 1)
                    s.push_back(f[i]);
            all.insert(s);
        }
    }
    for (const auto& s : all)
        faces[s.size() - 1].push_back(s);
    for (auto& layer : faces)
        std::sort(layer.begin(), layer.end());
    std::vector<std::size_t> ranks(max_dim + 3, 0);
    for (std::size_t d = 1; d <= max_dim + 1; ++d)
        ranks[d] = boundaryRankQ(faces[d - 1], faces[d]);
    std::vector<std::size_t> betti;
    for (std::size_t d = 0; d <= max_dim; ++d)
        betti.push_back(faces[d].size() - ranks[d] - ranks[d + 1]);
    return betti;
}

/**
 * Every per-hyperplane family with PAR fixed, assembled by checking every
 * profile directly.  Returns the admissible maps in family-scan order.
 */
inline std::vector<arrtop::ChamberMap> naiveFamilyScan(const arrtop::ChamberSpacePtr& space, std::size_t m)
{
    using namespace arrtop;
    const std::size_t n = space->hyperplaneCount();
    const std::size_t keys = std::size_t(1) << m;
    const std::size_t free_keys = keys - 2;
    const std::uint64_t total = std::uint64_t(1) << (n * free_keys);
    std::vector<ChamberMap> out;
    for (std::uint64_t bits = 0; bits < total; ++bits)
    {
        PerHyperplaneFamily fam{m, 1, std::vector<std::vector<std::uint32_t> >(n, std::vector<std::uint32_t>(keys))};
        for (std::size_t h = 0; h < n; ++h)
        {
            fam.outputs[h][0] = 0;
            fam.outputs[h][keys - 1] = 1;
            for (std::size_t k = 1; k + 1 < keys; ++k)
                fam.outputs[h][k] = static_cast<std::uint32_t>((bits >> (h * free_keys + (k - 1))) & 1);
        }
        if (auto f = assembleFamily(space, fam))
            out.push_back(std::move(*f));
    }
    return out;
}

/** IIA straight from the definition: agreement on H in the input forces agreement on H in the output. */
inline bool directIIA(const arrtop::ChamberMap& f)
{
    const auto& space = *f.space();
    const std::size_t n = space.hyperplaneCount();
    const std::size_t m = f.inputArity();
    const std::size_t count = f.profileCount();
    for (std::size_t a = 0; a < count; ++a)
    {
        const auto pa = arrtop::decodeProfile(space, m, a);
        for (std::size_t b = a + 1; b < count; ++b)
        {
            const auto pb = arrtop::decodeProfile(space, m, b);
            for (std::size_t h = 0; h < n; ++h)
            {
                bool agree = true;
                for (std::size_t j = 0; j < m && agree; ++j)
                    agree = space.sign(pa[j], h) == space.sign(pb[j], h);
                if (!agree)
                    continue;
                for (std::size_t j = 0; j < f.outputArity(); ++j)
                    if (space.sign(f.at(a)[j], h) != space.sign(f.at(b)[j], h))
                        return false;
            }
        }
    }
    return true;
}

/** Random arrangement with small integer normals; retries until the rows are valid. */
inline arrtop::Arrangement randomArrangement(std::mt19937& rng, std::size_t dim, std::size_t n, int range = 2)
{
    std::uniform_int_distribution<int> entry(-range, range);
    for (int attempt = 0; attempt < 10000; ++attempt)
    {
        std::vector<RationalVector> rows(n, RationalVector(dim));
        for (auto& r : rows)
            for (auto& x : r)
                x = entry(rng);
        try
        {
            return arrtop::normalizeArrangement(dim, rows);
        }
        catch (const arrtop::Error&)
        {
        }
    }
    throw arrtop::PreconditionError("no valid random arrangement with these parameters");
}

inline arrtop::IntMatrix randomIntMatrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int range)
{
    std::uniform_int_distribution<int> entry(-range, range);
    arrtop::IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = entry(rng);
    return m;
}

}   // namespace oracle

#endif
