/**
 * Integral simplicial homology: chain complexes, Betti numbers and torsion,
 * explicit homology bases, induced maps and degrees.
 *
 * Betti numbers are computed on a reduced chain complex.  One vertex per
 * connected component is removed and then coreduction pairs (a cell whose
 * only remaining face has coefficient +-1, together with that face) are
 * cancelled.  The remaining boundary matrices go through sparse
 * elimination on unit pivots and a dense Smith form for what is left.
 */

#ifndef ARRTOP_HOMOLOGY_HPP
#define ARRTOP_HOMOLOGY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <numeric>
#include <span>
#include <vector>
#include "budget.hpp"
#include "complex.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "smith.hpp"

namespace arrtop {

/**
 * Simplices of dimension 0..top_dim of a complex.  Layer k is a flat array
 * of (k+1)-tuples, sorted lexicographically; the position of a tuple is
 * its basis index in C_k.
 */
class ChainComplex
{
    private:
        std::vector<std::vector<std::uint32_t> > cells_;

    public:
        static constexpr std::size_t npos = static_cast<std::size_t>(-1);

        ChainComplex() = default;
        explicit ChainComplex(std::vector<std::vector<std::uint32_t> > cells) : cells_(std::move(cells)) {}

        std::size_t topDim() const { return cells_.empty() ? 0 : cells_.size() - 1; }
        std::size_t layers() const { return cells_.size(); }
        std::size_t count(std::size_t k) const { return k < cells_.size() ? cells_[k].size() / (k + 1) : 0; }
        std::size_t totalCells() const
        {
            std::size_t t = 0;
            for (std::size_t k = 0; k < cells_.size(); ++k)
                t += count(k);
            return t;
        }

        std::span<const std::uint32_t> simplex(std::size_t k, std::size_t i) const
        {
            return std::span<const std::uint32_t>(cells_[k]).subspan(i * (k + 1), k + 1);
        }

        /** Basis index of a sorted vertex tuple, or npos. */
        std::size_t indexOf(std::size_t k, std::span<const std::uint32_t> s) const
        {
            if (k >= cells_.size() || s.size() != k + 1)
                return npos;
            std::size_t lo = 0, hi = count(k);
            while (lo < hi)
            {
                std::size_t mid = (lo + hi) / 2;
                auto t = simplex(k, mid);
                if (std::lexicographical_compare(t.begin(), t.end(), s.begin(), s.end()))
                    lo = mid + 1;
                else
                    hi = mid;
            }
            if (lo < count(k) && std::equal(s.begin(), s.end(), simplex(k, lo).begin()))
                return lo;
            return npos;
        }

        /** Boundary C_k -> C_{k-1}; column j is the alternating sum of the faces of simplex j. */
        SparseMatrix<std::int64_t> boundary(std::size_t k) const
        {
            if (k == 0 || k >= cells_.size())
                return SparseMatrix<std::int64_t>(k == 0 ? 0 : count(k - 1), count(k));
            SparseMatrix<std::int64_t> d(count(k - 1), count(k));
            std::vector<std::uint32_t> face(k);
            for (std::size_t j = 0; j < count(k); ++j)
            {
                auto s = simplex(k, j);
                auto& col = d.columns[j];
                for (std::size_t drop = 0; drop <= k; ++drop)
                {
                    std::size_t w = 0;
                    for (std::size_t i = 0; i <= k; ++i)
                        if (i != drop)
                            face[w++] = s[i];
                    std::size_t row = indexOf(k - 1, face);
                    col.emplace_back(static_cast<std::uint32_t>(row), (drop % 2) ? -1 : 1);
                }
                std::sort(col.begin(), col.end());
            }
            return d;
        }

        long eulerCharacteristic() const
        {
            long chi = 0;
            for (std::size_t k = 0; k < cells_.size(); ++k)
                chi += (k % 2 ? -1L : 1L) * static_cast<long>(count(k));
            return chi;
        }
};

/**
 * Chain complex of the simplices of K up to dimension top_dim.
 *
 * @throws BudgetExceeded if the number of simplices exceeds limit.
 */
inline ChainComplex chainComplex(const SimplicialComplex& complex, std::size_t top_dim,
                                 std::uint64_t limit = kDefaultSimplexBudget)
{
    Budget budget(limit, "simplices");
    std::vector<std::vector<std::uint32_t> > cells(top_dim + 1);
    for (std::size_t k = 0; k <= top_dim; ++k)
    {
        const std::size_t w = k + 1;
        std::vector<std::uint32_t> raw;
        std::vector<std::size_t> pos(w);
        for (const auto& f : complex.facets())
        {
            if (f.size() < w)
                continue;
            std::iota(pos.begin(), pos.end(), 0);
            for (;;)
            {
                for (std::size_t i = 0; i < w; ++i)
                    raw.push_back(f[pos[i]]);
                std::size_t i = w;
                while (i-- > 0 && pos[i] == f.size() - w + i) {}
                if (i == std::size_t(-1))
                    break;
                ++pos[i];
                for (std::size_t j = i + 1; j < w; ++j)
                    pos[j] = pos[j - 1] + 1;
            }
            if (raw.size() / w > 64 * limit)
                throw BudgetExceeded("simplex census", raw.size() / w, limit);
        }
        const std::size_t n = raw.size() / w;
        std::vector<std::uint32_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        auto less = [&](std::uint32_t a, std::uint32_t b) {
            return std::lexicographical_compare(raw.begin() + a * w, raw.begin() + (a + 1) * w,
                                                raw.begin() + b * w, raw.begin() + (b + 1) * w);
        };
        std::sort(order.begin(), order.end(), less);
        std::vector<std::uint32_t> layer;
        for (std::size_t idx = 0; idx < n; ++idx)
        {
            const std::uint32_t a = order[idx];
            if (idx > 0 && !less(order[idx - 1], a))
                continue;   // duplicate of the previous tuple
            layer.insert(layer.end(), raw.begin() + a * w, raw.begin() + (a + 1) * w);
        }
        budget.charge(layer.size() / w);
        cells[k] = std::move(layer);
    }
    return ChainComplex(std::move(cells));
}

/** Exact check that every composite boundary d_{k-1} d_k vanishes. */
inline bool boundarySquaredZero(const ChainComplex& cc)
{
    for (std::size_t k = 2; k < cc.layers(); ++k)
    {
        const auto outer = cc.boundary(k - 1);
        const auto inner = cc.boundary(k);
        std::vector<std::int64_t> acc(outer.rows, 0);
        for (const auto& col : inner.columns)
        {
            std::vector<std::uint32_t> touched;
            for (const auto& [mid, a] : col)
                for (const auto& [row, b] : outer.columns[mid])
                {
                    acc[row] += a * b;
                    touched.push_back(row);
                }
            for (std::uint32_t r : touched)
            {
                if (acc[r] != 0)
                    return false;
            }
        }
    }
    return true;
}

/* ------------------------------------------------------------------ */
/*                        Betti numbers and torsion                     */
/* ------------------------------------------------------------------ */

/** Dense Smith form is used directly when both sides are at most this size. */
inline constexpr std::size_t kDenseThreshold = 500;

namespace detail {

template <typename T>
std::vector<BigInt> invariantFactorsIn(const SparseMatrix<T>& m)
{
    std::vector<BigInt> out;
    if (m.rows <= kDenseThreshold && m.cols <= kDenseThreshold)
    {
        for (const auto& d : smithNormalFormIn(m.toDense()).diagonal)
            out.push_back(toBig(d));
        return out;
    }
    auto elim = eliminateUnitPivots(m);
    out.assign(elim.unit_pivots, BigInt(1));
    for (const auto& d : smithNormalFormIn(std::move(elim.residual)).diagonal)
        out.push_back(toBig(d));
    return out;
}

}   // namespace detail

/** Nonzero invariant factors of an integer matrix, in divisibility order. */
inline std::vector<BigInt> invariantFactors(const SparseMatrix<std::int64_t>& m)
{
    try
    {
        return detail::invariantFactorsIn(m);
    }
    catch (const ArithmeticOverflow&)
    {
        auto big = detail::invariantFactorsIn(m.convert<BigInt>());
        std::sort(big.begin(), big.end());
        return big;
    }
}

struct HomologyGroup
{
    std::size_t dim = 0;
    std::size_t betti = 0;
    std::vector<BigInt> torsion;    // invariant factors >= 2

    bool operator==(const HomologyGroup&) const = default;
};

struct HomologyOptions
{
    bool reduced = false;
    bool coreduce = true;
    std::uint64_t simplex_limit = kDefaultSimplexBudget;
};

namespace detail {

/** Cells surviving coreduction, per dimension, and the component count. */
struct Coreduced
{
    std::vector<std::vector<std::uint32_t> > active;   // indices into each layer
    std::size_t components = 0;
};

inline Coreduced coreduce(const ChainComplex& cc, const std::vector<SparseMatrix<std::int64_t> >& bd)
{
    const std::size_t layers = cc.layers();
    std::vector<std::size_t> offset(layers + 1, 0);
    for (std::size_t k = 0; k < layers; ++k)
        offset[k + 1] = offset[k] + cc.count(k);
    const std::size_t total = offset[layers];

    // coface lists in CSR form
    std::vector<std::uint32_t> co_start(total + 1, 0), co_list;
    for (std::size_t k = 1; k < layers; ++k)
        for (const auto& col : bd[k].columns)
            for (const auto& e : col)
                ++co_start[offset[k - 1] + e.first + 1];
    for (std::size_t i = 0; i < total; ++i)
        co_start[i + 1] += co_start[i];
    co_list.resize(co_start[total]);
    {
        std::vector<std::uint32_t> fill(co_start.begin(), co_start.end() - 1);
        for (std::size_t k = 1; k < layers; ++k)
            for (std::size_t j = 0; j < bd[k].cols; ++j)
                for (const auto& e : bd[k].columns[j])
                    co_list[fill[offset[k - 1] + e.first]++] = static_cast<std::uint32_t>(offset[k] + j);
    }

    std::vector<char> alive(total, 1);
    std::vector<std::uint32_t> live_faces(total, 0);
    std::vector<std::uint32_t> dim_of(total, 0);
    for (std::size_t k = 0; k < layers; ++k)
        for (std::size_t i = offset[k]; i < offset[k + 1]; ++i)
        {
            dim_of[i] = static_cast<std::uint32_t>(k);
            live_faces[i] = k == 0 ? 0 : static_cast<std::uint32_t>(k + 1);
        }

    std::deque<std::uint32_t> queue;
    auto kill = [&](std::uint32_t cell) {
        alive[cell] = 0;
        for (std::uint32_t c = co_start[cell]; c < co_start[cell + 1]; ++c)
        {
            std::uint32_t up = co_list[c];
            if (alive[up])
            {
                --live_faces[up];
                queue.push_back(up);
            }
        }
    };

    // one base vertex per connected component
    Coreduced out;
    std::vector<std::uint32_t> parent(cc.count(0));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    if (layers > 1)
        for (const auto& col : bd[1].columns)
        {
            std::uint32_t a = find(col[0].first), b = find(col[1].first);
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }
    for (std::uint32_t v = 0; v < cc.count(0); ++v)
        if (find(v) == v)
        {
            ++out.components;
            kill(v);
        }

    while (!queue.empty())
    {
        std::uint32_t b = queue.front();
        queue.pop_front();
        if (!alive[b] || live_faces[b] != 1)
            continue;
        const std::size_t k = dim_of[b];
        std::uint32_t a = 0;
        bool found = false;
        for (const auto& e : bd[k].columns[b - offset[k]])
        {
            std::uint32_t cell = static_cast<std::uint32_t>(offset[k - 1] + e.first);
            if (alive[cell])
            {
                a = cell;
                found = true;
                break;
            }
        }
        if (!found)
            continue;
        kill(a);
        kill(b);
    }

    out.active.resize(layers);
    for (std::size_t k = 0; k < layers; ++k)
        for (std::size_t i = offset[k]; i < offset[k + 1]; ++i)
            if (alive[i])
                out.active[k].push_back(static_cast<std::uint32_t>(i - offset[k]));
    return out;
}

/** Restrict a boundary matrix to the given active rows and columns. */
inline SparseMatrix<std::int64_t> restrictBoundary(const SparseMatrix<std::int64_t>& d,
                                                   const std::vector<std::uint32_t>& rows,
                                                   const std::vector<std::uint32_t>& cols)
{
    std::vector<std::int64_t> row_map(d.rows, -1);
    for (std::size_t i = 0; i < rows.size(); ++i)
        row_map[rows[i]] = static_cast<std::int64_t>(i);
    SparseMatrix<std::int64_t> out(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [r, v] : d.columns[cols[j]])
            if (row_map[r] >= 0)
                out.columns[j].emplace_back(static_cast<std::uint32_t>(row_map[r]), v);
    return out;
}

}   // namespace detail

/**
 * Homology groups H_0..H_max_dim of a chain complex whose top layer is at
 * least max_dim + 1 (a complex truncated above max_dim + 1 has the right
 * homology up to max_dim).
 */
inline std::vector<HomologyGroup> homologyFromChains(const ChainComplex& cc, std::size_t max_dim,
                                                     const HomologyOptions& opts = {})
{
    const std::size_t layers = cc.layers();
    std::vector<SparseMatrix<std::int64_t> > bd(layers);
    for (std::size_t k = 1; k < layers; ++k)
        bd[k] = cc.boundary(k);

    detail::Coreduced cr;
    if (opts.coreduce && cc.count(0) > 0)
    {
        cr = detail::coreduce(cc, bd);
    }
    else
    {
        cr.active.resize(layers);
        for (std::size_t k = 0; k < layers; ++k)
        {
            cr.active[k].resize(cc.count(k));
            std::iota(cr.active[k].begin(), cr.active[k].end(), 0);
        }
    }

    // invariant factors of d_k for k = 1..max_dim+1
    std::vector<std::vector<BigInt> > factors(max_dim + 2);
    for (std::size_t k = 1; k <= max_dim + 1 && k < layers; ++k)
        factors[k] = invariantFactors(detail::restrictBoundary(bd[k], cr.active[k - 1], cr.active[k]));

    std::vector<HomologyGroup> groups;
    for (std::size_t k = 0; k <= max_dim; ++k)
    {
        HomologyGroup g;
        g.dim = k;
        const std::size_t cells = k < layers ? cr.active[k].size() : 0;
        const std::size_t rank_out = factors[k].size();
        const std::size_t rank_in = factors[k + 1].size();
        g.betti = cells - rank_out - rank_in;
        if (k == 0)
        {
            if (opts.coreduce && cc.count(0) > 0)
                g.betti += cr.components;
            if (opts.reduced && g.betti > 0)
                --g.betti;
        }
        for (const auto& d : factors[k + 1])
            if (d > 1)
                g.torsion.push_back(d);
        groups.push_back(std::move(g));
    }
    return groups;
}

/**
 * H_0..H_max_dim of K with integer coefficients (unreduced unless asked).
 * Degrees above the dimension of K report zero groups.
 */
inline std::vector<HomologyGroup> homologyGroups(const SimplicialComplex& k, std::size_t max_dim,
                                                 const HomologyOptions& opts = {})
{
    const ChainComplex cc = chainComplex(k, max_dim + 1, opts.simplex_limit);
    return homologyFromChains(cc, max_dim, opts);
}

inline std::vector<std::size_t> bettiNumbers(const std::vector<HomologyGroup>& groups)
{
    std::vector<std::size_t> b;
    for (const auto& g : groups)
        b.push_back(g.betti);
    return b;
}

/* ------------------------------------------------------------------ */
/*                      Explicit bases and induced maps                 */
/* ------------------------------------------------------------------ */

/**
 * A basis of the free part of H_k.  Cycles are written in cycle
 * coordinates z = chain_to_cycle * c; homology coordinates are
 * cycle_to_free * z.  generators holds one representing cycle per column.
 * Everything is determined by the lexicographic simplex order and the
 * deterministic Smith reduction.
 */
struct HomologyBasis
{
    std::size_t degree = 0;
    std::shared_ptr<const ChainComplex> chains;
    std::size_t betti = 0;
    std::vector<BigInt> torsion;
    IntMatrix chain_to_cycle;   // z x |C_k|
    IntMatrix cycle_to_free;    // betti x z
    IntMatrix generators;       // |C_k| x betti

    /** Free-part coordinates of a k-cycle given on the simplex basis. */
    std::vector<BigInt> coordinates(const std::vector<BigInt>& cycle) const
    {
        if (cycle.size() != chain_to_cycle.cols())
            throw ShapeMismatch("chain has the wrong length");
        IntMatrix c(cycle.size(), 1, cycle);
        IntMatrix h = cycle_to_free * (chain_to_cycle * c);
        return std::vector<BigInt>(h.data().begin(), h.data().end());
    }
};

inline HomologyBasis homologyBasis(const SimplicialComplex& k, std::size_t degree,
                                   std::uint64_t limit = kDefaultSimplexBudget)
{
    HomologyBasis basis;
    basis.degree = degree;
    basis.chains = std::make_shared<const ChainComplex>(chainComplex(k, degree + 1, limit));
    const ChainComplex& cc = *basis.chains;
    const std::size_t ck = cc.count(degree);

    // kernel of d_k from the column transform of its Smith form
    IntMatrix dk = toBigMatrix(cc.boundary(degree).toDense());
    SmithOptions col_only;
    col_only.col_transform = true;
    const auto sk = smithNormalForm(dk, col_only);
    const std::size_t r = sk.rank();
    basis.chain_to_cycle = sk.Vinv->rowRange(r, ck);
    const IntMatrix zbasis = sk.V->colRange(r, ck);

    // boundaries in cycle coordinates, then their Smith form
    IntMatrix bz = basis.chain_to_cycle * toBigMatrix(cc.boundary(degree + 1).toDense());
    SmithOptions row_only;
    row_only.row_transform = true;
    const auto sb = smithNormalForm(bz, row_only);
    const std::size_t rb = sb.rank();
    const std::size_t z = ck - r;
    for (const auto& d : sb.diagonal)
        if (d > 1)
            basis.torsion.push_back(d);
    basis.betti = z - rb;
    basis.cycle_to_free = sb.U->rowRange(rb, z);
    basis.generators = zbasis * sb.Uinv->colRange(rb, z);
    return basis;
}

struct HomologyMap
{
    std::size_t degree = 0;
    IntMatrix matrix;   // target betti x source betti

    bool operator==(const HomologyMap&) const = default;
};

namespace detail {

/** Image of a k-chain under the chain map of f; degenerate simplices vanish. */
inline std::vector<BigInt> pushChain(const SimplicialMap& f, const ChainComplex& src, const ChainComplex& tgt,
                                     std::size_t k, const std::vector<BigInt>& chain)
{
    std::vector<BigInt> out(tgt.count(k));
    std::vector<std::uint32_t> img(k + 1);
    for (std::size_t i = 0; i < chain.size(); ++i)
    {
        if (chain[i].is_zero())
            continue;
        auto s = src.simplex(k, i);
        for (std::size_t j = 0; j <= k; ++j)
            img[j] = f(s[j]);
        // insertion sort counting transpositions
        int sign = 1;
        bool degenerate = false;
        for (std::size_t a = 1; a <= k; ++a)
            for (std::size_t b = a; b > 0 && img[b - 1] >= img[b]; --b)
            {
                if (img[b - 1] == img[b])
                {
                    degenerate = true;
                    break;
                }
                std::swap(img[b - 1], img[b]);
                sign = -sign;
            }
        if (degenerate)
            continue;
        std::size_t t = tgt.indexOf(k, img);
        if (t == ChainComplex::npos)
            throw NotSimplicial("image of a simplex is missing from the target");
        if (sign > 0)
            out[t] += chain[i];
        else
            out[t] -= chain[i];
    }
    return out;
}

}   // namespace detail

/** Matrix of f_* : H_k(source) -> H_k(target) in the given bases. */
inline HomologyMap inducedHomologyMap(const SimplicialMap& f, const HomologyBasis& source, const HomologyBasis& target)
{
    if (source.degree != target.degree)
        throw ShapeMismatch("homology bases of different degrees");
    const std::size_t k = source.degree;
    HomologyMap h;
    h.degree = k;
    h.matrix = IntMatrix(target.betti, source.betti);
    for (std::size_t g = 0; g < source.betti; ++g)
    {
        std::vector<BigInt> chain(source.generators.rows());
        for (std::size_t i = 0; i < chain.size(); ++i)
            chain[i] = source.generators(i, g);
        auto image = detail::pushChain(f, *source.chains, *target.chains, k, chain);
        auto coords = target.coordinates(image);
        for (std::size_t i = 0; i < coords.size(); ++i)
            h.matrix(i, g) = coords[i];
    }
    return h;
}

inline HomologyMap inducedHomologyMap(const SimplicialMap& f, std::size_t k,
                                      std::uint64_t limit = kDefaultSimplexBudget)
{
    const HomologyBasis src = homologyBasis(*f.source(), k, limit);
    if (f.source() == f.target())
        return inducedHomologyMap(f, src, src);
    return inducedHomologyMap(f, src, homologyBasis(*f.target(), k, limit));
}

/**
 * The integer by which f_* multiplies the generator of H_k, for complexes
 * whose H_k has rank one.
 *
 * @throws NotSphereLike if either side has betti_k != 1.
 */
inline BigInt degreeOfMap(const SimplicialMap& f, std::size_t k, std::uint64_t limit = kDefaultSimplexBudget)
{
    const HomologyBasis src = homologyBasis(*f.source(), k, limit);
    const HomologyBasis tgt = f.source() == f.target() ? src : homologyBasis(*f.target(), k, limit);
    if (src.betti != 1 || tgt.betti != 1)
        throw NotSphereLike("degree needs H_" + std::to_string(k) + " of rank one on both sides (got " +
                            std::to_string(src.betti) + " and " + std::to_string(tgt.betti) + ")");
    return inducedHomologyMap(f, src, tgt).matrix(0, 0);
}

}   // namespace arrtop

#endif
