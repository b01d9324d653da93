/**
 * Central hyperplane arrangements with exact rational normals: construction,
 * rank, circuits, the circuit graph and the decomposition into
 * indecomposable parts.
 */

#ifndef ARRTOP_ARRANGEMENT_HPP
#define ARRTOP_ARRANGEMENT_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>
#include "errors.hpp"
#include "rational.hpp"

namespace arrtop {

using IndexSet = std::vector<std::size_t>;

/** A linear hyperplane ker(normal), stored in canonical primitive form. */
struct Hyperplane
{
    RationalVector normal;

    bool operator==(const Hyperplane&) const = default;
};

class Arrangement
{
    private:
        std::size_t dim_;
        std::vector<Hyperplane> hyperplanes_;

        Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes)
            : dim_(dim), hyperplanes_(std::move(hyperplanes)) {}

        friend Arrangement normalizeArrangement(std::size_t, const std::vector<RationalVector>&);

    public:
        std::size_t dim() const { return dim_; }
        std::size_t size() const { return hyperplanes_.size(); }
        const Hyperplane& hyperplane(std::size_t i) const { return hyperplanes_.at(i); }
        const RationalVector& normal(std::size_t i) const { return hyperplanes_.at(i).normal; }
        const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }

        bool operator==(const Arrangement&) const = default;
};

/**
 * Build an arrangement from raw normal vectors.
 *
 * Each normal is rescaled to coprime integers with a positive leading
 * entry; input order is preserved.
 *
 * @param dim Ambient dimension.
 * @param raw_normals One vector per hyperplane, each of length dim.
 * @returns The normalized arrangement.
 * @throws DimensionMismatch, ZeroNormal, DuplicateHyperplane, EmptyInput
 */
inline Arrangement normalizeArrangement(std::size_t dim, const std::vector<RationalVector>& raw_normals)
{
    if (dim == 0)
        throw DimensionMismatch("ambient dimension must be positive");
    if (raw_normals.empty())
        throw EmptyInput("an arrangement needs at least one hyperplane");
    std::vector<Hyperplane> hyperplanes;
    hyperplanes.reserve(raw_normals.size());
    for (std::size_t i = 0; i < raw_normals.size(); ++i)
    {
        if (raw_normals[i].size() != dim)
            throw DimensionMismatch("normal " + std::to_string(i) + " has length " +
                                    std::to_string(raw_normals[i].size()) + ", expected " +
                                    std::to_string(dim));
        if (isZeroVector(raw_normals[i]))
            throw ZeroNormal(i);
        Hyperplane h{canonicalDirection(raw_normals[i])};
        for (std::size_t j = 0; j < hyperplanes.size(); ++j)
            if (hyperplanes[j] == h)
                throw DuplicateHyperplane(j, i);
        hyperplanes.push_back(std::move(h));
    }
    return Arrangement(dim, std::move(hyperplanes));
}

/** The braid arrangement { ker(x_i - x_j) : i < j } in R^n, pairs in lexicographic order. */
inline Arrangement braidArrangement(std::size_t n)
{
    if (n < 2)
        throw PreconditionError("braid arrangement needs n >= 2");
    std::vector<RationalVector> normals;
    for (std::size_t i = 0; i < n; ++i)
    {
        for (std::size_t j = i + 1; j < n; ++j)
        {
            RationalVector v(n, Rational(0));
            v[i] = 1;
            v[j] = -1;
            normals.push_back(std::move(v));
        }
    }
    return normalizeArrangement(n, normals);
}

/** The Boolean arrangement { ker(x_i) } in R^n. */
inline Arrangement booleanArrangement(std::size_t n)
{
    if (n < 1)
        throw PreconditionError("Boolean arrangement needs n >= 1");
    std::vector<RationalVector> normals;
    for (std::size_t i = 0; i < n; ++i)
    {
        RationalVector v(n, Rational(0));
        v[i] = 1;
        normals.push_back(std::move(v));
    }
    return normalizeArrangement(n, normals);
}

/**
 * Rank of the normals indexed by subset (the codimension of the
 * intersection of those hyperplanes).
 */
inline std::size_t rankOf(const Arrangement& arr, const IndexSet& subset)
{
    std::vector<RationalVector> rows;
    rows.reserve(subset.size());
    for (std::size_t i : subset)
    {
        if (i >= arr.size())
            throw IndexOutOfRange("hyperplane index " + std::to_string(i) + " out of range");
        rows.push_back(arr.normal(i));
    }
    return rankOf(std::move(rows));
}

inline std::size_t rankOf(const Arrangement& arr)
{
    IndexSet all(arr.size());
    std::iota(all.begin(), all.end(), 0);
    return rankOf(arr, all);
}

namespace detail {

inline IndexSet maskToSet(std::uint64_t mask)
{
    IndexSet out;
    for (std::size_t i = 0; mask; ++i, mask >>= 1)
        if (mask & 1)
            out.push_back(i);
    return out;
}

}   // namespace detail

/**
 * All circuits: inclusion-minimal subsets whose normals are linearly
 * dependent.  Each circuit is sorted; the list is sorted lexicographically.
 */
inline std::vector<IndexSet> circuitsOf(const Arrangement& arr)
{
    const std::size_t n = arr.size();
    if (n > 24)
        throw PreconditionError("circuit enumeration supports at most 24 hyperplanes");
    const std::size_t total_rank = rankOf(arr);

    // rank of every subset up to size total_rank + 1, filled lazily
    std::vector<int> rank_memo(std::size_t(1) << n, -1);
    auto subset_rank = [&](std::uint64_t mask) {
        int& slot = rank_memo[mask];
        if (slot < 0)
            slot = static_cast<int>(rankOf(arr, detail::maskToSet(mask)));
        return static_cast<std::size_t>(slot);
    };

    std::vector<IndexSet> circuits;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask)
    {
        const std::size_t size = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (size > total_rank + 1)
            continue;
        if (subset_rank(mask) + 1 != size)
            continue;
        bool minimal = true;
        for (std::uint64_t rest = mask; rest && minimal; rest &= rest - 1)
        {
            std::uint64_t without = mask & ~(rest & -rest);
            if (subset_rank(without) != size - 1)
                minimal = false;
        }
        if (minimal)
            circuits.push_back(detail::maskToSet(mask));
    }
    std::sort(circuits.begin(), circuits.end());
    return circuits;
}

/** Undirected graph on hyperplane indices; adjacency lists are sorted. */
struct GammaGraph
{
    std::vector<IndexSet> adjacency;

    bool hasEdge(std::size_t i, std::size_t j) const
    {
        return std::binary_search(adjacency.at(i).begin(), adjacency.at(i).end(), j);
    }
    std::size_t edgeCount() const
    {
        std::size_t e = 0;
        for (const auto& a : adjacency)
            e += a.size();
        return e / 2;
    }
};

/** Circuit graph: i ~ j iff some circuit contains both. */
inline GammaGraph gammaGraph(const Arrangement& arr)
{
    GammaGraph g{std::vector<IndexSet>(arr.size())};
    for (const auto& c : circuitsOf(arr))
    {
        for (std::size_t a = 0; a < c.size(); ++a)
        {
            for (std::size_t b = 0; b < c.size(); ++b)
                if (a != b)
                    g.adjacency[c[a]].push_back(c[b]);
        }
    }
    for (auto& adj : g.adjacency)
    {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
    return g;
}

struct DecompositionReport
{
    std::vector<IndexSet> parts;
    std::vector<std::size_t> part_ranks;

    bool indecomposable() const { return parts.size() == 1; }
};

/**
 * Split the arrangement into its indecomposable parts, i.e. the connected
 * components of the circuit graph, ordered by smallest member.
 */
inline DecompositionReport decompose(const Arrangement& arr)
{
    const GammaGraph g = gammaGraph(arr);
    const std::size_t n = arr.size();
    std::vector<std::size_t> component(n, n);
    DecompositionReport report;
    for (std::size_t start = 0; start < n; ++start)
    {
        if (component[start] != n)
            continue;
        const std::size_t id = report.parts.size();
        IndexSet part;
        std::vector<std::size_t> stack{start};
        component[start] = id;
        while (!stack.empty())
        {
            std::size_t v = stack.back();
            stack.pop_back();
            part.push_back(v);
            for (std::size_t w : g.adjacency[v])
            {
                if (component[w] == n)
                {
                    component[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(part.begin(), part.end());
        report.part_ranks.push_back(rankOf(arr, part));
        report.parts.push_back(std::move(part));
    }
    return report;
}

/**
 * Hyperplanes H that split off as A = (A - {H}) (+) {H}, i.e. removing H
 * drops the rank by one.
 */
inline IndexSet separableHyperplanes(const Arrangement& arr)
{
    const std::size_t r = rankOf(arr);
    IndexSet out;
    for (std::size_t h = 0; h < arr.size(); ++h)
    {
        IndexSet rest;
        for (std::size_t i = 0; i < arr.size(); ++i)
            if (i != h)
                rest.push_back(i);
        if (rankOf(arr, rest) + 1 == r)
            out.push_back(h);
    }
    return out;
}

}   // namespace arrtop

#endif
