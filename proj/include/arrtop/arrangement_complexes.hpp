/**
 * The complexes attached to an arrangement and a number of voters m:
 *
 *   M_m(A): vertices are profiles in Ch^m; a set of profiles is a simplex
 *           iff some hyperplane does not separate it.
 *   B_m(A): nerve of the covering of the profile space by products of
 *           closed half-spaces, one hyperplane at a time; vertices are
 *           pairs (h, s) with s in {+,-}^m.
 *
 * plus the simplicial maps induced by IIA maps on M and by the index maps
 * rho'' and Delta'' on B.
 */

#ifndef ARRTOP_ARRANGEMENT_COMPLEXES_HPP
#define ARRTOP_ARRANGEMENT_COMPLEXES_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>
#include "budget.hpp"
#include "chambers.hpp"
#include "complex.hpp"
#include "errors.hpp"
#include "social_choice.hpp"

namespace arrtop {

/** A vertex of M_m: one sign vector per voter. */
using MVertex = std::vector<SignVector>;

/** A vertex of B_m: hyperplane index and a sign per voter ('+'/'-'). */
struct BVertex
{
    std::size_t hyperplane = 0;
    std::string signs;

    auto operator<=>(const BVertex&) const = default;
    bool operator==(const BVertex&) const = default;
};

using MComplex = LabeledComplex<MVertex>;
using BComplex = LabeledComplex<BVertex>;
using MComplexPtr = std::shared_ptr<const MComplex>;
using BComplexPtr = std::shared_ptr<const BComplex>;

inline std::string toString(const MVertex& v)
{
    std::string s = "(";
    for (std::size_t j = 0; j < v.size(); ++j)
        s += (j ? "," : "") + v[j].toString();
    return s + ")";
}

inline std::string toString(const BVertex& v)
{
    return "H" + std::to_string(v.hyperplane) + ":" + v.signs;
}

/**
 * Whether hyperplane h separates a set of profiles, i.e. their sign tuples
 * on h take at least two values.
 */
inline bool separates(const ChamberSpace& space, std::size_t h, const std::vector<Profile>& profiles)
{
    if (h >= space.hyperplaneCount())
        throw IndexOutOfRange("hyperplane index " + std::to_string(h) + " out of range");
    if (profiles.empty())
        throw EmptyInput("separation needs at least one profile");
    const std::size_t m = profiles.front().size();
    for (const auto& p : profiles)
    {
        if (p.size() != m)
            throw ShapeMismatch("profiles must have uniform length");
        for (std::size_t c : p)
            if (c >= space.chamberCount())
                throw IndexOutOfRange("chamber index out of range");
    }
    const std::uint32_t first = hyperplaneKey(space, profiles.front(), h);
    for (const auto& p : profiles)
        if (hyperplaneKey(space, p, h) != first)
            return true;
    return false;
}

/**
 * M_m(A).  Vertex number i is the profile with encodeProfile index i.
 * Maximal simplices are the sets of profiles sharing the sign tuple s on a
 * hyperplane h, for every (h, s).
 */
inline MComplex buildM(const ChamberSpacePtr& space, std::size_t m, std::uint64_t limit = kDefaultSimplexBudget)
{
    if (m == 0)
        throw PreconditionError("m must be at least 1");
    Budget budget(limit, "M complex facet entries");
    const std::size_t n = space->hyperplaneCount();
    const std::size_t count = profileCount(*space, m);
    budget.require(static_cast<std::uint64_t>(count) * n);
    if (m > 20)
        throw BudgetExceeded("sign tuples", std::uint64_t(1) << 20, limit);

    std::vector<MVertex> labels;
    labels.reserve(count);
    std::vector<Simplex> groups(n << m);
    for (std::size_t p = 0; p < count; ++p)
    {
        Profile profile = decodeProfile(*space, m, p);
        MVertex label;
        for (std::size_t c : profile)
            label.push_back(space->chamber(c).signs);
        labels.push_back(std::move(label));
        for (std::size_t h = 0; h < n; ++h)
            groups[(h << m) | hyperplaneKey(*space, profile, h)].push_back(static_cast<std::uint32_t>(p));
    }
    std::vector<Simplex> facets;
    for (auto& g : groups)
        if (!g.empty())
            facets.push_back(std::move(g));
    return MComplex(std::move(labels), std::move(facets));
}

namespace detail {

inline std::string signTuple(std::uint32_t key, std::size_t m)
{
    return keyToString(key, m);
}

inline std::vector<BVertex> bVertices(std::size_t n, std::size_t m)
{
    std::vector<BVertex> out;
    for (std::size_t h = 0; h < n; ++h)
    {
        std::vector<std::string> tuples;
        for (std::uint32_t key = 0; key < (std::uint32_t(1) << m); ++key)
            tuples.push_back(signTuple(key, m));
        std::sort(tuples.begin(), tuples.end());
        for (auto& t : tuples)
            out.push_back({h, std::move(t)});
    }
    return out;
}

}   // namespace detail

/**
 * B_m(A) built from its known maximal simplices: one per profile p, made
 * of the vertices (h, p's sign tuple on h).  Vertices are ordered by
 * hyperplane, then sign tuple with + before -.
 */
inline BComplex buildB(const ChamberSpacePtr& space, std::size_t m, std::uint64_t limit = kDefaultSimplexBudget)
{
    if (m == 0)
        throw PreconditionError("m must be at least 1");
    if (m > 20)
        throw BudgetExceeded("sign tuples", std::uint64_t(1) << 20, limit);
    const std::size_t n = space->hyperplaneCount();
    const std::size_t count = profileCount(*space, m);
    Budget budget(limit, "B complex facet entries");
    budget.require(static_cast<std::uint64_t>(count) * n);

    std::vector<BVertex> labels = detail::bVertices(n, m);
    std::map<BVertex, std::uint32_t> index;
    for (std::size_t i = 0; i < labels.size(); ++i)
        index.emplace(labels[i], static_cast<std::uint32_t>(i));
    std::vector<Simplex> facets;
    for (std::size_t p = 0; p < count; ++p)
    {
        Profile profile = decodeProfile(*space, m, p);
        Simplex f;
        for (std::size_t h = 0; h < n; ++h)
            f.push_back(index.at({h, detail::signTuple(hyperplaneKey(*space, profile, h), m)}));
        std::sort(f.begin(), f.end());
        facets.push_back(std::move(f));
    }
    const std::size_t vertex_count = labels.size();
    return BComplex(std::move(labels), SimplicialComplex::fromMaximal(vertex_count, std::move(facets)));
}

/**
 * The covering of (R^d)^m indexed by B-vertices: (h, s) is the set of
 * tuples x with s_j <alpha_h, x_j> >= 1 for every j.  A family of members
 * intersects iff, coordinate by coordinate, the sign conditions are
 * jointly feasible (decided by the exact oracle).
 */
inline Covering<BVertex> arrangementCovering(const ChamberSpacePtr& space, std::size_t m)
{
    Covering<BVertex> cov;
    cov.labels = detail::bVertices(space->hyperplaneCount(), m);
    auto labels = cov.labels;
    const Arrangement arr = space->arrangement();
    cov.intersects = [labels, arr, m](const std::vector<std::uint32_t>& members) {
        for (std::size_t j = 0; j < m; ++j)
        {
            PartialSigns partial;
            for (std::uint32_t v : members)
            {
                const BVertex& b = labels[v];
                Sign s = b.signs[j] == '-' ? Sign::Minus : Sign::Plus;
                auto [it, inserted] = partial.emplace(b.hyperplane, s);
                if (!inserted && it->second != s)
                    return false;
            }
            if (!signFeasible(arr, partial))
                return false;
        }
        return true;
    };
    return cov;
}

struct DualityReport
{
    bool holds = false;
    /** bijection[p] = vertex of dual(B_m) (a facet of B_m) matched with profile p */
    std::vector<std::uint32_t> bijection;
};

/**
 * Check that M_m(A) is the dual of B_m(A) under the correspondence
 * profile p <-> the facet { (h, p's sign tuple on h) } of B_m(A).
 */
inline DualityReport verifyDuality(const ChamberSpacePtr& space, std::size_t m, std::uint64_t limit = kDefaultSimplexBudget)
{
    const MComplex mc = buildM(space, m, limit);
    const BComplex bc = buildB(space, m, limit);
    const auto dual = dualComplex(bc);
    DualityReport report;
    report.bijection.resize(mc.vertexCount());
    for (std::uint32_t p = 0; p < mc.vertexCount(); ++p)
    {
        const Profile profile = decodeProfile(*space, m, p);
        Simplex facet;
        for (std::size_t h = 0; h < space->hyperplaneCount(); ++h)
        {
            auto v = bc.indexOf({h, detail::signTuple(hyperplaneKey(*space, profile, h), m)});
            facet.push_back(*v);
        }
        std::sort(facet.begin(), facet.end());
        auto d = dual.indexOf(facet);
        if (!d)
            return report;
        report.bijection[p] = *d;
    }
    report.holds = isIsomorphismUnder(mc, dual, report.bijection);
    return report;
}

/**
 * The simplicial map M_m(A) -> M_l(A) induced by an IIA map f.
 *
 * @throws NotIIA if f does not satisfy IIA.
 */
inline SimplicialMap inducedMapM(const ChamberMap& f, const MComplexPtr& source, const MComplexPtr& target)
{
    if (!checkIIA(f))
        throw NotIIA("the map does not satisfy IIA");
    if (source->vertexCount() != f.profileCount())
        throw ShapeMismatch("source complex does not match the map's input arity");
    if (target->vertexCount() != profileCount(*f.space(), f.outputArity()))
        throw ShapeMismatch("target complex does not match the map's output arity");
    std::vector<std::uint32_t> vm(f.profileCount());
    for (std::size_t p = 0; p < vm.size(); ++p)
        vm[p] = static_cast<std::uint32_t>(f.imageIndex(p));
    return SimplicialMap(source, target, std::move(vm));
}

/** rho''_{i, context}: (h, s) -> (h, context signs on h with s inserted at slot i). */
inline SimplicialMap rhoIndexMap(const ChamberSpacePtr& space, std::size_t i, const Profile& context,
                                 const BComplexPtr& b1, const BComplexPtr& bm)
{
    const std::size_t m = context.size() + 1;
    if (i < 1 || i > m)
        throw IndexOutOfRange("insertion slot out of range");
    std::vector<std::uint32_t> vm(b1->vertexCount());
    for (std::uint32_t v = 0; v < vm.size(); ++v)
    {
        const BVertex& b = b1->label(v);
        std::string s;
        for (std::size_t c : context)
            s += signChar(space->sign(c, b.hyperplane));
        s.insert(s.begin() + static_cast<std::ptrdiff_t>(i - 1), b.signs.at(0));
        auto w = bm->indexOf({b.hyperplane, s});
        if (!w)
            throw ShapeMismatch("target complex lacks vertex " + toString(BVertex{b.hyperplane, s}));
        vm[v] = *w;
    }
    return SimplicialMap(b1, bm, std::move(vm));
}

/** Delta'': (h, s) -> (h, (s, ..., s)). */
inline SimplicialMap deltaIndexMap(std::size_t m, const BComplexPtr& b1, const BComplexPtr& bm)
{
    std::vector<std::uint32_t> vm(b1->vertexCount());
    for (std::uint32_t v = 0; v < vm.size(); ++v)
    {
        const BVertex& b = b1->label(v);
        auto w = bm->indexOf({b.hyperplane, std::string(m, b.signs.at(0))});
        if (!w)
            throw ShapeMismatch("target complex lacks a diagonal vertex");
        vm[v] = *w;
    }
    return SimplicialMap(b1, bm, std::move(vm));
}

}   // namespace arrtop

#endif
