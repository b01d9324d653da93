/**
 * Finite abstract simplicial complexes stored by their maximal simplices,
 * simplicial maps, nerves, duals and barycentric subdivision.
 *
 * Vertices are numbered 0..N-1; a Simplex is a sorted list of vertex
 * numbers.  LabeledComplex attaches an ordered label to every vertex.
 */

#ifndef ARRTOP_COMPLEX_HPP
#define ARRTOP_COMPLEX_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>
#include "budget.hpp"
#include "errors.hpp"

namespace arrtop {

using Simplex = std::vector<std::uint32_t>;

class SimplicialComplex
{
    protected:
        std::size_t vertex_count_ = 0;
        std::vector<Simplex> facets_;                          // sorted, maximal
        std::vector<std::vector<std::uint32_t> > incidence_;   // vertex -> facets containing it

        void buildIncidence()
        {
            incidence_.assign(vertex_count_, {});
            for (std::size_t f = 0; f < facets_.size(); ++f)
                for (std::uint32_t v : facets_[f])
                    incidence_[v].push_back(static_cast<std::uint32_t>(f));
        }

        struct TrustedTag {};
        SimplicialComplex(std::size_t vertex_count, std::vector<Simplex> facets, TrustedTag)
            : vertex_count_(vertex_count), facets_(std::move(facets))
        {
            buildIncidence();
        }

    public:
        SimplicialComplex() = default;

        /**
         * Complex generated by the given simplices.  Duplicates and
         * simplices contained in others are dropped; facets end up sorted
         * lexicographically.
         */
        SimplicialComplex(std::size_t vertex_count, std::vector<Simplex> simplices)
            : vertex_count_(vertex_count)
        {
            for (auto& s : simplices)
            {
                std::sort(s.begin(), s.end());
                s.erase(std::unique(s.begin(), s.end()), s.end());
                if (s.empty())
                    throw PreconditionError("simplices must be nonempty");
                if (s.back() >= vertex_count)
                    throw IndexOutOfRange("simplex vertex " + std::to_string(s.back()) + " out of range");
            }
            std::sort(simplices.begin(), simplices.end(), [](const Simplex& a, const Simplex& b) {
                return a.size() != b.size() ? a.size() > b.size() : a < b;
            });
            simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
            std::vector<Simplex> kept;
            for (auto& s : simplices)
            {
                bool dominated = false;
                for (const auto& k : kept)
                    if (k.size() > s.size() && std::includes(k.begin(), k.end(), s.begin(), s.end()))
                    {
                        dominated = true;
                        break;
                    }
                if (!dominated)
                    kept.push_back(std::move(s));
            }
            std::sort(kept.begin(), kept.end());
            facets_ = std::move(kept);
            buildIncidence();
        }

        /** Trust the caller that the simplices are sorted, distinct and pairwise incomparable. */
        static SimplicialComplex fromMaximal(std::size_t vertex_count, std::vector<Simplex> facets)
        {
            std::sort(facets.begin(), facets.end());
            return SimplicialComplex(vertex_count, std::move(facets), TrustedTag{});
        }

        std::size_t vertexCount() const { return vertex_count_; }
        const std::vector<Simplex>& facets() const { return facets_; }
        const std::vector<std::uint32_t>& facetsAt(std::uint32_t v) const { return incidence_.at(v); }

        /** Dimension (largest facet size minus one); -1 for the empty complex. */
        long dimension() const
        {
            std::size_t best = 0;
            for (const auto& f : facets_)
                best = std::max(best, f.size());
            return static_cast<long>(best) - 1;
        }

        bool isPure() const
        {
            return std::all_of(facets_.begin(), facets_.end(),
                               [&](const Simplex& f) { return f.size() == facets_.front().size(); });
        }

        /** Membership of an arbitrary vertex set (any order, duplicates allowed). */
        bool contains(Simplex s) const
        {
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            if (s.empty())
                return true;
            if (s.back() >= vertex_count_)
                return false;
            std::uint32_t rarest = s.front();
            for (std::uint32_t v : s)
                if (incidence_[v].size() < incidence_[rarest].size())
                    rarest = v;
            for (std::uint32_t f : incidence_[rarest])
                if (std::includes(facets_[f].begin(), facets_[f].end(), s.begin(), s.end()))
                    return true;
            return false;
        }

        /**
         * Every simplex of dimension <= max_dim (vertex sets of size <= max_dim + 1),
         * grouped by dimension and sorted lexicographically.
         */
        std::vector<std::vector<Simplex> > simplices(std::size_t max_dim, Budget& budget) const
        {
            std::vector<std::vector<Simplex> > out(max_dim + 1);
            for (std::size_t k = 0; k <= max_dim; ++k)
            {
                std::vector<Simplex> layer;
                for (const auto& f : facets_)
                {
                    if (f.size() < k + 1)
                        continue;
                    // (k+1)-subsets of f in lexicographic order of positions
                    std::vector<std::size_t> pos(k + 1);
                    std::iota(pos.begin(), pos.end(), 0);
                    for (;;)
                    {
                        Simplex s(k + 1);
                        for (std::size_t i = 0; i <= k; ++i)
                            s[i] = f[pos[i]];
                        layer.push_back(std::move(s));
                        if (layer.size() > 64 * budget.limit())
                            throw BudgetExceeded("simplex census", layer.size(), budget.limit());
                        std::size_t i = k + 1;
                        while (i-- > 0 && pos[i] == f.size() - (k + 1) + i) {}
                        if (i == std::size_t(-1))
                            break;
                        ++pos[i];
                        for (std::size_t j = i + 1; j <= k; ++j)
                            pos[j] = pos[j - 1] + 1;
                    }
                }
                std::sort(layer.begin(), layer.end());
                layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
                budget.charge(layer.size());
                out[k] = std::move(layer);
            }
            return out;
        }

        std::vector<std::vector<Simplex> > allSimplices(std::uint64_t limit = kDefaultSimplexBudget) const
        {
            Budget budget(limit, "simplices");
            return simplices(static_cast<std::size_t>(std::max(dimension(), 0L)), budget);
        }

        /** Number of simplices in each dimension. */
        std::vector<std::size_t> fVector(std::uint64_t limit = kDefaultSimplexBudget) const
        {
            std::vector<std::size_t> f;
            for (const auto& layer : allSimplices(limit))
                f.push_back(layer.size());
            return f;
        }

        bool operator==(const SimplicialComplex& other) const
        {
            return vertex_count_ == other.vertex_count_ && facets_ == other.facets_;
        }
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

/** A complex whose vertices carry distinct, ordered labels. */
template <typename Label>
class LabeledComplex : public SimplicialComplex
{
    private:
        std::vector<Label> labels_;
        std::map<Label, std::uint32_t> index_;

        void indexLabels()
        {
            for (std::size_t i = 0; i < labels_.size(); ++i)
                if (!index_.emplace(labels_[i], static_cast<std::uint32_t>(i)).second)
                    throw PreconditionError("vertex labels must be distinct");
        }

    public:
        LabeledComplex(std::vector<Label> labels, std::vector<Simplex> simplices)
            : SimplicialComplex(labels.size(), std::move(simplices)), labels_(std::move(labels))
        {
            indexLabels();
        }

        LabeledComplex(std::vector<Label> labels, SimplicialComplex structure)
            : SimplicialComplex(std::move(structure)), labels_(std::move(labels))
        {
            if (labels_.size() != vertexCount())
                throw ShapeMismatch("one label per vertex required");
            indexLabels();
        }

        const std::vector<Label>& labels() const { return labels_; }
        const Label& label(std::uint32_t v) const { return labels_.at(v); }

        std::optional<std::uint32_t> indexOf(const Label& l) const
        {
            auto it = index_.find(l);
            if (it == index_.end())
                return std::nullopt;
            return it->second;
        }

        /** Facets as label sets. */
        std::vector<std::vector<Label> > labeledFacets() const
        {
            std::vector<std::vector<Label> > out;
            for (const auto& f : facets())
            {
                std::vector<Label> ls;
                for (std::uint32_t v : f)
                    ls.push_back(labels_[v]);
                out.push_back(std::move(ls));
            }
            return out;
        }
};

/**
 * A vertex map between complexes carrying every simplex to a simplex.
 * Construction verifies the condition on the facets of the source.
 */
class SimplicialMap
{
    private:
        ComplexPtr source_, target_;
        std::vector<std::uint32_t> map_;

    public:
        SimplicialMap(ComplexPtr source, ComplexPtr target, std::vector<std::uint32_t> vertex_map)
            : source_(std::move(source)), target_(std::move(target)), map_(std::move(vertex_map))
        {
            if (map_.size() != source_->vertexCount())
                throw ShapeMismatch("vertex map must be total on the source");
            for (std::uint32_t v : map_)
                if (v >= target_->vertexCount())
                    throw IndexOutOfRange("vertex map image out of range");
            for (const auto& f : source_->facets())
            {
                if (!target_->contains(image(f)))
                    throw NotSimplicial("image of a facet is not a simplex of the target");
            }
        }

        static SimplicialMap identity(const ComplexPtr& k)
        {
            std::vector<std::uint32_t> m(k->vertexCount());
            std::iota(m.begin(), m.end(), 0);
            return SimplicialMap(k, k, std::move(m));
        }

        const ComplexPtr& source() const { return source_; }
        const ComplexPtr& target() const { return target_; }
        const std::vector<std::uint32_t>& vertexMap() const { return map_; }
        std::uint32_t operator()(std::uint32_t v) const { return map_.at(v); }

        /** Image vertex set, sorted and deduplicated. */
        Simplex image(const Simplex& s) const
        {
            Simplex out;
            out.reserve(s.size());
            for (std::uint32_t v : s)
                out.push_back(map_.at(v));
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            return out;
        }
};

/** g o f; f's target must be g's source. */
inline SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f)
{
    if (f.target() != g.source() && !(*f.target() == *g.source()))
        throw ShapeMismatch("cannot compose: target of the first map is not the source of the second");
    std::vector<std::uint32_t> m(f.vertexMap().size());
    for (std::size_t v = 0; v < m.size(); ++v)
        m[v] = g(f(static_cast<std::uint32_t>(v)));
    return SimplicialMap(f.source(), g.target(), std::move(m));
}

/**
 * A finite covering given by its index labels and an intersection oracle:
 * intersects(S) says whether the members indexed by S have a common point.
 * The oracle must be monotone and true on singletons.
 */
template <typename Label>
struct Covering
{
    std::vector<Label> labels;
    std::function<bool(const std::vector<std::uint32_t>&)> intersects;
};

/**
 * Nerve of a covering: simplices are the index sets with nonempty common
 * intersection.  Found by depth-first extension in index order.
 */
template <typename Label>
LabeledComplex<Label> nerveOfCovering(const Covering<Label>& cov, std::uint64_t limit = kDefaultSimplexBudget)
{
    Budget budget(limit, "nerve simplices");
    const std::size_t n = cov.labels.size();
    std::vector<Simplex> maximal;
    Simplex current;
    std::function<void(std::uint32_t)> extend = [&](std::uint32_t from) {
        bool extended = false;
        for (std::uint32_t v = from; v < n; ++v)
        {
            current.push_back(v);
            if (cov.intersects(current))
            {
                budget.charge(1);
                extended = true;
                extend(v + 1);
            }
            current.pop_back();
        }
        if (extended || current.empty())
            return;
        // no larger-index extension; maximal unless a smaller index fits
        for (std::uint32_t v = 0; v < n; ++v)
        {
            if (std::binary_search(current.begin(), current.end(), v))
                continue;
            Simplex bigger = current;
            bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), v), v);
            if (cov.intersects(bigger))
                return;
        }
        maximal.push_back(current);
    };
    extend(0);
    return LabeledComplex<Label>(cov.labels, SimplicialComplex::fromMaximal(n, std::move(maximal)));
}

/**
 * Dual of a pure complex: the nerve of its covering by facets.  Vertices
 * are the facets of K (labelled by their vertex sets); the maximal
 * simplices are the vertex stars { F : v in F }.
 *
 * @throws NonPureComplex if the facets have different sizes.
 */
inline LabeledComplex<Simplex> dualComplex(const SimplicialComplex& k)
{
    if (!k.isPure())
        throw NonPureComplex("dual complex needs all maximal simplices of equal dimension");
    std::vector<Simplex> stars;
    for (std::uint32_t v = 0; v < k.vertexCount(); ++v)
        if (!k.facetsAt(v).empty())
            stars.push_back(k.facetsAt(v));
    return LabeledComplex<Simplex>(k.facets(), std::move(stars));
}

/** Isomorphism test under a given vertex bijection from a to b. */
inline bool isIsomorphismUnder(const SimplicialComplex& a, const SimplicialComplex& b,
                               const std::vector<std::uint32_t>& bijection)
{
    if (a.vertexCount() != b.vertexCount() || bijection.size() != a.vertexCount())
        return false;
    std::vector<char> hit(b.vertexCount(), 0);
    for (std::uint32_t v : bijection)
    {
        if (v >= b.vertexCount() || hit[v])
            return false;
        hit[v] = 1;
    }
    std::vector<Simplex> mapped;
    for (const auto& f : a.facets())
    {
        Simplex s;
        for (std::uint32_t v : f)
            s.push_back(bijection[v]);
        std::sort(s.begin(), s.end());
        mapped.push_back(std::move(s));
    }
    std::sort(mapped.begin(), mapped.end());
    return mapped == b.facets();
}

/* ------------------------------------------------------------------ */
/*                       Barycentric subdivision                       */
/* ------------------------------------------------------------------ */

namespace detail {

/** All nonempty faces of K, sorted lexicographically, as labels for Sd(K). */
inline std::vector<Simplex> allFaces(const SimplicialComplex& k, std::uint64_t limit)
{
    std::vector<Simplex> faces;
    for (const auto& f : k.facets())
    {
        if (f.size() > 30)
            throw BudgetExceeded("faces of a facet", std::uint64_t(1) << 30, limit);
        if ((std::uint64_t(1) << f.size()) > 64 * limit)
            throw BudgetExceeded("faces of a facet", std::uint64_t(1) << f.size(), limit);
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << f.size()); ++mask)
        {
            Simplex s;
            for (std::size_t i = 0; i < f.size(); ++i)
                if ((mask >> i) & 1)
                    s.push_back(f[i]);
            faces.push_back(std::move(s));
        }
        if (faces.size() > 64 * limit)
            throw BudgetExceeded("faces", faces.size(), limit);
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    if (faces.size() > limit)
        throw BudgetExceeded("faces", faces.size(), limit);
    return faces;
}

/** Index of every sub-face of a simplex (mask over its positions) in the face list. */
inline std::vector<std::uint32_t> subfaceIndices(const Simplex& top, const std::map<Simplex, std::uint32_t>& index)
{
    std::vector<std::uint32_t> out(std::size_t(1) << top.size(), 0);
    for (std::uint64_t mask = 1; mask < out.size(); ++mask)
    {
        Simplex s;
        for (std::size_t i = 0; i < top.size(); ++i)
            if ((mask >> i) & 1)
                s.push_back(top[i]);
        out[mask] = index.at(s);
    }
    return out;
}

}   // namespace detail

/**
 * Barycentric subdivision: vertices are the simplices of K, simplices are
 * chains under inclusion.  The number of maximal chains is the sum of |F|!
 * over facets F and is charged against the budget up front.
 */
inline LabeledComplex<Simplex> barycentricSubdivision(const SimplicialComplex& k,
                                                      std::uint64_t limit = kDefaultSimplexBudget)
{
    std::uint64_t chains = 0;
    for (const auto& f : k.facets())
    {
        std::uint64_t fact = 1;
        for (std::size_t i = 2; i <= f.size(); ++i)
        {
            fact *= i;
            if (fact > limit)
                throw BudgetExceeded("maximal chains", fact, limit);
        }
        chains += fact;
        if (chains > limit)
            throw BudgetExceeded("maximal chains", chains, limit);
    }
    std::vector<Simplex> faces = detail::allFaces(k, limit);
    std::map<Simplex, std::uint32_t> index;
    for (std::size_t i = 0; i < faces.size(); ++i)
        index.emplace(faces[i], static_cast<std::uint32_t>(i));

    std::vector<Simplex> maximal;
    for (const auto& f : k.facets())
    {
        const auto sub = detail::subfaceIndices(f, index);
        std::vector<std::size_t> order(f.size());
        std::iota(order.begin(), order.end(), 0);
        do
        {
            Simplex chain;
            std::uint64_t mask = 0;
            for (std::size_t i : order)
            {
                mask |= std::uint64_t(1) << i;
                chain.push_back(sub[mask]);
            }
            std::sort(chain.begin(), chain.end());
            maximal.push_back(std::move(chain));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return LabeledComplex<Simplex>(std::move(faces), SimplicialComplex::fromMaximal(index.size(), std::move(maximal)));
}

/**
 * The d-skeleton of Sd(K) without building Sd(K): maximal simplices are
 * the chains of exactly d+1 faces together with the complete flags of
 * facets having at most d vertices.  Vertices are all faces of K, so the
 * homology of the result agrees with that of Sd(K) below degree d.
 */
inline LabeledComplex<Simplex> subdivisionSkeleton(const SimplicialComplex& k, std::size_t d,
                                                   std::uint64_t limit = kDefaultSimplexBudget)
{
    std::vector<Simplex> faces = detail::allFaces(k, limit);
    std::map<Simplex, std::uint32_t> index;
    for (std::size_t i = 0; i < faces.size(); ++i)
        index.emplace(faces[i], static_cast<std::uint32_t>(i));

    // Chains of length d+1 counted once by their top element.  Facet
    // flags shorter than d+1 appear as the chains of length |F| ending at F
    // that cannot be refined, i.e. the complete flags.
    std::vector<char> is_facet(faces.size(), 0);
    for (const auto& f : k.facets())
        is_facet[index.at(f)] = 1;

    std::vector<Simplex> maximal;
    Simplex chain;
    std::vector<std::uint32_t> sub;
    // descend from top mask choosing `left` more strictly smaller nonempty subsets
    std::function<void(std::uint64_t, std::size_t)> descend = [&](std::uint64_t mask, std::size_t left) {
        if (left == 0)
        {
            Simplex c = chain;
            std::sort(c.begin(), c.end());
            maximal.push_back(std::move(c));
            if (maximal.size() > limit)
                throw BudgetExceeded("subdivision skeleton simplices", maximal.size(), limit);
            return;
        }
        // proper nonempty submasks of mask with enough room below them
        for (std::uint64_t s = (mask - 1) & mask; s; s = (s - 1) & mask)
        {
            if (static_cast<std::size_t>(std::popcount(s)) < left)
                continue;
            chain.push_back(sub[s]);
            descend(s, left - 1);
            chain.pop_back();
        }
    };
    for (const auto& top : faces)
    {
        if (top.size() > 30)
            throw BudgetExceeded("faces of a facet", std::uint64_t(1) << 30, limit);
        sub = detail::subfaceIndices(top, index);
        const std::uint64_t full = (std::uint64_t(1) << top.size()) - 1;
        chain.assign(1, sub[full]);
        if (top.size() >= d + 1)
        {
            descend(full, d);
        }
        else if (is_facet[sub[full]])
        {
            // complete flags: each step removes exactly one vertex
            std::function<void(std::uint64_t)> flags = [&](std::uint64_t mask) {
                if (std::popcount(mask) == 1)
                {
                    Simplex c = chain;
                    std::sort(c.begin(), c.end());
                    maximal.push_back(std::move(c));
                    return;
                }
                for (std::uint64_t rest = mask; rest; rest &= rest - 1)
                {
                    std::uint64_t smaller = mask & ~(rest & (~rest + 1));
                    chain.push_back(sub[smaller]);
                    flags(smaller);
                    chain.pop_back();
                }
            };
            flags(full);
        }
    }
    return LabeledComplex<Simplex>(std::move(faces), SimplicialComplex::fromMaximal(index.size(), std::move(maximal)));
}

/**
 * Sd(f): the vertex sigma of the source subdivision goes to f(sigma).
 * Both subdivisions must be labelled by faces of f's source and target.
 */
inline SimplicialMap sdMap(const SimplicialMap& f,
                           const std::shared_ptr<const LabeledComplex<Simplex> >& sd_source,
                           const std::shared_ptr<const LabeledComplex<Simplex> >& sd_target)
{
    std::vector<std::uint32_t> m(sd_source->vertexCount());
    for (std::uint32_t v = 0; v < m.size(); ++v)
    {
        auto target = sd_target->indexOf(f.image(sd_source->label(v)));
        if (!target)
            throw NotSimplicial("image of a simplex is not a vertex of the target subdivision");
        m[v] = *target;
    }
    return SimplicialMap(sd_source, sd_target, std::move(m));
}

}   // namespace arrtop

#endif
