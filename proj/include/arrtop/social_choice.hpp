/**
 * Maps between powers of the chamber set: IIA and PAR checks, per-hyperplane
 * families, exhaustive enumeration of admissible maps, projections, and the
 * metric space of IIA bijections.
 *
 * Profiles are tuples of chamber indices into a ChamberSpace.  Profile
 * tuples are numbered in mixed radix with the first coordinate most
 * significant, so profile order is lexicographic in the chamber order.
 * Voter / slot positions are 1-based throughout; hyperplanes are 0-based.
 */

#ifndef ARRTOP_SOCIAL_CHOICE_HPP
#define ARRTOP_SOCIAL_CHOICE_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>
#include "budget.hpp"
#include "chambers.hpp"
#include "errors.hpp"

namespace arrtop {

/** Tuple of chamber indices. */
using Profile = std::vector<std::size_t>;

/** Number of profiles C^m, throwing if it does not fit the search limits. */
inline std::size_t profileCount(const ChamberSpace& space, std::size_t m)
{
    std::uint64_t count = 1;
    for (std::size_t j = 0; j < m; ++j)
    {
        if (count > (std::uint64_t(1) << 40) / std::max<std::size_t>(space.chamberCount(), 1))
            throw BudgetExceeded("profile count", std::uint64_t(-1), std::uint64_t(1) << 40);
        count *= space.chamberCount();
    }
    return static_cast<std::size_t>(count);
}

inline std::size_t encodeProfile(const ChamberSpace& space, std::span<const std::size_t> profile)
{
    std::size_t index = 0;
    for (std::size_t c : profile)
    {
        if (c >= space.chamberCount())
            throw IndexOutOfRange("chamber index " + std::to_string(c) + " out of range");
        index = index * space.chamberCount() + c;
    }
    return index;
}

inline Profile decodeProfile(const ChamberSpace& space, std::size_t m, std::size_t index)
{
    Profile p(m);
    for (std::size_t j = m; j-- > 0; )
    {
        p[j] = index % space.chamberCount();
        index /= space.chamberCount();
    }
    return p;
}

/**
 * Restriction of a profile to hyperplane h: bit j is set iff the j-th
 * chamber lies on the negative side of h.
 */
inline std::uint32_t hyperplaneKey(const ChamberSpace& space, std::span<const std::size_t> profile, std::size_t h)
{
    std::uint32_t key = 0;
    for (std::size_t j = 0; j < profile.size(); ++j)
        if (space.sign(profile[j], h) == Sign::Minus)
            key |= std::uint32_t(1) << j;
    return key;
}

inline std::string keyToString(std::uint32_t key, std::size_t width)
{
    std::string s(width, '+');
    for (std::size_t j = 0; j < width; ++j)
        if ((key >> j) & 1)
            s[j] = '-';
    return s;
}

/**
 * One function {+,-}^m -> {+,-}^l per hyperplane.  outputs[h][key] is an
 * l-bit mask, with keys and outputs encoded as in hyperplaneKey.
 */
struct PerHyperplaneFamily
{
    std::size_t m = 0;
    std::size_t l = 0;
    std::vector<std::vector<std::uint32_t> > outputs;

    bool operator==(const PerHyperplaneFamily&) const = default;
};

/**
 * A map Ch^m -> Ch^l stored as a full table: entry p*l + j is the chamber
 * index of output slot j on profile number p.
 */
class ChamberMap
{
    private:
        ChamberSpacePtr space_;
        std::size_t m_, l_;
        std::vector<std::uint32_t> table_;

    public:
        ChamberMap(ChamberSpacePtr space, std::size_t m, std::size_t l, std::vector<std::uint32_t> table)
            : space_(std::move(space)), m_(m), l_(l), table_(std::move(table))
        {
            if (m_ == 0 || l_ == 0)
                throw PreconditionError("chamber maps need m, l >= 1");
            if (table_.size() != arrtop::profileCount(*space_, m_) * l_)
                throw ShapeMismatch("chamber map table has the wrong size");
            for (std::uint32_t c : table_)
                if (c >= space_->chamberCount())
                    throw IndexOutOfRange("chamber map output out of range");
        }

        /** Tabulate fn: profile -> l chamber indices. */
        static ChamberMap fromFunction(ChamberSpacePtr space, std::size_t m, std::size_t l,
                                       const std::function<Profile(const Profile&)>& fn)
        {
            const std::size_t count = arrtop::profileCount(*space, m);
            std::vector<std::uint32_t> table;
            table.reserve(count * l);
            for (std::size_t p = 0; p < count; ++p)
            {
                Profile out = fn(decodeProfile(*space, m, p));
                if (out.size() != l)
                    throw ArityMismatch("function returned the wrong number of chambers");
                for (std::size_t c : out)
                    table.push_back(static_cast<std::uint32_t>(c));
            }
            return ChamberMap(std::move(space), m, l, std::move(table));
        }

        const ChamberSpacePtr& space() const { return space_; }
        std::size_t inputArity() const { return m_; }
        std::size_t outputArity() const { return l_; }
        std::size_t profileCount() const { return table_.size() / l_; }
        const std::vector<std::uint32_t>& table() const { return table_; }

        std::span<const std::uint32_t> at(std::size_t profile_index) const
        {
            return std::span<const std::uint32_t>(table_).subspan(profile_index * l_, l_);
        }
        Profile operator()(const Profile& p) const
        {
            auto out = at(encodeProfile(*space_, p));
            return Profile(out.begin(), out.end());
        }
        /** Index of the image tuple within Ch^l. */
        std::size_t imageIndex(std::size_t profile_index) const
        {
            std::size_t index = 0;
            for (std::uint32_t c : at(profile_index))
                index = index * space_->chamberCount() + c;
            return index;
        }

        bool operator==(const ChamberMap& other) const
        {
            return space_ == other.space_ && m_ == other.m_ && l_ == other.l_ && table_ == other.table_;
        }
};

namespace detail {

inline void requireSameSpace(const ChamberSpacePtr& a, const ChamberSpacePtr& b)
{
    if (a != b && !(a->arrangement() == b->arrangement()))
        throw ArrangementMismatch("maps are defined over different arrangements");
}

}   // namespace detail

/**
 * Recover the per-hyperplane family of f, if f satisfies IIA.
 *
 * @returns The unique family making every restriction square commute, or
 *          std::nullopt if two profiles with the same restriction to some
 *          hyperplane have images with different restrictions.
 */
inline std::optional<PerHyperplaneFamily> checkIIA(const ChamberMap& f)
{
    const ChamberSpace& space = *f.space();
    const std::size_t n = space.hyperplaneCount();
    const std::size_t m = f.inputArity(), l = f.outputArity();
    constexpr std::uint32_t unset = ~std::uint32_t(0);
    PerHyperplaneFamily fam{m, l, std::vector<std::vector<std::uint32_t> >(n, std::vector<std::uint32_t>(std::size_t(1) << m, unset))};
    for (std::size_t p = 0; p < f.profileCount(); ++p)
    {
        const Profile profile = decodeProfile(space, m, p);
        const auto image = f.at(p);
        for (std::size_t h = 0; h < n; ++h)
        {
            std::uint32_t key = hyperplaneKey(space, profile, h);
            std::uint32_t out = 0;
            for (std::size_t j = 0; j < l; ++j)
                if (space.sign(image[j], h) == Sign::Minus)
                    out |= std::uint32_t(1) << j;
            std::uint32_t& slot = fam.outputs[h][key];
            if (slot == unset)
                slot = out;
            else if (slot != out)
                return std::nullopt;
        }
    }
    // both sides of every hyperplane carry chambers, so every key occurs
    return fam;
}

/** f(c, ..., c) = c for every chamber c. */
inline bool checkPAR(const ChamberMap& f)
{
    if (f.outputArity() != 1)
        throw ArityMismatch("PAR is defined for maps into Ch(A)");
    const ChamberSpace& space = *f.space();
    for (std::size_t c = 0; c < space.chamberCount(); ++c)
    {
        Profile diag(f.inputArity(), c);
        if (f.at(encodeProfile(space, diag))[0] != c)
            return false;
    }
    return true;
}

/**
 * Build the map determined by a family, if every output sign vector it
 * produces is a chamber.
 */
inline std::optional<ChamberMap> assembleFamily(const ChamberSpacePtr& space, const PerHyperplaneFamily& fam)
{
    const std::size_t n = space->hyperplaneCount();
    if (fam.outputs.size() != n)
        throw ShapeMismatch("family must have one function per hyperplane");
    for (const auto& fn : fam.outputs)
        if (fn.size() != (std::size_t(1) << fam.m))
            throw ShapeMismatch("family functions must be total on {+,-}^m");
    const std::size_t count = profileCount(*space, fam.m);
    std::vector<std::uint32_t> table;
    table.reserve(count * fam.l);
    for (std::size_t p = 0; p < count; ++p)
    {
        const Profile profile = decodeProfile(*space, fam.m, p);
        std::vector<std::uint64_t> masks(fam.l, 0);
        for (std::size_t h = 0; h < n; ++h)
        {
            std::uint32_t out = fam.outputs[h][hyperplaneKey(*space, profile, h)];
            for (std::size_t j = 0; j < fam.l; ++j)
                if ((out >> j) & 1)
                    masks[j] |= std::uint64_t(1) << h;
        }
        for (std::uint64_t mask : masks)
        {
            std::size_t c = space->indexOf(mask);
            if (c == ChamberSpace::npos)
                return std::nullopt;
            table.push_back(static_cast<std::uint32_t>(c));
        }
    }
    return ChamberMap(space, fam.m, fam.l, std::move(table));
}

/**
 * Enumerate every admissible map Ch^m -> Ch (IIA and PAR).
 *
 * The search runs over per-hyperplane functions that respect unanimity,
 * hyperplane by hyperplane, and abandons a partial family as soon as some
 * profile's partial output is not the restriction of any chamber.  Results
 * are ordered lexicographically by the truth tables of (phi_0, phi_1, ...).
 *
 * @param budget Charged one unit per profile check; the raw candidate count
 *               (2^(2^m))^n must also fit.
 */
inline std::vector<ChamberMap> enumerateAdmissible(const ChamberSpacePtr& space, std::size_t m, Budget& budget)
{
    const std::size_t n = space->hyperplaneCount();
    if (m == 0)
        throw PreconditionError("m must be at least 1");
    if (m > 5)
        throw BudgetExceeded("candidate families", std::uint64_t(-1), budget.limit());
    if (n > 20)
        throw PreconditionError("admissible-map search supports at most 20 hyperplanes");

    // raw candidate count (2^(2^m))^n = 2^(n * 2^m)
    const std::size_t raw_bits = n * (std::size_t(1) << m);
    budget.require(raw_bits >= 64 ? std::uint64_t(-1) : (std::uint64_t(1) << raw_bits));

    const std::size_t keys = std::size_t(1) << m;
    const std::size_t profiles = profileCount(*space, m);
    std::vector<std::uint32_t> key_table(profiles * n);
    for (std::size_t p = 0; p < profiles; ++p)
    {
        Profile profile = decodeProfile(*space, m, p);
        for (std::size_t h = 0; h < n; ++h)
            key_table[p * n + h] = hyperplaneKey(*space, profile, h);
    }

    // prefix_ok[h][mask] : mask on hyperplanes 0..h is a restriction of some chamber
    std::vector<std::vector<char> > prefix_ok(n);
    for (std::size_t h = 0; h < n; ++h)
    {
        prefix_ok[h].assign(std::size_t(1) << (h + 1), 0);
        const std::uint64_t low = (std::uint64_t(1) << (h + 1)) - 1;
        for (const auto& c : space->chambers())
            prefix_ok[h][c.signs.mask() & low] = 1;
    }

    // PAR-respecting truth tables: key 0 (all +) -> +, key all-ones -> -
    std::vector<std::uint64_t> candidates;
    const std::size_t free_bits = keys - 2;
    for (std::uint64_t free = 0; free < (std::uint64_t(1) << free_bits); ++free)
    {
        std::uint64_t table = (free << 1) | (std::uint64_t(1) << (keys - 1));
        candidates.push_back(table);
    }

    std::vector<std::vector<std::uint64_t> > partial(n + 1, std::vector<std::uint64_t>(profiles, 0));
    std::vector<std::size_t> choice(n, 0);
    std::vector<ChamberMap> result;
    std::uint64_t pending = 0;
    constexpr std::uint64_t flush_every = 1 << 16;

    std::function<void(std::size_t)> search = [&](std::size_t h) {
        if (h == n)
        {
            std::vector<std::uint32_t> table(profiles);
            for (std::size_t p = 0; p < profiles; ++p)
                table[p] = static_cast<std::uint32_t>(space->indexOf(partial[n][p]));
            result.emplace_back(space, m, 1, std::move(table));
            return;
        }
        const auto& ok = prefix_ok[h];
        for (std::size_t ci = 0; ci < candidates.size(); ++ci)
        {
            const std::uint64_t fn = candidates[ci];
            bool alive = true;
            for (std::size_t p = 0; p < profiles; ++p)
            {
                ++pending;
                std::uint64_t bit = (fn >> key_table[p * n + h]) & 1;
                std::uint64_t mask = partial[h][p] | (bit << h);
                if (!ok[mask])
                {
                    alive = false;
                    break;
                }
                partial[h + 1][p] = mask;
            }
            if (pending >= flush_every)
            {
                budget.charge(pending);
                pending = 0;
            }
            if (alive)
            {
                choice[h] = ci;
                search(h + 1);
            }
        }
    };
    search(0);
    budget.charge(pending);
    return result;
}

inline std::vector<ChamberMap> enumerateAdmissible(const ChamberSpacePtr& space, std::size_t m)
{
    Budget budget(kDefaultCandidateBudget, "candidate-profile checks");
    return enumerateAdmissible(space, m, budget);
}

/** The 1-based i with f equal to projection onto slot i, if any. */
inline std::optional<std::size_t> classifyProjection(const ChamberMap& f)
{
    if (f.outputArity() != 1)
        throw ArityMismatch("projections are maps into Ch(A)");
    const ChamberSpace& space = *f.space();
    for (std::size_t i = 0; i < f.inputArity(); ++i)
    {
        bool match = true;
        for (std::size_t p = 0; p < f.profileCount() && match; ++p)
        {
            Profile profile = decodeProfile(space, f.inputArity(), p);
            match = (f.at(p)[0] == profile[i]);
        }
        if (match)
            return i + 1;
    }
    return std::nullopt;
}

/** Projection Ch^m -> Ch onto slot i (1-based). */
inline ChamberMap projectionMap(const ChamberSpacePtr& space, std::size_t m, std::size_t i)
{
    if (i < 1 || i > m)
        throw IndexOutOfRange("projection slot out of range");
    return ChamberMap::fromFunction(space, m, 1, [i](const Profile& p) { return Profile{p[i - 1]}; });
}

inline ChamberMap identityMap(const ChamberSpacePtr& space)
{
    return projectionMap(space, 1, 1);
}

/** c -> (c_1, ..., c_{i-1}, c, c_i, ..., c_{m-1}); context has m-1 chambers, 1 <= i <= m. */
inline ChamberMap rhoMap(const ChamberSpacePtr& space, std::size_t i, const Profile& context)
{
    const std::size_t m = context.size() + 1;
    if (i < 1 || i > m)
        throw IndexOutOfRange("insertion slot " + std::to_string(i) + " out of range 1.." + std::to_string(m));
    for (std::size_t c : context)
        if (c >= space->chamberCount())
            throw IndexOutOfRange("context chamber out of range");
    return ChamberMap::fromFunction(space, 1, m, [&](const Profile& p) {
        Profile out = context;
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(i - 1), p[0]);
        return out;
    });
}

/** Diagonal c -> (c, ..., c). */
inline ChamberMap deltaMap(const ChamberSpacePtr& space, std::size_t m)
{
    if (m == 0)
        throw PreconditionError("m must be at least 1");
    return ChamberMap::fromFunction(space, 1, m, [m](const Profile& p) { return Profile(m, p[0]); });
}

/** g o f. */
inline ChamberMap compose(const ChamberMap& g, const ChamberMap& f)
{
    detail::requireSameSpace(g.space(), f.space());
    if (f.outputArity() != g.inputArity())
        throw ArityMismatch("cannot compose: output arity " + std::to_string(f.outputArity()) +
                            " vs input arity " + std::to_string(g.inputArity()));
    std::vector<std::uint32_t> table;
    table.reserve(f.profileCount() * g.outputArity());
    for (std::size_t p = 0; p < f.profileCount(); ++p)
    {
        auto out = g.at(f.imageIndex(p));
        table.insert(table.end(), out.begin(), out.end());
    }
    return ChamberMap(f.space(), f.inputArity(), g.outputArity(), std::move(table));
}

/** Whether f is a bijection of Ch^m onto Ch^l (requires m = l). */
inline bool isBijective(const ChamberMap& f)
{
    if (f.inputArity() != f.outputArity())
        return false;
    std::vector<char> hit(f.profileCount(), 0);
    for (std::size_t p = 0; p < f.profileCount(); ++p)
    {
        std::size_t q = f.imageIndex(p);
        if (hit[q])
            return false;
        hit[q] = 1;
    }
    return true;
}

/* ------------------------------------------------------------------ */
/*                    IIA bijections and the metrics                    */
/* ------------------------------------------------------------------ */

/**
 * A self-map of Ch(A) acting by flipping the sides of a fixed set of
 * hyperplanes.  flips bit h set means phi_H is the swap on hyperplane h.
 */
struct IIABijection
{
    ChamberSpacePtr space;
    std::uint64_t flips = 0;

    bool isIdentity() const { return flips == 0; }
    std::size_t apply(std::size_t chamber) const { return space->indexOf(space->mask(chamber) ^ flips); }

    /** 'k' (keep) or 'f' (flip) per hyperplane. */
    std::string toString() const
    {
        std::string s(space->hyperplaneCount(), 'k');
        for (std::size_t h = 0; h < s.size(); ++h)
            if ((flips >> h) & 1)
                s[h] = 'f';
        return s;
    }

    ChamberMap toChamberMap() const
    {
        auto self = *this;
        return ChamberMap::fromFunction(space, 1, 1, [self](const Profile& p) { return Profile{self.apply(p[0])}; });
    }

    bool operator==(const IIABijection& other) const { return space == other.space && flips == other.flips; }
};

/**
 * All flip sets whose action maps the chamber set onto itself, in
 * increasing lexicographic order of the flip pattern.
 */
inline std::vector<IIABijection> iiaBijections(const ChamberSpacePtr& space)
{
    const std::size_t n = space->hyperplaneCount();
    if (n > 24)
        throw PreconditionError("IIA bijection scan supports at most 24 hyperplanes");
    std::vector<std::uint64_t> found;
    for (std::uint64_t flips = 0; flips < (std::uint64_t(1) << n); ++flips)
    {
        bool ok = true;
        for (const auto& c : space->chambers())
        {
            if (!space->isChamberMask(c.signs.mask() ^ flips))
            {
                ok = false;
                break;
            }
        }
        if (ok)
            found.push_back(flips);
    }
    std::sort(found.begin(), found.end(), [n](std::uint64_t a, std::uint64_t b) {
        return SignVector(n, a) < SignVector(n, b);
    });
    std::vector<IIABijection> out;
    for (std::uint64_t flips : found)
        out.push_back({space, flips});
    return out;
}

/**
 * View an IIA self-map of Ch(A) as a flip set, if every phi_H is the
 * identity or the swap.
 */
inline std::optional<IIABijection> asIIABijection(const ChamberMap& f)
{
    if (f.inputArity() != 1 || f.outputArity() != 1)
        return std::nullopt;
    auto fam = checkIIA(f);
    if (!fam)
        return std::nullopt;
    std::uint64_t flips = 0;
    for (std::size_t h = 0; h < fam->outputs.size(); ++h)
    {
        const auto& fn = fam->outputs[h];
        if (fn[0] == 0 && fn[1] == 1)
            continue;
        if (fn[0] == 1 && fn[1] == 0)
            flips |= std::uint64_t(1) << h;
        else
            return std::nullopt;
    }
    return IIABijection{f.space(), flips};
}

/** Number of hyperplanes on which the two flip sets differ. */
inline std::size_t hammingDistance(const IIABijection& f, const IIABijection& g)
{
    if (f.space != g.space && !(f.space->arrangement() == g.space->arrangement()))
        throw ArrangementMismatch("bijections over different arrangements");
    return static_cast<std::size_t>(std::popcount(f.flips ^ g.flips));
}

/**
 * Number of hyperplanes separating two profiles of equal length: those on
 * which the coordinatewise sign tuples differ.  Single chambers are
 * profiles of length one.
 */
inline std::size_t profileDistance(const Arrangement& arr, const std::vector<SignVector>& p,
                                   const std::vector<SignVector>& q)
{
    if (p.size() != q.size() || p.empty())
        throw ShapeMismatch("profiles must be nonempty and of equal length");
    std::uint64_t separating = 0;
    for (std::size_t j = 0; j < p.size(); ++j)
    {
        if (p[j].size() != arr.size() || q[j].size() != arr.size())
            throw ShapeMismatch("sign vector length differs from arrangement size");
        separating |= p[j].mask() ^ q[j].mask();
    }
    return static_cast<std::size_t>(std::popcount(separating));
}

inline std::size_t profileDistance(const ChamberSpace& space, const Profile& p, const Profile& q)
{
    if (p.size() != q.size() || p.empty())
        throw ShapeMismatch("profiles must be nonempty and of equal length");
    std::uint64_t separating = 0;
    for (std::size_t j = 0; j < p.size(); ++j)
        separating |= space.mask(p[j]) ^ space.mask(q[j]);
    return static_cast<std::size_t>(std::popcount(separating));
}

/**
 * Smallest Hamming distance from the identity to another IIA bijection,
 * or std::nullopt if the identity is the only one.
 */
inline std::optional<std::size_t> minDistanceFromId(const ChamberSpacePtr& space)
{
    std::optional<std::size_t> best;
    for (const auto& b : iiaBijections(space))
    {
        if (b.isIdentity())
            continue;
        std::size_t d = static_cast<std::size_t>(std::popcount(b.flips));
        if (!best || d < *best)
            best = d;
    }
    return best;
}

/**
 * Identity of indiscernibles, symmetry and the triangle inequality over
 * every pair and triple of points.
 */
template <typename Point, typename Distance>
bool satisfiesMetricAxioms(const std::vector<Point>& points, Distance dist)
{
    const std::size_t n = points.size();
    std::vector<std::size_t> d(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            d[a * n + b] = dist(points[a], points[b]);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
        {
            if ((d[a * n + b] == 0) != (a == b) || d[a * n + b] != d[b * n + a])
                return false;
            for (std::size_t c = 0; c < n; ++c)
                if (d[a * n + c] > d[a * n + b] + d[b * n + c])
                    return false;
        }
    return true;
}

struct NonExpandingReport
{
    bool all_bijections = true;      // every Phi o rho_{i0,c} is an IIA bijection
    bool non_expanding = true;
    std::size_t pairs_checked = 0;
    std::optional<std::pair<Profile, Profile> > violation;
};

/**
 * Check that context -> Phi o rho_{i0, context} is distance non-increasing
 * from (Ch^{m-1}, separation count) to (IIA bijections, Hamming distance).
 */
inline NonExpandingReport checkNonExpanding(const ChamberMap& phi, std::size_t i0)
{
    if (phi.outputArity() != 1)
        throw ArityMismatch("Phi must map into Ch(A)");
    const auto& space = phi.space();
    const std::size_t m = phi.inputArity();
    if (i0 < 1 || i0 > m)
        throw IndexOutOfRange("dictator slot out of range");
    const std::size_t contexts = m == 1 ? 1 : profileCount(*space, m - 1);

    NonExpandingReport report;
    std::vector<std::optional<IIABijection> > images;
    std::vector<Profile> ctx;
    for (std::size_t k = 0; k < contexts; ++k)
    {
        Profile c = m == 1 ? Profile{} : decodeProfile(*space, m - 1, k);
        images.push_back(asIIABijection(compose(phi, rhoMap(space, i0, c))));
        if (!images.back())
            report.all_bijections = false;
        ctx.push_back(std::move(c));
    }
    if (!report.all_bijections)
    {
        report.non_expanding = false;
        return report;
    }
    for (std::size_t a = 0; a < contexts; ++a)
    {
        for (std::size_t b = a + 1; b < contexts; ++b)
        {
            ++report.pairs_checked;
            std::size_t image_distance = hammingDistance(*images[a], *images[b]);
            if (image_distance > profileDistance(*space, ctx[a], ctx[b]))
            {
                report.non_expanding = false;
                if (!report.violation)
                    report.violation = std::make_pair(ctx[a], ctx[b]);
            }
        }
    }
    return report;
}

}   // namespace arrtop

#endif
