/**
 * Exact feasibility of systems of non-strict linear inequalities
 * a_i . x >= b_i over the rationals, decided by Fourier-Motzkin elimination.
 *
 * When the system is feasible a witness point is recovered by
 * back-substitution through the stored elimination stages.
 */

#ifndef ARRTOP_FEASIBILITY_HPP
#define ARRTOP_FEASIBILITY_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>
#include "rational.hpp"

namespace arrtop {

/** One constraint coeffs . x >= bound. */
struct Inequality
{
    RationalVector coeffs;
    Rational bound;
};

namespace detail {

/**
 * Scale every row to primitive integer coefficients, drop trivial rows and
 * keep only the tightest bound among rows with identical coefficients.
 *
 * @returns false if some row reads 0 >= b with b > 0.
 */
inline bool pruneSystem(std::vector<Inequality>& system)
{
    std::map<RationalVector, Rational> tightest;
    for (auto& row : system)
    {
        if (isZeroVector(row.coeffs))
        {
            if (row.bound.sign() > 0)
                return false;
            continue;
        }
        RationalVector scaled = primitiveScaling(row.coeffs);
        // primitiveScaling multiplies by a positive factor; recover it from
        // any nonzero coordinate
        std::size_t k = 0;
        while (row.coeffs[k].is_zero())
            ++k;
        Rational factor = scaled[k] / row.coeffs[k];
        Rational bound = row.bound * factor;
        auto it = tightest.find(scaled);
        if (it == tightest.end())
            tightest.emplace(std::move(scaled), std::move(bound));
        else if (bound > it->second)
            it->second = std::move(bound);
    }
    system.clear();
    for (auto& [coeffs, bound] : tightest)
        system.push_back({coeffs, bound});
    return true;
}

}   // namespace detail

/**
 * Decide whether { x : coeffs_i . x >= bound_i for all i } is nonempty.
 *
 * @param system Constraints; every coefficient vector must have length dim.
 * @param dim Number of variables.
 * @returns A witness point if the system is feasible, std::nullopt otherwise.
 */
inline std::optional<RationalVector> solveInequalities(std::vector<Inequality> system, std::size_t dim)
{
    if (!detail::pruneSystem(system))
        return std::nullopt;

    // stages[k] is the system just before eliminating order[k]
    std::vector<std::vector<Inequality> > stages;
    std::vector<std::size_t> order;
    std::vector<bool> eliminated(dim, false);

    while (!system.empty())
    {
        // Pick the variable whose elimination creates the fewest new rows
        std::size_t best = dim;
        long best_cost = 0;
        for (std::size_t v = 0; v < dim; ++v)
        {
            if (eliminated[v])
                continue;
            long pos = 0, neg = 0;
            for (const auto& row : system)
            {
                int s = row.coeffs[v].sign();
                pos += (s > 0);
                neg += (s < 0);
            }
            if (pos + neg == 0)
                continue;
            long cost = pos * neg - pos - neg;
            if (best == dim || cost < best_cost)
            {
                best = v;
                best_cost = cost;
            }
        }
        if (best == dim)
            break;   // no variable left with a nonzero coefficient

        std::vector<Inequality> next, lower, upper;
        for (const auto& row : system)
        {
            int s = row.coeffs[best].sign();
            if (s > 0)
                lower.push_back(row);
            else if (s < 0)
                upper.push_back(row);
            else
                next.push_back(row);
        }
        for (const auto& p : lower)
        {
            for (const auto& q : upper)
            {
                const Rational a = p.coeffs[best];
                const Rational c = -q.coeffs[best];
                Inequality combined{RationalVector(dim), c * p.bound + a * q.bound};
                for (std::size_t v = 0; v < dim; ++v)
                    combined.coeffs[v] = c * p.coeffs[v] + a * q.coeffs[v];
                combined.coeffs[best] = 0;
                next.push_back(std::move(combined));
            }
        }
        stages.push_back(std::move(system));
        order.push_back(best);
        eliminated[best] = true;
        system = std::move(next);
        if (!detail::pruneSystem(system))
            return std::nullopt;
    }

    // Back-substitute in reverse elimination order
    RationalVector x(dim, Rational(0));
    for (std::size_t k = order.size(); k-- > 0; )
    {
        const std::size_t v = order[k];
        std::optional<Rational> lo, hi;
        for (const auto& row : stages[k])
        {
            const Rational& a = row.coeffs[v];
            if (a.is_zero())
                continue;
            Rational rest = 0;
            for (std::size_t u = 0; u < dim; ++u)
                if (u != v && !row.coeffs[u].is_zero())
                    rest += row.coeffs[u] * x[u];
            Rational limit = (row.bound - rest) / a;
            if (a.sign() > 0)
            {
                if (!lo || limit > *lo)
                    lo = limit;
            }
            else if (!hi || limit < *hi)
            {
                hi = limit;
            }
        }
        if (lo && lo->sign() > 0)
            x[v] = *lo;
        else if (hi && hi->sign() < 0)
            x[v] = *hi;
        else
            x[v] = 0;
    }
    return x;
}

}   // namespace arrtop

#endif
