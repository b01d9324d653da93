/**
 * Exact rational and big-integer scalars, plus the small amount of exact
 * linear algebra the arrangement code needs (rank, primitive scaling).
 *
 * Rationals are GMP-backed boost::multiprecision numbers; they are always
 * kept in lowest terms with a positive denominator.
 */

#ifndef ARRTOP_RATIONAL_HPP
#define ARRTOP_RATIONAL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>
#include <boost/multiprecision/gmp.hpp>

namespace arrtop {

using BigInt   = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using RationalVector = std::vector<Rational>;

/**
 * Parse an integer ("-3") or a fraction ("4/6") into a reduced rational.
 *
 * @param text Input text, no surrounding whitespace.
 * @returns The rational, or std::nullopt on malformed input or zero
 *          denominator.
 */
inline std::optional<Rational> parseRational(std::string_view text)
{
    auto is_integer = [](std::string_view s) {
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (start == s.size())
            return false;
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                return false;
        return true;
    };
    auto to_bigint = [](std::string_view s) {
        if (!s.empty() && s[0] == '+')
            s.remove_prefix(1);
        return BigInt(std::string(s));
    };

    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos)
    {
        if (!is_integer(text))
            return std::nullopt;
        return Rational(to_bigint(text));
    }
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!is_integer(num) || !is_integer(den))
        return std::nullopt;
    BigInt d = to_bigint(den);
    if (d == 0)
        return std::nullopt;
    return Rational(to_bigint(num), d);   // canonicalized by GMP
}

inline std::string toString(const Rational& q)
{
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline int sign(const Rational& q)
{
    return q.sign();
}

inline Rational dot(const RationalVector& a, const RationalVector& b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero())
            s += a[i] * b[i];
    return s;
}

inline bool isZeroVector(const RationalVector& v)
{
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

/**
 * Scale a nonzero vector by a positive rational so that its entries are
 * coprime integers.  The sign pattern is preserved.
 */
inline RationalVector primitiveScaling(const RationalVector& v)
{
    BigInt l = 1;
    for (const auto& x : v)
        if (!x.is_zero())
            l = boost::multiprecision::lcm(l, BigInt(denominator(x)));
    BigInt g = 0;
    std::vector<BigInt> ints(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
    {
        ints[i] = BigInt(numerator(v[i])) * (l / BigInt(denominator(v[i])));
        g = boost::multiprecision::gcd(g, ints[i]);
    }
    RationalVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = (g == 0) ? Rational(0) : Rational(ints[i] / g);
    return out;
}

/**
 * Canonical representative of the line spanned by v: primitive integer
 * entries with first nonzero entry positive.  Proportional vectors map to
 * the same representative.
 */
inline RationalVector canonicalDirection(const RationalVector& v)
{
    RationalVector out = primitiveScaling(v);
    for (const auto& x : out)
    {
        if (x.is_zero())
            continue;
        if (x.sign() < 0)
            for (auto& y : out)
                y = -y;
        break;
    }
    return out;
}

/**
 * Rank of a list of rational vectors (all of the same length) by Gaussian
 * elimination.
 */
inline std::size_t rankOf(std::vector<RationalVector> rows)
{
    if (rows.empty())
        return 0;
    const std::size_t ncols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col)
    {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero())
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r)
        {
            if (rows[r][col].is_zero())
                continue;
            Rational factor = rows[r][col] / rows[rank][col];
            for (std::size_t c = col; c < ncols; ++c)
                rows[r][c] -= factor * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

}   // namespace arrtop

#endif
