/**
 * Sign vectors, the realizability oracle and chamber enumeration.
 *
 * A chamber is identified with its total sign vector; a partial sign
 * assignment is realizable iff the open cone it describes is nonempty,
 * which by homogeneity is the feasibility of s_i <a_i, x> >= 1.
 */

#ifndef ARRTOP_CHAMBERS_HPP
#define ARRTOP_CHAMBERS_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>
#include "arrangement.hpp"
#include "errors.hpp"
#include "feasibility.hpp"
#include "rational.hpp"

namespace arrtop {

enum class Sign : std::uint8_t { Plus = 0, Minus = 1 };

inline char signChar(Sign s) { return s == Sign::Plus ? '+' : '-'; }
inline Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

/** Largest arrangement size handled by the bitmask sign representation. */
inline constexpr std::size_t kMaxHyperplanes = 64;

/**
 * Total sign assignment on n hyperplanes, packed as a bitmask where bit i
 * set means hyperplane i is negative.  Ordered lexicographically by
 * hyperplane index with + < -.
 */
class SignVector
{
    private:
        std::size_t size_ = 0;
        std::uint64_t minus_ = 0;

    public:
        SignVector() = default;
        SignVector(std::size_t size, std::uint64_t minus_mask) : size_(size), minus_(minus_mask)
        {
            if (size > kMaxHyperplanes)
                throw PreconditionError("sign vectors support at most 64 hyperplanes");
            if (size < kMaxHyperplanes)
                minus_ &= (std::uint64_t(1) << size) - 1;
        }

        static SignVector fromString(std::string_view text)
        {
            std::uint64_t mask = 0;
            for (std::size_t i = 0; i < text.size(); ++i)
            {
                if (text[i] == '-')
                    mask |= std::uint64_t(1) << i;
                else if (text[i] != '+')
                    throw PreconditionError("sign strings use only '+' and '-'");
            }
            return SignVector(text.size(), mask);
        }

        std::size_t size() const { return size_; }
        std::uint64_t mask() const { return minus_; }
        Sign operator[](std::size_t i) const { return ((minus_ >> i) & 1) ? Sign::Minus : Sign::Plus; }

        SignVector negated() const { return SignVector(size_, ~minus_); }
        SignVector flipped(std::uint64_t flips) const { return SignVector(size_, minus_ ^ flips); }

        std::string toString() const
        {
            std::string s(size_, '+');
            for (std::size_t i = 0; i < size_; ++i)
                s[i] = signChar((*this)[i]);
            return s;
        }

        bool operator==(const SignVector&) const = default;
        std::strong_ordering operator<=>(const SignVector& other) const
        {
            if (size_ != other.size_)
                return size_ <=> other.size_;
            std::uint64_t diff = minus_ ^ other.minus_;
            if (diff == 0)
                return std::strong_ordering::equal;
            std::uint64_t lowest = diff & (~diff + 1);
            return (minus_ & lowest) ? std::strong_ordering::greater : std::strong_ordering::less;
        }
};

/** Signs on a subset of the hyperplanes. */
using PartialSigns = std::map<std::size_t, Sign>;

struct Chamber
{
    SignVector signs;
    RationalVector witness;
};

namespace detail {

/**
 * Feasibility of the sign pattern given by (assigned, minus) bitmasks;
 * returns a witness x with s_i <a_i, x> >= 1 on every assigned index.
 */
inline std::optional<RationalVector> solveSignPattern(const Arrangement& arr, std::uint64_t assigned,
                                                      std::uint64_t minus)
{
    std::vector<Inequality> system;
    for (std::size_t i = 0; i < arr.size(); ++i)
    {
        if (!((assigned >> i) & 1))
            continue;
        Inequality row{arr.normal(i), Rational(1)};
        if ((minus >> i) & 1)
            for (auto& c : row.coeffs)
                c = -c;
        system.push_back(std::move(row));
    }
    return solveInequalities(std::move(system), arr.dim());
}

inline void checkArrangementSize(const Arrangement& arr)
{
    if (arr.size() > kMaxHyperplanes)
        throw PreconditionError("at most 64 hyperplanes are supported");
}

}   // namespace detail

/**
 * Whether some point lies strictly on the prescribed side of every
 * hyperplane in the partial assignment.
 */
inline bool signFeasible(const Arrangement& arr, const PartialSigns& partial)
{
    detail::checkArrangementSize(arr);
    std::uint64_t assigned = 0, minus = 0;
    for (const auto& [index, sign] : partial)
    {
        if (index >= arr.size())
            throw IndexOutOfRange("hyperplane index " + std::to_string(index) + " out of range");
        assigned |= std::uint64_t(1) << index;
        if (sign == Sign::Minus)
            minus |= std::uint64_t(1) << index;
    }
    return detail::solveSignPattern(arr, assigned, minus).has_value();
}

/** Whether a total sign vector is the sign vector of a chamber. */
inline bool isChamber(const Arrangement& arr, const SignVector& signs)
{
    detail::checkArrangementSize(arr);
    if (signs.size() != arr.size())
        throw ShapeMismatch("sign vector length differs from arrangement size");
    std::uint64_t all = arr.size() == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << arr.size()) - 1;
    return detail::solveSignPattern(arr, all, signs.mask()).has_value();
}

/**
 * All chambers in lexicographic sign order, found by depth-first search over
 * hyperplanes in index order with pruning of infeasible partial assignments.
 */
inline std::vector<Chamber> enumerateChambers(const Arrangement& arr)
{
    detail::checkArrangementSize(arr);
    const std::size_t n = arr.size();
    std::vector<Chamber> chambers;

    // Iterative DFS; + is tried before - so output is lexicographic
    struct Frame { std::size_t depth; std::uint64_t minus; };
    std::vector<Frame> stack{{0, 0}};
    while (!stack.empty())
    {
        Frame f = stack.back();
        stack.pop_back();
        std::uint64_t assigned = f.depth == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << f.depth) - 1;
        auto witness = detail::solveSignPattern(arr, assigned, f.minus);
        if (!witness)
            continue;
        if (f.depth == n)
        {
            chambers.push_back({SignVector(n, f.minus), std::move(*witness)});
            continue;
        }
        stack.push_back({f.depth + 1, f.minus | (std::uint64_t(1) << f.depth)});
        stack.push_back({f.depth + 1, f.minus});
    }
    return chambers;
}

/**
 * Chambers found by testing every one of the 2^n total sign vectors
 * independently.  Exponential; intended for cross-checking.
 */
inline std::vector<SignVector> enumerateChambersExhaustive(const Arrangement& arr)
{
    const std::size_t n = arr.size();
    if (n > 24)
        throw PreconditionError("exhaustive enumeration supports at most 24 hyperplanes");
    std::vector<SignVector> out;
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << n); ++m)
    {
        // enumerate in lexicographic order: bit i of the counter maps to
        // hyperplane n-1-i
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < n; ++i)
            if ((m >> i) & 1)
                mask |= std::uint64_t(1) << (n - 1 - i);
        SignVector s(n, mask);
        if (isChamber(arr, s))
            out.push_back(s);
    }
    return out;
}

/** Side of hyperplane h containing chamber c. */
inline Sign epsilon(const Arrangement& arr, std::size_t h, const Chamber& c)
{
    if (h >= arr.size())
        throw IndexOutOfRange("hyperplane index " + std::to_string(h) + " out of range");
    return c.signs[h];
}

/**
 * An arrangement together with its enumerated chambers and a fast
 * sign-vector -> chamber-index lookup.  Shared immutably by the
 * social-choice and complex builders.
 */
class ChamberSpace
{
    private:
        Arrangement arr_;
        std::vector<Chamber> chambers_;
        std::vector<std::int32_t> dense_index_;            // used when n <= 20
        std::unordered_map<std::uint64_t, std::size_t> sparse_index_;

    public:
        static constexpr std::size_t npos = static_cast<std::size_t>(-1);

        explicit ChamberSpace(Arrangement arr)
            : arr_(std::move(arr)), chambers_(enumerateChambers(arr_))
        {
            if (arr_.size() <= 20)
            {
                dense_index_.assign(std::size_t(1) << arr_.size(), -1);
                for (std::size_t i = 0; i < chambers_.size(); ++i)
                    dense_index_[chambers_[i].signs.mask()] = static_cast<std::int32_t>(i);
            }
            else
            {
                for (std::size_t i = 0; i < chambers_.size(); ++i)
                    sparse_index_.emplace(chambers_[i].signs.mask(), i);
            }
        }

        const Arrangement& arrangement() const { return arr_; }
        std::size_t hyperplaneCount() const { return arr_.size(); }
        std::size_t chamberCount() const { return chambers_.size(); }
        const std::vector<Chamber>& chambers() const { return chambers_; }
        const Chamber& chamber(std::size_t i) const { return chambers_.at(i); }
        std::uint64_t mask(std::size_t i) const { return chambers_[i].signs.mask(); }
        Sign sign(std::size_t chamber, std::size_t h) const { return chambers_[chamber].signs[h]; }

        /** Chamber index of a sign mask, or npos if the mask is not realizable. */
        std::size_t indexOf(std::uint64_t mask) const
        {
            if (!dense_index_.empty())
            {
                std::int32_t i = dense_index_[mask];
                return i < 0 ? npos : static_cast<std::size_t>(i);
            }
            auto it = sparse_index_.find(mask);
            return it == sparse_index_.end() ? npos : it->second;
        }
        std::size_t indexOf(const SignVector& s) const
        {
            if (s.size() != arr_.size())
                throw ShapeMismatch("sign vector length differs from arrangement size");
            return indexOf(s.mask());
        }
        bool isChamberMask(std::uint64_t mask) const { return indexOf(mask) != npos; }
};

using ChamberSpacePtr = std::shared_ptr<const ChamberSpace>;

inline ChamberSpacePtr makeChamberSpace(Arrangement arr)
{
    return std::make_shared<const ChamberSpace>(std::move(arr));
}

}   // namespace arrtop

#endif
