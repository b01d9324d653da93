#ifndef ARRTOP_BUDGET_HPP
#define ARRTOP_BUDGET_HPP

#include <cstdint>
#include <string>
#include "errors.hpp"

namespace arrtop {

inline constexpr std::uint64_t kDefaultCandidateBudget = 100'000'000;
inline constexpr std::uint64_t kDefaultSimplexBudget   = 1'000'000;

/**
 * Work counter for exponential searches.  Exceeding the limit throws
 * BudgetExceeded; results are never silently truncated.
 */
class Budget
{
    private:
        std::string what_;
        std::uint64_t limit_;
        std::uint64_t used_ = 0;

    public:
        explicit Budget(std::uint64_t limit, std::string what = "work")
            : what_(std::move(what)), limit_(limit) {}

        std::uint64_t limit() const { return limit_; }
        std::uint64_t used() const { return used_; }
        const std::string& what() const { return what_; }

        void charge(std::uint64_t amount)
        {
            if (amount > limit_ || used_ > limit_ - amount)
                throw BudgetExceeded(what_, used_ + amount, limit_);
            used_ += amount;
        }

        /** Fail up front if a projected amount would not fit. */
        void require(std::uint64_t projected) const
        {
            if (projected > limit_)
                throw BudgetExceeded(what_, projected, limit_);
        }
};

}   // namespace arrtop

#endif
