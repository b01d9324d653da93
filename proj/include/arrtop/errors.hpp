/**
 * Exception types shared by every arrtop module.
 *
 * Every error thrown by the library derives from arrtop::Error, so callers
 * that only care about "something went wrong" can catch a single type.
 */

#ifndef ARRTOP_ERRORS_HPP
#define ARRTOP_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace arrtop {

class Error : public std::runtime_error
{
    public:
        explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/** A hyperplane was given by the zero vector. */
class ZeroNormal : public Error
{
    public:
        std::size_t index;
        explicit ZeroNormal(std::size_t index)
            : Error("normal vector " + std::to_string(index) + " is zero"), index(index) {}
};

/** Two normals are proportional, so they describe the same hyperplane. */
class DuplicateHyperplane : public Error
{
    public:
        std::size_t first, second;
        DuplicateHyperplane(std::size_t first, std::size_t second)
            : Error("hyperplanes " + std::to_string(first) + " and " + std::to_string(second) +
                    " coincide (proportional normals)"),
              first(first), second(second) {}
};

class DimensionMismatch : public Error
{
    public:
        explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class IndexOutOfRange : public Error
{
    public:
        explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

/** An exhaustive computation would exceed its configured work limit. */
class BudgetExceeded : public Error
{
    public:
        std::uint64_t count;
        std::uint64_t limit;
        BudgetExceeded(const std::string& what, std::uint64_t count, std::uint64_t limit)
            : Error(what + ": " + std::to_string(count) + " exceeds limit " + std::to_string(limit)),
              count(count), limit(limit) {}
};

class ArityMismatch : public Error
{
    public:
        explicit ArityMismatch(const std::string& what) : Error(what) {}
};

class ArrangementMismatch : public Error
{
    public:
        explicit ArrangementMismatch(const std::string& what) : Error(what) {}
};

class ShapeMismatch : public Error
{
    public:
        explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

class EmptyInput : public Error
{
    public:
        explicit EmptyInput(const std::string& what) : Error(what) {}
};

class NonPureComplex : public Error
{
    public:
        explicit NonPureComplex(const std::string& what) : Error(what) {}
};

class NotIIA : public Error
{
    public:
        explicit NotIIA(const std::string& what) : Error(what) {}
};

class NotSimplicial : public Error
{
    public:
        explicit NotSimplicial(const std::string& what) : Error(what) {}
};

class NotSphereLike : public Error
{
    public:
        explicit NotSphereLike(const std::string& what) : Error(what) {}
};

class RankTooLow : public Error
{
    public:
        explicit RankTooLow(const std::string& what) : Error(what) {}
};

/** A documented precondition of an operation does not hold. */
class PreconditionError : public Error
{
    public:
        explicit PreconditionError(const std::string& what) : Error(what) {}
};

/** Input text could not be parsed; line and column are 1-based. */
class ParseError : public Error
{
    public:
        std::size_t line, column;
        ParseError(const std::string& what, std::size_t line, std::size_t column)
            : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
              line(line), column(column) {}
};

/** Fixed-width integer arithmetic overflowed (internal; callers retry with big integers). */
class ArithmeticOverflow : public Error
{
    public:
        ArithmeticOverflow() : Error("integer overflow") {}
};

}   // namespace arrtop

#endif
