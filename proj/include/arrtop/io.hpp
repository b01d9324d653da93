/**
 * Reading arrangements from JSON text and built-in names, and JSON
 * encodings of per-hyperplane families.
 *
 * File format:
 *   { "dim": 3, "hyperplanes": [["1","-1","0"], ["1","0","-1"], ["0","1","-1"]] }
 * Entries are JSON integers or strings holding an integer or "p/q".
 * Floating-point numbers are rejected.
 */

#ifndef ARRTOP_IO_HPP
#define ARRTOP_IO_HPP

#include <cctype>
#include <cstddef>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>
#include <json.hpp>
#include "arrangement.hpp"
#include "errors.hpp"
#include "rational.hpp"
#include "social_choice.hpp"

namespace arrtop {

struct SourceLocation
{
    std::size_t line = 1;
    std::size_t column = 1;
};

inline SourceLocation locate(std::string_view text, std::size_t offset)
{
    SourceLocation loc;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i)
    {
        if (text[i] == '\n')
        {
            ++loc.line;
            loc.column = 1;
        }
        else
        {
            ++loc.column;
        }
    }
    return loc;
}

/** Raw contents of an arrangement file, with the location of every row and entry. */
struct ArrangementFile
{
    std::size_t dim = 0;
    std::vector<RationalVector> rows;
    std::vector<SourceLocation> row_locations;
    std::vector<std::vector<SourceLocation> > entry_locations;
};

namespace detail {

/** Character iterator that publishes how far the parser has read. */
class CountingIterator
{
    private:
        const char* p_ = nullptr;
        const char** sink_ = nullptr;

    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = char;
        using difference_type = std::ptrdiff_t;
        using pointer = const char*;
        using reference = const char&;

        CountingIterator() = default;
        CountingIterator(const char* p, const char** sink) : p_(p), sink_(sink) {}

        reference operator*() const { return *p_; }
        CountingIterator& operator++()
        {
            ++p_;
            if (sink_ && p_ > *sink_)
                *sink_ = p_;
            return *this;
        }
        CountingIterator operator++(int)
        {
            auto old = *this;
            ++*this;
            return old;
        }
        bool operator==(const CountingIterator& o) const { return p_ == o.p_; }
        bool operator!=(const CountingIterator& o) const { return p_ != o.p_; }
};

/**
 * Records the start offset of every array opened at depth 2 inside
 * "hyperplanes" and of every scalar inside those arrays.
 */
class LocationRecorder : public nlohmann::json_sax<nlohmann::json>
{
    private:
        std::string_view text_;
        const char* const* cursor_;
        std::vector<int> kinds_;         // 0 object, 1 array
        std::string last_key_;
        bool in_hyperplanes_ = false;
        std::size_t hyperplanes_depth_ = 0;

        std::size_t consumed() const { return static_cast<std::size_t>(*cursor_ - text_.data()); }

        // start of the scalar token that ends at or before the read position
        std::size_t scalarStart() const
        {
            std::size_t p = consumed();
            auto delim = [](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == ']' || c == '}' || c == ':'; };
            while (p > 0 && delim(text_[p - 1]))
                --p;
            if (p > 0 && text_[p - 1] == '"')
            {
                --p;
                while (p > 0 && !(text_[p - 1] == '"' && (p < 2 || text_[p - 2] != '\\')))
                    --p;
                return p > 0 ? p - 1 : 0;
            }
            while (p > 0 && !delim(text_[p - 1]) && text_[p - 1] != '[')
                --p;
            return p;
        }

        void scalar()
        {
            if (in_hyperplanes_ && kinds_.size() == hyperplanes_depth_ + 1)
                entries.back().push_back(scalarStart());
        }

    public:
        std::vector<std::size_t> rows;
        std::vector<std::vector<std::size_t> > entries;

        LocationRecorder(std::string_view text, const char* const* cursor) : text_(text), cursor_(cursor) {}

        bool null() override { scalar(); return true; }
        bool boolean(bool) override { scalar(); return true; }
        bool number_integer(number_integer_t) override { scalar(); return true; }
        bool number_unsigned(number_unsigned_t) override { scalar(); return true; }
        bool number_float(number_float_t, const string_t&) override { scalar(); return true; }
        bool string(string_t&) override { scalar(); return true; }
        bool binary(binary_t&) override { return true; }
        bool start_object(std::size_t) override
        {
            kinds_.push_back(0);
            return true;
        }
        bool key(string_t& k) override
        {
            last_key_ = k;
            return true;
        }
        bool end_object() override
        {
            kinds_.pop_back();
            return true;
        }
        bool start_array(std::size_t) override
        {
            if (kinds_.size() == 1 && kinds_[0] == 0 && last_key_ == "hyperplanes" && !in_hyperplanes_)
            {
                in_hyperplanes_ = true;
                hyperplanes_depth_ = 2;
            }
            else if (in_hyperplanes_ && kinds_.size() == hyperplanes_depth_)
            {
                rows.push_back(consumed() - 1);
                entries.emplace_back();
            }
            kinds_.push_back(1);
            return true;
        }
        bool end_array() override
        {
            kinds_.pop_back();
            if (in_hyperplanes_ && kinds_.size() + 1 == hyperplanes_depth_)
                in_hyperplanes_ = false;
            return true;
        }
        bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override
        {
            return false;
        }
};

inline std::optional<Rational> entryValue(const nlohmann::json& v)
{
    if (v.is_number_integer())
        return v.is_number_unsigned() ? Rational(BigInt(v.get<std::uint64_t>())) : Rational(BigInt(v.get<std::int64_t>()));
    if (v.is_string())
        return parseRational(v.get<std::string>());
    return std::nullopt;
}

}   // namespace detail

/**
 * Parse arrangement text without normalizing it.
 *
 * @throws ParseError for malformed JSON, missing keys or bad entries,
 *         DimensionMismatch (with the row location in the message) for a
 *         row of the wrong length.
 */
inline ArrangementFile readArrangementFile(std::string_view text)
{
    nlohmann::json doc;
    try
    {
        doc = nlohmann::json::parse(text.begin(), text.end());
    }
    catch (const nlohmann::json::parse_error& e)
    {
        auto loc = locate(text, e.byte > 0 ? e.byte - 1 : 0);
        std::string msg = e.what();
        auto colon = msg.find(": ", msg.find("parse error"));
        throw ParseError("invalid JSON" + (colon == std::string::npos ? std::string() : msg.substr(colon)), loc.line, loc.column);
    }

    const char* cursor = text.data();
    detail::LocationRecorder rec(text, &cursor);
    nlohmann::json::sax_parse(detail::CountingIterator(text.data(), &cursor),
                              detail::CountingIterator(text.data() + text.size(), &cursor), &rec);

    if (!doc.is_object())
        throw ParseError("top level must be an object with keys \"dim\" and \"hyperplanes\"", 1, 1);
    if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<std::int64_t>() < 1)
        throw ParseError("\"dim\" must be a positive integer", 1, 1);
    if (!doc.contains("hyperplanes") || !doc["hyperplanes"].is_array())
        throw ParseError("\"hyperplanes\" must be an array of rows", 1, 1);

    ArrangementFile file;
    file.dim = doc["dim"].get<std::size_t>();
    const auto& rows = doc["hyperplanes"];
    for (std::size_t i = 0; i < rows.size(); ++i)
    {
        const auto& row = rows[i];
        SourceLocation row_loc = i < rec.rows.size() ? locate(text, rec.rows[i]) : SourceLocation{};
        if (!row.is_array())
            throw ParseError("hyperplane row " + std::to_string(i) + " is not an array", row_loc.line, row_loc.column);
        RationalVector v;
        std::vector<SourceLocation> locs;
        for (std::size_t j = 0; j < row.size(); ++j)
        {
            SourceLocation loc = (i < rec.entries.size() && j < rec.entries[i].size())
                ? locate(text, rec.entries[i][j]) : row_loc;
            auto value = detail::entryValue(row[j]);
            if (!value)
                throw ParseError("entry " + std::to_string(j) + " of row " + std::to_string(i) +
                                 " must be an integer or a \"p/q\" string", loc.line, loc.column);
            v.push_back(std::move(*value));
            locs.push_back(loc);
        }
        if (v.size() != file.dim)
            throw DimensionMismatch("row " + std::to_string(i) + " (line " + std::to_string(row_loc.line) +
                                    ", column " + std::to_string(row_loc.column) + ") has " +
                                    std::to_string(v.size()) + " entries, expected " + std::to_string(file.dim));
        file.rows.push_back(std::move(v));
        file.row_locations.push_back(row_loc);
        file.entry_locations.push_back(std::move(locs));
    }
    return file;
}

inline Arrangement parseArrangement(std::string_view text)
{
    ArrangementFile file = readArrangementFile(text);
    return normalizeArrangement(file.dim, file.rows);
}

/** "braid-N" or "boolean-N" (case-insensitive), if the name is one. */
inline std::optional<Arrangement> builtinArrangement(std::string_view name)
{
    std::string lower(name);
    for (auto& ch : lower)
        ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    for (std::string prefix : {"braid-", "boolean-"})
    {
        if (lower.rfind(prefix, 0) != 0)
            continue;
        std::string digits = lower.substr(prefix.size());
        if (digits.empty() || digits.size() > 3 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
            return std::nullopt;
        std::size_t n = std::stoul(digits);
        return prefix == "braid-" ? braidArrangement(n) : booleanArrangement(n);
    }
    return std::nullopt;
}

inline std::string readTextFile(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/* ------------------------------------------------------------------ */
/*                            Family JSON                               */
/* ------------------------------------------------------------------ */

/**
 * One JSON object per hyperplane mapping each input sign string (one sign
 * per voter) to the output sign string.
 */
inline nlohmann::json familyToJson(const PerHyperplaneFamily& fam)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& fn : fam.outputs)
    {
        nlohmann::json table = nlohmann::json::object();
        for (std::uint32_t key = 0; key < fn.size(); ++key)
            table[keyToString(key, fam.m)] = keyToString(fn[key], fam.l);
        out.push_back(std::move(table));
    }
    return out;
}

inline std::optional<std::uint32_t> signStringToKey(const std::string& s, std::size_t width)
{
    if (s.size() != width)
        return std::nullopt;
    std::uint32_t key = 0;
    for (std::size_t j = 0; j < width; ++j)
    {
        if (s[j] == '-')
            key |= std::uint32_t(1) << j;
        else if (s[j] != '+')
            return std::nullopt;
    }
    return key;
}

/** Inverse of familyToJson; every table must be total on {+,-}^m. */
inline PerHyperplaneFamily familyFromJson(const nlohmann::json& j, std::size_t m, std::size_t l)
{
    if (!j.is_array())
        throw ShapeMismatch("family must be an array of per-hyperplane tables");
    PerHyperplaneFamily fam{m, l, {}};
    for (const auto& table : j)
    {
        if (!table.is_object() || table.size() != (std::size_t(1) << m))
            throw ShapeMismatch("each table must list all 2^m input sign strings");
        std::vector<std::uint32_t> fn(std::size_t(1) << m, 0);
        for (const auto& [k, v] : table.items())
        {
            auto in = signStringToKey(k, m);
            auto out = v.is_string() ? signStringToKey(v.get<std::string>(), l) : std::nullopt;
            if (!in || !out)
                throw ShapeMismatch("bad sign string in family table");
            fn[*in] = *out;
        }
        fam.outputs.push_back(std::move(fn));
    }
    return fam;
}

}   // namespace arrtop

#endif
