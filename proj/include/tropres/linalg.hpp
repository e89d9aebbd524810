#pragma once

/**
 * Exact rank computations for small dense integer matrices: fraction-free
 * elimination over the rationals and modular elimination over prime fields.
 */

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace tropres {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/** Coefficient field: the rationals (characteristic 0) or F_p. */
class Field
{
    public:
        static Field rationals() { return Field(0); }

        static Field prime(std::uint32_t p)
        {
            if (p < 2)
                throw PreconditionError("field characteristic must be 0 or a prime");
            for (std::uint32_t q = 2; q * q <= p; ++q)
                if (p % q == 0)
                    throw PreconditionError(std::to_string(p) + " is not prime");
            return Field(p);
        }

        std::uint32_t characteristic() const { return p_; }
        std::string name() const { return p_ == 0 ? "QQ" : "GF(" + std::to_string(p_) + ")"; }

        bool operator==(const Field&) const = default;

    private:
        explicit Field(std::uint32_t p) : p_(p) {}
        std::uint32_t p_ = 0;
};

namespace detail {

inline bool checked_mul(std::int64_t a, std::int64_t b, std::int64_t& out) { return !__builtin_mul_overflow(a, b, &out); }
inline bool checked_sub(std::int64_t a, std::int64_t b, std::int64_t& out) { return !__builtin_sub_overflow(a, b, &out); }
inline bool checked_mul(const Integer& a, const Integer& b, Integer& out) { out = a * b; return true; }
inline bool checked_sub(const Integer& a, const Integer& b, Integer& out) { out = a - b; return true; }

/**
 * Bareiss fraction-free row echelon form.  Every intermediate entry is a
 * minor of the input, so the divisions are exact.  Returns false on
 * machine-word overflow.
 */
template <typename T>
bool bareiss_rank(std::vector<std::vector<T>> m, std::size_t& rank)
{
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    T previous = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c)
    {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i)
        {
            for (std::size_t j = c + 1; j < cols; ++j)
            {
                T a, b, diff;
                if (!checked_mul(m[r][c], m[i][j], a) || !checked_mul(m[i][c], m[r][j], b) || !checked_sub(a, b, diff))
                    return false;
                m[i][j] = diff / previous;
            }
            m[i][c] = 0;
        }
        previous = m[r][c];
        ++r;
    }
    rank = r;
    return true;
}

}   // namespace detail

/** Rank over the rationals. */
inline std::size_t rank_rational(const IntMatrix& m)
{
    std::size_t rank = 0;
    if (detail::bareiss_rank(m, rank))
        return rank;
    std::vector<std::vector<Integer>> big;
    for (const auto& row : m)
        big.emplace_back(row.begin(), row.end());
    detail::bareiss_rank(big, rank);
    return rank;
}

/** Rank over F_p. */
inline std::size_t rank_mod_p(const IntMatrix& input, std::uint32_t p)
{
    std::size_t rows = input.size(), cols = rows ? input[0].size() : 0;
    std::vector<std::vector<std::uint32_t>> m(rows, std::vector<std::uint32_t>(cols));
    auto mod = static_cast<std::int64_t>(p);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m[i][j] = static_cast<std::uint32_t>(((input[i][j] % mod) + mod) % mod);
    auto inverse = [p](std::uint64_t a) {
        std::uint64_t result = 1, e = p - 2;
        while (e)
        {
            if (e & 1)
                result = result * a % p;
            a = a * a % p;
            e >>= 1;
        }
        return result;
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c)
    {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[pivot], m[r]);
        std::uint64_t inv = inverse(m[r][c]);
        for (std::size_t i = r + 1; i < rows; ++i)
        {
            if (m[i][c] == 0)
                continue;
            std::uint64_t factor = m[i][c] * inv % p;
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = static_cast<std::uint32_t>((m[i][j] + p - factor * m[r][j] % p) % p);
        }
        ++r;
    }
    return r;
}

inline std::size_t rank(const IntMatrix& m, const Field& field)
{
    return field.characteristic() == 0 ? rank_rational(m) : rank_mod_p(m, field.characteristic());
}

}   // namespace tropres
