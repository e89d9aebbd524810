#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace tropres {

/**
 * Nonnegative integer vector of length d: the number of hyperplanes whose
 * k-th closed sector contains a point (or cell), for each k.
 */
class CoarseVector
{
    public:
        CoarseVector() = default;
        explicit CoarseVector(std::vector<unsigned> counts) : counts_(std::move(counts)) {}
        CoarseVector(std::initializer_list<unsigned> counts) : counts_(counts) {}

        std::size_t size() const { return counts_.size(); }
        unsigned operator[](std::size_t k) const { return counts_[k]; }
        unsigned& operator[](std::size_t k) { return counts_[k]; }
        const std::vector<unsigned>& counts() const { return counts_; }

        unsigned total() const { return std::accumulate(counts_.begin(), counts_.end(), 0u); }

        /** True iff every coordinate is positive (the cell is bounded). */
        bool all_positive() const
        {
            for (auto c : counts_)
                if (c == 0)
                    return false;
            return true;
        }

        bool leq(const CoarseVector& other) const
        {
            for (std::size_t k = 0; k < counts_.size(); ++k)
                if (counts_[k] > other.counts_[k])
                    return false;
            return true;
        }

        std::string to_string() const
        {
            std::string s = "(";
            for (std::size_t k = 0; k < counts_.size(); ++k)
                s += (k ? "," : "") + std::to_string(counts_[k]);
            return s + ")";
        }

        auto operator<=>(const CoarseVector&) const = default;

    private:
        std::vector<unsigned> counts_;
};

/** Entrywise maximum of two coarse vectors of equal length. */
inline CoarseVector entrywise_max(const CoarseVector& a, const CoarseVector& b)
{
    std::vector<unsigned> out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        out[k] = std::max(a[k], b[k]);
    return CoarseVector(std::move(out));
}

/**
 * An n x d table over {0,1}.  Entry (i,k) records whether a point lies in
 * the k-th closed sector of the i-th hyperplane.  Indices are 0-based.
 */
class TypeMatrix
{
    public:
        TypeMatrix() = default;
        TypeMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

        /** Build from per-row lists of (0-based) sector indices. */
        static TypeMatrix from_rows(std::size_t cols, const std::vector<std::vector<std::size_t>>& rows)
        {
            TypeMatrix t(rows.size(), cols);
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (auto k : rows[i])
                {
                    if (k >= cols)
                        throw DimensionError("sector index out of range");
                    t.set(i, k);
                }
            return t;
        }

        std::size_t rows() const { return rows_; }
        std::size_t cols() const { return cols_; }

        bool operator()(std::size_t i, std::size_t k) const { return bits_[i * cols_ + k] != 0; }
        void set(std::size_t i, std::size_t k, bool value = true) { bits_[i * cols_ + k] = value ? 1 : 0; }

        std::vector<std::size_t> row(std::size_t i) const
        {
            std::vector<std::size_t> out;
            for (std::size_t k = 0; k < cols_; ++k)
                if ((*this)(i, k))
                    out.push_back(k);
            return out;
        }

        bool has_empty_row() const
        {
            for (std::size_t i = 0; i < rows_; ++i)
            {
                bool any = false;
                for (std::size_t k = 0; k < cols_; ++k)
                    any = any || (*this)(i, k);
                if (!any)
                    return true;
            }
            return false;
        }

        std::size_t count() const
        {
            std::size_t c = 0;
            for (auto b : bits_)
                c += b;
            return c;
        }

        /** Entrywise complement (the cotype). */
        TypeMatrix complement() const
        {
            TypeMatrix t = *this;
            for (auto& b : t.bits_)
                b = b ? 0 : 1;
            return t;
        }

        CoarseVector column_sums() const
        {
            std::vector<unsigned> sums(cols_, 0);
            for (std::size_t i = 0; i < rows_; ++i)
                for (std::size_t k = 0; k < cols_; ++k)
                    sums[k] += (*this)(i, k) ? 1 : 0;
            return CoarseVector(std::move(sums));
        }

        /** Entrywise <=. */
        bool leq(const TypeMatrix& other) const
        {
            for (std::size_t x = 0; x < bits_.size(); ++x)
                if (bits_[x] > other.bits_[x])
                    return false;
            return true;
        }

        /**
         * Paper-style sector notation: for each sector k the 1-based labels of
         * the hyperplanes containing the point, e.g. "(12,3,4)".  Falls back to
         * braces when labels have more than one digit; an empty sector is "-".
         */
        std::string to_sector_notation() const
        {
            bool compact = rows_ <= 9;
            std::string s = "(";
            for (std::size_t k = 0; k < cols_; ++k)
            {
                if (k)
                    s += ",";
                std::string part;
                for (std::size_t i = 0; i < rows_; ++i)
                    if ((*this)(i, k))
                        part += (compact ? "" : (part.empty() ? "" : " ")) + std::to_string(i + 1);
                if (part.empty())
                    part = "-";
                s += compact ? part : "{" + part + "}";
            }
            return s + ")";
        }

        /** Row-major 0/1 string, one row per '|' separated block. */
        std::string to_string() const
        {
            std::string s;
            for (std::size_t i = 0; i < rows_; ++i)
            {
                if (i)
                    s += "|";
                for (std::size_t k = 0; k < cols_; ++k)
                    s += (*this)(i, k) ? '1' : '0';
            }
            return s;
        }

        const std::vector<std::uint8_t>& bits() const { return bits_; }

        auto operator<=>(const TypeMatrix&) const = default;

    private:
        std::size_t rows_ = 0;
        std::size_t cols_ = 0;
        std::vector<std::uint8_t> bits_;
};

inline void require_same_shape(const TypeMatrix& a, const TypeMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("type matrices of different shapes");
}

inline TypeMatrix entrywise_max(const TypeMatrix& a, const TypeMatrix& b)
{
    require_same_shape(a, b);
    TypeMatrix t(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            t.set(i, k, a(i, k) || b(i, k));
    return t;
}

inline TypeMatrix entrywise_min(const TypeMatrix& a, const TypeMatrix& b)
{
    require_same_shape(a, b);
    TypeMatrix t(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            t.set(i, k, a(i, k) && b(i, k));
    return t;
}

/** Fine cotype: the complementary matrix. */
inline TypeMatrix cotype(const TypeMatrix& t) { return t.complement(); }

/** Coarse cotype: column sums of the complement, i.e. n*(1,...,1) minus the coarse type. */
inline CoarseVector coarse_cotype(const TypeMatrix& t) { return t.complement().column_sums(); }

}   // namespace tropres
