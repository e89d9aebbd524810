#pragma once

/**
 * Exact arithmetic on the tropical torus R^d / R(1,...,1): points, closed
 * sectors of max-tropical hyperplanes, fine and coarse types, tropical line
 * segments and the tropicalized product of the hyperplane linear forms.
 *
 * Everything is computed over arbitrary-precision rationals; sector
 * boundaries are decided by exact comparison.
 */

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "types.hpp"

namespace tropres {

enum class Convention { max, min };

/**
 * A point of the tropical torus, stored by its canonical representative
 * with first coordinate zero.
 */
class TropicalPoint
{
    public:
        TropicalPoint() = default;

        /** Normalizes by subtracting the first coordinate from all coordinates. */
        explicit TropicalPoint(std::vector<Rational> raw) : coords_(std::move(raw))
        {
            if (coords_.empty())
                throw DimensionError("a tropical point needs at least one coordinate");
            Rational shift = coords_[0];
            for (auto& c : coords_)
                c -= shift;
        }

        TropicalPoint(std::initializer_list<Rational> raw) : TropicalPoint(std::vector<Rational>(raw)) {}

        template <typename Int>
            requires std::is_integral_v<Int>
        static TropicalPoint of(const std::vector<Int>& raw)
        {
            return TropicalPoint(std::vector<Rational>(raw.begin(), raw.end()));
        }

        std::size_t dim() const { return coords_.size(); }
        const Rational& operator[](std::size_t k) const { return coords_[k]; }
        const std::vector<Rational>& coords() const { return coords_; }

        std::string to_string() const
        {
            std::string s = "(";
            for (std::size_t k = 0; k < coords_.size(); ++k)
                s += (k ? "," : "") + tropres::to_string(coords_[k]);
            return s + ")";
        }

        bool operator==(const TropicalPoint&) const = default;
        bool operator<(const TropicalPoint& o) const { return coords_ < o.coords_; }

    private:
        std::vector<Rational> coords_;
};

/** Canonical representative of the class of `raw` modulo the all-ones vector. */
inline TropicalPoint normalize(std::vector<Rational> raw) { return TropicalPoint(std::move(raw)); }

/**
 * An ordered list of apices v_1..v_n defining the max-tropical hyperplane
 * arrangement.  The order of the apices labels the rows of every type matrix.
 *
 * The rows as given are kept next to the normalized apices: types only see
 * the torus classes, but the product polynomial and serialization depend on
 * the chosen representatives.
 */
class Arrangement
{
    public:
        Arrangement() = default;

        explicit Arrangement(std::vector<TropicalPoint> apices) : apices_(std::move(apices))
        {
            check();
            for (const auto& a : apices_)
                rows_.push_back(a.coords());
        }

        /** From raw coordinate rows; rows are normalized for geometry and kept verbatim otherwise. */
        explicit Arrangement(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows))
        {
            for (const auto& r : rows_)
                apices_.push_back(TropicalPoint(r));
            check();
        }

        /** Build from integer rows, e.g. {{0,3,6},{0,5,2}}. */
        static Arrangement from_integers(const std::vector<std::vector<long long>>& rows)
        {
            std::vector<std::vector<Rational>> raw;
            for (const auto& r : rows)
                raw.emplace_back(r.begin(), r.end());
            return Arrangement(std::move(raw));
        }

        /** Coordinates exactly as supplied. */
        const std::vector<std::vector<Rational>>& rows() const { return rows_; }

        std::size_t size() const { return apices_.size(); }   ///< n
        std::size_t dim() const { return apices_.front().dim(); }   ///< d
        const TropicalPoint& operator[](std::size_t i) const { return apices_[i]; }
        const std::vector<TropicalPoint>& apices() const { return apices_; }

        /** Entry v_{ik} of the (normalized) apex matrix. */
        const Rational& weight(std::size_t i, std::size_t k) const { return apices_[i][k]; }

    private:
        void check() const
        {
            if (apices_.empty())
                throw DimensionError("an arrangement needs at least one apex");
            for (const auto& a : apices_)
                if (a.dim() != apices_.front().dim())
                    throw DimensionError("apices of different ambient dimension");
        }

        std::vector<TropicalPoint> apices_;
        std::vector<std::vector<Rational>> rows_;
};

inline void require_same_dim(const TropicalPoint& p, const TropicalPoint& q)
{
    if (p.dim() != q.dim())
        throw DimensionError("points of different ambient dimension");
}

/**
 * Whether p lies in the k-th closed sector of the hyperplane with the given
 * apex a.  Max convention: a_k - p_k <= a_i - p_i for all i.  Min convention:
 * a_k - p_k >= a_i - p_i for all i.
 */
inline bool sector_contains(const TropicalPoint& apex, std::size_t k, const TropicalPoint& p,
                            Convention convention = Convention::max)
{
    require_same_dim(apex, p);
    if (k >= apex.dim())
        throw std::out_of_range("sector index out of range");
    Rational lhs = apex[k] - p[k];
    for (std::size_t i = 0; i < apex.dim(); ++i)
    {
        Rational rhs = apex[i] - p[i];
        if (convention == Convention::max ? lhs > rhs : lhs < rhs)
            return false;
    }
    return true;
}

namespace detail {

/** Indices attaining min_j (v_ij - p_j). */
inline std::vector<std::size_t> argmin_row(const TropicalPoint& apex, const TropicalPoint& p)
{
    std::vector<std::size_t> best;
    Rational best_value;
    for (std::size_t j = 0; j < apex.dim(); ++j)
    {
        Rational value = apex[j] - p[j];
        if (best.empty() || value < best_value)
        {
            best_value = value;
            best.assign(1, j);
        }
        else if (value == best_value)
            best.push_back(j);
    }
    return best;
}

}   // namespace detail

/** Fine type of p: row i is the set of sectors of hyperplane i containing p. */
inline TypeMatrix fine_type(const Arrangement& arr, const TropicalPoint& p)
{
    if (p.dim() != arr.dim())
        throw DimensionError("point and arrangement of different ambient dimension");
    TypeMatrix t(arr.size(), arr.dim());
    for (std::size_t i = 0; i < arr.size(); ++i)
        for (auto k : detail::argmin_row(arr[i], p))
            t.set(i, k);
    return t;
}

inline CoarseVector coarse_type(const Arrangement& arr, const TropicalPoint& p)
{
    return fine_type(arr, p).column_sums();
}

/** A point is generic when it lies on no hyperplane of the arrangement. */
inline bool is_generic_point(const Arrangement& arr, const TropicalPoint& p)
{
    TypeMatrix t = fine_type(arr, p);
    return t.count() == t.rows();
}

/**
 * The point (lambda . p) (+) (mu . q) of the tropical segment between p and
 * q: componentwise max (or min) of lambda + p and mu + q, normalized.
 */
inline TropicalPoint trop_segment_point(const TropicalPoint& p, const TropicalPoint& q,
                                        const Rational& lambda, const Rational& mu,
                                        Convention variant = Convention::max)
{
    require_same_dim(p, q);
    std::vector<Rational> r(p.dim());
    for (std::size_t k = 0; k < p.dim(); ++k)
    {
        Rational a = lambda + p[k];
        Rational b = mu + q[k];
        r[k] = (variant == Convention::max) ? (a > b ? a : b) : (a < b ? a : b);
    }
    return TropicalPoint(std::move(r));
}

/** Tropical distance max_{i<j} |p_i - p_j + q_j - q_i|. */
inline Rational distance(const TropicalPoint& p, const TropicalPoint& q)
{
    require_same_dim(p, q);
    Rational best = 0;
    for (std::size_t i = 0; i < p.dim(); ++i)
        for (std::size_t j = i + 1; j < p.dim(); ++j)
        {
            Rational v = p[i] - p[j] + q[j] - q[i];
            if (v < 0)
                v = -v;
            if (v > best)
                best = v;
        }
    return best;
}

/** Value of the tropicalized product polynomial and the exponents attaining it. */
struct PolynomialEvaluation
{
    Rational value;
    std::set<CoarseVector> argmax;
};

/**
 * Evaluates trop^max(h) at p where h = h_1 ... h_n with
 * h_i = z^{-v_i1} x_1 + ... + z^{-v_id} x_d.  The value is
 * sum_i max_k (p_k - v_ik), with v_i the apex row as supplied (the value
 * depends on that representative, the argmax does not); `argmax` holds every exponent vector of h whose
 * tropical monomial attains that value, i.e. every composition obtained by
 * picking one maximizing k per factor.
 */
inline PolynomialEvaluation trop_poly_eval(const Arrangement& arr, const TropicalPoint& p)
{
    if (p.dim() != arr.dim())
        throw DimensionError("point and arrangement of different ambient dimension");
    PolynomialEvaluation out;
    std::set<CoarseVector> partial{CoarseVector(std::vector<unsigned>(arr.dim(), 0))};
    for (std::size_t i = 0; i < arr.size(); ++i)
    {
        auto best = detail::argmin_row(arr[i], p);
        out.value += p[best.front()] - arr.rows()[i][best.front()];
        std::set<CoarseVector> next;
        for (const auto& c : partial)
            for (auto k : best)
            {
                CoarseVector e = c;
                e[k] += 1;
                next.insert(std::move(e));
            }
        partial = std::move(next);
    }
    out.argmax = std::move(partial);
    return out;
}

}   // namespace tropres
