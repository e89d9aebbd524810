#pragma once

/**
 * The polyhedral decomposition of the tropical torus induced by a
 * max-tropical hyperplane arrangement.
 *
 * A closed cell is the intersection of the closed sectors listed in its type
 * matrix.  Each sector (i,k) contributes the difference constraints
 * p_j - p_k <= v_ij - v_ik, so every cell is the solution set of a
 * difference-constraint system.  Feasibility, the canonical (saturated) type
 * and the dimension of a cell are all read off the shortest-path closure of
 * that system.
 */

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "constraint_system.hpp"
#include "errors.hpp"
#include "rational.hpp"
#include "tropical.hpp"
#include "types.hpp"

namespace tropres {

using ConstraintSystem = DifferenceConstraints<Rational>;

/** One closed cell of the decomposition. */
struct Cell
{
    TypeMatrix type;        ///< saturated fine type of the relative interior
    std::size_t dim = 0;
    bool bounded = false;
    CoarseVector coarse;    ///< column sums of `type`
    std::optional<TropicalPoint> point;   ///< coordinates, for 0-cells only
};

/**
 * A set of cells together with their cover relations (face, cofacet).  Cells
 * are kept in canonical order: by dimension, then by type matrix.
 */
class TropicalComplex
{
    public:
        TropicalComplex() = default;

        TropicalComplex(std::size_t n, std::size_t d, std::vector<Cell> cells,
                        const std::set<std::pair<std::size_t, std::size_t>>& covers)
            : n_(n), d_(d)
        {
            std::vector<std::size_t> order(cells.size());
            for (std::size_t x = 0; x < order.size(); ++x)
                order[x] = x;
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                if (cells[a].dim != cells[b].dim)
                    return cells[a].dim < cells[b].dim;
                return cells[a].type < cells[b].type;
            });
            std::vector<std::size_t> position(cells.size());
            for (std::size_t x = 0; x < order.size(); ++x)
            {
                position[order[x]] = x;
                cells_.push_back(std::move(cells[order[x]]));
            }
            facets_.assign(cells_.size(), {});
            cofacets_.assign(cells_.size(), {});
            for (auto [face, cofacet] : covers)
            {
                auto f = position[face], c = position[cofacet];
                facets_[c].push_back(f);
                cofacets_[f].push_back(c);
            }
            for (auto& v : facets_)
                std::sort(v.begin(), v.end());
            for (auto& v : cofacets_)
                std::sort(v.begin(), v.end());
            for (std::size_t x = 0; x < cells_.size(); ++x)
                index_.emplace(cells_[x].type, x);
        }

        std::size_t hyperplanes() const { return n_; }   ///< n
        std::size_t ambient() const { return d_; }       ///< d; the torus has dimension d-1

        std::size_t size() const { return cells_.size(); }
        const Cell& operator[](std::size_t x) const { return cells_[x]; }
        const std::vector<Cell>& cells() const { return cells_; }
        const std::vector<std::size_t>& facets(std::size_t x) const { return facets_[x]; }
        const std::vector<std::size_t>& cofacets(std::size_t x) const { return cofacets_[x]; }

        std::optional<std::size_t> index_of(const TypeMatrix& t) const
        {
            auto it = index_.find(t);
            if (it == index_.end())
                return std::nullopt;
            return it->second;
        }

        /** All (face, cofacet) pairs. */
        std::vector<std::pair<std::size_t, std::size_t>> covers() const
        {
            std::vector<std::pair<std::size_t, std::size_t>> out;
            for (std::size_t c = 0; c < cells_.size(); ++c)
                for (auto f : facets_[c])
                    out.emplace_back(f, c);
            std::sort(out.begin(), out.end());
            return out;
        }

        std::size_t max_dim() const
        {
            std::size_t m = 0;
            for (const auto& c : cells_)
                m = std::max(m, c.dim);
            return m;
        }

        /** Number of cells per dimension 0..max_dim (or 0..d-1 for the full decomposition). */
        std::vector<std::size_t> f_vector() const
        {
            std::size_t top = cells_.empty() ? 0 : max_dim();
            std::vector<std::size_t> f(std::max<std::size_t>(top + 1, d_ > 0 ? d_ : 1), 0);
            for (const auto& c : cells_)
                f[c.dim] += 1;
            return f;
        }

        /** Cells without cofacets. */
        std::vector<std::size_t> inclusion_maximal() const
        {
            std::vector<std::size_t> out;
            for (std::size_t x = 0; x < cells_.size(); ++x)
                if (cofacets_[x].empty())
                    out.push_back(x);
            return out;
        }

        std::vector<std::size_t> of_dimension(std::size_t dim) const
        {
            std::vector<std::size_t> out;
            for (std::size_t x = 0; x < cells_.size(); ++x)
                if (cells_[x].dim == dim)
                    out.push_back(x);
            return out;
        }

        /** Alternating sum of the f-vector. */
        long long euler_characteristic() const
        {
            long long chi = 0;
            for (const auto& c : cells_)
                chi += (c.dim % 2 == 0) ? 1 : -1;
            return chi;
        }

    private:
        std::size_t n_ = 0;
        std::size_t d_ = 0;
        std::vector<Cell> cells_;
        std::vector<std::vector<std::size_t>> facets_;
        std::vector<std::vector<std::size_t>> cofacets_;
        std::map<TypeMatrix, std::size_t> index_;
};

/** Guards for the exponential parts of cell enumeration. */
struct EnumerationLimits
{
    std::size_t max_search_nodes = 20'000'000;   ///< partial sector choices visited
    std::size_t max_cells = 2'000'000;
};

namespace detail {

/** Row-major n x d apex matrix over some exact scalar. */
template <typename Scalar>
struct WeightMatrix
{
    std::size_t n = 0;
    std::size_t d = 0;
    std::vector<Scalar> w;

    const Scalar& operator()(std::size_t i, std::size_t k) const { return w[i * d + k]; }
};

inline WeightMatrix<Rational> rational_weights(const Arrangement& arr)
{
    WeightMatrix<Rational> m{arr.size(), arr.dim(), {}};
    for (std::size_t i = 0; i < arr.size(); ++i)
        for (std::size_t k = 0; k < arr.dim(); ++k)
            m.w.push_back(arr.weight(i, k));
    return m;
}

/** Integer apex matrix scaled by the common denominator; types are invariant under the scaling. */
inline std::pair<WeightMatrix<Integer>, Integer> integer_weights(const Arrangement& arr)
{
    std::vector<Rational> all;
    for (const auto& a : arr.apices())
        all.insert(all.end(), a.coords().begin(), a.coords().end());
    Integer scale = common_denominator(all);
    WeightMatrix<Integer> m{arr.size(), arr.dim(), {}};
    for (const auto& q : all)
        m.w.push_back(numerator(q) * (scale / denominator(q)));
    return {std::move(m), scale};
}

/** Intersect a closed system with sector k of hyperplane i. */
template <typename Scalar>
bool add_sector(DifferenceConstraints<Scalar>& system, const WeightMatrix<Scalar>& w, std::size_t i, std::size_t k)
{
    for (std::size_t j = 0; j < w.d; ++j)
        if (j != k && !system.tighten(k, j, w(i, j) - w(i, k)))
            return false;
    return true;
}

template <typename Scalar>
DifferenceConstraints<Scalar> raw_system(const WeightMatrix<Scalar>& w, const TypeMatrix& t)
{
    if (t.rows() != w.n || t.cols() != w.d)
        throw DimensionError("type matrix does not match the arrangement");
    if (t.has_empty_row())
        throw InvalidTypeError("type matrix has an empty row");
    DifferenceConstraints<Scalar> system(w.d);
    for (std::size_t i = 0; i < w.n; ++i)
        for (std::size_t k = 0; k < w.d; ++k)
            if (t(i, k))
                for (std::size_t j = 0; j < w.d; ++j)
                    if (j != k)
                        system.add_bound(k, j, w(i, j) - w(i, k));
    return system;
}

/** Every sector inequality valid on the whole region of a closed system. */
template <typename Scalar>
TypeMatrix saturate_closed(const DifferenceConstraints<Scalar>& system, const WeightMatrix<Scalar>& w)
{
    TypeMatrix t(w.n, w.d);
    for (std::size_t i = 0; i < w.n; ++i)
        for (std::size_t k = 0; k < w.d; ++k)
        {
            bool valid = true;
            for (std::size_t j = 0; j < w.d && valid; ++j)
                valid = system.has_bound(k, j) && system.bound(k, j) <= w(i, j) - w(i, k);
            t.set(i, k, valid);
        }
    return t;
}

template <typename Scalar>
std::size_t dimension_of(const DifferenceConstraints<Scalar>& system)
{
    return system.forced_components() - 1;
}

/** Depth-first search over sector choices, one hyperplane at a time, pruning lower-dimensional prefixes. */
template <typename Scalar>
std::vector<TypeMatrix> maximal_cells(const WeightMatrix<Scalar>& w, const EnumerationLimits& limits)
{
    std::vector<TypeMatrix> found;
    std::vector<std::size_t> choice(w.n);
    std::size_t visited = 0;
    auto recurse = [&](auto&& self, std::size_t i, const DifferenceConstraints<Scalar>& system) -> void {
        if (i == w.n)
        {
            TypeMatrix t(w.n, w.d);
            for (std::size_t r = 0; r < w.n; ++r)
                t.set(r, choice[r]);
            found.push_back(t);
            return;
        }
        for (std::size_t k = 0; k < w.d; ++k)
        {
            if (++visited > limits.max_search_nodes)
                throw ResourceLimitError("sector search exceeded " + std::to_string(limits.max_search_nodes) + " nodes");
            DifferenceConstraints<Scalar> next = system;
            if (!add_sector(next, w, i, k) || next.has_forced_equality())
                continue;
            choice[i] = k;
            self(self, i + 1, next);
        }
    };
    DifferenceConstraints<Scalar> start(w.d);
    recurse(recurse, 0, start);
    std::sort(found.begin(), found.end());
    return found;
}

template <typename Scalar>
TropicalComplex enumerate(const WeightMatrix<Scalar>& w, const Integer& scale, const EnumerationLimits& limits)
{
    std::vector<Cell> cells;
    std::vector<DifferenceConstraints<Scalar>> systems;
    std::map<TypeMatrix, std::size_t> seen;
    std::set<std::pair<std::size_t, std::size_t>> covers;

    auto insert = [&](DifferenceConstraints<Scalar>&& system) -> std::size_t {
        TypeMatrix t = saturate_closed(system, w);
        auto it = seen.find(t);
        if (it != seen.end())
            return it->second;
        if (cells.size() >= limits.max_cells)
            throw ResourceLimitError("cell enumeration exceeded " + std::to_string(limits.max_cells) + " cells");
        Cell cell;
        cell.dim = dimension_of(system);
        cell.coarse = t.column_sums();
        cell.bounded = cell.coarse.all_positive();
        if (cell.dim == 0)
        {
            std::vector<Rational> coords(w.d);
            for (std::size_t j = 0; j < w.d; ++j)
                coords[j] = Rational(Integer(system.bound(0, j)), scale);
            cell.point = TropicalPoint(std::move(coords));
        }
        cell.type = t;
        seen.emplace(t, cells.size());
        cells.push_back(std::move(cell));
        systems.push_back(std::move(system));
        return cells.size() - 1;
    };

    for (const auto& t : maximal_cells(w, limits))
    {
        auto system = raw_system(w, t);
        system.close();
        insert(std::move(system));
    }

    // Every face of a cell C is C intersected with one further closed sector;
    // in particular each facet arises this way from C directly.
    for (std::size_t x = 0; x < cells.size(); ++x)
    {
        for (std::size_t i = 0; i < w.n; ++i)
            for (std::size_t k = 0; k < w.d; ++k)
            {
                if (cells[x].type(i, k))
                    continue;
                DifferenceConstraints<Scalar> next = systems[x];
                if (!add_sector(next, w, i, k))
                    continue;
                std::size_t dim = dimension_of(next);
                std::size_t y = insert(std::move(next));
                if (dim + 1 == cells[x].dim)
                    covers.emplace(y, x);
            }
    }
    return TropicalComplex(w.n, w.d, std::move(cells), covers);
}

}   // namespace detail

/** The difference-constraint system whose solution set is the closed region of type T (not closed). */
inline ConstraintSystem constraint_system_of(const Arrangement& arr, const TypeMatrix& t)
{
    return detail::raw_system(detail::rational_weights(arr), t);
}

/**
 * The canonical type of the closed region C_T: every sector (i,k) whose
 * inequalities hold on all of C_T.  Throws InfeasibleError if C_T is empty.
 */
inline TypeMatrix saturate(const Arrangement& arr, const TypeMatrix& t)
{
    auto w = detail::rational_weights(arr);
    auto system = detail::raw_system(w, t);
    if (!system.close())
        throw InfeasibleError("type " + t.to_string() + " has an empty cell");
    return detail::saturate_closed(system, w);
}

/** Dimension of C_T: number of forced-equality classes of the coordinates, minus one. */
inline std::size_t cell_dimension(const Arrangement& arr, const TypeMatrix& t)
{
    auto system = constraint_system_of(arr, t);
    if (!system.close())
        throw InfeasibleError("type " + t.to_string() + " has an empty cell");
    return detail::dimension_of(system);
}

namespace detail {

inline bool fits_machine_words(const WeightMatrix<Integer>& w)
{
    const Integer bound = Integer(1) << 40;
    for (const auto& x : w.w)
        if (x > bound || x < -bound)
            return false;
    return true;
}

inline WeightMatrix<std::int64_t> narrow(const WeightMatrix<Integer>& w)
{
    WeightMatrix<std::int64_t> m{w.n, w.d, {}};
    for (const auto& x : w.w)
        m.w.push_back(static_cast<std::int64_t>(x));
    return m;
}

}   // namespace detail

/** Types of the full-dimensional cells, sorted. */
inline std::vector<TypeMatrix> enumerate_maximal_cells(const Arrangement& arr, const EnumerationLimits& limits = {})
{
    auto [w, scale] = detail::integer_weights(arr);
    if (detail::fits_machine_words(w))
        return detail::maximal_cells(detail::narrow(w), limits);
    return detail::maximal_cells(w, limits);
}

/**
 * All cells of the decomposition with their cover relations.  Small integer
 * data runs on 64-bit words (path sums stay far below overflow); anything
 * larger runs on arbitrary-precision integers.
 */
inline TropicalComplex enumerate_cells(const Arrangement& arr, const EnumerationLimits& limits = {})
{
    auto [w, scale] = detail::integer_weights(arr);
    if (detail::fits_machine_words(w))
        return detail::enumerate(detail::narrow(w), scale, limits);
    return detail::enumerate(w, scale, limits);
}

/** Bounded cells (all coarse coordinates positive) with the induced covers. */
inline TropicalComplex bounded_subcomplex(const TropicalComplex& tc)
{
    std::vector<Cell> cells;
    std::vector<std::size_t> remap(tc.size(), std::numeric_limits<std::size_t>::max());
    for (std::size_t x = 0; x < tc.size(); ++x)
        if (tc[x].bounded)
        {
            remap[x] = cells.size();
            cells.push_back(tc[x]);
        }
    std::set<std::pair<std::size_t, std::size_t>> covers;
    for (auto [f, c] : tc.covers())
        if (tc[f].bounded && tc[c].bounded)
            covers.emplace(remap[f], remap[c]);
    return TropicalComplex(tc.hyperplanes(), tc.ambient(), std::move(cells), covers);
}

}   // namespace tropres
