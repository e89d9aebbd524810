#pragma once

/**
 * Mixed subdivisions of the dilated simplex n*Delta_{d-1}.  A cell with
 * type T becomes the mixed cell I_1 + ... + I_n with I_j the support of
 * row j; the face order is reversed.
 */

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "cell_complex.hpp"
#include "errors.hpp"
#include "monomial.hpp"
#include "rational.hpp"
#include "resolution.hpp"
#include "tropical.hpp"
#include "types.hpp"

namespace tropres {

/** A Minkowski sum of faces of Delta_{d-1}, one nonempty part (0-based indices) per summand. */
class MixedCell
{
    public:
        MixedCell() = default;

        MixedCell(std::size_t d, std::vector<std::vector<std::size_t>> parts) : d_(d), parts_(std::move(parts))
        {
            for (auto& p : parts_)
            {
                std::sort(p.begin(), p.end());
                p.erase(std::unique(p.begin(), p.end()), p.end());
                if (p.empty())
                    throw InvalidTypeError("mixed cell with an empty summand");
                if (p.back() >= d_)
                    throw DimensionError("summand index out of range");
            }
        }

        static MixedCell from_type(const TypeMatrix& t)
        {
            std::vector<std::vector<std::size_t>> parts;
            for (std::size_t j = 0; j < t.rows(); ++j)
                parts.push_back(t.row(j));
            return MixedCell(t.cols(), std::move(parts));
        }

        std::size_t ambient() const { return d_; }
        std::size_t summands() const { return parts_.size(); }
        const std::vector<std::vector<std::size_t>>& parts() const { return parts_; }

        TypeMatrix to_type() const { return TypeMatrix::from_rows(d_, parts_); }

        /** Affine dimension: touched coordinates minus the components they form under the parts. */
        std::size_t dim() const
        {
            std::vector<std::size_t> parent(d_);
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](std::size_t x) {
                while (parent[x] != x)
                    x = parent[x] = parent[parent[x]];
                return x;
            };
            std::size_t merges = 0;
            for (const auto& p : parts_)
                for (std::size_t a = 1; a < p.size(); ++a)
                {
                    auto x = find(p[0]), y = find(p[a]);
                    if (x != y)
                    {
                        parent[x] = y;
                        ++merges;
                    }
                }
            return merges;
        }

        /** Dimension of the cell if the summands were in independent position. */
        std::size_t fine_dim() const
        {
            std::size_t s = 0;
            for (const auto& p : parts_)
                s += p.size() - 1;
            return s;
        }

        /** "{1,2}+{3}" with 1-based indices. */
        std::string to_string() const
        {
            std::string out;
            for (std::size_t j = 0; j < parts_.size(); ++j)
            {
                if (j)
                    out += "+";
                out += "{";
                for (std::size_t a = 0; a < parts_[j].size(); ++a)
                    out += (a ? "," : "") + std::to_string(parts_[j][a] + 1);
                out += "}";
            }
            return out;
        }

        bool operator==(const MixedCell&) const = default;
        auto operator<=>(const MixedCell&) const = default;

    private:
        std::size_t d_ = 0;
        std::vector<std::vector<std::size_t>> parts_;
};

/** counts[i] = number of summands containing i. */
inline CoarseVector coarse_type_mixed(const MixedCell& tau)
{
    std::vector<unsigned> counts(tau.ambient(), 0);
    for (const auto& p : tau.parts())
        for (auto i : p)
            ++counts[i];
    return CoarseVector(counts);
}

/** Sizes of the summands. */
inline std::vector<std::size_t> dual_coarse_type(const MixedCell& tau)
{
    std::vector<std::size_t> out;
    for (const auto& p : tau.parts())
        out.push_back(p.size());
    return out;
}

/** Distinct sums e_{c_1} + ... + e_{c_n} with c_j in I_j, lexicographically sorted. */
inline std::vector<std::vector<unsigned>> embed_mixed_cell(const MixedCell& tau)
{
    std::set<std::vector<unsigned>> sums{std::vector<unsigned>(tau.ambient(), 0)};
    for (const auto& p : tau.parts())
    {
        std::set<std::vector<unsigned>> next;
        for (const auto& s : sums)
            for (auto i : p)
            {
                auto t = s;
                ++t[i];
                next.insert(std::move(t));
            }
        sums = std::move(next);
    }
    return {sums.begin(), sums.end()};
}

/** Mixed cells with their face relation; cell x corresponds to cell x of the source complex. */
struct MixedSubdivision
{
    std::size_t n = 0;
    std::size_t d = 0;
    std::vector<MixedCell> cells;
    std::vector<std::size_t> dims;
    std::vector<std::vector<std::size_t>> facets;
    bool fine = false;

    std::vector<std::size_t> maximal() const
    {
        std::vector<bool> covered(cells.size(), false);
        for (const auto& fs : facets)
            for (auto f : fs)
                covered[f] = true;
        std::vector<std::size_t> out;
        for (std::size_t x = 0; x < cells.size(); ++x)
            if (!covered[x])
                out.push_back(x);
        return out;
    }

    std::vector<std::size_t> vertices() const
    {
        std::vector<std::size_t> out;
        for (std::size_t x = 0; x < cells.size(); ++x)
            if (dims[x] == 0)
                out.push_back(x);
        return out;
    }

    std::vector<std::size_t> f_vector() const
    {
        std::vector<std::size_t> f(d == 0 ? 1 : d, 0);
        for (auto k : dims)
            f[k] += 1;
        return f;
    }
};

inline MixedSubdivision from_tropical_complex(const TropicalComplex& tc)
{
    MixedSubdivision ms;
    ms.n = tc.hyperplanes();
    ms.d = tc.ambient();
    ms.fine = true;
    for (std::size_t x = 0; x < tc.size(); ++x)
    {
        ms.cells.push_back(MixedCell::from_type(tc[x].type));
        ms.dims.push_back(ms.cells.back().dim());
        ms.facets.push_back(tc.cofacets(x));
    }
    for (auto x : ms.maximal())
        if (ms.dims[x] != ms.cells[x].fine_dim())
            ms.fine = false;
    return ms;
}

/** Sorted maximal cells as part lists; for comparing subdivisions. */
inline std::vector<MixedCell> maximal_cells(const MixedSubdivision& ms)
{
    std::vector<MixedCell> out;
    for (auto x : ms.maximal())
        out.push_back(ms.cells[x]);
    std::sort(out.begin(), out.end());
    return out;
}

/** Cells B_1 + ... + B_n for 1 = b_1 <= ... <= b_{n+1} = d, B_i = {b_i, ..., b_{i+1}}. */
inline std::vector<MixedCell> staircase_maximal_cells(std::size_t n, std::size_t d)
{
    if (n == 0 || d == 0)
        throw PreconditionError("staircase needs n, d >= 1");
    std::vector<MixedCell> out;
    std::vector<std::size_t> b(n + 1, 0);
    b[n] = d - 1;
    auto emit = [&] {
        std::vector<std::vector<std::size_t>> parts(n);
        for (std::size_t i = 0; i < n; ++i)
            for (auto k = b[i]; k <= b[i + 1]; ++k)
                parts[i].push_back(k);
        out.emplace_back(d, std::move(parts));
    };
    // b_2..b_n range over nondecreasing sequences in [0, d-1]
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == n)
        {
            emit();
            return;
        }
        for (auto k = b[pos - 1]; k < d; ++k)
        {
            b[pos] = k;
            rec(pos + 1);
        }
    };
    rec(1);
    std::sort(out.begin(), out.end());
    return out;
}

/** Apices v_ij = sign * i * j for 1-based i, j. */
inline Arrangement product_arrangement(std::size_t n, std::size_t d, int sign)
{
    std::vector<std::vector<long long>> rows(n, std::vector<long long>(d));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j)
            rows[i][j] = sign * static_cast<long long>((i + 1) * (j + 1));
    return Arrangement::from_integers(rows);
}

/** Sign for which the product heights induce the staircase subdivision; ConsistencyError if neither does. */
inline int calibrate_cyclic_sign(std::size_t n, std::size_t d)
{
    auto target = staircase_maximal_cells(n, d);
    for (int sign : {-1, 1})
    {
        auto ms = from_tropical_complex(enumerate_cells(product_arrangement(n, d, sign)));
        if (ms.fine && maximal_cells(ms) == target)
            return sign;
    }
    throw ConsistencyError("neither sign of the cyclic heights yields the staircase subdivision");
}

/** The cyclic arrangement: n hyperplanes in T^{d-1} whose subdivision is the staircase. */
inline Arrangement cyclic_arrangement(std::size_t n, std::size_t d)
{
    if (n == 0 || d == 0)
        throw PreconditionError("cyclic arrangement needs n, d >= 1");
    return product_arrangement(n, d, calibrate_cyclic_sign(n, d));
}

/** Staircase mixed subdivision, transported from the cyclic arrangement. */
inline MixedSubdivision staircase_subdivision(std::size_t n, std::size_t d)
{
    return from_tropical_complex(enumerate_cells(cyclic_arrangement(n, d)));
}

/** The binom(n,k) 0/1 vectors of length n with exactly k zeros, in lexicographic order. */
inline Arrangement hypersimplex_vertices(std::size_t k, std::size_t n)
{
    if (k < 1 || k >= n)
        throw PreconditionError("hypersimplex needs 1 <= k <= n-1");
    if (n > 20)
        throw PreconditionError("hypersimplex needs n <= 20");
    std::vector<std::vector<long long>> rows;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    {
        std::vector<long long> row(n);
        std::size_t zeros = 0;
        for (std::size_t j = 0; j < n; ++j)
        {
            row[j] = (mask >> (n - 1 - j)) & 1u;
            zeros += row[j] == 0;
        }
        if (zeros == k)
            rows.push_back(row);
    }
    return Arrangement::from_integers(rows);
}

/**
 * Coarse types of the maximal cells of the tropical hypersimplex
 * arrangement, one representative per symmetry class alpha = 1..n-k+1,
 * sorted decreasingly.
 */
inline std::vector<CoarseVector> hypersimplex_coarse_type_classes(std::size_t k, std::size_t n)
{
    if (k < 2 || k >= n)
        throw PreconditionError("classes are defined for 2 <= k <= n-1");
    auto b = [](std::size_t a, std::size_t c) { return static_cast<unsigned>(binomial(a, c)); };
    std::vector<CoarseVector> out;
    for (std::size_t alpha = 1; alpha <= n - k + 1; ++alpha)
    {
        std::vector<unsigned> c(n, 0);
        c[0] = b(n - alpha, k) + b(n - 1, k - 1);
        for (std::size_t i = 2; i <= alpha; ++i)
            c[i - 1] = b(n - i, k - 1);
        out.emplace_back(c);
    }
    return out;
}

/** A coarse vector with its entries sorted decreasingly; the Sym(d) orbit representative. */
inline CoarseVector sorted_decreasing(const CoarseVector& c)
{
    auto v = c.counts();
    std::sort(v.begin(), v.end(), std::greater<>());
    return CoarseVector(v);
}

/** The subdivision as a labeled complex: vertices carry x^{coarse type}, cells the lcm. */
inline LabeledComplex mixed_labeled_complex(const MixedSubdivision& ms)
{
    LabeledComplex lc;
    lc.space = VariableSpace::coarse(ms.d);
    lc.poset = assign_incidence_signs(ms.dims, ms.facets, SignOptions{true, false});
    for (const auto& c : ms.cells)
        lc.labels.push_back(monomial_of(coarse_type_mixed(c)));
    lc.mode = LabelMode::labeled;
    return lc;
}

/** Cellular resolution of the coarse type ideal supported on the subdivision. */
inline AlgebraicComplex build_mixed_cellular(const MixedSubdivision& ms)
{
    return build_cellular(mixed_labeled_complex(ms));
}

}   // namespace tropres
