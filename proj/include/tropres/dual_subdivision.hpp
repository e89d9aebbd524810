#pragma once

/**
 * The regular subdivision of the product of simplices Delta_{n-1} x Delta_{d-1}
 * dual to the type decomposition, and its crosscut complex.
 *
 * Vertex (e_i, e_j) of the product is identified with grid position
 * i*d + j.  A cell of the decomposition with type T corresponds to the dual
 * cell whose vertices are the positions with T_ij = 1.
 */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cell_complex.hpp"
#include "errors.hpp"
#include "rational.hpp"
#include "tropical.hpp"
#include "types.hpp"

namespace tropres {

/** A cell of the dual subdivision, stored as its vertex support. */
class DualCell
{
    public:
        DualCell() = default;
        explicit DualCell(TypeMatrix support) : support_(std::move(support)) {}

        const TypeMatrix& support() const { return support_; }
        std::size_t vertex_count() const { return support_.count(); }

        /** Vertices as (i, j) pairs in row-major order. */
        std::vector<std::pair<std::size_t, std::size_t>> vertices() const
        {
            std::vector<std::pair<std::size_t, std::size_t>> out;
            for (std::size_t i = 0; i < support_.rows(); ++i)
                for (std::size_t j = 0; j < support_.cols(); ++j)
                    if (support_(i, j))
                        out.emplace_back(i, j);
            return out;
        }

        /**
         * Affine dimension of the convex hull of the vertices: for the
         * bipartite graph on [n] + [d] with one edge per vertex, the number
         * of touched nodes minus the number of components, minus one.
         */
        std::size_t dim() const
        {
            std::size_t n = support_.rows(), d = support_.cols();
            std::vector<std::size_t> parent(n + d);
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](std::size_t x) {
                while (parent[x] != x)
                    x = parent[x] = parent[parent[x]];
                return x;
            };
            std::vector<bool> touched(n + d, false);
            std::size_t edges_in_forest = 0;
            for (auto [i, j] : vertices())
            {
                touched[i] = touched[n + j] = true;
                auto a = find(i), b = find(n + j);
                if (a != b)
                {
                    parent[a] = b;
                    ++edges_in_forest;
                }
            }
            if (edges_in_forest == 0)
                return 0;
            return edges_in_forest - 1;
        }

        bool operator==(const DualCell&) const = default;
        bool operator<(const DualCell& o) const { return support_ < o.support_; }

    private:
        TypeMatrix support_;
};

/** Dual cells in the order of the source complex; `maximal` lists the duals of its 0-cells. */
struct DualSubdivision
{
    std::size_t n = 0;
    std::size_t d = 0;
    std::vector<DualCell> cells;
    std::vector<std::size_t> maximal;
};

inline DualSubdivision dual_subdivision(const TropicalComplex& tc)
{
    DualSubdivision sub{tc.hyperplanes(), tc.ambient(), {}, {}};
    for (std::size_t x = 0; x < tc.size(); ++x)
    {
        sub.cells.emplace_back(tc[x].type);
        if (tc.facets(x).empty())
            sub.maximal.push_back(x);
    }
    return sub;
}

inline DualSubdivision dual_subdivision(const Arrangement& arr, const EnumerationLimits& limits = {})
{
    return dual_subdivision(enumerate_cells(arr, limits));
}

/** A subdivision is fine (a triangulation) when every maximal cell is a simplex on n+d-1 vertices. */
inline bool is_fine(const DualSubdivision& sub)
{
    for (auto x : sub.maximal)
        if (sub.cells[x].vertex_count() != sub.n + sub.d - 1)
            return false;
    return true;
}

enum class Envelope { lower, upper };

inline const char* to_string(Envelope e) { return e == Envelope::lower ? "lower" : "upper"; }

/**
 * Whether the vertex set S is exactly the set of lifted points on some face
 * of the envelope of the heights h_ij = v_ij (lower) or h_ij = -v_ij (upper):
 * is there (y, z) with y_i + z_j <= h_ij everywhere and equality exactly on S?
 *
 * With w = -y this is a system of weak and strict difference constraints
 * z_j - w_i <= h_ij, checked for cycles that are negative or zero with a
 * strict arc.  Independent of the cell enumeration.
 */
inline bool envelope_face(const Arrangement& arr, const TypeMatrix& support, Envelope orientation = Envelope::lower)
{
    std::size_t n = arr.size(), d = arr.dim(), m = n + d;
    if (support.rows() != n || support.cols() != d)
        throw DimensionError("support does not match the arrangement");

    // weight = (value, -number of strict arcs); lexicographic order
    struct Weight
    {
        Rational value;
        long strict = 0;
        bool finite = false;
    };
    auto less = [](const Weight& a, const Weight& b) {
        return a.value < b.value || (a.value == b.value && a.strict < b.strict);
    };
    std::vector<Weight> w(m * m);
    for (std::size_t x = 0; x < m; ++x)
        w[x * m + x] = Weight{0, 0, true};
    auto arc = [&](std::size_t from, std::size_t to, const Rational& value, long strict) {
        Weight cand{value, strict, true};
        auto& cur = w[from * m + to];
        if (!cur.finite || less(cand, cur))
            cur = cand;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j)
        {
            Rational h = orientation == Envelope::lower ? arr.weight(i, j) : -arr.weight(i, j);
            // node i is w_i, node n+j is z_j
            if (support(i, j))
            {
                arc(i, n + j, h, 0);
                arc(n + j, i, -h, 0);
            }
            else
                arc(i, n + j, h, -1);
        }
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t a = 0; a < m; ++a)
        {
            if (!w[a * m + k].finite)
                continue;
            for (std::size_t b = 0; b < m; ++b)
            {
                if (!w[k * m + b].finite)
                    continue;
                Weight via{w[a * m + k].value + w[k * m + b].value, w[a * m + k].strict + w[k * m + b].strict, true};
                auto& cur = w[a * m + b];
                if (!cur.finite || less(via, cur))
                    cur = via;
            }
            if (less(w[a * m + a], Weight{0, 0, true}))
                return false;
        }
    for (std::size_t x = 0; x < m; ++x)
        if (less(w[x * m + x], Weight{0, 0, true}))
            return false;
    return true;
}

/**
 * The envelope orientation under which every dual cell of `sub` is an
 * envelope face.  Lower is tried first.  Throws ConsistencyError when
 * neither orientation reproduces the subdivision.
 */
inline Envelope calibrate_envelope(const Arrangement& arr, const DualSubdivision& sub)
{
    for (auto orientation : {Envelope::lower, Envelope::upper})
    {
        bool ok = true;
        for (const auto& c : sub.cells)
            if (!envelope_face(arr, c.support(), orientation))
            {
                ok = false;
                break;
            }
        if (ok)
            return orientation;
    }
    throw ConsistencyError("dual subdivision matches neither envelope orientation");
}

/**
 * Abstract simplicial complex on vertices 0..vertex_count-1, given by its
 * facets as bit masks (at most 64 vertices).
 */
class SimplicialComplex
{
    public:
        SimplicialComplex() = default;

        SimplicialComplex(std::size_t vertex_count, std::vector<std::uint64_t> facets) : vertex_count_(vertex_count)
        {
            if (vertex_count > 64)
                throw DimensionError("simplicial complexes are limited to 64 vertices");
            std::sort(facets.begin(), facets.end());
            facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
            for (auto f : facets)
            {
                bool contained = false;
                for (auto g : facets)
                    if (g != f && (f & ~g) == 0)
                        contained = true;
                if (!contained)
                    facets_.push_back(f);
            }
        }

        std::size_t vertex_count() const { return vertex_count_; }
        const std::vector<std::uint64_t>& facets() const { return facets_; }

        bool is_face(std::uint64_t set) const
        {
            for (auto f : facets_)
                if ((set & ~f) == 0)
                    return true;
            return false;
        }

        /**
         * Minimal non-faces, grown level by level: a set of size k+1 is a
         * candidate if it extends a face of size k by a larger vertex, and is
         * minimal iff every k-subset is a face.
         */
        std::vector<std::uint64_t> minimal_nonfaces() const
        {
            std::vector<std::uint64_t> out;
            std::vector<std::uint64_t> level{0};
            std::unordered_set<std::uint64_t> level_set{0};
            while (!level.empty())
            {
                std::vector<std::uint64_t> next;
                std::unordered_set<std::uint64_t> next_set;
                for (auto face : level)
                {
                    std::size_t start = face == 0 ? 0 : 64 - static_cast<std::size_t>(__builtin_clzll(face));
                    for (std::size_t v = start; v < vertex_count_; ++v)
                    {
                        std::uint64_t cand = face | (std::uint64_t(1) << v);
                        if (is_face(cand))
                        {
                            if (next_set.insert(cand).second)
                                next.push_back(cand);
                            continue;
                        }
                        bool minimal = true;
                        for (std::uint64_t rest = cand; rest && minimal; rest &= rest - 1)
                        {
                            std::uint64_t sub = cand & ~(rest & -rest);
                            minimal = level_set.count(sub) > 0;
                        }
                        if (minimal)
                            out.push_back(cand);
                    }
                }
                level = std::move(next);
                level_set = std::move(next_set);
            }
            std::sort(out.begin(), out.end());
            return out;
        }

    private:
        std::size_t vertex_count_ = 0;
        std::vector<std::uint64_t> facets_;
};

/** Vertices-in-facets incidences of the maximal dual cells, on the n*d grid positions. */
inline SimplicialComplex crosscut_complex(const DualSubdivision& sub)
{
    if (sub.n * sub.d > 64)
        throw DimensionError("crosscut complex needs n*d <= 64");
    std::vector<std::uint64_t> facets;
    for (auto x : sub.maximal)
    {
        std::uint64_t mask = 0;
        for (auto [i, j] : sub.cells[x].vertices())
            mask |= std::uint64_t(1) << (i * sub.d + j);
        facets.push_back(mask);
    }
    return SimplicialComplex(sub.n * sub.d, std::move(facets));
}

}   // namespace tropres
