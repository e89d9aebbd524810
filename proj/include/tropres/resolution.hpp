#pragma once

/**
 * Monomial-labeled polyhedral complexes and the free complexes they support.
 *
 * A labeled complex (label of a cell = lcm of the labels of its facets)
 * gives a cellular complex: index i holds the cells of dimension i and
 * e_H maps to sum_G eps(H,G) x^{a_H - a_G} e_G over the facets G.  A
 * colabeled complex (label = lcm over cofacets) gives a cocellular complex:
 * index i holds the cells of dimension top-i and e_H maps to
 * sum_G eps(G,H) x^{a_H - a_G} e_G over the cofacets G.  Index 0 carries
 * the generators of the resolved ideal.
 */

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "cell_complex.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "monomial.hpp"
#include "type_ideals.hpp"

namespace tropres {

/** Face poset with signed cover relations: boundary[H] lists (facet, eps(H, facet)). */
struct OrientedPoset
{
    std::vector<std::size_t> dim;
    std::vector<std::vector<std::pair<std::size_t, int>>> boundary;

    std::size_t size() const { return dim.size(); }

    int sign(std::size_t cell, std::size_t facet) const
    {
        for (auto [f, s] : boundary[cell])
            if (f == facet)
                return s;
        return 0;
    }
};

struct SignOptions
{
    /** Augment with an empty face below every vertex (each edge must have two vertices). */
    bool bottom = false;
    /** Orient the top-dimensional cells so that every codimension-one cell cancels (a closed manifold). */
    bool top = false;
};

/**
 * Incidence signs making the boundary map square to zero, built by
 * increasing dimension.  Edges get (+1,-1) on their two vertices (+1 on the
 * single vertex of a ray).  For a cell H of dimension >= 2, the signs of its
 * facets are propagated across the codimension-two faces of H, each of
 * which must lie in exactly two facets of H.
 */
inline OrientedPoset assign_incidence_signs(const std::vector<std::size_t>& dims,
                                            const std::vector<std::vector<std::size_t>>& facets,
                                            SignOptions options = {})
{
    OrientedPoset op{dims, std::vector<std::vector<std::pair<std::size_t, int>>>(dims.size())};
    std::size_t top = 0;
    for (auto k : dims)
        top = std::max(top, k);

    std::vector<std::size_t> order(dims.size());
    for (std::size_t x = 0; x < order.size(); ++x)
        order[x] = x;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return dims[a] < dims[b]; });

    for (auto h : order)
    {
        const auto& fs = facets[h];
        for (auto g : fs)
            if (dims[g] + 1 != dims[h])
                throw InvalidComplexError("cover relation does not drop dimension by one");
        if (dims[h] == 0)
        {
            if (!fs.empty())
                throw InvalidComplexError("a vertex with facets");
            continue;
        }
        if (dims[h] == 1)
        {
            if (fs.size() == 2)
            {
                auto lo = std::min(fs[0], fs[1]), hi = std::max(fs[0], fs[1]);
                op.boundary[h] = {{lo, 1}, {hi, -1}};
            }
            else if (fs.size() == 1 && !options.bottom)
                op.boundary[h] = {{fs[0], 1}};
            else
                throw InvalidComplexError("an edge with " + std::to_string(fs.size()) + " vertices");
            continue;
        }
        // subfacet -> facets of h containing it
        std::map<std::size_t, std::vector<std::size_t>> through;
        for (auto g : fs)
            for (auto [f, s] : op.boundary[g])
                through[f].push_back(g);
        std::map<std::size_t, int> chosen;
        for (auto seed : fs)
        {
            if (chosen.count(seed))
                continue;
            chosen[seed] = 1;
            std::deque<std::size_t> queue{seed};
            while (!queue.empty())
            {
                auto g = queue.front();
                queue.pop_front();
                for (auto [f, s] : op.boundary[g])
                {
                    const auto& pair = through[f];
                    if (pair.size() != 2)
                        throw InvalidComplexError("codimension-two face in " + std::to_string(pair.size()) +
                                                  " facets of one cell");
                    auto other = pair[0] == g ? pair[1] : pair[0];
                    int want = -chosen[g] * s * op.sign(other, f);
                    auto it = chosen.find(other);
                    if (it == chosen.end())
                    {
                        chosen[other] = want;
                        queue.push_back(other);
                    }
                    else if (it->second != want)
                        throw InvalidComplexError("cell boundary is not orientable");
                }
            }
        }
        for (auto g : fs)
            op.boundary[h].emplace_back(g, chosen[g]);
        std::sort(op.boundary[h].begin(), op.boundary[h].end());
    }

    if (options.top && top > 0)
    {
        std::map<std::size_t, std::vector<std::size_t>> cofacets;
        std::vector<std::size_t> tops;
        for (std::size_t h = 0; h < dims.size(); ++h)
            if (dims[h] == top)
            {
                tops.push_back(h);
                for (auto [g, s] : op.boundary[h])
                    cofacets[g].push_back(h);
            }
        std::map<std::size_t, int> flip;
        for (auto seed : tops)
        {
            if (flip.count(seed))
                continue;
            flip[seed] = 1;
            std::deque<std::size_t> queue{seed};
            while (!queue.empty())
            {
                auto h = queue.front();
                queue.pop_front();
                for (auto [g, s] : op.boundary[h])
                {
                    const auto& pair = cofacets[g];
                    if (pair.size() != 2)
                        throw InvalidComplexError("codimension-one cell in " + std::to_string(pair.size()) +
                                                  " maximal cells");
                    auto other = pair[0] == h ? pair[1] : pair[0];
                    int want = -flip[h] * s * op.sign(other, g);
                    auto it = flip.find(other);
                    if (it == flip.end())
                    {
                        flip[other] = want;
                        queue.push_back(other);
                    }
                    else if (it->second != want)
                        throw InvalidComplexError("complex is not orientable");
                }
            }
        }
        for (auto h : tops)
            for (auto& entry : op.boundary[h])
                entry.second *= flip[h];
    }
    return op;
}

/** Face poset of a tropical complex with its incidence signs. */
inline OrientedPoset assign_incidence_signs(const TropicalComplex& tc, SignOptions options = {})
{
    std::vector<std::size_t> dims;
    std::vector<std::vector<std::size_t>> facets;
    for (std::size_t x = 0; x < tc.size(); ++x)
    {
        dims.push_back(tc[x].dim);
        facets.push_back(tc.facets(x));
    }
    return assign_incidence_signs(dims, facets, options);
}

/** Sum over every interval of length two of the sign products; all zero iff the boundary squares to zero. */
inline bool boundary_squares_to_zero(const OrientedPoset& op)
{
    for (std::size_t h = 0; h < op.size(); ++h)
    {
        std::map<std::size_t, int> sums;
        for (auto [g, s] : op.boundary[h])
            for (auto [f, t] : op.boundary[g])
                sums[f] += s * t;
        for (auto [f, total] : sums)
            if (total != 0)
                return false;
    }
    return true;
}

enum class LabelMode { labeled, colabeled };

/** An oriented face poset with one monomial per cell. */
struct LabeledComplex
{
    VariableSpace space;
    OrientedPoset poset;
    std::vector<Monomial> labels;
    LabelMode mode = LabelMode::labeled;

    std::size_t top_dim() const
    {
        std::size_t t = 0;
        for (auto k : poset.dim)
            t = std::max(t, k);
        return t;
    }
};

/** Throws LabelingError unless every label is the lcm over facets (labeled) or cofacets (colabeled). */
inline void validate_labels(const LabeledComplex& lc)
{
    std::size_t cells = lc.poset.size();
    if (lc.labels.size() != cells)
        throw LabelingError("one label per cell required");
    if (lc.mode == LabelMode::labeled)
    {
        for (std::size_t h = 0; h < cells; ++h)
        {
            if (lc.poset.dim[h] == 0)
                continue;
            Monomial join = Monomial::one(lc.space.size());
            for (auto [g, s] : lc.poset.boundary[h])
                join = lcm(join, lc.labels[g]);
            if (join != lc.labels[h])
                throw LabelingError("label of a cell is not the lcm of its facet labels");
        }
        return;
    }
    std::vector<std::optional<Monomial>> join(cells);
    for (std::size_t h = 0; h < cells; ++h)
        for (auto [g, s] : lc.poset.boundary[h])
            join[g] = join[g] ? lcm(*join[g], lc.labels[h]) : lc.labels[h];
    for (std::size_t g = 0; g < cells; ++g)
        if (join[g] && *join[g] != lc.labels[g])
            throw LabelingError("label of a cell is not the lcm of its cofacet labels");
}

/** Entry of a differential: coefficient sign * x^{deg(source) - deg(target)}. */
struct DifferentialEntry
{
    std::size_t source = 0;
    std::size_t target = 0;
    int sign = 0;
};

/**
 * A complex of free multigraded modules F_0 <- F_1 <- ... .  degrees[i]
 * lists the degrees of the basis of F_i, differential[i] (i >= 1) the
 * entries of F_i -> F_{i-1}; `cells` maps basis elements back to cells.
 */
struct AlgebraicComplex
{
    VariableSpace space;
    std::vector<std::vector<Monomial>> degrees;
    std::vector<std::vector<DifferentialEntry>> differential;
    std::vector<std::vector<std::size_t>> cells;

    std::size_t length() const { return degrees.size(); }

    std::vector<std::size_t> ranks() const
    {
        std::vector<std::size_t> r;
        for (const auto& d : degrees)
            r.push_back(d.size());
        return r;
    }

    /** The index-0 degrees, minimalized. */
    MonomialIdeal resolved_ideal() const
    {
        return minimalize(space, degrees.empty() ? std::vector<Monomial>{} : degrees[0]);
    }
};

namespace detail {

inline AlgebraicComplex assemble(const LabeledComplex& lc, bool cellular)
{
    validate_labels(lc);
    std::size_t top = lc.top_dim();
    std::size_t cells = lc.poset.size();
    auto index_of_cell = [&](std::size_t h) { return cellular ? lc.poset.dim[h] : top - lc.poset.dim[h]; };

    AlgebraicComplex ac;
    ac.space = lc.space;
    std::size_t length = cells == 0 ? 0 : top + 1;
    ac.degrees.resize(length);
    ac.cells.resize(length);
    ac.differential.resize(length);
    std::vector<std::size_t> position(cells);
    for (std::size_t h = 0; h < cells; ++h)
    {
        auto i = index_of_cell(h);
        position[h] = ac.cells[i].size();
        ac.cells[i].push_back(h);
        ac.degrees[i].push_back(lc.labels[h]);
    }
    for (std::size_t h = 0; h < cells; ++h)
        for (auto [g, s] : lc.poset.boundary[h])
        {
            // cellular: e_h -> e_g;  cocellular: e_g -> e_h
            auto source = cellular ? h : g;
            auto target = cellular ? g : h;
            ac.differential[index_of_cell(source)].push_back({position[source], position[target], s});
        }
    for (auto& d : ac.differential)
        std::sort(d.begin(), d.end(), [](const auto& a, const auto& b) {
            return std::tie(a.source, a.target) < std::tie(b.source, b.target);
        });
    return ac;
}

}   // namespace detail

inline AlgebraicComplex build_cellular(const LabeledComplex& lc)
{
    if (lc.mode != LabelMode::labeled)
        throw LabelingError("cellular complexes need a labeled complex");
    return detail::assemble(lc, true);
}

inline AlgebraicComplex build_cocellular(const LabeledComplex& lc)
{
    if (lc.mode != LabelMode::colabeled)
        throw LabelingError("cocellular complexes need a colabeled complex");
    return detail::assemble(lc, false);
}

/** Bounded complex with (fine or coarse) cotype labels. */
inline LabeledComplex cotype_labeled_complex(const TropicalComplex& bounded, Granularity g)
{
    LabeledComplex lc;
    lc.space = variable_space(bounded, g);
    lc.poset = assign_incidence_signs(bounded, SignOptions{true, false});
    for (const auto& c : bounded.cells())
        lc.labels.push_back(cotype_label(c, g));
    lc.mode = LabelMode::labeled;
    return lc;
}

/** Full decomposition with (fine or coarse) type labels. */
inline LabeledComplex type_colabeled_complex(const TropicalComplex& full, Granularity g)
{
    LabeledComplex lc;
    lc.space = variable_space(full, g);
    lc.poset = assign_incidence_signs(full, SignOptions{false, true});
    for (const auto& c : full.cells())
        lc.labels.push_back(type_label(c, g));
    lc.mode = LabelMode::colabeled;
    return lc;
}

/** Cellular resolution of the cotype ideal supported on the bounded complex. */
inline AlgebraicComplex build_cellular(const TropicalComplex& bounded, Granularity g)
{
    return build_cellular(cotype_labeled_complex(bounded, g));
}

/** Cocellular resolution of the type ideal supported on the full decomposition. */
inline AlgebraicComplex build_cocellular(const TropicalComplex& full, Granularity g)
{
    return build_cocellular(type_colabeled_complex(full, g));
}

/**
 * Composition of consecutive differentials, including the augmentation
 * F_0 -> I (e_H -> x^{a_H}), vanishes.  All paths between two basis
 * elements carry the same monomial, so only the signs need to cancel.
 */
inline bool differential_squares_to_zero(const AlgebraicComplex& ac)
{
    for (std::size_t i = 1; i < ac.length(); ++i)
    {
        std::map<std::pair<std::size_t, std::size_t>, int> sums;
        if (i == 1)
        {
            for (const auto& e : ac.differential[1])
                sums[{e.source, 0}] += e.sign;
        }
        else
        {
            std::multimap<std::size_t, const DifferentialEntry*> by_source;
            for (const auto& e : ac.differential[i - 1])
                by_source.emplace(e.source, &e);
            for (const auto& e : ac.differential[i])
            {
                auto [lo, hi] = by_source.equal_range(e.target);
                for (auto it = lo; it != hi; ++it)
                    sums[{e.source, it->second->target}] += e.sign * it->second->sign;
            }
        }
        for (const auto& [key, total] : sums)
            if (total != 0)
                return false;
    }
    return true;
}

/** No differential entry is a unit, i.e. no cover pair shares a label. */
inline bool check_minimality(const AlgebraicComplex& ac)
{
    for (std::size_t i = 1; i < ac.length(); ++i)
        for (const auto& e : ac.differential[i])
            if (ac.degrees[i][e.source] == ac.degrees[i - 1][e.target])
                return false;
    return true;
}

struct VerificationFailure
{
    Monomial degree;
    std::size_t index = 0;
    std::string reason;
};

struct VerificationReport
{
    Field field = Field::rationals();
    bool differential_ok = false;
    bool generators_ok = false;
    std::size_t degrees_checked = 0;
    std::vector<VerificationFailure> failures;

    bool exact() const { return differential_ok && generators_ok && failures.empty(); }
};

struct VerificationLimits
{
    std::size_t max_lattice = 2'000'000;
};

/** All lcms of nonempty subsets of `gens`. */
inline std::vector<Monomial> lcm_lattice(const std::vector<Monomial>& gens, const VerificationLimits& limits = {})
{
    std::set<Monomial> seen(gens.begin(), gens.end());
    std::vector<Monomial> frontier(seen.begin(), seen.end());
    std::vector<Monomial> unique(seen.begin(), seen.end());
    while (!frontier.empty())
    {
        std::vector<Monomial> next;
        for (const auto& a : frontier)
            for (const auto& g : unique)
            {
                auto m = lcm(a, g);
                if (seen.insert(m).second)
                {
                    if (seen.size() > limits.max_lattice)
                        throw ResourceLimitError("lcm lattice exceeds " + std::to_string(limits.max_lattice) + " elements");
                    next.push_back(std::move(m));
                }
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

/**
 * Checks that `ac` resolves `ideal` over `field`: for each degree b of the
 * lcm lattice of the index-0 degrees, the strand of basis elements with
 * degree dividing b is exact at every index >= 1 and has cokernel of
 * dimension 1 at index 0 if x^b lies in the ideal and 0 otherwise.  Other
 * degrees give the same strands as a lattice element.  Also checks that the
 * composition of differentials vanishes and that the index-0 degrees
 * generate the ideal.
 */
inline VerificationReport verify_resolution(const AlgebraicComplex& ac, const MonomialIdeal& ideal, const Field& field,
                                            const VerificationLimits& limits = {})
{
    VerificationReport report;
    report.field = field;
    report.differential_ok = differential_squares_to_zero(ac);
    report.generators_ok = ac.resolved_ideal() == ideal;
    if (ac.length() == 0)
    {
        if (!ideal.is_zero())
            report.failures.push_back({Monomial::one(ideal.space().size()), 0, "empty complex for a nonzero ideal"});
        return report;
    }
    auto lattice = lcm_lattice(ac.degrees[0], limits);
    report.degrees_checked = lattice.size();
    std::size_t length = ac.length();
    for (const auto& b : lattice)
    {
        std::vector<std::vector<std::size_t>> keep(length);
        std::vector<std::vector<std::size_t>> local(length);
        for (std::size_t i = 0; i < length; ++i)
        {
            local[i].assign(ac.degrees[i].size(), SIZE_MAX);
            for (std::size_t x = 0; x < ac.degrees[i].size(); ++x)
                if (ac.degrees[i][x].divides(b))
                {
                    local[i][x] = keep[i].size();
                    keep[i].push_back(x);
                }
        }
        // rank of F_i,b -> F_{i-1},b for i = 1..length-1; index length has rank 0
        std::vector<std::size_t> ranks(length + 1, 0);
        for (std::size_t i = 1; i < length; ++i)
        {
            if (keep[i].empty() || keep[i - 1].empty())
                continue;
            IntMatrix m(keep[i - 1].size(), std::vector<std::int64_t>(keep[i].size(), 0));
            for (const auto& e : ac.differential[i])
                if (local[i][e.source] != SIZE_MAX)
                    m[local[i - 1][e.target]][local[i][e.source]] = e.sign;
            ranks[i] = rank(m, field);
        }
        std::size_t expected0 = ideal.contains(b) ? 1 : 0;
        if (keep[0].size() - ranks[1] != expected0)
            report.failures.push_back({b, 0, "cokernel has dimension " + std::to_string(keep[0].size() - ranks[1]) +
                                                 ", expected " + std::to_string(expected0)});
        for (std::size_t i = 1; i < length; ++i)
        {
            std::size_t homology = keep[i].size() - ranks[i] - ranks[i + 1];
            if (homology != 0)
                report.failures.push_back({b, i, "homology of dimension " + std::to_string(homology)});
        }
    }
    return report;
}

/** Multigraded Betti numbers read off a minimal complex: basis counts per (index, degree). */
class BettiTable
{
    public:
        BettiTable() = default;
        explicit BettiTable(VariableSpace space) : space_(std::move(space)) {}

        void add(std::size_t index, const Monomial& degree, std::size_t count = 1) { table_[{index, degree}] += count; }

        const VariableSpace& space() const { return space_; }
        const std::map<std::pair<std::size_t, Monomial>, std::size_t>& entries() const { return table_; }

        std::size_t at(std::size_t index, const Monomial& degree) const
        {
            auto it = table_.find({index, degree});
            return it == table_.end() ? 0 : it->second;
        }

        std::size_t total(std::size_t index) const
        {
            std::size_t s = 0;
            for (const auto& [key, count] : table_)
                if (key.first == index)
                    s += count;
            return s;
        }

        std::size_t max_index() const
        {
            std::size_t m = 0;
            for (const auto& [key, count] : table_)
                m = std::max(m, key.first);
            return m;
        }

        /** Graded by total degree: (index, degree) -> multiplicity. */
        std::map<std::pair<std::size_t, unsigned>, std::size_t> by_total_degree() const
        {
            std::map<std::pair<std::size_t, unsigned>, std::size_t> out;
            for (const auto& [key, count] : table_)
                out[{key.first, key.second.degree()}] += count;
            return out;
        }

    private:
        VariableSpace space_;
        std::map<std::pair<std::size_t, Monomial>, std::size_t> table_;
};

inline BettiTable betti_table(const AlgebraicComplex& ac)
{
    BettiTable bt(ac.space);
    for (std::size_t i = 0; i < ac.length(); ++i)
        for (const auto& m : ac.degrees[i])
            bt.add(i, m);
    return bt;
}

struct FaceCounts
{
    std::vector<std::size_t> all;
    std::vector<std::size_t> bounded;
};

/**
 * Face numbers of the decomposition from the Betti table of the coarse type
 * ideal: f_k = beta_{d-1-k}; bounded cells are those of degrees with all
 * coordinates positive.
 */
inline FaceCounts fvector_from_betti(const BettiTable& bt)
{
    std::size_t d = bt.space().size();
    if (bt.space().kind() != VariableSpace::Kind::coarse)
        throw DimensionError("face numbers need a coarse Betti table");
    FaceCounts fc{std::vector<std::size_t>(d, 0), std::vector<std::size_t>(d, 0)};
    for (const auto& [key, count] : bt.entries())
    {
        auto [i, degree] = key;
        if (i >= d)
            throw DimensionError("homological index beyond d-1");
        std::size_t k = d - 1 - i;
        fc.all[k] += count;
        bool positive = true;
        for (auto e : degree.exponents())
            positive = positive && e > 0;
        if (positive)
            fc.bounded[k] += count;
    }
    return fc;
}

}   // namespace tropres
