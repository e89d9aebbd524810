#pragma once

/**
 * The (co)type ideals of an arrangement: generated by the fine or coarse
 * types of the maximal cells, respectively the cotypes of the vertices.
 */

#include <vector>

#include "cell_complex.hpp"
#include "monomial.hpp"
#include "types.hpp"

namespace tropres {

enum class Granularity { fine, coarse };

inline const char* to_string(Granularity g) { return g == Granularity::fine ? "fine" : "coarse"; }

/** x^T over the grid variables. */
inline Monomial monomial_of(const TypeMatrix& t)
{
    std::vector<unsigned> e(t.bits().begin(), t.bits().end());
    return Monomial(std::move(e));
}

/** x^c over the coarse variables. */
inline Monomial monomial_of(const CoarseVector& c) { return Monomial(c.counts()); }

inline VariableSpace variable_space(const TropicalComplex& tc, Granularity g)
{
    return g == Granularity::fine ? VariableSpace::grid(tc.hyperplanes(), tc.ambient())
                                  : VariableSpace::coarse(tc.ambient());
}

/** Type label of a cell as a monomial. */
inline Monomial type_label(const Cell& cell, Granularity g)
{
    return g == Granularity::fine ? monomial_of(cell.type) : monomial_of(cell.coarse);
}

/** Cotype label of a cell as a monomial. */
inline Monomial cotype_label(const Cell& cell, Granularity g)
{
    return g == Granularity::fine ? monomial_of(cotype(cell.type)) : monomial_of(coarse_cotype(cell.type));
}

/** Generated by the types of the inclusion-maximal cells. */
inline MonomialIdeal type_ideal(const TropicalComplex& tc, Granularity g)
{
    std::vector<Monomial> gens;
    for (auto x : tc.inclusion_maximal())
        gens.push_back(type_label(tc[x], g));
    return minimalize(variable_space(tc, g), std::move(gens));
}

inline MonomialIdeal fine_type_ideal(const TropicalComplex& tc) { return type_ideal(tc, Granularity::fine); }
inline MonomialIdeal coarse_type_ideal(const TropicalComplex& tc) { return type_ideal(tc, Granularity::coarse); }

/**
 * Generated by the cotypes of the 0-cells.  For a single hyperplane the only
 * vertex is the apex, whose cotype is zero: the result is the unit ideal.
 */
inline MonomialIdeal cotype_ideal(const TropicalComplex& tc, Granularity g)
{
    std::vector<Monomial> gens;
    for (std::size_t x = 0; x < tc.size(); ++x)
        if (tc.facets(x).empty())
            gens.push_back(cotype_label(tc[x], g));
    return minimalize(variable_space(tc, g), std::move(gens));
}

/** Removes the generators x_k^power. */
inline MonomialIdeal without_pure_powers(const MonomialIdeal& ideal, unsigned power)
{
    std::vector<Monomial> gens;
    for (const auto& m : ideal.generators())
        if (!(m.support_size() == 1 && m.degree() == power))
            gens.push_back(m);
    return minimalize(ideal.space(), std::move(gens));
}

/**
 * The coarse cotype ideal predicted by Alexander duality: the dual of the
 * coarse type ideal without its pure n-th powers, with respect to (n-1,...,n-1).
 */
inline MonomialIdeal coarse_cotype_via_duality(const TropicalComplex& tc)
{
    auto n = static_cast<unsigned>(tc.hyperplanes());
    auto stripped = without_pure_powers(coarse_type_ideal(tc), n);
    Monomial a(std::vector<unsigned>(tc.ambient(), n - 1));
    return alexander_dual(stripped, a);
}

}   // namespace tropres
