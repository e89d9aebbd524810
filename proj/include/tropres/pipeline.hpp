#pragma once

/**
 * End-to-end computations on arrangement documents: the face poset of the
 * bounded complex computed from the points (crosscut complex ->
 * Stanley-Reisner ideal -> Alexander dual -> cellular resolution), random
 * generic instances, and a suite that re-checks every module invariant.
 */

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cayley.hpp"
#include "cell_complex.hpp"
#include "document.hpp"
#include "dual_subdivision.hpp"
#include "errors.hpp"
#include "monomial.hpp"
#include "resolution.hpp"
#include "type_ideals.hpp"

namespace tropres {

/** Squarefree ideal generated by the minimal non-faces, on the grid variables x_ij (bit i*d+j). */
inline MonomialIdeal stanley_reisner_from_crosscut(const SimplicialComplex& cc, const VariableSpace& space)
{
    if (space.size() != cc.vertex_count())
        throw DimensionError("variable space does not match the vertex set");
    std::vector<Monomial> gens;
    for (auto mask : cc.minimal_nonfaces())
    {
        Monomial m = Monomial::one(space.size());
        for (std::size_t v = 0; v < space.size(); ++v)
            if ((mask >> v) & 1u)
                m[v] = 1;
        gens.push_back(std::move(m));
    }
    return minimalize(space, gens);
}

struct FacePosetReport
{
    std::string name;
    std::size_t n = 0;
    std::size_t d = 0;
    bool generic = false;
    TropicalComplex bounded;
    MonomialIdeal stanley_reisner;
    MonomialIdeal cotype_from_crosscut;
    MonomialIdeal cotype_from_cells;
    BettiTable fine_betti;
    BettiTable coarse_betti;
    std::vector<VerificationReport> verification;

    bool verified() const
    {
        for (const auto& r : verification)
            if (!r.exact())
                return false;
        return true;
    }
};

/**
 * The face poset of the bounded complex together with the ideals and Betti
 * tables it determines.  Throws ConsistencyError when the cotype ideal
 * obtained from the crosscut complex differs from the one read off the
 * enumerated cells.
 */
inline FacePosetReport face_poset_from_points(const ArrangementDocument& doc,
                                              const std::vector<Field>& fields = {Field::rationals()},
                                              const EnumerationLimits& limits = {})
{
    auto arr = to_arrangement(doc);
    auto full = enumerate_cells(arr, limits);
    auto sub = dual_subdivision(full);

    FacePosetReport rep;
    rep.name = doc.name;
    rep.n = arr.size();
    rep.d = arr.dim();
    rep.generic = is_fine(sub);
    auto grid = VariableSpace::grid(rep.n, rep.d);
    rep.stanley_reisner = stanley_reisner_from_crosscut(crosscut_complex(sub), grid);
    Monomial ones(std::vector<unsigned>(grid.size(), 1));
    rep.cotype_from_crosscut = alexander_dual(rep.stanley_reisner, ones);
    rep.cotype_from_cells = cotype_ideal(full, Granularity::fine);
    if (rep.cotype_from_crosscut != rep.cotype_from_cells)
        throw ConsistencyError("cotype ideal from the crosscut complex " + rep.cotype_from_crosscut.to_string() +
                               " differs from the cotype ideal of the cells " + rep.cotype_from_cells.to_string());

    rep.bounded = bounded_subcomplex(full);
    auto fine = build_cellular(rep.bounded, Granularity::fine);
    auto coarse = build_cellular(rep.bounded, Granularity::coarse);
    for (const auto& field : fields)
    {
        rep.verification.push_back(verify_resolution(fine, rep.cotype_from_cells, field));
        rep.verification.push_back(verify_resolution(coarse, cotype_ideal(full, Granularity::coarse), field));
    }
    rep.fine_betti = betti_table(fine);
    rep.coarse_betti = betti_table(coarse);
    return rep;
}

inline Json betti_to_json(const BettiTable& bt)
{
    Json entries = Json::array();
    for (const auto& [key, count] : bt.entries())
        entries.push_back({{"index", key.first}, {"degree", key.second.to_string(bt.space())}, {"count", count}});
    Json graded = Json::array();
    for (const auto& [key, count] : bt.by_total_degree())
        graded.push_back({{"index", key.first}, {"total_degree", key.second}, {"count", count}});
    return {{"multigraded", entries}, {"graded", graded}};
}

inline Json cells_to_json(const TropicalComplex& tc)
{
    Json cells = Json::array();
    for (std::size_t x = 0; x < tc.size(); ++x)
    {
        const auto& c = tc[x];
        Json cell = {{"id", x},
                     {"dim", c.dim},
                     {"type", c.type.to_sector_notation()},
                     {"coarse", c.coarse.counts()},
                     {"bounded", c.bounded},
                     {"facets", tc.facets(x)}};
        if (c.point)
        {
            Json coords = Json::array();
            for (const auto& q : c.point->coords())
                coords.push_back(to_string(q));
            cell["point"] = coords;
        }
        cells.push_back(std::move(cell));
    }
    return cells;
}

inline Json verification_to_json(const VerificationReport& r)
{
    Json failures = Json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"degree", f.degree.exponents()}, {"index", f.index}, {"reason", f.reason}});
    return {{"field", r.field.name()},
            {"exact", r.exact()},
            {"differential_ok", r.differential_ok},
            {"generators_ok", r.generators_ok},
            {"degrees_checked", r.degrees_checked},
            {"failures", failures}};
}

inline Json to_json(const FacePosetReport& rep)
{
    Json verification = Json::array();
    for (const auto& r : rep.verification)
        verification.push_back(verification_to_json(r));
    return {{"name", rep.name},
            {"n", rep.n},
            {"d", rep.d},
            {"generic", rep.generic},
            {"f_vector", rep.bounded.f_vector()},
            {"cells", cells_to_json(rep.bounded)},
            {"stanley_reisner", rep.stanley_reisner.generator_strings()},
            {"cotype_ideal", rep.cotype_from_cells.generator_strings()},
            {"fine_betti", betti_to_json(rep.fine_betti)},
            {"coarse_betti", betti_to_json(rep.coarse_betti)},
            {"verification", verification}};
}

/**
 * Integer points drawn uniformly from [-range, range] with a seeded
 * Mersenne twister, resampled until the dual subdivision is fine.
 */
inline ArrangementDocument generate_random_generic(std::size_t n, std::size_t d, std::uint64_t seed,
                                                   std::size_t retry_limit = 1000, long long range = 1'000'000)
{
    if (n == 0 || d == 0)
        throw PreconditionError("need n, d >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> coord(-range, range);
    for (std::size_t attempt = 0; attempt < retry_limit; ++attempt)
    {
        std::vector<std::vector<long long>> rows(n, std::vector<long long>(d));
        for (auto& r : rows)
            for (auto& x : r)
                x = coord(rng);
        auto arr = Arrangement::from_integers(rows);
        if (is_fine(dual_subdivision(arr)))
            return to_document(arr, "random-" + std::to_string(n) + "-" + std::to_string(d) + "-" + std::to_string(seed),
                               true, seed);
    }
    throw ResourceLimitError("no generic arrangement found in " + std::to_string(retry_limit) + " attempts");
}

enum class CheckStatus { pass, fail, skip };

inline const char* to_string(CheckStatus s)
{
    switch (s)
    {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "skip";
    }
}

struct CheckResult
{
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
};

struct SuiteReport
{
    std::string name;
    std::vector<CheckResult> checks;

    bool ok() const
    {
        for (const auto& c : checks)
            if (c.status == CheckStatus::fail)
                return false;
        return true;
    }
};

inline Json to_json(const SuiteReport& s)
{
    Json checks = Json::array();
    for (const auto& c : s.checks)
        checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
    return {{"name", s.name}, {"ok", s.ok()}, {"checks", checks}};
}

namespace detail {

/** Runs `body`; a false return or an exception is a failure, ResourceLimitError a skip. */
inline void run_check(SuiteReport& suite, const std::string& name, const std::function<std::string()>& body)
{
    CheckResult r{name, CheckStatus::pass, ""};
    try
    {
        r.detail = body();
        if (r.detail.rfind("FAIL", 0) == 0)
            r.status = CheckStatus::fail;
        else if (r.detail.rfind("SKIP", 0) == 0)
            r.status = CheckStatus::skip;
    }
    catch (const ResourceLimitError& e)
    {
        r.status = CheckStatus::skip;
        r.detail = std::string("SKIP: ") + e.what();
    }
    catch (const std::exception& e)
    {
        r.status = CheckStatus::fail;
        r.detail = std::string("FAIL: ") + e.what();
    }
    suite.checks.push_back(std::move(r));
}

inline std::string verdict(bool ok, const std::string& what) { return (ok ? "" : "FAIL: ") + what; }

inline std::string join(const std::vector<std::size_t>& v)
{
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k)
        s += (k ? "," : "") + std::to_string(v[k]);
    return s + ")";
}

}   // namespace detail

/** Every invariant of every module, on one arrangement. */
inline SuiteReport verify_all(const ArrangementDocument& doc, const EnumerationLimits& limits = {})
{
    using detail::run_check;
    using detail::verdict;
    SuiteReport suite{doc.name, {}};
    Arrangement arr;
    TropicalComplex full, bounded;
    bool enumerated = false;

    run_check(suite, "enumeration", [&] {
        arr = to_arrangement(doc);
        full = enumerate_cells(arr, limits);
        bounded = bounded_subcomplex(full);
        enumerated = true;
        std::set<std::vector<Rational>> distinct;
        for (const auto& a : arr.apices())
            distinct.insert(a.coords());
        std::string note = distinct.size() < arr.size() ? "; degenerate: duplicate apices" : "";
        return "f-vector " + detail::join(full.f_vector()) + ", bounded " + detail::join(bounded.f_vector()) + note;
    });
    if (!enumerated)
        return suite;
    std::size_t n = arr.size(), d = arr.dim();

    run_check(suite, "euler_characteristic", [&] {
        long long want = (d - 1) % 2 == 0 ? 1 : -1;
        bool ok = full.euler_characteristic() == want && bounded.euler_characteristic() == 1;
        return verdict(ok, "full " + std::to_string(full.euler_characteristic()) + ", bounded " +
                               std::to_string(bounded.euler_characteristic()));
    });

    run_check(suite, "cell_types", [&] {
        for (const auto& c : full.cells())
        {
            if (c.coarse.total() < n || c.type.has_empty_row())
                return std::string("FAIL: malformed type ") + c.type.to_sector_notation();
            if (saturate(arr, c.type) != c.type || cell_dimension(arr, c.type) != c.dim)
                return std::string("FAIL: cell ") + c.type.to_sector_notation() + " is not saturated";
            if (c.bounded != c.coarse.all_positive())
                return std::string("FAIL: boundedness of ") + c.type.to_sector_notation();
        }
        return std::to_string(full.size()) + " cells saturated";
    });

    run_check(suite, "dual_dimensions", [&] {
        auto sub = dual_subdivision(full);
        for (std::size_t x = 0; x < full.size(); ++x)
            if (full[x].dim + sub.cells[x].dim() != n + d - 2)
                return std::string("FAIL: dimension identity at ") + full[x].type.to_sector_notation();
        auto env = calibrate_envelope(arr, sub);
        return std::string(is_fine(sub) ? "fine" : "not fine") + ", " + to_string(env) + " envelope";
    });

    run_check(suite, "crosscut_consistency", [&] {
        if (n * d > 64)
            return std::string("SKIP: crosscut complex needs n*d <= 64");
        auto rep = face_poset_from_points(doc, {}, limits);
        return std::to_string(rep.stanley_reisner.size()) + " minimal non-faces, " +
               std::to_string(rep.cotype_from_cells.size()) + " cotype generators";
    });

    run_check(suite, "cotype_via_duality", [&] {
        bool ok = coarse_cotype_via_duality(full) == cotype_ideal(full, Granularity::coarse);
        return verdict(ok, "coarse cotype ideal " + cotype_ideal(full, Granularity::coarse).to_string());
    });

    const std::vector<Field> fields{Field::rationals(), Field::prime(2), Field::prime(3)};
    for (auto g : {Granularity::fine, Granularity::coarse})
    {
        std::string tag = to_string(g);
        run_check(suite, "cellular_" + tag, [&] {
            auto ac = build_cellular(bounded, g);
            auto ideal = cotype_ideal(full, g);
            if (!check_minimality(ac))
                return std::string("FAIL: not minimal");
            for (const auto& f : fields)
                if (!verify_resolution(ac, ideal, f).exact())
                    return "FAIL: not a resolution over " + f.name();
            return "ranks " + detail::join(ac.ranks());
        });
        run_check(suite, "cocellular_" + tag, [&] {
            auto ac = build_cocellular(full, g);
            auto ideal = type_ideal(full, g);
            if (!check_minimality(ac))
                return std::string("FAIL: not minimal");
            for (const auto& f : fields)
                if (!verify_resolution(ac, ideal, f).exact())
                    return "FAIL: not a resolution over " + f.name();
            return "ranks " + detail::join(ac.ranks());
        });
    }

    run_check(suite, "face_numbers", [&] {
        auto fc = fvector_from_betti(betti_table(build_cocellular(full, Granularity::coarse)));
        auto f = full.f_vector();
        auto b = bounded.f_vector();
        b.resize(d, 0);
        return verdict(fc.all == f && fc.bounded == b, "from Betti numbers " + detail::join(fc.all));
    });

    run_check(suite, "mixed_subdivision", [&] {
        auto ms = from_tropical_complex(full);
        auto f = ms.f_vector(), g = full.f_vector();
        for (std::size_t k = 0; k < d; ++k)
            if (f[k] != g[d - 1 - k])
                return std::string("FAIL: face numbers differ from the source complex");
        if (!ms.fine)
            return std::string("not fine");
        std::set<std::vector<unsigned>> points;
        for (auto v : ms.vertices())
            points.insert(coarse_type_mixed(ms.cells[v]).counts());
        auto expected = binomial(static_cast<std::int64_t>(n + d - 1), static_cast<std::int64_t>(d - 1));
        return verdict(points.size() == expected && ms.vertices().size() == expected,
                       std::to_string(points.size()) + " lattice points");
    });

    run_check(suite, "generic_counts", [&] {
        if (!is_fine(dual_subdivision(full)))
            return std::string("SKIP: not generic");
        auto expected = generic_fvector(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
        auto f = full.f_vector();
        bool ok = std::equal(f.begin(), f.end(), expected.begin(), expected.end()) &&
                  coarse_type_ideal(full) == maximal_ideal_power(VariableSpace::coarse(d), static_cast<unsigned>(n));
        auto bt = betti_table(build_cocellular(full, Granularity::coarse));
        for (std::size_t i = 0; i < d; ++i)
            ok = ok && bt.total(i) == stable_betti(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d),
                                                   static_cast<std::int64_t>(i));
        return verdict(ok, "generic formulas");
    });
    return suite;
}

}   // namespace tropres
