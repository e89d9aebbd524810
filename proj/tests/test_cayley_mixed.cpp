#include <catch_amalgamated.hpp>

#include <chrono>
#include <random>

#include <tropres/cayley.hpp>
#include <tropres/dual_subdivision.hpp>

using namespace tropres;

namespace {

Arrangement running_example()
{
    return Arrangement::from_integers({{0, 3, 6}, {0, 5, 2}, {0, 0, 1}, {1, 5, 0}});
}

Arrangement random_generic(std::mt19937_64& rng, std::size_t n, std::size_t d)
{
    std::uniform_int_distribution<int> coord(-1000000, 1000000);
    while (true)
    {
        std::vector<std::vector<long long>> rows(n, std::vector<long long>(d));
        for (auto& r : rows)
            for (auto& x : r)
                x = coord(rng);
        auto arr = Arrangement::from_integers(rows);
        if (is_fine(dual_subdivision(arr)))
            return arr;
    }
}

/** All compositions of n into d parts. */
std::set<std::vector<unsigned>> lattice_points(unsigned n, std::size_t d)
{
    std::set<std::vector<unsigned>> out;
    std::vector<unsigned> c(d, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned left) {
        if (pos + 1 == d)
        {
            c[pos] = left;
            out.insert(c);
            return;
        }
        for (unsigned v = 0; v <= left; ++v)
        {
            c[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, n);
    return out;
}

/** Maximal cells of the inductively built complex P_n(x_k, ..., x_d) (0-based k). */
std::vector<std::vector<std::vector<std::size_t>>> inductive_cells(std::size_t n, std::size_t k, std::size_t d)
{
    auto interval = [](std::size_t a, std::size_t b) {
        std::vector<std::size_t> v;
        for (auto x = a; x <= b; ++x)
            v.push_back(x);
        return v;
    };
    if (n == 1)
        return {{interval(k, d - 1)}};
    std::vector<std::vector<std::vector<std::size_t>>> out;
    for (auto m = k; m < d; ++m)
        for (auto rest : inductive_cells(n - 1, m, d))
        {
            rest.insert(rest.begin(), interval(k, m));
            out.push_back(rest);
        }
    return out;
}

void check_lattice_points(const MixedSubdivision& ms)
{
    REQUIRE(ms.fine);
    std::set<std::vector<unsigned>> seen;
    for (auto v : ms.vertices())
    {
        auto pts = embed_mixed_cell(ms.cells[v]);
        REQUIRE(pts.size() == 1);
        CHECK(pts[0] == coarse_type_mixed(ms.cells[v]).counts());
        seen.insert(pts[0]);
    }
    CHECK(seen.size() == ms.vertices().size());
    CHECK(seen == lattice_points(static_cast<unsigned>(ms.n), ms.d));
    CHECK(ms.vertices().size() == binomial(static_cast<std::int64_t>(ms.n + ms.d - 1),
                                           static_cast<std::int64_t>(ms.d - 1)));
}

}   // namespace

TEST_CASE("mixed cell invariants")
{
    MixedCell tau(3, {{0}, {0}, {1}, {2}});
    CHECK(coarse_type_mixed(tau) == CoarseVector{2, 1, 1});
    CHECK(dual_coarse_type(tau) == std::vector<std::size_t>{1, 1, 1, 1});
    CHECK(tau.dim() == 0);
    CHECK(embed_mixed_cell(tau) == std::vector<std::vector<unsigned>>{{2, 1, 1}});
    CHECK(tau.to_string() == "{1}+{1}+{2}+{3}");

    MixedCell simplex(4, {{0, 1, 2, 3}});
    CHECK(coarse_type_mixed(simplex) == CoarseVector{1, 1, 1, 1});
    CHECK(dual_coarse_type(simplex) == std::vector<std::size_t>{4});
    CHECK(simplex.dim() == 3);

    MixedCell segment(2, {{0, 1}});
    CHECK(embed_mixed_cell(segment) == std::vector<std::vector<unsigned>>{{0, 1}, {1, 0}});

    MixedCell parallel(3, {{0, 1}, {0, 1}});
    CHECK(parallel.dim() == 1);
    CHECK(parallel.fine_dim() == 2);
    CHECK(embed_mixed_cell(parallel).size() == 3);

    CHECK_THROWS_AS(MixedCell(3, {{}}), InvalidTypeError);
    CHECK_THROWS_AS(MixedCell(3, {{3}}), DimensionError);

    std::mt19937_64 rng(8);
    std::bernoulli_distribution coin(0.4);
    for (int t = 0; t < 100; ++t)
    {
        std::size_t n = 1 + t % 5, d = 1 + t % 4;
        std::vector<std::vector<std::size_t>> parts(n);
        for (auto& p : parts)
        {
            for (std::size_t k = 0; k < d; ++k)
                if (coin(rng))
                    p.push_back(k);
            if (p.empty())
                p.push_back(t % d);
        }
        MixedCell c(d, parts);
        auto dt = dual_coarse_type(c);
        CHECK(coarse_type_mixed(c).total() == std::accumulate(dt.begin(), dt.end(), std::size_t(0)));
        CHECK(coarse_type_mixed(c) == c.to_type().column_sums());
        CHECK(c.dim() <= c.fine_dim());
        CHECK(DualCell(c.to_type()).dim() == c.dim() + n - 1);
    }
}

TEST_CASE("subdivisions from tropical complexes")
{
    auto running = enumerate_cells(running_example());
    auto ms = from_tropical_complex(running);
    CHECK(ms.fine);
    CHECK(ms.vertices().size() == 15);
    check_lattice_points(ms);
    for (std::size_t x = 0; x < running.size(); ++x)
    {
        CHECK(coarse_type_mixed(ms.cells[x]) == running[x].coarse);
        CHECK(ms.dims[x] + running[x].dim == 2);
    }
    auto f = ms.f_vector();
    CHECK(f == std::vector<std::size_t>{15, 24, 10});

    auto single = from_tropical_complex(enumerate_cells(Arrangement::from_integers({{0, 2, 7, 1}})));
    CHECK(single.fine);
    REQUIRE(single.maximal().size() == 1);
    CHECK(single.cells[single.maximal()[0]] == MixedCell(4, {{0, 1, 2, 3}}));

    auto six = from_tropical_complex(enumerate_cells(Arrangement::from_integers({{0, 1, 1}, {0, 0, 1}, {0, 1, 0}})));
    CHECK_FALSE(six.fine);
    CHECK(six.vertices().size() < 10);
}

TEST_CASE("staircase subdivisions")
{
    CHECK(staircase_maximal_cells(2, 2) == std::vector<MixedCell>{MixedCell(2, {{0}, {0, 1}}), MixedCell(2, {{0, 1}, {1}})});
    CHECK(staircase_maximal_cells(1, 4) == std::vector<MixedCell>{MixedCell(4, {{0, 1, 2, 3}})});
    CHECK_THROWS_AS(staircase_maximal_cells(0, 3), PreconditionError);

    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t d = 1; d <= 4; ++d)
        {
            auto cells = staircase_maximal_cells(n, d);
            CHECK(cells.size() == binomial(static_cast<std::int64_t>(n + d - 2), static_cast<std::int64_t>(n - 1)));
            std::vector<MixedCell> oracle;
            for (auto& parts : inductive_cells(n, 0, d))
                oracle.emplace_back(d, parts);
            std::sort(oracle.begin(), oracle.end());
            CHECK(cells == oracle);

            auto ms = staircase_subdivision(n, d);
            CHECK(ms.fine);
            CHECK(maximal_cells(ms) == cells);
            if (d >= 2)
                check_lattice_points(ms);
            auto expected = generic_fvector(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
            auto f = ms.f_vector();
            for (std::size_t k = 0; k < d; ++k)
                CHECK(f[k] == expected[d - 1 - k]);
        }
    auto sign = calibrate_cyclic_sign(3, 3);
    CHECK(sign == -1);
    CHECK(cyclic_arrangement(1, 5).size() == 1);
    CHECK(staircase_subdivision(4, 3).vertices().size() == 15);
}

TEST_CASE("mixed cellular resolutions of powers of the maximal ideal")
{
    std::mt19937_64 rng(13);
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t d = 2; d <= 4; ++d)
        {
            auto target = maximal_ideal_power(VariableSpace::coarse(d), static_cast<unsigned>(n));
            for (const auto& ms : {staircase_subdivision(n, d), from_tropical_complex(enumerate_cells(random_generic(rng, n, d)))})
            {
                auto ac = build_mixed_cellular(ms);
                CHECK(check_minimality(ac));
                CHECK(ac.resolved_ideal() == target);
                CHECK(verify_resolution(ac, target, Field::rationals()).exact());
                CHECK(verify_resolution(ac, target, Field::prime(2)).exact());
                for (std::size_t i = 0; i < d; ++i)
                    CHECK(ac.degrees[i].size() == stable_betti(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d),
                                                               static_cast<std::int64_t>(i)));
            }
        }
}

TEST_CASE("vertex cells of fine subdivisions are lattice points")
{
    std::mt19937_64 rng(17);
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::size_t d = 2; d <= 4; ++d)
        {
            auto tc = enumerate_cells(random_generic(rng, n, d));
            auto ms = from_tropical_complex(tc);
            check_lattice_points(ms);
            auto f = ms.f_vector(), g = tc.f_vector();
            for (std::size_t k = 0; k < d; ++k)
                CHECK(f[k] == g[d - 1 - k]);
        }
}

TEST_CASE("tropical hypersimplices")
{
    auto h = hypersimplex_vertices(2, 4);
    REQUIRE(h.size() == 6);
    CHECK(h.rows()[0] == std::vector<Rational>{0, 0, 1, 1});
    CHECK(h.rows()[5] == std::vector<Rational>{1, 1, 0, 0});
    CHECK_THROWS_AS(hypersimplex_vertices(0, 4), PreconditionError);
    CHECK_THROWS_AS(hypersimplex_vertices(4, 4), PreconditionError);

    CHECK(hypersimplex_coarse_type_classes(2, 4) ==
          std::vector<CoarseVector>{{6, 0, 0, 0}, {4, 2, 0, 0}, {3, 2, 1, 0}});

    // k = 1: generators of degree n, Artinian; generic (so the full power m^n) only up to n = 3
    for (std::size_t n = 2; n <= 5; ++n)
    {
        auto tc = enumerate_cells(hypersimplex_vertices(1, n));
        auto ideal = coarse_type_ideal(tc);
        auto power = maximal_ideal_power(VariableSpace::coarse(n), static_cast<unsigned>(n));
        CHECK(ideal.is_artinian());
        for (const auto& g : ideal.generators())
            CHECK(g.degree() == n);
        CHECK(is_fine(dual_subdivision(tc)) == (n <= 3));
        CHECK((ideal == power) == (n <= 3));
    }

    for (auto [k, n] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 3}, {2, 4}, {3, 4}, {2, 5}, {3, 5}, {4, 5}})
    {
        auto start = std::chrono::steady_clock::now();
        auto tc = enumerate_cells(hypersimplex_vertices(k, n));
        std::set<CoarseVector> orbits;
        for (auto x : tc.of_dimension(n - 1))
        {
            CHECK_FALSE(tc[x].bounded);
            CHECK_FALSE(tc[x].coarse.all_positive());
            orbits.insert(sorted_decreasing(tc[x].coarse));
        }
        auto classes = hypersimplex_coarse_type_classes(k, n);
        CHECK(orbits == std::set<CoarseVector>(classes.begin(), classes.end()));
        auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        CHECK(seconds < 120.0);
    }
}
