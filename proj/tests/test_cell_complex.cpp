#include <catch_amalgamated.hpp>

#include <random>

#include <tropres/cell_complex.hpp>

using namespace tropres;

namespace {

Arrangement running_example()
{
    return Arrangement::from_integers({{0, 3, 6}, {0, 5, 2}, {0, 0, 1}, {1, 5, 0}});
}

Arrangement nongeneric_example()
{
    return Arrangement::from_integers({{0, 1, 1}, {0, 0, 1}, {0, 1, 0}});
}

Arrangement random_arrangement(std::mt19937_64& rng, std::size_t n, std::size_t d, int range)
{
    std::uniform_int_distribution<int> coord(-range, range);
    std::vector<std::vector<long long>> rows(n, std::vector<long long>(d));
    for (auto& r : rows)
        for (auto& x : r)
            x = coord(rng);
    return Arrangement::from_integers(rows);
}

/** Brute force: all d^n sector choices, then closure under pairwise joins. */
std::set<TypeMatrix> join_closure_oracle(const Arrangement& arr)
{
    std::size_t n = arr.size(), d = arr.dim();
    std::set<TypeMatrix> maximal;
    std::vector<std::size_t> choice(n, 0);
    while (true)
    {
        TypeMatrix t(n, d);
        for (std::size_t i = 0; i < n; ++i)
            t.set(i, choice[i]);
        auto system = constraint_system_of(arr, t);
        if (system.close() && !system.has_forced_equality())
            maximal.insert(saturate(arr, t));
        std::size_t i = 0;
        while (i < n && ++choice[i] == d)
            choice[i++] = 0;
        if (i == n)
            break;
    }
    std::set<TypeMatrix> all = maximal;
    std::vector<TypeMatrix> frontier(all.begin(), all.end());
    while (!frontier.empty())
    {
        std::vector<TypeMatrix> next;
        for (const auto& a : frontier)
            for (const auto& b : maximal)
            {
                auto joined = entrywise_max(a, b);
                auto system = constraint_system_of(arr, joined);
                if (!system.close())
                    continue;
                auto s = saturate(arr, joined);
                if (all.insert(s).second)
                    next.push_back(s);
            }
        frontier = std::move(next);
    }
    return all;
}

TropicalPoint barycenter(const TropicalComplex& tc, std::size_t x)
{
    // vertices of a bounded cell are the 0-cells below it
    std::set<std::size_t> vertices, stack{x};
    while (!stack.empty())
    {
        auto c = *stack.begin();
        stack.erase(stack.begin());
        if (tc[c].dim == 0)
            vertices.insert(c);
        for (auto f : tc.facets(c))
            stack.insert(f);
    }
    std::vector<Rational> sum(tc.ambient(), 0);
    for (auto v : vertices)
        for (std::size_t k = 0; k < tc.ambient(); ++k)
            sum[k] += (*tc[v].point)[k];
    for (auto& s : sum)
        s /= static_cast<long>(vertices.size());
    return TropicalPoint(sum);
}

void check_structure(const Arrangement& arr, const TropicalComplex& tc)
{
    std::size_t d = arr.dim();
    for (std::size_t x = 0; x < tc.size(); ++x)
    {
        const auto& cell = tc[x];
        CHECK(saturate(arr, cell.type) == cell.type);
        CHECK(cell_dimension(arr, cell.type) == cell.dim);
        CHECK(cell.coarse == cell.type.column_sums());
        CHECK(cell.bounded == cell.coarse.all_positive());
        if (cell.dim + 1 < d)
            CHECK_FALSE(tc.cofacets(x).empty());
        for (auto f : tc.facets(x))
        {
            CHECK(tc[f].dim + 1 == cell.dim);
            CHECK(cell.type.leq(tc[f].type));
            CHECK(tc[f].coarse != cell.coarse);
        }
        // colabeling and labeling by entrywise max
        if (!tc.cofacets(x).empty())
        {
            TypeMatrix join(arr.size(), d);
            for (auto c : tc.cofacets(x))
                join = entrywise_max(join, tc[c].type);
            CHECK(join == cell.type);
        }
        if (cell.dim >= 1 && cell.bounded)
        {
            TypeMatrix join(arr.size(), d);
            for (auto f : tc.facets(x))
                join = entrywise_max(join, cotype(tc[f].type));
            CHECK(join == cotype(cell.type));
        }
        if (cell.dim == 0)
            CHECK(fine_type(arr, *cell.point) == cell.type);
        else if (cell.bounded)
            CHECK(fine_type(arr, barycenter(tc, x)) == cell.type);
    }
    // covers are exactly the dimension-one steps of reversed type inclusion
    std::size_t expected = 0;
    for (std::size_t a = 0; a < tc.size(); ++a)
        for (std::size_t b = 0; b < tc.size(); ++b)
            if (tc[a].dim + 1 == tc[b].dim && tc[b].type.leq(tc[a].type))
                ++expected;
    CHECK(tc.covers().size() == expected);

    long long sign = (d % 2 == 1) ? 1 : -1;
    CHECK(tc.euler_characteristic() == sign);

    std::set<CoarseVector> maximal_coarse;
    for (auto x : tc.of_dimension(d - 1))
        CHECK(maximal_coarse.insert(tc[x].coarse).second);
}

}   // namespace

TEST_CASE("difference constraint feasibility")
{
    ConstraintSystem empty(3);
    CHECK(feasible(empty));
    ConstraintSystem cycle(2);
    cycle.add_bound(0, 1, -1);
    cycle.add_bound(1, 0, 0);
    CHECK_FALSE(feasible(cycle));
    CHECK_THROWS_AS(cycle.feasible(), PreconditionError);

    auto single = Arrangement::from_integers({{0, 5}});
    auto cs = constraint_system_of(single, TypeMatrix::from_rows(2, {{0}}));
    CHECK(cs.has_bound(0, 1));
    CHECK(cs.bound(0, 1) == 5);
    CHECK_FALSE(cs.has_bound(1, 0));
    CHECK_THROWS_AS(constraint_system_of(single, TypeMatrix(1, 2)), InvalidTypeError);
}

TEST_CASE("closure satisfies the triangle inequality")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> w(-2, 9);
    for (int trial = 0; trial < 100; ++trial)
    {
        ConstraintSystem cs(5);
        for (std::size_t k = 0; k < 5; ++k)
            for (std::size_t j = 0; j < 5; ++j)
                if (k != j && w(rng) > 3)
                    cs.add_bound(k, j, w(rng));
        if (!cs.close())
            continue;
        for (std::size_t a = 0; a < 5; ++a)
            for (std::size_t b = 0; b < 5; ++b)
                for (std::size_t c = 0; c < 5; ++c)
                    if (cs.has_bound(a, b) && cs.has_bound(b, c))
                        CHECK((cs.has_bound(a, c) && cs.bound(a, c) <= cs.bound(a, b) + cs.bound(b, c)));
    }
}

TEST_CASE("saturation and dimension of single cells")
{
    auto arr = running_example();
    auto sigma = TypeMatrix::from_rows(3, {{0}, {0}, {1}, {2}});
    CHECK(feasible(constraint_system_of(arr, sigma)));
    CHECK(saturate(arr, sigma) == sigma);
    CHECK(cell_dimension(arr, sigma) == 2);

    Arrangement apex({TropicalPoint{0, 2, -1}});
    auto all = TypeMatrix::from_rows(3, {{0, 1, 2}});
    CHECK(cell_dimension(apex, all) == 0);
    auto cs = constraint_system_of(apex, all);
    REQUIRE(cs.close());
    CHECK(cs.bound(0, 1) == 2);
    CHECK(cs.bound(1, 0) == -2);

    Arrangement line({TropicalPoint{0, 0}});
    CHECK(saturate(line, TypeMatrix::from_rows(2, {{0}})) == TypeMatrix::from_rows(2, {{0}}));
    CHECK(saturate(line, TypeMatrix::from_rows(2, {{0, 1}})) == TypeMatrix::from_rows(2, {{0, 1}}));

    CHECK_THROWS_AS(saturate(arr, TypeMatrix::from_rows(3, {{2}, {1}, {0}, {2}})), InfeasibleError);
}

TEST_CASE("running example decomposition")
{
    auto arr = running_example();
    auto tc = enumerate_cells(arr);
    CHECK(tc.f_vector() == std::vector<std::size_t>{10, 24, 15});
    CHECK(enumerate_maximal_cells(arr).size() == 15);

    auto bounded = bounded_subcomplex(tc);
    CHECK(bounded.of_dimension(2).size() == 3);
    std::size_t maximal_edges = 0;
    for (auto x : bounded.inclusion_maximal())
        if (bounded[x].dim == 1)
        {
            ++maximal_edges;
            bool at_v1 = false;
            for (auto f : bounded.facets(x))
                at_v1 = at_v1 || (bounded[f].point == arr[0]);
            CHECK(at_v1);
        }
    CHECK(maximal_edges == 1);

    auto p_type = fine_type(arr, TropicalPoint{0, 1, 0});
    REQUIRE(tc.index_of(p_type).has_value());
    CHECK(tc[*tc.index_of(p_type)].dim == 2);

    // the edge shared by two adjacent maximal cells is their saturated join
    for (auto x : tc.of_dimension(1))
        if (tc.cofacets(x).size() == 2)
        {
            auto a = tc[tc.cofacets(x)[0]].type, b = tc[tc.cofacets(x)[1]].type;
            CHECK(saturate(arr, entrywise_max(a, b)) == tc[x].type);
            CHECK(cell_dimension(arr, tc[x].type) == 1);
        }
    check_structure(arr, tc);
}

TEST_CASE("small and degenerate decompositions")
{
    auto one = Arrangement::from_integers({{0, 3}});
    auto tc = enumerate_cells(one);
    CHECK(tc.f_vector() == std::vector<std::size_t>{1, 2});
    auto b = bounded_subcomplex(tc);
    CHECK(b.size() == 1);
    CHECK(b[0].point == one[0]);
    check_structure(one, tc);

    auto six = nongeneric_example();
    auto tc6 = enumerate_cells(six);
    auto b6 = bounded_subcomplex(tc6);
    CHECK(b6.f_vector() == std::vector<std::size_t>{4, 4, 1});
    check_structure(six, tc6);

    // coinciding apices
    auto dup = Arrangement::from_integers({{0, 1, 2}, {0, 1, 2}, {0, 0, 0}});
    check_structure(dup, enumerate_cells(dup));

    auto trivial = Arrangement::from_integers({{0}});
    auto tc1 = enumerate_cells(trivial);
    CHECK(tc1.size() == 1);
    CHECK(tc1[0].bounded);
}

TEST_CASE("enumeration agrees with the join-closure oracle")
{
    std::mt19937_64 rng(17);
    std::vector<Arrangement> cases{running_example(), nongeneric_example()};
    for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {4, 3}, {3, 4}, {5, 3}, {2, 5}})
    {
        cases.push_back(random_arrangement(rng, n, d, 20));
        cases.push_back(random_arrangement(rng, n, d, 1));   // many ties
    }
    for (const auto& arr : cases)
    {
        auto tc = enumerate_cells(arr);
        std::set<TypeMatrix> types;
        for (const auto& c : tc.cells())
            types.insert(c.type);
        CHECK(types == join_closure_oracle(arr));
        check_structure(arr, tc);
    }
}

TEST_CASE("sampled points land in enumerated cells")
{
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> coord(-12, 12);
    for (int trial = 0; trial < 6; ++trial)
    {
        auto arr = random_arrangement(rng, 3 + trial % 3, 3 + trial % 2, 3);
        auto tc = enumerate_cells(arr);
        for (int s = 0; s < 300; ++s)
        {
            std::vector<Rational> c(arr.dim());
            for (auto& x : c)
                x = Rational(coord(rng), 2);
            TropicalPoint p(c);
            auto t = fine_type(arr, p);
            CHECK(saturate(arr, t) == t);
            CHECK(tc.index_of(t).has_value());
        }
    }
}

TEST_CASE("large coordinates use the arbitrary-precision engine")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 4; ++trial)
    {
        auto small = random_arrangement(rng, 4, 3, 30);
        std::vector<TropicalPoint> scaled;
        Integer factor = Integer(1) << 70;
        for (const auto& a : small.apices())
        {
            std::vector<Rational> c;
            for (const auto& x : a.coords())
                c.push_back(x * Rational(factor) + Rational(1, 3));
            scaled.push_back(TropicalPoint(c));
        }
        Arrangement big(scaled);
        auto a = enumerate_cells(small), b = enumerate_cells(big);
        REQUIRE(a.size() == b.size());
        for (std::size_t x = 0; x < a.size(); ++x)
            CHECK(a[x].type == b[x].type);
        CHECK(a.covers() == b.covers());
        for (auto x : b.of_dimension(0))
            CHECK(fine_type(big, *b[x].point) == b[x].type);
    }
}

TEST_CASE("resource limits are enforced")
{
    std::mt19937_64 rng(41);
    auto arr = random_arrangement(rng, 5, 4, 50);
    CHECK_THROWS_AS(enumerate_cells(arr, EnumerationLimits{10, 1000}), ResourceLimitError);
    CHECK_THROWS_AS(enumerate_cells(arr, EnumerationLimits{1'000'000, 5}), ResourceLimitError);
}
