#include <catch_amalgamated.hpp>

#include <tropres/tropres.hpp>

using namespace tropres;

namespace {

ArrangementDocument running_doc()
{
    return to_document(Arrangement::from_integers({{0, 3, 6}, {0, 5, 2}, {0, 0, 1}, {1, 5, 0}}), "running", true);
}

ArrangementDocument nongeneric_doc()
{
    return to_document(Arrangement::from_integers({{0, 1, 1}, {0, 0, 1}, {0, 1, 0}}), "nongeneric", false);
}

MonomialIdeal ideal_of(const VariableSpace& space, const std::vector<std::string>& gens)
{
    std::vector<Monomial> ms;
    for (const auto& g : gens)
        ms.push_back(parse_monomial(space, g));
    return minimalize(space, ms);
}

std::size_t count(const std::string& text, const std::string& needle)
{
    std::size_t c = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
        ++c;
    return c;
}

}   // namespace

TEST_CASE("documents round-trip exactly")
{
    ArrangementDocument doc;
    doc.name = "mixed";
    doc.seed = 42;
    doc.generic = true;
    Integer huge = Integer(1) << 90;
    doc.points = {{Rational(0), Rational(1, 3), Rational(-7, 2)},
                  {Rational(huge, 3), Rational(-huge), Rational(5)}};
    auto text = serialize(doc);
    CHECK(parse_document(text) == doc);
    CHECK(serialize(parse_document(text)) == text);
    CHECK(text.find("\"generic\"") < text.find("\"name\""));
    CHECK(text.find("\"points\"") < text.find("\"seed\""));

    auto j = to_json(doc);
    CHECK(j["points"][0][1] == Json::array({1, 3}));
    CHECK(j["points"][1][0][0].is_string());

    auto minimal = parse_document(R"({"points": [[[1,1],[2,1]]], "comment": "ignored"})");
    CHECK(minimal.points.size() == 1);
    CHECK_FALSE(minimal.seed);
    CHECK(parse_document(R"({"points": [[["4","6"],[0,1]]]})").points[0][0] == Rational(2, 3));

    CHECK_THROWS_AS(parse_document("{"), InputError);
    CHECK_THROWS_AS(parse_document("[]"), InputError);
    CHECK_THROWS_AS(parse_document(R"({"points": []})"), InputError);
    CHECK_THROWS_AS(parse_document(R"({"points": [[[1,0]]]})"), InputError);
    CHECK_THROWS_AS(parse_document(R"({"points": [[[1,2,3]]]})"), InputError);
    CHECK_THROWS_AS(parse_document(R"({"points": [[[1,1]],[[1,1],[2,1]]]})"), InputError);
    CHECK_THROWS_AS(parse_document(R"({"points": [[["1/2",1]]]})"), InputError);
    CHECK_THROWS_AS(read_document("/nonexistent/file.json"), InputError);
}

TEST_CASE("Stanley-Reisner ideals of simplicial complexes")
{
    auto space = VariableSpace::coarse(3);
    CHECK(stanley_reisner_from_crosscut(SimplicialComplex(3, {0b111}), space).is_zero());
    CHECK(stanley_reisner_from_crosscut(SimplicialComplex(3, {0b011, 0b100}), space) ==
          ideal_of(space, {"x1*x3", "x2*x3"}));
    CHECK(stanley_reisner_from_crosscut(SimplicialComplex(3, {0b011}), space) == ideal_of(space, {"x3"}));
    CHECK_THROWS_AS(stanley_reisner_from_crosscut(SimplicialComplex(2, {0b11}), space), DimensionError);
}

TEST_CASE("face poset of the worked non-generic example")
{
    auto rep = face_poset_from_points(nongeneric_doc(), {Field::rationals(), Field::prime(2), Field::prime(3)});
    auto grid = VariableSpace::grid(3, 3);
    CHECK(rep.stanley_reisner ==
          ideal_of(grid, {"x12*x21", "x12*x23", "x13*x31", "x23*x31", "x13*x32", "x21*x32", "x23*x32"}));
    CHECK(rep.cotype_from_crosscut ==
          ideal_of(grid, {"x13*x21*x23", "x12*x13*x23*x32", "x12*x31*x32", "x21*x23*x31*x32"}));
    CHECK(rep.cotype_from_crosscut == rep.cotype_from_cells);
    CHECK(rep.bounded.f_vector() == std::vector<std::size_t>{4, 4, 1});
    CHECK(rep.verified());
    CHECK(rep.verification.size() == 6);
    std::map<std::pair<std::size_t, unsigned>, std::size_t> expected{{{0, 3}, 2}, {{0, 4}, 2}, {{1, 5}, 4}, {{2, 6}, 1}};
    CHECK(rep.fine_betti.by_total_degree() == expected);
    CHECK_FALSE(rep.generic);

    auto j = to_json(rep);
    CHECK(j["stanley_reisner"].size() == 7);
    CHECK(j["cotype_ideal"].size() == 4);
    CHECK(j["f_vector"] == Json::array({4, 4, 1}));
}

TEST_CASE("face poset of the running example")
{
    auto rep = face_poset_from_points(running_doc());
    CHECK(rep.generic);
    CHECK(rep.verified());
    CHECK(rep.bounded.of_dimension(2).size() == 3);
    std::size_t maximal_edges = 0;
    for (auto x : rep.bounded.inclusion_maximal())
        maximal_edges += rep.bounded[x].dim == 1;
    CHECK(maximal_edges == 1);
    for (std::size_t i = 0; i <= rep.bounded.max_dim(); ++i)
        CHECK(rep.fine_betti.total(i) == rep.bounded.of_dimension(i).size());

    auto single = face_poset_from_points(to_document(Arrangement::from_integers({{0, 2, 5}}), "single"));
    CHECK(single.bounded.f_vector() == std::vector<std::size_t>{1, 0, 0});
    CHECK(single.cotype_from_cells.is_unit());
    CHECK(single.stanley_reisner.is_zero());
    CHECK(single.verified());
}

TEST_CASE("two routes to the cotype ideal agree")
{
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> small(-2, 2);
    for (int t = 0; t < 12; ++t)
    {
        std::size_t n = 2 + t % 3, d = 2 + t % 2;
        std::vector<std::vector<long long>> rows(n, std::vector<long long>(d));
        for (auto& r : rows)
            for (auto& x : r)
                x = small(rng);
        auto doc = to_document(Arrangement::from_integers(rows), "small");
        CHECK_NOTHROW(face_poset_from_points(doc));
        CHECK(face_poset_from_points(doc).verified());
    }
    for (std::uint64_t seed = 0; seed < 4; ++seed)
        CHECK(face_poset_from_points(generate_random_generic(3, 4, seed)).verified());
}

TEST_CASE("random generic generation")
{
    auto a = generate_random_generic(4, 3, 11), b = generate_random_generic(4, 3, 11);
    CHECK(a == b);
    CHECK(a.generic);
    CHECK(a.seed == 11u);
    auto tc = enumerate_cells(to_arrangement(a));
    CHECK(tc.of_dimension(2).size() == 15);
    CHECK(tc.f_vector() == std::vector<std::size_t>{10, 24, 15});

    auto trivial = generate_random_generic(1, 1, 3);
    CHECK(trivial.points.size() == 1);
    CHECK_THROWS_AS(generate_random_generic(0, 3, 1), PreconditionError);
    CHECK_THROWS_AS(generate_random_generic(4, 3, 1, 5, 0), ResourceLimitError);

    auto other = generate_random_generic(4, 3, 12);
    CHECK(other != a);
    std::multiset<std::pair<std::size_t, CoarseVector>> ma, mb;
    for (const auto& c : tc.cells())
        ma.emplace(c.dim, c.coarse);
    auto tc_other = enumerate_cells(to_arrangement(other));
    for (const auto& c : tc_other.cells())
        mb.emplace(c.dim, c.coarse);
    CHECK(ma == mb);
}

TEST_CASE("verification suite")
{
    for (const auto& doc : {running_doc(), nongeneric_doc(), generate_random_generic(3, 3, 5)})
    {
        auto suite = verify_all(doc);
        CHECK(suite.ok());
        for (const auto& c : suite.checks)
            CHECK(c.status != CheckStatus::fail);
    }
    auto generic = verify_all(running_doc());
    CHECK(generic.checks.back().name == "generic_counts");
    CHECK(generic.checks.back().status == CheckStatus::pass);
    CHECK(verify_all(nongeneric_doc()).checks.back().status == CheckStatus::skip);

    // duplicate apices: degenerate but well defined
    auto dup = to_document(Arrangement::from_integers({{0, 1, 2}, {0, 1, 2}, {0, 3, -1}}), "duplicate");
    auto suite = verify_all(dup);
    CHECK(suite.ok());
    CHECK(suite.checks.front().detail.find("duplicate apices") != std::string::npos);

    // enumeration limits are reported, not thrown
    auto limited = verify_all(running_doc(), EnumerationLimits{5, 2'000'000});
    REQUIRE(limited.checks.size() == 1);
    CHECK(limited.checks[0].status == CheckStatus::skip);

    auto j = to_json(generic);
    CHECK(j["ok"] == true);
    CHECK(j["checks"].size() == generic.checks.size());
}

TEST_CASE("SVG rendering")
{
    auto running = Arrangement::from_integers({{0, 3, 6}, {0, 5, 2}, {0, 0, 1}, {1, 5, 0}});
    auto svg = render_svg(running);
    CHECK(svg == render_svg(running));
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("version=\"1.1\"") != std::string::npos);
    auto shaded = svg.substr(svg.find("<g id=\"bounded-cells\">"), svg.find("<g id=\"edges\"") - svg.find("<g id=\"bounded-cells\">"));
    CHECK(count(shaded, "<polygon") == 3);
    auto apices = svg.substr(svg.find("<g id=\"apices\">"));
    CHECK(count(apices, "<circle") == 4);
    auto edges = svg.substr(svg.find("<g id=\"edges\""), svg.find("<g id=\"vertices\">") - svg.find("<g id=\"edges\""));
    CHECK(count(edges, "<line") == 24);

    auto single = render_svg(Arrangement::from_integers({{0, 0, 0}}));
    auto single_edges = single.substr(single.find("<g id=\"edges\""));
    CHECK(count(single_edges.substr(0, single_edges.find("</g>")), "<line") == 3);
    CHECK(count(single, "<polygon") == 0);

    auto stair = render_svg(staircase_subdivision(4, 3));
    CHECK(count(stair, "<circle") == 15);
    CHECK(count(stair, "fill=\"#eec8c8\"") == 0);
    CHECK(count(stair.substr(stair.find("<g id=\"cells\"")), "<polygon") == 10);

    CHECK_THROWS_AS(render_svg(Arrangement::from_integers({{0, 1, 2, 3}})), DimensionError);
    CHECK_THROWS_AS(render_svg(staircase_subdivision(2, 4)), DimensionError);
}
