// Command-line front end: reads an arrangement (document path or builtin)
// and writes JSON or SVG to standard output.
//
// Exit codes: 0 success, 1 invariant failure, 2 input error, 3 resource limit.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <tropres/tropres.hpp>

using namespace tropres;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invariant = 1;
constexpr int exit_input = 2;
constexpr int exit_resource = 3;

std::size_t parse_count(const std::string& text, const std::string& what)
{
    try
    {
        std::size_t used = 0;
        long long v = std::stoll(text, &used);
        if (used != text.size() || v < 0)
            throw InputError("");
        return static_cast<std::size_t>(v);
    }
    catch (const std::exception&)
    {
        throw InputError("expected a nonnegative integer for " + what + ", got '" + text + "'");
    }
}

/** A document path or one of: running-example, nongeneric-example, cyclic N D, hypersimplex K N. */
ArrangementDocument load_source(const std::vector<std::string>& source)
{
    if (source.empty())
        throw InputError("missing arrangement (document path or builtin name)");
    const auto& head = source[0];
    auto expect_args = [&](std::size_t count) {
        if (source.size() != count + 1)
            throw InputError("'" + head + "' takes " + std::to_string(count) + " arguments");
    };
    if (head == "running-example")
    {
        expect_args(0);
        return to_document(Arrangement::from_integers({{0, 3, 6}, {0, 5, 2}, {0, 0, 1}, {1, 5, 0}}), head, true);
    }
    if (head == "nongeneric-example")
    {
        expect_args(0);
        return to_document(Arrangement::from_integers({{0, 1, 1}, {0, 0, 1}, {0, 1, 0}}), head, false);
    }
    if (head == "cyclic")
    {
        expect_args(2);
        auto n = parse_count(source[1], "n"), d = parse_count(source[2], "d");
        return to_document(cyclic_arrangement(n, d), "cyclic-" + source[1] + "-" + source[2], true);
    }
    if (head == "hypersimplex")
    {
        expect_args(2);
        auto k = parse_count(source[1], "k"), n = parse_count(source[2], "n");
        return to_document(hypersimplex_vertices(k, n), "hypersimplex-" + source[1] + "-" + source[2], false);
    }
    expect_args(0);
    return read_document(head);
}

Json ideal_to_json(const MonomialIdeal& ideal) { return ideal.generator_strings(); }

Granularity parse_granularity(const std::string& g) { return g == "fine" ? Granularity::fine : Granularity::coarse; }

Field parse_field(const std::string& f)
{
    if (f == "QQ" || f == "0")
        return Field::rationals();
    return Field::prime(static_cast<std::uint32_t>(parse_count(f, "field")));
}

struct Options
{
    std::vector<std::string> source;
    std::string granularity = "coarse";
    std::vector<std::string> fields{"QQ"};
    std::string view = "tropical";
    std::string out;
    std::uint64_t seed = 0;
    std::size_t retries = 1000;
    std::size_t max_nodes = EnumerationLimits{}.max_search_nodes;
    std::size_t max_cells = EnumerationLimits{}.max_cells;
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run(const std::string& verb, const Options& opt)
{
    EnumerationLimits limits{opt.max_nodes, opt.max_cells};

    if (verb == "generate")
    {
        if (opt.source.size() != 2)
            throw InputError("generate takes N D");
        auto doc = generate_random_generic(parse_count(opt.source[0], "n"), parse_count(opt.source[1], "d"), opt.seed,
                                           opt.retries);
        std::cout << serialize(doc);
        return exit_ok;
    }

    auto doc = load_source(opt.source);
    auto arr = to_arrangement(doc);

    if (verb == "faceposet")
    {
        std::vector<Field> fields;
        for (const auto& f : opt.fields)
            fields.push_back(parse_field(f));
        auto rep = face_poset_from_points(doc, fields, limits);
        emit(to_json(rep));
        return rep.verified() ? exit_ok : exit_invariant;
    }
    if (verb == "verify")
    {
        auto suite = verify_all(doc, limits);
        emit(to_json(suite));
        return suite.ok() ? exit_ok : exit_invariant;
    }

    auto full = enumerate_cells(arr, limits);
    Json header = {{"name", doc.name}, {"n", arr.size()}, {"d", arr.dim()}};

    if (verb == "cells" || verb == "bounded")
    {
        auto tc = verb == "cells" ? full : bounded_subcomplex(full);
        header["f_vector"] = tc.f_vector();
        header["cells"] = cells_to_json(tc);
        emit(header);
    }
    else if (verb == "ideals")
    {
        auto g = parse_granularity(opt.granularity);
        header["granularity"] = to_string(g);
        header["type_ideal"] = ideal_to_json(type_ideal(full, g));
        header["cotype_ideal"] = ideal_to_json(cotype_ideal(full, g));
        if (g == Granularity::coarse)
            header["cotype_ideal_via_duality"] = ideal_to_json(coarse_cotype_via_duality(full));
        emit(header);
    }
    else if (verb == "betti")
    {
        auto g = parse_granularity(opt.granularity);
        auto bounded = bounded_subcomplex(full);
        header["granularity"] = to_string(g);
        header["cellular"] = betti_to_json(betti_table(build_cellular(bounded, g)));
        header["cocellular"] = betti_to_json(betti_table(build_cocellular(full, g)));
        emit(header);
    }
    else if (verb == "fvector")
    {
        auto fc = fvector_from_betti(betti_table(build_cocellular(full, Granularity::coarse)));
        auto bounded = bounded_subcomplex(full).f_vector();
        bounded.resize(arr.dim(), 0);
        header["f_vector"] = full.f_vector();
        header["bounded_f_vector"] = bounded;
        header["f_vector_from_betti"] = fc.all;
        header["bounded_f_vector_from_betti"] = fc.bounded;
        bool generic = is_fine(dual_subdivision(full));
        header["generic"] = generic;
        if (generic)
            header["generic_formula"] = generic_fvector(static_cast<std::int64_t>(arr.size()),
                                                        static_cast<std::int64_t>(arr.dim()));
        emit(header);
        return fc.all == full.f_vector() && fc.bounded == bounded ? exit_ok : exit_invariant;
    }
    else if (verb == "mixed")
    {
        auto ms = from_tropical_complex(full);
        Json cells = Json::array();
        for (std::size_t x = 0; x < ms.cells.size(); ++x)
            cells.push_back({{"id", x},
                             {"dim", ms.dims[x]},
                             {"cell", ms.cells[x].to_string()},
                             {"coarse", coarse_type_mixed(ms.cells[x]).counts()},
                             {"dual_coarse", dual_coarse_type(ms.cells[x])},
                             {"facets", ms.facets[x]}});
        header["fine"] = ms.fine;
        header["f_vector"] = ms.f_vector();
        header["cells"] = cells;
        emit(header);
    }
    else if (verb == "render")
    {
        std::string svg = opt.view == "mixed" ? render_svg(from_tropical_complex(full)) : render_svg(arr, full);
        if (opt.out.empty())
            std::cout << svg;
        else
        {
            std::ofstream f(opt.out);
            if (!f)
                throw InputError("cannot write '" + opt.out + "'");
            f << svg;
        }
    }
    return exit_ok;
}

}   // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Tropical hyperplane arrangements: cells, type ideals and their resolutions"};
    app.require_subcommand(1);
    Options opt;

    const char* source_help = "document path, or running-example | nongeneric-example | cyclic N D | hypersimplex K N";
    auto limits = [&](CLI::App* sub) {
        sub->add_option("--max-nodes", opt.max_nodes, "search node limit for cell enumeration");
        sub->add_option("--max-cells", opt.max_cells, "cell count limit");
    };
    std::vector<std::pair<std::string, std::string>> verbs{
        {"cells", "all cells of the type decomposition"},
        {"bounded", "cells of the bounded subcomplex"},
        {"ideals", "type and cotype ideals"},
        {"betti", "Betti tables of the cellular and cocellular resolutions"},
        {"fvector", "face numbers, directly and from Betti numbers"},
        {"mixed", "the mixed subdivision of n*Delta_{d-1}"},
        {"faceposet", "face poset of the bounded complex via the crosscut complex"},
        {"render", "SVG picture (d = 3)"},
        {"verify", "run every invariant check"},
        {"generate", "random generic arrangement document: generate N D --seed S"},
    };
    for (const auto& [name, help] : verbs)
    {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("source", opt.source, name == "generate" ? "N D" : source_help)->required();
        if (name == "ideals" || name == "betti")
            sub->add_option("--granularity", opt.granularity, "fine or coarse")
                ->check(CLI::IsMember({"fine", "coarse"}));
        if (name == "faceposet")
            sub->add_option("--field", opt.fields, "coefficient fields: QQ or a prime (repeatable)");
        if (name == "render")
        {
            sub->add_option("--view", opt.view, "tropical or mixed")->check(CLI::IsMember({"tropical", "mixed"}));
            sub->add_option("-o,--out", opt.out, "output file (default: standard output)");
        }
        if (name == "generate")
        {
            sub->add_option("--seed", opt.seed, "random seed");
            sub->add_option("--retries", opt.retries, "resampling limit");
        }
        else
            limits(sub);
    }

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    std::string verb = app.get_subcommands().front()->get_name();
    try
    {
        return run(verb, opt);
    }
    catch (const ResourceLimitError& e)
    {
        std::cerr << "resource limit: " << e.what() << "\n";
        return exit_resource;
    }
    catch (const InputError& e)
    {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input;
    }
    catch (const DimensionError& e)
    {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input;
    }
    catch (const PreconditionError& e)
    {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input;
    }
    catch (const std::exception& e)
    {
        std::cerr << "invariant failure: " << e.what() << "\n";
        return exit_invariant;
    }
}
