#include <catch2/catch_amalgamated.hpp>

#include "gghlab/io.hpp"
#include "gghlab/suites.hpp"

#include <cstdio>
#include <filesystem>
#include <string>

using namespace gghlab;

namespace {

std::string temp_path(const std::string& stem) {
    static int counter = 0;
    return (std::filesystem::temp_directory_path() /
            (stem + "_" + std::to_string(++counter) + ".json"))
        .string();
}

HModule character_module(unsigned m, unsigned n, unsigned L, const Rat& kappa,
                         const std::vector<unsigned>& expo, const std::vector<Rat>& lam) {
    HModule U = module_shell(m, n, L, kappa, 1);
    U.pi = {};
    for (unsigned i = 0; i < n; ++i) {
        U.g[i].at(0, 0) = Cyclotomic::zeta(L, long((L / m) * expo[i]));
        U.z[i].at(0, 0) = Cyclotomic(L, lam[i]);
    }
    return U;
}

bool same_module(const HModule& a, const HModule& b) {
    if (a.m != b.m || a.n != b.n || a.L != b.L || a.kappa != b.kappa || a.dim != b.dim ||
        a.pi != b.pi)
        return false;
    for (unsigned k : a.pi)
        if (a.s.at(k) != b.s.at(k)) return false;
    return a.g == b.g && a.z == b.z;
}

} // namespace

TEST_CASE("module files round trip exactly") {
    const HModule U = character_module(2, 2, 2, Rat(1), {0, 1}, {Rat(0), Rat(1)});
    const HModule X = parabolic_induce(U);
    REQUIRE(X.dim == 2);

    const std::string full_path = temp_path("full");
    io::write_module(X, full_path);
    const HModule X2 = io::read_module(full_path);
    REQUIRE(same_module(X, X2));
    /* the full module needs no explicit pi field */
    REQUIRE(io::module_to_json(X).contains("pi") == false);

    const std::string par_path = temp_path("parabolic");
    io::write_module(U, par_path);
    const HModule U2 = io::read_module(par_path);
    REQUIRE(same_module(U, U2));
    REQUIRE(io::module_to_json(U).at("pi") == io::json::array());

    std::filesystem::remove(full_path);
    std::filesystem::remove(par_path);
}

TEST_CASE("writing and rereading is byte stable") {
    const HModule U = character_module(3, 2, 3, Rat(1, 2), {0, 2}, {Rat(-1), Rat(3, 2)});
    const std::string p1 = temp_path("stable");
    const std::string p2 = temp_path("stable");
    io::write_module(U, p1);
    io::write_module(io::read_module(p1), p2);
    REQUIRE(io::read_text_file(p1) == io::read_text_file(p2));
    std::filesystem::remove(p1);
    std::filesystem::remove(p2);
}

TEST_CASE("scalar literals evaluate at the module kappa") {
    io::json j;
    j["m"] = 1;
    j["n"] = 1;
    j["L"] = 1;
    j["kappa"] = "3/2";
    j["dim"] = 1;
    j["s"] = io::json::array();
    j["g"] = {{{"1"}}};
    j["z"] = {{{"k^2 - 1/4"}}};
    const HModule X = io::module_from_json(j, "inline");
    REQUIRE(X.z[0].at(0, 0) == Cyclotomic(1, Rat(2))); /* (3/2)^2 - 1/4 = 2 */
    REQUIRE(X.kappa == Rat(3, 2));
}

TEST_CASE("format errors name the offending field and position") {
    io::json good;
    good["m"] = 2;
    good["n"] = 2;
    good["L"] = 2;
    good["kappa"] = "1";
    good["dim"] = 1;
    good["pi"] = io::json::array();
    good["s"] = io::json::array();
    good["g"] = {{{"1"}}, {{"z"}}};
    good["z"] = {{{"0"}}, {{"0"}}};
    REQUIRE_NOTHROW(io::module_from_json(good, "inline"));

    SECTION("missing field") {
        io::json j = good;
        j.erase("kappa");
        REQUIRE_THROWS_WITH(io::module_from_json(j, "inline"),
                            Catch::Matchers::ContainsSubstring("missing field \"kappa\""));
    }
    SECTION("bad entry literal names row and column") {
        io::json j = good;
        j["z"][1] = {{"1+*2"}};
        REQUIRE_THROWS_WITH(io::module_from_json(j, "inline"),
                            Catch::Matchers::ContainsSubstring("z[1], row 0, col 0"));
    }
    SECTION("wrong matrix shape") {
        io::json j = good;
        j["g"][0] = {{"1", "0"}};
        REQUIRE_THROWS_WITH(io::module_from_json(j, "inline"),
                            Catch::Matchers::ContainsSubstring("expected 1 entries"));
    }
    SECTION("pi out of range") {
        io::json j = good;
        j["pi"] = {5};
        j["s"] = {{{"1"}}};
        REQUIRE_THROWS_WITH(io::module_from_json(j, "inline"),
                            Catch::Matchers::ContainsSubstring("outside [1, n-1]"));
    }
    SECTION("kappa must be rational") {
        io::json j = good;
        j["kappa"] = "k";
        REQUIRE_THROWS_WITH(io::module_from_json(j, "inline"),
                            Catch::Matchers::ContainsSubstring("rational constant"));
    }
}

TEST_CASE("syntax errors report line and column") {
    const std::string p = temp_path("syntax");
    io::write_text_file(p, "{\n  \"m\": 2,\n}\n");
    try {
        io::parse_json_file(p);
        FAIL("expected a FileError");
    } catch (const io::FileError& e) {
        REQUIRE(std::string(e.what()).find(":3:1") != std::string::npos);
    }
    std::filesystem::remove(p);

    REQUIRE(io::line_column("ab\ncd", 0) == std::make_pair(std::size_t(1), std::size_t(1)));
    REQUIRE(io::line_column("ab\ncd", 3) == std::make_pair(std::size_t(2), std::size_t(1)));
    REQUIRE(io::line_column("ab\ncd", 4) == std::make_pair(std::size_t(2), std::size_t(2)));
}

TEST_CASE("rational text round trips") {
    REQUIRE(io::rat_text(Rat(3, 2)) == "3/2");
    REQUIRE(io::rat_from_text("3/2", "t") == Rat(3, 2));
    REQUIRE(io::rat_from_text("-7", "t") == Rat(-7));
    REQUIRE(io::rat_from_text("0", "t") == Rat(0));
    REQUIRE_THROWS_AS(io::rat_from_text("k", "t"), io::FileError);
}

TEST_CASE("run reports carry witnesses only on failure") {
    Report rep;
    rep.parameters["m"] = 2;
    rep.checks.push_back({"first", true, ""});
    rep.checks.push_back({"second", false, "broke here"});
    const io::json j = rep.to_json();
    REQUIRE(j.at("version") == GGHLAB_VERSION);
    REQUIRE(j.at("checks").size() == 2);
    REQUIRE(!j.at("checks").at(0).contains("witness"));
    REQUIRE(j.at("checks").at(1).at("witness") == "broke here");
    REQUIRE(!j.contains("timing"));
    REQUIRE(rep.to_json().dump(2) == j.dump(2));
    REQUIRE(!rep.all_pass());

    Report timed = rep;
    timed.elapsed_seconds = 0.5;
    REQUIRE(timed.to_json().contains("timing"));
}

TEST_CASE("dirac cohomology and classification files") {
    const HModule U0 = character_module(2, 2, 2, Rat(1), {0, 1}, {Rat(0), Rat(0)});
    const HModule X0 = parabolic_induce(U0);
    const DiracCohomology dc = dirac_cohomology(X0);
    const io::json dj = io::dirac_cohomology_to_json(dc, X0);
    REQUIRE(dj.at("dimension") == 8);
    REQUIRE(dj.at("kappa") == "1");
    REQUIRE(dj.at("block") == io::json({1, 1}));
    REQUIRE(dj.at("torus_characters").size() == 8);

    const HModule U1 = character_module(2, 2, 2, Rat(1), {0, 1}, {Rat(0), Rat(1)});
    const HModule X1 = parabolic_induce(U1);
    const LanglandsDatum datum = langlands_data(X1);
    const std::string fpath = temp_path("factor");
    const std::string cpath = temp_path("classification");
    io::write_classification(datum, block_label(X1), fpath, cpath);
    const io::json cj = io::parse_json_file(cpath);
    REQUIRE(cj.at("block") == io::json({1, 1}));
    REQUIRE(cj.at("P") == io::json::array());
    REQUIRE(cj.at("nu") == io::json({"0", "1"}));
    REQUIRE(cj.at("tempered_factor") == fpath);
    REQUIRE(cj.at("verified_unique") == true);
    const HModule F = io::read_module(fpath);
    REQUIRE(F.dim == datum.tempered_factor.dim);
    std::filesystem::remove(fpath);
    std::filesystem::remove(cpath);
}

TEST_CASE("suite dispatch covers every name") {
    const GGHDescriptor d = dunkl_opdam_descriptor(2, 2);
    for (const std::string& name : known_suites()) {
        const CheckReport r = run_suite(name, d, 20260815);
        INFO(name);
        REQUIRE(!r.items.empty());
        REQUIRE(r.all_pass());
    }
    REQUIRE_THROWS_AS(run_suite("nope", d, 1), std::invalid_argument);
}

TEST_CASE("negative controls catch the corrupted descriptor") {
    const GGHDescriptor d = dunkl_opdam_descriptor(2, 2);
    for (const std::string& name : {std::string("presentations"), std::string("jacobi")}) {
        const CheckReport r = suite_negative_controls(name, d, 20260815);
        INFO(name);
        REQUIRE(r.items.size() == 1);
        REQUIRE(r.all_pass());
    }
    REQUIRE(suite_negative_controls("group", d, 1).items.empty());
}
