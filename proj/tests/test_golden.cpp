#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "golden.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace modrep;

TEST_CASE("cell and polynomial parsing") {
    auto c = parse_cell("V1+2*V6+V8'");
    CHECK(c == std::map<std::string, i64>{{"V1", 1}, {"V6", 2}, {"V8'", 1}});
    CHECK(cell_string(c) == "V1+2*V6+V8'");
    auto p = parse_poly("1+t^7+2*t^11");
    CHECK(p == std::vector<i64>{1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2});
    auto q = parse_poly("t^2-t^4+t^6+2*t^8");
    CHECK(q == std::vector<i64>{0, 0, 1, 0, -1, 0, 1, 0, 2});
    auto d = parse_factored_poly("(1-t^2)^2(1-t^6)");
    // (1-t^2)^2 = 1 - 2t^2 + t^4
    CHECK(d[0] == 1);
    CHECK(d[2] == -2);
    CHECK(d[4] == 1);
    CHECK(d[6] == -1);
    CHECK(d[8] == 2);
    CHECK(d[10] == -1);
}

TEST_CASE("reference tables reproduce with documented errata only") {
    GoldenOptions opt;
    opt.fixture_dir = MODREP_FIXTURE_DIR;
    opt.N = 40;
    auto diffs = reproduce_appendices(opt);
    REQUIRE(diffs.size() == 6);
    for (auto& d : diffs) {
        INFO(d.fixture, " convention=", d.convention);
        for (auto& m : d.mismatches) {
            INFO("  ", m.key, " printed=", m.printed, " computed=", m.computed,
                 " erratum=", m.documented_erratum);
        }
        CHECK(d.pass);
    }
    // every mismatch that exists is a documented erratum with a note
    for (auto& d : diffs)
        for (auto& m : d.mismatches) {
            CHECK(m.documented_erratum);
            CHECK(!m.note.empty());
        }
}

TEST_CASE("a corrupted fixture is pinpointed") {
    namespace fs = std::filesystem;
    fs::path tmp = fs::temp_directory_path() / "modrep_golden_corrupt";
    fs::remove_all(tmp);
    fs::create_directories(tmp);
    for (auto& name : {"sym_v3.tsv", "sym_v4.tsv", "tensor_grid.tsv", "gf_q.tsv", "gf_p.tsv",
                       "h0_lambda.tsv", "errata.tsv"})
        fs::copy_file(fs::path(MODREP_FIXTURE_DIR) / name, tmp / name);
    // corrupt exactly one cell of the symmetric power table
    {
        std::ifstream in(tmp / "sym_v3.tsv");
        std::string all, line;
        while (std::getline(in, line)) {
            if (line.rfind("4\t", 0) == 0) line = "4\tV1+V6+V7";  // wrong cell
            all += line + "\n";
        }
        in.close();
        std::ofstream(tmp / "sym_v3.tsv") << all;
    }
    GoldenOptions opt;
    opt.fixture_dir = tmp.string();
    opt.N = 6;
    auto diffs = reproduce_appendices(opt);
    int bad = 0;
    for (auto& d : diffs) {
        if (d.fixture == "sym-powers-v3dual") {
            CHECK(!d.pass);
            REQUIRE(d.mismatches.size() == 1);
            CHECK(d.mismatches[0].key == "n=4");
            ++bad;
        }
    }
    CHECK(bad == 1);
    fs::remove_all(tmp);
}

TEST_CASE("missing fixture directory raises FixtureMissing") {
    GoldenOptions opt;
    opt.fixture_dir = "/nonexistent/modrep";
    CHECK_THROWS_AS(reproduce_appendices(opt), MError);
}
