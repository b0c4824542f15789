#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "zigzag/cli.hpp"
#include "zigzag/json_io.hpp"
#include "zigzag/randomgen.hpp"

using namespace zigzag;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("zz_test_" + name + ".json") {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

std::string interval_rep_json(std::size_t n, const std::string& orientation, int b, int d) {
    json j = to_json(Representation::interval(
        QuiverAn(n, Orientation::parse(orientation)), Interval{b, d}, 2));
    return j.dump();
}

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_occurrences(const std::string& haystack, const std::string& needle) {
    std::size_t count = 0, pos = 0;
    while ((pos = haystack.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

std::size_t count_dot_nodes(const std::string& dot) {
    std::istringstream in(dot);
    std::string line;
    std::size_t nodes = 0;
    while (std::getline(in, line))
        if (line.find("  \"") == 0 && line.find("->") == std::string::npos) ++nodes;
    return nodes;
}

}  // namespace

TEST_CASE("representation json round trip") {
    Rng rng(97);
    for (int t = 0; t < 10; ++t) {
        std::uniform_int_distribution<std::size_t> pick_n(1, 5);
        std::size_t n = pick_n(rng);
        QuiverAn q(n, random_orientation(n, rng));
        Representation m = random_representation(q, 3, 3, rng);
        CHECK(representation_from_json(to_json(m)) == m);
    }
}

TEST_CASE("barcode and graded barcode json") {
    Barcode b;
    b.add({1, 3}, 2);
    b.add({2, 2});
    CHECK(barcode_from_json(to_json(b)) == b);

    GradedBarcode g;
    g.add(-1, {1, 2});
    g.add(2, {3, 3}, 4);
    CHECK(graded_barcode_from_json(to_json(g)) == g);
}

TEST_CASE("sheaf json") {
    SheafObject f;
    f.bars.push_back({1, 4, true, false, 0});
    f.bars.push_back({0, 2, false, false, -1});
    f.normalize();
    CHECK(sheaf_from_json(to_json(f)).bars == f.bars);
    CHECK_THROWS_AS(sheaf_from_json(json::parse(R"({"bars":[{"lo":2,"hi":1,
        "lo_closed":true,"hi_closed":true}]})")),
                    std::invalid_argument);
}

TEST_CASE("complex json validates the differential") {
    // 0 -> I[2,3] -> I[1,3] -> 0 over the equioriented quiver on 3 vertices
    json good = json::parse(R"({
      "n": 3, "orientation": "ff", "p": 2,
      "terms": [
        {"i": 0, "dims": [0,1,1], "maps": [[[ ]],[[1]]],
         "d": [[[]], [[1]], [[1]]]},
        {"i": 1, "dims": [1,1,1], "maps": [[[1]],[[1]]]}
      ]})");
    CochainComplex c = complex_from_json(good);
    CHECK(c.terms.size() == 2);

    json bad = good;
    bad["terms"][0]["d"] = json::parse("[[[]], [[0]], [[1]]]");
    // the altered map no longer commutes with the structure maps
    CHECK_THROWS_AS(complex_from_json(bad), std::invalid_argument);
}

TEST_CASE("cli decompose") {
    TempFile rep("rep", interval_rep_json(3, "bf", 1, 2));
    CliRun r = cli({"decompose", "--input", rep.path, "--cross-check"});
    CHECK(r.code == 0);
    json out = json::parse(r.out);
    CHECK(out["intervals"].size() == 1);
    CHECK(out["intervals"][0]["b"] == 1);
    CHECK(out["intervals"][0]["d"] == 2);
}

TEST_CASE("cli distances") {
    TempFile a("a", interval_rep_json(7, "bfbfbf", 2, 7));
    TempFile b("b", interval_rep_json(7, "bfbfbf", 2, 6));
    TempFile c("c", interval_rep_json(7, "bfbfbf", 2, 2));

    CHECK(cli({"distance", "--metric", "induced", "--a", a.path, "--b", b.path}).out == "1\n");
    CHECK(cli({"distance", "--metric", "block", "--a", a.path, "--b", b.path}).out == "3/2\n");
    CHECK(cli({"distance", "--metric", "induced", "--a", a.path, "--b", c.path}).out == "3\n");
    CHECK(cli({"distance", "--metric", "block", "--a", a.path, "--b", c.path}).out == "3/2\n");

    // interleaving requires the equioriented orientation: exit 3
    CliRun r = cli({"distance", "--metric", "interleaving", "--a", a.path, "--b", b.path});
    CHECK(r.code == 3);

    TempFile e1("e1", interval_rep_json(5, "ffff", 1, 5));
    TempFile e2("e2", interval_rep_json(5, "ffff", 2, 3));
    CHECK(cli({"distance", "--metric", "interleaving", "--a", e1.path, "--b", e2.path}).out ==
          "2\n");
    CHECK(cli({"distance", "--metric", "bottleneck", "--a", e1.path, "--b", e2.path}).out ==
          "2\n");
}

TEST_CASE("cli error codes") {
    TempFile bad("bad", "{ not json");
    CliRun r = cli({"decompose", "--input", bad.path});
    CHECK(r.code == 2);
    CHECK(r.err.find("malformed JSON") != std::string::npos);

    CliRun missing = cli({"decompose", "--input", "no_such_file.json"});
    CHECK(missing.code == 2);

    // hostile sizes are rejected before any allocation
    TempFile huge("huge", R"({"n": -1, "orientation": "", "p": 2, "dims": [], "maps": []})");
    CHECK(cli({"decompose", "--input", huge.path}).code == 2);
    TempFile hugedim("hugedim",
                     R"({"n": 1, "orientation": "", "p": 2, "dims": [-7], "maps": []})");
    CHECK(cli({"decompose", "--input", hugedim.path}).code == 2);
}

TEST_CASE("cli diagrams are deterministic") {
    CliRun dot = cli({"ar-quiver", "--n", "3", "--orientation", "ff"});
    CHECK(dot.code == 0);
    CHECK(count_dot_nodes(dot.out) == 6);
    CHECK(dot.out == cli({"ar-quiver", "--n", "3", "--orientation", "ff"}).out);

    CliRun derived = cli({"ar-quiver", "--n", "3", "--orientation", "ff", "--derived",
                          "--window", "1"});
    CHECK(derived.code == 0);
    // 12 vertices: two translation copies
    CHECK(count_dot_nodes(derived.out) == 12);

    CliRun svg = cli({"ar-quiver", "--n", "3", "--orientation", "bf", "--format", "svg"});
    CHECK(svg.code == 0);
    CHECK(count_occurrences(svg.out, "<text") == 6);
}

TEST_CASE("cli transport and compare") {
    CliRun tr = cli({"transport", "--n", "7", "--orientation", "bfbfbf"});
    CHECK(tr.code == 0);
    CHECK(count_occurrences(tr.out, "\n") == 29);  // header + 28 rows
    CHECK(tr.out.find("I[2,7],I[5,7],1,X_oc") != std::string::npos);

    CliRun cmp = cli({"compare", "--n", "5"});
    CHECK(cmp.code == 0);
    CHECK(cmp.out.find("pair,class1,") == 0);
}

TEST_CASE("cli barcode diagrams and oracle checking") {
    TempFile empty("empty", interval_rep_json(3, "ff", 1, 1));
    {
        // an actually empty module still yields a valid (empty) diagram
        json z = json::parse(R"({"n":2,"orientation":"f","p":2,"dims":[0,0],"maps":[[]]})");
        TempFile zf("zero", z.dump());
        CliRun svg = cli({"decompose", "--input", zf.path, "--format", "svg"});
        CHECK(svg.code == 0);
        CHECK(svg.out.find("<svg") == 0);
    }
    CliRun svg = cli({"decompose", "--input", empty.path, "--format", "svg"});
    CHECK(svg.code == 0);
    CHECK(count_occurrences(svg.out, "<line") == 1);

    TempFile a("oa", interval_rep_json(4, "fff", 1, 3));
    TempFile b("ob", interval_rep_json(4, "fff", 2, 4));
    CliRun ok = cli({"distance", "--metric", "interleaving", "--oracle-check", "--a", a.path,
                     "--b", b.path});
    CHECK(ok.code == 0);
    CHECK(ok.out == "1\n");

    setenv("ZZM_ORACLE_CAP", "1", 1);
    CHECK(default_oracle_cap() == 1);
    CliRun capped = cli({"distance", "--metric", "interleaving", "--oracle-check", "--a", a.path,
                         "--b", b.path});
    CHECK(capped.code == 4);
    unsetenv("ZZM_ORACLE_CAP");
    CHECK(default_oracle_cap() == (1ull << 20));
}

TEST_CASE("cli conv metrics") {
    json graded = json::parse(
        R"({"degrees":[{"i":0,"intervals":[{"b":1,"d":5,"mult":1}]}]})");
    TempFile g("g", graded.dump());
    json none = json::parse(R"({"degrees":[]})");
    TempFile z("z", none.dump());
    CHECK(cli({"distance", "--metric", "conv-mplus", "--a", g.path, "--b", z.path, "--m", "6"})
              .out == "3\n");

    json sheaf = json::parse(
        R"({"bars":[{"lo":1,"hi":6,"lo_closed":true,"hi_closed":false}]})");
    TempFile s("s", sheaf.dump());
    CHECK(cli({"distance", "--metric", "conv-mplus", "--a", s.path, "--b", z.path}).out == "3\n");

    json open_bar = json::parse(
        R"({"bars":[{"lo":1,"hi":4,"lo_closed":false,"hi_closed":false}]})");
    TempFile o("o", open_bar.dump());
    CliRun nd = cli({"distance", "--metric", "conv-nd", "--a", o.path, "--b", o.path});
    CHECK(nd.out == "0\n");
    CHECK(nd.err.find("open summand") != std::string::npos);

    // fragment violation names the offending bar
    CliRun bad = cli({"distance", "--metric", "conv-mplus", "--a", o.path, "--b", z.path});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("1..4") != std::string::npos);
}

TEST_CASE("cli verify suites") {
    CHECK(cli({"verify", "--suite", "isometry", "--n", "4"}).code == 0);
    CHECK(cli({"verify", "--suite", "transport", "--n", "5"}).code == 0);
    CliRun r = cli({"verify", "--suite", "imt", "--seed", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("pass") != std::string::npos);
}
