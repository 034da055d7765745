#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "riordan/riordan.hpp"
#include "riordan/serialize.hpp"
#include "riordan/series.hpp"

using namespace riordan;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int status;
    std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(RIORDAN_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int rc = pclose(pipe);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

fs::path scratch() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("riordan_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_doc(const std::string& name, const json& doc) {
    fs::path p = scratch() / name;
    std::ofstream out(p);
    out << doc.dump();
    return p.string();
}

// (1/(1-x), x/(1-x))
RiordanPair pascal(int n) {
    Series d(std::vector<Rat>(static_cast<std::size_t>(n) + 1, 1));
    return RiordanPair(d, mul(Series::identity(n), d));
}

}  // namespace

TEST_CASE("derived-table prints the sequence on one line") {
    RunResult r = run_cli("derived-table --max-k 12");
    CHECK(r.status == 0);
    CHECK(r.output == "1 2 3 3 3 4 4 4 4 4 4 4 5\n");
    CHECK(run_cli("derived-length --k 5").output == "4\n");
}

TEST_CASE("mul with the identity echoes the input") {
    std::string p = write_doc("pascal.json", pair_doc(pascal(8)));
    std::string e = write_doc("identity.json", pair_doc(identity_pair(8)));
    RunResult r = run_cli("mul --left " + p + " --right " + e + " --order 8");
    CHECK(r.status == 0);
    CHECK(json::parse(r.output) == pair_doc(pascal(8)));
}

TEST_CASE("inv then mul returns to the identity") {
    std::string p = write_doc("pair.json", pair_doc(pascal(6)));
    RunResult inv = run_cli("inv --pair " + p + " --order 6");
    REQUIRE(inv.status == 0);
    std::string pinv = write_doc("pair_inv.json", json::parse(inv.output));
    RunResult prod = run_cli("mul --left " + p + " --right " + pinv + " --order 6");
    REQUIRE(prod.status == 0);
    CHECK(json::parse(prod.output) == pair_doc(identity_pair(6)));
}

TEST_CASE("entry reads binomial coefficients from a document") {
    std::string p = write_doc("pascal_entry.json", pair_doc(pascal(8)));
    CHECK(run_cli("entry --pair " + p + " --row 4 --col 2").output == "6\n");
    RunResult beyond = run_cli("entry --pair " + p + " --row 20 --col 1");
    CHECK(beyond.status == 1);
    CHECK(beyond.output.find("DegreeAboveTruncation") != std::string::npos);
}

TEST_CASE("aseq, apply and project agree with the library") {
    RiordanPair p = pascal(6);
    std::string pp = write_doc("pascal_ops.json", pair_doc(p));
    RunResult aseq = run_cli("aseq --pair " + pp + " --order 6");
    CHECK(aseq.status == 0);
    CHECK(json::parse(aseq.output) == series_doc(a_sequence(p)));

    std::string ones = write_doc("ones.json",
                                 series_doc(Series(std::vector<Rat>(7, 1))));
    RunResult img = run_cli("apply --pair " + pp + " --series " + ones + " --order 6");
    CHECK(img.status == 0);
    CHECK(json::parse(img.output) ==
          series_doc(apply(p, Series(std::vector<Rat>(7, 1)))));

    RunResult block = run_cli("project --pair " + pp + " --size 3");
    CHECK(block.status == 0);
    json rows = json::parse(block.output)["rows"];
    CHECK(rows[3] == json::array({"1", "3", "3", "1"}));
}

TEST_CASE("member prints a bare boolean") {
    std::string one = write_doc("one.json", series_doc(Series::one(8)));
    std::string h = write_doc("h.json",
                              series_doc(add(Series::identity(8), Series::monomial(1, 3, 8))));
    CHECK(run_cli("member --tag gk:3 --d " + one + " --h " + h).output == "true\n");
    CHECK(run_cli("member --tag gk:4 --d " + one + " --h " + h).output == "false\n");
    RunResult bad = run_cli("member --tag nonsense --d " + one + " --h " + h);
    CHECK(bad.status == 2);
    RunResult narrow = run_cli("member --tag gk:3 --d " + one + " --h " + h + " --order 2");
    CHECK(narrow.status == 1);
    CHECK(narrow.output.find("TruncationTooShort") != std::string::npos);
}

TEST_CASE("schroeder emits the hand-solved document") {
    std::string d = write_doc("sd.json",
                              series_doc(add(Series::one(3), Series::identity(3))));
    std::string h = write_doc("sh.json", series_doc(scale(2, Series::identity(3))));
    RunResult r = run_cli("schroeder --d " + d + " --h " + h + " --order 3");
    REQUIRE(r.status == 0);
    json doc = json::parse(r.output);
    CHECK(doc["lambda"] == "1");
    CHECK(doc["solvable"] == true);
    CHECK(doc["case"] == "unit-multiplier");
    CHECK(doc["u"]["coeffs"] == json::array({"1", "-1", "2/3", "-8/21"}));

    std::string blocked = write_doc("sblock.json",
                                    series_doc(add(Series::one(6), Series::identity(6))));
    std::string hp = write_doc("shp.json",
                               series_doc(add(Series::identity(6), Series::monomial(1, 2, 6))));
    RunResult nr = run_cli("schroeder --d " + blocked + " --h " + hp);
    REQUIRE(nr.status == 0);
    json ndoc = json::parse(nr.output);
    CHECK(ndoc["solvable"] == false);
    CHECK(ndoc["violating_index"] == 1);
}

TEST_CASE("emitted witnesses re-verify through member and mul") {
    Series g = add(add(Series::identity(12), Series::monomial(1, 4, 12)),
                   Series::monomial(2, 6, 12));
    std::string gp = write_doc("g.json", pair_doc(RiordanPair(Series::one(12), g)));
    RunResult r = run_cli("decompose-shift --pair " + gp + " --n 2 --order 12");
    REQUIRE(r.status == 0);
    json witness = json::parse(r.output);
    CHECK(witness["identity_checked"] == true);
    CHECK(witness["verified_order"] == 12);

    std::string rd = write_doc("right_d.json", witness["right"]["d"]);
    std::string rh = write_doc("right_h.json", witness["right"]["h"]);
    CHECK(run_cli("member --tag gk:3 --d " + rd + " --h " + rh + " --order 12").output ==
          "true\n");

    std::string left = write_doc("left.json", witness["left"]);
    std::string right = write_doc("right.json", witness["right"]);
    std::string linv_path, rinv_path;
    {
        RunResult linv = run_cli("inv --pair " + left + " --order 12");
        REQUIRE(linv.status == 0);
        linv_path = write_doc("left_inv.json", json::parse(linv.output));
        RunResult rinv = run_cli("inv --pair " + right + " --order 12");
        REQUIRE(rinv.status == 0);
        rinv_path = write_doc("right_inv.json", json::parse(rinv.output));
    }
    RunResult step1 = run_cli("mul --left " + linv_path + " --right " + rinv_path + " --order 12");
    REQUIRE(step1.status == 0);
    std::string s1 = write_doc("step1.json", json::parse(step1.output));
    RunResult step2 = run_cli("mul --left " + s1 + " --right " + left + " --order 12");
    REQUIRE(step2.status == 0);
    std::string s2 = write_doc("step2.json", json::parse(step2.output));
    RunResult full = run_cli("mul --left " + s2 + " --right " + right + " --order 12");
    REQUIRE(full.status == 0);
    CHECK(json::parse(full.output) == witness["target"]);
}

TEST_CASE("verify runs a suite and reports") {
    RunResult r = run_cli("verify --suite group-axioms --seeds 2 --order 8");
    CHECK(r.status == 0);
    json doc = json::parse(r.output);
    CHECK(doc["suite"] == "group-axioms");
    CHECK(doc["cases"] == 2);
    CHECK(doc["ok"] == true);
    CHECK(doc["failures"].empty());

    RunResult unknown = run_cli("verify --suite does-not-exist");
    CHECK(unknown.status == 2);
}

TEST_CASE("usage errors exit with status two") {
    CHECK(run_cli("").status == 2);
    CHECK(run_cli("frobnicate").status == 2);
    CHECK(run_cli("mul --left only.json").status == 2);
    CHECK(run_cli("entry --row 1 --col 1").status == 2);
}

TEST_CASE("domain errors pass the library error name through") {
    std::string degenerate = write_doc(
        "bad_pair.json",
        json{{"d", series_doc(Series::one(4))}, {"h", series_doc(Series::one(4))}});
    RunResult r = run_cli("inv --pair " + degenerate);
    CHECK(r.status == 1);
    CHECK(r.output.find("NotInvertibleForComposition") != std::string::npos);

    std::string missing = (scratch() / "absent.json").string();
    RunResult gone = run_cli("aseq --pair " + missing);
    CHECK(gone.status == 1);
    CHECK(gone.output.find("InvalidDocument") != std::string::npos);
}
