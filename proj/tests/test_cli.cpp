#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "poncelet/cli.hpp"

using namespace poncelet::cli;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "poncelet");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    const auto r = invoke(std::move(args));
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

// 0 marks a non-diamond cell.
const int kTable11[10][10] = {
    {0, 12, 3, 0, 0, 4, 0, 0, 6, 12},  {4, 0, 0, 12, 0, 3, 6, 0, 12, 0},  {0, 0, 0, 0, 6, 12, 4, 12, 3, 0},
    {3, 4, 6, 0, 0, 0, 12, 12, 0, 0},  {6, 0, 0, 3, 0, 12, 0, 4, 0, 12},  {12, 0, 4, 0, 12, 0, 3, 0, 0, 6},
    {0, 0, 12, 12, 0, 0, 0, 6, 4, 3},  {0, 3, 12, 4, 12, 6, 0, 0, 0, 0},  {0, 12, 0, 6, 3, 0, 12, 0, 0, 4},
    {12, 6, 0, 0, 4, 0, 0, 3, 12, 0},
};

}  // namespace

TEST_CASE("table for PG(2,11)") {
    const auto doc = invoke_json({"table", "--p", "11"});
    CHECK(doc["metadata"]["p"] == 11);
    CHECK(doc["metadata"]["c"] == 1);
    CHECK(doc["metadata"]["command"] == "table");
    CHECK(doc["metadata"]["version"] == kVersion);
    const auto& rows = doc["payload"]["rows"];
    REQUIRE(rows.size() == 10);
    for (int a = 0; a < 10; ++a)
        for (int b = 0; b < 10; ++b) {
            if (kTable11[a][b] == 0) CHECK(rows[a][b].is_null());
            else CHECK(rows[a][b] == kTable11[a][b]);
        }
    CHECK(doc["payload"]["lengths"] == json::parse(R"({"3":[4],"4":[2],"6":[5],"12":[6,10]})"));
}

TEST_CASE("table oracle and csv") {
    const auto doc = invoke_json({"table", "--p", "7", "--oracle"});
    CHECK(doc["payload"]["oracle"]["agrees"] == true);
    CHECK(doc["payload"]["oracle"]["method"] == "tracer");

    const auto r = invoke({"table", "--p", "7", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(lines(r.out) == std::vector<std::string>{"alpha,1,2,3,4,5,6", "1,,,8,4,8,", "2,4,,8,,,8",
                                                   "3,8,8,,,4,", "4,,4,,,8,8", "5,8,,,8,,4", "6,,8,4,8,,"});
}

TEST_CASE("table for PG(2,5) has two entries per column") {
    const auto doc = invoke_json({"table", "--p", "5"});
    const auto& rows = doc["payload"]["rows"];
    for (int b = 0; b < 4; ++b) {
        int count = 0;
        for (int a = 0; a < 4; ++a) {
            if (rows[a][b].is_null()) continue;
            ++count;
            CHECK((rows[a][b] == 3 || rows[a][b] == 6));
        }
        CHECK(count == 2);
    }
}

TEST_CASE("table with another c") {
    const auto a = invoke_json({"table", "--p", "13"});
    const auto b = invoke_json({"table", "--p", "13", "--c", "5"});
    CHECK(a["metadata"]["c"] == 2);
    CHECK(b["metadata"]["c"] == 5);
    CHECK(a["payload"]["rows"] == b["payload"]["rows"]);
    CHECK(invoke({"table", "--p", "13", "--c", "1"}).code == kInvalidPrime);
}

TEST_CASE("coeffs") {
    const auto doc = invoke_json({"coeffs", "--p", "53", "--n", "9"});
    CHECK(doc["payload"]["coefficients"] == json::array({13, 36, 40}));
    CHECK(doc["payload"]["methods"]["iteration"] == json::array({13, 36, 40}));
    CHECK(doc["payload"]["agree"] == true);
    CHECK(doc["payload"]["expected_count"] == 3);

    const auto even = invoke_json({"coeffs", "--p", "11", "--n", "12"});
    CHECK(even["payload"]["coefficients"] == json::array({6, 10}));
    CHECK(even["payload"]["methods"]["iteration"].is_null());

    const auto r = invoke({"coeffs", "--p", "53", "--n", "9", "--format", "csv"});
    CHECK(lines(r.out) == std::vector<std::string>{"n,coefficient", "9,13", "9,36", "9,40"});
}

TEST_CASE("poly") {
    CHECK(invoke_json({"poly", "--n", "9"})["payload"]["coefficients"] == json::array({"-64", "96", "-36", "1"}));
    CHECK(invoke_json({"poly", "--n", "3"})["payload"]["coefficients"] == json::array({"-4", "1"}));
    const auto p4 = invoke_json({"poly", "--n", "4"});
    CHECK(p4["payload"]["coefficients"] == json::array({"-2", "1"}));
    CHECK(p4["payload"]["degree"] == 1);
    CHECK(p4["metadata"]["p"].is_null());
    const auto r = invoke({"poly", "--n", "5", "--format", "csv"});
    CHECK(lines(r.out) == std::vector<std::string>{"degree,coefficient", "0,16", "1,-12", "2,1"});
    CHECK(invoke({"poly", "--n", "5"}).out.find("k^2 - 12*k + 16") != std::string::npos);
}

TEST_CASE("trace") {
    const auto doc = invoke_json({"trace", "--p", "11", "--alpha", "4", "--beta", "1"});
    const auto& pl = doc["payload"];
    CHECK(pl["n"] == 3);
    CHECK(pl["vertices"] == json::parse("[[1,1,3],[1,3,1],[1,7,7]]"));
    CHECK(pl["contacts"] == json::parse("[[1,2,2],[1,5,4],[1,4,5]]"));
    CHECK(pl["start"] == json::parse("[1,1,3]"));
    CHECK(pl["sums"]["vertex_sum"] == true);
    CHECK(pl["sums"]["plus_on_a"] == true);
    CHECK(pl["sums"]["opposite_vertices"].is_null());

    CHECK(invoke_json({"trace", "--p", "53", "--alpha", "13", "--beta", "1"})["payload"]["n"] == 9);
    const auto started = invoke_json({"trace", "--p", "11", "--alpha", "4", "--beta", "1", "--start", "2,6,2"});
    CHECK(started["payload"]["start"] == json::parse("[1,3,1]"));
    CHECK(started["payload"]["n"] == 3);

    const auto r = invoke({"trace", "--p", "11", "--alpha", "4", "--beta", "1", "--format", "csv"});
    CHECK(lines(r.out) == std::vector<std::string>{"index,bx,by,bz,ax,ay,az", "1,1,1,3,1,2,2", "2,1,3,1,1,5,4",
                                                   "3,1,7,7,1,4,5"});
}

TEST_CASE("verify") {
    const auto doc = invoke_json({"verify", "--p-max", "11", "--n-max", "12"});
    CHECK(doc["payload"]["summary"]["failures"] == 0);
    CHECK(doc["payload"]["summary"]["primes"] == 4);
    bool saw_golden = false;
    for (const auto& cell : doc["payload"]["cells"]) {
        CHECK(cell["pass"] == true);
        if (cell["p"] == 11 && cell["n"] == 12) saw_golden = cell["polynomial"] == json::array({6, 10});
    }
    CHECK(saw_golden);

    const auto tiny = invoke_json({"verify", "--p-max", "3"});
    CHECK(tiny["payload"]["summary"]["cells"] == 1);
    CHECK(tiny["payload"]["cells"][0]["n"] == 4);

    const auto r = invoke({"verify", "--p-max", "7", "--format", "csv"});
    CHECK(lines(r.out).front() == "p,n,expected_count,tracer,polynomial,iteration,cayley,pass");
}

TEST_CASE("exit codes") {
    CHECK(invoke({"table", "--p", "12"}).code == kInvalidPrime);
    CHECK(invoke({"table", "--p", "2"}).code == kInvalidPrime);
    CHECK(invoke({"coeffs", "--p", "9", "--n", "5"}).code == kInvalidPrime);
    CHECK(invoke({"coeffs", "--p", "11", "--n", "5"}).code == kDivisibility);
    CHECK(invoke({"coeffs", "--p", "11", "--n", "2"}).code == kDivisibility);
    CHECK(invoke({"poly", "--n", "2"}).code == kDivisibility);
    CHECK(invoke({"trace", "--p", "11", "--alpha", "3", "--beta", "1"}).code == kNotDiamond);
    CHECK(invoke({"trace", "--p", "11", "--alpha", "1", "--beta", "1"}).code == kNotDiamond);
    CHECK(invoke({"trace", "--p", "11", "--alpha", "0", "--beta", "1"}).code == kNotDiamond);
    CHECK(invoke({"trace", "--p", "11", "--alpha", "4", "--beta", "1", "--start", "1,0,0"}).code == kBadStart);
    CHECK(invoke({"trace", "--p", "11", "--alpha", "4", "--beta", "1", "--start", "1,x,0"}).code == kBadStart);
    CHECK(invoke({"trace", "--p", "11", "--alpha", "4", "--beta", "1", "--start", "0,0,0"}).code == kBadStart);
    const auto e = invoke({"trace", "--p", "11", "--alpha", "3", "--beta", "1"});
    CHECK(e.out.empty());
    CHECK(e.err.rfind("error: ", 0) == 0);
    CHECK(invoke({"table"}).code != 0);
    CHECK(invoke({"table", "--p", "7", "--format", "xml"}).code != 0);
}

TEST_CASE("output is deterministic") {
    for (const auto& args : std::vector<std::vector<std::string>>{{"table", "--p", "13", "--format", "json"},
                                                                  {"verify", "--p-max", "19", "--format", "json"},
                                                                  {"trace", "--p", "17", "--alpha", "4", "--beta", "1"}}) {
        const auto a = invoke(args), b = invoke(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}
