#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "rigidwitt");
    std::ostringstream out, err;
    const int code = rigidwitt::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string last_line(const std::string& text) {
    std::istringstream in(text);
    std::string line, last;
    while (std::getline(in, line)) {
        if (!line.empty()) last = line;
    }
    return last;
}

}  // namespace

TEST_CASE("pfister-number prints the value and a certificate") {
    const Run r = run({"pfister-number", "--field", "F3[t1,t2]", "--form", "<1,t1,t2,t1*t2>", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("1\n", 0) == 0);
    CHECK(r.out.find("verified") != std::string::npos);
}

TEST_CASE("pfister-number JSON output") {
    const Run r = run({"pfister-number", "--field", "F3[t1,t2,t3,t4]", "--form", "<1,t1,t2,t3,t4,-t1*t2*t3*t4>",
                       "--n", "2", "--unscaled", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["GP"] == 2);
    CHECK(j["P"].get<int>() <= 4);
    CHECK(j["certificate"]["length"] == 2);
}

TEST_CASE("analyze") {
    const Run r = run({"analyze", "--field", "R[]", "--form", "<1,-1>"});
    CHECK(r.code == 0);
    CHECK(r.out.find("hyperbolic: yes") != std::string::npos);
    CHECK(r.out.find("witt index: 1") != std::string::npos);

    const Run j = run({"analyze", "--field", "F3[t1]", "--form", "<1,1,t1,t1,t1>", "--json"});
    REQUIRE(j.code == 0);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["anisotropic_part"] == "<1,1,-t1>");
    CHECK(doc["witt_index"] == 1);
    CHECK(doc["schema"] == 1);
}

TEST_CASE("bounds CSV ends with 16,3") {
    const Run r = run({"bounds", "--n", "3", "--dmax", "16"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("d,bound,", 0) == 0);
    CHECK(last_line(r.out).rfind("16,3,", 0) == 0);
}

TEST_CASE("decompose") {
    const Run r = run({"decompose", "--field", "F3[t1,t2]", "--form", "<1,t1,t2,t1*t2>", "--at", "t1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("sigma: <>") != std::string::npos);
    CHECK(r.out.find("tau: <1,t2>") != std::string::npos);
}

TEST_CASE("classify") {
    const Run r = run({"classify", "--field", "F3[t1,t2,t3,t4,t5]", "--form", "<<t1,t2,t3>>", "--dim", "14"});
    CHECK(r.code == 3);
}

TEST_CASE("tabulate") {
    const Run r = run({"tabulate", "--field", "F3[t1,t2,t3,t4]", "--n", "2", "--dims", "4,6", "--samples", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("4,3,") != std::string::npos);
    CHECK(r.out.find("6,3,") != std::string::npos);
}

TEST_CASE("verify runs a suite") {
    const Run r = run({"verify", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("PASS", 0) == 0);
    CHECK(run({"verify", "nonsense"}).code == 3);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 1);
    CHECK(run({"bogus"}).code == 1);
    CHECK(run({"bounds", "--n"}).code == 1);
    CHECK(run({"analyze", "--field", "F3[t1]", "--form", "<1,"}).code == 2);
    CHECK(run({"analyze", "--field", "F3[t2]", "--form", "<1>"}).code == 2);
    CHECK(run({"pfister-number", "--field", "F3[t1]", "--form", "<1>", "--n", "2"}).code == 3);
    CHECK(run({"pfister-number", "--field", "F3[t1,t2,t3,t4]", "--form", "<1,t1,t2,t3,t4,-t1*t2*t3*t4>", "--n", "2",
               "--depth-cap", "1"})
              .code == 4);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("seeded suites are deterministic") {
    const Run a = run({"verify", "6", "--seed", "5"});
    const Run b = run({"verify", "6", "--seed", "5"});
    REQUIRE(a.code == 0);
    const auto strip_time = [](const std::string& s) { return s.substr(s.find("]")); };
    CHECK(strip_time(a.out) == strip_time(b.out));
}
