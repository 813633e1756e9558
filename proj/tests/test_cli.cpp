#include <doctest.h>

#include <sstream>

#include "cayley/cli.hpp"
#include "cayley/io.hpp"

using namespace cayley;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int status = cli::run(args, in, out, err);
    return {status, out.str(), err.str()};
}

io::json run_json(std::vector<std::string> args, const std::string& input = "") {
    const auto r = run(std::move(args), input);
    REQUIRE(r.status == 0);
    return io::parse(r.out);
}

} // namespace

TEST_CASE("version and help") {
    const auto v = run({"--version"});
    CHECK(v.status == 0);
    CHECK(v.out.find("1.0.0") != std::string::npos);
    const auto h = run({"--help"});
    CHECK(h.status == 0);
    CHECK(h.out.find("verify-cayley") != std::string::npos);
    CHECK(run({"enumerate", "--help"}).status == 0);
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run({}).status == 2);
    CHECK(run({"frobnicate"}).status == 2);
    CHECK(run({"enumerate"}).status == 2);
    CHECK(run({"enumerate", "--n", "x"}).status == 2);
    CHECK(run({"enumerate", "--n", "9"}).status == 2);
    CHECK(run({"verify-cayley", "--n", "0"}).status == 2);
    CHECK(run({"trace"}, "{not json").status == 2);
    CHECK(run({"trace"}, R"({"n":2,"table":[1,3]})").status == 2);
    CHECK(run({"trace", "--strategy", "fixed", "--order", "1,1"}, R"({"n":2,"table":[1,2]})").status == 2);
    CHECK(run({"joyal", "decode"}, R"({"n":2,"head":3,"tail":1,"parent":[0,1]})").status == 2);
    const auto bad = run({"prufer", "encode"}, R"({"n":3,"edges":[[1,2],[2,1]]})");
    CHECK(bad.status == 2);
    CHECK(bad.err.find("not a tree") != std::string::npos);
    const auto many = run({"sample-tree", "--n", "3", "--method", "fancy"});
    CHECK(many.status == 2);
}

TEST_CASE("enumerate") {
    const auto j = run_json({"enumerate", "--n", "3", "--json"});
    CHECK(j["total"] == "27");
    CHECK(j["unique_cyclic"] == "9");
    CHECK(j["labelled_trees"] == "3");
    const auto text = run({"enumerate", "--n", "2"});
    CHECK(text.status == 0);
    CHECK(text.out.find("1/2") != std::string::npos);
}

TEST_CASE("verify-cayley") {
    const auto j = run_json({"verify-cayley", "--n", "1", "--trials", "10", "--seed", "7", "--json"});
    CHECK(j["point"] == 1.0);
    CHECK(j["successes"] == 10);
    CHECK(j["pass"] == true);
    CHECK(j["seed"] == 7);
    const auto d = run_json({"verify-cayley", "--n", "4", "--trials", "1000", "--json"});
    CHECK(d["seed"] == cli::release_seed);
    CHECK(d["expected"] == "1/4");
}

TEST_CASE("trace") {
    const auto j = run_json({"trace"}, R"({"n":3,"table":[2,3,3]})");
    CHECK(j["K"] == 1);
    CHECK(j["T"] == io::json::array({3}));
    CHECK(j["rounds"][0]["closure"] == "SelfLoop");

    const auto fixed = run_json({"trace", "--strategy", "fixed", "--order", "4,3,2,1"}, R"({"n":4,"table":[1,1,4,3]})");
    CHECK(fixed["T"] == io::json::array({2, 4}));
    const auto r1 = run({"trace", "--strategy", "random", "--order-seed", "5"}, R"({"n":4,"table":[1,1,4,3]})");
    const auto r2 = run({"trace", "--strategy", "random", "--order-seed", "5"}, R"({"n":4,"table":[1,1,4,3]})");
    CHECK(r1.status == 0);
    CHECK(r1.out == r2.out);
    const auto dot = run({"trace", "--dot"}, R"({"n":3,"table":[2,3,3]})");
    CHECK(dot.out.rfind("digraph", 0) == 0);
}

TEST_CASE("sample-function pipes into trace") {
    const auto sample = run({"sample-function", "--n", "12", "--seed", "3"});
    REQUIRE(sample.status == 0);
    CHECK(sample.out == run({"sample-function", "--n", "12", "--seed", "3"}).out);
    const auto j = run_json({"trace"}, sample.out);
    CHECK(j["n"] == 12);
    CHECK(j["T"].back() == 12);
    const auto other = run({"sample-function", "--n", "12", "--seed", "3", "--stream", "1"});
    CHECK(other.out != sample.out);
}

TEST_CASE("bijection commands round trip") {
    const auto enc = run_json({"joyal", "encode"}, R"({"n":6,"table":[3,1,2,5,4,4]})");
    CHECK(enc["head"] == 3);
    CHECK(enc["tail"] == 4);
    const auto dec = run_json({"joyal", "decode"}, enc.dump());
    CHECK(dec["table"] == io::json::array({3, 1, 2, 5, 4, 4}));

    const auto seq = run_json({"prufer", "encode"}, R"({"n":4,"edges":[[1,2],[2,3],[2,4]]})");
    CHECK(seq["seq"] == io::json::array({2, 2}));
    const auto tree = run_json({"prufer", "decode"}, seq.dump());
    CHECK(tree["edges"] == io::json::array({{1, 2}, {2, 3}, {2, 4}}));
}

TEST_CASE("sample-tree") {
    for (const char* method : {"rejection", "prufer"}) {
        const auto j = run_json({"sample-tree", "--n", "6", "--seed", "4", "--method", method});
        CHECK(j["n"] == 6);
        CHECK(j["method"] == method);
        CHECK(j["attempts"] >= 1);
    }
}

TEST_CASE("statistical commands are byte-identical across jobs and replays") {
    const std::vector<std::vector<std::string>> commands{
        {"verify-cayley", "--n", "20", "--trials", "20000", "--seed", "8"},
        {"verify-cayley", "--n", "20", "--trials", "20000", "--seed", "8", "--json"},
        {"check-conditionals", "--n", "6", "--trials", "5000", "--seed", "8"},
        {"check-conditionals", "--n", "6", "--trials", "5000", "--seed", "8", "--json"},
        {"heights", "--n", "9", "--trials", "5000", "--seed", "8"},
        {"enumerate", "--n", "5", "--json"},
    };
    for (const auto& base : commands) {
        const auto reference = run(base);
        CHECK(reference.status == 0);
        for (const char* jobs : {"1", "3", "8"}) {
            auto args = base;
            args.push_back("--jobs");
            args.push_back(jobs);
            const auto r = run(args);
            CHECK(r.status == reference.status);
            CHECK(r.out == reference.out);
        }
    }
}

TEST_CASE("heights report") {
    const auto j = run_json({"heights", "--n", "5", "--trials", "5000", "--seed", "2", "--method", "prufer", "--exact"});
    CHECK(j["pass"] == true);
    CHECK(j["collision_pmf"]["2"] == "8/25");
    CHECK(j["height_plus_one"]["total"] == 5000);
}
