#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "towertab/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = towertab::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli slide") {
    const Result r = run_cli({"slide", "54534562"});
    CHECK(r.code == 0);
    CHECK(r.out == "  7\n  6\n  53\n 8421\n");
    CHECK(r.err.empty());

    const Result json = run_cli({"slide", "314354", "--format", "json"});
    CHECK(json.code == 0);
    CHECK(json.out ==
          "{\"heights\":[1,0,3,2],\"labels\":["
          "{\"col\":1,\"ht\":0,\"label\":2},"
          "{\"col\":3,\"ht\":0,\"label\":1},"
          "{\"col\":3,\"ht\":1,\"label\":3},"
          "{\"col\":3,\"ht\":2,\"label\":5},"
          "{\"col\":4,\"ht\":0,\"label\":4},"
          "{\"col\":4,\"ht\":1,\"label\":6}]}\n");

    const Result dead = run_cli({"slide", "11"});
    CHECK(dead.code == 1);
    CHECK(dead.out.empty());
    CHECK(dead.err == "sliding terminated at letter 2\n");

    CHECK(run_cli({"slide"}, "").code == 0);  // the empty word slides to nothing
}

TEST_CASE("cli input channels") {
    CHECK(run_cli({"slide", "--in", "-"}, "54534562").out == "  7\n  6\n  53\n 8421\n");

    const auto path = std::filesystem::temp_directory_path() / "towertab_cli_input.txt";
    std::ofstream(path) << "321\n";
    const Result r = run_cli({"schubert", "--in", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "x1^2*x2\n");
    std::filesystem::remove(path);

    CHECK(run_cli({"schubert", "--in", (path / "missing").string()}).code == 2);
}

TEST_CASE("cli reading inverts slide") {
    const Result slid = run_cli({"slide", "314354", "--format", "json"});
    const Result r = run_cli({"reading"}, slid.out);
    CHECK(r.code == 0);
    CHECK(r.out == "314354\n");

    const Result bad = run_cli({"reading", R"({"heights":[1,1],"labels":[)"
                                           R"({"col":1,"ht":0,"label":1},)"
                                           R"({"col":2,"ht":0,"label":2}]})"});
    CHECK(bad.code == 1);
    CHECK(bad.err == "tableau is not standard\n");
}

TEST_CASE("cli shape") {
    CHECK(run_cli({"shape", "35421", "--format", "json"}).out == "[4,3,0,1]\n");
    CHECK(run_cli({"shape", "35421"}).out == "#\n##\n##\n## #\n");
}

TEST_CASE("cli rothify") {
    const Result r = run_cli({"rothify", "314354", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "[{\"col\":1,\"label\":2,\"row\":1},"
          "{\"col\":3,\"label\":3,\"row\":3},"
          "{\"col\":4,\"label\":4,\"row\":3},"
          "{\"col\":3,\"label\":5,\"row\":4},"
          "{\"col\":4,\"label\":6,\"row\":4},"
          "{\"col\":3,\"label\":1,\"row\":5}]\n");

    const Result full = run_cli({"rothify", "--complete", "314354"});
    CHECK(full.code == 0);
    CHECK(full.out ==
          "  |  5\n"
          "  |  36\n"
          "  |2 14\n"
          "--+----\n"
          " 5|2\n"
          "  |\n"
          "43|  34\n"
          "21|  56\n"
          " 6|  1\n");

    // a tableau payload is accepted as well
    const Result from_json = run_cli({"rothify", "--in", "-"},
                                     run_cli({"slide", "314354", "--format", "json"}).out);
    CHECK(from_json.out == run_cli({"rothify", "314354"}).out);
}

TEST_CASE("cli canonical and recover") {
    CHECK(run_cli({"canonical", "1", "--format", "json"}).out ==
          "[{\"col\":1,\"label\":1,\"row\":1}]\n");
    const Result bad = run_cli({"canonical", "11"});
    CHECK(bad.code == 1);
    CHECK(bad.err == "word is not reduced\n");

    const Result back =
        run_cli({"recover"}, run_cli({"canonical", "42341234", "--format", "json"}).out);
    CHECK(back.code == 0);
    CHECK(back.out == "42341234\n");
}

TEST_CASE("cli checks") {
    const std::string balanced = R"([
        {"row":1,"col":1,"label":2},{"row":1,"col":2,"label":1},
        {"row":2,"col":1,"label":4},{"row":2,"col":2,"label":3},
        {"row":2,"col":4,"label":4},{"row":3,"col":1,"label":5},
        {"row":3,"col":2,"label":2},{"row":4,"col":1,"label":6}])";
    CHECK(run_cli({"balanced-check"}, balanced).out == "true\n");

    const std::string broken = R"([
        {"row":1,"col":1,"label":1},{"row":1,"col":2,"label":2},
        {"row":2,"col":1,"label":4},{"row":2,"col":2,"label":3},
        {"row":2,"col":4,"label":4},{"row":3,"col":1,"label":5},
        {"row":3,"col":2,"label":2},{"row":4,"col":1,"label":6}])";
    CHECK(run_cli({"balanced-check"}, broken).out == "false\n");
    CHECK(run_cli({"balanced-check", "--format", "json"}, broken).out ==
          "{\"balanced\":false,\"hook\":{\"col\":1,\"row\":1}}\n");

    const std::string not_ss = R"({"heights":[1,1],"labels":[)"
                               R"({"col":1,"ht":0,"label":1},{"col":2,"ht":0,"label":2}]})";
    CHECK(run_cli({"semistandard-check", not_ss}).out == "false\n");
    const std::string ss = R"({"heights":[1,1],"labels":[)"
                           R"({"col":1,"ht":0,"label":2},{"col":2,"ht":0,"label":1}]})";
    CHECK(run_cli({"semistandard-check", ss, "--format", "json"}).out ==
          "{\"semistandard\":true}\n");

    const Result std_fail = run_cli({"standardize", not_ss});
    CHECK(std_fail.code == 1);
    CHECK(std_fail.err == "tableau is not semi-standard\n");
    CHECK(run_cli({"standardize", R"({"heights":[1],"labels":[{"col":1,"ht":0,"label":5}]})",
                   "--format", "json"})
              .out == "{\"heights\":[1],\"labels\":[{\"col\":1,\"ht\":0,\"label\":1}]}\n");
}

TEST_CASE("cli flag") {
    const Result r = run_cli({"flag", "0142103"});
    CHECK(r.code == 0);
    CHECK(r.out == "  6\n  5   9\n  44  8\n 2222 6\n");
}

TEST_CASE("cli polynomials") {
    CHECK(run_cli({"schubert", "321"}).out == "x1^2*x2\n");
    CHECK(run_cli({"schubert", "[1,2,4,3]"}).out == "x1 + x2 + x3\n");
    CHECK(run_cli({"stanley", "321", "2"}).out == "x1^2*x2 + x1*x2^2\n");
    CHECK(run_cli({"stanley", "321", "2", "--format", "json"}).out ==
          "[{\"coeff\":1,\"exps\":{\"1\":2,\"2\":1}},{\"coeff\":1,\"exps\":{\"1\":1,\"2\":2}}]\n");
    CHECK(run_cli({"stanley", "321", "1"}).out == "0\n");
    CHECK(run_cli({"stanley", "321"}).code == 2);  // vars is required
    const Result r = run_cli({"stanley", "321", "0"});
    CHECK(r.code == 1);
    CHECK(r.err == "need at least one variable\n");
}

TEST_CASE("cli reduced-words") {
    CHECK(run_cli({"reduced-words", "321"}).out == "121\n212\n");
    CHECK(run_cli({"reduced-words", "321", "--format", "json"}).out == "[[1,2,1],[2,1,2]]\n");
}

TEST_CASE("cli render") {
    CHECK(run_cli({"render", "[0,1,4,2,1]"}).out == "  #\n  #\n  ##\n ####\n");
    CHECK(run_cli({"render", "--kind", "tableau"},
                  run_cli({"slide", "54534562", "--format", "json"}).out)
              .out == "  7\n  6\n  53\n 8421\n");
    CHECK(run_cli({"render", R"([{"row":3,"col":3,"label":1}])"}).out == "...\n...\n..1\n");
    const Result svg = run_cli({"render", "--svg", "[1]"});
    CHECK(svg.code == 0);
    CHECK(svg.out.find("<svg") == 0);
    CHECK(run_cli({"render", "--svg", "--ascii", "[1]"}).code == 2);
    CHECK(run_cli({"render", "5"}).code == 2);
    CHECK(run_cli({"render", "--kind", "sonnet", "[1]"}).code == 2);
    CHECK(run_cli({"render", "[oops"}).code == 2);
}

TEST_CASE("cli parse errors") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"slide", "1a2"}).code == 2);
    CHECK(run_cli({"slide", "0"}).code == 2);
    CHECK(run_cli({"slide", "1,x"}).code == 2);
    CHECK(run_cli({"shape", "331"}).code == 2);  // not a permutation
    CHECK(run_cli({"reading", "{\"heights\":[1]}"}).code == 2);
    CHECK_FALSE(run_cli({"slide", "1a2"}).err.empty());
}

TEST_CASE("cli help") {
    const Result r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("towertab") != std::string::npos);
    CHECK(run_cli({"slide", "--help"}).code == 0);
}
