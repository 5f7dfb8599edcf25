#include <doctest.h>

#include <string>

#include "helpers.hpp"
#include "towertab/json_io.hpp"
#include "towertab/render.hpp"
#include "towertab/schubert.hpp"

using namespace towertab;
using nlohmann::json;
using testing::labeling;
using testing::tableau;

namespace {

RotheLabeling book_labeling() {
    return labeling({{1, 1, 2},
                     {1, 2, 1},
                     {2, 1, 4},
                     {2, 2, 3},
                     {2, 4, 4},
                     {3, 1, 5},
                     {3, 2, 2},
                     {4, 1, 6}});
}

template <class T>
T round_trip(const T& v) {
    const json j = v;
    return j.get<T>();
}

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1))
        ++n;
    return n;
}

}  // namespace

TEST_CASE("json round trips") {
    CHECK(round_trip(Permutation({3, 5, 4, 2, 1})) == Permutation({3, 5, 4, 2, 1}));
    CHECK(round_trip(Permutation{}) == Permutation{});
    CHECK(round_trip(TowerDiagram({0, 1, 4, 2, 1})) == TowerDiagram({0, 1, 4, 2, 1}));
    CHECK(round_trip(*slide_word({5, 4, 5, 3, 4, 5, 6, 2})) == *slide_word({5, 4, 5, 3, 4, 5, 6, 2}));
    CHECK(round_trip(TowerTableau{}) == TowerTableau{});
    CHECK(round_trip(rothe_diagram(Permutation({3, 5, 4, 2, 1}))) ==
          rothe_diagram(Permutation({3, 5, 4, 2, 1})));
    CHECK(round_trip(book_labeling()) == book_labeling());
    const CompleteTowerTableau c = complete(*slide_word({3, 1, 4, 3, 5, 4}));
    CHECK(round_trip(c) == c);
    CHECK(round_trip(stanley_truncated(Permutation({2, 1, 4, 3}), 2)) ==
          stanley_truncated(Permutation({2, 1, 4, 3}), 2));
    CHECK(round_trip(Polynomial{}) == Polynomial{});
}

TEST_CASE("json texture") {
    CHECK(json(TowerDiagram({0, 1, 4, 2, 1})).dump() == "[0,1,4,2,1]");
    CHECK(json(Permutation{}).dump() == "[]");
    CHECK(json(labeling({{3, 3, 1}})).dump() == R"([{"col":3,"label":1,"row":3}])");
    const json j = complete(*slide_word({3}));
    CHECK(j.contains("main"));
    CHECK(j.contains("virtual"));
}

TEST_CASE("json rejects malformed tableaux") {
    const auto parse = [](const char* text) { return json::parse(text).get<TowerTableau>(); };
    CHECK(parse(R"({"heights":[1],"labels":[{"col":1,"ht":0,"label":4}]})") == tableau({{4}}));
    CHECK_THROWS_AS(parse(R"({"heights":[1],"labels":[{"col":2,"ht":0,"label":1}]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"heights":[1],"labels":[]})"), std::invalid_argument);
    CHECK_THROWS_AS(
        parse(R"({"heights":[1],"labels":[{"col":1,"ht":0,"label":1},{"col":1,"ht":0,"label":2}]})"),
        std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"labels":[]})"), json::exception);
    CHECK_THROWS_AS(json::parse(R"([[1],[2,3]])").get<RotheDiagram>(), std::invalid_argument);
    CHECK_THROWS_AS(json::parse(R"([{"row":1,"col":1,"label":1},{"row":1,"col":1,"label":2}])")
                        .get<RotheLabeling>(),
                    std::invalid_argument);
}

TEST_CASE("ascii rendering") {
    CHECK(ascii_diagram(TowerDiagram({0, 1, 4, 2, 1})) == "  #\n  #\n  ##\n ####");
    CHECK(ascii_diagram(TowerDiagram{}) == "");
    CHECK(ascii_tableau(*slide_word({5, 4, 5, 3, 4, 5, 6, 2})) == "  7\n  6\n  53\n 8421");
    CHECK(ascii_tableau(TowerTableau{}) == "");
    CHECK(ascii_tableau(tableau({{12, 3}})) == " 3\n12");
    CHECK(ascii_labeling(book_labeling()) == "21..\n43.4\n52..\n6...");
    CHECK(ascii_labeling(RotheLabeling{}) == "");
}

TEST_CASE("ascii four-quadrant layout") {
    const std::string expect =
        "  |  5\n"
        "  |  36\n"
        "  |2 14\n"
        "--+----\n"
        " 5|2\n"
        "  |\n"
        "43|  34\n"
        "21|  56\n"
        " 6|  1";
    CHECK(ascii_complete(complete(*slide_word({3, 1, 4, 3, 5, 4}))) == expect);
    CHECK(ascii_complete(CompleteTowerTableau{}) == "+");
}

TEST_CASE("svg rendering") {
    const std::string d = svg_diagram(TowerDiagram({1}));
    CHECK(d.find("viewBox=\"0 0 10 10\"") != std::string::npos);
    CHECK(count_occurrences(d, "<rect") == 1);
    CHECK(count_occurrences(d, "<text") == 0);

    const std::string t = svg_tableau(tableau({{4}}));
    CHECK(count_occurrences(t, ">4</text>") == 1);

    const std::string l = svg_labeling(rothify(*slide_word({3, 1, 4, 3, 5, 4})));
    CHECK(l.find("viewBox=\"0 0 50 50\"") != std::string::npos);
    CHECK(count_occurrences(l, "<text") == 6);

    const std::string c = svg_complete(complete(*slide_word({3, 1, 4, 3, 5, 4})));
    CHECK(count_occurrences(c, "<rect") == 18);  // main + mirror + labeling
    CHECK(c == svg_complete(complete(*slide_word({3, 1, 4, 3, 5, 4}))));
}
