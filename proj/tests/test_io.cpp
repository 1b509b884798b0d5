#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "ample/ample.hpp"
#include "ample/io.hpp"
#include "helpers.hpp"

using namespace ample;
using test_helpers::fam;
using test_helpers::six_cycle;

namespace {

int count_lines_with(const std::string& text, const std::string& needle) {
    int count = 0;
    std::size_t pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

}  // namespace

TEST_CASE("family parsing") {
    const SignFamily L = parse_family("# a comment\n++-\n\n+-+\n  -++  \n");
    CHECK(L.n() == 3);
    CHECK(L.size() == 3);
    CHECK(L.contains(parse_sign_vector("++-")));

    CHECK(parse_family("").n() == 0);
    CHECK(parse_family("# only comments\n").empty());

    CHECK_THROWS_AS(parse_family("++-\n+-\n"), ParseError);
    CHECK_THROWS_AS(parse_family("++-\n+0-\n"), ParseError);
    try {
        parse_family("++-\n# fine\n+-\n");
    } catch (const ParseError& err) {
        CHECK(err.line() == 3);
        CHECK(std::string(err.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("family formatting round trip") {
    const std::string text = format_family(six_cycle());
    CHECK(parse_family(text) == six_cycle());
    CHECK(count_lines_with(text, "\n") == 6);
}

TEST_CASE("csv cloud parsing") {
    const PointCloud K = parse_cloud_csv("# points\n0.5, 0.5\n-1,2\n");
    CHECK(K.n() == 2);
    CHECK(K.size() == 2);
    CHECK(K.points()[1][0] == -1.0);

    CHECK_THROWS_AS(parse_cloud_csv("1,2\n3\n"), ParseError);
    CHECK_THROWS_AS(parse_cloud_csv("1,abc\n"), ParseError);
    try {
        parse_cloud_csv("1,2\n3,4\n5\n");
    } catch (const ParseError& err) {
        CHECK(err.line() == 3);
    }
}

TEST_CASE("json cloud parsing") {
    const PointCloud K = parse_cloud_json("[[0.5, 0.5], [0, 1]]");
    CHECK(K.n() == 2);
    CHECK(K.size() == 2);
    CHECK_THROWS_AS(parse_cloud_json("{\"a\": 1}"), ParseError);
    CHECK_THROWS_AS(parse_cloud_json("[[1,2],[3]]"), ParseError);
    CHECK_THROWS_AS(parse_cloud_json("not json"), ParseError);
}

TEST_CASE("dot export of the skeleton") {
    const std::string dot = dot_skeleton(six_cycle());
    const int edges = count_lines_with(dot, " -- ");
    const int nodes = count_lines_with(dot, "\";\n") - edges;
    CHECK(nodes == 6);
    CHECK(edges == 6);
    CHECK(dot == dot_skeleton(six_cycle()));

    const std::string empty = dot_skeleton(fam({}, 2));
    CHECK(count_lines_with(empty, " -- ") == 0);
    CHECK(empty.find("graph skeleton {") == 0);
}

TEST_CASE("dot export of the barycentric grid") {
    const std::string dot = dot_barycentric(generate(GeneratorKind::Full, 2));
    const int edges = count_lines_with(dot, " -- ");
    const int nodes = count_lines_with(dot, "\";\n") - edges;
    CHECK(nodes == 9);
    CHECK(edges == 12);
    CHECK(dot == dot_barycentric(generate(GeneratorKind::Full, 2)));
}

TEST_CASE("json report schema") {
    const SignFamily L = six_cycle();
    const auto doc = nlohmann::json::parse(report_json(L, cross_check(L)));
    CHECK(doc.size() == 7);
    CHECK(doc["n"] == 3);
    CHECK(doc["family"].size() == 6);
    CHECK(doc["agree"] == true);
    CHECK(doc["dress_pajor"] == nlohmann::json({4, 6, 7}));
    CHECK(doc["vc_dimension"] == 2);
    CHECK(doc["verdicts"].size() == kAllCharacterizations.size());
    for (const auto& [key, value] : doc["verdicts"].items()) CHECK(value == false);
    CHECK(doc["witnesses"].size() == kAllCharacterizations.size());
    CHECK(doc["witnesses"]["LOPSIDED"]["A"] == "110");

    const SignFamily cube = generate(GeneratorKind::Full, 2);
    const auto ample_doc = nlohmann::json::parse(report_json(cube, cross_check(cube)));
    CHECK(ample_doc["agree"] == true);
    CHECK(ample_doc["witnesses"].empty());
    for (const auto& [key, value] : ample_doc["verdicts"].items()) CHECK(value == true);
}

TEST_CASE("missing file") {
    CHECK_THROWS_AS(load_family("/nonexistent/family.txt"), std::runtime_error);
}
