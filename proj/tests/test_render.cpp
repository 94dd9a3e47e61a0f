#include "doctest.h"

#include "json.hpp"
#include "pp4q/render.hpp"
#include "pp4q/sequences.hpp"

#include <string>

using namespace pp4q;

TEST_CASE("format parsing") {
    CHECK(parse_format("csv") == OutputFormat::Csv);
    CHECK(parse_format("json") == OutputFormat::Json);
    CHECK(parse_format("table") == OutputFormat::Table);
    CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}

TEST_CASE("counts CSV is byte stable") {
    const auto rows = counts_by_recurrence(5, 3);
    const std::string want =
        "n,a_n,b_n,c_n,d_n,e_n,s_n\n"
        "0,0,0,0,0,0,1\n"
        "1,0,0,0,0,0,3\n"
        "2,1,0,2,0,0,6\n"
        "3,2,1,4,1,0,11\n";
    CHECK(render_counts_csv(rows) == want);
    CHECK(render_counts_csv(rows) == render_counts_csv(rows));
}

TEST_CASE("sums CSV is byte stable") {
    const auto rows = sums_by_recurrence(5, 2);
    const std::string want =
        "n,a_hat_n,b_hat_n,c_hat_n,d_hat_n,e_hat_n,s_hat_n\n"
        "0,0,0,0,0,0,1\n"
        "1,0,0,0,0,0,3\n"
        "2,2,0,4,0,0,9\n";
    CHECK(render_sums_csv(rows) == want);
}

TEST_CASE("table layout right-aligns columns") {
    const auto rows = counts_by_recurrence(5, 10);
    const std::string t = render_counts_table(rows);
    CHECK(t.rfind(" n  a_n", 0) == 0);
    CHECK(t.find("10  988") != std::string::npos);
    CHECK(t.back() == '\n');
}

TEST_CASE("counts JSON carries decimal strings") {
    const auto rows = counts_by_recurrence(5, 10);
    const auto doc = nlohmann::json::parse(render_counts_json(5, rows));
    CHECK(doc["q"] == 5);
    REQUIRE(doc["rows"].size() == 11);
    CHECK(doc["rows"][10]["s"] == "4201");
    CHECK(doc["rows"][10]["a"] == "988");
    CHECK(doc["rows"][0]["s"] == "1");
}

TEST_CASE("sums JSON includes the type-1 column") {
    const auto rows = sums_by_recurrence(5, 4);
    const auto doc = nlohmann::json::parse(render_sums_json(5, rows));
    CHECK(doc["rows"][4]["v"] == "3");
    CHECK(doc["rows"][4]["d"] == "36");
    CHECK(doc["rows"][0]["v"] == "1");
}

TEST_CASE("label listing for level 2") {
    const std::string want =
        "(row=0, i=0, h=2) 1 1\n"
        "(row=1, i=0, h=1) C 2\n"
        "(row=1, i=1, h=1) C 2\n"
        "(row=2, i=0, h=0) 1 1\n"
        "(row=2, i=1, h=0) A 2\n"
        "(row=2, i=2, h=0) 1 1\n";
    CHECK(render_labels_text(build_level(5, 2)) == want);
}

TEST_CASE("level JSON structure") {
    const LevelGraph g = build_level(5, 2);
    const auto doc = nlohmann::json::parse(render_level_json(g));
    CHECK(doc["q"] == 5);
    CHECK(doc["level"] == 2);
    CHECK(doc["size"] == 6);
    REQUIRE(doc["vertices"].size() == 6);
    CHECK(doc["vertices"][1]["type"] == "C");
    CHECK(doc["vertices"][1]["label"] == "2");
    CHECK(doc["vertices"][1]["row"] == 1);
    CHECK(doc["vertices"][1]["height"] == 1);
    CHECK(doc["vertices"][1]["ascendants"] == nlohmann::json::array({0, 1}));
    CHECK(doc["vertices"][0]["ascendants"] == nlohmann::json::array({0}));
}

TEST_CASE("level CSV header and shape") {
    const std::string csv = render_level_csv(build_level(5, 1));
    CHECK(csv ==
          "row,index,height,type,label\n"
          "0,0,1,1,1\n"
          "1,0,0,1,1\n"
          "1,1,0,1,1\n");
}

TEST_CASE("transition dot output") {
    HptFace face(5);
    LevelGraph g = build_level0(5);
    LevelGraph prev;
    for (int i = 0; i < 4; ++i) {
        prev = std::move(g);
        g = build_next_level(prev, face);
    }
    const std::string dot = render_transition_dot(prev, g);
    CHECK(dot.rfind("digraph levels {", 0) == 0);
    CHECK(dot.find("shape=diamond") != std::string::npos);
    CHECK(dot.find("shape=hexagon") != std::string::npos);
    CHECK(dot.find("shape=plaintext") != std::string::npos);

    std::size_t edges = 0, at = 0;
    while ((at = dot.find(" -> ", at)) != std::string::npos) {
        ++edges;
        at += 4;
    }
    CHECK(edges == 38);

    std::size_t nodes = 0;
    at = 0;
    while ((at = dot.find("[label=", at)) != std::string::npos) {
        ++nodes;
        at += 7;
    }
    CHECK(nodes == 11 + 21);

    CHECK(render_transition_dot(prev, g) == dot);
    CHECK_THROWS_AS(render_transition_dot(g, prev), std::invalid_argument);
}
