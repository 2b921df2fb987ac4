#include "catch_amalgamated.hpp"

#include "dot_parse.hpp"
#include "whitney/cobweb.hpp"
#include "whitney/dot.hpp"
#include "whitney/layer_poset.hpp"

using whitney::FinitePoset;
using whitney::FSequence;

TEST_CASE("two-chain", "[dot]")
{
    const auto p = FinitePoset<std::string>::from_pairs({"a", "b"}, {{0, 1}});
    CHECK(whitney::to_dot(p) ==
          "digraph \"poset\" {\n"
          "  rankdir=BT;\n"
          "  \"a\";\n"
          "  \"b\";\n"
          "  \"a\" -> \"b\";\n"
          "  { rank=same; \"a\"; }\n"
          "  { rank=same; \"b\"; }\n"
          "}\n");
}

TEST_CASE("empty poset has only header and footer", "[dot]")
{
    const FinitePoset<std::string> empty;
    CHECK(whitney::to_dot(empty) == "digraph \"poset\" {\n  rankdir=BT;\n}\n");
    const auto parsed = parse_dot(whitney::to_dot(empty));
    CHECK(parsed.well_formed);
    CHECK(parsed.nodes.empty());
}

TEST_CASE("fibonacci cobweb export", "[dot]")
{
    const auto c = whitney::build_cobweb(FSequence::fibonacci(), 4);
    const std::string text = whitney::to_dot(c.poset, c.levels(), "fib");
    const auto parsed = parse_dot(text);
    CHECK(parsed.well_formed);
    CHECK(parsed.nodes.size() == 7);
    CHECK(parsed.edges.size() == 9);
    REQUIRE(parsed.groups.size() == 4);
    CHECK(parsed.groups[3] == std::vector<std::string>{"4:1", "4:2", "4:3"});
    CHECK(text == whitney::to_dot(c.poset, c.levels(), "fib"));
}

TEST_CASE("round trip reproduces the cover relation", "[dot][property]")
{
    for (const auto& seq : {FSequence::naturals(), FSequence::fibonacci(), FSequence::odd(), FSequence::even1(),
                            FSequence::div31()}) {
        for (int levels = 1; levels <= 6; ++levels) {
            const auto c = whitney::build_cobweb(seq, levels);
            const auto parsed = parse_dot(whitney::to_dot(c.poset, c.levels()));
            REQUIRE(parsed.nodes.size() == c.poset.size());
            std::vector<std::pair<std::string, std::string>> expected;
            for (auto [x, y] : c.poset.covers())
                expected.emplace_back(whitney::label_text(c.poset.label(x)), whitney::label_text(c.poset.label(y)));
            REQUIRE(parsed.edges == expected);
        }
    }
    const auto g = whitney::build_grid(2, 4, whitney::GridMode::weak);
    const auto parsed = parse_dot(whitney::to_dot(g.poset));
    CHECK(parsed.nodes.size() == g.poset.size());
    CHECK(parsed.edges.size() == g.poset.cover_count());
}

TEST_CASE("labels are escaped and ungraded posets are not grouped", "[dot]")
{
    // a < c, b < d < c: minimal elements at different heights below c.
    const auto p = FinitePoset<std::string>::from_pairs({"say \"hi\"", "b", "c", "d"}, {{0, 2}, {1, 3}, {3, 2}});
    const std::string text = whitney::to_dot(p);
    CHECK(text.find("\"say \\\"hi\\\"\";") != std::string::npos);
    const auto parsed = parse_dot(text);
    CHECK(parsed.groups.empty());
    CHECK(parsed.nodes.front() == "say \"hi\"");
    CHECK(parsed.edges.size() == 3);
}
