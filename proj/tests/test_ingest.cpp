#include "graphscan/ingest.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "graphscan/rng.hpp"
#include "test_helpers.hpp"

using namespace graphscan;

namespace {

ParseResult parse_text(const std::string& text, const ParseOptions& options = {}) {
    std::istringstream in(text);
    return parse_series(in, options);
}

std::string write_text(const GraphSeries& series, const VertexMap& map,
                       char delimiter = ',') {
    std::ostringstream out;
    write_series(series, map, out, delimiter);
    return out.str();
}

// Reorders the data lines of a serialized series, keeping comments in place
// only as lines (their position may move too).
std::string shuffle_lines(const std::string& text, std::uint64_t seed) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    std::mt19937_64 rng(seed);
    std::shuffle(lines.begin(), lines.end(), rng);
    std::string out;
    for (const auto& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

}  // namespace

TEST_CASE("empty input with declared sizes yields empty snapshots") {
    ParseOptions options;
    options.num_vertices = 5;
    options.series_len = 4;
    auto result = parse_text("", options);
    CHECK(result.series.length() == 4);
    CHECK(result.series.num_vertices() == 5);
    for (std::size_t t = 0; t < 4; ++t) CHECK(result.series.at(t).edge_count() == 0);
    CHECK(result.map.size() == 5);
    CHECK(result.map.label_of(3) == "3");
    CHECK(result.report.duplicate_edges == 0);
    CHECK(result.report.self_loops == 0);
}

TEST_CASE("duplicates collapse and self-loops drop, both counted") {
    auto result = parse_text("0,a,b\n0,b,a\n0,a,a\n");
    CHECK(result.series.length() == 1);
    CHECK(result.series.num_vertices() == 2);
    CHECK(result.series.at(0).edge_count() == 1);
    CHECK(result.series.at(0).has_edge(result.map.id_of("a"), result.map.id_of("b")));
    CHECK(result.report.duplicate_edges == 1);
    CHECK(result.report.self_loops == 1);
}

TEST_CASE("serialized series parse back identically") {
    Rng rng(2024);
    for (int rep = 0; rep < 25; ++rep) {
        const std::size_t n = 2 + rng() % 40;
        const std::size_t len = 1 + rng() % 6;
        const double p = 0.05 + 0.9 * unit_double(rng);
        auto series = helpers::random_series(n, len, p, rng());
        auto map = VertexMap::identity(n);
        auto text = write_text(series, map);
        auto parsed = parse_text(text);
        CHECK(parsed.series == series);
        CHECK(parsed.map.size() == n);
        CHECK(parsed.report.duplicate_edges == 0);
        CHECK(parsed.report.self_loops == 0);
    }
}

TEST_CASE("shuffled input canonicalizes to identical bytes") {
    Rng rng(77);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t n = 3 + rng() % 25;
        auto series = helpers::random_series(n, 1 + rng() % 5, 0.4, rng());
        auto map = VertexMap::identity(n);
        auto canonical = write_text(series, map);
        auto shuffled = shuffle_lines(canonical, 1000 + rep);
        auto reparsed = parse_text(shuffled);
        CHECK(reparsed.series == series);
        CHECK(write_text(reparsed.series, reparsed.map) == canonical);
    }
}

TEST_CASE("window gaps become empty snapshots") {
    auto result = parse_text("0,0,1\n3,1,2\n");
    CHECK(result.series.length() == 4);
    CHECK(result.series.num_vertices() == 3);
    CHECK(result.series.at(0).edge_count() == 1);
    CHECK(result.series.at(1).edge_count() == 0);
    CHECK(result.series.at(2).edge_count() == 0);
    CHECK(result.series.at(3).has_edge(1, 2));
}

TEST_CASE("malformed lines name their line number") {
    CHECK_THROWS_WITH_AS(parse_text("0,a\n"), doctest::Contains("line 1"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_text("0,a,b,c\n"), doctest::Contains("3 fields"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_text("x,a,b\n"),
                         doctest::Contains("not a nonnegative integer"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_text("0,,b\n"), doctest::Contains("empty vertex label"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_text("# n=3 T=2\n0,0,1\n1,0\n"),
                         doctest::Contains("line 3"), std::runtime_error);
}

TEST_CASE("declared sizes bound the records") {
    ParseOptions n5;
    n5.num_vertices = 5;
    CHECK_THROWS_WITH_AS(parse_text("0,7,1\n", n5), doctest::Contains("line 1"),
                         std::runtime_error);

    ParseOptions len2;
    len2.series_len = 2;
    CHECK_THROWS_WITH_AS(parse_text("0,0,1\n5,1,2\n", len2),
                         doctest::Contains("window index 5"), std::runtime_error);

    ParseOptions conflict;
    conflict.num_vertices = 10;
    CHECK_THROWS_WITH_AS(parse_text("# n=3 T=1\n0,0,1\n", conflict),
                         doctest::Contains("conflicts with header"), std::runtime_error);
}

TEST_CASE("header declares sizes beyond the data") {
    auto result = parse_text("# n=6 T=5\n0,0,1\n2,4,5\n");
    CHECK(result.series.length() == 5);
    CHECK(result.series.num_vertices() == 6);
    CHECK(result.series.at(2).has_edge(4, 5));
    CHECK(result.series.at(4).edge_count() == 0);
}

TEST_CASE("comment lines are skipped wherever they appear") {
    auto result = parse_text("# produced by a generator run\n0,0,1\n# midway note\n1,1,2\n");
    CHECK(result.series.length() == 2);
    CHECK(result.series.num_vertices() == 3);
    // A comment mentioning n=9 T=9 in prose is not the size header.
    auto prose = parse_text("# sampled with n=9 T=9 in the spec\n0,0,1\n");
    CHECK(prose.series.num_vertices() == 2);
    CHECK(prose.series.length() == 1);
}

TEST_CASE("string labels map in first-seen order") {
    auto result = parse_text("0,carol,alice\n0,bob,carol\n1,alice,bob\n");
    CHECK(result.map.id_of("carol") == 0);
    CHECK(result.map.id_of("alice") == 1);
    CHECK(result.map.id_of("bob") == 2);
    CHECK(result.series.at(1).has_edge(1, 2));

    // Round trip preserves structure with the map carried alongside.
    auto text = write_text(result.series, result.map);
    auto reparsed = parse_text(text);
    CHECK(reparsed.series == result.series);
}

TEST_CASE("leading zeros force label mode instead of value identity") {
    auto result = parse_text("0,007,7\n");
    CHECK(result.series.num_vertices() == 2);
    CHECK(result.map.id_of("007") == 0);
    CHECK(result.map.id_of("7") == 1);
}

TEST_CASE("declared count pads label mode with unused vertices") {
    ParseOptions options;
    options.num_vertices = 4;
    auto result = parse_text("0,x,y\n", options);
    CHECK(result.map.size() == 4);
    CHECK(result.series.num_vertices() == 4);
    CHECK(result.series.at(0).edge_count() == 1);
}

TEST_CASE("empty series writes a header-only file") {
    CHECK(write_text(GraphSeries{}, VertexMap::identity(0)) == "# n=0 T=0\n");
    CHECK(write_text(GraphSeries{}, VertexMap::identity(5)) == "# n=5 T=0\n");
}

TEST_CASE("alternate delimiters round trip") {
    ParseOptions options;
    options.delimiter = ';';
    auto series = helpers::random_series(8, 3, 0.5, 99);
    auto text = write_text(series, VertexMap::identity(8), ';');
    std::istringstream in(text);
    auto parsed = parse_series(in, options);
    CHECK(parsed.series == series);
}

TEST_CASE("carriage returns are stripped") {
    auto result = parse_text("# n=3 T=1\r\n0,0,1\r\n0,1,2\r\n");
    CHECK(result.series.num_vertices() == 3);
    CHECK(result.series.at(0).edge_count() == 2);
}

TEST_CASE("writing rejects labels that collide with the format") {
    VertexMap map;
    map.add("a,b");
    map.add("c");
    GraphSnapshot g(2);
    g.add_edge(0, 1);
    GraphSeries series({g});
    std::ostringstream out;
    CHECK_THROWS_AS(write_series(series, map, out), std::invalid_argument);
}

TEST_CASE("vertex map basics") {
    auto map = VertexMap::identity(3);
    CHECK(map.size() == 3);
    CHECK(map.label_of(2) == "2");
    CHECK(map.id_of("1") == 1);
    CHECK(map.contains("0"));
    CHECK(!map.contains("3"));
    CHECK(map.add("1") == 1);
    CHECK(map.add("fresh") == 3);
    CHECK_THROWS_AS(map.id_of("missing"), std::invalid_argument);
    CHECK_THROWS_AS(map.label_of(99), std::out_of_range);
}

TEST_CASE("mismatched map size is rejected on write") {
    GraphSnapshot g(3);
    GraphSeries series({g});
    std::ostringstream out;
    CHECK_THROWS_AS(write_series(series, VertexMap::identity(2), out),
                    std::invalid_argument);
}

TEST_CASE("oversized vertex counts are rejected") {
    CHECK_THROWS_WITH_AS(parse_text("0,999999,1\n"), doctest::Contains("maximum"),
                         std::runtime_error);
}
