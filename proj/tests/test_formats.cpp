#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "cmaps/complete.hpp"
#include "cmaps/map_io.hpp"

using namespace cmaps;

TEST_CASE("cycle text round trip") {
    Permutation p = Permutation::from_cycles({{0, 2, 1}, {3, 4}}, 6);
    std::string text = format_cycles(p);
    CHECK(parse_cycles(text, 6) == p);
    CHECK(format_cycles(Permutation::identity(2), false) == "()");
    CHECK_THROWS(parse_cycles("(0 1)(1 2)", 3));
}

TEST_CASE("map v1 round trip") {
    CompleteFlagUniverse u(4);
    EmbeddingCode code(4, {{{1, 0}, {2, 0}, {3, 0}},
                           {{0, 0}, {2, 0}, {3, 0}},
                           {{0, 0}, {3, 0}, {1, 0}},
                           {{0, 0}, {1, 0}, {2, 0}}});
    Map m = code.decode();
    std::string text = write_map_v1(m);
    CHECK(text.rfind("map v1\n", 0) == 0);
    CHECK(text.find("flags=24") != std::string::npos);
    std::istringstream in(text);
    Map back = read_map_v1(in);
    CHECK(back == m);
    // Serialization is stable.
    CHECK(write_map_v1(back) == text);
}

TEST_CASE("map v1 parse errors carry line numbers") {
    std::istringstream bad1("map v2\nflags=4\n");
    CHECK_THROWS_AS(read_map_v1(bad1), MapError);
    std::istringstream bad2("map v1\nflags=24\nalpha: oops\n");
    try {
        read_map_v1(bad2);
        FAIL("expected parse error");
    } catch (const MapError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    // A structurally valid file violating the axioms is rejected too.
    std::istringstream bad3(
        "map v1\nflags=4\nalpha: (0 1)(2 3)\nbeta: (0 2)(1 3)\nP: (0 1)(2 3)\n");
    CHECK_THROWS_AS(read_map_v1(bad3), MapError);
}

TEST_CASE("kn v1 round trip") {
    EmbeddingCode code(5, {{{1, 0}, {2, 0}, {4, 1}, {3, 0}},
                           {{0, 0}, {2, 0}, {3, 0}, {4, 0}},
                           {{0, 0}, {1, 0}, {3, 0}, {4, 0}},
                           {{0, 0}, {1, 0}, {2, 0}, {4, 0}},
                           {{0, 0}, {1, 0}, {2, 0}, {3, 0}}});
    std::string line = code.to_kn_v1();
    CHECK(line.find("kn v1") != std::string::npos);
    CHECK(line.find("n=5") != std::string::npos);
    // Vertices and neighbors are 1-based in the text form.
    CHECK(line.find("rot[1]=2+ 3+ 5- 4+") != std::string::npos);
    CHECK(EmbeddingCode::parse_kn_v1(line) == code);
    CHECK_THROWS(EmbeddingCode::parse_kn_v1("kn v1; n=4; rot[1]=2+ 3+"));
    CHECK_THROWS(EmbeddingCode::parse_kn_v1("nonsense"));
}
