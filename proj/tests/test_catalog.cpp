#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "geocount/catalog.hpp"
#include "geocount/errors.hpp"
#include "geocount/geodesics.hpp"
#include "geocount/lattice.hpp"

#include "helpers.hpp"

using namespace geocount;
using namespace geocount::testing;

TEST_CASE("every preset builds into a valid space") {
    for (const std::string& name : preset_names()) {
        CAPTURE(name);
        const Space s = build_space(preset(name));
        CHECK(s.name() == name);
        CHECK(s.datum().rank >= 1);
        CHECK(s.weyl().size() >= 1);
    }
}

TEST_CASE("fundamental groups of the presets") {
    CHECK(build_space(preset("S2")).fundamental_group().is_trivial());
    CHECK(build_space(preset("Gr2R4+")).fundamental_group().is_trivial());
    CHECK(build_space(preset("SU2-group")).fundamental_group().is_trivial());
    CHECK(build_space(preset("RP2")).fundamental_group() == SmithDecomposition{{2}, 0});
    CHECK(build_space(preset("Gr2R4")).fundamental_group() == SmithDecomposition{{2}, 0});
    for (int n = 1; n <= 8; ++n) {
        const SmithDecomposition d =
            build_space(preset("T" + std::to_string(n))).fundamental_group();
        CHECK(d.invariant_factors.empty());
        CHECK(d.free_rank == static_cast<std::size_t>(n));
    }
    // Higher real grassmannians keep the two-fold fundamental group.
    CHECK(build_space(preset("Gr2Rn:5")).fundamental_group() == SmithDecomposition{{2}, 0});
    CHECK(build_space(preset("Gr2Rn:7")).fundamental_group() == SmithDecomposition{{2}, 0});
}

TEST_CASE("unknown presets are reported") {
    CHECK_THROWS_AS(preset("nope"), NotFound);
    CHECK_THROWS_AS(preset(""), NotFound);
    CHECK_THROWS_AS(preset("T0"), NotFound);
    CHECK_THROWS_AS(preset("T9"), NotFound);
    CHECK_THROWS_AS(preset("Gr2Rn:4"), NotFound);
    CHECK_THROWS_AS(preset("Gr2Rn:65"), NotFound);
    CHECK_THROWS_AS(preset("Gr2Rn:abc"), NotFound);
    CHECK_THROWS_AS(preset("Gr2Rn:"), NotFound);
}

TEST_CASE("descriptions round trip through JSON") {
    for (const std::string& name : {"S2", "RP2", "Gr2R4", "Gr2R4+", "T2", "SU2-group"}) {
        CAPTURE(name);
        const SpaceDescription original = preset(name);
        const SpaceDescription back = space_from_json_text(space_to_json_text(original));
        CHECK(back.name == original.name);
        CHECK(back.rank == original.rank);
        CHECK(back.gram == original.gram);
        CHECK(back.roots == original.roots);
        CHECK(back.lattice.has_value() == original.lattice.has_value());
        if (back.lattice) CHECK(*back.lattice == *original.lattice);
        CHECK(back.notes == original.notes);
    }
}

TEST_CASE("json parsing accepts integers and rational strings") {
    const SpaceDescription d = space_from_json_text(R"({
        "name": "halfline",
        "rank": 1,
        "gram": [[1]],
        "roots": [{"covector": ["1"], "multiplicity": 2}],
        "lattice": [["2"]]
    })");
    CHECK(d.name == "halfline");
    CHECK(d.gram == RationalMatrix::identity(1));
    CHECK(d.roots.size() == 1);
    CHECK(d.roots[0].multiplicity == 2);
    REQUIRE(d.lattice.has_value());
    CHECK(*d.lattice == columns({{"2"}}));

    const Space s = build_space(d);
    CHECK(s.fundamental_group().is_trivial());
}

TEST_CASE("omitted lattice defaults to the coroot span") {
    const SpaceDescription d = space_from_json_text(R"({
        "name": "pair",
        "rank": 2,
        "gram": [[1, 0], [0, 1]],
        "roots": [
            {"covector": ["1", "-1"], "multiplicity": 1},
            {"covector": ["1", "1"], "multiplicity": 1}
        ]
    })");
    CHECK_FALSE(d.lattice.has_value());
    const Space s = build_space(d);
    CHECK(lattices_equal(s.gamma(), s.gamma0()));
    CHECK(s.fundamental_group().is_trivial());
}

TEST_CASE("malformed descriptions are rejected with context") {
    CHECK_THROWS_AS(space_from_json_text("not json"), InvalidInput);
    CHECK_THROWS_AS(space_from_json_text("{}"), InvalidInput);
    CHECK_THROWS_AS(space_from_json_text(R"({"name": 3, "rank": 1, "gram": [[1]], "roots": []})"),
                    InvalidInput);
    CHECK_THROWS_AS(
        space_from_json_text(R"({"name": "x", "rank": 1, "gram": [[1]], "roots": [{}]})"),
        InvalidInput);
    CHECK_THROWS_AS(
        space_from_json_text(
            R"({"name": "x", "rank": 1, "gram": [["1/0"]], "roots": []})"),
        InvalidInput);
    CHECK_THROWS_AS(
        space_from_json_text(
            R"({"name": "x", "rank": 1, "gram": [[1.5]], "roots": []})"),
        InvalidInput);

    try {
        space_from_json_text(R"({"name": "x", "rank": 2, "gram": [[1, 0], [0, 1]],
                                 "roots": [{"covector": ["1"], "multiplicity": 1}]})");
        CHECK(false);
    } catch (const InvalidInput&) {
        CHECK(true);
    }
}

TEST_CASE("reading a description from a file") {
    const std::string path = "geocount_test_space.json";
    {
        std::ofstream out(path);
        out << space_to_json_text(preset("RP2"));
    }
    const SpaceDescription d = space_from_file(path);
    CHECK(d.name == "RP2");
    std::remove(path.c_str());

    CHECK_THROWS_AS(space_from_file("does_not_exist_anywhere.json"), InvalidInput);
}

TEST_CASE("higher grassmannian presets scale the multiplicities") {
    const SpaceDescription d = preset("Gr2Rn:7");
    const Space s = build_space(d);
    CHECK(s.datum().rank == 2);
    // Short roots carry multiplicity n - 4.
    const std::size_t short_index = s.datum().root_index(rv({"1", "0"}));
    CHECK(s.datum().root(short_index).multiplicity == 3);
    CHECK(s.weyl().size() == 8);
}

TEST_CASE("folded group preset keeps doubled multiplicity") {
    const SpaceDescription d = preset("SU2-group");
    REQUIRE(d.roots.size() == 1);
    CHECK(d.roots[0].multiplicity == 2);
    CHECK_FALSE(d.notes.empty());
    const Space s = build_space(d);
    CHECK(s.classify_point(rv({"1"})).index == 2);
    CHECK(s.classify_point(rv({"1"})).cut == CutPosition::CutPoint);
    CHECK(s.classify_point(rv({"1"})).conjugate == ConjugatePosition::FirstConjugate);
}
