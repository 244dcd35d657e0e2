#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "geocount/errors.hpp"
#include "geocount/root_datum.hpp"

#include "helpers.hpp"

using namespace geocount;
using namespace geocount::testing;

namespace {

RootDatum sphere_datum() {
    return build_root_datum(1, RationalMatrix::identity(1), {Root{rv({"1"}), 1}});
}

// Two orthogonal roots in the plane; the system behind the real
// grassmannian of 2-planes in R^4.
RootDatum plane_pair_datum() {
    return build_root_datum(2, RationalMatrix::identity(2),
                            {Root{rv({"1", "-1"}), 1}, Root{rv({"1", "1"}), 1}});
}

RootDatum b2_datum() {
    return build_root_datum(2, RationalMatrix::identity(2),
                            {Root{rv({"1", "-1"}), 1}, Root{rv({"1", "1"}), 1},
                             Root{rv({"1", "0"}), 2}, Root{rv({"0", "1"}), 2}});
}

}  // namespace

TEST_CASE("rank one system") {
    const RootDatum d = sphere_datum();
    CHECK(d.rank == 1);
    CHECK(d.roots.size() == 2);
    CHECK(d.positive_count() == 1);
    CHECK(d.simple_indices.size() == 1);
    CHECK(d.coroot(0) == rv({"2"}));
    CHECK(d.root_value(0, rv({"1/2"})) == Q("1/2"));
    CHECK(d.has_root(rv({"-1"})));
    CHECK_FALSE(d.has_root(rv({"2"})));
    CHECK_THROWS_AS(d.root_index(rv({"3"})), NotFound);
}

TEST_CASE("orthogonal pair in the plane") {
    const RootDatum d = plane_pair_datum();
    CHECK(d.positive_count() == 2);
    CHECK(d.simple_indices.size() == 2);
    // Both roots have squared length 2, so they are their own coroots.
    for (std::size_t i : d.positive_indices)
        CHECK(d.coroot(i) == d.roots[i].covector);
}

TEST_CASE("B2 shape") {
    const RootDatum d = b2_datum();
    CHECK(d.positive_count() == 4);
    CHECK(d.simple_indices.size() == 2);
    // Short root (1,0) has coroot (2,0); long root (1,1) is its own coroot.
    CHECK(d.coroot(d.root_index(rv({"1", "0"}))) == rv({"2", "0"}));
    CHECK(d.coroot(d.root_index(rv({"1", "1"}))) == rv({"1", "1"}));
    CHECK(d.root(d.root_index(rv({"1", "0"}))).multiplicity == 2);

    // Simple roots of this positive system: (0,1) and (1,-1).
    std::vector<RationalVector> simples;
    for (std::size_t i : d.simple_indices) simples.push_back(d.roots[i].covector);
    CHECK(std::find(simples.begin(), simples.end(), rv({"0", "1"})) != simples.end());
    CHECK(std::find(simples.begin(), simples.end(), rv({"1", "-1"})) != simples.end());
}

TEST_CASE("torus datum has no roots") {
    const RootDatum d = build_root_datum(2, RationalMatrix::identity(2), {});
    CHECK(d.roots.empty());
    CHECK(d.positive_count() == 0);
    CHECK(is_regular(d, rv({"1/2", "1/3"})));
    CHECK(is_regular(d, rv({"0", "0"})));
}

TEST_CASE("negative roots may be listed explicitly") {
    const RootDatum d =
        build_root_datum(1, RationalMatrix::identity(1), {Root{rv({"1"}), 3}, Root{rv({"-1"}), 3}});
    CHECK(d.roots.size() == 2);
    CHECK(d.root(0).multiplicity == 3);

    CHECK_THROWS_AS(build_root_datum(1, RationalMatrix::identity(1),
                                     {Root{rv({"1"}), 3}, Root{rv({"-1"}), 2}}),
                    InvalidRootSystem);
}

TEST_CASE("input validation") {
    const RationalMatrix id2 = RationalMatrix::identity(2);
    // Wrong covector length.
    CHECK_THROWS_AS(build_root_datum(2, id2, {Root{rv({"1"}), 1}}), InvalidInput);
    // Zero root.
    CHECK_THROWS_AS(build_root_datum(2, id2, {Root{rv({"0", "0"}), 1}}), InvalidInput);
    // Bad multiplicity.
    CHECK_THROWS_AS(build_root_datum(2, id2, {Root{rv({"1", "0"}), 0}}), InvalidInput);
    // Duplicate root.
    CHECK_THROWS_AS(build_root_datum(2, id2, {Root{rv({"1", "0"}), 1}, Root{rv({"1", "0"}), 1}}),
                    InvalidInput);
    // Gram not symmetric positive definite.
    CHECK_THROWS_AS(build_root_datum(2, rows({{"1", "2"}, {"2", "1"}}), {Root{rv({"1", "0"}), 1}}),
                    InvalidInput);
    CHECK_THROWS_AS(build_root_datum(2, rows({{"1", "2"}, {"3", "4"}}), {Root{rv({"1", "0"}), 1}}),
                    InvalidInput);
}

TEST_CASE("crystallographic condition is enforced") {
    // 2<a,b>/<b,b> = 4/3 for a = (1,0), b = (2/3,0): not an integer.
    CHECK_THROWS_AS(build_root_datum(2, RationalMatrix::identity(2),
                                     {Root{rv({"1", "0"}), 1}, Root{rv({"2/3", "0"}), 1}}),
                    InvalidRootSystem);
}

TEST_CASE("reflection closure is enforced") {
    // Reflecting (1,1) in (1,0) lands on (-1,1), which is missing.
    CHECK_THROWS_AS(build_root_datum(2, RationalMatrix::identity(2),
                                     {Root{rv({"1", "0"}), 1}, Root{rv({"1", "1"}), 1}}),
                    InvalidRootSystem);
    // Same configuration with the mirror image present is fine.
    const RootDatum d = build_root_datum(2, RationalMatrix::identity(2),
                                         {Root{rv({"1", "0"}), 1}, Root{rv({"1", "1"}), 1},
                                          Root{rv({"1", "-1"}), 1}, Root{rv({"0", "1"}), 1}});
    CHECK(d.positive_count() == 4);

    // Closure also checks multiplicities along the orbit.
    CHECK_THROWS_AS(build_root_datum(2, RationalMatrix::identity(2),
                                     {Root{rv({"1", "0"}), 1}, Root{rv({"1", "1"}), 2},
                                      Root{rv({"1", "-1"}), 1}, Root{rv({"0", "1"}), 1}}),
                    InvalidRootSystem);
}

TEST_CASE("diagram crossings") {
    const RootDatum d = plane_pair_datum();

    // At (1/2,1/2): the difference root vanishes, the sum root is at level 1.
    const auto crossings = diagram_crossings(d, rv({"1/2", "1/2"}));
    REQUIRE(crossings.size() == 2);
    CHECK(d.roots[crossings[0].root_index].covector == rv({"1", "-1"}));
    CHECK(crossings[0].level == 0);
    CHECK(d.roots[crossings[1].root_index].covector == rv({"1", "1"}));
    CHECK(crossings[1].level == 1);
    CHECK_FALSE(is_regular(d, rv({"1/2", "1/2"})));

    // At (-1/2,0) both root values are -1/2: no crossings.
    CHECK(diagram_crossings(d, rv({"-1/2", "0"})).empty());
    CHECK(is_regular(d, rv({"-1/2", "0"})));

    const auto at_origin = diagram_crossings(d, rv({"0", "0"}));
    CHECK(at_origin.size() == 2);
    for (const auto& c : at_origin) CHECK(c.level == 0);
}

TEST_CASE("crossings on the rank one diagram") {
    const RootDatum d = sphere_datum();
    CHECK(diagram_crossings(d, rv({"1/2"})).empty());
    const auto at_two = diagram_crossings(d, rv({"2"}));
    REQUIRE(at_two.size() == 1);
    CHECK(at_two[0].level == 2);
}
