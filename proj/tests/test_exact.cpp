#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "geocount/enumeration.hpp"
#include "geocount/errors.hpp"
#include "geocount/linalg.hpp"
#include "geocount/rational.hpp"
#include "geocount/smith.hpp"

#include "helpers.hpp"

using namespace geocount;
using namespace geocount::testing;

TEST_CASE("rational parsing and printing") {
    CHECK(Q("3/6").str() == "1/2");
    CHECK(Q("-4/6").str() == "-2/3");
    CHECK(Q("1/-2").str() == "-1/2");
    CHECK(Q("+7").str() == "7");
    CHECK(Q("0/5").str() == "0");
    CHECK(Q("10").is_integer());
    CHECK_FALSE(Q("1/3").is_integer());

    CHECK_THROWS_AS(Q(""), InvalidInput);
    CHECK_THROWS_AS(Q("1/"), InvalidInput);
    CHECK_THROWS_AS(Q("/2"), InvalidInput);
    CHECK_THROWS_AS(Q("1//2"), InvalidInput);
    CHECK_THROWS_AS(Q("1.5"), InvalidInput);
    CHECK_THROWS_AS(Q("a"), InvalidInput);
    CHECK_THROWS_AS(Q("1/0"), InvalidInput);
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), InvalidInput);
}

TEST_CASE("rational arithmetic and ordering") {
    CHECK(Q("1/2") + Q("1/3") == Q("5/6"));
    CHECK(Q("1/2") - Q("2/3") == Q("-1/6"));
    CHECK(Q("3/4") * Q("2/9") == Q("1/6"));
    CHECK(Q("3/4") / Q("3/2") == Q("1/2"));
    CHECK_THROWS_AS(Q("1") / Q("0"), InvalidInput);
    CHECK(-Q("2/5") == Q("-2/5"));
    CHECK(Q("-7/3").abs() == Q("7/3"));
    CHECK(Q("1/3") < Q("1/2"));
    CHECK(Q("-1/2") < Q("-1/3"));
    CHECK(Q("2/4") == Q("1/2"));
    CHECK(Q("1/3").sign() == 1);
    CHECK(Q("-1/3").sign() == -1);
    CHECK(Q("0").sign() == 0);
}

TEST_CASE("rational floor and nearest integer") {
    CHECK(Q("3/2").floor() == 1);
    CHECK(Q("-3/2").floor() == -2);
    CHECK(Q("2").floor() == 2);
    CHECK(Q("-1/3").floor() == -1);

    CHECK(Q("1/2").round_nearest() == 1);   // ties go up
    CHECK(Q("-1/2").round_nearest() == 0);
    CHECK(Q("5/2").round_nearest() == 3);
    CHECK(Q("-5/2").round_nearest() == -2);
    CHECK(Q("1/3").round_nearest() == 0);
    CHECK(Q("2/3").round_nearest() == 1);
    CHECK(Q("-2/3").round_nearest() == -1);
}

TEST_CASE("matrix inverse and solving") {
    const RationalMatrix a = rows({{"1", "2"}, {"3", "4"}});
    const RationalMatrix inv = a.inverse();
    CHECK(a.mul(inv) == RationalMatrix::identity(2));
    CHECK(inv.mul(a) == RationalMatrix::identity(2));

    const RationalMatrix singular = rows({{"1", "2"}, {"2", "4"}});
    CHECK(singular.rank() == 1);
    CHECK_THROWS_AS(singular.inverse(), InvalidInput);

    const RationalVector x = solve_linear(a, rv({"5", "6"}));
    CHECK(a.apply(x) == rv({"5", "6"}));

    // Full column rank, more rows than columns.
    const RationalMatrix tall = columns({{"1", "0", "1"}, {"0", "1", "1"}});
    const auto sol = solve_full_column_rank(tall, rv({"2", "3", "5"}));
    REQUIRE(sol.has_value());
    CHECK(*sol == rv({"2", "3"}));
    CHECK_FALSE(solve_full_column_rank(tall, rv({"2", "3", "6"})).has_value());

    const RationalMatrix dependent = columns({{"1", "1"}, {"2", "2"}});
    CHECK_THROWS_AS(solve_full_column_rank(dependent, rv({"1", "1"})), InvalidInput);
}

TEST_CASE("exact LDLT factorization") {
    const RationalMatrix g = rows({{"2", "1"}, {"1", "3"}});
    const LdltFactorization f = ldlt(g);
    // Reassemble L D L^T.
    RationalMatrix d(2, 2);
    d.at(0, 0) = f.d[0];
    d.at(1, 1) = f.d[1];
    CHECK(f.l.mul(d).mul(f.l.transpose()) == g);
    for (const Rational& pivot : f.d) CHECK(pivot.sign() > 0);

    CHECK_THROWS_AS(ldlt(rows({{"0", "1"}, {"1", "0"}})), InvalidInput);   // not definite
    CHECK_THROWS_AS(ldlt(rows({{"1", "2"}, {"2", "1"}})), InvalidInput);   // indefinite
    CHECK_THROWS_AS(ldlt(rows({{"1", "2"}, {"3", "4"}})), InvalidInput);   // not symmetric
}

TEST_CASE("smith normal form of quotients") {
    // Z^2 modulo the rows of [[1,1],[-1,1]] is Z/2.
    const SmithDecomposition d1 = smith_normal_form(rows({{"1", "1"}, {"-1", "1"}}));
    CHECK(d1.invariant_factors == std::vector<Integer>{2});
    CHECK(d1.free_rank == 0);
    CHECK_FALSE(d1.is_trivial());

    const SmithDecomposition d2 = smith_normal_form(RationalMatrix::identity(2));
    CHECK(d2.invariant_factors.empty());
    CHECK(d2.free_rank == 0);
    CHECK(d2.is_trivial());

    // No relations at all: free of rank 2.
    const SmithDecomposition d3 = smith_normal_form(RationalMatrix(0, 2));
    CHECK(d3.invariant_factors.empty());
    CHECK(d3.free_rank == 2);

    // Classic: quotient by 2Z x 3Z inside Z^2 has a fused cyclic part.
    const SmithDecomposition d4 = smith_normal_form(rows({{"2", "0"}, {"0", "3"}}));
    CHECK(d4.invariant_factors == std::vector<Integer>{6});
    CHECK(d4.free_rank == 0);

    const SmithDecomposition d5 = smith_normal_form(rows({{"2", "0"}, {"0", "4"}}));
    CHECK(d5.invariant_factors == std::vector<Integer>{2, 4});
}

TEST_CASE("smith transforms multiply back") {
    RationalSampler sampler(101);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = static_cast<std::size_t>(sampler.next_int(1, 4));
        const std::size_t c = static_cast<std::size_t>(sampler.next_int(1, 4));
        IntMatrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a.at(i, j) = Integer(sampler.next_int(-9, 9));
        const SmithTransforms t = smith_with_transforms(a);
        CHECK(t.u.mul(a).mul(t.v) == t.d);
        // Diagonal, nonnegative, with divisibility down the diagonal.
        Integer prev = 0;
        for (std::size_t i = 0; i < t.d.rows(); ++i)
            for (std::size_t j = 0; j < t.d.cols(); ++j) {
                if (i != j) CHECK(t.d.at(i, j) == 0);
            }
        for (std::size_t i = 0; i + 1 < std::min(t.d.rows(), t.d.cols()); ++i) {
            const Integer& a0 = t.d.at(i, i);
            const Integer& a1 = t.d.at(i + 1, i + 1);
            CHECK(a0 >= 0);
            if (a0 != 0 && a1 != 0) CHECK(a1 % a0 == 0);
            if (a0 == 0) CHECK(a1 == 0);
        }
        (void)prev;
    }
}

TEST_CASE("smith decomposition is invariant under unimodular row mixing") {
    const RationalMatrix shear = rows({{"1", "1"}, {"0", "1"}});
    const RationalMatrix swap = rows({{"0", "1"}, {"1", "0"}});
    RationalSampler sampler(202);
    for (int trial = 0; trial < 25; ++trial) {
        RationalMatrix a(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) a.at(i, j) = Rational(sampler.next_int(-6, 6));
        const SmithDecomposition base = smith_normal_form(a);
        CHECK(smith_normal_form(shear.mul(a)) == base);
        CHECK(smith_normal_form(swap.mul(a)) == base);
        CHECK(smith_normal_form(shear.mul(swap).mul(a)) == base);
    }
}

TEST_CASE("hermite column basis is canonical for the column lattice") {
    IntMatrix a(2, 2);
    a.at(0, 0) = 1; a.at(0, 1) = 0;
    a.at(1, 0) = 1; a.at(1, 1) = 2;
    const IntMatrix h1 = hermite_column_basis(a);

    IntMatrix b(2, 2);   // different generators, same lattice
    b.at(0, 0) = 1; b.at(0, 1) = 0;
    b.at(1, 0) = 3; b.at(1, 1) = 2;
    const IntMatrix h2 = hermite_column_basis(b);
    CHECK(h1 == h2);
    CHECK(h1.at(0, 0) == 1);
    CHECK(h1.at(1, 1) == 2);
    CHECK(h1.at(1, 0) == 1);   // reduced into [0, 2)
    CHECK(h1.at(0, 1) == 0);

    // The transform certifies membership of the basis in the generators.
    IntMatrix v;
    const IntMatrix h3 = hermite_column_basis(a, &v);
    CHECK(a.mul(v).cols() == a.cols());
    for (std::size_t j = 0; j < h3.cols(); ++j)
        for (std::size_t i = 0; i < h3.rows(); ++i)
            CHECK(a.mul(v).at(i, j) == h3.at(i, j));
}

TEST_CASE("integer kernel") {
    IntMatrix a(1, 3);
    a.at(0, 0) = 1; a.at(0, 1) = 2; a.at(0, 2) = 3;
    const IntMatrix k = a.cols() ? integer_kernel(a) : IntMatrix();
    CHECK(k.cols() == 2);
    for (std::size_t j = 0; j < k.cols(); ++j) {
        Integer image = 0;
        for (std::size_t i = 0; i < 3; ++i) image += a.at(0, i) * k.at(i, j);
        CHECK(image == 0);
    }

    IntMatrix id = IntMatrix::identity(3);
    CHECK(integer_kernel(id).cols() == 0);
}

namespace {

// Reference enumeration: scan a large coefficient box.
std::vector<IntVector> naive_ball(const RationalMatrix& basis, const RationalMatrix& gram,
                                  const RationalVector& center, const Rational& r2, bool strict) {
    const std::size_t k = basis.cols();
    std::vector<IntVector> found;
    IntVector n(k, Integer(0));
    const long bound = 24;
    std::vector<long> idx(k, -bound);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) n[i] = Integer(idx[i]);
        RationalVector p = center;
        for (std::size_t j = 0; j < k; ++j)
            p = vec_add(p, vec_scale(Rational(n[j]), basis.column(j)));
        const Rational q = gram_norm_squared(gram, p);
        if (strict ? q < r2 : q <= r2) found.push_back(n);
        std::size_t level = 0;
        while (level < k && ++idx[level] > bound) idx[level++] = -bound;
        if (level == k) break;
    }
    std::sort(found.begin(), found.end());
    return found;
}

}  // namespace

TEST_CASE("ball enumeration matches a box scan") {
    RationalSampler sampler(303);
    for (int trial = 0; trial < 8; ++trial) {
        const std::size_t ambient = static_cast<std::size_t>(sampler.next_int(1, 3));
        const std::size_t k = static_cast<std::size_t>(sampler.next_int(1, ambient));
        RationalMatrix basis(ambient, k);
        do {
            for (std::size_t i = 0; i < ambient; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    basis.at(i, j) = Rational(sampler.next_int(-1, 1));
        } while (basis.rank() != k);
        const RationalMatrix gram = RationalMatrix::identity(ambient);
        const RationalVector center = sampler.next_vector(ambient, -3, 3, 3);
        const Rational r2 = Rational(Integer(sampler.next_int(0, 6)));

        const auto fast = enumerate_lattice_points_in_ball(basis, gram, center, r2);
        const auto slow = naive_ball(basis, gram, center, r2, false);
        CHECK(fast == slow);
        // The reference scan only covers coefficients within its box; make
        // sure nothing legitimate falls outside it.
        for (const IntVector& n : fast)
            for (const Integer& c : n) CHECK(abs(c) < 24);

        const auto fast_strict = enumerate_lattice_points_in_ball(basis, gram, center, r2, true);
        const auto slow_strict = naive_ball(basis, gram, center, r2, true);
        CHECK(fast_strict == slow_strict);
    }
}

TEST_CASE("ball enumeration edge cases") {
    const RationalMatrix z2 = RationalMatrix::identity(2);
    const auto boundary = enumerate_lattice_points_in_ball(z2, z2, rv({"0", "0"}), Q("1"));
    CHECK(boundary.size() == 5);   // origin and the four unit neighbors
    const auto strict = enumerate_lattice_points_in_ball(z2, z2, rv({"0", "0"}), Q("1"), true);
    CHECK(strict.size() == 1);

    CHECK_THROWS_AS(enumerate_lattice_points_in_ball(z2, z2, rv({"0", "0"}), Q("-1")),
                    InvalidInput);
    CHECK_THROWS_AS(
        enumerate_lattice_points_in_ball(columns({{"1", "1"}, {"2", "2"}}), z2, rv({"0", "0"}), Q("1")),
        InvalidInput);

    // Rank zero lattice: the center alone decides membership.
    const RationalMatrix empty(2, 0);
    CHECK(enumerate_lattice_points_in_ball(empty, z2, rv({"0", "0"}), Q("0")).size() == 1);
    CHECK(enumerate_lattice_points_in_ball(empty, z2, rv({"3", "0"}), Q("1")).empty());
}

TEST_CASE("solving for lattice coordinates") {
    const RationalMatrix basis = columns({{"1", "1"}, {"0", "2"}});
    const auto inside = solve_in_lattice(basis, rv({"2", "4"}));
    REQUIRE(inside.has_value());
    CHECK(*inside == IntVector{Integer(2), Integer(1)});

    CHECK_FALSE(solve_in_lattice(basis, rv({"1", "0"})).has_value());      // wrong parity
    CHECK_FALSE(solve_in_lattice(basis, rv({"1/2", "1/2"})).has_value());  // not integral

    RationalSampler sampler(404);
    for (int trial = 0; trial < 20; ++trial) {
        IntVector coords{Integer(sampler.next_int(-8, 8)), Integer(sampler.next_int(-8, 8))};
        RationalVector v = vec_add(vec_scale(Rational(coords[0]), basis.column(0)),
                                   vec_scale(Rational(coords[1]), basis.column(1)));
        const auto back = solve_in_lattice(basis, v);
        REQUIRE(back.has_value());
        CHECK(*back == coords);
    }

    CHECK_THROWS_AS(solve_in_lattice(columns({{"1", "1"}, {"2", "2"}}), rv({"1", "2"})),
                    InvalidInput);
}
