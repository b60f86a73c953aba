#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mouldcalc/poly.hpp"
#include "test_util.hpp"

using namespace mouldcalc;
using namespace mouldcalc::testutil;

namespace {

Poly randomSparsePoly(int dim, int cutoff, std::mt19937_64& rng) {
    Poly p = Poly::zero(dim, cutoff);
    std::vector<Monomial> mons = basis(dim, cutoff, 0);
    std::uniform_int_distribution<size_t> pick(0, mons.size() - 1);
    for (int t = 0; t < 6; ++t) p.addTerm(mons[pick(rng)], randomScalar(rng));
    return p;
}

}  // namespace

TEST_CASE("polynomial product truncates") {
    Poly x = Poly::variable(2, 2, 0), y = Poly::variable(2, 2, 1);
    CHECK(polyMul(x, x) == Poly::monomial(2, 2, Monomial{{2, 0}}, Scalar(1)));
    // (1+x)(1-x) = 1 - x^2 at cutoff 2
    Poly one = Poly::constant(2, 2, Scalar(1));
    Poly lhs = polyMul(one + x, one - x);
    Poly expect = one - Poly::monomial(2, 2, Monomial{{2, 0}}, Scalar(1));
    CHECK(lhs == expect);
    // a top-degree monomial times x dies
    Poly top = Poly::monomial(2, 2, Monomial{{0, 2}}, Scalar(1));
    CHECK(polyMul(top, x).isZero());
    CHECK_THROWS_AS(polyMul(x, Poly::variable(3, 2, 0)), MouldError);
}

TEST_CASE("partial derivatives") {
    Poly x2 = Poly::monomial(2, 3, Monomial{{2, 0}}, Scalar(1));
    CHECK(partial(x2, 0) == Poly::monomial(2, 3, Monomial{{1, 0}}, Scalar(2)));
    CHECK(partial(x2, 1).isZero());
    Poly xy = Poly::monomial(2, 3, Monomial{{1, 1}}, Scalar(1));
    CHECK(partial(xy, 0) == Poly::variable(2, 3, 1));
    CHECK_THROWS_AS(partial(xy, 2), MouldError);
}

TEST_CASE("ring axioms on random sparse polynomials") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        int dim = 1 + static_cast<int>(rng() % 3);
        int cutoff = 2 + static_cast<int>(rng() % 5);
        Poly p = randomSparsePoly(dim, cutoff, rng);
        Poly q = randomSparsePoly(dim, cutoff, rng);
        Poly r = randomSparsePoly(dim, cutoff, rng);
        CHECK(polyMul(p, q) == polyMul(q, p));
        CHECK(polyMul(polyMul(p, q), r) == polyMul(p, polyMul(q, r)));
        CHECK(polyMul(p, q + r) == polyMul(p, q) + polyMul(p, r));
        // Leibniz at one degree of slack
        for (int axis = 0; axis < dim; ++axis) {
            Poly lhs = partial(polyMul(p, q), axis).truncated(cutoff - 1);
            Poly rhs = (polyMul(partial(p, axis), q) + polyMul(p, partial(q, axis)))
                           .truncated(cutoff - 1);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("basis enumeration") {
    auto b = basis(2, 2, 0);
    REQUIRE(b.size() == 6);
    CHECK(b[0] == Monomial{{0, 0}});
    CHECK(b[1] == Monomial{{0, 1}});  // graded-lex within a degree
    CHECK(b[2] == Monomial{{1, 0}});
    CHECK(b[5] == Monomial{{2, 0}});
    CHECK(basis(1, 3, 1).size() == 3);
    CHECK(basis(2, 1, 0).size() == 3);
    // stable total order
    CHECK(basis(2, 2, 0) == basis(2, 2, 0));
}

TEST_CASE("polynomial text round-trip") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 100; ++trial) {
        int dim = 1 + static_cast<int>(rng() % 3);
        Poly p = randomSparsePoly(dim, 5, rng);
        Poly back = parsePoly(p.str(), dim, 5);
        CHECK(back == p);
    }
    Poly z = Poly::zero(2, 4);
    CHECK(parsePoly(z.str(), 2, 4) == z);
    CHECK(parsePoly("1/2*x1^2*x2 - 3i*x2", 2, 4).terms.size() == 2);
    CHECK_THROWS_AS(parsePoly("1*zz", 2, 4), ParseError);
}
