#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mouldcalc/normal_forms.hpp"
#include "test_util.hpp"

using namespace mouldcalc;
using namespace mouldcalc::testutil;

namespace {

PreparedField exampleField(int cutoff = 5) {
    // lambda = (1, 2), generic quadratic coefficients
    return prepare(quadraticPlaneField(Scalar(1), Scalar(2), Scalar(1), Scalar(2), Scalar(3),
                                       Scalar(-1), Scalar(Rational(1, 2)), Scalar(Rational(2, 3)),
                                       cutoff));
}

GradedOperator randomHomogeneousOperator(int cutoff, std::mt19937_64& rng) {
    // a derivation c1 x^m dx + c2 x^m' dy of a random degree
    std::uniform_int_distribution<int> deg(2, 3);
    std::vector<Poly> comps(2, Poly::zero(2, cutoff));
    std::vector<Monomial> mons = basis(2, deg(rng), 2);
    std::uniform_int_distribution<size_t> pick(0, mons.size() - 1);
    Monomial m = mons[pick(rng)];
    int axis = static_cast<int>(rng() % 2);
    comps[static_cast<size_t>(axis)].addTerm(m, randomNonzeroScalar(rng));
    MultiIndex tag{m.e[0] - (axis == 0 ? 1 : 0), m.e[1] - (axis == 1 ? 1 : 0)};
    return GradedOperator::derivation(2, cutoff, comps, tag);
}

}  // namespace

TEST_CASE("prepare extracts the example decomposition") {
    PreparedField f = exampleField();
    CHECK(f.lambda == std::vector<Scalar>{Scalar(1), Scalar(2)});
    REQUIRE(f.parts.size() == 4);
    std::vector<MultiIndex> expect{{-1, 2}, {0, 1}, {1, 0}, {2, -1}};
    std::vector<MultiIndex> got;
    for (const auto& [n, b] : f.parts) got.push_back(n);
    CHECK(got == expect);

    // B_(1,0) = x(a20 x dx + b11 y dy)
    const GradedOperator& b10 = f.parts.at({1, 0});
    Poly x = Poly::variable(2, 5, 0), y = Poly::variable(2, 5, 1);
    CHECK(b10.apply(x) == Poly::monomial(2, 5, Monomial{{2, 0}}, Scalar(1)));
    CHECK(b10.apply(y) == Poly::monomial(2, 5, Monomial{{1, 1}}, Scalar(Rational(1, 2))));
    // B_(-1,2) = a02 y^2 dx
    const GradedOperator& bm12 = f.parts.at({-1, 2});
    CHECK(bm12.apply(x) == Poly::monomial(2, 5, Monomial{{0, 2}}, Scalar(3)));
    CHECK(bm12.apply(y).isZero());
    for (const auto& [n, b] : f.parts) {
        CHECK(isHomogeneous(b, n));
        CHECK(isDerivation(b));
    }

    // a purely linear field has an empty alphabet
    PreparedField lin = prepare(quadraticPlaneField(Scalar(1), Scalar(2), Scalar(), Scalar(),
                                                    Scalar(), Scalar(), Scalar(), Scalar(), 4));
    CHECK(lin.parts.empty());

    // constant terms are rejected
    Poly bad = Poly::constant(2, 4, Scalar(1));
    CHECK_THROWS_AS(prepare({bad, Poly::zero(2, 4)}), MouldError);
    // non-diagonal linear parts are rejected
    Poly cross = Poly::variable(2, 4, 1);
    CHECK_THROWS_AS(prepare({cross, Poly::zero(2, 4)}), MouldError);
}

TEST_CASE("composition basics") {
    PreparedField f = exampleField();
    GradedOperator id = GradedOperator::identity(2, 5);
    const GradedOperator& b10 = f.parts.at({1, 0});
    const GradedOperator& b01 = f.parts.at({0, 1});
    CHECK(composeOp(id, b10) == b10);
    CHECK(composeOp(b10, id) == b10);
    GradedOperator prod = composeOp(b10, b01);
    REQUIRE(prod.gradeTag.has_value());
    CHECK(*prod.gradeTag == MultiIndex{1, 1});
    CHECK(isHomogeneous(prod, {1, 1}));

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        GradedOperator p = randomHomogeneousOperator(5, rng);
        GradedOperator q = randomHomogeneousOperator(5, rng);
        GradedOperator r = randomHomogeneousOperator(5, rng);
        CHECK(composeOp(composeOp(p, q), r) == composeOp(p, composeOp(q, r)));
    }
}

TEST_CASE("brackets and the linear-part eigenrelation") {
    PreparedField f = exampleField();
    GradedOperator xlin = f.linOperator();
    for (const auto& [n, b] : f.parts) {
        Scalar w = f.alphabet->omegaOf(Grade::multi(n));
        CHECK(bracketOp(xlin, b) == b.scaled(w));
    }
    const GradedOperator& b10 = f.parts.at({1, 0});
    CHECK(bracketOp(b10, b10).isZero());
    // commuting diagonals
    GradedOperator dx = GradedOperator::diagonal(2, 5, [](const Monomial& m) {
        return Scalar(Rational(m.e[0]));
    });
    GradedOperator dy = GradedOperator::diagonal(2, 5, [](const Monomial& m) {
        return Scalar(Rational(m.e[1]));
    });
    CHECK(bracketOp(dx, dy).isZero());

    // the eigenrelation extends to words (composites)
    for (const auto& [n1, c1] : f.parts)
        for (const auto& [n2, c2] : f.parts) {
            GradedOperator word = composeOp(c1, c2);
            Scalar w = f.alphabet->omegaOf(Grade::multi(n1)) + f.alphabet->omegaOf(Grade::multi(n2));
            CHECK(bracketOp(xlin, word) == word.scaled(w));
        }
}

TEST_CASE("derivation test") {
    PreparedField f = exampleField();
    CHECK(isDerivation(f.parts.at({1, 0})));
    CHECK_FALSE(isDerivation(GradedOperator::identity(2, 5)));
    GradedOperator secondOrder = composeOp(f.parts.at({1, 0}), f.parts.at({0, 1}));
    CHECK_FALSE(isDerivation(secondOrder));
    CHECK(isDerivation(bracketOp(f.parts.at({1, 0}), f.parts.at({0, 1}))));
}

TEST_CASE("mould expansion: units and the field itself") {
    PreparedField f = exampleField();
    Mould one = Mould::one(f.alphabet), unit = Mould::unitI(f.alphabet);
    CHECK(evalMouldExpansion(one, f) == GradedOperator::identity(2, 5));
    CHECK(evalMouldExpansion(unit, f) == f.nonlinearOperator());
}

TEST_CASE("mould expansion of Exp V is the operator exponential") {
    PreparedField f = exampleField();
    Mould v = vMould(f.alphabet);
    GradedOperator vOp = GradedOperator::zero(2, 5);
    for (const auto& [n, b] : f.parts) {
        Scalar w = f.alphabet->omegaOf(Grade::multi(n));
        if (!w.isZero()) vOp += b.scaled(w.inverse());
    }
    CHECK(evalMouldExpansion(v, f) == vOp);
    CHECK(evalMouldExpansion(mouldExp(v), f) == expNilpotent(vOp));
}

TEST_CASE("bracket expansion agrees with the plain expansion") {
    PreparedField f = exampleField();
    Mould unit = Mould::unitI(f.alphabet);
    GradedOperator viaBrackets = evalBracketExpansion(unit, f, 3);
    CHECK(viaBrackets == f.nonlinearOperator());

    Mould sam = samMould(f.alphabet);
    GradedOperator a = evalMouldExpansion(sam, f);
    GradedOperator b = evalBracketExpansion(sam, f, 3);
    CHECK(a == b);
    CHECK(isDerivation(b));

    std::mt19937_64 rng(42);
    Mould alt = randomAlternalTable(f.alphabet, 5, rng);
    CHECK(evalMouldExpansion(alt, f) == evalBracketExpansion(alt, f, 3));

    Mould notAlternal = mouldAdd(Mould::one(f.alphabet), unit);
    CHECK_THROWS_AS(evalBracketExpansion(notAlternal, f, 3), MouldError);
}

TEST_CASE("grad-mould identity at the operator level") {
    // X_lin (sum M B) - (sum M B) X_lin = sum (nabla M) B
    PreparedField f = exampleField(4);
    GradedOperator xlin = f.linOperator();
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 3; ++trial) {
        Mould m = randomTableMould(f.alphabet, 3, rng);
        GradedOperator op = evalMouldExpansion(m, f);
        CHECK(bracketOp(xlin, op) == evalMouldExpansion(nabla(m), f));
    }
}

TEST_CASE("homogeneity bookkeeping of columns") {
    PreparedField f = exampleField();
    for (const auto& [n, b] : f.parts) {
        REQUIRE(b.gradeTag.has_value());
        CHECK(*b.gradeTag == n);
        CHECK(isHomogeneous(b, n));
    }
    // grade components may leave N^nu; images with negative exponents vanish
    const GradedOperator& b2m1 = f.parts.at({2, -1});
    Poly x = Poly::variable(2, 5, 0);
    CHECK(b2m1.apply(x).isZero());  // x -> x^3 y^{-1} is out of the monomial lattice
}
