#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mouldcalc/normal_forms.hpp"
#include "test_util.hpp"

using namespace mouldcalc;
using namespace mouldcalc::testutil;

namespace {

AlphabetPtr omegaAlphabet3() {
    return GradedAlphabet::valued(
        {Scalar(1), Scalar(Rational(1, 2)), Scalar(Rational(-1, 3), Rational(1, 5))});
}

AlphabetPtr multiAlphabet() {
    return GradedAlphabet::multiIndexed({{1, 0}, {0, 1}}, {Scalar(1), Scalar(Rational(5, 7))});
}

}  // namespace

TEST_CASE("product and composition units") {
    auto a = omegaAlphabet3();
    Mould one = Mould::one(a), unit = Mould::unitI(a);
    CHECK(one(a->emptyWord()) == Scalar(1));
    CHECK(one(a->word({0})) == Scalar());
    CHECK(unit(a->word({1})) == Scalar(1));
    CHECK(unit(a->emptyWord()) == Scalar());
    CHECK(unit(a->word({0, 1})) == Scalar());
}

TEST_CASE("mould sum is pointwise") {
    auto a = omegaAlphabet3();
    Mould one = Mould::one(a), unit = Mould::unitI(a);
    Mould cancel = mouldAdd(one, mouldScale(Scalar(-1), one));
    Mould twice = mouldAdd(unit, unit);
    for (const Word& w : allWords(*a, 3)) {
        CHECK(cancel(w) == Scalar());
        CHECK(mouldAdd(unit, Mould::zero(a))(w) == unit(w));
    }
    CHECK(twice(a->word({2})) == Scalar(2));
}

TEST_CASE("mould product: unit law and I x I") {
    auto a = omegaAlphabet3();
    std::mt19937_64 rng(21);
    Mould m = randomTableMould(a, 4, rng);
    Mould one = Mould::one(a), unit = Mould::unitI(a);
    CHECK(mouldsEqual(mouldMul(one, m), m, 4));
    CHECK(mouldsEqual(mouldMul(m, one), m, 4));
    Mould ii = mouldMul(unit, unit);
    CHECK(ii(a->word({0, 1})) == Scalar(1));
    CHECK(ii(a->word({0})) == Scalar());
    CHECK_THROWS_AS(mouldMul(m, Mould::one(multiAlphabet())), MouldError);
}

TEST_CASE("product associativity on random tables") {
    auto a = omegaAlphabet3();
    std::mt19937_64 rng(22);
    Mould m = randomTableMould(a, 4, rng), n = randomTableMould(a, 4, rng),
          p = randomTableMould(a, 4, rng);
    CHECK(mouldsEqual(mouldMul(mouldMul(m, n), p), mouldMul(m, mouldMul(n, p)), 4));
}

TEST_CASE("mould inverse") {
    auto a = omegaAlphabet3();
    Mould one = Mould::one(a), unit = Mould::unitI(a);
    CHECK(mouldsEqual(mouldInverse(one), one, 4));
    Mould geom = mouldInverse(mouldAdd(one, unit));
    CHECK(geom(a->word({0, 1})) == Scalar(1));   // (-1)^length
    CHECK(geom(a->word({0})) == Scalar(-1));
    CHECK_THROWS_AS(mouldInverse(unit)(a->emptyWord()), NotInvertible);
    std::mt19937_64 rng(23);
    Mould m = randomTableMould(a, 4, rng);
    if (m(a->emptyWord()).isZero()) m = mouldAdd(m, one);
    Mould inv = mouldInverse(m);
    CHECK(mouldsEqual(mouldMul(m, inv), one, 4));
    CHECK(mouldsEqual(mouldMul(inv, m), one, 4));
}

TEST_CASE("composition units and the sam self-composition") {
    auto a = omegaAlphabet3();
    std::mt19937_64 rng(24);
    Mould m = randomTableMould(a, 4, rng, /*zeroOnEmpty=*/true);
    Mould unit = Mould::unitI(a);
    CHECK(mouldsEqual(mouldCompose(m, unit), m, 4));
    CHECK(mouldsEqual(mouldCompose(unit, m), m, 4));

    Mould sam = samMould(a);
    Mould sam2 = mouldCompose(sam, sam);
    for (int i = 0; i < 3; ++i) {
        Word w = a->word({i});
        CHECK(sam2(w) == sam(w) * sam(w));
        CHECK(sam2(w) == sam(w));
    }
    // length-2 block formula of the composition
    Word w = a->word({0, 1});
    Word gradeWord = Word::single(gradeSum(w));
    Scalar expect = sam(gradeWord) * sam(w) + sam(w) * sam(a->word({0})) * sam(a->word({1}));
    CHECK(sam2(w) == expect);

    // resonant two-letter word: the composition is already stationary
    auto b = GradedAlphabet::valued({Scalar(0), Scalar(1), Scalar(-1)});
    Mould samB = samMould(b);
    Word res = Word::of({Grade::value(Scalar(1)), Grade::value(Scalar(-1))});
    CHECK(samB(res) == Scalar(1));
    CHECK(mouldCompose(samB, samB)(res) == Scalar(1));
}

TEST_CASE("composition associativity for closed forms") {
    auto a = omegaAlphabet3();
    Mould sam = samMould(a);
    Mould v = vMould(a);
    Mould quad = Mould::closedForm(a, Scalar(), [](const std::vector<Scalar>& om) {
        Scalar s;
        for (const Scalar& w : om) s += w * w;
        return s;
    });
    Mould left = mouldCompose(mouldCompose(sam, v), quad);
    Mould right = mouldCompose(sam, mouldCompose(v, quad));
    CHECK(mouldsEqual(left, right, 4));
}

TEST_CASE("exp and log") {
    auto a = omegaAlphabet3();
    Mould one = Mould::one(a), unit = Mould::unitI(a);
    CHECK(mouldsEqual(mouldExp(Mould::zero(a)), one, 4));

    // Exp of a length-1 mould multiplies letter values and divides by r!
    Mould v = vMould(a);
    Mould expV = mouldExp(v);
    Rational factorial(1);
    for (int len = 1; len <= 4; ++len) {
        factorial *= len;
        Word w = a->emptyWord();
        Scalar prod(1);
        for (int i = 0; i < len; ++i) {
            w = w.appended(a->letters[static_cast<size_t>(i % 3)]);
            prod *= a->omegaOf(a->letters[static_cast<size_t>(i % 3)]).inverse();
        }
        CHECK(expV(w) == prod / Scalar(factorial));
    }

    // Log(Exp I - 1) = I
    Mould expI = mouldExp(unit);
    Mould logExpI = mouldLog(mouldSub(expI, one));
    CHECK(mouldsEqual(logExpI, unit, 4));

    CHECK_THROWS_AS(mouldExp(one)(a->word({0})), MouldError);

    std::mt19937_64 rng(25);
    Mould m = randomAlternalTable(a, 4, rng);
    CHECK(mouldsEqual(mouldLog(mouldSub(mouldExp(m), one)), m, 4));

    // group inverse: Exp(V) x Exp(-V) = 1
    Mould expNegV = mouldExp(mouldScale(Scalar(-1), v));
    CHECK(mouldsEqual(mouldMul(expV, expNegV), one, 4));
}

TEST_CASE("nabla is a product derivation") {
    auto a = omegaAlphabet3();
    Mould one = Mould::one(a), unit = Mould::unitI(a);
    CHECK(mouldsEqual(nabla(one), Mould::zero(a), 4));
    for (int i = 0; i < 3; ++i)
        CHECK(nabla(unit)(a->word({i})) == a->omegaOf(a->letters[static_cast<size_t>(i)]));
    std::mt19937_64 rng(26);
    Mould m = randomTableMould(a, 4, rng), n = randomTableMould(a, 4, rng);
    Mould lhs = nabla(mouldMul(m, n));
    Mould rhs = mouldAdd(mouldMul(nabla(m), n), mouldMul(m, nabla(n)));
    CHECK(mouldsEqual(lhs, rhs, 4));
}

TEST_CASE("symmetry certification") {
    auto a = omegaAlphabet3();
    Mould unit = Mould::unitI(a);
    CHECK(checkSymmetry(unit, 4).kind == SymmetryKind::Alternal);

    std::mt19937_64 rng(27);
    Mould alt = randomAlternalTable(a, 4, rng);
    CHECK(checkSymmetry(alt, 4).kind == SymmetryKind::Alternal);
    CHECK(checkSymmetry(mouldExp(alt), 4).kind == SymmetryKind::Symmetral);

    // 1 + I is neither; the symmetral test fails at ((n),(n))
    Mould oneplus = mouldAdd(Mould::one(a), unit);
    SymmetryReport rep = checkSymmetry(oneplus, 4);
    CHECK(rep.kind == SymmetryKind::Neither);
    REQUIRE(rep.symmetralViolation.has_value());
    CHECK(rep.symmetralViolation->a == a->word({0}));
    CHECK(rep.symmetralViolation->b == a->word({0}));
    CHECK(rep.symmetralViolation->shuffleSum == Scalar());

    // a mould with a nonzero empty-word value cannot be alternal
    CHECK(checkSymmetry(Mould::one(a), 4).kind != SymmetryKind::Alternal);
}

TEST_CASE("projection coefficients") {
    auto a = omegaAlphabet3();
    auto p1 = psiCoefficients(a->word({0}));
    REQUIRE(p1.size() == 1);
    CHECK(p1[0] == std::pair{a->word({0}), Scalar(1)});

    auto p2 = psiCoefficients(a->word({0, 1}));
    REQUIRE(p2.size() == 2);
    CHECK(p2[0] == std::pair{a->word({0, 1}), Scalar(Rational(1, 2))});
    CHECK(p2[1] == std::pair{a->word({1, 0}), Scalar(Rational(-1, 2))});

    // [[a1,a2],a3] = a1a2a3 - a2a1a3 - a3a1a2 + a3a2a1, all with weight 1/3
    auto p3 = psiCoefficients(a->word({0, 1, 2}));
    REQUIRE(p3.size() == 4);
    std::map<Word, Scalar> expect{{a->word({0, 1, 2}), Scalar(Rational(1, 3))},
                                  {a->word({1, 0, 2}), Scalar(Rational(-1, 3))},
                                  {a->word({2, 0, 1}), Scalar(Rational(-1, 3))},
                                  {a->word({2, 1, 0}), Scalar(Rational(1, 3))}};
    std::map<Word, Scalar> got(p3.begin(), p3.end());
    CHECK(got == expect);

    CHECK_THROWS_AS(psiCoefficients(a->emptyWord()), MouldError);
}

TEST_CASE("table moulds bound their domain") {
    auto a = omegaAlphabet3();
    std::mt19937_64 rng(28);
    Mould m = randomTableMould(a, 2, rng);
    CHECK_THROWS_AS(m(a->word({0, 0, 0})), MouldError);
    // a table as the outer part of a composition errors once a grade-sum word
    // leaves the alphabet
    std::map<Word, Scalar> inner{{a->word({0, 1}), Scalar(1)}};
    Mould n = Mould::table(a, std::move(inner), 2);
    Mould composed = mouldCompose(m, n);
    CHECK_THROWS_AS(composed(a->word({0, 1})), MouldError);
    CHECK(!m.closedUnderGrades());
    CHECK(samMould(a).closedUnderGrades());
}

TEST_CASE("mould table text is deterministic") {
    auto a = multiAlphabet();
    Mould theta = thetaMould(a);
    std::string t1 = mouldTable(theta, 2);
    std::string t2 = mouldTable(thetaMould(a), 2);
    CHECK(t1 == t2);
    CHECK(t1.find("[(1,0)] = 1") != std::string::npos);
}
