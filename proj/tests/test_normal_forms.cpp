#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mouldcalc/normal_forms.hpp"
#include "test_util.hpp"

using namespace mouldcalc;
using namespace mouldcalc::testutil;

namespace {

PreparedField exampleField(const Scalar& l1, const Scalar& l2, int cutoff = 5) {
    return prepare(quadraticPlaneField(l1, l2, Scalar(1), Scalar(2), Scalar(3), Scalar(-1),
                                       Scalar(Rational(1, 2)), Scalar(), cutoff));
}

AlphabetPtr mixedOmegaAlphabet() {
    // zero, opposite pair, and a generic value: words hit every sam case
    return GradedAlphabet::valued({Scalar(0), Scalar(1), Scalar(-1), Scalar(Rational(1, 2))});
}

}  // namespace

TEST_CASE("resonance report") {
    PreparedField res = exampleField(Scalar(1), Scalar(2));
    ResonanceReport rr = resonanceReport(*res.alphabet, 3);
    REQUIRE(rr.resonantLetters.size() == 1);
    CHECK(rr.resonantLetters[0] == Grade::multi({2, -1}));
    CHECK_FALSE(rr.isNonResonant);

    PreparedField non = exampleField(Scalar(1), Scalar(Rational(5, 7)));
    CHECK(resonanceReport(*non.alphabet, 5).isNonResonant);
}

TEST_CASE("linearization mould values") {
    auto a = GradedAlphabet::valued({Scalar(2), Scalar(Rational(1, 3))});
    Mould theta = thetaMould(a);
    CHECK(theta(a->emptyWord()) == Scalar(1));
    CHECK(theta(a->word({0})) == Scalar(Rational(1, 2)));
    // 1/(w1 (w1+w2))
    CHECK(theta(a->word({0, 1})) == (Scalar(2) * Scalar(Rational(7, 3))).inverse());
    CHECK(checkSymmetry(theta, 4).kind == SymmetryKind::Symmetral);

    auto res = GradedAlphabet::valued({Scalar(1), Scalar(-1)});
    CHECK_THROWS_AS(thetaMould(res)(res->word({0, 1})), ResonanceError);
}

TEST_CASE("sam mould closed form") {
    auto a = mixedOmegaAlphabet();  // letters sorted: -1, 0, 1/2, 1
    Mould sam = samMould(a);
    const Word zero = Word::of({Grade::value(Scalar(0))});
    const Word one = Word::of({Grade::value(Scalar(1))});
    CHECK(sam(a->emptyWord()) == Scalar());
    CHECK(sam(zero) == Scalar(1));
    CHECK(sam(one) == Scalar());

    // both nonzero: (w2 - w1) / (2 w1 w2)
    Word w12 = Word::of({Grade::value(Scalar(2)), Grade::value(Scalar(Rational(1, 3)))});
    Scalar w1(2), w2(Rational(1, 3));
    CHECK(sam(w12) == (w2 - w1) / (Scalar(2) * w1 * w2));

    // exactly one zero, r = 3, i = 2: sign (-1)^(r-i) from the convolution
    Word oneZero = Word::of({Grade::value(Scalar(2)), Grade::value(Scalar(0)),
                             Grade::value(Scalar(Rational(-1, 3)))});
    CHECK(sam(oneZero) == -(Scalar(2) * Scalar(Rational(-1, 3))).inverse());

    // two zeros kill the word
    Word twoZeros = Word::of({Grade::value(Scalar(0)), Grade::value(Scalar(1)),
                              Grade::value(Scalar(0))});
    CHECK(sam(twoZeros) == Scalar());

    CHECK(checkSymmetry(sam, 4).kind == SymmetryKind::Alternal);
}

TEST_CASE("sam equals the convolution of exponentials") {
    // C = Exp(V) x I, D = C x Exp(-V), E = nabla Exp(-V), F = Exp(V) x E,
    // and the closed form must reproduce F + D word by word.
    auto a = mixedOmegaAlphabet();
    Mould v = vMould(a);
    Mould expV = mouldExp(v), expNegV = mouldExp(mouldScale(Scalar(-1), v));
    Mould c = mouldMul(expV, Mould::unitI(a));
    Mould d = mouldMul(c, expNegV);
    Mould e = nabla(expNegV);
    Mould f = mouldMul(expV, e);
    Mould viaConvolution = mouldAdd(f, d);
    CHECK(mouldsEqual(samMould(a), viaConvolution, 4));
}

TEST_CASE("linearize the non-resonant example") {
    PreparedField f = exampleField(Scalar(1), Scalar(Rational(5, 7)));
    NormalFormResult nf = linearize(f);
    CHECK(nf.transformed == f.linOperator());
    CHECK(isAutomorphismLike(nf.normalizer));
    // the normalizer mould-inverse route matches the matrix inverse
    GradedOperator viaMould = evalMouldExpansion(mouldInverse(nf.mouldUsed), f);
    CHECK(viaMould == invertUnipotent(nf.normalizer));

    // degreewise conjugation solve: T X = X_lin T, T = Id + raising, unique
    GradedOperator x = f.fullOperator();
    GradedOperator xlin = f.linOperator();
    GradedOperator t = GradedOperator::identity(2, f.cutoff);
    for (int d = 1; d <= f.cutoff; ++d) {
        GradedOperator residual = composeOp(t, x) - composeOp(xlin, t);
        GradedOperator fix = GradedOperator::zero(2, f.cutoff);
        for (const auto& [m, image] : residual.cols) {
            for (const auto& [im, cc] : image.terms) {
                if (im.degree() - m.degree() != d) continue;
                Scalar gap;
                for (int i = 0; i < 2; ++i)
                    gap += f.lambda[static_cast<size_t>(i)] *
                           Scalar(Rational(im.e[static_cast<size_t>(i)] - m.e[static_cast<size_t>(i)]));
                Poly delta = Poly::monomial(2, f.cutoff, im, cc / gap);
                auto it = fix.cols.find(m);
                if (it == fix.cols.end())
                    fix.cols.emplace(m, delta);
                else
                    it->second += delta;
            }
        }
        t += fix;
    }
    CHECK(composeOp(t, x) == composeOp(xlin, t));
    CHECK(t == nf.normalizer);

    // already-linear input: identity normalizer
    PreparedField lin = prepare(quadraticPlaneField(Scalar(1), Scalar(Rational(5, 7)), Scalar(),
                                                    Scalar(), Scalar(), Scalar(), Scalar(),
                                                    Scalar(), 4));
    NormalFormResult nfLin = linearize(lin);
    CHECK(nfLin.normalizer == GradedOperator::identity(2, 4));

    CHECK_THROWS_AS(linearize(exampleField(Scalar(1), Scalar(2))), ResonanceError);
}

TEST_CASE("one simplification step kills the non-resonant quadratic part") {
    PreparedField f = exampleField(Scalar(1), Scalar(2));
    SimplifyStage st = simplifyOnce(f);
    // oracle: direct conjugation was used; cross-check the mould expansion
    Mould sam = samMould(f.alphabet);
    GradedOperator viaMould = f.linOperator() + evalMouldExpansion(sam, f);
    CHECK(st.transformed == viaMould);

    // the quadratic (length-1) part that survives is exactly B_(2,-1)
    PreparedField after = reAlphabetize(st.transformed);
    GradedOperator quad = GradedOperator::zero(2, f.cutoff);
    for (const auto& [n, b] : after.parts)
        if (absSum(n) == 1) quad += b;
    CHECK(quad == f.parts.at({2, -1}));

    // fully resonant field: V = 0, nothing moves
    Poly fx = Poly::zero(2, 4), fy = Poly::zero(2, 4);
    fx.addTerm(Monomial{{1, 0}}, Scalar(1));
    fy.addTerm(Monomial{{0, 1}}, Scalar(-1));
    fx.addTerm(Monomial{{2, 1}}, Scalar(3));  // letter (1,1), omega = 0
    PreparedField resonant = prepare({fx, fy});
    SimplifyStage stay = simplifyOnce(resonant);
    CHECK(stay.generator.isZero());
    CHECK(stay.transformed == resonant.fullOperator());
}

TEST_CASE("reAlphabetize groups by total grade") {
    // one-letter alphabet: the new letters are multiples of n
    Poly fx = Poly::zero(2, 6), fy = Poly::zero(2, 6);
    fx.addTerm(Monomial{{1, 0}}, Scalar(1));
    fy.addTerm(Monomial{{0, 1}}, Scalar(3));
    fx.addTerm(Monomial{{2, 1}}, Scalar(1));  // letter (1,1)
    PreparedField f = prepare({fx, fy});
    SimplifyStage st = simplifyOnce(f);
    PreparedField after = reAlphabetize(st.transformed);
    for (const auto& [n, b] : after.parts) {
        CHECK(n[0] == n[1]);  // multiples of (1,1)
        CHECK(isHomogeneous(b, n));
    }
    // grouping preserves the operator
    GradedOperator sum = after.linOperator();
    for (const auto& [n, b] : after.parts) sum += b;
    CHECK(sum == st.transformed);
}

TEST_CASE("iterated sam stationarity") {
    auto a = mixedOmegaAlphabet();
    Mould sam = samMould(a);
    CHECK(mouldsEqual(samIterated(1, a), sam, 3));
    Mould sam2 = samIterated(2, a);
    Mould sam3 = samIterated(3, a);
    for (const Word& w : allWords(*a, 2)) {
        if (w.length() == 1) CHECK(sam2(w) == sam(w));
        if (!w.isEmpty()) CHECK(sam3(w) == sam2(w));
    }
}

TEST_CASE("tram: stationary values, prenormal support, fixed point") {
    auto a = mixedOmegaAlphabet();
    Mould tram = tramMould(a, 4);
    Mould sam = samMould(a);
    CHECK(tram(a->emptyWord()) == Scalar());
    for (const Word& w : allWords(*a, 4)) {
        if (w.length() == 1) CHECK(tram(w) == sam(w));
        if (!w.isEmpty() && !a->omegaWord(w).isZero()) CHECK(tram(w) == Scalar());
    }
    // Tram o Sam = Sam o Tram = Tram on words to length 3
    Mould ts = mouldCompose(tram, sam), st = mouldCompose(sam, tram);
    for (const Word& w : allWords(*a, 3)) {
        CHECK(ts(w) == tram(w));
        CHECK(st(w) == tram(w));
    }
    CHECK(checkSymmetry(tram, 4).kind == SymmetryKind::Alternal);
}

TEST_CASE("trimmed form of the resonant example") {
    PreparedField f = exampleField(Scalar(1), Scalar(2));
    TrimResult tr = trimmedForm(f);
    CHECK(tr.result.transformed == tr.iterativeField);
    CHECK(bracketOp(tr.result.transformed, f.linOperator()).isZero());
    // support scan: every surviving homogeneous part is resonant
    for (const auto& [n, b] : tr.finalField.parts) {
        Scalar w;
        for (int i = 0; i < 2; ++i)
            w += f.lambda[static_cast<size_t>(i)] * Scalar(Rational(n[static_cast<size_t>(i)]));
        CHECK(w.isZero());
    }
    // conjugation identity for the composite normalizer
    GradedOperator conjugated = composeOp(composeOp(tr.result.normalizer, f.fullOperator()),
                                          invertUnipotent(tr.result.normalizer));
    CHECK(conjugated == tr.result.transformed);
    CHECK(isAutomorphismLike(tr.result.normalizer));

    // non-resonant spectrum: the trimmed form is the linear part
    PreparedField non = exampleField(Scalar(1), Scalar(Rational(5, 7)), 4);
    TrimResult trNon = trimmedForm(non);
    CHECK(trNon.result.transformed == non.linOperator());

    // composite normalizer has a staged mould expression
    Mould thetaTotal = compositeThetaMould(f.alphabet, static_cast<int>(tr.stages.size()));
    CHECK(evalMouldExpansion(thetaTotal, f) == tr.result.normalizer);
}

TEST_CASE("conjugation equation residual at mould level") {
    // non-resonant: Theta x I - nabla Theta = 0
    auto a = GradedAlphabet::valued({Scalar(1), Scalar(Rational(5, 7)), Scalar(Rational(3, 7))});
    Mould theta = thetaMould(a);
    Mould residual = mouldSub(mouldMul(theta, Mould::unitI(a)), nabla(theta));
    CHECK(mouldsEqual(residual, Mould::zero(a), 4));

    // trimmed: Theta_r x I - nabla Theta_r - Tram x Theta_r = 0 to length r
    auto b = mixedOmegaAlphabet();
    const int r = 3;
    Mould thetaR = compositeThetaMould(b, r);
    Mould tram = tramMould(b, r);
    Mould res = mouldSub(mouldSub(mouldMul(thetaR, Mould::unitI(b)), nabla(thetaR)),
                         mouldMul(tram, thetaR));
    CHECK(mouldsEqual(res, Mould::zero(b), r));
}
