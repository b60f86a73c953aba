#include "mouldcalc/normal_forms.hpp"

#include <algorithm>

namespace mouldcalc {

ResonanceReport resonanceReport(const GradedAlphabet& alphabet, int maxLength) {
    ResonanceReport r;
    r.checkedLength = maxLength;
    for (const Letter& a : alphabet.letters)
        if (alphabet.omegaOf(a).isZero()) r.resonantLetters.push_back(a);
    for (const Word& w : allWords(alphabet, maxLength)) {
        if (w.isEmpty()) continue;
        if (alphabet.omegaWord(w).isZero()) r.resonantWords.push_back(w);
    }
    r.isNonResonant = r.resonantWords.empty();
    return r;
}

Mould vMould(AlphabetPtr alphabet) {
    return Mould::closedForm(alphabet, Scalar(), [](const std::vector<Scalar>& omegas) {
        if (omegas.size() != 1 || omegas[0].isZero()) return Scalar();
        return omegas[0].inverse();
    });
}

Mould thetaMould(AlphabetPtr alphabet) {
    return Mould::closedForm(alphabet, Scalar(1), [](const std::vector<Scalar>& omegas) {
        Scalar partial;
        Scalar denom(1);
        for (const Scalar& w : omegas) {
            partial += w;
            if (partial.isZero())
                throw ResonanceError("zero partial omega-sum while building the linearization mould",
                                     Word::empty(GradeKind::Value, 0));
            denom *= partial;
        }
        return denom.inverse();
    });
}

namespace {

Rational factorial(int n) {
    Rational f(1);
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// The closed form of the one-step simplification mould. The single-zero case
// carries the sign (-1)^(r-i); that is the value the convolution
// Exp(V) x I x Exp(-V) - grad-term produces, and the only sign for which the
// mould is alternal.
Scalar samValue(const std::vector<Scalar>& omegas) {
    const int r = static_cast<int>(omegas.size());
    if (r == 1) return omegas[0].isZero() ? Scalar(1) : Scalar();
    int zeroPos = -1;  // 1-based
    int zeros = 0;
    for (int i = 0; i < r; ++i)
        if (omegas[static_cast<size_t>(i)].isZero()) {
            ++zeros;
            zeroPos = i + 1;
        }
    if (zeros >= 2) return Scalar();
    if (zeros == 1) {
        const int i = zeroPos;
        Scalar denomProd(1);
        for (int l = 1; l <= r; ++l)
            if (l != i) denomProd *= omegas[static_cast<size_t>(l - 1)];
        Scalar sign((r - i) % 2 == 0 ? 1 : -1);
        Scalar denom = Scalar(factorial(i - 1) * factorial(r - i)) * denomProd;
        return sign / denom;
    }
    Scalar sum;
    for (int k = 1; k <= r; ++k) {
        Scalar tail;  // omega_{k+1} + ... + omega_r
        for (int j = k + 1; j <= r; ++j) tail += omegas[static_cast<size_t>(j - 1)];
        Scalar numer = omegas[static_cast<size_t>(k - 1)] * Scalar(Rational(r - k)) - tail;
        Scalar sign((r - k) % 2 == 0 ? 1 : -1);
        sum += sign * numer / Scalar(factorial(k - 1) * factorial(r - k + 1));
    }
    Scalar prod(1);
    for (const Scalar& w : omegas) prod *= w;
    return sum / prod;
}

}  // namespace

Mould samMould(AlphabetPtr alphabet) { return Mould::closedForm(alphabet, Scalar(), samValue); }

Mould samIterated(int r, AlphabetPtr alphabet) {
    if (r < 0) throw MouldError("samIterated needs r >= 0");
    if (r == 0) return Mould::unitI(alphabet);
    Mould sam = samMould(alphabet);
    Mould out = sam;
    for (int i = 1; i < r; ++i) out = mouldCompose(sam, out);
    return out;
}

Mould tramMould(AlphabetPtr alphabet, int maxLength) {
    auto sams = std::make_shared<std::vector<Mould>>();
    sams->push_back(samIterated(0, alphabet));
    for (int r = 1; r <= maxLength; ++r)
        sams->push_back(mouldCompose(samMould(alphabet), sams->back()));
    return Mould::fromFunction(
        alphabet,
        [sams, maxLength](const Word& w) {
            if (w.isEmpty()) return Scalar();
            if (w.length() > maxLength)
                throw MouldError("tram mould evaluated beyond its length bound " +
                                 std::to_string(maxLength));
            return (*sams)[static_cast<size_t>(w.length())](w);
        },
        true);
}

Mould compositeThetaMould(AlphabetPtr alphabet, int stages) {
    if (stages < 1) throw MouldError("compositeThetaMould needs at least one stage");
    Mould v = vMould(alphabet);
    Mould total = mouldExp(v);  // stage 1: V o Sam_0 = V
    for (int i = 2; i <= stages; ++i) {
        Mould stageGen = mouldCompose(v, samIterated(i - 1, alphabet));
        total = mouldMul(mouldExp(stageGen), total);  // later stages multiply on the left
    }
    return total;
}

NormalFormResult linearize(const PreparedField& f) {
    ResonanceReport rr = resonanceReport(*f.alphabet, f.cutoff);
    if (!rr.isNonResonant)
        throw ResonanceError("spectrum resonant at word " + rr.resonantWords.front().str(),
                             rr.resonantWords.front());
    Mould theta = thetaMould(f.alphabet);
    GradedOperator normalizer = evalMouldExpansion(theta, f);
    GradedOperator transformed =
        composeOp(composeOp(normalizer, f.fullOperator()), invertUnipotent(normalizer));
    return NormalFormResult{std::move(transformed), std::move(normalizer), std::move(theta), 1};
}

SimplifyStage simplifyOnce(const PreparedField& f) {
    GradedOperator v = GradedOperator::zero(f.dim, f.cutoff);
    for (const auto& [n, b] : f.parts) {
        Scalar w = f.alphabet->omegaOf(Grade::multi(n));
        if (!w.isZero()) v += b.scaled(w.inverse());
    }
    SimplifyStage stage;
    stage.generator = v;
    if (v.isZero()) {
        stage.normalizer = GradedOperator::identity(f.dim, f.cutoff);
        stage.transformed = f.fullOperator();
        return stage;
    }
    stage.normalizer = expNilpotent(v);
    stage.transformed = conjugateByExp(v, f.fullOperator());
    return stage;
}

PreparedField reAlphabetize(const GradedOperator& transformedField) {
    PreparedField f = prepare(transformedField.components());
    if (f.fullOperator() != transformedField)
        throw MouldError("reAlphabetize: operator is not the derivation of its components");
    return f;
}

TrimResult trimmedForm(const PreparedField& f) {
    TrimResult out;
    PreparedField current = f;
    GradedOperator composite = GradedOperator::identity(f.dim, f.cutoff);
    for (int stage = 1; stage <= f.cutoff; ++stage) {
        SimplifyStage s = simplifyOnce(current);
        bool fixpoint = s.generator.isZero();
        composite = composeOp(s.normalizer, composite);
        current = reAlphabetize(s.transformed);
        out.stages.push_back(std::move(s));
        if (fixpoint) break;
    }
    out.iterativeField = current.fullOperator();
    out.finalField = std::move(current);

    Mould tram = tramMould(f.alphabet, f.cutoff);
    GradedOperator xTram = f.linOperator();
    xTram += evalBracketExpansion(tram, f, std::min(4, f.cutoff));
    out.result = NormalFormResult{std::move(xTram), std::move(composite), std::move(tram),
                                  static_cast<int>(out.stages.size())};
    return out;
}

}  // namespace mouldcalc
