#ifndef MOULDCALC_NORMAL_FORMS_HPP
#define MOULDCALC_NORMAL_FORMS_HPP

#include "mouldcalc/operator.hpp"

namespace mouldcalc {

struct ResonanceError : MouldError {
    Word word;
    ResonanceError(std::string msg, Word w) : MouldError(std::move(msg)), word(std::move(w)) {}
};

struct ResonanceReport {
    std::vector<Letter> resonantLetters;
    std::vector<Word> resonantWords;  // nonempty words with omega(||w||) = 0, shortlex
    bool isNonResonant = true;
    int checkedLength = 0;
};

ResonanceReport resonanceReport(const GradedAlphabet& alphabet, int maxLength);

// Length-1 mould 1/omega(n) on non-resonant letters (the simplification generator).
Mould vMould(AlphabetPtr alphabet);
// 1/(omega_1 (omega_1+omega_2) ... ): the linearization normalizer. Evaluation
// throws ResonanceError when a partial sum vanishes.
Mould thetaMould(AlphabetPtr alphabet);
// One-step simplification mould, closed form in the omega sequence; alternal.
Mould samMould(AlphabetPtr alphabet);
// r-fold self-composition of sam; samIterated(0) is the composition unit.
Mould samIterated(int r, AlphabetPtr alphabet);
// Stationary value tram^w = samIterated(len(w))^w, evaluable to maxLength.
Mould tramMould(AlphabetPtr alphabet, int maxLength);
// Mould of the composite stage normalizer Exp(V o Sam_{r-1}) x ... x Exp(V).
Mould compositeThetaMould(AlphabetPtr alphabet, int stages);

struct NormalFormResult {
    GradedOperator transformed;
    GradedOperator normalizer;
    Mould mouldUsed;
    int stage = 0;
};

// Non-resonant linearization: conjugates the field to its linear part.
NormalFormResult linearize(const PreparedField& f);

struct SimplifyStage {
    GradedOperator transformed;  // exp(V) X exp(-V)
    GradedOperator normalizer;   // exp(V)
    GradedOperator generator;    // V = sum over non-resonant letters of B_n / omega(n)
};

SimplifyStage simplifyOnce(const PreparedField& f);

// Regroups a conjugated derivation by homogeneity degree into a fresh
// prepared field (the new alphabet of grade sums).
PreparedField reAlphabetize(const GradedOperator& transformedField);

struct TrimResult {
    NormalFormResult result;           // transformed = mould-route X_tram
    GradedOperator iterativeField;     // field after the explicit stages
    std::vector<SimplifyStage> stages;
    PreparedField finalField;
};

TrimResult trimmedForm(const PreparedField& f);

}  // namespace mouldcalc

#endif
