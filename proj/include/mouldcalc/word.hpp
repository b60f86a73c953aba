#ifndef MOULDCALC_WORD_HPP
#define MOULDCALC_WORD_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mouldcalc/scalar.hpp"

namespace mouldcalc {

using MultiIndex = std::vector<long>;

long absSum(const MultiIndex& n);   // signed sum of components (the degree raise)
std::string multiIndexStr(const MultiIndex& n);

// A letter carries its grade and nothing else: the alphabets of this engine
// (degrees n in Z^nu, resonance values omega in C) are sets of grade values.
enum class GradeKind { MultiIdx, Value };

struct Grade {
    GradeKind kind;
    MultiIndex idx;  // used when kind == MultiIdx
    Scalar val;      // used when kind == Value

    static Grade multi(MultiIndex n) { return Grade{GradeKind::MultiIdx, std::move(n), Scalar()}; }
    static Grade value(Scalar s) { return Grade{GradeKind::Value, {}, std::move(s)}; }

    friend bool operator==(const Grade& a, const Grade& b) {
        if (a.kind != b.kind) return false;
        return a.kind == GradeKind::MultiIdx ? a.idx == b.idx : a.val == b.val;
    }
    friend bool operator!=(const Grade& a, const Grade& b) { return !(a == b); }
    friend bool operator<(const Grade& a, const Grade& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.kind == GradeKind::MultiIdx ? a.idx < b.idx : a.val < b.val;
    }

    Grade plus(const Grade& o) const;  // the semigroup law
    std::string str() const;
};

using Letter = Grade;

// A word remembers the grade shape so the empty word stays well-typed.
struct Word {
    GradeKind kind = GradeKind::MultiIdx;
    int gdim = 0;  // length of multi-indexes; 0 for Value grades
    std::vector<Letter> letters;

    static Word empty(GradeKind k, int gdim) { return Word{k, gdim, {}}; }
    static Word single(Letter a);
    static Word of(std::vector<Letter> ls);

    int length() const { return static_cast<int>(letters.size()); }
    bool isEmpty() const { return letters.empty(); }
    Word prefix(int len) const;
    Word suffix(int from) const;
    Word appended(const Letter& a) const;

    friend bool operator==(const Word& a, const Word& b) {
        return a.kind == b.kind && a.gdim == b.gdim && a.letters == b.letters;
    }
    friend bool operator<(const Word& a, const Word& b);

    std::string str() const;
};

struct GradedAlphabet {
    GradeKind kind;
    int gdim;                                     // nu for MultiIdx grades
    std::vector<Letter> letters;                  // sorted, unique
    std::optional<std::vector<Scalar>> spectrum;  // lambda, required for omega on MultiIdx

    static std::shared_ptr<const GradedAlphabet> multiIndexed(std::vector<MultiIndex> ns,
                                                              std::vector<Scalar> lambda);
    static std::shared_ptr<const GradedAlphabet> valued(std::vector<Scalar> omegas);

    Word emptyWord() const { return Word::empty(kind, gdim); }
    Word word(std::initializer_list<int> letterIndexes) const;
    bool contains(const Letter& a) const;

    Scalar omegaOf(const Grade& g) const;  // lambda . n, or the value itself
    Scalar omegaWord(const Word& w) const; // omega(||w||); omega(empty) = 0
};

using AlphabetPtr = std::shared_ptr<const GradedAlphabet>;

// Word combinatorics.
Word concat(const Word& a, const Word& b);
Grade gradeSum(const Word& a);  // empty word -> additive zero grade of the word's shape
std::vector<Word> shuffle(const Word& a, const Word& b);  // multiset, deterministic order
std::vector<std::pair<Word, Word>> splits2(const Word& a);
std::vector<std::vector<Word>> splitsK(const Word& a, int k);  // nonempty blocks

// All words over `alphabet` of length <= maxLen, shortlex order (empty word first).
std::vector<Word> allWords(const GradedAlphabet& alphabet, int maxLen);

}  // namespace mouldcalc

#endif
