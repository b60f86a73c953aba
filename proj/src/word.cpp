#include "mouldcalc/word.hpp"

#include <algorithm>
#include <set>

namespace mouldcalc {

long absSum(const MultiIndex& n) {
    long s = 0;
    for (long c : n) s += c;
    return s;
}

std::string multiIndexStr(const MultiIndex& n) {
    std::string s = "(";
    for (size_t i = 0; i < n.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(n[i]);
    }
    return s + ")";
}

Grade Grade::plus(const Grade& o) const {
    if (kind != o.kind) throw MouldError("grade kinds differ in semigroup sum");
    if (kind == GradeKind::MultiIdx) {
        if (idx.size() != o.idx.size()) throw MouldError("multi-index dimensions differ");
        MultiIndex r(idx.size());
        for (size_t i = 0; i < idx.size(); ++i) r[i] = idx[i] + o.idx[i];
        return Grade::multi(std::move(r));
    }
    return Grade::value(val + o.val);
}

std::string Grade::str() const {
    return kind == GradeKind::MultiIdx ? multiIndexStr(idx) : val.str();
}

Word Word::single(Letter a) {
    Word w;
    w.kind = a.kind;
    w.gdim = a.kind == GradeKind::MultiIdx ? static_cast<int>(a.idx.size()) : 0;
    w.letters.push_back(std::move(a));
    return w;
}

Word Word::of(std::vector<Letter> ls) {
    if (ls.empty()) throw MouldError("Word::of needs at least one letter; use Word::empty");
    Word w = single(ls.front());
    for (size_t i = 1; i < ls.size(); ++i) w = w.appended(ls[i]);
    return w;
}

Word Word::prefix(int len) const {
    Word w{kind, gdim, std::vector<Letter>(letters.begin(), letters.begin() + len)};
    return w;
}

Word Word::suffix(int from) const {
    Word w{kind, gdim, std::vector<Letter>(letters.begin() + from, letters.end())};
    return w;
}

Word Word::appended(const Letter& a) const {
    if (a.kind != kind || (kind == GradeKind::MultiIdx && static_cast<int>(a.idx.size()) != gdim))
        throw MouldError("letter shape does not match word");
    Word w = *this;
    w.letters.push_back(a);
    return w;
}

bool operator<(const Word& a, const Word& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.gdim != b.gdim) return a.gdim < b.gdim;
    if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
    return a.letters < b.letters;  // shortlex
}

std::string Word::str() const {
    if (letters.empty()) return "[]";
    std::string s = "[";
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) s += " ";
        s += letters[i].str();
    }
    return s + "]";
}

std::shared_ptr<const GradedAlphabet> GradedAlphabet::multiIndexed(std::vector<MultiIndex> ns,
                                                                   std::vector<Scalar> lambda) {
    auto a = std::make_shared<GradedAlphabet>();
    a->kind = GradeKind::MultiIdx;
    a->gdim = static_cast<int>(lambda.size());
    for (auto& n : ns) {
        if (n.size() != lambda.size()) throw MouldError("letter dimension does not match spectrum");
        a->letters.push_back(Grade::multi(std::move(n)));
    }
    std::sort(a->letters.begin(), a->letters.end());
    a->letters.erase(std::unique(a->letters.begin(), a->letters.end()), a->letters.end());
    a->spectrum = std::move(lambda);
    return a;
}

std::shared_ptr<const GradedAlphabet> GradedAlphabet::valued(std::vector<Scalar> omegas) {
    auto a = std::make_shared<GradedAlphabet>();
    a->kind = GradeKind::Value;
    a->gdim = 0;
    for (auto& s : omegas) a->letters.push_back(Grade::value(std::move(s)));
    std::sort(a->letters.begin(), a->letters.end());
    a->letters.erase(std::unique(a->letters.begin(), a->letters.end()), a->letters.end());
    return a;
}

Word GradedAlphabet::word(std::initializer_list<int> letterIndexes) const {
    Word w = emptyWord();
    for (int i : letterIndexes) w = w.appended(letters.at(static_cast<size_t>(i)));
    return w;
}

bool GradedAlphabet::contains(const Letter& a) const {
    return std::binary_search(letters.begin(), letters.end(), a);
}

Scalar GradedAlphabet::omegaOf(const Grade& g) const {
    if (g.kind == GradeKind::Value) return g.val;
    if (!spectrum) throw MouldError("omega needs a spectrum on a multi-indexed alphabet");
    if (g.idx.size() != spectrum->size()) throw MouldError("omega: dimension mismatch");
    Scalar s;
    for (size_t i = 0; i < g.idx.size(); ++i) s += (*spectrum)[i] * Scalar(Rational(g.idx[i]));
    return s;
}

Scalar GradedAlphabet::omegaWord(const Word& w) const {
    Scalar s;
    for (const Letter& a : w.letters) s += omegaOf(a);
    return s;
}

Word concat(const Word& a, const Word& b) {
    if (a.kind != b.kind || a.gdim != b.gdim) throw MouldError("concat over mixed alphabets");
    Word r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

Grade gradeSum(const Word& a) {
    if (a.kind == GradeKind::MultiIdx) {
        Grade z = Grade::multi(MultiIndex(static_cast<size_t>(a.gdim), 0));
        for (const Letter& l : a.letters) z = z.plus(l);
        return z;
    }
    Grade z = Grade::value(Scalar());
    for (const Letter& l : a.letters) z = z.plus(l);
    return z;
}

std::vector<Word> shuffle(const Word& a, const Word& b) {
    if (a.kind != b.kind || a.gdim != b.gdim) throw MouldError("shuffle over mixed alphabets");
    std::vector<Word> out;
    // Choose the positions of a's letters among length(a)+length(b) slots.
    int la = a.length(), lb = b.length(), n = la + lb;
    std::vector<int> pick(static_cast<size_t>(la));
    for (int i = 0; i < la; ++i) pick[static_cast<size_t>(i)] = i;
    auto emit = [&]() {
        Word w = Word::empty(a.kind, a.gdim);
        int ia = 0, ib = 0;
        for (int pos = 0; pos < n; ++pos) {
            if (ia < la && pick[static_cast<size_t>(ia)] == pos)
                w.letters.push_back(a.letters[static_cast<size_t>(ia++)]);
            else
                w.letters.push_back(b.letters[static_cast<size_t>(ib++)]);
        }
        out.push_back(std::move(w));
    };
    if (la == 0) {
        out.push_back(b);
        return out;
    }
    while (true) {
        emit();
        // next combination
        int i = la - 1;
        while (i >= 0 && pick[static_cast<size_t>(i)] == n - la + i) --i;
        if (i < 0) break;
        ++pick[static_cast<size_t>(i)];
        for (int j = i + 1; j < la; ++j) pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

std::vector<std::pair<Word, Word>> splits2(const Word& a) {
    std::vector<std::pair<Word, Word>> out;
    out.reserve(static_cast<size_t>(a.length()) + 1);
    for (int cut = 0; cut <= a.length(); ++cut) out.emplace_back(a.prefix(cut), a.suffix(cut));
    return out;
}

std::vector<std::vector<Word>> splitsK(const Word& a, int k) {
    std::vector<std::vector<Word>> out;
    int r = a.length();
    if (k < 1 || k > r) return out;
    // cut positions 0 < c1 < ... < c_{k-1} < r
    std::vector<int> cuts(static_cast<size_t>(k - 1));
    for (int i = 0; i < k - 1; ++i) cuts[static_cast<size_t>(i)] = i + 1;
    while (true) {
        std::vector<Word> blocks;
        blocks.reserve(static_cast<size_t>(k));
        int prev = 0;
        for (int c : cuts) {
            blocks.push_back(Word{a.kind, a.gdim,
                                  std::vector<Letter>(a.letters.begin() + prev, a.letters.begin() + c)});
            prev = c;
        }
        blocks.push_back(Word{a.kind, a.gdim,
                              std::vector<Letter>(a.letters.begin() + prev, a.letters.end())});
        out.push_back(std::move(blocks));
        if (k == 1) break;
        int i = k - 2;
        while (i >= 0 && cuts[static_cast<size_t>(i)] == r - (k - 1) + i) --i;
        if (i < 0) break;
        ++cuts[static_cast<size_t>(i)];
        for (int j = i + 1; j < k - 1; ++j) cuts[static_cast<size_t>(j)] = cuts[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

std::vector<Word> allWords(const GradedAlphabet& alphabet, int maxLen) {
    std::vector<Word> out;
    out.push_back(alphabet.emptyWord());
    size_t levelBegin = 0;
    for (int len = 1; len <= maxLen; ++len) {
        size_t levelEnd = out.size();
        for (size_t i = levelBegin; i < levelEnd; ++i)
            for (const Letter& a : alphabet.letters) out.push_back(out[i].appended(a));
        levelBegin = levelEnd;
    }
    return out;
}

}  // namespace mouldcalc
