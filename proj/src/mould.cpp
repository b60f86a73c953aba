#include "mouldcalc/mould.hpp"

#include <algorithm>

namespace mouldcalc {

Scalar MouldNode::eval(const Word& w) const {
    {
        std::lock_guard<std::mutex> g(mu_);
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
    }
    Scalar v = compute(w);
    std::lock_guard<std::mutex> g(mu_);
    return memo_.emplace(w, std::move(v)).first->second;
}

namespace {

void requireSameAlphabet(const Mould& m, const Mould& n) {
    const auto& a = m.alphabet();
    const auto& b = n.alphabet();
    if (a == b) return;
    if (a && b && a->kind == b->kind && a->gdim == b->gdim && a->letters == b->letters &&
        a->spectrum == b->spectrum)
        return;
    throw MouldError("mould operation over mismatched alphabets");
}

struct LambdaNode final : MouldNode {
    std::function<Scalar(const Word&)> fn;
    bool closed;
    LambdaNode(std::function<Scalar(const Word&)> f, bool c) : fn(std::move(f)), closed(c) {}
    bool closedUnderGrades() const override { return closed; }
    Scalar compute(const Word& w) const override { return fn(w); }
};

struct ClosedFormNode final : MouldNode {
    AlphabetPtr alphabet;
    Scalar emptyValue;
    std::function<Scalar(const std::vector<Scalar>&)> fn;
    bool closedUnderGrades() const override { return true; }
    Scalar compute(const Word& w) const override {
        if (w.isEmpty()) return emptyValue;
        std::vector<Scalar> omegas;
        omegas.reserve(w.letters.size());
        for (const Letter& a : w.letters) omegas.push_back(alphabet->omegaOf(a));
        return fn(omegas);
    }
};

struct TableNode final : MouldNode {
    AlphabetPtr alphabet;
    std::map<Word, Scalar> values;
    int maxLen = 0;
    bool closedUnderGrades() const override { return false; }
    Scalar compute(const Word& w) const override {
        if (w.length() > maxLen)
            throw MouldError("table mould evaluated beyond its length bound at " + w.str());
        for (const Letter& a : w.letters)
            if (!alphabet->contains(a))
                throw MouldError("table mould has no entry for grade-word " + w.str());
        auto it = values.find(w);
        return it == values.end() ? Scalar() : it->second;
    }
};

struct SumNode final : MouldNode {
    Mould m, n;
    bool closedUnderGrades() const override { return m.closedUnderGrades() && n.closedUnderGrades(); }
    Scalar compute(const Word& w) const override { return m(w) + n(w); }
};

struct ScaleNode final : MouldNode {
    Scalar c;
    Mould m;
    bool closedUnderGrades() const override { return m.closedUnderGrades(); }
    Scalar compute(const Word& w) const override { return c * m(w); }
};

struct ProductNode final : MouldNode {
    Mould m, n;
    bool closedUnderGrades() const override { return m.closedUnderGrades() && n.closedUnderGrades(); }
    Scalar compute(const Word& w) const override {
        Scalar s;
        for (const auto& [left, right] : splits2(w)) s += m(left) * n(right);
        return s;
    }
};

struct InverseNode final : MouldNode {
    Mould m;
    bool closedUnderGrades() const override { return m.closedUnderGrades(); }
    Scalar compute(const Word& w) const override {
        Scalar head = m(Word::empty(w.kind, w.gdim));
        if (head.isZero()) throw NotInvertible("mould with vanishing empty-word value has no inverse");
        if (w.isEmpty()) return head.inverse();
        Scalar s;
        for (int cut = 1; cut <= w.length(); ++cut) s += m(w.prefix(cut)) * eval(w.suffix(cut));
        return -(head.inverse()) * s;
    }
};

struct ComposeNode final : MouldNode {
    Mould m, n;
    bool closedUnderGrades() const override {
        return m.closedUnderGrades() && n.closedUnderGrades();
    }
    Scalar compute(const Word& w) const override {
        if (w.isEmpty()) return m(w);
        Scalar s;
        for (int k = 1; k <= w.length(); ++k) {
            for (const auto& blocks : splitsK(w, k)) {
                Word gradeWord = Word::empty(w.kind, w.gdim);
                Scalar prod(1);
                for (const Word& block : blocks) {
                    prod *= n(block);
                    if (prod.isZero()) break;
                    gradeWord.letters.push_back(gradeSum(block));
                }
                if (prod.isZero()) continue;
                s += m(gradeWord) * prod;
            }
        }
        return s;
    }
};

// exp and log(1+.) share the block-sum shape; only the 1/k! vs (-1)^{k+1}/k weight differs.
struct SeriesNode final : MouldNode {
    Mould m;
    bool isExp = true;
    bool closedUnderGrades() const override { return m.closedUnderGrades(); }
    Scalar compute(const Word& w) const override {
        if (!m(Word::empty(w.kind, w.gdim)).isZero())
            throw MouldError(isExp ? "Exp needs a vanishing empty-word value"
                                   : "Log needs a vanishing empty-word value");
        if (w.isEmpty()) return isExp ? Scalar(1) : Scalar(0);
        Scalar s;
        Rational factorial(1);
        for (int k = 1; k <= w.length(); ++k) {
            factorial *= k;
            Scalar weight = isExp ? Scalar(Rational(1) / factorial)
                                  : Scalar(Rational(k % 2 ? 1 : -1, k));
            Scalar blockSum;
            for (const auto& blocks : splitsK(w, k)) {
                Scalar prod(1);
                for (const Word& block : blocks) {
                    prod *= m(block);
                    if (prod.isZero()) break;
                }
                blockSum += prod;
            }
            s += weight * blockSum;
        }
        return s;
    }
};

struct NablaNode final : MouldNode {
    AlphabetPtr alphabet;
    Mould m;
    bool closedUnderGrades() const override { return m.closedUnderGrades(); }
    Scalar compute(const Word& w) const override { return alphabet->omegaWord(w) * m(w); }
};

}  // namespace

Mould Mould::one(AlphabetPtr alphabet) {
    auto node = std::make_shared<LambdaNode>(
        [](const Word& w) { return w.isEmpty() ? Scalar(1) : Scalar(); }, true);
    return Mould(std::move(alphabet), std::move(node));
}

Mould Mould::unitI(AlphabetPtr alphabet) {
    auto node = std::make_shared<LambdaNode>(
        [](const Word& w) { return w.length() == 1 ? Scalar(1) : Scalar(); }, true);
    return Mould(std::move(alphabet), std::move(node));
}

Mould Mould::zero(AlphabetPtr alphabet) {
    auto node = std::make_shared<LambdaNode>([](const Word&) { return Scalar(); }, true);
    return Mould(std::move(alphabet), std::move(node));
}

Mould Mould::closedForm(AlphabetPtr alphabet, Scalar emptyValue,
                        std::function<Scalar(const std::vector<Scalar>&)> fn) {
    auto node = std::make_shared<ClosedFormNode>();
    node->alphabet = alphabet;
    node->emptyValue = std::move(emptyValue);
    node->fn = std::move(fn);
    return Mould(std::move(alphabet), std::move(node));
}

Mould Mould::table(AlphabetPtr alphabet, std::map<Word, Scalar> values, int maxLen) {
    auto node = std::make_shared<TableNode>();
    node->alphabet = alphabet;
    node->values = std::move(values);
    node->maxLen = maxLen;
    return Mould(std::move(alphabet), std::move(node));
}

Mould Mould::fromFunction(AlphabetPtr alphabet, std::function<Scalar(const Word&)> fn,
                          bool closedUnderGrades) {
    auto node = std::make_shared<LambdaNode>(std::move(fn), closedUnderGrades);
    return Mould(std::move(alphabet), std::move(node));
}

Mould mouldAdd(const Mould& m, const Mould& n) {
    requireSameAlphabet(m, n);
    auto node = std::make_shared<SumNode>();
    node->m = m;
    node->n = n;
    return Mould(m.alphabet(), std::move(node));
}

Mould mouldSub(const Mould& m, const Mould& n) { return mouldAdd(m, mouldScale(Scalar(-1), n)); }

Mould mouldScale(const Scalar& c, const Mould& m) {
    auto node = std::make_shared<ScaleNode>();
    node->c = c;
    node->m = m;
    return Mould(m.alphabet(), std::move(node));
}

Mould mouldMul(const Mould& m, const Mould& n) {
    requireSameAlphabet(m, n);
    auto node = std::make_shared<ProductNode>();
    node->m = m;
    node->n = n;
    return Mould(m.alphabet(), std::move(node));
}

Mould mouldInverse(const Mould& m) {
    auto node = std::make_shared<InverseNode>();
    node->m = m;
    return Mould(m.alphabet(), std::move(node));
}

Mould mouldCompose(const Mould& m, const Mould& n) {
    requireSameAlphabet(m, n);
    auto node = std::make_shared<ComposeNode>();
    node->m = m;
    node->n = n;
    return Mould(m.alphabet(), std::move(node));
}

Mould mouldExp(const Mould& m) {
    auto node = std::make_shared<SeriesNode>();
    node->m = m;
    node->isExp = true;
    return Mould(m.alphabet(), std::move(node));
}

Mould mouldLog(const Mould& m) {
    auto node = std::make_shared<SeriesNode>();
    node->m = m;
    node->isExp = false;
    return Mould(m.alphabet(), std::move(node));
}

Mould nabla(const Mould& m) {
    auto node = std::make_shared<NablaNode>();
    node->alphabet = m.alphabet();
    node->m = m;
    if (!node->alphabet) throw MouldError("nabla needs an alphabet");
    return Mould(m.alphabet(), std::move(node));
}

SymmetryReport checkSymmetry(const Mould& m, int maxLength) {
    SymmetryReport report;
    report.checkedLength = maxLength;
    const auto& alphabet = *m.alphabet();
    std::vector<Word> words = allWords(alphabet, maxLength - 1 > 0 ? maxLength - 1 : 0);

    bool alternalOk = m(alphabet.emptyWord()).isZero();
    if (!alternalOk)
        report.alternalViolation =
            ShuffleViolation{alphabet.emptyWord(), alphabet.emptyWord(), m(alphabet.emptyWord())};
    bool symmetralOk = true;

    for (const Word& a : words) {
        for (const Word& b : words) {
            if (a.length() + b.length() > maxLength) continue;
            Scalar sum;
            for (const Word& c : shuffle(a, b)) sum += m(c);
            if (alternalOk && !a.isEmpty() && !b.isEmpty() && !sum.isZero()) {
                alternalOk = false;
                report.alternalViolation = ShuffleViolation{a, b, sum};
            }
            if (symmetralOk && sum != m(a) * m(b)) {
                symmetralOk = false;
                report.symmetralViolation = ShuffleViolation{a, b, sum};
            }
            if (!alternalOk && !symmetralOk) break;
        }
        if (!alternalOk && !symmetralOk) break;
    }
    report.kind = alternalOk ? SymmetryKind::Alternal
                             : (symmetralOk ? SymmetryKind::Symmetral : SymmetryKind::Neither);
    return report;
}

std::vector<std::pair<Word, Scalar>> psiCoefficients(const Word& a) {
    int r = a.length();
    if (r < 1) throw MouldError("psi is undefined on the empty word");
    std::vector<std::pair<Word, Scalar>> terms;
    terms.emplace_back(a.prefix(1), Scalar(1));
    for (int k = 1; k < r; ++k) {
        const Word letter{a.kind, a.gdim, {a.letters[static_cast<size_t>(k)]}};
        std::vector<std::pair<Word, Scalar>> next;
        next.reserve(terms.size() * 2);
        for (const auto& [w, c] : terms) {
            next.emplace_back(concat(w, letter), c);
            next.emplace_back(concat(letter, w), -c);
        }
        terms = std::move(next);
    }
    Scalar inv(Rational(1, r));
    for (auto& [w, c] : terms) c *= inv;
    return terms;
}

std::string mouldTable(const Mould& m, int maxLen) {
    std::string out;
    for (const Word& w : allWords(*m.alphabet(), maxLen)) {
        out += w.str();
        out += " = ";
        out += m(w).str();
        out += "\n";
    }
    return out;
}

bool mouldsEqual(const Mould& m, const Mould& n, int maxLen) {
    for (const Word& w : allWords(*m.alphabet(), maxLen))
        if (m(w) != n(w)) return false;
    return true;
}

}  // namespace mouldcalc
