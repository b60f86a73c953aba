#ifndef MOULDCALC_MOULD_HPP
#define MOULDCALC_MOULD_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mouldcalc/word.hpp"

namespace mouldcalc {

struct NotInvertible : MouldError {
    using MouldError::MouldError;
};

// Evaluation node of a mould expression. Nodes memoize per word; recursive
// definitions (inverse, composition) call back into eval on shorter words.
class MouldNode {
public:
    virtual ~MouldNode() = default;
    Scalar eval(const Word& w) const;
    // True when the node evaluates on any word of the right grade shape, not
    // just words over the base alphabet (needed as outer mould of a composition).
    virtual bool closedUnderGrades() const = 0;

protected:
    virtual Scalar compute(const Word& w) const = 0;

private:
    mutable std::map<Word, Scalar> memo_;
    mutable std::mutex mu_;
};

class Mould {
public:
    Mould() = default;
    Mould(AlphabetPtr alphabet, std::shared_ptr<const MouldNode> node)
        : alphabet_(std::move(alphabet)), node_(std::move(node)) {}

    const AlphabetPtr& alphabet() const { return alphabet_; }
    Scalar operator()(const Word& w) const { return node_->eval(w); }
    bool closedUnderGrades() const { return node_->closedUnderGrades(); }

    // 1 on the empty word, 0 elsewhere: the product unit.
    static Mould one(AlphabetPtr alphabet);
    // 1 on length-1 words, 0 elsewhere: the composition unit.
    static Mould unitI(AlphabetPtr alphabet);
    static Mould zero(AlphabetPtr alphabet);
    // Valuation through the omega-sequence of the word only.
    static Mould closedForm(AlphabetPtr alphabet, Scalar emptyValue,
                            std::function<Scalar(const std::vector<Scalar>&)> fn);
    static Mould table(AlphabetPtr alphabet, std::map<Word, Scalar> values, int maxLen);
    static Mould fromFunction(AlphabetPtr alphabet, std::function<Scalar(const Word&)> fn,
                              bool closedUnderGrades);

private:
    AlphabetPtr alphabet_;
    std::shared_ptr<const MouldNode> node_;
};

Mould mouldAdd(const Mould& m, const Mould& n);
Mould mouldSub(const Mould& m, const Mould& n);
Mould mouldScale(const Scalar& c, const Mould& m);
Mould mouldMul(const Mould& m, const Mould& n);
Mould mouldInverse(const Mould& m);
Mould mouldCompose(const Mould& m, const Mould& n);
Mould mouldExp(const Mould& m);   // needs M(empty) = 0
Mould mouldLog(const Mould& m);   // log(1 + M), needs M(empty) = 0
Mould nabla(const Mould& m);      // pointwise multiplication by omega(||word||)

enum class SymmetryKind { Alternal, Symmetral, Neither };

struct ShuffleViolation {
    Word a, b;
    Scalar shuffleSum;
};

struct SymmetryReport {
    SymmetryKind kind = SymmetryKind::Neither;
    int checkedLength = 0;
    std::optional<ShuffleViolation> alternalViolation;
    std::optional<ShuffleViolation> symmetralViolation;
};

// Bounded certification of the shuffle identities up to total pair length L.
SymmetryReport checkSymmetry(const Mould& m, int maxLength);

// Expansion of (1/r)[[...[a1,a2],...],ar] as a signed sum of words.
std::vector<std::pair<Word, Scalar>> psiCoefficients(const Word& a);

// Textual table "word-of-grades = scalar" over all alphabet words to maxLen.
std::string mouldTable(const Mould& m, int maxLen);

bool mouldsEqual(const Mould& m, const Mould& n, int maxLen);

}  // namespace mouldcalc

#endif
