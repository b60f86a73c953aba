#ifndef MOULDCALC_KOLMOGOROV_HPP
#define MOULDCALC_KOLMOGOROV_HPP

#include <map>
#include <optional>
#include <vector>

#include "mouldcalc/scalar.hpp"

namespace mouldcalc {

// Monomial e^{i k.q} p^j of a trigonometric polynomial in the angles with
// polynomial action coefficients.
struct AAKey {
    std::vector<long> freq;
    std::vector<int> pexp;

    bool isFreqZero() const;
    int pDegree() const;
    friend bool operator==(const AAKey& a, const AAKey& b) {
        return a.freq == b.freq && a.pexp == b.pexp;
    }
    friend bool operator<(const AAKey& a, const AAKey& b) {
        if (a.freq != b.freq) return a.freq < b.freq;
        return a.pexp < b.pexp;
    }
};

struct TrigPoly {
    int dof = 0;
    std::map<AAKey, Scalar> terms;

    static TrigPoly zero(int dof) { return TrigPoly{dof, {}}; }
    static TrigPoly fourierMode(int dof, std::vector<long> k, Scalar c);

    bool isZero() const { return terms.empty(); }
    bool dependsOnAngles() const;
    int pDegree() const;  // -1 when zero
    void addTerm(const AAKey& key, const Scalar& c);

    TrigPoly& operator+=(const TrigPoly& o);
    TrigPoly& operator-=(const TrigPoly& o);
    friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
    friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
    friend bool operator==(const TrigPoly& a, const TrigPoly& b) {
        return a.dof == b.dof && a.terms == b.terms;
    }
    friend bool operator!=(const TrigPoly& a, const TrigPoly& b) { return !(a == b); }

    TrigPoly scaled(const Scalar& c) const;
    TrigPoly dq(int i) const;  // multiplies each mode by i*k_i
    TrigPoly dp(int i) const;
    std::string str() const;
};

TrigPoly trigMul(const TrigPoly& a, const TrigPoly& b);

// Function of (p, q, eps) truncated at eps^maxOrder: a generator candidate.
struct EpsFunction {
    int dof = 0;
    int maxOrder = 0;
    std::vector<TrigPoly> orders;  // size maxOrder + 1

    static EpsFunction zero(int dof, int maxOrder);
    bool isZero() const;
    EpsFunction& operator+=(const EpsFunction& o);
};

// eps-graded derivation sum_s eps^s (Ap.d/dp + Bq.d/dq).
struct EpsDerivation {
    struct Part {
        std::vector<TrigPoly> ap, bq;
        bool isZero() const;
    };
    int dof = 0;
    int maxOrder = 0;
    std::vector<Part> orders;  // size maxOrder + 1

    static EpsDerivation zero(int dof, int maxOrder);
    bool isZero() const;
    int minOrder() const;  // first nonzero eps-order; maxOrder + 1 when zero
    int maxPDegree() const;

    EpsDerivation& operator+=(const EpsDerivation& o);
    EpsDerivation& operator-=(const EpsDerivation& o);
    friend EpsDerivation operator+(EpsDerivation a, const EpsDerivation& b) { return a += b; }
    friend EpsDerivation operator-(EpsDerivation a, const EpsDerivation& b) { return a -= b; }
    friend bool operator==(const EpsDerivation& a, const EpsDerivation& b) {
        return a.dof == b.dof && a.maxOrder == b.maxOrder && a.orders == b.orders;
    }
    friend bool operator!=(const EpsDerivation& a, const EpsDerivation& b) { return !(a == b); }
    friend bool operator==(const Part& a, const Part& b) { return a.ap == b.ap && a.bq == b.bq; }
    friend bool operator!=(const Part& a, const Part& b) { return !(a == b); }

    EpsDerivation scaled(const Scalar& c) const;
};

EpsDerivation bracketAA(const EpsDerivation& d, const EpsDerivation& e);
// exp(ad_v) x; v must have minOrder >= 1 so the series terminates.
EpsDerivation adExp(const EpsDerivation& v, const EpsDerivation& x);

// The constant field omega . d/dq.
EpsDerivation xcField(const std::vector<Scalar>& omega, int maxOrder);

// Field of H = omega.p + p^2/2 + eps f(q), with the quadratic-action term
// p.d/dq tagged at eps-order 1 so the order bookkeeping of the step is
// additive. Rejects resonant frequencies of f.
EpsDerivation fieldFromHamiltonian81(const std::vector<Scalar>& omega, const TrigPoly& f,
                                     int maxOrder);

struct ClassCheck {
    bool member = true;
    int badOrder = -1;
    std::vector<long> badFreq;
};

// X - X_c in D^1_r: all eps^s coefficients with s <= r are angle-free.
ClassCheck classMembership(const EpsDerivation& x, const std::vector<Scalar>& omega, int r);

// The letters B_k of the step: k != 0 collects orders >= r+1 of frequency k,
// k = 0 collects every angle-free term of order >= 1.
std::map<std::vector<long>, EpsDerivation> frequencySplit(const EpsDerivation& x,
                                                          const std::vector<Scalar>& omega, int r);

// Eigenvalue of ad_{X_c} on frequency k: i (k.omega).
Scalar angleEigenvalue(const Scalar& kDotOmega);
Scalar freqDotOmega(const std::vector<long>& k, const std::vector<Scalar>& omega);

// xdot = -dchi/dq, qdot = +dchi/dp, per eps order.
EpsDerivation fieldOfGeneratorAA(const EpsFunction& chi, int maxOrder);
std::optional<EpsFunction> recoverGeneratorAA(const EpsDerivation& d);

struct KolmogorovStage {
    EpsDerivation field;           // exp(ad_V) X
    EpsDerivation generator;       // V
    EpsFunction generatorHamiltonian;
    int discardedMinOrder = 0;     // min eps-order of X' - (X - sum_{k!=0} B_k)
};

KolmogorovStage kolmogorovStep(const EpsDerivation& x, const std::vector<Scalar>& omega, int r);

struct KolmogorovResult {
    EpsDerivation final;
    std::vector<KolmogorovStage> stages;
    EpsFunction finalHamiltonian;
};

KolmogorovResult kolmogorovNormalForm(const EpsDerivation& x, const std::vector<Scalar>& omega,
                                      int targetOrder);

}  // namespace mouldcalc

#endif
