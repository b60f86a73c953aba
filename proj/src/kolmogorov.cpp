#include "mouldcalc/kolmogorov.hpp"

#include <algorithm>

#include "mouldcalc/normal_forms.hpp"

namespace mouldcalc {

bool AAKey::isFreqZero() const {
    for (long k : freq)
        if (k != 0) return false;
    return true;
}

int AAKey::pDegree() const {
    int d = 0;
    for (int j : pexp) d += j;
    return d;
}

TrigPoly TrigPoly::fourierMode(int dof, std::vector<long> k, Scalar c) {
    TrigPoly f = zero(dof);
    f.addTerm(AAKey{std::move(k), std::vector<int>(static_cast<size_t>(dof), 0)}, c);
    return f;
}

bool TrigPoly::dependsOnAngles() const {
    for (const auto& [k, c] : terms)
        if (!k.isFreqZero()) return true;
    return false;
}

int TrigPoly::pDegree() const {
    int d = -1;
    for (const auto& [k, c] : terms) d = std::max(d, k.pDegree());
    return d;
}

void TrigPoly::addTerm(const AAKey& key, const Scalar& c) {
    if (c.isZero()) return;
    if (static_cast<int>(key.freq.size()) != dof || static_cast<int>(key.pexp.size()) != dof)
        throw MouldError("trig term dimension mismatch");
    auto [it, inserted] = terms.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms.erase(it);
    }
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
    if (dof != o.dof) throw MouldError("trig polynomial dof mismatch");
    for (const auto& [k, c] : o.terms) addTerm(k, c);
    return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) {
    if (dof != o.dof) throw MouldError("trig polynomial dof mismatch");
    for (const auto& [k, c] : o.terms) addTerm(k, -c);
    return *this;
}

TrigPoly TrigPoly::scaled(const Scalar& c) const {
    TrigPoly f = zero(dof);
    if (c.isZero()) return f;
    for (const auto& [k, v] : terms) f.terms.emplace(k, c * v);
    return f;
}

TrigPoly TrigPoly::dq(int i) const {
    TrigPoly f = zero(dof);
    for (const auto& [k, c] : terms) {
        long ki = k.freq[static_cast<size_t>(i)];
        if (ki == 0) continue;
        f.addTerm(k, c * Scalar(Rational(0), Rational(ki)));
    }
    return f;
}

TrigPoly TrigPoly::dp(int i) const {
    TrigPoly f = zero(dof);
    for (const auto& [k, c] : terms) {
        int ji = k.pexp[static_cast<size_t>(i)];
        if (ji == 0) continue;
        AAKey down = k;
        down.pexp[static_cast<size_t>(i)] = ji - 1;
        f.addTerm(down, c * Scalar(Rational(ji)));
    }
    return f;
}

TrigPoly trigMul(const TrigPoly& a, const TrigPoly& b) {
    if (a.dof != b.dof) throw MouldError("trig polynomial dof mismatch");
    TrigPoly f = TrigPoly::zero(a.dof);
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            AAKey k = ka;
            for (int i = 0; i < a.dof; ++i) {
                k.freq[static_cast<size_t>(i)] += kb.freq[static_cast<size_t>(i)];
                k.pexp[static_cast<size_t>(i)] += kb.pexp[static_cast<size_t>(i)];
            }
            f.addTerm(k, ca * cb);
        }
    return f;
}

std::string TrigPoly::str() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms) {
        if (!out.empty()) out += " + ";
        out += c.str();
        for (int i = 0; i < dof; ++i) {
            long ki = k.freq[static_cast<size_t>(i)];
            if (ki != 0) out += "*e(" + std::to_string(ki) + "q" + std::to_string(i + 1) + ")";
        }
        for (int i = 0; i < dof; ++i) {
            int ji = k.pexp[static_cast<size_t>(i)];
            if (ji == 0) continue;
            out += "*p" + std::to_string(i + 1);
            if (ji != 1) out += "^" + std::to_string(ji);
        }
    }
    return out;
}

EpsFunction EpsFunction::zero(int dof, int maxOrder) {
    EpsFunction f;
    f.dof = dof;
    f.maxOrder = maxOrder;
    f.orders.assign(static_cast<size_t>(maxOrder) + 1, TrigPoly::zero(dof));
    return f;
}

bool EpsFunction::isZero() const {
    for (const TrigPoly& f : orders)
        if (!f.isZero()) return false;
    return true;
}

EpsFunction& EpsFunction::operator+=(const EpsFunction& o) {
    if (dof != o.dof || maxOrder != o.maxOrder) throw MouldError("eps function shape mismatch");
    for (size_t s = 0; s < orders.size(); ++s) orders[s] += o.orders[s];
    return *this;
}

bool EpsDerivation::Part::isZero() const {
    for (const TrigPoly& f : ap)
        if (!f.isZero()) return false;
    for (const TrigPoly& f : bq)
        if (!f.isZero()) return false;
    return true;
}

EpsDerivation EpsDerivation::zero(int dof, int maxOrder) {
    EpsDerivation d;
    d.dof = dof;
    d.maxOrder = maxOrder;
    d.orders.assign(static_cast<size_t>(maxOrder) + 1,
                    Part{std::vector<TrigPoly>(static_cast<size_t>(dof), TrigPoly::zero(dof)),
                         std::vector<TrigPoly>(static_cast<size_t>(dof), TrigPoly::zero(dof))});
    return d;
}

bool EpsDerivation::isZero() const {
    for (const Part& p : orders)
        if (!p.isZero()) return false;
    return true;
}

int EpsDerivation::minOrder() const {
    for (size_t s = 0; s < orders.size(); ++s)
        if (!orders[s].isZero()) return static_cast<int>(s);
    return maxOrder + 1;
}

int EpsDerivation::maxPDegree() const {
    int d = -1;
    for (const Part& p : orders) {
        for (const TrigPoly& f : p.ap) d = std::max(d, f.pDegree());
        for (const TrigPoly& f : p.bq) d = std::max(d, f.pDegree());
    }
    return d;
}

EpsDerivation& EpsDerivation::operator+=(const EpsDerivation& o) {
    if (dof != o.dof || maxOrder != o.maxOrder) throw MouldError("eps derivation shape mismatch");
    for (size_t s = 0; s < orders.size(); ++s) {
        for (int i = 0; i < dof; ++i) {
            orders[s].ap[static_cast<size_t>(i)] += o.orders[s].ap[static_cast<size_t>(i)];
            orders[s].bq[static_cast<size_t>(i)] += o.orders[s].bq[static_cast<size_t>(i)];
        }
    }
    return *this;
}

EpsDerivation& EpsDerivation::operator-=(const EpsDerivation& o) { return *this += o.scaled(Scalar(-1)); }

EpsDerivation EpsDerivation::scaled(const Scalar& c) const {
    EpsDerivation d = zero(dof, maxOrder);
    for (size_t s = 0; s < orders.size(); ++s) {
        for (int i = 0; i < dof; ++i) {
            d.orders[s].ap[static_cast<size_t>(i)] = orders[s].ap[static_cast<size_t>(i)].scaled(c);
            d.orders[s].bq[static_cast<size_t>(i)] = orders[s].bq[static_cast<size_t>(i)].scaled(c);
        }
    }
    return d;
}

namespace {

// D applied to a single coefficient function.
TrigPoly applyPart(const EpsDerivation::Part& d, const TrigPoly& f, int dof) {
    TrigPoly out = TrigPoly::zero(dof);
    for (int j = 0; j < dof; ++j) {
        if (!d.ap[static_cast<size_t>(j)].isZero()) out += trigMul(d.ap[static_cast<size_t>(j)], f.dp(j));
        if (!d.bq[static_cast<size_t>(j)].isZero()) out += trigMul(d.bq[static_cast<size_t>(j)], f.dq(j));
    }
    return out;
}

}  // namespace

EpsDerivation bracketAA(const EpsDerivation& d, const EpsDerivation& e) {
    if (d.dof != e.dof || d.maxOrder != e.maxOrder) throw MouldError("eps derivation shape mismatch");
    const int dof = d.dof;
    EpsDerivation out = EpsDerivation::zero(dof, d.maxOrder);
    for (int s1 = 0; s1 <= d.maxOrder; ++s1) {
        if (d.orders[static_cast<size_t>(s1)].isZero()) continue;
        for (int s2 = 0; s2 + s1 <= d.maxOrder; ++s2) {
            if (e.orders[static_cast<size_t>(s2)].isZero()) continue;
            const auto& dp = d.orders[static_cast<size_t>(s1)];
            const auto& ep = e.orders[static_cast<size_t>(s2)];
            auto& op = out.orders[static_cast<size_t>(s1 + s2)];
            for (int i = 0; i < dof; ++i) {
                op.ap[static_cast<size_t>(i)] += applyPart(dp, ep.ap[static_cast<size_t>(i)], dof);
                op.ap[static_cast<size_t>(i)] -= applyPart(ep, dp.ap[static_cast<size_t>(i)], dof);
                op.bq[static_cast<size_t>(i)] += applyPart(dp, ep.bq[static_cast<size_t>(i)], dof);
                op.bq[static_cast<size_t>(i)] -= applyPart(ep, dp.bq[static_cast<size_t>(i)], dof);
            }
        }
    }
    return out;
}

EpsDerivation adExp(const EpsDerivation& v, const EpsDerivation& x) {
    if (v.minOrder() < 1) throw MouldError("adExp needs a generator of eps-order >= 1");
    EpsDerivation sum = x;
    EpsDerivation term = x;
    Rational fact(1);
    for (int j = 1; j <= x.maxOrder; ++j) {
        term = bracketAA(v, term);
        if (term.isZero()) break;
        fact *= j;
        sum += term.scaled(Scalar(Rational(1) / fact));
    }
    return sum;
}

EpsDerivation xcField(const std::vector<Scalar>& omega, int maxOrder) {
    const int dof = static_cast<int>(omega.size());
    EpsDerivation x = EpsDerivation::zero(dof, maxOrder);
    for (int i = 0; i < dof; ++i)
        x.orders[0].bq[static_cast<size_t>(i)].addTerm(
            AAKey{std::vector<long>(static_cast<size_t>(dof), 0),
                  std::vector<int>(static_cast<size_t>(dof), 0)},
            omega[static_cast<size_t>(i)]);
    return x;
}

Scalar freqDotOmega(const std::vector<long>& k, const std::vector<Scalar>& omega) {
    Scalar s;
    for (size_t i = 0; i < k.size(); ++i) s += omega[i] * Scalar(Rational(k[i]));
    return s;
}

Scalar angleEigenvalue(const Scalar& kDotOmega) { return Scalar::i() * kDotOmega; }

EpsDerivation fieldFromHamiltonian81(const std::vector<Scalar>& omega, const TrigPoly& f,
                                     int maxOrder) {
    const int dof = static_cast<int>(omega.size());
    if (f.dof != dof) throw MouldError("perturbation dof mismatch");
    if (f.pDegree() > 0) throw MouldError("the perturbation f depends on the angles only");
    for (const auto& [k, c] : f.terms) {
        if (k.isFreqZero()) continue;
        if (freqDotOmega(k.freq, omega).isZero())
            throw ResonanceError("resonant frequency in the perturbation: k = " +
                                     [&k] {
                                         std::string s = "(";
                                         for (size_t i = 0; i < k.freq.size(); ++i)
                                             s += (i ? "," : "") + std::to_string(k.freq[i]);
                                         return s + ")";
                                     }(),
                                 Word::empty(GradeKind::Value, 0));
    }
    EpsDerivation x = xcField(omega, maxOrder);
    if (maxOrder < 1) return x;
    for (int i = 0; i < dof; ++i) {
        // q-dot = omega + p: the p.d/dq term of the quadratic action rides at
        // eps-order 1 so that brackets against order >= r+1 material land at
        // order >= r+2.
        AAKey pkey{std::vector<long>(static_cast<size_t>(dof), 0),
                   std::vector<int>(static_cast<size_t>(dof), 0)};
        pkey.pexp[static_cast<size_t>(i)] = 1;
        x.orders[1].bq[static_cast<size_t>(i)].addTerm(pkey, Scalar(1));
        // p-dot = -eps df/dq
        x.orders[1].ap[static_cast<size_t>(i)] -= f.dq(i);
    }
    return x;
}

ClassCheck classMembership(const EpsDerivation& x, const std::vector<Scalar>& omega, int r) {
    EpsDerivation rest = x - xcField(omega, x.maxOrder);
    for (int s = 0; s <= std::min(r, x.maxOrder); ++s) {
        const auto& part = rest.orders[static_cast<size_t>(s)];
        for (int i = 0; i < x.dof; ++i) {
            for (const auto* f : {&part.ap[static_cast<size_t>(i)], &part.bq[static_cast<size_t>(i)]}) {
                for (const auto& [k, c] : f->terms)
                    if (!k.isFreqZero()) return ClassCheck{false, s, k.freq};
            }
        }
    }
    return ClassCheck{};
}

std::map<std::vector<long>, EpsDerivation> frequencySplit(const EpsDerivation& x,
                                                          const std::vector<Scalar>& omega, int r) {
    ClassCheck check = classMembership(x, omega, r);
    if (!check.member)
        throw MouldError("frequencySplit: field is outside D^1_" + std::to_string(r) +
                         " at eps-order " + std::to_string(check.badOrder));
    EpsDerivation rest = x - xcField(omega, x.maxOrder);
    std::map<std::vector<long>, EpsDerivation> out;
    auto slot = [&](const std::vector<long>& k) -> EpsDerivation& {
        auto it = out.find(k);
        if (it == out.end()) it = out.emplace(k, EpsDerivation::zero(x.dof, x.maxOrder)).first;
        return it->second;
    };
    for (int s = 1; s <= x.maxOrder; ++s) {
        const auto& part = rest.orders[static_cast<size_t>(s)];
        for (int i = 0; i < x.dof; ++i) {
            for (bool isAp : {true, false}) {
                const TrigPoly& f = isAp ? part.ap[static_cast<size_t>(i)] : part.bq[static_cast<size_t>(i)];
                for (const auto& [key, c] : f.terms) {
                    if (key.isFreqZero()) {
                        auto& d = slot(key.freq);
                        (isAp ? d.orders[static_cast<size_t>(s)].ap[static_cast<size_t>(i)]
                              : d.orders[static_cast<size_t>(s)].bq[static_cast<size_t>(i)])
                            .addTerm(key, c);
                    } else if (s >= r + 1) {
                        auto& d = slot(key.freq);
                        (isAp ? d.orders[static_cast<size_t>(s)].ap[static_cast<size_t>(i)]
                              : d.orders[static_cast<size_t>(s)].bq[static_cast<size_t>(i)])
                            .addTerm(key, c);
                    }
                    // angle-dependent terms of order <= r cannot exist here
                }
            }
        }
    }
    return out;
}

EpsDerivation fieldOfGeneratorAA(const EpsFunction& chi, int maxOrder) {
    EpsDerivation d = EpsDerivation::zero(chi.dof, maxOrder);
    for (int s = 0; s <= std::min(chi.maxOrder, maxOrder); ++s) {
        for (int i = 0; i < chi.dof; ++i) {
            d.orders[static_cast<size_t>(s)].ap[static_cast<size_t>(i)] -=
                chi.orders[static_cast<size_t>(s)].dq(i);
            d.orders[static_cast<size_t>(s)].bq[static_cast<size_t>(i)] +=
                chi.orders[static_cast<size_t>(s)].dp(i);
        }
    }
    return d;
}

std::optional<EpsFunction> recoverGeneratorAA(const EpsDerivation& d) {
    EpsFunction chi = EpsFunction::zero(d.dof, d.maxOrder);
    for (int s = 0; s <= d.maxOrder; ++s) {
        TrigPoly& target = chi.orders[static_cast<size_t>(s)];
        const auto& part = d.orders[static_cast<size_t>(s)];
        auto addCandidate = [&target](const AAKey& key, const Scalar& c) {
            auto it = target.terms.find(key);
            if (it == target.terms.end()) {
                if (!c.isZero()) target.terms.emplace(key, c);
                return true;
            }
            return it->second == c;
        };
        for (int i = 0; i < d.dof; ++i) {
            // qdot_i = +dchi/dp_i
            for (const auto& [key, c] : part.bq[static_cast<size_t>(i)].terms) {
                AAKey up = key;
                up.pexp[static_cast<size_t>(i)] += 1;
                if (!addCandidate(up, c / Scalar(Rational(up.pexp[static_cast<size_t>(i)]))))
                    return std::nullopt;
            }
            // pdot_i = -dchi/dq_i, usable on modes with k_i != 0
            for (const auto& [key, c] : part.ap[static_cast<size_t>(i)].terms) {
                long ki = key.freq[static_cast<size_t>(i)];
                if (ki == 0) continue;
                if (!addCandidate(key, c / (-angleEigenvalue(Scalar(Rational(ki))))))
                    return std::nullopt;
            }
        }
    }
    if (fieldOfGeneratorAA(chi, d.maxOrder) != d) return std::nullopt;
    return chi;
}

KolmogorovStage kolmogorovStep(const EpsDerivation& x, const std::vector<Scalar>& omega, int r) {
    auto split = frequencySplit(x, omega, r);
    EpsDerivation v = EpsDerivation::zero(x.dof, x.maxOrder);
    EpsDerivation killed = EpsDerivation::zero(x.dof, x.maxOrder);
    for (const auto& [k, bk] : split) {
        bool zero = true;
        for (long ki : k) zero = zero && ki == 0;
        if (zero) continue;
        Scalar kw = freqDotOmega(k, omega);
        if (kw.isZero())
            throw MouldError("kolmogorovStep: resonant frequency with a surviving term");
        v += bk.scaled(angleEigenvalue(kw).inverse());
        killed += bk;
    }
    KolmogorovStage stage;
    stage.generator = v;
    stage.field = v.isZero() ? x : adExp(v, x);
    EpsDerivation discarded = stage.field - (x - killed);
    stage.discardedMinOrder = discarded.minOrder();
    if (auto chi = recoverGeneratorAA(v))
        stage.generatorHamiltonian = *chi;
    else
        throw MouldError("kolmogorovStep: generator is not Hamiltonian");
    ClassCheck post = classMembership(stage.field, omega, r + 1);
    if (!post.member)
        throw MouldError("kolmogorovStep did not reach D^1_" + std::to_string(r + 1));
    return stage;
}

KolmogorovResult kolmogorovNormalForm(const EpsDerivation& x, const std::vector<Scalar>& omega,
                                      int targetOrder) {
    if (targetOrder > x.maxOrder)
        throw MouldError("targetOrder exceeds the eps truncation order");
    ClassCheck base = classMembership(x, omega, 0);
    if (!base.member) throw MouldError("kolmogorovNormalForm needs X - X_c in D^1_0");
    KolmogorovResult out;
    out.final = x;
    for (int r = 0; r < targetOrder; ++r) {
        KolmogorovStage stage = kolmogorovStep(out.final, omega, r);
        out.final = stage.field;
        out.stages.push_back(std::move(stage));
    }
    if (auto h = recoverGeneratorAA(out.final))
        out.finalHamiltonian = *h;
    else
        throw MouldError("kolmogorovNormalForm: final field is not Hamiltonian");
    return out;
}

}  // namespace mouldcalc
