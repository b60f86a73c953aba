#include "mouldcalc/hamiltonian.hpp"

namespace mouldcalc {

Poly CartesianHamiltonian::toPoly() const {
    Poly h = Poly::zero(2 * dof, cutoff + 1);
    for (int i = 0; i < dof; ++i) {
        Monomial m = Monomial::unit(2 * dof);
        m.e[static_cast<size_t>(i)] = 1;
        m.e[static_cast<size_t>(dof + i)] = 1;
        h.addTerm(m, lambda[static_cast<size_t>(i)]);
    }
    for (const auto& [m, c] : higher) h.addTerm(m, c);
    return h;
}

Poly CartesianHamiltonian::higherPoly() const {
    Poly h = Poly::zero(2 * dof, cutoff + 1);
    for (const auto& [m, c] : higher) h.addTerm(m, c);
    return h;
}

CartesianHamiltonian CartesianHamiltonian::fromPoly(int dof, int cutoff, const Poly& h) {
    if (h.dim != 2 * dof) throw MouldError("Hamiltonian polynomial needs 2*dof variables");
    CartesianHamiltonian out;
    out.dof = dof;
    out.cutoff = cutoff;
    out.lambda.assign(static_cast<size_t>(dof), Scalar());
    for (const auto& [m, c] : h.terms) {
        int d = m.degree();
        if (d == 0) continue;  // a constant shifts nothing
        if (d >= 3) {
            out.higher.emplace(m, c);
            continue;
        }
        bool diagonalPair = false;
        if (d == 2) {
            for (int i = 0; i < dof; ++i) {
                if (m.e[static_cast<size_t>(i)] == 1 && m.e[static_cast<size_t>(dof + i)] == 1) {
                    out.lambda[static_cast<size_t>(i)] = c;
                    diagonalPair = true;
                    break;
                }
            }
        }
        if (!diagonalPair)
            throw MouldError("Hamiltonian has a low-degree term outside the diagonal x_i y_i form: " +
                             c.str());
    }
    return out;
}

Scalar omegaOfMonomial(const std::vector<Scalar>& lambda, const Monomial& xy) {
    const int dof = static_cast<int>(lambda.size());
    Scalar w;
    for (int j = 0; j < dof; ++j) {
        long diff = xy.e[static_cast<size_t>(dof + j)] - xy.e[static_cast<size_t>(j)];
        w += lambda[static_cast<size_t>(j)] * Scalar(Rational(diff));
    }
    return w;
}

GradedOperator hamiltonianLinOperator(const CartesianHamiltonian& h) {
    const int dof = h.dof;
    const std::vector<Scalar>& lambda = h.lambda;
    return GradedOperator::diagonal(2 * dof, h.cutoff, [&](const Monomial& m) {
        Scalar s;
        for (int i = 0; i < dof; ++i) {
            long diff = m.e[static_cast<size_t>(dof + i)] - m.e[static_cast<size_t>(i)];
            s += lambda[static_cast<size_t>(i)] * Scalar(Rational(diff));
        }
        return s;
    });
}

GradedOperator fieldOfGenerator(const Poly& g, int dof, int cutoff) {
    const int dim = 2 * dof;
    std::vector<Poly> comps(static_cast<size_t>(dim), Poly::zero(dim, cutoff));
    for (int i = 0; i < dof; ++i) {
        comps[static_cast<size_t>(i)] = partial(g, dof + i).scaled(Scalar(-1)).truncated(cutoff);
        comps[static_cast<size_t>(dof + i)] = partial(g, i).truncated(cutoff);
    }
    return GradedOperator::derivation(dim, cutoff, comps);
}

GradedOperator hamiltonianField(const CartesianHamiltonian& h) {
    return fieldOfGenerator(h.toPoly(), h.dof, h.cutoff);
}

GradedOperator dnmOperator(const CartesianHamiltonian& h, const Monomial& xy) {
    auto it = h.higher.find(xy);
    if (it == h.higher.end()) throw MouldError("letter absent from the Hamiltonian alphabet");
    Poly mono = Poly::monomial(2 * h.dof, h.cutoff + 1, xy, it->second);
    return fieldOfGenerator(mono, h.dof, h.cutoff);
}

GradedOperator dnmiOperator(const CartesianHamiltonian& h, const Monomial& xy, int i) {
    auto it = h.higher.find(xy);
    if (it == h.higher.end()) throw MouldError("letter absent from the Hamiltonian alphabet");
    if (i < 0 || i >= h.dof) throw MouldError("dnmi axis out of range");
    const int dim = 2 * h.dof;
    const Scalar& a = it->second;
    std::vector<Poly> comps(static_cast<size_t>(dim), Poly::zero(dim, h.cutoff));
    long ni = xy.e[static_cast<size_t>(i)];
    long mi = xy.e[static_cast<size_t>(h.dof + i)];
    if (mi != 0) {
        Monomial mx = xy;
        mx.e[static_cast<size_t>(h.dof + i)] -= 1;
        comps[static_cast<size_t>(i)].addTerm(mx, a * Scalar(Rational(-mi)));
    }
    if (ni != 0) {
        Monomial my = xy;
        my.e[static_cast<size_t>(i)] -= 1;
        comps[static_cast<size_t>(h.dof + i)].addTerm(my, a * Scalar(Rational(ni)));
    }
    MultiIndex tag(static_cast<size_t>(dim));
    for (int j = 0; j < dim; ++j) tag[static_cast<size_t>(j)] = xy.e[static_cast<size_t>(j)];
    tag[static_cast<size_t>(i)] -= 1;
    tag[static_cast<size_t>(h.dof + i)] -= 1;
    return GradedOperator::derivation(dim, h.cutoff, comps, tag);
}

std::map<Scalar, Poly> omegaComponents(const CartesianHamiltonian& h) {
    std::map<Scalar, Poly> groups;
    for (const auto& [m, c] : h.higher) {
        Scalar w = omegaOfMonomial(h.lambda, m);
        auto it = groups.find(w);
        if (it == groups.end()) it = groups.emplace(w, Poly::zero(2 * h.dof, h.cutoff + 1)).first;
        it->second.addTerm(m, c);
    }
    return groups;
}

std::map<Scalar, GradedOperator> omegaDecomposition(const CartesianHamiltonian& h) {
    std::map<Scalar, GradedOperator> out;
    for (const auto& [w, hw] : omegaComponents(h)) out.emplace(w, fieldOfGenerator(hw, h.dof, h.cutoff));
    return out;
}

AlphabetPtr omegaAlphabet(const CartesianHamiltonian& h) {
    std::vector<Scalar> omegas;
    for (const auto& [w, hw] : omegaComponents(h)) omegas.push_back(w);
    return GradedAlphabet::valued(std::move(omegas));
}

std::optional<Poly> recoverHamiltonian(const GradedOperator& p, int dof) {
    if (p.dim != 2 * dof) throw MouldError("recoverHamiltonian: carrier is not 2*dof-dimensional");
    if (!isDerivation(p)) throw MouldError("recoverHamiltonian needs a derivation");
    const int dim = p.dim;
    Poly h = Poly::zero(dim, p.cutoff + 1);
    std::vector<Poly> comps = p.components();
    auto addCandidate = [&h](const Monomial& m, const Scalar& c) {
        auto it = h.terms.find(m);
        if (it == h.terms.end()) {
            if (!c.isZero()) h.terms.emplace(m, c);
            return true;
        }
        return it->second == c;
    };
    for (int i = 0; i < dof; ++i) {
        // ydot_i = +dH/dx_i
        for (const auto& [m, c] : comps[static_cast<size_t>(dof + i)].terms) {
            Monomial up = m;
            up.e[static_cast<size_t>(i)] += 1;
            if (!addCandidate(up, c / Scalar(Rational(up.e[static_cast<size_t>(i)]))))
                return std::nullopt;
        }
        // xdot_i = -dH/dy_i
        for (const auto& [m, c] : comps[static_cast<size_t>(i)].terms) {
            Monomial up = m;
            up.e[static_cast<size_t>(dof + i)] += 1;
            if (!addCandidate(up, -c / Scalar(Rational(up.e[static_cast<size_t>(dof + i)]))))
                return std::nullopt;
        }
    }
    if (fieldOfGenerator(h, dof, p.cutoff) != p) return std::nullopt;
    return h;
}

Poly polyPoisson(const Poly& f, const Poly& g, int dof) {
    if (f.dim != 2 * dof || g.dim != f.dim || f.cutoff != g.cutoff)
        throw MouldError("polyPoisson: space mismatch");
    Poly out = Poly::zero(f.dim, f.cutoff);
    for (int i = 0; i < dof; ++i) {
        out += polyMul(partial(f, i), partial(g, dof + i));
        out -= polyMul(partial(f, dof + i), partial(g, i));
    }
    return out;
}

CartesianHamiltonian poissonBracket(const CartesianHamiltonian& a, const CartesianHamiltonian& b) {
    if (a.dof != b.dof || a.cutoff != b.cutoff) throw MouldError("poissonBracket: space mismatch");
    Poly pb = polyPoisson(a.toPoly(), b.toPoly(), a.dof);
    return CartesianHamiltonian::fromPoly(a.dof, a.cutoff, pb);
}

HamTrimResult canonicalTrimmedForm(const CartesianHamiltonian& h) {
    HamTrimResult out;
    const int dim = 2 * h.dof;
    GradedOperator xlin = hamiltonianLinOperator(h);
    GradedOperator x = hamiltonianField(h);
    GradedOperator composite = GradedOperator::identity(dim, h.cutoff);
    CartesianHamiltonian current = h;

    for (int stage = 1; stage <= h.cutoff + 1; ++stage) {
        if (bracketOp(x, xlin).isZero()) break;
        HamiltonianStage st;
        GradedOperator v = GradedOperator::zero(dim, h.cutoff);
        Poly vHam = Poly::zero(dim, h.cutoff + 1);
        for (const auto& [w, hw] : omegaComponents(current)) {
            if (w.isZero()) continue;
            vHam += hw.scaled(w.inverse());
        }
        v = fieldOfGenerator(vHam, h.dof, h.cutoff);
        if (v.isZero()) break;  // nothing non-resonant left to kill
        st.generator = v;
        st.generatorHamiltonian = vHam;
        st.normalizer = expNilpotent(v);
        x = conjugateByExp(v, x);
        composite = composeOp(st.normalizer, composite);
        std::optional<Poly> recovered = recoverHamiltonian(x, h.dof);
        if (!recovered)
            throw MouldError("canonical simplification lost the Hamiltonian character at stage " +
                             std::to_string(stage));
        st.hamiltonian = *recovered;
        current = CartesianHamiltonian::fromPoly(h.dof, h.cutoff, *recovered);
        out.stages.push_back(std::move(st));
    }

    if (!bracketOp(x, xlin).isZero())
        throw MouldError("canonical simplification did not reach a prenormal form");
    out.finalField = x;
    out.finalHamiltonian = current.toPoly();
    out.compositeNormalizer = composite;
    return out;
}

}  // namespace mouldcalc
