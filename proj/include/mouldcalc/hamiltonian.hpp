#ifndef MOULDCALC_HAMILTONIAN_HPP
#define MOULDCALC_HAMILTONIAN_HPP

#include "mouldcalc/normal_forms.hpp"

namespace mouldcalc {

// H(x,y) = sum lambda_i x_i y_i + higher-degree terms, on the carrier space of
// 2*dof variables ordered x1..x_nu, y1..y_nu. Hamilton's equations here are
// xdot = -dH/dy, ydot = +dH/dx (the convention the linear part forces).
struct CartesianHamiltonian {
    int dof = 0;
    int cutoff = 0;  // carrier truncation degree; H itself may reach cutoff + 1
    std::vector<Scalar> lambda;
    std::map<Monomial, Scalar> higher;  // 2*dof-variable monomials of degree >= 3

    Poly toPoly() const;        // quadratic part + higher, dim = 2*dof, cutoff + 1
    Poly higherPoly() const;
    static CartesianHamiltonian fromPoly(int dof, int cutoff, const Poly& h);
};

Scalar omegaOfMonomial(const std::vector<Scalar>& lambda, const Monomial& xy);

GradedOperator hamiltonianLinOperator(const CartesianHamiltonian& h);
GradedOperator hamiltonianField(const CartesianHamiltonian& h);  // X_H including X_lin
// X_g for an arbitrary polynomial generator g on the same carrier.
GradedOperator fieldOfGenerator(const Poly& g, int dof, int cutoff);

// D_nm: the Hamiltonian field of the single monomial a x^n y^m; D_nmi its
// i-th homogeneous piece of degree (n - e_i, m - e_i). i is 0-based.
GradedOperator dnmOperator(const CartesianHamiltonian& h, const Monomial& xy);
GradedOperator dnmiOperator(const CartesianHamiltonian& h, const Monomial& xy, int i);

// Omega-homogeneous splitting of the higher part: omega -> X_{H_omega}.
std::map<Scalar, GradedOperator> omegaDecomposition(const CartesianHamiltonian& h);
std::map<Scalar, Poly> omegaComponents(const CartesianHamiltonian& h);
AlphabetPtr omegaAlphabet(const CartesianHamiltonian& h);

// Exact generator recovery: returns H with P = X_H (constant normalized to 0),
// or nullopt. Throws on non-derivations.
std::optional<Poly> recoverHamiltonian(const GradedOperator& p, int dof);

// {f,g} = sum_i df/dx_i dg/dy_i - df/dy_i dg/dx_i, the orientation with
// X_{{f,g}} = [X_f, X_g] under this project's sign convention.
Poly polyPoisson(const Poly& f, const Poly& g, int dof);
CartesianHamiltonian poissonBracket(const CartesianHamiltonian& a, const CartesianHamiltonian& b);

struct HamiltonianStage {
    Poly hamiltonian;           // recovered generator of the conjugated field
    GradedOperator normalizer;  // exp(V)
    GradedOperator generator;   // V = sum over omega != 0 of X_{H_omega}/omega
    Poly generatorHamiltonian;  // sum over omega != 0 of H_omega/omega
};

struct HamTrimResult {
    std::vector<HamiltonianStage> stages;
    Poly finalHamiltonian;
    GradedOperator finalField;
    GradedOperator compositeNormalizer;
};

// Iterated canonical simplification over the Omega-graduation; every stage is
// certified Hamiltonian by generator recovery.
HamTrimResult canonicalTrimmedForm(const CartesianHamiltonian& h);

}  // namespace mouldcalc

#endif
