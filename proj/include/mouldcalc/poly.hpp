#ifndef MOULDCALC_POLY_HPP
#define MOULDCALC_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "mouldcalc/scalar.hpp"

namespace mouldcalc {

// Exponent tuple with graded-lexicographic order (degree first).
struct Monomial {
    std::vector<int> e;

    int dim() const { return static_cast<int>(e.size()); }
    int degree() const;
    static Monomial unit(int dim);          // all-zero exponents
    static Monomial axis(int dim, int i);   // x_i

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.e < b.e;
    }
};

// Multivariate polynomial over Scalars, truncated at total degree <= cutoff.
// Zero coefficients are never stored, so structural equality is semantic equality.
struct Poly {
    int dim = 0;
    int cutoff = 0;
    std::map<Monomial, Scalar> terms;

    static Poly zero(int dim, int cutoff) { return Poly{dim, cutoff, {}}; }
    static Poly monomial(int dim, int cutoff, Monomial m, Scalar c);
    static Poly constant(int dim, int cutoff, Scalar c);
    static Poly variable(int dim, int cutoff, int axis);

    bool isZero() const { return terms.empty(); }
    int degree() const { return terms.empty() ? -1 : terms.rbegin()->first.degree(); }
    Scalar coeff(const Monomial& m) const;
    void addTerm(const Monomial& m, const Scalar& c);  // truncating, zero-dropping

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend bool operator==(const Poly& a, const Poly& b) {
        return a.dim == b.dim && a.cutoff == b.cutoff && a.terms == b.terms;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(const Scalar& c) const;
    Poly truncated(int newCutoff) const;  // drop degrees above newCutoff

    std::string str(const std::vector<std::string>& varNames = {}) const;
};

Poly polyMul(const Poly& p, const Poly& q);
Poly partial(const Poly& p, int axis);  // 0-based axis

// All monomials with minDeg <= degree <= cutoff, graded-lex order.
std::vector<Monomial> basis(int dim, int cutoff, int minDeg);

std::vector<std::string> defaultVarNames(int dim);
// Variable names for the Hamiltonian carrier on 2*dof variables: x1..x_nu y1..y_nu.
std::vector<std::string> cartesianVarNames(int dof);

Poly parsePoly(const std::string& text, int dim, int cutoff,
               const std::vector<std::string>& varNames = {});

}  // namespace mouldcalc

#endif
