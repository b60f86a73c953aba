#ifndef MOULDCALC_OPERATOR_HPP
#define MOULDCALC_OPERATOR_HPP

#include <map>
#include <optional>
#include <vector>

#include "mouldcalc/mould.hpp"
#include "mouldcalc/poly.hpp"

namespace mouldcalc {

// Linear endomorphism of the truncated polynomial space, stored column-sparse
// over the monomial basis. Missing column = zero image.
struct GradedOperator {
    int dim = 0;
    int cutoff = 0;
    std::map<Monomial, Poly> cols;
    std::optional<MultiIndex> gradeTag;  // present iff known homogeneous of that degree

    static GradedOperator zero(int dim, int cutoff);
    static GradedOperator identity(int dim, int cutoff);
    // Diagonal operator x^m -> eigen(m) x^m.
    static GradedOperator diagonal(int dim, int cutoff,
                                   const std::function<Scalar(const Monomial&)>& eigen);
    // First-order operator sum_i components[i] * d/dx_i.
    static GradedOperator derivation(int dim, int cutoff, const std::vector<Poly>& components,
                                     std::optional<MultiIndex> tag = std::nullopt);

    bool isZero() const { return cols.empty(); }
    Poly apply(const Poly& p) const;
    Poly column(const Monomial& m) const;
    std::vector<Poly> components() const;  // images of the coordinate variables
    int maxDegreeRaise() const;            // 0 for the zero operator

    GradedOperator& operator+=(const GradedOperator& o);
    GradedOperator& operator-=(const GradedOperator& o);
    friend GradedOperator operator+(GradedOperator a, const GradedOperator& b) { return a += b; }
    friend GradedOperator operator-(GradedOperator a, const GradedOperator& b) { return a -= b; }
    friend bool operator==(const GradedOperator& a, const GradedOperator& b) {
        return a.dim == b.dim && a.cutoff == b.cutoff && a.cols == b.cols;
    }
    friend bool operator!=(const GradedOperator& a, const GradedOperator& b) { return !(a == b); }

    GradedOperator scaled(const Scalar& c) const;
};

// P after Q: (P compose Q)(p) = P(Q(p)), matching juxtaposition B_{n1}B_{n2}.
GradedOperator composeOp(const GradedOperator& p, const GradedOperator& q);
GradedOperator bracketOp(const GradedOperator& p, const GradedOperator& q);

// exp of a strictly degree-raising operator (finite by nilpotency).
GradedOperator expNilpotent(const GradedOperator& v);
// exp(ad_v) x = sum_j ad_v^j(x)/j!, v strictly degree-raising.
GradedOperator conjugateByExp(const GradedOperator& v, const GradedOperator& x);
// Inverse of Id + strictly-raising via the finite Neumann series.
GradedOperator invertUnipotent(const GradedOperator& p);

bool isDerivation(const GradedOperator& p);
// With tag n: every column x^m lands in the span of x^{m+n}.
bool isHomogeneous(const GradedOperator& p, const MultiIndex& tag);
// The operator is an algebra morphism on basis pairs up to the cutoff slack.
bool isAutomorphismLike(const GradedOperator& p);

// A vector field split as a diagonal linear part plus degree-homogeneous
// first-order parts indexed by letters n (the prepared form).
struct PreparedField {
    int dim = 0;
    int cutoff = 0;
    std::vector<Scalar> lambda;
    std::map<MultiIndex, GradedOperator> parts;
    std::map<MultiIndex, std::vector<Poly>> partComponents;
    AlphabetPtr alphabet;

    GradedOperator linOperator() const;
    GradedOperator nonlinearOperator() const;
    GradedOperator fullOperator() const;
    std::vector<Poly> components() const;
};

PreparedField prepare(const std::vector<Poly>& fieldComponents);

// sum over words of M^w B_w, exact modulo the cutoff degree (empty word included).
GradedOperator evalMouldExpansion(const Mould& m, const PreparedField& f);
// Same sum through the projection lemma: sum (1/r) M^w [[B,...],B]. Requires M
// alternal (certified to certLength); the result is a derivation by construction.
GradedOperator evalBracketExpansion(const Mould& m, const PreparedField& f, int certLength = 4);

}  // namespace mouldcalc

#endif
