#ifndef MOULDCALC_SCALAR_HPP
#define MOULDCALC_SCALAR_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace mouldcalc {

struct MouldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : MouldError {
    using MouldError::MouldError;
};
struct DivisionByZero : MouldError {
    using MouldError::MouldError;
};

using Rational = mpq_class;

// Gaussian rational: the coefficient field for everything in this project.
// All arithmetic is exact; equality is decidable equality of canonical forms.
struct Scalar {
    Rational re, im;

    Scalar() : re(0), im(0) {}
    Scalar(long v) : re(v), im(0) {}
    // mpq_class does not canonicalize (p, q) constructions on its own
    Scalar(Rational r) : re(std::move(r)), im(0) { re.canonicalize(); }
    Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {
        re.canonicalize();
        im.canonicalize();
    }

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }
    static Scalar ratio(long num, long den);

    bool isZero() const { return re == 0 && im == 0; }
    bool isReal() const { return im == 0; }

    Scalar operator-() const { return Scalar(-re, -im); }
    Scalar conj() const { return Scalar(re, -im); }

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    // Total order for canonical containers only; not a field order.
    friend bool operator<(const Scalar& a, const Scalar& b) {
        int c = cmp(a.re, b.re);
        if (c != 0) return c < 0;
        return cmp(a.im, b.im) < 0;
    }

    // Canonical text form: "p/q", "p", "p/q+P/Qi", "P/Qi", "-2i", ...
    std::string str() const;
    static Scalar parse(const std::string& text);
};

std::string rationalStr(const Rational& r);
Rational parseRational(const std::string& text);

}  // namespace mouldcalc

#endif
