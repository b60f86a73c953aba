#include "mouldcalc/scalar.hpp"

#include <cctype>

namespace mouldcalc {

Scalar Scalar::ratio(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return Scalar(r);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re += o.re;
    im += o.im;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    Rational nre = re * o.re - im * o.im;
    Rational nim = re * o.im + im * o.re;
    re = std::move(nre);
    im = std::move(nim);
    return *this;
}

Scalar Scalar::inverse() const {
    if (isZero()) throw DivisionByZero("division by the zero Scalar");
    Rational n = re * re + im * im;
    return Scalar(re / n, -im / n);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::string rationalStr(const Rational& r) { return r.get_str(); }

std::string Scalar::str() const {
    if (im == 0) return rationalStr(re);
    std::string imPart = rationalStr(im) + "i";
    if (re == 0) return imPart;
    if (im > 0) return rationalStr(re) + "+" + imPart;
    return rationalStr(re) + imPart;  // the minus sign comes with im
}

namespace {

// One signed rational starting at pos; advances pos past it.
Rational parseRationalAt(const std::string& s, size_t& pos) {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    size_t digitsBegin = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digitsBegin) throw ParseError("expected digits in rational at '" + s.substr(start) + "'");
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t denBegin = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == denBegin) throw ParseError("expected denominator digits in '" + s + "'");
    }
    Rational r;
    if (r.set_str(s.substr(start, pos - start), 10) != 0)
        throw ParseError("bad rational '" + s.substr(start, pos - start) + "'");
    if (r.get_den() == 0) throw DivisionByZero("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace

Rational parseRational(const std::string& text) {
    size_t pos = 0;
    Rational r = parseRationalAt(text, pos);
    if (pos != text.size()) throw ParseError("trailing characters in rational '" + text + "'");
    return r;
}

Scalar Scalar::parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty scalar");
    size_t pos = 0;
    Rational first = parseRationalAt(text, pos);
    if (pos == text.size()) return Scalar(first);
    if (text[pos] == 'i') {
        ++pos;
        if (pos != text.size()) throw ParseError("trailing characters in scalar '" + text + "'");
        return Scalar(Rational(0), first);
    }
    if (text[pos] != '+' && text[pos] != '-')
        throw ParseError("expected sign or 'i' in scalar '" + text + "'");
    Rational second = parseRationalAt(text, pos);
    if (pos >= text.size() || text[pos] != 'i')
        throw ParseError("expected trailing 'i' in scalar '" + text + "'");
    ++pos;
    if (pos != text.size()) throw ParseError("trailing characters in scalar '" + text + "'");
    return Scalar(first, second);
}

}  // namespace mouldcalc
