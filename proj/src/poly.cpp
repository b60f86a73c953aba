#include "mouldcalc/poly.hpp"

#include <algorithm>
#include <cctype>

namespace mouldcalc {

int Monomial::degree() const {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

Monomial Monomial::unit(int dim) { return Monomial{std::vector<int>(static_cast<size_t>(dim), 0)}; }

Monomial Monomial::axis(int dim, int i) {
    Monomial m = unit(dim);
    m.e[static_cast<size_t>(i)] = 1;
    return m;
}

Poly Poly::monomial(int dim, int cutoff, Monomial m, Scalar c) {
    Poly p = zero(dim, cutoff);
    p.addTerm(m, c);
    return p;
}

Poly Poly::constant(int dim, int cutoff, Scalar c) {
    return monomial(dim, cutoff, Monomial::unit(dim), std::move(c));
}

Poly Poly::variable(int dim, int cutoff, int axis) {
    return monomial(dim, cutoff, Monomial::axis(dim, axis), Scalar(1));
}

Scalar Poly::coeff(const Monomial& m) const {
    auto it = terms.find(m);
    return it == terms.end() ? Scalar() : it->second;
}

void Poly::addTerm(const Monomial& m, const Scalar& c) {
    if (c.isZero() || m.degree() > cutoff) return;
    if (m.dim() != dim) throw MouldError("monomial dimension mismatch");
    auto [it, inserted] = terms.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    if (dim != o.dim || cutoff != o.cutoff) throw MouldError("polynomial space mismatch");
    for (const auto& [m, c] : o.terms) addTerm(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (dim != o.dim || cutoff != o.cutoff) throw MouldError("polynomial space mismatch");
    for (const auto& [m, c] : o.terms) addTerm(m, -c);
    return *this;
}

Poly Poly::scaled(const Scalar& c) const {
    Poly p = zero(dim, cutoff);
    if (c.isZero()) return p;
    for (const auto& [m, v] : terms) p.terms.emplace(m, c * v);
    return p;
}

Poly Poly::truncated(int newCutoff) const {
    Poly p = zero(dim, newCutoff);
    for (const auto& [m, v] : terms)
        if (m.degree() <= newCutoff) p.terms.emplace(m, v);
    return p;
}

Poly polyMul(const Poly& p, const Poly& q) {
    if (p.dim != q.dim || p.cutoff != q.cutoff) throw MouldError("polynomial space mismatch");
    Poly r = Poly::zero(p.dim, p.cutoff);
    for (const auto& [mp, cp] : p.terms) {
        int dp = mp.degree();
        for (const auto& [mq, cq] : q.terms) {
            if (dp + mq.degree() > p.cutoff) continue;
            Monomial m = mp;
            for (int i = 0; i < p.dim; ++i) m.e[static_cast<size_t>(i)] += mq.e[static_cast<size_t>(i)];
            r.addTerm(m, cp * cq);
        }
    }
    return r;
}

Poly partial(const Poly& p, int axis) {
    if (axis < 0 || axis >= p.dim) throw MouldError("partial: axis out of range");
    Poly r = Poly::zero(p.dim, p.cutoff);
    for (const auto& [m, c] : p.terms) {
        int k = m.e[static_cast<size_t>(axis)];
        if (k == 0) continue;
        Monomial d = m;
        d.e[static_cast<size_t>(axis)] = k - 1;
        r.addTerm(d, Scalar(Rational(k)) * c);
    }
    return r;
}

namespace {

void enumerate(std::vector<Monomial>& out, Monomial& current, int axis, int remaining) {
    if (axis == current.dim() - 1) {
        current.e[static_cast<size_t>(axis)] = remaining;
        out.push_back(current);
        return;
    }
    for (int k = remaining; k >= 0; --k) {
        current.e[static_cast<size_t>(axis)] = k;
        enumerate(out, current, axis + 1, remaining - k);
    }
}

}  // namespace

std::vector<Monomial> basis(int dim, int cutoff, int minDeg) {
    std::vector<Monomial> out;
    Monomial current = Monomial::unit(dim);
    for (int d = std::max(minDeg, 0); d <= cutoff; ++d) {
        std::vector<Monomial> level;
        enumerate(level, current, 0, d);
        std::sort(level.begin(), level.end());
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<std::string> defaultVarNames(int dim) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(dim));
    for (int i = 1; i <= dim; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

std::vector<std::string> cartesianVarNames(int dof) {
    std::vector<std::string> names;
    for (int i = 1; i <= dof; ++i) names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= dof; ++i) names.push_back("y" + std::to_string(i));
    return names;
}

std::string Poly::str(const std::vector<std::string>& varNames) const {
    if (terms.empty()) return "0";
    const std::vector<std::string> names = varNames.empty() ? defaultVarNames(dim) : varNames;
    std::string out;
    for (const auto& [m, c] : terms) {
        if (!out.empty()) out += " + ";
        out += c.str();
        for (int i = 0; i < dim; ++i) {
            int k = m.e[static_cast<size_t>(i)];
            if (k == 0) continue;
            out += "*" + names[static_cast<size_t>(i)];
            if (k != 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

namespace {

size_t skipSpace(const std::string& s, size_t pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    return pos;
}

}  // namespace

Poly parsePoly(const std::string& text, int dim, int cutoff,
               const std::vector<std::string>& varNames) {
    const std::vector<std::string> names = varNames.empty() ? defaultVarNames(dim) : varNames;
    Poly p = Poly::zero(dim, cutoff);
    size_t pos = skipSpace(text, 0);
    if (pos >= text.size()) throw ParseError("empty polynomial");
    if (text.compare(pos, 1, "0") == 0 && skipSpace(text, pos + 1) >= text.size()) return p;
    bool negate = false;
    while (pos < text.size()) {
        // coefficient (scalar up to the first '*' or end-of-term)
        size_t end = pos;
        while (end < text.size() && text[end] != '*' && text[end] != ' ') ++end;
        Scalar c = Scalar::parse(text.substr(pos, end - pos));
        if (negate) c = -c;
        Monomial m = Monomial::unit(dim);
        pos = end;
        while (pos < text.size() && text[pos] == '*') {
            ++pos;
            size_t nameEnd = pos;
            while (nameEnd < text.size() && text[nameEnd] != '^' && text[nameEnd] != '*' &&
                   text[nameEnd] != ' ')
                ++nameEnd;
            std::string name = text.substr(pos, nameEnd - pos);
            auto it = std::find(names.begin(), names.end(), name);
            if (it == names.end()) throw ParseError("unknown variable '" + name + "'");
            int axis = static_cast<int>(it - names.begin());
            pos = nameEnd;
            int k = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                size_t digEnd = pos;
                while (digEnd < text.size() && std::isdigit(static_cast<unsigned char>(text[digEnd])))
                    ++digEnd;
                if (digEnd == pos) throw ParseError("missing exponent after '^'");
                k = std::stoi(text.substr(pos, digEnd - pos));
                pos = digEnd;
            }
            m.e[static_cast<size_t>(axis)] += k;
        }
        p.addTerm(m, c);
        pos = skipSpace(text, pos);
        if (pos >= text.size()) break;
        if (text[pos] == '+')
            negate = false;
        else if (text[pos] == '-')
            negate = true;
        else
            throw ParseError("expected '+' or '-' between polynomial terms");
        pos = skipSpace(text, pos + 1);
    }
    return p;
}

}  // namespace mouldcalc
