#include "mouldcalc/io.hpp"

#include <fstream>
#include <sstream>

namespace mouldcalc {

namespace {

struct LineReader {
    std::istringstream in;
    int lineNo = 0;
    std::string current;

    explicit LineReader(const std::string& text) : in(text) {}

    // next meaningful line split into tokens; '#' starts a comment
    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in, line)) {
            ++lineNo;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            tokens.clear();
            std::string tok;
            while (ls >> tok) tokens.push_back(tok);
            if (!tokens.empty()) {
                current = line;
                return true;
            }
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("line " + std::to_string(lineNo) + ": " + msg);
    }
};

long toLong(const std::string& s, LineReader& r) {
    try {
        size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) r.fail("bad integer '" + s + "'");
        return v;
    } catch (const std::exception&) {
        r.fail("bad integer '" + s + "'");
    }
}

}  // namespace

FieldInput parseFieldText(const std::string& text) {
    LineReader r(text);
    std::vector<std::string> t;
    if (!r.next(t) || t[0] != "field") r.fail("expected 'field' header");
    FieldInput in;
    std::vector<Scalar> lambda;
    bool sawDim = false, sawCutoff = false;
    struct Term {
        Scalar c;
        Monomial m;
        int axis;
    };
    std::vector<Term> terms;
    while (r.next(t)) {
        if (t[0] == "end") break;
        if (t[0] == "dim") {
            if (t.size() != 2) r.fail("dim needs one integer");
            in.dim = static_cast<int>(toLong(t[1], r));
            if (in.dim < 1) r.fail("dim must be positive");
            sawDim = true;
        } else if (t[0] == "cutoff") {
            if (t.size() != 2) r.fail("cutoff needs one integer");
            in.cutoff = static_cast<int>(toLong(t[1], r));
            if (in.cutoff < 2) r.fail("cutoff must be at least 2");
            sawCutoff = true;
        } else if (t[0] == "lambda") {
            if (!sawDim) r.fail("lambda before dim");
            if (static_cast<int>(t.size()) != in.dim + 1) r.fail("lambda needs dim scalars");
            for (int i = 1; i <= in.dim; ++i) lambda.push_back(Scalar::parse(t[static_cast<size_t>(i)]));
        } else if (t[0] == "term") {
            if (!sawDim || !sawCutoff) r.fail("term before dim/cutoff");
            if (static_cast<int>(t.size()) != in.dim + 3) r.fail("term needs coeff, exponents, axis");
            Term term;
            term.c = Scalar::parse(t[1]);
            term.m = Monomial::unit(in.dim);
            for (int i = 0; i < in.dim; ++i) {
                long e = toLong(t[static_cast<size_t>(2 + i)], r);
                if (e < 0) r.fail("negative exponent");
                term.m.e[static_cast<size_t>(i)] = static_cast<int>(e);
            }
            term.axis = static_cast<int>(toLong(t.back(), r));
            if (term.axis < 1 || term.axis > in.dim) r.fail("axis out of range");
            if (term.m.degree() > in.cutoff) r.fail("term degree exceeds the cutoff");
            terms.push_back(std::move(term));
        } else {
            r.fail("unknown directive '" + t[0] + "'");
        }
    }
    if (!sawDim || !sawCutoff) throw ParseError("field file needs dim and cutoff");
    in.components.assign(static_cast<size_t>(in.dim), Poly::zero(in.dim, in.cutoff));
    if (!lambda.empty())
        for (int i = 0; i < in.dim; ++i)
            in.components[static_cast<size_t>(i)].addTerm(Monomial::axis(in.dim, i),
                                                          lambda[static_cast<size_t>(i)]);
    for (const auto& term : terms)
        in.components[static_cast<size_t>(term.axis - 1)].addTerm(term.m, term.c);
    return in;
}

std::string writeFieldText(const std::vector<Poly>& components) {
    const int dim = components.front().dim;
    std::string out = "field\n";
    out += "dim " + std::to_string(dim) + "\n";
    out += "cutoff " + std::to_string(components.front().cutoff) + "\n";
    // diagonal linear part, printed separately when present
    std::vector<Scalar> lambda(static_cast<size_t>(dim));
    bool anyLambda = false;
    for (int i = 0; i < dim; ++i) {
        lambda[static_cast<size_t>(i)] = components[static_cast<size_t>(i)].coeff(Monomial::axis(dim, i));
        anyLambda = anyLambda || !lambda[static_cast<size_t>(i)].isZero();
    }
    if (anyLambda) {
        out += "lambda";
        for (const Scalar& l : lambda) out += " " + l.str();
        out += "\n";
    }
    for (int i = 0; i < dim; ++i) {
        for (const auto& [m, c] : components[static_cast<size_t>(i)].terms) {
            if (m.degree() == 1 && m == Monomial::axis(dim, i)) continue;
            out += "term " + c.str();
            for (int j = 0; j < dim; ++j) out += " " + std::to_string(m.e[static_cast<size_t>(j)]);
            out += " " + std::to_string(i + 1) + "\n";
        }
    }
    out += "end\n";
    return out;
}

CartesianHamiltonian parseHamiltonianText(const std::string& text) {
    LineReader r(text);
    std::vector<std::string> t;
    if (!r.next(t) || t[0] != "hamiltonian") r.fail("expected 'hamiltonian' header");
    CartesianHamiltonian h;
    bool sawDof = false, sawCutoff = false;
    while (r.next(t)) {
        if (t[0] == "end") break;
        if (t[0] == "dof") {
            if (t.size() != 2) r.fail("dof needs one integer");
            h.dof = static_cast<int>(toLong(t[1], r));
            if (h.dof < 1) r.fail("dof must be positive");
            sawDof = true;
        } else if (t[0] == "cutoff") {
            if (t.size() != 2) r.fail("cutoff needs one integer");
            h.cutoff = static_cast<int>(toLong(t[1], r));
            if (h.cutoff < 2) r.fail("cutoff must be at least 2");
            sawCutoff = true;
        } else if (t[0] == "lambda") {
            if (!sawDof) r.fail("lambda before dof");
            if (static_cast<int>(t.size()) != h.dof + 1) r.fail("lambda needs dof scalars");
            h.lambda.clear();
            for (int i = 1; i <= h.dof; ++i) h.lambda.push_back(Scalar::parse(t[static_cast<size_t>(i)]));
        } else if (t[0] == "term") {
            if (!sawDof || !sawCutoff) r.fail("term before dof/cutoff");
            if (static_cast<int>(t.size()) != 2 * h.dof + 3) r.fail("term needs n | m coeff");
            if (t[static_cast<size_t>(h.dof + 1)] != "|") r.fail("term needs '|' between n and m");
            Monomial m = Monomial::unit(2 * h.dof);
            for (int i = 0; i < h.dof; ++i) {
                long n = toLong(t[static_cast<size_t>(1 + i)], r);
                long mm = toLong(t[static_cast<size_t>(h.dof + 2 + i)], r);
                if (n < 0 || mm < 0) r.fail("negative exponent");
                m.e[static_cast<size_t>(i)] = static_cast<int>(n);
                m.e[static_cast<size_t>(h.dof + i)] = static_cast<int>(mm);
            }
            if (m.degree() < 3) r.fail("higher term must have total degree >= 3");
            if (m.degree() > h.cutoff + 1) r.fail("term degree exceeds the cutoff");
            Scalar c = Scalar::parse(t.back());
            if (!c.isZero()) h.higher[m] += c;
        } else {
            r.fail("unknown directive '" + t[0] + "'");
        }
    }
    if (!sawDof || !sawCutoff) throw ParseError("hamiltonian file needs dof and cutoff");
    if (h.lambda.empty()) h.lambda.assign(static_cast<size_t>(h.dof), Scalar());
    for (auto it = h.higher.begin(); it != h.higher.end();)
        it = it->second.isZero() ? h.higher.erase(it) : std::next(it);
    return h;
}

std::string writeHamiltonianText(const CartesianHamiltonian& h) {
    std::string out = "hamiltonian\n";
    out += "dof " + std::to_string(h.dof) + "\n";
    out += "cutoff " + std::to_string(h.cutoff) + "\n";
    out += "lambda";
    for (const Scalar& l : h.lambda) out += " " + l.str();
    out += "\n";
    for (const auto& [m, c] : h.higher) {
        out += "term";
        for (int i = 0; i < h.dof; ++i) out += " " + std::to_string(m.e[static_cast<size_t>(i)]);
        out += " |";
        for (int i = 0; i < h.dof; ++i) out += " " + std::to_string(m.e[static_cast<size_t>(h.dof + i)]);
        out += " " + c.str() + "\n";
    }
    out += "end\n";
    return out;
}

KolmogorovInput parseKolmogorovText(const std::string& text) {
    LineReader r(text);
    std::vector<std::string> t;
    if (!r.next(t) || t[0] != "kolmogorov") r.fail("expected 'kolmogorov' header");
    KolmogorovInput in;
    bool sawDof = false;
    while (r.next(t)) {
        if (t[0] == "end") break;
        if (t[0] == "dof") {
            if (t.size() != 2) r.fail("dof needs one integer");
            in.dof = static_cast<int>(toLong(t[1], r));
            if (in.dof < 1) r.fail("dof must be positive");
            in.f = TrigPoly::zero(in.dof);
            sawDof = true;
        } else if (t[0] == "omega") {
            if (!sawDof) r.fail("omega before dof");
            if (static_cast<int>(t.size()) != in.dof + 1) r.fail("omega needs dof scalars");
            in.omega.clear();
            for (int i = 1; i <= in.dof; ++i) in.omega.push_back(Scalar::parse(t[static_cast<size_t>(i)]));
        } else if (t[0] == "fterm") {
            if (!sawDof) r.fail("fterm before dof");
            if (static_cast<int>(t.size()) != in.dof + 2) r.fail("fterm needs k-vector and coeff");
            std::vector<long> k(static_cast<size_t>(in.dof));
            for (int i = 0; i < in.dof; ++i) k[static_cast<size_t>(i)] = toLong(t[static_cast<size_t>(1 + i)], r);
            in.f += TrigPoly::fourierMode(in.dof, std::move(k), Scalar::parse(t.back()));
        } else if (t[0] == "maxorder") {
            if (t.size() != 2) r.fail("maxorder needs one integer");
            in.maxOrder = static_cast<int>(toLong(t[1], r));
        } else if (t[0] == "targetorder") {
            if (t.size() != 2) r.fail("targetorder needs one integer");
            in.targetOrder = static_cast<int>(toLong(t[1], r));
        } else {
            r.fail("unknown directive '" + t[0] + "'");
        }
    }
    if (!sawDof) throw ParseError("kolmogorov file needs dof");
    if (in.omega.empty()) throw ParseError("kolmogorov file needs omega");
    if (in.maxOrder < 1) throw ParseError("kolmogorov file needs maxorder >= 1");
    if (in.targetOrder < 0 || in.targetOrder > in.maxOrder)
        throw ParseError("targetorder must lie in [0, maxorder]");
    return in;
}

std::string writeKolmogorovText(const KolmogorovInput& in) {
    std::string out = "kolmogorov\n";
    out += "dof " + std::to_string(in.dof) + "\n";
    out += "omega";
    for (const Scalar& w : in.omega) out += " " + w.str();
    out += "\n";
    for (const auto& [k, c] : in.f.terms) {
        out += "fterm";
        for (long ki : k.freq) out += " " + std::to_string(ki);
        out += " " + c.str() + "\n";
    }
    out += "maxorder " + std::to_string(in.maxOrder) + "\n";
    out += "targetorder " + std::to_string(in.targetOrder) + "\n";
    out += "end\n";
    return out;
}

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MouldError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void writeFile(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw MouldError("cannot write '" + path + "'");
    out << content;
}

}  // namespace mouldcalc
