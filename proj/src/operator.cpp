#include "mouldcalc/operator.hpp"

#include <algorithm>

#include "mouldcalc/kernels.hpp"

namespace mouldcalc {

GradedOperator GradedOperator::zero(int dim, int cutoff) { return GradedOperator{dim, cutoff, {}, {}}; }

GradedOperator GradedOperator::identity(int dim, int cutoff) {
    GradedOperator p = zero(dim, cutoff);
    for (const Monomial& m : basis(dim, cutoff, 0)) p.cols.emplace(m, Poly::monomial(dim, cutoff, m, Scalar(1)));
    p.gradeTag = MultiIndex(static_cast<size_t>(dim), 0);
    return p;
}

GradedOperator GradedOperator::diagonal(int dim, int cutoff,
                                        const std::function<Scalar(const Monomial&)>& eigen) {
    GradedOperator p = zero(dim, cutoff);
    for (const Monomial& m : basis(dim, cutoff, 0)) {
        Scalar c = eigen(m);
        if (!c.isZero()) p.cols.emplace(m, Poly::monomial(dim, cutoff, m, c));
    }
    p.gradeTag = MultiIndex(static_cast<size_t>(dim), 0);
    return p;
}

GradedOperator GradedOperator::derivation(int dim, int cutoff, const std::vector<Poly>& components,
                                          std::optional<MultiIndex> tag) {
    if (static_cast<int>(components.size()) != dim)
        throw MouldError("derivation needs one component per variable");
    GradedOperator p = zero(dim, cutoff);
    for (const Monomial& m : basis(dim, cutoff, 0)) {
        Poly image = Poly::zero(dim, cutoff);
        for (int i = 0; i < dim; ++i) {
            int k = m.e[static_cast<size_t>(i)];
            if (k == 0 || components[static_cast<size_t>(i)].isZero()) continue;
            Monomial lower = m;
            lower.e[static_cast<size_t>(i)] = k - 1;
            image += polyMul(Poly::monomial(dim, cutoff, lower, Scalar(Rational(k))),
                             components[static_cast<size_t>(i)]);
        }
        if (!image.isZero()) p.cols.emplace(m, std::move(image));
    }
    p.gradeTag = std::move(tag);
    return p;
}

Poly GradedOperator::apply(const Poly& p) const {
    if (p.dim != dim || p.cutoff != cutoff) throw MouldError("operator applied outside its space");
    Poly out = Poly::zero(dim, cutoff);
    for (const auto& [m, c] : p.terms) {
        auto it = cols.find(m);
        if (it == cols.end()) continue;
        for (const auto& [im, ic] : it->second.terms) out.addTerm(im, c * ic);
    }
    return out;
}

Poly GradedOperator::column(const Monomial& m) const {
    auto it = cols.find(m);
    return it == cols.end() ? Poly::zero(dim, cutoff) : it->second;
}

std::vector<Poly> GradedOperator::components() const {
    std::vector<Poly> out;
    out.reserve(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) out.push_back(column(Monomial::axis(dim, i)));
    return out;
}

int GradedOperator::maxDegreeRaise() const {
    int raise = 0;
    for (const auto& [m, image] : cols)
        for (const auto& [im, c] : image.terms) raise = std::max(raise, im.degree() - m.degree());
    return raise;
}

GradedOperator& GradedOperator::operator+=(const GradedOperator& o) {
    if (dim != o.dim || cutoff != o.cutoff) throw MouldError("operator space mismatch");
    for (const auto& [m, image] : o.cols) {
        auto it = cols.find(m);
        if (it == cols.end()) {
            cols.emplace(m, image);
        } else {
            it->second += image;
            if (it->second.isZero()) cols.erase(it);
        }
    }
    if (!(gradeTag && o.gradeTag && *gradeTag == *o.gradeTag)) gradeTag.reset();
    return *this;
}

GradedOperator& GradedOperator::operator-=(const GradedOperator& o) { return *this += o.scaled(Scalar(-1)); }

GradedOperator GradedOperator::scaled(const Scalar& c) const {
    GradedOperator p = zero(dim, cutoff);
    p.gradeTag = gradeTag;
    if (c.isZero()) return p;
    for (const auto& [m, image] : cols) p.cols.emplace(m, image.scaled(c));
    return p;
}

GradedOperator composeOp(const GradedOperator& p, const GradedOperator& q) {
    if (p.dim != q.dim || p.cutoff != q.cutoff) throw MouldError("operator space mismatch");
    GradedOperator r = GradedOperator::zero(p.dim, p.cutoff);
    std::vector<const std::pair<const Monomial, Poly>*> qcols;
    qcols.reserve(q.cols.size());
    for (const auto& kv : q.cols) qcols.push_back(&kv);
    std::vector<Poly> images(qcols.size());
    kernels::parallelFor(qcols.size(), [&](std::size_t i) { images[i] = p.apply(qcols[i]->second); });
    for (std::size_t i = 0; i < qcols.size(); ++i)
        if (!images[i].isZero()) r.cols.emplace(qcols[i]->first, std::move(images[i]));
    if (p.gradeTag && q.gradeTag) {
        MultiIndex t = *p.gradeTag;
        for (size_t i = 0; i < t.size(); ++i) t[i] += (*q.gradeTag)[i];
        r.gradeTag = std::move(t);
    }
    return r;
}

GradedOperator bracketOp(const GradedOperator& p, const GradedOperator& q) {
    GradedOperator r = composeOp(p, q);
    r -= composeOp(q, p);
    if (p.gradeTag && q.gradeTag) {
        MultiIndex t = *p.gradeTag;
        for (size_t i = 0; i < t.size(); ++i) t[i] += (*q.gradeTag)[i];
        r.gradeTag = std::move(t);
    }
    return r;
}

namespace {

void requireStrictRaise(const GradedOperator& v, const char* what) {
    for (const auto& [m, image] : v.cols)
        for (const auto& [im, c] : image.terms)
            if (im.degree() <= m.degree())
                throw MouldError(std::string(what) + " needs a strictly degree-raising operator");
}

}  // namespace

GradedOperator expNilpotent(const GradedOperator& v) {
    requireStrictRaise(v, "expNilpotent");
    GradedOperator sum = GradedOperator::identity(v.dim, v.cutoff);
    GradedOperator term = GradedOperator::identity(v.dim, v.cutoff);
    for (int j = 1; j <= v.cutoff + 1 && !term.isZero(); ++j) {
        term = composeOp(term, v).scaled(Scalar(Rational(1, j)));
        sum += term;
    }
    return sum;
}

GradedOperator conjugateByExp(const GradedOperator& v, const GradedOperator& x) {
    requireStrictRaise(v, "conjugateByExp");
    GradedOperator sum = x;
    GradedOperator term = x;
    for (int j = 1; j <= v.cutoff + 1 && !term.isZero(); ++j) {
        term = bracketOp(v, term).scaled(Scalar(Rational(1, j)));
        sum += term;
    }
    return sum;
}

GradedOperator invertUnipotent(const GradedOperator& p) {
    GradedOperator k = p - GradedOperator::identity(p.dim, p.cutoff);
    requireStrictRaise(k, "invertUnipotent");
    GradedOperator sum = GradedOperator::identity(p.dim, p.cutoff);
    GradedOperator term = GradedOperator::identity(p.dim, p.cutoff);
    for (int j = 1; j <= p.cutoff + 1 && !term.isZero(); ++j) {
        term = composeOp(term, k).scaled(Scalar(-1));
        sum += term;
    }
    return sum;
}

bool isDerivation(const GradedOperator& p) {
    const int slack = std::max(0, p.maxDegreeRaise());
    const std::vector<Monomial> mons = basis(p.dim, p.cutoff, 0);
    std::vector<std::pair<const Monomial*, const Monomial*>> pairs;
    for (const Monomial& a : mons)
        for (const Monomial& b : mons)
            if (a.degree() + b.degree() + slack <= p.cutoff) pairs.emplace_back(&a, &b);
    std::size_t bad = kernels::scanFirstFailure(pairs.size(), [&](std::size_t i) {
        const Monomial& a = *pairs[i].first;
        const Monomial& b = *pairs[i].second;
        Poly pa = Poly::monomial(p.dim, p.cutoff, a, Scalar(1));
        Poly pb = Poly::monomial(p.dim, p.cutoff, b, Scalar(1));
        Poly lhs = p.apply(polyMul(pa, pb));
        Poly rhs = polyMul(p.apply(pa), pb) + polyMul(pa, p.apply(pb));
        return lhs == rhs;
    });
    return bad == pairs.size();
}

bool isHomogeneous(const GradedOperator& p, const MultiIndex& tag) {
    if (static_cast<size_t>(p.dim) != tag.size()) return false;
    for (const auto& [m, image] : p.cols) {
        Monomial expect = m;
        bool valid = true;
        for (int i = 0; i < p.dim; ++i) {
            expect.e[static_cast<size_t>(i)] += static_cast<int>(tag[static_cast<size_t>(i)]);
            if (expect.e[static_cast<size_t>(i)] < 0) valid = false;
        }
        if (!valid) {
            if (!image.isZero()) return false;
            continue;
        }
        for (const auto& [im, c] : image.terms)
            if (im != expect) return false;
    }
    return true;
}

bool isAutomorphismLike(const GradedOperator& p) {
    const std::vector<Monomial> mons = basis(p.dim, p.cutoff, 0);
    std::vector<std::pair<const Monomial*, const Monomial*>> pairs;
    for (const Monomial& a : mons)
        for (const Monomial& b : mons)
            if (a.degree() + b.degree() <= p.cutoff) pairs.emplace_back(&a, &b);
    std::size_t bad = kernels::scanFirstFailure(pairs.size(), [&](std::size_t i) {
        const Monomial& a = *pairs[i].first;
        const Monomial& b = *pairs[i].second;
        Poly pa = Poly::monomial(p.dim, p.cutoff, a, Scalar(1));
        Poly pb = Poly::monomial(p.dim, p.cutoff, b, Scalar(1));
        return p.apply(polyMul(pa, pb)) == polyMul(p.apply(pa), p.apply(pb));
    });
    return bad == pairs.size();
}

GradedOperator PreparedField::linOperator() const {
    const std::vector<Scalar>& l = lambda;
    return GradedOperator::diagonal(dim, cutoff, [&l](const Monomial& m) {
        Scalar s;
        for (size_t i = 0; i < l.size(); ++i) s += l[i] * Scalar(Rational(m.e[i]));
        return s;
    });
}

GradedOperator PreparedField::nonlinearOperator() const {
    GradedOperator sum = GradedOperator::zero(dim, cutoff);
    for (const auto& [n, b] : parts) sum += b;
    return sum;
}

GradedOperator PreparedField::fullOperator() const {
    GradedOperator sum = linOperator();
    sum += nonlinearOperator();
    return sum;
}

std::vector<Poly> PreparedField::components() const {
    std::vector<Poly> comps(static_cast<size_t>(dim), Poly::zero(dim, cutoff));
    for (int i = 0; i < dim; ++i)
        comps[static_cast<size_t>(i)].addTerm(Monomial::axis(dim, i), lambda[static_cast<size_t>(i)]);
    for (const auto& [n, pc] : partComponents)
        for (int i = 0; i < dim; ++i) comps[static_cast<size_t>(i)] += pc[static_cast<size_t>(i)];
    return comps;
}

PreparedField prepare(const std::vector<Poly>& fieldComponents) {
    if (fieldComponents.empty()) throw MouldError("prepare: empty field");
    PreparedField f;
    f.dim = fieldComponents.front().dim;
    f.cutoff = fieldComponents.front().cutoff;
    if (static_cast<int>(fieldComponents.size()) != f.dim)
        throw MouldError("prepare: need one component per variable");
    f.lambda.assign(static_cast<size_t>(f.dim), Scalar());

    const Monomial unit = Monomial::unit(f.dim);
    for (int i = 0; i < f.dim; ++i) {
        const Poly& comp = fieldComponents[static_cast<size_t>(i)];
        if (comp.dim != f.dim || comp.cutoff != f.cutoff) throw MouldError("prepare: component space mismatch");
        if (!comp.coeff(unit).isZero())
            throw MouldError("prepare: field does not vanish at the origin");
        for (const auto& [m, c] : comp.terms) {
            if (m.degree() != 1) continue;
            if (m == Monomial::axis(f.dim, i))
                f.lambda[static_cast<size_t>(i)] = c;
            else
                throw MouldError("prepare: linear part is not diagonal");
        }
    }

    // Group a x^m d/dx_i by homogeneity degree n = m - e_i.
    std::map<MultiIndex, std::vector<Poly>> groups;
    for (int i = 0; i < f.dim; ++i) {
        for (const auto& [m, c] : fieldComponents[static_cast<size_t>(i)].terms) {
            if (m.degree() <= 1) continue;
            MultiIndex n(static_cast<size_t>(f.dim));
            for (int j = 0; j < f.dim; ++j)
                n[static_cast<size_t>(j)] = m.e[static_cast<size_t>(j)] - (j == i ? 1 : 0);
            if (absSum(n) < 1) throw MouldError("prepare: letter with non-raising degree");
            auto it = groups.find(n);
            if (it == groups.end())
                it = groups.emplace(n, std::vector<Poly>(static_cast<size_t>(f.dim),
                                                          Poly::zero(f.dim, f.cutoff))).first;
            it->second[static_cast<size_t>(i)].addTerm(m, c);
        }
    }
    std::vector<MultiIndex> letters;
    for (auto& [n, comps] : groups) {
        letters.push_back(n);
        f.parts.emplace(n, GradedOperator::derivation(f.dim, f.cutoff, comps, n));
        f.partComponents.emplace(n, comps);
    }
    f.alphabet = GradedAlphabet::multiIndexed(letters, f.lambda);
    return f;
}

namespace {

// Breadth-first sweep over words with the running operator product shared
// along prefixes. visit(word, B_word) runs for every nonzero B_word, empty
// word included.
void sweepWords(const PreparedField& f,
                const std::function<void(const Word&, const GradedOperator&)>& visit,
                bool bracketMode) {
    struct NodeT {
        Word w;
        GradedOperator op;
    };
    std::vector<NodeT> level;
    const Word empty = f.alphabet->emptyWord();
    GradedOperator id = GradedOperator::identity(f.dim, f.cutoff);
    if (!bracketMode) visit(empty, id);

    std::vector<const std::pair<const MultiIndex, GradedOperator>*> letters;
    for (const auto& kv : f.parts) letters.push_back(&kv);

    // length-1 words
    for (const auto* kv : letters) {
        NodeT n{empty.appended(Grade::multi(kv->first)), kv->second};
        if (!n.op.isZero()) level.push_back(std::move(n));
    }
    for (int len = 1; len <= f.cutoff && !level.empty(); ++len) {
        for (const NodeT& n : level) visit(n.w, n.op);
        if (len == f.cutoff) break;
        std::vector<NodeT> next(level.size() * letters.size());
        kernels::parallelFor(next.size(), [&](std::size_t idx) {
            const NodeT& parent = level[idx / letters.size()];
            const auto* kv = letters[idx % letters.size()];
            next[idx].w = parent.w.appended(Grade::multi(kv->first));
            next[idx].op = bracketMode ? bracketOp(parent.op, kv->second)
                                       : composeOp(parent.op, kv->second);
        });
        level.clear();
        for (NodeT& n : next)
            if (!n.op.isZero()) level.push_back(std::move(n));
    }
}

}  // namespace

GradedOperator evalMouldExpansion(const Mould& m, const PreparedField& f) {
    GradedOperator sum = GradedOperator::zero(f.dim, f.cutoff);
    sweepWords(f, [&](const Word& w, const GradedOperator& op) {
        Scalar c = m(w);
        if (!c.isZero()) sum += op.scaled(c);
    }, /*bracketMode=*/false);
    return sum;
}

GradedOperator evalBracketExpansion(const Mould& m, const PreparedField& f, int certLength) {
    SymmetryReport report = checkSymmetry(m, certLength);
    if (report.kind != SymmetryKind::Alternal)
        throw MouldError("evalBracketExpansion needs an alternality-certified mould");
    GradedOperator sum = GradedOperator::zero(f.dim, f.cutoff);
    sweepWords(f, [&](const Word& w, const GradedOperator& op) {
        Scalar c = m(w);
        if (!c.isZero()) sum += op.scaled(c * Scalar(Rational(1, w.length())));
    }, /*bracketMode=*/true);
    return sum;
}

}  // namespace mouldcalc
