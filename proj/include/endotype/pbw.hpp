#pragma once

#include "algebra.hpp"
#include "errors.hpp"

#include <map>
#include <vector>

namespace endotype {

/// Total order on the model basis fixing the PBW monomial form relative to
/// a Borel: negative root vectors, then Cartan generators, then positive
/// root vectors.  The default sorts each root zone by height then
/// lexicographically; `oddLayered` pushes odd root vectors to the outside
/// (handy when acting on induced modules).
struct PBWOrder {
    AlgebraModel model;
    BorelShuffle borel;
    std::vector<int> sequence;  // basis indices in PBW order
    std::vector<int> position;  // basis index -> rank in `sequence`
    std::vector<int> zone;      // by rank: 0 negative, 1 Cartan, 2 positive

    static PBWOrder standard(const AlgebraModel& mod, const BorelShuffle& b) {
        return build(mod, b, false);
    }
    static PBWOrder oddLayered(const AlgebraModel& mod, const BorelShuffle& b) {
        return build(mod, b, true);
    }

    int rankOf(int basisIndex) const {
        int r = position[basisIndex];
        if (r < 0) throw InternalError("basis element outside the PBW order");
        return r;
    }

private:
    static PBWOrder build(const AlgebraModel& mod, const BorelShuffle& b, bool oddOutside) {
        if (!mod.isTypeA()) throw PreconditionError("PBW engine covers the type A models");
        b.validateFor(mod);
        PBWOrder ord;
        ord.model = mod;
        ord.borel = b;
        std::vector<int> chars = b.charOrder(mod);
        std::vector<int> place(chars.size());
        for (size_t p = 0; p < chars.size(); ++p) place[chars[p]] = static_cast<int>(p);

        std::vector<Root> pos = positiveRoots(mod, b);
        auto height = [&](const Root& r) { return std::abs(place[r.a] - place[r.b]); };
        auto sortZone = [&](std::vector<Root> roots) {
            std::sort(roots.begin(), roots.end(), [&](const Root& x, const Root& y) {
                if (oddOutside && x.parityIn(mod) != y.parityIn(mod)) {
                    // negatives: odd first; positives: odd last
                    return x.parityIn(mod) > y.parityIn(mod);
                }
                if (height(x) != height(y)) return height(x) < height(y);
                return x < y;
            });
            return roots;
        };

        std::vector<Root> negs;
        for (const Root& r : pos) negs.push_back(r.negated());
        for (const Root& r : sortZone(std::move(negs))) {
            ord.sequence.push_back(mod.basisE(r.a, r.b));
            ord.zone.push_back(0);
        }
        for (int c = 0; c < mod.numChars(); ++c) {
            ord.sequence.push_back(mod.basisE(c, c));
            ord.zone.push_back(1);
        }
        std::vector<Root> poss = sortZone(pos);
        if (oddOutside) { // odd last within positives
            std::stable_partition(poss.begin(), poss.end(),
                                  [&](const Root& r) { return r.parityIn(mod) == 0; });
        }
        for (const Root& r : poss) {
            ord.sequence.push_back(mod.basisE(r.a, r.b));
            ord.zone.push_back(2);
        }
        ord.position.assign(mod.dim(), -1);
        for (size_t k = 0; k < ord.sequence.size(); ++k)
            ord.position[ord.sequence[k]] = static_cast<int>(k);
        return ord;
    }
};

/// Exponent vector over the PBW order (odd generators carry exponent <= 1).
using PBWMonomial = std::vector<int>;

struct PBWElement {
    PBWOrder order;
    std::map<PBWMonomial, GaussianRational> terms;

    bool isZero() const { return terms.empty(); }

    friend bool operator==(const PBWElement& x, const PBWElement& y) {
        return x.terms == y.terms && x.order.sequence == y.order.sequence;
    }
};

/// Polynomial in the Cartan generators E_{cc}, exponent-vector keyed.
struct CartanPolynomial {
    int numChars = 0;
    std::map<std::vector<int>, GaussianRational> terms;

    explicit CartanPolynomial(int nc = 0) : numChars(nc) {}

    static CartanPolynomial constant(int nc, GaussianRational c) {
        CartanPolynomial p(nc);
        if (!c.isZero()) p.terms.emplace(std::vector<int>(nc, 0), std::move(c));
        return p;
    }
    static CartanPolynomial variable(int nc, int c) {
        CartanPolynomial p(nc);
        std::vector<int> e(nc, 0);
        e[c] = 1;
        p.terms.emplace(std::move(e), GaussianRational(1));
        return p;
    }

    void add(const std::vector<int>& e, const GaussianRational& c) {
        if (c.isZero()) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.isZero()) terms.erase(it);
        }
    }

    CartanPolynomial operator+(const CartanPolynomial& o) const {
        CartanPolynomial r = *this;
        for (auto& [e, c] : o.terms) r.add(e, c);
        return r;
    }
    CartanPolynomial operator-(const CartanPolynomial& o) const {
        CartanPolynomial r = *this;
        for (auto& [e, c] : o.terms) r.add(e, -c);
        return r;
    }
    CartanPolynomial operator*(const CartanPolynomial& o) const {
        CartanPolynomial r(numChars);
        for (auto& [e1, c1] : terms)
            for (auto& [e2, c2] : o.terms) {
                std::vector<int> e = e1;
                for (int k = 0; k < numChars; ++k) e[k] += e2[k];
                r.add(e, c1 * c2);
            }
        return r;
    }
    friend bool operator==(const CartanPolynomial& a, const CartanPolynomial& b) {
        return a.numChars == b.numChars && a.terms == b.terms;
    }

    GaussianRational evaluate(const Weight& lambda) const {
        GaussianRational out(0);
        for (auto& [e, c] : terms) {
            GaussianRational t = c;
            for (int k = 0; k < numChars; ++k)
                if (e[k]) t *= lambda.coord(k).pow(e[k]);
            out += t;
        }
        return out;
    }
};

namespace detail {

using Word = std::vector<int>; // basis indices, in product order

/// One rewriting pass: given x at rank > rank of following y, swap using
/// xy = (-1)^{|x||y|} yx + [x,y]; equal adjacent odd letters square to
/// (1/2)[x,x].  Bracket expansions are memoized per index pair.
class Straightener {
public:
    explicit Straightener(const PBWOrder& order) : ord_(order) {}

    std::map<PBWMonomial, GaussianRational> run(std::map<Word, GaussianRational> pending) {
        std::map<PBWMonomial, GaussianRational> result;
        while (!pending.empty()) {
            auto node = pending.extract(pending.begin());
            const Word& w = node.key();
            const GaussianRational& c = node.mapped();
            if (c.isZero()) continue;
            size_t bad = w.size();
            for (size_t t = 0; t + 1 < w.size(); ++t) {
                if (ord_.rankOf(w[t]) > ord_.rankOf(w[t + 1]) ||
                    (w[t] == w[t + 1] && ord_.model.basisParity(w[t]) == 1)) {
                    bad = t;
                    break;
                }
            }
            if (bad == w.size()) {
                PBWMonomial mono(ord_.sequence.size(), 0);
                for (int k : w) ++mono[ord_.rankOf(k)];
                auto it = result.find(mono);
                if (it == result.end())
                    result.emplace(std::move(mono), c);
                else {
                    it->second += c;
                    if (it->second.isZero()) result.erase(it);
                }
                continue;
            }
            int x = w[bad], y = w[bad + 1];
            auto addWord = [&](Word nw, GaussianRational nc) {
                if (nc.isZero()) return;
                auto it = pending.find(nw);
                if (it == pending.end())
                    pending.emplace(std::move(nw), std::move(nc));
                else {
                    it->second += nc;
                    if (it->second.isZero()) pending.erase(it);
                }
            };
            if (x == y) { // odd square
                for (auto& [j, bc] : bracket(x, y)) {
                    Word nw(w.begin(), w.begin() + bad);
                    nw.push_back(j);
                    nw.insert(nw.end(), w.begin() + bad + 2, w.end());
                    addWord(std::move(nw), c * bc * GaussianRational(1, 2));
                }
            } else {
                int sgn = (ord_.model.basisParity(x) && ord_.model.basisParity(y)) ? -1 : 1;
                Word sw = w;
                std::swap(sw[bad], sw[bad + 1]);
                addWord(std::move(sw), c * GaussianRational(sgn));
                for (auto& [j, bc] : bracket(x, y)) {
                    Word nw(w.begin(), w.begin() + bad);
                    nw.push_back(j);
                    nw.insert(nw.end(), w.begin() + bad + 2, w.end());
                    addWord(std::move(nw), c * bc);
                }
            }
        }
        return result;
    }

private:
    const PBWOrder& ord_;
    std::map<std::pair<int, int>, std::vector<std::pair<int, GaussianRational>>> cache_;

    const std::vector<std::pair<int, GaussianRational>>& bracket(int x, int y) {
        auto key = std::make_pair(x, y);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        AlgebraElement b = superbracket(AlgebraElement::basis(ord_.model, x),
                                        AlgebraElement::basis(ord_.model, y));
        std::vector<std::pair<int, GaussianRational>> terms(b.coeffs.begin(), b.coeffs.end());
        return cache_.emplace(key, std::move(terms)).first->second;
    }
};

} // namespace detail

/// PBW normal form of the ordered product of (possibly non-homogeneous)
/// model elements.
inline PBWElement straighten(const std::vector<AlgebraElement>& factors, const PBWOrder& order) {
    std::map<detail::Word, GaussianRational> pending;
    pending.emplace(detail::Word{}, GaussianRational(1));
    for (const AlgebraElement& f : factors) {
        if (!(f.model == order.model)) throw PreconditionError("mismatched models in straighten");
        std::map<detail::Word, GaussianRational> next;
        for (auto& [w, c] : pending)
            for (auto& [k, fc] : f.coeffs) {
                detail::Word nw = w;
                nw.push_back(k);
                auto it = next.find(nw);
                if (it == next.end())
                    next.emplace(std::move(nw), c * fc);
                else
                    it->second += c * fc;
            }
        pending = std::move(next);
    }
    PBWElement out;
    out.order = order;
    out.terms = detail::Straightener(order).run(std::move(pending));
    return out;
}

/// Keeps exactly the monomials supported on Cartan generators.
inline CartanPolynomial hcProjection(const PBWElement& u) {
    const PBWOrder& ord = u.order;
    int nc = ord.model.numChars();
    CartanPolynomial p(nc);
    for (auto& [mono, c] : u.terms) {
        bool cartanOnly = true;
        for (size_t r = 0; r < mono.size(); ++r)
            if (mono[r] && ord.zone[r] != 1) {
                cartanOnly = false;
                break;
            }
        if (!cartanOnly) continue;
        std::vector<int> e(nc, 0);
        for (size_t r = 0; r < mono.size(); ++r)
            if (mono[r]) {
                int basisIdx = ord.sequence[r];
                e[basisIdx / ord.model.numChars()] = mono[r];
            }
        p.add(e, c);
    }
    return p;
}

inline GaussianRational evaluateAtWeight(const CartanPolynomial& p, const Weight& lambda) {
    return p.evaluate(lambda);
}

} // namespace endotype
