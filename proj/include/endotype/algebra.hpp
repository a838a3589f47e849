#pragma once

#include "errors.hpp"
#include "linalg.hpp"
#include "rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace endotype {

enum class Family { GL, SL, PSL, Q, ReductiveGL };

inline std::string familyName(Family f) {
    switch (f) {
        case Family::GL: return "gl";
        case Family::SL: return "sl";
        case Family::PSL: return "psl";
        case Family::Q: return "q";
        case Family::ReductiveGL: return "gl";
    }
    return "?";
}

/// Matrix model of gl(m|n), sl(m|n), psl(m|n), q(n), or reductive gl(n).
///
/// Type A basis: elementary matrices E_{ij}, 0-based, indices 0..m-1 even
/// and m..m+n-1 odd.  Q(n) basis: pairs (A-part E_{ij}, B-part E_{ij})
/// embedded as [[A,B],[B,A]] in 2n x 2n matrices.  SL/PSL share the gl
/// basis; their trace/center constraints live in weight comparisons.
struct AlgebraModel {
    Family family = Family::GL;
    int m = 0;
    int n = 0;

    AlgebraModel() = default;
    AlgebraModel(Family f, int mm, int nn) : family(f), m(mm), n(nn) { validate(); }

    void validate() const {
        if (m < 0 || n < 0) throw ParseError("unsupported size: negative rank");
        switch (family) {
            case Family::GL:
            case Family::SL:
            case Family::PSL:
                if (m + n == 0) throw ParseError("unsupported size: " + familyName(family) + "(0|0)");
                break;
            case Family::Q:
                if (n < 1 || m != 0) throw ParseError("unsupported size: q(" + std::to_string(n) + ")");
                break;
            case Family::ReductiveGL:
                if (m < 1 || n != 0) throw ParseError("unsupported size: gl(" + std::to_string(m) + ")");
                break;
        }
    }

    bool isTypeA() const { return family != Family::Q; }
    bool isSl22Like() const { return (family == Family::SL || family == Family::PSL) && m == 2 && n == 2; }

    /// Number of characters indexing the weight lattice (eps then delta).
    int numChars() const { return family == Family::Q ? n : m + n; }
    /// Dimension of the defining matrix representation.
    int repDim() const { return family == Family::Q ? 2 * n : m + n; }
    int dim() const { return family == Family::Q ? 2 * n * n : (m + n) * (m + n); }

    int charParity(int c) const { return (isTypeA() && c >= m) ? 1 : 0; }
    /// (chi_c, chi_c) in the standard form: +1 for eps, -1 for delta.
    int charSign(int c) const { return charParity(c) == 0 ? 1 : -1; }

    // Basis index helpers.
    int basisE(int i, int j) const { // type A
        return i * numChars() + j;
    }
    int basisQ(bool odd, int i, int j) const { return (odd ? n * n : 0) + i * n + j; }
    int basisParity(int k) const {
        if (isTypeA()) {
            int N = numChars();
            return charParity(k / N) ^ charParity(k % N);
        }
        return k >= n * n ? 1 : 0;
    }
    std::string basisName(int k) const {
        if (isTypeA()) {
            int N = numChars();
            return "E" + std::to_string(k / N + 1) + "," + std::to_string(k % N + 1);
        }
        int r = k % (n * n);
        return std::string(k >= n * n ? "B" : "A") + std::to_string(r / n + 1) + "," +
               std::to_string(r % n + 1);
    }

    std::vector<int> cartanIndices() const {
        std::vector<int> out;
        if (isTypeA()) {
            for (int c = 0; c < numChars(); ++c) out.push_back(basisE(c, c));
        } else {
            for (int c = 0; c < n; ++c) out.push_back(basisQ(false, c, c));
        }
        return out;
    }
    /// For Q(n): the standard odd Cartan basis (diagonal B-parts).
    std::vector<int> oddCartanIndices() const {
        std::vector<int> out;
        if (family == Family::Q)
            for (int c = 0; c < n; ++c) out.push_back(basisQ(true, c, c));
        return out;
    }

    friend bool operator==(const AlgebraModel&, const AlgebraModel&) = default;

    std::string name() const {
        if (family == Family::Q) return "q(" + std::to_string(n) + ")";
        if (family == Family::ReductiveGL) return "gl(" + std::to_string(m) + ")";
        return familyName(family) + "(" + std::to_string(m) + "|" + std::to_string(n) + ")";
    }
};

/// Element of the model, as a sparse combination of basis matrices.
struct AlgebraElement {
    AlgebraModel model;
    std::map<int, GaussianRational> coeffs;

    AlgebraElement() = default;
    explicit AlgebraElement(AlgebraModel mod) : model(std::move(mod)) {}

    static AlgebraElement basis(const AlgebraModel& mod, int k, GaussianRational c = GaussianRational(1)) {
        AlgebraElement e(mod);
        e.coeffs[k] = std::move(c);
        return e;
    }

    bool isZero() const { return coeffs.empty(); }

    void add(int k, const GaussianRational& c) {
        if (c.isZero()) return;
        auto it = coeffs.find(k);
        if (it == coeffs.end()) {
            coeffs.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.isZero()) coeffs.erase(it);
        }
    }

    AlgebraElement operator+(const AlgebraElement& o) const {
        requireSameModel(o);
        AlgebraElement r = *this;
        for (auto& [k, c] : o.coeffs) r.add(k, c);
        return r;
    }
    AlgebraElement operator-() const {
        AlgebraElement r = *this;
        for (auto& [k, c] : r.coeffs) c = -c;
        return r;
    }
    AlgebraElement operator-(const AlgebraElement& o) const { return *this + (-o); }
    AlgebraElement scaled(const GaussianRational& z) const {
        AlgebraElement r(model);
        if (z.isZero()) return r;
        r.coeffs = coeffs;
        for (auto& [k, c] : r.coeffs) c *= z;
        return r;
    }
    AlgebraElement conjCoeffs() const {
        AlgebraElement r = *this;
        for (auto& [k, c] : r.coeffs) c = c.conj();
        return r;
    }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.model == b.model && a.coeffs == b.coeffs;
    }

    void requireSameModel(const AlgebraElement& o) const {
        if (!(model == o.model)) throw PreconditionError("mismatched algebra models");
    }

    AlgebraElement parityPart(int p) const {
        AlgebraElement r(model);
        for (auto& [k, c] : coeffs)
            if (model.basisParity(k) == p) r.coeffs.emplace(k, c);
        return r;
    }

    /// Image in the defining representation.
    GMatrix toMatrix() const {
        int D = model.repDim();
        GMatrix mat(D, D);
        for (auto& [k, c] : coeffs) {
            if (model.isTypeA()) {
                int N = model.numChars();
                mat.at(k / N, k % N) += c;
            } else {
                int nn = model.n;
                int r = k % (nn * nn);
                int i = r / nn, j = r % nn;
                if (k < nn * nn) {
                    mat.at(i, j) += c;
                    mat.at(nn + i, nn + j) += c;
                } else {
                    mat.at(i, nn + j) += c;
                    mat.at(nn + i, j) += c;
                }
            }
        }
        return mat;
    }

    std::string toString() const {
        if (coeffs.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto& [k, c] : coeffs) {
            if (!first) s += " + ";
            first = false;
            s += "(" + endotype::toString(c) + ")" + model.basisName(k);
        }
        return s;
    }
};

namespace detail {

/// Reads a defining-rep matrix pair (even part, odd part) back into basis
/// coefficients; throws if the matrices do not lie in the model.
inline AlgebraElement fromMatrixParts(const AlgebraModel& mod, const GMatrix& even, const GMatrix& odd) {
    AlgebraElement out(mod);
    if (mod.isTypeA()) {
        int N = mod.numChars();
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                int par = mod.charParity(i) ^ mod.charParity(j);
                GaussianRational c = even.at(i, j) + odd.at(i, j);
                if (!even.at(i, j).isZero() && par != 0)
                    throw InternalError("even part leaks into odd position");
                if (!odd.at(i, j).isZero() && par != 1)
                    throw InternalError("odd part leaks into even position");
                if (!c.isZero()) out.coeffs.emplace(mod.basisE(i, j), c);
            }
        return out;
    }
    int n = mod.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // even part must be [[A,0],[0,A]], odd part [[0,B],[B,0]]
            if (even.at(i, j) != even.at(n + i, n + j) || !even.at(i, n + j).isZero() ||
                !even.at(n + i, j).isZero())
                throw InternalError("matrix does not lie in q(n): even part");
            if (odd.at(i, n + j) != odd.at(n + i, j) || !odd.at(i, j).isZero() ||
                !odd.at(n + i, n + j).isZero())
                throw InternalError("matrix does not lie in q(n): odd part");
            if (!even.at(i, j).isZero()) out.coeffs.emplace(mod.basisQ(false, i, j), even.at(i, j));
            if (!odd.at(i, n + j).isZero()) out.coeffs.emplace(mod.basisQ(true, i, j), odd.at(i, n + j));
        }
    return out;
}

} // namespace detail

/// Super-commutator [x,y] = xy - (-1)^{|x||y|} yx, extended bilinearly.
inline AlgebraElement superbracket(const AlgebraElement& x, const AlgebraElement& y) {
    x.requireSameModel(y);
    const AlgebraModel& mod = x.model;
    GMatrix x0 = x.parityPart(0).toMatrix(), x1 = x.parityPart(1).toMatrix();
    GMatrix y0 = y.parityPart(0).toMatrix(), y1 = y.parityPart(1).toMatrix();
    GMatrix even = x0 * y0 + (-(y0 * x0)) + x1 * y1 + y1 * x1;
    GMatrix odd = x0 * y1 + (-(y1 * x0)) + x1 * y0 + (-(y0 * x1));
    return detail::fromMatrixParts(mod, even, odd);
}

inline AlgebraElement adjointAction(const GMatrix& g, const AlgebraElement& x) {
    const AlgebraModel& mod = x.model;
    GMatrix gg = g;
    if (mod.family == Family::Q) {
        int n = mod.n;
        if (g.rows == n) { // even group element given as its n x n block
            gg = GMatrix(2 * n, 2 * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    gg.at(i, j) = g.at(i, j);
                    gg.at(n + i, n + j) = g.at(i, j);
                }
        }
    }
    GMatrix gi = inverse(gg);
    GMatrix even = gg * x.parityPart(0).toMatrix() * gi;
    GMatrix odd = gg * x.parityPart(1).toMatrix() * gi;
    return detail::fromMatrixParts(mod, even, odd);
}

/// Weight as a coefficient vector over the eps-delta basis.  For Q(n) only
/// eps is used.  SL/PSL coordinates are class representatives modulo the
/// supertrace functional (1,..,1|-1,..,-1).
struct Weight {
    std::vector<GaussianRational> eps;
    std::vector<GaussianRational> delta;

    Weight() = default;
    Weight(std::vector<GaussianRational> e, std::vector<GaussianRational> d)
        : eps(std::move(e)), delta(std::move(d)) {}

    static Weight zero(const AlgebraModel& mod) {
        Weight w;
        w.eps.assign(mod.isTypeA() ? mod.m : mod.n, GaussianRational(0));
        w.delta.assign(mod.isTypeA() ? mod.n : 0, GaussianRational(0));
        return w;
    }

    int numChars() const { return static_cast<int>(eps.size() + delta.size()); }
    GaussianRational& coord(int c) {
        return c < static_cast<int>(eps.size()) ? eps[c] : delta[c - eps.size()];
    }
    const GaussianRational& coord(int c) const {
        return c < static_cast<int>(eps.size()) ? eps[c] : delta[c - eps.size()];
    }

    Weight conj() const {
        Weight w = *this;
        for (auto& x : w.eps) x = x.conj();
        for (auto& x : w.delta) x = x.conj();
        return w;
    }

    Weight operator+(const Weight& o) const {
        Weight w = *this;
        for (size_t k = 0; k < eps.size(); ++k) w.eps[k] += o.eps[k];
        for (size_t k = 0; k < delta.size(); ++k) w.delta[k] += o.delta[k];
        return w;
    }
    Weight operator-(const Weight& o) const {
        Weight w = *this;
        for (size_t k = 0; k < eps.size(); ++k) w.eps[k] -= o.eps[k];
        for (size_t k = 0; k < delta.size(); ++k) w.delta[k] -= o.delta[k];
        return w;
    }

    /// Exact coordinate equality, ignoring the family quotient.
    friend bool operator==(const Weight& a, const Weight& b) {
        return a.eps == b.eps && a.delta == b.delta;
    }

    /// Evaluation on a Cartan element of the model.
    GaussianRational evaluate(const AlgebraElement& h) const {
        GaussianRational out(0);
        const AlgebraModel& mod = h.model;
        for (auto& [k, c] : h.coeffs) {
            if (mod.isTypeA()) {
                int N = mod.numChars();
                int i = k / N, j = k % N;
                if (i != j) throw PreconditionError("weight evaluated on non-Cartan element");
                out += c * coord(i);
            } else {
                int r = k % (mod.n * mod.n);
                if (k >= mod.n * mod.n || r / mod.n != r % mod.n)
                    throw PreconditionError("weight evaluated on non-Cartan element");
                out += c * coord(r / mod.n);
            }
        }
        return out;
    }

    /// Value on the identity supermatrix (sum of all coordinates); the
    /// central character for sl(n|n), required zero for psl.
    GaussianRational identityValue() const {
        GaussianRational s(0);
        for (auto& x : eps) s += x;
        for (auto& x : delta) s += x;
        return s;
    }

    std::string toString() const {
        std::string s;
        for (int c = 0; c < numChars(); ++c) {
            if (c) s += ",";
            s += endotype::toString(coord(c));
        }
        return s;
    }
};

/// Weight equality in the model's parametrization: exact for gl/q, modulo
/// the supertrace span for sl/psl.
inline bool weightsEqual(const AlgebraModel& mod, const Weight& a, const Weight& b) {
    if (mod.family != Family::SL && mod.family != Family::PSL) return a == b;
    Weight d = a - b;
    const GaussianRational t = d.eps.empty() ? (d.delta.empty() ? GaussianRational(0) : -d.delta[0])
                                             : d.eps[0];
    for (auto& x : d.eps)
        if (x != t) return false;
    for (auto& x : d.delta)
        if (x != -t) return false;
    return true;
}

/// Root chi_a - chi_b of a type A model (or of the even root system of
/// q(n)), stored by its character index pair.
struct Root {
    int a = 0;
    int b = 0;

    friend bool operator==(const Root&, const Root&) = default;
    friend bool operator<(const Root& x, const Root& y) {
        return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    }

    Root negated() const { return {b, a}; }

    int parityIn(const AlgebraModel& mod) const { return mod.charParity(a) ^ mod.charParity(b); }
    bool isIsotropicIn(const AlgebraModel& mod) const {
        return parityIn(mod) == 1 && mod.charSign(a) + mod.charSign(b) == 0;
    }
    /// Standard type A form: (chi_x, chi_y) = sign(x) delta_{xy}.
    static GaussianRational innerProduct(const AlgebraModel& mod, const Root& x, const Root& y) {
        auto ip = [&](int c, int d) { return c == d ? mod.charSign(c) : 0; };
        return GaussianRational(ip(x.a, y.a) - ip(x.a, y.b) - ip(x.b, y.a) + ip(x.b, y.b));
    }
    std::optional<Root> plus(const Root& o) const {
        if (b == o.a && a != o.b) return Root{a, o.b};
        if (o.b == a && o.a != b) return Root{o.a, b};
        return std::nullopt;
    }

    /// The pinned root vector e_alpha := E_{a,b}.
    AlgebraElement vectorIn(const AlgebraModel& mod) const {
        if (mod.isTypeA()) return AlgebraElement::basis(mod, mod.basisE(a, b));
        return AlgebraElement::basis(mod, mod.basisQ(false, a, b));
    }
    /// h_alpha = [e_alpha, e_{-alpha}] with the pinned normalization.
    AlgebraElement corootIn(const AlgebraModel& mod) const {
        return superbracket(vectorIn(mod), negated().vectorIn(mod));
    }

    std::string toString(const AlgebraModel& mod) const {
        auto chr = [&](int c) {
            return mod.charParity(c) == 0 ? "e" + std::to_string(c + 1)
                                          : "d" + std::to_string(c - mod.m + 1);
        };
        return chr(a) + "-" + chr(b);
    }

    /// For sl(2|2)/psl(2|2): the second character pair carrying the same
    /// functional (eps1-delta1 = delta2-eps2 there).
    Root sl22Partner() const {
        auto partner = [](int c) { return c ^ 1; };
        return {partner(b), partner(a)};
    }
};

/// Borel subalgebra of a type A model encoded as an eps-delta shuffle word
/// over {e,d}.  Q(n) and reductive gl(n) admit only the standard word.
struct BorelShuffle {
    std::string word;

    static BorelShuffle standard(const AlgebraModel& mod) {
        if (mod.family == Family::Q) return {std::string(mod.n, 'e')};
        return {std::string(mod.m, 'e') + std::string(mod.n, 'd')};
    }

    void validateFor(const AlgebraModel& mod) const {
        int e = 0, d = 0;
        for (char c : word) {
            if (c == 'e')
                ++e;
            else if (c == 'd')
                ++d;
            else
                throw ParseError("invalid shuffle letter '" + std::string(1, c) + "'");
        }
        if (mod.family == Family::Q || mod.family == Family::ReductiveGL) {
            if (word != standard(mod).word)
                throw PreconditionError(mod.name() + " accepts only the standard Borel");
            return;
        }
        if (e != mod.m || d != mod.n)
            throw ParseError("shuffle word '" + word + "' does not match " + mod.name());
        if (mod.isSl22Like() && word != "edde" && word != "deed")
            throw PreconditionError(
                mod.name() + ": only shuffles edde/deed define Borel subalgebras (root spaces merge)");
    }

    /// Characters in shuffle order.
    std::vector<int> charOrder(const AlgebraModel& mod) const {
        std::vector<int> order;
        int e = 0, d = 0;
        for (char c : word) order.push_back(c == 'e' ? e++ : mod.m + d++);
        if (mod.family == Family::Q)
            for (int i = 0; i < mod.n; ++i) order[i] = i;
        return order;
    }

    friend bool operator==(const BorelShuffle&, const BorelShuffle&) = default;
};

struct FundamentalSystem {
    std::vector<Root> simple;
    friend bool operator==(const FundamentalSystem&, const FundamentalSystem&) = default;
};

inline FundamentalSystem fundamentalSystem(const AlgebraModel& mod, const BorelShuffle& b) {
    b.validateFor(mod);
    std::vector<int> order = b.charOrder(mod);
    FundamentalSystem fs;
    for (size_t p = 0; p + 1 < order.size(); ++p) fs.simple.push_back({order[p], order[p + 1]});
    return fs;
}

inline std::vector<Root> positiveRoots(const AlgebraModel& mod, const BorelShuffle& b) {
    std::vector<int> order = b.charOrder(mod);
    std::vector<Root> out;
    for (size_t p = 0; p < order.size(); ++p)
        for (size_t q = p + 1; q < order.size(); ++q) out.push_back({order[p], order[q]});
    return out;
}

/// Odd reflection at an isotropic simple root: keeps the orthogonal simples,
/// negates alpha, and shifts the non-orthogonal ones by alpha.
inline FundamentalSystem oddReflection(const AlgebraModel& mod, const FundamentalSystem& pi,
                                       const Root& alpha) {
    if (std::find(pi.simple.begin(), pi.simple.end(), alpha) == pi.simple.end())
        throw PreconditionError("odd reflection: root is not simple");
    if (!alpha.isIsotropicIn(mod)) throw PreconditionError("odd reflection: root is not isotropic");
    FundamentalSystem out;
    for (const Root& beta : pi.simple) {
        if (beta == alpha) {
            out.simple.push_back(alpha.negated());
        } else if (Root::innerProduct(mod, beta, alpha).isZero()) {
            out.simple.push_back(beta);
        } else {
            auto sum = beta.plus(alpha);
            if (!sum) throw InternalError("odd reflection produced a non-root");
            out.simple.push_back(*sum);
        }
    }
    return out;
}

/// Odd reflections turning the Borel of `from` into the Borel of `to`
/// (same even part), as the left-to-right bubble chain on shuffle words.
/// Each returned root is simple and isotropic at its step.
inline std::vector<Root> oddReflectionChain(const AlgebraModel& mod, const BorelShuffle& from,
                                            const BorelShuffle& to) {
    from.validateFor(mod);
    to.validateFor(mod);
    // Letters keep their within-class order, so label them by class index.
    auto labels = [&](const std::string& w) {
        std::vector<std::pair<char, int>> out;
        int e = 0, d = 0;
        for (char c : w) out.emplace_back(c, c == 'e' ? e++ : d++);
        return out;
    };
    auto cur = labels(from.word), tgt = labels(to.word);
    auto charOf = [&](std::pair<char, int> lab) {
        return lab.first == 'e' ? lab.second : mod.m + lab.second;
    };
    std::vector<Root> chain;
    for (size_t pos = 0; pos < cur.size(); ++pos) {
        if (cur[pos] == tgt[pos]) continue;
        size_t q = pos + 1;
        while (q < cur.size() && cur[q] != tgt[pos]) ++q;
        if (q == cur.size()) throw InternalError("odd reflection chain: words are not anagrams");
        for (size_t t = q; t > pos; --t) {
            if (cur[t - 1].first == cur[t].first)
                throw InternalError("odd reflection chain: same-class swap");
            chain.push_back(Root{charOf(cur[t - 1]), charOf(cur[t])});
            std::swap(cur[t - 1], cur[t]);
        }
    }
    return chain;
}

/// Highest-weight shift across one odd reflection (Clifford sl(1|1) rule).
/// Not valid for sl(2|2)/psl(2|2); callers must dispatch to sl22Shift.
inline Weight shiftedHighestWeight(const Weight& lambda, const Root& alpha, const AlgebraModel& mod) {
    if (mod.isSl22Like())
        throw PreconditionError("sl(2|2)/psl(2|2) highest-weight shifts use the rank rule");
    GaussianRational v = lambda.evaluate(alpha.corootIn(mod));
    if (v.isZero()) return lambda;
    Weight out = lambda;
    out.coord(alpha.a) -= GaussianRational(1);
    out.coord(alpha.b) += GaussianRational(1);
    return out;
}

struct Sl22Shift {
    Weight weight;
    int rank = 0; // 0, 1 or 2
    /// Root vectors e whose product plays the role of e_{alphaـ1}; the new
    /// highest vector is the matching product of lowering operators.
    std::vector<Root> raisingFactors;
};

/// Highest-weight move across the unique odd reflection of sl(2|2)/psl(2|2);
/// rank of the 2x2 pairing lambda([g_a, g_-a]) decides the shift.
inline Sl22Shift sl22Shift(const AlgebraModel& mod, const Weight& lambda, const Root& alpha1) {
    if (!mod.isSl22Like()) throw PreconditionError("sl22Shift requires sl(2|2) or psl(2|2)");
    Root r1 = alpha1, r2 = alpha1.sl22Partner();
    GaussianRational l1 = lambda.evaluate(r1.corootIn(mod));
    GaussianRational l2 = lambda.evaluate(r2.corootIn(mod));
    Sl22Shift out;
    out.rank = (l1.isZero() ? 0 : 1) + (l2.isZero() ? 0 : 1);
    out.weight = lambda;
    for (int t = 0; t < out.rank; ++t) {
        out.weight.coord(alpha1.a) -= GaussianRational(1);
        out.weight.coord(alpha1.b) += GaussianRational(1);
    }
    if (!l1.isZero()) out.raisingFactors.push_back(r1);
    if (!l2.isZero()) out.raisingFactors.push_back(r2);
    return out;
}

} // namespace endotype
