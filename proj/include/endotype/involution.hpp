#pragma once

#include "algebra.hpp"
#include "errors.hpp"
#include "linalg.hpp"

#include <string>
#include <utility>
#include <vector>

namespace endotype {

enum class InvolutionKind { Split, Unitary, QBar, PeBar, Custom };
enum class CustomRecipe { Conj, NegConjSupertranspose, PiSwapConj };

/// Recipe for an antilinear involution tau.  Unitary means
/// tau(X) = -M conj(X)^str M^{-1} with M = diag(signs); the signs carry the
/// u(p,q|r,s) phase convention (+-1 on even slots, +-i on odd slots; for
/// q(n) the given +-1 vector J expands to diag(J, iJ)).
struct InvolutionSpec {
    InvolutionKind kind = InvolutionKind::Split;
    std::vector<GaussianRational> signs;
    GMatrix customM;
    CustomRecipe recipe = CustomRecipe::Conj;

    static InvolutionSpec split() { return {}; }
    static InvolutionSpec unitary(std::vector<GaussianRational> s) {
        InvolutionSpec spec;
        spec.kind = InvolutionKind::Unitary;
        spec.signs = std::move(s);
        return spec;
    }
    /// u(p,q|r,s): signs (1^p, -1^q | i^r, -i^s).
    static InvolutionSpec u(int p, int q, int r, int s) {
        std::vector<GaussianRational> v;
        for (int k = 0; k < p; ++k) v.emplace_back(1);
        for (int k = 0; k < q; ++k) v.emplace_back(-1);
        for (int k = 0; k < r; ++k) v.push_back(GaussianRational::i());
        for (int k = 0; k < s; ++k) v.push_back(-GaussianRational::i());
        return unitary(std::move(v));
    }
    static InvolutionSpec qbar() {
        InvolutionSpec spec;
        spec.kind = InvolutionKind::QBar;
        return spec;
    }
    static InvolutionSpec pebar() {
        InvolutionSpec spec;
        spec.kind = InvolutionKind::PeBar;
        return spec;
    }
    static InvolutionSpec custom(GMatrix m, CustomRecipe r) {
        InvolutionSpec spec;
        spec.kind = InvolutionKind::Custom;
        spec.customM = std::move(m);
        spec.recipe = r;
        return spec;
    }

    std::string describe() const {
        switch (kind) {
            case InvolutionKind::Split: return "split";
            case InvolutionKind::Unitary: {
                std::string s = "unitary(";
                for (size_t k = 0; k < signs.size(); ++k) s += (k ? "," : "") + toString(signs[k]);
                return s + ")";
            }
            case InvolutionKind::QBar: return "qbar";
            case InvolutionKind::PeBar: return "pebar";
            case InvolutionKind::Custom: return "custom";
        }
        return "?";
    }
};

namespace detail {

inline int repPosParity(const AlgebraModel& mod, int pos) {
    return mod.isTypeA() ? mod.charParity(pos) : (pos >= mod.n ? 1 : 0);
}

/// Supertranspose in the defining representation:
/// [[A,B],[C,D]] -> [[A^T,-C^T],[B^T,D^T]].
inline GMatrix strMatrix(const AlgebraModel& mod, const GMatrix& x) {
    int d = mod.repDim();
    GMatrix y(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            if (isZero(x.at(a, b))) continue;
            int sgn = (repPosParity(mod, a) == 1 && repPosParity(mod, b) == 0) ? -1 : 1;
            y.at(b, a) = x.at(a, b).isZero() ? GaussianRational(0) : x.at(a, b) * GaussianRational(sgn);
        }
    return y;
}

/// Parity swap X^Pi = P X P with P the half-swap permutation.
inline GMatrix piMatrix(const GMatrix& x) {
    int d = x.rows, h = d / 2;
    GMatrix y(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) y.at((a + h) % d, (b + h) % d) = x.at(a, b);
    return y;
}

} // namespace detail

/// Validated antilinear involution of a matrix model, with cached basis
/// images and the induced actions on weights, roots and group elements.
class Involution {
public:
    Involution(AlgebraModel model, InvolutionSpec spec)
        : model_(std::move(model)), spec_(std::move(spec)) {
        buildImages();
        validate();
    }

    const AlgebraModel& model() const { return model_; }
    const InvolutionSpec& spec() const { return spec_; }

    /// tau on a general element (antilinear: coefficients conjugate).
    AlgebraElement apply(const AlgebraElement& x) const {
        AlgebraElement out(model_);
        for (auto& [k, c] : x.coeffs) {
            const AlgebraElement& img = images_[k];
            for (auto& [j, d] : img.coeffs) out.add(j, c.conj() * d);
        }
        return out;
    }

    /// conj(lambda o tau), the highest weight of the conjugate module.
    Weight tauWeight(const Weight& lambda) const {
        Weight mu = Weight::zero(model_);
        int nc = model_.numChars();
        for (int c = 0; c < nc; ++c)
            for (int d = 0; d < nc; ++d) {
                const GaussianRational& t = cartanAction_.at(c, d);
                if (!t.isZero()) mu.coord(c) += t.conj() * lambda.coord(d).conj();
            }
        return mu;
    }

    /// The signed-permutation image of a root: tau(g_a) = g_{tauRoot(a)}.
    Root tauRoot(const Root& alpha) const {
        AlgebraElement img = apply(alpha.vectorIn(model_));
        if (img.coeffs.size() != 1)
            throw InternalError("tau does not permute root spaces at " + alpha.toString(model_));
        int k = img.coeffs.begin()->first;
        if (model_.isTypeA()) {
            int N = model_.numChars();
            return Root{k / N, k % N};
        }
        int r = k % (model_.n * model_.n);
        return Root{r / model_.n, r % model_.n};
    }

    /// Image positive system tau(Phi^+) of a shuffle Borel.
    std::vector<Root> tauBorel(const BorelShuffle& b) const {
        std::vector<Root> out;
        for (const Root& alpha : positiveRoots(model_, b)) out.push_back(tauRoot(alpha));
        return out;
    }

    /// The integrated involution on even group elements.  For type A the
    /// argument and result are (m+n)-square; for Q(n) they are the n-square
    /// block of the even subgroup.
    GMatrix evenGroupImage(const GMatrix& g) const {
        if (model_.family == Family::Q) {
            int n = model_.n;
            GMatrix big(2 * n, 2 * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    big.at(i, j) = g.at(i, j);
                    big.at(n + i, n + j) = g.at(i, j);
                }
            GMatrix img = groupRecipe(big);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (img.at(i, j) != img.at(n + i, n + j) || !img.at(i, n + j).isZero() ||
                        !img.at(n + i, j).isZero())
                        throw InternalError("group involution leaves the even subgroup of q(n)");
            GMatrix out(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) out.at(i, j) = img.at(i, j);
            return out;
        }
        return groupRecipe(g);
    }

private:
    AlgebraModel model_;
    InvolutionSpec spec_;
    std::vector<AlgebraElement> images_;
    GMatrix cartanAction_; // c,d entry: coefficient of E_dd in tau(E_cc)

    GMatrix diagonalM() const {
        int d = model_.repDim();
        GMatrix m(d, d);
        if (model_.family == Family::Q) {
            for (int i = 0; i < model_.n; ++i) {
                m.at(i, i) = spec_.signs[i];
                m.at(model_.n + i, model_.n + i) = spec_.signs[i] * GaussianRational::i();
            }
        } else {
            for (int i = 0; i < d; ++i) m.at(i, i) = spec_.signs[i];
        }
        return m;
    }

    GMatrix groupRecipe(const GMatrix& g) const {
        switch (spec_.kind) {
            case InvolutionKind::Split: return conjugated(g);
            case InvolutionKind::Unitary: {
                GMatrix m = diagonalM();
                return m * inverse(conjugated(g).transposed()) * inverse(m);
            }
            case InvolutionKind::QBar: return detail::piMatrix(conjugated(g));
            case InvolutionKind::PeBar:
                return detail::piMatrix(inverse(conjugated(g).transposed()));
            case InvolutionKind::Custom: {
                const GMatrix& m = spec_.customM;
                GMatrix mi = inverse(m);
                switch (spec_.recipe) {
                    case CustomRecipe::Conj: return m * conjugated(g) * mi;
                    case CustomRecipe::NegConjSupertranspose:
                        return m * inverse(conjugated(g).transposed()) * mi;
                    case CustomRecipe::PiSwapConj: return m * detail::piMatrix(conjugated(g)) * mi;
                }
            }
        }
        throw InternalError("unreachable involution kind");
    }

    void checkSpecShape() {
        switch (spec_.kind) {
            case InvolutionKind::Split: break;
            case InvolutionKind::Unitary: {
                size_t want = model_.family == Family::Q ? model_.n : model_.numChars();
                if (spec_.signs.size() != want)
                    throw PreconditionError("unitary sign vector has wrong length for " + model_.name());
                for (int c = 0; c < static_cast<int>(want); ++c) {
                    const GaussianRational& s = spec_.signs[c];
                    bool real = s == GaussianRational(1) || s == GaussianRational(-1);
                    bool imag = s == GaussianRational::i() || s == -GaussianRational::i();
                    bool evenSlot = model_.family == Family::Q || model_.charParity(c) == 0;
                    if (evenSlot ? !real : !imag)
                        throw PreconditionError("unitary sign " + toString(s) + " invalid at slot " +
                                                std::to_string(c + 1));
                }
                break;
            }
            case InvolutionKind::QBar:
            case InvolutionKind::PeBar:
                if (model_.family == Family::Q || model_.family == Family::ReductiveGL ||
                    model_.m != model_.n)
                    throw PreconditionError(spec_.describe() + " requires gl/sl/psl(n|n)");
                break;
            case InvolutionKind::Custom:
                if (spec_.customM.rows != model_.repDim() || spec_.customM.cols != model_.repDim())
                    throw PreconditionError("custom matrix must be " + std::to_string(model_.repDim()) +
                                            " square");
                if (spec_.recipe == CustomRecipe::PiSwapConj &&
                    (model_.family == Family::Q || model_.m != model_.n))
                    throw PreconditionError("pi-swap-conj requires gl/sl/psl(n|n)");
                break;
        }
    }

    void buildImages() {
        checkSpecShape();
        int d = model_.dim();
        images_.reserve(d);
        for (int k = 0; k < d; ++k) {
            GMatrix x = AlgebraElement::basis(model_, k).toMatrix();
            GMatrix img;
            switch (spec_.kind) {
                case InvolutionKind::Split: img = x; break;
                case InvolutionKind::Unitary: {
                    GMatrix m = diagonalM();
                    img = -(m * detail::strMatrix(model_, x) * inverse(m));
                    break;
                }
                case InvolutionKind::QBar: img = detail::piMatrix(x); break;
                case InvolutionKind::PeBar:
                    img = detail::piMatrix(detail::strMatrix(model_, -x));
                    break;
                case InvolutionKind::Custom: {
                    GMatrix mi = inverse(spec_.customM);
                    switch (spec_.recipe) {
                        case CustomRecipe::Conj: img = spec_.customM * x * mi; break;
                        case CustomRecipe::NegConjSupertranspose:
                            img = -(spec_.customM * detail::strMatrix(model_, x) * mi);
                            break;
                        case CustomRecipe::PiSwapConj:
                            img = spec_.customM * detail::piMatrix(x) * mi;
                            break;
                    }
                    break;
                }
            }
            int p = model_.basisParity(k);
            GMatrix zero(model_.repDim(), model_.repDim());
            try {
                AlgebraElement el = p == 0 ? detail::fromMatrixParts(model_, img, zero)
                                           : detail::fromMatrixParts(model_, zero, img);
                images_.push_back(std::move(el));
            } catch (const InternalError&) {
                throw PreconditionError("tau leaves the model at basis element " +
                                        model_.basisName(k));
            }
        }
    }

    void validate() {
        int d = model_.dim();
        // tau(h) = h on the full Cartan (even part; for q(n) also the odd part)
        std::vector<int> cart = model_.cartanIndices();
        std::vector<int> oddCart = model_.oddCartanIndices();
        auto isCartanIdx = [&](int k) {
            return std::find(cart.begin(), cart.end(), k) != cart.end() ||
                   std::find(oddCart.begin(), oddCart.end(), k) != oddCart.end();
        };
        for (int k : cart)
            for (auto& [j, c] : images_[k].coeffs)
                if (!isCartanIdx(j))
                    throw PreconditionError("tau does not stabilize the Cartan at " +
                                            model_.basisName(k));
        for (int k : oddCart)
            for (auto& [j, c] : images_[k].coeffs)
                if (!isCartanIdx(j))
                    throw PreconditionError("tau does not stabilize the Cartan at " +
                                            model_.basisName(k));

        // involution: tau(tau(x)) = x on the basis
        for (int k = 0; k < d; ++k) {
            if (!(apply(images_[k]) == AlgebraElement::basis(model_, k)))
                throw PreconditionError("tau^2 != id at basis element " + model_.basisName(k));
            if (!images_[k].isZero() &&
                model_.basisParity(images_[k].coeffs.begin()->first) != model_.basisParity(k))
                throw PreconditionError("tau does not preserve parity at " + model_.basisName(k));
        }

        // bracket preservation: tau[x,y] = [tau x, tau y] on all basis pairs
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < d; ++l) {
                AlgebraElement lhs = apply(superbracket(AlgebraElement::basis(model_, k),
                                                        AlgebraElement::basis(model_, l)));
                AlgebraElement rhs = superbracket(images_[k], images_[l]);
                if (!(lhs == rhs))
                    throw PreconditionError("tau breaks the superbracket at pair (" +
                                            model_.basisName(k) + ", " + model_.basisName(l) + ")");
            }

        // cache the Cartan action for tauWeight
        int nc = model_.numChars();
        cartanAction_ = GMatrix(nc, nc);
        for (int c = 0; c < nc; ++c) {
            int k = cart[c];
            for (auto& [j, coef] : images_[k].coeffs) {
                int dchar;
                if (model_.isTypeA()) {
                    dchar = j / model_.numChars();
                } else {
                    dchar = (j % (model_.n * model_.n)) / model_.n;
                }
                cartanAction_.at(c, dchar) += coef;
            }
        }

        // group-level compatibility: tau(Ad_g x) = Ad_{tauG(g)} tau(x) for
        // embedded simple-reflection generators
        for (const GMatrix& w : evenReflectionGenerators()) {
            GMatrix wi = evenGroupImage(w);
            for (int k = 0; k < d; ++k) {
                AlgebraElement lhs = apply(adjointAction(w, AlgebraElement::basis(model_, k)));
                AlgebraElement rhs = adjointAction(wi, images_[k]);
                if (!(lhs == rhs))
                    throw InternalError("group involution inconsistent with tau at " +
                                        model_.basisName(k));
            }
        }
    }

    std::vector<GMatrix> evenReflectionGenerators() const {
        std::vector<GMatrix> out;
        int rep = model_.family == Family::Q ? model_.n : model_.numChars();
        auto emit = [&](int c) {
            GMatrix w = GMatrix::identity(rep);
            w.at(c, c) = w.at(c + 1, c + 1) = GaussianRational(0);
            w.at(c, c + 1) = GaussianRational(1);
            w.at(c + 1, c) = GaussianRational(-1);
            out.push_back(std::move(w));
        };
        if (model_.family == Family::Q) {
            for (int c = 0; c + 1 < model_.n; ++c) emit(c);
        } else {
            for (int c = 0; c + 1 < model_.m; ++c) emit(c);
            for (int c = model_.m; c + 1 < model_.m + model_.n; ++c) emit(c);
        }
        return out;
    }
};

} // namespace endotype
