#ifndef CGA_SYMBOL_HPP
#define CGA_SYMBOL_HPP

#include <memory>
#include <string>
#include <vector>

#include "cga/funcfield.hpp"
#include "cga/matrix.hpp"
#include "cga/ncpoly.hpp"

namespace cga {

enum class SymbolKind { root_of_unity, artin_schreier };

// Uniform access to the scalar field of a symbol algebra: exact tower
// elements for concrete algebras, function-field elements for the oracle over
// F(E).
template <class K>
struct ScalarTraits;

template <>
struct ScalarTraits<FieldElement> {
    static FieldElement zero(const FieldElement& s) { return s.field()->zero(); }
    static FieldElement one(const FieldElement& s) { return s.field()->one(); }
    static FieldElement from_int(const FieldElement& s, long n) { return s.field()->from_integer(n); }
    static std::uint64_t characteristic(const FieldElement& s) { return s.field()->characteristic(); }
    static std::string str(const FieldElement& s) { return s.str(); }
    static std::string field_str(const FieldElement& s) { return s.field()->describe(); }
};

template <>
struct ScalarTraits<FuncElem> {
    static FuncElem zero(const FuncElem& s) { return s.home()->zero(); }
    static FuncElem one(const FuncElem& s) { return s.home()->one(); }
    static FuncElem from_int(const FuncElem& s, long n) {
        return s.home()->from_constant(s.home()->coeff_field()->from_integer(n));
    }
    static std::uint64_t characteristic(const FuncElem& s) {
        return s.home()->coeff_field()->characteristic();
    }
    static std::string str(const FuncElem& s) { return s.str(); }
    static std::string field_str(const FuncElem& s) {
        const auto& F = *s.home();
        std::string out = F.coeff_field()->describe() + "(" + F.var();
        if (F.has_s()) out += ", " + F.svar();
        return out + ")";
    }
};

// Structure-constant model of a degree-d symbol algebra:
//   root_of_unity:  u^d = a, v^d = b, v u = rho u v        ((a,b)_{d,K})
//   artin_schreier: u^p = u + a, v^p = b, v u = (u+1) v     ([a,b)_{p,K})
// Elements are coefficient vectors over the basis u^i v^j, 0 <= i,j < d.
template <class K>
class SymbolAlgebra : public std::enable_shared_from_this<SymbolAlgebra<K>> {
public:
    using Ptr = std::shared_ptr<const SymbolAlgebra<K>>;

    class Element;

    static Ptr root_of_unity(unsigned d, const K& a, const K& b, const K& rho) {
        if (a.is_zero() || b.is_zero())
            throw precondition_error("symbol algebra parameters must be nonzero");
        K r = rho;
        for (unsigned k = 1; k < d; ++k) {
            if (r.is_one()) throw precondition_error("rho is not a primitive d-th root of unity");
            r = r * rho;
        }
        if (!r.is_one()) throw precondition_error("rho is not a primitive d-th root of unity");
        return Ptr(new SymbolAlgebra(SymbolKind::root_of_unity, d, a, b, rho));
    }

    static Ptr artin_schreier(unsigned p, const K& a, const K& b) {
        if (ScalarTraits<K>::characteristic(a) != p)
            throw precondition_error("Artin-Schreier symbol requires characteristic equal to the degree");
        return Ptr(new SymbolAlgebra(SymbolKind::artin_schreier, p, a, b,
                                     ScalarTraits<K>::one(a)));
    }

    SymbolKind kind() const { return kind_; }
    unsigned degree() const { return d_; }
    const K& a() const { return a_; }
    const K& b() const { return b_; }
    const K& rho() const { return rho_; }

    Element zero() const {
        return Element(this->shared_from_this(),
                       std::vector<K>(d_ * d_, ScalarTraits<K>::zero(a_)));
    }
    Element one() const { return basis(0, 0); }
    Element u() const { return basis(1, 0); }
    Element v() const { return basis(0, 1); }
    Element basis(unsigned i, unsigned j) const {
        Element e = zero();
        e.c_[i * d_ + j] = ScalarTraits<K>::one(a_);
        return e;
    }
    Element from_scalar(const K& s) const {
        Element e = zero();
        e.c_[0] = s;
        return e;
    }

    // u^-1 and v^-1 in closed form: u^-1 = a^-1 u^{d-1} (root-of-unity kind),
    // v^-1 = b^-1 v^{d-1} in both kinds.
    Element v_inverse() const {
        Element e = zero();
        e.c_[0 * d_ + (d_ - 1)] = b_.inverse();
        return e;
    }
    Element u_inverse() const {
        if (kind_ != SymbolKind::root_of_unity)
            throw precondition_error("closed-form u inverse only for the root-of-unity kind");
        Element e = zero();
        e.c_[(d_ - 1) * d_ + 0] = a_.inverse();
        return e;
    }

    class Element {
    public:
        Element() = default;

        const Ptr& algebra() const { return alg_; }
        const std::vector<K>& coords() const { return c_; }
        const K& coord(unsigned i, unsigned j) const { return c_[i * alg_->degree() + j]; }

        bool is_zero() const {
            for (const auto& x : c_)
                if (!x.is_zero()) return false;
            return true;
        }

        Element operator-() const {
            Element r = *this;
            for (auto& x : r.c_) x = ScalarTraits<K>::zero(x) - x;
            return r;
        }
        Element operator+(const Element& o) const {
            check(o);
            Element r = *this;
            for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
            return r;
        }
        Element operator-(const Element& o) const {
            check(o);
            Element r = *this;
            for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
            return r;
        }
        Element operator*(const Element& o) const {
            check(o);
            return alg_->mul(*this, o);
        }
        Element scaled(const K& s) const {
            Element r = *this;
            for (auto& x : r.c_) x = x * s;
            return r;
        }
        Element pow(unsigned e) const {
            Element acc = alg_->one();
            for (unsigned i = 0; i < e; ++i) acc = acc * *this;
            return acc;
        }
        bool operator==(const Element& o) const {
            check(o);
            for (std::size_t i = 0; i < c_.size(); ++i)
                if (!(c_[i] - o.c_[i]).is_zero()) return false;
            return true;
        }
        bool operator!=(const Element& o) const { return !(*this == o); }

        std::string str() const {
            unsigned d = alg_->degree();
            std::string out;
            for (unsigned i = 0; i < d; ++i)
                for (unsigned j = 0; j < d; ++j) {
                    const K& c = c_[i * d + j];
                    if (c.is_zero()) continue;
                    std::string mono;
                    if (i) mono += i == 1 ? "u" : "u^" + std::to_string(i);
                    if (j) mono += std::string(i ? "*" : "") + (j == 1 ? "v" : "v^" + std::to_string(j));
                    if (mono.empty()) mono = "1";
                    std::string term = "(" + ScalarTraits<K>::str(c) + ")*" + mono;
                    out += out.empty() ? term : " + " + term;
                }
            return out.empty() ? "0" : out;
        }

    private:
        friend class SymbolAlgebra;
        Element(Ptr alg, std::vector<K> c) : alg_(std::move(alg)), c_(std::move(c)) {}
        Ptr alg_;
        std::vector<K> c_;
        void check(const Element& o) const {
            if (alg_.get() != o.alg_.get())
                throw precondition_error("symbol algebra spec mismatch");
        }
    };

    // Left-multiplication matrix of s in the u^i v^j basis; gives inverses by
    // a linear solve and supports centrality tests.
    Matrix<K> regular_rep(const Element& s) const {
        unsigned n = d_ * d_;
        Matrix<K> m(n, n, ScalarTraits<K>::zero(a_));
        for (unsigned i = 0; i < d_; ++i)
            for (unsigned j = 0; j < d_; ++j) {
                Element col = mul(s, basis(i, j));
                for (unsigned k = 0; k < n; ++k) m.at(k, i * d_ + j) = col.coords()[k];
            }
        return m;
    }

    Element invert(const Element& s) const {
        auto inv = try_inverse(regular_rep(s), ScalarTraits<K>::zero(a_), ScalarTraits<K>::one(a_));
        if (!inv) throw precondition_error("symbol algebra element is not invertible");
        // column of the identity basis vector
        std::vector<K> c(d_ * d_, ScalarTraits<K>::zero(a_));
        for (unsigned k = 0; k < d_ * d_; ++k) c[k] = inv->at(k, 0);
        return Element(this->shared_from_this(), std::move(c));
    }

    bool is_central(const Element& s) const {
        Element uu = u(), vv = v();
        return (s * uu - uu * s).is_zero() && (s * vv - vv * s).is_zero();
    }

    std::string render() const {
        std::string open = kind_ == SymbolKind::root_of_unity ? "(" : "[";
        return open + ScalarTraits<K>::str(a_) + ", " + ScalarTraits<K>::str(b_) + ")_{" +
               std::to_string(d_) + ", " + ScalarTraits<K>::field_str(a_) + "}";
    }

private:
    SymbolKind kind_;
    unsigned d_;
    K a_, b_, rho_;

    SymbolAlgebra(SymbolKind kind, unsigned d, K a, K b, K rho)
        : kind_(kind), d_(d), a_(std::move(a)), b_(std::move(b)), rho_(std::move(rho)) {}

    // reduce u^e (e <= 2(d-1)) to coefficients of u^0..u^{d-1}
    std::vector<K> u_power(unsigned e) const {
        std::vector<K> c(std::max(e + 1, d_), ScalarTraits<K>::zero(a_));
        c[e] = ScalarTraits<K>::one(a_);
        for (unsigned deg = (unsigned)c.size() - 1; deg >= d_; --deg) {
            K top = c[deg];
            if (!top.is_zero()) {
                c[deg] = ScalarTraits<K>::zero(a_);
                if (kind_ == SymbolKind::root_of_unity) {
                    c[deg - d_] = c[deg - d_] + top * a_; // u^d = a
                } else {
                    // u^p = u + a
                    c[deg - d_ + 1] = c[deg - d_ + 1] + top;
                    c[deg - d_] = c[deg - d_] + top * a_;
                }
            }
            if (deg == d_) break;
        }
        c.resize(d_, ScalarTraits<K>::zero(a_));
        return c;
    }

    Element mul(const Element& x, const Element& y) const {
        Element out = zero();
        for (unsigned i1 = 0; i1 < d_; ++i1)
            for (unsigned j1 = 0; j1 < d_; ++j1) {
                const K& c1 = x.coords()[i1 * d_ + j1];
                if (c1.is_zero()) continue;
                for (unsigned i2 = 0; i2 < d_; ++i2)
                    for (unsigned j2 = 0; j2 < d_; ++j2) {
                        const K& c2 = y.coords()[i2 * d_ + j2];
                        if (c2.is_zero()) continue;
                        accumulate(out, i1, j1, i2, j2, c1 * c2);
                    }
            }
        return out;
    }

    void accumulate(Element& out, unsigned i1, unsigned j1, unsigned i2, unsigned j2,
                    const K& c) const {
        // (u^{i1} v^{j1})(u^{i2} v^{j2}): move v^{j1} across u^{i2}
        unsigned j = j1 + j2;
        K jfac = ScalarTraits<K>::one(a_);
        if (j >= d_) {
            j -= d_;
            jfac = b_; // v^d = b
        }
        if (kind_ == SymbolKind::root_of_unity) {
            // v^{j1} u^{i2} = rho^{j1 i2} u^{i2} v^{j1}
            K coeff = c * jfac;
            unsigned tw = (j1 * i2) % d_;
            for (unsigned t = 0; t < tw; ++t) coeff = coeff * rho_;
            unsigned i = i1 + i2;
            if (i >= d_) {
                i -= d_;
                coeff = coeff * a_;
            }
            out.c_[i * d_ + j] = out.c_[i * d_ + j] + coeff;
        } else {
            // v^{j1} u^{i2} = (u + j1)^{i2} v^{j1}
            K base = c * jfac;
            // binomial expansion of (u + j1)^{i2}
            for (unsigned m = 0; m <= i2; ++m) {
                unsigned long binom = 1;
                for (unsigned t = 0; t < m; ++t) binom = binom * (i2 - t) / (t + 1);
                K coeff = base * ScalarTraits<K>::from_int(a_, (long)binom);
                K jp = ScalarTraits<K>::from_int(a_, (long)j1);
                for (unsigned t = 0; t < i2 - m; ++t) coeff = coeff * jp;
                if (coeff.is_zero()) continue;
                auto up = u_power(i1 + m);
                for (unsigned i = 0; i < d_; ++i) {
                    if (up[i].is_zero()) continue;
                    out.c_[i * d_ + j] = out.c_[i * d_ + j] + coeff * up[i];
                }
            }
        }
    }
};

using SymbolAlgebraF = SymbolAlgebra<FieldElement>;
using SymbolAlgebraFF = SymbolAlgebra<FuncElem>;

struct CubicPresentation;

// Independent oracle for the characteristic != 3 identities: the algebra
// (alpha, S) over the quadratic extension of K(R) cut out by the curve
// relation, together with the generator images
//   x -> u,  y1 -> v,  y2 -> u (R - rho^2 (D1/3a) u - (D2/9a) u^-1) v^-1.
// Construction verifies that the defining relations are preserved and that
// the image of w is R.
struct PhiOracle {
    FuncFieldPtr function_field;
    SymbolAlgebraFF::Ptr algebra;
    SymbolAlgebraFF::Element img_x, img_y1, img_y2;

    // Evaluate a noncommutative polynomial in x, y1, y2 (generator indices
    // 0, 1, 2) through the homomorphism.
    SymbolAlgebraFF::Element eval(const NCPoly& p) const;
};

PhiOracle phi_map(const CubicPresentation& pres);

// Rank over the base field of the 27 images of x^i y1^j w^k, 0 <= i,j,k <= 2.
std::size_t phi_monomial_rank(const CubicPresentation& pres);

} // namespace cga

#endif
