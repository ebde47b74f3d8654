#ifndef CGA_FUNCFIELD_HPP
#define CGA_FUNCFIELD_HPP

#include <memory>
#include <string>

#include "cga/upoly.hpp"

namespace cga {

// Rational function num/den over a field tower, kept in lowest terms with a
// monic denominator.
class RationalFunction {
public:
    explicit RationalFunction(FieldPtr f)
        : num_(UPoly(f)), den_(f ? UPoly::constant(f->one()) : UPoly(f)) {}
    RationalFunction(UPoly num, UPoly den);

    static RationalFunction of_poly(const UPoly& p) {
        return RationalFunction(p, UPoly::constant(p.field()->one()));
    }

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    const FieldPtr& field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction inverse() const;
    bool operator==(const RationalFunction& o) const;
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    std::string str(const std::string& var) const;

private:
    UPoly num_, den_;
    void reduce();
};

class FunctionField;
using FuncFieldPtr = std::shared_ptr<const FunctionField>;

// K(R), or its quadratic extension K(R)[S]/(S^2 + B(R) S + C(R)) when a curve
// relation is attached.  Elements keep S-degree <= 1 by construction.
class FunctionField : public std::enable_shared_from_this<FunctionField> {
public:
    static FuncFieldPtr rational(FieldPtr K, std::string var);
    static FuncFieldPtr quadratic(FieldPtr K, std::string var, std::string svar,
                                  UPoly B, UPoly C);

    const FieldPtr& coeff_field() const { return K_; }
    bool has_s() const { return has_s_; }
    const std::string& var() const { return var_; }
    const std::string& svar() const { return svar_; }
    const UPoly& B() const { return B_; }
    const UPoly& C() const { return C_; }

    class Element;
    Element zero() const;
    Element one() const;
    Element from_constant(const FieldElement& c) const;
    Element from_poly(const UPoly& p) const;
    Element from_parts(RationalFunction a, RationalFunction b) const;
    Element variable() const; // R
    Element s() const;        // S (requires has_s)

    class Element {
    public:
        Element() = default;

        const RationalFunction& a() const { return a_; } // coefficient of 1
        const RationalFunction& b() const { return b_; } // coefficient of S
        const FuncFieldPtr& home() const { return ff_; }

        bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
        bool is_one() const { return a_.is_one() && b_.is_zero(); }

        Element operator-() const;
        Element operator+(const Element& o) const;
        Element operator-(const Element& o) const;
        Element operator*(const Element& o) const;
        Element operator/(const Element& o) const;
        Element inverse() const;
        bool operator==(const Element& o) const;
        bool operator!=(const Element& o) const { return !(*this == o); }

        std::string str() const;

    private:
        friend class FunctionField;
        Element(FuncFieldPtr ff, RationalFunction a, RationalFunction b)
            : ff_(std::move(ff)), a_(std::move(a)), b_(std::move(b)) {}
        FuncFieldPtr ff_;
        RationalFunction a_{FieldPtr()}, b_{FieldPtr()};
    };

private:
    FieldPtr K_;
    std::string var_, svar_;
    bool has_s_ = false;
    UPoly B_, C_;
    FunctionField(FieldPtr K, std::string var, std::string svar, bool has_s, UPoly B, UPoly C)
        : K_(std::move(K)), var_(std::move(var)), svar_(std::move(svar)),
          has_s_(has_s), B_(std::move(B)), C_(std::move(C)) {}
};

using FuncElem = FunctionField::Element;

} // namespace cga

#endif
