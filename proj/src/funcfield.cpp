#include "cga/funcfield.hpp"

namespace cga {

// ---- RationalFunction ------------------------------------------------------

RationalFunction::RationalFunction(UPoly num, UPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw precondition_error("zero denominator");
    reduce();
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = UPoly::constant(num_.field()->one());
        return;
    }
    UPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
    }
    FieldElement lc = den_.leading();
    if (!lc.is_one()) {
        FieldElement inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw precondition_error("division by zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw precondition_error("division by zero rational function");
    return RationalFunction(den_, num_);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_; // canonical form
}

std::string RationalFunction::str(const std::string& var) const {
    if (den_.is_one()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

// ---- FunctionField ---------------------------------------------------------

FuncFieldPtr FunctionField::rational(FieldPtr K, std::string var) {
    UPoly z(K);
    struct F : FunctionField {
        F(FieldPtr K, std::string var, UPoly z)
            : FunctionField(std::move(K), std::move(var), "", false, z, z) {}
    };
    return std::make_shared<F>(std::move(K), std::move(var), std::move(z));
}

FuncFieldPtr FunctionField::quadratic(FieldPtr K, std::string var, std::string svar,
                                      UPoly B, UPoly C) {
    struct F : FunctionField {
        F(FieldPtr K, std::string var, std::string svar, UPoly B, UPoly C)
            : FunctionField(std::move(K), std::move(var), std::move(svar), true,
                            std::move(B), std::move(C)) {}
    };
    return std::make_shared<F>(std::move(K), std::move(var), std::move(svar),
                               std::move(B), std::move(C));
}

FuncElem FunctionField::zero() const {
    return Element(shared_from_this(), RationalFunction(K_), RationalFunction(K_));
}

FuncElem FunctionField::one() const {
    return Element(shared_from_this(), RationalFunction::of_poly(UPoly::constant(K_->one())),
                   RationalFunction(K_));
}

FuncElem FunctionField::from_constant(const FieldElement& c) const {
    return Element(shared_from_this(), RationalFunction::of_poly(UPoly::constant(c)),
                   RationalFunction(K_));
}

FuncElem FunctionField::from_poly(const UPoly& p) const {
    return Element(shared_from_this(), RationalFunction::of_poly(p), RationalFunction(K_));
}

FuncElem FunctionField::from_parts(RationalFunction a, RationalFunction b) const {
    if (!has_s_ && !b.is_zero())
        throw precondition_error("no quadratic generator in this function field");
    return Element(shared_from_this(), std::move(a), std::move(b));
}

FuncElem FunctionField::variable() const {
    return Element(shared_from_this(), RationalFunction::of_poly(UPoly::variable(K_)),
                   RationalFunction(K_));
}

FuncElem FunctionField::s() const {
    if (!has_s_) throw precondition_error("no quadratic generator in this function field");
    return Element(shared_from_this(), RationalFunction(K_),
                   RationalFunction::of_poly(UPoly::constant(K_->one())));
}

// ---- FunctionField::Element ------------------------------------------------

namespace {
const FunctionField& need_same_ff(const FuncElem& x, const FuncElem& y) {
    if (!x.home() || !y.home()) throw precondition_error("uninitialized function field element");
    if (x.home().get() != y.home().get())
        throw precondition_error("function field mismatch");
    return *x.home();
}
} // namespace

FuncElem FuncElem::operator-() const {
    return Element(ff_, -a_, -b_);
}

FuncElem FuncElem::operator+(const Element& o) const {
    need_same_ff(*this, o);
    return Element(ff_, a_ + o.a_, b_ + o.b_);
}

FuncElem FuncElem::operator-(const Element& o) const {
    need_same_ff(*this, o);
    return Element(ff_, a_ - o.a_, b_ - o.b_);
}

FuncElem FuncElem::operator*(const Element& o) const {
    const FunctionField& F = need_same_ff(*this, o);
    // (a1 + b1 S)(a2 + b2 S) with S^2 = -(B S + C)
    RationalFunction a1a2 = a_ * o.a_;
    RationalFunction cross = a_ * o.b_ + b_ * o.a_;
    if (b_.is_zero() || o.b_.is_zero())
        return Element(ff_, std::move(a1a2), std::move(cross));
    RationalFunction b1b2 = b_ * o.b_;
    RationalFunction Bq = RationalFunction::of_poly(F.B());
    RationalFunction Cq = RationalFunction::of_poly(F.C());
    return Element(ff_, a1a2 - b1b2 * Cq, cross - b1b2 * Bq);
}

FuncElem FuncElem::inverse() const {
    if (is_zero()) throw precondition_error("division by zero");
    const FunctionField& F = *ff_;
    if (b_.is_zero())
        return Element(ff_, a_.inverse(), b_);
    // conjugate is a + b(-B - S); norm = a^2 - a b B + b^2 C lies in K(R)
    RationalFunction Bq = RationalFunction::of_poly(F.B());
    RationalFunction Cq = RationalFunction::of_poly(F.C());
    RationalFunction norm = a_ * a_ - a_ * b_ * Bq + b_ * b_ * Cq;
    if (norm.is_zero())
        throw precondition_error("degenerate curve quadratic: element has zero norm");
    RationalFunction ninv = norm.inverse();
    return Element(ff_, (a_ - b_ * Bq) * ninv, (-b_) * ninv);
}

FuncElem FuncElem::operator/(const Element& o) const {
    return *this * o.inverse();
}

bool FuncElem::operator==(const Element& o) const {
    need_same_ff(*this, o);
    return a_ == o.a_ && b_ == o.b_;
}

std::string FuncElem::str() const {
    const FunctionField& F = *ff_;
    if (is_zero()) return "0";
    std::string out;
    if (!a_.is_zero()) out = a_.str(F.var());
    if (!b_.is_zero()) {
        std::string bs = b_.str(F.var());
        std::string term = bs == "1" ? F.svar() : "(" + bs + ")*" + F.svar();
        out = out.empty() ? term : out + " + " + term;
    }
    return out;
}

} // namespace cga
