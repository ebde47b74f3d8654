#include "cga/upoly.hpp"

#include "cga/matrix.hpp"

namespace cga {

UPoly::UPoly(FieldPtr f, std::vector<FieldElement> coeffs)
    : f_(std::move(f)), c_(std::move(coeffs)) {
    trim();
}

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::constant(const FieldElement& c) {
    return UPoly(c.field(), {c});
}

UPoly UPoly::variable(const FieldPtr& f) {
    return UPoly(f, {f->zero(), f->one()});
}

bool UPoly::is_one() const { return c_.size() == 1 && c_[0].is_one(); }

FieldElement UPoly::coeff(std::size_t i) const {
    if (i < c_.size()) return c_[i];
    return f_->zero();
}

const FieldElement& UPoly::leading() const {
    if (c_.empty()) throw precondition_error("leading coefficient of zero polynomial");
    return c_.back();
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<FieldElement> r(std::max(c_.size(), o.c_.size()), f_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return UPoly(f_, std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const {
    std::vector<FieldElement> r(std::max(c_.size(), o.c_.size()), f_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] - o.c_[i];
    return UPoly(f_, std::move(r));
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly(f_);
    std::vector<FieldElement> r(c_.size() + o.c_.size() - 1, f_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return UPoly(f_, std::move(r));
}

bool UPoly::operator==(const UPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

UPoly UPoly::scaled(const FieldElement& s) const {
    UPoly r = *this;
    for (auto& x : r.c_) x = x * s;
    r.trim();
    return r;
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

UPoly UPoly::pow(unsigned e) const {
    UPoly acc = constant(f_->one());
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly(f_);
    std::vector<FieldElement> r;
    r.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r.push_back(c_[i] * f_->from_integer((long)i));
    return UPoly(f_, std::move(r));
}

FieldElement UPoly::eval(const FieldElement& x) const {
    FieldElement acc = f_->zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

UPoly UPoly::shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<FieldElement> r(k, f_->zero());
    r.insert(r.end(), c_.begin(), c_.end());
    return UPoly(f_, std::move(r));
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        std::string cs = c_[i].str();
        std::string vp = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        std::string term;
        if (i == 0) term = cs;
        else if (cs == "1") term = vp;
        else if (cs == "-1") term = "-" + vp;
        else {
            bool simple = cs.find_first_of("+* ") == std::string::npos &&
                          cs.find('-', 1) == std::string::npos;
            term = (simple ? cs : "(" + cs + ")") + "*" + vp;
        }
        if (out.empty()) out = term;
        else if (term[0] == '-') out += " - " + term.substr(1);
        else out += " + " + term;
    }
    return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw precondition_error("polynomial division by zero");
    const FieldPtr& f = a.field();
    UPoly q(f), r = a;
    FieldElement lcinv = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        FieldElement c = r.leading() * lcinv;
        std::size_t shift = (std::size_t)(r.degree() - b.degree());
        UPoly t = UPoly::constant(c).shifted(shift);
        q = q + t;
        r = r - t * b;
    }
    return {q, r};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = divmod(x, y);
        x = y;
        y = r;
    }
    return x.monic();
}

FieldElement resultant(const UPoly& f, const UPoly& g) {
    const FieldPtr& K = f.field();
    if (f.is_zero() || g.is_zero()) return K->zero();
    int n = f.degree(), m = g.degree();
    if (n == 0) return f.coeff(0).pow((long long)m);
    if (m == 0) return g.coeff(0).pow((long long)n);
    std::size_t sz = (std::size_t)(n + m);
    Matrix<FieldElement> s(sz, sz, K->zero());
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j)
            s.at((std::size_t)row, (std::size_t)(row + j)) = f.coeff((std::size_t)(n - j));
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j)
            s.at((std::size_t)(m + row), (std::size_t)(row + j)) = g.coeff((std::size_t)(m - j));
    return det(s, K->zero(), K->one());
}

} // namespace cga
