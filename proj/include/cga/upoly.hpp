#ifndef CGA_UPOLY_HPP
#define CGA_UPOLY_HPP

#include <vector>

#include "cga/field.hpp"

namespace cga {

// Dense univariate polynomial over a field tower.  Coefficients are stored
// little-endian and kept trimmed; the zero polynomial has no coefficients.
class UPoly {
public:
    explicit UPoly(FieldPtr f) : f_(std::move(f)) {}
    UPoly(FieldPtr f, std::vector<FieldElement> coeffs);

    static UPoly constant(const FieldElement& c);
    static UPoly variable(const FieldPtr& f); // the monomial X

    const FieldPtr& field() const { return f_; }
    int degree() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    FieldElement coeff(std::size_t i) const;
    const FieldElement& leading() const;

    UPoly operator-() const;
    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    bool operator==(const UPoly& o) const;
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    UPoly scaled(const FieldElement& s) const;
    UPoly monic() const; // divide by leading coefficient
    UPoly pow(unsigned e) const;
    UPoly derivative() const;
    FieldElement eval(const FieldElement& x) const;
    UPoly shifted(std::size_t k) const; // multiply by X^k

    std::string str(const std::string& var) const;

private:
    FieldPtr f_;
    std::vector<FieldElement> c_;
    void trim();
};

// quotient/remainder with b != 0
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
// monic gcd
UPoly gcd(const UPoly& a, const UPoly& b);
// resultant via the Sylvester matrix
FieldElement resultant(const UPoly& f, const UPoly& g);

} // namespace cga

#endif
