#ifndef CGA_MULTIPOLY_HPP
#define CGA_MULTIPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "cga/field.hpp"

namespace cga {

// Sparse commutative polynomial in a fixed list of variables over a field
// tower.  Used for curve models, the monic-form parser, change of variables
// and representation checking.
class MultiPoly {
public:
    using Exps = std::vector<unsigned>;

    MultiPoly() = default; // empty shell; assign before use

    MultiPoly(FieldPtr f, std::vector<std::string> vars)
        : f_(std::move(f)), vars_(std::move(vars)) {}

    static MultiPoly constant(const FieldPtr& f, const std::vector<std::string>& vars,
                              const FieldElement& c);
    static MultiPoly variable(const FieldPtr& f, const std::vector<std::string>& vars,
                              std::size_t index);

    const FieldPtr& field() const { return f_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& var_names() const { return vars_; }
    const std::map<Exps, FieldElement>& terms() const { return t_; }

    bool is_zero() const { return t_.empty(); }
    FieldElement coeff(const Exps& e) const;
    void add_term(const Exps& e, const FieldElement& c);

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly scaled(const FieldElement& s) const;
    MultiPoly pow(unsigned e) const;
    MultiPoly derivative(std::size_t var) const;

    FieldElement eval(const std::vector<FieldElement>& xs) const;
    // Substitute each variable by a polynomial (over the same field/vars of
    // the replacements).
    MultiPoly subst(const std::vector<MultiPoly>& repl) const;
    MultiPoly embedded(const FieldPtr& larger) const;

    unsigned total_degree() const; // 0 for the zero polynomial
    bool is_homogeneous(unsigned deg) const;

    static std::string monomial_str(const std::vector<std::string>& vars, const Exps& e);
    std::string str() const;

private:
    FieldPtr f_;
    std::vector<std::string> vars_;
    std::map<Exps, FieldElement> t_;
};

} // namespace cga

#endif
