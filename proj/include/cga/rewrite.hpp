#ifndef CGA_REWRITE_HPP
#define CGA_REWRITE_HPP

#include "cga/ncpoly.hpp"

namespace cga {

struct RewriteRule {
    Word lhs;    // a single word
    NCPoly rhs;  // every monomial strictly below lhs in the monomial order
};

class RewriteSystem;
using RewriteSystemPtr = std::shared_ptr<const RewriteSystem>;

// An order-decreasing word rewriting system.  Reduction terminates because
// each step replaces a monomial by strictly smaller ones; confluence is
// audited empirically with overlap_check.
class RewriteSystem : public std::enable_shared_from_this<RewriteSystem> {
public:
    static RewriteSystemPtr make(GenSetPtr g, std::vector<RewriteRule> rules);

    const GenSetPtr& gens() const { return g_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }

    NCPoly normal_form(const NCPoly& p) const;

    struct Ambiguity {
        std::size_t rule_i, rule_j;
        Word word;
        NCPoly nf_first, nf_second;
    };
    // Reduce every overlap/inclusion ambiguity of length <= max_len both
    // ways; returns the ones whose normal forms differ.
    std::vector<Ambiguity> overlap_check(std::size_t max_len) const;

private:
    GenSetPtr g_;
    std::vector<RewriteRule> rules_;
    RewriteSystem(GenSetPtr g, std::vector<RewriteRule> r)
        : g_(std::move(g)), rules_(std::move(r)) {}

    // c * prefix * rhs(rule) * suffix added into acc
    void splice(std::map<Word, FieldElement>& acc, const Word& w, std::size_t pos,
                std::size_t rule, const FieldElement& c) const;
    bool find_redex(const Word& w, std::size_t& pos, std::size_t& rule) const;
};

// Element of the quotient algebra presented by a rewrite system; stored in
// normal form, so equality is coefficient-wise comparison.
class QuotientElement {
public:
    QuotientElement(RewriteSystemPtr rs, const NCPoly& p)
        : rs_(std::move(rs)), p_(rs_->normal_form(p)) {}

    const NCPoly& poly() const { return p_; }
    const RewriteSystemPtr& system() const { return rs_; }
    bool is_zero() const { return p_.is_zero(); }
    bool is_one() const { return p_.is_one(); }

    QuotientElement operator-() const { return {rs_, -p_}; }
    QuotientElement operator+(const QuotientElement& o) const { return {rs_, p_ + o.p_}; }
    QuotientElement operator-(const QuotientElement& o) const { return {rs_, p_ - o.p_}; }
    QuotientElement operator*(const QuotientElement& o) const { return {rs_, p_ * o.p_}; }
    QuotientElement scaled(const FieldElement& s) const { return {rs_, p_.scaled(s)}; }
    bool operator==(const QuotientElement& o) const { return p_ == o.p_; }
    bool operator!=(const QuotientElement& o) const { return !(*this == o); }

    std::string str() const { return p_.str(); }

private:
    RewriteSystemPtr rs_;
    NCPoly p_;
};

} // namespace cga

#endif
