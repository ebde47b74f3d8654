#include "cga/multipoly.hpp"

#include <algorithm>
#include <numeric>

namespace cga {

MultiPoly MultiPoly::constant(const FieldPtr& f, const std::vector<std::string>& vars,
                              const FieldElement& c) {
    MultiPoly p(f, vars);
    p.add_term(Exps(vars.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(const FieldPtr& f, const std::vector<std::string>& vars,
                              std::size_t index) {
    if (index >= vars.size()) throw precondition_error("variable index out of range");
    MultiPoly p(f, vars);
    Exps e(vars.size(), 0);
    e[index] = 1;
    p.add_term(e, f->one());
    return p;
}

FieldElement MultiPoly::coeff(const Exps& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? f_->zero() : it->second;
}

void MultiPoly::add_term(const Exps& e, const FieldElement& c) {
    if (e.size() != vars_.size()) throw precondition_error("exponent vector length mismatch");
    if (c.is_zero()) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
        t_.emplace(e, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(f_, vars_);
    for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r(f_, vars_);
    for (const auto& [e1, c1] : t_)
        for (const auto& [e2, c2] : o.t_) {
            Exps e = e1;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (t_.size() != o.t_.size()) return false;
    auto it = t_.begin(), jt = o.t_.begin();
    for (; it != t_.end(); ++it, ++jt)
        if (it->first != jt->first || it->second != jt->second) return false;
    return true;
}

MultiPoly MultiPoly::scaled(const FieldElement& s) const {
    MultiPoly r(f_, vars_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : t_) r.t_.emplace(e, c * s);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly acc = constant(f_, vars_, f_->one());
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    MultiPoly r(f_, vars_);
    for (const auto& [e, c] : t_) {
        if (e[var] == 0) continue;
        Exps d = e;
        d[var] -= 1;
        r.add_term(d, c * f_->from_integer((long)e[var]));
    }
    return r;
}

FieldElement MultiPoly::eval(const std::vector<FieldElement>& xs) const {
    if (xs.size() != vars_.size()) throw precondition_error("wrong number of evaluation points");
    const FieldPtr& L = xs.empty() ? f_ : xs[0].field();
    FieldElement acc = L->zero();
    for (const auto& [e, c] : t_) {
        FieldElement term = c.embedded(L);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) term = term * xs[i];
        acc = acc + term;
    }
    return acc;
}

MultiPoly MultiPoly::subst(const std::vector<MultiPoly>& repl) const {
    if (repl.size() != vars_.size()) throw precondition_error("wrong number of substitutions");
    if (repl.empty()) return *this;
    const FieldPtr& f = repl[0].field();
    const auto& vars = repl[0].var_names();
    MultiPoly acc(f, vars);
    for (const auto& [e, c] : t_) {
        MultiPoly term = MultiPoly::constant(f, vars, c.embedded(f));
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) term = term * repl[i];
        acc = acc + term;
    }
    return acc;
}

MultiPoly MultiPoly::embedded(const FieldPtr& larger) const {
    MultiPoly r(larger, vars_);
    for (const auto& [e, c] : t_) r.t_.emplace(e, c.embedded(larger));
    return r;
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : t_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
    return d;
}

bool MultiPoly::is_homogeneous(unsigned deg) const {
    for (const auto& [e, c] : t_)
        if (std::accumulate(e.begin(), e.end(), 0u) != deg) return false;
    return true;
}

std::string MultiPoly::monomial_str(const std::vector<std::string>& vars, const Exps& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars[i];
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

std::string MultiPoly::str() const {
    if (t_.empty()) return "0";
    // graded-descending, then reverse-lex for stable readable output
    std::vector<const std::pair<const Exps, FieldElement>*> ts;
    for (const auto& t : t_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](auto* x, auto* y) {
        unsigned dx = std::accumulate(x->first.begin(), x->first.end(), 0u);
        unsigned dy = std::accumulate(y->first.begin(), y->first.end(), 0u);
        if (dx != dy) return dx > dy;
        return x->first > y->first;
    });
    std::string out;
    for (auto* t : ts) {
        std::string ms = monomial_str(vars_, t->first);
        std::string cs = t->second.str();
        std::string term;
        if (ms == "1") term = cs;
        else if (cs == "1") term = ms;
        else if (cs == "-1") term = "-" + ms;
        else {
            bool simple = cs.find_first_of("+* ") == std::string::npos &&
                          cs.find('-', 1) == std::string::npos;
            term = (simple ? cs : "(" + cs + ")") + "*" + ms;
        }
        if (out.empty()) out = term;
        else if (term[0] == '-') out += " - " + term.substr(1);
        else out += " + " + term;
    }
    return out;
}

} // namespace cga
