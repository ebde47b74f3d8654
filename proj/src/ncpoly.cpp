#include "cga/ncpoly.hpp"

#include <algorithm>

namespace cga {

GenSetPtr GeneratorSet::make(FieldPtr f, std::vector<Gen> gens) {
    if (gens.empty()) throw precondition_error("empty generator set");
    if (gens.size() > 255) throw precondition_error("too many generators");
    struct G : GeneratorSet {
        G(FieldPtr f, std::vector<Gen> g) : GeneratorSet(std::move(f), std::move(g)) {}
    };
    return std::make_shared<G>(std::move(f), std::move(gens));
}

std::size_t GeneratorSet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return i;
    throw precondition_error("no generator named " + name);
}

unsigned GeneratorSet::weight(const Word& w) const {
    unsigned s = 0;
    for (auto g : w) s += gens_[g].weight;
    return s;
}

int GeneratorSet::compare(const Word& a, const Word& b) const {
    unsigned wa = weight(a), wb = weight(b);
    if (wa != wb) return wa < wb ? -1 : 1;
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int ra = gens_[a[i]].rank, rb = gens_[b[i]].rank;
        if (ra != rb) return ra < rb ? -1 : 1;
    }
    return 0;
}

std::string GeneratorSet::word_str(const Word& w) const {
    if (w.empty()) return "1";
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t run = 1;
        while (i + run < w.size() && w[i + run] == w[i]) ++run;
        if (!out.empty()) out += "*";
        out += gens_[w[i]].name;
        if (run > 1) out += "^" + std::to_string(run);
        i += run;
    }
    return out;
}

NCPoly NCPoly::constant(const GenSetPtr& g, const FieldElement& c) {
    NCPoly p(g);
    p.add_term({}, c);
    return p;
}

NCPoly NCPoly::one(const GenSetPtr& g) { return constant(g, g->field()->one()); }

NCPoly NCPoly::generator(const GenSetPtr& g, std::size_t index) {
    if (index >= g->size()) throw precondition_error("generator index out of range");
    NCPoly p(g);
    p.add_term({(std::uint8_t)index}, g->field()->one());
    return p;
}

NCPoly NCPoly::word(const GenSetPtr& g, Word w) {
    NCPoly p(g);
    p.add_term(w, g->field()->one());
    return p;
}

bool NCPoly::is_one() const {
    return t_.size() == 1 && t_.begin()->first.empty() && t_.begin()->second.is_one();
}

void NCPoly::add_term(const Word& w, const FieldElement& c) {
    if (c.is_zero()) return;
    auto it = t_.find(w);
    if (it == t_.end()) {
        t_.emplace(w, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

FieldElement NCPoly::coeff(const Word& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? g_->field()->zero() : it->second;
}

const Word& NCPoly::leading_word() const {
    if (t_.empty()) throw precondition_error("leading word of zero polynomial");
    const Word* best = &t_.begin()->first;
    for (const auto& [w, c] : t_)
        if (g_->compare(w, *best) > 0) best = &w;
    return *best;
}

NCPoly NCPoly::operator-() const {
    NCPoly r(g_);
    for (const auto& [w, c] : t_) r.t_.emplace(w, -c);
    return r;
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    NCPoly r = *this;
    for (const auto& [w, c] : o.t_) r.add_term(w, c);
    return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
    NCPoly r = *this;
    for (const auto& [w, c] : o.t_) r.add_term(w, -c);
    return r;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
    NCPoly r(g_);
    for (const auto& [w1, c1] : t_)
        for (const auto& [w2, c2] : o.t_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add_term(w, c1 * c2);
        }
    return r;
}

bool NCPoly::operator==(const NCPoly& o) const {
    if (t_.size() != o.t_.size()) return false;
    auto it = t_.begin(), jt = o.t_.begin();
    for (; it != t_.end(); ++it, ++jt)
        if (it->first != jt->first || it->second != jt->second) return false;
    return true;
}

NCPoly NCPoly::scaled(const FieldElement& s) const {
    NCPoly r(g_);
    if (s.is_zero()) return r;
    for (const auto& [w, c] : t_) r.t_.emplace(w, c * s);
    return r;
}

NCPoly NCPoly::pow(unsigned e) const {
    NCPoly acc = one(g_);
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

std::string NCPoly::str() const {
    if (t_.empty()) return "0";
    std::vector<const std::pair<const Word, FieldElement>*> ts;
    for (const auto& t : t_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(),
              [&](auto* a, auto* b) { return g_->compare(a->first, b->first) > 0; });
    std::string out;
    for (auto* t : ts) {
        std::string ws = g_->word_str(t->first);
        std::string cs = t->second.str();
        std::string term;
        if (ws == "1") term = cs;
        else if (cs == "1") term = ws;
        else if (cs == "-1") term = "-" + ws;
        else {
            bool simple = cs.find_first_of("+* ") == std::string::npos &&
                          cs.find('-', 1) == std::string::npos;
            term = (simple ? cs : "(" + cs + ")") + "*" + ws;
        }
        if (out.empty()) out = term;
        else if (term[0] == '-') out += " - " + term.substr(1);
        else out += " + " + term;
    }
    return out;
}

} // namespace cga
