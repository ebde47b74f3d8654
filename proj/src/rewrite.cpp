#include "cga/rewrite.hpp"

namespace cga {

RewriteSystemPtr RewriteSystem::make(GenSetPtr g, std::vector<RewriteRule> rules) {
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const auto& r = rules[i];
        if (r.lhs.empty())
            throw precondition_error("rewrite rule with empty left-hand side");
        for (const auto& [w, c] : r.rhs.terms())
            if (g->compare(r.lhs, w) <= 0)
                throw precondition_error("rule " + std::to_string(i) + " is not order-decreasing: " +
                                         g->word_str(r.lhs) + " -> ... " + g->word_str(w));
    }
    struct S : RewriteSystem {
        S(GenSetPtr g, std::vector<RewriteRule> r) : RewriteSystem(std::move(g), std::move(r)) {}
    };
    return std::make_shared<S>(std::move(g), std::move(rules));
}

bool RewriteSystem::find_redex(const Word& w, std::size_t& pos, std::size_t& rule) const {
    for (std::size_t p = 0; p < w.size(); ++p) {
        for (std::size_t r = 0; r < rules_.size(); ++r) {
            const Word& l = rules_[r].lhs;
            if (p + l.size() > w.size()) continue;
            if (std::equal(l.begin(), l.end(), w.begin() + (long)p)) {
                pos = p;
                rule = r;
                return true;
            }
        }
    }
    return false;
}

void RewriteSystem::splice(std::map<Word, FieldElement>& acc, const Word& w, std::size_t pos,
                           std::size_t rule, const FieldElement& c) const {
    const auto& rr = rules_[rule];
    Word prefix(w.begin(), w.begin() + (long)pos);
    Word suffix(w.begin() + (long)(pos + rr.lhs.size()), w.end());
    for (const auto& [rw, rc] : rr.rhs.terms()) {
        Word nw = prefix;
        nw.insert(nw.end(), rw.begin(), rw.end());
        nw.insert(nw.end(), suffix.begin(), suffix.end());
        FieldElement nc = c * rc;
        auto it = acc.find(nw);
        if (it == acc.end()) acc.emplace(std::move(nw), nc);
        else {
            it->second = it->second + nc;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
}

NCPoly RewriteSystem::normal_form(const NCPoly& p) const {
    std::map<Word, FieldElement> work(p.terms().begin(), p.terms().end());
    NCPoly out(g_);
    while (!work.empty()) {
        auto it = work.begin();
        Word w = it->first;
        FieldElement c = it->second;
        work.erase(it);
        std::size_t pos, rule;
        if (!find_redex(w, pos, rule)) {
            out.add_term(w, c);
        } else {
            splice(work, w, pos, rule, c);
        }
    }
    return out;
}

std::vector<RewriteSystem::Ambiguity> RewriteSystem::overlap_check(std::size_t max_len) const {
    std::vector<Ambiguity> bad;
    auto check = [&](std::size_t i, std::size_t j, const Word& w, std::size_t pos_i,
                     std::size_t pos_j) {
        std::map<Word, FieldElement> acc1, acc2;
        FieldElement one = g_->field()->one();
        splice(acc1, w, pos_i, i, one);
        splice(acc2, w, pos_j, j, one);
        NCPoly p1(g_), p2(g_);
        for (auto& [ww, cc] : acc1) p1.add_term(ww, cc);
        for (auto& [ww, cc] : acc2) p2.add_term(ww, cc);
        NCPoly n1 = normal_form(p1), n2 = normal_form(p2);
        if (n1 != n2) bad.push_back(Ambiguity{i, j, w, n1, n2});
    };
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        const Word& li = rules_[i].lhs;
        for (std::size_t j = 0; j < rules_.size(); ++j) {
            const Word& lj = rules_[j].lhs;
            // overlap: proper suffix of li equals proper prefix of lj
            std::size_t maxo = std::min(li.size(), lj.size()) - 1;
            for (std::size_t o = 1; o <= maxo; ++o) {
                if (!std::equal(li.end() - (long)o, li.end(), lj.begin())) continue;
                Word w = li;
                w.insert(w.end(), lj.begin() + (long)o, lj.end());
                if (w.size() > max_len) continue;
                check(i, j, w, 0, li.size() - o);
            }
            // inclusion: lj occurs strictly inside li
            if (lj.size() < li.size()) {
                for (std::size_t p = 0; p + lj.size() <= li.size(); ++p) {
                    if (!std::equal(lj.begin(), lj.end(), li.begin() + (long)p)) continue;
                    if (li.size() <= max_len) check(i, j, li, 0, p);
                }
            }
            // two distinct rules with the same left-hand side
            if (i < j && li == lj && li.size() <= max_len) check(i, j, li, 0, 0);
        }
    }
    return bad;
}

} // namespace cga
