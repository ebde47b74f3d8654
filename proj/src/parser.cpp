#include "cga/parser.hpp"

#include <cctype>

#include "cga/char0.hpp"
#include "cga/decompose.hpp"

namespace cga {

namespace {

// ---- tokens ----------------------------------------------------------------

struct Token {
    enum Kind { integer, ident, sym, end } kind;
    std::string text;
    mpz_class value;
    std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace((unsigned char)c)) {
            ++i;
            continue;
        }
        if (std::isdigit((unsigned char)c)) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
            Token t{Token::integer, s.substr(i, j - i), mpz_class(s.substr(i, j - i)), i};
            out.push_back(std::move(t));
            i = j;
            continue;
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum((unsigned char)s[j]) || s[j] == '_')) ++j;
            out.push_back({Token::ident, s.substr(i, j - i), 0, i});
            i = j;
            continue;
        }
        if (std::string("+-*/^(),").find(c) != std::string::npos) {
            out.push_back({Token::sym, std::string(1, c), 0, i});
            ++i;
            continue;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({Token::end, "", 0, s.size()});
    return out;
}

// ---- expression AST ----------------------------------------------------------

struct Ast {
    enum Kind { num, ident, add, sub, mul, div, neg, pow, star, comm } kind;
    mpz_class value;            // num
    std::string name;           // ident
    long exponent = 0;          // pow / star multiplicity / comm depth
    std::vector<Ast> kids;
    explicit Ast(Kind k) : kind(k) {}
};

class Parser {
public:
    Parser(std::vector<Token> toks, bool nc_mode) : t_(std::move(toks)), nc_(nc_mode) {}

    Ast parse() {
        Ast e = expr();
        expect_end();
        return e;
    }

private:
    std::vector<Token> t_;
    std::size_t i_ = 0;
    bool nc_;

    const Token& peek() const { return t_[i_]; }
    Token take() { return t_[i_++]; }
    bool is_sym(const char* s) const { return peek().kind == Token::sym && peek().text == s; }
    void expect_sym(const char* s) {
        if (!is_sym(s)) throw parse_error(std::string("expected '") + s + "'", peek().pos);
        ++i_;
    }
    void expect_end() {
        if (peek().kind != Token::end) throw parse_error("trailing input", peek().pos);
    }

    Ast expr() {
        Ast lhs = term();
        while (is_sym("+") || is_sym("-")) {
            bool plus = peek().text == "+";
            ++i_;
            Ast rhs = term();
            Ast node{plus ? Ast::add : Ast::sub};
            node.kids = {std::move(lhs), std::move(rhs)};
            lhs = std::move(node);
        }
        return lhs;
    }

    bool starts_primary() const {
        return peek().kind == Token::integer || peek().kind == Token::ident || is_sym("(");
    }

    Ast term() {
        int negs = 0;
        while (is_sym("-")) {
            ++negs;
            ++i_;
        }
        Ast lhs = factor();
        while (true) {
            if (is_sym("*") || is_sym("/")) {
                bool mul = peek().text == "*";
                ++i_;
                Ast rhs = factor();
                Ast node{mul ? Ast::mul : Ast::div};
                node.kids = {std::move(lhs), std::move(rhs)};
                lhs = std::move(node);
            } else if (nc_ && starts_primary()) {
                // juxtaposition product in noncommutative expressions
                Ast rhs = factor();
                Ast node{Ast::mul};
                node.kids = {std::move(lhs), std::move(rhs)};
                lhs = std::move(node);
            } else {
                break;
            }
        }
        if (negs % 2) {
            Ast node{Ast::neg};
            node.kids = {std::move(lhs)};
            return node;
        }
        return lhs;
    }

    Ast factor() {
        Ast base = primary();
        while (is_sym("^")) {
            ++i_;
            bool negexp = false;
            if (is_sym("-")) {
                negexp = true;
                ++i_;
            }
            if (peek().kind != Token::integer)
                throw parse_error("exponent must be an integer literal", peek().pos);
            Token e = take();
            Ast node{Ast::pow};
            node.exponent = (negexp ? -1 : 1) * (long)e.value.get_si();
            node.kids = {std::move(base)};
            base = std::move(node);
        }
        return base;
    }

    Ast primary() {
        const Token& t = peek();
        if (t.kind == Token::integer) {
            Ast node{Ast::num};
            node.value = take().value;
            return node;
        }
        if (t.kind == Token::ident) {
            if (nc_ && t.text == "star") return star_call();
            if (nc_ && t.text == "comm") return comm_call();
            Ast node{Ast::ident};
            node.name = take().text;
            return node;
        }
        if (is_sym("(")) {
            ++i_;
            Ast node = expr();
            expect_sym(")");
            return node;
        }
        if (is_sym("-")) { // unary minus in factor position
            ++i_;
            Ast node{Ast::neg};
            node.kids = {factor()};
            return node;
        }
        throw parse_error("expected a value", t.pos);
    }

    Ast star_call() {
        take(); // star
        expect_sym("(");
        Ast node{Ast::star};
        node.kids.push_back(star_factor());
        while (is_sym("*")) {
            ++i_;
            node.kids.push_back(star_factor());
        }
        expect_sym(")");
        return node;
    }

    Ast star_factor() {
        Ast base = primary();
        long mult = 1;
        if (is_sym("^")) {
            ++i_;
            if (peek().kind != Token::integer)
                throw parse_error("star multiplicity must be an integer literal", peek().pos);
            mult = (long)take().value.get_si();
        }
        Ast node{Ast::pow};
        node.exponent = mult;
        node.kids = {std::move(base)};
        return node;
    }

    Ast comm_call() {
        take(); // comm
        expect_sym("(");
        Ast node{Ast::comm};
        node.kids.push_back(expr());
        expect_sym(",");
        node.kids.push_back(expr());
        expect_sym(",");
        if (peek().kind != Token::integer)
            throw parse_error("commutator depth must be an integer literal", peek().pos);
        node.exponent = (long)take().value.get_si();
        expect_sym(")");
        return node;
    }
};

// ---- evaluation --------------------------------------------------------------

std::map<std::string, FieldElement> constant_bindings(const FieldPtr& F) {
    std::map<std::string, FieldElement> out;
    for (std::size_t i = 0; i < F->tower_height(); ++i)
        out.emplace(*F->generator_name_of(i), F->generator(i));
    if (F->has_rho()) out.insert_or_assign("rho", F->rho());
    return out;
}

FieldElement eval_const(const Ast& a, const FieldPtr& F,
                        const std::map<std::string, FieldElement>& names) {
    switch (a.kind) {
        case Ast::num: return F->from_rational(mpq_class(a.value));
        case Ast::ident: {
            auto it = names.find(a.name);
            if (it == names.end())
                throw precondition_error("unknown constant '" + a.name + "' over " + F->describe());
            return it->second;
        }
        case Ast::add: return eval_const(a.kids[0], F, names) + eval_const(a.kids[1], F, names);
        case Ast::sub: return eval_const(a.kids[0], F, names) - eval_const(a.kids[1], F, names);
        case Ast::mul: return eval_const(a.kids[0], F, names) * eval_const(a.kids[1], F, names);
        case Ast::div: return eval_const(a.kids[0], F, names) / eval_const(a.kids[1], F, names);
        case Ast::neg: return -eval_const(a.kids[0], F, names);
        case Ast::pow: return eval_const(a.kids[0], F, names).pow((long long)a.exponent);
        default: throw precondition_error("star/comm are only meaningful in nc expressions");
    }
}

MultiPoly eval_poly(const Ast& a, const FieldPtr& F, const std::vector<std::string>& vars,
                    const std::map<std::string, FieldElement>& consts) {
    switch (a.kind) {
        case Ast::num:
            return MultiPoly::constant(F, vars, F->from_rational(mpq_class(a.value)));
        case Ast::ident: {
            for (std::size_t i = 0; i < vars.size(); ++i)
                if (vars[i] == a.name) return MultiPoly::variable(F, vars, i);
            auto it = consts.find(a.name);
            if (it == consts.end())
                throw precondition_error("unknown name '" + a.name + "' over " + F->describe());
            return MultiPoly::constant(F, vars, it->second);
        }
        case Ast::add: return eval_poly(a.kids[0], F, vars, consts) + eval_poly(a.kids[1], F, vars, consts);
        case Ast::sub: return eval_poly(a.kids[0], F, vars, consts) - eval_poly(a.kids[1], F, vars, consts);
        case Ast::mul: return eval_poly(a.kids[0], F, vars, consts) * eval_poly(a.kids[1], F, vars, consts);
        case Ast::div: {
            MultiPoly num = eval_poly(a.kids[0], F, vars, consts);
            MultiPoly den = eval_poly(a.kids[1], F, vars, consts);
            if (den.total_degree() != 0 || den.is_zero())
                throw precondition_error("division is only defined by nonzero constants");
            return num.scaled(den.coeff(MultiPoly::Exps(vars.size(), 0)).inverse());
        }
        case Ast::neg: return -eval_poly(a.kids[0], F, vars, consts);
        case Ast::pow: {
            if (a.exponent < 0) {
                MultiPoly base = eval_poly(a.kids[0], F, vars, consts);
                if (base.total_degree() != 0 || base.is_zero())
                    throw precondition_error("negative powers are only defined for constants");
                return MultiPoly::constant(
                    F, vars,
                    base.coeff(MultiPoly::Exps(vars.size(), 0)).pow((long long)a.exponent));
            }
            return eval_poly(a.kids[0], F, vars, consts).pow((unsigned)a.exponent);
        }
        default: throw precondition_error("star/comm are only meaningful in nc expressions");
    }
}

void collect_idents(const Ast& a, std::vector<std::string>& out) {
    if (a.kind == Ast::ident) out.push_back(a.name);
    for (const auto& k : a.kids) collect_idents(k, out);
}

} // namespace

// ---- field specs -------------------------------------------------------------

FieldPtr parse_field_spec(const std::string& spec) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < spec.size() && std::isspace((unsigned char)spec[i])) ++i;
    };
    skip_ws();
    FieldPtr F;
    if (spec.compare(i, 2, "QQ") == 0) {
        F = FieldDescriptor::rationals();
        i += 2;
    } else if (spec.compare(i, 3, "GF(") == 0) {
        i += 3;
        std::size_t j = spec.find(')', i);
        if (j == std::string::npos) throw parse_error("unterminated GF(", i);
        std::string num = spec.substr(i, j - i);
        if (num.empty()) throw parse_error("GF(p) needs a number", i);
        for (char c : num)
            if (!std::isdigit((unsigned char)c)) throw parse_error("GF(p) needs a number", i);
        F = FieldDescriptor::prime_field(std::stoull(num));
        i = j + 1;
    } else {
        throw parse_error("field spec must start with QQ or GF(p)", i);
    }
    skip_ws();
    while (i < spec.size()) {
        if (spec[i] != '.') throw parse_error("expected '.' before a field suffix", i);
        ++i;
        if (spec.compare(i, 3, "rho") == 0) {
            F = F->with_rho();
            i += 3;
        } else if (spec.compare(i, 4, "ext(") == 0) {
            i += 4;
            int depth = 1;
            std::size_t j = i;
            while (j < spec.size() && depth) {
                if (spec[j] == '(') ++depth;
                if (spec[j] == ')') --depth;
                ++j;
            }
            if (depth) throw parse_error("unterminated ext(", i);
            std::string body = spec.substr(i, j - i - 1);
            i = j;
            Parser p(tokenize(body), false);
            Ast ast = p.parse();
            auto consts = constant_bindings(F);
            std::vector<std::string> ids;
            collect_idents(ast, ids);
            std::string var;
            for (const auto& id : ids) {
                if (consts.count(id)) continue;
                if (var.empty()) var = id;
                else if (var != id)
                    throw precondition_error("extension polynomial must use one new variable, "
                                             "found '" + var + "' and '" + id + "'");
            }
            if (var.empty())
                throw precondition_error("extension polynomial has no variable");
            MultiPoly mp = eval_poly(ast, F, {var}, consts);
            std::vector<FieldElement> coeffs;
            for (unsigned k = 0; k <= mp.total_degree(); ++k)
                coeffs.push_back(mp.coeff({k}));
            F = F->extended(var, coeffs);
        } else {
            throw parse_error("unknown field suffix (expected rho or ext)", i);
        }
        skip_ws();
    }
    return F;
}

FieldElement parse_field_element(const std::string& text, const FieldPtr& F) {
    Parser p(tokenize(text), false);
    return eval_const(p.parse(), F, constant_bindings(F));
}

MultiPoly parse_multipoly(const std::string& text, const FieldPtr& F,
                          const std::vector<std::string>& vars) {
    Parser p(tokenize(text), false);
    return eval_poly(p.parse(), F, vars, constant_bindings(F));
}

// ---- Phi ---------------------------------------------------------------------

ParsedPhi parse_phi(const std::string& text, const FieldPtr& F) {
    Parser p(tokenize(text), false);
    Ast ast = p.parse();
    auto consts = constant_bindings(F);

    std::vector<std::string> ids;
    collect_idents(ast, ids);
    bool plain_xy = false;
    unsigned max_index = 0;
    bool has_z = false;
    for (const auto& id : ids) {
        if (id == "Z") has_z = true;
        else if (id == "X" || id == "Y") plain_xy = true;
        else if (id.size() > 1 && id[0] == 'X' && std::isdigit((unsigned char)id[1])) {
            unsigned idx = (unsigned)std::stoul(id.substr(1));
            if (idx == 0) throw precondition_error("variables are X1, X2, ...");
            max_index = std::max(max_index, idx);
        }
    }
    if (!has_z) throw precondition_error("the monic form must use the variable Z");
    if (plain_xy && max_index > 0)
        throw precondition_error("mix of X,Y and X1..Xn variable styles");
    std::vector<std::string> xvars;
    if (max_index > 0)
        for (unsigned k = 1; k <= max_index; ++k) xvars.push_back("X" + std::to_string(k));
    else
        xvars = {"X", "Y"};

    std::vector<std::string> all{"Z"};
    all.insert(all.end(), xvars.begin(), xvars.end());
    MultiPoly phi = eval_poly(ast, F, all, consts);
    if (phi.is_zero()) throw precondition_error("zero polynomial");
    unsigned d = phi.total_degree();
    if (!phi.is_homogeneous(d))
        throw precondition_error("the form must be homogeneous (every f_k of degree k)");
    MultiPoly::Exps zd(all.size(), 0);
    zd[0] = d;
    if (!phi.coeff(zd).is_one())
        throw precondition_error("the form must be monic of full degree in Z");

    ParsedPhi out;
    out.d = d;
    out.n = (unsigned)xvars.size();
    out.vars = xvars;
    out.phi = phi;
    for (unsigned k = 1; k <= d; ++k) out.f.emplace_back(F, xvars);
    for (const auto& [e, c] : phi.terms()) {
        unsigned zdeg = e[0];
        if (zdeg == d) continue;
        MultiPoly::Exps xe(e.begin() + 1, e.end());
        out.f[d - zdeg - 1].add_term(xe, -c);
    }
    return out;
}

std::string phi_to_string(const ParsedPhi& phi) { return phi.phi.str(); }

ClassifiedPhi classify_phi(const ParsedPhi& p, const FieldPtr& F) {
    ClassifiedPhi out{PhiFamily::general, std::nullopt, std::nullopt,
                      make_general_presentation(F, p.d, p.vars, p.f), ""};
    if (p.d != 3 || p.n != 2) {
        out.family_note = "only the two-variable cubic families have structure support";
        return out;
    }
    const MultiPoly& f1 = p.f[0];
    const MultiPoly& f2 = p.f[1];
    const MultiPoly& f3 = p.f[2];
    FieldElement alpha = f3.coeff({3, 0}), beta = f3.coeff({2, 1}), gamma = f3.coeff({1, 2}),
                 delta = f3.coeff({0, 3});

    if (F->characteristic() != 3) {
        if (!f1.coeff({1, 0}).is_zero()) {
            out.family_note = "f1 has an X term; the implemented family needs f1 = r*Y";
            return out;
        }
        if (!f2.coeff({2, 0}).is_zero()) {
            out.family_note = "f2 has an X^2 term; the implemented family needs f2 = e*X*Y + t*Y^2";
            return out;
        }
        if (alpha.is_zero()) {
            out.family_note = "alpha = 0 is outside this structure theory";
            return out;
        }
        if (!F->has_rho()) {
            out.family_note = "the field does not contain a primitive cube root of unity";
            return out;
        }
        out.family = PhiFamily::cubic_char_not3;
        out.cubic = make_cubic_presentation(F, f1.coeff({0, 1}), f2.coeff({0, 2}),
                                            f2.coeff({1, 1}), alpha, beta, gamma, delta);
        return out;
    }

    // characteristic 3
    if (!f1.is_zero()) {
        out.family_note = "the characteristic-3 family needs f1 = 0";
        return out;
    }
    if (alpha.is_zero()) {
        out.family_note = "alpha = 0 is outside this structure theory";
        return out;
    }
    bool f2_zero = f2.is_zero();
    bool f2_exy = !f2_zero && f2.coeff({2, 0}).is_zero() && f2.coeff({0, 2}).is_zero() &&
                  !f2.coeff({1, 1}).is_zero();
    bool f2_norm = f2.coeff({1, 1}).is_zero() && f2.coeff({2, 0}).is_one() &&
                   (-f2.coeff({0, 2})).is_one();
    if (f2_zero) {
        out.family = PhiFamily::cubic_char3;
        out.char3 = make_char3_e_zero(F, alpha, beta, gamma, delta);
    } else if (f2_exy) {
        out.family = PhiFamily::cubic_char3;
        out.char3 = normalize_char3(F, f2.coeff({1, 1}), alpha, beta, gamma, delta);
    } else if (f2_norm) {
        out.family = PhiFamily::cubic_char3;
        out.char3 = make_char3_normalized(F, alpha, beta, gamma, delta);
    } else {
        out.family_note = "f2 must be e*X*Y (raw) or X^2 - Y^2 (normalized) in characteristic 3";
    }
    return out;
}

PresentationContext make_presentation_context(const ClassifiedPhi& c) {
    PresentationContext ctx;
    if (c.family == PhiFamily::cubic_char_not3) {
        const CubicPresentation& p = *c.cubic;
        ctx.rs = char0_rewrite_system(p);
        auto G = ctx.rs->gens();
        ctx.names["x"] = NCPoly::generator(G, 0);
        ctx.names["y1"] = NCPoly::generator(G, 1);
        ctx.names["y2"] = NCPoly::generator(G, 2);
        ctx.names["y0"] = y0_expression(p);
        ctx.names["y"] = y0_expression(p) + NCPoly::generator(G, 1) + NCPoly::generator(G, 2);
        ctx.names["w"] = w_expression(p);
        auto inv = char0_invariants(p);
        ctx.names["r"] = NCPoly::constant(G, p.r);
        ctx.names["t"] = NCPoly::constant(G, p.t);
        ctx.names["e"] = NCPoly::constant(G, p.e);
        ctx.names["alpha"] = NCPoly::constant(G, p.alpha);
        ctx.names["beta"] = NCPoly::constant(G, p.beta);
        ctx.names["gamma"] = NCPoly::constant(G, p.gamma);
        ctx.names["delta"] = NCPoly::constant(G, p.delta);
        ctx.names["D1"] = NCPoly::constant(G, inv.D1);
        ctx.names["D2"] = NCPoly::constant(G, inv.D2);
        ctx.names["D"] = NCPoly::constant(G, inv.D);
        return ctx;
    }
    if (c.family == PhiFamily::cubic_char3) {
        const Char3Presentation& p = *c.char3;
        ctx.rs = char3_rewrite_system(p);
        auto G = ctx.rs->gens();
        ctx.names["x"] = NCPoly::generator(G, 0);
        ctx.names["y1"] = NCPoly::generator(G, 1);
        ctx.names["y2"] = NCPoly::generator(G, 2);
        ctx.names["w"] = char3_w_expression(p);
        ctx.names["alpha"] = NCPoly::constant(G, p.alpha);
        ctx.names["beta"] = NCPoly::constant(G, p.beta);
        ctx.names["gamma"] = NCPoly::constant(G, p.gamma);
        ctx.names["delta"] = NCPoly::constant(G, p.delta);
        if (p.branch == Char3Branch::e_zero)
            ctx.names["Delta"] = NCPoly::constant(G, char3_delta(p));
        else
            ctx.names["offset"] = NCPoly::constant(G, char3_offset(p));
        if (p.branch == Char3Branch::e_zero) {
            ctx.names["y0"] = NCPoly::constant(G, p.beta);
            ctx.names["y"] = NCPoly::generator(G, 2) - NCPoly::generator(G, 1);
            if (!p.beta.is_zero())
                ctx.names["z"] = NCPoly::word(G, {0, 1}).scaled(p.beta.inverse());
        } else {
            ctx.names["y0"] = NCPoly::constant(G, -p.beta);
            NCPoly y = NCPoly::generator(G, 1) + NCPoly::generator(G, 2);
            y.add_term({}, -p.beta);
            ctx.names["y"] = y;
        }
        return ctx;
    }
    throw precondition_error("no rewriting presentation for the general family");
}

namespace {
NCPoly eval_nc(const Ast& a, const PresentationContext& ctx, const FieldPtr& F,
               const std::map<std::string, FieldElement>& consts) {
    const GenSetPtr& G = ctx.rs->gens();
    switch (a.kind) {
        case Ast::num:
            return NCPoly::constant(G, F->from_rational(mpq_class(a.value)));
        case Ast::ident: {
            auto it = ctx.names.find(a.name);
            if (it != ctx.names.end()) return it->second;
            auto ct = consts.find(a.name);
            if (ct != consts.end()) return NCPoly::constant(G, ct->second);
            throw precondition_error("unknown name '" + a.name + "' in this presentation");
        }
        case Ast::add: return eval_nc(a.kids[0], ctx, F, consts) + eval_nc(a.kids[1], ctx, F, consts);
        case Ast::sub: return eval_nc(a.kids[0], ctx, F, consts) - eval_nc(a.kids[1], ctx, F, consts);
        case Ast::mul: return eval_nc(a.kids[0], ctx, F, consts) * eval_nc(a.kids[1], ctx, F, consts);
        case Ast::div: {
            NCPoly den = eval_nc(a.kids[1], ctx, F, consts);
            if (den.term_count() != 1 || !den.terms().begin()->first.empty())
                throw precondition_error("division is only defined by nonzero constants");
            return eval_nc(a.kids[0], ctx, F, consts).scaled(den.terms().begin()->second.inverse());
        }
        case Ast::neg: return -eval_nc(a.kids[0], ctx, F, consts);
        case Ast::pow: {
            if (a.exponent < 0) throw precondition_error("negative powers of nc elements");
            return eval_nc(a.kids[0], ctx, F, consts).pow((unsigned)a.exponent);
        }
        case Ast::star: {
            std::vector<std::pair<NCPoly, unsigned>> factors;
            for (const auto& k : a.kids) {
                if (k.exponent <= 0) throw precondition_error("star multiplicities must be >= 1");
                factors.emplace_back(eval_nc(k.kids[0], ctx, F, consts), (unsigned)k.exponent);
            }
            return star_product<NCPoly>(factors);
        }
        case Ast::comm: {
            if (a.exponent < 0) throw precondition_error("commutator depth must be >= 0");
            return iterated_commutator(eval_nc(a.kids[0], ctx, F, consts),
                                       eval_nc(a.kids[1], ctx, F, consts), (unsigned)a.exponent);
        }
    }
    throw precondition_error("unreachable");
}
} // namespace

NCPoly parse_nc_expression(const std::string& text, const PresentationContext& ctx,
                           const FieldPtr& F) {
    Parser p(tokenize(text), true);
    return eval_nc(p.parse(), ctx, F, constant_bindings(F));
}

} // namespace cga
