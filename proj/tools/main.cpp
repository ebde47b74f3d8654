// cga: exact computations in generalized Clifford algebras of binary cubic
// forms -- invariants, curves, identity verification, simple-image
// classification and representation checking.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "cga/decompose.hpp"
#include "cga/parser.hpp"
#include "cga/report.hpp"

using namespace cga;

namespace {

struct Options {
    std::string field_spec = "QQ.rho";
    std::string phi;
    std::vector<std::string> ext;
    std::string point;
    std::string matrices_file;
    std::string nc_expr;
    bool json = false;
    bool assert_alpha_not_cube = false;
    std::size_t max_len = 8;
};

// The --ext chain goes through the mini-language so generator naming stays
// uniform with --field.
FieldPtr extended_field(const std::string& field_spec, const std::vector<std::string>& ext) {
    std::string spec = field_spec;
    for (const auto& e : ext) spec += ".ext(" + e + ")";
    return parse_field_spec(spec);
}

std::vector<FieldElement> parse_point(const std::string& text, const FieldPtr& L) {
    std::vector<FieldElement> out;
    std::string cur;
    int depth = 0;
    auto flush = [&] {
        if (cur.empty()) throw precondition_error("empty point coordinate");
        out.push_back(parse_field_element(cur, L));
        cur.clear();
    };
    for (char c : text) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == ',' && depth == 0) {
            flush();
            continue;
        }
        cur += c;
    }
    flush();
    return out;
}

void emit(const Json& envelope, const std::string& text, bool as_json) {
    if (as_json)
        std::cout << envelope.dump(2) << "\n";
    else
        std::cout << text;
}

ClassifiedPhi classify_or_refuse(const Options& opt, const FieldPtr& F) {
    if (opt.phi.empty()) throw precondition_error("--phi is required for this command");
    auto parsed = parse_phi(opt.phi, F);
    auto cls = classify_phi(parsed, F);
    return cls;
}

void require_structure_family(const ClassifiedPhi& cls) {
    if (cls.family == PhiFamily::general)
        throw precondition_error("this form is outside the implemented structure families: " +
                                 cls.family_note);
}

Json invariants_json(const ClassifiedPhi& cls) {
    if (cls.family == PhiFamily::cubic_char_not3) {
        auto inv = char0_invariants(*cls.cubic);
        return Json{{"family", "cubic_char_not3"},
                    {"D1", inv.D1.str()},
                    {"D2", inv.D2.str()},
                    {"D", inv.D.str()}};
    }
    const Char3Presentation& p = *cls.char3;
    Json out{{"family", "cubic_char3"},
             {"branch", p.branch == Char3Branch::e_zero ? "e_zero" : "e_nonzero_normalized"},
             {"azumaya_obstruction", char3_azumaya_obstruction(p)},
             {"alpha", p.alpha.str()},
             {"beta", p.beta.str()},
             {"gamma", p.gamma.str()},
             {"delta", p.delta.str()}};
    if (p.branch == Char3Branch::e_zero) {
        out["Delta"] = char3_delta(p).str();
    } else {
        out["offset"] = char3_offset(p).str();
        if (p.original_e) out["original_e"] = p.original_e->str();
        if (p.transform) out["transform"] = json_matrix(*p.transform);
    }
    return out;
}

int cmd_analyze(const Options& opt) {
    FieldPtr F = parse_field_spec(opt.field_spec);
    auto cls = classify_or_refuse(opt, F);
    require_structure_family(cls);

    Json env = report_envelope();
    env["invariants"] = invariants_json(cls);
    CheckReport checks;
    CurveModel curve{MultiPoly(F, {"R", "S"}), ""};
    SmoothnessReport smooth;
    if (cls.family == PhiFamily::cubic_char_not3) {
        curve = char0_curve(*cls.cubic);
        smooth = curve_smoothness(curve);
        auto c1 = char0_centrality_report(*cls.cubic);
        auto c2 = char0_identity_report(*cls.cubic);
        checks.items = c1.items;
        checks.items.insert(checks.items.end(), c2.items.begin(), c2.items.end());
    } else {
        curve = char3_curve(*cls.char3);
        smooth = char3_singular_report(*cls.char3);
        auto c1 = char3_centrality_report(*cls.char3);
        auto c2 = char3_identity_report(*cls.char3);
        checks.items = c1.items;
        checks.items.insert(checks.items.end(), c2.items.begin(), c2.items.end());
    }
    env["curve"] = json_curve(curve);
    env["curve"]["smoothness"] = json_smoothness(smooth);
    env["checks"] = json_checks(checks);

    std::string text = "invariants: " + env["invariants"].dump() + "\ncurve: " +
                       curve.poly.str() + " = 0\n";
    for (const auto& i : checks.items)
        text += std::string(i.ok ? "  ok  " : "  FAIL") + "  " + i.name +
                (i.ok ? "" : "  -> " + i.witness) + "\n";
    emit(env, text, opt.json);
    if (!checks.all_ok()) throw verification_error("an identity check failed");
    return 0;
}

int cmd_curve(const Options& opt) {
    FieldPtr F = parse_field_spec(opt.field_spec);
    auto cls = classify_or_refuse(opt, F);
    require_structure_family(cls);
    CurveModel curve = cls.family == PhiFamily::cubic_char_not3 ? char0_curve(*cls.cubic)
                                                                : char3_curve(*cls.char3);
    SmoothnessReport smooth = cls.family == PhiFamily::cubic_char_not3
                                  ? curve_smoothness(curve)
                                  : char3_singular_report(*cls.char3);
    Json env = report_envelope();
    env["curve"] = json_curve(curve);
    env["curve"]["smoothness"] = json_smoothness(smooth);
    emit(env, curve.poly.str() + " = 0\n" + smooth.detail + "\n", opt.json);
    return 0;
}

int cmd_image(const Options& opt) {
    FieldPtr F = parse_field_spec(opt.field_spec);
    auto cls = classify_or_refuse(opt, F);
    require_structure_family(cls);
    if (opt.point.empty()) throw precondition_error("--point is required");
    FieldPtr L = extended_field(opt.field_spec, opt.ext);
    CurvePoint pt{L, parse_point(opt.point, L)};

    Json env = report_envelope();
    std::string text;
    if (cls.family == PhiFamily::cubic_char_not3) {
        auto img = char0_simple_image(*cls.cubic, pt, opt.assert_alpha_not_cube);
        env["image"] = json_symbol(*img.algebra);
        env["image"]["branch"] = img.s0_nonzero_branch ? "S0 != 0" : "S0 = 0";
        text = img.algebra->render() + "\n";
    } else {
        auto img = char3_simple_image(*cls.char3, pt);
        env["image"] = json_symbol(*img.algebra);
        env["image"]["azumaya"] = img.azumaya;
        env["image"]["localized"] = img.localized;
        if (!img.note.empty()) env["image"]["note"] = img.note;
        text = img.algebra->render() + (img.note.empty() ? "" : "\n" + img.note) + "\n";
    }
    emit(env, text, opt.json);
    return 0;
}

int cmd_represent(const Options& opt) {
    FieldPtr F = parse_field_spec(opt.field_spec);
    auto cls = classify_or_refuse(opt, F);
    if (cls.family != PhiFamily::cubic_char_not3)
        throw precondition_error("explicit representations are built for the char != 3 family");
    if (opt.point.empty()) throw precondition_error("--point is required");
    FieldPtr L = extended_field(opt.field_spec, opt.ext);
    CurvePoint pt{L, parse_point(opt.point, L)};
    auto rep = char0_build_representation(*cls.cubic, pt, L);

    Json env = report_envelope();
    env["representation"] = json_matrix_rep(rep);
    CheckReport checks;
    checks.items.push_back({"presentation relations on the built matrices", true, ""});
    env["checks"] = json_checks(checks);
    std::string text = "representation over " + L->describe() + ":\n";
    for (std::size_t g = 0; g < rep.mats.size(); ++g) {
        text += g == 0 ? "x ->\n" : "y ->\n";
        for (std::size_t i = 0; i < rep.dim; ++i) {
            text += "  [";
            for (std::size_t j = 0; j < rep.dim; ++j)
                text += (j ? ", " : "") + rep.mats[g].at(i, j).str();
            text += "]\n";
        }
    }
    emit(env, text, opt.json);
    return 0;
}

int cmd_verify_rep(const Options& opt) {
    if (opt.matrices_file.empty()) throw precondition_error("--matrices is required");
    std::ifstream in(opt.matrices_file);
    if (!in) throw precondition_error("cannot open " + opt.matrices_file);
    Json file = Json::parse(in, nullptr, true, true);

    std::string field_spec = opt.field_spec;
    if (file.is_object() && file.contains("field")) field_spec = file["field"].get<std::string>();
    FieldPtr F = parse_field_spec(field_spec);

    GeneralPresentation gp{F, 0, 0, {}, {}};
    if (file.is_object() && file.contains("gp")) {
        const Json& jgp = file["gp"];
        unsigned d = jgp.at("d").get<unsigned>();
        unsigned n = jgp.at("n").get<unsigned>();
        std::vector<std::string> vars;
        if (jgp.contains("vars")) vars = jgp["vars"].get<std::vector<std::string>>();
        else if (n == 2) vars = {"X", "Y"};
        else
            for (unsigned k = 1; k <= n; ++k) vars.push_back("X" + std::to_string(k));
        std::vector<MultiPoly> f;
        for (unsigned k = 1; k <= d; ++k) {
            MultiPoly fk(F, vars);
            std::string key = std::to_string(k);
            if (jgp.at("f").contains(key))
                for (const auto& [mono, coeff] : jgp["f"][key].items())
                    fk = fk + parse_multipoly(mono, F, vars)
                                  .scaled(parse_field_element(coeff.get<std::string>(), F));
            f.push_back(std::move(fk));
        }
        gp = make_general_presentation(F, d, vars, f);
    } else {
        if (opt.phi.empty())
            throw precondition_error("--phi (or a gp entry in the file) is required");
        auto parsed = parse_phi(opt.phi, F);
        gp = make_general_presentation(F, parsed.d, parsed.vars, parsed.f);
    }

    FieldPtr K = extended_field(field_spec, opt.ext);
    if (file.is_object() && file.contains("matrix_field"))
        K = parse_field_spec(file["matrix_field"].get<std::string>());

    const Json& jm = file.is_object() ? file.at("matrices") : file;
    if (!jm.is_array() || jm.empty()) throw precondition_error("matrices must be a nonempty array");
    std::size_t dim = jm[0].size();
    if (dim == 0) throw precondition_error("matrices must be nonempty");
    MatrixRep rep{K, dim, {}};
    for (const auto& jmat : jm) {
        Matrix<FieldElement> m(dim, dim, K->zero());
        if (jmat.size() != dim) throw precondition_error("matrices must be square, same size");
        for (std::size_t i = 0; i < dim; ++i) {
            if (jmat[i].size() != dim)
                throw precondition_error("matrices must be square, same size");
            for (std::size_t j = 0; j < dim; ++j)
                m.at(i, j) = parse_field_element(jmat[i][j].get<std::string>(), K);
        }
        rep.mats.push_back(std::move(m));
    }

    auto verdict = is_representation(gp, rep);
    Json env = report_envelope();
    CheckReport checks;
    checks.items.push_back({"defining polynomial identity", verdict.ok,
                            verdict.ok ? ""
                                       : "nonzero coefficient at " +
                                             MultiPoly::monomial_str(gp.vars, verdict.witness->monomial)});
    bool minpoly = false, divis = true;
    if (verdict.ok) {
        minpoly = minimal_poly_check(gp, rep);
        checks.items.push_back({"minimal polynomial has full degree", minpoly, ""});
        divis = divisibility_audit(gp, (unsigned)rep.dim) == DivisibilityVerdict::permitted;
        checks.items.push_back(
            {"dimension divisible by d (needs absolute irreducibility)", divis, ""});
    }
    env["checks"] = json_checks(checks);
    env["representation"] = json_matrix_rep(rep);
    std::string text = verdict.ok ? "the matrices are a representation\n"
                                  : "NOT a representation\n";
    if (!verdict.ok && verdict.witness)
        text += "first failing coefficient at " +
                MultiPoly::monomial_str(gp.vars, verdict.witness->monomial) + "\n";
    emit(env, text, opt.json);
    if (!verdict.ok) throw verification_error("the defining identity fails");
    return 0;
}

int cmd_decompose(const Options& opt) {
    FieldPtr F = parse_field_spec(opt.field_spec);
    auto cls = classify_or_refuse(opt, F);
    require_structure_family(cls);
    auto ctx = make_presentation_context(cls);
    auto G = ctx.rs->gens();

    QuotientElement x(ctx.rs, ctx.names.at("x"));
    QuotientElement y(ctx.rs, ctx.names.at("y"));
    Json env = report_envelope();
    Json parts = Json::array();
    std::string text;
    CheckReport checks;
    if (cls.family == PhiFamily::cubic_char_not3) {
        const CubicPresentation& p = *cls.cubic;
        QuotientElement x_inv(ctx.rs, NCPoly::word(G, {0, 0}).scaled(p.alpha.inverse()));
        auto ps = decompose_rho(y, x, x_inv, 3, F->rho());
        for (unsigned k = 0; k < 3; ++k) {
            parts.push_back(ps[k].str());
            text += "y_" + std::to_string(k) + " = " + ps[k].str() + "\n";
            checks.items.push_back({"y_" + std::to_string(k) + " x = rho^" + std::to_string(k) +
                                        " x y_" + std::to_string(k),
                                    ps[k] * x == (x * ps[k]).scaled(F->rho().pow((long long)k)),
                                    ""});
        }
        checks.items.push_back({"parts sum to y", ps[0] + ps[1] + ps[2] == y, ""});
    } else if (cls.char3->branch == Char3Branch::e_zero) {
        auto ps = decompose_p_central(y, x, 3, F);
        for (unsigned k = 0; k < 3; ++k) {
            parts.push_back(ps[k].str());
            text += "z_" + std::to_string(k) + " = " + ps[k].str() + "\n";
        }
        checks.items.push_back({"[z_0, x] = 0", (x * ps[0] - ps[0] * x).is_zero(), ""});
        checks.items.push_back({"[z_1, x] = z_0", x * ps[1] - ps[1] * x == ps[0], ""});
        checks.items.push_back({"[z_2, x] = z_1", x * ps[2] - ps[2] * x == ps[1], ""});
        checks.items.push_back({"y = z_2 - z_1", ps[2] - ps[1] == y, ""});
    } else {
        auto ps = decompose_artin_schreier(y, x, 3, F);
        for (unsigned k = 0; k < 3; ++k) {
            parts.push_back(ps.t[k].str());
            text += "y_" + std::to_string(k) + " = " + ps.t[k].str() + "\n";
            checks.items.push_back(
                {"y_" + std::to_string(k) + " x - x y_" + std::to_string(k) + " = " +
                     std::to_string(k) + " y_" + std::to_string(k),
                 ps.t[k] * x - x * ps.t[k] == ps.t[k].scaled(F->from_integer((long)k)), ""});
        }
        checks.items.push_back({"parts sum to y", ps.t[0] + ps.t[1] + ps.t[2] == y, ""});
    }
    env["checks"] = json_checks(checks);
    env["invariants"] = Json{{"parts", parts}};
    for (const auto& i : checks.items)
        text += std::string(i.ok ? "  ok  " : "  FAIL") + "  " + i.name + "\n";
    emit(env, text, opt.json);
    if (!checks.all_ok()) throw verification_error("a decomposition relation failed");
    return 0;
}

int cmd_nf(const Options& opt) {
    FieldPtr F = parse_field_spec(opt.field_spec);
    auto cls = classify_or_refuse(opt, F);
    require_structure_family(cls);
    auto ctx = make_presentation_context(cls);
    if (opt.nc_expr.empty()) throw precondition_error("an expression argument is required");
    NCPoly p = parse_nc_expression(opt.nc_expr, ctx, F);
    NCPoly nf = ctx.rs->normal_form(p);
    Json env = report_envelope();
    env["invariants"] = Json{{"normal_form", nf.str()}};
    emit(env, nf.str() + "\n", opt.json);
    return 0;
}

int cmd_audit(const Options& opt) {
    FieldPtr F = parse_field_spec(opt.field_spec);
    auto cls = classify_or_refuse(opt, F);
    require_structure_family(cls);
    auto ctx = make_presentation_context(cls);
    auto bad = ctx.rs->overlap_check(opt.max_len);
    Json env = report_envelope();
    Json list = Json::array();
    std::string text;
    for (const auto& a : bad) {
        list.push_back(Json{{"word", ctx.rs->gens()->word_str(a.word)},
                            {"first", a.nf_first.str()},
                            {"second", a.nf_second.str()}});
        text += "ambiguity at " + ctx.rs->gens()->word_str(a.word) + ":\n  " +
                a.nf_first.str() + "\n  " + a.nf_second.str() + "\n";
    }
    env["checks"] = Json{{"ambiguities", list}};
    if (bad.empty()) text = "confluent up to length " + std::to_string(opt.max_len) + "\n";
    emit(env, text, opt.json);
    if (!bad.empty()) throw verification_error("unresolved ambiguities found");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact structure computations for generalized Clifford algebras of "
                 "two-variable monic cubics"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* c, bool with_phi = true) {
        c->add_option("--field", opt.field_spec, "field spec, e.g. QQ.rho or GF(7).rho");
        if (with_phi) c->add_option("--phi", opt.phi, "monic form, e.g. \"Z^3 - X*Y*Z - (X^3+Y^3)\"");
        c->add_flag("--json", opt.json, "emit a JSON report");
        c->add_option("--ext", opt.ext, "extension polynomial for points/representations");
    };

    auto* analyze = app.add_subcommand("analyze", "invariants, curve and identity checks");
    add_common(analyze);
    auto* curve = app.add_subcommand("curve", "the associated plane curve");
    add_common(curve);
    auto* image = app.add_subcommand("image", "simple homomorphic image at a curve point");
    add_common(image);
    image->add_option("--point", opt.point, "point coordinates, e.g. 0,1");
    image->add_flag("--assert-alpha-not-cube", opt.assert_alpha_not_cube,
                    "assert that alpha is not a cube when undecidable");
    auto* represent = app.add_subcommand("represent", "explicit 3x3 matrices at a curve point");
    add_common(represent);
    represent->add_option("--point", opt.point, "point coordinates R0,S0");
    auto* verify = app.add_subcommand("verify-rep", "check a candidate matrix representation");
    add_common(verify);
    verify->add_option("--matrices", opt.matrices_file, "JSON file with the matrices (and optional gp)");
    auto* decomp = app.add_subcommand("decompose", "eigenvector decomposition of y in the quotient");
    add_common(decomp);
    auto* nf = app.add_subcommand("nf", "normal form of a noncommutative expression");
    add_common(nf);
    nf->add_option("expr", opt.nc_expr, "expression, e.g. \"w x - x w\"");
    auto* audit = app.add_subcommand("audit-confluence", "overlap/inclusion ambiguity audit");
    add_common(audit);
    audit->add_option("--max-len", opt.max_len, "maximum superposition length (default 8)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(opt);
        if (app.got_subcommand(curve)) return cmd_curve(opt);
        if (app.got_subcommand(image)) return cmd_image(opt);
        if (app.got_subcommand(represent)) return cmd_represent(opt);
        if (app.got_subcommand(verify)) return cmd_verify_rep(opt);
        if (app.got_subcommand(decomp)) return cmd_decompose(opt);
        if (app.got_subcommand(nf)) return cmd_nf(opt);
        if (app.got_subcommand(audit)) return cmd_audit(opt);
    } catch (const parse_error& e) {
        std::cerr << "refused (syntax): " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const verification_error& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
