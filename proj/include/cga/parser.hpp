#ifndef CGA_PARSER_HPP
#define CGA_PARSER_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cga/char3.hpp"
#include "cga/ncpoly.hpp"
#include "cga/presentation.hpp"

namespace cga {

// Field spec mini-language: `QQ`, `GF(p)`, with suffix chains `.ext(<monic
// polynomial in one fresh variable>)` and `.rho`.
FieldPtr parse_field_spec(const std::string& spec);

// Arithmetic expression evaluating to a field constant; identifiers resolve
// to tower generators (and rho when present).
FieldElement parse_field_element(const std::string& text, const FieldPtr& F);

// Commutative polynomial in the given variables; all other identifiers must
// be field constants.
MultiPoly parse_multipoly(const std::string& text, const FieldPtr& F,
                          const std::vector<std::string>& vars);

struct ParsedPhi {
    unsigned d = 0, n = 0;
    std::vector<std::string> vars; // X variables
    MultiPoly phi;                 // in (Z, vars...)
    std::vector<MultiPoly> f;      // f_1..f_d over vars
};

// Parse and validate the monic shape Z^d - sum f_k Z^{d-k} (monic in Z,
// homogeneous, deg f_k = k).  Variables are Z plus X,Y or X1..Xn.
ParsedPhi parse_phi(const std::string& text, const FieldPtr& F);

std::string phi_to_string(const ParsedPhi& phi);

enum class PhiFamily {
    cubic_char_not3,       // the two-variable cubic family, char != 3
    cubic_char3,           // the characteristic-3 family (either branch)
    general                // verification-only
};

struct ClassifiedPhi {
    PhiFamily family;
    std::optional<CubicPresentation> cubic;
    std::optional<Char3Presentation> char3;
    GeneralPresentation general;
    std::string family_note; // why a cubic input fell back to `general`
};

ClassifiedPhi classify_phi(const ParsedPhi& p, const FieldPtr& F);

// Named noncommutative elements available to `nf` and `decompose` for a
// classified presentation: generators x, y1, y2 plus the derived y0, y, w
// (and z when defined).
struct PresentationContext {
    RewriteSystemPtr rs;
    std::map<std::string, NCPoly> names;
};

PresentationContext make_presentation_context(const ClassifiedPhi& c);

// Noncommutative expression: juxtaposition or `*` multiplies, `star(a^2 * b)`
// builds the arrangement sum, `comm(m, n, k)` the iterated commutator.
NCPoly parse_nc_expression(const std::string& text, const PresentationContext& ctx,
                           const FieldPtr& F);

} // namespace cga

#endif
