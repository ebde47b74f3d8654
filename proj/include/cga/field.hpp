#ifndef CGA_FIELD_HPP
#define CGA_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "cga/errors.hpp"

namespace cga {

class FieldDescriptor;
class FieldElement;
using FieldPtr = std::shared_ptr<const FieldDescriptor>;

// Recursive coordinate representation.  An element of tower level L is:
//   L = 0: a rational (characteristic 0) or a residue mod p,
//   L > 0: a coordinate vector of length deg(minpoly of step L-1) whose
//          entries are values of level L-1.
struct FieldValue {
    std::variant<mpq_class, std::uint64_t, std::vector<FieldValue>> v;
};

// A tower of simple extensions over QQ or GF(p).  Immutable; share freely.
class FieldDescriptor : public std::enable_shared_from_this<FieldDescriptor> {
public:
    struct Step {
        std::string name;              // generator name, e.g. "rho", "c"
        std::vector<FieldValue> minpoly; // monic, coefficients at the level below, size deg+1
        bool irreducibility_checked;   // true for finite fields; QQ-towers record the caller's assertion
    };

    static FieldPtr rationals();
    static FieldPtr prime_field(std::uint64_t p);

    // Extend by a monic minimal polynomial (coefficients are elements of
    // *this* field).  Degree >= 2.  Over finite fields irreducibility is
    // verified; over QQ-towers it is recorded as a caller assertion.
    FieldPtr extended(const std::string& gen_name,
                      const std::vector<FieldElement>& minpoly) const;

    // Locate a primitive cube root of unity, extending by T^2+T+1 when
    // necessary.  Fails in characteristic 3 and when a search is infeasible.
    FieldPtr with_rho() const;

    std::uint64_t characteristic() const { return p_; }
    std::size_t tower_height() const { return steps_.size(); }
    const Step& step(std::size_t i) const { return steps_[i]; }
    std::uint64_t total_degree() const;   // product of step degrees
    bool is_finite() const { return p_ != 0; }
    // Number of elements of a finite field.
    mpz_class size() const;
    bool has_rho() const { return rho_level_ >= 0; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_integer(long n) const;
    FieldElement from_rational(const mpq_class& q) const;  // char p: reduce mod p, den invertible
    FieldElement generator(std::size_t level) const;       // generator of step `level`
    FieldElement generator(const std::string& name) const;
    FieldElement rho() const;

    // Index-based enumeration of a finite field, 0 <= index < size().
    FieldElement element_at(const mpz_class& index) const;

    // Structural equality of towers (same characteristic, same steps).
    bool same(const FieldDescriptor& other) const;
    // True when `other`'s tower is a prefix of this one (elements embed).
    bool extends(const FieldDescriptor& other) const;

    std::string describe() const;      // e.g. "QQ(rho, c)" or "GF(7)"
    std::optional<std::string> generator_name_of(std::size_t level) const;

protected:
    FieldDescriptor() = default;

private:
    friend class FieldElement;
    friend FieldPtr detail_make_field(std::uint64_t, std::vector<FieldDescriptor::Step>, int, FieldValue);

    std::uint64_t p_ = 0;              // 0 = characteristic zero
    std::vector<Step> steps_;
    int rho_level_ = -1;               // tower level whose value below holds rho, -1 = none
    FieldValue rho_value_;             // value at level rho_level_
};

// An exact element of the top level of a field tower.  Value type; all
// operations are pure and throw on descriptor mismatch or division by zero.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr f, FieldValue v) : f_(std::move(f)), v_(std::move(v)) {}

    const FieldPtr& field() const { return f_; }
    const FieldValue& value() const { return v_; }

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement inverse() const;
    FieldElement pow(long long e) const;            // negative exponents via inverse
    FieldElement pow(const mpz_class& e) const;      // e >= 0

    // Scale by a rational (embeds it first).
    FieldElement scaled(const mpq_class& q) const;

    // If the element lies in the base field, return it as a rational
    // (characteristic 0) -- used by cube-root search and printing.
    std::optional<mpq_class> as_rational() const;
    // Residue when the element lies in the prime field GF(p).
    std::optional<std::uint64_t> as_residue() const;

    // Re-express over a larger tower that has this element's tower as prefix.
    FieldElement embedded(const FieldPtr& larger) const;

    std::string str() const;

private:
    FieldPtr f_;
    FieldValue v_;
};

struct CubeRootResult {
    enum class Status { found, none, unknown };
    Status status;
    std::optional<FieldElement> root;
};

// Decide whether `a` has a cube root in its field.  Exact for finite fields;
// for QQ-towers it combines rational root search, a degree argument and a
// structural scan of the tower steps, returning `unknown` otherwise.
CubeRootResult has_cube_root(const FieldElement& a);

// Random element with small coordinates (for property tests); uses the given
// generator state.
FieldElement random_element(const FieldPtr& f, std::uint64_t& state);

} // namespace cga

#endif
