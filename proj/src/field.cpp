#include "cga/field.hpp"

#include <algorithm>
#include <cstdlib>

namespace cga {

namespace {

const mpq_class& as_q(const FieldValue& v) { return std::get<mpq_class>(v.v); }
std::uint64_t as_r(const FieldValue& v) { return std::get<std::uint64_t>(v.v); }
const std::vector<FieldValue>& as_vec(const FieldValue& v) { return std::get<std::vector<FieldValue>>(v.v); }
std::vector<FieldValue>& as_vec(FieldValue& v) { return std::get<std::vector<FieldValue>>(v.v); }

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + b) % p; }
std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + p - b) % p; }
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; } // p < 2^31
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw precondition_error("division by zero");
    long long t = 0, nt = 1, r = (long long)p, nr = (long long)a;
    while (nr != 0) {
        long long q = r / nr;
        long long tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1) throw precondition_error("residue not invertible");
    return (std::uint64_t)((t % (long long)p + (long long)p) % (long long)p);
}

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::size_t step_degree(const FieldDescriptor::Step& s) { return s.minpoly.size() - 1; }

// ---- recursive value arithmetic at a given tower level -------------------

bool vis_zero(const FieldDescriptor& d, std::size_t level, const FieldValue& a) {
    if (level == 0) {
        if (d.characteristic() == 0) return sgn(as_q(a)) == 0;
        return as_r(a) == 0;
    }
    for (const auto& c : as_vec(a))
        if (!vis_zero(d, level - 1, c)) return false;
    return true;
}

bool vequal(const FieldDescriptor& d, std::size_t level, const FieldValue& a, const FieldValue& b) {
    if (level == 0) {
        if (d.characteristic() == 0) return as_q(a) == as_q(b);
        return as_r(a) == as_r(b);
    }
    const auto& av = as_vec(a); const auto& bv = as_vec(b);
    for (std::size_t i = 0; i < av.size(); ++i)
        if (!vequal(d, level - 1, av[i], bv[i])) return false;
    return true;
}

FieldValue vzero(const FieldDescriptor& d, std::size_t level) {
    if (level == 0) {
        if (d.characteristic() == 0) return FieldValue{mpq_class(0)};
        return FieldValue{std::uint64_t(0)};
    }
    std::vector<FieldValue> v(step_degree(d.step(level - 1)), vzero(d, level - 1));
    return FieldValue{std::move(v)};
}

FieldValue vfrom_int(const FieldDescriptor& d, std::size_t level, const mpz_class& n) {
    if (level == 0) {
        if (d.characteristic() == 0) return FieldValue{mpq_class(n)};
        mpz_class r = n % (unsigned long)d.characteristic();
        if (r < 0) r += (unsigned long)d.characteristic();
        return FieldValue{(std::uint64_t)r.get_ui()};
    }
    FieldValue z = vzero(d, level);
    as_vec(z)[0] = vfrom_int(d, level - 1, n);
    return z;
}

FieldValue vone(const FieldDescriptor& d, std::size_t level) { return vfrom_int(d, level, 1); }

FieldValue vneg(const FieldDescriptor& d, std::size_t level, const FieldValue& a) {
    if (level == 0) {
        if (d.characteristic() == 0) return FieldValue{mpq_class(-as_q(a))};
        std::uint64_t r = as_r(a);
        return FieldValue{r == 0 ? r : d.characteristic() - r};
    }
    std::vector<FieldValue> v; v.reserve(as_vec(a).size());
    for (const auto& c : as_vec(a)) v.push_back(vneg(d, level - 1, c));
    return FieldValue{std::move(v)};
}

FieldValue vadd(const FieldDescriptor& d, std::size_t level, const FieldValue& a, const FieldValue& b) {
    if (level == 0) {
        if (d.characteristic() == 0) return FieldValue{mpq_class(as_q(a) + as_q(b))};
        return FieldValue{mod_add(as_r(a), as_r(b), d.characteristic())};
    }
    const auto& av = as_vec(a); const auto& bv = as_vec(b);
    std::vector<FieldValue> v; v.reserve(av.size());
    for (std::size_t i = 0; i < av.size(); ++i) v.push_back(vadd(d, level - 1, av[i], bv[i]));
    return FieldValue{std::move(v)};
}

FieldValue vsub(const FieldDescriptor& d, std::size_t level, const FieldValue& a, const FieldValue& b) {
    if (level == 0) {
        if (d.characteristic() == 0) return FieldValue{mpq_class(as_q(a) - as_q(b))};
        return FieldValue{mod_sub(as_r(a), as_r(b), d.characteristic())};
    }
    const auto& av = as_vec(a); const auto& bv = as_vec(b);
    std::vector<FieldValue> v; v.reserve(av.size());
    for (std::size_t i = 0; i < av.size(); ++i) v.push_back(vsub(d, level - 1, av[i], bv[i]));
    return FieldValue{std::move(v)};
}

FieldValue vmul(const FieldDescriptor& d, std::size_t level, const FieldValue& a, const FieldValue& b) {
    if (level == 0) {
        if (d.characteristic() == 0) return FieldValue{mpq_class(as_q(a) * as_q(b))};
        return FieldValue{mod_mul(as_r(a), as_r(b), d.characteristic())};
    }
    const auto& av = as_vec(a); const auto& bv = as_vec(b);
    const auto& mp = d.step(level - 1).minpoly;
    std::size_t deg = av.size();
    std::vector<FieldValue> tmp(2 * deg - 1, vzero(d, level - 1));
    for (std::size_t i = 0; i < deg; ++i) {
        if (vis_zero(d, level - 1, av[i])) continue;
        for (std::size_t j = 0; j < deg; ++j)
            tmp[i + j] = vadd(d, level - 1, tmp[i + j], vmul(d, level - 1, av[i], bv[j]));
    }
    // reduce modulo the monic minimal polynomial
    for (std::size_t i = tmp.size(); i-- > deg;) {
        if (vis_zero(d, level - 1, tmp[i])) continue;
        for (std::size_t j = 0; j < deg; ++j)
            tmp[i - deg + j] = vsub(d, level - 1, tmp[i - deg + j], vmul(d, level - 1, tmp[i], mp[j]));
    }
    tmp.resize(deg);
    return FieldValue{std::move(tmp)};
}

// ---- dense polynomial helpers over values of a fixed level ----------------
// Used by the extended-Euclid inverse at level+1. Little-endian coefficients.

using VPoly = std::vector<FieldValue>;

void ptrim(const FieldDescriptor& d, std::size_t level, VPoly& p) {
    while (!p.empty() && vis_zero(d, level, p.back())) p.pop_back();
}

VPoly psub(const FieldDescriptor& d, std::size_t level, const VPoly& a, const VPoly& b) {
    VPoly r(std::max(a.size(), b.size()), vzero(d, level));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = vsub(d, level, r[i], b[i]);
    ptrim(d, level, r);
    return r;
}

VPoly pmul(const FieldDescriptor& d, std::size_t level, const VPoly& a, const VPoly& b) {
    if (a.empty() || b.empty()) return {};
    VPoly r(a.size() + b.size() - 1, vzero(d, level));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (vis_zero(d, level, a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = vadd(d, level, r[i + j], vmul(d, level, a[i], b[j]));
    }
    ptrim(d, level, r);
    return r;
}

FieldValue vinv(const FieldDescriptor& d, std::size_t level, const FieldValue& a);

// quotient and remainder of a by b (b trimmed, nonzero), coefficients at `level`
std::pair<VPoly, VPoly> pdivmod(const FieldDescriptor& d, std::size_t level, VPoly a, const VPoly& b) {
    ptrim(d, level, a);
    VPoly q;
    FieldValue lcinv = vinv(d, level, b.back());
    while (a.size() >= b.size()) {
        FieldValue c = vmul(d, level, a.back(), lcinv);
        std::size_t shift = a.size() - b.size();
        if (q.size() < shift + 1) q.resize(shift + 1, vzero(d, level));
        q[shift] = vadd(d, level, q[shift], c);
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = vsub(d, level, a[shift + i], vmul(d, level, c, b[i]));
        ptrim(d, level, a);
    }
    ptrim(d, level, q);
    return {std::move(q), std::move(a)};
}

FieldValue vinv(const FieldDescriptor& d, std::size_t level, const FieldValue& a) {
    if (vis_zero(d, level, a)) throw precondition_error("division by zero");
    if (level == 0) {
        if (d.characteristic() == 0) return FieldValue{mpq_class(1 / as_q(a))};
        return FieldValue{mod_inv(as_r(a), d.characteristic())};
    }
    // extended Euclid: r0 = minpoly, r1 = a, track t with t*a == r (mod minpoly)
    const auto& mp = d.step(level - 1).minpoly;
    VPoly r0(mp.begin(), mp.end());
    VPoly r1(as_vec(a).begin(), as_vec(a).end());
    ptrim(d, level - 1, r0);
    ptrim(d, level - 1, r1);
    VPoly t0, t1{vone(d, level - 1)};
    while (!r1.empty()) {
        auto [q, r] = pdivmod(d, level - 1, r0, r1);
        r0 = std::move(r1); r1 = std::move(r);
        VPoly tn = psub(d, level - 1, t0, pmul(d, level - 1, q, t1));
        t0 = std::move(t1); t1 = std::move(tn);
    }
    if (r0.size() != 1)
        throw precondition_error("element not invertible (minimal polynomial not irreducible?)");
    FieldValue scale = vinv(d, level - 1, r0[0]);
    std::size_t deg = as_vec(a).size();
    std::vector<FieldValue> out(deg, vzero(d, level - 1));
    for (std::size_t i = 0; i < t0.size() && i < deg; ++i)
        out[i] = vmul(d, level - 1, t0[i], scale);
    return FieldValue{std::move(out)};
}

FieldValue vembed_up(const FieldDescriptor& d, std::size_t from_level, std::size_t to_level, FieldValue v) {
    for (std::size_t l = from_level; l < to_level; ++l) {
        std::vector<FieldValue> wrap(step_degree(d.step(l)), vzero(d, l));
        wrap[0] = std::move(v);
        v = FieldValue{std::move(wrap)};
    }
    return v;
}

bool value_structurally_equal(const FieldValue& a, const FieldValue& b) {
    if (a.v.index() != b.v.index()) return false;
    if (std::holds_alternative<mpq_class>(a.v)) return as_q(a) == as_q(b);
    if (std::holds_alternative<std::uint64_t>(a.v)) return as_r(a) == as_r(b);
    const auto& av = as_vec(a); const auto& bv = as_vec(b);
    if (av.size() != bv.size()) return false;
    for (std::size_t i = 0; i < av.size(); ++i)
        if (!value_structurally_equal(av[i], bv[i])) return false;
    return true;
}

mpz_class level_size(const FieldDescriptor& d, std::size_t level) {
    mpz_class sz((unsigned long)d.characteristic());
    for (std::size_t l = 0; l < level; ++l) {
        mpz_class t;
        mpz_pow_ui(t.get_mpz_t(), sz.get_mpz_t(), step_degree(d.step(l)));
        sz = t;
    }
    return sz;
}

FieldValue velement_at(const FieldDescriptor& d, std::size_t level, mpz_class index) {
    if (level == 0) {
        mpz_class r = index % (unsigned long)d.characteristic();
        return FieldValue{(std::uint64_t)r.get_ui()};
    }
    mpz_class sub = level_size(d, level - 1);
    std::size_t deg = step_degree(d.step(level - 1));
    std::vector<FieldValue> v; v.reserve(deg);
    for (std::size_t i = 0; i < deg; ++i) {
        mpz_class digit = index % sub;
        index /= sub;
        v.push_back(velement_at(d, level - 1, digit));
    }
    return FieldValue{std::move(v)};
}

constexpr std::uint64_t kEnumCap = 1u << 16;

FieldValue veval_poly(const FieldDescriptor& d, std::size_t level, const VPoly& poly, const FieldValue& x) {
    FieldValue acc = vzero(d, level);
    for (std::size_t i = poly.size(); i-- > 0;)
        acc = vadd(d, level, vmul(d, level, acc, x), poly[i]);
    return acc;
}

// irreducibility over a (small) finite field
bool poly_irreducible_finite(const FieldDescriptor& d, std::size_t level, const VPoly& mono) {
    mpz_class fsz = level_size(d, level);
    if (fsz > kEnumCap)
        throw precondition_error("field too large for irreducibility check");
    std::uint64_t n = fsz.get_ui();
    std::size_t deg = mono.size() - 1;
    // no roots <=> irreducible for degree 2 and 3
    for (std::uint64_t i = 0; i < n; ++i) {
        FieldValue x = velement_at(d, level, mpz_class((unsigned long)i));
        if (vis_zero(d, level, veval_poly(d, level, mono, x))) return false;
    }
    if (deg <= 3) return true;
    // trial division by monic polynomials of degree 2..deg/2
    for (std::size_t fd = 2; fd <= deg / 2; ++fd) {
        mpz_class combos = 1;
        for (std::size_t i = 0; i < fd; ++i) combos *= fsz;
        if (combos > kEnumCap)
            throw precondition_error("field too large for irreducibility check");
        for (mpz_class c = 0; c < combos; ++c) {
            VPoly trial(fd + 1, vzero(d, level));
            mpz_class idx = c;
            for (std::size_t i = 0; i < fd; ++i) {
                trial[i] = velement_at(d, level, idx % fsz);
                idx /= fsz;
            }
            trial[fd] = vone(d, level);
            VPoly a(mono);
            auto [q, r] = pdivmod(d, level, a, trial);
            if (r.empty()) return false;
        }
    }
    return true;
}

std::string q_to_str(const mpq_class& q) { return q.get_str(); }

bool str_is_simple(const std::string& s) {
    // safe to use as a factor without parentheses
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '+' || c == '*' || c == ' ') return false;
        if (c == '-' && i != 0) return false;
        if (c == '-' && s.size() > 1 && !isdigit((unsigned char)s[1])) return false;
    }
    return true;
}

std::string vto_str(const FieldDescriptor& d, std::size_t level, const FieldValue& a) {
    if (level == 0) {
        if (d.characteristic() == 0) return q_to_str(as_q(a));
        return std::to_string(as_r(a));
    }
    const auto& av = as_vec(a);
    const std::string& g = d.step(level - 1).name;
    std::vector<std::string> terms;
    for (std::size_t k = 0; k < av.size(); ++k) {
        if (vis_zero(d, level - 1, av[k])) continue;
        std::string cs = vto_str(d, level - 1, av[k]);
        std::string gp = k == 0 ? "" : (k == 1 ? g : g + "^" + std::to_string(k));
        if (k == 0) terms.push_back(cs);
        else if (cs == "1") terms.push_back(gp);
        else if (cs == "-1") terms.push_back("-" + gp);
        else if (str_is_simple(cs)) terms.push_back(cs + "*" + gp);
        else terms.push_back("(" + cs + ")*" + gp);
    }
    if (terms.empty()) return "0";
    std::string out = terms[0];
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (!terms[i].empty() && terms[i][0] == '-') out += " - " + terms[i].substr(1);
        else out += " + " + terms[i];
    }
    return out;
}

} // namespace

FieldPtr detail_make_field(std::uint64_t p, std::vector<FieldDescriptor::Step> steps,
                           int rho_level, FieldValue rho_value) {
    struct D : FieldDescriptor {};
    auto d = std::make_shared<D>();
    FieldDescriptor& f = *d;
    f.p_ = p;
    f.steps_ = std::move(steps);
    f.rho_level_ = rho_level;
    f.rho_value_ = std::move(rho_value);
    return d;
}

// ---- FieldDescriptor -------------------------------------------------------

FieldPtr FieldDescriptor::rationals() {
    return detail_make_field(0, {}, -1, FieldValue{});
}

FieldPtr FieldDescriptor::prime_field(std::uint64_t p) {
    if (p >= (1u << 31))
        throw precondition_error("prime too large (must be < 2^31)");
    if (!is_prime_u64(p))
        throw precondition_error("characteristic is not prime: " + std::to_string(p));
    return detail_make_field(p, {}, -1, FieldValue{});
}

std::uint64_t FieldDescriptor::total_degree() const {
    std::uint64_t t = 1;
    for (const auto& s : steps_) t *= step_degree(s);
    return t;
}

mpz_class FieldDescriptor::size() const {
    if (!is_finite()) throw precondition_error("field is infinite");
    return level_size(*this, steps_.size());
}

FieldPtr FieldDescriptor::extended(const std::string& gen_name,
                                   const std::vector<FieldElement>& minpoly) const {
    if (minpoly.size() < 3)
        throw precondition_error("extension polynomial must have degree >= 2");
    if (gen_name.empty())
        throw precondition_error("generator name must be nonempty");
    for (const auto& s : steps_)
        if (s.name == gen_name)
            throw precondition_error("generator name already in use: " + gen_name);
    std::vector<FieldValue> coeffs;
    for (const auto& c : minpoly) {
        if (!c.field() || !c.field()->same(*this))
            throw precondition_error("extension polynomial coefficients lie in a different field");
        coeffs.push_back(c.value());
    }
    if (!vequal(*this, steps_.size(), coeffs.back(), vone(*this, steps_.size())))
        throw precondition_error("extension polynomial must be monic");
    bool checked = false;
    if (is_finite()) {
        if (!poly_irreducible_finite(*this, steps_.size(), coeffs))
            throw precondition_error("extension polynomial is reducible over the base field");
        checked = true;
    }
    auto steps = steps_;
    steps.push_back(Step{gen_name, std::move(coeffs), checked});
    return detail_make_field(p_, std::move(steps), rho_level_, rho_value_);
}

FieldPtr FieldDescriptor::with_rho() const {
    if (has_rho()) return shared_from_this();
    if (p_ == 3)
        throw precondition_error("no primitive cube root of unity in characteristic 3");
    std::size_t top = steps_.size();
    if (is_finite()) {
        mpz_class fsz = size();
        if (fsz <= kEnumCap) {
            std::uint64_t n = fsz.get_ui();
            FieldValue one = vone(*this, top);
            for (std::uint64_t i = 0; i < n; ++i) {
                FieldValue x = velement_at(*this, top, mpz_class((unsigned long)i));
                if (vequal(*this, top, x, one)) continue;
                FieldValue t = vadd(*this, top, vadd(*this, top, vmul(*this, top, x, x), x), one);
                if (vis_zero(*this, top, t))
                    return detail_make_field(p_, steps_, (int)top, x);
            }
        } else if (size() % 3 == 1) {
            // rho = g^((q-1)/3) for some g with the power != 1
            mpz_class e = (size() - 1) / 3;
            for (std::uint64_t g = 2; g < 1000; ++g) {
                FieldElement ge(shared_from_this(), vfrom_int(*this, top, mpz_class((unsigned long)g)));
                if (ge.is_zero()) continue;
                FieldElement r = ge.pow(e);
                if (!r.is_one())
                    return detail_make_field(p_, steps_, (int)top, r.value());
            }
            throw precondition_error("failed to locate a cube root of unity");
        }
        // fall through: no rho in the field, extend below
    } else {
        // structural scan for an existing step defined by T^2+T+1
        for (std::size_t i = 0; i < steps_.size(); ++i) {
            const auto& mp = steps_[i].minpoly;
            if (mp.size() != 3) continue;
            if (vequal(*this, i, mp[0], vone(*this, i)) && vequal(*this, i, mp[1], vone(*this, i))) {
                std::vector<FieldValue> gen(step_degree(steps_[i]), vzero(*this, i));
                gen[1] = vone(*this, i);
                return detail_make_field(p_, steps_, (int)i + 1, FieldValue{std::move(gen)});
            }
        }
    }
    // adjoin T^2+T+1
    FieldElement one = from_integer(1);
    auto ext = extended("rho", {one, one, one});
    std::size_t sub = ext->tower_height() - 1;
    std::vector<FieldValue> gen(2, vzero(*ext, sub));
    gen[1] = vone(*ext, sub);
    return detail_make_field(p_, ext->steps_, (int)ext->tower_height(), FieldValue{std::move(gen)});
}

FieldElement FieldDescriptor::zero() const {
    return FieldElement(shared_from_this(), vzero(*this, steps_.size()));
}
FieldElement FieldDescriptor::one() const {
    return FieldElement(shared_from_this(), vone(*this, steps_.size()));
}
FieldElement FieldDescriptor::from_integer(long n) const {
    return FieldElement(shared_from_this(), vfrom_int(*this, steps_.size(), mpz_class(n)));
}
FieldElement FieldDescriptor::from_rational(const mpq_class& q) const {
    if (p_ == 0) {
        FieldValue base{mpq_class(q)};
        return FieldElement(shared_from_this(), vembed_up(*this, 0, steps_.size(), std::move(base)));
    }
    FieldElement num(shared_from_this(), vfrom_int(*this, steps_.size(), mpz_class(q.get_num())));
    FieldElement den(shared_from_this(), vfrom_int(*this, steps_.size(), mpz_class(q.get_den())));
    return num / den;
}

FieldElement FieldDescriptor::generator(std::size_t level) const {
    if (level >= steps_.size()) throw precondition_error("no such extension step");
    std::vector<FieldValue> gen(step_degree(steps_[level]), vzero(*this, level));
    gen[1] = vone(*this, level);
    return FieldElement(shared_from_this(),
                        vembed_up(*this, level + 1, steps_.size(), FieldValue{std::move(gen)}));
}

FieldElement FieldDescriptor::generator(const std::string& name) const {
    for (std::size_t i = 0; i < steps_.size(); ++i)
        if (steps_[i].name == name) return generator(i);
    throw precondition_error("no generator named " + name);
}

FieldElement FieldDescriptor::rho() const {
    if (!has_rho()) throw precondition_error("field has no primitive cube root of unity");
    return FieldElement(shared_from_this(),
                        vembed_up(*this, (std::size_t)rho_level_, steps_.size(), rho_value_));
}

FieldElement FieldDescriptor::element_at(const mpz_class& index) const {
    if (!is_finite()) throw precondition_error("cannot enumerate an infinite field");
    return FieldElement(shared_from_this(), velement_at(*this, steps_.size(), index));
}

bool FieldDescriptor::same(const FieldDescriptor& other) const {
    if (this == &other) return true;
    if (p_ != other.p_ || steps_.size() != other.steps_.size()) return false;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        if (steps_[i].name != other.steps_[i].name) return false;
        if (steps_[i].minpoly.size() != other.steps_[i].minpoly.size()) return false;
        for (std::size_t j = 0; j < steps_[i].minpoly.size(); ++j)
            if (!value_structurally_equal(steps_[i].minpoly[j], other.steps_[i].minpoly[j])) return false;
    }
    return true;
}

bool FieldDescriptor::extends(const FieldDescriptor& other) const {
    if (p_ != other.p_ || steps_.size() < other.steps_.size()) return false;
    for (std::size_t i = 0; i < other.steps_.size(); ++i) {
        if (steps_[i].name != other.steps_[i].name) return false;
        if (steps_[i].minpoly.size() != other.steps_[i].minpoly.size()) return false;
        for (std::size_t j = 0; j < steps_[i].minpoly.size(); ++j)
            if (!value_structurally_equal(steps_[i].minpoly[j], other.steps_[i].minpoly[j])) return false;
    }
    return true;
}

std::string FieldDescriptor::describe() const {
    std::string base = p_ == 0 ? "QQ" : "GF(" + std::to_string(p_) + ")";
    if (steps_.empty()) return base;
    std::string gens;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        if (i) gens += ", ";
        gens += steps_[i].name;
    }
    return base + "(" + gens + ")";
}

std::optional<std::string> FieldDescriptor::generator_name_of(std::size_t level) const {
    if (level >= steps_.size()) return std::nullopt;
    return steps_[level].name;
}

// ---- FieldElement ----------------------------------------------------------

namespace {
const FieldDescriptor& need_same(const FieldElement& a, const FieldElement& b) {
    if (!a.field() || !b.field()) throw precondition_error("uninitialized field element");
    if (a.field().get() != b.field().get() && !a.field()->same(*b.field()))
        throw precondition_error("field descriptor mismatch: " + a.field()->describe() +
                                 " vs " + b.field()->describe());
    return *a.field();
}
} // namespace

bool FieldElement::is_zero() const { return vis_zero(*f_, f_->tower_height(), v_); }
bool FieldElement::is_one() const {
    return vequal(*f_, f_->tower_height(), v_, vone(*f_, f_->tower_height()));
}

FieldElement FieldElement::operator-() const {
    return FieldElement(f_, vneg(*f_, f_->tower_height(), v_));
}
FieldElement FieldElement::operator+(const FieldElement& o) const {
    const auto& d = need_same(*this, o);
    return FieldElement(f_, vadd(d, d.tower_height(), v_, o.v_));
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
    const auto& d = need_same(*this, o);
    return FieldElement(f_, vsub(d, d.tower_height(), v_, o.v_));
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
    const auto& d = need_same(*this, o);
    return FieldElement(f_, vmul(d, d.tower_height(), v_, o.v_));
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
    const auto& d = need_same(*this, o);
    return FieldElement(f_, vmul(d, d.tower_height(), v_, vinv(d, d.tower_height(), o.v_)));
}
bool FieldElement::operator==(const FieldElement& o) const {
    const auto& d = need_same(*this, o);
    return vequal(d, d.tower_height(), v_, o.v_);
}

FieldElement FieldElement::inverse() const {
    return FieldElement(f_, vinv(*f_, f_->tower_height(), v_));
}

FieldElement FieldElement::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    return pow(mpz_class((long)e));
}

FieldElement FieldElement::pow(const mpz_class& e) const {
    if (e < 0) throw precondition_error("negative exponent in pow(mpz)");
    FieldElement acc = f_->one();
    FieldElement base = *this;
    mpz_class n = e;
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

FieldElement FieldElement::scaled(const mpq_class& q) const {
    return *this * f_->from_rational(q);
}

std::optional<mpq_class> FieldElement::as_rational() const {
    if (f_->characteristic() != 0) return std::nullopt;
    const FieldValue* cur = &v_;
    for (std::size_t level = f_->tower_height(); level > 0; --level) {
        const auto& vec = as_vec(*cur);
        for (std::size_t i = 1; i < vec.size(); ++i)
            if (!vis_zero(*f_, level - 1, vec[i])) return std::nullopt;
        cur = &vec[0];
    }
    return as_q(*cur);
}

std::optional<std::uint64_t> FieldElement::as_residue() const {
    if (f_->characteristic() == 0) return std::nullopt;
    const FieldValue* cur = &v_;
    for (std::size_t level = f_->tower_height(); level > 0; --level) {
        const auto& vec = as_vec(*cur);
        for (std::size_t i = 1; i < vec.size(); ++i)
            if (!vis_zero(*f_, level - 1, vec[i])) return std::nullopt;
        cur = &vec[0];
    }
    return as_r(*cur);
}

FieldElement FieldElement::embedded(const FieldPtr& larger) const {
    if (larger.get() == f_.get() || larger->same(*f_)) return FieldElement(larger, v_);
    if (!larger->extends(*f_))
        throw precondition_error("cannot embed: " + larger->describe() +
                                 " does not extend " + f_->describe());
    return FieldElement(larger, vembed_up(*larger, f_->tower_height(), larger->tower_height(), v_));
}

std::string FieldElement::str() const {
    return vto_str(*f_, f_->tower_height(), v_);
}

// ---- cube roots ------------------------------------------------------------

CubeRootResult has_cube_root(const FieldElement& a) {
    if (a.is_zero()) throw precondition_error("has_cube_root requires a nonzero element");
    const FieldPtr& f = a.field();
    if (f->is_finite()) {
        mpz_class q = f->size();
        std::uint64_t p = f->characteristic();
        if (p == 3) {
            return {CubeRootResult::Status::found, a.pow(mpz_class(q / 3))};
        }
        if (q % 3 == 2) {
            return {CubeRootResult::Status::found, a.pow(mpz_class((2 * q - 1) / 3))};
        }
        FieldElement t = a.pow(mpz_class((q - 1) / 3));
        if (!t.is_one()) return {CubeRootResult::Status::none, std::nullopt};
        if (q <= kEnumCap) {
            std::uint64_t n = q.get_ui();
            for (std::uint64_t i = 0; i < n; ++i) {
                FieldElement x = f->element_at(mpz_class((unsigned long)i));
                if (x * x * x == a) return {CubeRootResult::Status::found, x};
            }
        }
        return {CubeRootResult::Status::unknown, std::nullopt};
    }
    // characteristic 0: structural scan of the tower generators
    for (std::size_t i = 0; i < f->tower_height(); ++i) {
        FieldElement g = f->generator(i);
        if (g * g * g == a) return {CubeRootResult::Status::found, g};
    }
    if (auto r = a.as_rational()) {
        mpz_class num = r->get_num(), den = r->get_den();
        mpz_class rn, rd;
        bool en = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), 3) != 0;
        bool ed = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), 3) != 0;
        if (en && ed) {
            mpq_class root(rn, rd);
            root.canonicalize();
            return {CubeRootResult::Status::found, f->from_rational(root)};
        }
        if (f->total_degree() % 3 != 0)
            return {CubeRootResult::Status::none, std::nullopt};
    }
    return {CubeRootResult::Status::unknown, std::nullopt};
}

// ---- random elements -------------------------------------------------------

namespace {
std::uint64_t xorshift(std::uint64_t& s) {
    s ^= s << 13; s ^= s >> 7; s ^= s << 17;
    return s;
}
FieldValue vrandom(const FieldDescriptor& d, std::size_t level, std::uint64_t& state) {
    if (level == 0) {
        if (d.characteristic() == 0) {
            long num = (long)(xorshift(state) % 19) - 9;
            long den = 1 + (long)(xorshift(state) % 7);
            mpq_class q(num, den);
            q.canonicalize();
            return FieldValue{q};
        }
        return FieldValue{xorshift(state) % d.characteristic()};
    }
    std::vector<FieldValue> v;
    std::size_t deg = step_degree(d.step(level - 1));
    v.reserve(deg);
    for (std::size_t i = 0; i < deg; ++i) v.push_back(vrandom(d, level - 1, state));
    return FieldValue{std::move(v)};
}
} // namespace

FieldElement random_element(const FieldPtr& f, std::uint64_t& state) {
    return FieldElement(f, vrandom(*f, f->tower_height(), state));
}

} // namespace cga
