#ifndef CGA_DECOMPOSE_HPP
#define CGA_DECOMPOSE_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "cga/field.hpp"

namespace cga {

// The operators below run in any associative algebra whose elements provide
// +, -, * and scaled(FieldElement): matrix algebras, symbol algebras and
// rewriting quotients all qualify.

// Sum of all distinct arrangements of the factors, each factor appearing with
// its multiplicity.  The number of summands is the multinomial coefficient.
template <class E>
E star_product(const std::vector<std::pair<E, unsigned>>& factors) {
    if (factors.empty()) throw precondition_error("star product of an empty factor list");
    std::vector<std::size_t> slots;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].second == 0)
            throw precondition_error("star product multiplicities must be >= 1");
        for (unsigned k = 0; k < factors[i].second; ++k) slots.push_back(i);
    }
    std::sort(slots.begin(), slots.end());
    bool first = true;
    E acc = factors[0].first; // placeholder, overwritten on the first arrangement
    do {
        E prod = factors[slots[0]].first;
        for (std::size_t i = 1; i < slots.size(); ++i) prod = prod * factors[slots[i]].first;
        if (first) {
            acc = prod;
            first = false;
        } else {
            acc = acc + prod;
        }
    } while (std::next_permutation(slots.begin(), slots.end()));
    return acc;
}

// [mu,nu]_0 = mu, [mu,nu]_1 = nu*mu - mu*nu, and inductively
// [mu,nu]_k = nu*[mu,nu]_{k-1} - [mu,nu]_{k-1}*nu.
template <class E>
E iterated_commutator(const E& mu, const E& nu, unsigned k) {
    E cur = mu;
    for (unsigned i = 0; i < k; ++i) cur = nu * cur - cur * nu;
    return cur;
}

// Eigenvector decomposition with respect to conjugation by a d-central
// element x (x^d central and invertible, char of the coefficient field prime
// to d, rho a primitive d-th root of unity):
//   y_k = (1/d) * sum_j rho^{kj} x^j y x^{-j},
// so that y = y_0 + ... + y_{d-1} and y_k x = rho^k x y_k.
template <class E>
std::vector<E> decompose_rho(const E& y, const E& x, const E& x_inv, unsigned d,
                             const FieldElement& rho) {
    const FieldPtr& F = rho.field();
    if (d == 0) throw precondition_error("d must be positive");
    if (F->characteristic() != 0 && d % F->characteristic() == 0)
        throw precondition_error("characteristic divides d");
    FieldElement inv_d = F->from_integer((long)d).inverse();
    std::vector<E> conj; // x^j y x^{-j}
    conj.reserve(d);
    conj.push_back(y);
    for (unsigned j = 1; j < d; ++j) conj.push_back(x * conj.back() * x_inv);
    std::vector<E> parts;
    parts.reserve(d);
    for (unsigned k = 0; k < d; ++k) {
        E acc = conj[0];
        FieldElement rk = rho.pow((long long)k);
        FieldElement coeff = F->one();
        for (unsigned j = 1; j < d; ++j) {
            coeff = coeff * rk; // rho^{kj}
            acc = acc + conj[j].scaled(coeff);
        }
        parts.push_back(acc.scaled(inv_d));
    }
    return parts;
}

// Decomposition with respect to an Artin-Schreier element x (x^p - x central)
// in characteristic p:
//   z_0 = z - [z,x]_{p-1},
//   z_k = -(k^{p-2}[z,x]_1 + ... + k[z,x]_{p-2} + [z,x]_{p-1}),
// giving z = z_0 + ... + z_{p-1} with [z_k,x] = k z_k.  The relabeled family
// t_{p-k} = z_k satisfies [x,t_k] = k t_k.
template <class E>
struct ArtinSchreierParts {
    std::vector<E> z; // z_0 .. z_{p-1}
    std::vector<E> t; // t_0 .. t_{p-1}
};

template <class E>
ArtinSchreierParts<E> decompose_artin_schreier(const E& z, const E& x, unsigned p,
                                               const FieldPtr& F) {
    if (F->characteristic() != p)
        throw precondition_error("decompose_artin_schreier requires characteristic p");
    std::vector<E> comm; // [z,x]_i
    comm.reserve(p);
    comm.push_back(z);
    for (unsigned i = 1; i <= p - 1; ++i) comm.push_back(x * comm.back() - comm.back() * x);
    std::vector<E> parts;
    parts.reserve(p);
    parts.push_back(z - comm[p - 1]);
    for (unsigned k = 1; k <= p - 1; ++k) {
        FieldElement kf = F->from_integer((long)k);
        E acc = comm[1].scaled(kf.pow((long long)(p - 2)));
        for (unsigned i = 2; i <= p - 1; ++i)
            acc = acc + comm[i].scaled(kf.pow((long long)(p - 1 - i)));
        parts.push_back(acc.scaled(-F->one()));
    }
    ArtinSchreierParts<E> out{parts, parts};
    for (unsigned k = 0; k <= p - 1; ++k) out.t[(p - k) % p] = parts[k];
    return out;
}

// Decomposition with respect to a p-central element y (y^p central) in
// characteristic p:
//   z_0 = [z,y]_{p-1},  z_k = [z,y]_{p-1-k} + ... + [z,y]_{p-1}  (k != 0),
// giving [z_0,y] = 0, [z_k,y] = z_{k-1} and z = z_{p-1} - z_{p-2}.
template <class E>
std::vector<E> decompose_p_central(const E& z, const E& y, unsigned p, const FieldPtr& F) {
    if (F->characteristic() != p)
        throw precondition_error("decompose_p_central requires characteristic p");
    std::vector<E> comm;
    comm.reserve(p);
    comm.push_back(z);
    for (unsigned i = 1; i <= p - 1; ++i) comm.push_back(y * comm.back() - comm.back() * y);
    std::vector<E> parts;
    parts.reserve(p);
    parts.push_back(comm[p - 1]);
    for (unsigned k = 1; k <= p - 1; ++k) {
        E acc = comm[p - 1 - k];
        for (unsigned j = p - k; j <= p - 1; ++j) acc = acc + comm[j];
        parts.push_back(acc);
    }
    return parts;
}

} // namespace cga

#endif
