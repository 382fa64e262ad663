// SPDX-License-Identifier: Apache-2.0
//
// Symmetric functions of a fixed degree in the Schur or power-sum basis,
// generic over the coefficient ring (rationals, rational functions of q,
// bivariate (q,t) Laurent polynomials).  Structure constants (Littlewood-
// Richardson and Kronecker) are integer tables computed once via the
// power-sum route and shared by every coefficient ring.

#pragma once

#include "procesi/characters.hpp"
#include "procesi/laurentqt.hpp"
#include "procesi/rationalq.hpp"

#include <map>
#include <stdexcept>

namespace procesi {

enum class Basis { schur, powersum };

template <typename R>
class SymFunc {
  public:
    SymFunc() = default;
    SymFunc(long degree, Basis basis) : degree_(degree), basis_(basis) {}

    // The multiplicative unit: degree 0, single term at the empty partition.
    static SymFunc unit(Basis basis = Basis::schur) {
        SymFunc f(0, basis);
        f.add_term(Partition(), R(1));
        return f;
    }

    long degree() const { return degree_; }
    Basis basis() const { return basis_; }
    const std::map<Partition, R>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    R coeff(const Partition& mu) const {
        auto it = terms_.find(mu);
        return it == terms_.end() ? R(0) : it->second;
    }

    void add_term(const Partition& mu, const R& c) {
        if (mu.size() != degree_) throw std::invalid_argument("SymFunc: wrong-size partition");
        if (c == R(0)) return;
        auto it = terms_.find(mu);
        if (it == terms_.end()) terms_.emplace(mu, c);
        else {
            it->second = it->second + c;
            if (it->second == R(0)) terms_.erase(it);
        }
    }

    friend SymFunc operator+(const SymFunc& f, const SymFunc& g) {
        if (f.degree_ != g.degree_ || f.basis_ != g.basis_)
            throw std::invalid_argument("SymFunc: incompatible addition");
        SymFunc out = f;
        for (const auto& [mu, c] : g.terms_) out.add_term(mu, c);
        return out;
    }
    friend SymFunc operator-(const SymFunc& f, const SymFunc& g) {
        if (f.degree_ != g.degree_ || f.basis_ != g.basis_)
            throw std::invalid_argument("SymFunc: incompatible subtraction");
        SymFunc out = f;
        for (const auto& [mu, c] : g.terms_) out.add_term(mu, R(0) - c);
        return out;
    }
    friend SymFunc operator*(const SymFunc& f, const R& scalar) {
        SymFunc out(f.degree_, f.basis_);
        for (const auto& [mu, c] : f.terms_) out.add_term(mu, c * scalar);
        return out;
    }
    friend bool operator==(const SymFunc& f, const SymFunc& g) {
        return f.degree_ == g.degree_ && f.basis_ == g.basis_ && f.terms_ == g.terms_;
    }
    friend bool operator!=(const SymFunc& f, const SymFunc& g) { return !(f == g); }

  private:
    long degree_ = 0;
    Basis basis_ = Basis::schur;
    std::map<Partition, R> terms_;
};

// Integer structure constants, cached process-wide (thread-safe).
// s_mu . s_nu = sum_lam  c^lam_{mu,nu} s_lam  (induced product).
const std::map<Partition, Integer>& littlewood_richardson(const Partition& mu,
                                                          const Partition& nu);
// s_mu (x) s_nu = sum_lam  g_{mu,nu,lam} s_lam  (Kronecker product).
const std::map<Partition, Integer>& kronecker_table(const Partition& mu, const Partition& nu);

namespace detail {
inline Rational div_integer(const Rational& a, const Integer& z) { return a / Rational(z); }
inline RationalQ div_integer(const RationalQ& a, const Integer& z) {
    return a / RationalQ(LaurentQ(z));
}
}  // namespace detail

// s_lam = sum_mu chi_lam(mu) p_mu / z_mu  (needs rational coefficients).
template <typename R>
SymFunc<R> schur_to_powersum(const SymFunc<R>& f) {
    if (f.basis() == Basis::powersum) return f;
    SymFunc<R> out(f.degree(), Basis::powersum);
    auto classes = partitions_of(f.degree());
    for (const auto& [lam, c] : f.terms())
        for (const Partition& mu : classes) {
            Integer chi = character_value(lam, mu);
            if (chi != 0) out.add_term(mu, detail::div_integer(c * R(chi), z_of(mu)));
        }
    return out;
}

// p_mu = sum_lam chi_lam(mu) s_lam  (works over any coefficient ring).
template <typename R>
SymFunc<R> powersum_to_schur(const SymFunc<R>& f) {
    if (f.basis() == Basis::schur) return f;
    SymFunc<R> out(f.degree(), Basis::schur);
    auto shapes = partitions_of(f.degree());
    for (const auto& [mu, c] : f.terms())
        for (const Partition& lam : shapes) {
            Integer chi = character_value(lam, mu);
            if (chi != 0) out.add_term(lam, c * R(chi));
        }
    return out;
}

// [V].[W] = [Ind(V (x) W)]; on Schur expansions this is bilinear in the
// Littlewood-Richardson table.
template <typename R>
SymFunc<R> induced_product(const SymFunc<R>& f, const SymFunc<R>& g) {
    if (f.basis() != Basis::schur || g.basis() != Basis::schur)
        throw std::invalid_argument("induced_product: expects Schur basis");
    SymFunc<R> out(f.degree() + g.degree(), Basis::schur);
    for (const auto& [mu, a] : f.terms())
        for (const auto& [nu, b] : g.terms()) {
            R ab = a * b;
            for (const auto& [lam, c] : littlewood_richardson(mu, nu))
                out.add_term(lam, ab * R(c));
        }
    return out;
}

template <typename R>
SymFunc<R> kronecker(const SymFunc<R>& f, const SymFunc<R>& g) {
    if (f.degree() != g.degree()) throw std::invalid_argument("kronecker: degree mismatch");
    if (f.basis() != Basis::schur || g.basis() != Basis::schur)
        throw std::invalid_argument("kronecker: expects Schur basis");
    SymFunc<R> out(f.degree(), Basis::schur);
    for (const auto& [mu, a] : f.terms())
        for (const auto& [nu, b] : g.terms()) {
            R ab = a * b;
            for (const auto& [lam, c] : kronecker_table(mu, nu)) out.add_term(lam, ab * R(c));
        }
    return out;
}

// Exact coefficient-ring conversions (basis preserved); to_integer throws
// NotDivisible on a fractional coefficient.
SymFunc<Rational> to_rational(const SymFunc<Integer>& f);
SymFunc<Integer> to_integer(const SymFunc<Rational>& f);

// Fr(chi) = sum_mu chi(mu) p_mu / z_mu.
SymFunc<Rational> frobenius(const ClassFunction& chi);
ClassFunction frobenius_inverse(const SymFunc<Rational>& f);

// s_lam[ Z / (1-q) ]: substitute p_k -> p_k / (1-q^k) in the power-sum
// expansion of the Schur function.
SymFunc<RationalQ> plethysm_onemq(const Partition& lam);

// Fr(Ind_{S_g x <w>}^{S_n}(V (x) theta^k)) = Fr(V) . Fr(Ind_{<w>}(theta^k)).
SymFunc<Rational> induce_product_with_cyclic(const SymFunc<Rational>& v, long k,
                                             const CyclicSubgroupSpec& spec);

}  // namespace procesi
