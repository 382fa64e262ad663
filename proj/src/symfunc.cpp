// SPDX-License-Identifier: Apache-2.0

#include "procesi/symfunc.hpp"

#include <mutex>

namespace procesi {

namespace {

using SchurInts = std::map<Partition, Integer>;

SchurInts to_integer_schur(const SymFunc<Rational>& f, const char* what) {
    SchurInts out;
    for (const auto& [lam, c] : f.terms()) {
        Integer v = rational_to_integer(c);  // throws NotDivisible if fractional
        if (v < 0) throw std::logic_error(std::string(what) + ": negative structure constant");
        out.emplace(lam, v);
    }
    return out;
}

}  // namespace

const SchurInts& littlewood_richardson(const Partition& mu, const Partition& nu) {
    static std::mutex mutex;
    static std::map<std::pair<Partition, Partition>, SchurInts> cache;
    std::pair<Partition, Partition> key = mu < nu ? std::make_pair(mu, nu) : std::make_pair(nu, mu);
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    // Multiply in the power-sum basis (p_alpha p_beta = p_{alpha u beta})
    // and convert back; the result must be a nonnegative integer expansion.
    SymFunc<Rational> a(mu.size(), Basis::schur), b(nu.size(), Basis::schur);
    a.add_term(mu, 1);
    b.add_term(nu, 1);
    SymFunc<Rational> pa = schur_to_powersum(a), pb = schur_to_powersum(b);
    SymFunc<Rational> prod(mu.size() + nu.size(), Basis::powersum);
    for (const auto& [al, ca] : pa.terms())
        for (const auto& [be, cb] : pb.terms())
            prod.add_term(union_partitions(al, be), ca * cb);
    return cache.emplace(key, to_integer_schur(powersum_to_schur(prod), "littlewood_richardson"))
        .first->second;
}

const SchurInts& kronecker_table(const Partition& mu, const Partition& nu) {
    static std::mutex mutex;
    static std::map<std::pair<Partition, Partition>, SchurInts> cache;
    if (mu.size() != nu.size()) throw std::invalid_argument("kronecker_table: degree mismatch");
    std::pair<Partition, Partition> key = mu < nu ? std::make_pair(mu, nu) : std::make_pair(nu, mu);
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    // g_{mu,nu,lam} = sum_rho chi_mu(rho) chi_nu(rho) chi_lam(rho) / z_rho.
    SchurInts table;
    for (const Partition& lam : partitions_of(mu.size())) {
        Rational g = 0;
        for (const Partition& rho : partitions_of(mu.size())) {
            Integer prod = character_value(mu, rho) * character_value(nu, rho) *
                           character_value(lam, rho);
            if (prod != 0) g += Rational(prod) / Rational(z_of(rho));
        }
        Integer gi = rational_to_integer(g);
        if (gi < 0) throw std::logic_error("kronecker_table: negative multiplicity");
        if (gi != 0) table.emplace(lam, gi);
    }
    return cache.emplace(key, std::move(table)).first->second;
}

SymFunc<Rational> frobenius(const ClassFunction& chi) {
    SymFunc<Rational> f(chi.n, Basis::powersum);
    for (const auto& [mu, v] : chi.values)
        if (v != 0) f.add_term(mu, Rational(v) / Rational(z_of(mu)));
    return f;
}

ClassFunction frobenius_inverse(const SymFunc<Rational>& f) {
    SymFunc<Rational> p = schur_to_powersum(f);
    ClassFunction chi;
    chi.n = f.degree();
    for (const Partition& mu : partitions_of(f.degree()))
        chi.values.emplace(mu, rational_to_integer(p.coeff(mu) * Rational(z_of(mu))));
    return chi;
}

SymFunc<Rational> to_rational(const SymFunc<Integer>& f) {
    SymFunc<Rational> out(f.degree(), f.basis());
    for (const auto& [mu, c] : f.terms()) out.add_term(mu, Rational(c));
    return out;
}

SymFunc<Integer> to_integer(const SymFunc<Rational>& f) {
    SymFunc<Integer> out(f.degree(), f.basis());
    for (const auto& [mu, c] : f.terms()) out.add_term(mu, rational_to_integer(c));
    return out;
}

SymFunc<RationalQ> plethysm_onemq(const Partition& lam) {
    SymFunc<Rational> s(lam.size(), Basis::schur);
    s.add_term(lam, 1);
    SymFunc<RationalQ> out(lam.size(), Basis::powersum);
    SymFunc<Rational> sp = schur_to_powersum(s);
    for (const auto& [mu, c] : sp.terms()) {
        // p_mu picks up prod_i 1/(1 - q^{mu_i}).
        LaurentQ den(1);
        for (long part : mu.parts()) den *= one_minus_qk(part);
        Rational r = c;
        out.add_term(mu, RationalQ(LaurentQ(numerator(r)), LaurentQ(denominator(r)) * den));
    }
    return out;
}

SymFunc<Rational> induce_product_with_cyclic(const SymFunc<Rational>& v, long k,
                                             const CyclicSubgroupSpec& spec) {
    if (v.degree() != spec.g)
        throw std::invalid_argument("induce_product_with_cyclic: degree must equal g");
    if (spec.r == 0) return v;
    SymFunc<Rational> ind = powersum_to_schur(frobenius(induce_from_cyclic(
        CyclicSubgroupSpec(spec.n - spec.g, spec.ell, 0), k)));
    return induced_product(v, ind);
}

}  // namespace procesi
