// SPDX-License-Identifier: Apache-2.0
//
// Transformed Macdonald symmetric functions H~_lambda(z;q,t) evaluated by
// the Haglund-Haiman-Loehr filling formula, with a JSON disk cache, the
// t = q^{-1} specialization, mod-l weight components, and the graded
// Frobenius characteristic of the coinvariant algebra.

#pragma once

#include "procesi/symfunc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace procesi {

// Schur expansion of H~_lambda; the coefficients are the modified Kostka
// polynomials K~_{mu,lambda}(q,t).
struct ProcesiFiber {
    Partition lambda;
    std::map<Partition, LaurentQT> schur_expansion;
};

// Disk cache location for computed fibers.  Defaults to the PROCESI_CACHE
// environment variable when set; nullopt disables the disk cache.  The
// in-memory cache is always active.
void set_fiber_cache_dir(std::optional<std::string> dir);
std::optional<std::string> fiber_cache_dir();

// Evaluate H~_lambda by enumerating fillings content-by-content with the
// q^inv t^maj weight and converting the monomial expansion to the Schur
// basis.  Checked on every evaluation (and on every cache load):
// coefficients are polynomials with nonnegative integer coefficients,
// coefficient 1 at s_(n), q^{n(lam*)} t^{n(lam)} at s_(1^n), and
// K~_{mu,lambda}(1,1) = dim V_mu.  Thread-safe; distinct lambda may be
// evaluated concurrently, and disk writes go through atomic renames.
ProcesiFiber macdonald_fiber(const Partition& lambda);

// H~_lambda(z; q, q^{-1}), checked against the plethystic identity
// H~_lambda(z;q,q^{-1}) = q^{-n(lambda)} prod_c (1-q^{h_c}) s_lambda[Z/(1-q)].
SymFunc<RationalQ> specialize_tq_inverse(const ProcesiFiber& f);

// Weight-j parts of the fiber under the cyclic action: component j collects
// every monomial q^a t^b with a - b = j (mod l).  The components sum to the
// regular representation (checked).
struct ModLComponents {
    long ell = 1;
    std::vector<SymFunc<Integer>> components;
};
ModLComponents mod_l_components(const ProcesiFiber& f, long ell);

// Fr of the coinvariant algebra of S_n with its polynomial grading:
// sum_mu F_mu(q) s_mu.  Checked to coincide with H~_(n), whose Schur
// coefficients are q-polynomials equal to the fake degrees.
SymFunc<LaurentQ> coinvariant_graded_frobenius(long n);

// Kostka number K_{lambda,nu} = #SSYT of shape lambda and content nu
// (memoized; used to invert the monomial-to-Schur change of basis).
Integer kostka_number(const Partition& lambda, const Partition& nu);

}  // namespace procesi
