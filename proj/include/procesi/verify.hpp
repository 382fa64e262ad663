// SPDX-License-Identifier: Apache-2.0
//
// Exact comparison of the two sides of the core-induction decompositions:
// the cyclic weight components of a Macdonald fiber against induction from
// the fiber over the core, the binary dihedral refinement for symmetric
// shapes, and independent representation-theoretic re-derivations for
// small cores.  All comparisons are structural equalities of Schur-basis
// expansions; there is no tolerance anywhere.

#pragma once

#include "procesi/macdonald.hpp"

#include <string>
#include <vector>

namespace procesi {

// A mu_ell-graded virtual S_n-module sum_i [M_i (x) tau^i], stored as ell
// degree-n Schur expansions with integer coefficients.  Equality is
// componentwise; genuine modules have nonnegative coefficients throughout.
struct SnMuModule {
    long n = 0;
    long ell = 1;
    std::vector<SymFunc<Integer>> components;
};

// Left side: component i collects the fiber monomials of weight i, i.e.
// q^a t^b with a - b = i (mod ell).
SnMuModule typeA_lhs(const Partition& lambda, long ell);

// Right side: component i = sum_j Fr(Ind_{S_g x C}((core fiber)_j (x)
// theta^(i-j))), built from the fiber over the ell-core.  When lambda is
// its own core (r = 0) the induction carries no content and the left side
// is returned verbatim.
SnMuModule typeA_rhs(const Partition& lambda, long ell);

// One verification row.  `check` names the identity being tested (empty
// for the main two-sided comparisons); `diff` is empty on success and
// otherwise holds the first differing coefficient with both values.
struct LambdaReport {
    Partition lambda;
    Partition core;
    long g = 0;
    long r = 0;
    bool pass = false;
    std::string diff;
    std::string check;
};

struct Report {
    long n = 0;
    long ell = 1;  // the modulus parameter: ell for cyclic runs, l for dihedral
    std::vector<LambdaReport> per_lambda;
    bool all_pass() const;
};

// Compare typeA_lhs and typeA_rhs for every partition of n.  Failures are
// report entries, not exceptions.  Before doing anything the verifier
// cross-checks the Macdonald pipeline against plain character induction on
// the single-row shape (ell) and refuses to run if that base instance
// fails (std::logic_error): a broken pipeline must not produce reports.
Report verify_type_A(long n, long ell);

// The single-shape rows behind the reports, safe to run concurrently for
// distinct shapes (the table caches are shared and mutex-guarded).
LambdaReport verify_type_A_row(const Partition& lambda, long ell);
LambdaReport verify_type_D_row(const Partition& lambda, long l);

// The fiber over a symmetric shape as a binary-dihedral isotypic
// decomposition.  The two weight-0 degree-1 characters cannot be separated
// by any identity proved here, so only their sum is stored.
struct TypeDDecomposition {
    long l = 1;
    long n = 0;
    Partition lambda;
    SymFunc<Integer> zero_pair;         // D_{0+} + D_{0-}
    SymFunc<Integer> l_plus;            // D_{l+} = D_{l-}
    std::vector<SymFunc<Integer>> chi;  // D_{chi_1} .. D_{chi_{l-1}}
};

// Group the mod-2l weight components of the fiber through the restriction
// rules for the binary dihedral group of order 4l: component i must match
// component 2l-i (each is D_{chi_i}), component 0 is the weight-0 pair,
// and component l must halve exactly into D_{l+} = D_{l-}.  When the
// 2l-quotient is nonempty the D_{chi_i} and D_{l+} are independently
// recomputed by induction from the fiber over the 2l-core through the
// embedded dihedral subgroup and the two routes compared.  Throws
// std::invalid_argument for a non-symmetric shape and std::logic_error
// when a structural identity fails (a convention bug, not an input error).
TypeDDecomposition typeD_decomposition(const Partition& lambda, long l);

// Run typeD_decomposition on every symmetric partition of n; structural
// failures become failed report entries.  Report rows carry the 2l-core
// data.  The base-instance gate runs first at modulus 2l.
Report verify_type_D(long n, long l);

// Independent small-core derivations, one row per (shape, check):
//   "small_core"            lambda with ell-core empty or (1): fiber
//                           component i equals Fr(Ind_C(theta^i)) outright,
//                           the fake degree does not vanish at any ell-th
//                           root of unity, and the restriction of V_lambda
//                           to C is F_lambda(theta^{-1}).
// and, when ell is prime:
//   "coinvariant_induction" the graded coinvariant algebra of S_n matches
//                           induction from the coinvariant algebra of S_g
//                           (one instance per core size g < ell).
//   "j_independence"        restriction coefficients a_{mu,j} away from the
//                           core do not depend on j (every lambda).
//   "fake_degree_recursion" F_lambda(tau) = sum_{mu,j} a_{mu,j} F_mu(tau)
//                           tau^{-j} as mod-ell vectors (every lambda).
//   "small_core_prime"      g < ell: fake-degree nonvanishing plus the full
//                           two-sided comparison.
Report verify_edge_cases(long n, long ell);

}  // namespace procesi
