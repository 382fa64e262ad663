// SPDX-License-Identifier: Apache-2.0
//
// Integer partitions and their combinatorics: Young-diagram statistics,
// beta-sets / abacus displays, l-cores and l-quotients, fake degrees.

#pragma once

#include "procesi/laurent.hpp"

#include <string>
#include <vector>

namespace procesi {

class Partition {
  public:
    Partition() = default;
    // Validates weakly decreasing positive parts (trailing zeros stripped).
    explicit Partition(std::vector<long> parts);

    // Text format "[2,2,1]"; "[]" is the empty partition.
    static Partition parse(const std::string& text);
    std::string str() const;

    long size() const { return size_; }                  // |lambda|
    long num_parts() const { return static_cast<long>(parts_.size()); }
    const std::vector<long>& parts() const { return parts_; }
    long part(long i) const {  // 1-based; 0 beyond the last row
        return (i >= 1 && i <= num_parts()) ? parts_[i - 1] : 0;
    }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;
    bool is_symmetric() const { return parts_ == conjugate().parts_; }

    // Hook lengths arm + leg + 1, one per cell, sorted decreasing.
    std::vector<long> hook_multiset() const;
    // n(lambda) = sum (i-1) * lambda_i.
    long n_statistic() const;
    // dim of the irreducible S_n representation: n! / prod of hooks.
    Integer dimension() const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) {  // lex on parts
        return a.parts_ < b.parts_;
    }

  private:
    std::vector<long> parts_;
    long size_ = 0;
};

// First-column hook lengths, possibly padded: strictly decreasing beads.
struct BetaSet {
    std::vector<long> beads;  // strictly decreasing, nonnegative

    // bead_count = -1 means the minimal beta-set (one bead per part).
    static BetaSet from_partition(const Partition& lambda, long bead_count = -1);
    Partition to_partition() const;
};

struct CoreQuotientData {
    Partition core;                   // gamma_l
    std::vector<Partition> quotient;  // one per runner, indices 0..l-1
    long g = 0;                       // |core|
    long r = 0;                       // sum of quotient sizes; n = g + l*r
};

// Abacus computation: pad beads to a multiple of l, split into runners,
// slide every bead as high as possible.
CoreQuotientData core_quotient(const Partition& lambda, long ell);

// All partitions of n in decreasing lexicographic order, (n) first.
std::vector<Partition> partitions_of(long n);

// F_lambda(q) = q^{n(lambda)} prod_{i=1}^n (1-q^i) / prod_c (1-q^{h_c});
// the quotient is exact and has nonnegative coefficients (asserted).
LaurentQ fake_degree(const Partition& lambda);

// Phi_j-adic valuation of F_lambda, from hook counts alone:
// floor(n/j) - #{cells with j | hook}.
long phi_valuation(const Partition& lambda, long j);

}  // namespace procesi
