// SPDX-License-Identifier: Apache-2.0

#include "procesi/partition.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace procesi {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
            throw std::invalid_argument("Partition: parts must be weakly decreasing positive");
        size_ += parts_[i];
    }
}

Partition Partition::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("Partition::parse: expected \"[a,b,...]\", got " + text);
    std::vector<long> parts;
    std::string body = s.substr(1, s.size() - 2);
    if (!body.empty()) {
        std::istringstream in(body);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            std::size_t pos = 0;
            long v = std::stol(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("Partition::parse: bad part " + tok);
            parts.push_back(v);
        }
    }
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i)
        out += (i ? "," : "") + std::to_string(parts_[i]);
    return out + "]";
}

Partition Partition::conjugate() const {
    std::vector<long> cols;
    if (!parts_.empty()) {
        cols.assign(parts_[0], 0);
        for (long p : parts_)
            for (long j = 0; j < p; ++j) ++cols[j];
    }
    return Partition(std::move(cols));
}

std::vector<long> Partition::hook_multiset() const {
    Partition conj = conjugate();
    std::vector<long> hooks;
    hooks.reserve(size_);
    for (long i = 1; i <= num_parts(); ++i)
        for (long j = 1; j <= part(i); ++j)
            hooks.push_back((part(i) - j) + (conj.part(j) - i) + 1);
    std::sort(hooks.rbegin(), hooks.rend());
    return hooks;
}

long Partition::n_statistic() const {
    long s = 0;
    for (long i = 1; i <= num_parts(); ++i) s += (i - 1) * part(i);
    return s;
}

Integer Partition::dimension() const {
    Integer d = factorial(size_);
    for (long h : hook_multiset()) d = exact_quotient(d, h);
    return d;
}

BetaSet BetaSet::from_partition(const Partition& lambda, long bead_count) {
    long k = lambda.num_parts();
    long m = bead_count < 0 ? k : bead_count;
    if (m < k) throw std::invalid_argument("BetaSet: bead count below number of parts");
    BetaSet b;
    b.beads.reserve(m);
    for (long i = 1; i <= m; ++i) b.beads.push_back(lambda.part(i) + (m - i));
    return b;
}

Partition BetaSet::to_partition() const {
    std::vector<long> sorted = beads;
    std::sort(sorted.rbegin(), sorted.rend());
    long m = static_cast<long>(sorted.size());
    std::vector<long> parts;
    for (long i = 1; i <= m; ++i) {
        long p = sorted[i - 1] - (m - i);
        if (p < 0) throw std::invalid_argument("BetaSet: beads not distinct");
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

CoreQuotientData core_quotient(const Partition& lambda, long ell) {
    if (ell < 1) throw std::invalid_argument("core_quotient: ell must be >= 1");
    long m = lambda.num_parts();
    long padded = ((m / ell) + (m % ell ? 1 : 0)) * ell;
    if (padded == 0) padded = ell;
    BetaSet beta = BetaSet::from_partition(lambda, padded);

    // Runner s holds a bead at height p for each bead with value p*ell + s.
    std::vector<std::vector<long>> runner(ell);
    for (long b : beta.beads) runner[b % ell].push_back(b / ell);

    CoreQuotientData out;
    out.quotient.reserve(ell);
    BetaSet core_beta;
    for (long s = 0; s < ell; ++s) {
        BetaSet rb;
        rb.beads = runner[s];
        Partition comp = rb.to_partition();
        out.r += comp.size();
        out.quotient.push_back(std::move(comp));
        // Slide the beads on this runner as high as possible.
        for (long h = 0; h < static_cast<long>(runner[s].size()); ++h)
            core_beta.beads.push_back(h * ell + s);
    }
    out.core = core_beta.to_partition();
    out.g = out.core.size();
    assert(lambda.size() == out.g + ell * out.r);
    return out;
}

std::vector<Partition> partitions_of(long n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<long> cur;
    // Decreasing lexicographic order: always try the largest next part first.
    auto rec = [&](auto&& self, long remaining, long max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (long p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

LaurentQ fake_degree(const Partition& lambda) {
    long n = lambda.size();
    LaurentQ num = LaurentQ::monomial(1, lambda.n_statistic());
    for (long i = 1; i <= n; ++i) num *= one_minus_qk(i);
    LaurentQ den(1);
    for (long h : lambda.hook_multiset()) den *= one_minus_qk(h);
    LaurentQ f = exact_divide(num, den);  // throws on an implementation bug
    assert(f.is_polynomial());
    for (long e = f.min_exp(); e <= f.max_exp(); ++e) assert(f.coeff(e) >= 0);
    return f;
}

long phi_valuation(const Partition& lambda, long j) {
    if (j < 2) throw std::invalid_argument("phi_valuation: j must be >= 2");
    long count = 0;
    for (long h : lambda.hook_multiset())
        if (h % j == 0) ++count;
    return lambda.size() / j - count;
}

}  // namespace procesi
