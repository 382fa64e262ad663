// SPDX-License-Identifier: Apache-2.0

#include "procesi/characters.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace procesi {

Integer z_of(const Partition& mu) {
    Integer z = 1;
    long run = 0, prev = -1;
    for (long p : mu.parts()) {
        run = (p == prev) ? run + 1 : 1;
        prev = p;
        z *= Integer(p) * run;  // accumulates p^{m_p} * m_p! across the run
    }
    return z;
}

Partition union_partitions(const Partition& a, const Partition& b) {
    std::vector<long> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

namespace {

// Murnaghan-Nakayama: remove a rim hook of length mu[0] (a bead drop of
// mu[0] on the beta-set), with sign (-1)^{#beads jumped over}.
Integer mn_value(const std::vector<long>& lam, const std::vector<long>& mu) {
    static std::mutex mutex;
    static std::map<std::pair<std::vector<long>, std::vector<long>>, Integer> memo;
    if (mu.empty()) return 1;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = memo.find({lam, mu});
        if (it != memo.end()) return it->second;
    }
    const long m = mu[0];
    const std::vector<long> rest(mu.begin() + 1, mu.end());
    const long k = static_cast<long>(lam.size());
    std::vector<long> beads(k);
    for (long i = 0; i < k; ++i) beads[i] = lam[i] + (k - 1 - i);
    std::set<long> bead_set(beads.begin(), beads.end());

    Integer total = 0;
    for (long b : beads) {
        if (b - m < 0 || bead_set.count(b - m)) continue;
        long height = 0;
        for (long x : beads)
            if (b - m < x && x < b) ++height;
        std::vector<long> nb;
        nb.reserve(k);
        for (long x : beads) nb.push_back(x == b ? b - m : x);
        std::sort(nb.rbegin(), nb.rend());
        std::vector<long> parts;
        for (long i = 0; i < k; ++i) {
            long p = nb[i] - (k - 1 - i);
            if (p > 0) parts.push_back(p);
        }
        Integer sub = mn_value(parts, rest);
        total += (height % 2 == 0) ? sub : -sub;
    }
    std::lock_guard<std::mutex> lock(mutex);
    memo.emplace(std::make_pair(lam, mu), total);
    return total;
}

}  // namespace

Integer character_value(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("character_value: |lambda| != |mu|");
    return mn_value(lambda.parts(), mu.parts());
}

const Integer& ClassFunction::value(const Partition& mu) const {
    auto it = values.find(mu);
    if (it == values.end()) throw std::invalid_argument("ClassFunction: unknown class " + mu.str());
    return it->second;
}

Rational inner_product(const ClassFunction& f, const ClassFunction& h) {
    if (f.n != h.n) throw std::invalid_argument("inner_product: degree mismatch");
    Rational s = 0;
    for (const auto& [mu, v] : f.values) s += Rational(v * h.value(mu)) / Rational(z_of(mu));
    return s;
}

CyclicSubgroupSpec::CyclicSubgroupSpec(long n_, long ell_, long g_) : n(n_), ell(ell_), g(g_) {
    if (n < 0 || ell < 1 || g < 0 || g > n || (n - g) % ell != 0)
        throw std::invalid_argument("CyclicSubgroupSpec: need n = g + r*ell");
    r = (n - g) / ell;
}

std::vector<long> CyclicSubgroupSpec::generator() const {
    std::vector<long> w(n);
    std::iota(w.begin(), w.end(), 0);
    for (long c = 0; c < r; ++c)
        for (long t = 0; t < ell; ++t) w[g + c * ell + t] = g + c * ell + (t + 1) % ell;
    return w;
}

Partition power_cycle_type(const CyclicSubgroupSpec& spec, long i) {
    long i0 = spec.ell ? ((i % spec.ell) + spec.ell) % spec.ell : 0;
    std::vector<long> parts;
    if (i0 != 0 && spec.r > 0) {
        long d = std::gcd(i0, spec.ell);
        parts.assign(spec.r * d, spec.ell / d);
    }
    long fixed = spec.n - std::accumulate(parts.begin(), parts.end(), 0L);
    parts.insert(parts.end(), fixed, 1);
    return Partition(std::move(parts));
}

ClassFunction induce_from_cyclic(const CyclicSubgroupSpec& spec, long k) {
    const long ord = spec.order();
    ClassFunction f;
    f.n = spec.n;
    for (const Partition& mu : partitions_of(spec.n)) {
        CycInt s(spec.ell);
        for (long i = 0; i < ord; ++i)
            if (power_cycle_type(spec, i) == mu) s += CycInt::zeta_power(spec.ell, k * i);
        // (z_mu / ord) * sum over the intersection; a rational algebraic
        // integer, hence a plain integer.
        f.values.emplace(mu, exact_quotient((s * z_of(mu)).as_integer(), ord));
    }
    return f;
}

std::map<Partition, std::vector<Integer>> restriction_coeffs(const Partition& lambda, long ell,
                                                             long g) {
    const long n = lambda.size();
    CyclicSubgroupSpec spec(n, ell, g);
    const long ord = spec.order();
    const Integer gfact = factorial(g);

    // Cycle type of w^i on the moved points only (a partition of r*ell).
    std::vector<Partition> moved_type(ord);
    for (long i = 0; i < ord; ++i) {
        std::vector<long> parts;
        if (i != 0) {
            long d = std::gcd(i, spec.ell);
            parts.assign(spec.r * d, spec.ell / d);
        } else {
            parts.assign(spec.r * spec.ell, 1);
        }
        moved_type[i] = Partition(std::move(parts));
    }

    std::map<Partition, std::vector<Integer>> out;
    for (const Partition& mu : partitions_of(g)) {
        // scaled[i] = g! * sum_nu chi_lambda(nu u type_i) chi_mu(nu) / z_nu.
        std::vector<Integer> scaled(ord, 0);
        for (const Partition& nu : partitions_of(g)) {
            Integer cls = exact_quotient(gfact, z_of(nu));
            Integer cmu = character_value(mu, nu);
            if (cmu == 0) continue;
            for (long i = 0; i < ord; ++i)
                scaled[i] += character_value(lambda, union_partitions(nu, moved_type[i])) * cmu * cls;
        }
        std::vector<Integer> row(ord, 0);
        for (long j = 0; j < ord; ++j) {
            CycInt t(spec.ell);
            for (long i = 0; i < ord; ++i)
                t += CycInt::zeta_power(spec.ell, -i * j) * scaled[i];
            Integer a = exact_quotient(t.as_integer(), gfact * ord);
            if (a < 0) throw std::logic_error("restriction_coeffs: negative multiplicity");
            row[j] = a;
        }
        out.emplace(mu, std::move(row));
    }
    return out;
}

BinaryDihedralTable::BinaryDihedralTable(long l_) : l(l_) {
    if (l < 1) throw std::invalid_argument("BinaryDihedralTable: l must be >= 1");
    cyc_order = std::lcm(2 * l, 4L);
    const long L = cyc_order;
    auto zeta = [&](long e) { return CycInt::zeta_power(L, e); };
    auto intval = [&](long v) { return CycInt::integer(L, v); };

    class_names = {"e", "z"};
    class_sizes = {1, 1};
    for (long p = 1; p < l; ++p) {
        class_names.push_back("w^" + std::to_string(p));
        class_sizes.push_back(2);
    }
    class_names.push_back("s");
    class_sizes.push_back(l);
    class_names.push_back("sw");
    class_sizes.push_back(l);
    const long nc = num_classes();

    auto add_char = [&](const std::string& name, long dim, std::vector<CycInt> row) {
        char_names.push_back(name);
        degrees.push_back(dim);
        values.push_back(std::move(row));
    };

    std::vector<CycInt> row(nc, intval(1));
    add_char("0+", 1, row);

    row.assign(nc, intval(1));
    row[nc - 2] = intval(-1);
    row[nc - 1] = intval(-1);
    add_char("0-", 1, row);

    for (int sign : {+1, -1}) {  // "l+" then "l-"
        row.assign(nc, intval(1));
        row[1] = intval(l % 2 == 0 ? 1 : -1);
        for (long p = 1; p < l; ++p) row[1 + p] = intval(p % 2 == 0 ? 1 : -1);
        if (l % 2 == 0) {
            row[nc - 2] = intval(-sign);
            row[nc - 1] = intval(sign);
        } else {
            row[nc - 2] = zeta(L / 4) * Integer(sign);
            row[nc - 1] = zeta(L / 4) * Integer(-sign);
        }
        add_char(sign > 0 ? "l+" : "l-", 1, row);
    }

    for (long k = 1; k < l; ++k) {
        row.assign(nc, intval(0));
        row[0] = intval(2);
        row[1] = intval(k % 2 == 0 ? 2 : -2);
        for (long p = 1; p < l; ++p)
            row[1 + p] = zeta(L / (2 * l) * k * p) + zeta(-L / (2 * l) * k * p);
        add_char("chi_" + std::to_string(k), 2, row);
    }

    // Orthogonality of the table (rows and columns).
    for (long a = 0; a < num_chars(); ++a)
        for (long b = 0; b < num_chars(); ++b) {
            CycInt s(L);
            for (long c = 0; c < nc; ++c)
                s += values[a][c] * values[b][c].conj() * Integer(class_sizes[c]);
            if (s != intval(a == b ? 4 * l : 0))
                throw std::logic_error("BinaryDihedralTable: row orthogonality failed");
        }
    for (long c1 = 0; c1 < nc; ++c1)
        for (long c2 = 0; c2 < nc; ++c2) {
            CycInt s(L);
            for (long a = 0; a < num_chars(); ++a) s += values[a][c1] * values[a][c2].conj();
            if (s != intval(c1 == c2 ? 4 * l / class_sizes[c1] : 0))
                throw std::logic_error("BinaryDihedralTable: column orthogonality failed");
        }
}

long BinaryDihedralTable::char_index(const std::string& name) const {
    for (long i = 0; i < num_chars(); ++i)
        if (char_names[i] == name) return i;
    throw std::invalid_argument("BinaryDihedralTable: no character named " + name);
}

std::vector<long> chi_normalize(const BinaryDihedralTable& table, long i) {
    const long two_l = 2 * table.l;
    long i0 = ((i % two_l) + two_l) % two_l;
    if (i0 == 0) return {table.char_index("0+"), table.char_index("0-")};
    if (i0 == table.l) return {table.char_index("l+"), table.char_index("l-")};
    long k = std::min(i0, two_l - i0);
    return {table.char_index("chi_" + std::to_string(k))};
}

namespace {

std::vector<long> compose(const std::vector<long>& f, const std::vector<long>& g) {
    std::vector<long> h(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) h[x] = f[g[x]];
    return h;
}

std::vector<long> identity_perm(long m) {
    std::vector<long> id(m);
    std::iota(id.begin(), id.end(), 0);
    return id;
}

}  // namespace

DihedralEmbedding build_dihedral_embedding(long l, long r) {
    if (l < 1) throw std::invalid_argument("build_dihedral_embedding: l must be >= 1");
    if (r <= 0 || r % 2 != 0)
        throw std::invalid_argument("build_dihedral_embedding: r must be positive and even");
    DihedralEmbedding emb;
    emb.l = l;
    emb.r = r;
    emb.m = 2 * l * r;
    const long c = 2 * l;  // cycle length

    emb.w.resize(emb.m);
    for (long a = 0; a < r; ++a)
        for (long t = 0; t < c; ++t) emb.w[a * c + t] = a * c + (t + 1) % c;

    emb.s.resize(emb.m);
    for (long a = 0; a < r / 2; ++a) {
        long u = (2 * a) * c, v = (2 * a + 1) * c;
        for (long i = 0; i < c; ++i) {
            emb.s[u + i] = v + (c - i) % c;            // u_i -> v_{-i}
            emb.s[v + i] = u + ((l - i) % c + c) % c;  // v_i -> u_{l-i}
        }
    }

    // Defining relations.
    std::vector<long> wl = identity_perm(emb.m);
    for (long t = 0; t < l; ++t) wl = compose(wl, emb.w);
    std::vector<long> s2 = compose(emb.s, emb.s);
    if (s2 != wl) throw std::logic_error("dihedral embedding: s^2 != w^l");
    if (compose(s2, s2) != identity_perm(emb.m))
        throw std::logic_error("dihedral embedding: s^4 != id");
    std::vector<long> winv(emb.m);
    for (long x = 0; x < emb.m; ++x) winv[emb.w[x]] = x;
    if (compose(emb.s, emb.w) != compose(winv, emb.s))  // s w = w^{-1} s
        throw std::logic_error("dihedral embedding: s w s^{-1} != w^{-1}");

    // Enumerate the 4l elements w^a and s w^a with their class labels.
    std::vector<long> cur = identity_perm(emb.m);
    std::set<std::vector<long>> seen;
    for (long a = 0; a < c; ++a) {
        long cls = (a == 0) ? 0 : (a == l) ? 1 : 1 + std::min(a, c - a);
        emb.elements.push_back(cur);
        emb.element_class.push_back(cls);
        emb.elements.push_back(compose(emb.s, cur));
        emb.element_class.push_back(a % 2 == 0 ? l + 1 : l + 2);
        seen.insert(emb.elements[emb.elements.size() - 2]);
        seen.insert(emb.elements.back());
        cur = compose(emb.w, cur);
    }
    if (static_cast<long>(seen.size()) != 4 * l)
        throw std::logic_error("dihedral embedding: |<w,s>| != 4l");
    return emb;
}

ClassFunction induce_from_dihedral(const DihedralEmbedding& emb, const BinaryDihedralTable& table,
                                   long chi) {
    if (table.l != emb.l) throw std::invalid_argument("induce_from_dihedral: mismatched l");
    if (chi < 0 || chi >= table.num_chars())
        throw std::invalid_argument("induce_from_dihedral: bad character index");
    ClassFunction f;
    f.n = emb.m;
    std::vector<Partition> types;
    types.reserve(emb.elements.size());
    for (const auto& perm : emb.elements) types.push_back(cycle_type(perm));
    for (const Partition& mu : partitions_of(emb.m)) {
        CycInt s(table.cyc_order);
        for (std::size_t j = 0; j < emb.elements.size(); ++j)
            if (types[j] == mu) s += table.values[chi][emb.element_class[j]];
        f.values.emplace(mu, exact_quotient((s * z_of(mu)).as_integer(), Integer(4 * emb.l)));
    }
    return f;
}

Partition cycle_type(const std::vector<long>& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::vector<long> parts;
    for (std::size_t x = 0; x < perm.size(); ++x) {
        if (seen[x]) continue;
        long len = 0, y = static_cast<long>(x);
        while (!seen[y]) {
            seen[y] = true;
            y = perm[y];
            ++len;
        }
        parts.push_back(len);
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

}  // namespace procesi
