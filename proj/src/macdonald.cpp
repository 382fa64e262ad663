// SPDX-License-Identifier: Apache-2.0
//
// H~_lambda via the combinatorial filling formula.  Diagrams are drawn with
// row 1 at the bottom (cells (i,j), 1-based); a filling is any assignment of
// values to cells, and
//   Des(s)  = {(i,j) : i >= 2, s(i,j) > s(i-1,j)},
//   maj(s)  = sum_{c in Des} (leg(c) + 1),
//   inv(s)  = #{attacking pairs u before v in reading order, s(u) > s(v)}
//             - sum_{c in Des} arm(c),
// where the reading order scans rows top to bottom, left to right, and two
// cells attack when they share a row, or sit in adjacent rows (i, i-1) with
// the lower cell strictly to the left.  Then H~_lambda = sum_s q^inv t^maj z^s.
// The monomial coefficients (one per content partition) are converted to the
// Schur basis by inverting the unitriangular Kostka matrix.

#include "procesi/macdonald.hpp"

#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <unistd.h>

namespace procesi {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::logic_error("macdonald: " + msg);
}

// ---- filling enumeration ---------------------------------------------------

struct CellPlan {
    std::vector<long> attackers;  // earlier reading positions attacking this cell
    long upper = -1;              // reading position of the cell directly above
    long upper_maj = 0;           // leg(upper cell) + 1
    long upper_arm = 0;           // arm(upper cell)
};

struct FillingPlan {
    long n = 0;
    std::vector<CellPlan> cells;  // in reading order
};

FillingPlan build_plan(const Partition& lambda) {
    FillingPlan plan;
    plan.n = lambda.size();
    long rows = lambda.num_parts();
    Partition conj = lambda.conjugate();
    // Reading positions, top row (largest i) first.
    std::map<std::pair<long, long>, long> pos;
    for (long i = rows; i >= 1; --i)
        for (long j = 1; j <= lambda.part(i); ++j) {
            long p = static_cast<long>(plan.cells.size());
            pos[{i, j}] = p;
            CellPlan cp;
            for (long jj = 1; jj < j; ++jj) cp.attackers.push_back(pos.at({i, jj}));
            for (long k = j + 1; k <= lambda.part(i + 1); ++k)
                cp.attackers.push_back(pos.at({i + 1, k}));
            if (lambda.part(i + 1) >= j) {
                cp.upper = pos.at({i + 1, j});
                cp.upper_maj = (conj.part(j) - (i + 1)) + 1;  // leg + 1
                cp.upper_arm = lambda.part(i + 1) - j;
            }
            plan.cells.push_back(std::move(cp));
        }
    return plan;
}

// Sum q^inv t^maj over fillings whose content is the partition nu.
LaurentQT monomial_coefficient(const FillingPlan& plan, const Partition& nu) {
    std::vector<long> remaining(nu.parts());
    std::vector<long> sigma(plan.cells.size(), 0);
    LaurentQT acc;
    auto dfs = [&](auto&& self, long p, long inv, long maj) -> void {
        if (p == plan.n) {
            require(inv >= 0, "negative inv statistic — filling conventions broken");
            acc.add(inv, maj, 1);
            return;
        }
        const CellPlan& cp = plan.cells[p];
        for (size_t v = 0; v < remaining.size(); ++v) {
            if (remaining[v] == 0) continue;
            long val = static_cast<long>(v) + 1;
            long dinv = 0, dmaj = 0;
            for (long u : cp.attackers)
                if (sigma[u] > val) ++dinv;
            if (cp.upper >= 0 && sigma[cp.upper] > val) {
                dmaj = cp.upper_maj;
                dinv -= cp.upper_arm;
            }
            --remaining[v];
            sigma[p] = val;
            self(self, p + 1, inv + dinv, maj + dmaj);
            ++remaining[v];
        }
    };
    dfs(dfs, 0, 0, 0);
    return acc;
}

bool dominates(const Partition& a, const Partition& b) {
    long sa = 0, sb = 0;
    long k = std::max(a.num_parts(), b.num_parts());
    for (long i = 1; i <= k; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa < sb) return false;
    }
    return true;
}

std::map<Partition, LaurentQT> compute_schur_expansion(const Partition& lambda) {
    FillingPlan plan = build_plan(lambda);
    std::vector<Partition> shapes = partitions_of(lambda.size());  // decreasing lex
    std::map<Partition, LaurentQT> schur;
    // Decreasing lex refines dominance and K_{mu,nu} != 0 forces mu >= nu,
    // so the system is triangular in this order with unit diagonal.
    for (const Partition& nu : shapes) {
        LaurentQT d = monomial_coefficient(plan, nu);
        for (const auto& [mu, kmu] : schur) {
            if (!dominates(mu, nu)) continue;
            Integer k = kostka_number(mu, nu);
            if (k != 0) d -= kmu * LaurentQT(k);
        }
        schur.emplace(nu, std::move(d));
    }
    return schur;
}

// ---- invariants ------------------------------------------------------------

void validate_fiber(const ProcesiFiber& f) {
    long n = f.lambda.size();
    std::vector<Partition> shapes = partitions_of(n);
    require(f.schur_expansion.size() == shapes.size(), "wrong number of Schur coefficients");
    for (const Partition& mu : shapes) {
        auto it = f.schur_expansion.find(mu);
        require(it != f.schur_expansion.end(), "missing Schur coefficient at " + mu.str());
        const LaurentQT& c = it->second;
        require(c.is_polynomial() && c.has_nonnegative_coeffs(),
                "coefficient at " + mu.str() + " is not a nonnegative polynomial");
        require(c.eval_at_one_one() == mu.dimension(),
                "q=t=1 specialization differs from the regular representation");
    }
    if (n >= 1) {
        Partition row(std::vector<long>{n}), col(std::vector<long>(n, 1));
        require(f.schur_expansion.at(row) == LaurentQT(1), "coefficient of s_(n) is not 1");
        require(f.schur_expansion.at(col) ==
                    LaurentQT::monomial(1, f.lambda.conjugate().n_statistic(),
                                        f.lambda.n_statistic()),
                "coefficient of s_(1^n) is not q^n(lam*) t^n(lam)");
    }
}

// ---- disk cache ------------------------------------------------------------

std::mutex cache_dir_mutex;

std::optional<std::string>& cache_dir_storage() {
    static std::optional<std::string> dir = []() -> std::optional<std::string> {
        const char* env = std::getenv("PROCESI_CACHE");
        if (env != nullptr && *env != '\0') return std::string(env);
        return std::nullopt;
    }();
    return dir;
}

std::string fiber_file_name(const Partition& lambda) {
    std::string name = "htilde-";
    if (lambda.empty()) name += "empty";
    for (size_t i = 0; i < lambda.parts().size(); ++i) {
        if (i > 0) name += ".";
        name += std::to_string(lambda.parts()[i]);
    }
    return name + ".json";
}

nlohmann::ordered_json integer_to_json(const Integer& c) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
        return c.convert_to<long long>();
    return c.str();
}

Integer integer_from_json(const nlohmann::json& j) {
    if (j.is_string()) return Integer(j.get<std::string>());
    return Integer(j.get<long long>());
}

std::optional<ProcesiFiber> load_fiber(const std::filesystem::path& file,
                                       const Partition& lambda) {
    std::ifstream in(file);
    if (!in) return std::nullopt;
    try {
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("partition").get<std::vector<long>>() != lambda.parts()) return std::nullopt;
        ProcesiFiber f;
        f.lambda = lambda;
        for (const auto& entry : j.at("coefficients")) {
            Partition mu(entry.at("mu").get<std::vector<long>>());
            LaurentQT c;
            for (const auto& term : entry.at("terms"))
                c.add(term.at(0).get<long>(), term.at(1).get<long>(), integer_from_json(term.at(2)));
            f.schur_expansion.emplace(std::move(mu), std::move(c));
        }
        validate_fiber(f);
        return f;
    } catch (const std::exception&) {
        return std::nullopt;  // corrupt or stale: fall through to recomputation
    }
}

void store_fiber(const std::filesystem::path& dir, const ProcesiFiber& f) {
    nlohmann::ordered_json j;
    j["partition"] = f.lambda.parts();
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const auto& [mu, c] : f.schur_expansion) {
        nlohmann::ordered_json entry;
        entry["mu"] = mu.parts();
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (const auto& [key, coeff] : c.terms())
            terms.push_back({key.first, key.second, integer_to_json(coeff)});
        entry["terms"] = std::move(terms);
        coeffs.push_back(std::move(entry));
    }
    j["coefficients"] = std::move(coeffs);

    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::filesystem::path target = dir / fiber_file_name(f.lambda);
    std::filesystem::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp);
        if (!out) return;  // cache is best-effort
        out << j.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, target, ec);  // atomic replace-on-complete
    if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace

// ---- public operations -----------------------------------------------------

void set_fiber_cache_dir(std::optional<std::string> dir) {
    std::lock_guard<std::mutex> lock(cache_dir_mutex);
    cache_dir_storage() = std::move(dir);
}

std::optional<std::string> fiber_cache_dir() {
    std::lock_guard<std::mutex> lock(cache_dir_mutex);
    return cache_dir_storage();
}

Integer kostka_number(const Partition& lambda, const Partition& nu) {
    if (lambda.size() != nu.size()) return 0;
    if (nu.empty()) return 1;
    static std::mutex mutex;
    static std::map<std::pair<Partition, Partition>, Integer> memo;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = memo.find({lambda, nu});
        if (it != memo.end()) return it->second;
    }
    // Peel the largest value off as a horizontal strip of size nu_last.
    std::vector<long> inner_nu(nu.parts().begin(), nu.parts().end() - 1);
    long strip = nu.parts().back();
    Integer total = 0;
    std::vector<long> mu(lambda.num_parts(), 0);
    auto rec = [&](auto&& self, long i, long left) -> void {
        if (i == lambda.num_parts()) {
            if (left != 0) return;
            std::vector<long> trimmed;
            for (long part : mu)
                if (part > 0) trimmed.push_back(part);
            total += kostka_number(Partition(trimmed), Partition(inner_nu));
            return;
        }
        long hi = lambda.part(i + 1);                 // lambda_i (0-based i)
        long lo = lambda.part(i + 2);                 // lambda_{i+1}; strip rows interlace
        for (long m = lo; m <= hi; ++m) {
            long removed = hi - m;
            if (removed > left) continue;
            mu[i] = m;
            self(self, i + 1, left - removed);
        }
        mu[i] = 0;
    };
    rec(rec, 0, strip);
    std::lock_guard<std::mutex> lock(mutex);
    return memo.emplace(std::make_pair(lambda, nu), total).first->second;
}

ProcesiFiber macdonald_fiber(const Partition& lambda) {
    static std::mutex mutex;
    static std::map<Partition, ProcesiFiber> memory;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = memory.find(lambda);
        if (it != memory.end()) return it->second;
    }
    std::optional<std::string> dir = fiber_cache_dir();
    std::optional<ProcesiFiber> fiber;
    if (dir) fiber = load_fiber(std::filesystem::path(*dir) / fiber_file_name(lambda), lambda);
    if (!fiber) {
        ProcesiFiber f;
        f.lambda = lambda;
        f.schur_expansion = compute_schur_expansion(lambda);
        validate_fiber(f);
        if (dir) store_fiber(std::filesystem::path(*dir), f);
        fiber = std::move(f);
    }
    std::lock_guard<std::mutex> lock(mutex);
    return memory.emplace(lambda, std::move(*fiber)).first->second;
}

SymFunc<RationalQ> specialize_tq_inverse(const ProcesiFiber& f) {
    long n = f.lambda.size();
    SymFunc<RationalQ> out(n, Basis::schur);
    for (const auto& [mu, c] : f.schur_expansion)
        out.add_term(mu, RationalQ(c.specialize_t_q_inverse()));
    // H~_lambda(z;q,q^{-1}) = q^{-n(lambda)} prod_c (1-q^{h_c}) s_lambda[Z/(1-q)].
    LaurentQ hooks(1);
    for (long h : f.lambda.hook_multiset()) hooks *= one_minus_qk(h);
    RationalQ scale(hooks, LaurentQ::monomial(1, f.lambda.n_statistic()));
    SymFunc<RationalQ> rhs = powersum_to_schur(plethysm_onemq(f.lambda)) * scale;
    require(out == rhs, "t = q^{-1} specialization failed the plethystic identity at " +
                            f.lambda.str());
    return out;
}

ModLComponents mod_l_components(const ProcesiFiber& f, long ell) {
    if (ell < 1) throw std::invalid_argument("mod_l_components: ell must be >= 1");
    long n = f.lambda.size();
    ModLComponents out;
    out.ell = ell;
    out.components.assign(ell, SymFunc<Integer>(n, Basis::schur));
    for (const auto& [mu, c] : f.schur_expansion)
        for (long j = 0; j < ell; ++j)
            out.components[j].add_term(mu, c.component_sum_mod(ell, j));
    // The components partition the fiber, whose total is the regular
    // representation.
    for (const Partition& mu : partitions_of(n)) {
        Integer total = 0;
        for (const auto& comp : out.components) total += comp.coeff(mu);
        require(total == mu.dimension(), "mod-l components do not sum to the regular rep");
    }
    return out;
}

SymFunc<LaurentQ> coinvariant_graded_frobenius(long n) {
    SymFunc<LaurentQ> out(n, Basis::schur);
    for (const Partition& mu : partitions_of(n)) out.add_term(mu, fake_degree(mu));
    // Cross-check: the Schur coefficients of H~_(n) are exactly the fake
    // degrees, with no t dependence.
    ProcesiFiber row = macdonald_fiber(Partition(n >= 1 ? std::vector<long>{n}
                                                        : std::vector<long>{}));
    for (const Partition& mu : partitions_of(n)) {
        LaurentQ fd = fake_degree(mu);
        LaurentQT lifted;
        if (!fd.is_zero())
            for (long e = fd.min_exp(); e <= fd.max_exp(); ++e) lifted.add(e, 0, fd.coeff(e));
        require(row.schur_expansion.at(mu) == lifted,
                "coinvariant grading disagrees with the one-row fiber");
    }
    return out;
}

}  // namespace procesi
