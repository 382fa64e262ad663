// SPDX-License-Identifier: Apache-2.0
//
// Command-line driver: core/quotient data, fiber Schur expansions, the
// cyclic and dihedral verification sweeps, and the fixed-point component
// census.  Reports are deterministic JSON (stable key order) or TSV; the
// exit status is zero exactly when every check in the run passed.

#include "procesi/rootlattice.hpp"
#include "procesi/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <atomic>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace procesi;
using nlohmann::ordered_json;

namespace {

// Same convention as the fiber cache: int64 when it fits, else a decimal
// string, so arbitrarily large coefficients survive any JSON reader.
ordered_json integer_json(const Integer& c) {
    if (c >= std::numeric_limits<std::int64_t>::min() &&
        c <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(c);
    return c.str();
}

ordered_json partition_json(const Partition& p) {
    ordered_json j = ordered_json::array();
    for (long part : p.parts()) j.push_back(part);
    return j;
}

struct OutputOptions {
    std::string output;  // empty = stdout
    std::string format = "json";
};

void add_output_options(CLI::App* cmd, OutputOptions& opt) {
    cmd->add_option("--output", opt.output, "Write the report to this file instead of stdout");
    cmd->add_option("--format", opt.format, "Report format")
        ->check(CLI::IsMember({"json", "tsv"}))
        ->capture_default_str();
}

struct CacheOptions {
    bool no_cache = false;
    std::string cache_dir;
};

void add_cache_options(CLI::App* cmd, CacheOptions& opt) {
    cmd->add_flag("--no-cache", opt.no_cache, "Disable the on-disk fiber cache");
    cmd->add_option("--cache-dir", opt.cache_dir, "Directory for cached fiber expansions");
}

// Precedence: --no-cache, --cache-dir, the PROCESI_CACHE environment
// default, then a procesi-cache directory beside the output file.
void configure_cache(const CacheOptions& cache, const std::string& output) {
    if (cache.no_cache) {
        set_fiber_cache_dir(std::nullopt);
        return;
    }
    if (!cache.cache_dir.empty()) {
        set_fiber_cache_dir(cache.cache_dir);
        return;
    }
    if (fiber_cache_dir().has_value()) return;
    if (!output.empty()) {
        std::filesystem::path beside = std::filesystem::path(output).parent_path() / "procesi-cache";
        set_fiber_cache_dir(beside.string());
    }
}

int emit(const OutputOptions& opt, const ordered_json& j, const std::string& tsv) {
    std::string text = opt.format == "json" ? j.dump(2) + "\n" : tsv;
    if (opt.output.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(opt.output);
    if (!out) {
        std::cerr << "error: cannot open " << opt.output << " for writing\n";
        return 3;
    }
    out << text;
    return 0;
}

// Run tasks 0..count-1 on up to `jobs` worker threads; results must be
// written to preassigned slots so the output order never depends on
// scheduling.  The first exception, if any, is rethrown after the join.
template <typename Task>
void run_tasks(long jobs, long count, Task task) {
    long workers = std::min<long>(std::max<long>(jobs, 1), count);
    if (workers <= 1) {
        for (long i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<long> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (long w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (long i = next++; i < count; i = next++) task(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

ordered_json row_json(const LambdaReport& row) {
    ordered_json j;
    j["lambda"] = partition_json(row.lambda);
    j["core"] = partition_json(row.core);
    j["g"] = row.g;
    j["r"] = row.r;
    j["pass"] = row.pass;
    if (!row.check.empty()) j["check"] = row.check;
    if (!row.diff.empty()) j["diff"] = row.diff;
    return j;
}

ordered_json report_json(const Report& rep, const std::string& modulus_key) {
    ordered_json j;
    j["params"] = ordered_json{{"n", rep.n}, {modulus_key, rep.ell}};
    ordered_json rows = ordered_json::array();
    long failed = 0;
    for (const LambdaReport& row : rep.per_lambda) {
        if (!row.pass) ++failed;
        rows.push_back(row_json(row));
    }
    j["per_lambda"] = std::move(rows);
    j["summary"] = ordered_json{{"rows", static_cast<long>(rep.per_lambda.size())},
                                {"failed", failed},
                                {"pass", failed == 0}};
    return j;
}

void report_tsv(std::ostringstream& out, const Report& rep, const std::string& modulus_key) {
    for (const LambdaReport& row : rep.per_lambda) {
        out << rep.n << '\t' << rep.ell << '\t' << row.lambda.str() << '\t' << row.core.str()
            << '\t' << row.g << '\t' << row.r << '\t' << (row.pass ? "true" : "false") << '\t'
            << (row.check.empty() ? "-" : row.check) << '\t' << (row.diff.empty() ? "-" : row.diff)
            << '\n';
    }
    (void)modulus_key;
}

std::string tsv_header(const std::string& modulus_key) {
    return "n\t" + modulus_key + "\tlambda\tcore\tg\tr\tpass\tcheck\tdiff\n";
}

int run_verify(const std::string& command, long n, const std::vector<long>& moduli, long jobs,
               const OutputOptions& out_opt, bool type_d) {
    // One task per (modulus, shape) pair, written into fixed slots.
    std::vector<Report> reports(moduli.size());
    std::vector<std::vector<Partition>> shapes(moduli.size());
    std::vector<std::pair<std::size_t, std::size_t>> tasks;
    for (std::size_t m = 0; m < moduli.size(); ++m) {
        reports[m].n = n;
        reports[m].ell = moduli[m];
        for (const Partition& lam : partitions_of(n)) {
            if (type_d && !lam.is_symmetric()) continue;
            shapes[m].push_back(lam);
            tasks.emplace_back(m, shapes[m].size() - 1);
        }
        reports[m].per_lambda.resize(shapes[m].size());
    }
    run_tasks(jobs, static_cast<long>(tasks.size()), [&](long t) {
        auto [m, i] = tasks[static_cast<std::size_t>(t)];
        reports[m].per_lambda[i] = type_d ? verify_type_D_row(shapes[m][i], moduli[m])
                                          : verify_type_A_row(shapes[m][i], moduli[m]);
    });

    const std::string modulus_key = type_d ? "l" : "ell";
    bool all_pass = true;
    ordered_json j;
    j["command"] = command;
    j["params"] = ordered_json{{"n", n}, {modulus_key, moduli}};
    ordered_json report_array = ordered_json::array();
    std::ostringstream tsv;
    tsv << tsv_header(modulus_key);
    for (const Report& rep : reports) {
        all_pass = all_pass && rep.all_pass();
        report_array.push_back(report_json(rep, modulus_key));
        report_tsv(tsv, rep, modulus_key);
    }
    j["reports"] = std::move(report_array);
    j["summary"] = ordered_json{{"pass", all_pass}};
    int rc = emit(out_opt, j, tsv.str());
    if (rc != 0) return rc;
    return all_pass ? 0 : 1;
}

int run_core(const std::string& lambda_text, long ell, const OutputOptions& out_opt) {
    Partition lambda = Partition::parse(lambda_text);
    CoreQuotientData cq = core_quotient(lambda, ell);
    ordered_json j;
    j["lambda"] = partition_json(lambda);
    j["ell"] = ell;
    j["core"] = partition_json(cq.core);
    ordered_json quot = ordered_json::array();
    for (const Partition& q : cq.quotient) quot.push_back(partition_json(q));
    j["quotient"] = std::move(quot);
    j["g"] = cq.g;
    j["r"] = cq.r;
    std::ostringstream tsv;
    tsv << "lambda\tell\tcore\tquotient\tg\tr\n" << lambda.str() << '\t' << ell << '\t'
        << cq.core.str() << '\t';
    for (std::size_t i = 0; i < cq.quotient.size(); ++i)
        tsv << (i ? ";" : "") << cq.quotient[i].str();
    tsv << '\t' << cq.g << '\t' << cq.r << '\n';
    return emit(out_opt, j, tsv.str());
}

// Render sum_mu c_mu(q,t) s_mu with coefficients in parentheses when they
// have more than one term.
std::string expansion_str(const ProcesiFiber& fiber) {
    std::string out;
    for (const Partition& mu : partitions_of(fiber.lambda.size())) {
        auto it = fiber.schur_expansion.find(mu);
        if (it == fiber.schur_expansion.end() || it->second.is_zero()) continue;
        std::string c = it->second.str();
        std::string term;
        if (c == "1") term = "s" + mu.str();
        else if (c.find(' ') != std::string::npos) term = "(" + c + ")*s" + mu.str();
        else term = c + "*s" + mu.str();
        out += (out.empty() ? "" : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

int run_macdonald(const std::string& lambda_text, const OutputOptions& out_opt) {
    Partition lambda = Partition::parse(lambda_text);
    ProcesiFiber fiber = macdonald_fiber(lambda);
    ordered_json j;
    j["lambda"] = partition_json(lambda);
    ordered_json coeffs = ordered_json::array();
    std::ostringstream tsv;
    tsv << "mu\tcoefficient\n";
    for (const Partition& mu : partitions_of(lambda.size())) {
        auto it = fiber.schur_expansion.find(mu);
        if (it == fiber.schur_expansion.end() || it->second.is_zero()) continue;
        ordered_json entry;
        entry["mu"] = partition_json(mu);
        ordered_json terms = ordered_json::array();
        for (const auto& [key, c] : it->second.terms())
            terms.push_back(ordered_json::array({key.first, key.second, integer_json(c)}));
        entry["terms"] = std::move(terms);
        entry["str"] = it->second.str();
        coeffs.push_back(std::move(entry));
        tsv << mu.str() << '\t' << it->second.str() << '\n';
    }
    j["schur_expansion"] = std::move(coeffs);
    j["str"] = expansion_str(fiber);
    return emit(out_opt, j, tsv.str());
}

int run_components(const std::string& group_text, long n, const OutputOptions& out_opt) {
    GroupSpec group = GroupSpec::parse(group_text);
    McKayGraph graph = mckay_graph(group);
    std::vector<ComponentEntry> entries = enumerate_components(graph, n);
    ordered_json j;
    j["command"] = "components";
    j["params"] = ordered_json{{"group", group.str()}, {"n", n}};
    ordered_json names = ordered_json::array();
    for (const std::string& name : graph.vertex_names) names.push_back(name);
    j["vertex_names"] = std::move(names);
    ordered_json comps = ordered_json::array();
    std::ostringstream tsv;
    tsv << "d\twt\n";
    for (const ComponentEntry& e : entries) {
        ordered_json entry;
        ordered_json d = ordered_json::array();
        for (long c : e.d) d.push_back(c);
        entry["d"] = std::move(d);
        entry["wt"] = e.wt;
        comps.push_back(std::move(entry));
        for (std::size_t i = 0; i < e.d.size(); ++i) tsv << (i ? "," : "") << e.d[i];
        tsv << '\t' << e.wt << '\n';
    }
    j["components"] = std::move(comps);
    j["count"] = static_cast<long>(entries.size());
    return emit(out_opt, j, tsv.str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fiber decompositions of the Procesi bundle: exact verification tools"};
    app.require_subcommand(1);

    std::string lambda_text;
    long ell = 1;
    long n = 0;
    std::vector<long> ell_list;
    std::vector<long> l_list;
    long jobs = static_cast<long>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    std::string group_text;
    OutputOptions out_opt;
    CacheOptions cache_opt;

    CLI::App* core_cmd = app.add_subcommand("core", "Core, quotient, and hook counts of a shape");
    core_cmd->add_option("lambda", lambda_text, "Partition, e.g. \"[2,2,1]\"")->required();
    core_cmd->add_option("ell", ell, "Hook length to strip")->required()->check(CLI::PositiveNumber);
    add_output_options(core_cmd, out_opt);

    CLI::App* mac_cmd = app.add_subcommand("macdonald", "Schur expansion of the fiber over a shape");
    mac_cmd->add_option("lambda", lambda_text, "Partition, e.g. \"[2,2,1]\"")->required();
    add_cache_options(mac_cmd, cache_opt);
    add_output_options(mac_cmd, out_opt);

    CLI::App* va_cmd = app.add_subcommand("verify-type-a", "Cyclic decomposition check for all shapes of n");
    va_cmd->add_option("--n", n, "Size of the shapes")->required()->check(CLI::NonNegativeNumber);
    va_cmd->add_option("--ell", ell_list, "Comma-separated moduli")
        ->required()
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    va_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    add_cache_options(va_cmd, cache_opt);
    add_output_options(va_cmd, out_opt);

    CLI::App* vd_cmd = app.add_subcommand("verify-type-d", "Dihedral decomposition check for symmetric shapes of n");
    vd_cmd->add_option("--n", n, "Size of the shapes")->required()->check(CLI::NonNegativeNumber);
    vd_cmd->add_option("--l", l_list, "Comma-separated dihedral indices (group order 4l)")
        ->required()
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    vd_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    add_cache_options(vd_cmd, cache_opt);
    add_output_options(vd_cmd, out_opt);

    CLI::App* comp_cmd = app.add_subcommand("components", "Fixed-point component census at size n");
    comp_cmd->add_option("--group", group_text, "cyclic:ell or binary_dihedral:l")->required();
    comp_cmd->add_option("--n", n, "Dimension-weighted size")->required()->check(CLI::NonNegativeNumber);
    add_output_options(comp_cmd, out_opt);

    CLI11_PARSE(app, argc, argv);

    try {
        configure_cache(cache_opt, out_opt.output);
        if (*core_cmd) return run_core(lambda_text, ell, out_opt);
        if (*mac_cmd) return run_macdonald(lambda_text, out_opt);
        if (*va_cmd) return run_verify("verify-type-a", n, ell_list, jobs, out_opt, false);
        if (*vd_cmd) return run_verify("verify-type-d", n, l_list, jobs, out_opt, true);
        if (*comp_cmd) return run_components(group_text, n, out_opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
