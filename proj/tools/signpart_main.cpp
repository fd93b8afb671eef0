// Batch front end: exact character values, sign/up/sd classification and the
// verification sweeps, with text, JSON and CSV reporting.
//
// Exit codes: 0 success, 1 usage or input error, 2 a verification subcommand
// found a discrepancy (findings are printed in full before exiting).

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "signpart/classify.hpp"
#include "signpart/counting.hpp"
#include "signpart/mn.hpp"
#include "signpart/odd_degree.hpp"
#include "signpart/parallel.hpp"
#include "signpart/partition.hpp"
#include "signpart/theta.hpp"

using ordered_json = nlohmann::ordered_json;
using namespace signpart;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitDiscrepancy = 2;

struct Options {
    std::string format = "text";
    unsigned workers = 1;
    int ceiling = 30;
    std::string cache_dir;

    CharStore store;
    bool store_enabled = false;

    CharStore* store_ptr() { return store_enabled ? &store : nullptr; }

    bool json() const { return format == "json"; }
    bool csv() const { return format == "csv"; }
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check_ceiling(int n, const Options& opt) {
    if (n > opt.ceiling)
        throw UsageError("n = " + std::to_string(n) +
                         " exceeds the brute-force ceiling (" +
                         std::to_string(opt.ceiling) + "); pass --ceiling " +
                         std::to_string(n) + " to allow the sweep");
}

void reject_csv(const Options& opt, const std::string& subcommand) {
    if (opt.csv())
        throw UsageError("csv output is not supported for '" + subcommand +
                         "' (use text or json)");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

std::string join_partitions(const std::vector<Partition>& list) {
    std::string out;
    for (const Partition& p : list) {
        if (!out.empty()) out += "; ";
        out += p.str();
    }
    return out;
}

ordered_json partition_strings(const std::vector<Partition>& list) {
    ordered_json arr = ordered_json::array();
    for (const Partition& p : list) arr.push_back(p.str());
    return arr;
}

std::filesystem::path cache_file(const Options& opt) {
    return std::filesystem::path(opt.cache_dir) / "charvalues.bin";
}

void load_cache(Options& opt) {
    if (opt.cache_dir.empty()) return;
    opt.store_enabled = true;
    const auto file = cache_file(opt);
    if (std::filesystem::exists(file) && !opt.store.load(file))
        std::cerr << "warning: cache file " << file.string()
                  << " is unreadable or corrupt; recomputing\n";
}

void save_cache(Options& opt) {
    if (!opt.store_enabled) return;
    std::error_code ec;
    std::filesystem::create_directories(opt.cache_dir, ec);
    if (ec || !opt.store.save(cache_file(opt)))
        std::cerr << "warning: could not write cache file "
                  << cache_file(opt).string() << "\n";
}

// ---------------------------------------------------------------- char

int run_char(Options& opt, const std::string& lambda_text,
             const std::string& mu_text) {
    reject_csv(opt, "char");
    const Partition lambda = Partition::parse(lambda_text);
    const Partition mu = Partition::parse(mu_text);
    CharColumn column(mu, opt.store_ptr());
    const CharValue v = column.value(lambda);
    if (opt.json()) {
        ordered_json j{{"lambda", lambda.str()}, {"mu", mu.str()}, {"value", v.str()}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "[" << lambda.str() << "](" << mu.str() << ") = " << v << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- classify

int run_classify(Options& opt, const std::string& mu_text) {
    reject_csv(opt, "classify");
    const Partition mu = Partition::parse(mu_text);
    check_ceiling(mu.weight(), opt);
    const ClassificationReport report = classify(mu, opt.workers, opt.store_ptr());
    if (opt.json()) {
        ordered_json j;
        j["mu"] = report.mu.str();
        j["n"] = report.n;
        j["is_sign"] = report.is_sign;
        j["is_up"] = report.is_up;
        j["is_sd"] = report.is_sd;
        if (report.support_size) j["support_size"] = *report.support_size;
        if (report.witness)
            j["witness"] = ordered_json{{"lambda", report.witness->lambda.str()},
                                        {"value", report.witness->value.str()}};
        if (report.up_witness) j["up_witness"] = report.up_witness->str();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "mu = " << report.mu.str() << "  (n = " << report.n << ")\n";
        std::cout << "sign: " << yes_no(report.is_sign);
        if (report.support_size) std::cout << "  support " << *report.support_size;
        if (report.witness)
            std::cout << "  witness [" << report.witness->lambda.str() << "]("
                      << report.mu.str() << ") = " << report.witness->value;
        std::cout << "\n";
        std::cout << "up:   " << yes_no(report.is_up);
        if (report.up_witness) std::cout << "  witness " << report.up_witness->str();
        std::cout << "\n";
        std::cout << "sd:   " << yes_no(report.is_sd) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- enumerate

int run_enumerate(Options& opt, int n, const std::string& kind_name) {
    check_ceiling(n, opt);
    PartitionKind kind;
    if (kind_name == "sign")
        kind = PartitionKind::Sign;
    else if (kind_name == "up")
        kind = PartitionKind::Up;
    else if (kind_name == "sd")
        kind = PartitionKind::Sd;
    else
        throw UsageError("unknown kind '" + kind_name + "' (expected sign, up or sd)");

    const std::vector<Partition> list =
        enumerate_class(n, kind, opt.workers, opt.store_ptr());
    if (opt.json()) {
        ordered_json j{{"n", n},
                       {"kind", kind_name},
                       {"count", list.size()},
                       {"partitions", partition_strings(list)}};
        std::cout << j.dump() << "\n";
    } else if (opt.csv()) {
        std::cout << "n,partition\n";
        for (const Partition& p : list)
            std::cout << n << "," << csv_quote(p.str()) << "\n";
    } else {
        for (const Partition& p : list) std::cout << p.str() << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- theta

int run_theta(Options& opt, const std::string& mu_text) {
    reject_csv(opt, "theta");
    const Partition mu = Partition::parse(mu_text);
    check_ceiling(mu.weight(), opt);
    const ThetaDecomposition theta = theta_decompose(mu);
    if (opt.json()) {
        ordered_json j;
        j["mu"] = theta.mu.str();
        j["n"] = theta.mu.weight();
        j["z"] = centralizer_order(theta.mu).str();
        j["plus"] = partition_strings(theta.plus);
        j["minus"] = partition_strings(theta.minus);
        j["degree_plus"] = theta.degree_plus.str();
        j["degree_minus"] = theta.degree_minus.str();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "mu = " << theta.mu.str() << "  (n = " << theta.mu.weight()
                  << ", z = " << centralizer_order(theta.mu) << ")\n";
        std::cout << "plus  (degree " << theta.degree_plus
                  << "): " << join_partitions(theta.plus) << "\n";
        std::cout << "minus (degree " << theta.degree_minus
                  << "): " << join_partitions(theta.minus) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- theorem5

int run_theorem5(Options& opt, int n, int probe_prime) {
    reject_csv(opt, "theorem5");
    check_ceiling(n, opt);
    const OddDegreeReport report = verify_theorem5(n);
    if (opt.json()) {
        ordered_json j;
        j["n"] = report.n;
        j["exponents"] = report.exponents;
        j["mu"] = report.mu.str();
        j["mu_is_sd"] = report.mu_is_sd;
        j["sylow_ab_order"] = report.sylow_ab_order;
        j["odd_count"] = report.odd_count;
        j["support_matches"] = report.support_matches;
        j["theta_ok"] = report.theta_ok;
        j["ok"] = report.ok();
        if (probe_prime > 0) {
            const OddPrimeProbe probe = odd_prime_probe(n, probe_prime);
            j["probe"] = ordered_json{{"p", probe.p},
                                      {"mu", probe.mu.str()},
                                      {"support_size", probe.support_size},
                                      {"coprime_count", probe.coprime_count},
                                      {"match", probe.match},
                                      {"is_sign_class", probe.is_sign_class}};
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "n = " << report.n << ": mu = " << report.mu.str()
                  << " (sd: " << yes_no(report.mu_is_sd) << ")\n";
        std::cout << "sylow abelianization order: " << report.sylow_ab_order << "\n";
        std::cout << "odd-degree count: " << report.odd_count << "\n";
        std::cout << "support matches odd-degree set: "
                  << yes_no(report.support_matches) << "\n";
        std::cout << "theta vanishing: " << yes_no(report.theta_ok) << "\n";
        std::cout << "ok: " << yes_no(report.ok()) << "\n";
        if (probe_prime > 0) {
            const OddPrimeProbe probe = odd_prime_probe(n, probe_prime);
            std::cout << "probe p=" << probe.p << ": mu = " << probe.mu.str()
                      << "  support " << probe.support_size << "  coprime-degree "
                      << probe.coprime_count << "  match: " << yes_no(probe.match)
                      << "  sign class: " << yes_no(probe.is_sign_class) << "\n";
        }
    }
    return report.ok() ? 0 : kExitDiscrepancy;
}

// ---------------------------------------------------------------- two-classes

int run_two_classes(Options& opt, int n) {
    reject_csv(opt, "two-classes");
    check_ceiling(n, opt);
    const std::vector<Partition> classes = two_element_sign_classes(n);
    const std::vector<Partition> expected = two_element_closed_form(n);
    const bool match = classes == expected;
    if (opt.json()) {
        ordered_json j{{"n", n},
                       {"classes", partition_strings(classes)},
                       {"closed_form", partition_strings(expected)},
                       {"match", match}};
        std::cout << j.dump() << "\n";
    } else {
        for (const Partition& p : classes) std::cout << p.str() << "\n";
        std::cout << "closed form match: " << yes_no(match) << "\n";
        if (!match)
            std::cout << "closed form expected: " << join_partitions(expected) << "\n";
    }
    return match ? 0 : kExitDiscrepancy;
}

// ---------------------------------------------------------------- conjecture

int run_conjecture(Options& opt, int max_n) {
    reject_csv(opt, "conjecture");
    check_ceiling(max_n, opt);
    std::size_t checked = 0;
    std::vector<ConjectureDiscrepancy> all;
    std::ostringstream text;
    for (int n = 1; n <= max_n; ++n) {
        const std::vector<ConjectureDiscrepancy> found =
            verify_conjecture(n, opt.workers, opt.store_ptr());
        const std::size_t count = enumerate_partitions(n).size();
        checked += count;
        text << "n = " << n << ": " << count << " partitions, " << found.size()
             << " discrepancies\n";
        for (const ConjectureDiscrepancy& d : found)
            text << "DISCREPANCY: mu = " << d.mu.str() << " predicted "
                 << (d.predicted ? "sign" : "non-sign") << ", brute force "
                 << (d.brute_force ? "sign" : "non-sign") << "\n";
        all.insert(all.end(), found.begin(), found.end());
    }
    if (opt.json()) {
        ordered_json discrepancies = ordered_json::array();
        for (const ConjectureDiscrepancy& d : all)
            discrepancies.push_back(ordered_json{{"mu", d.mu.str()},
                                                 {"n", d.mu.weight()},
                                                 {"predicted", d.predicted},
                                                 {"brute_force", d.brute_force}});
        ordered_json j{{"max_n", max_n},
                       {"checked", checked},
                       {"discrepancies", discrepancies}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << text.str();
        std::cout << "total: " << all.size() << " discrepancies among " << checked
                  << " partitions (n <= " << max_n << ")\n";
    }
    return all.empty() ? 0 : kExitDiscrepancy;
}

// ---------------------------------------------------------------- counts

int run_counts(Options& opt, int max_n) {
    check_ceiling(max_n, opt);
    const CountTable table = count_table(max_n);
    const std::vector<std::string> failures = verify_count_identities(max_n / 2);
    if (opt.json()) {
        ordered_json s = ordered_json::array();
        ordered_json b = ordered_json::array();
        ordered_json nsq = ordered_json::array();
        for (int n = 0; n <= max_n; ++n) {
            s.push_back(table.s[static_cast<std::size_t>(n)].str());
            b.push_back(table.b[static_cast<std::size_t>(n)].str());
            nsq.push_back(table.nsq[static_cast<std::size_t>(n)].str());
        }
        ordered_json j{{"max_n", max_n}, {"s", s},   {"b", b},
                       {"nsq", nsq},     {"identity_failures", failures}};
        std::cout << j.dump() << "\n";
    } else if (opt.csv()) {
        std::cout << "n,s,b,nsq\n";
        for (int n = 0; n <= max_n; ++n)
            std::cout << n << "," << table.s[static_cast<std::size_t>(n)] << ","
                      << table.b[static_cast<std::size_t>(n)] << ","
                      << table.nsq[static_cast<std::size_t>(n)] << "\n";
    } else {
        std::cout << "n s(n) b(n) nsq(n)\n";
        for (int n = 0; n <= max_n; ++n)
            std::cout << n << " " << table.s[static_cast<std::size_t>(n)] << " "
                      << table.b[static_cast<std::size_t>(n)] << " "
                      << table.nsq[static_cast<std::size_t>(n)] << "\n";
        for (const std::string& f : failures) std::cout << "FAILURE: " << f << "\n";
        std::cout << "identities: "
                  << (failures.empty() ? "ok" : std::to_string(failures.size()) + " failures")
                  << " (k <= " << max_n / 2 << ")\n";
    }
    return failures.empty() ? 0 : kExitDiscrepancy;
}

// ---------------------------------------------------------------- exceptional

int run_exceptional(Options& opt, int max_n) {
    reject_csv(opt, "exceptional");
    check_ceiling(max_n, opt);

    struct Found {
        Partition mu;
        bool in_series = false;
    };
    std::vector<Found> found;
    for (int n = 3; n <= max_n; ++n) {
        const std::vector<Partition> all = enumerate_partitions(n);
        std::vector<unsigned char> flag(all.size(), 0);
        parallel_for(all.size(), opt.workers, [&](std::size_t i) {
            flag[i] = all[i].size() >= 3 && is_exceptional(all[i], opt.store_ptr());
        });
        for (std::size_t i = 0; i < all.size(); ++i)
            if (flag[i]) found.push_back({all[i], conjecture_predicate(all[i])});
    }
    std::size_t outside = 0;
    for (const Found& f : found)
        if (!f.in_series) ++outside;

    if (opt.json()) {
        ordered_json arr = ordered_json::array();
        for (const Found& f : found)
            arr.push_back(ordered_json{{"mu", f.mu.str()},
                                       {"n", f.mu.weight()},
                                       {"in_conjecture", f.in_series}});
        ordered_json j{{"max_n", max_n},
                       {"count", found.size()},
                       {"outside_conjecture", outside},
                       {"exceptional", arr}};
        std::cout << j.dump() << "\n";
    } else {
        for (const Found& f : found)
            std::cout << "n = " << f.mu.weight() << ": " << f.mu.str()
                      << "  conjecture: " << yes_no(f.in_series) << "\n";
        std::cout << "exceptional partitions: " << found.size()
                  << ", outside conjecture: " << outside << "\n";
    }
    return outside == 0 ? 0 : kExitDiscrepancy;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact S_n character values and sign-partition classification"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--workers", opt.workers, "Worker threads for sweeps")
        ->check(CLI::Range(1u, 1024u))
        ->capture_default_str();
    app.add_option("--ceiling", opt.ceiling,
                   "Highest n a brute-force sweep may touch")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--cache-dir", opt.cache_dir,
                   "Directory persisting computed character values");

    std::string lambda_text, mu_text, kind = "sign";
    int n = 0, max_n = 0, probe_prime = 0;

    auto* cmd_char = app.add_subcommand("char", "Character value [lambda](mu)");
    cmd_char->add_option("lambda", lambda_text)->required();
    cmd_char->add_option("mu", mu_text)->required();

    auto* cmd_classify =
        app.add_subcommand("classify", "Sign/up/sd verdict for one class");
    cmd_classify->add_option("mu", mu_text)->required();

    auto* cmd_enumerate =
        app.add_subcommand("enumerate", "All partitions of n passing a predicate");
    cmd_enumerate->add_option("n", n)->required()->check(CLI::PositiveNumber);
    cmd_enumerate->add_option("--kind", kind, "sign, up or sd")
        ->capture_default_str();

    auto* cmd_theta =
        app.add_subcommand("theta", "Signed support of Theta_mu for a sign class");
    cmd_theta->add_option("mu", mu_text)->required();

    auto* cmd_theorem5 = app.add_subcommand(
        "theorem5", "Odd-degree census against the binary-expansion class");
    cmd_theorem5->add_option("n", n)->required()->check(CLI::PositiveNumber);
    cmd_theorem5->add_option("--probe-prime", probe_prime,
                             "Also probe the analogue at an odd prime");

    auto* cmd_two =
        app.add_subcommand("two-classes", "Sign classes of 2-elements of S_n");
    cmd_two->add_option("n", n)->required()->check(CLI::PositiveNumber);

    auto* cmd_conjecture = app.add_subcommand(
        "conjecture", "Sweep the classification predicate against brute force");
    cmd_conjecture->add_option("max_n", max_n)->required()->check(CLI::PositiveNumber);

    auto* cmd_counts =
        app.add_subcommand("counts", "sd / binary / non-squashing count table");
    cmd_counts->add_option("max_n", max_n)->required()->check(CLI::PositiveNumber);

    auto* cmd_exceptional = app.add_subcommand(
        "exceptional", "Sweep for exceptional partitions and series membership");
    cmd_exceptional->add_option("max_n", max_n)->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        load_cache(opt);
        int rc = 0;
        if (cmd_char->parsed())
            rc = run_char(opt, lambda_text, mu_text);
        else if (cmd_classify->parsed())
            rc = run_classify(opt, mu_text);
        else if (cmd_enumerate->parsed())
            rc = run_enumerate(opt, n, kind);
        else if (cmd_theta->parsed())
            rc = run_theta(opt, mu_text);
        else if (cmd_theorem5->parsed())
            rc = run_theorem5(opt, n, probe_prime);
        else if (cmd_two->parsed())
            rc = run_two_classes(opt, n);
        else if (cmd_conjecture->parsed())
            rc = run_conjecture(opt, max_n);
        else if (cmd_counts->parsed())
            rc = run_counts(opt, max_n);
        else if (cmd_exceptional->parsed())
            rc = run_exceptional(opt, max_n);
        save_cache(opt);
        return rc;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
