// Command-line front door for the partition-lattice superorthogonality
// toolkit. Every subcommand prints text, JSON, or CSV and exits with
// 0 = success/verified, 1 = verification failure, 2 = usage error.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "superortho/chain.hpp"
#include "superortho/constants.hpp"
#include "superortho/frequency.hpp"
#include "superortho/identity.hpp"
#include "superortho/partition.hpp"
#include "superortho/stirling.hpp"

namespace so = superortho;
using nlohmann::json;

namespace {

struct Options {
    std::string format = "text";
    int n = 0;
    int r = 0;
    int s = -1;
    int s0 = 0;
    int big_n = 0;
    int L = 0;
    int trials = 25;
    int max = 59;
    std::uint64_t seed = 0;
    bool seed_set = false;
    long long budget = 100'000'000;
    std::string type_text;
    std::string p1_text;
    std::string p2_text;
    bool tensor = false;
    std::string dims_text;
};

std::vector<int> parse_csv_ints(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

int run_coeff(const Options& opt) {
    so::CoefficientValue value{};
    if (!opt.type_text.empty()) {
        value = so::d_closed_form(so::parse_type(opt.type_text));
    } else if (!opt.p1_text.empty() && !opt.p2_text.empty()) {
        value = so::d_general(so::parse_partition(opt.p1_text),
                              so::parse_partition(opt.p2_text));
    } else {
        std::cerr << "coeff: need --type or both --p1 and --p2\n";
        return 2;
    }
    if (opt.format == "json") {
        json doc{{"value", value.value.get_str()},
                 {"source", so::to_string(value.source)}};
        std::cout << doc.dump() << '\n';
    } else if (opt.format == "csv") {
        std::cout << "value,source\n"
                  << value.value.get_str() << ',' << so::to_string(value.source)
                  << '\n';
    } else {
        std::cout << value.value.get_str() << '\n';
    }
    return 0;
}

int run_chains(const Options& opt) {
    const so::SetPartition p1 = so::parse_partition(opt.p1_text);
    const so::SetPartition p2 = so::parse_partition(opt.p2_text);
    const so::ChainStats stats = so::count_chains(p1, p2);
    if (opt.format == "json") {
        json doc{{"odd", stats.odd.get_str()},
                 {"even", stats.even.get_str()},
                 {"d", stats.d.get_str()}};
        std::cout << doc.dump() << '\n';
    } else if (opt.format == "csv") {
        std::cout << "odd,even,d\n"
                  << stats.odd.get_str() << ',' << stats.even.get_str() << ','
                  << stats.d.get_str() << '\n';
    } else {
        std::cout << "odd=" << stats.odd.get_str()
                  << " even=" << stats.even.get_str()
                  << " d=" << stats.d.get_str() << '\n';
    }
    return 0;
}

json report_to_json(const so::IdentityReport& report) {
    json failures = json::array();
    for (const auto& f : report.failures)
        failures.push_back(
            {{"seed", f.seed}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    return json{{"n", report.n},
                {"L", report.L},
                {"p1", report.p1},
                {"trials", report.trials},
                {"failures", failures}};
}

int run_identity(const Options& opt) {
    so::IdentityReport report;
    if (opt.tensor) {
        std::vector<int> dims = opt.dims_text.empty()
                                    ? std::vector<int>(
                                          static_cast<size_t>(opt.n), 2)
                                    : parse_csv_ints(opt.dims_text);
        report = so::verify_identity_tensor(opt.n, opt.L, dims, opt.seed);
    } else {
        const so::SetPartition p1 =
            opt.p1_text.empty() ? so::SetPartition::singletons(opt.n)
                                : so::parse_partition(opt.p1_text);
        report = so::verify_identity(opt.n, opt.L, p1, opt.trials, opt.seed);
    }
    if (opt.format == "json") {
        std::cout << report_to_json(report).dump() << '\n';
    } else {
        if (report.ok()) {
            std::cout << "ALL CHECKS PASSED (" << report.trials
                      << " trials, p1=" << report.p1 << ")\n";
        } else {
            for (const auto& f : report.failures)
                std::cout << "FAILURE seed=" << f.seed << " lhs=" << f.lhs
                          << " rhs=" << f.rhs << '\n';
        }
    }
    return report.ok() ? 0 : 1;
}

int run_stirling(const Options& opt) {
    if (opt.format == "json") {
        so::StirlingTable table(opt.n);
        json rows = json::array();
        for (int n = 1; n <= opt.n; ++n)
            for (int k = 1; k <= n; ++k)
                rows.push_back({{"n", n},
                                {"k", k},
                                {"s", table.at(n, k).get_str()}});
        std::cout << json{{"max_n", opt.n}, {"entries", rows}}.dump() << '\n';
    } else {
        so::write_stirling_csv(std::cout, opt.n);
    }
    return 0;
}

int run_constants(const Options& opt) {
    const so::ConstantReport report = so::make_constant_report(opt.r);
    if (opt.format == "json") {
        json c = json::array();
        for (const auto& v : report.c_alphas) c.push_back(v.get_str());
        json doc{{"r", report.r},
                 {"C", c},
                 {"exact_root", {{"lo", report.root_lo}, {"hi", report.root_hi}}},
                 {"paper_bound", report.paper_bound},
                 {"prior_bound", report.prior_bound},
                 {"K", report.k_const}};
        std::cout << doc.dump() << '\n';
    } else if (opt.format == "csv") {
        std::cout << "r,c_alphas,root_lo,root_hi,paper_bound,prior_bound\n"
                  << report.r << ",\"";
        for (size_t i = 0; i < report.c_alphas.size(); ++i) {
            if (i) std::cout << ' ';
            std::cout << report.c_alphas[i].get_str();
        }
        std::cout.precision(15);
        std::cout << "\"," << report.root_lo << ',' << report.root_hi << ','
                  << report.paper_bound << ',' << report.prior_bound << '\n';
    } else {
        std::cout.precision(15);
        std::cout << "r = " << report.r << "\nC =";
        for (const auto& v : report.c_alphas)
            std::cout << ' ' << v.get_str();
        std::cout << "\nexact_root in [" << report.root_lo << ", "
                  << report.root_hi << "]\npaper_bound = "
                  << report.paper_bound
                  << "\nprior_bound = " << report.prior_bound
                  << "\nK = " << report.k_const << '\n';
    }
    return 0;
}

int run_sumcheck(const Options& opt) {
    bool all_below_one = true;
    std::ostringstream body;
    json rows = json::array();
    for (int m = 2; m <= opt.max; ++m) {
        const mpq_class sum = so::reciprocal_type_sum(m);
        const bool ok = sum < 1;
        if (!ok) all_below_one = false;
        if (opt.format == "json")
            rows.push_back({{"m", m},
                            {"sum", sum.get_str()},
                            {"below_one", ok}});
        else
            body << m << ',' << sum.get_str() << ',' << (ok ? "OK" : "GE1")
                 << '\n';
    }
    if (opt.format == "json") {
        std::cout << json{{"max", opt.max},
                          {"all_below_one", all_below_one},
                          {"rows", rows}}
                         .dump()
                  << '\n';
    } else {
        if (opt.format == "csv") std::cout << "m,sum,status\n";
        std::cout << body.str();
        if (opt.format == "text")
            std::cout << (all_below_one ? "ALL CHECKS PASSED\n"
                                        : "SUM REACHED 1\n");
    }
    return all_below_one ? 0 : 1;
}

json structure_to_json(const so::AdditiveStructure& s) {
    return json{{"ys", s.ys},
                {"zs", s.zs},
                {"sum", so::format_frequency(s.common_sum)}};
}

int run_example(const Options& opt) {
    const int N = opt.big_n ? opt.big_n : opt.r;
    const so::FrequencyFamily fam =
        so::build_example_family(opt.r, opt.s0, N);
    const so::ExamplePropertyReport props =
        so::verify_example_properties(opt.r, opt.s0, N, opt.budget);
    json s_results = json::array();
    bool s_type_ok = true;
    for (int s = 0; s <= opt.r - 1; ++s) {
        const so::STypeResult res = so::check_s_type_iv(fam, opt.r, s);
        s_results.push_back({{"s", s},
                             {"pass", res.pass},
                             {"violation", res.violation}});
        if (res.pass != (s == opt.s0)) s_type_ok = false;
    }
    const bool ok = props.ok && s_type_ok;
    if (opt.format == "json") {
        json freqs = json::array();
        for (const auto& f : fam.freqs)
            freqs.push_back(so::format_frequency(f));
        json entries = json::array();
        for (const auto& e : props.entries) {
            json row{{"t", e.t},
                     {"expected_exists", e.expected_exists},
                     {"via_duplicates", e.via_duplicates},
                     {"found_by_search", e.found_by_search}};
            if (e.witness) row["witness"] = structure_to_json(*e.witness);
            entries.push_back(std::move(row));
        }
        std::cout << json{{"r", opt.r},
                          {"s0", opt.s0},
                          {"N", N},
                          {"family", freqs},
                          {"s_type_iv", s_results},
                          {"additive_structures", entries},
                          {"ok", ok}}
                         .dump()
                  << '\n';
    } else {
        std::cout << "family size " << fam.size() << " on T^" << N << '\n';
        for (const auto& row : s_results)
            std::cout << "s=" << row["s"] << " s-Type IV: "
                      << (row["pass"].get<bool>() ? "pass" : "FAIL") << '\n';
        for (const auto& e : props.entries)
            std::cout << "(t,t)=(" << e.t << ',' << e.t
                      << ") expected=" << (e.expected_exists ? "yes" : "no")
                      << " found="
                      << (e.found() ? (e.found_by_search ? "search"
                                                         : "duplicates")
                                    : "none")
                      << '\n';
        std::cout << (ok ? "ALL CHECKS PASSED\n" : "EXPECTATION VIOLATED\n");
    }
    return ok ? 0 : 1;
}

int run_report(const Options& opt) {
    const int max_r = opt.r ? opt.r : 5;
    if (opt.format == "csv" || opt.format == "text") {
        std::cout << "r,c_alphas,root_lo,root_hi,paper_bound,prior_bound\n";
        std::cout.precision(15);
        for (int r = 1; r <= max_r; ++r) {
            const so::ConstantReport rep = so::make_constant_report(r);
            std::cout << r << ",\"";
            for (size_t i = 0; i < rep.c_alphas.size(); ++i) {
                if (i) std::cout << ' ';
                std::cout << rep.c_alphas[i].get_str();
            }
            std::cout << "\"," << rep.root_lo << ',' << rep.root_hi << ','
                      << rep.paper_bound << ',' << rep.prior_bound << '\n';
        }
    } else {
        json rows = json::array();
        for (int r = 1; r <= max_r; ++r) {
            const so::ConstantReport rep = so::make_constant_report(r);
            json c = json::array();
            for (const auto& v : rep.c_alphas) c.push_back(v.get_str());
            rows.push_back({{"r", r},
                            {"C", c},
                            {"root_lo", rep.root_lo},
                            {"root_hi", rep.root_hi},
                            {"paper_bound", rep.paper_bound},
                            {"prior_bound", rep.prior_bound}});
        }
        std::cout << rows.dump() << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partition-lattice superorthogonality toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "text|json|csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };

    auto* coeff = app.add_subcommand("coeff", "chain-parity coefficient D");
    coeff->add_option("--type", opt.type_text, "partition type, e.g. 3,1");
    coeff->add_option("--p1", opt.p1_text, "finer partition, e.g. 1,2|3|4");
    coeff->add_option("--p2", opt.p2_text, "coarser partition");
    add_format(coeff);

    auto* chains = app.add_subcommand("chains", "odd/even chain counts");
    chains->add_option("--p1", opt.p1_text)->required();
    chains->add_option("--p2", opt.p2_text)->required();
    add_format(chains);

    auto* identity =
        app.add_subcommand("identity", "verify the algebraic identity");
    identity->add_option("--n", opt.n)->required();
    identity->add_option("--L", opt.L)->required();
    identity->add_option("--p1", opt.p1_text, "default: all singletons");
    identity->add_option("--trials", opt.trials);
    identity->add_option("--seed", opt.seed)->required();
    identity->add_flag("--tensor", opt.tensor, "tensor-valued check");
    identity->add_option("--dims", opt.dims_text, "axis dims, e.g. 2,2");
    add_format(identity);

    auto* stirling = app.add_subcommand("stirling", "Stirling triangle dump");
    stirling->add_option("--n", opt.n)->required();
    add_format(stirling);

    auto* constants =
        app.add_subcommand("constants", "formal-constant report for one r");
    constants->add_option("--r", opt.r)->required();
    add_format(constants);

    auto* sumcheck =
        app.add_subcommand("sumcheck", "reciprocal type sums below 1");
    sumcheck->add_option("--max", opt.max);
    add_format(sumcheck);

    auto* example =
        app.add_subcommand("example", "s0-Type IV family end-to-end check");
    example->add_option("--r", opt.r)->required();
    example->add_option("--s0", opt.s0)->required();
    example->add_option("--N", opt.big_n, "default: r");
    example->add_option("--budget", opt.budget);
    add_format(example);

    auto* report =
        app.add_subcommand("report", "constant table for r = 1..max");
    report->add_option("--r", opt.r, "largest r (default 5)");
    add_format(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (coeff->parsed()) return run_coeff(opt);
        if (chains->parsed()) return run_chains(opt);
        if (identity->parsed()) return run_identity(opt);
        if (stirling->parsed()) return run_stirling(opt);
        if (constants->parsed()) return run_constants(opt);
        if (sumcheck->parsed()) return run_sumcheck(opt);
        if (example->parsed()) return run_example(opt);
        if (report->parsed()) return run_report(opt);
    } catch (const so::ResourceError& e) {
        std::cerr << "resource error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
