// Command-line frontend for the Schenker sum library.  Every subcommand is a
// thin shell over one library call; results can be rendered as bare text (the
// default), a JSON record, or CSV.  Exit codes: 0 success, 1 verification
// mismatch, 2 invalid arguments or violated preconditions.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "schenker/arith.hpp"
#include "schenker/errors.hpp"
#include "schenker/lifting.hpp"
#include "schenker/natural.hpp"
#include "schenker/sums.hpp"
#include "schenker/survey.hpp"
#include "schenker/valuation.hpp"
#include "schenker/verify.hpp"

namespace {

using nlohmann::json;
using namespace schenker;

// RFC 4180 quoting: wrap when the cell contains a comma, quote, or newline.
std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string join_u64(const std::vector<std::uint64_t>& v, const char* sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            os << sep;
        os << v[i];
    }
    return os.str();
}

json profile_json(const PrimeProfile& pr) {
    return json{{"p", pr.p},
                {"lambda", pr.lambda},
                {"roots", pr.roots},
                {"anomalous_roots", pr.anomalous_roots},
                {"is_schenker", pr.is_schenker}};
}

std::string profile_text(const PrimeProfile& pr) {
    std::ostringstream os;
    os << "p=" << pr.p << " lambda=" << pr.lambda << " roots={" << join_u64(pr.roots, ", ")
       << "} anomalous={" << join_u64(pr.anomalous_roots, ", ") << "}";
    return os.str();
}

constexpr const char* profile_csv_header = "p,lambda,roots,anomalous_roots,is_schenker";

std::string profile_csv_row(const PrimeProfile& pr) {
    std::ostringstream os;
    os << pr.p << ',' << pr.lambda << ',' << join_u64(pr.roots, ";") << ','
       << join_u64(pr.anomalous_roots, ";") << ',' << (pr.is_schenker ? "true" : "false");
    return os.str();
}

// Collects what a subcommand produced and renders it in the selected format.
struct Output {
    std::string command;
    json inputs = json::object();
    json result;
    std::string text;              // bare rendering
    std::vector<std::string> csv;  // header + rows; empty -> generic record row
};

void emit(const Output& out, const std::string& format, double elapsed_ms) {
    if (format == "text") {
        if (!out.text.empty())
            std::cout << out.text << '\n';
        return;
    }
    if (format == "json") {
        json record{{"command", out.command},
                    {"inputs", out.inputs},
                    {"result", out.result},
                    {"elapsed_ms", elapsed_ms}};
        std::cout << record.dump(2) << '\n';
        return;
    }
    // csv
    if (!out.csv.empty()) {
        for (const std::string& line : out.csv)
            std::cout << line << '\n';
        return;
    }
    std::cout << "command,inputs,result,elapsed_ms\n"
              << csv_cell(out.command) << ',' << csv_cell(out.inputs.dump()) << ','
              << csv_cell(out.result.dump()) << ',' << elapsed_ms << '\n';
}

json valuation_json(const ValuationResult& v) {
    switch (v.kind()) {
    case ValuationResult::Kind::Exact:
        return json{{"kind", "exact"}, {"value", to_decimal(v.value())}};
    case ValuationResult::Kind::AtLeast:
        return json{{"kind", "at_least"}, {"value", to_decimal(v.value())}};
    default:
        return json{{"kind", "infinite"}};
    }
}

std::string valuation_text(const ValuationResult& v) {
    switch (v.kind()) {
    case ValuationResult::Kind::Exact:
        return to_decimal(v.value());
    case ValuationResult::Kind::AtLeast:
        return ">= " + to_decimal(v.value());
    default:
        return "infinity";
    }
}

const char* status_name(ChainStatus s) {
    switch (s) {
    case ChainStatus::Completed:
        return "completed";
    case ChainStatus::StoppedNone:
        return "stopped_none";
    default:
        return "stopped_all";
    }
}

json report_json(const SurveyReport& report) {
    json profiles = json::array();
    for (const PrimeProfile& pr : report.profiles)
        profiles.push_back(profile_json(pr));
    json histogram = json::object();
    for (const auto& [lambda, count] : report.lambda_histogram)
        histogram[std::to_string(lambda)] = count;
    return json{{"lo", report.lo},
                {"hi", report.hi},
                {"profiles", profiles},
                {"lambda_histogram", histogram}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schenker sums: exact values, modular residues, p-adic valuations,\n"
                 "root residues, lifting chains, and prime surveys."};
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&format](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
    };

    Output out;
    int exit_code = 0;

    // --- sum ---------------------------------------------------------------
    std::uint64_t sum_n = 0;
    std::uint64_t sum_cap = default_exact_cap;
    CLI::App* sum = app.add_subcommand("sum", "exact value of the n-th sum");
    sum->add_option("n", sum_n, "index (>= 1)")->required();
    sum->add_option("--cap", sum_cap, "largest accepted index")->capture_default_str();
    add_format(sum);
    sum->callback([&] {
        Natural a = schenker_exact(sum_n, sum_cap);
        out.command = "sum";
        out.inputs = {{"n", sum_n}, {"cap", sum_cap}};
        out.result = to_decimal(a);
        out.text = to_decimal(a);
    });

    // --- mod ---------------------------------------------------------------
    std::string mod_n, mod_m;
    CLI::App* mod = app.add_subcommand("mod", "a_n mod m without forming a_n");
    mod->add_option("n", mod_n, "index (>= 1)")->required();
    mod->add_option("m", mod_m, "modulus (>= 2)")->required();
    add_format(mod);
    mod->callback([&] {
        Residue r = schenker_mod(natural_from_decimal(mod_n), natural_from_decimal(mod_m));
        out.command = "mod";
        out.inputs = {{"n", mod_n}, {"m", mod_m}};
        out.result = {{"value", to_decimal(r.value())}, {"modulus", to_decimal(r.modulus())}};
        out.text = to_decimal(r.value());
    });

    // --- val ---------------------------------------------------------------
    std::uint64_t val_p = 0;
    std::string val_n;
    unsigned val_cap = default_valuation_cap;
    CLI::App* val = app.add_subcommand("val", "p-adic valuation of a_n");
    val->add_option("p", val_p, "prime")->required();
    val->add_option("n", val_n, "index (>= 1)")->required();
    val->add_option("--cap", val_cap, "deepest probed prime power")->capture_default_str();
    add_format(val);
    val->callback([&] {
        ValuationResult v = vp_general(val_p, natural_from_decimal(val_n), val_cap);
        out.command = "val";
        out.inputs = {{"p", val_p}, {"n", val_n}, {"cap", val_cap}};
        out.result = valuation_json(v);
        out.text = valuation_text(v);
    });

    // --- roots -------------------------------------------------------------
    std::uint64_t roots_p = 0;
    CLI::App* roots = app.add_subcommand("roots", "residues r in {1..p-1} with p | a_r");
    roots->add_option("p", roots_p, "prime")->required();
    add_format(roots);
    roots->callback([&] {
        std::vector<std::uint64_t> rs = root_residues(roots_p);
        out.command = "roots";
        out.inputs = {{"p", roots_p}};
        out.result = {{"p", roots_p}, {"lambda", rs.size()}, {"roots", rs}};
        out.text = join_u64(rs, " ");
    });

    // --- q -----------------------------------------------------------------
    std::string q_n;
    std::uint64_t q_p = 0;
    CLI::App* q = app.add_subcommand("q", "lifting discriminant q_{n,p} mod p^2");
    q->add_option("n", q_n, "index coprime to p")->required();
    q->add_option("p", q_p, "prime")->required();
    add_format(q);
    q->callback([&] {
        QValue qv = q_value(natural_from_decimal(q_n), q_p);
        out.command = "q";
        out.inputs = {{"n", q_n}, {"p", q_p}};
        out.result = {{"value", to_decimal(qv.residue.value())},
                      {"modulus", to_decimal(qv.residue.modulus())}};
        out.text = to_decimal(qv.residue.value()) + " (mod " +
                   to_decimal(qv.residue.modulus()) + ")";
    });

    // --- lift --------------------------------------------------------------
    std::uint64_t lift_p = 0;
    std::string lift_n1;
    unsigned lift_K = 0;
    CLI::App* lift = app.add_subcommand("lift", "follow unique lifts from a level-1 root");
    lift->add_option("p", lift_p, "prime")->required();
    lift->add_option("n1", lift_n1, "level-1 root (p | a_n1)")->required();
    lift->add_option("K", lift_K, "target level (>= 1)")->required();
    add_format(lift);
    lift->callback([&] {
        LiftChain chain = lift_chain(lift_p, natural_from_decimal(lift_n1), lift_K);
        out.command = "lift";
        out.inputs = {{"p", lift_p}, {"n1", lift_n1}, {"K", lift_K}};
        json entries = json::array();
        std::ostringstream text;
        for (const ChainEntry& e : chain.entries) {
            entries.push_back(json{{"level", e.level},
                                   {"n", to_decimal(e.n.value())},
                                   {"modulus", to_decimal(e.n.modulus())}});
            text << "level " << e.level << ": " << to_decimal(e.n.value()) << " (mod "
                 << to_decimal(e.n.modulus()) << ")\n";
        }
        text << "status: " << status_name(chain.status);
        out.result = {{"p", chain.p},
                      {"status", status_name(chain.status)},
                      {"entries", entries}};
        out.text = text.str();
    });

    // --- profile -----------------------------------------------------------
    std::uint64_t profile_p = 0;
    CLI::App* profile = app.add_subcommand("profile", "roots and anomalies of one prime");
    profile->add_option("p", profile_p, "prime")->required();
    add_format(profile);
    profile->callback([&] {
        PrimeProfile pr = profile_prime(profile_p);
        out.command = "profile";
        out.inputs = {{"p", profile_p}};
        out.result = profile_json(pr);
        out.text = profile_text(pr);
        out.csv = {profile_csv_header, profile_csv_row(pr)};
    });

    // --- scan --------------------------------------------------------------
    std::uint64_t scan_lo = 0, scan_hi = 0;
    unsigned scan_workers = 1;
    std::string scan_cache;
    CLI::App* scan = app.add_subcommand("scan", "profile every prime in [lo, hi]");
    scan->add_option("lo", scan_lo, "lower bound (>= 2)")->required();
    scan->add_option("hi", scan_hi, "upper bound")->required();
    scan->add_option("--workers", scan_workers, "worker threads")->capture_default_str();
    scan->add_option("--cache", scan_cache, "JSON-lines cache file (resumable)");
    add_format(scan);
    scan->callback([&] {
        SurveyReport report = scan_range(scan_lo, scan_hi, scan_workers, scan_cache);
        out.command = "scan";
        out.inputs = {{"lo", scan_lo},
                      {"hi", scan_hi},
                      {"workers", scan_workers},
                      {"cache", scan_cache}};
        out.result = report_json(report);
        std::ostringstream text;
        std::uint64_t schenker_count = 0;
        for (const PrimeProfile& pr : report.profiles) {
            text << profile_text(pr) << '\n';
            schenker_count += pr.is_schenker ? 1 : 0;
        }
        text << "primes: " << report.profiles.size() << ", with roots: " << schenker_count;
        for (const auto& [lambda, count] : report.lambda_histogram)
            text << "\nlambda " << lambda << ": " << count;
        out.text = text.str();
        out.csv.push_back(profile_csv_header);
        for (const PrimeProfile& pr : report.profiles)
            out.csv.push_back(profile_csv_row(pr));
    });

    // --- anomalies ----------------------------------------------------------
    std::uint64_t anomalies_hi = 0;
    unsigned anomalies_workers = 1;
    CLI::App* anomalies =
        app.add_subcommand("anomalies", "roots with vanishing discriminant, p <= hi");
    anomalies->add_option("hi", anomalies_hi, "upper bound (>= 2)")->required();
    anomalies->add_option("--workers", anomalies_workers, "worker threads")
        ->capture_default_str();
    add_format(anomalies);
    anomalies->callback([&] {
        auto hits = anomaly_scan(anomalies_hi, anomalies_workers);
        out.command = "anomalies";
        out.inputs = {{"hi", anomalies_hi}, {"workers", anomalies_workers}};
        json result = json::array();
        std::ostringstream text;
        std::vector<std::string> csv = {"p,r"};
        for (std::size_t i = 0; i < hits.size(); ++i) {
            result.push_back(json{{"p", hits[i].first}, {"r", hits[i].second}});
            if (i)
                text << '\n';
            text << hits[i].first << ' ' << hits[i].second;
            csv.push_back(std::to_string(hits[i].first) + ',' +
                          std::to_string(hits[i].second));
        }
        out.result = std::move(result);
        out.text = text.str();
        out.csv = std::move(csv);
    });

    // --- table1 ------------------------------------------------------------
    unsigned table_workers = 1;
    CLI::App* table1 = app.add_subcommand(
        "table1", "odd primes <= 1229 grouped by root count, reference-table shape");
    table1->add_option("--workers", table_workers, "worker threads")->capture_default_str();
    add_format(table1);
    table1->callback([&] {
        SurveyReport report = scan_range(3, 1229, table_workers);
        std::map<std::uint64_t, std::vector<std::uint64_t>> classes;
        std::uint64_t max_lambda = 5;
        for (const PrimeProfile& pr : report.profiles) {
            if (pr.lambda > 0)
                classes[pr.lambda].push_back(pr.p);
            max_lambda = std::max(max_lambda, pr.lambda);
        }
        out.command = "table1";
        out.inputs = {{"workers", table_workers}};
        json rows = json::array();
        std::ostringstream text;
        text << "lambda | p\n-------+--";
        for (std::uint64_t k = 1; k <= max_lambda; ++k) {
            const std::vector<std::uint64_t>& members = classes[k];
            rows.push_back(json{{"lambda", k}, {"primes", members}});
            text << '\n' << k << "      | "
                 << (members.empty() ? "---" : join_u64(members, ", "));
        }
        out.result = {{"rows", rows}};
        out.text = text.str();
    });

    // --- verify ------------------------------------------------------------
    unsigned verify_workers = 4;
    bool verify_long = false;
    int verify_criterion = 0;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the acceptance criteria and report per item");
    verify_cmd->add_option("--workers", verify_workers, "worker threads for the surveys")
        ->capture_default_str();
    verify_cmd->add_flag("--long", verify_long, "extend the anomaly sweep to 30000");
    verify_cmd->add_option("--criterion", verify_criterion,
                           "run a single criterion (1-9) instead of all");
    add_format(verify_cmd);
    verify_cmd->callback([&] {
        verify::Options options;
        options.workers = verify_workers;
        options.long_run = verify_long;
        std::vector<verify::CriterionResult> results;
        if (verify_criterion != 0)
            results.push_back(verify::run_criterion(verify_criterion, options));
        else
            results = verify::run_all(options);
        std::ostringstream text;
        bool all = verify::print_report(results, text);
        out.command = "verify";
        out.inputs = {{"workers", verify_workers},
                      {"long", verify_long},
                      {"criterion", verify_criterion}};
        json criteria = json::array();
        for (const verify::CriterionResult& r : results)
            criteria.push_back(json{{"id", r.id},
                                    {"title", r.title},
                                    {"passed", r.passed},
                                    {"seconds", r.seconds},
                                    {"failures", r.failures}});
        out.result = {{"criteria", criteria}, {"all_passed", all}};
        std::string t = text.str();
        if (!t.empty() && t.back() == '\n')
            t.pop_back();
        out.text = t;
        if (!all)
            exit_code = 1;
    });

    auto start = std::chrono::steady_clock::now();
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    double elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    emit(out, format, elapsed_ms);
    return exit_code;
}
