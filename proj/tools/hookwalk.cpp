// hookwalk: Littlewood decompositions, t-Plancherel averages, polynomiality
// certificates and verification suites from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "hookwalk/corners.hpp"
#include "hookwalk/littlewood.hpp"
#include "hookwalk/operators.hpp"
#include "hookwalk/partition.hpp"
#include "hookwalk/suites.hpp"
#include "report_json.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace hookwalk;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// "0..3", "2,3", "5" or mixtures like "0..2,5".
std::vector<int> parse_range(const std::string& text)
{
    std::vector<int> out;
    std::size_t pos = 0;
    auto number = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (s.empty() || used != s.size()) throw UsageError("bad range '" + text + "'");
        return v;
    };
    while (pos <= text.size()) {
        const auto comma = std::min(text.find(',', pos), text.size());
        const std::string item = text.substr(pos, comma - pos);
        if (const auto dots = item.find(".."); dots != std::string::npos) {
            const int lo = number(item.substr(0, dots));
            const int hi = number(item.substr(dots + 2));
            if (hi < lo) throw UsageError("empty range '" + item + "'");
            for (int v = lo; v <= hi; ++v) out.push_back(v);
        } else {
            out.push_back(number(item));
        }
        pos = comma + 1;
    }
    return out;
}

Partition parse_partition_arg(const std::string& text)
{
    try {
        return parse_partition(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

/// A --stat argument: a StatSpec plus an optional trailing ",G" that turns on
/// the G weight for that column.
struct Column {
    std::string label;
    PartitionStatistic stat;
};

Column parse_column(const std::string& text, int t, bool weight_g)
{
    std::string spec = text;
    bool g = weight_g;
    if (spec.size() > 2 && spec.compare(spec.size() - 2, 2, ",G") == 0) {
        spec.erase(spec.size() - 2);
        g = true;
    }
    try {
        return {text, PartitionStatistic{t, g, {parse_stat_spec(spec, t)}, std::nullopt}};
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void require_core_arg(const Partition& mu, int t)
{
    if (!is_t_core(mu, t)) throw UsageError(detail::not_a_core_message(mu, t));
}

void require_positive_t(int t)
{
    if (t < 1) throw UsageError("--t must be a positive integer");
}

int cmd_decompose(const std::string& partition, int t, const std::string& format)
{
    require_positive_t(t);
    const auto lambda = parse_partition_arg(partition);
    const auto dec = decompose(lambda, t);
    if (format == "json") {
        std::cout << io::to_json(lambda, dec).dump(2) << "\n";
        return 0;
    }
    std::cout << "lambda\t" << to_string(lambda) << "\n"
              << "t\t" << t << "\n"
              << "core\t" << to_string(dec.core) << "\n";
    for (int i = 0; i < t; ++i) std::cout << "quotient " << i << "\t" << to_string(dec.quotients[static_cast<std::size_t>(i)]) << "\n";
    std::cout << "b\t" << detail::join_ints(dec.offsets.b) << "\n"
              << "d\t" << detail::join_ints(dec.offsets.d) << "\n"
              << "01-sequence\t" << encode(lambda).render() << "\n";
    return 0;
}

int cmd_stat(const std::string& partition, int t, const std::vector<std::string>& stats, bool weight_g)
{
    require_positive_t(t);
    const auto lambda = parse_partition_arg(partition);
    for (const auto& s : stats) {
        const auto col = parse_column(s, t, weight_g);
        std::cout << col.label << "\t" << to_string(col.stat(lambda)) << "\n";
    }
    return 0;
}

int cmd_average(const std::string& core, int t, const std::string& ns_text, const std::vector<std::string>& stats,
                bool weight_g, const std::string& format, unsigned workers)
{
    require_positive_t(t);
    const auto mu = parse_partition_arg(core);
    require_core_arg(mu, t);
    const auto ns = parse_range(ns_text);
    for (int n : ns)
        if (n < 0) throw UsageError("--n values must be non-negative");
    std::vector<Column> cols;
    for (const auto& s : stats) cols.push_back(parse_column(s, t, weight_g));

    std::vector<std::vector<Rational>> table;
    for (int n : ns) {
        const auto points = layer_above(mu, t, n);
        std::vector<Rational> row;
        for (const auto& c : cols) row.push_back(layer_sum(c.stat, points, workers));
        table.push_back(std::move(row));
    }
    if (format == "json") {
        io::Json rows = io::Json::array();
        for (std::size_t r = 0; r < ns.size(); ++r) {
            io::Json row;
            row["n"] = ns[r];
            for (std::size_t c = 0; c < cols.size(); ++c) row[cols[c].label] = to_string(table[r][c]);
            rows.push_back(row);
        }
        io::Json out;
        out["core"] = to_string(mu);
        out["t"] = t;
        out["rows"] = rows;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "n";
    for (const auto& c : cols) std::cout << "\t" << c.label;
    std::cout << "\n";
    for (std::size_t r = 0; r < ns.size(); ++r) {
        std::cout << ns[r];
        for (const auto& v : table[r]) std::cout << "\t" << to_string(v);
        std::cout << "\n";
    }
    return 0;
}

int cmd_certify(const std::string& core, int t, const std::vector<std::string>& stats, bool weight_g, int degree,
                int safety, const std::string& format, unsigned workers)
{
    require_positive_t(t);
    const auto mu = parse_partition_arg(core);
    require_core_arg(mu, t);
    PartitionStatistic g{t, weight_g, {}, std::nullopt};
    for (const auto& s : stats) {
        const auto col = parse_column(s, t, false);
        g.weight_g = g.weight_g || col.stat.weight_g;
        g.factors.push_back(col.stat.factors.front());
    }
    int d = degree;
    if (d < 0) {
        d = static_cast<int>(g.factors.size());
        for (const auto& f : g.factors) d += f.power;
    }
    if (safety < 1) throw UsageError("--safety must be at least 1");
    const auto tab = certify_polynomiality(g, mu, t, d, safety, true, workers);
    if (format == "json") {
        auto out = io::to_json(tab);
        out["statistic"] = g.describe();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "statistic\t" << g.describe() << "\n";
        std::cout << "n\tP(n)\n";
        for (std::size_t n = 0; n < tab.values.size(); ++n) std::cout << n << "\t" << to_string(tab.values[n]) << "\n";
        std::cout << "verdict\t" << tab.verdict() << " (degree " << d << ", window 0.." << tab.window() << ")\n";
        if (tab.vanishing_order) std::cout << "vanishing order\t" << *tab.vanishing_order << "\n";
    }
    return tab.certified ? 0 : 1;
}

int cmd_verify(const std::string& suite, const std::optional<int>& max_size, const std::string& ts,
               const std::string& ns, const std::string& format, unsigned workers)
{
    SuiteBounds b;
    b.max_size = max_size;
    if (!ts.empty()) b.ts = parse_range(ts);
    if (!ns.empty()) b.ns = parse_range(ns);
    for (int t : b.ts) require_positive_t(t);
    for (int n : b.ns)
        if (n < 0) throw UsageError("--n values must be non-negative");
    b.workers = workers;
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite '" + suite + "'");
    const auto report = run_named_suite(suite, b);
    if (format == "json") {
        std::cout << io::to_json(report).dump(2) << "\n";
    } else {
        std::cout << "suite\t" << report.name << "\nchecks\t" << report.checks << "\nfailures\t" << report.failures << "\n";
        for (const auto& g : report.groups) std::cout << g.name << "\t" << g.checks << "\t" << g.failures << "\n";
        if (report.first_failure)
            std::cout << "first failure\t" << report.first_failure->check << "\t" << report.first_failure->inputs << "\t"
                      << report.first_failure->lhs << "\t" << report.first_failure->rhs << "\n";
    }
    return report.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Littlewood decompositions, t-Plancherel averages and exact verification suites"};
    app.require_subcommand(1);

    std::string partition, core = "-", ns = "0..3", ts_text, ns_text, suite;
    std::string dec_format, avg_format, cert_format, ver_format;
    std::vector<std::string> stats;
    int t = 1;
    bool weight_g = false;
    unsigned workers = 1;
    int degree = -1, safety = 3;
    std::optional<int> max_size;

    auto* dec = app.add_subcommand("decompose", "t-core, t-quotients and core offsets of a partition");
    dec->add_option("partition", partition, "comma-separated parts, '-' for the empty partition")->required();
    dec->add_option("--t", t, "modulus")->required();
    dec->add_option("--format", dec_format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}))->default_val("json");

    auto* st = app.add_subcommand("stat", "evaluate statistics on one partition");
    st->add_option("partition", partition)->required();
    st->add_option("--t", t, "modulus for G and for specs without t=")->default_val(1);
    st->add_option("--stat", stats, "e.g. hook:j=1,pow=2,paired (append ,G for the G weight)")->required();
    st->add_flag("--weight-g", weight_g, "multiply every statistic by G");

    auto* avg = app.add_subcommand("average", "exact layer sums P(n) over the partitions n t-hooks above a core");
    avg->add_option("--core", core, "t-core")->default_val("-");
    avg->add_option("--t", t, "modulus")->required();
    avg->add_option("--n", ns, "range such as 0..4 or 1,3")->default_val("0..3");
    avg->add_option("--stat", stats, "statistic, repeatable")->required();
    avg->add_flag("--weight-g", weight_g, "multiply every statistic by G");
    avg->add_option("--format", avg_format)->check(CLI::IsMember({"json", "tsv"}))->default_val("tsv");
    avg->add_option("--workers", workers)->default_val(1)->check(CLI::Range(1U, 256U));

    auto* cert = app.add_subcommand("certify", "forward-difference certificate for a product statistic");
    cert->add_option("--core", core)->default_val("-");
    cert->add_option("--t", t)->required();
    cert->add_option("--stat", stats, "factor, repeatable")->required();
    cert->add_flag("--weight-g", weight_g);
    cert->add_option("--degree", degree, "claimed degree; default sum of powers plus number of factors");
    cert->add_option("--safety", safety, "extra sample points")->default_val(3);
    cert->add_option("--format", cert_format)->check(CLI::IsMember({"json", "tsv"}))->default_val("json");
    cert->add_option("--workers", workers)->default_val(1)->check(CLI::Range(1U, 256U));

    auto* ver = app.add_subcommand("verify", "run a named verification suite");
    ver->add_option("suite", suite, "bijection, fundamental, per-partition, averages, operators or polynomiality")->required();
    ver->add_option("--max-size", max_size);
    ver->add_option("--t", ts_text, "range of moduli");
    ver->add_option("--n", ns_text, "range of layers");
    ver->add_option("--format", ver_format)->check(CLI::IsMember({"json", "tsv"}))->default_val("json");
    ver->add_option("--workers", workers)->default_val(1)->check(CLI::Range(1U, 256U));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (dec->parsed()) return cmd_decompose(partition, t, dec_format);
        if (st->parsed()) return cmd_stat(partition, t, stats, weight_g);
        if (avg->parsed()) return cmd_average(core, t, ns, stats, weight_g, avg_format, workers);
        if (cert->parsed()) return cmd_certify(core, t, stats, weight_g, degree, safety, cert_format, workers);
        if (ver->parsed()) return cmd_verify(suite, max_size, ts_text, ns_text, ver_format, workers);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
