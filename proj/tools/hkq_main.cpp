// hkq: exact Hilbert-Kunz multiplicities of quadrics, lattice-point counts,
// swap tables and verification suites. Exit codes: 0 success, 1 verification
// failure, 2 usage error. All output is deterministic; decimal approximations
// are display-only renderings of exact rationals.

#include "hkq/appendix.hpp"
#include "hkq/combinatorics.hpp"
#include "hkq/hk.hpp"
#include "hkq/polytope.hpp"
#include "hkq/repring.hpp"
#include "hkq/serialize.hpp"
#include "hkq/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

using namespace hkq;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

struct CsvWriter {
    std::ostream& out;
    void row(const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) out << ",";
            out << csv_field(fields[i]);
        }
        out << "\r\n";
    }
};

void check_format(const std::string& format) {
    if (format != "text" && format != "json" && format != "csv")
        throw CLI::ValidationError("--format must be text, json or csv");
}

int cmd_ehk(long p, int d, const std::string& method, const std::string& format) {
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("p must be odd and at least 3");
    if (d < 1) throw std::invalid_argument("d must be at least 1");
    const bool prime = is_odd_prime(Integer(p));
    if (method == "repring" && !prime)
        throw std::invalid_argument("method repring needs a prime p");

    std::vector<std::pair<std::string, Rational>> values;
    if (method == "repring" || (method == "all" && prime))
        values.emplace_back("repring", ehk_quadric_repring(p, d));
    if (method == "matrix" || method == "all")
        values.emplace_back("matrix", ehk_matrix(p, d));
    if (method == "ehrhart" || method == "all")
        values.emplace_back("ehrhart", ehk_ehrhart(p, d));
    if (values.empty()) throw std::invalid_argument("unknown method: " + method);

    bool agree = true;
    for (const auto& [name, value] : values) agree = agree && value == values.front().second;

    if (format == "json") {
        ordered_json j;
        j["p"] = p;
        j["d"] = d;
        ordered_json vals;
        for (const auto& [name, value] : values) vals[name] = rational_to_json(value);
        j["values"] = std::move(vals);
        j["decimal"] = decimal_approx(values.front().second);
        j["agree"] = agree;
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        CsvWriter csv{std::cout};
        csv.row({"d", "p", "method", "num", "den", "decimal_approx_20digits"});
        for (const auto& [name, value] : values)
            csv.row({std::to_string(d), std::to_string(p), name,
                     Integer(value.get_num()).get_str(), Integer(value.get_den()).get_str(),
                     decimal_approx(value)});
    } else {
        for (const auto& [name, value] : values)
            std::cout << "e_HK(p=" << p << ", d=" << d << ") [" << name
                      << "] = " << to_string(value) << " ~ " << decimal_approx(value) << "\n";
        if (method == "all") {
            if (!prime) std::cout << "repring skipped (p is not prime)\n";
            std::cout << "agreement: " << (agree ? "yes" : "NO") << "\n";
        }
    }
    return agree ? kExitOk : kExitVerifyFailure;
}

int cmd_function(int d, const std::string& format) {
    if (d < 1) throw std::invalid_argument("d must be at least 1");
    EhkFunction f = ehk_function(d);
    if (format == "json") {
        ordered_json j;
        j["d"] = d;
        j["reduced"] = rational_function_to_json(f.reduced);
        j["unreduced_num"] = polynomial_to_json(f.unreduced_num);
        j["unreduced_den"] = polynomial_to_json(f.unreduced_den);
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        CsvWriter csv{std::cout};
        csv.row({"d", "reduced", "unreduced_num", "unreduced_den"});
        csv.row({std::to_string(d), f.reduced.to_string("p"), f.unreduced_num.to_string("p"),
                 f.unreduced_den.to_string("p")});
    } else {
        std::cout << "d = " << d << "\n";
        std::cout << "e_HK(p) = " << f.reduced.to_string("p") << "\n";
        std::cout << "unreduced numerator   (degree " << f.unreduced_num.degree()
                  << "): " << f.unreduced_num.to_string("p") << "\n";
        std::cout << "unreduced denominator (degree " << f.unreduced_den.degree()
                  << "): " << f.unreduced_den.to_string("p") << "\n";
    }
    return kExitOk;
}

std::vector<Ineq> parse_pattern(const std::string& text, int d) {
    std::vector<Ineq> pattern;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "le" || item == "<=")
            pattern.push_back(Ineq::Le);
        else if (item == "ge" || item == ">=")
            pattern.push_back(Ineq::Ge);
        else
            throw std::invalid_argument("pattern entries must be le/ge");
    }
    if (static_cast<int>(pattern.size()) != d - 1)
        throw std::invalid_argument("pattern needs exactly d-1 entries");
    return pattern;
}

int cmd_count(const std::string& polytope, int d, long k, const std::string& pattern_text,
              bool oracle, std::int64_t budget, const std::string& format) {
    LatticeCountQuery query;
    query.d = d;
    query.k = k;
    Integer count;
    if (polytope == "fibonacci") {
        query.family = PolytopeFamily::Fibonacci;
        count = count_fibonacci(d, k);
    } else if (polytope == "extended") {
        query.family = PolytopeFamily::Extended;
        count = count_extended(d, k);
    } else if (polytope == "region") {
        query.family = PolytopeFamily::Region;
        query.pattern = parse_pattern(pattern_text, d);
        count = count_region(d, query.pattern, k);
    } else {
        throw std::invalid_argument("--polytope must be fibonacci, extended or region");
    }
    bool checked = false, matches = true;
    if (oracle) {
        checked = true;
        matches = (brute_force_count(query, budget) == count);
    }
    if (format == "json") {
        ordered_json j;
        j["polytope"] = polytope;
        j["d"] = d;
        j["k"] = k;
        j["count"] = count.get_str();
        if (checked) j["oracle_agrees"] = matches;
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        CsvWriter csv{std::cout};
        csv.row({"polytope", "d", "k", "count"});
        csv.row({polytope, std::to_string(d), std::to_string(k), count.get_str()});
    } else {
        std::cout << count.get_str() << "\n";
        if (checked) std::cout << "oracle: " << (matches ? "agrees" : "DISAGREES") << "\n";
    }
    return matches ? kExitOk : kExitVerifyFailure;
}

int cmd_ehrhart(const std::string& polytope, int d, const std::string& format) {
    if (d < 1) throw std::invalid_argument("d must be at least 1");
    std::vector<std::pair<Rational, Rational>> points;
    for (long k = 0; k <= d; ++k) {
        Integer c = polytope == "fibonacci" ? count_fibonacci(d, k)
                    : polytope == "extended" ? count_extended(d, k)
                                             : throw std::invalid_argument(
                                                   "--polytope must be fibonacci or extended");
        points.emplace_back(Rational(k), Rational(c));
    }
    Polynomial poly = interpolate(points);
    if (format == "json") {
        ordered_json j;
        j["polytope"] = polytope;
        j["d"] = d;
        j["ehrhart"] = polynomial_to_json(poly);
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        CsvWriter csv{std::cout};
        csv.row({"degree", "coefficient"});
        for (int i = 0; i <= poly.degree(); ++i)
            csv.row({std::to_string(i), to_string(poly.coeff(i))});
    } else {
        std::cout << "coefficients (ascending): [";
        for (int i = 0; i <= poly.degree(); ++i) {
            if (i) std::cout << ", ";
            std::cout << to_string(poly.coeff(i));
        }
        std::cout << "]\n";
    }
    return kExitOk;
}

int cmd_swap(int d, const std::string& cache_dir, const std::string& format) {
    SwapTable table;
    if (!cache_dir.empty())
        table = SwapTableCache(cache_dir).get_or_compute(d);
    else
        table = swap_table(d);
    if (format == "json") {
        std::cout << swap_table_to_json(table).dump(2) << "\n";
    } else if (format == "csv") {
        CsvWriter csv{std::cout};
        csv.row({"m", "s_d(m)"});
        for (std::size_t m = 0; m < table.s.size(); ++m)
            csv.row({std::to_string(m), table.s[m].get_str()});
    } else {
        std::cout << "[";
        for (std::size_t m = 0; m < table.s.size(); ++m) {
            if (m) std::cout << ", ";
            std::cout << table.s[m].get_str();
        }
        std::cout << "]\n";
    }
    return kExitOk;
}

int cmd_leading(const Integer& q, int n_max, const std::string& format) {
    if (n_max < 1) throw std::invalid_argument("--n-max must be at least 1");
    std::vector<std::pair<int, Rational>> rows;
    for (int n = 1; n <= n_max; ++n) rows.emplace_back(n, leading_coeff_Q(q, n));
    if (format == "json") {
        ordered_json j;
        j["q"] = q.get_str();
        ordered_json arr = ordered_json::array();
        for (const auto& [n, lc] : rows) {
            ordered_json row;
            row["n"] = n;
            row["leading_coeff"] = rational_to_json(lc);
            arr.push_back(std::move(row));
        }
        j["rows"] = std::move(arr);
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        CsvWriter csv{std::cout};
        csv.row({"q", "n", "leading_coeff"});
        for (const auto& [n, lc] : rows)
            csv.row({q.get_str(), std::to_string(n), to_string(lc)});
    } else {
        for (const auto& [n, lc] : rows)
            std::cout << "n=" << n << ": " << to_string(lc) << "\n";
    }
    return kExitOk;
}

// Scan suites render as value tables in CSV mode, one row per grid cell.
bool write_scan_csv(const std::string& suite, const VerifyBounds& bounds) {
    CsvWriter csv{std::cout};
    auto emit = [&](int d, long p, const Rational& value) {
        csv.row({std::to_string(d), std::to_string(p), Integer(value.get_num()).get_str(),
                 Integer(value.get_den()).get_str(), decimal_approx(value)});
    };
    if (suite == "monotone-p") {
        int d_max = bounds.d_max ? bounds.d_max : 12;
        long p_max = bounds.p_max ? bounds.p_max : 199;
        csv.row({"d", "p", "num", "den", "decimal_approx_20digits"});
        for (int d = 1; d <= d_max; ++d)
            for (const auto& [p, value] : scan_monotone_p(d, p_max).values) emit(d, p, value);
        return true;
    }
    if (suite == "monotone-d") {
        int d_max = bounds.d_max ? bounds.d_max : 12;
        long p_max = bounds.p_max ? bounds.p_max : 31;
        csv.row({"d", "p", "num", "den", "decimal_approx_20digits"});
        for (long p = 3; p <= p_max; p += 2) {
            if (!is_odd_prime(Integer(p))) continue;
            MonotoneDReport r = scan_monotone_d(p, d_max);
            for (int d = 1; d <= d_max; ++d)
                emit(d, p, r.values[static_cast<std::size_t>(d) - 1]);
        }
        return true;
    }
    if (suite == "convergence") {
        int d_max = std::min(bounds.d_max ? bounds.d_max : 8, 8);
        long p_max = bounds.p_max ? bounds.p_max : 999;
        std::vector<long> ps;
        for (long p = 3; p <= p_max; p += 2) ps.push_back(p);
        csv.row({"d", "p", "num", "den", "decimal_approx_20digits"});
        for (int d = 1; d <= d_max; ++d)
            for (const auto& row : convergence_probe(d, ps)) emit(d, row.p, row.scaled_gap);
        return true;
    }
    return false;
}

int cmd_verify(const std::string& suite, const VerifyBounds& bounds, const std::string& format) {
    if (format == "csv" && write_scan_csv(suite, bounds))
        return run_suite(suite, bounds).ok() ? kExitOk : kExitVerifyFailure;
    std::vector<SuiteReport> reports;
    if (suite == "all")
        reports = run_all_suites(bounds);
    else
        reports.push_back(run_suite(suite, bounds));

    bool ok = true;
    for (const auto& r : reports) ok = ok && r.ok();

    auto status_name = [](CheckStatus s) {
        return s == CheckStatus::Pass ? "PASS" : (s == CheckStatus::Fail ? "FAIL" : "INFO");
    };
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : reports) {
            ordered_json jr;
            jr["suite"] = r.name;
            ordered_json checks = ordered_json::array();
            for (const auto& c : r.checks) {
                ordered_json jc;
                jc["label"] = c.label;
                jc["status"] = status_name(c.status);
                jc["detail"] = c.detail;
                checks.push_back(std::move(jc));
            }
            jr["checks"] = std::move(checks);
            jr["ok"] = r.ok();
            arr.push_back(std::move(jr));
        }
        std::cout << arr.dump(2) << "\n";
    } else if (format == "csv") {
        CsvWriter csv{std::cout};
        csv.row({"suite", "status", "label", "detail"});
        for (const auto& r : reports)
            for (const auto& c : r.checks)
                csv.row({r.name, status_name(c.status), c.label, c.detail});
    } else {
        for (const auto& r : reports) {
            std::cout << "suite " << r.name << "\n";
            for (const auto& c : r.checks) {
                std::cout << "  " << status_name(c.status) << " " << c.label;
                if (!c.detail.empty()) std::cout << ": " << c.detail;
                std::cout << "\n";
            }
            std::cout << "suite result: " << (r.ok() ? "PASS" : "FAIL") << "\n";
        }
    }
    return ok ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hilbert-Kunz multiplicities of quadric hypersurfaces"};
    app.require_subcommand(1);

    std::string format = "text";
    long p = 0;
    int d = 0;
    long k = 0;
    std::string method = "all";
    std::string polytope = "fibonacci";
    std::string pattern;
    std::string cache_dir;
    bool oracle = false;
    std::int64_t budget = hkq::kBruteForceBudget;
    long q = 2;
    int n_max = 6;
    hkq::VerifyBounds bounds;
    std::string suite;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: text, json or csv");
    };

    CLI::App* ehk = app.add_subcommand("ehk", "Hilbert-Kunz multiplicity of a quadric");
    ehk->add_option("--p", p, "odd characteristic >= 3")->required();
    ehk->add_option("--d", d, "dimension >= 1")->required();
    ehk->add_option("--method", method, "repring, matrix, ehrhart or all");
    add_format(ehk);

    CLI::App* function = app.add_subcommand("function", "e_HK as a rational function of p");
    function->add_option("--d", d, "dimension >= 1")->required();
    add_format(function);

    CLI::App* count = app.add_subcommand("count", "lattice points of a dilated polytope");
    count->add_option("--polytope", polytope, "fibonacci, extended or region");
    count->add_option("--d", d, "dimension")->required();
    count->add_option("--k", k, "dilation >= 0")->required();
    count->add_option("--pattern", pattern, "region only: comma list of le/ge, length d-1");
    count->add_flag("--oracle", oracle, "cross-check against direct enumeration");
    count->add_option("--budget", budget, "tuple budget for the enumeration oracle");
    add_format(count);

    CLI::App* ehrhart = app.add_subcommand("ehrhart", "interpolated Ehrhart polynomial");
    ehrhart->add_option("--polytope", polytope, "fibonacci or extended");
    ehrhart->add_option("--d", d, "dimension >= 1")->required();
    add_format(ehrhart);

    CLI::App* swap = app.add_subcommand("swap", "swap-statistic table of alternating permutations");
    swap->add_option("--d", d, "dimension >= 1")->required();
    swap->add_option("--cache-dir", cache_dir, "swap table cache directory")
        ->envname("HKQ_CACHE_DIR");
    add_format(swap);

    CLI::App* leading =
        app.add_subcommand("leading", "leading coefficient of k -> [Q(q,k)^{n+1}]_(1,1)");
    leading->add_option("--q", q, "corner value q >= 0");
    leading->add_option("--n-max", n_max, "compute for n = 1..n_max");
    add_format(leading);

    CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", suite, "identities, ehrhart, monotone-d, monotone-p, parity, "
                                       "convergence, appendix, volumes, kreweras or all")
        ->required();
    verify->add_option("--d-max", bounds.d_max, "dimension bound");
    verify->add_option("--p-max", bounds.p_max, "characteristic bound");
    verify->add_option("--n-max", bounds.n_max, "size bound");
    add_format(verify);

    try {
        app.parse(argc, argv);
        check_format(format);
        if (ehk->parsed()) return cmd_ehk(p, d, method, format);
        if (function->parsed()) return cmd_function(d, format);
        if (count->parsed()) return cmd_count(polytope, d, k, pattern, oracle, budget, format);
        if (ehrhart->parsed()) return cmd_ehrhart(polytope, d, format);
        if (swap->parsed()) return cmd_swap(d, cache_dir, format);
        if (leading->parsed()) return cmd_leading(hkq::Integer(q), n_max, format);
        if (verify->parsed()) return cmd_verify(suite, bounds, format);
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailure;
    }
}
