// Command-line front end: exact plane-partition counts, generating
// functions, zeta polynomials, Dahlquist exponents, and subgroup-tower
// summatory reports, emitted as CSV or JSON.

#include <omp.h>

#include <cmath>
#include <cstdint>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pptower/arith.hpp"
#include "pptower/genfun.hpp"
#include "pptower/partition.hpp"
#include "pptower/plane_partition.hpp"
#include "pptower/young_lattice.hpp"

using nlohmann::json;
using namespace pptower;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitDisagreement = 2;
constexpr unsigned kSytGuard = 12;       // max k*r for tableau-based paths
constexpr unsigned kEnumerateGuard = 14;  // max n for brute-force enumeration

unsigned rank_of(unsigned r_flag) { return r_flag == 0 ? kUnbounded : r_flag; }

std::string q_str(const mpq_class& v) { return v.get_str(); }

json poly_json(const IntPolynomial& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.get_str());
    if (a.empty()) a.push_back("0");
    return a;
}

std::vector<mpz_class> alpha_rows(unsigned k, unsigned r_flag, unsigned n_max,
                                  const std::string& method) {
    unsigned r = rank_of(r_flag);
    if (method == "enumerate") {
        if (n_max > kEnumerateGuard)
            throw CLI::ValidationError("enumerate method is limited to n <= " +
                                       std::to_string(kEnumerateGuard));
        std::vector<mpz_class> rows;
        for (unsigned n = 0; n <= n_max; ++n)
            rows.push_back(alpha(k, r == kUnbounded ? std::max(n, 1u) : r, n));
        return rows;
    }
    if (method == "genfun") {
        if (r == kUnbounded)
            throw CLI::ValidationError("genfun method needs a finite rank (r >= 1)");
        if (k * r > kSytGuard)
            throw CLI::ValidationError("genfun method is limited to k*r <= " +
                                       std::to_string(kSytGuard) + " (shape would have " +
                                       hook_count(k, r).get_str() + " tableaux)");
        return series(genfun(k, r), n_max);
    }
    if (method == "zetapoly") {
        std::vector<mpz_class> rows{1};
        for (unsigned n = 1; n <= n_max; ++n)
            rows.push_back(alpha_poly(n, r).eval_int(static_cast<long>(k)));
        return rows;
    }
    throw CLI::ValidationError("unknown method: " + method);
}

int cmd_alpha(unsigned k, unsigned r_flag, unsigned n_max, const std::string& method,
              const std::string& format) {
    auto rows = alpha_rows(k, r_flag, n_max, method);

    // cross-check every method on the overlap of their feasible ranges
    unsigned check_max = std::min(n_max, 6u);
    for (const char* other : {"enumerate", "genfun", "zetapoly"}) {
        if (other == method) continue;
        if (std::string(other) == "genfun" &&
            (r_flag == 0 || k * r_flag > kSytGuard))
            continue;
        auto check = alpha_rows(k, r_flag, check_max, other);
        for (unsigned n = 0; n <= check_max; ++n)
            if (check[n] != rows[n]) {
                std::cerr << "method disagreement at n=" << n << ": " << method << "="
                          << rows[n].get_str() << " " << other << "=" << check[n].get_str()
                          << "\n";
                return kExitDisagreement;
            }
    }

    if (format == "json") {
        json out = json::array();
        for (unsigned n = 0; n <= n_max; ++n) out.push_back({{"n", n}, {"alpha", rows[n].get_str()}});
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "n,alpha\n";
        for (unsigned n = 0; n <= n_max; ++n) std::cout << n << "," << rows[n].get_str() << "\n";
    }
    return 0;
}

int cmd_genfun(unsigned k, unsigned r, const std::string& format) {
    if (k * r > kSytGuard) {
        std::cerr << "refusing: k*r = " << k * r << " exceeds " << kSytGuard << " (shape has "
                  << hook_count(k, r).get_str() << " tableaux)\n";
        return kExitUsage;
    }
    auto f = genfun(k, r);
    bool ok = funceq_check(f, k, r);
    if (format == "json") {
        std::cout << json{{"num", poly_json(f.num())}, {"den", poly_json(f.den())}, {"funceq", ok}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "part,coefficients\nnum,";
        for (const auto& c : f.num().coeffs()) std::cout << c.get_str() << " ";
        std::cout << "\nden,";
        for (const auto& c : f.den().coeffs()) std::cout << c.get_str() << " ";
        std::cout << "\nfunceq," << (ok ? "true" : "false") << "\n";
    }
    return ok ? 0 : kExitDisagreement;
}

int cmd_syt(unsigned k, unsigned r, const std::string& format) {
    if (k * r > kSytGuard) {
        std::cerr << "refusing: k*r = " << k * r << " exceeds " << kSytGuard << " (shape has "
                  << hook_count(k, r).get_str() << " tableaux)\n";
        return kExitUsage;
    }
    auto tableaux = syt_enumerate(k, r);
    if (tableaux.size() != hook_count(k, r)) {
        std::cerr << "internal cross-check failed: enumeration vs hook-length formula\n";
        return kExitDisagreement;
    }
    if (format == "json") {
        json out;
        out["count"] = tableaux.size();
        out["tableaux"] = json::array();
        for (const auto& t : tableaux) {
            json rows = json::array();
            for (unsigned i = 0; i < k; ++i) {
                json row = json::array();
                for (unsigned j = 0; j < r; ++j) row.push_back(t.at(i, j));
                rows.push_back(row);
            }
            out["tableaux"].push_back(rows);
        }
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "count," << tableaux.size() << "\n";
        for (const auto& t : tableaux) {
            for (unsigned i = 0; i < k; ++i) {
                for (unsigned j = 0; j < r; ++j) std::cout << (j ? " " : "") << t.at(i, j);
                std::cout << (i + 1 < k ? "|" : "\n");
            }
        }
    }
    return 0;
}

int cmd_alpha_poly(unsigned n, unsigned r_flag, const std::string& format) {
    auto p = alpha_poly(n, rank_of(r_flag));
    auto roots = negative_integer_roots(p, n);
    if (format == "json") {
        json coeffs = json::array();
        for (const auto& c : p.coeffs()) coeffs.push_back(q_str(c));
        std::cout << json{{"coefficients", coeffs}, {"negative_integer_roots", roots}}.dump()
                  << "\n";
    } else {
        std::cout << "degree,coefficient\n";
        for (std::size_t d = 0; d < p.coeffs().size(); ++d)
            std::cout << d << "," << q_str(p.coeffs()[d]) << "\n";
    }
    return 0;
}

int cmd_beta(unsigned k, unsigned r_flag, unsigned m_max, const std::string& format) {
    auto values = beta_series(k, rank_of(r_flag), m_max);
    if (format == "json") {
        json out = json::array();
        for (unsigned m = 1; m <= m_max; ++m)
            out.push_back({{"m", m}, {"beta", values[m - 1].get_str()}});
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "m,beta\n";
        for (unsigned m = 1; m <= m_max; ++m) std::cout << m << "," << values[m - 1].get_str() << "\n";
    }
    return 0;
}

int cmd_towers(unsigned k, unsigned r_flag, std::uint64_t N, const std::string& format) {
    if (N > 10'000'000ull) {
        std::cerr << "refusing: N exceeds 10^7\n";
        return kExitUsage;
    }
    std::vector<std::uint64_t> samples;
    for (std::uint64_t s = 16; s < N; s *= 2) samples.push_back(s);
    if (samples.empty() || samples.back() != N) samples.push_back(std::max<std::uint64_t>(N, 16));
    auto report = fit_growth(k, rank_of(r_flag), samples);
    if (format == "json") {
        json out = json::array();
        for (const auto& row : report)
            out.push_back({{"N", row.N}, {"sum", row.sum.get_str()}, {"ratio", row.ratio}});
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "N,sum,ratio\n";
        for (const auto& row : report)
            std::cout << row.N << "," << row.sum.get_str() << "," << row.ratio << "\n";
    }
    return 0;
}

int cmd_figure_data(unsigned k_max, unsigned n_max, const std::string& format) {
    if (k_max >= 3 && n_max > 25) {
        std::cerr << "refusing: n_max is limited to 25 for k >= 3\n";
        return kExitUsage;
    }
    const double pi = std::numbers::pi;
    struct Row {
        unsigned k, n;
        double vs_logq, vs_hr;
    };
    std::vector<Row> rows;
    for (unsigned k = 1; k <= k_max; ++k) {
        auto table = alpha_table(k, std::max(n_max, 1u), n_max);
        for (unsigned n = 2; n <= n_max; ++n) {
            double la = std::log(table[n].get_d());
            rows.push_back({k, n, la / std::log(q(n).get_d()), la / (pi * std::sqrt(2.0 * n / 3.0))});
        }
    }
    if (format == "json") {
        json out = json::array();
        for (const auto& r : rows)
            out.push_back({{"k", r.k}, {"n", r.n}, {"log_ratio_q", r.vs_logq}, {"log_ratio_hr", r.vs_hr}});
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "k,n,log_ratio_q,log_ratio_hr\n";
        for (const auto& r : rows)
            std::cout << r.k << "," << r.n << "," << r.vs_logq << "," << r.vs_hr << "\n";
    }
    return 0;
}

// Compact reproduction matrix for the displayed tables; each row is an
// independent exact check.
int cmd_selftest() {
    struct Check {
        std::string name;
        bool ok;
    };
    std::vector<Check> checks;
    auto add = [&](const std::string& name, bool ok) { checks.push_back({name, ok}); };

    auto pw = [](const IntPolynomial& p, unsigned e) {
        IntPolynomial acc{1};
        for (unsigned i = 0; i < e; ++i) acc = acc * p;
        return acc;
    };

    add("syt count 3^2 = 5", syt_enumerate(2, 3).size() == 5);
    add("F_{2,3} closed form",
        genfun(2, 3) == RationalFunction(IntPolynomial{1, 2, 2, 1, 1} * IntPolynomial{1, 1, 2, 2, 1},
                                         pw({-1, 1}, 6) * pw({1, 1}, 3) * pw({1, 1, 1}, 4)));
    add("F_{3,2} closed form",
        genfun(3, 2) == RationalFunction({1, 2, 4, 2, 1}, pw({-1, 1}, 6) * pw({1, 1}, 5)));
    add("F_{4,2} closed form",
        genfun(4, 2) == RationalFunction({1, 3, 9, 9, 9, 3, 1}, pw({-1, 1}, 8) * pw({1, 1}, 7)));

    bool funceq_all = true;
    for (unsigned k = 1; funceq_all && k <= 10; ++k)
        for (unsigned r = 1; funceq_all && k * r <= 10; ++r) funceq_all = funceq_check(k, r);
    add("functional equation, k*r <= 10", funceq_all);

    add("alpha-poly(4,4) = 5k(k+2)(k+1)^2/12",
        alpha_poly(4, 4).eval(3) == 100);  // 5k(k+2)(k+1)^2/12 at k=3

    bool three_way = true;
    for (unsigned k = 1; three_way && k <= 3; ++k)
        for (unsigned r = 1; three_way && r <= 3; ++r) {
            auto s = series(genfun(k, r), 8);
            for (unsigned n = 0; three_way && n <= 8; ++n) {
                three_way = s[n] == alpha(k, r, n);
                if (n >= 1)
                    three_way = three_way && s[n] == alpha_poly(n, r).eval_int(static_cast<long>(k));
            }
        }
    add("enumeration = series = zeta-polynomial (k,r <= 3, n <= 8)", three_way);

    bool beta_rows = true;
    std::vector<long> b2{2, 3, 3, 4, 2, 6, 1, 4, 6, 2, 0, 12, -1, -2, 9};
    for (unsigned m = 1; beta_rows && m <= 15; ++m) beta_rows = beta_bar(2, m) == b2[m - 1];
    add("beta-bar_2(1..15) sequence", beta_rows);

    bool all_ok = true;
    for (const auto& c : checks) {
        std::cout << (c.ok ? "PASS  " : "FAIL  ") << c.name << "\n";
        all_ok = all_ok && c.ok;
    }
    return all_ok ? 0 : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact plane-partition counts, generating functions and subgroup-tower statistics"};
    app.require_subcommand(1);

    std::string format = "csv";
    int threads = 0;
    bool seedless = true;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--threads", threads, "OpenMP thread count (0 = runtime default)");
    app.add_flag("--seedless", seedless, "fully deterministic output (always on)");

    unsigned k = 1, r = 0, n = 8, m_max = 10, k_max = 5;
    std::uint64_t N = 100000;
    std::string method = "enumerate";

    auto* alpha_cmd = app.add_subcommand("alpha", "counts of k x r plane partitions by first-row sum");
    alpha_cmd->add_option("-k", k, "rows")->required()->check(CLI::PositiveNumber);
    alpha_cmd->add_option("-r", r, "columns (0 = unbounded)")->required();
    alpha_cmd->add_option("-n", n, "largest first-row sum");
    alpha_cmd->add_option("--method", method, "computation path")
        ->check(CLI::IsMember({"enumerate", "genfun", "zetapoly"}));

    auto* genfun_cmd = app.add_subcommand("genfun", "rational generating function and functional-equation verdict");
    genfun_cmd->add_option("-k", k, "rows")->required()->check(CLI::PositiveNumber);
    genfun_cmd->add_option("-r", r, "columns")->required()->check(CLI::PositiveNumber);

    auto* syt_cmd = app.add_subcommand("syt", "standard Young tableaux of the k x r rectangle");
    syt_cmd->add_option("-k", k, "rows")->required()->check(CLI::PositiveNumber);
    syt_cmd->add_option("-r", r, "columns")->required()->check(CLI::PositiveNumber);

    auto* poly_cmd = app.add_subcommand("alpha-poly", "counting polynomial in k for fixed n");
    poly_cmd->add_option("-n", n, "first-row sum")->required()->check(CLI::PositiveNumber);
    poly_cmd->add_option("-r", r, "columns (0 = unbounded)");

    auto* beta_cmd = app.add_subcommand("beta", "Dahlquist zeta-power exponents");
    beta_cmd->add_option("-k", k, "tower length")->required()->check(CLI::PositiveNumber);
    beta_cmd->add_option("-r", r, "rank bound (0 = unbounded)");
    beta_cmd->add_option("-M", m_max, "largest m")->check(CLI::PositiveNumber);

    auto* towers_cmd = app.add_subcommand("towers", "subgroup-tower summatory report");
    towers_cmd->add_option("-k", k, "tower length")->required()->check(CLI::PositiveNumber);
    towers_cmd->add_option("-r", r, "rank bound (0 = unbounded)");
    towers_cmd->add_option("-N", N, "largest order")->check(CLI::PositiveNumber);

    auto* fig_cmd = app.add_subcommand("figure-data", "growth-ratio data for the alpha-bar coefficients");
    fig_cmd->add_option("--kmax", k_max, "largest k")->check(CLI::PositiveNumber);
    fig_cmd->add_option("--nmax", n, "largest n")->check(CLI::PositiveNumber);

    app.add_subcommand("selftest", "reproduce the displayed tables and identities");

    CLI11_PARSE(app, argc, argv);
    if (threads > 0) omp_set_num_threads(threads);

    try {
        if (alpha_cmd->parsed()) return cmd_alpha(k, r, n, method, format);
        if (genfun_cmd->parsed()) return cmd_genfun(k, r, format);
        if (syt_cmd->parsed()) return cmd_syt(k, r, format);
        if (poly_cmd->parsed()) return cmd_alpha_poly(n, r, format);
        if (beta_cmd->parsed()) return cmd_beta(k, r, m_max, format);
        if (towers_cmd->parsed()) return cmd_towers(k, r, N, format);
        if (fig_cmd->parsed()) return cmd_figure_data(k_max, n, format);
        return cmd_selftest();
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
