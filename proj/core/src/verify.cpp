#include "taubound/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "taubound/rounding.hpp"

namespace taubound {

namespace {

constexpr std::uint64_t kExhaustiveLimit = 10'000;  // per-N naive checks up to here

struct BuiltinRow {
    std::int64_t b, c;
    double reference_l;  // published 4-decimal L(1,chi)
};

// n^2+1, n^2+10n+27, n^2+4n+10, n^2+10n-10, n^2+20n+9
constexpr BuiltinRow kBuiltin[] = {
    {0, 1, 0.7854}, {5, 27, 1.1108}, {2, 10, 1.2826}, {5, -10, 0.8377}, {10, 9, 1.6887},
};

std::uint64_t sieve_table_limit(const QuadraticPoly& f, std::uint64_t n) {
    const int128 hi = std::max(f(1), f(static_cast<std::int64_t>(n)));
    return isqrt(static_cast<unsigned __int128>(std::max<int128>(hi, 1))) + 1;
}

double to_double(std::uint64_t v) { return static_cast<double>(v); }

}  // namespace

VerifyConfig default_config(std::uint64_t n_max) {
    VerifyConfig cfg;
    for (const auto& row : kBuiltin) cfg.polys.emplace_back(row.b, row.c);
    for (std::uint64_t n = 100; n <= 1'000'000 && n <= n_max; n *= 10) cfg.grid.push_back(n);
    if (cfg.grid.empty()) cfg.grid.push_back(std::max<std::uint64_t>(n_max, 1));
    return cfg;
}

VerifyConfig parse_config(std::istream& in) {
    VerifyConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string keyword;
        if (!(ls >> keyword)) continue;  // blank
        const std::string where = "config line " + std::to_string(lineno);
        if (keyword == "poly") {
            std::int64_t b = 0, c = 0;
            char comma = 0;
            if (!(ls >> b >> comma >> c) || comma != ',')
                throw ConfigError(where + ": expected \"poly B,C\"");
            try {
                cfg.polys.emplace_back(b, c);
            } catch (const InvalidPoly& e) {
                throw ConfigError(where + ": " + e.what());
            }
        } else if (keyword == "grid") {
            std::uint64_t n = 0;
            while (ls >> n) {
                if (n < 1) throw ConfigError(where + ": grid entries must be >= 1");
                cfg.grid.push_back(n);
            }
            if (!ls.eof()) throw ConfigError(where + ": bad grid entry");
        } else {
            throw ConfigError(where + ": unknown keyword \"" + keyword + "\"");
        }
    }
    if (cfg.polys.empty()) throw ConfigError("config: no polynomials given");
    if (cfg.grid.empty()) throw ConfigError("config: no grid given");
    std::sort(cfg.grid.begin(), cfg.grid.end());
    cfg.grid.erase(std::unique(cfg.grid.begin(), cfg.grid.end()), cfg.grid.end());
    return cfg;
}

VerifyConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    return parse_config(in);
}

std::vector<VerificationReport> verify_theorem2(const VerifyConfig& config) {
    std::uint64_t limit = 2;
    for (const auto& f : config.polys)
        for (const std::uint64_t n : config.grid)
            limit = std::max(limit, sieve_table_limit(f, n));
    const PrimeFactorTable table(static_cast<std::uint32_t>(limit));

    std::vector<VerificationReport> out;
    for (const auto& f : config.polys) {
        VerificationReport rep;
        rep.b = f.b();
        rep.c = f.c();
        rep.delta = f.delta();
        const QuadraticCharacter chi(f);
        rep.l_value = l_one(chi, config.epsilon);
        rep.holds = true;
        for (const std::uint64_t n : config.grid) {
            const SumResult sieved = sum_sieve(f, n, table, config.threads);
            if (n <= kExhaustiveLimit) {
                const SumResult naive = sum_naive(f, n, table);
                if (naive.value != sieved.value)
                    throw std::logic_error("engine mismatch: naive " +
                                           std::to_string(naive.value) + " vs sieve " +
                                           std::to_string(sieved.value) + " at N = " +
                                           std::to_string(n));
            }
            GridRow row;
            row.n = n;
            row.exact_sum = sieved.value;
            row.bound = theorem2_bound(f, n, rep.l_value);
            row.margin = row.bound.total - to_double(row.exact_sum);
            row.ratio_to_main_term = to_double(row.exact_sum) / row.bound.main_term;
            if (row.margin < 0) rep.holds = false;
            rep.rows.push_back(row);
        }
        out.push_back(std::move(rep));
    }
    return out;
}

Corollary1Report verify_corollary1(std::uint64_t n_max, unsigned threads) {
    if (n_max < 1) throw ConfigError("verify_corollary1: N must be >= 1");
    const QuadraticPoly f(0, 1);
    Corollary1Report rep;
    rep.holds = true;
    rep.exhaustive_limit = std::min(n_max, kExhaustiveLimit);
    rep.worst_margin = std::numeric_limits<double>::infinity();

    const PrimeFactorTable small_table(
        static_cast<std::uint32_t>(sieve_table_limit(f, rep.exhaustive_limit)));
    std::uint64_t acc = 0;
    for (std::uint64_t n = 1; n <= rep.exhaustive_limit; ++n) {
        acc += tau(static_cast<std::uint64_t>(f(static_cast<std::int64_t>(n))), small_table);
        const double bound = corollary1_bound(n);
        const double margin = bound - to_double(acc);
        if (margin < rep.worst_margin) {
            rep.worst_margin = margin;
            rep.worst_n = n;
        }
        if (margin < 0) rep.holds = false;
        if (n == 1 || n == 10 || n == 100 || n == 1000 || n == rep.exhaustive_limit)
            rep.rows.push_back({n, acc, bound, margin});
    }

    for (std::uint64_t n = kExhaustiveLimit * 10; n <= n_max; n *= 10) {
        const PrimeFactorTable table(static_cast<std::uint32_t>(sieve_table_limit(f, n)));
        const SumResult s = sum_sieve(f, n, table, threads);
        const double bound = corollary1_bound(n);
        const double margin = bound - to_double(s.value);
        if (margin < 0) rep.holds = false;
        rep.rows.push_back({n, s.value, bound, margin});
        if (n > n_max / 10) break;  // avoid overflow of n *= 10
    }
    return rep;
}

std::vector<LValueRow> l_value_table(double epsilon) {
    std::vector<LValueRow> out;
    for (const auto& row : kBuiltin) {
        const QuadraticPoly f(row.b, row.c);
        const QuadraticCharacter chi(f);
        LValueRow r;
        r.b = f.b();
        r.c = f.c();
        r.delta = f.delta();
        r.modulus = chi.modulus();
        r.l = l_one(chi, epsilon);
        r.reference = row.reference_l;
        // 1.1e-3 absorbs the 4-decimal rounding of the reference column
        r.matches = std::abs(r.l.value - r.reference) <= 1.1e-3;
        out.push_back(r);
    }
    return out;
}

std::vector<LemmaCheck> lemma_suite(unsigned threads) {
    std::vector<LemmaCheck> out;

    {  // rho convolution identity, d <= 1e4, all builtin polynomials
        LemmaCheck check{"rho = mu^2 (*) chi convolution identity", true, ""};
        const PrimeFactorTable table(10'000);
        for (const auto& row : kBuiltin) {
            const QuadraticPoly f(row.b, row.c);
            for (std::uint64_t d = 1; d <= 10'000; ++d) {
                if (rho_convolution(d, f, table) != rho_bruteforce(d, f)) {
                    check.pass = false;
                    check.detail = "mismatch at d = " + std::to_string(d) + ", poly " + f.name();
                    break;
                }
            }
            if (!check.pass) break;
        }
        if (check.pass) check.detail = "d <= 10000 across 5 polynomials";
        out.push_back(std::move(check));
    }

    {  // |Q(N) - N/zeta(2)| <= 0.6793 sqrt(N) for N <= 1e6
        LemmaCheck check{"squarefree count radius 0.6793 sqrt(N)", true, ""};
        const auto sf = squarefree_indicator(1'000'000);
        std::uint64_t q = 0;
        double worst = std::numeric_limits<double>::infinity();
        for (std::uint64_t n = 1; n <= 1'000'000; ++n) {
            q += sf[n];
            // bracket N/zeta(2); the deviation is largest at an endpoint
            const double lo = rnd::div_down(to_double(n), rnd::zeta2_up());
            const double hi = rnd::div_up(to_double(n), rnd::zeta2_down());
            const double dev = std::max(std::abs(to_double(q) - lo), std::abs(to_double(q) - hi));
            const double slack = moser_macleod_radius(n) - dev;
            worst = std::min(worst, slack);
            if (slack < 0) {
                check.pass = false;
                check.detail = "violated at N = " + std::to_string(n);
                break;
            }
        }
        if (check.pass)
            check.detail = "N <= 1e6, min slack " + std::to_string(worst);
        out.push_back(std::move(check));
    }

    {  // max partial sum <= explicit Polya-Vinogradov bound, |delta| <= 100
        LemmaCheck check{"character partial sums below Polya-Vinogradov constant", true, ""};
        int tested = 0;
        for (std::int64_t delta = -100; delta <= 100; ++delta) {
            if (delta == 0) continue;
            try {
                const QuadraticCharacter chi(delta);
                ++tested;
                const auto m = static_cast<double>(chi.max_partial_sum());
                if (m > polya_vinogradov_bound(chi.modulus(), chi.parity())) {
                    check.pass = false;
                    check.detail = "violated at delta = " + std::to_string(delta);
                    break;
                }
                if (m > m_delta(delta)) {
                    check.pass = false;
                    check.detail = "m_delta violated at delta = " + std::to_string(delta);
                    break;
                }
            } catch (const InvalidPoly&) {
                continue;  // delta not fundamental
            }
        }
        if (check.pass) check.detail = std::to_string(tested) + " characters, |delta| <= 100";
        out.push_back(std::move(check));
    }

    {  // overlapping certified intervals at eps and eps/100
        LemmaCheck check{"L(1,chi) truncation self-consistency", true, ""};
        for (const auto& row : kBuiltin) {
            const QuadraticCharacter chi(QuadraticPoly(row.b, row.c));
            const CertifiedValue coarse = l_one(chi, 1e-4);
            const CertifiedValue fine = l_one(chi, 1e-6);
            if (!coarse.overlaps(fine)) {
                check.pass = false;
                check.detail = "intervals disjoint for delta = " + std::to_string(chi.delta());
                break;
            }
        }
        if (check.pass) check.detail = "eps = 1e-4 vs 1e-6 across 5 characters";
        out.push_back(std::move(check));
    }

    {  // sum mu^2(n)/n <= log x / zeta(2) + 1.166, x <= 1e6
        LemmaCheck check{"squarefree harmonic sum bound", true, ""};
        const auto sf = squarefree_indicator(1'000'000);
        double sum_up = 0.0;  // upward-rounded partial sums
        double worst = std::numeric_limits<double>::infinity();
        for (std::uint64_t x = 1; x <= 1'000'000; ++x) {
            if (sf[x]) sum_up = rnd::add_up(sum_up, rnd::div_up(1.0, to_double(x)));
            // compare against the bound rounded *down*: stricter than needed
            const double rhs =
                rnd::add_down(rnd::div_down(rnd::log_down(to_double(x)), rnd::zeta2_up()),
                              rnd::down(1.166));
            const double slack = rhs - sum_up;
            worst = std::min(worst, slack);
            if (slack < 0) {
                check.pass = false;
                check.detail = "violated at x = " + std::to_string(x);
                break;
            }
        }
        if (check.pass) check.detail = "x <= 1e6, min slack " + std::to_string(worst);
        out.push_back(std::move(check));
    }

    (void)threads;
    return out;
}

std::vector<RatioRow> theorem1_ratios(const QuadraticPoly& f,
                                      const std::vector<std::uint64_t>& grid, double epsilon,
                                      unsigned threads) {
    std::uint64_t limit = 2;
    for (const std::uint64_t n : grid) {
        if (n < 2) throw ConfigError("theorem1_ratios: grid entries must be >= 2");
        limit = std::max(limit, sieve_table_limit(f, n));
    }
    const PrimeFactorTable table(static_cast<std::uint32_t>(limit));
    const QuadraticCharacter chi(f);
    const CertifiedValue coeff = asymptotic_constant(l_one(chi, epsilon));

    std::vector<RatioRow> out;
    for (const std::uint64_t n : grid) {
        const SumResult s = sum_sieve(f, n, table, threads);
        RatioRow row;
        row.n = n;
        row.exact_sum = s.value;
        const double nd = to_double(n);
        row.ratio = to_double(s.value) / (coeff.value * nd * std::log(nd));
        row.envelope = 4.0 / std::log(nd);
        row.within = std::abs(row.ratio - 1.0) <= row.envelope;
        out.push_back(row);
    }
    return out;
}

// --- serialization ----------------------------------------------------------

namespace {

using nlohmann::json;

json to_json(const CertifiedValue& v) {
    return json{{"value", v.value}, {"error_radius", v.error_radius}};
}

CertifiedValue certified_from_json(const json& j) {
    return CertifiedValue{j.at("value").get<double>(), j.at("error_radius").get<double>()};
}

json to_json(const BoundBreakdown& b) {
    return json{{"main_term", b.main_term},
                {"linear_term", b.linear_term},
                {"x_term", b.x_term},
                {"n_over_sqrtx_term", b.n_over_sqrtx_term},
                {"sqrtx_term", b.sqrtx_term},
                {"total", b.total},
                {"N", b.n},
                {"X", b.x}};
}

BoundBreakdown breakdown_from_json(const json& j) {
    BoundBreakdown b;
    b.main_term = j.at("main_term").get<double>();
    b.linear_term = j.at("linear_term").get<double>();
    b.x_term = j.at("x_term").get<double>();
    b.n_over_sqrtx_term = j.at("n_over_sqrtx_term").get<double>();
    b.sqrtx_term = j.at("sqrtx_term").get<double>();
    b.total = j.at("total").get<double>();
    b.n = j.at("N").get<std::uint64_t>();
    b.x = j.at("X").get<double>();
    return b;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
    json arr = json::array();
    for (const auto& rep : reports) {
        json rows = json::array();
        for (const auto& row : rep.rows) {
            rows.push_back(json{{"N", row.n},
                                {"exact_sum", row.exact_sum},
                                {"bound", to_json(row.bound)},
                                {"margin", row.margin},
                                {"ratio_to_main_term", row.ratio_to_main_term}});
        }
        arr.push_back(json{{"poly", json{{"b", rep.b}, {"c", rep.c}, {"delta", rep.delta}}},
                           {"l_value", to_json(rep.l_value)},
                           {"rows", std::move(rows)},
                           {"verdict", rep.holds ? "holds" : "violated"}});
    }
    return json{{"reports", std::move(arr)}}.dump(2) + "\n";
}

std::vector<VerificationReport> reports_from_json(const std::string& text) {
    const json root = json::parse(text);
    std::vector<VerificationReport> out;
    for (const auto& jr : root.at("reports")) {
        VerificationReport rep;
        rep.b = jr.at("poly").at("b").get<std::int64_t>();
        rep.c = jr.at("poly").at("c").get<std::int64_t>();
        rep.delta = jr.at("poly").at("delta").get<std::int64_t>();
        rep.l_value = certified_from_json(jr.at("l_value"));
        rep.holds = jr.at("verdict").get<std::string>() == "holds";
        for (const auto& jrow : jr.at("rows")) {
            GridRow row;
            row.n = jrow.at("N").get<std::uint64_t>();
            row.exact_sum = jrow.at("exact_sum").get<std::uint64_t>();
            row.bound = breakdown_from_json(jrow.at("bound"));
            row.margin = jrow.at("margin").get<double>();
            row.ratio_to_main_term = jrow.at("ratio_to_main_term").get<double>();
            rep.rows.push_back(row);
        }
        out.push_back(std::move(rep));
    }
    return out;
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
    std::string out = "poly_b,poly_c,delta,N,exact_sum,bound_total,main_term,margin,ratio\n";
    for (const auto& rep : reports) {
        for (const auto& row : rep.rows) {
            out += std::to_string(rep.b) + ',' + std::to_string(rep.c) + ',' +
                   std::to_string(rep.delta) + ',' + std::to_string(row.n) + ',' +
                   std::to_string(row.exact_sum) + ',' + format_double(row.bound.total) + ',' +
                   format_double(row.bound.main_term) + ',' + format_double(row.margin) + ',' +
                   format_double(row.ratio_to_main_term) + '\n';
        }
    }
    return out;
}

std::string corollary1_to_csv(const Corollary1Report& report) {
    std::string out = "poly_b,poly_c,delta,N,exact_sum,bound_total,main_term,margin,ratio\n";
    for (const auto& row : report.rows) {
        const double nd = to_double(row.n);
        const double main =
            rnd::mul_up(rnd::div_up(3.0, rnd::pi_down()), rnd::mul_up(nd, rnd::log_up(nd)));
        const double ratio = main > 0 ? to_double(row.exact_sum) / main : 0.0;
        out += "0,1,-1," + std::to_string(row.n) + ',' + std::to_string(row.exact_sum) + ',' +
               format_double(row.bound) + ',' + format_double(main) + ',' +
               format_double(row.margin) + ',' + format_double(ratio) + '\n';
    }
    return out;
}

std::string corollary1_to_json(const Corollary1Report& report) {
    json rows = json::array();
    for (const auto& row : report.rows)
        rows.push_back(json{{"N", row.n},
                            {"exact_sum", row.exact_sum},
                            {"bound", row.bound},
                            {"margin", row.margin}});
    return json{{"exhaustive_limit", report.exhaustive_limit},
                {"worst_n", report.worst_n},
                {"worst_margin", report.worst_margin},
                {"rows", std::move(rows)},
                {"verdict", report.holds ? "holds" : "violated"}}
               .dump(2) +
           "\n";
}

}  // namespace taubound
