#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "taubound/bounds.hpp"
#include "taubound/character.hpp"
#include "taubound/divisor_sum.hpp"
#include "taubound/poly.hpp"

namespace taubound {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct VerifyConfig {
    std::vector<QuadraticPoly> polys;
    std::vector<std::uint64_t> grid;  // sorted ascending
    double epsilon = 1e-6;            // L(1,chi) truncation target
    unsigned threads = 1;
};

/// The five built-in reference polynomials (deltas -1, -2, -6, 35, 91)
/// with grid {1e2, ..., 1e6} capped at n_max.
VerifyConfig default_config(std::uint64_t n_max = 1'000'000);

/// Plain-text config: '#' comments, "poly B,C" lines, one "grid N N ..."
/// line. Throws ConfigError on malformed input or invalid polynomials.
VerifyConfig parse_config(std::istream& in);
VerifyConfig load_config_file(const std::string& path);

struct GridRow {
    std::uint64_t n = 0;
    std::uint64_t exact_sum = 0;
    BoundBreakdown bound;
    double margin = 0.0;              // bound.total - exact_sum
    double ratio_to_main_term = 0.0;  // exact_sum / bound.main_term

    bool operator==(const GridRow&) const = default;
};

struct VerificationReport {
    std::int64_t b = 0, c = 0, delta = 0;
    CertifiedValue l_value;
    std::vector<GridRow> rows;
    bool holds = false;  // margin >= 0 on every row

    bool operator==(const VerificationReport&) const = default;
};

/// Exact S(N) per grid point (sieve, cross-checked against the naive
/// oracle for N <= 1e4) against the five-term bound.
std::vector<VerificationReport> verify_theorem2(const VerifyConfig& config);

struct Corollary1Row {
    std::uint64_t n = 0;
    std::uint64_t exact_sum = 0;
    double bound = 0.0;
    double margin = 0.0;
};

struct Corollary1Report {
    std::uint64_t exhaustive_limit = 0;  // every N <= this was checked
    std::uint64_t worst_n = 0;           // smallest relative margin seen
    double worst_margin = 0.0;
    std::vector<Corollary1Row> rows;     // exhaustive digest + samples
    bool holds = false;
};

/// Checks sum_{n<=N} tau(n^2+1) <= corollary1_bound(N) for every
/// N <= min(n_max, 1e4) and then at powers of ten up to n_max.
Corollary1Report verify_corollary1(std::uint64_t n_max, unsigned threads = 1);

struct LValueRow {
    std::int64_t b = 0, c = 0, delta = 0;
    std::int64_t modulus = 0;
    CertifiedValue l;
    double reference = 0.0;  // 4-decimal published value
    bool matches = false;    // |l.value - reference| <= 1.1e-3
};

/// Certified L(1,chi) for the built-in polynomials next to the reference
/// column.
std::vector<LValueRow> l_value_table(double epsilon = 1e-6);

struct LemmaCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// The supporting explicit estimates, each verified at full scale:
/// rho convolution identity (d <= 1e4), squarefree-count radius (N <= 1e6),
/// character-sum bounds (|delta| <= 100), L(1,chi) truncation consistency,
/// and the squarefree harmonic-sum bound (x <= 1e6).
std::vector<LemmaCheck> lemma_suite(unsigned threads = 1);

struct RatioRow {
    std::uint64_t n = 0;
    std::uint64_t exact_sum = 0;
    double ratio = 0.0;     // exact / (A N log N), A = 2 L / zeta(2)
    double envelope = 0.0;  // 4 / log N (empirical margin, not a theorem)
    bool within = false;
};

std::vector<RatioRow> theorem1_ratios(const QuadraticPoly& f,
                                      const std::vector<std::uint64_t>& grid,
                                      double epsilon = 1e-6,
                                      unsigned threads = 1);

// --- serialization ---------------------------------------------------------

std::string reports_to_json(const std::vector<VerificationReport>& reports);
std::vector<VerificationReport> reports_from_json(const std::string& text);

/// CSV with columns poly_b,poly_c,delta,N,exact_sum,bound_total,main_term,
/// margin,ratio.
std::string reports_to_csv(const std::vector<VerificationReport>& reports);
std::string corollary1_to_csv(const Corollary1Report& report);
std::string corollary1_to_json(const Corollary1Report& report);

}  // namespace taubound
