// medlpf: compute the median largest prime factor exactly by sieve
// methods, the analytic constants and li_f-based predictors attached to
// it, and verification tables cross-checking the two sides.
//
// Exit codes: 0 success, 2 validation error, 3 cross-check failure.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "medlpf/medlpf.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitCrossCheck = 3;

// Accepts plain integers and 1e6-style scientific notation; values are
// floored to integers for the exact operations.
medlpf::u64 parse_count(const std::string& s, const char* what) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0' || !(v >= 0))
        throw std::invalid_argument(std::string(what) + ": cannot parse '" + s + "'");
    if (v > static_cast<double>(medlpf::kMaxSieveBound))
        throw std::invalid_argument(std::string(what) + ": value exceeds supported bound 1e9");
    return static_cast<medlpf::u64>(v);
}

std::vector<medlpf::u64> parse_grid(const std::string& csv) {
    std::vector<medlpf::u64> grid;
    size_t pos = 0;
    while (pos < csv.size()) {
        size_t comma = csv.find(',', pos);
        if (comma == std::string::npos) comma = csv.size();
        const std::string tok = csv.substr(pos, comma - pos);
        if (!tok.empty()) grid.push_back(parse_count(tok, "x-grid"));
        pos = comma + 1;
    }
    return grid;
}

medlpf::u64 segment_size_from_env() {
    const char* env = std::getenv("MEDLPF_SEGMENT_SIZE");
    if (!env || !*env) return medlpf::kDefaultSegmentSize;
    const medlpf::u64 s = parse_count(env, "MEDLPF_SEGMENT_SIZE");
    if (s < medlpf::kMinSegmentSize)
        throw std::invalid_argument("MEDLPF_SEGMENT_SIZE: must be >= 64");
    return s;
}

std::string f12(double v) { return medlpf::format_sig12(v); }

int run_median(medlpf::u64 x, const std::string& method, medlpf::u64 seg) {
    using namespace medlpf;
    if (x < 2) throw std::invalid_argument("median: x must be >= 2");
    if ((method == "lambda" || method == "all") && x < 1000) {
        if (method == "lambda")
            throw std::invalid_argument("median: --method=lambda requires x >= 1e3");
    }
    std::printf("# median largest prime factor; P(1)=1, lower median (rank m = ceil(N/2))\n");
    std::printf("x = %llu\n", static_cast<unsigned long long>(x));
    std::printf("rank_m = %llu\n", static_cast<unsigned long long>((x + 1) / 2));

    bool mismatch = false;
    u64 direct_median = 0;
    if (method == "direct" || method == "tailsum" || method == "all") {
        if (method != "tailsum") {
            const MedianResult d = median_lpf_direct(x, seg);
            direct_median = d.median;
            std::printf("median_direct = %llu\n", static_cast<unsigned long long>(d.median));
        }
        if (method != "direct") {
            const MedianResult t = median_lpf_tailsum(x, seg);
            std::printf("median_tailsum = %llu%s\n", static_cast<unsigned long long>(t.median),
                        t.method == MedianMethod::direct ? "  (fell back to direct: crossing at or below sqrt(x))" : "");
            if (method == "all" && t.median != direct_median) mismatch = true;
        }
    }
    if (method == "lambda" || (method == "all" && x >= 1000)) {
        const double y = median_via_lambda(static_cast<double>(x));
        std::printf("median_lambda = %s\n", f12(y).c_str());
        if (method == "all") {
            const double rel = std::abs(y - static_cast<double>(direct_median)) / y;
            std::printf("lambda_relative_error = %s\n", f12(rel).c_str());
        }
    }
    if (method == "all" && x >= 10) {
        const MedianPrediction p = median_predictor_lif(static_cast<double>(x));
        std::printf("predictor_lif = %s\n", f12(p.predictor_lif).c_str());
        std::printf("predictor_leading = %s\n", f12(p.predictor_leading).c_str());
        if (x >= 100)
            std::printf("d1_empirical = %s  (diagnostic fit, not asserted)\n",
                        f12(fit_d1_empirical(static_cast<double>(x),
                                             static_cast<double>(direct_median))).c_str());
    }
    if (method == "all") {
        std::printf("cross-check direct == tailsum: %s\n", mismatch ? "FAILED" : "ok");
        if (mismatch) return kExitCrossCheck;
    }
    return 0;
}

int run_constants(int n_max, medlpf::u64 prime_cutoff) {
    using namespace medlpf;
    const ConstantSet cs = compute_constant_set(n_max, prime_cutoff);
    std::printf("# gamma_n via limit definition (m = %llu), c_n via both routes, cutoff %llu\n",
                static_cast<unsigned long long>(cs.gamma_cutoff),
                static_cast<unsigned long long>(cs.prime_cutoff));
    for (int n = 0; n <= n_max; ++n)
        std::printf("gamma_%d = %s  (claimed_error %s)\n", n,
                    f12(cs.gamma[n].value).c_str(), f12(cs.gamma[n].claimed_error).c_str());
    for (int n = 0; n <= n_max; ++n)
        std::printf("c_%d stieltjes = %s  integral = %s  |diff| = %s\n", n,
                    f12(cs.c_stieltjes[n].value).c_str(),
                    f12(cs.c_integral[n].value).c_str(),
                    f12(std::abs(cs.c_stieltjes[n].value - cs.c_integral[n].value)).c_str());
    std::printf("B1 = %s  (claimed_error %s)\n", f12(cs.B1.value).c_str(), f12(cs.B1.claimed_error).c_str());
    std::printf("B2 = %s  (claimed_error %s)\n", f12(cs.B2.value).c_str(), f12(cs.B2.claimed_error).c_str());
    std::printf("exp((gamma-1)/sqrt(e)) = %s\n", f12(cs.median_leading).c_str());
    const double gap = cs.lemma_gap();
    const bool ok = gap <= 1e-6;
    std::printf("coefficient cross-check: max |c_integral - c_stieltjes| = %s  (tolerance 1e-06): %s\n",
                f12(gap).c_str(), ok ? "ok" : "FAILED");
    return ok ? 0 : kExitCrossCheck;
}

int run_verify(const std::string& grid_csv, const std::string& out_path,
               const std::string& format, medlpf::u64 seg) {
    using namespace medlpf;
    const std::vector<u64> grid = parse_grid(grid_csv);
    std::vector<VerificationRow> rows;
    rows.reserve(grid.size());
    for (u64 x : grid) rows.push_back(make_verification_row(x, seg));
    const std::string payload = (format == "json") ? verification_json(rows)
                                                   : verification_csv(rows);
    if (out_path.empty()) {
        std::fputs(payload.c_str(), stdout);
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw std::invalid_argument("verify: cannot open output file " + out_path);
        f << payload;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"median largest prime factor: exact sieve computations and asymptotic predictors"};
    app.require_subcommand(1);

    std::string x_str, y_str, u_str;
    std::string method = "direct";
    int n_max = 4;
    std::string cutoff_str = "1000000";
    std::string grid_csv, out_path;
    std::string format = "csv";

    auto* med = app.add_subcommand("median", "exact median largest prime factor M(x)");
    med->add_option("x", x_str, "upper bound x (accepts 1e6 notation)")->required();
    med->add_option("--method", method, "direct|tailsum|lambda|all")
       ->check(CLI::IsMember({"direct", "tailsum", "lambda", "all"}));

    auto* cons = app.add_subcommand("constants", "Stieltjes constants, c_n, B1, B2, leading constant");
    cons->add_option("--n-max", n_max, "largest index n (0..8)")->check(CLI::Range(0, 8));
    cons->add_option("--prime-cutoff", cutoff_str, "prime cutoff for B1/B2");

    auto* ver = app.add_subcommand("verify", "emit one verification row per grid point");
    ver->add_option("--x-grid", grid_csv, "comma-separated x values")->required();
    ver->add_option("--out", out_path, "output file (default stdout)");
    ver->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    auto* psi = app.add_subcommand("psi", "smooth count psi(x, y)");
    psi->add_option("x", x_str, "upper bound x")->required();
    psi->add_option("y", y_str, "smoothness bound y")->required();

    auto* rho_cmd = app.add_subcommand("rho", "Dickman rho(u)");
    rho_cmd->add_option("u", u_str, "argument u in [0, 10]")->required();

    try {
        app.parse(argc, argv);
        const medlpf::u64 seg = segment_size_from_env();
        if (med->parsed())
            return run_median(parse_count(x_str, "x"), method, seg);
        if (cons->parsed())
            return run_constants(n_max, parse_count(cutoff_str, "prime-cutoff"));
        if (ver->parsed())
            return run_verify(grid_csv, out_path, format, seg);
        if (psi->parsed()) {
            const medlpf::u64 x = parse_count(x_str, "x");
            const medlpf::u64 y = parse_count(y_str, "y");
            std::printf("psi(%llu, %llu) = %llu\n",
                        static_cast<unsigned long long>(x), static_cast<unsigned long long>(y),
                        static_cast<unsigned long long>(medlpf::psi_smooth_count(x, y, seg)));
            return 0;
        }
        if (rho_cmd->parsed()) {
            char* end = nullptr;
            const double u = std::strtod(u_str.c_str(), &end);
            if (end == u_str.c_str() || *end != '\0')
                throw std::invalid_argument("rho: cannot parse u");
            std::printf("rho(%s) = %s\n", f12(u).c_str(), f12(medlpf::rho(u)).c_str());
            return 0;
        }
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
