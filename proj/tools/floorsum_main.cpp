// floorsum: floor-function sums S_f(x) = sum_{n<=x} f(floor(x/n)), their
// limit constants C_f = sum f(n)/(n(n+1)), the exponent-pair calculus,
// a Vaaler sawtooth approximation, and error-scaling experiments.
//
// Subcommands: eval, constant, exppair, scaling, gsweep, vaaler, table.
// Output goes to stdout (or --out); diagnostics to stderr.
// Exit codes: 0 ok, 1 usage error, 2 numeric/capability failure.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "floorsum/arith.hpp"
#include "floorsum/constants.hpp"
#include "floorsum/experiments.hpp"
#include "floorsum/exppair.hpp"
#include "floorsum/parallel.hpp"
#include "floorsum/sums.hpp"
#include "floorsum/vaaler.hpp"

namespace fs = floorsum;
using fs::arith::ArithFunc;
using json = nlohmann::ordered_json;

namespace {

uint64_t parse_count(const std::string& s, const char* what) {
    if (s.empty()) throw fs::UsageError(std::string(what) + ": empty value");
    bool digits = s.find_first_not_of("0123456789") == std::string::npos;
    try {
        if (digits) return std::stoull(s);
        size_t pos = 0;
        double d = std::stod(s, &pos);
        if (pos != s.size()) throw fs::UsageError("");
        auto v = static_cast<uint64_t>(d);
        if (!(d >= 0) || d > 9.2e18 || static_cast<double>(v) != d)
            throw fs::UsageError("");
        return v;
    } catch (const std::exception&) {
        throw fs::UsageError(std::string(what) + ": '" + s +
                             "' is not an exact nonnegative integer");
    }
}

ArithFunc parse_f(const std::string& s) {
    if (s == "one") return ArithFunc::one();
    if (s == "mobius") return ArithFunc::mobius();
    if (s.rfind("muK:", 0) == 0)
        return ArithFunc::mu_k(static_cast<int>(
            parse_count(s.substr(4), "--f muK:k")));
    if (s.rfind("mu", 0) == 0 && s.size() > 2 &&
        s.find_first_not_of("0123456789", 2) == std::string::npos)
        return ArithFunc::mu_k(static_cast<int>(
            parse_count(s.substr(2), "--f muN")));
    if (s.rfind("power:", 0) == 0) {
        size_t pos = 0;
        double eta = std::stod(s.substr(6), &pos);
        if (pos != s.size() - 6)
            throw fs::UsageError("--f power:eta: cannot parse eta");
        return ArithFunc::power_eta(eta);
    }
    throw fs::UsageError("--f must be one of mu2|mu3|muK:k|one|mobius|power:eta");
}

fs::exppair::ExponentPair parse_pair(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw fs::UsageError("pair must look like p/q,r/s");
    return {fs::exppair::parse_rational(s.substr(0, comma)),
            fs::exppair::parse_rational(s.substr(comma + 1))};
}

void write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::fputs(content.c_str(), stdout);
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw fs::UsageError("cannot open output file " + out_path);
    f << content;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void check_format(const std::string& format,
                  std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (format == a) return;
    throw fs::UsageError("--format '" + format + "' not supported here");
}

std::string sum_value_str(const fs::SumResult& r) {
    return r.is_integer() ? std::to_string(r.int_value())
                          : fmt17(r.real_value());
}

// ---------------------------------------------------------------------------

int cmd_eval(const std::string& farg, const std::string& xstr,
             const std::string& method, const std::string& format,
             const std::string& out_path) {
    check_format(format, {"text", "json"});
    ArithFunc f = parse_f(farg);
    uint64_t x = parse_count(xstr, "--x");
    if (x < 1) throw fs::UsageError("--x must be >= 1");
    if (method != "naive" && method != "blocks" && method != "both")
        throw fs::UsageError("--method must be naive|blocks|both");

    std::vector<fs::SumResult> results;
    if (method == "naive" || method == "both")
        results.push_back(fs::eval_naive(f, x));
    if (method == "blocks" || method == "both")
        results.push_back(fs::eval_blocks(f, x));

    bool match = true;
    if (results.size() == 2) {
        if (results[0].is_integer())
            match = results[0].int_value() == results[1].int_value();
        else {
            double a = results[0].real_value(), b = results[1].real_value();
            match = std::fabs(a - b) <=
                    1e-9 * std::max(1.0, std::max(std::fabs(a), std::fabs(b)));
        }
    }

    std::string out;
    if (format == "json") {
        json j;
        j["f"] = f.label();
        j["x"] = x;
        j["results"] = json::array();
        for (const auto& r : results) {
            json jr;
            jr["method"] = r.method == fs::SumMethod::naive ? "naive" : "blocks";
            if (r.is_integer())
                jr["value"] = r.int_value();
            else
                jr["value"] = r.real_value();
            j["results"].push_back(jr);
        }
        if (results.size() == 2) j["match"] = match;
        out = j.dump(2) + "\n";
    } else {
        for (const auto& r : results)
            out += "S_" + f.label() + "(" + std::to_string(x) + ") = " +
                   sum_value_str(r) +
                   (r.method == fs::SumMethod::naive ? "  [naive]\n"
                                                     : "  [blocks]\n");
        if (results.size() == 2)
            out += std::string("verdict: ") + (match ? "OK" : "MISMATCH") + "\n";
    }
    write_output(out, out_path);
    return match ? 0 : 2;
}

int cmd_constant(const std::string& farg, uint64_t M, double tol,
                 const std::string& method, const std::string& format,
                 const std::string& out_path, unsigned threads) {
    check_format(format, {"text", "json"});
    ArithFunc f = parse_f(farg);
    if (method != "direct" && method != "accel" && method != "both")
        throw fs::UsageError("--method must be direct|accel|both");

    std::vector<fs::constants::ConstantResult> results;
    if (method == "direct" || method == "both")
        results.push_back(fs::constants::c_f_direct(f, M, threads));
    if (method == "accel" || method == "both") {
        if (f.kind() != ArithFunc::Kind::MuK)
            throw fs::CapabilityError(
                "accelerated method applies to mu_k only");
        results.push_back(fs::constants::c_mu_k_accelerated(f.k(), tol));
    }

    bool agree = true;
    if (results.size() == 2)
        agree = std::fabs(results[0].value - results[1].value) <=
                results[0].abs_error_bound + results[1].abs_error_bound;

    std::string out;
    if (format == "json") {
        json j;
        j["f"] = f.label();
        j["results"] = json::array();
        for (const auto& r : results)
            j["results"].push_back({{"value", r.value},
                                    {"bound", r.abs_error_bound},
                                    {"method", fs::constants::method_name(r.method)},
                                    {"M", r.M}});
        if (results.size() == 2) j["agree"] = agree;
        out = j.dump(2) + "\n";
    } else {
        for (const auto& r : results) {
            char line[160];
            std::snprintf(line, sizeof(line),
                          "C_%s = %.17g +- %.3g  [%s, M=%" PRIu64 "]\n",
                          f.label().c_str(), r.value, r.abs_error_bound,
                          fs::constants::method_name(r.method), r.M);
            out += line;
        }
        if (results.size() == 2)
            out += std::string("agreement: ") + (agree ? "OK" : "FAIL") + "\n";
    }
    write_output(out, out_path);
    return agree ? 0 : 2;
}

int cmd_exppair(const std::string& word, int optimize_len,
                const std::string& start_str, const std::string& vartheta_str,
                int thetak, const std::string& format,
                const std::string& out_path) {
    check_format(format, {"text", "json"});
    namespace ep = fs::exppair;
    if (word.empty() && optimize_len == 0 && vartheta_str.empty() && thetak == 0)
        throw fs::UsageError(
            "exppair needs --word, --optimize, --vartheta, or --thetak");

    ep::ExponentPair start = parse_pair(start_str);
    std::string out;
    json j;

    if (!word.empty()) {
        ep::ExponentPair p = ep::apply_word(word, start);
        ep::Rational e = ep::error_exponent(p);
        out += word + ep::format_pair(start) + " = " + ep::format_pair(p) +
               ", error_exponent = " + ep::format_rational(e) + " = " +
               fmt17(ep::to_double(e)) + "\n";
        j["word"] = {{"word", word},
                     {"pair", ep::format_pair(p)},
                     {"kappa", ep::format_rational(p.kappa)},
                     {"lambda", ep::format_rational(p.lambda)},
                     {"exponent", ep::format_rational(e)},
                     {"decimal", ep::to_double(e)}};
    }
    if (optimize_len > 0) {
        ep::OptimizeResult r = ep::optimize_word(optimize_len, start);
        out += "best word " + r.word + " -> " + ep::format_pair(r.pair) +
               ", exponent " + ep::format_rational(r.exponent) + " = " +
               fmt17(ep::to_double(r.exponent)) + "\n";
        j["optimize"] = {{"word", r.word},
                         {"pair", ep::format_pair(r.pair)},
                         {"exponent", ep::format_rational(r.exponent)},
                         {"decimal", ep::to_double(r.exponent)}};
    }
    if (!vartheta_str.empty()) {
        ep::Rational a = ep::parse_rational(vartheta_str);
        ep::Rational v = ep::vartheta(a);
        out += "vartheta(" + ep::format_rational(a) + ") = " +
               ep::format_rational(v) + " = " + fmt17(ep::to_double(v)) + "\n";
        j["vartheta"] = {{"a", ep::format_rational(a)},
                         {"value", ep::format_rational(v)},
                         {"decimal", ep::to_double(v)}};
    }
    if (thetak != 0) {
        ep::Rational t = ep::theta_k(thetak);
        out += "theta_" + std::to_string(thetak) + " = " +
               ep::format_rational(t) + " = " + fmt17(ep::to_double(t)) + "\n";
        j["theta_k"] = {{"k", thetak},
                        {"value", ep::format_rational(t)},
                        {"decimal", ep::to_double(t)}};
    }
    write_output(format == "json" ? j.dump(2) + "\n" : out, out_path);
    return 0;
}

void print_scaling_summary(const fs::experiments::ScalingReport& rep) {
    std::fprintf(stderr, "f=%s  C_f=%.12g (+-%.2g, %s)  samples=%zu\n",
                 rep.f_label.c_str(), rep.c_f.value, rep.c_f.abs_error_bound,
                 fs::constants::method_name(rep.c_f.method),
                 rep.samples.size());
    if (rep.fit.degenerate)
        std::fprintf(stderr, "fit: degenerate (all E = 0)\n");
    else
        std::fprintf(stderr, "fit: slope=%.6f intercept=%.4f r2=%.6f (n=%zu)\n",
                     rep.fit.slope, rep.fit.intercept, rep.fit.r_squared,
                     rep.fit.n_used);
    for (const auto& ref : rep.references)
        std::fprintf(stderr, "reference: %-32s %s = %.6f\n", ref.label.c_str(),
                     ref.exact.c_str(), ref.decimal);
}

int cmd_scaling(const std::string& farg, const std::string& xmin_str,
                const std::string& xmax_str, int points,
                const std::string& format, const std::string& out_path,
                unsigned threads) {
    check_format(format, {"csv", "json", "text"});
    ArithFunc f = parse_f(farg);
    uint64_t x_min = parse_count(xmin_str, "--xmin");
    uint64_t x_max = parse_count(xmax_str, "--xmax");

    fs::experiments::ScalingReport rep =
        f.kind() == ArithFunc::Kind::PowerEta
            ? fs::experiments::power_family_study(f.eta(), x_min, x_max,
                                                     points, threads)
            : fs::experiments::scaling_study(f, x_min, x_max, points, threads);

    print_scaling_summary(rep);
    if (f.kind() == ArithFunc::Kind::PowerEta) {
        // the older bounds carry (log x)^((1+eta)(2+eps2)/6) resp.
        // (log x)^((1+eta)eps2/6); the reference here is log-free
        try {
            double e2 = fs::experiments::epsilon2(static_cast<double>(x_max));
            double s = (1.0 + f.eta()) / 6.0;
            std::fprintf(stderr,
                         "prior log factors at xmax: eps2=%.4f -> "
                         "(log x)^%.3f and (log x)^%.3f\n",
                         e2, s * (2.0 + e2), s * e2);
        } catch (const fs::DomainError&) {
        }
    }
    std::string out;
    if (format == "csv")
        out = fs::experiments::to_csv(rep);
    else if (format == "json")
        out = fs::experiments::to_json(rep);
    else {
        out = "f = " + rep.f_label + "\nC_f = " + fmt17(rep.c_f.value) +
              " +- " + fmt17(rep.c_f.abs_error_bound) + "\n";
        out += rep.fit.degenerate
                   ? "fit: degenerate (all E = 0)\n"
                   : "fit: slope " + fmt17(rep.fit.slope) + ", r2 " +
                         fmt17(rep.fit.r_squared) + "\n";
        for (const auto& ref : rep.references)
            out += "reference " + ref.label + ": " + ref.exact + " = " +
                   fmt17(ref.decimal) + "\n";
    }
    write_output(out, out_path);
    return 0;
}

int cmd_gsweep(const std::string& farg, const std::string& xstr,
               const std::string& dmin_str, const std::string& dmax_str,
               int dpoints, double delta, const std::string& pair_str,
               const std::string& format, const std::string& out_path) {
    check_format(format, {"csv", "text"});
    ArithFunc f = parse_f(farg);
    uint64_t x = parse_count(xstr, "--x");
    uint64_t dmin = parse_count(dmin_str, "--Dmin");
    uint64_t dmax = parse_count(dmax_str, "--Dmax");
    if (dmin < 1 || dmax < dmin) throw fs::UsageError("need 1 <= Dmin <= Dmax");
    if (dpoints < 1) throw fs::UsageError("--Dpoints must be >= 1");

    std::vector<uint64_t> Ds;
    for (int i = 0; i < dpoints; ++i) {
        double t = dpoints == 1 ? 0.0 : static_cast<double>(i) / (dpoints - 1);
        auto D = static_cast<uint64_t>(std::llround(
            dmin * std::pow(static_cast<double>(dmax) / dmin, t)));
        Ds.push_back(std::min(std::max(D, dmin), dmax));
    }
    std::sort(Ds.begin(), Ds.end());
    Ds.erase(std::unique(Ds.begin(), Ds.end()), Ds.end());

    fs::experiments::GSweepReport rep = fs::experiments::g_sweep(
        f, static_cast<double>(x), Ds, delta, parse_pair(pair_str));

    if (rep.fit.degenerate)
        std::fprintf(stderr, "slope in D: degenerate\n");
    else
        std::fprintf(stderr, "slope in D: %.6f (r2=%.6f)\n", rep.fit.slope,
                     rep.fit.r_squared);

    std::string out;
    if (format == "csv") {
        out = fs::experiments::to_csv(rep);
    } else {
        out = "G(x,D) sweep: f=" + rep.f_label + " x=" + fmt17(rep.x) +
              " delta=" + fmt17(rep.delta) + " pair=" + rep.pair + "\n";
        char line[200];
        std::snprintf(line, sizeof(line), "%12s %22s %22s %22s\n", "D", "|G|",
                      "bound_plain", "bound_xkappa");
        out += line;
        for (const auto& row : rep.rows) {
            std::snprintf(line, sizeof(line), "%12" PRIu64 " %22.12g %22.12g %22.12g\n",
                          row.D, row.absG, row.bound_plain, row.bound_xkappa);
            out += line;
        }
        out += rep.fit.degenerate
                   ? "slope: degenerate\n"
                   : "slope: " + fmt17(rep.fit.slope) + "\n";
    }
    write_output(out, out_path);
    return 0;
}

int cmd_expsum(const std::string& h_str, double x, const std::string& m_str,
               double delta, const std::string& xlo_str,
               const std::string& xhi_str, const std::string& format,
               const std::string& out_path) {
    check_format(format, {"text", "json"});
    uint64_t h = parse_count(h_str, "--h");
    uint64_t m = parse_count(m_str, "--m");
    uint64_t xlo = parse_count(xlo_str, "--Xlo");
    uint64_t xhi = parse_count(xhi_str, "--Xhi");
    std::complex<double> s = fs::exp_sum(h, x, m, delta, xlo, xhi);

    std::string out;
    if (format == "json") {
        json j;
        j["re"] = s.real();
        j["im"] = s.imag();
        j["abs"] = std::abs(s);
        j["terms"] = xhi - xlo;
        out = j.dump(2) + "\n";
    } else {
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "sum = %.12g %+.12gi  |sum| = %.12g  (%" PRIu64 " terms)\n",
                      s.real(), s.imag(), std::abs(s), xhi - xlo);
        out = buf;
    }
    write_output(out, out_path);
    return 0;
}

int cmd_vaaler(int H, int grid, const std::string& format,
               const std::string& out_path) {
    check_format(format, {"text", "json"});
    if (H < 1) throw fs::UsageError("--H must be >= 1");
    fs::vaaler::VerifyResult r = fs::vaaler::verify_bound(H, grid);

    std::string out;
    if (format == "json") {
        json j;
        j["H"] = r.H;
        j["grid"] = r.grid_size;
        j["max_abs_error"] = r.max_abs_error;
        j["max_violation"] = r.max_violation;
        j["max_violation_alt_weight"] = r.max_violation_alt_weight;
        j["max_h_gamma"] = r.max_h_gamma;
        j["min_rhs"] = r.min_rhs;
        out = j.dump(2) + "\n";
    } else {
        char buf[512];
        std::snprintf(buf, sizeof(buf),
                      "H=%d grid=%d\n"
                      "max |psi* - psi|          = %.6g\n"
                      "max violation (weights 1-|h|/(H+1)) = %.6g at x=%.6f\n"
                      "max violation (weights 1-|h|/H)     = %.6g at x=%.6f\n"
                      "coefficient decay max|h*gamma(h)|   = %.6g\n"
                      "min kernel majorant                 = %.6g\n",
                      r.H, r.grid_size, r.max_abs_error, r.max_violation,
                      r.argmax_x, r.max_violation_alt_weight, r.argmax_x_alt,
                      r.max_h_gamma, r.min_rhs);
        out = buf;
    }
    write_output(out, out_path);
    return 0;
}

int cmd_table(int k, const std::string& format, const std::string& out_path) {
    check_format(format, {"csv", "text"});
    std::vector<fs::experiments::Reference> rows =
        fs::experiments::comparison_table(k);
    std::string out;
    if (format == "csv") {
        out = fs::experiments::to_csv(rows);
    } else {
        out = "error exponents for S_mu_" + std::to_string(k) +
              " (ascending):\n";
        for (const auto& row : rows) {
            char line[160];
            std::snprintf(line, sizeof(line), "  %-12s %-10.8g  %s\n",
                          row.exact.c_str(), row.decimal, row.label.c_str());
            out += line;
        }
    }
    write_output(out, out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"floor-function sums, limit constants, and exponent pairs"};
    app.require_subcommand(1);

    unsigned threads = fs::default_threads();
    app.add_option("--threads", threads,
                   "worker threads (results are independent of this)");

    std::string farg = "mu2", xstr, method_eval = "blocks",
                method_const = "direct";
    std::string format, out_path, word, start_str = "0/1,1/1", vartheta_str,
                         xmin_str, xmax_str, dmin_str = "100",
                         dmax_str = "10000", pair_str = "1/2,1/2";
    uint64_t M = 100'000'000;
    double tol = 1e-9, delta = 0.0;
    int optimize_len = 0, thetak = 0, points = 24, dpoints = 13, H = 64,
        grid = 10'000, table_k = 2;

    auto* eval = app.add_subcommand("eval", "evaluate S_f(x)");
    eval->add_option("--f", farg, "mu2|mu3|muK:k|one|mobius|power:eta");
    eval->add_option("--x", xstr)->required();
    eval->add_option("--method", method_eval, "naive|blocks|both");
    eval->add_option("--format", format);
    eval->add_option("--out", out_path);

    auto* constant = app.add_subcommand("constant", "compute C_f");
    constant->add_option("--f", farg);
    constant->add_option("--M", M, "truncation point for the direct method");
    constant->add_option("--tol", tol, "tolerance for the accelerated method");
    constant->add_option("--method", method_const, "direct|accel|both");
    constant->add_option("--format", format);
    constant->add_option("--out", out_path);

    auto* exppair_cmd = app.add_subcommand("exppair", "exponent-pair calculus");
    exppair_cmd->add_option("--word", word, "A/B word, rightmost applies first");
    exppair_cmd->add_option("--optimize", optimize_len, "exhaustive word search");
    exppair_cmd->add_option("--start", start_str, "starting pair p/q,r/s");
    exppair_cmd->add_option("--vartheta", vartheta_str, "rational a");
    exppair_cmd->add_option("--thetak", thetak, "k for (k+1)/(3k+1)");
    exppair_cmd->add_option("--format", format);
    exppair_cmd->add_option("--out", out_path);

    auto* scaling = app.add_subcommand("scaling", "error-scaling study");
    scaling->add_option("--f", farg);
    scaling->add_option("--xmin", xmin_str)->required();
    scaling->add_option("--xmax", xmax_str)->required();
    scaling->add_option("--points", points);
    scaling->add_option("--format", format);
    scaling->add_option("--out", out_path);

    auto* gsweep = app.add_subcommand("gsweep", "G(x,D) against its bounds");
    gsweep->add_option("--f", farg);
    gsweep->add_option("--x", xstr)->required();
    gsweep->add_option("--Dmin", dmin_str);
    gsweep->add_option("--Dmax", dmax_str);
    gsweep->add_option("--Dpoints", dpoints);
    gsweep->add_option("--delta", delta);
    gsweep->add_option("--pair", pair_str, "exponent pair p/q,r/s");
    gsweep->add_option("--format", format);
    gsweep->add_option("--out", out_path);

    std::string h_str = "1", m_str = "1", xlo_str, xhi_str;
    double exs_x = 0.0;
    auto* expsum = app.add_subcommand("expsum", "sum of e(h*x/(m*n+delta))");
    expsum->set_help_flag("--help", "print help"); // frees -h for the flag below
    expsum->add_option("--h", h_str);
    expsum->add_option("--x", exs_x)->required();
    expsum->add_option("--m", m_str);
    expsum->add_option("--delta", delta);
    expsum->add_option("--Xlo", xlo_str)->required();
    expsum->add_option("--Xhi", xhi_str)->required();
    expsum->add_option("--format", format);
    expsum->add_option("--out", out_path);

    auto* vaaler_cmd = app.add_subcommand("vaaler", "verify the psi* bound");
    vaaler_cmd->add_option("--H", H)->required();
    vaaler_cmd->add_option("--grid", grid);
    vaaler_cmd->add_option("--format", format);
    vaaler_cmd->add_option("--out", out_path);

    auto* table = app.add_subcommand("table", "exponent ladder for S_mu_k");
    table->add_option("--k", table_k);
    table->add_option("--format", format);
    table->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(eval)) {
            if (format.empty()) format = "text";
            return cmd_eval(farg, xstr, method_eval, format, out_path);
        }
        if (app.got_subcommand(constant)) {
            if (format.empty()) format = "text";
            return cmd_constant(farg, M, tol, method_const, format, out_path,
                                threads);
        }
        if (app.got_subcommand(exppair_cmd)) {
            if (format.empty()) format = "text";
            return cmd_exppair(word, optimize_len, start_str, vartheta_str,
                               thetak, format, out_path);
        }
        if (app.got_subcommand(scaling)) {
            if (format.empty()) format = "csv";
            return cmd_scaling(farg, xmin_str, xmax_str, points, format,
                               out_path, threads);
        }
        if (app.got_subcommand(gsweep)) {
            if (format.empty()) format = "csv";
            return cmd_gsweep(farg, xstr, dmin_str, dmax_str, dpoints, delta,
                              pair_str, format, out_path);
        }
        if (app.got_subcommand(expsum)) {
            if (format.empty()) format = "text";
            return cmd_expsum(h_str, exs_x, m_str, delta, xlo_str, xhi_str,
                              format, out_path);
        }
        if (app.got_subcommand(vaaler_cmd)) {
            if (format.empty()) format = "text";
            return cmd_vaaler(H, grid, format, out_path);
        }
        if (app.got_subcommand(table)) {
            if (format.empty()) format = "text";
            return cmd_table(table_k, format, out_path);
        }
    } catch (const fs::UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 1;
}
