#include "floorsum/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "floorsum/parallel.hpp"
#include "floorsum/summation.hpp"
#include "floorsum/sums.hpp"

namespace floorsum::experiments {

using arith::ArithFunc;
using exppair::Rational;

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

FitResult fit_loglog(const std::vector<double>& lx, const std::vector<double>& ly) {
    FitResult f;
    f.n_used = lx.size();
    if (lx.size() < 2) {
        f.degenerate = true;
        return f;
    }
    size_t n = lx.size();
    double mx = 0, my = 0;
    for (size_t i = 0; i < n; ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0, syy = 0;
    for (size_t i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
        syy += (ly[i] - my) * (ly[i] - my);
    }
    if (sxx == 0) {
        f.degenerate = true;
        return f;
    }
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.r_squared = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    return f;
}

// exact rational from a double that came from a decimal flag (e.g. 1.5)
Rational rational_from_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return exppair::parse_rational(buf);
}

std::vector<Reference> references_for(const ArithFunc& f) {
    using exppair::ExponentPair;
    std::vector<Reference> refs;
    auto push = [&](std::string label, const Rational& r) {
        refs.push_back({std::move(label), exppair::format_rational(r),
                        exppair::to_double(r)});
    };
    switch (f.kind()) {
    case ArithFunc::Kind::MuK:
        if (f.k() == 2) {
            push("11/29 (log^2) via BABAAB(0,1)",
                 exppair::error_exponent(exppair::apply_word(
                     "BABAAB", ExponentPair{Rational(0), Rational(1)})));
            push("2/5+eps", Rational(2, 5));
            push("1919/4268+eps", Rational(1919, 4268));
            push("152/401+eps via BABA at a=13/84",
                 exppair::vartheta(Rational(13, 84)));
        } else {
            push(f.k() == 3 ? "1/3 (log^2) via pair (1/2,1/2)"
                            : "1/3 (log) via pair (1/2,1/2)",
                 Rational(1, 3));
            push("theta_k = (k+1)/(3k+1)", exppair::theta_k(f.k()));
        }
        break;
    case ArithFunc::Kind::PowerEta: {
        Rational e = (1 + rational_from_double(f.eta())) / 3;
        push("(1+eta)/3", e);
        break;
    }
    default:
        break;
    }
    return refs;
}

} // namespace

std::vector<uint64_t> log_spaced(uint64_t x_min, uint64_t x_max, int points) {
    if (x_min < 10) throw UsageError("scaling requires x_min >= 10");
    if (x_max < x_min) throw UsageError("scaling requires x_max >= x_min");
    if (points < 4) throw UsageError("scaling requires points >= 4");
    std::vector<uint64_t> xs;
    double lo = static_cast<double>(x_min), hi = static_cast<double>(x_max);
    for (int i = 0; i < points; ++i) {
        double t = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
        auto x = static_cast<uint64_t>(std::llround(lo * std::pow(hi / lo, t)));
        xs.push_back(std::min(std::max(x, x_min), x_max));
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

ScalingReport scaling_study(const ArithFunc& f, uint64_t x_min, uint64_t x_max,
                            int points, unsigned threads) {
    std::vector<uint64_t> xs = log_spaced(x_min, x_max, points);

    ScalingReport rep;
    rep.f_label = f.label();
    rep.c_f = constants::c_for(f, 1e-9, threads);
    rep.references = references_for(f);

    rep.samples.resize(xs.size());
    parallel_indexed(xs.size(), threads, [&](size_t i) {
        SumResult s = eval_blocks(f, xs[i]);
        ScalingSample& smp = rep.samples[i];
        smp.x = xs[i];
        if (s.is_integer())
            smp.S = s.int_value();
        else
            smp.S = s.real_value();
        smp.Cx = rep.c_f.value * static_cast<double>(xs[i]);
        smp.E = smp.S_double() - smp.Cx;
    });

    std::vector<double> lx, ly;
    for (const auto& s : rep.samples) {
        if (s.E == 0.0) continue;
        lx.push_back(std::log(static_cast<double>(s.x)));
        ly.push_back(std::log(std::fabs(s.E)));
    }
    rep.fit = fit_loglog(lx, ly);
    return rep;
}

ScalingReport power_family_study(double eta, uint64_t x_min, uint64_t x_max,
                                    int points, unsigned threads) {
    ArithFunc f = ArithFunc::power_eta(eta);
    // hypothesis: sum_{n<=x} |f(n)|^2 = sum n^(eta-1) tracks x^eta / eta
    for (uint64_t x : {uint64_t(10'000), uint64_t(1'000'000)}) {
        KahanSum acc;
        for (uint64_t n = 1; n <= x; ++n)
            acc.add(std::pow(static_cast<double>(n), eta - 1.0));
        double ratio = acc.value() / std::pow(static_cast<double>(x), eta);
        if (!(ratio >= 0.3 / eta && ratio <= 3.0 / eta))
            throw UsageError("power_eta moment hypothesis failed at x=" +
                             std::to_string(x) +
                             ": ratio=" + std::to_string(ratio));
    }
    return scaling_study(f, x_min, x_max, points, threads);
}

GSweepReport g_sweep(const ArithFunc& f, double x,
                     const std::vector<uint64_t>& D_values, double delta,
                     const exppair::ExponentPair& pair) {
    if (!exppair::admissible(pair))
        throw DomainError("g_sweep: inadmissible pair " +
                          exppair::format_pair(pair));
    GSweepReport rep;
    rep.f_label = f.label();
    rep.x = x;
    rep.delta = delta;
    rep.pair = exppair::format_pair(pair);

    double kappa = exppair::to_double(pair.kappa);
    double lambda = exppair::to_double(pair.lambda);
    std::vector<double> lx, ly;
    for (uint64_t D : D_values) {
        GSweepRow row;
        row.D = D;
        row.absG = std::fabs(dyadic_psi_sum(f, x, D, delta));
        double Dd = static_cast<double>(D);
        double core = std::pow(Dd, (lambda - kappa) / (1.0 + kappa));
        row.bound_plain = core + Dd * Dd / x;
        row.bound_xkappa =
            std::pow(x, kappa / (1.0 + kappa)) * core + Dd * Dd / x;
        rep.rows.push_back(row);
        if (row.absG > 0) {
            lx.push_back(std::log(Dd));
            ly.push_back(std::log(row.absG));
        }
    }
    rep.fit = fit_loglog(lx, ly);
    return rep;
}

double epsilon2_from_logs(double logloglog_x, double loglog_x) {
    if (!(logloglog_x > 0))
        throw DomainError("epsilon2 requires log log log x > 0");
    return std::sqrt(2.0 * logloglog_x / loglog_x) *
           (1.0 + 30.0 / logloglog_x);
}

double epsilon2(double x) {
    if (!(x > 1.0)) throw DomainError("epsilon2 requires log log log x > 0");
    double ll = std::log(std::log(x));
    if (!(ll > 1.0)) // log log log x > 0 iff log log x > 1, i.e. x > e^e
        throw DomainError("epsilon2 requires log log log x > 0");
    return epsilon2_from_logs(std::log(ll), ll);
}

std::vector<Reference> comparison_table(int k) {
    if (k < 2) throw UsageError("comparison_table requires k >= 2");
    ArithFunc f = ArithFunc::mu_k(std::min(k, 62));
    std::vector<Reference> rows = references_for(f);
    std::sort(rows.begin(), rows.end(),
              [](const Reference& a, const Reference& b) {
                  return a.decimal < b.decimal;
              });
    return rows;
}

std::string to_csv(const ScalingReport& r) {
    std::string out = "x,S,Cx,E,log_x,log_absE\n";
    for (const auto& s : r.samples) {
        out += std::to_string(s.x);
        out += ',';
        if (s.S.index() == 0)
            out += std::to_string(std::get<int64_t>(s.S));
        else
            out += fmt17(std::get<double>(s.S));
        out += ',';
        out += fmt17(s.Cx);
        out += ',';
        out += fmt17(s.E);
        out += ',';
        out += fmt17(std::log(static_cast<double>(s.x)));
        out += ',';
        out += fmt17(s.E == 0.0 ? -INFINITY : std::log(std::fabs(s.E)));
        out += '\n';
    }
    return out;
}

std::string to_json(const ScalingReport& r) {
    nlohmann::ordered_json j;
    j["f"] = r.f_label;
    j["c_f"] = {{"value", r.c_f.value},
                {"bound", r.c_f.abs_error_bound},
                {"method", constants::method_name(r.c_f.method)}};
    j["samples"] = nlohmann::ordered_json::array();
    for (const auto& s : r.samples) {
        nlohmann::ordered_json js;
        js["x"] = s.x;
        if (s.S.index() == 0)
            js["S"] = std::get<int64_t>(s.S);
        else
            js["S"] = std::get<double>(s.S);
        js["Cx"] = s.Cx;
        js["E"] = s.E;
        j["samples"].push_back(js);
    }
    if (r.fit.degenerate) {
        j["fit"] = {{"slope", nullptr},
                    {"intercept", nullptr},
                    {"r_squared", nullptr},
                    {"degenerate", true}};
    } else {
        j["fit"] = {{"slope", r.fit.slope},
                    {"intercept", r.fit.intercept},
                    {"r_squared", r.fit.r_squared},
                    {"degenerate", false}};
    }
    j["references"] = nlohmann::ordered_json::array();
    for (const auto& ref : r.references)
        j["references"].push_back({{"label", ref.label},
                                   {"exact", ref.exact},
                                   {"decimal", ref.decimal}});
    return j.dump(2) + "\n";
}

std::string to_csv(const GSweepReport& r) {
    std::string out = "D,absG,bound_plain,bound_xkappa\n";
    for (const auto& row : r.rows) {
        out += std::to_string(row.D);
        out += ',';
        out += fmt17(row.absG);
        out += ',';
        out += fmt17(row.bound_plain);
        out += ',';
        out += fmt17(row.bound_xkappa);
        out += '\n';
    }
    return out;
}

std::string to_csv(const std::vector<Reference>& table) {
    std::string out = "label,exact,decimal\n";
    for (const auto& row : table) {
        out += '"' + row.label + "\",";
        out += row.exact;
        out += ',';
        out += fmt17(row.decimal);
        out += '\n';
    }
    return out;
}

} // namespace floorsum::experiments
