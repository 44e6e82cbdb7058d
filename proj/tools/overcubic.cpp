// Command-line surface for the cubic overpartition engine: exact values by
// either route, the verification table, inequality scans, transformation
// checks, and bound reports. Exit codes: 0 success, 1 assertion/cross-check
// failure, 2 usage error.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "overcubic/bessel.hpp"
#include "overcubic/inequalities.hpp"
#include "overcubic/qseries.hpp"
#include "overcubic/rademacher.hpp"
#include "overcubic/table_io.hpp"
#include "overcubic/transform.hpp"

using json = nlohmann::ordered_json;
using namespace overcubic;

namespace {

struct RunConfig {
    long precision_digits = 40;
    long terms_per_series = 8;
    long horizon = 2000;
    std::optional<std::string> cache_path;
    std::string output_format = "text";  // text | json | csv
};

std::string ball_str(const Ball& b, long digits = 20) { return b.str(digits); }

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

void emit(const RunConfig& cfg, const json& doc, const std::string& text) {
    if (cfg.output_format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

PowerSeries table_for(const RunConfig& cfg, long nmax) {
    return load_or_build_table(nmax, cfg.cache_path);
}

// exact rational from a decimal literal like "1.25" or "-0.5"
mpq_class parse_decimal(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) return mpq_class(mpz_class(s));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    long places = static_cast<long>(s.size() - dot - 1);
    mpz_class den = 1;
    for (long i = 0; i < places; ++i) den *= 10;
    mpq_class q(mpz_class(digits), den);
    q.canonicalize();
    return q;
}

int cmd_value(const RunConfig& cfg, long n, const std::string& method) {
    mpz_class via_series, via_formula;
    bool have_series = false, have_formula = false;
    if (method == "qseries" || method == "both") {
        via_series = table_for(cfg, n).coefficient(n);
        have_series = true;
    }
    if (method == "rademacher" || method == "both") {
        if (n == 0)
            via_formula = 1;  // empty partition; the series form starts at n = 1
        else
            via_formula = exact_value(n);
        have_formula = true;
    }
    bool mismatch = have_series && have_formula && via_series != via_formula;
    mpz_class value = have_series ? via_series : via_formula;
    json doc{{"kind", "value"},
             {"n", std::to_string(n)},
             {"method", method},
             {"value", value.get_str()}};
    if (have_series && have_formula)
        doc["cross_check"] = mismatch ? "mismatch" : "ok";
    if (mismatch)
        doc["rademacher_value"] = via_formula.get_str();
    std::string text = value.get_str() + "\n";
    if (mismatch)
        text += "cross-check mismatch: rademacher gave " + via_formula.get_str() + "\n";
    emit(cfg, doc, text);
    return mismatch ? 1 : 0;
}

int cmd_verify_table(const RunConfig& cfg) {
    struct Row {
        long n;
        const char* printed;
    };
    const Row rows[] = {{22, "110011.99958"},
                        {12, "2020.0026"},
                        {18, "24961.9983"},
                        {87, "1166034258271.996"}};
    const char* tally[] = {"13080870093246.877", "957724.348", "-49.363", "-0.170",
                           "0.203", "0.005", "0.040", "0.001", "0.001", "0.001"};
    json doc{{"kind", "verify-table"}, {"rows", json::array()}, {"tally", json::array()}};
    std::string text;
    bool ok = true;
    for (const Row& row : rows) {
        RademacherBreakdown b = evaluate(row.n, 5, default_digits(row.n));
        double printed = std::strtod(row.printed, nullptr);
        double diff = std::abs(b.partial_sum.mid_double() - printed);
        bool row_ok = diff <= 1e-2;
        ok = ok && row_ok;
        doc["rows"].push_back({{"n", std::to_string(row.n)},
                               {"printed", row.printed},
                               {"computed", ball_str(b.partial_sum, 22)},
                               {"abs_diff", sci(diff)},
                               {"within_tolerance", row_ok}});
        text += "n=" + std::to_string(row.n) + "  printed " + row.printed +
                "  computed " + ball_str(b.partial_sum, 22) + "  |diff| " +
                sci(diff) + (row_ok ? "" : "  EXCEEDS 1e-2") + "\n";
    }
    RademacherBreakdown b100 = evaluate(100, 5, default_digits(100));
    for (int i = 0; i < 10; ++i) {
        const Ball& term = (i % 2 == 0) ? b100.terms_odd[static_cast<size_t>(i / 2)].contribution
                                        : b100.terms_even[static_cast<size_t>(i / 2)].contribution;
        double printed = std::strtod(tally[i], nullptr);
        double diff = std::abs(term.mid_double() - printed);
        bool term_ok = diff <= 1e-2;
        ok = ok && term_ok;
        doc["tally"].push_back({{"printed", tally[i]},
                                {"computed", ball_str(term, 18)},
                                {"abs_diff", sci(diff)},
                                {"within_tolerance", term_ok}});
        text += std::string("tally ") + tally[i] + "  computed " + ball_str(term, 18) +
                "  |diff| " + sci(diff) + (term_ok ? "" : "  EXCEEDS 1e-2") + "\n";
    }
    doc["sum"] = ball_str(b100.partial_sum, 22);
    doc["rounded"] = b100.partial_sum.nearest_integer().get_str();
    doc["all_within_tolerance"] = ok;
    text += "sum " + ball_str(b100.partial_sum, 22) + " rounds to " +
            b100.partial_sum.nearest_integer().get_str() + "\n";
    emit(cfg, doc, text);
    return ok ? 0 : 1;
}

json pair_list(const std::vector<std::pair<long, long>>& pairs) {
    json arr = json::array();
    for (auto [a, b] : pairs) arr.push_back({a, b});
    return arr;
}

int cmd_scan(const RunConfig& cfg, const std::string& kind, long from, long to,
             long d, long max_sum, long nmax, long samples, unsigned long seed) {
    json doc{{"kind", "scan"},
             {"scan", kind},
             {"params", json::object()},
             {"findings", json::array()}};
    std::string text;
    int rc = 0;
    if (kind == "logconcavity") {
        PowerSeries t = table_for(cfg, to + 1);
        auto fails = log_concavity_failures(from, to, t);
        doc["params"] = {{"from", from}, {"to", to}};
        for (long n : fails) doc["findings"].push_back(n);
        doc["verified_range"] = {{"from", from}, {"to", to}};
        text = "log-concavity failures in [" + std::to_string(from) + "," +
               std::to_string(to) + "]: " + std::to_string(fails.size()) + "\n";
        for (long n : fails) text += "  n=" + std::to_string(n) + "\n";
    } else if (kind == "turan") {
        PowerSeries t = table_for(cfg, cfg.horizon + d);
        ThresholdScan scan = turan_threshold(d, cfg.horizon, t);
        doc["params"] = {{"d", d}, {"horizon", cfg.horizon}};
        doc["findings"].push_back({{"last_failure", scan.last_failure},
                                   {"candidate_N", scan.candidate_N}});
        doc["verified_range"] = {{"from", 1}, {"to", scan.verified_to}};
        text = "d=" + std::to_string(d) + ": candidate_N = " +
               std::to_string(scan.candidate_N) + " (last failure " +
               std::to_string(scan.last_failure) + ", verified to " +
               std::to_string(scan.verified_to) + ")\n";
    } else if (kind == "subadd") {
        PowerSeries t = table_for(cfg, max_sum);
        SubadditivityScan scan = subadditivity_scan(max_sum, t);
        doc["params"] = {{"max_sum", max_sum}};
        doc["findings"] = {{"violations", pair_list(scan.violations)},
                           {"equalities", pair_list(scan.equalities)}};
        doc["verified_range"] = {{"max_sum", max_sum}};
        text = "violations:";
        for (auto [a, b] : scan.violations)
            text += " {" + std::to_string(a) + "," + std::to_string(b) + "}";
        text += "\nequalities:";
        for (auto [a, b] : scan.equalities)
            text += " {" + std::to_string(a) + "," + std::to_string(b) + "}";
        text += "\n";
    } else if (kind == "genlogconcavity") {
        PowerSeries t = table_for(cfg, 2 * nmax);
        auto viols = general_log_concavity_scan(nmax, t);
        doc["params"] = {{"n_max", nmax}};
        doc["findings"] = pair_list(viols);
        doc["verified_range"] = {{"n_max", nmax}};
        text = "violations in 1<m<n<=" + std::to_string(nmax) + ": " +
               std::to_string(viols.size()) + "\n";
    } else if (kind == "ratio") {
        long hi_needed = to;
        std::vector<long> ns;
        for (long n = from; n <= to; ++n) ns.push_back(n);
        if (samples > 0) {
            std::mt19937 rng(seed);
            std::uniform_int_distribution<long> pick(2363, 10000);
            for (long i = 0; i < samples; ++i) {
                long n = pick(rng);
                ns.push_back(n);
                hi_needed = std::max(hi_needed, n);
            }
        }
        PowerSeries t = table_for(cfg, hi_needed + 1);
        doc["params"] = {{"from", from}, {"to", to}, {"samples", samples}, {"seed", seed}};
        bool all_yes = true;
        for (long n : ns) {
            RatioBoundReport rep = ratio_bounds(n, t, cfg.precision_digits + 20);
            const char* verdict = rep.holds == Cert::Yes
                                      ? "yes"
                                      : (rep.holds == Cert::No ? "no" : "indeterminate");
            all_yes = all_yes && rep.holds == Cert::Yes;
            doc["findings"].push_back({{"n", n},
                                       {"upsilon1", ball_str(rep.upsilon1, 20)},
                                       {"ratio", ball_str(rep.ratio, 20)},
                                       {"upsilon2", ball_str(rep.upsilon2, 20)},
                                       {"holds", verdict}});
            text += "n=" + std::to_string(n) + " holds=" + verdict + "\n";
        }
        doc["verified_range"] = {{"from", from}, {"to", to}};
        rc = all_yes ? 0 : 1;
    }
    emit(cfg, doc, text);
    return rc;
}

int cmd_transformcheck(const RunConfig& cfg, const std::string& name, long h, long k,
                       const std::string& z_str) {
    TransformTarget target;
    if (name == "f") target = TransformTarget::F;
    else if (name == "f2_odd") target = TransformTarget::F2Odd;
    else if (name == "f2_even") target = TransformTarget::F2Even;
    else if (name == "f4_odd") target = TransformTarget::F4Odd;
    else if (name == "f4_2mod4") target = TransformTarget::F4TwoMod4;
    else if (name == "f4_0mod4") target = TransformTarget::F4ZeroMod4;
    else if (name == "A_odd") target = TransformTarget::AOdd;
    else if (name == "A_2mod4") target = TransformTarget::ATwoMod4;
    else if (name == "A_0mod4") target = TransformTarget::AZeroMod4;
    else {
        std::cerr << "unknown case '" << name << "'\n";
        return 2;
    }
    long prec = digits_to_bits(cfg.precision_digits);
    TransformCase c{target, h, k,
                    BallComplex::from_real(Ball::from_mpq(parse_decimal(z_str), prec)),
                    cfg.precision_digits};
    Ball resid = verify_transformation(c);
    json doc{{"kind", "transformcheck"},
             {"case", name},
             {"h", h},
             {"k", k},
             {"z", z_str},
             {"precision_digits", cfg.precision_digits},
             {"residual_upper", sci(resid.upper_double())},
             {"contains_zero", resid.contains_zero()}};
    emit(cfg, doc,
         "residual <= " + sci(resid.upper_double()) +
             (resid.contains_zero() ? " (contains zero)\n" : " (EXCLUDES zero)\n"));
    return resid.contains_zero() ? 0 : 1;
}

int cmd_bm(const RunConfig& cfg, long m) {
    Ball b = subadditivity_crossover(m, cfg.precision_digits + 20);
    json doc{{"kind", "bm"}, {"m", m}, {"value", ball_str(b, 12)}};
    emit(cfg, doc, "B_" + std::to_string(m) + " = " + ball_str(b, 12) + "\n");
    return 0;
}

const char* cert_str(Cert c) {
    return c == Cert::Yes ? "yes" : (c == Cert::No ? "no" : "indeterminate");
}

int cmd_bounds(const RunConfig& cfg, std::optional<long> bessel_s,
               std::optional<long> lemma41_n, std::optional<long> lemma44_n) {
    json doc{{"kind", "bounds"}};
    std::string text;
    int rc = 0;
    if (bessel_s) {
        BesselBoundsReport rep = check_i2_bounds(mpq_class(*bessel_s), cfg.precision_digits);
        doc["bessel_s"] = *bessel_s;
        json families = json::object();
        if (rep.sandwich_applicable) {
            families["sandwich_lower"] = cert_str(rep.sandwich_lower);
            families["sandwich_upper"] = cert_str(rep.sandwich_upper);
        }
        if (rep.lower30_applicable) families["lower30"] = cert_str(rep.lower30);
        families["envelope_lower"] = cert_str(rep.envelope_lower);
        families["envelope_upper"] = cert_str(rep.envelope_upper);
        doc["families"] = families;
        bool all = rep.all_applicable_hold();
        doc["all_applicable_hold"] = all;
        text += std::string("bessel bounds at s=") + std::to_string(*bessel_s) +
                (all ? ": all applicable hold\n" : ": FAILURE or indeterminate\n");
        rc = all ? rc : 1;
    }
    auto sandwich = [&](long n, const char* label, bool sixth_power) {
        long digits = default_digits(n) + 10;
        PowerSeries t = table_for(cfg, n);
        Ball a = Ball::from_mpz(t.coefficient(n), digits_to_bits(digits));
        Ball m = main_term(n, digits);
        Ball one = Ball::from_long(1, a.precision());
        Ball nb = Ball::from_long(n, a.precision());
        Ball bound = sixth_power ? one / (nb * nb * nb * nb * nb * nb) : one / sqrt(nb);
        Cert lo = certified_le(m * (one - bound), a);
        Cert hi = certified_le(a, m * (one + bound));
        bool holds = lo == Cert::Yes && hi == Cert::Yes;
        doc[label] = {{"n", n}, {"holds", holds}};
        text += std::string(label) + " at n=" + std::to_string(n) +
                (holds ? ": holds\n" : ": FAILS\n");
        if (!holds) rc = 1;
    };
    if (lemma41_n) sandwich(*lemma41_n, "main_term_sandwich_n6", true);
    if (lemma44_n) sandwich(*lemma44_n, "main_term_sandwich_sqrt", false);
    emit(cfg, doc, text);
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cubic overpartition engine"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    if (const char* env = std::getenv("OVERCUBIC_CACHE")) cfg.cache_path = env;
    std::string cache_flag;
    app.add_option("--precision", cfg.precision_digits, "working precision in digits")
        ->check(CLI::Range(15L, 100000L));
    app.add_option("--terms", cfg.terms_per_series, "terms per series");
    app.add_option("--horizon", cfg.horizon, "scan horizon")->check(CLI::PositiveNumber);
    app.add_option("--cache", cache_flag, "coefficient table cache file");
    app.add_option("--format", cfg.output_format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto* value = app.add_subcommand("value", "print a(n)");
    long value_n = 0;
    std::string method = "qseries";
    value->add_option("n", value_n, "index")->required()->check(CLI::NonNegativeNumber);
    value->add_option("--method", method, "qseries | rademacher | both")
        ->check(CLI::IsMember({"qseries", "rademacher", "both"}));

    auto* verify = app.add_subcommand("verify-table", "recompute the printed verification table");

    auto* scan = app.add_subcommand("scan", "inequality scans");
    std::string scan_kind;
    long from = 1, to = 100, d = 3, max_sum = 200, nmax = 500, samples = 0;
    unsigned long seed = 20250810u;
    scan->add_option("scan_kind", scan_kind,
                     "logconcavity | turan | subadd | genlogconcavity | ratio")
        ->required()
        ->check(CLI::IsMember({"logconcavity", "turan", "subadd", "genlogconcavity", "ratio"}));
    scan->add_option("--from", from, "range start");
    scan->add_option("--to", to, "range end");
    scan->add_option("--d", d, "Jensen degree");
    scan->add_option("--max-sum", max_sum, "largest n+m");
    scan->add_option("--nmax", nmax, "largest n");
    scan->add_option("--samples", samples, "extra random sample count (ratio)");
    scan->add_option("--seed", seed, "random seed (ratio)");

    auto* tc = app.add_subcommand("transformcheck", "verify one transformation identity");
    std::string tc_case, tc_z = "1.0";
    long tc_h = 0, tc_k = 1;
    tc->add_option("case", tc_case, "f | f2_odd | f2_even | f4_odd | f4_2mod4 | f4_0mod4 | A_odd | A_2mod4 | A_0mod4")
        ->required();
    tc->add_option("hnum", tc_h, "cusp numerator h")->required();
    tc->add_option("kden", tc_k, "cusp denominator k")->required();
    tc->add_option("z", tc_z, "real z > 0 as a decimal");

    auto* bm = app.add_subcommand("bm", "subadditivity crossover ratio");
    long bm_m = 3;
    bm->add_option("m", bm_m, "3..7")->required()->check(CLI::Range(3L, 7L));

    auto* bounds = app.add_subcommand("bounds", "bound checks");
    std::optional<long> bessel_s, lemma41_n, lemma44_n;
    bounds->add_option("--bessel", bessel_s, "I_2 bound families at s");
    bounds->add_option("--lemma41", lemma41_n, "n^-6 main-term sandwich at n");
    bounds->add_option("--lemma44", lemma44_n, "n^-1/2 main-term sandwich at n");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (!cache_flag.empty()) cfg.cache_path = cache_flag;

    try {
        if (*value) return cmd_value(cfg, value_n, method);
        if (*verify) return cmd_verify_table(cfg);
        if (*scan) return cmd_scan(cfg, scan_kind, from, to, d, max_sum, nmax, samples, seed);
        if (*tc) return cmd_transformcheck(cfg, tc_case, tc_h, tc_k, tc_z);
        if (*bm) return cmd_bm(cfg, bm_m);
        if (*bounds) return cmd_bounds(cfg, bessel_s, lemma41_n, lemma44_n);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
