#include "merocoef/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "merocoef/errors.hpp"
#include "merocoef/expansions.hpp"
#include "merocoef/forms.hpp"
#include "merocoef/pole_family.hpp"
#include "merocoef/poincare.hpp"

namespace merocoef {

using ojson = nlohmann::ordered_json;

namespace {

constexpr int kErrDigits = 6;

std::string trim(const std::string& s) {
    std::string out;
    for (char ch : s)
        if (ch != ' ' && ch != '\t') out += ch;
    return out;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string rational_string(const Rational& r) {
    return r.get_den() == 1 ? r.get_num().get_str() : r.get_str();
}

BigReal log10_of(const BigReal& x) {
    BigReal r(x.precision());
    mpfr_log10(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

double default_tolerance(Command c, const std::string& target) {
    switch (c) {
        case Command::Compare: return 1e-15;
        case Command::PoleFamily: return 1e-10;
        case Command::PoincareCheck:
            if (target == "residue_H6") return 1e-10;
            if (target == "decay_H12") return 1e-6;
            return 1e-20;
        default: return 1e-15;
    }
}

struct ErrorSummary {
    BigReal abs_err, rel_err;
};

// rel_err is relative to |oracle|, or absolute when the oracle value is 0.
ErrorSummary compare_values(const BigComplex& formula, const BigComplex& oracle) {
    BigReal abs_err = (formula - oracle).abs();
    BigReal mag = oracle.abs();
    BigReal rel = mag.is_zero() ? abs_err : abs_err / mag;
    return {abs_err, rel};
}

ojson metadata_base(const RunConfig& cfg) {
    ojson m;
    m["target"] = cfg.target ? *cfg.target : "";
    m["n_from"] = cfg.n_from;
    m["n_to"] = cfg.n_to;
    m["cutoff"] = cfg.cutoff;
    m["precision_bits"] = static_cast<long>(cfg.precision_bits);
    m["box_bound"] = cfg.box_bound;
    return m;
}

ojson new_report(const RunConfig& cfg) {
    ojson r;
    r["schema_version"] = kSchemaVersion;
    r["tool"] = "merocoef";
    r["command"] = command_name(cfg.command);
    r["status"] = "ok";
    r["metadata"] = metadata_base(cfg);
    r["records"] = ojson::array();
    r["warnings"] = ojson::array();
    return r;
}

const std::string& require_target(const RunConfig& cfg) {
    if (!cfg.target || cfg.target->empty()) throw InvalidArgument("--target is required for " + command_name(cfg.command));
    return *cfg.target;
}

int finish_with_tolerance(ojson& report, bool all_ok, double tol) {
    report["metadata"]["tolerance"] = format_double(tol);
    if (!all_ok) {
        report["status"] = "tolerance_failure";
        return kExitTolerance;
    }
    return kExitOk;
}

int cmd_oracle(const RunConfig& cfg, ojson& report) {
    Target t = parse_target(require_target(cfg));
    report["metadata"]["target"] = target_name(t);
    LaurentSeries s = oracle_coefficients(t, static_cast<int>(cfg.n_to));
    for (long n = cfg.n_from; n <= cfg.n_to; ++n) {
        ojson rec;
        rec["n"] = n;
        rec["value"] = rational_string(s.coeff(static_cast<int>(n)));
        report["records"].push_back(rec);
    }
    return kExitOk;
}

ojson comparison_record(long n, const BigComplex& oracle, const std::string& oracle_str, const CoefficientValue& cv,
                        Prec prec, BigReal* rel_out) {
    ErrorSummary e = compare_values(cv.value, oracle);
    int digits = decimal_digits_for(prec);
    ojson rec;
    rec["n"] = n;
    rec["oracle"] = oracle_str;
    rec["formula"] = cv.value.re().to_string(digits);
    rec["formula_imag"] = cv.value.im().to_string(kErrDigits);
    rec["abs_err"] = e.abs_err.to_string(kErrDigits);
    rec["rel_err"] = rel_err_string(e.rel_err);
    rec["tail_estimate"] = cv.tail_estimate.to_string(kErrDigits);
    rec["digits_matched"] = digits_matched(e.rel_err, prec);
    rec["precision_bits"] = static_cast<long>(cv.precision_bits);
    if (rel_out) *rel_out = e.rel_err;
    return rec;
}

int cmd_compare(const RunConfig& cfg, ojson& report) {
    Target t = parse_target(require_target(cfg));
    report["metadata"]["target"] = target_name(t);
    double tol = cfg.tolerance.value_or(default_tolerance(cfg.command, ""));
    LaurentSeries oracle = oracle_coefficients(t, static_cast<int>(cfg.n_to));
    SumOptions opts;
    opts.threads = cfg.threads;
    opts.tolerance = tol;
    auto values = formula_coefficients(t, cfg.n_from, cfg.n_to, cfg.cutoff, cfg.precision_bits, opts);
    bool ok = true;
    const BigReal tol_b = BigReal::from_double(tol, 64);
    for (const auto& cv : values) {
        Rational o = oracle.coeff(static_cast<int>(cv.n));
        BigComplex ov(BigReal(o, cv.precision_bits));
        BigReal rel(64);
        report["records"].push_back(comparison_record(cv.n, ov, rational_string(o), cv, cfg.precision_bits, &rel));
        if (!(rel < tol_b)) ok = false;
        for (const auto& w : cv.warnings) report["warnings"].push_back("n=" + std::to_string(cv.n) + ": " + w);
    }
    return finish_with_tolerance(report, ok, tol);
}

int cmd_convergence(const RunConfig& cfg, ojson& report) {
    Target t = parse_target(require_target(cfg));
    report["metadata"]["target"] = target_name(t);
    LaurentSeries oracle = oracle_coefficients(t, static_cast<int>(cfg.n_to));
    std::vector<std::int64_t> ladder;
    for (std::int64_t L = 1; L <= cfg.cutoff; L *= 2) ladder.push_back(L);
    if (ladder.back() != cfg.cutoff) ladder.push_back(cfg.cutoff);
    SumOptions opts;
    opts.threads = cfg.threads;
    for (long n = cfg.n_from; n <= cfg.n_to; ++n) {
        Rational o = oracle.coeff(static_cast<int>(n));
        std::string ostr = rational_string(o);
        std::size_t ndig = o.get_num().get_str().size() - (sgn(o) < 0 ? 1 : 0);
        for (std::int64_t L : ladder) {
            CoefficientValue cv = formula_coefficient(t, n, L, cfg.precision_bits, opts);
            BigComplex ov(BigReal(o, cv.precision_bits));
            ojson rec = comparison_record(n, ov, ostr, cv, cfg.precision_bits, nullptr);
            ojson row;
            row["n"] = n;
            row["cutoff"] = L;
            row["oracle_digits"] = static_cast<long>(ndig);
            for (auto it = rec.begin(); it != rec.end(); ++it)
                if (it.key() != "n") row[it.key()] = it.value();
            report["records"].push_back(row);
        }
    }
    return kExitOk;
}

std::vector<SamplePoint> parse_samples(const std::string& spec, Prec prec) {
    std::vector<SamplePoint> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ';')) {
        item = trim(item);
        if (item.empty()) continue;
        std::vector<std::string> parts;
        std::stringstream is(item);
        std::string p;
        while (std::getline(is, p, ',')) parts.push_back(p);
        if (parts.size() != 4) throw InvalidArgument("sample '" + item + "' needs four rational parts zr,zi,r,i");
        out.push_back({BigComplex::from_rationals(parse_rational(parts[0]), parse_rational(parts[1]), prec),
                       BigComplex::from_rationals(parse_rational(parts[2]), parse_rational(parts[3]), prec)});
    }
    if (out.empty()) throw InvalidArgument("empty sample list");
    return out;
}

int cmd_poincare(const RunConfig& cfg, ojson& report) {
    const std::string& name = require_target(cfg);
    if (!identity_known(name)) throw InvalidArgument("unknown identity '" + name + "'");
    double tol = cfg.tolerance.value_or(default_tolerance(cfg.command, name));
    std::vector<SamplePoint> samples =
        cfg.samples ? parse_samples(*cfg.samples, cfg.precision_bits + 32) : default_sample_points(cfg.precision_bits + 32);
    LatticeSumConfig lc;
    lc.box_bound = cfg.box_bound;
    lc.prec = cfg.precision_bits;
    lc.threads = cfg.threads;
    auto res = identity_residual(name, samples, lc);
    bool ok = true;
    const BigReal tol_b = BigReal::from_double(tol, 64);
    for (std::size_t i = 0; i < res.size(); ++i) {
        ojson rec;
        rec["sample"] = static_cast<long>(i);
        rec["zz"] = samples[i].zz.to_string(20);
        rec["z"] = samples[i].z.to_string(20);
        rec["residual"] = res[i].to_string(kErrDigits);
        rec["pass"] = res[i] < tol_b;
        ok = ok && res[i] < tol_b;
        report["records"].push_back(rec);
    }
    return finish_with_tolerance(report, ok, tol);
}

int cmd_pole_family(const RunConfig& cfg, ojson& report) {
    if (!cfg.tau0 || cfg.tau0->empty()) throw InvalidArgument("--tau0 is required for pole-family");
    double tol = cfg.tolerance.value_or(default_tolerance(cfg.command, ""));
    Prec p = cfg.precision_bits;
    BigComplex tau0 = parse_point(*cfg.tau0, p + 64);
    report["metadata"]["tau0"] = *cfg.tau0;
    auto values = pole_family_coefficients(tau0, cfg.n_from, cfg.n_to, cfg.cutoff, p);
    Prec wp = values.front().precision_bits;
    PoleFamilySetup su = pole_family_setup(tau0, wp - 32);
    auto oracle = pole_family_oracle(tau0, static_cast<int>(cfg.n_to), wp - 32);
    report["metadata"]["tau0_reduced"] = su.reduced.to_string(30);
    report["metadata"]["j_tau0"] = su.j0.to_string(30);
    report["metadata"]["lambda_m2"] = su.lambda_m2.to_string(30);
    report["metadata"]["lambda_m1"] = su.lambda_m1.to_string(30);
    bool ok = true;
    const BigReal tol_b = BigReal::from_double(tol, 64);
    for (const auto& cv : values) {
        const BigComplex& o = oracle[cv.n];
        BigReal rel(64);
        ojson rec = comparison_record(cv.n, o, o.to_string(decimal_digits_for(p)), cv, p, &rel);
        report["records"].push_back(rec);
        if (!(rel < tol_b)) ok = false;
    }
    return finish_with_tolerance(report, ok, tol);
}

}  // namespace

std::string rel_err_string(const BigReal& rel) { return rel.to_string(kErrDigits); }

int digits_matched(const BigReal& rel_err, Prec prec) {
    if (rel_err.is_zero()) return decimal_digits_for(prec);
    BigReal l = log10_of(rel_err);
    BigReal fl(l.precision());
    mpfr_floor(fl.raw(), (-l).raw());
    long v = mpfr_get_si(fl.raw(), MPFR_RNDN);
    return static_cast<int>(std::min<long>(v, decimal_digits_for(prec)));
}

Command parse_command(const std::string& verb) {
    if (verb == "oracle") return Command::Oracle;
    if (verb == "compare") return Command::Compare;
    if (verb == "convergence") return Command::Convergence;
    if (verb == "poincare-check") return Command::PoincareCheck;
    if (verb == "pole-family") return Command::PoleFamily;
    throw InvalidArgument("unknown command '" + verb + "'");
}

std::string command_name(Command c) {
    switch (c) {
        case Command::Oracle: return "oracle";
        case Command::Compare: return "compare";
        case Command::Convergence: return "convergence";
        case Command::PoincareCheck: return "poincare-check";
        case Command::PoleFamily: return "pole-family";
    }
    return "?";
}

OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "text") return OutputFormat::Text;
    throw InvalidArgument("unknown format '" + s + "' (json, csv, text)");
}

mpq_class parse_rational(const std::string& raw) {
    std::string s = trim(raw);
    if (s.empty()) throw InvalidArgument("empty number");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (neg || (!ip.empty() && ip[0] == '+')) ip = ip.substr(1);
        if (ip.empty()) ip = "0";
        for (char ch : ip + fp)
            if (ch < '0' || ch > '9') throw InvalidArgument("not a number: '" + raw + "'");
        mpz_class num(ip + fp, 10), den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
        mpq_class q(num, den);
        q.canonicalize();
        return neg ? mpq_class(-q) : q;
    }
    mpq_class q;
    std::string body = s[0] == '+' ? s.substr(1) : s;
    for (char ch : body)
        if (!((ch >= '0' && ch <= '9') || ch == '/' || ch == '-')) throw InvalidArgument("not a number: '" + raw + "'");
    if (q.set_str(body, 10) != 0) throw InvalidArgument("not a number: '" + raw + "'");
    if (q.get_den() == 0) throw InvalidArgument("zero denominator in '" + raw + "'");
    q.canonicalize();
    return q;
}

BigComplex parse_point(const std::string& raw, Prec prec) {
    std::string s = trim(raw);
    if (s == "rho") return BigComplex(BigReal(mpq_class(1, 2), prec), sqrt(BigReal(3L, prec)) / 2L);
    if (s == "i") return BigComplex::i(prec);
    auto comma = s.find(',');
    if (comma != std::string::npos)
        return BigComplex::from_rationals(parse_rational(s.substr(0, comma)), parse_rational(s.substr(comma + 1)), prec);
    if (s.empty() || s.back() != 'i') throw InvalidArgument("cannot parse point '" + raw + "'");
    s.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    }
    std::string re = split == std::string::npos ? "0" : s.substr(0, split);
    std::string im = split == std::string::npos ? s : s.substr(split);
    if (im.empty() || im == "+") im = "1";
    if (im == "-") im = "-1";
    return BigComplex::from_rationals(parse_rational(re), parse_rational(im), prec);
}

void validate(const RunConfig& cfg) {
    if (cfg.n_from < 0 || cfg.n_to < cfg.n_from) throw InvalidArgument("need 0 <= n-from <= n-to");
    if (cfg.cutoff < 1) throw InvalidArgument("cutoff must be >= 1");
    if (cfg.precision_bits < 32) throw InvalidArgument("precision-bits must be >= 32");
    if (cfg.box_bound < 2) throw InvalidArgument("box-bound must be >= 2");
    if (cfg.tolerance && !(*cfg.tolerance > 0)) throw InvalidArgument("tolerance must be > 0");
    if (cfg.n_to > 1000) throw InvalidArgument("n-to above 1000 is not supported");
}

CommandResult run_command(const RunConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    CommandResult res;
    res.report = new_report(cfg);
    try {
        validate(cfg);
        switch (cfg.command) {
            case Command::Oracle: res.exit_code = cmd_oracle(cfg, res.report); break;
            case Command::Compare: res.exit_code = cmd_compare(cfg, res.report); break;
            case Command::Convergence: res.exit_code = cmd_convergence(cfg, res.report); break;
            case Command::PoincareCheck: res.exit_code = cmd_poincare(cfg, res.report); break;
            case Command::PoleFamily: res.exit_code = cmd_pole_family(cfg, res.report); break;
        }
    } catch (const InvalidArgument& e) {
        res.report["status"] = "error";
        res.report["error"] = {{"kind", "usage"}, {"message", e.what()}};
        res.exit_code = kExitUsage;
    } catch (const DomainError& e) {
        res.report["status"] = "error";
        res.report["error"] = {{"kind", "domain"}, {"message", e.what()}};
        res.exit_code = kExitDomain;
    } catch (const PrecisionError& e) {
        res.report["status"] = "error";
        res.report["error"] = {{"kind", "precision"}, {"message", e.what()}};
        res.exit_code = kExitDomain;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", secs);
    res.report["metadata"]["wall_time_seconds"] = buf;
    return res;
}

std::string render(const ojson& report, OutputFormat fmt) {
    if (fmt == OutputFormat::Json) return report.dump(2) + "\n";
    auto cell = [](const ojson& v) -> std::string {
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    };
    std::ostringstream os;
    const auto& recs = report["records"];
    if (fmt == OutputFormat::Csv) {
        if (recs.empty()) return os.str();
        bool first = true;
        for (auto it = recs[0].begin(); it != recs[0].end(); ++it) {
            os << (first ? "" : ",") << it.key();
            first = false;
        }
        os << "\n";
        for (const auto& r : recs) {
            first = true;
            for (auto it = r.begin(); it != r.end(); ++it) {
                std::string c = cell(it.value());
                if (c.find(',') != std::string::npos || c.find(' ') != std::string::npos) c = "\"" + c + "\"";
                os << (first ? "" : ",") << c;
                first = false;
            }
            os << "\n";
        }
        return os.str();
    }
    os << report["command"].get<std::string>() << ": " << report["status"].get<std::string>() << "\n";
    for (auto it = report["metadata"].begin(); it != report["metadata"].end(); ++it)
        os << "  " << it.key() << " = " << cell(it.value()) << "\n";
    if (report.contains("error")) os << "  error: " << report["error"]["message"].get<std::string>() << "\n";
    for (const auto& r : recs) {
        os << " ";
        for (auto it = r.begin(); it != r.end(); ++it) os << " " << it.key() << "=" << cell(it.value());
        os << "\n";
    }
    for (const auto& w : report["warnings"]) os << "  warning: " << w.get<std::string>() << "\n";
    return os.str();
}

}  // namespace merocoef
