#include "homim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <ostream>
#include <set>

#include "homim/config.hpp"
#include "homim/rng.hpp"
#include "homim/selftest.hpp"
#include "parallel.hpp"

namespace homim {
namespace {

enum class Kind { se_sweep, se_ee, ber_curve, selftest };

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::se_sweep: return "se-sweep";
        case Kind::se_ee: return "se-ee";
        case Kind::ber_curve: return "ber-curve";
        case Kind::selftest: return "selftest";
    }
    return "?";
}

const std::set<std::string>& allowed_keys(Kind k) {
    static const std::set<std::string> sweep = {
        "seed", "scheme", "n", "l", "m1", "m2", "alpha", "kappa"};
    static const std::set<std::string> see = {
        "seed", "scheme", "n", "l", "m1", "m2", "kappa", "alpha",
        "channel", "delay_spread", "data_rate", "target_ber",
        "min_errors", "max_bits", "search_lo", "search_hi"};
    static const std::set<std::string> ber = {
        "seed", "scheme", "n", "l", "m1", "m2", "kappa", "alpha",
        "channel", "delay_spread", "data_rate", "ebn0_db",
        "min_errors", "max_bits"};
    static const std::set<std::string> self = {"seed"};
    switch (k) {
        case Kind::se_sweep: return sweep;
        case Kind::se_ee: return see;
        case Kind::ber_curve: return ber;
        case Kind::selftest: return self;
    }
    return self;
}

struct SectionPlan {
    Kind kind = Kind::selftest;
    std::string label;
    int line = 0;
    std::uint64_t seed = 1;

    std::vector<Scheme> schemes;
    int n = 32;
    int l = 4;
    int m1 = 4;
    int m2 = 4;
    std::string kappa_mode = "auto";  // auto | exhaustive | fixed
    int kappa_value = 0;
    std::vector<int> kappas;  // se-sweep only; empty = full 1..omega
    std::vector<int> alphas{0};

    std::string channel_kind = "los";
    double delay_spread = 10e-9;
    double data_rate = 500e6;

    std::vector<double> ebn0_grid;
    double target_ber = 1e-3;
    StopRule stop;
    double search_lo = 0.0;
    double search_hi = 60.0;
};

std::string section_id(const ConfigSection& s) {
    return "[" + s.kind + (s.label.empty() ? "" : " " + s.label) + "]";
}

Kind parse_kind(const ConfigSection& s) {
    if (s.kind == "se-sweep") return Kind::se_sweep;
    if (s.kind == "se-ee") return Kind::se_ee;
    if (s.kind == "ber-curve") return Kind::ber_curve;
    if (s.kind == "selftest") return Kind::selftest;
    throw ConfigError("unknown scenario '" + s.kind +
                          "' (expected se-sweep, se-ee, ber-curve or selftest)",
                      s.line);
}

/// Base modem config for one scheme of a plan; alpha applies to the hybrid
/// only.  The symbol period follows from the configured data rate.
ModemConfig plan_config(const SectionPlan& plan, Scheme scheme, int alpha) {
    ModemConfig cfg =
        make_modem_config(scheme, plan.n, plan.l, plan.m1, plan.m2,
                          is_filtered(scheme) ? alpha : 0);
    if (has_im_branch(scheme)) {
        if (plan.kappa_mode == "exhaustive")
            cfg.im.kappa = kappa_exhaustive(plan.m1, cfg.im.omega);
        else if (plan.kappa_mode == "fixed")
            cfg.im.kappa = plan.kappa_value;
        validate_modem_config(cfg);
    }
    cfg.symbol_period = scheme_bit_budget(cfg).total() / plan.data_rate;
    return cfg;
}

ChannelSpec plan_channel(const SectionPlan& plan, const ModemConfig& cfg) {
    if (plan.channel_kind == "los") return ChannelSpec::los();
    return ChannelSpec::ceiling_bounce(plan.delay_spread, cfg.sample_period());
}

SectionPlan build_plan(const ConfigSection& s,
                       const std::optional<std::uint64_t>& seed_override) {
    SectionPlan plan;
    plan.kind = parse_kind(s);
    plan.label = s.label;
    plan.line = s.line;

    for (const auto& [key, value] : s.entries)
        if (!allowed_keys(plan.kind).count(key))
            throw ConfigError("unknown key '" + key + "' in " + section_id(s),
                              s.line_of(key));

    plan.seed = s.get_u64("seed", 1);
    if (seed_override) plan.seed = *seed_override;
    if (plan.kind == Kind::selftest) return plan;

    const std::vector<std::string> default_scheme =
        plan.kind == Kind::se_ee ? std::vector<std::string>{"hybrid-aco"}
                                 : std::vector<std::string>{};
    std::vector<std::string> scheme_names = default_scheme;
    if (s.has("scheme")) scheme_names = s.get_string_list("scheme");
    if (scheme_names.empty()) {
        if (plan.kind == Kind::se_sweep)
            for (Scheme sc : all_schemes()) scheme_names.push_back(scheme_name(sc));
        else
            throw ConfigError("key 'scheme' is required in " + section_id(s), s.line);
    }
    for (const std::string& name : scheme_names) {
        try {
            plan.schemes.push_back(scheme_from_name(name));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what(), s.line_of("scheme"));
        }
    }
    if (plan.kind == Kind::se_ee &&
        (plan.schemes.size() != 1 || plan.schemes[0] != Scheme::hybrid_aco))
        throw ConfigError("se-ee supports scheme hybrid-aco only", s.line_of("scheme"));

    plan.n = static_cast<int>(s.get_int("n", 32));
    plan.l = static_cast<int>(s.get_int("l", 4));
    plan.m1 = static_cast<int>(s.get_int("m1", 4));
    plan.m2 = static_cast<int>(s.get_int("m2", 4));

    if (s.has("kappa")) {
        const std::string v = *s.find("kappa");
        if (plan.kind == Kind::se_sweep) {
            plan.kappas = s.get_int_list("kappa");
        } else if (v == "auto" || v == "exhaustive") {
            plan.kappa_mode = v;
        } else {
            plan.kappa_mode = "fixed";
            plan.kappa_value = static_cast<int>(s.require_int("kappa"));
        }
    }

    if (s.has("alpha"))
        plan.alphas = s.get_int_list("alpha");
    else if (plan.kind == Kind::se_ee) {
        plan.alphas.clear();
        for (int a = 0; a <= plan.n / 2; a += std::max(plan.n / 8, 1))
            plan.alphas.push_back(a);
    }

    plan.channel_kind = s.get_string("channel", "los");
    if (plan.channel_kind != "los" && plan.channel_kind != "ceiling-bounce")
        throw ConfigError("key 'channel' expects los or ceiling-bounce",
                          s.line_of("channel"));
    plan.delay_spread = s.get_double("delay_spread", 10e-9);
    plan.data_rate = s.get_double("data_rate", 500e6);
    if (plan.data_rate <= 0.0)
        throw ConfigError("key 'data_rate' must be positive", s.line_of("data_rate"));
    if (plan.channel_kind == "ceiling-bounce" && plan.delay_spread <= 0.0)
        throw ConfigError("key 'delay_spread' must be positive",
                          s.line_of("delay_spread"));

    plan.target_ber = s.get_double("target_ber", 1e-3);
    if (!(plan.target_ber > 0.0 && plan.target_ber < 0.5))
        throw ConfigError("key 'target_ber' must be in (0, 0.5)",
                          s.line_of("target_ber"));
    plan.stop.min_errors = s.get_int("min_errors", plan.stop.min_errors);
    plan.stop.max_bits = s.get_int("max_bits", plan.stop.max_bits);
    if (plan.stop.min_errors < 1 || plan.stop.max_bits < 1)
        throw ConfigError("stop criteria must be positive", s.line);
    plan.search_lo = s.get_double("search_lo", 0.0);
    plan.search_hi = s.get_double("search_hi", 60.0);

    if (plan.kind == Kind::ber_curve) {
        plan.ebn0_grid = s.get_double_list("ebn0_db");
        if (plan.ebn0_grid.empty())
            throw ConfigError("key 'ebn0_db' must list at least one value",
                              s.line_of("ebn0_db"));
    }

    // Construct every config the plan will run so that all parameter
    // violations surface as line-anchored diagnostics, not runtime faults.
    try {
        for (Scheme scheme : plan.schemes) {
            for (int alpha : plan.alphas) {
                const ModemConfig cfg = plan_config(plan, scheme, alpha);
                if (plan.kind == Kind::se_sweep) {
                    for (int kappa : plan.kappas) {
                        if (has_im_branch(scheme) &&
                            (kappa < 1 || kappa > cfg.im.omega))
                            throw std::invalid_argument(
                                "kappa " + std::to_string(kappa) +
                                " outside [1, " + std::to_string(cfg.im.omega) +
                                "] for scheme " + scheme_name(scheme));
                    }
                }
            }
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string(e.what()) + " in " + section_id(s), s.line);
    }
    return plan;
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

void exec_se_sweep(const SectionPlan& plan, std::vector<SweepRecord>& out) {
    for (Scheme scheme : plan.schemes) {
        const ModemConfig base = plan_config(plan, scheme, plan.alphas.front());
        std::vector<int> kappas = plan.kappas;
        if (has_im_branch(scheme) && kappas.empty())
            for (int k = 1; k <= base.im.omega; ++k) kappas.push_back(k);
        std::vector<SweepRecord> records =
            se_sweep(base, kappas, plan.alphas, plan.seed);
        out.insert(out.end(), records.begin(), records.end());
    }
}

void exec_se_ee(const SectionPlan& plan, int jobs, std::ostream& log,
                std::mutex& log_mutex, std::vector<SweepRecord>& out) {
    const ModemConfig base = plan_config(plan, Scheme::hybrid_aco, plan.alphas.front());
    const ChannelSpec channel = plan_channel(plan, base);
    std::vector<SweepRecord> records =
        se_ee_tradeoff(base, plan.alphas, channel, plan.target_ber, plan.seed,
                       jobs, plan.stop, plan.search_lo, plan.search_hi);
    {
        std::lock_guard<std::mutex> lock(log_mutex);
        for (const SweepRecord& rec : records) {
            log << "[se-ee] alpha=" << rec.alpha << " se=" << fmt_double(rec.se)
                << " required_ebn0_db=" << fmt_double(rec.ebn0_db);
            if (std::isnan(rec.ebn0_db)) log << " (target unreachable)";
            log << "\n";
        }
    }
    out.insert(out.end(), records.begin(), records.end());
}

void exec_ber_curve(const SectionPlan& plan, int jobs, std::ostream& log,
                    std::mutex& log_mutex, std::vector<SweepRecord>& out) {
    std::vector<ModemConfig> cfgs;
    std::vector<ChannelSpec> channels;
    for (Scheme scheme : plan.schemes) {
        cfgs.push_back(plan_config(plan, scheme, plan.alphas.front()));
        channels.push_back(plan_channel(plan, cfgs.back()));
    }
    const int points = static_cast<int>(plan.ebn0_grid.size());
    const int tasks = static_cast<int>(cfgs.size()) * points;
    std::vector<SweepRecord> records(tasks);
    detail::parallel_for(tasks, jobs, [&](int i) {
        const int ci = i / points;
        const int gi = i % points;
        const ModemConfig& cfg = cfgs[ci];
        const BerResult res = ber_monte_carlo(
            cfg, channels[ci], plan.ebn0_grid[gi], plan.stop,
            derive_seed(plan.seed, static_cast<std::uint64_t>(ci),
                        static_cast<std::uint64_t>(gi)));
        SweepRecord rec;
        rec.scenario = "ber-curve";
        rec.scheme = scheme_name(cfg.scheme);
        rec.n = cfg.n;
        rec.l = cfg.l;
        rec.m1 = cfg.im.m1;
        rec.m2 = cfg.im.m2;
        rec.kappa = has_im_branch(cfg.scheme) ? cfg.im.kappa : 0;
        rec.alpha = cfg.filter_alpha;
        rec.channel = channels[ci].name;
        rec.ebn0_db = res.ebn0_db;
        rec.ber = res.ber;
        rec.se = spectral_efficiency(cfg);
        rec.seed = plan.seed;
        records[i] = std::move(rec);
        std::lock_guard<std::mutex> lock(log_mutex);
        log << "[ber-curve] " << scheme_name(cfg.scheme) << " "
            << fmt_double(res.ebn0_db) << " dB: ber=" << fmt_double(res.ber)
            << " (" << res.bit_errors << "/" << res.bits_sent << " bits)\n";
    });
    out.insert(out.end(), records.begin(), records.end());
}

const char* kPlotSeSweep = R"PY(#!/usr/bin/env python3
"""Spectral efficiency vs active subcarriers, one curve per scheme/alpha."""
import csv
import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

here = os.path.dirname(os.path.abspath(__file__))
groups = {}
with open(os.path.join(here, "results.csv")) as f:
    for row in csv.DictReader(f):
        if row["scenario"] != "se-sweep":
            continue
        key = (row["scheme"], row["alpha"], row["M1"], row["M2"])
        groups.setdefault(key, []).append(
            (int(row["kappa"]), float(row["se_bits_per_s_per_hz"])))

plt.figure(figsize=(7, 5))
for (scheme, alpha, m1, m2), pts in sorted(groups.items()):
    pts.sort()
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    label = scheme
    if scheme == "hybrid-aco":
        label = "%s (alpha=%s)" % (scheme, alpha)
    if m1 != "4" or m2 != "4":
        label += " M1=%s M2=%s" % (m1, m2)
    if len(xs) > 1 and xs[0] != xs[-1]:
        plt.plot(xs, ys, marker="o", label=label)
    else:
        plt.axhline(ys[0], linestyle="--", label=label)
plt.xlabel("active subcarriers kappa")
plt.ylabel("spectral efficiency [bits/s/Hz]")
plt.grid(True, alpha=0.4)
plt.legend(fontsize=8)
out = os.path.join(here, "se_sweep.png")
plt.savefig(out, dpi=150, bbox_inches="tight")
print("wrote %s" % out)
)PY";

const char* kPlotSeEe = R"PY(#!/usr/bin/env python3
"""Spectral efficiency against required Eb/N0, annotated by filter alpha."""
import csv
import math
import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

here = os.path.dirname(os.path.abspath(__file__))
pts = []
with open(os.path.join(here, "results.csv")) as f:
    for row in csv.DictReader(f):
        if row["scenario"] != "se-ee":
            continue
        ebn0 = float(row["ebn0_db"])
        if math.isnan(ebn0):
            continue
        pts.append((int(row["alpha"]), ebn0, float(row["se_bits_per_s_per_hz"])))

pts.sort()
plt.figure(figsize=(7, 5))
plt.plot([p[1] for p in pts], [p[2] for p in pts], marker="o")
for alpha, ebn0, se in pts:
    plt.annotate("alpha=%d" % alpha, (ebn0, se), textcoords="offset points",
                 xytext=(6, 4), fontsize=8)
plt.xlabel("required Eb/N0 at target BER [dB]")
plt.ylabel("spectral efficiency [bits/s/Hz]")
plt.grid(True, alpha=0.4)
out = os.path.join(here, "se_ee.png")
plt.savefig(out, dpi=150, bbox_inches="tight")
print("wrote %s" % out)
)PY";

const char* kPlotBerCurve = R"PY(#!/usr/bin/env python3
"""BER vs Eb/N0 on a log axis, one curve per scheme/channel."""
import csv
import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

here = os.path.dirname(os.path.abspath(__file__))
groups = {}
with open(os.path.join(here, "results.csv")) as f:
    for row in csv.DictReader(f):
        if row["scenario"] != "ber-curve":
            continue
        key = (row["scheme"], row["channel"], row["M1"], row["kappa"])
        groups.setdefault(key, []).append(
            (float(row["ebn0_db"]), float(row["ber"])))

plt.figure(figsize=(7, 5))
for (scheme, channel, m1, kappa), pts in sorted(groups.items()):
    pts.sort()
    xs = [p[0] for p in pts if p[1] > 0]
    ys = [p[1] for p in pts if p[1] > 0]
    if not xs:
        continue
    plt.semilogy(xs, ys, marker="o",
                 label="%s M1=%s (%s)" % (scheme, m1, channel))
plt.xlabel("Eb/N0 [dB]")
plt.ylabel("BER")
plt.grid(True, which="both", alpha=0.4)
plt.legend(fontsize=8)
out = os.path.join(here, "ber_curve.png")
plt.savefig(out, dpi=150, bbox_inches="tight")
print("wrote %s" % out)
)PY";

void write_plot_scripts(const std::set<Kind>& kinds, const std::string& out_dir,
                        std::ostream& log) {
    const std::vector<std::pair<Kind, std::pair<const char*, const char*>>> table = {
        {Kind::se_sweep, {"plot_se_sweep.py", kPlotSeSweep}},
        {Kind::se_ee, {"plot_se_ee.py", kPlotSeEe}},
        {Kind::ber_curve, {"plot_ber_curve.py", kPlotBerCurve}},
    };
    for (const auto& [kind, script] : table) {
        if (!kinds.count(kind)) continue;
        const std::filesystem::path path =
            std::filesystem::path(out_dir) / script.first;
        std::ofstream out(path);
        out << script.second;
        log << "wrote " << path.string() << "\n";
    }
}

void print_summary(const std::vector<SweepRecord>& records, std::ostream& log) {
    log << "\n";
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-9s %-11s %4s %2s %4s %3s %2s %2s %-15s %9s %11s %8s\n",
                  "scenario", "scheme", "N", "L", "M1", "M2", "k", "a", "channel",
                  "ebn0[dB]", "ber", "se");
    log << buf;
    for (const SweepRecord& r : records) {
        std::snprintf(buf, sizeof buf,
                      "%-9s %-11s %4d %2d %4d %3d %2d %2d %-15s %9s %11s %8s\n",
                      r.scenario.c_str(), r.scheme.c_str(), r.n, r.l, r.m1, r.m2,
                      r.kappa, r.alpha, r.channel.c_str(),
                      fmt_double(r.ebn0_db).c_str(), fmt_double(r.ber).c_str(),
                      fmt_double(r.se).c_str());
        log << buf;
    }
}

}  // namespace

std::string csv_header() {
    return "scenario,scheme,N,L,M1,M2,kappa,alpha,channel,ebn0_db,ber,"
           "se_bits_per_s_per_hz,seed";
}

std::string csv_line(const SweepRecord& rec) {
    std::string out;
    out += rec.scenario + "," + rec.scheme + ",";
    out += std::to_string(rec.n) + "," + std::to_string(rec.l) + ",";
    out += std::to_string(rec.m1) + "," + std::to_string(rec.m2) + ",";
    out += std::to_string(rec.kappa) + "," + std::to_string(rec.alpha) + ",";
    out += rec.channel + ",";
    out += fmt_double(rec.ebn0_db) + "," + fmt_double(rec.ber) + "," +
           fmt_double(rec.se) + ",";
    out += std::to_string(rec.seed);
    return out;
}

std::vector<std::string> validate_config_file(const std::string& path) {
    std::vector<std::string> diags;
    ConfigFile file;
    try {
        file = ConfigFile::parse_file(path);
    } catch (const ConfigError& e) {
        diags.push_back(e.what());
        return diags;
    }
    if (file.sections.empty()) {
        diags.push_back("no scenario sections found");
        return diags;
    }
    for (const ConfigSection& section : file.sections) {
        try {
            build_plan(section, std::nullopt);
        } catch (const ConfigError& e) {
            diags.push_back(e.what());
        }
    }
    return diags;
}

int run_scenarios(const ScenarioOptions& opts, std::ostream& log) {
    ConfigFile file;
    try {
        file = ConfigFile::parse_file(opts.config_path);
    } catch (const ConfigError& e) {
        log << "config error: " << e.what() << "\n";
        return 2;
    }

    std::vector<SectionPlan> plans;
    std::vector<std::string> diags;
    for (const ConfigSection& section : file.sections) {
        try {
            plans.push_back(build_plan(section, opts.seed_override));
        } catch (const ConfigError& e) {
            diags.push_back(e.what());
        }
    }
    if (!diags.empty()) {
        for (const std::string& d : diags) log << "config error: " << d << "\n";
        return 2;
    }
    if (!opts.only_scenario.empty()) {
        std::erase_if(plans, [&](const SectionPlan& p) {
            return kind_name(p.kind) != opts.only_scenario;
        });
        if (plans.empty()) {
            log << "config error: no section of scenario '" << opts.only_scenario
                << "' in " << opts.config_path << "\n";
            return 2;
        }
    }
    if (plans.empty()) {
        log << "config error: no scenario sections in " << opts.config_path << "\n";
        return 2;
    }

    std::vector<SweepRecord> records;
    std::set<Kind> kinds;
    std::mutex log_mutex;
    bool selftest_failed = false;
    try {
        for (const SectionPlan& plan : plans) {
            log << "running [" << kind_name(plan.kind)
                << (plan.label.empty() ? "" : " " + plan.label) << "]\n";
            switch (plan.kind) {
                case Kind::se_sweep:
                    exec_se_sweep(plan, records);
                    kinds.insert(plan.kind);
                    break;
                case Kind::se_ee:
                    exec_se_ee(plan, opts.jobs, log, log_mutex, records);
                    kinds.insert(plan.kind);
                    break;
                case Kind::ber_curve:
                    exec_ber_curve(plan, opts.jobs, log, log_mutex, records);
                    kinds.insert(plan.kind);
                    break;
                case Kind::selftest: {
                    const SelftestReport report = run_selftest();
                    print_report(report, log);
                    if (!report.all_pass()) selftest_failed = true;
                    break;
                }
            }
        }
    } catch (const std::exception& e) {
        log << "runtime error: " << e.what() << "\n";
        return 3;
    }

    if (!records.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(opts.out_dir, ec);
        if (ec) {
            log << "runtime error: cannot create output directory '" << opts.out_dir
                << "': " << ec.message() << "\n";
            return 3;
        }
        const std::filesystem::path csv_path =
            std::filesystem::path(opts.out_dir) / "results.csv";
        std::ofstream csv(csv_path);
        if (!csv) {
            log << "runtime error: cannot write " << csv_path.string() << "\n";
            return 3;
        }
        csv << csv_header() << "\n";
        for (const SweepRecord& rec : records) csv << csv_line(rec) << "\n";
        csv.close();
        print_summary(records, log);
        log << "\nwrote " << csv_path.string() << "\n";
        write_plot_scripts(kinds, opts.out_dir, log);
    }
    return selftest_failed ? 3 : 0;
}

}  // namespace homim
