// Copyright 2026 The csgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include "csgeom/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "csgeom/embed.hpp"
#include "csgeom/report_io.hpp"
#include "csgeom/verify.hpp"

namespace csgeom {
namespace cli {

namespace {

struct CheckInfo {
    std::string name;
    bool needs_model;
    long long default_trials;
    double default_tol;
    std::string what;
};

const std::vector<CheckInfo>& check_registry() {
    static const std::vector<CheckInfo> checks = {
        {"cauchy", true, 1000, 1e-10,
         "overlap equals the normalized inner product of the section images; also checks the "
         "ray-angle identity (angle tolerance 1e-9)"},
        {"diastasis", true, 1000, 1e-9,
         "diastasis identity: D = -2 log cos(theta) on compact models, e^(-D/2) cosh(delta) = 1 "
         "on the disc (with the Lorentz cross-check at twok=1)"},
        {"homogeneity", true, 10000, 1e-6,
         "overlap modulus is a function of the intrinsic distance exactly in rank one "
         "(fixed tolerance 1e-6; 2-plane Grassmannians fail with an equal-distance witness)"},
        {"geodesic", false, 100, 1e-9,
         "ray-distance additivity along the geodesic arc, interior grid t=0.1..0.9"},
        {"anandan", false, 10000, 1e-12,
         "transition probability equals cos^2 of half the ray distance"},
        {"bargmann", false, 10000, 1e-12,
         "chordal/angular equivalence (2 sqrt2 / pi) d_c <= d_b <= d_c"},
        {"injectivity", true, 500, 0.0,
         "separated chart pairs have separated ray images and full-rank differential (exact)"},
    };
    return checks;
}

std::uint64_t env_default_seed(std::ostream& err, bool& ok) {
    ok = true;
    const char* env = std::getenv("CSGEOM_SEED");
    if (env == nullptr || *env == '\0') return 0;
    std::uint64_t v = 0;
    const std::string s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        err << "error: CSGEOM_SEED is not an unsigned integer: '" << s << "'\n";
        ok = false;
        return 0;
    }
    return v;
}

Complex parse_complex(std::string_view s) {
    const std::string original(s);
    auto fail = [&original]() -> Complex {
        throw std::invalid_argument("bad complex literal '" + original + "' (expected a+bi)");
    };
    if (s.empty()) fail();
    auto parse_real = [&](std::string_view t) {
        if (t.empty()) fail();
        double v = 0.0;
        const std::string tmp(t);
        std::size_t used = 0;
        try {
            v = std::stod(tmp, &used);
        } catch (const std::exception&) {
            fail();
        }
        if (used != tmp.size()) fail();
        return v;
    };
    if (s.back() != 'i' && s.back() != 'I') return {parse_real(s), 0.0};
    s.remove_suffix(1);
    // locate the sign separating the real part (skip a leading sign and
    // exponent signs)
    std::size_t split = std::string_view::npos;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E')
            split = i;  // last such sign starts the imaginary part
    }
    std::string_view re_part, im_part;
    if (split == std::string_view::npos) {
        re_part = "";
        im_part = s;
    } else {
        re_part = s.substr(0, split);
        im_part = s.substr(split);
    }
    double im;
    if (im_part.empty() || im_part == "+") im = 1.0;
    else if (im_part == "-") im = -1.0;
    else im = parse_real(im_part);
    const double re = re_part.empty() ? 0.0 : parse_real(re_part);
    return {re, im};
}

ChartPoint parse_point(const Model& model, const std::string& s) {
    std::vector<std::vector<Complex>> rows;
    std::stringstream row_stream(s);
    std::string row;
    while (std::getline(row_stream, row, ';')) {
        std::vector<Complex> entries;
        std::stringstream entry_stream(row);
        std::string entry;
        while (std::getline(entry_stream, entry, ',')) entries.push_back(parse_complex(entry));
        rows.push_back(std::move(entries));
    }
    if (rows.empty()) throw std::invalid_argument("empty point literal");
    const std::size_t cols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) throw std::invalid_argument("ragged point literal '" + s + "'");
    ChartPoint z(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) z(r, c) = rows[r][c];
    validate_point(model, z);
    return z;
}

class OutputSink {
public:
    OutputSink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::invalid_argument("cannot open output path '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

private:
    std::ofstream file_;
    std::ostream& fallback_;
};

void emit_checks(const std::vector<verify::CheckReport>& reports, ReportFormat format,
                 std::ostream& os) {
    if (format == ReportFormat::Json) {
        for (const auto& r : reports) os << to_json(r) << "\n";
    } else {
        os << check_report_csv_header() << "\n";
        for (const auto& r : reports) os << to_csv_row(r) << "\n";
    }
}

ReportFormat parse_format(const std::string& s) {
    if (s == "json") return ReportFormat::Json;
    if (s == "csv") return ReportFormat::Csv;
    throw std::invalid_argument("unknown format '" + s + "' (json|csv)");
}

int run_verify_check(const CheckInfo& info, const std::string& model_spec, int dim,
                     long long trials, std::uint64_t seed, double tol, bool tol_given,
                     double angle_tol, int threads, ReportFormat format, std::ostream& os) {
    std::vector<verify::CheckReport> reports;
    const double use_tol = tol_given ? tol : info.default_tol;
    if (info.needs_model) {
        const Model model = parse_model(model_spec);
        if (info.name == "cauchy") {
            reports.push_back(verify::check_cauchy(model, trials, seed, use_tol, threads));
            reports.push_back(verify::check_cauchy_angle(model, trials, seed, angle_tol, threads));
        } else if (info.name == "diastasis") {
            reports.push_back(verify::check_diastasis(model, trials, seed, use_tol, threads));
        } else if (info.name == "homogeneity") {
            reports.push_back(verify::check_two_point_homogeneity(model, trials, seed, 1e-3, threads));
        } else if (info.name == "injectivity") {
            reports.push_back(verify::check_injectivity(model, trials, seed, threads));
        }
    } else {
        if (info.name == "geodesic") {
            reports.push_back(verify::check_geodesic_additivity(dim, trials, seed, use_tol, threads));
        } else if (info.name == "anandan") {
            reports.push_back(verify::check_anandan_aharonov(dim, trials, seed, use_tol, threads));
        } else if (info.name == "bargmann") {
            reports.push_back(verify::check_bargmann_bounds(dim, trials, seed, use_tol, threads));
        }
    }
    emit_checks(reports, format, os);
    for (const auto& r : reports)
        if (!r.pass) return 1;
    return 0;
}

std::string fmtc(const Complex& z) {
    std::string s = format_double17(z.real());
    s += (z.imag() < 0.0 ? "-" : "+");
    s += format_double17(std::abs(z.imag()));
    s += "i";
    return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"coherent-state geometry toolkit: overlap kernels, section embeddings, "
                 "distance identities and flag-manifold invariants"};
    app.require_subcommand(0, 1);

    bool seed_env_ok = true;
    const std::uint64_t default_seed = env_default_seed(err, seed_env_ok);
    if (!seed_env_ok) return 2;

    // --- verify ---
    auto* verify_cmd = app.add_subcommand("verify", "run a seeded identity check campaign");
    std::string check_name, v_model, v_format = "json", v_out;
    int v_dim = 4, v_threads = 1;
    long long v_trials = -1;
    std::uint64_t v_seed = default_seed;
    double v_tol = 0.0, v_angle_tol = 1e-9;
    bool v_list = false;
    verify_cmd->add_option("check", check_name, "check name (see --list)");
    verify_cmd->add_option("--model", v_model, "model spec: cp:n=<int>,m=<int> | gr:k=<int>,n=<int> | disc:twok=<int>");
    verify_cmd->add_option("--dim", v_dim, "ambient dimension for ray-space checks (default 4)")
        ->check(CLI::Range(2, 1 << 20));
    verify_cmd->add_option("--trials", v_trials, "number of random trials (default: per check)")
        ->check(CLI::Range(1LL, 1000000000LL));
    verify_cmd->add_option("--seed", v_seed, "campaign seed (default 0, or CSGEOM_SEED)");
    verify_cmd->add_option("--tol", v_tol,
                           "tolerance (defaults per check: cauchy 1e-10, diastasis 1e-9, geodesic "
                           "1e-9, anandan 1e-12, bargmann 1e-12; homogeneity fixed 1e-6, "
                           "injectivity exact)");
    verify_cmd->add_option("--tol-angle", v_angle_tol, "tolerance of the cauchy ray-angle identity (default 1e-9)");
    verify_cmd->add_option("--threads", v_threads, "parallel trial evaluation (identical output for any value)")
        ->check(CLI::Range(1, 1024));
    verify_cmd->add_option("--format", v_format, "output format: json | csv (default json)");
    verify_cmd->add_option("--out", v_out, "write the report to a file instead of stdout");
    verify_cmd->add_flag("--list", v_list, "list all checks with what they verify");

    // --- probe ---
    auto* probe_cmd = app.add_subcommand("probe", "inspect kernel/overlap/distances at explicit points");
    std::string p_model, p_z1, p_z2, p_out;
    probe_cmd->add_option("--model", p_model)->required();
    probe_cmd->add_option("--z1", p_z1, "first chart point (entries a+bi, ',' between columns, ';' between rows)")->required();
    probe_cmd->add_option("--z2", p_z2, "second chart point (optional)");
    probe_cmd->add_option("--out", p_out, "write to a file instead of stdout");

    // --- dist ---
    auto* dist_cmd = app.add_subcommand("dist", "distance between two chart points");
    std::string d_model, d_from, d_to, d_kind = "cayley", d_out;
    dist_cmd->add_option("--model", d_model)->required();
    dist_cmd->add_option("--from", d_from)->required();
    dist_cmd->add_option("--to", d_to)->required();
    dist_cmd->add_option("--kind", d_kind, "cayley | study | wick | bargmann | diastasis | pseudo (default cayley)");
    dist_cmd->add_option("--out", d_out, "write to a file instead of stdout");

    // --- seven ---
    auto* seven_cmd = app.add_subcommand("seven", "compute the seven flag-manifold invariants");
    std::string s_model, s_format = "json", s_out;
    std::uint64_t s_seed = default_seed;
    seven_cmd->add_option("--model", s_model)->required();
    seven_cmd->add_option("--seed", s_seed, "seed (default 0, or CSGEOM_SEED)");
    seven_cmd->add_option("--format", s_format, "json | csv");
    seven_cmd->add_option("--out", s_out, "write to a file instead of stdout");

    // --- morse ---
    auto* morse_cmd = app.add_subcommand("morse", "count critical points of the torus energy");
    std::string m_model, m_h, m_out;
    int m_starts = -1;
    std::uint64_t m_seed = default_seed;
    morse_cmd->add_option("--model", m_model)->required();
    morse_cmd->add_option("--hdiag", m_h, "diagonal entries, comma separated, strictly increasing (default 1,2,...)");
    morse_cmd->add_option("--starts", m_starts, "random starts (default 20 * number of torus fixed points)");
    morse_cmd->add_option("--seed", m_seed, "seed (default 0, or CSGEOM_SEED)");
    morse_cmd->add_option("--out", m_out, "write to a file instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream os;
        os << app.help();
        out << os.str();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (verify_cmd->parsed()) {
            if (v_list) {
                for (const CheckInfo& info : check_registry()) {
                    out << info.name << (info.needs_model ? "  (--model)" : "  (--dim)") << "\n    "
                        << info.what << "\n    defaults: trials=" << info.default_trials
                        << " tol=" << format_double17(info.default_tol) << "\n";
                }
                return 0;
            }
            const CheckInfo* info = nullptr;
            for (const CheckInfo& c : check_registry())
                if (c.name == check_name) info = &c;
            if (info == nullptr) {
                err << "usage error: unknown check '" << check_name << "' (try verify --list)\n";
                return 2;
            }
            if (info->needs_model && v_model.empty()) {
                err << "usage error: check '" << info->name << "' requires --model\n";
                return 2;
            }
            const long long trials = v_trials > 0 ? v_trials : info->default_trials;
            OutputSink sink(v_out, out);
            return run_verify_check(*info, v_model, v_dim, trials, v_seed, v_tol,
                                    verify_cmd->count("--tol") > 0, v_angle_tol, v_threads,
                                    parse_format(v_format), sink.stream());
        }

        if (probe_cmd->parsed()) {
            const Model model = parse_model(p_model);
            const ChartPoint z1 = parse_point(model, p_z1);
            OutputSink sink(p_out, out);
            std::ostream& os = sink.stream();
            os << "{\"check\":\"probe\",\"model\":\"" << json_escape(model_name(model)) << "\"";
            os << ",\"z1\":\"" << json_escape(p_z1) << "\"";
            os << ",\"potential1\":" << format_double17(potential(model, z1));
            if (!p_z2.empty()) {
                const ChartPoint z2 = parse_point(model, p_z2);
                const Complex k12 = kernel(model, z1, z2);
                const Complex o = overlap(model, z1, z2);
                os << ",\"z2\":\"" << json_escape(p_z2) << "\""
                   << ",\"potential2\":" << format_double17(potential(model, z2))
                   << ",\"kernel\":\"" << fmtc(k12) << "\""
                   << ",\"overlap\":\"" << fmtc(o) << "\""
                   << ",\"overlap_abs\":" << format_double17(std::abs(o))
                   << ",\"intrinsic_distance\":" << format_double17(intrinsic_distance(model, z1, z2));
                if (is_compact(model)) {
                    os << ",\"polar\":" << (is_polar(model, z1, z2, 1e-9) ? "true" : "false");
                    if (!is_polar(model, z1, z2, 1e-12))
                        os << ",\"diastasis\":" << format_double17(diastasis(model, z1, z2));
                    os << ",\"cayley\":"
                       << format_double17(cayley_distance(iota(model, z1), iota(model, z2)));
                } else {
                    const Disc& d = std::get<Disc>(model);
                    os << ",\"diastasis\":" << format_double17(diastasis(model, z1, z2))
                       << ",\"pseudo_distance\":" << format_double17(pseudo_distance(d, z1, z2));
                }
            }
            os << "}\n";
            return 0;
        }

        if (dist_cmd->parsed()) {
            const Model model = parse_model(d_model);
            const ChartPoint z1 = parse_point(model, d_from);
            const ChartPoint z2 = parse_point(model, d_to);
            double value = 0.0;
            if (d_kind == "diastasis") {
                value = diastasis(model, z1, z2);
            } else if (d_kind == "pseudo") {
                const Disc* d = std::get_if<Disc>(&model);
                if (d == nullptr) throw std::invalid_argument("dist: pseudo requires a disc model");
                value = pseudo_distance(*d, z1, z2);
            } else {
                if (!is_compact(model))
                    throw std::invalid_argument("dist: ray distances need a compact model (use diastasis|pseudo)");
                const EmbeddedVector w1 = iota(model, z1);
                const EmbeddedVector w2 = iota(model, z2);
                if (d_kind == "cayley") value = cayley_distance(w1, w2);
                else if (d_kind == "study") value = study_distance(w1, w2);
                else if (d_kind == "wick") value = wick_distance(w1, w2);
                else if (d_kind == "bargmann") value = bargmann_distance(w1, w2);
                else throw std::invalid_argument("dist: unknown kind '" + d_kind + "'");
            }
            OutputSink sink(d_out, out);
            sink.stream() << format_double17(value) << "\n";
            return 0;
        }

        if (seven_cmd->parsed()) {
            const Model model = parse_model(s_model);
            const FlagSpec flag = flag_spec_for(model);
            const verify::SevenNumbersReport report = verify::seven_numbers(model, flag, s_seed);
            OutputSink sink(s_out, out);
            if (parse_format(s_format) == ReportFormat::Json) {
                sink.stream() << to_json(report) << "\n";
            } else {
                sink.stream() << seven_report_csv_header() << "\n" << to_csv_row(report) << "\n";
            }
            return report.all_equal ? 0 : 1;
        }

        if (morse_cmd->parsed()) {
            const Model model = parse_model(m_model);
            verify::EnergyFunction ef = verify::default_energy(model);
            if (!m_h.empty()) {
                ef.h.clear();
                std::stringstream ss(m_h);
                std::string tok;
                while (std::getline(ss, tok, ',')) ef.h.push_back(std::stod(tok));
                verify::validate_energy(ef);
            }
            const int default_starts = 20 * static_cast<int>(fixed_points(model).size());
            const int starts = m_starts > 0 ? m_starts : default_starts;
            const verify::MorseResult res = verify::morse_count(ef, starts, m_seed);
            OutputSink sink(m_out, out);
            sink.stream() << "{\"check\":\"morse\",\"model\":\"" << json_escape(model_name(model))
                          << "\",\"starts\":" << res.starts << ",\"seed\":" << m_seed
                          << ",\"count\":" << res.count << ",\"discarded\":" << res.discarded
                          << "}\n";
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    out << app.help();
    return 2;
}

int run_main(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace cli
}  // namespace csgeom
