// Command-line surface: kernel/curvature evaluation, figure sweeps, the
// asymptotic-table and limit verifications, chain validation with the
// localization report, and the three-route curvature crosscheck.
//
// Exit codes: 0 success, 1 usage error, 2 numerical failure, 3 verification
// failure (a check ran and the property failed).

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "bergman/asymptotics.hpp"
#include "bergman/chain.hpp"
#include "bergman/csv.hpp"
#include "bergman/curvature.hpp"
#include "bergman/extremal.hpp"
#include "bergman/lens.hpp"
#include "bergman/sweep.hpp"

namespace {

using bergman::csv_double;

struct GlobalOpts {
    int precision_digits = 16;
    double tolerance = 0;   // 0 = precision default
    int max_terms = 200000;
    std::string format = "text";
    std::string output;
};

std::ostream* open_output(const GlobalOpts& g, std::ofstream& file) {
    if (g.output.empty()) return &std::cout;
    file.open(g.output, std::ios::binary); // binary: keep LF endings everywhere
    if (!file) throw std::runtime_error("cannot open output file: " + g.output);
    return &file;
}

template <class R>
bergman::TruncationPolicy<R> policy_for(const GlobalOpts& g) {
    R tol = g.tolerance > 0 ? R(g.tolerance) : R(100) * bergman::real_eps<R>();
    return bergman::TruncationPolicy<R>(tol, g.max_terms);
}

template <class R>
std::string num(const R& v) {
    if constexpr (std::is_same_v<R, double>) return csv_double(v);
    else return v.str(std::numeric_limits<R>::max_digits10);
}

// ---- kernel ----

template <class R>
void print_kernel(const GlobalOpts& g, double r, double zre, double zim, std::ostream& os) {
    bergman::Annulus<R> a{R(r)};
    bergman::EvalPoint<R> pt{bergman::Cx<R>(R(zre), R(zim))};
    bergman::KernelJet<R> J = bergman::kernel_jet(a, pt, policy_for<R>(g));
    static const char* names[3][3] = {{"K", "K_zbar", "K_zbar2"},
                                      {"K_z", "K_z_zbar", "K_z_zbar2"},
                                      {"K_z2", "K_z2_zbar", "K_z2_zbar2"}};
    if (g.format == "csv") {
        os << "entry,dz,dzbar,re,im\n";
        for (int az = 0; az < 3; ++az)
            for (int bz = 0; bz < 3; ++bz)
                os << names[az][bz] << ',' << az << ',' << bz << ','
                   << num(J.entry(az, bz).re) << ',' << num(J.entry(az, bz).im) << '\n';
        return;
    }
    os << "kernel jet at r=" << r << " z=(" << zre << "," << zim << ")\n";
    for (int az = 0; az < 3; ++az)
        for (int bz = 0; bz < 3; ++bz)
            os << "  " << names[az][bz] << " = " << num(J.entry(az, bz).re) << " + "
               << num(J.entry(az, bz).im) << "i\n";
    os << "  terms used: " << J.terms_used << ", tail bound " << num(J.tail_bound)
       << ", condition " << num(J.condition) << '\n';
}

// ---- curvature ----

template <class R>
void print_curvature(const GlobalOpts& g, double r, double zre, double zim, std::ostream& os) {
    bergman::Annulus<R> a{R(r)};
    bergman::EvalPoint<R> pt{bergman::Cx<R>(R(zre), R(zim))};
    bergman::CurvatureBreakdown<R> b = bergman::curvature_breakdown(a, pt, policy_for<R>(g));
    if (g.format == "csv") {
        os << "field,value\n";
        os << "g," << num(b.g) << '\n';
        os << "S," << num(b.S) << '\n';
        for (int j = 0; j < 24; ++j) os << "A" << j + 1 << ',' << num(b.a_terms[j]) << '\n';
        os << "R," << num(b.curvature) << '\n';
        os << "R_direct," << num(b.curvature_direct) << '\n';
        os << "discrepancy," << num(b.discrepancy) << '\n';
        return;
    }
    os << "curvature at r=" << r << " z=(" << zre << "," << zim << ")\n";
    os << "  g = " << num(b.g) << "\n  S = " << num(b.S) << '\n';
    for (int j = 0; j < 24; ++j) os << "  A" << j + 1 << " = " << num(b.a_terms[j]) << '\n';
    os << "  R (term sum)  = " << num(b.curvature) << '\n';
    os << "  R (direct)    = " << num(b.curvature_direct) << '\n';
    os << "  discrepancy   = " << num(b.discrepancy) << '\n';
}

// ---- asymptotics ----

std::string basis_label(const bergman::BasisTerm& t) {
    std::ostringstream s;
    if (t.p_num != 0) {
        s << "r^-";
        if (t.p_num % t.p_den == 0) s << t.p_num / t.p_den;
        else s << t.p_num << "/" << t.p_den;
    }
    if (t.log_pow != 0) {
        if (t.p_num != 0) s << "*";
        s << "log(r^2)^-" << t.log_pow;
    }
    if (t.p_num == 0 && t.log_pow == 0) s << "1";
    return s.str();
}

int cmd_asymptotics(const std::string& which, std::ostream& os) {
    bergman::AsymptoticCase c = which == "sqrt" ? bergman::AsymptoticCase::Sqrt
                                                : bergman::AsymptoticCase::R310;
    std::vector<bergman::CoefficientRow> rows = bergman::verify_aj_tables(c);
    bool all_ok = true;
    os << "case,term,basis_term,extracted,reference,rel_error,stability,pass\n";
    for (const bergman::CoefficientRow& row : rows) {
        bergman::TermBasis basis = bergman::table_basis(c, row.short_row);
        bool row_ok = row.max_rel_error < 0.01 && row.max_zero_leak < 1e-3;
        all_ok = all_ok && row_ok;
        for (size_t i = 0; i < row.reference.size(); ++i) {
            double ref = row.reference[i], ext = row.extracted[i];
            double rel = ref != 0 ? std::abs(ext - ref) / std::abs(ref) : std::abs(ext);
            os << which << ',' << (row.term_index == 0 ? std::string("sum")
                                                       : "A" + std::to_string(row.term_index))
               << ',' << basis_label(basis[i]) << ',' << csv_double(ext) << ','
               << csv_double(ref) << ',' << csv_double(rel) << ','
               << csv_double(row.stability[i]) << ',' << (row_ok ? "yes" : "NO") << '\n';
        }
    }
    return all_ok ? 0 : 3;
}

// ---- theorem01 ----

int cmd_theorem01(const GlobalOpts& g, int part, std::ostream& os) {
    if (part == 1) {
        std::vector<double> rs = {1e-3, 1e-4, 1e-5, 1e-6, 1e-7};
        auto rows = bergman::verify_sqrt_divergence(rs, std::max(g.precision_digits, 60));
        os << "r,R,normalized\n";
        bool ok = true;
        for (size_t i = 0; i < rows.size(); ++i) {
            os << csv_double(rows[i].r) << ',' << csv_double(rows[i].curvature) << ','
               << csv_double(rows[i].normalized) << '\n';
            ok = ok && rows[i].curvature < 0;
            if (i > 0) ok = ok && rows[i].curvature < rows[i - 1].curvature
                          && std::abs(rows[i].normalized - 1) < std::abs(rows[i - 1].normalized - 1);
        }
        return ok ? 0 : 3;
    }
    std::vector<double> rs = {1e-2, 1e-4, 1e-6, 1e-8, 1e-10, 1e-12};
    auto rows = bergman::verify_r310_limit(rs, std::max(g.precision_digits, 80));
    os << "r,R_r310,R_r710\n";
    bool ok = true;
    for (size_t i = 0; i < rows.size(); ++i) {
        os << csv_double(rows[i].r) << ',' << csv_double(rows[i].curvature_outer) << ','
           << csv_double(rows[i].curvature_inner) << '\n';
        ok = ok && rows[i].curvature_outer < 2 && rows[i].curvature_inner < 2
           && std::abs(rows[i].curvature_outer - rows[i].curvature_inner) < 1e-9;
        if (i > 0) ok = ok && rows[i].curvature_outer > rows[i - 1].curvature_outer;
    }
    return ok ? 0 : 3;
}

// ---- chain ----

bergman::ChainSpec load_chain_spec(const std::string& path) {
    using nlohmann::json;
    bergman::ChainSpec spec;
    if (path.empty()) return bergman::ChainSpec::default_spec();
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("chain spec file not found: " + path);
    json j;
    in >> j;
    if (j.contains("length")) spec.length = j["length"].get<int>();
    if (j.contains("rule")) {
        bergman::ChainRule rule;
        const json& r = j["rule"];
        if (r.contains("outer_first")) rule.outer_first = r["outer_first"].get<double>();
        if (r.contains("outer_ratio")) rule.outer_ratio = r["outer_ratio"].get<double>();
        if (r.contains("ratio_first")) rule.ratio_first = r["ratio_first"].get<double>();
        if (r.contains("ratio_ratio")) rule.ratio_ratio = r["ratio_ratio"].get<double>();
        if (r.contains("safety")) rule.safety = r["safety"].get<double>();
        spec.rule = rule;
    } else {
        spec.outer = j.value("outer", std::vector<double>{});
        spec.inner = j.value("inner", std::vector<double>{});
        spec.overlap = j.value("overlap", std::vector<double>{});
    }
    return spec;
}

int cmd_chain(const std::string& spec_path, double level, std::ostream& os) {
    bergman::ChainSpec spec;
    try {
        spec = load_chain_spec(spec_path);
    } catch (const nlohmann::json::exception& e) {
        throw CLI::ValidationError(std::string("chain spec parse error: ") + e.what());
    }

    bergman::ChainGeometry chain;
    try {
        chain = bergman::build_chain(spec);
    } catch (const bergman::ChainSpecError& e) {
        os << "chain rejected: condition (" << e.condition << ") at index " << e.index << ": "
           << e.what() << '\n';
        return 3;
    }

    os << "chain accepted: " << chain.length() << " annuli\n";
    for (int j = 0; j < chain.length(); ++j)
        os << "  annulus " << j + 1 << ": center " << csv_double(chain.centers[j]) << " radii ["
           << csv_double(chain.inner_radius[j]) << ", " << csv_double(chain.outer_radius[j])
           << "]\n";
    if (chain.accumulation_point)
        os << "  accumulation point zeta = " << csv_double(*chain.accumulation_point) << '\n';

    bool all_ok = true;
    for (int o = 0; o < int(chain.overlaps.size()); ++o) {
        for (int side = 0; side < 2; ++side) {
            int j = o + side; // probe annulus left (o) or right (o+1) of the overlap
            bergman::SpecialPoints sp = bergman::special_points(chain, j);
            for (std::complex<double> z0 : {sp.sqrt_point, sp.r310_point}) {
                bergman::LocalizationReport rep = bergman::check_localization(chain, j, o, z0, level);
                all_ok = all_ok && rep.all_pass();
                os << "  overlap " << o + 1 << " probe annulus " << j + 1 << " z0=("
                   << csv_double(z0.real()) << "," << csv_double(z0.imag()) << "): "
                   << "analytic " << (rep.analytic_pass ? "pass" : "FAIL") << ", angles "
                   << (rep.angles_pass ? "pass" : "FAIL") << ", containment "
                   << (rep.containment_pass ? "pass" : "FAIL") << " (" << rep.samples
                   << " samples, " << rep.escapes << " escapes, " << rep.off_domain
                   << " off-domain), constant " << (rep.constant_pass ? "pass" : "FAIL") << " ("
                   << csv_double(rep.arccos_constant) << " pi)\n";
            }
        }
    }
    return all_ok ? 0 : 3;
}

// ---- crosscheck ----

int cmd_crosscheck(std::ostream& os) {
    os << "r,z,R_terms,R_direct,R_extremal,max_pairwise\n";
    double worst = 0;
    for (double r : {0.05, 0.1, 0.3}) {
        bergman::Annulus<double> a(r);
        for (int i = 1; i <= 10; ++i) {
            double z = r + (1 - r) * i / 11.0;
            bergman::CurvatureBreakdown<double> b =
                bergman::curvature_breakdown(a, bergman::EvalPoint<double>(z));
            double rext = bergman::curvature_extremal(a, z);
            double d = std::max({std::abs(b.curvature - b.curvature_direct),
                                 std::abs(b.curvature - rext),
                                 std::abs(b.curvature_direct - rext)});
            worst = std::max(worst, d);
            os << csv_double(r) << ',' << csv_double(z) << ',' << csv_double(b.curvature) << ','
               << csv_double(b.curvature_direct) << ',' << csv_double(rext) << ','
               << csv_double(d) << '\n';
        }
    }
    os << "# max pairwise discrepancy: " << csv_double(worst) << '\n';
    return worst < 1e-6 ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bergman kernel, metric and curvature of circular annuli"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    GlobalOpts g;
    app.add_option("--precision-digits", g.precision_digits,
                   "working decimal digits (16 default; 50+ engages extended modes 60/80/120)");
    app.add_option("--tolerance", g.tolerance, "absolute series tail tolerance (0 = default)");
    app.add_option("--max-terms", g.max_terms, "series term cap");
    app.add_option("--format", g.format, "text or csv")
        ->check(CLI::IsMember({"text", "csv"}));
    app.add_option("--output", g.output, "write to file instead of stdout");

    double r = 0.1, zre = 0.5, zim = 0;
    auto* kernel = app.add_subcommand("kernel", "print the kernel jet at one point");
    kernel->add_option("--r", r, "inner radius")->required();
    kernel->add_option("--z-re", zre, "Re z")->required();
    kernel->add_option("--z-im", zim, "Im z");

    auto* curv = app.add_subcommand("curvature", "print the curvature breakdown at one point");
    curv->add_option("--r", r, "inner radius")->required();
    curv->add_option("--z-re", zre, "Re z")->required();
    curv->add_option("--z-im", zim, "Im z");

    int samples = 500;
    double lo = 0, hi = 0;
    auto* sweep = app.add_subcommand("sweep", "curvature sweep along the real segment (CSV)");
    sweep->add_option("--r", r, "inner radius")->required();
    sweep->add_option("--samples", samples, "sample count");
    sweep->add_option("--lo", lo, "range start (default r + margin)");
    sweep->add_option("--hi", hi, "range end (default 1 - margin)");

    std::string which_case = "sqrt";
    auto* asym = app.add_subcommand("asymptotics", "coefficient-table comparison (CSV)");
    asym->add_option("--case", which_case, "sqrt or r310")
        ->check(CLI::IsMember({"sqrt", "r310"}));

    int part = 1;
    auto* thm = app.add_subcommand("theorem01", "limit verification tables");
    thm->add_option("--part", part, "1: divergence at sqrt(r); 2: limit 2 at r^(3/10)")
        ->check(CLI::IsMember({1, 2}));

    std::string spec_path;
    double level = -1;
    auto* chain = app.add_subcommand(
        "chain",
        "build/validate a chained-annuli domain and run the localization report.\n"
        "Spec file (JSON): {\"length\": J, \"rule\": {\"outer_first\", \"outer_ratio\", "
        "\"ratio_first\", \"ratio_ratio\", \"safety\"}} or explicit lists "
        "{\"length\": J, \"outer\": [R_1..R_J], \"inner\": [r_1..r_J], \"overlap\": "
        "[s_1..s_{J-1}]}. Omitted spec uses the built-in default chain.");
    chain->add_option("--spec", spec_path, "chain spec JSON file");
    chain->add_option("--level", level, "Green sublevel threshold (default -1)");

    auto* cross = app.add_subcommand("crosscheck",
                                     "24-term vs direct vs extremal curvature on a grid");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    std::ofstream file;
    try {
        std::ostream& os = *open_output(g, file);
        if (kernel->parsed())
            return bergman::with_precision(g.precision_digits, [&](auto tag) {
                print_kernel<decltype(tag)>(g, r, zre, zim, os);
                return 0;
            });
        if (curv->parsed())
            return bergman::with_precision(g.precision_digits, [&](auto tag) {
                print_curvature<decltype(tag)>(g, r, zre, zim, os);
                return 0;
            });
        if (sweep->parsed()) {
            bergman::SweepRequest req(r, samples);
            req.lo = lo;
            req.hi = hi;
            req.tolerance = g.tolerance;
            req.max_terms = g.max_terms;
            bergman::SweepOutcome out = bergman::run_sweep(req);
            bergman::write_sweep_csv(out, os);
            return out.partial ? 2 : 0;
        }
        if (asym->parsed()) return cmd_asymptotics(which_case, os);
        if (thm->parsed()) return cmd_theorem01(g, part, os);
        if (chain->parsed()) return cmd_chain(spec_path, level, os);
        if (cross->parsed()) return cmd_crosscheck(os);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const bergman::Error& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
