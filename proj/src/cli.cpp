#include "slrk/cli.hpp"

#include "slrk/integrator.hpp"
#include "slrk/navier_stokes.hpp"
#include "slrk/order_conditions.hpp"
#include "slrk/parallel.hpp"
#include "slrk/scheme_search.hpp"
#include "slrk/stability.hpp"
#include "slrk/tableau.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifndef SLRK_VERSION
#define SLRK_VERSION "dev"
#endif

namespace slrk::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

/// Parameters, seeds and outputs of one run; written next to the outputs.
struct RunManifest {
    explicit RunManifest(std::string name, json params = json::object())
        : subcommand(std::move(name)), parameters(std::move(params)) {}

    std::string subcommand;
    json parameters;
    std::vector<std::uint64_t> seeds;
    std::vector<std::string> outputs;
    double duration_seconds = 0.0;

    json to_json() const {
        return {{"subcommand", subcommand}, {"parameters", parameters}, {"seeds", seeds},
                {"version", SLRK_VERSION},  {"outputs", outputs},       {"duration_seconds", duration_seconds}};
    }

    void write(const std::string& path) const {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write manifest '" + path + "'");
        out << to_json().dump(2) << '\n';
    }
};

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Tableau resolve_tableau(const std::string& spec) {
    if (fs::exists(spec)) return load_tableau(spec);
    if (auto builtin = builtin_tableau(spec)) return *builtin;
    throw std::runtime_error("'" + spec + "' is neither a tableau file nor a built-in scheme");
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, sep)) {
        if (!item.empty()) parts.push_back(item);
    }
    return parts;
}

std::complex<double> parse_complex(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.empty() || parts.size() > 2) throw std::runtime_error("expected RE,IM but got '" + text + "'");
    const double re = std::stod(parts[0]);
    const double im = parts.size() == 2 ? std::stod(parts[1]) : 0.0;
    return {re, im};
}

std::string serialize_float_tableau(const FloatTableau& t) {
    std::ostringstream out;
    const std::size_t s = t.stages();
    out << "stages " << s << '\n';
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < i; ++j) out << (j ? " " : "") << fmt(t.a[i][j]);
        out << '\n';
    }
    out << "b:";
    for (double v : t.b) out << ' ' << fmt(v);
    out << '\n';
    if (!t.name.empty()) out << "name: " << t.name << '\n';
    return out.str();
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

void write_boundary_csv(const std::string& path, const RegionBoundary& boundary) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << "re,im\n";
    for (const auto& z : boundary.points) out << fmt(z.real()) << ',' << fmt(z.imag()) << '\n';
    // close the polyline
    if (!boundary.points.empty()) {
        out << fmt(boundary.points.front().real()) << ',' << fmt(boundary.points.front().imag()) << '\n';
    }
}

// ---- subcommands -------------------------------------------------------

struct VerifyArgs {
    std::string tableau;
    int order = 0;
    std::string manifest;
    bool quiet = false;
};

int run_verify(const VerifyArgs& args, std::ostream& out) {
    Stopwatch clock;
    const Tableau tab = resolve_tableau(args.tableau);
    const auto conditions = order_residuals(tab, args.order);
    std::size_t satisfied = 0;
    for (const auto& cond : conditions) {
        const bool ok = cond.residual == 0;
        satisfied += ok ? 1 : 0;
        if (!args.quiet || !ok) {
            out << "order " << cond.tree.order() << "  " << cond.tree.to_string() << "  gamma=" << to_string(cond.density)
                << "  residual=" << to_string(cond.residual) << '\n';
        }
    }
    const int verified = verified_order(tab);
    out << satisfied << '/' << conditions.size() << " conditions satisfied exactly\n";
    out << "verified order: " << verified << '\n';
    if (!args.manifest.empty()) {
        RunManifest m{"verify", {{"tableau", args.tableau}, {"order", args.order}}};
        m.outputs.push_back(args.manifest);
        m.duration_seconds = clock.seconds();
        m.write(args.manifest);
    }
    return satisfied == conditions.size() ? exit_ok : exit_unverified;
}

struct SearchArgs {
    int stages = 8;
    int order = 6;
    std::string dc = "1/6";
    int seeds = 200;
    std::uint64_t seed = 0;
    std::string c_pattern;
    double damping = 0.5;
    int max_iters = 500;
    double tol = 1e-12;
    double init_scale = 0.5;
    long long max_den = 1000;
    std::string out_dir = "search_out";
    int threads = 0;
};

int run_search(const SearchArgs& args, std::ostream& out) {
    Stopwatch clock;
    SearchConfig cfg;
    cfg.stages = args.stages;
    cfg.target_order = args.order;
    cfg.delta_c = parse_rational(args.dc);
    if (args.c_pattern.empty()) {
        cfg.c_pattern = uniform_c_pattern(args.stages, cfg.delta_c);
    } else if (args.c_pattern == "rk6") {
        cfg.c_pattern = rk6_c_pattern();
    } else {
        for (const auto& tok : split(args.c_pattern, ',')) cfg.c_pattern.push_back(parse_rational(tok));
    }
    cfg.damping = args.damping;
    cfg.max_iters = args.max_iters;
    cfg.residual_tol = args.tol;
    cfg.rng_seed = args.seed;
    cfg.init_scale = args.init_scale;
    cfg.validate();

    fs::create_directories(args.out_dir);
    const auto results = multi_start_search(cfg, args.seeds, args.threads);

    RunManifest manifest{"search"};
    std::vector<std::string> pattern;
    for (const auto& c : cfg.c_pattern) pattern.push_back(to_string(c));
    manifest.parameters = {{"stages", cfg.stages},       {"order", cfg.target_order}, {"dc", to_string(cfg.delta_c)},
                           {"c_pattern", pattern},       {"damping", cfg.damping},    {"max_iters", cfg.max_iters},
                           {"tol", cfg.residual_tol},    {"init_scale", cfg.init_scale},
                           {"seeds", args.seeds},        {"seed", args.seed},         {"max_den", args.max_den}};

    json per_seed = json::array();
    int converged = 0, rationalized = 0;
    for (std::size_t k = 0; k < results.size(); ++k) {
        const auto& r = results[k];
        manifest.seeds.push_back(r.seed);
        json entry = {{"index", k},
                      {"seed", r.seed},
                      {"status", to_string(r.status)},
                      {"iterations", static_cast<int>(r.history.size()) - 1},
                      {"final_residual", r.history.back()}};
        if (r.status == SearchStatus::converged) {
            ++converged;
            FloatTableau t = *r.tableau;
            t.name = "search seed " + std::to_string(r.seed);
            const std::string float_path = (fs::path(args.out_dir) / ("seed_" + std::to_string(k) + ".ftab")).string();
            write_text(float_path, serialize_float_tableau(t));
            manifest.outputs.push_back(float_path);
            entry["float_tableau"] = float_path;
            const auto exact = rationalize(t, args.max_den, cfg.target_order);
            if (exact.tableau) {
                ++rationalized;
                const std::string exact_path = (fs::path(args.out_dir) / ("seed_" + std::to_string(k) + ".tab")).string();
                save_tableau(*exact.tableau, exact_path);
                manifest.outputs.push_back(exact_path);
                entry["exact_tableau"] = exact_path;
            }
        }
        per_seed.push_back(entry);
    }
    const std::string summary_path = (fs::path(args.out_dir) / "summary.json").string();
    json summary = {{"config", manifest.parameters},
                    {"converged", converged},
                    {"rationalized", rationalized},
                    {"results", per_seed}};
    write_text(summary_path, summary.dump(2) + "\n");
    manifest.outputs.push_back(summary_path);
    manifest.duration_seconds = clock.seconds();
    manifest.write((fs::path(args.out_dir) / "manifest.json").string());

    out << converged << '/' << results.size() << " seeds converged, " << rationalized << " rationalized\n";
    return exit_ok;
}

struct StabilityArgs {
    std::string tableau;
    std::string z2 = "0,0";
    int samples = 256;
    std::string out = "boundary.csv";
};

int run_stability(const StabilityArgs& args, std::ostream& out) {
    Stopwatch clock;
    const Tableau tab = resolve_tableau(args.tableau);
    const auto phi = stability_polynomial(tab);
    const auto z2 = parse_complex(args.z2);
    const auto boundary = region_boundary(phi, z2, args.samples);
    write_boundary_csv(args.out, boundary);

    RunManifest manifest{"stability", {{"tableau", args.tableau}, {"z2", args.z2}, {"samples", args.samples}}};
    manifest.outputs.push_back(args.out);
    manifest.duration_seconds = clock.seconds();
    manifest.write(args.out + ".manifest.json");

    out << "Phi(z) coefficients:";
    for (const auto& c : phi.coeffs) out << ' ' << to_string(c);
    out << '\n';
    if (z2.imag() == 0.0 && z2.real() <= 0.0) {
        out << "real-axis boundary: " << fmt(real_axis_boundary(phi, z2.real())) << '\n';
    }
    out << boundary.points.size() << " boundary points, " << boundary.flagged_angles.size() << " rays flagged\n";
    return exit_ok;
}

struct Fig2bArgs {
    double z2 = -10.0;
    int samples = 256;
    std::string out_dir = "fig2b";
};

int run_fig2b(const Fig2bArgs& args, std::ostream& out) {
    Stopwatch clock;
    fs::create_directories(args.out_dir);
    RunManifest manifest{"stability-fig2b", {{"z2", args.z2}, {"samples", args.samples}}};
    for (const auto& [name, tab] : {std::pair{"slrk4", rk4_tableau()}, std::pair{"slrk6", rk6_tableau()}}) {
        const auto phi = stability_polynomial(tab);
        for (double z2 : {0.0, args.z2}) {
            const std::string path =
                (fs::path(args.out_dir) / (std::string(name) + (z2 == 0.0 ? "_z2_0.csv" : "_z2_stiff.csv"))).string();
            write_boundary_csv(path, region_boundary(phi, {z2, 0.0}, args.samples));
            manifest.outputs.push_back(path);
        }
        out << name << " real-axis boundary at z2=" << fmt(args.z2) << ": " << fmt(real_axis_boundary(phi, args.z2))
            << '\n';
    }
    manifest.duration_seconds = clock.seconds();
    manifest.write((fs::path(args.out_dir) / "manifest.json").string());
    return exit_ok;
}

struct IntegrateArgs {
    std::string tableau;
    double h = 0.01;
    int steps = 100;
    std::string problem = "scalar";
    double lambda = -20.0;
    double u0 = 0.5;
    int n = 64;
    double nu = 1e-2;
    std::string out;
};

int run_integrate(const IntegrateArgs& args, std::ostream& out) {
    Stopwatch clock;
    const Tableau tab = resolve_tableau(args.tableau);
    json result = {{"tableau", tab.name()}, {"problem", args.problem}, {"h", args.h},
                   {"steps", args.steps},   {"t_final", args.h * args.steps}};
    Vector final_state;
    if (args.problem == "scalar") {
        // u' = u (1 - u) + lambda u, with lambda treated by the propagator.
        OdeProblem problem{[](const Vector& u) { return (u.array() * (1.0 - u.array())).matrix().eval(); },
                           LinearOperator::diagonal(Vector::Constant(1, Complex(args.lambda, 0.0))), 1};
        const StepPlan plan(problem, tab, args.h);
        final_state = integrate(plan, Vector::Constant(1, Complex(args.u0, 0.0)), args.steps).final_state;
        result["lambda"] = args.lambda;
        result["u0"] = args.u0;
        result["final_value"] = final_state[0].real();
    } else if (args.problem == "ns") {
        const KolmogorovFlow flow(args.n, args.nu);
        const StepPlan plan(flow.problem(), tab, args.h);
        final_state = integrate(plan, flow.initial_condition(), args.steps).final_state;
        const Eigen::VectorXd physical = flow.to_physical(final_state);
        result["n"] = args.n;
        result["nu"] = args.nu;
        result["vorticity_linf"] = physical.cwiseAbs().maxCoeff();
        result["vorticity_l2"] = std::sqrt(physical.squaredNorm() / static_cast<double>(physical.size()));
        result["enstrophy"] = flow.enstrophy(final_state);
    } else {
        throw CLI::ValidationError("--problem", "must be 'scalar' or 'ns'");
    }
    result["final_l2"] = final_state.norm();
    result["final_linf"] = final_state.cwiseAbs().maxCoeff();
    const std::string text = result.dump(2) + "\n";
    out << text;
    if (!args.out.empty()) {
        write_text(args.out, text);
        RunManifest manifest{"integrate", result};
        manifest.parameters.erase("final_value");
        manifest.outputs.push_back(args.out);
        manifest.duration_seconds = clock.seconds();
        manifest.write(args.out + ".manifest.json");
    }
    return exit_ok;
}

struct ConvergeArgs {
    int n = 64;
    double nu = 1e-2;
    double t = 5.0;
    std::string steps = "32,64,128,256,512,1024";
    int ref = 4096;
    std::string schemes = "rk4,rk6";
    std::string out = "conv.csv";
    std::string slopes;
    int threads = 0;
};

int run_converge(const ConvergeArgs& args, std::ostream& out) {
    Stopwatch clock;
    ConvergenceConfig cfg;
    cfg.n = args.n;
    cfg.nu = args.nu;
    cfg.t_final = args.t;
    cfg.step_counts.clear();
    for (const auto& tok : split(args.steps, ',')) cfg.step_counts.push_back(std::stoi(tok));
    cfg.reference_steps = args.ref;
    cfg.schemes = split(args.schemes, ',');
    cfg.threads = args.threads;
    const auto table = convergence_study(cfg);

    {
        std::ofstream csv(args.out);
        if (!csv) throw std::runtime_error("cannot write '" + args.out + "'");
        csv << "scheme,m,linf_error\n";
        for (const auto& cell : table.cells) {
            csv << cell.scheme << ',' << cell.steps << ',' << (cell.stable ? fmt(cell.linf_error) : "unstable") << '\n';
        }
    }
    const std::string slopes_path = args.slopes.empty() ? args.out + ".slopes.csv" : args.slopes;
    {
        std::ofstream csv(slopes_path);
        if (!csv) throw std::runtime_error("cannot write '" + slopes_path + "'");
        csv << "scheme,slope,points,error_floor\n";
        for (const auto& fit : table.fits) {
            csv << fit.scheme << ',' << fmt(fit.slope) << ',' << fit.points << ',' << fmt(table.error_floor) << '\n';
        }
    }
    RunManifest manifest{"ns-converge",
                         {{"n", args.n},
                          {"nu", args.nu},
                          {"t", args.t},
                          {"steps", cfg.step_counts},
                          {"ref", args.ref},
                          {"schemes", cfg.schemes}}};
    manifest.outputs = {args.out, slopes_path};
    manifest.duration_seconds = clock.seconds();
    manifest.write(args.out + ".manifest.json");

    for (const auto& fit : table.fits) {
        out << fit.scheme << ": slope " << fmt(fit.slope) << " over " << fit.points << " points\n";
    }
    out << "error floor: " << fmt(table.error_floor) << '\n';
    return exit_ok;
}

struct RunArgs {
    int n = 64;
    double nu = 1e-2;
    double t = 5.0;
    int steps = 512;
    std::string tableau = "rk6";
    int snapshots = 1;
    std::string out_dir = "ns_run";
};

int run_ns(const RunArgs& args, std::ostream& out) {
    Stopwatch clock;
    if (args.snapshots < 1 || args.steps % args.snapshots != 0) {
        throw CLI::ValidationError("--snapshots", "must divide --steps");
    }
    const Tableau tab = resolve_tableau(args.tableau);
    const KolmogorovFlow flow(args.n, args.nu);
    const double h = args.t / args.steps;
    const StepPlan plan(flow.problem(), tab, h);
    fs::create_directories(args.out_dir);

    RunManifest manifest{"ns-run",
                         {{"n", args.n},
                          {"nu", args.nu},
                          {"t", args.t},
                          {"steps", args.steps},
                          {"tableau", args.tableau},
                          {"snapshots", args.snapshots}}};
    Vector w = flow.initial_condition();
    auto dump = [&](int index, double time) {
        char name[32];
        std::snprintf(name, sizeof name, "snapshot_%04d.bin", index);
        const std::string path = (fs::path(args.out_dir) / name).string();
        write_snapshot(path, args.n, time, flow.to_physical(w));
        manifest.outputs.push_back(path);
    };
    dump(0, 0.0);
    const int stride = args.steps / args.snapshots;
    for (int k = 1; k <= args.snapshots; ++k) {
        w = integrate(plan, w, stride).final_state;
        dump(k, h * stride * k);
    }
    manifest.duration_seconds = clock.seconds();
    manifest.write((fs::path(args.out_dir) / "manifest.json").string());
    out << "wrote " << manifest.outputs.size() << " snapshots to " << args.out_dir << '\n';
    return exit_ok;
}

struct TableauArgs {
    std::string name;
    std::string out;
};

int run_tableau(const TableauArgs& args, std::ostream& out) {
    const auto tab = builtin_tableau(args.name);
    if (!tab) throw CLI::ValidationError("--name", "unknown built-in tableau '" + args.name + "'");
    if (args.out.empty()) {
        out << serialize_tableau(*tab);
    } else {
        save_tableau(*tab, args.out);
    }
    return exit_ok;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Simple Lawson Runge-Kutta toolkit", "slrk"};
    app.require_subcommand(1);
    app.set_version_flag("--version", SLRK_VERSION);

    int code = exit_ok;
    std::function<int()> action;

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check order conditions exactly");
    verify_cmd->add_option("--tableau", verify.tableau, "Tableau file or built-in name")->required();
    verify_cmd->add_option("--order", verify.order, "Claimed order")->required()->check(CLI::Range(1, 10));
    verify_cmd->add_option("--manifest", verify.manifest, "Write a run manifest here");
    verify_cmd->add_flag("--quiet", verify.quiet, "Only print failing conditions");
    verify_cmd->callback([&] { action = [&] { return run_verify(verify, out); }; });

    SearchArgs search;
    auto* search_cmd = app.add_subcommand("search", "Newton-Raphson search for equally spaced tableaux");
    search_cmd->add_option("--stages", search.stages)->check(CLI::Range(1, 16));
    search_cmd->add_option("--order", search.order)->check(CLI::Range(1, 8));
    search_cmd->add_option("--dc", search.dc, "Abscissa spacing p/q");
    search_cmd->add_option("--seeds", search.seeds)->check(CLI::NonNegativeNumber);
    search_cmd->add_option("--seed", search.seed, "Base RNG seed");
    search_cmd->add_option("--c-pattern", search.c_pattern, "Comma-separated abscissae, or 'rk6'");
    search_cmd->add_option("--damping", search.damping);
    search_cmd->add_option("--max-iters", search.max_iters);
    search_cmd->add_option("--tol", search.tol);
    search_cmd->add_option("--init-scale", search.init_scale);
    search_cmd->add_option("--max-den", search.max_den, "Denominator bound for rationalization");
    search_cmd->add_option("--out-dir", search.out_dir);
    search_cmd->add_option("--threads", search.threads);
    search_cmd->callback([&] { action = [&] { return run_search(search, out); }; });

    StabilityArgs stab;
    auto* stab_cmd = app.add_subcommand("stability", "Stability-region boundary as CSV");
    stab_cmd->add_option("--tableau", stab.tableau)->required();
    stab_cmd->add_option("--z2", stab.z2, "Stiff offset RE,IM");
    stab_cmd->add_option("--samples", stab.samples)->check(CLI::Range(16, 1 << 20));
    stab_cmd->add_option("--out", stab.out);
    stab_cmd->callback([&] { action = [&] { return run_stability(stab, out); }; });

    Fig2bArgs fig;
    auto* fig_cmd = app.add_subcommand("stability-fig2b", "SLRK4 and SLRK6 boundaries at z2 = 0 and a stiff z2");
    fig_cmd->add_option("--z2", fig.z2);
    fig_cmd->add_option("--samples", fig.samples)->check(CLI::Range(16, 1 << 20));
    fig_cmd->add_option("--out-dir", fig.out_dir);
    fig_cmd->callback([&] { action = [&] { return run_fig2b(fig, out); }; });

    IntegrateArgs integ;
    auto* integ_cmd = app.add_subcommand("integrate", "Fixed-step Lawson integration");
    integ_cmd->add_option("--tableau", integ.tableau)->required();
    integ_cmd->set_help_flag("--help", "Print this help message and exit");  // frees -h for the timestep
    integ_cmd->add_option("--h", integ.h)->check(CLI::PositiveNumber);
    integ_cmd->add_option("--steps", integ.steps)->check(CLI::PositiveNumber);
    integ_cmd->add_option("--problem", integ.problem)->check(CLI::IsMember({"scalar", "ns"}));
    integ_cmd->add_option("--lambda", integ.lambda, "Stiff rate for the scalar problem");
    integ_cmd->add_option("--u0", integ.u0);
    integ_cmd->add_option("--n", integ.n);
    integ_cmd->add_option("--nu", integ.nu);
    integ_cmd->add_option("--out", integ.out, "Also write the JSON here");
    integ_cmd->callback([&] { action = [&] { return run_integrate(integ, out); }; });

    ConvergeArgs conv;
    auto* conv_cmd = app.add_subcommand("ns-converge", "Navier-Stokes temporal convergence study");
    conv_cmd->add_option("--n", conv.n);
    conv_cmd->add_option("--nu", conv.nu);
    conv_cmd->add_option("--t", conv.t);
    conv_cmd->add_option("--steps", conv.steps, "Comma-separated step counts");
    conv_cmd->add_option("--ref", conv.ref, "Reference step count (Lawson RK6)");
    conv_cmd->add_option("--schemes", conv.schemes);
    conv_cmd->add_option("--out", conv.out);
    conv_cmd->add_option("--slopes", conv.slopes);
    conv_cmd->add_option("--threads", conv.threads);
    conv_cmd->callback([&] { action = [&] { return run_converge(conv, out); }; });

    RunArgs run;
    auto* run_cmd = app.add_subcommand("ns-run", "Dump vorticity snapshots");
    run_cmd->add_option("--n", run.n);
    run_cmd->add_option("--nu", run.nu);
    run_cmd->add_option("--t", run.t);
    run_cmd->add_option("--steps", run.steps)->check(CLI::PositiveNumber);
    run_cmd->add_option("--tableau", run.tableau);
    run_cmd->add_option("--snapshots", run.snapshots);
    run_cmd->add_option("--out-dir", run.out_dir);
    run_cmd->callback([&] { action = [&] { return run_ns(run, out); }; });

    TableauArgs tabargs;
    auto* tab_cmd = app.add_subcommand("tableau", "Print or save a built-in tableau");
    tab_cmd->add_option("--name", tabargs.name)->required();
    tab_cmd->add_option("--out", tabargs.out);
    tab_cmd->callback([&] { action = [&] { return run_tableau(tabargs, out); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    try {
        return action ? action() : exit_usage;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dispatch(args, std::cout, std::cerr);
}

}  // namespace slrk::cli
