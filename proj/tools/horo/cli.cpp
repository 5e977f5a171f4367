#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "horo/error.hpp"
#include "output.hpp"

namespace horo::cli {

namespace {

const std::vector<std::string> kCommands = {"simulate", "moments", "bounds", "verify-clt", "render", "j-table", "rerun"};

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Flat "key = value" file; '#' starts a comment line.
ConfigEcho read_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file " + path);
    ConfigEcho entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected key = value");
        entries.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return entries;
}

bool mentions(const std::vector<std::string>& args, const std::string& key)
{
    const std::string flag = "--" + key;
    return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
        return a == flag || a.rfind(flag + "=", 0) == 0;
    });
}

// Merges config entries into args as defaults: explicit flags win.
std::vector<std::string> apply_defaults(std::vector<std::string> args, const ConfigEcho& entries)
{
    auto cmd_it = std::find_if(args.begin(), args.end(), [](const std::string& a) {
        return std::find(kCommands.begin(), kCommands.end(), a) != kCommands.end();
    });
    if (cmd_it == args.end()) {
        auto cmd = std::find_if(entries.begin(), entries.end(), [](const auto& kv) { return kv.first == "command"; });
        if (cmd == entries.end()) return args;
        args.insert(args.begin(), cmd->second);
        cmd_it = args.begin();
    }
    std::vector<std::string> extra;
    for (const auto& [key, value] : entries) {
        if (key == "command" || mentions(args, key)) continue;
        if (value == "true") {
            extra.push_back("--" + key);
        } else if (value != "false") {
            extra.push_back("--" + key);
            extra.push_back(value);
        }
    }
    auto pos = std::distance(args.begin(), cmd_it) + 1;
    args.insert(args.begin() + pos, extra.begin(), extra.end());
    return args;
}

std::vector<std::string> expand_config(std::vector<std::string> args)
{
    for (std::size_t i = 0; i < args.size(); ++i) {
        std::string path;
        std::size_t erase = 0;
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
            erase = 2;
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            erase = 1;
        } else {
            continue;
        }
        args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i + erase));
        return apply_defaults(std::move(args), read_config_file(path));
    }
    return args;
}

void add_model(CLI::App* cmd, std::string& model)
{
    cmd->add_option("--model", model, "hyperbolic (horospheres) or euclidean (hyperplanes)")
        ->check(CLI::IsMember({"hyperbolic", "euclidean"}));
}

void add_threads(CLI::App* cmd, unsigned& threads)
{
    cmd->add_option("--threads", threads, "worker threads (output does not depend on it)")
        ->envname("HORO_THREADS")
        ->check(CLI::Range(1u, 1024u));
}

int dispatch(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err, int depth);

int parse_and_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, int depth)
{
    CLI::App app{"Poisson horosphere surface-area simulator and CLT diagnostics", "horo"};
    app.set_version_flag("--version", std::string("horo ") + HORO_VERSION);
    app.require_subcommand(1);
    app.add_option("--config", "flat key = value file supplying defaults (flags override)");

    SimulateOptions sim;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo replications of the surface functional");
    add_model(simulate, sim.model);
    simulate->add_option("--d", sim.d, "space dimension")->required()->check(CLI::Range(2, 1 << 20));
    simulate->add_option("--R", sim.R, "ball radius")->required()->check(CLI::PositiveNumber);
    simulate->add_option("--n", sim.n, "replications")->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));
    simulate->add_option("--seed", sim.seed, "64-bit seed");
    simulate->add_option("--cap", sim.cap, "refuse runs whose expected hit count exceeds this")->check(CLI::PositiveNumber);
    add_threads(simulate, sim.threads);
    simulate->add_option("--out", sim.out, "per-replication CSV (default stdout)");
    simulate->add_option("--summary", sim.summary, "summary JSON (default stdout)");
    simulate->add_flag("--timestamp", sim.timestamp, "embed the wall-clock time (output no longer reproducible)");

    MomentsOptions mom;
    auto* moments = app.add_subcommand("moments", "exact mean, variance and fourth cumulant");
    add_model(moments, mom.model);
    moments->add_option("--d", mom.d, "space dimension")->required()->check(CLI::Range(1, 1 << 20));
    moments->add_option("--R", mom.R, "ball radius")->required()->check(CLI::PositiveNumber);
    moments->add_option("--out", mom.out, "JSON output (default stdout)");

    BoundsOptions bnd;
    auto* bounds = app.add_subcommand("bounds", "Wasserstein/Kolmogorov bounds and rate envelopes on a grid");
    add_model(bounds, bnd.model);
    bounds->add_option("--d-grid", bnd.d_grid, "comma-separated dimensions")->required()->delimiter(',');
    bounds->add_option("--R-list", bnd.R_list, "comma-separated radii")->delimiter(',');
    bounds->add_option("--alpha", bnd.alpha, "use R = alpha ln d")->check(CLI::PositiveNumber);
    bounds->add_flag("--fixed-d", bnd.fixed_d, "report the fixed-dimension R^{-1/2} envelope");
    bounds->add_option("--threshold", bnd.threshold, "regime split on R - ln d");
    bounds->add_option("--format", bnd.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    bounds->add_option("--out", bnd.out, "output file (default stdout)");

    VerifyOptions ver;
    auto* verify = app.add_subcommand("verify-clt", "empirical distance of the standardized functional to its Gaussian limit");
    add_model(verify, ver.model);
    verify->add_option("--d", ver.d, "space dimension")->required()->check(CLI::Range(2, 1 << 20));
    verify->add_option("--R-list", ver.R_list, "comma-separated radii")->required()->delimiter(',');
    verify->add_option("--n", ver.n, "replications per radius");
    verify->add_option("--seed", ver.seed, "64-bit seed");
    verify->add_option("--cap", ver.cap, "expected hit-count cap")->check(CLI::PositiveNumber);
    verify->add_option("--kol-tol", ver.kol_tol, "Kolmogorov tolerance at the largest radius");
    verify->add_option("--standardize", ver.standardize, "analytic or empirical")
        ->check(CLI::IsMember({"analytic", "empirical"}));
    add_threads(verify, ver.threads);
    verify->add_option("--out", ver.out, "JSON report (default stdout)");

    RenderOptions ren;
    auto* render = app.add_subcommand("render", "SVG of one d = 2 realization in the Poincare disc");
    render->add_option("--R", ren.R, "ball radius")->check(CLI::PositiveNumber);
    render->add_option("--seed", ren.seed, "64-bit seed");
    render->add_option("--cap", ren.cap, "expected hit-count cap")->check(CLI::PositiveNumber);
    render->add_option("--out", ren.out, "SVG file (default stdout)");

    JTableOptions jt;
    auto* jtable = app.add_subcommand("j-table", "J integral and lemma ratios on a grid");
    jtable->add_option("--regime", jt.regime, "a, b1 or b2")->required()->check(CLI::IsMember({"a", "b1", "b2"}));
    jtable->add_option("--d-grid", jt.d_grid, "comma-separated dimensions")->required()->delimiter(',');
    jtable->add_option("--R-list", jt.R_list, "comma-separated radii")->delimiter(',');
    jtable->add_option("--offset", jt.offset, "use R = ln d + offset");
    jtable->add_option("--alpha", jt.alpha, "use R = alpha ln d")->check(CLI::PositiveNumber);
    jtable->add_option("--out", jt.out, "CSV file (default stdout)");

    std::string rerun_from, rerun_out, rerun_summary;
    auto* rerun = app.add_subcommand("rerun", "re-run the command whose config is embedded in an output file");
    rerun->add_option("file", rerun_from, "CSV, JSON or SVG written by horo")->required();
    rerun->add_option("--out", rerun_out, "output file");
    rerun->add_option("--summary", rerun_summary, "summary file (simulate only)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    if (*simulate) return cmd_simulate(sim, out);
    if (*moments) return cmd_moments(mom, out);
    if (*bounds) return cmd_bounds(bnd, out);
    if (*verify) return cmd_verify_clt(ver, out);
    if (*render) return cmd_render(ren, out);
    if (*jtable) return cmd_j_table(jt, out);
    if (*rerun) {
        if (depth > 0) throw std::invalid_argument("rerun: nested rerun");
        ConfigEcho echo = read_echo(rerun_from);
        std::vector<std::string> next;
        if (!rerun_out.empty()) next.insert(next.end(), {"--out", rerun_out});
        if (!rerun_summary.empty()) next.insert(next.end(), {"--summary", rerun_summary});
        return dispatch(apply_defaults(next, echo), out, err, depth + 1);
    }
    return kUsage;
}

int dispatch(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err, int depth)
{
    try {
        return parse_and_run(expand_config(raw_args), out, err, depth);
    } catch (const FeasibilityError& e) {
        err << "horo: infeasible: " << e.what() << "\n";
        return kFeasibility;
    } catch (const MassOverflowError& e) {
        err << "horo: infeasible: " << e.what() << "\n";
        return kFeasibility;
    } catch (const QuadratureError& e) {
        err << "horo: " << e.what() << "\n";
        return kQuadrature;
    } catch (const IoError& e) {
        err << "horo: " << e.what() << "\n";
        return kIo;
    } catch (const std::logic_error& e) {
        // DomainError, DegenerateSampleError and bad flag combinations.
        err << "horo: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    return dispatch(args, out, err, 0);
}

}  // namespace horo::cli
