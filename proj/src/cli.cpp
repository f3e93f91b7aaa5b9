#include "groverian/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "groverian/errors.hpp"
#include "groverian/grover.hpp"
#include "groverian/measure.hpp"
#include "groverian/oracles.hpp"
#include "groverian/state_io.hpp"

namespace groverian::cli {

namespace {

enum class Format { text, csv };

struct Common {
    OptimizerConfig config;
    Format format = Format::text;
    bool optimizer_only = false;
};

const char* mode_name(UpdateMode m) {
    switch (m) {
        case UpdateMode::coordinate: return "coordinate";
        case UpdateMode::party: return "party";
        case UpdateMode::hybrid: return "hybrid";
    }
    return "?";
}

void add_optimizer_flags(CLI::App* cmd, Common& c) {
    static const std::map<std::string, UpdateMode> modes{
        {"coordinate", UpdateMode::coordinate}, {"party", UpdateMode::party}, {"hybrid", UpdateMode::hybrid}};
    static const std::map<std::string, Format> formats{{"text", Format::text}, {"csv", Format::csv}};
    cmd->add_option("--restarts", c.config.restarts, "Independent random restarts")
        ->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--max-sweeps", c.config.max_sweeps, "Sweep limit per restart")
        ->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--tol", c.config.tol, "Relative |f|^2 improvement per sweep that counts as converged")
        ->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--seed", c.config.seed, "Random seed")->capture_default_str();
    cmd->add_option("--mode", c.config.mode, "Update mode")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case))->default_str("coordinate");
    cmd->add_flag("--cyclic", c.config.cyclic, "Visit coordinates in a fixed cyclic order");
    cmd->add_option("--format", c.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))->default_str("text");
    cmd->add_flag("--optimizer-only", c.optimizer_only,
                  "Skip analytic and spectral shortcuts; always run the optimizer");
}

std::string num(double v, Format f) {
    std::ostringstream s;
    s << std::setprecision(f == Format::csv ? 15 : 6) << v;
    return s.str();
}

std::string echo(const std::vector<std::string>& args) {
    std::string s;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) s += ' ';
        s += args[i];
    }
    return s;
}

void print_header(std::ostream& out, const std::vector<std::string>& args, const Common& c) {
    out << "command: " << echo(args) << '\n';
    out << "config: restarts=" << c.config.restarts << " max_sweeps=" << c.config.max_sweeps
        << " tol=" << c.config.tol << " seed=" << c.config.seed << " mode=" << mode_name(c.config.mode)
        << (c.config.cyclic ? " cyclic" : "") << (c.optimizer_only ? " optimizer-only" : "") << '\n';
}

void print_trace(std::ostream& out, const OptResult& t) {
    int converged = 0;
    for (bool b : t.restart_converged) converged += b ? 1 : 0;
    double worst = t.restart_values.front();
    for (double v : t.restart_values) worst = std::min(worst, v);
    out << "optimizer: restarts=" << t.restart_values.size() << " converged=" << converged << '/'
        << t.restart_values.size() << " sweeps=" << t.sweeps_used << " worst_restart=" << num(worst, Format::text)
        << '\n';
}

Routing routing(const Common& c) { return c.optimizer_only ? Routing::optimizer_only : Routing::cheapest; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_eval(const std::vector<std::string>& args, const std::string& file, const std::string& part_text,
             bool normalize, const Common& c, std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto state = read_state_file(file, normalize);
    const auto partition = Partition::parse(part_text, state.n());
    const auto r = measure(state, partition, c.config, routing(c));
    if (c.format == Format::csv) {
        out << "m,n,pmax,g,method,partition\n";
        out << partition.parties() << ',' << state.n() << ',' << num(r.pmax, c.format) << ','
            << num(r.g, c.format) << ',' << to_string(r.method) << ',' << partition.to_string() << '\n';
    } else {
        print_header(out, args, c);
        out << "partition: " << partition.to_string() << '\n';
        out << "pmax: " << num(r.pmax, c.format) << '\n';
        out << "G: " << num(r.g, c.format) << '\n';
        out << "method: " << to_string(r.method) << '\n';
        if (r.trace) print_trace(out, *r.trace);
        out << "seconds: " << num(seconds_since(t0), Format::text) << '\n';
    }
    if (r.trace && !r.trace->converged) return kNotConverged;
    return kOk;
}

int cmd_gm(const std::vector<std::string>& args, const std::string& file, bool normalize,
           std::uint64_t budget, const Common& c, std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto state = read_state_file(file, normalize);
    const auto profile = gm_profile(state, c.config, budget, routing(c));
    if (c.format == Format::csv) {
        out << "m,n,pmax,g,method,partition\n";
        for (int m = 1; m <= profile.n; ++m) {
            const auto& v = profile.at(m);
            out << m << ',' << profile.n << ',' << num(v.best.pmax, c.format) << ',' << num(v.g, c.format)
                << ',' << to_string(v.best.method) << ',' << v.best.partition.to_string() << '\n';
        }
        return kOk;
    }
    print_header(out, args, c);
    out << "n: " << profile.n << '\n';
    out << std::left << std::setw(4) << "m" << std::setw(12) << "G_m" << std::setw(12) << "pmax"
        << std::setw(11) << "method" << "partition\n";
    for (int m = 1; m <= profile.n; ++m) {
        const auto& v = profile.at(m);
        out << std::left << std::setw(4) << m << std::setw(12) << num(v.g, c.format) << std::setw(12)
            << num(v.best.pmax, c.format) << std::setw(11) << to_string(v.best.method)
            << v.best.partition.to_string() << '\n';
    }
    for (const auto& w : profile.warnings) out << "warning: " << w << '\n';
    out << "monotone: " << (profile.monotone() ? "yes" : "no") << '\n';
    out << "seconds: " << num(seconds_since(t0), Format::text) << '\n';
    return kOk;
}

int cmd_table1(const std::vector<std::string>& args, int n_max, const Common& c, std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    bool all_converged = true;
    if (c.format == Format::csv) {
        out << "m,n,pmax,g,method\n";
    } else {
        print_header(out, args, c);
        out << "W-state P_max, parties {0},...,{m-2},{m-1..n-1}\n";
    }
    std::vector<std::vector<MeasureResult>> cells(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        const auto state = make_w(n);
        for (int m = 1; m <= n; ++m) {
            auto r = measure(state, single_qubit_plus_rest_partition(n, m), c.config, routing(c));
            if (r.trace && !r.trace->converged) all_converged = false;
            if (c.format == Format::csv) {
                out << m << ',' << n << ',' << num(r.pmax, c.format) << ',' << num(r.g, c.format) << ','
                    << to_string(r.method) << '\n';
            }
            cells[static_cast<std::size_t>(n - 1)].push_back(std::move(r));
        }
    }
    if (c.format == Format::text) {
        out << std::left << std::setw(4) << "m";
        for (int n = 1; n <= n_max; ++n) out << std::setw(13) << ("n=" + std::to_string(n));
        out << '\n';
        for (int m = 1; m <= n_max; ++m) {
            out << std::setw(4) << m;
            for (int n = 1; n <= n_max; ++n) {
                std::string cell;
                if (m <= n) {
                    const auto& r = cells[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(m - 1)];
                    const char tag = r.method == Method::optimizer ? '*' : (r.method == Method::spectral ? 's' : 'a');
                    cell = num(r.pmax, c.format) + tag;
                }
                out << std::setw(13) << cell;
            }
            out << '\n';
        }
        out << "a = analytic, s = spectral, * = optimizer\n";
        out << "seconds: " << num(seconds_since(t0), Format::text) << '\n';
    }
    return all_converged ? kOk : kNotConverged;
}

int cmd_grover_check(const std::vector<std::string>& args, const std::vector<int>& ns, int trials,
                     std::uint64_t seed, std::uint64_t marked, Format format, std::ostream& out) {
    std::vector<OverlapLawReport> reports;
    for (int n : ns) {
        if (marked >= (std::uint64_t{1} << n)) throw DomainError("marked index out of range for n=" + std::to_string(n));
        reports.push_back(validate_overlap_law(n, MarkedElement{marked}, trials, seed));
    }
    if (format == Format::csv) {
        out << "n,trials,seed,max_deviation,coefficient\n";
        for (const auto& r : reports) {
            out << r.n << ',' << r.trials << ',' << seed << ',' << num(r.max_deviation, format) << ','
                << num(r.coefficient, format) << '\n';
        }
        return kOk;
    }
    out << "command: " << echo(args) << '\n';
    out << "seed: " << seed << " marked: " << marked << " trials: " << trials << '\n';
    for (const auto& r : reports) {
        out << "n=" << r.n << " iterations=" << optimal_iterations(r.n)
            << " max_deviation=" << num(r.max_deviation, format) << " coefficient=" << num(r.coefficient, format)
            << " (max_deviation * 2^n)\n";
    }
    if (reports.size() >= 2) {
        out << "log-log slope vs N: " << num(log_log_slope(reports), format) << '\n';
    }
    return kOk;
}

int cmd_make(const std::string& family, int n, double a0, double a1, std::uint64_t seed, std::uint64_t index,
             const std::string& output, std::ostream& out) {
    PureState state = [&] {
        if (family == "ghz") return make_ghz(n, a0, a1);
        if (family == "w") return make_w(n);
        if (family == "eta") return make_eta(n);
        if (family == "random") return make_random_state(n, seed);
        return make_basis(n, index);
    }();
    if (output.empty() || output == "-") {
        out << format_state(state);
    } else {
        write_state_file(output, state);
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized Groverian entanglement of pure multi-qubit states"};
    app.name(args.empty() ? "groverian" : args.front());
    app.require_subcommand(1);

    Common common;
    std::string state_file;
    std::string partition_text;
    bool normalize = false;
    std::uint64_t budget = kDefaultEnumerationBudget;

    auto* eval = app.add_subcommand("eval", "G and P_max of a state for one partition");
    eval->add_option("state_file", state_file, "State file")->required();
    eval->add_option("partition", partition_text, "Partition, e.g. 0,1|2|3")->required();
    eval->add_flag("--normalize", normalize, "Rescale a non-normalized state instead of rejecting it");
    add_optimizer_flags(eval, common);

    auto* gm = app.add_subcommand("gm", "G_m profile: maximum G over all partitions into m parties");
    gm->add_option("state_file", state_file, "State file")->required();
    gm->add_flag("--normalize", normalize, "Rescale a non-normalized state instead of rejecting it");
    gm->add_option("--budget", budget, "Maximum number of partitions enumerated per m")->capture_default_str();
    add_optimizer_flags(gm, common);

    int n_max = 7;
    auto* table = app.add_subcommand("table1", "P_max of W states, one-qubit parties plus a remainder");
    table->add_option("n_max", n_max, "Largest qubit count")->check(CLI::Range(2, 7))->capture_default_str();
    add_optimizer_flags(table, common);

    std::vector<int> grover_ns;
    int trials = 50;
    std::uint64_t grover_seed = 1;
    std::uint64_t marked = 0;
    Format grover_format = Format::text;
    auto* grover = app.add_subcommand("grover-check", "Compare Grover success probability with |<eta|psi>|^2");
    grover->add_option("--n", grover_ns, "Qubit count (repeat for a scaling fit)")->required()->check(CLI::Range(2, 14));
    grover->add_option("--trials", trials, "Random states per qubit count")->check(CLI::PositiveNumber)->capture_default_str();
    grover->add_option("--seed", grover_seed, "Random seed")->capture_default_str();
    grover->add_option("--marked", marked, "Marked basis index")->capture_default_str();
    grover->add_option("--format", grover_format, "Output format")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"text", Format::text}, {"csv", Format::csv}},
                                            CLI::ignore_case))
        ->default_str("text");

    std::string family;
    int make_n = 1;
    double a0 = 1.0 / std::sqrt(2.0);
    double a1 = 1.0 / std::sqrt(2.0);
    std::uint64_t make_seed = 1;
    std::uint64_t index = 0;
    std::string output;
    auto* make = app.add_subcommand("make", "Write a state file");
    make->add_option("family", family, "ghz, w, eta, random or basis")
        ->required()->check(CLI::IsMember({"ghz", "w", "eta", "random", "basis"}));
    make->add_option("--n", make_n, "Qubit count")->required()->check(CLI::Range(1, kMaxQubits));
    make->add_option("--a0", a0, "GHZ amplitude on |0...0> (real)");
    make->add_option("--a1", a1, "GHZ amplitude on |1...1> (real)");
    make->add_option("--seed", make_seed, "Seed for the random family");
    make->add_option("--index", index, "Basis index for the basis family");
    make->add_option("-o,--output", output, "Output path (stdout when omitted)");

    std::vector<std::string> argv_rest(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(argv_rest.begin(), argv_rest.end());
    try {
        app.parse(argv_rest);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*eval) return cmd_eval(args, state_file, partition_text, normalize, common, out);
        if (*gm) return cmd_gm(args, state_file, normalize, budget, common, out);
        if (*table) return cmd_table1(args, n_max, common, out);
        if (*grover) return cmd_grover_check(args, grover_ns, trials, grover_seed, marked, grover_format, out);
        if (*make) return cmd_make(family, make_n, a0, a1, make_seed, index, output, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << " (required budget: " << e.required() << ")\n";
        return kBudgetRefused;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace groverian::cli
