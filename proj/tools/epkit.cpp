// epkit: command-line front end for the EP toolkit.
//
// Exit codes: 0 pass, 1 property false, 2 input error, 3 inconclusive.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "epkit/battery.hpp"
#include "epkit/matrix_io.hpp"
#include "epkit/pinv.hpp"

namespace {

using namespace epkit;

constexpr int kPass = 0;
constexpr int kFalse = 1;
constexpr int kInputError = 2;
constexpr int kInconclusive = 3;

int input_error(const std::string& msg) {
    std::cerr << "epkit: " << msg << "\n";
    return kInputError;
}

int cmd_pinv(const std::string& path, const std::string& out_path) {
    const MatrixQ a = io::read_matrix_file(path);
    const MatrixQ x = pinv(a);
    const PenroseCertificate cert = penrose_certificate(a, x);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) return input_error("cannot write " + out_path);
        out << io::write_matrix_json(x);
    }
    auto mark = [](bool ok) { return ok ? "pass" : "FAIL"; };
    std::cout << "pinv " << x.to_string() << "\n"
              << "condition 1 (a x a = a): " << mark(cert.cond1()) << "\n"
              << "condition 2 (x a x = x): " << mark(cert.cond2()) << "\n"
              << "condition 3 (a x hermitian): " << mark(cert.ax_hermitian) << "\n"
              << "condition 4 (x a hermitian): " << mark(cert.xa_hermitian) << "\n";
    return cert.valid() ? kPass : kFalse;
}

int cmd_ep(const std::string& path) {
    const MatrixQ a = io::read_matrix_file(path);
    if (!a.is_square()) return input_error("EP test needs a square matrix, got " + std::to_string(a.rows()) + "x" +
                                           std::to_string(a.cols()));
    const MPPair m = make_mp_pair(a);
    const bool ep = m.p == m.q;
    std::cout << (ep ? "EP" : "not EP") << "\n"
              << "a a_dagger " << m.p.to_string() << "\n"
              << "a_dagger a " << m.q.to_string() << "\n";
    return ep ? kPass : kFalse;
}

struct BatteryArgs {
    std::string theorem;
    std::size_t trials = 200;
    std::size_t size = 4;
    std::uint64_t seed = 42;
    long entry_bound = 3;
    std::string out;
    bool no_elapsed = false;
    bool serial = false;
};

int cmd_battery(const BatteryArgs& args) {
    if (!battery::is_known_theorem(args.theorem)) {
        std::string known;
        for (const auto& id : battery::theorem_ids()) known += (known.empty() ? "" : ", ") + id;
        return input_error("unknown theorem " + args.theorem + " (known: " + known + ")");
    }
    if (args.size < 1) return input_error("--size must be at least 1");
    const auto cfgs = battery::mixed_configs(args.seed, args.trials, {args.size}, args.entry_bound);
    const auto report = args.serial ? battery::run_battery_serial(args.theorem, cfgs, args.seed)
                                    : battery::run_battery(args.theorem, cfgs, args.seed);
    const std::string text = battery::to_json(report, !args.no_elapsed).dump(2) + "\n";
    if (args.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(args.out);
        if (!out) return input_error("cannot write " + args.out);
        out << text;
        std::cout << "theorem " << report.theorem_id << ": " << report.trials << " trials, "
                  << report.equivalence_violations.size() << " violations, " << report.witness_failures.size()
                  << " witness failures -> " << (report.passed() ? "pass" : "FAIL") << "\n";
    }
    return report.passed() ? kPass : kFalse;
}

struct HermitianArgs {
    std::string path;
    std::string p = "2";
    banach::HermitianCheckOptions opts;
};

int cmd_hermitian(const HermitianArgs& args) {
    const MatrixQ a = io::read_matrix_file(args.path);
    if (!a.is_square()) return input_error("hermitian check needs a square matrix");
    const banach::PNorm norm = banach::PNorm::parse(args.p);
    const auto rep = banach::hermitian_check(banach::to_float_matrix(a), norm, args.opts);
    char line[160];
    std::snprintf(line, sizeof line, "max_deviation %.9g at t = %.9g (grid %zu, t_max %.9g)", rep.max_deviation,
                  rep.t_at_max, rep.grid_size, rep.t_max);
    std::cout << banach::to_string(rep.verdict) << " (p=" << norm.label() << ")\n" << line << "\n";
    if (norm.p == banach::PNorm::Kind::two) {
        std::cout << "exact self-adjoint: " << (a.is_self_adjoint() ? "yes" : "no") << "\n";
    }
    switch (rep.verdict) {
        case banach::Verdict::hermitian: return kPass;
        case banach::Verdict::not_hermitian: return kFalse;
        case banach::Verdict::inconclusive: return kInconclusive;
    }
    return kInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Moore-Penrose and EP toolkit"};
    app.require_subcommand(1);

    std::string pinv_path, pinv_out;
    auto* pinv_cmd = app.add_subcommand("pinv", "Moore-Penrose inverse with the four-condition check");
    pinv_cmd->add_option("input", pinv_path, "matrix JSON file")->required();
    pinv_cmd->add_option("--out", pinv_out, "write the inverse as a matrix file");

    std::string ep_path;
    auto* ep_cmd = app.add_subcommand("ep", "decide whether a square matrix is EP");
    ep_cmd->add_option("input", ep_path, "matrix JSON file")->required();

    BatteryArgs bat;
    auto* bat_cmd = app.add_subcommand("battery", "run an equivalence battery over seeded instances");
    bat_cmd->add_option("--theorem", bat.theorem, "theorem id, e.g. 3.7")->required();
    bat_cmd->add_option("--trials", bat.trials, "number of instances")->capture_default_str();
    bat_cmd->add_option("--size", bat.size, "matrix size")->capture_default_str();
    bat_cmd->add_option("--seed", bat.seed, "master seed")->capture_default_str();
    bat_cmd->add_option("--entry-bound", bat.entry_bound, "bound on generated numerators and denominators")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    bat_cmd->add_option("--out", bat.out, "write the JSON report here instead of stdout");
    bat_cmd->add_flag("--no-elapsed", bat.no_elapsed, "omit elapsed time so reports are byte-stable");
    bat_cmd->add_flag("--serial", bat.serial, "use the serial reference runner");

    HermitianArgs herm;
    auto* herm_cmd = app.add_subcommand("hermitian", "grid check of |exp(itA)| = 1 in the l_p operator norm");
    herm_cmd->add_option("input", herm.path, "matrix JSON file")->required();
    herm_cmd->add_option("--p", herm.p, "1, 2 or inf")->capture_default_str()->check(CLI::IsMember({"1", "2", "inf"}));
    herm_cmd->add_option("--grid", herm.opts.grid, "grid points")->capture_default_str();
    herm_cmd->add_option("--tmax", herm.opts.t_max, "half-width of the t interval")->capture_default_str();
    herm_cmd->add_option("--tol-pass", herm.opts.tol_pass)->capture_default_str();
    herm_cmd->add_option("--tol-fail", herm.opts.tol_fail)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*pinv_cmd) return cmd_pinv(pinv_path, pinv_out);
        if (*ep_cmd) return cmd_ep(ep_path);
        if (*bat_cmd) return cmd_battery(bat);
        if (*herm_cmd) return cmd_hermitian(herm);
    } catch (const ParseError& e) {
        return input_error(e.what());
    } catch (const ShapeError& e) {
        return input_error(e.what());
    } catch (const std::invalid_argument& e) {
        return input_error(e.what());
    } catch (const banach::ConvergenceError& e) {
        std::cerr << "epkit: " << e.what() << "\n";
        return kInconclusive;
    }
    return kInputError;
}
