// polyent: entropy, synergy, and information measures for discrete
// distributions, plus an audit of the joint-entropy expansion formulas.
//
// Exit codes: 0 ok, 2 malformed input, 3 domain error, 4 independence
// violation, 5 internal identity failure, 6 I/O error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyent/polyent.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIndependence = 4;
constexpr int kExitIdentity = 5;
constexpr int kExitIo = 6;

struct CliError : std::runtime_error {
    int code;
    CliError(int c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::int64_t max_cells_from_env() {
    if (const char* env = std::getenv("POLYENT_MAX_CELLS")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw CliError(kExitDomain, "POLYENT_MAX_CELLS must be a positive integer");
    }
    return polyent::kDefaultMaxCells;
}

polyent::Distribution load_distribution(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError(kExitParse, "cannot open input file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
        return polyent::parse_distribution(doc);
    } catch (const nlohmann::json::exception& e) {
        throw CliError(kExitParse, std::string("malformed JSON: ") + e.what());
    } catch (const polyent::TooLarge& e) {
        throw CliError(kExitDomain, e.what());
    } catch (const polyent::Error& e) {
        throw CliError(kExitParse, std::string("invalid distribution: ") + e.what());
    }
}

// Grid spec format: "qmin:qmax:qsteps,rmin:rmax:rsteps".
polyent::SweepGrid<double> parse_grid(const std::string& spec) {
    double qmin, qmax, rmin, rmax;
    std::size_t qsteps, rsteps;
    char c1, c2, c3, c4, c5;
    std::istringstream in(spec);
    if (!(in >> qmin >> c1 >> qmax >> c2 >> qsteps >> c3 >> rmin >> c4 >> rmax >> c5 >>
          rsteps) ||
        c1 != ':' || c2 != ':' || c3 != ',' || c4 != ':' || c5 != ':' || !in.eof())
        throw CliError(kExitParse,
                       "grid spec must be qmin:qmax:steps,rmin:rmax:steps, got: " + spec);
    try {
        return polyent::SweepGrid<double>(qmin, qmax, qsteps, rmin, rmax, rsteps);
    } catch (const polyent::Error& e) {
        throw CliError(kExitDomain, e.what());
    }
}

// Accepts a FactoredSystem directly; a JointTable is admitted only when it
// factorizes (the synergy measures are defined for factorable joints).
polyent::FactoredSystem<double> require_factored(const polyent::Distribution& dist) {
    if (const auto* system = std::get_if<polyent::FactoredSystem<double>>(&dist))
        return *system;
    if (const auto* joint = std::get_if<polyent::JointTable<double>>(&dist)) {
        // The factorability check materializes the product of the marginals.
        const auto cap = max_cells_from_env();
        if (joint->cells() > cap)
            throw CliError(kExitDomain,
                           "joint table exceeds the materialization cap of " +
                               std::to_string(cap) + " cells");
        const double defect = polyent::independence_defect(*joint);
        if (defect > 1e-9)
            throw CliError(kExitIndependence,
                           "joint table is not factorable (independence defect " +
                               fmt17(defect) + ")");
        std::vector<polyent::Pmf<double>> marginals;
        for (std::size_t axis = 0; axis < joint->arity(); ++axis) {
            auto m = polyent::marginalize(*joint, {axis});
            marginals.emplace_back(m.probs(), polyent::kTolSumInternal);
        }
        return polyent::FactoredSystem<double>(std::move(marginals));
    }
    throw CliError(kExitDomain, "input must be a factored system (or factorable joint)");
}

int cmd_entropy(const std::string& input, double q, double r, double base) {
    const auto dist = load_distribution(input);
    const polyent::EntropyParams<double> params{q, r};
    nlohmann::json out;
    const bool bgs = params.on_limit_seam() && std::abs(q - 1.0) <= polyent::kEpsParam;
    if (bgs) {
        const auto as_pmf = [&](const auto& probs) {
            return polyent::entropy_bgs(
                polyent::Pmf<double>(probs, polyent::kTolSumInternal), base);
        };
        std::visit(
            [&](const auto& d) {
                using T = std::decay_t<decltype(d)>;
                if constexpr (std::is_same_v<T, polyent::Pmf<double>>)
                    out["entropy"] = polyent::entropy_bgs(d, base);
                else if constexpr (std::is_same_v<T, polyent::FactoredSystem<double>>) {
                    // BGS is additive over independent factors.
                    double total = 0;
                    for (const auto& m : d.marginals())
                        total += polyent::entropy_bgs(m, base);
                    out["entropy"] = total;
                } else
                    out["entropy"] = as_pmf(d.probs());
            },
            dist);
        out["units"] = (std::abs(base - 2.0) < 1e-12) ? "bit" : "nat";
    } else {
        std::visit(
            [&](const auto& d) {
                using T = std::decay_t<decltype(d)>;
                if constexpr (std::is_same_v<T, polyent::Pmf<double>>)
                    out["entropy"] = polyent::entropy_generalized(d, params);
                else if constexpr (std::is_same_v<T, polyent::FactoredSystem<double>>)
                    out["entropy"] = polyent::entropy_joint_factored(d, params);
                else
                    out["entropy"] = polyent::entropy_joint_table(d, params);
            },
            dist);
    }
    std::cout << out.dump() << "\n";
    return kExitOk;
}

int cmd_synergy(const std::string& input, double q, double r) {
    const auto system = require_factored(load_distribution(input));
    const polyent::EntropyParams<double> params{q, r};
    auto report = polyent::polyadic_synergy(system, params);
    if (system.arity() == 2) {
        const auto expanded =
            polyent::dyadic_synergy_expanded(system.marginal(0), system.marginal(1), params);
        report.term_breakdown.emplace_back("expanded_printed", expanded.value);
    } else if (system.arity() == 3) {
        report = polyent::triadic_synergy_expanded(system.marginal(0), system.marginal(1),
                                                   system.marginal(2), params);
    }
    std::cout << polyent::to_json(report).dump() << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& grid_spec) {
    const auto system = require_factored(load_distribution(input));
    const auto grid = parse_grid(grid_spec);
    const auto reports = polyent::audit_expansions(system, grid.points());

    bool derived_failed = false;
    std::cout << "q,r,direct,derived,printed,abs_printed_minus_direct,printed_mismatch\n";
    const auto points = grid.points();
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& rep = reports[i];
        const bool mismatch = rep.max_abs_discrepancy_printed() > polyent::kExpansionTol;
        if (rep.max_abs_discrepancy_derived() > polyent::kExpansionTol)
            derived_failed = true;
        std::cout << fmt17(points[i].first) << "," << fmt17(points[i].second) << ","
                  << fmt17(rep.direct) << "," << fmt17(rep.derived) << ","
                  << fmt17(rep.printed) << "," << fmt17(rep.max_abs_discrepancy_printed())
                  << "," << (mismatch ? "yes" : "no") << "\n";
    }
    if (derived_failed) {
        std::cerr << "derived expansion disagrees with direct summation\n";
        return kExitIdentity;
    }
    return kExitOk;
}

int cmd_sweep(const std::string& input, const std::string& grid_spec,
              const std::string& out_path, std::size_t threads) {
    const auto system = require_factored(load_distribution(input));
    if (system.arity() < 2)
        throw CliError(kExitDomain, "sweep needs a system with at least two marginals");
    const auto grid = parse_grid(grid_spec);
    const auto rows = polyent::sweep_synergy(system, grid, threads);

    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw CliError(kExitIo, "cannot open output file: " + out_path);
    out << "q,r,synergy,classification\n";
    for (const auto& row : rows)
        out << fmt17(row.q) << "," << fmt17(row.r) << "," << fmt17(row.synergy) << ","
            << polyent::to_string(row.classification) << "\n";
    if (!out) throw CliError(kExitIo, "write failed: " + out_path);
    return kExitOk;
}

int cmd_info(const std::string& input, const std::string& measure, double base) {
    const auto dist = load_distribution(input);
    const auto* joint = std::get_if<polyent::JointTable<double>>(&dist);
    if (!joint) throw CliError(kExitDomain, "info measures need a joint table input");
    polyent::InfoResult<double> result;
    if (measure == "mi")
        result = polyent::mutual_information(*joint, base);
    else if (measure == "multi")
        result = polyent::multi_information(*joint, base);
    else if (measure == "interaction")
        result = polyent::interaction_information(*joint, base);
    else
        throw CliError(kExitParse, "measure must be one of mi, multi, interaction");
    std::cout << polyent::to_json(result).dump() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entropy and synergy measures on discrete distributions"};
    app.require_subcommand(1);

    std::string input, grid_spec = "1:1:1,1:1:1", out_path, measure = "mi";
    double q = 1.0, r = 1.0, base = std::numbers::e;
    std::size_t threads = 1;

    auto* entropy = app.add_subcommand("entropy", "generalized (q,r) entropy of an input");
    entropy->add_option("input", input)->required();
    entropy->add_option("--q", q);
    entropy->add_option("--r", r);
    entropy->add_option("--base", base);

    auto* synergy = app.add_subcommand("synergy", "polyadic synergy of a factored system");
    synergy->add_option("input", input)->required();
    synergy->add_option("--q", q);
    synergy->add_option("--r", r);

    auto* verify = app.add_subcommand("verify", "audit expansion formulas over a grid");
    verify->add_option("input", input)->required();
    verify->add_option("--grid", grid_spec);

    auto* sweep = app.add_subcommand("sweep", "synergy over a (q,r) grid, CSV output");
    sweep->add_option("input", input)->required();
    sweep->add_option("--grid", grid_spec);
    sweep->add_option("--out", out_path)->required();
    sweep->add_option("--threads", threads);

    auto* info = app.add_subcommand("info", "classical information measures of a joint");
    info->add_option("input", input)->required();
    info->add_option("--measure", measure);
    info->add_option("--base", base);

    CLI11_PARSE(app, argc, argv);

    try {
        if (entropy->parsed()) return cmd_entropy(input, q, r, base);
        if (synergy->parsed()) return cmd_synergy(input, q, r);
        if (verify->parsed()) return cmd_verify(input, grid_spec);
        if (sweep->parsed()) return cmd_sweep(input, grid_spec, out_path, threads);
        if (info->parsed()) return cmd_info(input, measure, base);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code;
    } catch (const polyent::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}
