#ifndef POLYENT_COMPOSITION_HPP
#define POLYENT_COMPOSITION_HPP

#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "polyent/entropy.hpp"

namespace polyent {

/// Agreement threshold for expansion audits (entropies here are O(1)).
inline constexpr double kExpansionTol = 1e-9;

// One audit row: the oracle joint entropy (direct summation / factored power
// sums), the telescoped expansion built here, and the literal transcription of
// the published expansion. A printed/direct gap is reported, never corrected.
template <typename Scalar = double>
struct ExpansionReport {
    Scalar direct{};
    Scalar derived{};
    Scalar printed{};
    std::vector<std::pair<std::string, Scalar>> term_breakdown;

    Scalar max_abs_discrepancy_printed() const { return std::abs(printed - direct); }
    Scalar max_abs_discrepancy_derived() const { return std::abs(derived - direct); }
};

// Joint entropy of a factored pair, expanded three ways.
//
// Printed form: H_i + H_j + (1-q) H_{q,r}(Y_i) H_{q,1}(Y_j)
//                         + (1-r) H_{q,r}(Y_j) H_{r,1}(Y_i).
// Derived form: telescoping A_r B_r - A_q B_q = B_r (A_r - A_q) + A_q (B_r - B_q),
// re-expressed in entropies via A_q = 1 + (1-q) H_{q,1}(Y_i) and
// B_r = 1 + (1-r) H_{r,1}(Y_j). Both are exact identities for a product joint;
// both sides are continuous across the q = r seam.
template <typename Scalar>
ExpansionReport<Scalar> dyadic_expansion(const Pmf<Scalar>& yi, const Pmf<Scalar>& yj,
                                         const EntropyParams<Scalar>& params) {
    const Scalar q = params.q, r = params.r;
    const Scalar hi = entropy_generalized(yi, params);
    const Scalar hj = entropy_generalized(yj, params);

    const Scalar printed_qterm = (1 - q) * hi * entropy_tsallis(yj, q);
    const Scalar printed_rterm = (1 - r) * hj * entropy_tsallis(yi, r);
    const Scalar derived_qterm = (1 - q) * hj * entropy_tsallis(yi, q);
    const Scalar derived_rterm = (1 - r) * hi * entropy_tsallis(yj, r);

    ExpansionReport<Scalar> report;
    report.direct = entropy_joint_factored(FactoredSystem<Scalar>({yi, yj}), params);
    report.printed = hi + hj + printed_qterm + printed_rterm;
    report.derived = hi + hj + derived_qterm + derived_rterm;
    report.term_breakdown = {
        {"marginal_sum", hi + hj},
        {"printed:(1-q)", printed_qterm},
        {"printed:(1-r)", printed_rterm},
        {"derived:(1-q)", derived_qterm},
        {"derived:(1-r)", derived_rterm},
    };
    return report;
}

// Joint entropy of a factored triple.
//
// The printed form transcribes the published six-group expansion literally,
// including its standalone H_{q,r}/H_{r,1} summands and the H_{1,1} factor
// (evaluated as the q = r = 1 limit, i.e. BGS in nats). The derived form nests
// the exact dyadic identity: the (Y_i, Y_j) pair acts as a single subsystem
// whose power sums are the products A_s^{(i)} A_s^{(j)}.
template <typename Scalar>
ExpansionReport<Scalar> triadic_expansion(const Pmf<Scalar>& yi, const Pmf<Scalar>& yj,
                                          const Pmf<Scalar>& yl,
                                          const EntropyParams<Scalar>& params) {
    const Scalar q = params.q, r = params.r;
    const Scalar hi = entropy_generalized(yi, params);
    const Scalar hj = entropy_generalized(yj, params);
    const Scalar hl = entropy_generalized(yl, params);
    const Scalar tri = entropy_tsallis(yi, r);
    const Scalar trj = entropy_tsallis(yj, r);
    const Scalar bgs_i = entropy_bgs(yi, std::numbers::e_v<Scalar>);

    const Scalar g_marginal = hi + hj + hl;
    const Scalar g_q = (1 - q) * (hi + trj + (hi + hj) * hl);
    const Scalar g_r = (1 - r) * (hj + tri + (tri + trj) * hl);
    const Scalar g_qq = (1 - q) * (1 - q) * hi * hj * hl;
    const Scalar g_rr = (1 - r) * (1 - r) * bgs_i * trj * hl;
    const Scalar g_qr = (1 - q) * (1 - r) * (tri * hj * hl + tri * trj * hl);

    const FactoredSystem<Scalar> pair({yi, yj});
    const Scalar h_pair = entropy_joint_factored(pair, params);
    const Scalar t_q_pair =
        entropy_joint_factored(pair, EntropyParams<Scalar>{q, Scalar(1)});
    const Scalar derived_rterm = (1 - r) * h_pair * entropy_tsallis(yl, r);
    const Scalar derived_qterm = (1 - q) * hl * t_q_pair;

    ExpansionReport<Scalar> report;
    report.direct = entropy_joint_factored(FactoredSystem<Scalar>({yi, yj, yl}), params);
    report.printed = g_marginal + g_q + g_r + g_qq + g_rr + g_qr;
    report.derived = h_pair + hl + derived_rterm + derived_qterm;
    report.term_breakdown = {
        {"marginal_sum", g_marginal},
        {"printed:(1-q)", g_q},
        {"printed:(1-r)", g_r},
        {"printed:(1-q)^2", g_qq},
        {"printed:(1-r)^2", g_rr},
        {"printed:(1-q)(1-r)", g_qr},
        {"derived:pair_joint", h_pair},
        {"derived:(1-r)", derived_rterm},
        {"derived:(1-q)", derived_qterm},
    };
    return report;
}

/// Runs the dyadic or triadic expansion at every grid point. M must be 2 or 3.
template <typename Scalar>
std::vector<ExpansionReport<Scalar>> audit_expansions(
    const FactoredSystem<Scalar>& system,
    const std::vector<std::pair<Scalar, Scalar>>& grid) {
    const std::size_t arity = system.arity();
    if (arity != 2 && arity != 3)
        throw UnsupportedArity("expansion audit supports M = 2 or 3, got M = " +
                               std::to_string(arity));
    std::vector<ExpansionReport<Scalar>> reports;
    reports.reserve(grid.size());
    for (const auto& [q, r] : grid) {
        const EntropyParams<Scalar> params{q, r};
        if (arity == 2)
            reports.push_back(dyadic_expansion(system.marginal(0), system.marginal(1), params));
        else
            reports.push_back(triadic_expansion(system.marginal(0), system.marginal(1),
                                                system.marginal(2), params));
    }
    return reports;
}

}  // namespace polyent

#endif  // POLYENT_COMPOSITION_HPP
