#ifndef POLYENT_SYNERGY_HPP
#define POLYENT_SYNERGY_HPP

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "polyent/composition.hpp"
#include "polyent/entropy.hpp"

namespace polyent {

/// Classification threshold; entropies are O(1), anything below is rounding.
inline constexpr double kTolZero = 1e-12;

enum class SynergyClass { synergistic, redundant, additive };

enum class SynergyMethod { direct, expanded_printed, expanded_derived, tsallis_printed };

inline const char* to_string(SynergyClass c) {
    switch (c) {
        case SynergyClass::synergistic: return "synergistic";
        case SynergyClass::redundant: return "redundant";
        case SynergyClass::additive: return "additive";
    }
    return "?";
}

inline const char* to_string(SynergyMethod m) {
    switch (m) {
        case SynergyMethod::direct: return "direct";
        case SynergyMethod::expanded_printed: return "expanded_printed";
        case SynergyMethod::expanded_derived: return "expanded_derived";
        case SynergyMethod::tsallis_printed: return "tsallis_printed";
    }
    return "?";
}

template <typename Scalar>
SynergyClass classify_synergy(Scalar value) {
    if (value > Scalar(kTolZero)) return SynergyClass::synergistic;
    if (value < -Scalar(kTolZero)) return SynergyClass::redundant;
    return SynergyClass::additive;
}

template <typename Scalar = double>
struct SynergyReport {
    Scalar value{};
    std::size_t arity{};
    EntropyParams<Scalar> params{};
    SynergyClass classification{};
    SynergyMethod method{};
    std::vector<std::pair<std::string, Scalar>> term_breakdown;
};

namespace detail {

template <typename Scalar>
SynergyReport<Scalar> make_report(Scalar value, std::size_t arity,
                                  EntropyParams<Scalar> params, SynergyMethod method,
                                  std::vector<std::pair<std::string, Scalar>> terms = {}) {
    return SynergyReport<Scalar>{value,  arity,           params,
                                 classify_synergy(value), method, std::move(terms)};
}

}  // namespace detail

// S_M: joint entropy of the factored system minus the sum of its marginal
// entropies. This is the canonical value everywhere; expanded forms are
// diagnostics against it.
template <typename Scalar>
SynergyReport<Scalar> polyadic_synergy(const FactoredSystem<Scalar>& system,
                                       const EntropyParams<Scalar>& params) {
    if (system.arity() < 2)
        throw ArityTooSmall("synergy needs at least two subsystems");
    Scalar marginal_sum = 0;
    for (const auto& marginal : system.marginals())
        marginal_sum += entropy_generalized(marginal, params);
    const Scalar joint = entropy_joint_factored(system, params);
    return detail::make_report(joint - marginal_sum, system.arity(), params,
                               SynergyMethod::direct,
                               {{"joint", joint}, {"marginal_sum", marginal_sum}});
}

// Published dyadic expansion of S_2 (exact, since the dyadic identity is).
template <typename Scalar>
SynergyReport<Scalar> dyadic_synergy_expanded(const Pmf<Scalar>& yi, const Pmf<Scalar>& yj,
                                              const EntropyParams<Scalar>& params) {
    const Scalar q = params.q, r = params.r;
    const Scalar term_q = (1 - q) * entropy_generalized(yi, params) * entropy_tsallis(yj, q);
    const Scalar term_r = (1 - r) * entropy_generalized(yj, params) * entropy_tsallis(yi, r);
    return detail::make_report(term_q + term_r, std::size_t(2), params,
                               SynergyMethod::expanded_printed,
                               {{"(1-q)", term_q}, {"(1-r)", term_r}});
}

// One-parameter special case (1-q) H_{q,1}(Y_i) H_{q,1}(Y_j); q = 1 is
// excluded, the generalized path covers it via limits.
template <typename Scalar>
SynergyReport<Scalar> tsallis_dyadic_synergy(const Pmf<Scalar>& yi, const Pmf<Scalar>& yj,
                                             Scalar q) {
    if (q == Scalar(1)) throw QEqualsOne("q = 1 is excluded in the Tsallis form");
    const Scalar hi = entropy_tsallis(yi, q);
    const Scalar hj = entropy_tsallis(yj, q);
    return detail::make_report((1 - q) * hi * hj, std::size_t(2),
                               EntropyParams<Scalar>{q, Scalar(1)},
                               SynergyMethod::tsallis_printed,
                               {{"H_i", hi}, {"H_j", hj}});
}

// Triadic synergy. The returned value is the direct one; the literal
// published five-group expansion and the telescoped expansion are carried in
// the breakdown for audit.
template <typename Scalar>
SynergyReport<Scalar> triadic_synergy_expanded(const Pmf<Scalar>& yi, const Pmf<Scalar>& yj,
                                               const Pmf<Scalar>& yl,
                                               const EntropyParams<Scalar>& params) {
    const ExpansionReport<Scalar> expansion = triadic_expansion(yi, yj, yl, params);
    const Scalar marginal_sum = entropy_generalized(yi, params) +
                                entropy_generalized(yj, params) +
                                entropy_generalized(yl, params);
    const Scalar direct = expansion.direct - marginal_sum;
    auto report = detail::make_report(direct, std::size_t(3), params,
                                      SynergyMethod::direct);
    report.term_breakdown = {{"direct", direct},
                             {"printed", expansion.printed - marginal_sum},
                             {"derived", expansion.derived - marginal_sum}};
    for (const auto& [name, value] : expansion.term_breakdown)
        if (name != "marginal_sum") report.term_breakdown.emplace_back(name, value);
    return report;
}

// Tsallis triadic synergy: direct value, plus the pseudo-additivity expansion
// (1-q)[H_i H_j + H_i H_l + H_j H_l] + (1-q)^2 H_i H_j H_l and the literal
// published form, both recorded for audit.
template <typename Scalar>
SynergyReport<Scalar> tsallis_triadic_synergy(const Pmf<Scalar>& yi, const Pmf<Scalar>& yj,
                                              const Pmf<Scalar>& yl, Scalar q) {
    if (q == Scalar(1)) throw QEqualsOne("q = 1 is excluded in the Tsallis form");
    const EntropyParams<Scalar> params{q, Scalar(1)};
    const Scalar hi = entropy_tsallis(yi, q);
    const Scalar hj = entropy_tsallis(yj, q);
    const Scalar hl = entropy_tsallis(yl, q);

    const Scalar direct =
        polyadic_synergy(FactoredSystem<Scalar>({yi, yj, yl}), params).value;
    const Scalar derived =
        (1 - q) * (hi * hj + hi * hl + hj * hl) + (1 - q) * (1 - q) * hi * hj * hl;
    const Scalar printed =
        (1 - q) * (hi + entropy_bgs(yj, std::numbers::e_v<Scalar>) + (hi + hj) * hl) +
        (1 - q) * (1 - q) * hi * hj * hl;

    auto report = detail::make_report(direct, std::size_t(3), params,
                                      SynergyMethod::direct);
    report.term_breakdown = {
        {"direct", direct}, {"derived", derived}, {"printed", printed}};
    return report;
}

}  // namespace polyent

#endif  // POLYENT_SYNERGY_HPP
