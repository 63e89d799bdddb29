#ifndef POLYENT_CLASSIC_INFO_HPP
#define POLYENT_CLASSIC_INFO_HPP

#include <bit>
#include <cstdint>
#include <string>

#include "polyent/distribution.hpp"
#include "polyent/entropy.hpp"

namespace polyent {

/// Subset-entropy measures go exponential in the axis count; capped here.
inline constexpr std::size_t kMaxInfoAxes = 12;

enum class InfoMeasure { mutual_information, multi_information, interaction_information };

inline const char* to_string(InfoMeasure m) {
    switch (m) {
        case InfoMeasure::mutual_information: return "mutual_information";
        case InfoMeasure::multi_information: return "multi_information";
        case InfoMeasure::interaction_information: return "interaction_information";
    }
    return "?";
}

template <typename Scalar = double>
struct InfoResult {
    Scalar value{};
    InfoMeasure measure{};
    Scalar log_base{};
};

namespace detail {

template <typename Scalar>
Scalar bgs_of_subset(const JointTable<Scalar>& joint, const std::set<std::size_t>& keep,
                     Scalar log_base) {
    const JointTable<Scalar> sub = marginalize(joint, keep);
    return entropy_bgs(Pmf<Scalar>(sub.probs(), Scalar(kTolSumInternal)), log_base);
}

}  // namespace detail

/// I(Y_i; Y_j) = H(Y_i) + H(Y_j) - H(Y_i, Y_j), two-axis tables only.
template <typename Scalar>
InfoResult<Scalar> mutual_information(const JointTable<Scalar>& joint, Scalar log_base) {
    if (joint.arity() != 2)
        throw WrongArity("mutual information needs exactly 2 axes, got " +
                         std::to_string(joint.arity()));
    const Scalar h_joint =
        entropy_bgs(Pmf<Scalar>(joint.probs(), Scalar(kTolSumInternal)), log_base);
    const Scalar value = detail::bgs_of_subset(joint, {0}, log_base) +
                         detail::bgs_of_subset(joint, {1}, log_base) - h_joint;
    return {value, InfoMeasure::mutual_information, log_base};
}

/// Total macroscale dependence: sum of marginal entropies minus joint entropy.
template <typename Scalar>
InfoResult<Scalar> multi_information(const JointTable<Scalar>& joint, Scalar log_base) {
    if (joint.arity() < 2)
        throw WrongArity("multi-information needs at least 2 axes");
    Scalar marginal_sum = 0;
    for (std::size_t axis = 0; axis < joint.arity(); ++axis)
        marginal_sum += detail::bgs_of_subset(joint, {axis}, log_base);
    const Scalar h_joint =
        entropy_bgs(Pmf<Scalar>(joint.probs(), Scalar(kTolSumInternal)), log_base);
    return {marginal_sum - h_joint, InfoMeasure::multi_information, log_base};
}

// Alternating inclusion-exclusion over all nonempty subset entropies:
//   I_t = -(-1)^M sum_{Z != empty} (-1)^{|Z|} H(Z).
// The sign convention makes M = 2 reduce to mutual information and makes
// XOR-type triads come out positive (synergistic).
template <typename Scalar>
InfoResult<Scalar> interaction_information(const JointTable<Scalar>& joint,
                                           Scalar log_base) {
    const std::size_t arity = joint.arity();
    if (arity < 2) throw WrongArity("interaction information needs at least 2 axes");
    if (arity > kMaxInfoAxes)
        throw WrongArity("interaction information capped at " +
                         std::to_string(kMaxInfoAxes) + " axes");

    Scalar alternating = 0;
    for (std::uint32_t mask = 1; mask < (1u << arity); ++mask) {
        std::set<std::size_t> keep;
        for (std::size_t axis = 0; axis < arity; ++axis)
            if (mask & (1u << axis)) keep.insert(axis);
        const Scalar sign = (std::popcount(mask) % 2 == 0) ? Scalar(1) : Scalar(-1);
        alternating += sign * detail::bgs_of_subset(joint, keep, log_base);
    }
    const Scalar outer = (arity % 2 == 0) ? Scalar(-1) : Scalar(1);
    return {outer * alternating, InfoMeasure::interaction_information, log_base};
}

}  // namespace polyent

#endif  // POLYENT_CLASSIC_INFO_HPP
