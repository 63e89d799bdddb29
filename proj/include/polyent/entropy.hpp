#ifndef POLYENT_ENTROPY_HPP
#define POLYENT_ENTROPY_HPP

#include <cmath>
#include <string>

#include "polyent/distribution.hpp"
#include "polyent/errors.hpp"

namespace polyent {

/// Two (q, r) values closer than this are evaluated on the analytic limit branch.
inline constexpr double kEpsParam = 1e-9;

// Parameters of the two-parameter entropy functional. The scale constant is
// fixed at 1: the expansion identities add entropy products to plain
// entropies, which only closes for unit scale.
template <typename Scalar = double>
struct EntropyParams {
    Scalar q;
    Scalar r;

    bool on_limit_seam() const { return std::abs(q - r) <= Scalar(kEpsParam); }
};

namespace detail {

template <typename Scalar>
void check_exponent(Scalar s) {
    if (!(s > Scalar(0)))
        throw NonPositiveExponent("exponent must be positive, got " + std::to_string(s));
}

// Neumaier-compensated sum of f(p_i) over the nonzero entries of `probs`.
template <typename Scalar, typename Term>
Scalar compensated_sum(const Vector<Scalar>& probs, Term term) {
    Scalar sum = 0, comp = 0;
    for (Eigen::Index i = 0; i < probs.size(); ++i) {
        if (probs[i] <= Scalar(0)) continue;
        const Scalar t = term(probs[i]);
        const Scalar next = sum + t;
        if (std::abs(sum) >= std::abs(t))
            comp += (sum - next) + t;
        else
            comp += (t - next) + sum;
        sum = next;
    }
    return sum + comp;
}

// Sum of p_i^s with 0^s = 0; powers as exp(s ln p).
template <typename Scalar>
Scalar power_sum_raw(const Vector<Scalar>& probs, Scalar s) {
    check_exponent(s);
    return compensated_sum<Scalar>(probs,
                                   [s](Scalar p) { return std::exp(s * std::log(p)); });
}

// Sum of p_i^s ln p_i over nonzero entries (the s-derivative of the power sum).
template <typename Scalar>
Scalar power_log_sum_raw(const Vector<Scalar>& probs, Scalar s) {
    check_exponent(s);
    return compensated_sum<Scalar>(
        probs, [s](Scalar p) { return std::exp(s * std::log(p)) * std::log(p); });
}

// H_{q,r} over a flat probability vector. Away from q = r this is
// (A_r - A_q)/(q - r); on the seam it is the analytic limit -sum p^q ln p.
template <typename Scalar>
Scalar entropy_generalized_raw(const Vector<Scalar>& probs,
                               const EntropyParams<Scalar>& params) {
    check_exponent(params.q);
    check_exponent(params.r);
    if (params.on_limit_seam())
        return -power_log_sum_raw<Scalar>(probs, params.q);
    return (power_sum_raw<Scalar>(probs, params.r) -
            power_sum_raw<Scalar>(probs, params.q)) /
           (params.q - params.r);
}

}  // namespace detail

template <typename Scalar>
Scalar power_sum(const Pmf<Scalar>& p, Scalar s) {
    return detail::power_sum_raw<Scalar>(p.probs(), s);
}

template <typename Scalar>
Scalar entropy_generalized(const Pmf<Scalar>& p, const EntropyParams<Scalar>& params) {
    return detail::entropy_generalized_raw<Scalar>(p.probs(), params);
}

/// One-parameter slice H_{q,1}; equals BGS in nats at q = 1.
template <typename Scalar>
Scalar entropy_tsallis(const Pmf<Scalar>& p, Scalar q) {
    return entropy_generalized(p, EntropyParams<Scalar>{q, Scalar(1)});
}

/// Classical -sum p log_a p, with 0 log 0 = 0. Base 2 gives bits, base e nats.
template <typename Scalar>
Scalar entropy_bgs(const Pmf<Scalar>& p, Scalar log_base) {
    if (!(log_base > Scalar(1)))
        throw BadBase("logarithm base must exceed 1, got " + std::to_string(log_base));
    const Scalar nats = detail::compensated_sum<Scalar>(
        p.probs(), [](Scalar v) { return -v * std::log(v); });
    return nats / std::log(log_base);
}

// Joint H_{q,r} of a factored system from marginal power sums alone:
// the joint power sum of a product distribution is the product of the
// marginal power sums, so cost is O(sum N_m) rather than O(prod N_m).
template <typename Scalar>
Scalar entropy_joint_factored(const FactoredSystem<Scalar>& system,
                              const EntropyParams<Scalar>& params) {
    detail::check_exponent(params.q);
    detail::check_exponent(params.r);
    const std::size_t arity = system.arity();

    if (params.on_limit_seam()) {
        // -sum_m (sum_i p^q ln p)_m * prod_{m' != m} A_q^{(m')}
        std::vector<Scalar> a(arity), l(arity);
        for (std::size_t m = 0; m < arity; ++m) {
            const auto& probs = system.marginal(m).probs();
            a[m] = detail::power_sum_raw<Scalar>(probs, params.q);
            l[m] = detail::power_log_sum_raw<Scalar>(probs, params.q);
        }
        Scalar total = 0;
        for (std::size_t m = 0; m < arity; ++m) {
            Scalar term = l[m];
            for (std::size_t k = 0; k < arity; ++k)
                if (k != m) term *= a[k];
            total -= term;
        }
        return total;
    }

    Scalar prod_r = 1, prod_q = 1;
    for (const auto& marginal : system.marginals()) {
        prod_r *= power_sum(marginal, params.r);
        prod_q *= power_sum(marginal, params.q);
    }
    return (prod_r - prod_q) / (params.q - params.r);
}

/// Treats the flat table as one Pmf over joint microstates (brute-force path).
template <typename Scalar>
Scalar entropy_joint_table(const JointTable<Scalar>& joint,
                           const EntropyParams<Scalar>& params) {
    return detail::entropy_generalized_raw<Scalar>(joint.probs(), params);
}

}  // namespace polyent

#endif  // POLYENT_ENTROPY_HPP
