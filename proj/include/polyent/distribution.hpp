#ifndef POLYENT_DISTRIBUTION_HPP
#define POLYENT_DISTRIBUTION_HPP

#include <Eigen/Core>
#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polyent/errors.hpp"

namespace polyent {

/// Normalization tolerance for externally supplied probability vectors.
inline constexpr double kTolSumInput = 1e-9;
/// Tighter tolerance for tables produced internally from validated inputs.
inline constexpr double kTolSumInternal = 1e-12;

/// Default cap on materialized joint-table cells.
inline constexpr std::int64_t kDefaultMaxCells = 10'000'000;

template <typename Scalar>
using Vector = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

namespace detail {

template <typename Scalar>
void check_probability_vector(const Vector<Scalar>& probs, Scalar tol_sum) {
    if (probs.size() < 1) throw NotNormalized("empty probability vector");
    if ((probs < Scalar(0)).any())
        throw NegativeProbability("probability vector has a negative entry");
    const Scalar total = probs.sum();
    if (std::abs(total - Scalar(1)) > tol_sum)
        throw NotNormalized("probabilities sum to " + std::to_string(total) +
                            ", expected 1 within tolerance");
}

}  // namespace detail

// A finite discrete probability mass function. Entries are taken as-is;
// inputs that do not sum to 1 are rejected, never renormalized.
template <typename Scalar = double>
class Pmf {
public:
    explicit Pmf(Vector<Scalar> probs, Scalar tol_sum = Scalar(kTolSumInput))
        : probs_(std::move(probs)) {
        detail::check_probability_vector<Scalar>(probs_, tol_sum);
    }

    Pmf(std::initializer_list<Scalar> probs)
        : Pmf(Eigen::Map<const Vector<Scalar>>(probs.begin(),
                                               static_cast<Eigen::Index>(probs.size()))
                  .eval()) {}

    const Vector<Scalar>& probs() const { return probs_; }
    Eigen::Index size() const { return probs_.size(); }

private:
    Vector<Scalar> probs_;
};

template <typename Scalar = double>
Pmf<Scalar> validate_pmf(const std::vector<Scalar>& probs) {
    return Pmf<Scalar>(Eigen::Map<const Vector<Scalar>>(
                           probs.data(), static_cast<Eigen::Index>(probs.size()))
                           .eval());
}

// Ordered marginals whose joint is their product by construction.
// The joint is never stored unless materialized explicitly.
template <typename Scalar = double>
class FactoredSystem {
public:
    explicit FactoredSystem(std::vector<Pmf<Scalar>> marginals)
        : marginals_(std::move(marginals)) {
        if (marginals_.empty())
            throw ArityTooSmall("a factored system needs at least one marginal");
    }

    const std::vector<Pmf<Scalar>>& marginals() const { return marginals_; }
    const Pmf<Scalar>& marginal(std::size_t m) const { return marginals_.at(m); }
    std::size_t arity() const { return marginals_.size(); }

    std::int64_t cell_count() const {
        std::int64_t n = 1;
        for (const auto& m : marginals_) n *= static_cast<std::int64_t>(m.size());
        return n;
    }

private:
    std::vector<Pmf<Scalar>> marginals_;
};

// Explicit M-dimensional probability table, flat row-major storage.
template <typename Scalar = double>
class JointTable {
public:
    JointTable(std::vector<Eigen::Index> shape, Vector<Scalar> probs,
               Scalar tol_sum = Scalar(kTolSumInput))
        : shape_(std::move(shape)), probs_(std::move(probs)) {
        if (shape_.empty()) throw BadAxis("joint table needs at least one axis");
        Eigen::Index cells = 1;
        for (Eigen::Index n : shape_) {
            if (n < 1) throw BadAxis("axis extents must be positive");
            cells *= n;
        }
        if (cells != probs_.size())
            throw NotNormalized("flat length does not match the product of the shape");
        detail::check_probability_vector<Scalar>(probs_, tol_sum);
    }

    const std::vector<Eigen::Index>& shape() const { return shape_; }
    const Vector<Scalar>& probs() const { return probs_; }
    std::size_t arity() const { return shape_.size(); }
    Eigen::Index cells() const { return probs_.size(); }

private:
    std::vector<Eigen::Index> shape_;
    Vector<Scalar> probs_;
};

// Expands a factored system into its explicit joint table.
// Row-major, so the table is the sequential Kronecker product of the marginals.
template <typename Scalar>
JointTable<Scalar> materialize(const FactoredSystem<Scalar>& system,
                               std::int64_t max_cells = kDefaultMaxCells) {
    if (system.cell_count() > max_cells)
        throw TooLarge("joint table would have " + std::to_string(system.cell_count()) +
                       " cells, cap is " + std::to_string(max_cells));

    Vector<Scalar> flat = Vector<Scalar>::Ones(1);
    std::vector<Eigen::Index> shape;
    shape.reserve(system.arity());
    for (const auto& marginal : system.marginals()) {
        const Vector<Scalar>& p = marginal.probs();
        Vector<Scalar> next(flat.size() * p.size());
        for (Eigen::Index i = 0; i < flat.size(); ++i)
            next.segment(i * p.size(), p.size()) = flat[i] * p;
        flat = std::move(next);
        shape.push_back(p.size());
    }
    return JointTable<Scalar>(std::move(shape), std::move(flat),
                              Scalar(kTolSumInternal));
}

// Sums out every axis not listed in `keep`; kept axes stay in original order.
template <typename Scalar>
JointTable<Scalar> marginalize(const JointTable<Scalar>& joint,
                               const std::set<std::size_t>& keep) {
    const std::size_t arity = joint.arity();
    if (keep.empty()) throw BadAxis("keep set must be non-empty");
    for (std::size_t axis : keep)
        if (axis >= arity) throw BadAxis("axis " + std::to_string(axis) + " out of range");

    std::vector<Eigen::Index> out_shape;
    for (std::size_t axis = 0; axis < arity; ++axis)
        if (keep.count(axis)) out_shape.push_back(joint.shape()[axis]);

    // Row-major strides of the kept axes within the output table.
    std::vector<Eigen::Index> out_stride(arity, 0);
    {
        Eigen::Index stride = 1;
        for (std::size_t axis = arity; axis-- > 0;) {
            if (keep.count(axis)) {
                out_stride[axis] = stride;
                stride *= joint.shape()[axis];
            }
        }
    }

    Eigen::Index out_cells = 1;
    for (Eigen::Index n : out_shape) out_cells *= n;
    Vector<Scalar> out = Vector<Scalar>::Zero(out_cells);

    std::vector<Eigen::Index> index(arity, 0);
    const Vector<Scalar>& p = joint.probs();
    for (Eigen::Index cell = 0; cell < joint.cells(); ++cell) {
        Eigen::Index target = 0;
        for (std::size_t axis = 0; axis < arity; ++axis)
            target += index[axis] * out_stride[axis];
        out[target] += p[cell];
        for (std::size_t axis = arity; axis-- > 0;) {
            if (++index[axis] < joint.shape()[axis]) break;
            index[axis] = 0;
        }
    }
    return JointTable<Scalar>(std::move(out_shape), std::move(out),
                              Scalar(kTolSumInternal));
}

// Largest absolute cellwise gap between the joint and the product of its
// own marginals; zero (to rounding) exactly when the joint factorizes.
template <typename Scalar>
Scalar independence_defect(const JointTable<Scalar>& joint) {
    std::vector<Pmf<Scalar>> marginals;
    marginals.reserve(joint.arity());
    for (std::size_t axis = 0; axis < joint.arity(); ++axis) {
        JointTable<Scalar> m = marginalize(joint, {axis});
        marginals.emplace_back(m.probs(), Scalar(kTolSumInternal));
    }
    JointTable<Scalar> product =
        materialize(FactoredSystem<Scalar>(std::move(marginals)),
                    joint.cells());
    return (joint.probs() - product.probs()).abs().maxCoeff();
}

}  // namespace polyent

#endif  // POLYENT_DISTRIBUTION_HPP
