#pragma once

#include "gabortiles/interval.hpp"

#include <stdexcept>

namespace gabortiles {

struct TimeFrequencyPoint {
    Scalar t;
    Scalar nu;
};

/// The two-interval window [0,alpha) u [alpha+beta, 1+beta), normalized so
/// that alpha in (0,1/2] and beta > 0; its measure is exactly 1.
class WindowParams {
public:
    WindowParams(Scalar alpha, Scalar beta)
        : alpha_(std::move(alpha)), beta_(std::move(beta)) {
        Scalar half(1, 2);
        if (!(Scalar(0) < alpha_) || half < alpha_)
            throw std::invalid_argument("alpha outside normalized regime (0, 1/2]");
        if (!(Scalar(0) < beta_)) throw std::invalid_argument("beta must be positive");
    }

    const Scalar& alpha() const { return alpha_; }
    const Scalar& beta() const { return beta_; }

    bool alpha_is_half() const { return alpha_ == Scalar(1, 2); }

    IntervalUnion set() const {
        return IntervalUnion::normalize(
            {{Scalar(0), alpha_}, {alpha_ + beta_, Scalar(1) + beta_}}, true);
    }

private:
    Scalar alpha_, beta_;
};

}  // namespace gabortiles
