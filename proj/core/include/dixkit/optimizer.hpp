#pragma once

#include "dixkit/network.hpp"

#include <string>

namespace dixkit::nn {

enum class OptimizerKind { adam, sgd_momentum, rmsprop };

[[nodiscard]] const char *to_string(OptimizerKind kind) noexcept;
[[nodiscard]] OptimizerKind parse_optimizer(const std::string &name);  // throws InvalidArgument

struct OptimizerConfig {
    OptimizerKind kind = OptimizerKind::adam;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    double momentum = 0.9;
    double rho = 0.9;
};

/// Moment buffers shaped like the parameters they update.
///
///   adam:         m <- b1 m + (1 - b1) g;  v <- b2 v + (1 - b2) g^2
///                 theta <- theta - lr * m_hat / (sqrt(v_hat) + eps)
///   sgd_momentum: u <- mu u + g;           theta <- theta - lr * u
///   rmsprop:      v <- rho v + (1 - rho) g^2
///                 theta <- theta - lr * g / (sqrt(v) + eps)
struct OptimizerState {
    OptimizerConfig config;
    std::size_t step = 0;
    ModelParams first;   // adam m, sgd velocity u
    ModelParams second;  // adam v, rmsprop v
};

OptimizerState make_optimizer_state(const OptimizerConfig &config, const ModelParams &like);

/// One update in place. Throws InvalidArgument if the state, parameter and
/// gradient shapes disagree or lr is not positive.
void optimizer_step(OptimizerState &state, ModelParams &params, const ModelParams &gradients, double learning_rate);

}  // namespace dixkit::nn
