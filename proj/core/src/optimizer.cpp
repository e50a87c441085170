#include "dixkit/optimizer.hpp"

#include "dixkit/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace dixkit::nn {

const char *to_string(OptimizerKind kind) noexcept {
    switch (kind) {
        case OptimizerKind::adam: return "adam";
        case OptimizerKind::sgd_momentum: return "sgd_momentum";
        case OptimizerKind::rmsprop: return "rmsprop";
    }
    return "?";
}

OptimizerKind parse_optimizer(const std::string &name) {
    if (name == "adam") return OptimizerKind::adam;
    if (name == "sgd_momentum" || name == "sgd") return OptimizerKind::sgd_momentum;
    if (name == "rmsprop") return OptimizerKind::rmsprop;
    throw InvalidArgument(fmt::format("unknown optimizer '{}'", name));
}

namespace {

ModelParams zeros_like(const ModelParams &like) {
    ModelParams out = like;
    for (auto t : out.tensors()) {
        std::fill(t.begin(), t.end(), 0.0);
    }
    return out;
}

bool same_shape(const ModelParams &a, const ModelParams &b) {
    const auto ta = a.tensors();
    const auto tb = b.tensors();
    if (ta.size() != tb.size()) {
        return false;
    }
    for (std::size_t i = 0; i < ta.size(); ++i) {
        if (ta[i].size() != tb[i].size()) {
            return false;
        }
    }
    for (std::size_t l = 0; l < a.layers.size(); ++l) {
        if (a.layers[l].weights.rows() != b.layers[l].weights.rows()) {
            return false;
        }
    }
    return true;
}

}  // namespace

OptimizerState make_optimizer_state(const OptimizerConfig &config, const ModelParams &like) {
    if (config.kind == OptimizerKind::adam &&
        !(config.beta1 >= 0.0 && config.beta1 < 1.0 && config.beta2 >= 0.0 && config.beta2 < 1.0)) {
        throw InvalidArgument("adam betas must be in [0, 1)");
    }
    if (!(config.epsilon > 0.0)) {
        throw InvalidArgument("optimizer epsilon must be positive");
    }
    if (!(config.momentum >= 0.0 && config.momentum < 1.0) || !(config.rho >= 0.0 && config.rho < 1.0)) {
        throw InvalidArgument("momentum and rho must be in [0, 1)");
    }
    return OptimizerState{ config, 0, zeros_like(like), zeros_like(like) };
}

void optimizer_step(OptimizerState &state, ModelParams &params, const ModelParams &gradients, double learning_rate) {
    if (!(learning_rate > 0.0)) {
        throw InvalidArgument(fmt::format("learning rate must be positive (got {})", learning_rate));
    }
    if (!same_shape(params, gradients) || !same_shape(params, state.first) || !same_shape(params, state.second)) {
        throw InvalidArgument("optimizer state, parameters and gradients have different shapes");
    }
    ++state.step;
    const OptimizerConfig &cfg = state.config;
    auto theta = params.tensors();
    auto grads = gradients.tensors();
    auto first = state.first.tensors();
    auto second = state.second.tensors();

    const double t = static_cast<double>(state.step);
    const double bias1 = 1.0 - std::pow(cfg.beta1, t);
    const double bias2 = 1.0 - std::pow(cfg.beta2, t);

    for (std::size_t k = 0; k < theta.size(); ++k) {
        for (std::size_t i = 0; i < theta[k].size(); ++i) {
            const double g = grads[k][i];
            switch (cfg.kind) {
                case OptimizerKind::adam: {
                    first[k][i] = cfg.beta1 * first[k][i] + (1.0 - cfg.beta1) * g;
                    second[k][i] = cfg.beta2 * second[k][i] + (1.0 - cfg.beta2) * g * g;
                    const double m_hat = first[k][i] / bias1;
                    const double v_hat = second[k][i] / bias2;
                    theta[k][i] -= learning_rate * m_hat / (std::sqrt(v_hat) + cfg.epsilon);
                    break;
                }
                case OptimizerKind::sgd_momentum:
                    first[k][i] = cfg.momentum * first[k][i] + g;
                    theta[k][i] -= learning_rate * first[k][i];
                    break;
                case OptimizerKind::rmsprop:
                    second[k][i] = cfg.rho * second[k][i] + (1.0 - cfg.rho) * g * g;
                    theta[k][i] -= learning_rate * g / (std::sqrt(second[k][i]) + cfg.epsilon);
                    break;
            }
        }
    }
}

}  // namespace dixkit::nn
