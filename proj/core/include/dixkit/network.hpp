#pragma once

#include "dixkit/matrix.hpp"
#include "dixkit/rng.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace dixkit::nn {

/// Dense ReLU network with a softmax head. Dropout follows every hidden
/// activation in train mode.
struct NetworkSpec {
    std::size_t input_dim = 1;
    std::vector<std::size_t> hidden;
    std::size_t classes = 2;
    double dropout_rate = 0.0;
};

/// Throws InvalidArgument if any dimension is zero or dropout is not in [0, 1).
void validate(const NetworkSpec &spec);

struct Layer {
    Matrix weights;  // out x in
    std::vector<double> bias;

    friend bool operator==(const Layer &, const Layer &) = default;
};

struct ModelParams {
    std::vector<Layer> layers;

    /// Every weight matrix and bias vector as a flat span, in layer order.
    [[nodiscard]] std::vector<std::span<double>> tensors();
    [[nodiscard]] std::vector<std::span<const double>> tensors() const;
    [[nodiscard]] std::size_t parameter_count() const;

    friend bool operator==(const ModelParams &, const ModelParams &) = default;
};

/// All-zero parameters with the shapes of `spec`.
ModelParams zero_params(const NetworkSpec &spec);

/// Glorot-uniform weights in +-sqrt(6 / (fan_in + fan_out)), zero biases.
ModelParams init_params(const NetworkSpec &spec, std::uint64_t seed);

/// Throws InvalidArgument if the shapes disagree with `spec`.
void check_shapes(const NetworkSpec &spec, const ModelParams &params);

enum class Mode { train, eval };

/// Everything backward() needs from the paired forward pass.
struct ForwardPass {
    std::vector<Matrix> inputs;          // layer inputs; inputs[0] is the batch
    std::vector<Matrix> pre_activations; // z for each layer
    std::vector<Matrix> masks;           // dropout multipliers per hidden layer (empty in eval)
    Matrix probabilities;                // B x classes
};

/// Runs the network. In train mode each hidden unit is kept with probability
/// 1 - p and scaled by 1 / (1 - p), one uniform draw per unit in row-major
/// order per hidden layer.
ForwardPass forward_pass(const NetworkSpec &spec, const ModelParams &params, const Matrix &batch, Mode mode,
                         CounterRng &rng);

/// Probabilities only.
Matrix forward(const NetworkSpec &spec, const ModelParams &params, const Matrix &batch, Mode mode, CounterRng &rng);

/// Row-wise numerically stable softmax.
Matrix softmax(const Matrix &logits);

inline constexpr double kProbabilityFloor = 1e-12;

/// Mean over the batch of -log(max(p_true, 1e-12)).
double cross_entropy_loss(const Matrix &probabilities, std::span<const std::size_t> labels);

/// Exact gradients of the mean cross-entropy for the given forward pass
/// (same dropout masks). ReLU'(0) is taken as 0.
ModelParams backward(const NetworkSpec &spec, const ModelParams &params, const ForwardPass &pass,
                     std::span<const std::size_t> labels);

/// Forward then backward in one call.
ModelParams backward(const NetworkSpec &spec, const ModelParams &params, const Matrix &batch,
                     std::span<const std::size_t> labels, Mode mode, CounterRng &rng);

/// Text format with shape headers:
///
///     dixkit-model 1
///     input_dim <d>
///     hidden <h1> <h2> ...
///     classes <m>
///     dropout <p>
///     layer <index> <out> <in>
///     w <in values>          (one line per output unit)
///     b <out values>
///
/// Values use shortest round-trip decimals, so read(write(x)) == x.
void write_model(std::ostream &out, const NetworkSpec &spec, const ModelParams &params);

struct LoadedModel {
    NetworkSpec spec;
    ModelParams params;
};

LoadedModel read_model(std::istream &in, const std::string &source = "<model>");

}  // namespace dixkit::nn
