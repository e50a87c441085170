#pragma once

#include "dixkit/early_stopping.hpp"
#include "dixkit/network.hpp"
#include "dixkit/optimizer.hpp"
#include "dixkit/probability.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace dixkit::nn {

/// Defaults are the reference schedule: 60 epochs, batch 16, lr 1e-4, Adam,
/// patience 10.
struct TrainingConfig {
    std::size_t epochs = 60;
    std::size_t batch_size = 16;
    double learning_rate = 1e-4;
    OptimizerConfig optimizer;
    std::size_t patience = 10;
    double min_delta = 1e-6;
    std::uint64_t seed = 0;
    // Abort once any parameter magnitude exceeds this. The clamped loss stays finite
    // under bounded-step optimizers even when training has blown up. 0 disables.
    double divergence_limit = 1e5;
};

void validate(const TrainingConfig &config);

struct LabeledData {
    Matrix features;                  // N x input_dim
    std::vector<std::size_t> labels;  // N
    std::vector<std::string> sample_ids;

    [[nodiscard]] std::size_t size() const noexcept { return labels.size(); }
};

[[nodiscard]] LabeledData subset(const LabeledData &data, std::span<const std::size_t> indices);

struct EpochRecord {
    std::size_t epoch = 0;
    double train_loss = 0.0;
    double train_accuracy = 0.0;
    double val_loss = 0.0;
    double val_accuracy = 0.0;
};

struct FitResult {
    ModelParams params;  // best-epoch parameters
    std::vector<EpochRecord> history;
    EarlyStopOutcome outcome;
};

/// Mini-batch training with a seeded per-epoch shuffle (last partial batch
/// kept). After every epoch the validation loss feeds early stopping; the
/// returned parameters are those of the best validation epoch.
///
/// Throws InvalidArgument on empty sets or bad config, NumericError when a
/// loss or parameter becomes non-finite.
FitResult fit(const NetworkSpec &spec, const TrainingConfig &config, const LabeledData &train, const LabeledData &validation);

struct Evaluation {
    double loss = 0.0;
    double accuracy = 0.0;
};

/// Eval-mode loss and accuracy over a whole dataset.
Evaluation evaluate(const NetworkSpec &spec, const ModelParams &params, const LabeledData &data);

/// Eval-mode probabilities for every sample, packaged for the ensemble.
predict::ProbabilityMatrix export_predictions(const NetworkSpec &spec, const ModelParams &params, const LabeledData &data,
                                              const std::vector<std::string> &class_names, const std::string &model_name);

/// `epoch,train_loss,train_acc,val_loss,val_acc`
void write_history(std::ostream &out, const std::vector<EpochRecord> &history);

}  // namespace dixkit::nn
