#include "dixkit/trainer.hpp"

#include "dixkit/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

namespace dixkit::nn {

void validate(const TrainingConfig &config) {
    if (config.epochs == 0 || config.batch_size == 0 || config.patience == 0) {
        throw InvalidArgument("epochs, batch_size and patience must be at least 1");
    }
    if (!(config.learning_rate > 0.0) || !std::isfinite(config.learning_rate)) {
        throw InvalidArgument(fmt::format("learning rate must be positive (got {})", config.learning_rate));
    }
    if (!(config.divergence_limit >= 0.0)) {
        throw InvalidArgument("divergence limit must be non-negative");
    }
}

LabeledData subset(const LabeledData &data, std::span<const std::size_t> indices) {
    LabeledData out;
    out.features = gather_rows(data.features, indices);
    for (std::size_t i : indices) {
        out.labels.push_back(data.labels.at(i));
        if (!data.sample_ids.empty()) {
            out.sample_ids.push_back(data.sample_ids.at(i));
        }
    }
    return out;
}

namespace {

void check_data(const NetworkSpec &spec, const LabeledData &data, const char *what) {
    if (data.size() == 0) {
        throw InvalidArgument(fmt::format("{} set is empty", what));
    }
    if (data.features.rows() != data.size() || data.features.cols() != spec.input_dim) {
        throw InvalidArgument(fmt::format("{} set has {}x{} features for {} labels; network expects {} inputs", what,
                                          data.features.rows(), data.features.cols(), data.size(), spec.input_dim));
    }
    for (std::size_t label : data.labels) {
        if (label >= spec.classes) {
            throw InvalidArgument(fmt::format("{} set has label {} but the network has {} classes", what, label, spec.classes));
        }
    }
}

std::size_t count_correct(const Matrix &probs, std::span<const std::size_t> labels) {
    std::size_t correct = 0;
    for (std::size_t r = 0; r < labels.size(); ++r) {
        const auto row = probs.row(r);
        const auto best = static_cast<std::size_t>(std::max_element(row.begin(), row.end()) - row.begin());
        correct += best == labels[r] ? 1 : 0;
    }
    return correct;
}

void check_finite(const ModelParams &params, std::size_t epoch, double limit) {
    for (const auto &t : params.tensors()) {
        for (double v : t) {
            if (!std::isfinite(v)) {
                throw NumericError(fmt::format("epoch {}: parameters diverged to a non-finite value", epoch));
            }
            if (limit > 0.0 && std::abs(v) > limit) {
                throw NumericError(fmt::format("epoch {}: parameter magnitude {:.3g} exceeds the divergence limit {:.3g}; "
                                               "lower the learning rate",
                                               epoch, std::abs(v), limit));
            }
        }
    }
}

}  // namespace

Evaluation evaluate(const NetworkSpec &spec, const ModelParams &params, const LabeledData &data) {
    CounterRng unused(0);
    const Matrix probs = forward(spec, params, data.features, Mode::eval, unused);
    return { cross_entropy_loss(probs, data.labels),
             static_cast<double>(count_correct(probs, data.labels)) / static_cast<double>(data.size()) };
}

FitResult fit(const NetworkSpec &spec, const TrainingConfig &config, const LabeledData &train, const LabeledData &validation) {
    validate(spec);
    validate(config);
    check_data(spec, train, "training");
    check_data(spec, validation, "validation");

    FitResult result;
    result.params = init_params(spec, mix_seed(config.seed, 0));
    OptimizerState opt = make_optimizer_state(config.optimizer, result.params);
    CounterRng shuffle_rng(mix_seed(config.seed, 1));
    CounterRng dropout_rng(mix_seed(config.seed, 2));

    std::vector<std::size_t> order(train.size());
    EarlyStopping monitor(config.patience, config.min_delta);

    const auto run_epoch = [&](std::size_t epoch, ModelParams &params) {
        std::iota(order.begin(), order.end(), std::size_t{ 0 });
        shuffle(std::span<std::size_t>(order), shuffle_rng);

        double loss_sum = 0.0;
        std::size_t correct = 0;
        for (std::size_t start = 0; start < order.size(); start += config.batch_size) {
            const std::size_t end = std::min(order.size(), start + config.batch_size);
            const std::span<const std::size_t> idx(order.data() + start, end - start);
            const Matrix batch = gather_rows(train.features, idx);
            std::vector<std::size_t> labels;
            for (std::size_t i : idx) {
                labels.push_back(train.labels[i]);
            }
            const ForwardPass pass = forward_pass(spec, params, batch, Mode::train, dropout_rng);
            const double loss = cross_entropy_loss(pass.probabilities, labels);
            if (!std::isfinite(loss)) {
                throw NumericError(fmt::format("epoch {}: training loss is {}", epoch, loss));
            }
            loss_sum += loss * static_cast<double>(labels.size());
            correct += count_correct(pass.probabilities, labels);
            optimizer_step(opt, params, backward(spec, params, pass, labels), config.learning_rate);
        }
        check_finite(params, epoch, config.divergence_limit);

        const Evaluation val = evaluate(spec, params, validation);
        if (!std::isfinite(val.loss)) {
            throw NumericError(fmt::format("epoch {}: validation loss is {}", epoch, val.loss));
        }
        const auto n = static_cast<double>(train.size());
        result.history.push_back({ epoch, loss_sum / n, static_cast<double>(correct) / n, val.loss, val.accuracy });
        return val.loss;
    };

    result.outcome = run_with_early_stopping(config.epochs, monitor, result.params, run_epoch);
    return result;
}

predict::ProbabilityMatrix export_predictions(const NetworkSpec &spec, const ModelParams &params, const LabeledData &data,
                                              const std::vector<std::string> &class_names, const std::string &model_name) {
    if (class_names.size() != spec.classes) {
        throw InvalidArgument(fmt::format("{} class names for a {}-class network", class_names.size(), spec.classes));
    }
    if (data.sample_ids.size() != data.size()) {
        throw InvalidArgument("export needs one sample id per row");
    }
    CounterRng unused(0);
    predict::ProbabilityMatrix pm;
    pm.model_name = model_name;
    pm.class_names = class_names;
    pm.sample_ids = data.sample_ids;
    pm.rows = forward(spec, params, data.features, Mode::eval, unused);
    return pm;
}

void write_history(std::ostream &out, const std::vector<EpochRecord> &history) {
    out << "epoch,train_loss,train_acc,val_loss,val_acc\n";
    for (const EpochRecord &e : history) {
        out << fmt::format("{},{},{},{},{}\n", e.epoch, e.train_loss, e.train_accuracy, e.val_loss, e.val_accuracy);
    }
}

}  // namespace dixkit::nn
