#include "dixkit/network.hpp"

#include "dixkit/csv.hpp"
#include "dixkit/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace dixkit::nn {

void validate(const NetworkSpec &spec) {
    if (spec.input_dim == 0 || spec.classes == 0) {
        throw InvalidArgument("network input_dim and classes must be at least 1");
    }
    for (std::size_t h : spec.hidden) {
        if (h == 0) {
            throw InvalidArgument("hidden layer sizes must be at least 1");
        }
    }
    if (!(spec.dropout_rate >= 0.0 && spec.dropout_rate < 1.0)) {
        throw InvalidArgument(fmt::format("dropout rate must be in [0, 1) (got {})", spec.dropout_rate));
    }
}

std::vector<std::span<double>> ModelParams::tensors() {
    std::vector<std::span<double>> out;
    for (Layer &l : layers) {
        out.push_back(l.weights.flat());
        out.emplace_back(l.bias);
    }
    return out;
}

std::vector<std::span<const double>> ModelParams::tensors() const {
    std::vector<std::span<const double>> out;
    for (const Layer &l : layers) {
        out.push_back(l.weights.flat());
        out.emplace_back(l.bias);
    }
    return out;
}

std::size_t ModelParams::parameter_count() const {
    std::size_t n = 0;
    for (const auto &t : tensors()) {
        n += t.size();
    }
    return n;
}

namespace {

std::vector<std::size_t> layer_sizes(const NetworkSpec &spec) {
    std::vector<std::size_t> sizes{ spec.input_dim };
    sizes.insert(sizes.end(), spec.hidden.begin(), spec.hidden.end());
    sizes.push_back(spec.classes);
    return sizes;
}

// z = x W^T + b
Matrix affine(const Matrix &x, const Layer &layer) {
    const Matrix &w = layer.weights;
    Matrix z(x.rows(), w.rows());
    for (std::size_t r = 0; r < x.rows(); ++r) {
        const auto xr = x.row(r);
        for (std::size_t o = 0; o < w.rows(); ++o) {
            const auto wo = w.row(o);
            double acc = layer.bias[o];
            for (std::size_t i = 0; i < wo.size(); ++i) {
                acc += xr[i] * wo[i];
            }
            z(r, o) = acc;
        }
    }
    return z;
}

}  // namespace

ModelParams zero_params(const NetworkSpec &spec) {
    validate(spec);
    const auto sizes = layer_sizes(spec);
    ModelParams params;
    for (std::size_t l = 0; l + 1 < sizes.size(); ++l) {
        params.layers.push_back({ Matrix(sizes[l + 1], sizes[l]), std::vector<double>(sizes[l + 1], 0.0) });
    }
    return params;
}

ModelParams init_params(const NetworkSpec &spec, std::uint64_t seed) {
    ModelParams params = zero_params(spec);
    CounterRng rng(seed);
    for (Layer &layer : params.layers) {
        const double fan = static_cast<double>(layer.weights.rows() + layer.weights.cols());
        const double limit = std::sqrt(6.0 / fan);
        for (double &w : layer.weights.flat()) {
            w = rng.uniform_real(-limit, limit);
        }
    }
    return params;
}

void check_shapes(const NetworkSpec &spec, const ModelParams &params) {
    const auto sizes = layer_sizes(spec);
    if (params.layers.size() + 1 != sizes.size()) {
        throw InvalidArgument(fmt::format("model has {} layers, network expects {}", params.layers.size(), sizes.size() - 1));
    }
    for (std::size_t l = 0; l < params.layers.size(); ++l) {
        const Layer &layer = params.layers[l];
        if (layer.weights.rows() != sizes[l + 1] || layer.weights.cols() != sizes[l] || layer.bias.size() != sizes[l + 1]) {
            throw InvalidArgument(fmt::format("layer {} has shape {}x{} (bias {}), expected {}x{}", l, layer.weights.rows(),
                                              layer.weights.cols(), layer.bias.size(), sizes[l + 1], sizes[l]));
        }
    }
}

Matrix softmax(const Matrix &logits) {
    Matrix out(logits.rows(), logits.cols());
    for (std::size_t r = 0; r < logits.rows(); ++r) {
        const auto z = logits.row(r);
        const double peak = *std::max_element(z.begin(), z.end());
        double sum = 0.0;
        auto p = out.row(r);
        for (std::size_t c = 0; c < z.size(); ++c) {
            p[c] = std::exp(z[c] - peak);
            sum += p[c];
        }
        for (double &v : p) {
            v /= sum;
        }
    }
    return out;
}

ForwardPass forward_pass(const NetworkSpec &spec, const ModelParams &params, const Matrix &batch, Mode mode,
                         CounterRng &rng) {
    validate(spec);
    check_shapes(spec, params);
    if (batch.cols() != spec.input_dim) {
        throw InvalidArgument(fmt::format("batch has {} features, network expects {}", batch.cols(), spec.input_dim));
    }
    const bool dropout = mode == Mode::train && spec.dropout_rate > 0.0;
    const double keep_scale = 1.0 / (1.0 - spec.dropout_rate);

    ForwardPass pass;
    pass.inputs.push_back(batch);
    for (std::size_t l = 0; l < params.layers.size(); ++l) {
        Matrix z = affine(pass.inputs.back(), params.layers[l]);
        const bool last = l + 1 == params.layers.size();
        if (last) {
            pass.probabilities = softmax(z);
            pass.pre_activations.push_back(std::move(z));
            break;
        }
        Matrix a(z.rows(), z.cols());
        for (std::size_t k = 0; k < z.size(); ++k) {
            a.flat()[k] = z.flat()[k] > 0.0 ? z.flat()[k] : 0.0;
        }
        if (dropout) {
            Matrix mask(z.rows(), z.cols());
            for (std::size_t k = 0; k < mask.size(); ++k) {
                mask.flat()[k] = rng.uniform() >= spec.dropout_rate ? keep_scale : 0.0;
                a.flat()[k] *= mask.flat()[k];
            }
            pass.masks.push_back(std::move(mask));
        }
        pass.pre_activations.push_back(std::move(z));
        pass.inputs.push_back(std::move(a));
    }
    return pass;
}

Matrix forward(const NetworkSpec &spec, const ModelParams &params, const Matrix &batch, Mode mode, CounterRng &rng) {
    return forward_pass(spec, params, batch, mode, rng).probabilities;
}

double cross_entropy_loss(const Matrix &probabilities, std::span<const std::size_t> labels) {
    if (labels.size() != probabilities.rows()) {
        throw InvalidArgument(fmt::format("{} labels for {} rows", labels.size(), probabilities.rows()));
    }
    if (labels.empty()) {
        throw InvalidArgument("cross-entropy of an empty batch");
    }
    double total = 0.0;
    for (std::size_t r = 0; r < labels.size(); ++r) {
        if (labels[r] >= probabilities.cols()) {
            throw InvalidArgument(fmt::format("label {} out of range for {} classes", labels[r], probabilities.cols()));
        }
        total -= std::log(std::max(probabilities(r, labels[r]), kProbabilityFloor));
    }
    return total / static_cast<double>(labels.size());
}

ModelParams backward(const NetworkSpec &spec, const ModelParams &params, const ForwardPass &pass,
                     std::span<const std::size_t> labels) {
    const Matrix &probs = pass.probabilities;
    if (labels.size() != probs.rows()) {
        throw InvalidArgument(fmt::format("{} labels for a batch of {}", labels.size(), probs.rows()));
    }
    const auto batch = static_cast<double>(labels.size());

    // dL/dz at the softmax head: (p - onehot) / B
    Matrix delta = probs;
    for (std::size_t r = 0; r < labels.size(); ++r) {
        if (labels[r] >= spec.classes) {
            throw InvalidArgument(fmt::format("label {} out of range for {} classes", labels[r], spec.classes));
        }
        delta(r, labels[r]) -= 1.0;
    }
    for (double &v : delta.flat()) {
        v /= batch;
    }

    ModelParams grads = zero_params(spec);
    for (std::size_t l = params.layers.size(); l-- > 0;) {
        const Matrix &input = pass.inputs[l];
        Layer &g = grads.layers[l];
        for (std::size_t r = 0; r < delta.rows(); ++r) {
            const auto d = delta.row(r);
            const auto x = input.row(r);
            for (std::size_t o = 0; o < d.size(); ++o) {
                if (d[o] == 0.0) {
                    continue;
                }
                g.bias[o] += d[o];
                auto gw = g.weights.row(o);
                for (std::size_t i = 0; i < x.size(); ++i) {
                    gw[i] += d[o] * x[i];
                }
            }
        }
        if (l == 0) {
            break;
        }
        const Matrix &w = params.layers[l].weights;
        const Matrix &z = pass.pre_activations[l - 1];
        Matrix next(delta.rows(), w.cols());
        for (std::size_t r = 0; r < delta.rows(); ++r) {
            const auto d = delta.row(r);
            auto n = next.row(r);
            for (std::size_t o = 0; o < d.size(); ++o) {
                const auto wo = w.row(o);
                for (std::size_t i = 0; i < n.size(); ++i) {
                    n[i] += d[o] * wo[i];
                }
            }
            for (std::size_t i = 0; i < n.size(); ++i) {
                double local = z(r, i) > 0.0 ? 1.0 : 0.0;
                if (!pass.masks.empty()) {
                    local *= pass.masks[l - 1](r, i);
                }
                n[i] *= local;
            }
        }
        delta = std::move(next);
    }
    return grads;
}

ModelParams backward(const NetworkSpec &spec, const ModelParams &params, const Matrix &batch,
                     std::span<const std::size_t> labels, Mode mode, CounterRng &rng) {
    return backward(spec, params, forward_pass(spec, params, batch, mode, rng), labels);
}

void write_model(std::ostream &out, const NetworkSpec &spec, const ModelParams &params) {
    check_shapes(spec, params);
    out << "dixkit-model 1\n";
    out << "input_dim " << spec.input_dim << '\n';
    out << "hidden";
    for (std::size_t h : spec.hidden) {
        out << ' ' << h;
    }
    out << '\n';
    out << "classes " << spec.classes << '\n';
    out << fmt::format("dropout {}\n", spec.dropout_rate);
    for (std::size_t l = 0; l < params.layers.size(); ++l) {
        const Layer &layer = params.layers[l];
        out << fmt::format("layer {} {} {}\n", l, layer.weights.rows(), layer.weights.cols());
        for (std::size_t o = 0; o < layer.weights.rows(); ++o) {
            out << 'w';
            for (double v : layer.weights.row(o)) {
                out << fmt::format(" {}", v);
            }
            out << '\n';
        }
        out << 'b';
        for (double v : layer.bias) {
            out << fmt::format(" {}", v);
        }
        out << '\n';
    }
}

namespace {

class TokenLines {
  public:
    TokenLines(std::istream &in, std::string source) : source_(std::move(source)) {
        lines_ = csv::read_lines(in);
    }

    std::vector<std::string> next(const std::string &expected_key) {
        while (pos_ < lines_.size() && csv::trim(lines_[pos_].text).empty()) {
            ++pos_;
        }
        if (pos_ >= lines_.size()) {
            throw ParseError(source_, lines_.empty() ? 1 : lines_.back().number,
                             fmt::format("unexpected end of file, expected '{}'", expected_key));
        }
        line_ = lines_[pos_].number;
        std::istringstream ss(lines_[pos_++].text);
        std::vector<std::string> tokens;
        std::string t;
        while (ss >> t) {
            tokens.push_back(t);
        }
        if (tokens.empty() || tokens.front() != expected_key) {
            throw ParseError(source_, line_, fmt::format("expected '{}'", expected_key));
        }
        tokens.erase(tokens.begin());
        return tokens;
    }

    std::size_t size_value(const std::string &token) const {
        std::size_t v = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw ParseError(source_, line_, fmt::format("invalid integer '{}'", token));
        }
        return v;
    }

    double double_value(const std::string &token) const {
        double v = 0.0;
        if (!csv::parse_double(token, v)) {
            throw ParseError(source_, line_, fmt::format("invalid number '{}'", token));
        }
        return v;
    }

    void expect_count(const std::vector<std::string> &tokens, std::size_t n) const {
        if (tokens.size() != n) {
            throw ParseError(source_, line_, fmt::format("expected {} values, found {}", n, tokens.size()));
        }
    }

  private:
    std::vector<csv::Line> lines_;
    std::size_t pos_ = 0;
    std::size_t line_ = 0;
    std::string source_;
};

}  // namespace

LoadedModel read_model(std::istream &in, const std::string &source) {
    TokenLines lines(in, source);
    const auto magic = lines.next("dixkit-model");
    lines.expect_count(magic, 1);
    if (magic[0] != "1") {
        throw ParseError(source, 1, fmt::format("unsupported model format version '{}'", magic[0]));
    }
    LoadedModel model;
    auto t = lines.next("input_dim");
    lines.expect_count(t, 1);
    model.spec.input_dim = lines.size_value(t[0]);
    for (const auto &h : lines.next("hidden")) {
        model.spec.hidden.push_back(lines.size_value(h));
    }
    t = lines.next("classes");
    lines.expect_count(t, 1);
    model.spec.classes = lines.size_value(t[0]);
    t = lines.next("dropout");
    lines.expect_count(t, 1);
    model.spec.dropout_rate = lines.double_value(t[0]);
    try {
        validate(model.spec);
    } catch (const InvalidArgument &e) {
        throw DataError(source + ": " + e.what());
    }

    model.params = zero_params(model.spec);
    for (std::size_t l = 0; l < model.params.layers.size(); ++l) {
        Layer &layer = model.params.layers[l];
        t = lines.next("layer");
        lines.expect_count(t, 3);
        if (lines.size_value(t[0]) != l || lines.size_value(t[1]) != layer.weights.rows() ||
            lines.size_value(t[2]) != layer.weights.cols()) {
            throw DataError(fmt::format("{}: layer {} header does not match the network shape", source, l));
        }
        for (std::size_t o = 0; o < layer.weights.rows(); ++o) {
            t = lines.next("w");
            lines.expect_count(t, layer.weights.cols());
            for (std::size_t i = 0; i < t.size(); ++i) {
                layer.weights(o, i) = lines.double_value(t[i]);
            }
        }
        t = lines.next("b");
        lines.expect_count(t, layer.bias.size());
        for (std::size_t i = 0; i < t.size(); ++i) {
            layer.bias[i] = lines.double_value(t[i]);
        }
    }
    return model;
}

}  // namespace dixkit::nn
