#include "cli/commands.hpp"

#include "cli/output.hpp"

#include "dixkit/augment.hpp"
#include "dixkit/csv.hpp"
#include "dixkit/dataset.hpp"
#include "dixkit/ensemble.hpp"
#include "dixkit/error.hpp"
#include "dixkit/image_io.hpp"
#include "dixkit/metrics.hpp"
#include "dixkit/probability.hpp"
#include "dixkit/report.hpp"
#include "dixkit/toy_data.hpp"
#include "dixkit/trainer.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>

namespace dixkit::cli {

namespace fs = std::filesystem;

namespace {

// ---------------------------------------------------------------- split

struct SplitArgs {
    std::string manifest;
    double train = 0.7;
    double val = 0.2;
    std::uint64_t seed = 0;
    std::string out;
    bool force = false;
};

int cmd_split(const SplitArgs &args, std::ostream &out, std::ostream &err) {
    const dataset::DatasetManifest manifest = dataset::load_manifest(args.manifest, args.seed);
    const dataset::SplitAssignment split = dataset::stratified_split(manifest, args.train, args.val);
    for (const auto &w : split.warnings) {
        fmt::print(err, "warning: {}\n", w);
    }
    const auto counts = dataset::summarize(manifest, split);

    const OutputDir dir(args.out, args.force);
    // Relative image paths in a manifest file are relative to that file; remember where it was.
    const fs::path manifest_path(args.manifest);
    const fs::path root = fs::absolute(fs::is_directory(manifest_path) ? manifest_path : manifest_path.parent_path());
    dir.write("split.csv", [&](std::ostream &os) {
        os << "# root=" << root.generic_string() << '\n';
        dataset::write_split(os, manifest, split);
    });
    dir.write("split_summary.csv", [&](std::ostream &os) { dataset::write_summary(os, counts); });

    fmt::print(out, "{:<28} {:>8} {:>8} {:>11} {:>8}\n", "class", "total", "train", "validation", "test");
    dataset::SplitCounts total{ "Total" };
    for (const auto &c : counts) {
        fmt::print(out, "{:<28} {:>8} {:>8} {:>11} {:>8}\n", c.class_name, c.total, c.train, c.validation, c.test);
        total.total += c.total;
        total.train += c.train;
        total.validation += c.validation;
        total.test += c.test;
    }
    fmt::print(out, "{:<28} {:>8} {:>8} {:>11} {:>8}\n", total.class_name, total.total, total.train, total.validation,
               total.test);
    return kSuccess;
}

// -------------------------------------------------------------- augment

struct AugmentArgs {
    std::string split_file;
    std::vector<std::string> specs;
    std::string splits = "train";
    std::optional<std::uint64_t> seed;
    std::string image_root;
    std::string out;
    bool force = false;
};

std::set<dataset::Split> parse_split_list(const std::string &list) {
    std::set<dataset::Split> out;
    if (list == "all") {
        return { dataset::Split::train, dataset::Split::validation, dataset::Split::test };
    }
    for (const auto &name : csv::split_line(list)) {
        try {
            out.insert(dataset::parse_split(name));
        } catch (const DataError &e) {
            throw InvalidArgument(e.what());
        }
    }
    return out;
}

fs::path split_root(const fs::path &split_file) {
    std::string key;
    std::string value;
    for (const auto &[number, text] : csv::read_lines(split_file)) {
        if (!text.empty() && text.front() == '#' && csv::parse_metadata(text, key, value) && key == "root") {
            return value;
        }
    }
    return {};
}

// Search order: image root, the path as given, next to the split file.
fs::path resolve_image(const std::string &path, const fs::path &root, const fs::path &split_file) {
    const fs::path p(path);
    if (p.is_absolute()) {
        return p;
    }
    for (const fs::path &candidate : { root.empty() ? fs::path{} : root / p, p, split_file.parent_path() / p }) {
        if (!candidate.empty() && fs::exists(candidate)) {
            return candidate;
        }
    }
    throw DataError(fmt::format("image '{}' not found (looked under '{}')", path, root.string()));
}

int cmd_augment(const AugmentArgs &args, std::ostream &out, std::ostream &) {
    const dataset::LoadedSplit loaded = dataset::read_split(args.split_file);
    const auto wanted = parse_split_list(args.splits);
    const auto assignment = loaded.split.per_record(loaded.manifest.records.size());
    const fs::path root = args.image_root.empty() ? split_root(args.split_file) : fs::path(args.image_root);

    std::vector<std::pair<std::string, augment::AugmentSpec>> specs;
    for (const auto &path : args.specs) {
        augment::AugmentSpec spec = augment::load_spec(path);
        if (args.seed) {
            spec.seed = *args.seed;
        }
        specs.emplace_back(fs::path(path).stem().string(), std::move(spec));
    }

    const OutputDir dir(args.out, args.force);
    std::ostringstream log;
    log << "input,output,pipeline,stream_seed,operators\n";
    std::size_t written = 0;
    std::set<fs::path> produced;

    for (const auto &[name, spec] : specs) {
        for (std::size_t i = 0; i < loaded.manifest.records.size(); ++i) {
            if (wanted.count(assignment[i]) == 0) {
                continue;
            }
            const dataset::Record &record = loaded.manifest.records[i];
            const fs::path input = resolve_image(record.image_path, root, args.split_file);
            const fs::path folder = fs::path(name) / dataset::to_string(assignment[i]) /
                                    loaded.manifest.classes[record.label].name;
            const std::uint64_t stream_seed = mix_seed(spec.seed, i);

            fs::path relative;
            if (spec.ops.empty()) {
                relative = folder / input.filename();
            } else {
                relative = folder / input.stem();
                relative += ".png";
            }
            if (!produced.insert(relative).second) {
                throw DataError(fmt::format("two inputs map to the same output '{}'", relative.string()));
            }

            if (spec.ops.empty()) {
                dir.write_with(relative, [&](const fs::path &tmp) { fs::copy_file(input, tmp); });
            } else {
                CounterRng rng(stream_seed);
                const Image result = augment::apply_pipeline(io::read_image(input), spec, rng);
                dir.write_with(relative, [&](const fs::path &tmp) { io::write_png(tmp, result); });
            }

            std::vector<std::string> ops;
            for (const auto &op : spec.ops) {
                ops.push_back(augment::describe(op));
            }
            std::string joined;
            for (std::size_t k = 0; k < ops.size(); ++k) {
                joined += (k ? ";" : "") + ops[k];
            }
            log << csv::join({ record.image_path, relative.generic_string(), name, std::to_string(stream_seed), joined })
                << '\n';
            ++written;
        }
    }
    dir.write_text("augment_log.csv", log.str());
    fmt::print(out, "wrote {} image(s) to {}\n", written, dir.root().string());
    return kSuccess;
}

// ------------------------------------------------------------- ensemble

struct EnsembleArgs {
    std::vector<std::string> files;
    std::string strategy = "sop";
    std::vector<double> weights;
    bool renormalize = false;
    std::string out;
    bool force = false;
};

int cmd_ensemble(const EnsembleArgs &args, std::ostream &out, std::ostream &) {
    ensemble::EnsembleConfig config;
    config.strategy = ensemble::parse_strategy(args.strategy);
    if (!args.weights.empty()) {
        if (config.strategy != ensemble::Strategy::weighted_sum) {
            throw InvalidArgument("--weights only applies to the weighted strategy");
        }
        config.weights = args.weights;
    } else if (config.strategy == ensemble::Strategy::weighted_sum) {
        throw InvalidArgument("the weighted strategy needs --weights");
    }

    std::vector<predict::ProbabilityMatrix> matrices;
    for (const auto &f : args.files) {
        matrices.push_back(predict::parse_probability_file(f, { args.renormalize }));
    }
    const predict::ModelBundle bundle = predict::assemble_bundle(std::move(matrices));
    const ensemble::EnsembleResult result = ensemble::combine(bundle, config);

    const OutputDir dir(args.out, args.force);
    dir.write("ensemble_scores.csv",
              [&](std::ostream &os) { predict::write_probability(os, ensemble::to_probability_matrix(result)); });
    dir.write("ensemble_predictions.csv", [&](std::ostream &os) { ensemble::write_predictions(os, result); });

    const auto ties = static_cast<std::size_t>(std::count(result.ties.begin(), result.ties.end(), true));
    fmt::print(out, "{}: {} model(s), {} sample(s), {} class(es), {} tie(s)\n", ensemble::to_string(config.strategy),
               bundle.size(), bundle.samples(), bundle.classes(), ties);
    return kSuccess;
}

// ------------------------------------------------------------- evaluate

struct LabelFile {
    std::vector<std::string> declared_classes;
    std::vector<std::string> ids;
    std::vector<std::string> labels;
};

LabelFile read_label_file(const fs::path &path, const std::string &label_column) {
    LabelFile file;
    bool header_seen = false;
    std::set<std::string> seen;
    const std::string source = path.string();
    for (const auto &[number, text] : csv::read_lines(path)) {
        if (csv::trim(text).empty()) {
            continue;
        }
        std::vector<std::string> fields;
        try {
            if (text.front() == '#') {
                std::string key;
                std::string value;
                if (csv::parse_metadata(text, key, value) && key == "classes") {
                    file.declared_classes = csv::split_line(value);
                }
                continue;
            }
            fields = csv::split_line(text);
        } catch (const std::invalid_argument &e) {
            throw ParseError(source, number, e.what());
        }
        if (!header_seen) {
            if (fields.size() < 2 || fields[0] != "sample_id" || fields[1] != label_column) {
                throw ParseError(source, number, fmt::format("expected header 'sample_id,{}'", label_column));
            }
            header_seen = true;
            continue;
        }
        if (fields.size() < 2 || fields[0].empty() || fields[1].empty()) {
            throw ParseError(source, number, fmt::format("expected 'sample_id,{}'", label_column));
        }
        if (!seen.insert(fields[0]).second) {
            throw ParseError(source, number, fmt::format("duplicate sample_id '{}'", fields[0]));
        }
        file.ids.push_back(fields[0]);
        file.labels.push_back(fields[1]);
    }
    if (!header_seen || file.ids.empty()) {
        throw DataError(fmt::format("{}: no rows", source));
    }
    return file;
}

bool is_label_predictions(const fs::path &path) {
    for (const auto &[number, text] : csv::read_lines(path)) {
        if (csv::trim(text).empty() || text.front() == '#') {
            continue;
        }
        const auto fields = csv::split_line(text);
        return fields.size() >= 2 && fields[1] == "predicted_label";
    }
    return false;
}

struct EvaluateArgs {
    std::string predictions;
    std::string truth;
    std::string confusion;
    std::string out;
    bool svg = false;
    std::string title = "Confusion matrix";
    bool force = false;
};

metrics::ConfusionMatrix confusion_from_files(const EvaluateArgs &args) {
    const LabelFile truth = read_label_file(args.truth, "label");

    std::vector<std::string> classes;
    std::unordered_map<std::string, std::string> predicted_by_id;
    if (is_label_predictions(args.predictions)) {
        const LabelFile preds = read_label_file(args.predictions, "predicted_label");
        classes = preds.declared_classes;
        for (std::size_t i = 0; i < preds.ids.size(); ++i) {
            predicted_by_id.emplace(preds.ids[i], preds.labels[i]);
        }
    } else {
        const predict::ProbabilityMatrix pm = predict::parse_probability_file(args.predictions);
        classes = pm.class_names;
        for (std::size_t r = 0; r < pm.samples(); ++r) {
            predicted_by_id.emplace(pm.sample_ids[r], pm.class_names[ensemble::argmax(pm.rows.row(r)).index]);
        }
    }
    if (classes.empty()) {
        classes = truth.declared_classes;
    }
    if (classes.empty()) {
        std::set<std::string> names(truth.labels.begin(), truth.labels.end());
        for (const auto &[id, label] : predicted_by_id) {
            names.insert(label);
        }
        classes.assign(names.begin(), names.end());
    }

    std::unordered_map<std::string, std::size_t> index_of;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        index_of.emplace(classes[i], i);
    }
    const auto lookup = [&](const std::string &label, const std::string &where) {
        const auto it = index_of.find(label);
        if (it == index_of.end()) {
            throw DataError(fmt::format("{}: unknown class '{}'", where, label));
        }
        return it->second;
    };

    if (predicted_by_id.size() != truth.ids.size()) {
        throw DataError(fmt::format("sample ids differ: {} predictions vs {} truth rows", predicted_by_id.size(),
                                    truth.ids.size()));
    }
    std::vector<std::size_t> actual;
    std::vector<std::size_t> predicted;
    for (std::size_t i = 0; i < truth.ids.size(); ++i) {
        const auto it = predicted_by_id.find(truth.ids[i]);
        if (it == predicted_by_id.end()) {
            throw DataError(fmt::format("sample '{}' has no prediction", truth.ids[i]));
        }
        actual.push_back(lookup(truth.labels[i], args.truth));
        predicted.push_back(lookup(it->second, args.predictions));
    }
    return metrics::build_confusion(actual, predicted, classes);
}

int cmd_evaluate(const EvaluateArgs &args, std::ostream &out, std::ostream &) {
    const bool from_files = !args.predictions.empty() || !args.truth.empty();
    if (from_files == !args.confusion.empty() || (from_files && (args.predictions.empty() || args.truth.empty()))) {
        throw InvalidArgument("give either --predictions with --truth, or --confusion");
    }
    const metrics::ConfusionMatrix cm =
        from_files ? confusion_from_files(args) : report::read_confusion_csv(args.confusion);
    const metrics::MetricReport rep = metrics::report_from_confusion(cm);

    const OutputDir dir(args.out, args.force);
    dir.write("metrics.csv", [&](std::ostream &os) { report::write_metrics_csv(os, rep); });
    dir.write("metrics.txt", [&](std::ostream &os) { report::write_metrics_text(os, rep); });
    dir.write("confusion.csv", [&](std::ostream &os) { report::write_confusion_csv(os, cm); });
    if (args.svg) {
        dir.write("confusion.svg", [&](std::ostream &os) { report::write_confusion_svg(os, cm, args.title); });
    }
    report::write_metrics_text(out, rep);
    return kSuccess;
}

// ------------------------------------------------------------ train-toy

struct TrainArgs {
    std::string features;
    std::string out;
    std::uint64_t seed = 0;
    std::uint64_t split_seed = 0;
    double train = 0.7;
    double val = 0.2;
    std::size_t epochs = 60;
    std::size_t batch = 16;
    double lr = 1e-4;
    double dropout = 0.1;
    std::size_t patience = 10;
    std::string optimizer = "adam";
    std::vector<std::size_t> hidden{ 32, 32 };
    std::string model_name;
    bool force = false;
};

int cmd_train_toy(const TrainArgs &args, std::ostream &out, std::ostream &err) {
    const toy::FeatureTable table = toy::read_features(args.features);

    std::vector<dataset::Record> records;
    for (std::size_t i = 0; i < table.data.size(); ++i) {
        records.push_back({ table.data.sample_ids[i], table.data.labels[i] });
    }
    const auto manifest = dataset::make_manifest(table.class_names, records, args.split_seed);
    const auto split = dataset::stratified_split(manifest, args.train, args.val);
    for (const auto &w : split.warnings) {
        fmt::print(err, "warning: {}\n", w);
    }
    const nn::LabeledData train = nn::subset(table.data, split.train);
    const nn::LabeledData validation = nn::subset(table.data, split.validation);
    const nn::LabeledData test = nn::subset(table.data, split.test.empty() ? split.validation : split.test);

    const nn::NetworkSpec spec{ table.data.features.cols(), args.hidden, table.class_names.size(), args.dropout };
    nn::TrainingConfig config;
    config.epochs = args.epochs;
    config.batch_size = args.batch;
    config.learning_rate = args.lr;
    config.patience = args.patience;
    config.seed = args.seed;
    config.optimizer.kind = nn::parse_optimizer(args.optimizer);

    const nn::FitResult fit = nn::fit(spec, config, train, validation);
    const std::string model_name = args.model_name.empty() ? fmt::format("toy-seed{}", args.seed) : args.model_name;
    const nn::Evaluation test_eval = nn::evaluate(spec, fit.params, test);

    const OutputDir dir(args.out, args.force);
    dir.write("model.txt", [&](std::ostream &os) { nn::write_model(os, spec, fit.params); });
    dir.write("history.csv", [&](std::ostream &os) { nn::write_history(os, fit.history); });
    dir.write("predictions.csv", [&](std::ostream &os) {
        predict::write_probability(os, nn::export_predictions(spec, fit.params, test, table.class_names, model_name));
    });
    dir.write("truth.csv", [&](std::ostream &os) {
        os << "# classes=" << csv::join(table.class_names) << '\n' << "sample_id,label\n";
        for (std::size_t i = 0; i < test.size(); ++i) {
            os << csv::join({ test.sample_ids[i], table.class_names[test.labels[i]] }) << '\n';
        }
    });

    const auto &best = fit.history.at(fit.outcome.best_epoch - 1);
    fmt::print(out, "{}: {} epoch(s){}, best epoch {} (val loss {:.6f}, val acc {:.4f}), test acc {:.4f}\n", model_name,
               fit.outcome.epochs_run, fit.outcome.stopped_early ? " (early stop)" : "", best.epoch, best.val_loss,
               best.val_accuracy, test_eval.accuracy);
    return kSuccess;
}

// ------------------------------------------------------------- make-toy

struct MakeToyArgs {
    std::string out;
    std::size_t per_class = 500;
    double noise = 0.15;
    std::uint64_t seed = 7;
    bool force = false;
};

int cmd_make_toy(const MakeToyArgs &args, std::ostream &out, std::ostream &) {
    const toy::FeatureTable table = toy::make_moons(args.per_class, args.noise, args.seed);
    const fs::path target(args.out);
    const OutputDir dir(target.has_parent_path() ? target.parent_path() : fs::path("."), args.force);
    dir.write(target.filename(), [&](std::ostream &os) { toy::write_features(os, table); });
    fmt::print(out, "wrote {} samples ({} classes) to {}\n", table.data.size(), table.class_names.size(), args.out);
    return kSuccess;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{ "dixkit: stratified splits, augmentation, probability ensembles and metric reports" };
    app.require_subcommand(1);

    SplitArgs split;
    auto *split_cmd = app.add_subcommand("split", "Per-class stratified train/validation/test split");
    split_cmd->add_option("--manifest", split.manifest, "Manifest CSV (path,label) or a directory with one folder per class")
        ->required();
    split_cmd->add_option("--train", split.train, "Training fraction")->capture_default_str();
    split_cmd->add_option("--val", split.val, "Validation fraction")->capture_default_str();
    split_cmd->add_option("--seed", split.seed, "Shuffle seed")->capture_default_str();
    split_cmd->add_option("--out", split.out, "Output directory")->required();
    split_cmd->add_flag("--force", split.force, "Overwrite existing outputs");

    AugmentArgs aug;
    auto *aug_cmd = app.add_subcommand("augment", "Apply augmentation pipelines to the images of a split file");
    aug_cmd->add_option("--split", aug.split_file, "Split file written by 'split'")->required();
    aug_cmd->add_option("--spec", aug.specs, "Augmentation spec file (repeatable)")->required();
    aug_cmd->add_option("--splits", aug.splits, "Comma list of splits to augment, or 'all'")->capture_default_str();
    aug_cmd->add_option("--seed", aug.seed, "Override the seed of every spec");
    aug_cmd->add_option("--image-root", aug.image_root, "Directory that relative image paths are relative to");
    aug_cmd->add_option("--out", aug.out, "Output directory")->required();
    aug_cmd->add_flag("--force", aug.force, "Overwrite existing outputs");

    EnsembleArgs ens;
    auto *ens_cmd = app.add_subcommand("ensemble", "Combine per-model probability files");
    ens_cmd->add_option("files", ens.files, "Probability files, one per model")->required();
    ens_cmd->add_option("--strategy", ens.strategy, "sop | weighted | majority")->capture_default_str();
    ens_cmd->add_option("--weights", ens.weights, "Per-model weights for 'weighted'")->delimiter(',');
    ens_cmd->add_flag("--renormalize", ens.renormalize, "Rescale rows whose sum is within 1e-3 of 1");
    ens_cmd->add_option("--out", ens.out, "Output directory")->required();
    ens_cmd->add_flag("--force", ens.force, "Overwrite existing outputs");

    EvaluateArgs ev;
    auto *ev_cmd = app.add_subcommand("evaluate", "Confusion matrix and precision/recall/F1 report");
    ev_cmd->add_option("--predictions", ev.predictions, "Prediction labels or probability file");
    ev_cmd->add_option("--truth", ev.truth, "Ground truth file (sample_id,label)");
    ev_cmd->add_option("--confusion", ev.confusion, "Ready-made confusion matrix CSV instead of predictions");
    ev_cmd->add_option("--out", ev.out, "Output directory")->required();
    ev_cmd->add_flag("--svg", ev.svg, "Also write confusion.svg");
    ev_cmd->add_option("--title", ev.title, "SVG title")->capture_default_str();
    ev_cmd->add_flag("--force", ev.force, "Overwrite existing outputs");

    TrainArgs tr;
    auto *tr_cmd = app.add_subcommand("train-toy", "Train the dense softmax classifier on a feature file");
    tr_cmd->add_option("--features", tr.features, "Feature file (sample_id,label,x1,...)")->required();
    tr_cmd->add_option("--out", tr.out, "Output directory")->required();
    tr_cmd->add_option("--seed", tr.seed, "Initialization/shuffle/dropout seed")->capture_default_str();
    tr_cmd->add_option("--split-seed", tr.split_seed, "Seed of the stratified split")->capture_default_str();
    tr_cmd->add_option("--train", tr.train, "Training fraction")->capture_default_str();
    tr_cmd->add_option("--val", tr.val, "Validation fraction")->capture_default_str();
    tr_cmd->add_option("--epochs", tr.epochs, "Maximum epochs")->capture_default_str();
    tr_cmd->add_option("--batch", tr.batch, "Batch size")->capture_default_str();
    tr_cmd->add_option("--lr", tr.lr, "Learning rate")->capture_default_str();
    tr_cmd->add_option("--dropout", tr.dropout, "Dropout rate")->capture_default_str();
    tr_cmd->add_option("--patience", tr.patience, "Early-stopping patience")->capture_default_str();
    tr_cmd->add_option("--optimizer", tr.optimizer, "adam | sgd_momentum | rmsprop")->capture_default_str();
    tr_cmd->add_option("--hidden", tr.hidden, "Hidden layer sizes")->delimiter(',')->capture_default_str();
    tr_cmd->add_option("--model-name", tr.model_name, "Model name in the exported predictions");
    tr_cmd->add_flag("--force", tr.force, "Overwrite existing outputs");

    MakeToyArgs mk;
    auto *mk_cmd = app.add_subcommand("make-toy", "Write the four-class moons feature file");
    mk_cmd->add_option("--out", mk.out, "Output feature file")->required();
    mk_cmd->add_option("--per-class", mk.per_class, "Samples per class")->capture_default_str();
    mk_cmd->add_option("--noise", mk.noise, "Gaussian jitter")->capture_default_str();
    mk_cmd->add_option("--seed", mk.seed, "Generator seed")->capture_default_str();
    mk_cmd->add_flag("--force", mk.force, "Overwrite existing output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
    }

    try {
        if (*split_cmd) return cmd_split(split, out, err);
        if (*aug_cmd) return cmd_augment(aug, out, err);
        if (*ens_cmd) return cmd_ensemble(ens, out, err);
        if (*ev_cmd) return cmd_evaluate(ev, out, err);
        if (*tr_cmd) return cmd_train_toy(tr, out, err);
        if (*mk_cmd) return cmd_make_toy(mk, out, err);
    } catch (const InvalidArgument &e) {
        fmt::print(err, "error: {}\n", e.what());
        return kUsageError;
    } catch (const OverwriteRefused &e) {
        fmt::print(err, "error: {}\n", e.what());
        return kUsageError;
    } catch (const NumericError &e) {
        fmt::print(err, "numeric failure: {}\n", e.what());
        return kNumericError;
    } catch (const std::exception &e) {
        fmt::print(err, "error: {}\n", e.what());
        return kDataError;
    }
    return kUsageError;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    std::vector<const char *> argv{ "dixkit" };
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace dixkit::cli
