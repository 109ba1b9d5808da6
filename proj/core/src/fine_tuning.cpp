#include "graddae/fine_tuning.hpp"

#include "graddae/early_stopping.hpp"

#include <stdexcept>
#include <string>

namespace graddae {

FineTuneResult fine_tune(const EncoderStack& enc, const Dataset& train, const Dataset& val,
                         const SgdHyper& opt, std::size_t patience, std::size_t max_epochs,
                         Rng& rng) {
    if (train.size() == 0 || val.size() == 0)
        throw std::invalid_argument("fine_tune: empty train or validation set");
    if (train.num_classes <= 0 || val.num_classes != train.num_classes)
        throw std::invalid_argument("fine_tune: class count mismatch (" +
                                    std::to_string(train.num_classes) + " vs " +
                                    std::to_string(val.num_classes) + ")");
    validate(opt);

    ClassifierNet net{enc, init_dense(enc.output_dim(),
                                      static_cast<std::size_t>(train.num_classes), rng)};
    SgdOptimizer optimizer(opt, net.encoder, net.output);
    EarlyStopping<ClassifierNet> stopper(patience);

    FineTuneResult result;
    const std::size_t n = train.size();
    auto perm = iota_indices(n);

    double val_err = classification_error(net, val.inputs, val.labels);
    result.val_errors.push_back(val_err);
    if (stopper.update(val_err, net) == StopSignal::stop) {
        result.net = stopper.best();
        result.best_val_error = stopper.best_metric();
        return result;
    }

    for (std::size_t e = 0; e < max_epochs; ++e) {
        rng.shuffle(perm);
        double loss_sum = 0.0;
        for (std::size_t start = 0; start < n; start += opt.batch_size) {
            const std::size_t len = std::min(opt.batch_size, n - start);
            const std::span<const std::size_t> batch_idx(perm.data() + start, len);
            const Matrix x = take_rows(train.inputs, batch_idx);
            std::vector<int> y(len);
            for (std::size_t i = 0; i < len; ++i) y[i] = train.labels[batch_idx[i]];
            auto [loss, grads] = classifier_loss_and_grad(net, x, y);
            loss_sum += loss * static_cast<double>(len);
            optimizer.step(net.encoder, net.output, grads);
        }
        result.train_losses.push_back(loss_sum / static_cast<double>(n));
        ++result.epochs_trained;

        val_err = classification_error(net, val.inputs, val.labels);
        result.val_errors.push_back(val_err);
        if (stopper.update(val_err, net) == StopSignal::stop) break;
    }

    result.net = stopper.best();
    result.best_val_error = stopper.best_metric();
    return result;
}

}  // namespace graddae
