#pragma once

#include "graddae/classifier.hpp"
#include "graddae/dataset.hpp"
#include "graddae/optimizer.hpp"

namespace graddae {

struct FineTuneResult {
    ClassifierNet net;                // best validation snapshot
    double best_val_error = 0.0;
    std::vector<double> val_errors;   // index 0 is the untrained baseline
    std::vector<double> train_losses; // per training epoch
    std::size_t epochs_trained = 0;
};

/// Supervised fine-tuning from pretrained encoder weights: a randomly
/// initialized classification layer goes on top and every layer trains on
/// softmax NLL. Validation classification error is evaluated before training
/// and after every epoch; patience epochs without improvement stop the run
/// and the best snapshot is returned. No input corruption here.
FineTuneResult fine_tune(const EncoderStack& enc, const Dataset& train, const Dataset& val,
                         const SgdHyper& opt, std::size_t patience, std::size_t max_epochs,
                         Rng& rng);

}  // namespace graddae
