#include "graddae/classifier.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace graddae {

namespace {

struct ClassifierTrace {
    std::vector<Matrix> activations;  // h_1..h_k
    Matrix logits;
};

ClassifierTrace classifier_forward(const ClassifierNet& net, const Matrix& x) {
    if (x.cols() != net.encoder.input_dim())
        throw std::invalid_argument("classifier: input has " + std::to_string(x.cols()) +
                                    " columns, encoder expects " +
                                    std::to_string(net.encoder.input_dim()));
    if (net.output.fan_in() != net.encoder.output_dim())
        throw std::invalid_argument("classifier: output layer does not chain with encoder");
    ClassifierTrace trace;
    trace.activations.reserve(net.encoder.depth());
    const Matrix* below = &x;
    for (const DenseLayer& layer : net.encoder.layers) {
        Matrix a = matmul(*below, layer.weights);
        add_row_inplace(a, layer.biases);
        trace.activations.push_back(sigmoid(a));
        below = &trace.activations.back();
    }
    trace.logits = matmul(*below, net.output.weights);
    add_row_inplace(trace.logits, net.output.biases);
    return trace;
}

void check_labels(std::span<const int> labels, std::size_t n, std::size_t classes) {
    if (labels.size() != n)
        throw std::invalid_argument("classifier: label count does not match batch size");
    for (int label : labels)
        if (label < 0 || static_cast<std::size_t>(label) >= classes)
            throw std::invalid_argument("classifier: label " + std::to_string(label) +
                                        " out of range [0, " + std::to_string(classes) + ")");
}

}  // namespace

Matrix classifier_logits(const ClassifierNet& net, const Matrix& x) {
    return classifier_forward(net, x).logits;
}

std::pair<double, Gradients> classifier_loss_and_grad(const ClassifierNet& net, const Matrix& x,
                                                      std::span<const int> labels) {
    ClassifierTrace trace = classifier_forward(net, x);
    check_labels(labels, x.rows(), net.classes());

    const std::size_t n = x.rows(), c = net.classes();
    const double inv_n = 1.0 / static_cast<double>(n);

    // Loss through log-sum-exp; gradient through the softmax probabilities.
    double loss = 0.0;
    Matrix delta = softmax_rows(trace.logits);
    for (std::size_t i = 0; i < n; ++i) {
        const double* li = trace.logits.data() + i * c;
        double m = li[0];
        for (std::size_t j = 1; j < c; ++j) m = std::max(m, li[j]);
        double sum = 0.0;
        for (std::size_t j = 0; j < c; ++j) sum += std::exp(li[j] - m);
        loss += std::log(sum) + m - li[static_cast<std::size_t>(labels[i])];
        delta(i, static_cast<std::size_t>(labels[i])) -= 1.0;
    }
    loss *= inv_n;
    for (std::size_t i = 0; i < delta.size(); ++i) delta.data()[i] *= inv_n;

    Gradients grads;
    const std::size_t depth = net.encoder.depth();
    grads.encoder.resize(depth);
    grads.head = ParamGrad{matmul_at_b(trace.activations.back(), delta), column_sums(delta)};

    // All encoder layers train during supervised fine-tuning.
    Matrix err = matmul_a_bt(delta, net.output.weights);
    for (std::size_t i = depth; i-- > 0;) {
        const Matrix& h = trace.activations[i];
        for (std::size_t e = 0; e < err.size(); ++e) {
            const double hv = h.data()[e];
            err.data()[e] *= hv * (1.0 - hv);
        }
        const Matrix& input = i == 0 ? x : trace.activations[i - 1];
        grads.encoder[i] = ParamGrad{matmul_at_b(input, err), column_sums(err)};
        if (i > 0) err = matmul_a_bt(err, net.encoder.layers[i].weights);
    }
    return {loss, std::move(grads)};
}

double classification_error(const ClassifierNet& net, const Matrix& x,
                            std::span<const int> labels) {
    const Matrix logits = classifier_logits(net, x);
    check_labels(labels, x.rows(), net.classes());
    const std::size_t c = net.classes();
    std::size_t wrong = 0;
    for (std::size_t i = 0; i < x.rows(); ++i) {
        const double* li = logits.data() + i * c;
        std::size_t arg = 0;
        for (std::size_t j = 1; j < c; ++j)
            if (li[j] > li[arg]) arg = j;  // strict: ties keep the lowest id
        if (arg != static_cast<std::size_t>(labels[i])) ++wrong;
    }
    return static_cast<double>(wrong) / static_cast<double>(x.rows());
}

}  // namespace graddae
