// Microbenchmarks for the training hot path: matrix products, activations,
// corruption and full forward/backward passes at training-relevant shapes.

#include "graddae/corruption.hpp"
#include "graddae/model.hpp"
#include "graddae/numeric_ops.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace graddae;

Matrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng, double lo = -1.0,
                     double hi = 1.0) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < m.size(); ++i) m.data()[i] = rng.uniform(lo, hi);
    return m;
}

void bm_matmul(benchmark::State& state) {
    const auto batch = static_cast<std::size_t>(state.range(0));
    Rng rng(1);
    const Matrix a = random_matrix(batch, 784, rng);
    const Matrix b = random_matrix(784, 200, rng);
    for (auto _ : state) {
        Matrix c = matmul(a, b);
        benchmark::DoNotOptimize(c.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * batch);
}
BENCHMARK(bm_matmul)->Arg(20)->Arg(200)->Arg(2000)->Unit(benchmark::kMicrosecond);

void bm_sigmoid(benchmark::State& state) {
    Rng rng(2);
    const Matrix z = random_matrix(200, 784, rng, -8.0, 8.0);
    for (auto _ : state) {
        Matrix s = sigmoid(z);
        benchmark::DoNotOptimize(s.data());
    }
}
BENCHMARK(bm_sigmoid)->Unit(benchmark::kMicrosecond);

void bm_masking(benchmark::State& state) {
    Rng rng(3);
    const Matrix x = random_matrix(20, 784, rng, 0.0, 1.0);
    const CorruptionSpec spec{NoiseKind::masking, 0.15};
    Rng noise(4);
    for (auto _ : state) {
        Matrix out = apply_masking(x, spec, noise);
        benchmark::DoNotOptimize(out.data());
    }
}
BENCHMARK(bm_masking)->Unit(benchmark::kMicrosecond);

void bm_forward_backward(benchmark::State& state) {
    const auto batch = static_cast<std::size_t>(state.range(0));
    Rng rng(5);
    EncoderStack enc;
    enc.layers.push_back(init_dense(784, 200, rng));
    enc.layers.push_back(init_dense(200, 200, rng));
    const DecoderHead dec{init_dense(200, 784, rng)};
    const Matrix x = random_matrix(batch, 784, rng, 0.0, 1.0);
    const FreezeMask freeze = FreezeMask::none(2);
    for (auto _ : state) {
        const ForwardTrace trace = dae_forward(enc, dec, x);
        const Gradients grads = dae_backward(trace, x, enc, dec, freeze);
        benchmark::DoNotOptimize(&grads.head);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * batch);
}
BENCHMARK(bm_forward_backward)->Arg(20)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
