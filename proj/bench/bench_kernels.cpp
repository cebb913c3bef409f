// OpenMP kernels against their serial references on synthetic data.

#include <benchmark/benchmark.h>

#include <random>

#include "dnn2lr/candidates.hpp"
#include "dnn2lr/interpret.hpp"
#include "dnn2lr/reference.hpp"
#include "dnn2lr/select.hpp"

using namespace dnn2lr;

namespace {

constexpr std::size_t kFields = 26;
constexpr std::size_t kPerField = 40;

EncodedDataset Rows(std::size_t rows, std::size_t cols) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> pick(0, kPerField - 1);
  EncodedDataset d(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) d.at(r, c) = static_cast<FeatureId>(c * kPerField + pick(rng));
    d.label(r) = r % 4 == 0;
  }
  return d;
}

DnnModel Model() {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-0.1, 0.1);
  DnnModel m(kFields, kFields * kPerField, 10, {400, 100});
  for (auto& p : m.params()) p = u(rng);
  return m;
}

const DnnModel& SharedModel() {
  static const DnnModel m = Model();
  return m;
}

const EncodedDataset& SharedRows() {
  static const EncodedDataset d = Rows(2000, kFields);
  return d;
}

const Interpretation& SharedInterpretation() {
  static const Interpretation i = Interpret(EmbeddingGradients(SharedModel(), SharedRows()), 0.033);
  return i;
}

struct SelectionProblem {
  LrWeights w;
  EncodedDataset valid;
  std::vector<CrossFieldSpec> specs;
};

const SelectionProblem& SharedSelection() {
  static const SelectionProblem p = [] {
    SelectionProblem s;
    const std::size_t cands = 78;
    s.valid = Rows(6000, kFields + cands);
    std::mt19937_64 rng(3);
    std::normal_distribution<double> n(0.0, 0.3);
    s.w.weights.resize((kFields + cands) * kPerField);
    for (auto& x : s.w.weights) x = n(rng);
    for (std::size_t a = 0; a < kFields && s.specs.size() < cands; ++a) {
      for (std::size_t b = a + 1; b < kFields && s.specs.size() < cands; ++b) s.specs.push_back(CrossFieldSpec{a, b});
    }
    return s;
  }();
  return p;
}

void BM_Predict(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(SharedModel().PredictAll(SharedRows()));
}
void BM_PredictSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::PredictAll(SharedModel(), SharedRows()));
}

void BM_Gradients(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(EmbeddingGradients(SharedModel(), SharedRows()));
}
void BM_GradientsSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::EmbeddingGradients(SharedModel(), SharedRows()));
}

void BM_CountCrosses(benchmark::State& state) {
  const auto& i = SharedInterpretation();
  for (auto _ : state) benchmark::DoNotOptimize(CountCrosses(i.feasible, i.inconsistency, 4, 16));
}
void BM_CountCrossesSerial(benchmark::State& state) {
  const auto& i = SharedInterpretation();
  for (auto _ : state) benchmark::DoNotOptimize(reference::CountCrosses(i.feasible, i.inconsistency, 4, 16));
}

void BM_GreedySelect(benchmark::State& state) {
  const auto& p = SharedSelection();
  for (auto _ : state) benchmark::DoNotOptimize(GreedySelect(p.w, p.valid, kFields, p.specs));
}
void BM_GreedySelectSerial(benchmark::State& state) {
  const auto& p = SharedSelection();
  for (auto _ : state) benchmark::DoNotOptimize(reference::GreedySelect(p.w, p.valid, kFields, p.specs));
}

}  // namespace

BENCHMARK(BM_Predict)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PredictSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Gradients)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GradientsSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CountCrosses)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CountCrossesSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GreedySelect)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GreedySelectSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
