#include <benchmark/benchmark.h>

#include "lgrass/grassmann.hpp"

namespace {

using namespace lgrass;

const FieldDesc kFp = FieldDesc::prime(10007);

Matrix random_square(const FieldDesc& fd, int d, Rng& rng) {
    Matrix m(fd, d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m.set(i, j, Scalar(rng.element(fd)));
    return m;
}

void BM_rank(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    Rng rng(7);
    Matrix m = random_square(kFp, d, rng);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_rank)->Arg(4)->Arg(8)->Arg(16);

void BM_form_space_dimension(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::vector<int> profile(static_cast<std::size_t>(n), 0);
    profile.front() = 3;
    profile.back() = 3;
    LinkedChain c = standard_chain(kFp, profile, ChainMode::fiber);
    for (auto _ : state)
        benchmark::DoNotOptimize(form_space_dimension(c, n + 1, FormVariant::alternating));
}
BENCHMARK(BM_form_space_dimension)->Arg(2)->Arg(3)->Arg(5);

void BM_verify_point(benchmark::State& state) {
    LinkedChain c = standard_chain(kFp, {2, 2, 2}, ChainMode::family);
    LinkedForm f = standard_symplectic_form(c, 11);
    LinkedSubspace p = random_exact_isotropic(c, f, 2, 13);
    for (auto _ : state) benchmark::DoNotOptimize(verify_point(c, f, p));
}
BENCHMARK(BM_verify_point);

void BM_random_exact_isotropic(benchmark::State& state) {
    LinkedChain c = standard_chain(kFp, {2, 2, 2}, ChainMode::family);
    LinkedForm f = standard_symplectic_form(c, 11);
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(random_exact_isotropic(c, f, 2, seed++));
}
BENCHMARK(BM_random_exact_isotropic);

}  // namespace

BENCHMARK_MAIN();
