#include "polarkit/polarkit.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace polarkit;

namespace {

std::vector<SpinorParams> sample_spinors(size_t n) {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<SpinorParams> out;
    out.reserve(n);
    while (out.size() < n) {
        SpinorParams k{{u(gen), u(gen)}, {u(gen), u(gen)}, {u(gen), u(gen)},
                       {u(gen), u(gen)}};
        if (std::abs(k.det()) < 1e-3) continue;
        out.push_back(k.normalized());
    }
    return out;
}

std::vector<UnitQuaternion> sample_quaternions(size_t n) {
    std::mt19937_64 gen(8);
    std::normal_distribution<double> nd;
    std::vector<UnitQuaternion> out;
    out.reserve(n);
    while (out.size() < n) {
        UnitQuaternion q{nd(gen), nd(gen), nd(gen), nd(gen)};
        if (q.norm2() < 1e-6) continue;
        out.push_back(q.normalized());
    }
    return out;
}

void bm_covering_map(benchmark::State& state) {
    const auto ks = sample_spinors(256);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(covering_map(ks[i++ & 255]));
    }
}
BENCHMARK(bm_covering_map);

void bm_covering_map_via_trace(benchmark::State& state) {
    const auto ks = sample_spinors(256);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(covering_map_via_trace(ks[i++ & 255]));
    }
}
BENCHMARK(bm_covering_map_via_trace);

void bm_factor_2element(benchmark::State& state) {
    const auto qs = sample_quaternions(256);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(factor_2element(qs[i++ & 255], "121"));
    }
}
BENCHMARK(bm_factor_2element);

void bm_factor_3element(benchmark::State& state) {
    const auto qs = sample_quaternions(256);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(factor_3element(qs[i++ & 255], "312"));
    }
}
BENCHMARK(bm_factor_3element);

void bm_polar_decomposition(benchmark::State& state) {
    const auto ks = sample_spinors(256);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(polar_rotation_boost(ks[i++ & 255]));
    }
}
BENCHMARK(bm_polar_decomposition);

void bm_transitivity_pure_boost(benchmark::State& state) {
    std::mt19937_64 gen(9);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::normal_distribution<double> nd;
    std::vector<std::pair<StokesVector, StokesVector>> pairs;
    while (pairs.size() < 256) {
        Vec3 n{nd(gen), nd(gen), nd(gen)};
        n = n / n.norm();
        const double i0 = 1.0 + std::abs(u(gen));
        const StokesVector s{i0, 0.5 * i0 * n.x, 0.5 * i0 * n.y, 0.5 * i0 * n.z};
        Vec3 e{nd(gen), nd(gen), nd(gen)};
        e = e / e.norm();
        const StokesVector sp = mueller_apply(covering_map(boost(u(gen), e)), s);
        if (std::abs(s.s0 - sp.s0) < 0.05) continue;
        pairs.emplace_back(s, sp);
    }
    size_t i = 0;
    for (auto _ : state) {
        const auto& [s, sp] = pairs[i++ & 255];
        benchmark::DoNotOptimize(transitivity_general(s, sp, pure_boost_params(s, sp)));
    }
}
BENCHMARK(bm_transitivity_pure_boost);

void bm_recover_spinor(benchmark::State& state) {
    const auto ks = sample_spinors(256);
    std::vector<Matrix4C> us;
    us.reserve(256);
    for (const auto& k : ks) us.push_back(isotropic_from_spinor(spinor_matrix(k)));
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(recover_spinor(us[i++ & 255]));
    }
}
BENCHMARK(bm_recover_spinor);

void bm_compose_params(benchmark::State& state) {
    std::mt19937_64 gen(10);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    GroupElementParams p1, p2;
    p1.E = {u(gen), u(gen)};
    p2.E = {u(gen), u(gen)};
    for (int i = 0; i < 3; ++i) {
        p1.A[i] = {u(gen), u(gen)};
        p1.B[i] = {u(gen), u(gen)};
        p2.A[i] = {u(gen), u(gen)};
        p2.B[i] = {u(gen), u(gen)};
        for (int j = 0; j < 3; ++j) {
            p1.C(i, j) = {u(gen), u(gen)};
            p2.C(i, j) = {u(gen), u(gen)};
        }
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(compose_params(p1, p2));
    }
}
BENCHMARK(bm_compose_params);

} // namespace

BENCHMARK_MAIN();
