#include <benchmark/benchmark.h>

#include <random>

#include "cxg/clannish.hpp"
#include "cxg/complexify.hpp"
#include "cxg/generate.hpp"
#include "cxg/gentle.hpp"
#include "cxg/mq_text.hpp"
#include "cxg/tables.hpp"

namespace {

using namespace cxg;

std::vector<MqPresentation> instances(int count, int maxVertices) {
    std::mt19937_64 rng(1234);
    std::vector<MqPresentation> out;
    for (int t = 0; t < count; ++t) out.push_back(genSpecialType(rng, maxVertices));
    return out;
}

void BM_ParseMq(benchmark::State& state) {
    std::mt19937_64 rng(1);
    MqPresentation p = genSpecialType(rng, 8);
    std::string text = serializeMq(p);
    for (auto _ : state) {
        MqPresentation parsed = parseMq(text);
        benchmark::DoNotOptimize(parsed.ideal.span.dim());
    }
}
BENCHMARK(BM_ParseMq);

void BM_Complexify(benchmark::State& state) {
    auto pool = instances(16, static_cast<int>(state.range(0)));
    std::size_t idx = 0;
    for (auto _ : state) {
        const MqPresentation& p = pool[idx++ % pool.size()];
        ComplexPresentation cp = complexifyIdeal(p.q, *p.amb, p.ideal);
        benchmark::DoNotOptimize(cp.generators.size());
    }
}
BENCHMARK(BM_Complexify)->Arg(4)->Arg(8);

void BM_Classify(benchmark::State& state) {
    auto pool = instances(16, static_cast<int>(state.range(0)));
    std::size_t idx = 0;
    for (auto _ : state) {
        const MqPresentation& p = pool[idx++ % pool.size()];
        AlgebraVerdict v = classifyAlgebra(*p.amb, p.ideal);
        benchmark::DoNotOptimize(v.type);
    }
}
BENCHMARK(BM_Classify)->Arg(4)->Arg(8);

void BM_Roundtrip(benchmark::State& state) {
    auto pool = instances(16, static_cast<int>(state.range(0)));
    std::size_t idx = 0;
    for (auto _ : state) {
        const MqPresentation& p = pool[idx++ % pool.size()];
        RoundtripReport r = roundtripCheck(p.q, *p.amb, p.ideal);
        benchmark::DoNotOptimize(r.pass);
    }
}
BENCHMARK(BM_Roundtrip)->Arg(4)->Arg(8);

void BM_VerifyTable2(benchmark::State& state) {
    const std::string& fixture = defaultTablesFixture();
    for (auto _ : state) {
        TableCheckResult r = verifyTable2(fixture);
        benchmark::DoNotOptimize(r.pass());
    }
}
BENCHMARK(BM_VerifyTable2);

}  // namespace

BENCHMARK_MAIN();
