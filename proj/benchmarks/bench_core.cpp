#include <benchmark/benchmark.h>

#include <random>

#include "garside/catalog.hpp"
#include "garside/conjugacy.hpp"
#include "garside/element.hpp"
#include "garside/parabolic.hpp"

using namespace garside;

namespace {

const CatalogEntry& entry(const std::string& name) {
  static std::map<std::string, CatalogEntry> pool;
  auto it = pool.find(name);
  if (it == pool.end()) it = pool.emplace(name, make_catalog(name)).first;
  return it->second;
}

std::vector<SignedLetter> random_word(const GarsideStructure& gs,
                                      std::mt19937_64& rng, int len,
                                      bool signs) {
  std::vector<SignedLetter> w(len);
  for (auto& l : w) {
    l.atom = (int)(rng() % (unsigned)gs.num_atoms());
    l.sign = signs && (rng() & 1) ? -1 : 1;
  }
  return w;
}

void BM_NormalForm(benchmark::State& state, const char* name, bool signs) {
  const auto& gs = *entry(name).structure;
  std::mt19937_64 rng(1);
  std::vector<std::vector<SignedLetter>> words;
  for (int i = 0; i < 64; ++i)
    words.push_back(random_word(gs, rng, (int)state.range(0), signs));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        Element::from_signed_word(gs, words[i++ & 63]));
  }
}

void BM_MeetJoin(benchmark::State& state, const char* name) {
  const auto& gs = *entry(name).structure;
  std::mt19937_64 rng(2);
  std::vector<Element> xs, ys;
  for (int i = 0; i < 64; ++i) {
    auto w1 = random_word(gs, rng, 8, false);
    auto w2 = random_word(gs, rng, 8, false);
    xs.push_back(Element::from_signed_word(gs, w1));
    ys.push_back(Element::from_signed_word(gs, w2));
  }
  size_t i = 0;
  for (auto _ : state) {
    size_t k = i++ & 63;
    benchmark::DoNotOptimize(meet_pos(xs[k], ys[k]));
    benchmark::DoNotOptimize(join_pos(xs[k], ys[k]));
  }
}

void BM_Rho(benchmark::State& state, const char* name) {
  const auto& gs = *entry(name).structure;
  std::mt19937_64 rng(3);
  std::vector<Element> xs;
  for (int i = 0; i < 64; ++i)
    xs.push_back(Element::from_signed_word(gs, random_word(gs, rng, 6, false)));
  size_t i = 0;
  for (auto _ : state) {
    size_t k = i++ & 63;
    benchmark::DoNotOptimize(rho(gs, (int)(k % gs.num_atoms()), xs[k]));
  }
}

void BM_SwapOrbit(benchmark::State& state, const char* name) {
  const auto& gs = *entry(name).structure;
  std::mt19937_64 rng(4);
  std::vector<Element> xs;
  for (int i = 0; i < 64; ++i)
    xs.push_back(Element::from_signed_word(gs, random_word(gs, rng, 8, true)));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(swap_orbit(xs[i++ & 63]));
  }
}

void BM_BuildStructure(benchmark::State& state, const char* name) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(make_catalog(name));
  }
}

void BM_MinimalConjugators(benchmark::State& state, const char* name) {
  const auto& gs = *entry(name).structure;
  std::mt19937_64 rng(5);
  std::vector<Element> xs;
  for (int i = 0; i < 64; ++i)
    xs.push_back(Element::from_signed_word(gs, random_word(gs, rng, 5, false)));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimal_positive_conjugators(xs[i++ & 63]));
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_NormalForm, braid4_pos, "braid:4", false)->Arg(8)->Arg(32);
BENCHMARK_CAPTURE(BM_NormalForm, braid4_signed, "braid:4", true)->Arg(8)->Arg(32);
BENCHMARK_CAPTURE(BM_NormalForm, g24, "dual:G24", false)->Arg(8)->Arg(32);
BENCHMARK_CAPTURE(BM_MeetJoin, braid4, "braid:4");
BENCHMARK_CAPTURE(BM_MeetJoin, g24, "dual:G24");
BENCHMARK_CAPTURE(BM_Rho, braid4, "braid:4");
BENCHMARK_CAPTURE(BM_Rho, g24, "dual:G24");
BENCHMARK_CAPTURE(BM_SwapOrbit, braid4, "braid:4");
BENCHMARK_CAPTURE(BM_SwapOrbit, cp33, "cp:3,3");
BENCHMARK_CAPTURE(BM_MinimalConjugators, g24, "dual:G24");
BENCHMARK_CAPTURE(BM_BuildStructure, braid4, "braid:4")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BuildStructure, dualsym5, "dualsym:5")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
