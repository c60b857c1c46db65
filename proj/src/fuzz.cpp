#include "mconj/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "mconj/errors.hpp"

namespace mconj {

std::vector<MonomialIdeal> generate_fuzz_ideals(const FuzzConfig& config) {
  if (config.n < 1) throw InputError("fuzz needs at least one variable");
  if (config.maxdeg < 1) throw InputError("fuzz needs maxdeg >= 1");
  std::mt19937_64 rng(config.seed);
  std::vector<std::vector<Monomial>> by_degree(config.maxdeg + 1);
  for (unsigned d = 1; d <= config.maxdeg; ++d) by_degree[d] = monomials_of_degree(config.n, d);

  std::vector<MonomialIdeal> out;
  out.reserve(config.count);
  for (std::size_t idx = 0; idx < config.count; ++idx) {
    // Explicit modular draws keep the stream identical across standard libraries.
    const std::size_t seeds = 1 + rng() % 4;
    std::vector<Monomial> gens;
    for (std::size_t g = 0; g < seeds; ++g) {
      const unsigned d = 1 + static_cast<unsigned>(rng() % config.maxdeg);
      const auto& pool = by_degree[d];
      gens.push_back(pool[rng() % pool.size()]);
    }
    out.push_back(borel_closure(gens, config.n));
  }
  return out;
}

FuzzResult run_fuzz(const FuzzConfig& config) {
  FuzzResult result;
  result.config = config;
  const std::vector<MonomialIdeal> ideals = generate_fuzz_ideals(config);

  std::vector<std::optional<ConjectureReport>> slots(ideals.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&]() {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= ideals.size()) return;
      try {
        slots[idx] = check_improved(ideals[idx], config.caps);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = ideals.size();
        return;
      }
    }
  };
  unsigned threads = config.threads ? config.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, ideals.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  FuzzSummary& sum = result.summary;
  for (auto& slot : slots) {
    ConjectureReport& rep = *slot;
    ++sum.count;
    sum.holds += rep.flags.conj2_holds;
    sum.tight += rep.flags.tight_upper;
    sum.pure += rep.flags.pure;
    sum.cm += rep.flags.cm;
    sum.violations += rep.counterexample_candidate;
    result.reports.push_back(std::move(rep));
  }
  return result;
}

}  // namespace mconj
