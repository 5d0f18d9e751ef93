#pragma once

#include <exception>
#include <optional>
#include <span>
#include <vector>

#include "optbench/service/session.hpp"

namespace optbench::detail {

// Worker policy shared by the threaded and the virtual-time engines.
//
// Env provides:
//   std::optional<size_t> wait_for_tick(size_t next)  newest tick index once
//                                                     index `next` exists;
//                                                     nullopt at end of stream
//   size_t latest()                                   newest tick index now
//   int64_t now()
//   int64_t arrival(size_t k)
//   uint64_t tick_seq(size_t k)
//   std::optional<double> price(size_t contract, size_t k)  nullopt = cancelled
//   void finished(size_t k)
template <class Env>
void run_worker(Env& env, std::uint32_t worker_id, std::span<const std::size_t> mine, const ContractBook& book,
                std::vector<PricingRecord>& out) {
  auto record = [&](std::size_t contract, std::size_t k, std::int64_t start, std::int64_t end, PricingStatus status) {
    PricingRecord r;
    r.contract_index = contract;
    r.contract_id = book.contracts[contract].id;
    r.tick_seq = env.tick_seq(k);
    r.start_ns = start;
    r.end_ns = end;
    r.worker_id = worker_id;
    r.status = status;
    out.push_back(std::move(r));
    return &out.back();
  };

  std::size_t next = 0;
  while (const auto newest = env.wait_for_tick(next)) {
    const std::size_t k = *newest;
    // Ticks that were superseded before this worker got to them.
    for (std::size_t stale = next; stale < k; ++stale) {
      const std::int64_t at = env.arrival(stale + 1);
      for (std::size_t c : mine) record(c, stale, at, at, PricingStatus::Abandoned);
    }

    std::size_t i = 0;
    for (; i < mine.size(); ++i) {
      if (env.latest() != k) break;
      const std::int64_t start = env.now();
      try {
        const std::optional<double> price = env.price(mine[i], k);
        const std::int64_t end = env.now();
        if (price && env.latest() == k) {
          record(mine[i], k, start, end, PricingStatus::Success)->price = *price;
        } else {
          record(mine[i], k, start, end, PricingStatus::Abandoned);
        }
      } catch (const std::exception& e) {
        record(mine[i], k, start, env.now(), PricingStatus::Errored)->error = e.what();
      }
    }
    if (i < mine.size()) {
      const std::int64_t at = env.arrival(k + 1);
      for (; i < mine.size(); ++i) record(mine[i], k, at, at, PricingStatus::Abandoned);
    }
    env.finished(k);
    next = k + 1;
  }
}

}  // namespace optbench::detail
