// Copyright 2026 The Baccara Solver Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include "baccara/oracle.hpp"
#include "point_index.hpp"

namespace baccara::oracle {
namespace {

constexpr std::uint64_t kBlockTrials = 1 << 16;

struct BlockSums {
  std::int64_t gain = 0;
  std::uint64_t nonzero = 0;
  std::uint64_t naturals = 0;
};

class Dealer {
 public:
  Dealer(const DealModel& deal, std::mt19937_64& rng) : shoe_(deal.is_shoe()), rng_(rng) {
    if (shoe_) {
      for (int v = 0; v < 10; ++v) {
        const std::int64_t n = (v == 0 ? 16 : 4) * deal.decks();
        cards_.insert(cards_.end(), static_cast<std::size_t>(n), static_cast<std::uint8_t>(v));
      }
    }
  }

  // Fresh shoe every coup: a partial Fisher-Yates pass over the first six
  // positions yields a uniform draw regardless of the current order.
  std::array<int, 6> deal() {
    std::array<int, 6> out{};
    if (shoe_) {
      for (std::size_t i = 0; i < 6; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, cards_.size() - 1);
        std::swap(cards_[i], cards_[pick(rng_)]);
        out[i] = cards_[i];
      }
    } else {
      std::uniform_int_distribution<int> rank(0, 12);
      for (auto& c : out) {
        const int r = rank(rng_);
        c = r < 4 ? 0 : r - 3;
      }
    }
    return out;
  }

 private:
  bool shoe_;
  std::mt19937_64& rng_;
  std::vector<std::uint8_t> cards_;
};

int compare(int player, int banker) { return (player > banker) - (player < banker); }

bool five_draws(PlayerMask mask, int a, int b) {
  static constexpr std::array<int, 5> kLow{0, 1, 2, 6, 7};
  const int lo = std::min(a, b);
  for (int pos = 0; pos < 5; ++pos) {
    if (kLow[pos] == lo) return mask.draws_on(pos);
  }
  throw std::logic_error("not a total-5 hand");
}

BlockSums run_block(PlayerMask mask, const MoveTable& table, const DealModel& deal,
                    const PointIndex& index, std::uint64_t seed, std::uint64_t block,
                    std::uint64_t trials) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  std::mt19937_64 rng(seq);
  Dealer dealer(deal, rng);
  BlockSums sums;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto c = dealer.deal();  // P1 B1 P2 B2 P3 B3
    const int pt = (c[0] + c[2]) % 10;
    const int bt = (c[1] + c[3]) % 10;
    int gain = 0;
    if (pt >= 8 || bt >= 8) {
      ++sums.naturals;
      gain = compare(pt, bt);
    } else {
      const bool p_draws = pt <= 4 || (pt == 5 && five_draws(mask, c[0], c[2]));
      const int pf = p_draws ? (pt + c[4]) % 10 : pt;
      const std::size_t l = index(c[1], c[3], p_draws ? c[4] : 10);
      const int b_card = p_draws ? c[5] : c[4];
      const int bf = table[l] == Move::Draw ? (bt + b_card) % 10 : bt;
      gain = compare(pf, bf);
    }
    sums.gain += gain;
    sums.nonzero += gain != 0;
  }
  return sums;
}

}  // namespace

SimulationReport simulate_payoff(PlayerMask mask, const MoveTable& table, const DealModel& deal,
                                 InfoModel info, const SimulationOptions& options,
                                 std::optional<Rational> exact) {
  if (options.trials < 1) throw std::invalid_argument("trials must be at least 1");
  const PointIndex index(info);
  if (table.size() != index.size()) throw std::invalid_argument("move table has the wrong size");

  const std::uint64_t blocks = (options.trials + kBlockTrials - 1) / kBlockTrials;
  std::vector<BlockSums> results(blocks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t b = next++; b < blocks; b = next++) {
      const std::uint64_t n = std::min(kBlockTrials, options.trials - b * kBlockTrials);
      results[b] = run_block(mask, table, deal, index, options.seed, b, n);
    }
  };
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, blocks));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  BlockSums total;
  for (const auto& r : results) {
    total.gain += r.gain;
    total.nonzero += r.nonzero;
    total.naturals += r.naturals;
  }
  SimulationReport report;
  report.trials = options.trials;
  report.naturals = total.naturals;
  const double n = static_cast<double>(options.trials);
  report.mean = static_cast<double>(total.gain) / n;
  if (options.trials > 1) {
    const double var = (static_cast<double>(total.nonzero) / n - report.mean * report.mean) * n / (n - 1);
    report.std_error = std::sqrt(std::max(var, 0.0) / n);
  }
  report.exact = std::move(exact);
  if (report.exact && report.std_error > 0) {
    report.z = (report.mean - to_double(*report.exact)) / report.std_error;
  }
  return report;
}

}  // namespace baccara::oracle
