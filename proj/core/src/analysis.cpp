// Copyright 2026 The Blocking Wythoff Authors
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

#include "bwn/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <ostream>

namespace bwn {
namespace {

// Calls f(x, y) for every P cell, in row-major order.
template <class F>
void for_each_p(const PGrid& grid, F&& f) {
  const uint64_t n = grid.n();
  const auto words = grid.words();
  for (size_t w = 0; w < words.size(); ++w) {
    uint64_t bits = words[w];
    while (bits != 0) {
      const uint64_t i = w * 64 + static_cast<uint64_t>(std::countr_zero(bits));
      bits &= bits - 1;
      f(static_cast<Coord>(i % n), static_cast<Coord>(i / n));
    }
  }
}

Coord exact_prefix(const std::vector<uint32_t>& counts, uint32_t k) {
  Coord x = -1;
  while (x + 1 < static_cast<Coord>(counts.size()) && counts[static_cast<size_t>(x + 1)] == k) ++x;
  return x;
}

}  // namespace

std::vector<uint32_t> column_counts(const PGrid& grid) {
  std::vector<uint32_t> counts(grid.n(), 0);
  for_each_p(grid, [&](Coord x, Coord) { ++counts[static_cast<size_t>(x)]; });
  return counts;
}

PPairList extract_pairs(const PGrid& grid) {
  PPairList list;
  list.spec = grid.spec();
  list.n = grid.n();
  for_each_p(grid, [&](Coord x, Coord y) {
    if (x <= y) list.pairs.push_back({x, y});
  });
  std::sort(list.pairs.begin(), list.pairs.end());
  list.deltas.reserve(list.pairs.size());
  for (const Position& p : list.pairs) list.deltas.push_back(p.y - p.x);
  if (grid.spec().flavor == Flavor::kBlocking && grid.spec().mode == Mode::kAll)
    list.complete_through = exact_prefix(column_counts(grid), grid.spec().k);
  return list;
}

PPairList complete_prefix(const PPairList& list) {
  if (!list.complete_through) return list;
  PPairList out = list;
  const Coord limit = *list.complete_through;
  const auto end = std::find_if(list.pairs.begin(), list.pairs.end(),
                                [limit](const Position& p) { return p.x > limit; });
  const auto keep = static_cast<size_t>(end - list.pairs.begin());
  out.pairs.resize(keep);
  out.deltas.resize(keep);
  return out;
}

PropReport check_prop2(const PGrid& grid, uint32_t k) {
  const BlockingSpec& spec = grid.spec();
  if (spec.flavor != Flavor::kBlocking || spec.mode != Mode::kAll || spec.k != k)
    throw std::invalid_argument("check_prop2 needs a blocking/all grid solved with the same k");
  PropReport r;
  r.k = k;
  r.n = grid.n();

  const auto counts = column_counts(grid);
  r.column0_count = counts[0];
  r.column0_is_initial_segment = true;
  for (uint32_t y = 0; y < grid.n(); ++y)
    if (grid.is_p(0, y) != (y < k)) r.column0_is_initial_segment = false;
  if (k > grid.n()) r.column0_is_initial_segment = false;

  r.column_counts_ok_through = exact_prefix(counts, k);
  for (size_t x = 0; x < counts.size(); ++x)
    if (counts[x] > k) r.overfull_columns.push_back(static_cast<Coord>(x));
  for (Coord x = 0; x <= r.column_counts_ok_through; ++x)
    r.cells_in_verified_columns += counts[static_cast<size_t>(x)];
  r.literal_prefix_formula =
      uint64_t{k} * static_cast<uint64_t>(std::max<Coord>(r.column_counts_ok_through, 0));

  std::map<Coord, uint64_t> by_difference;
  for_each_p(grid, [&](Coord x, Coord y) {
    if (x <= y) ++by_difference[y - x];
  });
  for (const auto& [d, count] : by_difference) {
    r.max_difference_multiplicity = std::max(r.max_difference_multiplicity, count);
    if (count > k) r.difference_violations.push_back({d, count});
  }
  return r;
}

SplitEstimate estimate_splits(const PPairList& list, double tail_fraction, double gap) {
  if (!(tail_fraction > 0 && tail_fraction < 1))
    throw std::invalid_argument("tail fraction must lie in (0, 1)");
  if (!(gap > 0)) throw std::invalid_argument("gap must be positive");
  SplitEstimate est;
  est.k = list.spec.k;
  est.n = list.n;
  est.tail_fraction = tail_fraction;
  est.gap = gap;

  const size_t total = list.pairs.size();
  const auto first = static_cast<size_t>(std::floor((1.0 - tail_fraction) * static_cast<double>(total)));
  std::vector<double> ratios;
  double alpha_sum = 0;
  double beta_sum = 0;
  for (size_t i = std::max<size_t>(first, 1); i < total; ++i) {
    const auto [a, b] = list.pairs[i];
    if (a == 0) continue;
    ratios.push_back(static_cast<double>(b) / static_cast<double>(a));
    alpha_sum += static_cast<double>(a) / static_cast<double>(i);
    beta_sum += static_cast<double>(b) / static_cast<double>(i);
  }
  if (ratios.size() < kMinTailSamples)
    throw InsufficientSampleError("tail holds " + std::to_string(ratios.size()) +
                                  " usable pairs, need " + std::to_string(kMinTailSamples));
  est.samples = ratios.size();

  std::sort(ratios.begin(), ratios.end());
  double sum = ratios[0];
  uint64_t weight = 1;
  for (size_t i = 1; i <= ratios.size(); ++i) {
    if (i == ratios.size() || ratios[i] - ratios[i - 1] > gap) {
      est.clusters.push_back({sum / static_cast<double>(weight), weight});
      if (i == ratios.size()) break;
      sum = 0;
      weight = 0;
    }
    sum += ratios[i];
    ++weight;
  }
  if (est.clusters.size() == 1) {
    est.alpha_hat = alpha_sum / static_cast<double>(est.samples);
    est.beta_hat = beta_sum / static_cast<double>(est.samples);
  }
  return est;
}

double harmonic_density(const SplitEstimate& estimate) {
  if (!estimate.alpha_hat || !estimate.beta_hat)
    throw InsufficientSampleError("harmonic density needs a single-cluster estimate");
  return 1.0 / *estimate.alpha_hat + 1.0 / *estimate.beta_hat;
}

double harmonic_density_check(const PPairList& list, uint32_t k) {
  if (list.spec.k != k) throw std::invalid_argument("pair list was solved for a different k");
  return harmonic_density(estimate_splits(list));
}

DeltaTrend delta_trend(const PPairList& list) {
  DeltaTrend t;
  const size_t half = list.deltas.size() / 2;
  for (size_t i = 0; i < list.deltas.size(); ++i) {
    const double dev = std::abs(static_cast<double>(list.deltas[i]) - static_cast<double>(i) / 2.0);
    double& slot = i < half ? t.first_half_max : t.second_half_max;
    slot = std::max(slot, dev);
  }
  return t;
}

void write_pairs_csv(std::ostream& out, const PPairList& list, size_t limit) {
  out << "n,a_n,b_n,delta_n\n";
  const size_t rows = limit == 0 ? list.pairs.size() : std::min(limit, list.pairs.size());
  for (size_t i = 0; i < rows; ++i)
    out << i << ',' << list.pairs[i].x << ',' << list.pairs[i].y << ',' << list.deltas[i] << '\n';
}

}  // namespace bwn
