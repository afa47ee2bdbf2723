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

#ifndef BACCARA_SRC_POINT_INDEX_HPP_
#define BACCARA_SRC_POINT_INDEX_HPP_

#include <algorithm>
#include <array>
#include <stdexcept>

#include "baccara/game_core.hpp"

namespace baccara::oracle {

// Point index lookup built from the canonical point lists.
class PointIndex {
 public:
  explicit PointIndex(InfoModel info) : totals_(info == InfoModel::TotalsOnly) {
    const auto& pts = totals_ ? total_decision_points() : hand_decision_points();
    index_.fill(-1);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const DecisionPoint& p = pts[i];
      const int lo = p.hand ? p.hand->lo() : 0;
      const int hi = p.hand ? p.hand->hi() : p.total;
      index_[key(lo, hi, p.obs.slot())] = static_cast<int>(i);
    }
    size_ = pts.size();
  }

  std::size_t size() const { return size_; }

  std::size_t operator()(int b1, int b2, int slot) const {
    int lo = std::min(b1, b2);
    int hi = std::max(b1, b2);
    if (totals_) {
      hi = (b1 + b2) % 10;
      lo = 0;
    }
    const int i = index_[key(lo, hi, slot)];
    if (i < 0) throw std::logic_error("no decision point for dealt cards");
    return static_cast<std::size_t>(i);
  }

 private:
  static int key(int lo, int hi, int slot) { return (lo * 10 + hi) * 11 + slot; }
  bool totals_;
  std::array<int, 1100> index_{};
  std::size_t size_ = 0;
};

}  // namespace baccara::oracle

#endif  // BACCARA_SRC_POINT_INDEX_HPP_
