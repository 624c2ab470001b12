// Copyright 2026 The jetflow Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "jetflow/multiindex.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace jetflow {

int total_degree(const MultiIndex& alpha) {
  return std::accumulate(alpha.begin(), alpha.end(), 0);
}

double factorial(const MultiIndex& alpha) {
  double out = 1.0;
  for (int a : alpha) {
    for (int k = 2; k <= a; ++k) out *= k;
  }
  return out;
}

std::size_t jet_dimension(int d, int n) {
  if (d < 1 || n < 0) throw std::invalid_argument("jet_dimension: need d >= 1, n >= 0");
  // C(n+d, d) = prod_{k=1..d} (n+k)/k, exact at every step.
  std::size_t out = 1;
  for (int k = 1; k <= d; ++k) {
    const std::size_t factor = static_cast<std::size_t>(n) + k;
    if (out > std::numeric_limits<std::size_t>::max() / factor) {
      throw std::overflow_error("jet_dimension: configuration too large");
    }
    out = out * factor / static_cast<std::size_t>(k);
  }
  return out;
}

namespace {

// Appends all multi-indices of `dim` coordinates with total degree `degree`,
// leading coordinates dominant and descending.
void append_degree_block(int dim, int degree, MultiIndex& prefix,
                         std::vector<MultiIndex>& out) {
  const int used = total_degree(prefix);
  const int position = static_cast<int>(prefix.size());
  if (position == dim - 1) {
    prefix.push_back(degree - used);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int a = degree - used; a >= 0; --a) {
    prefix.push_back(a);
    append_degree_block(dim, degree, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

MultiIndexTable::MultiIndexTable(int d, int max_degree)
    : dim_(d), max_degree_(max_degree) {
  if (d < 1 || max_degree < 0) {
    throw std::invalid_argument("MultiIndexTable: need d >= 1, max_degree >= 0");
  }
  entries_.reserve(jet_dimension(d, max_degree));
  for (int k = 0; k <= max_degree; ++k) {
    MultiIndex prefix;
    append_degree_block(d, k, prefix, entries_);
    degree_end_.push_back(entries_.size());
  }
  degrees_.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    degrees_.push_back(total_degree(entries_[i]));
    lookup_.emplace(entries_[i], i);
  }

  MultiIndex sum(d);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const std::size_t rhs_end = degree_end_[max_degree - degrees_[i]];
    for (std::size_t j = 0; j < rhs_end; ++j) {
      for (int c = 0; c < d; ++c) sum[c] = entries_[i][c] + entries_[j][c];
      products_.push_back({static_cast<std::uint32_t>(i),
                           static_cast<std::uint32_t>(j),
                           static_cast<std::uint32_t>(lookup_.at(sum))});
    }
  }
}

std::size_t MultiIndexTable::count_up_to(int n) const {
  if (n < 0) return 0;
  return degree_end_[std::min(n, max_degree_)];
}

std::optional<std::size_t> MultiIndexTable::index_of(const MultiIndex& alpha) const {
  auto it = lookup_.find(alpha);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

MultiIndexTable graded_numbering(int d, int n) { return MultiIndexTable(d, n); }

}  // namespace jetflow
