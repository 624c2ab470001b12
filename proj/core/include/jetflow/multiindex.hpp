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

#ifndef JETFLOW_MULTIINDEX_HPP_
#define JETFLOW_MULTIINDEX_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace jetflow {

using MultiIndex = std::vector<int>;

int total_degree(const MultiIndex& alpha);
double factorial(const MultiIndex& alpha);

// Number of multi-indices in Z_{>=0}^d with total degree <= n, C(n+d, d).
// Throws std::overflow_error when the count does not fit.
std::size_t jet_dimension(int d, int n);

// Graded numbering of multi-indices up to a maximal total degree.
//
// entries()[0] is zero, entries()[k] for k = 1..d is the k-th elementary
// vector, and degrees never decrease. Inside one degree block indices are
// ordered lexicographically with larger leading exponents first, so the
// numbering for order n is a prefix of the numbering for order n + 1.
class MultiIndexTable {
 public:
  struct Product {
    std::uint32_t lhs;
    std::uint32_t rhs;
    std::uint32_t out;
  };

  MultiIndexTable(int d, int max_degree);

  static std::shared_ptr<const MultiIndexTable> make(int d, int max_degree) {
    return std::make_shared<const MultiIndexTable>(d, max_degree);
  }

  int dim() const { return dim_; }
  int max_degree() const { return max_degree_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<MultiIndex>& entries() const { return entries_; }
  const MultiIndex& operator[](std::size_t i) const { return entries_[i]; }
  int degree(std::size_t i) const { return degrees_[i]; }

  // Number of entries with degree <= n (n clamped to max_degree).
  std::size_t count_up_to(int n) const;

  std::optional<std::size_t> index_of(const MultiIndex& alpha) const;

  // All index pairs whose product stays inside the table, grouped by lhs.
  const std::vector<Product>& products() const { return products_; }

  bool same_shape(const MultiIndexTable& other) const {
    return dim_ == other.dim_ && max_degree_ == other.max_degree_;
  }

 private:
  int dim_;
  int max_degree_;
  std::vector<MultiIndex> entries_;
  std::vector<int> degrees_;
  std::vector<std::size_t> degree_end_;
  std::map<MultiIndex, std::size_t> lookup_;
  std::vector<Product> products_;
};

// Builds the graded numbering for dimension d and order n.
MultiIndexTable graded_numbering(int d, int n);

}  // namespace jetflow

#endif  // JETFLOW_MULTIINDEX_HPP_
