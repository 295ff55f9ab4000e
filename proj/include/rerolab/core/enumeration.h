//
// Copyright 2026 The Rerolab Authors
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
//

#ifndef REROLAB_CORE_ENUMERATION_H_
#define REROLAB_CORE_ENUMERATION_H_

#include <cstdint>
#include <iterator>
#include <vector>

#include "absl/status/statusor.h"
#include "rerolab/core/dataset.h"
#include "rerolab/core/distribution.h"

namespace rerolab {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

// Returns a*b, or UINT64_MAX when the product overflows.
std::uint64_t SaturatingMul(std::uint64_t a, std::uint64_t b);

// size^n, saturating.
std::uint64_t OrderedDatasetCount(std::uint64_t size, int n);

// Number of size-n multisets over `size` records, C(size + n - 1, n),
// saturating.
std::uint64_t MultisetCount(std::uint64_t size, int n);

// Mixed-radix index of an ordered dataset (first record most significant).
std::uint64_t EncodeDataset(const Dataset& dataset, std::uint64_t size);
Dataset DecodeDataset(std::uint64_t index, std::uint64_t size, int n);

struct WeightedDataset {
  Dataset dataset;
  double probability = 0.0;
};

enum class DatasetOrdering {
  // Every ordered tuple in X^n exactly once, weighted by the product prior.
  kOrdered,
  // Every multiset once, as its sorted representative, weighted by the total
  // prior mass of all orderings. Only meaningful for statistics that ignore
  // record order.
  kMultiset,
};

// Exhaustive enumeration of size-n datasets under a product prior.
//
// Creation fails with ResourceExhausted ("instance too large for exact
// mode") when the number of datasets exceeds `cap`. Iteration is in
// lexicographic order of the (sorted, for kMultiset) record tuple.
class DatasetEnumeration {
 public:
  static absl::StatusOr<DatasetEnumeration> Create(
      const Distribution& prior, int n,
      DatasetOrdering ordering = DatasetOrdering::kOrdered,
      std::uint64_t cap = kDefaultEnumerationCap);

  std::uint64_t count() const { return count_; }
  int n() const { return n_; }
  DatasetOrdering ordering() const { return ordering_; }

  class Iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = WeightedDataset;
    using difference_type = std::ptrdiff_t;
    using pointer = const WeightedDataset*;
    using reference = const WeightedDataset&;

    Iterator() = default;

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    Iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const Iterator& a, const Iterator& b) {
      return a.done_ == b.done_ && (a.done_ || a.position_ == b.position_);
    }

   private:
    friend class DatasetEnumeration;
    Iterator(const DatasetEnumeration* owner, bool done);
    void Refresh();

    const DatasetEnumeration* owner_ = nullptr;
    std::vector<RecordId> digits_;
    std::uint64_t position_ = 0;
    bool done_ = true;
    WeightedDataset current_;
  };

  Iterator begin() const { return Iterator(this, count_ == 0); }
  Iterator end() const { return Iterator(this, true); }

  // Materializes the whole enumeration.
  std::vector<WeightedDataset> ToVector() const;

 private:
  DatasetEnumeration(const Distribution& prior, int n,
                     DatasetOrdering ordering, std::uint64_t count)
      : prior_(prior), n_(n), ordering_(ordering), count_(count) {}

  double Weight(const std::vector<RecordId>& records) const;

  Distribution prior_;
  int n_;
  DatasetOrdering ordering_;
  std::uint64_t count_;
};

// Number of distinct orderings of a sorted dataset: n! / prod(count_r!).
double OrderingsOfMultiset(const Dataset& sorted);

}  // namespace rerolab

#endif  // REROLAB_CORE_ENUMERATION_H_
