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

#include "rerolab/core/enumeration.h"

#include <limits>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace rerolab {

std::uint64_t SaturatingMul(std::uint64_t a, std::uint64_t b) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  if (a != 0 && b > kMax / a) return kMax;
  return a * b;
}

std::uint64_t OrderedDatasetCount(std::uint64_t size, int n) {
  std::uint64_t count = 1;
  for (int i = 0; i < n; ++i) count = SaturatingMul(count, size);
  return count;
}

std::uint64_t MultisetCount(std::uint64_t size, int n) {
  // C(size + n - 1, n) built up as prod_{i=1..n} (size - 1 + i) / i; each
  // partial product is itself a binomial coefficient, so the division is
  // exact.
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t count = 1;
  for (int i = 1; i <= n; ++i) {
    const std::uint64_t factor = size - 1 + static_cast<std::uint64_t>(i);
    const std::uint64_t scaled = SaturatingMul(count, factor);
    if (scaled == kMax) return kMax;
    count = scaled / static_cast<std::uint64_t>(i);
  }
  return count;
}

std::uint64_t EncodeDataset(const Dataset& dataset, std::uint64_t size) {
  std::uint64_t index = 0;
  for (RecordId r : dataset) index = index * size + r;
  return index;
}

Dataset DecodeDataset(std::uint64_t index, std::uint64_t size, int n) {
  std::vector<RecordId> records(n);
  for (int i = n - 1; i >= 0; --i) {
    records[i] = static_cast<RecordId>(index % size);
    index /= size;
  }
  return Dataset(std::move(records));
}

double OrderingsOfMultiset(const Dataset& sorted) {
  // n! / prod(c!) accumulated run by run: multiply by
  // C(position_so_far + run, run).
  double orderings = 1.0;
  int placed = 0;
  for (int i = 0; i < sorted.n();) {
    int j = i;
    while (j < sorted.n() && sorted[j] == sorted[i]) ++j;
    const int run = j - i;
    for (int k = 1; k <= run; ++k) {
      orderings = orderings * static_cast<double>(placed + k) / k;
    }
    placed += run;
    i = j;
  }
  return orderings;
}

absl::StatusOr<DatasetEnumeration> DatasetEnumeration::Create(
    const Distribution& prior, int n, DatasetOrdering ordering,
    std::uint64_t cap) {
  if (n < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("dataset size must be >= 1, got ", n));
  }
  const std::uint64_t size = prior.universe().size();
  const std::uint64_t count = ordering == DatasetOrdering::kOrdered
                                  ? OrderedDatasetCount(size, n)
                                  : MultisetCount(size, n);
  if (count > cap) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "instance too large for exact mode: ", count,
        " datasets exceed the enumeration cap of ", cap));
  }
  return DatasetEnumeration(prior, n, ordering, count);
}

double DatasetEnumeration::Weight(const std::vector<RecordId>& records) const {
  double p = 1.0;
  for (RecordId r : records) p *= prior_.Probability(r);
  if (ordering_ == DatasetOrdering::kMultiset) {
    p *= OrderingsOfMultiset(Dataset(records));
  }
  return p;
}

DatasetEnumeration::Iterator::Iterator(const DatasetEnumeration* owner,
                                       bool done)
    : owner_(owner), done_(done) {
  if (!done_) {
    digits_.assign(owner_->n_, 0);
    Refresh();
  }
}

void DatasetEnumeration::Iterator::Refresh() {
  current_.dataset = Dataset(digits_);
  current_.probability = owner_->Weight(digits_);
}

DatasetEnumeration::Iterator& DatasetEnumeration::Iterator::operator++() {
  const auto size = static_cast<RecordId>(owner_->prior_.universe().size());
  const int n = owner_->n_;
  int i = n - 1;
  while (i >= 0 && digits_[i] + 1 == size) --i;
  if (i < 0) {
    done_ = true;
    return *this;
  }
  ++digits_[i];
  // Ordered: reset the tail to 0. Multiset: keep the tuple non-decreasing.
  const RecordId fill =
      owner_->ordering_ == DatasetOrdering::kMultiset ? digits_[i] : 0;
  for (int j = i + 1; j < n; ++j) digits_[j] = fill;
  ++position_;
  Refresh();
  return *this;
}

std::vector<WeightedDataset> DatasetEnumeration::ToVector() const {
  std::vector<WeightedDataset> out;
  out.reserve(count_);
  for (const WeightedDataset& wd : *this) out.push_back(wd);
  return out;
}

}  // namespace rerolab
