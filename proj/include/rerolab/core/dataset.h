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

#ifndef REROLAB_CORE_DATASET_H_
#define REROLAB_CORE_DATASET_H_

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "rerolab/core/universe.h"

namespace rerolab {

// An ordered list of records; position i holds x_i.
class Dataset {
 public:
  Dataset() = default;
  explicit Dataset(std::vector<RecordId> records)
      : records_(std::move(records)) {}

  int n() const { return static_cast<int>(records_.size()); }
  bool empty() const { return records_.empty(); }
  RecordId operator[](std::size_t i) const { return records_[i]; }
  std::span<const RecordId> records() const { return records_; }

  auto begin() const { return records_.begin(); }
  auto end() const { return records_.end(); }

  // Copy with `record` appended as the last position.
  Dataset With(RecordId record) const;

  // Copy with position `i` replaced by `record`.
  Dataset Replaced(std::size_t i, RecordId record) const;

  // Records sorted ascending: the canonical representative of the multiset.
  Dataset Sorted() const;

  absl::Status Validate(const RecordUniverse& universe) const;

  std::string Format(const RecordUniverse& universe) const;

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  std::vector<RecordId> records_;
};

}  // namespace rerolab

#endif  // REROLAB_CORE_DATASET_H_
