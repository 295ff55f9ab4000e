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

#include "rerolab/core/dataset.h"

#include <algorithm>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace rerolab {

Dataset Dataset::With(RecordId record) const {
  std::vector<RecordId> records = records_;
  records.push_back(record);
  return Dataset(std::move(records));
}

Dataset Dataset::Replaced(std::size_t i, RecordId record) const {
  std::vector<RecordId> records = records_;
  records.at(i) = record;
  return Dataset(std::move(records));
}

Dataset Dataset::Sorted() const {
  std::vector<RecordId> records = records_;
  std::sort(records.begin(), records.end());
  return Dataset(std::move(records));
}

absl::Status Dataset::Validate(const RecordUniverse& universe) const {
  for (std::size_t i = 0; i < records_.size(); ++i) {
    if (!universe.Contains(records_[i])) {
      return absl::InvalidArgumentError(
          absl::StrCat("record ", records_[i], " at position ", i,
                       " is outside a universe of size ", universe.size()));
    }
  }
  return absl::OkStatus();
}

std::string Dataset::Format(const RecordUniverse& universe) const {
  return absl::StrCat(
      "(",
      absl::StrJoin(records_, ",",
                    [&universe](std::string* out, RecordId r) {
                      absl::StrAppend(out, universe.Format(r));
                    }),
      ")");
}

}  // namespace rerolab
