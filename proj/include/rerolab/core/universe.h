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

#ifndef REROLAB_CORE_UNIVERSE_H_
#define REROLAB_CORE_UNIVERSE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace rerolab {

// Dense index of a record inside its universe, in [0, universe.size()).
using RecordId = std::uint32_t;

// Largest universe we are willing to index densely.
inline constexpr std::uint64_t kMaxUniverseSize = std::uint64_t{1} << 24;

// A finite record space. Records are handled as dense indices everywhere
// except at I/O boundaries (Format/Parse).
//
//   bitstring(k):          size 2^k. Index i is the k-bit binary string of i,
//                          most significant bit first ("0110" == 6).
//   categorical(labels):   size |labels|, index i is labels[i].
//   int_vector(dims,lo,hi): size (hi-lo+1)^dims, mixed radix with the first
//                          coordinate most significant.
class RecordUniverse {
 public:
  enum class Kind { kBitstring, kCategorical, kIntVector };

  static absl::StatusOr<RecordUniverse> Bitstring(int bits);
  static absl::StatusOr<RecordUniverse> Categorical(
      std::vector<std::string> labels);
  static absl::StatusOr<RecordUniverse> IntVector(int dims, std::int64_t lo,
                                                  std::int64_t hi);

  Kind kind() const { return kind_; }
  std::uint64_t size() const { return size_; }

  // Coordinate count: k for bitstrings, dims for int vectors, 1 otherwise.
  int dims() const { return dims_; }
  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return hi_; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool Contains(std::uint64_t index) const { return index < size_; }

  // Coordinate vector of a record: bits for bitstrings, integer values for
  // int vectors, {index} for categorical records.
  std::vector<std::int64_t> Coordinates(RecordId record) const;
  absl::StatusOr<RecordId> FromCoordinates(
      const std::vector<std::int64_t>& coordinates) const;

  // The all-ones bitstring (or last record for other kinds).
  RecordId LastRecord() const { return static_cast<RecordId>(size_ - 1); }

  std::string Format(RecordId record) const;
  absl::StatusOr<RecordId> Parse(absl::string_view text) const;

  std::string KindName() const;

  friend bool operator==(const RecordUniverse& a, const RecordUniverse& b) {
    return a.kind_ == b.kind_ && a.size_ == b.size_ && a.dims_ == b.dims_ &&
           a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.labels_ == b.labels_;
  }

 private:
  RecordUniverse() = default;

  Kind kind_ = Kind::kBitstring;
  std::uint64_t size_ = 1;
  int dims_ = 0;
  std::int64_t lo_ = 0;
  std::int64_t hi_ = 0;
  std::vector<std::string> labels_;
};

}  // namespace rerolab

#endif  // REROLAB_CORE_UNIVERSE_H_
