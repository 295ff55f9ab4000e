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

#include "rerolab/core/universe.h"

#include <charconv>
#include <set>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"

namespace rerolab {

absl::StatusOr<RecordUniverse> RecordUniverse::Bitstring(int bits) {
  if (bits < 1 || bits > 24) {
    return absl::InvalidArgumentError(
        absl::StrCat("bitstring universe needs 1 <= k <= 24, got ", bits));
  }
  RecordUniverse u;
  u.kind_ = Kind::kBitstring;
  u.dims_ = bits;
  u.lo_ = 0;
  u.hi_ = 1;
  u.size_ = std::uint64_t{1} << bits;
  return u;
}

absl::StatusOr<RecordUniverse> RecordUniverse::Categorical(
    std::vector<std::string> labels) {
  if (labels.empty()) {
    return absl::InvalidArgumentError("categorical universe needs labels");
  }
  if (labels.size() > kMaxUniverseSize) {
    return absl::InvalidArgumentError("categorical universe too large");
  }
  std::set<std::string> seen;
  for (const std::string& label : labels) {
    if (label.empty()) {
      return absl::InvalidArgumentError("categorical labels must be non-empty");
    }
    if (!seen.insert(label).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate categorical label '", label, "'"));
    }
  }
  RecordUniverse u;
  u.kind_ = Kind::kCategorical;
  u.dims_ = 1;
  u.size_ = labels.size();
  u.labels_ = std::move(labels);
  return u;
}

absl::StatusOr<RecordUniverse> RecordUniverse::IntVector(int dims,
                                                         std::int64_t lo,
                                                         std::int64_t hi) {
  if (dims < 1) {
    return absl::InvalidArgumentError("int_vector universe needs dims >= 1");
  }
  if (hi < lo) {
    return absl::InvalidArgumentError("int_vector universe needs lo <= hi");
  }
  const std::uint64_t radix = static_cast<std::uint64_t>(hi - lo) + 1;
  std::uint64_t size = 1;
  for (int d = 0; d < dims; ++d) {
    if (size > kMaxUniverseSize / radix) {
      return absl::InvalidArgumentError("int_vector universe too large");
    }
    size *= radix;
  }
  RecordUniverse u;
  u.kind_ = Kind::kIntVector;
  u.dims_ = dims;
  u.lo_ = lo;
  u.hi_ = hi;
  u.size_ = size;
  return u;
}

std::vector<std::int64_t> RecordUniverse::Coordinates(RecordId record) const {
  switch (kind_) {
    case Kind::kCategorical:
      return {static_cast<std::int64_t>(record)};
    case Kind::kBitstring:
    case Kind::kIntVector: {
      const std::uint64_t radix = static_cast<std::uint64_t>(hi_ - lo_) + 1;
      std::vector<std::int64_t> coords(dims_);
      std::uint64_t rest = record;
      for (int d = dims_ - 1; d >= 0; --d) {
        coords[d] = lo_ + static_cast<std::int64_t>(rest % radix);
        rest /= radix;
      }
      return coords;
    }
  }
  return {};
}

absl::StatusOr<RecordId> RecordUniverse::FromCoordinates(
    const std::vector<std::int64_t>& coordinates) const {
  if (kind_ == Kind::kCategorical) {
    if (coordinates.size() != 1 || coordinates[0] < 0 ||
        static_cast<std::uint64_t>(coordinates[0]) >= size_) {
      return absl::InvalidArgumentError("categorical coordinate out of range");
    }
    return static_cast<RecordId>(coordinates[0]);
  }
  if (static_cast<int>(coordinates.size()) != dims_) {
    return absl::InvalidArgumentError(absl::StrCat(
        "expected ", dims_, " coordinates, got ", coordinates.size()));
  }
  const std::uint64_t radix = static_cast<std::uint64_t>(hi_ - lo_) + 1;
  std::uint64_t index = 0;
  for (std::int64_t c : coordinates) {
    if (c < lo_ || c > hi_) {
      return absl::InvalidArgumentError(
          absl::StrCat("coordinate ", c, " outside [", lo_, ", ", hi_, "]"));
    }
    index = index * radix + static_cast<std::uint64_t>(c - lo_);
  }
  return static_cast<RecordId>(index);
}

std::string RecordUniverse::Format(RecordId record) const {
  switch (kind_) {
    case Kind::kBitstring: {
      std::string out(dims_, '0');
      for (int b = 0; b < dims_; ++b) {
        if ((record >> (dims_ - 1 - b)) & 1u) out[b] = '1';
      }
      return out;
    }
    case Kind::kCategorical:
      return labels_.at(record);
    case Kind::kIntVector: {
      const std::vector<std::int64_t> coords = Coordinates(record);
      if (dims_ == 1) return absl::StrCat(coords[0]);
      return absl::StrCat("(", absl::StrJoin(coords, ","), ")");
    }
  }
  return "";
}

absl::StatusOr<RecordId> RecordUniverse::Parse(absl::string_view text) const {
  switch (kind_) {
    case Kind::kBitstring: {
      if (static_cast<int>(text.size()) != dims_) {
        return absl::InvalidArgumentError(absl::StrCat(
            "bitstring '", text, "' does not have ", dims_, " bits"));
      }
      RecordId index = 0;
      for (char c : text) {
        if (c != '0' && c != '1') {
          return absl::InvalidArgumentError(
              absl::StrCat("bad bitstring '", text, "'"));
        }
        index = (index << 1) | static_cast<RecordId>(c - '0');
      }
      return index;
    }
    case Kind::kCategorical: {
      for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == text) return static_cast<RecordId>(i);
      }
      return absl::InvalidArgumentError(
          absl::StrCat("unknown label '", text, "'"));
    }
    case Kind::kIntVector: {
      absl::string_view body = text;
      if (absl::ConsumePrefix(&body, "(")) {
        if (!absl::ConsumeSuffix(&body, ")")) {
          return absl::InvalidArgumentError(
              absl::StrCat("bad int vector '", text, "'"));
        }
      }
      std::vector<std::int64_t> coords;
      for (absl::string_view part : absl::StrSplit(body, ',')) {
        std::int64_t value = 0;
        const auto [ptr, ec] =
            std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc() || ptr != part.data() + part.size()) {
          return absl::InvalidArgumentError(
              absl::StrCat("bad int vector '", text, "'"));
        }
        coords.push_back(value);
      }
      return FromCoordinates(coords);
    }
  }
  return absl::InternalError("unreachable");
}

std::string RecordUniverse::KindName() const {
  switch (kind_) {
    case Kind::kBitstring:
      return "bitstring";
    case Kind::kCategorical:
      return "categorical";
    case Kind::kIntVector:
      return "int_vector";
  }
  return "";
}

}  // namespace rerolab
