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

#include "rerolab/core/loss.h"

#include <bit>
#include <cmath>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "rerolab/base/status_macros.h"

namespace rerolab {

std::string LossKindName(LossKind kind) {
  switch (kind) {
    case LossKind::kExactMatch:
      return "exact_match";
    case LossKind::kHamming:
      return "hamming";
    case LossKind::kAbsolute:
      return "absolute";
  }
  return "";
}

absl::StatusOr<LossKind> ParseLossKind(absl::string_view name) {
  if (name == "exact_match") return LossKind::kExactMatch;
  if (name == "hamming") return LossKind::kHamming;
  if (name == "absolute") return LossKind::kAbsolute;
  return absl::InvalidArgumentError(absl::StrCat("unknown loss kind '", name, "'"));
}

absl::StatusOr<LossFunction> LossFunction::Create(
    const LossSpec& spec, const RecordUniverse& universe) {
  if (!(spec.eta >= 0.0) || std::isinf(spec.eta)) {
    return absl::InvalidArgumentError(
        absl::StrCat("loss threshold eta must be finite and >= 0, got ",
                     spec.eta));
  }
  using Kind = RecordUniverse::Kind;
  switch (spec.kind) {
    case LossKind::kExactMatch:
      break;
    case LossKind::kHamming:
      if (universe.kind() == Kind::kCategorical) {
        return absl::InvalidArgumentError(
            "hamming loss needs a bitstring or int_vector universe");
      }
      break;
    case LossKind::kAbsolute:
      if (universe.kind() != Kind::kIntVector || universe.dims() != 1) {
        return absl::InvalidArgumentError(
            "absolute loss needs a one-dimensional int_vector universe");
      }
      break;
  }
  return LossFunction(spec, universe);
}

double LossFunction::operator()(RecordId a, RecordId b) const {
  switch (spec_.kind) {
    case LossKind::kExactMatch:
      return a == b ? 0.0 : 1.0;
    case LossKind::kHamming: {
      if (universe_.kind() == RecordUniverse::Kind::kBitstring) {
        return static_cast<double>(std::popcount(a ^ b));
      }
      const std::vector<std::int64_t> ca = universe_.Coordinates(a);
      const std::vector<std::int64_t> cb = universe_.Coordinates(b);
      int differing = 0;
      for (std::size_t i = 0; i < ca.size(); ++i) differing += ca[i] != cb[i];
      return differing;
    }
    case LossKind::kAbsolute:
      // Same radix and offset on both sides, so index distance is value
      // distance.
      return a > b ? static_cast<double>(a - b) : static_cast<double>(b - a);
  }
  return 0.0;
}

absl::StatusOr<double> Loss(const LossSpec& spec,
                            const RecordUniverse& universe, RecordId a,
                            RecordId b) {
  REROLAB_ASSIGN_OR_RETURN(LossFunction loss,
                           LossFunction::Create(spec, universe));
  if (!universe.Contains(a) || !universe.Contains(b)) {
    return absl::InvalidArgumentError("record outside universe");
  }
  return loss(a, b);
}

absl::StatusOr<std::vector<double>> GuessSuccessProbabilities(
    const Distribution& d, const LossSpec& loss) {
  const RecordUniverse& universe = d.universe();
  REROLAB_ASSIGN_OR_RETURN(LossFunction fn, LossFunction::Create(loss, universe));
  const std::uint64_t size = universe.size();
  std::vector<double> p(size, 0.0);
  if (loss.kind == LossKind::kExactMatch) {
    for (std::uint64_t z = 0; z < size; ++z) {
      p[z] = loss.eta >= 1.0 ? 1.0 : d.Probability(static_cast<RecordId>(z));
    }
    return p;
  }
  if (size > kGuessPairCap / size) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "universe of size ", size, " is too large for a ",
        LossKindName(loss.kind), " success table"));
  }
  const std::span<const double> pmf = d.pmf();
  for (std::uint64_t z = 0; z < size; ++z) {
    double total = 0.0;
    for (std::uint64_t x = 0; x < size; ++x) {
      if (pmf[x] > 0.0 && fn.Success(static_cast<RecordId>(x),
                                     static_cast<RecordId>(z))) {
        total += pmf[x];
      }
    }
    p[z] = total;
  }
  return p;
}

}  // namespace rerolab
