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

#ifndef REROLAB_MECHANISMS_MECHANISM_H_
#define REROLAB_MECHANISMS_MECHANISM_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "rerolab/core/dataset.h"
#include "rerolab/core/seeding.h"
#include "rerolab/core/universe.h"

namespace rerolab {

// Pure (epsilon, delta) privacy parameters. Everything downstream of the DP
// meter works with delta == 0.
struct DpParameters {
  double epsilon = 0.0;
  double delta = 0.0;

  // epsilon may be +infinity; delta must lie in [0, 1].
  static absl::StatusOr<DpParameters> Create(double epsilon, double delta);
};

enum class MechanismKind {
  kConstant,
  kIdentity,
  kRandomizedResponse,
  kNoisyHistogram,
  kSeparation,
};

std::string MechanismKindName(MechanismKind kind);
absl::StatusOr<MechanismKind> ParseMechanismKind(absl::string_view name);
bool MechanismTakesEpsilon(MechanismKind kind);

struct MechanismSpec {
  MechanismKind kind = MechanismKind::kConstant;
  // Used by randomized_response and noisy_histogram only.
  double epsilon = 0.0;

  friend bool operator==(const MechanismSpec&, const MechanismSpec&) = default;
};

// Output symbols are dense indices into a finite, dataset-independent
// alphabet [0, AlphabetSize()).
using OutputSymbol = std::uint64_t;

// Dense alphabets above this size are rejected.
inline constexpr std::uint64_t kMaxAlphabetSize = std::uint64_t{1} << 26;

struct OutputDistribution {
  std::vector<double> pmf;  // indexed by OutputSymbol

  std::uint64_t alphabet_size() const { return pmf.size(); }
};

// A randomized map X^n -> Theta with an exactly computable output law.
//
// Implementations are immutable; every method is safe to call concurrently.
class Mechanism {
 public:
  virtual ~Mechanism() = default;

  const MechanismSpec& spec() const { return spec_; }
  const RecordUniverse& universe() const { return universe_; }
  int n() const { return n_; }

  virtual std::uint64_t AlphabetSize() const = 0;

  // True when the output law depends only on the multiset of records.
  virtual bool PermutationInvariant() const = 0;

  virtual std::string FormatSymbol(OutputSymbol symbol) const = 0;

  // Unchecked fast paths; `x` must have n records from the universe.
  virtual void FillOutputPmf(const Dataset& x, std::vector<double>& pmf) const = 0;
  virtual double OutputProbability(const Dataset& x,
                                   OutputSymbol symbol) const = 0;
  virtual OutputSymbol Sample(const Dataset& x, StreamEngine& engine) const = 0;

  // Checked versions.
  absl::StatusOr<OutputDistribution> GetOutputDistribution(
      const Dataset& x) const;
  absl::StatusOr<OutputSymbol> SampleOutput(const Dataset& x,
                                            std::uint64_t seed,
                                            std::uint64_t trial) const;

  absl::Status CheckDataset(const Dataset& x) const;

 protected:
  Mechanism(MechanismSpec spec, RecordUniverse universe, int n)
      : spec_(spec), universe_(std::move(universe)), n_(n) {}

 private:
  MechanismSpec spec_;
  RecordUniverse universe_;
  int n_;
};

// Fails on an unsupported (kind, universe) pairing, a bad epsilon, or an
// alphabet larger than kMaxAlphabetSize.
absl::StatusOr<std::shared_ptr<const Mechanism>> CreateMechanism(
    const MechanismSpec& spec, const RecordUniverse& universe, int n);

// The release rule of the separating mechanism: when at least n-1 records
// are the all-zeros record, the remaining record (all-zeros if every record
// is zero); otherwise nothing (the bottom symbol).
std::optional<RecordId> SeparationRelease(const Dataset& x);

// Symbol layout of the separation mechanism: record r is symbol r and bottom
// is symbol universe.size().
OutputSymbol SeparationSymbol(const RecordUniverse& universe,
                              std::optional<RecordId> release);
std::optional<RecordId> SeparationSymbolToRecord(const RecordUniverse& universe,
                                                 OutputSymbol symbol);

inline constexpr std::string_view kBottomSymbol = "⊥";

}  // namespace rerolab

#endif  // REROLAB_MECHANISMS_MECHANISM_H_
