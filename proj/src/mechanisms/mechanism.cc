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

#include "rerolab/mechanisms/mechanism.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "rerolab/base/status_macros.h"
#include "rerolab/core/enumeration.h"

namespace rerolab {
namespace {

class ConstantMechanism final : public Mechanism {
 public:
  ConstantMechanism(MechanismSpec spec, RecordUniverse universe, int n)
      : Mechanism(std::move(spec), std::move(universe), n) {}

  std::uint64_t AlphabetSize() const override { return 1; }
  bool PermutationInvariant() const override { return true; }
  std::string FormatSymbol(OutputSymbol) const override {
    return std::string(kBottomSymbol);
  }
  void FillOutputPmf(const Dataset&, std::vector<double>& pmf) const override {
    pmf.assign(1, 1.0);
  }
  double OutputProbability(const Dataset&, OutputSymbol symbol) const override {
    return symbol == 0 ? 1.0 : 0.0;
  }
  OutputSymbol Sample(const Dataset&, StreamEngine&) const override {
    return 0;
  }
};

// Releases the dataset itself, encoded as a mixed-radix index.
class IdentityMechanism final : public Mechanism {
 public:
  IdentityMechanism(MechanismSpec spec, RecordUniverse universe, int n,
                    std::uint64_t alphabet)
      : Mechanism(spec, std::move(universe), n), alphabet_(alphabet) {}

  std::uint64_t AlphabetSize() const override { return alphabet_; }
  bool PermutationInvariant() const override { return false; }
  std::string FormatSymbol(OutputSymbol symbol) const override {
    return DecodeDataset(symbol, universe().size(), n()).Format(universe());
  }
  void FillOutputPmf(const Dataset& x, std::vector<double>& pmf) const override {
    pmf.assign(alphabet_, 0.0);
    pmf[EncodeDataset(x, universe().size())] = 1.0;
  }
  double OutputProbability(const Dataset& x,
                           OutputSymbol symbol) const override {
    return EncodeDataset(x, universe().size()) == symbol ? 1.0 : 0.0;
  }
  OutputSymbol Sample(const Dataset& x, StreamEngine&) const override {
    return EncodeDataset(x, universe().size());
  }

 private:
  std::uint64_t alphabet_;
};

// k-ary randomized response applied to every record independently. The
// output is the vector of reports, encoded like an identity output.
class RandomizedResponseMechanism final : public Mechanism {
 public:
  RandomizedResponseMechanism(MechanismSpec spec, RecordUniverse universe,
                              int n, std::uint64_t alphabet)
      : Mechanism(spec, std::move(universe), n), alphabet_(alphabet) {
    const double size = static_cast<double>(this->universe().size());
    const double e = std::exp(spec.epsilon);
    truthful_ = e / (e + size - 1.0);
    other_ = 1.0 / (e + size - 1.0);
  }

  double truthful_probability() const { return truthful_; }

  std::uint64_t AlphabetSize() const override { return alphabet_; }
  bool PermutationInvariant() const override { return false; }
  std::string FormatSymbol(OutputSymbol symbol) const override {
    return DecodeDataset(symbol, universe().size(), n()).Format(universe());
  }

  void FillOutputPmf(const Dataset& x, std::vector<double>& pmf) const override {
    const std::uint64_t size = universe().size();
    pmf.assign(alphabet_, 0.0);
    pmf[0] = 1.0;
    std::uint64_t filled = 1;
    // Expand one report at a time; entries [0, filled) hold the law of the
    // reports so far.
    for (RecordId truth : x) {
      for (std::uint64_t j = filled; j-- > 0;) {
        const double mass = pmf[j];
        for (std::uint64_t r = 0; r < size; ++r) {
          pmf[j * size + r] = mass * (r == truth ? truthful_ : other_);
        }
      }
      filled *= size;
    }
  }

  double OutputProbability(const Dataset& x,
                           OutputSymbol symbol) const override {
    const Dataset reports = DecodeDataset(symbol, universe().size(), n());
    double p = 1.0;
    for (int i = 0; i < n(); ++i) p *= reports[i] == x[i] ? truthful_ : other_;
    return p;
  }

  OutputSymbol Sample(const Dataset& x, StreamEngine& engine) const override {
    const std::uint64_t size = universe().size();
    std::uint64_t symbol = 0;
    for (RecordId truth : x) {
      std::uint64_t report = truth;
      if (size > 1 && UniformUnit(engine) >= truthful_) {
        // Uniform over the size-1 other records.
        report = UniformIndex(engine, size - 1);
        if (report >= truth) ++report;
      }
      symbol = symbol * size + report;
    }
    return symbol;
  }

 private:
  std::uint64_t alphabet_;
  double truthful_ = 1.0;
  double other_ = 0.0;
};

// Histogram of the dataset with independent two-sided geometric noise of
// parameter epsilon/2 per cell, clamped to [0, n]. Mass beyond either end is
// folded onto the endpoint.
class NoisyHistogramMechanism final : public Mechanism {
 public:
  NoisyHistogramMechanism(MechanismSpec spec, RecordUniverse universe, int n,
                          std::uint64_t alphabet)
      : Mechanism(spec, std::move(universe), n), alphabet_(alphabet) {
    const int levels = n + 1;
    const double alpha = std::exp(-spec.epsilon / 2.0);
    cell_pmf_.assign(levels, std::vector<double>(levels, 0.0));
    cell_cdf_.assign(levels, std::vector<double>(levels, 0.0));
    for (int h = 0; h < levels; ++h) {
      for (int v = 0; v < levels; ++v) {
        double p;
        if (v == 0) {
          p = std::pow(alpha, h) / (1.0 + alpha);
        } else if (v == n) {
          p = std::pow(alpha, n - h) / (1.0 + alpha);
        } else {
          p = (1.0 - alpha) / (1.0 + alpha) * std::pow(alpha, std::abs(v - h));
        }
        cell_pmf_[h][v] = p;
        cell_cdf_[h][v] = (v == 0 ? 0.0 : cell_cdf_[h][v - 1]) + p;
      }
    }
  }

  std::uint64_t AlphabetSize() const override { return alphabet_; }
  bool PermutationInvariant() const override { return true; }

  std::string FormatSymbol(OutputSymbol symbol) const override {
    return absl::StrCat("[", absl::StrJoin(Cells(symbol), ","), "]");
  }

  void FillOutputPmf(const Dataset& x, std::vector<double>& pmf) const override {
    const std::vector<int> counts = Counts(x);
    const std::uint64_t levels = n() + 1;
    pmf.assign(alphabet_, 0.0);
    pmf[0] = 1.0;
    std::uint64_t filled = 1;
    for (int count : counts) {
      const std::vector<double>& row = cell_pmf_[count];
      for (std::uint64_t j = filled; j-- > 0;) {
        const double mass = pmf[j];
        for (std::uint64_t v = 0; v < levels; ++v) {
          pmf[j * levels + v] = mass * row[v];
        }
      }
      filled *= levels;
    }
  }

  double OutputProbability(const Dataset& x,
                           OutputSymbol symbol) const override {
    const std::vector<int> counts = Counts(x);
    const std::vector<int> cells = Cells(symbol);
    double p = 1.0;
    for (std::size_t c = 0; c < counts.size(); ++c) {
      p *= cell_pmf_[counts[c]][cells[c]];
    }
    return p;
  }

  OutputSymbol Sample(const Dataset& x, StreamEngine& engine) const override {
    const std::uint64_t levels = n() + 1;
    std::uint64_t symbol = 0;
    for (int count : Counts(x)) {
      symbol = symbol * levels + SampleFromCdf(engine, cell_cdf_[count]);
    }
    return symbol;
  }

 private:
  std::vector<int> Counts(const Dataset& x) const {
    std::vector<int> counts(universe().size(), 0);
    for (RecordId r : x) ++counts[r];
    return counts;
  }

  std::vector<int> Cells(OutputSymbol symbol) const {
    const std::uint64_t levels = n() + 1;
    std::vector<int> cells(universe().size());
    for (std::size_t c = cells.size(); c-- > 0;) {
      cells[c] = static_cast<int>(symbol % levels);
      symbol /= levels;
    }
    return cells;
  }

  std::uint64_t alphabet_;
  std::vector<std::vector<double>> cell_pmf_;  // [true count][released]
  std::vector<std::vector<double>> cell_cdf_;
};

class SeparationMechanism final : public Mechanism {
 public:
  SeparationMechanism(MechanismSpec spec, RecordUniverse universe, int n)
      : Mechanism(std::move(spec), std::move(universe), n) {}

  std::uint64_t AlphabetSize() const override { return universe().size() + 1; }
  bool PermutationInvariant() const override { return true; }
  std::string FormatSymbol(OutputSymbol symbol) const override {
    const std::optional<RecordId> record =
        SeparationSymbolToRecord(universe(), symbol);
    return record ? universe().Format(*record) : std::string(kBottomSymbol);
  }
  void FillOutputPmf(const Dataset& x, std::vector<double>& pmf) const override {
    pmf.assign(AlphabetSize(), 0.0);
    pmf[Release(x)] = 1.0;
  }
  double OutputProbability(const Dataset& x,
                           OutputSymbol symbol) const override {
    return Release(x) == symbol ? 1.0 : 0.0;
  }
  OutputSymbol Sample(const Dataset& x, StreamEngine&) const override {
    return Release(x);
  }

 private:
  OutputSymbol Release(const Dataset& x) const {
    return SeparationSymbol(universe(), SeparationRelease(x));
  }
};

}  // namespace

absl::StatusOr<DpParameters> DpParameters::Create(double epsilon,
                                                  double delta) {
  if (!(epsilon >= 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("epsilon must be >= 0, got ", epsilon));
  }
  if (!(delta >= 0.0 && delta <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("delta must lie in [0, 1], got ", delta));
  }
  return DpParameters{epsilon, delta};
}

std::string MechanismKindName(MechanismKind kind) {
  switch (kind) {
    case MechanismKind::kConstant:
      return "constant";
    case MechanismKind::kIdentity:
      return "identity";
    case MechanismKind::kRandomizedResponse:
      return "randomized_response";
    case MechanismKind::kNoisyHistogram:
      return "noisy_histogram";
    case MechanismKind::kSeparation:
      return "separation";
  }
  return "";
}

absl::StatusOr<MechanismKind> ParseMechanismKind(absl::string_view name) {
  for (MechanismKind kind :
       {MechanismKind::kConstant, MechanismKind::kIdentity,
        MechanismKind::kRandomizedResponse, MechanismKind::kNoisyHistogram,
        MechanismKind::kSeparation}) {
    if (MechanismKindName(kind) == name) return kind;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown mechanism kind '", name, "'"));
}

bool MechanismTakesEpsilon(MechanismKind kind) {
  return kind == MechanismKind::kRandomizedResponse ||
         kind == MechanismKind::kNoisyHistogram;
}

absl::Status Mechanism::CheckDataset(const Dataset& x) const {
  if (x.n() != n_) {
    return absl::InvalidArgumentError(absl::StrCat(
        "mechanism expects ", n_, " records, dataset has ", x.n()));
  }
  return x.Validate(universe_);
}

absl::StatusOr<OutputDistribution> Mechanism::GetOutputDistribution(
    const Dataset& x) const {
  REROLAB_RETURN_IF_ERROR(CheckDataset(x));
  OutputDistribution out;
  FillOutputPmf(x, out.pmf);
  return out;
}

absl::StatusOr<OutputSymbol> Mechanism::SampleOutput(const Dataset& x,
                                                     std::uint64_t seed,
                                                     std::uint64_t trial) const {
  REROLAB_RETURN_IF_ERROR(CheckDataset(x));
  StreamEngine engine = MakeTrialEngine(seed, trial);
  return Sample(x, engine);
}

absl::StatusOr<std::shared_ptr<const Mechanism>> CreateMechanism(
    const MechanismSpec& spec, const RecordUniverse& universe, int n) {
  if (n < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("dataset size must be >= 1, got ", n));
  }
  if (MechanismTakesEpsilon(spec.kind) &&
      !(spec.epsilon >= 0.0 && std::isfinite(spec.epsilon))) {
    return absl::InvalidArgumentError(
        absl::StrCat(MechanismKindName(spec.kind),
                     " needs a finite epsilon >= 0, got ", spec.epsilon));
  }
  const auto too_large = [&](std::uint64_t alphabet) {
    return absl::InvalidArgumentError(absl::StrCat(
        MechanismKindName(spec.kind), " alphabet of ", alphabet,
        " symbols exceeds the supported maximum of ", kMaxAlphabetSize));
  };
  switch (spec.kind) {
    case MechanismKind::kConstant:
      return std::make_shared<ConstantMechanism>(spec, universe, n);
    case MechanismKind::kIdentity:
    case MechanismKind::kRandomizedResponse: {
      const std::uint64_t alphabet = OrderedDatasetCount(universe.size(), n);
      if (alphabet > kMaxAlphabetSize) return too_large(alphabet);
      if (spec.kind == MechanismKind::kIdentity) {
        return std::make_shared<IdentityMechanism>(spec, universe, n, alphabet);
      }
      return std::make_shared<RandomizedResponseMechanism>(spec, universe, n,
                                                           alphabet);
    }
    case MechanismKind::kNoisyHistogram: {
      // (n+1)^size saturates well before size reaches 64.
      const std::uint64_t alphabet = OrderedDatasetCount(
          static_cast<std::uint64_t>(n) + 1,
          static_cast<int>(std::min<std::uint64_t>(universe.size(), 64)));
      if (alphabet > kMaxAlphabetSize) return too_large(alphabet);
      return std::make_shared<NoisyHistogramMechanism>(spec, universe, n,
                                                       alphabet);
    }
    case MechanismKind::kSeparation:
      if (universe.kind() != RecordUniverse::Kind::kBitstring) {
        return absl::InvalidArgumentError(
            "separation mechanism needs a bitstring universe");
      }
      return std::make_shared<SeparationMechanism>(spec, universe, n);
  }
  return absl::InternalError("unreachable");
}

std::optional<RecordId> SeparationRelease(const Dataset& x) {
  int zeros = 0;
  std::optional<RecordId> extra;
  for (RecordId r : x) {
    if (r == 0) {
      ++zeros;
    } else if (!extra) {
      extra = r;
    }
  }
  if (zeros < x.n() - 1) return std::nullopt;
  return extra.value_or(0);
}

OutputSymbol SeparationSymbol(const RecordUniverse& universe,
                              std::optional<RecordId> release) {
  return release ? static_cast<OutputSymbol>(*release) : universe.size();
}

std::optional<RecordId> SeparationSymbolToRecord(const RecordUniverse& universe,
                                                 OutputSymbol symbol) {
  if (symbol >= universe.size()) return std::nullopt;
  return static_cast<RecordId>(symbol);
}

}  // namespace rerolab
