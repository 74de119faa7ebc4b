// Copyright 2026 The hnp-kit Authors
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

#ifndef HNP_VERIFY_HPP
#define HNP_VERIFY_HPP

#include "hnp/algebra_file.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hnp {

/// An algebra of the verification population. Level 0 is the fixture
/// catalog; level l + 1 is obtained from level l by one construction.
struct PopulationMember {
  std::string name;
  QAlgebra algebra;
  int level = 0;
  std::vector<std::string> basis_names;
  std::optional<QLinearMap> derivation;
  bool multiplicative = false;
};

/// Deterministic for fixed arguments. Members of level `depth` are built but
/// not expanded further. With `corrupt` set, one structure constant of the
/// first catalog member of dimension >= 2 is altered so that it is no longer
/// commutative.
std::vector<PopulationMember> build_population(std::uint64_t seed, int depth, bool corrupt = false);

/// Id, 0, alpha, alpha^2, the projection onto the first basis vector and,
/// when a nilpotent derivation is known, exp of it; only those that pass
/// check_weak_morphism are returned.
std::vector<QLinearMap> candidate_weak_morphisms(const PopulationMember& member);

/// Basis columns of `space`, plus their sum when there are several.
std::vector<QVector> sample_elements(const QMatrix& space, std::size_t limit = 3);

struct VerifyOptions {
  std::uint64_t seed = 0;
  int depth = 2;
  bool corrupt = false;
};

struct TheoremTally {
  std::string theorem;
  std::size_t instances = 0;
  std::size_t failures = 0;
};

struct VerifyFailure {
  std::string theorem;
  std::string instance;
  std::string detail;
  AlgebraFile algebra;
  std::optional<Witness<Rational>> witness;
};

struct VerifyReport {
  std::vector<TheoremTally> tallies;
  std::vector<VerifyFailure> failures;
  std::size_t population = 0;

  bool passed() const { return failures.empty(); }
  std::size_t total_instances() const;
  const TheoremTally* tally(std::string_view theorem) const;
  /// Failure whose offending algebra has the smallest dimension.
  const VerifyFailure* minimal_failure() const;
};

VerifyReport run_verify(const VerifyOptions& options);

}  // namespace hnp

#endif  // HNP_VERIFY_HPP
