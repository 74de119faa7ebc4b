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

#include "hnp/verify.hpp"

#include "hnp/constructions.hpp"

#include <algorithm>
#include <random>
#include <utility>

namespace hnp {

namespace {

constexpr Index kMaxDerivedDim = 4;
constexpr Index kMaxTensorFactorDim = 3;
constexpr std::size_t kExpandPerLevel = 16;
constexpr std::size_t kTensorSample = 10;

// Portable partial Fisher-Yates: the first k entries of a seeded shuffle.
std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  k = std::min(k, n);
  for (std::size_t i = 0; i < k; ++i) std::swap(idx[i], idx[i + rng() % (n - i)]);
  idx.resize(k);
  return idx;
}

QVector seeded_combination(const QMatrix& basis, std::mt19937_64& rng) {
  QVector v = QVector::Zero(basis.rows());
  while (basis.cols() > 0 && v.isZero()) {
    for (Index c = 0; c < basis.cols(); ++c) {
      v += basis.col(c) * Rational(static_cast<int>(rng() % 5) - 2);
    }
  }
  return v;
}

bool contains(const std::vector<PopulationMember>& pop, const QAlgebra& a) {
  return std::any_of(pop.begin(), pop.end(), [&](const auto& m) { return m.algebra == a; });
}

std::vector<std::string> tensor_names(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(x + "⊗" + y);
  }
  return out;
}

// First differing component of two algebras, for failure prose.
std::string difference(const QAlgebra& lhs, const QAlgebra& rhs) {
  if (lhs.dim() != rhs.dim()) return "dimensions differ";
  auto first_col = [](const QMatrix& l, const QMatrix& r) {
    for (Index c = 0; c < l.cols(); ++c) {
      if (l.col(c) != r.col(c)) return c;
    }
    return Index{-1};
  };
  const Index n = lhs.dim();
  if (auto c = first_col(lhs.dot().constants(), rhs.dot().constants()); c >= 0) {
    return "dot differs at (e" + std::to_string(c / n) + ", e" + std::to_string(c % n) + ")";
  }
  if (auto c = first_col(lhs.star().constants(), rhs.star().constants()); c >= 0) {
    return "star differs at (e" + std::to_string(c / n) + ", e" + std::to_string(c % n) + ")";
  }
  if (auto c = first_col(lhs.alpha(), rhs.alpha()); c >= 0) return "alpha differs on e" + std::to_string(c);
  return "equal";
}

class Suite {
 public:
  void record(const std::string& theorem, const std::string& instance, const CheckReport<Rational>& report,
              const QAlgebra& subject, const std::vector<std::string>& names) {
    record(theorem, instance, report.passed, subject, names, report.passed ? "" : describe(report, names),
           report.witness);
  }

  void record(const std::string& theorem, const std::string& instance, bool ok, const QAlgebra& subject,
              const std::vector<std::string>& names, std::string detail,
              std::optional<Witness<Rational>> witness = std::nullopt) {
    TheoremTally& t = tally(theorem);
    ++t.instances;
    if (ok) return;
    ++t.failures;
    report_.failures.push_back(
        {theorem, instance, std::move(detail), AlgebraFile{subject, names, std::nullopt}, std::move(witness)});
  }

  VerifyReport take() { return std::move(report_); }
  void set_population(std::size_t n) { report_.population = n; }

 private:
  TheoremTally& tally(const std::string& theorem) {
    for (auto& t : report_.tallies) {
      if (t.theorem == theorem) return t;
    }
    report_.tallies.push_back({theorem, 0, 0});
    return report_.tallies.back();
  }

  VerifyReport report_;
};

CheckReport<Rational> all_of(IdentityId id, std::vector<CheckReport<Rational>> parts) {
  return detail::combine<Rational>(id, std::move(parts));
}

std::string beta_label(std::size_t i) {
  static const char* kLabels[] = {"Id", "0", "alpha", "alpha^2", "unit-projection", "exp(d)"};
  return i < std::size(kLabels) ? kLabels[i] : "beta" + std::to_string(i);
}

struct Subject {
  const PopulationMember* member;
  bool admissible;
};

void twist_theorems(Suite& suite, const Subject& s) {
  const auto& m = *s.member;
  const auto& a = m.algebra;
  const auto betas = candidate_weak_morphisms(m);
  const auto asl = left_hom_associator_table(a);
  for (std::size_t i = 0; i < betas.size(); ++i) {
    const QLinearMap& beta = betas[i];
    const std::string inst = m.name + " | beta=" + beta_label(i);
    const QAlgebra twisted = yau_twist(a, beta);
    std::vector<CheckReport<Rational>> parts{check_hnp(twisted)};
    if (m.multiplicative && beta * a.alpha() == a.alpha() * beta) parts.push_back(check_multiplicative(twisted));
    suite.record("twist-closure", inst, all_of(IdentityId::kHomNovikovPoisson, std::move(parts)), twisted,
                 m.basis_names);

    const bool bracket_ok = left_hom_associator_table(twisted) == asl.mapped(power(beta, 2));
    if (!bracket_ok) {
      suite.record("adm-twist", inst, false, twisted, m.basis_names,
                   "left Hom-associator of the twist is not beta^2 of the original");
    } else if (s.admissible) {
      suite.record("adm-twist", inst, is_admissible(twisted), twisted, m.basis_names);
    } else {
      suite.record("adm-twist", inst, true, twisted, m.basis_names, "");
    }
  }
}

void nth_twist_theorems(Suite& suite, const Subject& s) {
  const auto& m = *s.member;
  if (!m.multiplicative) return;
  for (unsigned n : {1U, 2U}) {
    const std::string inst = m.name + " | n=" + std::to_string(n);
    const QAlgebra out = nth_twist(m.algebra, n);
    suite.record("nth-twist", inst,
                 all_of(IdentityId::kHomNovikovPoisson, {check_hnp(out), check_multiplicative(out)}), out,
                 m.basis_names);
    if (s.admissible) suite.record("adm-nth-twist", inst, is_admissible(out), out, m.basis_names);
  }
}

void perturbation_theorems(Suite& suite, const Subject& s) {
  const auto& m = *s.member;
  if (!m.multiplicative) return;
  const auto& a = m.algebra;
  const auto as = sample_elements(perturbation_fixed_points(a, 2));
  const auto bs = sample_elements(perturbation_fixed_points(a, 4));
  for (std::size_t i = 0; i < as.size(); ++i) {
    const std::string inst = m.name + " | a#" + std::to_string(i);
    const QAlgebra diamond = perturb_diamond(a, as[i]);
    suite.record("perturb-diamond", inst,
                 all_of(IdentityId::kHomNovikovPoisson, {check_hnp(diamond), check_multiplicative(diamond)}),
                 diamond, m.basis_names);
    if (s.admissible) suite.record("adm-perturb-diamond", inst, is_admissible(diamond), diamond, m.basis_names);

    const QAlgebra times = perturb_times(a, as[i]);
    suite.record("perturb-times", inst,
                 all_of(IdentityId::kHomNovikovPoisson, {check_hnp(times), check_multiplicative(times)}), times,
                 m.basis_names);
    suite.record("times-hom-novikov", inst, check_hom_novikov(times.star_part()), times, m.basis_names);

    for (std::size_t j = 0; j < bs.size(); ++j) {
      const std::string inst2 = inst + ", b#" + std::to_string(j);
      const QAlgebra combined = perturb_combined(a, as[i], bs[j]);
      auto report = all_of(IdentityId::kHomNovikovPoisson, {check_hnp(combined), check_multiplicative(combined)});
      if (!report.passed) {
        suite.record("perturb-combined", inst2, report, combined, m.basis_names);
        continue;
      }
      const QAlgebra composed = perturb_diamond(times, bs[j]);
      suite.record("perturb-combined", inst2, combined == composed, combined, m.basis_names,
                   "combined perturbation differs from diamond of times: " + difference(combined, composed));
    }
  }
}

void tensor_theorems(Suite& suite, const Subject& s1, const Subject& s2) {
  const auto& m1 = *s1.member;
  const auto& m2 = *s2.member;
  const auto& a1 = m1.algebra;
  const auto& a2 = m2.algebra;
  const std::string inst = m1.name + " ⊗ " + m2.name;
  const auto names = tensor_names(m1.basis_names, m2.basis_names);
  const QAlgebra t = tensor_product(a1, a2);
  const bool both_mult = m1.multiplicative && m2.multiplicative;

  std::vector<CheckReport<Rational>> parts{check_hnp(t)};
  if (both_mult) parts.push_back(check_multiplicative(t));
  suite.record("tensor-closure", inst, all_of(IdentityId::kHomNovikovPoisson, std::move(parts)), t, names);

  const QBilinearOp expected =
      tensor(commutator(a1.star()), a2.dot()) + tensor(a1.dot(), commutator(a2.star()));
  if (commutator(t.star()) != expected) {
    suite.record("adm-tensor", inst, false, t, names, "tensor bracket formula violated");
  } else if (s1.admissible && s2.admissible) {
    suite.record("adm-tensor", inst, is_admissible(t), t, names);
  } else {
    suite.record("adm-tensor", inst, true, t, names, "");
  }

  if (both_mult) {
    for (unsigned n : {1U, 2U}) {
      const QAlgebra lhs = nth_twist(t, n);
      const QAlgebra rhs = tensor_product(nth_twist(a1, n), nth_twist(a2, n));
      suite.record("tensor-nth-twist", inst + " | n=" + std::to_string(n), lhs == rhs, lhs, names,
                   "(A⊗B)^n differs from A^n⊗B^n: " + difference(lhs, rhs));
    }
  }

  std::vector<std::pair<std::string, QLinearMap>> betas1{{"Id", identity_map<Rational>(a1.dim())}};
  std::vector<std::pair<std::string, QLinearMap>> betas2{{"Id", identity_map<Rational>(a2.dim())}};
  if (m1.multiplicative) betas1.emplace_back("alpha", a1.alpha());
  if (m2.multiplicative) betas2.emplace_back("alpha", a2.alpha());
  for (const auto& [l1, b1] : betas1) {
    for (const auto& [l2, b2] : betas2) {
      const QAlgebra lhs = yau_twist(t, QLinearMap(kronecker(b1, b2)));
      const QAlgebra rhs = tensor_product(yau_twist(a1, b1), yau_twist(a2, b2));
      suite.record("tensor-twist", inst + " | beta=" + l1 + "⊗" + l2, lhs == rhs, lhs, names,
                   "twist of tensor differs from tensor of twists: " + difference(lhs, rhs));
    }
  }
}

// Constructions raising HypothesisError on inputs that satisfy their
// hypotheses is itself a failed instance.
template <typename Fn>
void guarded(Suite& suite, const std::string& theorem, const PopulationMember& m, Fn&& fn) {
  try {
    fn();
  } catch (const HypothesisError& e) {
    suite.record(theorem, m.name, false, m.algebra, m.basis_names,
                 "construction refused (" + e.hypothesis() + "): " + e.what());
  }
}

}  // namespace

std::vector<QVector> sample_elements(const QMatrix& space, std::size_t limit) {
  std::vector<QVector> out;
  const auto cols = static_cast<std::size_t>(space.cols());
  for (std::size_t c = 0; c < std::min(cols, limit); ++c) out.emplace_back(space.col(static_cast<Index>(c)));
  if (cols > 1) out.emplace_back(space.rowwise().sum());
  return out;
}

std::vector<QLinearMap> candidate_weak_morphisms(const PopulationMember& member) {
  const auto& a = member.algebra;
  const Index n = a.dim();
  QLinearMap unit = zero_map<Rational>(n);
  unit(0, 0) = 1;
  std::vector<QLinearMap> pool{identity_map<Rational>(n), zero_map<Rational>(n), a.alpha(), power(a.alpha(), 2),
                               unit};
  if (member.derivation) {
    try {
      pool.push_back(exp_nilpotent(*member.derivation));
    } catch (const HypothesisError&) {
    }
  }
  std::vector<QLinearMap> out;
  for (auto& beta : pool) {
    if (check_weak_morphism(beta, a, a).passed) out.push_back(std::move(beta));
  }
  return out;
}

std::vector<PopulationMember> build_population(std::uint64_t seed, int depth, bool corrupt) {
  std::vector<PopulationMember> pop;
  for (auto& f : fixture_catalog(seed)) {
    PopulationMember m{f.name, f.algebra, 0, f.basis_names, fixture_derivation(f.descriptor), false};
    m.multiplicative = check_multiplicative(m.algebra).passed;
    pop.push_back(std::move(m));
  }
  if (corrupt) {
    for (auto& m : pop) {
      const Index n = m.algebra.dim();
      if (n < 2) continue;
      QMatrix dot = m.algebra.dot().constants();
      dot(0, n - 1) += 1;
      m.algebra = QAlgebra(QBilinearOp(std::move(dot)), m.algebra.star(), m.algebra.alpha());
      m.name += " [corrupted]";
      m.multiplicative = check_multiplicative(m.algebra).passed;
      break;
    }
  }

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int level = 0; level < depth; ++level) {
    std::vector<std::size_t> parents;
    for (std::size_t i = 0; i < pop.size(); ++i) {
      const auto& m = pop[i];
      if (m.level == level && m.multiplicative && m.algebra.dim() <= kMaxDerivedDim && check_hnp(m.algebra)) {
        parents.push_back(i);
      }
    }
    std::vector<PopulationMember> next;
    for (std::size_t pick : sample_indices(parents.size(), kExpandPerLevel, rng)) {
      const PopulationMember parent = pop[parents[pick]];
      const QVector elem = seeded_combination(perturbation_fixed_points(parent.algebra), rng);
      std::vector<std::pair<std::string, QAlgebra>> children{{"twist^1", nth_twist(parent.algebra, 1)}};
      if (elem.size() > 0 && !elem.isZero()) {
        children.emplace_back("diamond", perturb_diamond(parent.algebra, elem));
        children.emplace_back("times", perturb_times(parent.algebra, elem));
      }
      for (auto& [label, child] : children) {
        if (contains(pop, child) || contains(next, child)) continue;
        PopulationMember m{parent.name + " | " + label, std::move(child), level + 1, parent.basis_names,
                           std::nullopt, false};
        m.multiplicative = check_multiplicative(m.algebra).passed;
        next.push_back(std::move(m));
      }
    }
    for (auto& m : next) pop.push_back(std::move(m));
  }
  return pop;
}

std::size_t VerifyReport::total_instances() const {
  std::size_t n = 0;
  for (const auto& t : tallies) n += t.instances;
  return n;
}

const TheoremTally* VerifyReport::tally(std::string_view theorem) const {
  for (const auto& t : tallies) {
    if (t.theorem == theorem) return &t;
  }
  return nullptr;
}

const VerifyFailure* VerifyReport::minimal_failure() const {
  const VerifyFailure* best = nullptr;
  for (const auto& f : failures) {
    if (!best || f.algebra.algebra.dim() < best->algebra.algebra.dim()) best = &f;
  }
  return best;
}

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.depth < 1) throw std::invalid_argument("depth must be at least 1");
  Suite suite;
  const auto pop = build_population(options.seed, options.depth, options.corrupt);
  suite.set_population(pop.size());

  std::vector<Subject> sound;
  for (const auto& m : pop) {
    const auto report = check_hnp(m.algebra);
    suite.record("catalog-soundness", m.name, report, m.algebra, m.basis_names);
    if (!report.passed) continue;
    const bool admissible = is_admissible(m.algebra).passed;
    const auto poisson = check_hom_poisson(commutator_minus(m.algebra));
    suite.record("adm-biconditional", m.name, admissible == poisson.passed, m.algebra, m.basis_names,
                 std::string("admissible=") + (admissible ? "yes" : "no") + " but hom-poisson(A^-)=" +
                     (poisson.passed ? "pass" : "fail") + "\n" + describe(poisson, m.basis_names),
                 poisson.witness);
    sound.push_back({&m, admissible});
  }

  std::vector<std::size_t> small;
  for (std::size_t i = 0; i < sound.size(); ++i) {
    const auto& s = sound[i];
    if (s.member->level >= options.depth) continue;
    guarded(suite, "twist-closure", *s.member, [&] { twist_theorems(suite, s); });
    guarded(suite, "nth-twist", *s.member, [&] { nth_twist_theorems(suite, s); });
    guarded(suite, "perturb-diamond", *s.member, [&] { perturbation_theorems(suite, s); });
    if (s.member->algebra.dim() <= kMaxTensorFactorDim) small.push_back(i);
  }

  std::mt19937_64 rng(options.seed ^ 0xd1b54a32d192ed03ULL);
  const auto picks = sample_indices(small.size(), kTensorSample, rng);
  for (std::size_t x = 0; x < picks.size(); ++x) {
    for (std::size_t y = x; y < picks.size(); ++y) {
      const auto& s1 = sound[small[picks[x]]];
      const auto& s2 = sound[small[picks[y]]];
      guarded(suite, "tensor-closure", *s1.member, [&] { tensor_theorems(suite, s1, s2); });
    }
  }
  return suite.take();
}

}  // namespace hnp
