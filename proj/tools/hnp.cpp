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

// hnp: check identities, build algebras and run the theorem suite.
//
// Exit status: 0 success, 1 identity or hypothesis failure, 2 input error.

#include "hnp/algebra_file.hpp"
#include "hnp/constructions.hpp"
#include "hnp/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>

namespace {

using hnp::AlgebraFile;
using hnp::CheckReport;
using hnp::QAlgebra;
using hnp::Rational;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInputError = 2;

enum class Format { kText, kMachine };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

AlgebraFile load_algebra(const std::string& path) {
  try {
    return hnp::parse_algebra_file(hnp::read_text_file(path));
  } catch (const hnp::ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const hnp::DimensionError& e) {
    throw InputError(path + ": " + e.what());
  }
}

CheckReport<Rational> run_check(const QAlgebra& a, const std::string& identity) {
  if (identity == "commutative") return hnp::check_commutative(a.dot());
  if (identity == "hom-associative") return hnp::check_hom_associative(a.dot_part());
  if (identity == "multiplicative") return hnp::check_multiplicative(a);
  if (identity == "hom-novikov") return hnp::check_hom_novikov(a.star_part());
  if (identity == "hnp") return hnp::check_hnp(a);
  if (identity == "hom-lie") return hnp::check_hom_lie(a.star_part());
  if (identity == "hom-poisson") return hnp::check_hom_poisson(a);
  return hnp::is_admissible(a);
}

int cmd_check(const std::string& path, const std::string& identity, Format format) {
  const AlgebraFile file = load_algebra(path);
  const auto report = run_check(file.algebra, identity);
  if (format == Format::kMachine) {
    std::cout << json{{"command", "check"}, {"file", path}, {"report", hnp::to_json(report)}}.dump() << "\n";
  } else {
    std::cout << hnp::describe(report, file.basis_names) << "\n";
    if (report.witness) std::cout << "witness: " << hnp::to_json(*report.witness).dump() << "\n";
  }
  return report.passed ? kOk : kFailure;
}

struct ConstructArgs {
  std::string sub;
  std::string in;
  std::string in2;
  std::string beta;
  std::string out;
  std::optional<unsigned> n;
  std::string a;
  std::string b;
};

hnp::QVector element(const std::string& literal, const char* flag, hnp::Index dim) {
  if (literal.empty()) throw InputError(std::string("missing ") + flag);
  hnp::QVector v;
  try {
    v = hnp::parse_vector_literal(literal);
  } catch (const hnp::ParseError& e) {
    throw InputError(std::string(flag) + ": " + e.what());
  }
  if (v.size() != dim) {
    throw InputError(std::string(flag) + ": expected " + std::to_string(dim) + " coordinates, got " +
                     std::to_string(v.size()));
  }
  return v;
}

int cmd_construct(const ConstructArgs& args, Format format) {
  const AlgebraFile input = load_algebra(args.in);
  const QAlgebra& a = input.algebra;
  AlgebraFile result{a, input.basis_names, std::nullopt};
  if (args.sub == "twist") {
    if (args.beta.empty()) throw InputError("missing --beta");
    hnp::QLinearMap beta;
    try {
      beta = hnp::parse_linear_map_file(hnp::read_text_file(args.beta));
    } catch (const hnp::ParseError& e) {
      throw InputError(args.beta + ": " + e.what());
    }
    if (beta.rows() != a.dim()) throw InputError(args.beta + ": field 'dim': does not match the algebra");
    result.algebra = hnp::yau_twist(a, beta);
  } else if (args.sub == "ntwist") {
    if (!args.n) throw InputError("missing --n");
    result.algebra = hnp::nth_twist(a, *args.n);
  } else if (args.sub == "tensor") {
    if (args.in2.empty()) throw InputError("missing --in2");
    const AlgebraFile other = load_algebra(args.in2);
    result.algebra = hnp::tensor_product(a, other.algebra);
    result.basis_names.clear();
    if (!input.basis_names.empty() && !other.basis_names.empty()) {
      for (const auto& x : input.basis_names) {
        for (const auto& y : other.basis_names) result.basis_names.push_back(x + "⊗" + y);
      }
    }
  } else if (args.sub == "perturb-diamond") {
    result.algebra = hnp::perturb_diamond(a, element(args.a, "--a", a.dim()));
  } else if (args.sub == "perturb-times") {
    result.algebra = hnp::perturb_times(a, element(args.a, "--a", a.dim()));
  } else if (args.sub == "perturb-combined") {
    result.algebra =
        hnp::perturb_combined(a, element(args.a, "--a", a.dim()), element(args.b, "--b", a.dim()));
  } else {
    result.algebra = hnp::commutator_minus(a);
  }
  hnp::write_text_file_atomic(args.out, hnp::serialize(result));
  if (format == Format::kMachine) {
    std::cout << json{{"command", "construct"}, {"construction", args.sub}, {"out", args.out},
                      {"dim", result.algebra.dim()}}
                     .dump()
              << "\n";
  } else {
    std::cout << args.sub << ": wrote " << args.out << " (dim " << result.algebra.dim() << ")\n";
  }
  return kOk;
}

int cmd_verify(std::uint64_t seed, int depth, bool corrupt, Format format) {
  if (depth < 1) throw InputError("--depth must be at least 1");
  const auto report = hnp::run_verify({seed, depth, corrupt});
  const auto* worst = report.minimal_failure();
  if (format == Format::kMachine) {
    json tallies = json::array();
    for (const auto& t : report.tallies) {
      tallies.push_back({{"theorem", t.theorem}, {"instances", t.instances}, {"failures", t.failures}});
    }
    json out{{"command", "verify"},          {"seed", seed},
             {"depth", depth},               {"population", report.population},
             {"instances", report.total_instances()}, {"failures", report.failures.size()},
             {"theorems", std::move(tallies)}};
    if (worst) {
      out["minimal_failure"] = {{"theorem", worst->theorem},
                                {"instance", worst->instance},
                                {"detail", worst->detail},
                                {"witness", worst->witness ? hnp::to_json(*worst->witness) : json(nullptr)},
                                {"algebra", json::parse(hnp::serialize(worst->algebra))}};
    }
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "verify seed=" << seed << " depth=" << depth << " population=" << report.population << "\n";
    for (const auto& t : report.tallies) {
      std::cout << "  " << t.theorem << ": " << t.instances << " instances, " << t.failures << " failures\n";
    }
    std::cout << "total: " << report.total_instances() << " instances, " << report.failures.size()
              << " failures\n";
    if (worst) {
      std::cout << "minimal offending algebra (" << worst->theorem << ": " << worst->instance << ")\n"
                << worst->detail << "\n";
      if (worst->witness) std::cout << "witness: " << hnp::to_json(*worst->witness).dump() << "\n";
      std::cout << hnp::serialize(worst->algebra);
    }
  }
  return report.passed() ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification and construction kit for Hom-Novikov-Poisson algebras"};
  app.require_subcommand(1);
  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();

  std::string check_path;
  std::string identity;
  auto* check = app.add_subcommand("check", "Check an identity on an algebra file");
  check->add_option("file", check_path, "Algebra file")->required();
  check->add_option("--identity", identity, "Identity to check")
      ->required()
      ->check(CLI::IsMember({"commutative", "hom-associative", "multiplicative", "hom-novikov", "hnp", "hom-lie",
                             "hom-poisson", "admissible"}));

  ConstructArgs cargs;
  unsigned n_value = 0;
  auto* construct = app.add_subcommand("construct", "Build a new algebra file");
  construct->add_option("construction", cargs.sub, "Construction")
      ->required()
      ->check(CLI::IsMember(
          {"twist", "ntwist", "tensor", "perturb-diamond", "perturb-times", "perturb-combined", "minus"}));
  construct->add_option("--in", cargs.in, "Input algebra file")->required();
  construct->add_option("--in2", cargs.in2, "Second input for tensor");
  construct->add_option("--beta", cargs.beta, "Linear map file for twist");
  auto* n_opt = construct->add_option("--n", n_value, "Power for ntwist");
  construct->add_option("--a", cargs.a, "Perturbation element, comma-separated rationals");
  construct->add_option("--b", cargs.b, "Second perturbation element");
  construct->add_option("--out", cargs.out, "Output algebra file")->required();

  std::uint64_t seed = 0;
  int depth = 2;
  bool corrupt = false;
  auto* verify = app.add_subcommand("verify", "Run the theorem suite over generated algebras");
  verify->add_option("--seed", seed, "Catalog seed")->capture_default_str();
  verify->add_option("--depth", depth, "Construction depth")->capture_default_str();
  verify->add_flag("--corrupt-for-testing", corrupt, "Alter one structure constant of the catalog")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  const Format format = format_name == "machine" ? Format::kMachine : Format::kText;

  try {
    if (*check) return cmd_check(check_path, identity, format);
    if (*construct) {
      if (*n_opt) cargs.n = n_value;
      return cmd_construct(cargs, format);
    }
    return cmd_verify(seed, depth, corrupt, format);
  } catch (const hnp::HypothesisError& e) {
    std::cerr << "hypothesis '" << e.hypothesis() << "' failed: " << e.what() << "\n";
    return kFailure;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const hnp::DimensionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
