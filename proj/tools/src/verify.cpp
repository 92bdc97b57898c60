// Copyright 2026 The weylmul Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <exception>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>

#include "weyl/weyl.hpp"
#include "weylcli/cli.hpp"

namespace weylcli {

namespace {

struct ProfileTally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

template <weyl::Field F>
class TrialRunner {
 public:
  TrialRunner(const F& field, const VerifyConfig& config, ProfileTally& tally)
      : field_(field), config_(config), tally_(tally) {}

  void run(weyl::Bidegree profile, std::size_t trial) {
    trial_ = trial;
    auto rng = weyl::Rng::derived({config_.seed, field_.descriptor().modulus, profile.degree, profile.order, trial});
    const auto k = weyl::random_operator(field_, profile, rng);
    const auto l = weyl::random_operator(field_, profile, rng);
    const auto p = weyl::random_polynomial(field_, 1 + rng.below(21), rng);

    // Computed once and shared by several checks; the checks that use it
    // would report an exception through the naive product anyway.
    const auto kl = weyl::naive_mul(k, l);

    compare("mul_fast", [&] { return weyl::mul(k, l, weyl::Algorithm::Fast); }, [&] { return kl; });
    compare("mul_auto", [&] { return weyl::mul(k, l); }, [&] { return kl; });
    compare("reflect", [&] { return weyl::reflect_fast(k); }, [&] { return weyl::reflect_naive(k); });
    compare("reflect_roundtrip", [&] { return weyl::reflect_inverse(weyl::reflect_fast(k)); }, [&] { return k; });
    compare("reflect_square", [&] { return weyl::reflect_fast(weyl::reflect_fast(k)); }, [&] { return weyl::psi(k); });
    compare("reflect_morphism", [&] { return weyl::reflect_fast(kl); },
            [&] { return weyl::naive_mul(weyl::reflect_fast(k), weyl::reflect_fast(l)); });
    compare("apply", [&] { return weyl::apply(kl, p); }, [&] { return weyl::apply(k, weyl::apply(l, p)); });
    compare("text_roundtrip", [&] { return weyl::parse_operator(field_, weyl::to_string(k)); }, [&] { return k; });
  }

 private:
  template <class Lhs, class Rhs>
  void compare(std::string_view name, Lhs lhs, Rhs rhs) {
    ++tally_.checks;
    std::string problem;
    try {
      auto left = lhs();
      if (config_.fault && *config_.fault == name) left = left + perturbation(left);
      if (!(left == rhs())) problem = "mismatch";
    } catch (const std::exception& e) {
      problem = e.what();
    }
    if (problem.empty()) return;
    ++tally_.failures;
    if (tally_.first_failure.empty()) {
      tally_.first_failure = std::string(name) + " at trial " + std::to_string(trial_) + " (" + problem + ")";
    }
  }

  weyl::DiffOperator<F> perturbation(const weyl::DiffOperator<F>&) const {
    return weyl::DiffOperator<F>::scalar(field_, field_.one());
  }
  weyl::Polynomial<F> perturbation(const weyl::Polynomial<F>&) const {
    return weyl::Polynomial<F>::constant(field_, field_.one());
  }

  const F& field_;
  const VerifyConfig& config_;
  ProfileTally& tally_;
  std::size_t trial_ = 0;
};

}  // namespace

std::vector<weyl::Bidegree> default_verify_profiles() {
  return {{8, 8}, {16, 4}, {4, 16}, {6, 6}, {2, 12}, {12, 2}};
}

std::vector<weyl::FieldDescriptor> default_verify_fields() {
  return {weyl::FieldDescriptor::prime(2147483647), weyl::FieldDescriptor::rational()};
}

VerifyResult run_verify(const VerifyConfig& config, std::ostream& out) {
  VerifyResult result;
  std::string reproducer;
  out << "verify seed=" << config.seed << " trials=" << config.trials << "\n";
  for (const auto& desc : config.fields) {
    const auto any = weyl::make_field(desc);
    for (const auto profile : config.profiles) {
      ProfileTally tally;
      std::visit(
          [&](const auto& field) {
            using F = std::decay_t<decltype(field)>;
            TrialRunner<F> runner(field, config, tally);
            for (std::size_t t = 0; t < config.trials; ++t) runner.run(profile, t);
          },
          any);
      out << desc.to_string() << " " << format_profile(profile) << " checks=" << tally.checks
          << " failures=" << tally.failures << "\n";
      result.checks += tally.checks;
      result.failures += tally.failures;
      if (tally.failures > 0 && reproducer.empty()) {
        std::ostringstream line;
        line << "reproducer: weylmul verify --seed " << config.seed << " --field " << desc.to_string()
             << " --profiles " << format_profile(profile) << " --trials " << config.trials << "\n"
             << "first failure: " << tally.first_failure << "\n";
        reproducer = line.str();
      }
    }
  }
  if (result.failures == 0) {
    out << "PASS " << result.checks << " checks\n";
  } else {
    out << "FAIL " << result.failures << " of " << result.checks << " checks\n" << reproducer;
  }
  return result;
}

}  // namespace weylcli
