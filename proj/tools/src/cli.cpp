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

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <limits>
#include <ostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>

#include "weyl/weyl.hpp"
#include "weylcli/cli.hpp"

namespace weylcli {

namespace {

std::size_t parse_count(std::string_view text) {
  std::size_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw weyl::ParseError("expected a nonnegative integer, got '" + std::string(text) + "'");
  }
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw weyl::ParseError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Operands are operator text, inline JSON, or @path naming a file with
// either form.
template <weyl::Field F>
weyl::DiffOperator<F> load_operator(const F& field, const std::string& operand) {
  std::string text = operand.starts_with('@') ? read_file(operand.substr(1)) : operand;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return weyl::parse_operator_json(field, text);
  return weyl::parse_operator(field, text);
}

template <weyl::Field F>
std::string render(const weyl::DiffOperator<F>& l, bool json) {
  return json ? weyl::to_json(l).dump() : weyl::to_string(l);
}

struct Globals {
  std::optional<std::string> field;
  std::string algorithm = "auto";
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string output;
  std::string format = "text";
};

class Emitter {
 public:
  Emitter(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw weyl::ParseError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

}  // namespace

std::vector<weyl::Bidegree> parse_profiles(std::string_view text) {
  std::vector<weyl::Bidegree> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    const auto sep = item.find('x');
    if (sep == std::string_view::npos) throw weyl::ParseError("profile '" + std::string(item) + "' is not <d>x<r>");
    const weyl::Bidegree b{parse_count(item.substr(0, sep)), parse_count(item.substr(sep + 1))};
    if (b.degree == 0 || b.order == 0) throw weyl::ParseError("profile dimensions must be positive");
    out.push_back(b);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw weyl::ParseError("empty profile list");
  return out;
}

std::string format_profile(weyl::Bidegree b) { return std::to_string(b.degree) + "x" + std::to_string(b.order); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact multiplication of linear differential operators in the Weyl algebra", "weylmul"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--field", g.field, "Coefficient field: rational or fp:<p>");
  app.add_option("--algorithm", g.algorithm, "naive, fast or auto")->capture_default_str();
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads for per-block stages")->capture_default_str();
  app.add_option("--output", g.output, "Write results to this file instead of stdout");
  app.add_option("--format", g.format, "Operator output: text or json")->capture_default_str();

  auto* mul_cmd = app.add_subcommand("mul", "Multiply two operators (text, JSON, or @file)");
  std::vector<std::string> operands;
  mul_cmd->add_option("operands", operands, "Left and right factor")->expected(2)->required();

  auto* reflect_cmd = app.add_subcommand("reflect", "Apply the reflection x -> D, D -> -x");
  std::string reflect_operand;
  bool inverse = false;
  reflect_cmd->add_option("operator", reflect_operand, "Operator (text, JSON, or @file)")->required();
  reflect_cmd->add_flag("--inverse", inverse, "Apply the inverse reflection");

  auto* verify_cmd = app.add_subcommand("verify", "Check fast paths against reference implementations");
  std::size_t trials = 25;
  std::string verify_profiles;
  verify_cmd->add_option("--trials", trials, "Random trials per profile")->capture_default_str();
  verify_cmd->add_option("--profiles", verify_profiles, "Comma-separated <d>x<r> list");

  auto* bench_cmd = app.add_subcommand("bench", "Time naive and fast multiplication, CSV output");
  std::size_t reps = 5;
  std::string bench_profiles;
  bench_cmd->add_option("--reps", reps, "Timed repetitions per row (at least 3)")->capture_default_str()->check(CLI::Range(std::size_t{3}, std::numeric_limits<std::size_t>::max()));
  bench_cmd->add_option("--profiles", bench_profiles, "Comma-separated <d>x<r> list");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  weyl::ScopedSettings scoped;
  weyl::settings().threads = std::max(1u, g.threads);

  try {
    if (g.format != "text" && g.format != "json") throw weyl::ParseError("--format must be text or json");
    const auto algorithm = weyl::parse_algorithm(g.algorithm);
    const bool json = g.format == "json";

    if (mul_cmd->parsed() || reflect_cmd->parsed()) {
      const auto desc = weyl::FieldDescriptor::parse(g.field.value_or("rational"));
      std::string text;
      std::visit(
          [&](const auto& field) {
            if (mul_cmd->parsed()) {
              const auto k = load_operator(field, operands[0]);
              const auto l = load_operator(field, operands[1]);
              text = render(weyl::mul(k, l, algorithm), json);
            } else {
              const auto l = load_operator(field, reflect_operand);
              text = render(inverse ? weyl::reflect_inverse(l) : weyl::reflect_fast(l), json);
            }
          },
          weyl::make_field(desc));
      Emitter emit(g.output, out);
      emit.stream() << text << "\n";
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      VerifyConfig config;
      config.seed = g.seed;
      config.trials = trials;
      config.profiles = verify_profiles.empty() ? default_verify_profiles() : parse_profiles(verify_profiles);
      config.fields = g.field ? std::vector{weyl::FieldDescriptor::parse(*g.field)} : default_verify_fields();
      Emitter emit(g.output, out);
      const auto result = run_verify(config, emit.stream());
      return result.failures == 0 ? kExitOk : kExitFailure;
    }

    BenchConfig config;
    config.seed = g.seed;
    config.reps = reps;
    config.profiles = bench_profiles.empty() ? default_bench_profiles() : parse_profiles(bench_profiles);
    if (g.field) config.field = weyl::FieldDescriptor::parse(*g.field);
    if (app.get_option("--algorithm")->count() > 0) config.algorithms = {algorithm};
    const auto records = run_bench(config);
    Emitter emit(g.output, out);
    write_csv(records, emit.stream());
    return kExitOk;
  } catch (const weyl::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const weyl::FieldMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const weyl::CharacteristicTooSmall& e) {
    err << "error: " << e.what() << "\n";
    return kExitCharacteristic;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace weylcli
