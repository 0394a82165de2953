// Copyright 2026 The qrstates Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qrs/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <optional>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qrs/bench.hpp"
#include "qrs/entropy.hpp"
#include "qrs/state_file.hpp"
#include "qrs/stats.hpp"

namespace qrs::cli {
namespace {

using entropy::EntropySource;
using entropy::EntropySpec;

constexpr const char* kEpoch = "1970-01-01T00:00:00Z";

struct GenOptions {
  std::string kind;
  std::vector<Index> dims;
  std::string measure;
  Index k = 0;
  long long count = 1;
  std::string entropy;
  std::string output;
  bool deterministic = false;
};

struct VerifyOptions {
  std::string experiment;
  int dim = 4;
  std::uint64_t samples = 2000;
  std::size_t bins = 40;
  std::vector<long long> k_values{2, 3, 5, 10, 20};
  std::uint64_t pairs = 50;
  int jobs = 1;
  std::string entropy;
  std::string output;
  bool deterministic = false;
};

struct BenchOptions {
  std::vector<std::string> backends;
  std::string sizes = "1e1..1e5";
  unsigned repeats = 5;
  std::uint64_t warmup = 1000;
  std::string output;
  bool json = false;
  bool deterministic = false;
};

struct InfoOptions {
  std::string entropy;
};

EntropySpec resolve_entropy(const std::string& flag) {
  if (!flag.empty()) return entropy::parse_spec(flag);
  if (const char* env = std::getenv(entropy::kEntropyEnvVar); env != nullptr && *env != '\0') {
    return entropy::parse_spec(env);
  }
  return entropy::parse_spec("os");
}

std::string now_iso8601() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Writes via a sibling temporary so a failed run leaves no partial file.
void write_file(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".partial";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    f << contents;
    if (!f) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw Error(Errc::InvalidParameter, "cannot write " + path);
    }
  }
  std::filesystem::rename(tmp, path);
}

int run_gen(const GenOptions& o, std::ostream& out) {
  GenRequest request;
  request.kind = parse_gen_kind(o.kind);
  request.dims = o.dims;
  if (!o.measure.empty()) request.measure = states::MeasureSpec::parse(o.measure);
  request.zero_eigenvalues = o.k;
  validate(request);
  if (o.count < 1) throw Error(Errc::InvalidParameter, "--count must be >= 1");

  const EntropySpec spec = resolve_entropy(o.entropy);
  StateMeta meta;
  meta.backend = std::string(entropy::to_string(spec.kind));
  if (spec.kind == entropy::BackendKind::Prng) meta.seed = spec.seed;
  meta.created = o.deterministic ? kEpoch : now_iso8601();

  auto src = EntropySource::from_spec(spec);
  std::string buffer;
  for (long long i = 0; i < o.count; ++i) {
    buffer += generate_state_document(src, request, meta).dump();
    buffer += '\n';
  }
  if (o.output.empty()) {
    out << buffer;
  } else {
    write_file(o.output, buffer);
  }
  return kExitOk;
}

std::vector<EntropySource> make_sources(const EntropySpec& spec, int jobs) {
  if (jobs < 1) throw Error(Errc::InvalidParameter, "--jobs must be >= 1");
  if (jobs > 1 && (spec.kind == entropy::BackendKind::Device ||
                   spec.kind == entropy::BackendKind::Remote)) {
    throw Error(Errc::InvalidParameter, "--jobs > 1 needs a prng or os backend");
  }
  std::vector<EntropySource> sources;
  for (int w = 0; w < jobs; ++w) {
    EntropySpec worker = spec;
    worker.seed = spec.seed + static_cast<std::uint64_t>(w);
    sources.push_back(EntropySource::from_spec(worker));
  }
  return sources;
}

int run_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  stats::ExperimentReport report;
  const EntropySpec spec = resolve_entropy(o.entropy);
  if (o.experiment == "eigenvalues") {
    const stats::EigenvalueParams params{o.dim, o.samples, o.bins};
    stats::validate(params);
    auto sources = make_sources(spec, o.jobs);
    report = stats::eigenvalue_experiment(sources, params);
  } else {
    const stats::FidelityParams params{o.k_values, o.pairs};
    stats::validate(params);
    auto sources = make_sources(spec, o.jobs);
    report = stats::mean_fidelity_experiment(sources, params);
  }

  const std::string json_text = report.to_json().dump(2) + "\n";
  if (o.output.empty()) {
    out << json_text;
  } else {
    write_file(o.output + ".json", json_text);
    write_file(o.output + ".csv", report.to_csv());
  }
  std::size_t verdicts = 0;
  std::size_t passed = 0;
  for (const auto& row : report.rows) {
    if (!row.pass) continue;
    ++verdicts;
    passed += *row.pass ? 1 : 0;
  }
  err << report.experiment << ": " << passed << "/" << verdicts << " rows pass";
  if (report.gof) err << ", chi-square p = " << report.gof->p_value;
  err << '\n';
  return report.all_pass() ? kExitOk : kExitVerifyFailed;
}

int run_bench_cmd(const BenchOptions& o, std::ostream& out) {
  bench::BenchConfig config;
  for (const auto& b : o.backends) config.backends.push_back(entropy::parse_spec(b));
  config.sizes = bench::parse_sizes(o.sizes);
  config.repeats = o.repeats;
  config.warmup = o.warmup;
  const auto rows = bench::run_bench(config);
  const std::string text = o.json ? bench::to_json(rows, o.deterministic).dump(2) + "\n"
                                  : bench::to_csv(rows, o.deterministic);
  if (o.output.empty()) {
    out << text;
  } else {
    write_file(o.output, text);
  }
  return kExitOk;
}

int run_info(const InfoOptions& o, std::ostream& out) {
  const auto spec = resolve_entropy(o.entropy);
  auto src = EntropySource::from_spec(spec);
  const auto d = src.describe();
  nlohmann::json j;
  j["backend_kind"] = std::string(entropy::to_string(d.backend_kind));
  j["library_version"] = d.library_version;
  j["serial_number"] = d.serial_number ? nlohmann::json(*d.serial_number) : nlohmann::json(nullptr);
  j["device_id"] = d.device_id ? nlohmann::json(*d.device_id) : nlohmann::json(nullptr);
  j["device_type"] = d.device_type ? nlohmann::json(*d.device_type) : nlohmann::json(nullptr);
  out << j.dump(2) << '\n';
  return kExitOk;
}

int exit_code_for(const Error& e) {
  if (e.is_backend_failure()) return kExitBackend;
  switch (e.code()) {
    case Errc::InvalidParameter:
    case Errc::InvalidRange:
    case Errc::EmptyList:
    case Errc::TooManyEdges:
      return kExitUsage;
    default:
      return kExitVerifyFailed;
  }
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random quantum states from pluggable entropy sources", "qrs"};
  app.require_subcommand(1, 1);
  const std::string entropy_help =
      "entropy backend: prng:<seed>, os, dev:<path>, http:<url> (default: $QRS_ENTROPY, then os)";

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate random states, matrices or structures");
  gen_cmd->add_option("--kind", gen.kind, "what to generate")->required();
  gen_cmd->add_option("--dims", gen.dims, "comma-separated dimensions")->delimiter(',')->required();
  gen_cmd->add_option("--measure", gen.measure, "hs, bures or induced:<K>");
  gen_cmd->add_option("--k", gen.k, "zero eigenvalues of a dynamical matrix");
  gen_cmd->add_option("--count", gen.count, "number of documents (JSON lines)");
  gen_cmd->add_option("--entropy", gen.entropy, entropy_help);
  gen_cmd->add_option("-o,--output", gen.output, "output file (default: stdout)");
  gen_cmd->add_flag("--deterministic", gen.deterministic, "fixed timestamps for golden files");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "compare sampled statistics with closed forms");
  verify_cmd->add_option("experiment", verify.experiment, "eigenvalues | mean-fidelity")
      ->required()
      ->check(CLI::IsMember({"eigenvalues", "mean-fidelity"}));
  verify_cmd->add_option("--dim", verify.dim, "matrix dimension (eigenvalues)");
  verify_cmd->add_option("--samples", verify.samples, "number of states (eigenvalues)");
  verify_cmd->add_option("--bins", verify.bins, "histogram bins (eigenvalues)");
  verify_cmd->add_option("--K", verify.k_values, "ancilla dimensions (mean-fidelity)")->delimiter(',');
  verify_cmd->add_option("--pairs", verify.pairs, "state pairs per K (mean-fidelity)");
  verify_cmd->add_option("--jobs", verify.jobs, "independent sources sharing the work");
  verify_cmd->add_option("--entropy", verify.entropy, entropy_help);
  verify_cmd->add_option("-o,--output", verify.output, "write <prefix>.json and <prefix>.csv");
  verify_cmd->add_flag("--deterministic", verify.deterministic, "accepted for symmetry with gen");

  BenchOptions bench_opts;
  auto* bench_cmd = app.add_subcommand("bench", "time unit-double generation per backend");
  bench_cmd->add_option("--backends", bench_opts.backends, "comma-separated entropy specs")
      ->delimiter(',')
      ->required();
  bench_cmd->add_option("--sizes", bench_opts.sizes, "1e1..1e5 or a comma list");
  bench_cmd->add_option("--repeats", bench_opts.repeats, "timed repeats per cell (fastest kept)");
  bench_cmd->add_option("--warmup", bench_opts.warmup, "untimed draws before each repeat");
  bench_cmd->add_option("-o,--output", bench_opts.output, "output file (default: stdout)");
  bench_cmd->add_flag("--json", bench_opts.json, "emit JSON instead of CSV");
  bench_cmd->add_flag("--deterministic", bench_opts.deterministic, "write zero timings");

  InfoOptions info;
  auto* info_cmd = app.add_subcommand("entropy-info", "describe an entropy backend");
  info_cmd->add_option("--entropy", info.entropy, entropy_help);

  std::vector<const char*> argv{"qrs"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen, out);
    if (verify_cmd->parsed()) return run_verify(verify, out, err);
    if (bench_cmd->parsed()) return run_bench_cmd(bench_opts, out);
    if (info_cmd->parsed()) return run_info(info, out);
  } catch (const Error& e) {
    err << "qrs: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "qrs: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}

}  // namespace qrs::cli
