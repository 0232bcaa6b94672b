//
// Copyright 2026 The Dialobust Authors
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

// Command-line front end of the dialobust toolkit.
//
// Every command reads its inputs, runs one library operation and writes the
// result to --out ("-" for stdout). Commands that write a file also write a
// run manifest next to it (<out>.manifest.json) or to --manifest.
//
// Exit codes: 0 success, 2 I/O error, 3 invalid configuration or arguments,
// 4 invalid input data.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "dialobust/dialobust.h"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitIo = 2;
constexpr int kExitConfig = 3;
constexpr int kExitData = 4;

// Carries a library status out of the command handlers.
class CommandError : public std::runtime_error {
 public:
  CommandError(int code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

void Check(dlb_status status) {
  if (status != DLB_OK) {
    const int code = status == DLB_ERR_INTERNAL ? kExitData : status;
    throw CommandError(code, dlb_last_error());
  }
}

// Owning wrappers for library handles and strings.
struct CorpusDeleter {
  void operator()(dlb_corpus* c) const { dlb_corpus_free(c); }
};
struct ConfigDeleter {
  void operator()(dlb_config* c) const { dlb_config_free(c); }
};
using CorpusPtr = std::unique_ptr<dlb_corpus, CorpusDeleter>;
using ConfigPtr = std::unique_ptr<dlb_config, ConfigDeleter>;

std::string TakeString(char* str) {
  std::string out = str == nullptr ? "" : str;
  dlb_string_free(str);
  return out;
}

std::string Sha256(const std::string& data) {
  char* hex = nullptr;
  Check(dlb_sha256_hex(data.data(), data.size(), &hex));
  return TakeString(hex);
}

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    if (std::cin.bad()) throw CommandError(kExitIo, "cannot read stdin");
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError(kExitIo, "cannot open '" + path + "'");
  std::string data((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (in.bad()) throw CommandError(kExitIo, "cannot read '" + path + "'");
  return data;
}

void WriteOutput(const std::string& path, const std::string& data) {
  if (path == "-") {
    std::cout.write(data.data(), static_cast<std::streamsize>(data.size()));
    std::cout.flush();
    if (!std::cout) throw CommandError(kExitIo, "cannot write stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  out.close();
  if (!out) throw CommandError(kExitIo, "cannot write '" + path + "'");
}

std::string DirectoryOf(const std::string& path) {
  const auto slash = path.find_last_of('/');
  return slash == std::string::npos ? "" : path.substr(0, slash);
}

// Options shared by every command.
struct CommonOptions {
  std::string in = "-";
  std::string out = "-";
  std::string format;
  std::string out_format;
  std::string manifest;
};

dlb_format ResolveFormat(const std::string& flag, const std::string& path) {
  if (flag == "jsonl") return DLB_FORMAT_JSONL;
  if (flag == "babi") return DLB_FORMAT_BABI;
  if (path.ends_with(".jsonl") || path.ends_with(".json")) {
    return DLB_FORMAT_JSONL;
  }
  return DLB_FORMAT_BABI;
}

// Collects what a run read and wrote, then writes the manifest.
class Run {
 public:
  Run(std::vector<std::string> argv, const CommonOptions& common)
      : argv_(std::move(argv)),
        common_(common),
        start_(std::chrono::steady_clock::now()) {}

  std::string Read(const std::string& path) {
    std::string data = ReadInput(path);
    inputs_.push_back({{"path", path}, {"sha256", Sha256(data)}});
    return data;
  }

  CorpusPtr ReadCorpus(const std::string& path, dlb_format format) {
    const std::string text = Read(path);
    dlb_corpus* corpus = nullptr;
    Check(dlb_corpus_parse(text.data(), text.size(), format, &corpus));
    return CorpusPtr(corpus);
  }

  void Write(const std::string& path, const std::string& data) {
    WriteOutput(path, data);
    outputs_.push_back({{"path", path}, {"sha256", Sha256(data)}});
  }

  void WriteCorpus(const dlb_corpus* corpus, dlb_format format) {
    char* text = nullptr;
    std::size_t length = 0;
    Check(dlb_corpus_write(corpus, format, &text, &length));
    std::string data(text, length);
    dlb_string_free(text);
    Write(common_.out, data);
  }

  ConfigPtr LoadConfig(const std::string& path) {
    dlb_config* config = nullptr;
    if (path.empty()) {
      Check(dlb_config_default(&config));
      return ConfigPtr(config);
    }
    std::string text;
    try {
      text = ReadInput(path);
    } catch (const CommandError& e) {
      throw CommandError(kExitConfig, e.what());
    }
    config_sha256_ = Sha256(text);
    const std::string dir = DirectoryOf(path);
    Check(dlb_config_parse(text.data(), text.size(),
                           dir.empty() ? nullptr : dir.c_str(), &config));
    return ConfigPtr(config);
  }

  void set_seed(std::uint64_t seed) { seed_ = seed; }
  void set_jobs(unsigned jobs) { jobs_ = jobs; }

  void WriteManifest() const {
    std::string path = common_.manifest;
    if (path.empty()) {
      if (common_.out == "-") return;
      path = common_.out + ".manifest.json";
    }
    const double wall = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start_)
                            .count();
    Json m;
    m["tool"] = "dialobust";
    m["version"] = dlb_version();
    m["command_line"] = argv_;
    m["digest_algorithm"] = "sha256";
    m["config_sha256"] =
        config_sha256_ ? Json(*config_sha256_) : Json(nullptr);
    m["seed"] = seed_ ? Json(*seed_) : Json(nullptr);
    m["jobs"] = jobs_ ? Json(*jobs_) : Json(nullptr);
    m["inputs"] = inputs_;
    m["outputs"] = outputs_;
    m["wall_time_seconds"] = wall;
    WriteOutput(path, m.dump(2) + "\n");
  }

 private:
  std::vector<std::string> argv_;
  const CommonOptions& common_;
  std::chrono::steady_clock::time_point start_;
  Json inputs_ = Json::array();
  Json outputs_ = Json::array();
  std::optional<std::string> config_sha256_;
  std::optional<std::uint64_t> seed_;
  std::optional<unsigned> jobs_;
};

void AddInOut(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--in", common.in, "Input corpus path, '-' for stdin");
  cmd->add_option("--out", common.out, "Output path, '-' for stdout");
  cmd->add_option("--format", common.format,
                  "Input format (default: from the file extension)")
      ->check(CLI::IsMember({"babi", "jsonl"}));
  cmd->add_option("--out-format", common.out_format,
                  "Output format (default: same as --format or the output "
                  "extension)")
      ->check(CLI::IsMember({"babi", "jsonl"}));
  cmd->add_option("--manifest", common.manifest,
                  "Manifest path (default: <out>.manifest.json)");
}

dlb_format InFormat(const CommonOptions& common) {
  return ResolveFormat(common.format, common.in);
}

dlb_format OutFormat(const CommonOptions& common) {
  if (!common.out_format.empty()) return ResolveFormat(common.out_format, "");
  if (!common.format.empty()) return ResolveFormat(common.format, "");
  if (common.out != "-") return ResolveFormat("", common.out);
  return InFormat(common);
}

dlb_report_format ReportFormat(const std::string& name) {
  return name == "text" ? DLB_REPORT_TEXT : DLB_REPORT_JSON;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> command_line(argv, argv + argc);

  CLI::App app{"Dialogue-corpus robustness toolkit: disfluency and "
               "out-of-domain augmentation, evaluation metrics."};
  app.set_version_flag("--version", std::string(dlb_version()));
  app.require_subcommand(1);

  CommonOptions common;
  std::string config_path;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::string report = "json";

  auto add_pipeline = [&](const char* name, const char* help) {
    CLI::App* cmd = app.add_subcommand(name, help);
    AddInOut(cmd, common);
    cmd->add_option("--config", config_path,
                    "JSON augmentation config (default: built-in defaults)");
    cmd->add_option("--seed", seed, "Random seed");
    cmd->add_option("--jobs", jobs, "Worker threads, 0 = all cores")
        ->capture_default_str();
    return cmd;
  };
  CLI::App* disfluency = add_pipeline(
      "augment-disfluency", "Inject hesitations, restarts and corrections");
  CLI::App* ood = add_pipeline("augment-ood",
                               "Insert out-of-domain turns and segments");
  CLI::App* dropout = add_pipeline(
      "turn-dropout", "Replace user turns by noise, relabel as fallback");
  CLI::App* counterfeit = add_pipeline(
      "counterfeit", "Insert counterfeit out-of-domain exchanges");

  CLI::App* tag = app.add_subcommand(
      "tag", "Tag user turns with the repetition/filler baseline");
  AddInOut(tag, common);

  std::string clean_mode = "tags";
  CLI::App* clean = app.add_subcommand(
      "clean", "Export fluent text (tags) or undo augmentations (strip)");
  AddInOut(clean, common);
  clean->add_option("--mode", clean_mode, "tags | strip")
      ->check(CLI::IsMember({"tags", "strip"}))
      ->capture_default_str();

  CLI::App* stats = app.add_subcommand("stats", "Corpus statistics");
  AddInOut(stats, common);
  stats->add_option("--report", report, "json | text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  CLI::App* validate = app.add_subcommand(
      "validate", "Check disfluency tag sequences; exit 4 on violations");
  AddInOut(validate, common);

  std::string gold_path;
  std::string pred_path;
  std::string metric;
  std::string fallback = "FALLBACK";
  bool include_interregnum = false;
  int k = 1;
  CLI::App* eval = app.add_subcommand("eval", "Score predictions");
  eval->add_option("--gold", gold_path, "Gold corpus, or tuples for P@k")
      ->required();
  eval->add_option("--pred", pred_path, "Predicted corpus");
  eval->add_option("--metric", metric,
                   "disfluency | accuracy | api-call | ood-f1 | "
                   "precision-at-k")
      ->required()
      ->check(CLI::IsMember(
          {"disfluency", "accuracy", "api-call", "ood-f1", "precision-at-k"}));
  eval->add_option("--fallback", fallback, "Fallback action for ood-f1")
      ->capture_default_str();
  eval->add_flag("--include-interregnum", include_interregnum,
                 "Count interregnum tokens towards F_rps");
  eval->add_option("--k", k, "Cut-off for precision-at-k")
      ->capture_default_str();
  eval->add_option("--format", common.format, "Corpus format")
      ->check(CLI::IsMember({"babi", "jsonl"}));
  eval->add_option("--report", report, "json | text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  eval->add_option("--out", common.out, "Report path, '-' for stdout");
  eval->add_option("--manifest", common.manifest, "Manifest path");

  std::size_t min_turns = 0;
  double percentile = 95.0;
  CLI::App* filter = app.add_subcommand(
      "filter", "Drop dialogues outside [min-turns, percentile length)");
  AddInOut(filter, common);
  filter->add_option("--min-turns", min_turns, "Minimum number of turns kept")->capture_default_str();
  filter->add_option("--percentile", percentile,
                    "Length percentile (nearest rank) excluded from above")->capture_default_str();

  double lower = 0.3;
  double upper = 0.7;
  std::string target = "length";
  CLI::App* ranker = app.add_subcommand(
      "ranker-pairs", "Build balanced ranker training pairs (JSON lines)");
  AddInOut(ranker, common);
  ranker->add_option("--lower", lower, "Targets below this are negatives")->capture_default_str();
  ranker->add_option("--upper", upper, "Targets above this are positives")->capture_default_str();
  ranker->add_option("--target", target, "length | rating")
      ->check(CLI::IsMember({"length", "rating"}))
      ->capture_default_str();
  ranker->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  Run run(command_line, common);
  try {
    auto pipeline = [&](auto op) {
      ConfigPtr config = run.LoadConfig(config_path);
      CorpusPtr in = run.ReadCorpus(common.in, InFormat(common));
      run.set_seed(seed);
      run.set_jobs(jobs);
      dlb_corpus* out = nullptr;
      Check(op(in.get(), config.get(), &out));
      CorpusPtr result(out);
      run.WriteCorpus(result.get(), OutFormat(common));
    };

    if (disfluency->parsed()) {
      pipeline([&](const dlb_corpus* c, const dlb_config* cfg, dlb_corpus** o) {
        return dlb_augment_disfluency(c, cfg, seed, jobs, o);
      });
    } else if (ood->parsed()) {
      pipeline([&](const dlb_corpus* c, const dlb_config* cfg, dlb_corpus** o) {
        return dlb_augment_ood(c, cfg, seed, jobs, o);
      });
    } else if (dropout->parsed()) {
      pipeline([&](const dlb_corpus* c, const dlb_config* cfg, dlb_corpus** o) {
        return dlb_turn_dropout(c, cfg, seed, jobs, o);
      });
    } else if (counterfeit->parsed()) {
      pipeline([&](const dlb_corpus* c, const dlb_config* cfg, dlb_corpus** o) {
        char* warnings = nullptr;
        const dlb_status status =
            dlb_counterfeit(c, cfg, seed, jobs, o, &warnings);
        std::cerr << TakeString(warnings);
        return status;
      });
    } else if (tag->parsed() || clean->parsed() || filter->parsed()) {
      CorpusPtr in = run.ReadCorpus(common.in, InFormat(common));
      dlb_corpus* out = nullptr;
      if (tag->parsed()) {
        Check(dlb_tag_baseline(in.get(), &out));
      } else if (clean->parsed()) {
        Check(dlb_clean(in.get(),
                        clean_mode == "strip" ? DLB_CLEAN_STRIP : DLB_CLEAN_TAGS,
                        &out));
      } else {
        Check(dlb_filter_outliers(in.get(), min_turns, percentile, &out));
      }
      CorpusPtr result(out);
      run.WriteCorpus(result.get(), OutFormat(common));
    } else if (stats->parsed()) {
      CorpusPtr in = run.ReadCorpus(common.in, InFormat(common));
      char* text = nullptr;
      Check(dlb_stats(in.get(), ReportFormat(report), &text));
      run.Write(common.out, TakeString(text));
    } else if (validate->parsed()) {
      CorpusPtr in = run.ReadCorpus(common.in, InFormat(common));
      char* text = nullptr;
      std::size_t violations = 0;
      Check(dlb_validate(in.get(), &text, &violations));
      run.Write(common.out, TakeString(text));
      run.WriteManifest();
      return violations == 0 ? kExitOk : kExitData;
    } else if (eval->parsed()) {
      char* text = nullptr;
      if (metric == "precision-at-k") {
        const std::string tuples = run.Read(gold_path);
        Check(dlb_precision_at_k(tuples.data(), tuples.size(), k,
                                 ReportFormat(report), &text));
      } else {
        if (pred_path.empty()) {
          throw CommandError(kExitConfig, "--pred is required for " + metric);
        }
        CorpusPtr gold =
            run.ReadCorpus(gold_path, ResolveFormat(common.format, gold_path));
        CorpusPtr pred =
            run.ReadCorpus(pred_path, ResolveFormat(common.format, pred_path));
        Check(dlb_eval(gold.get(), pred.get(), metric.c_str(), fallback.c_str(),
                       include_interregnum ? 1 : 0, ReportFormat(report),
                       &text));
      }
      run.Write(common.out, TakeString(text));
    } else if (ranker->parsed()) {
      CorpusPtr in = run.ReadCorpus(common.in, InFormat(common));
      run.set_seed(seed);
      char* text = nullptr;
      Check(dlb_ranker_pairs(
          in.get(), lower, upper,
          target == "rating" ? DLB_RANKER_RATING : DLB_RANKER_LENGTH, seed,
          &text));
      run.Write(common.out, TakeString(text));
    }
    run.WriteManifest();
  } catch (const CommandError& e) {
    std::cerr << "dialobust: " << e.what() << "\n";
    return e.code();
  } catch (const std::exception& e) {
    std::cerr << "dialobust: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}
