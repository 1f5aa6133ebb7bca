#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>

#include "CLI11.hpp"
#include "json.hpp"
#include "monomatch/byte_text.hpp"
#include "monomatch/executor.hpp"
#include "monomatch/matcher.hpp"
#include "monomatch/pipeline.hpp"

namespace monomatch::cli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

struct Options {
  std::string target;
  std::string target_hex;
  std::vector<std::string> inputs;
  Mode mode = Mode::par;
  std::size_t branch = 4;
  std::size_t chunk = 0;  // 0: input length / threads
  bool chunk_given = false;
  bool branch_given = false;
  bool json = false;
  bool verify = false;
  bool bench = false;
  std::size_t threads = 0;  // 0: default pool
  std::size_t repetitions = 3;
};

ByteText read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) throw std::runtime_error("error reading standard input");
    return ByteText(std::move(bytes));
  }
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec)) throw std::runtime_error(path + ": is a directory");
  return ByteText::from_file(path);
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 ? xs[n / 2] : (xs[n / 2 - 1] + xs[n / 2]) / 2.0;
}

std::size_t default_chunk(std::size_t input_length, std::size_t threads) {
  return std::max<std::size_t>(input_length / std::max<std::size_t>(threads, 1), 1);
}

// Explicit --branch/--chunk give a single plan, otherwise the library's
// benchmark sweep.
std::vector<ChunkPlan> bench_plans(const Options& opts, std::size_t input_length,
                                   std::size_t threads) {
  if (opts.branch_given || opts.chunk_given) {
    return {{opts.branch, opts.chunk_given ? opts.chunk : default_chunk(input_length, threads)}};
  }
  return bench_plan_sweep(input_length, threads);
}

int run_bench(const Options& opts, const std::string& path, const ByteText& input,
              const ByteText& target, Executor& executor, std::ostream& out) {
  struct Row {
    ChunkPlan plan;
    double seq_ms;
    double par_ms;
    bool equal;
  };
  std::vector<Row> rows;
  for (const auto& plan : bench_plans(opts, input.size(), executor.thread_count())) {
    std::vector<double> seq;
    std::vector<double> par;
    bool equal = true;
    for (std::size_t r = 0; r < opts.repetitions; ++r) {
      const auto report = verify_equivalence(input, target, {plan}, executor);
      const auto& e = report.entries.front();
      seq.push_back(e.sequential_ms);
      par.push_back(e.parallel_ms);
      equal = equal && e.equal;
    }
    rows.push_back({plan, median(seq), median(par), equal});
  }

  const bool all_equal =
      std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.equal; });
  if (opts.json) {
    nlohmann::ordered_json doc = {{"path", path},
                                  {"input_length", input.size()},
                                  {"target_length", target.size()},
                                  {"threads", executor.thread_count()},
                                  {"repetitions", opts.repetitions},
                                  {"rows", nlohmann::ordered_json::array()}};
    for (const auto& r : rows) {
      doc["rows"].push_back({{"branch", r.plan.branch},
                             {"chunk_size", r.plan.chunk_size},
                             {"seq_ms", r.seq_ms},
                             {"par_ms", r.par_ms},
                             {"speedup", r.par_ms > 0 ? r.seq_ms / r.par_ms : 0.0},
                             {"equal", r.equal}});
    }
    out << doc.dump() << '\n';
  } else {
    out << "# " << path << " bytes=" << input.size() << " threads=" << executor.thread_count()
        << " repetitions=" << opts.repetitions << '\n';
    out << "branch\tchunk_size\tseq_ms\tpar_ms\tspeedup\tequal\n";
    char line[160];
    for (const auto& r : rows) {
      std::snprintf(line, sizeof line, "%zu\t%zu\t%.3f\t%.3f\t%.2f\t%s\n", r.plan.branch,
                    r.plan.chunk_size, r.seq_ms, r.par_ms, r.par_ms > 0 ? r.seq_ms / r.par_ms : 0.0,
                    r.equal ? "yes" : "no");
      out << line;
    }
  }
  return all_equal ? kMatched : kDivergence;
}

}  // namespace

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::seq:
      return "seq";
    case Mode::par:
      return "par";
    case Mode::both:
      return "both";
  }
  return "?";
}

std::string to_json(const MatchReport& report) {
  nlohmann::ordered_json timings = nlohmann::ordered_json::object();
  if (report.seq_ms) timings["seq_ms"] = *report.seq_ms;
  if (report.par_ms) timings["par_ms"] = *report.par_ms;
  nlohmann::ordered_json doc = {{"path", report.path},
                                {"target_length", report.target_length},
                                {"indices", report.indices},
                                {"count", report.count},
                                {"mode", to_string(report.mode)},
                                {"timings", std::move(timings)}};
  return doc.dump(-1, ' ', false, nlohmann::ordered_json::error_handler_t::replace);
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options opts;
  CLI::App app{"Find every (overlapping) byte offset of a target in files or standard input."};
  app.name("monomatch");

  auto* target_opt = app.add_option("-t,--target", opts.target, "Target string, matched as bytes");
  auto* hex_opt = app.add_option("--target-hex", opts.target_hex, "Target given as hex bytes");
  target_opt->excludes(hex_opt);
  hex_opt->excludes(target_opt);
  app.add_option("-i,--input,inputs", opts.inputs, "Input files ('-' for standard input)");
  const std::map<std::string, Mode> modes{
      {"seq", Mode::seq}, {"par", Mode::par}, {"both", Mode::both}};
  app.add_option("-m,--mode", opts.mode, "seq, par or both")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  auto* branch_opt = app.add_option("-b,--branch", opts.branch, "Reduction fan-in (default 4)")
                         ->check(CLI::PositiveNumber);
  auto* chunk_opt =
      app.add_option("-c,--chunk", opts.chunk, "Chunk size in bytes (default input/threads)")
          ->check(CLI::PositiveNumber);
  app.add_flag("--json", opts.json, "Emit one JSON report per input");
  app.add_flag("--verify", opts.verify, "Run both matchers and fail on any difference");
  app.add_flag("--bench", opts.bench,
               "Time sequential against parallel matching over a plan sweep");
  app.add_option("-j,--threads", opts.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--repetitions", opts.repetitions, "Benchmark repetitions (median is reported)")
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kMatched;
  } catch (const CLI::ParseError& e) {
    err << "monomatch: " << e.what() << '\n';
    return kUsageOrIoError;
  }
  opts.branch_given = branch_opt->count() > 0;
  opts.chunk_given = chunk_opt->count() > 0;
  if (opts.verify) opts.mode = Mode::both;

  ByteText target;
  if (hex_opt->count() > 0) {
    try {
      target = from_hex(opts.target_hex);
    } catch (const std::exception& e) {
      err << "monomatch: --target-hex: " << e.what() << '\n';
      return kUsageOrIoError;
    }
  } else if (target_opt->count() > 0) {
    target = ByteText(opts.target);
  } else {
    err << "monomatch: one of --target or --target-hex is required\n";
    return kUsageOrIoError;
  }
  if (target.empty()) {
    err << "monomatch: empty target rejected: an empty target occurs at every offset, "
           "which is never a useful search\n";
    return kUsageOrIoError;
  }
  if (opts.inputs.empty()) opts.inputs.push_back("-");

  std::unique_ptr<Executor> owned;
  if (opts.threads > 0) owned = std::make_unique<Executor>(opts.threads);
  Executor& executor = owned ? *owned : default_executor();

  const bool prefix = opts.inputs.size() > 1;
  bool any_match = false;
  bool io_error = false;
  bool diverged = false;

  for (const auto& path : opts.inputs) {
    ByteText input;
    try {
      input = read_input(path, in);
    } catch (const std::exception& e) {
      err << "monomatch: " << e.what() << '\n';
      io_error = true;
      continue;
    }

    if (opts.bench) {
      diverged = run_bench(opts, path, input, target, executor, out) == kDivergence || diverged;
      continue;
    }

    const ChunkPlan plan{opts.branch, opts.chunk_given
                                          ? opts.chunk
                                          : default_chunk(input.size(), executor.thread_count())};
    MatchReport report;
    report.path = path;
    report.target_length = target.size();
    report.mode = opts.mode;

    std::optional<StringMatcher> seq;
    std::optional<StringMatcher> par;
    if (opts.mode != Mode::par) {
      const auto start = Clock::now();
      seq = to_sm(input, target);
      report.seq_ms = elapsed_ms(start);
    }
    if (opts.mode != Mode::seq) {
      const auto start = Clock::now();
      par = to_sm_par(plan, input, target, executor);
      report.par_ms = elapsed_ms(start);
    }
    if (seq && par) {
      if (const auto at = first_divergence(seq->indices(), par->indices())) {
        err << "monomatch: " << path << ": sequential and parallel results differ at index " << *at
            << " with plan " << to_string(plan) << '\n';
        diverged = true;
      }
    }

    report.indices = to_offsets(seq ? seq->indices() : par->indices());
    report.count = report.indices.size();
    any_match = any_match || report.count > 0;

    if (opts.json) {
      out << to_json(report) << '\n';
    } else {
      const std::string lead = prefix ? path + ":" : "";
      for (auto i : report.indices) out << lead << i << '\n';
      err << lead << "count=" << report.count << '\n';
    }
  }
  out.flush();

  if (diverged) return kDivergence;
  if (io_error) return kUsageOrIoError;
  if (opts.bench) return kMatched;
  return any_match ? kMatched : kNoMatch;
}

}  // namespace monomatch::cli
