#include "monomatch/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "monomatch/monoid.hpp"

namespace monomatch {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

}  // namespace

void ChunkPlan::validate() const {
  if (branch < 1) throw InvalidArgument("plan: branch must be at least 1");
  if (chunk_size < 1) throw InvalidArgument("plan: chunk_size must be at least 1");
}

std::string to_string(const ChunkPlan& plan) {
  return "(branch=" + std::to_string(plan.branch) + ", chunk=" + std::to_string(plan.chunk_size) +
         ")";
}

StringMatcher to_sm_par(const ChunkPlan& plan, const ByteText& input, const ByteText& target,
                        Executor& executor) {
  plan.validate();
  const std::vector<ByteText> pieces = chunk(plan.chunk_size, input);
  const std::vector<StringMatcher> matched =
      pmap([&](const ByteText& piece) { return to_sm(piece, target); }, pieces, executor);
  return pmconcat(sm_monoid(target), static_cast<std::ptrdiff_t>(plan.branch), matched, executor);
}

std::vector<ChunkPlan> default_plan_sweep(std::size_t target_length) {
  std::vector<ChunkPlan> plans;
  for (std::size_t branch : {2, 4, 8}) {
    for (std::size_t chunk_size : {1, 7, 64}) plans.push_back({branch, chunk_size});
  }
  plans.push_back({2, std::max<std::size_t>(target_length > 0 ? target_length - 1 : 1, 1)});
  return plans;
}

std::vector<ChunkPlan> bench_plan_sweep(std::size_t input_length, std::size_t threads) {
  threads = std::max<std::size_t>(threads, 1);
  std::vector<ChunkPlan> plans;
  for (std::size_t branch : {2, 4, 8}) {
    for (std::size_t divisor : {1, 4, 16}) {
      const ChunkPlan plan{branch, std::max<std::size_t>(input_length / (threads * divisor), 1)};
      if (std::find(plans.begin(), plans.end(), plan) == plans.end()) plans.push_back(plan);
    }
  }
  return plans;
}

bool EquivalenceReport::all_equal() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const EquivalenceEntry& e) { return e.equal; });
}

std::string EquivalenceReport::to_text() const {
  std::ostringstream out;
  out << "branch\tchunk_size\tequal\tsequential_ms\tparallel_ms\tspeedup\n";
  char row[160];
  for (const auto& e : entries) {
    std::snprintf(row, sizeof row, "%zu\t%zu\t%s\t%.3f\t%.3f\t%.2f", e.plan.branch,
                  e.plan.chunk_size, e.equal ? "yes" : "no", e.sequential_ms, e.parallel_ms,
                  e.speedup());
    out << row;
    if (e.first_divergence) out << "\tdiverges_at=" << *e.first_divergence;
    out << '\n';
  }
  return out.str();
}

std::string EquivalenceReport::to_json() const {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json entry = {
        {"plan", {{"branch", e.plan.branch}, {"chunk_size", e.plan.chunk_size}}},
        {"equal", e.equal},
        {"sequential_ms", e.sequential_ms},
        {"parallel_ms", e.parallel_ms},
        {"speedup", e.speedup()},
    };
    entry["first_divergence"] =
        e.first_divergence ? nlohmann::ordered_json(*e.first_divergence) : nlohmann::ordered_json();
    doc.push_back(std::move(entry));
  }
  return doc.dump();
}

std::optional<std::size_t> first_divergence(const IndexList& a, const IndexList& b) {
  const auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
  if (ia == a.end() && ib == b.end()) return std::nullopt;
  return static_cast<std::size_t>(ia - a.begin());
}

EquivalenceReport verify_equivalence(const ByteText& input, const ByteText& target,
                                     const std::vector<ChunkPlan>& plans, Executor& executor) {
  EquivalenceReport report;
  for (const auto& plan : plans) {
    EquivalenceEntry entry;
    entry.plan = plan;

    auto start = Clock::now();
    const StringMatcher sequential = to_sm(input, target);
    entry.sequential_ms = elapsed_ms(start);

    start = Clock::now();
    const StringMatcher parallel = to_sm_par(plan, input, target, executor);
    entry.parallel_ms = elapsed_ms(start);

    entry.first_divergence = first_divergence(sequential.indices(), parallel.indices());
    entry.equal = !entry.first_divergence && sequential.input() == parallel.input();
    report.entries.push_back(entry);
  }
  return report;
}

}  // namespace monomatch
