#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "monomatch/byte_text.hpp"
#include "monomatch/executor.hpp"
#include "monomatch/matcher.hpp"

namespace monomatch {

// Parameters of the two-level pipeline: the input is cut into chunk_size
// byte pieces, matched concurrently, and reduced branch pieces at a time.
struct ChunkPlan {
  std::size_t branch = 4;
  std::size_t chunk_size = 1;

  // Throws InvalidArgument unless both fields are at least 1.
  void validate() const;

  friend bool operator==(const ChunkPlan&, const ChunkPlan&) = default;
};

std::string to_string(const ChunkPlan& plan);

// pmconcat branch . pmap to_sm . chunk chunk_size. Always equal to
// to_sm(input, target).
StringMatcher to_sm_par(const ChunkPlan& plan, const ByteText& input, const ByteText& target,
                        Executor& executor = default_executor());

// branch {2, 4, 8} x chunk_size {1, 7, 64}, plus (2, max(|target| - 1, 1)) so
// that every occurrence straddles a chunk boundary.
std::vector<ChunkPlan> default_plan_sweep(std::size_t target_length);

// Plans for timing large inputs: branch {2, 4, 8} crossed with chunk sizes
// n/T, n/4T and n/16T (at least 1) for T worker threads, duplicates removed.
std::vector<ChunkPlan> bench_plan_sweep(std::size_t input_length, std::size_t threads);

struct EquivalenceEntry {
  ChunkPlan plan;
  bool equal = true;
  // Position in the index lists of the first disagreement (or the shorter
  // length when one list is a prefix of the other).
  std::optional<std::size_t> first_divergence;
  double sequential_ms = 0;
  double parallel_ms = 0;

  double speedup() const { return parallel_ms > 0 ? sequential_ms / parallel_ms : 0.0; }
};

struct EquivalenceReport {
  std::vector<EquivalenceEntry> entries;

  bool all_equal() const;
  // Header line then one row per plan:
  //   branch chunk_size equal sequential_ms parallel_ms speedup
  std::string to_text() const;
  // [{"plan":{"branch":..,"chunk_size":..},"equal":..,"sequential_ms":..,
  //   "parallel_ms":..,"speedup":..,"first_divergence":..|null}]
  std::string to_json() const;
};

// Index position at which two lists first differ, if they differ.
std::optional<std::size_t> first_divergence(const IndexList& a, const IndexList& b);

// Runs the sequential and parallel matchers once per plan and compares them.
EquivalenceReport verify_equivalence(const ByteText& input, const ByteText& target,
                                     const std::vector<ChunkPlan>& plans,
                                     Executor& executor = default_executor());

}  // namespace monomatch
