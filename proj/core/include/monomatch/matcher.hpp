#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "monomatch/byte_text.hpp"
#include "monomatch/monoid.hpp"

namespace monomatch {

// Byte offset at which the target occurs in some input.
struct MatchIndex {
  std::size_t value = 0;

  friend auto operator<=>(const MatchIndex&, const MatchIndex&) = default;
};

using IndexList = std::vector<MatchIndex>;

IndexList to_index_list(const std::vector<std::size_t>& values);
std::vector<std::size_t> to_offsets(const IndexList& indices);

// The string-matcher monoid element for a fixed target: an input text and an
// ascending list of offsets at which the target occurs in it. Values built by
// to_sm list every occurrence; values built by sm_append are complete when
// both operands are.
class StringMatcher {
 public:
  StringMatcher() = default;
  StringMatcher(ByteText target, ByteText input, IndexList indices);

  // As the constructor, but throws PreconditionViolation unless the indices
  // are strictly increasing good indices of input for target.
  static StringMatcher checked(ByteText target, ByteText input, IndexList indices);

  const ByteText& target() const noexcept { return target_; }
  const ByteText& input() const noexcept { return input_; }
  const IndexList& indices() const noexcept { return indices_; }

  friend bool operator==(const StringMatcher&, const StringMatcher&) = default;

 private:
  ByteText target_;
  ByteText input_;
  IndexList indices_;
};

// True iff target occurs in input at offset i and fits within it.
bool is_good_index(const ByteText& input, const ByteText& target, std::size_t i) noexcept;

// All good indices i with lo <= i <= hi, ascending. hi < lo gives [].
IndexList make_indices(const ByteText& s, const ByteText& target, std::size_t lo, std::int64_t hi);

// All good indices of x: make_indices(x, target, 0, |x| - 1).
IndexList make_sm_indices(const ByteText& x, const ByteText& target);

StringMatcher sm_empty(const ByteText& target);

// Re-types indices of sl as indices of sl ++ sr. Values are unchanged.
IndexList cast_indices(const ByteText& target, const ByteText& sl, const ByteText& sr,
                       const IndexList& indices);

// Occurrences in sl ++ sr that start in the last |target| - 1 bytes of sl,
// i.e. those created by the append. Empty when |target| < 2. Examines at most
// |target| - 1 candidate offsets whatever the input sizes.
IndexList make_new_indices(const ByteText& sl, const ByteText& sr, const ByteText& target);

// Moves indices of sr to sl ++ sr by adding |sl|.
IndexList shift_indices(const ByteText& target, const ByteText& sl, const ByteText& sr,
                        const IndexList& indices);

// Monoid operation. Throws TargetMismatch if the targets differ.
StringMatcher sm_append(const StringMatcher& a, const StringMatcher& b);

// The morphism from ByteText to StringMatcher.
StringMatcher to_sm(const ByteText& input, const ByteText& target);

// Reference scan: compares the window at every offset in [0, |input|)
// directly. Deliberately shares nothing with make_indices.
IndexList naive_match(const ByteText& input, const ByteText& target);

// True iff indices are strictly increasing and each is a good index.
bool well_formed(const StringMatcher& m);

MonoidOps<StringMatcher> sm_monoid(const ByteText& target);
MorphismWitness<ByteText, StringMatcher> to_sm_witness(const ByteText& target);

std::string render(const StringMatcher& m);

// {"target": <escaped>, "input_length": n, "indices": [...]}; the input text
// itself is not included.
std::string to_json(const StringMatcher& m);

}  // namespace monomatch
