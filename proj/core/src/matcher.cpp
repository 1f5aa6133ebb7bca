#include "monomatch/matcher.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>
#include <string_view>

#include "json.hpp"

namespace monomatch {

namespace {

bool strictly_increasing(const IndexList& indices) {
  return std::adjacent_find(indices.begin(), indices.end(),
                            [](MatchIndex a, MatchIndex b) { return a >= b; }) == indices.end();
}

// Good indices of `joined` in the boundary window of a split at `split`.
IndexList boundary_indices(const ByteText& joined, std::size_t split, const ByteText& target) {
  const std::size_t m = target.size();
  if (m < 2) return {};
  const std::size_t lo = split > m - 1 ? split - (m - 1) : 0;
  return make_indices(joined, target, lo, static_cast<std::int64_t>(split) - 1);
}

}  // namespace

IndexList to_index_list(const std::vector<std::size_t>& values) {
  IndexList out;
  out.reserve(values.size());
  for (auto v : values) out.push_back(MatchIndex{v});
  return out;
}

std::vector<std::size_t> to_offsets(const IndexList& indices) {
  std::vector<std::size_t> out;
  out.reserve(indices.size());
  for (auto i : indices) out.push_back(i.value);
  return out;
}

StringMatcher::StringMatcher(ByteText target, ByteText input, IndexList indices)
    : target_(std::move(target)), input_(std::move(input)), indices_(std::move(indices)) {
  assert(strictly_increasing(indices_));
}

StringMatcher StringMatcher::checked(ByteText target, ByteText input, IndexList indices) {
  StringMatcher m;
  m.target_ = std::move(target);
  m.input_ = std::move(input);
  m.indices_ = std::move(indices);
  if (!well_formed(m)) throw PreconditionViolation("StringMatcher: indices are not good indices");
  return m;
}

bool is_good_index(const ByteText& input, const ByteText& target, std::size_t i) noexcept {
  const std::size_t m = target.size();
  if (i > input.size() || m > input.size() - i) return false;
  if (m == 0) return true;
  const std::uint8_t* at = input.data() + i;
  return at[0] == target[0] && std::memcmp(at, target.data(), m) == 0;
}

IndexList make_indices(const ByteText& s, const ByteText& target, std::size_t lo, std::int64_t hi) {
  IndexList out;
  if (hi < 0 || static_cast<std::uint64_t>(hi) < lo) return out;
  if (target.size() > s.size()) return out;
  // Offsets past |s| - |target| can never be good.
  const std::size_t last =
      std::min<std::size_t>(static_cast<std::size_t>(hi), s.size() - target.size());
  for (std::size_t i = lo; i <= last; ++i) {
    if (is_good_index(s, target, i)) out.push_back(MatchIndex{i});
  }
  return out;
}

IndexList make_sm_indices(const ByteText& x, const ByteText& target) {
  return make_indices(x, target, 0, static_cast<std::int64_t>(x.size()) - 1);
}

StringMatcher sm_empty(const ByteText& target) { return StringMatcher(target, ByteText{}, {}); }

IndexList cast_indices([[maybe_unused]] const ByteText& target, [[maybe_unused]] const ByteText& sl,
                       [[maybe_unused]] const ByteText& sr, const IndexList& indices) {
#ifndef NDEBUG
  const ByteText joined = append(sl, sr);
  for (auto i : indices) assert(is_good_index(joined, target, i.value));
#endif
  return indices;
}

IndexList make_new_indices(const ByteText& sl, const ByteText& sr, const ByteText& target) {
  if (target.size() < 2) return {};
  return boundary_indices(append(sl, sr), sl.size(), target);
}

IndexList shift_indices([[maybe_unused]] const ByteText& target, const ByteText& sl,
                        [[maybe_unused]] const ByteText& sr, const IndexList& indices) {
  IndexList out;
  out.reserve(indices.size());
  for (auto i : indices) out.push_back(MatchIndex{i.value + sl.size()});
#ifndef NDEBUG
  const ByteText joined = append(sl, sr);
  for (auto i : out) assert(is_good_index(joined, target, i.value));
#endif
  return out;
}

StringMatcher sm_append(const StringMatcher& a, const StringMatcher& b) {
  if (!(a.target() == b.target())) {
    throw TargetMismatch("sm_append: targets differ (\"" + escape(a.target()) + "\" vs \"" +
                         escape(b.target()) + "\")");
  }
  const ByteText& target = a.target();
  ByteText joined = append(a.input(), b.input());

  IndexList cast = cast_indices(target, a.input(), b.input(), a.indices());
  const IndexList fresh = boundary_indices(joined, a.input().size(), target);
  const IndexList shifted = shift_indices(target, a.input(), b.input(), b.indices());

  IndexList indices = std::move(cast);
  indices.reserve(indices.size() + fresh.size() + shifted.size());
  indices.insert(indices.end(), fresh.begin(), fresh.end());
  indices.insert(indices.end(), shifted.begin(), shifted.end());
  return StringMatcher(target, std::move(joined), std::move(indices));
}

StringMatcher to_sm(const ByteText& input, const ByteText& target) {
  return StringMatcher(target, input, make_sm_indices(input, target));
}

IndexList naive_match(const ByteText& input, const ByteText& target) {
  const std::string_view inp = input.view();
  const std::string_view trg = target.view();
  IndexList out;
  for (std::size_t i = 0; i < inp.size(); ++i) {
    if (inp.substr(i, trg.size()) == trg) out.push_back(MatchIndex{i});
  }
  return out;
}

bool well_formed(const StringMatcher& m) {
  if (!strictly_increasing(m.indices())) return false;
  return std::all_of(m.indices().begin(), m.indices().end(),
                     [&](MatchIndex i) { return is_good_index(m.input(), m.target(), i.value); });
}

MonoidOps<StringMatcher> sm_monoid(const ByteText& target) {
  MonoidOps<StringMatcher> ops;
  ops.identity = [target] { return sm_empty(target); };
  ops.combine = [](const StringMatcher& a, const StringMatcher& b) { return sm_append(a, b); };
  ops.equal = [](const StringMatcher& a, const StringMatcher& b) { return a == b; };
  ops.show = [](const StringMatcher& m) { return render(m); };
  return ops;
}

MorphismWitness<ByteText, StringMatcher> to_sm_witness(const ByteText& target) {
  return {byte_text_ops(), sm_monoid(target),
          [target](const ByteText& x) { return to_sm(x, target); }};
}

std::string render(const StringMatcher& m) {
  std::string out = "SM(\"" + escape(m.target()) + "\", \"" + escape(m.input()) + "\", [";
  for (std::size_t k = 0; k < m.indices().size(); ++k) {
    if (k) out += ",";
    out += std::to_string(m.indices()[k].value);
  }
  return out + "])";
}

std::string to_json(const StringMatcher& m) {
  nlohmann::ordered_json doc = {{"target", escape(m.target())},
                                {"input_length", m.input().size()},
                                {"indices", to_offsets(m.indices())}};
  return doc.dump();
}

}  // namespace monomatch
