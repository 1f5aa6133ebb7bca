#include "monomatch/matcher.hpp"

#include <gtest/gtest.h>

#include "monomatch/error.hpp"
#include "support/generators.hpp"

namespace monomatch {
namespace {

using testing::uniform;

ByteText bt(std::string_view s) { return ByteText(s); }
std::vector<std::size_t> offsets(const IndexList& is) { return to_offsets(is); }
using V = std::vector<std::size_t>;

TEST(IsGoodIndexTest, Examples) {
  EXPECT_TRUE(is_good_index(bt("ababcabcab"), bt("abcab"), 2));
  EXPECT_TRUE(is_good_index(bt("ababcabcab"), bt("abcab"), 5));
  EXPECT_FALSE(is_good_index(bt("ababcabcab"), bt("abcab"), 3));
  EXPECT_TRUE(is_good_index(bt("abc"), bt("abc"), 0));
  EXPECT_FALSE(is_good_index(bt("abc"), bt("abcd"), 0));
  EXPECT_FALSE(is_good_index(bt("abc"), bt("c"), 3));
  EXPECT_FALSE(is_good_index(bt("abc"), bt("c"), static_cast<std::size_t>(-1)));
  // The empty target fits at every offset up to and including the length.
  EXPECT_TRUE(is_good_index(bt("abc"), bt(""), 3));
  EXPECT_FALSE(is_good_index(bt("abc"), bt(""), 4));
}

TEST(MakeIndicesTest, Examples) {
  EXPECT_EQ(offsets(make_indices(bt("abababa"), bt("aba"), 0, 6)), (V{0, 2, 4}));
  EXPECT_EQ(offsets(make_indices(bt("abababa"), bt("aba"), 5, 4)), V{});
  EXPECT_EQ(offsets(make_indices(bt("ababcabcab"), bt("abcab"), 0, 9)), (V{2, 5}));
  EXPECT_EQ(offsets(make_indices(bt("abababa"), bt("aba"), 1, 3)), (V{2}));
  EXPECT_EQ(offsets(make_indices(bt("abababa"), bt("aba"), 0, -1)), V{});
  EXPECT_EQ(offsets(make_indices(bt("abababa"), bt("aba"), 0, 100)), (V{0, 2, 4}));
}

TEST(MakeSmIndicesTest, Examples) {
  EXPECT_EQ(offsets(make_sm_indices(bt("abababa"), bt("aba"))), (V{0, 2, 4}));
  EXPECT_EQ(offsets(make_sm_indices(bt(""), bt("aba"))), V{});
  EXPECT_EQ(offsets(make_sm_indices(bt("aaaa"), bt("aa"))), (V{0, 1, 2}));
}

TEST(NaiveMatchTest, Examples) {
  EXPECT_EQ(offsets(naive_match(bt("abababa"), bt("aba"))), (V{0, 2, 4}));
  EXPECT_EQ(offsets(naive_match(bt("aaaa"), bt("aa"))), (V{0, 1, 2}));
  EXPECT_EQ(offsets(naive_match(bt("ab"), bt("abc"))), V{});
  EXPECT_EQ(offsets(naive_match(bt("ab"), bt(""))), (V{0, 1}));
}

TEST(SmEmptyTest, IsTwoSidedIdentity) {
  const ByteText t = bt("aba");
  const StringMatcher e = sm_empty(t);
  EXPECT_EQ(e.target(), t);
  EXPECT_TRUE(e.input().empty());
  EXPECT_TRUE(e.indices().empty());
  const StringMatcher m = to_sm(bt("xabax"), t);
  EXPECT_EQ(sm_append(e, m), m);
  EXPECT_EQ(sm_append(m, e), m);
}

TEST(CastIndicesTest, Examples) {
  EXPECT_TRUE(cast_indices(bt("aba"), bt("x"), bt("y"), {}).empty());
  const IndexList cast = cast_indices(bt("aba"), bt("abab"), bt("xy"), to_index_list({0}));
  EXPECT_EQ(offsets(cast), (V{0}));
  EXPECT_TRUE(is_good_index(bt("ababxy"), bt("aba"), 0));
}

TEST(MakeNewIndicesTest, Examples) {
  EXPECT_EQ(offsets(make_new_indices(bt("ababcab"), bt("cab"), bt("abcab"))), (V{5}));
  EXPECT_EQ(offsets(make_new_indices(bt("ababcab"), bt(""), bt("abcab"))), V{});
  EXPECT_EQ(offsets(make_new_indices(bt("aaaa"), bt("aaaa"), bt("a"))), V{});
  EXPECT_EQ(offsets(make_new_indices(bt("aaaa"), bt("aaaa"), bt(""))), V{});
  // s1 shorter than the target: window starts at 0.
  EXPECT_EQ(offsets(make_new_indices(bt("a"), bt("bab"), bt("aba"))), (V{0}));
  // Occurrences wholly inside sl are not new.
  EXPECT_EQ(offsets(make_new_indices(bt("abaab"), bt("a"), bt("aba"))), (V{3}));
}

TEST(ShiftIndicesTest, Examples) {
  const IndexList is = to_index_list({0, 2});
  EXPECT_EQ(shift_indices(bt("aba"), bt(""), bt("ababa"), is), is);
  EXPECT_EQ(offsets(shift_indices(bt("aba"), bt("xy"), bt("aba"), to_index_list({0}))), (V{2}));
  EXPECT_TRUE(is_good_index(bt("xyaba"), bt("aba"), 2));
  EXPECT_TRUE(shift_indices(bt("aba"), bt("xy"), bt("q"), {}).empty());
}

TEST(SmAppendTest, Examples) {
  // Expected values come from the reference scan of the joined input.
  const StringMatcher ab = sm_append(to_sm(bt("abab"), bt("aba")), to_sm(bt("ab"), bt("aba")));
  EXPECT_EQ(ab.input(), bt("ababab"));
  EXPECT_EQ(ab.indices(), naive_match(bt("ababab"), bt("aba")));
  EXPECT_EQ(offsets(ab.indices()), (V{0, 2}));

  const StringMatcher left = to_sm(bt("ababcab"), bt("abcab"));
  const StringMatcher right = to_sm(bt("cab"), bt("abcab"));
  EXPECT_EQ(offsets(left.indices()), (V{2}));
  EXPECT_TRUE(right.indices().empty());
  const StringMatcher joined = sm_append(left, right);
  EXPECT_EQ(joined.input(), bt("ababcabcab"));
  EXPECT_EQ(offsets(joined.indices()), (V{2, 5}));
}

TEST(SmAppendTest, TargetMismatchThrows) {
  EXPECT_THROW(sm_append(to_sm(bt("abc"), bt("ab")), to_sm(bt("abc"), bt("bc"))), TargetMismatch);
  EXPECT_THROW(sm_append(sm_empty(bt("a")), sm_empty(bt("b"))), TargetMismatch);
}

TEST(ToSmTest, Examples) {
  EXPECT_EQ(offsets(to_sm(bt("abababa"), bt("aba")).indices()), (V{0, 2, 4}));
  EXPECT_EQ(offsets(to_sm(bt("ababcabcab"), bt("abcab")).indices()), (V{2, 5}));
  EXPECT_TRUE(to_sm(bt(""), bt("aba")).indices().empty());
}

TEST(ToSmTest, EmptyTargetMatchesEveryOffset) {
  const StringMatcher m = to_sm(bt("abc"), bt(""));
  EXPECT_EQ(offsets(m.indices()), (V{0, 1, 2}));
  EXPECT_EQ(sm_append(to_sm(bt("ab"), bt("")), to_sm(bt("c"), bt(""))), m);
}

TEST(StringMatcherTest, CheckedConstruction) {
  EXPECT_NO_THROW(StringMatcher::checked(bt("ab"), bt("abab"), to_index_list({0, 2})));
  EXPECT_THROW(StringMatcher::checked(bt("ab"), bt("abab"), to_index_list({1})),
               PreconditionViolation);
  EXPECT_THROW(StringMatcher::checked(bt("ab"), bt("abab"), to_index_list({2, 0})),
               PreconditionViolation);
  EXPECT_TRUE(well_formed(to_sm(bt("aaaa"), bt("aa"))));
}

TEST(StringMatcherTest, JsonRecordOmitsInput) {
  EXPECT_EQ(to_json(to_sm(bt("abababa"), bt("aba"))),
            R"({"target":"aba","input_length":7,"indices":[0,2,4]})");
  EXPECT_EQ(render(to_sm(bt("aab"), bt("a"))), R"(SM("a", "aab", [0,1]))");
}

// Properties.

TEST(MatcherPropertyTest, AgreesWithNaiveScan) {
  Rng rng(41);
  for (int t = 0; t < 3000; ++t) {
    const auto c = testing::random_match_case(rng, 200, 6);
    ASSERT_EQ(to_sm(c.input, c.target).indices(), naive_match(c.input, c.target))
        << escape(c.input) << " / " << escape(c.target);
  }
}

TEST(MatcherPropertyTest, MorphismLaw) {
  Rng rng(42);
  for (int t = 0; t < 1000; ++t) {
    const auto c = testing::random_match_case(rng, 100, 5);
    const std::size_t at = uniform(rng, 0, c.input.size());
    const ByteText x = c.input.take(at);
    const ByteText y = c.input.drop(at);
    ASSERT_EQ(to_sm(append(x, y), c.target), sm_append(to_sm(x, c.target), to_sm(y, c.target)));
  }
}

TEST(MatcherPropertyTest, AppendGroupsAreDisjointAndOrdered) {
  Rng rng(43);
  for (int t = 0; t < 1000; ++t) {
    const auto c = testing::random_match_case(rng, 60, 5);
    if (c.target.empty()) continue;
    const std::size_t at = uniform(rng, 0, c.input.size());
    const ByteText x = c.input.take(at);
    const ByteText y = c.input.drop(at);
    const auto m = c.target.size();
    const auto cast = to_sm(x, c.target).indices();
    const auto fresh = make_new_indices(x, y, c.target);
    const auto shifted = shift_indices(c.target, x, y, to_sm(y, c.target).indices());
    for (auto i : cast) ASSERT_LE(i.value + m, x.size());
    for (auto i : fresh) {
      ASSERT_GE(i.value + m, x.size() + 1);
      ASSERT_LT(i.value, x.size());
    }
    for (auto i : shifted) ASSERT_GE(i.value, x.size());
    ASSERT_TRUE(well_formed(sm_append(to_sm(x, c.target), to_sm(y, c.target))));
  }
}

TEST(MatcherPropertyTest, NewIndicesWindowIsBounded) {
  Rng rng(44);
  for (int t = 0; t < 500; ++t) {
    const auto c = testing::random_match_case(rng, 80, 8);
    const std::size_t at = uniform(rng, 0, c.input.size());
    const ByteText x = c.input.take(at);
    const ByteText y = c.input.drop(at);
    const auto fresh = make_new_indices(x, y, c.target);
    const std::size_t bound = c.target.size() > 0 ? c.target.size() - 1 : 0;
    ASSERT_LE(fresh.size(), bound);
    if (!fresh.empty()) ASSERT_LT(fresh.back().value - fresh.front().value, bound);
  }
}

}  // namespace
}  // namespace monomatch
