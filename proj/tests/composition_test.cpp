#include <gtest/gtest.h>

#include "condorcet/condorcet.hpp"
#include "test_util.hpp"

namespace condorcet {
namespace {

using testing::compact;
using testing::dom;
using testing::lo;
using testing::no;

Domain on(std::initializer_list<std::string> labels, std::initializer_list<std::string_view> orders) {
  return dom(AlternativeSet(labels), orders);
}

TEST(Labels, DisjointKeptDefaultContinuesOtherwiseTagged) {
  EXPECT_EQ(combined_alternatives(AlternativeSet({"a", "b"}), AlternativeSet({"c"})).labels(),
            (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(combined_alternatives(AlternativeSet::numbered(3), AlternativeSet::numbered(2)),
            AlternativeSet::numbered(5));
  EXPECT_EQ(combined_alternatives(AlternativeSet({"a", "b"}), AlternativeSet({"b", "c"})).labels(),
            (std::vector<std::string>{"a.L", "b.L", "b.R", "c.R"}));
}

TEST(Concatenate, Examples) {
  const auto ab = on({"a", "b"}, {"ab", "ba"});
  const auto cd = on({"c", "d"}, {"cd", "dc"});
  EXPECT_EQ(compact(concatenate(ab, cd)), (std::set<std::string>{"abcd", "abdc", "bacd", "badc"}));
  EXPECT_EQ(compact(concatenate(on({"a", "b"}, {"ba"}), on({"c"}, {"c"}))), std::set<std::string>{"bac"});
  EXPECT_EQ(concatenate(fishburn_domain(3), fishburn_domain(2)).size(), 8u);
}

TEST(ShuffleDomain, Examples) {
  const AlternativeSet ab({"a", "b"}), cd({"c", "d"});
  EXPECT_EQ(compact(shuffle_domain(lo("ab"), ab, lo("ab"), cd)),
            (std::set<std::string>{"abcd", "acbd", "acdb", "cabd", "cadb", "cdab"}));
  EXPECT_EQ(compact(shuffle_domain(lo("a"), AlternativeSet({"a"}), lo("a"), AlternativeSet({"b"}))),
            (std::set<std::string>{"ab", "ba"}));
  EXPECT_EQ(shuffle_domain(no("321"), no("21")).size(), 10u);
  EXPECT_THROW(shuffle_domain(lo("ab"), AlternativeSet({"a"}), lo("a"), cd), PreconditionError);
}

TEST(Tensor, ExampleOne) {
  const auto r = tensor(fishburn_domain(3), fishburn_domain(2), no("321"), no("21"));
  EXPECT_EQ(compact(r.domain),
            (std::set<std::string>{"12345", "21345", "23145", "32145", "12354", "21354", "23154", "32154", "32514",
                                   "35214", "53214", "32541", "35241", "35421", "53241", "53421", "54321"}));
  EXPECT_EQ(r.seam, no("32154"));
  EXPECT_EQ(r.left_size, 4u);
  EXPECT_EQ(r.right_size, 2u);
  EXPECT_EQ(r.shuffle_count, 10);
}

TEST(Tensor, ProductOfTwoPairs) {
  const auto r = tensor(on({"a", "b"}, {"ab", "ba"}), on({"c", "d"}, {"cd", "dc"}), lo("ab"), lo("ab"));
  EXPECT_EQ(compact(r.domain), (std::set<std::string>{"abcd", "abdc", "bacd", "badc", "acbd", "acdb", "cabd",
                                                      "cadb", "cdab"}));
}

TEST(Tensor, SingletonsGiveTheShuffleDomain) {
  const auto u = no("213"), v = no("12");
  const auto r = tensor(Domain(3, {u}), Domain(2, {v}), u, v);
  EXPECT_EQ(r.domain, shuffle_domain(u, v));
}

TEST(Tensor, Errors) {
  const auto f3 = fishburn_domain(3), f2 = fishburn_domain(2);
  EXPECT_THROW(tensor(f3, f2, no("132"), no("12")), PreconditionError);
  EXPECT_THROW(tensor(f3, f2, no("123"), LinearOrder({0, 1, 2})), PreconditionError);
  const auto bad = Domain(3, all_orders(3));
  EXPECT_THROW(tensor(bad, f2, no("123"), no("12")), DomainError);
}

TEST(TensorCardinality, Examples) {
  EXPECT_EQ(tensor_cardinality(4, 2, 3, 2), 17);
  for (std::size_t m = 1; m <= 6; ++m)
    for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(tensor_cardinality(1, 1, m, n), binomial(n + m, m));
  const auto f20 = fishburn_cardinality(20);
  EXPECT_EQ(to_string(tensor_cardinality(f20, f20, 20, 20)), "4611858343415");
  EXPECT_THROW(tensor_cardinality(0, 1, 1, 1), PreconditionError);
}

TEST(ReversalPair, Examples) {
  EXPECT_EQ(reversal_pair(fishburn_domain(4)), no("1234"));
  EXPECT_FALSE(reversal_pair(testing::letters({"abc", "acb"})));
  const auto d2 = on({"c", "d", "e"}, {"cde", "dec", "dce", "edc"});
  EXPECT_EQ(reversal_pair(d2), lo("abc"));
  EXPECT_EQ(default_seam_order(testing::letters({"acb", "abc"})), lo("abc"));
  EXPECT_THROW(default_seam_order(Domain(2, {})), PreconditionError);
}

TEST(Scan, Rows) {
  const auto scan = hypothesis_scan(25);
  ASSERT_EQ(scan.rows.size(), 24u);
  const auto& five = scan.rows[3];
  EXPECT_EQ(five.n, 5u);
  EXPECT_EQ(five.product, 651);
  EXPECT_EQ(five.fishburn, 1069);
  EXPECT_LT(five.comparison, 0);
  const auto& twenty = scan.rows[18];
  EXPECT_EQ(twenty.n, 20u);
  EXPECT_EQ(to_string(twenty.product), "4611858343415");
  EXPECT_EQ(to_string(twenty.fishburn), "4549082342996");
  EXPECT_GT(twenty.comparison, 0);
  EXPECT_GT(scan.rows[19].comparison, 0);
  ASSERT_TRUE(scan.first_exceedance);
  EXPECT_EQ(*scan.first_exceedance, 20u);
  for (std::size_t n = 3; n <= 19; ++n) EXPECT_LT(scan.rows[n - 2].comparison, 0) << n;
}

TEST(Scan, ShortRangeHasNoExceedance) {
  EXPECT_FALSE(hypothesis_scan(19).first_exceedance);
  EXPECT_THROW(hypothesis_scan(2), PreconditionError);
}

TEST(WidthCounterexample, SeamChoiceMatters) {
  const auto d1 = on({"a", "b"}, {"ab", "ba"});
  const auto d2 = on({"c", "d", "e"}, {"cde", "dec", "dce", "edc"});
  const auto wide = tensor(d1, d2, lo("ab"), lo("abc")).domain;
  const auto narrow = tensor(d1, d2, lo("ab"), lo("bca")).domain;
  EXPECT_TRUE(has_maximal_width(wide));
  EXPECT_FALSE(has_maximal_width(narrow));
  EXPECT_FALSE(is_semi_connected(narrow));
  EXPECT_FALSE(find_isomorphism(wide, narrow, false));
  EXPECT_FALSE(find_isomorphism(wide, narrow, true));
  EXPECT_EQ(wide.size(), narrow.size());
}

TEST(Tensor, SizeMatchesFormulaOnFishburnFactors) {
  for (std::size_t m = 2; m <= 5; ++m)
    for (std::size_t n = 2; n <= 5; ++n) {
      const auto a = fishburn_domain(m), b = fishburn_domain(n);
      const auto r = tensor(a, b, default_seam_order(a), default_seam_order(b));
      EXPECT_EQ(ExactInt(r.domain.size()), tensor_cardinality(a.size(), b.size(), m, n));
      EXPECT_TRUE(is_condorcet(r.domain));
      EXPECT_TRUE(is_semi_connected(r.domain));
    }
}

}  // namespace
}  // namespace condorcet
