#include <gtest/gtest.h>

#include "ease/vocabulary.hpp"

namespace ease {
namespace {

TEST(Vocabulary, MapsIdsBothWays) {
  Vocabulary v({"b", "a", "c"});
  EXPECT_EQ(v.size(), 3u);
  EXPECT_EQ(v.id(0), "b");
  EXPECT_EQ(v.find("c"), 2u);
  EXPECT_FALSE(v.find("z").has_value());
}

TEST(Vocabulary, RejectsDuplicates) {
  EXPECT_THROW(Vocabulary({"a", "a"}), std::invalid_argument);
}

TEST(Vocabulary, HashDependsOnOrderAndBoundaries) {
  EXPECT_EQ(Vocabulary({"a", "b"}).hash(), Vocabulary({"a", "b"}).hash());
  EXPECT_NE(Vocabulary({"a", "b"}).hash(), Vocabulary({"b", "a"}).hash());
  EXPECT_NE(Vocabulary({"ab", "c"}).hash(), Vocabulary({"a", "bc"}).hash());
  EXPECT_EQ(to_hex(Vocabulary().hash()).size(), 64u);
}

}  // namespace
}  // namespace ease
