#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <set>

#include "ease/split.hpp"
#include "ease/synthetic.hpp"
#include "test_support.hpp"

namespace ease {
namespace {

// `users` users, user u has items 0..items_per_user-1.
InteractionMatrix uniform_matrix(std::size_t users, std::size_t items_per_user) {
  oracle::Matrix x = oracle::zeros(users, items_per_user);
  for (auto& row : x) std::fill(row.begin(), row.end(), 1.0);
  return testing::from_dense(x);
}

InteractionMatrix random_matrix(std::uint64_t seed) {
  SyntheticConfig cfg;
  cfg.n_users = 200;
  cfg.n_items = 50;
  cfg.n_clusters = 5;
  cfg.min_activity = 1;
  cfg.max_activity = 20;
  cfg.seed = seed;
  return make_synthetic(cfg);
}

std::set<ItemIndex> original_items(const InteractionMatrix& x, const std::string& user) {
  const auto row = x.row(*x.user_vocab().find(user));
  return {row.items.begin(), row.items.end()};
}

TEST(SplitStrong, SizesFollowRoundingRule) {
  const auto x = uniform_matrix(10, 10);
  const auto s = split_strong(x, 2, 2, 0.8, 7);
  EXPECT_EQ(s.train.n_users(), 6u);
  EXPECT_EQ(s.validation.size(), 2u);
  EXPECT_EQ(s.test.size(), 2u);
  for (const auto* set : {&s.validation, &s.test}) {
    for (const auto& u : *set) {
      EXPECT_EQ(u.fold_in.items.size(), 8u);
      EXPECT_EQ(u.held_out.size(), 2u);
    }
  }
  EXPECT_EQ(s.train.item_vocab(), x.item_vocab());
}

TEST(SplitStrong, HalfOfTwoItemsIsOneAndOne) {
  const auto s = split_strong(uniform_matrix(5, 2), 1, 1, 0.5, 3);
  for (const auto& u : s.test) {
    EXPECT_EQ(u.fold_in.items.size(), 1u);
    EXPECT_EQ(u.held_out.size(), 1u);
  }
}

TEST(SplitStrong, SkipsUsersWithoutHeldOutItems) {
  // One item per user: fold-in takes it all.
  const auto s = split_strong(uniform_matrix(6, 1), 2, 1, 0.5, 1);
  EXPECT_TRUE(s.validation.empty());
  EXPECT_TRUE(s.test.empty());
  EXPECT_EQ(s.skipped.size(), 3u);
}

TEST(SplitStrong, DeterministicPerSeed) {
  const auto x = random_matrix(4);
  const auto a = split_strong(x, 20, 20, 0.8, 11);
  const auto b = split_strong(x, 20, 20, 0.8, 11);
  const auto c = split_strong(x, 20, 20, 0.8, 12);
  EXPECT_EQ(a.train, b.train);
  ASSERT_EQ(a.test.size(), b.test.size());
  for (std::size_t i = 0; i < a.test.size(); ++i) {
    EXPECT_EQ(a.test[i].fold_in.user, b.test[i].fold_in.user);
    EXPECT_EQ(a.test[i].fold_in.items, b.test[i].fold_in.items);
    EXPECT_EQ(a.test[i].held_out, b.test[i].held_out);
  }
  EXPECT_NE(a.train, c.train);
}

TEST(SplitStrong, PropertyUsersDisjointAndPartitionsExact) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto x = random_matrix(seed);
    const auto s = split_strong(x, 30, 30, 0.7, seed);
    std::set<std::string> train(s.train.user_vocab().ids().begin(), s.train.user_vocab().ids().end());
    std::set<std::string> eval;
    for (const auto* set : {&s.validation, &s.test}) {
      for (const auto& u : *set) {
        EXPECT_FALSE(train.count(u.fold_in.user));
        EXPECT_TRUE(eval.insert(u.fold_in.user).second);
        EXPECT_FALSE(u.held_out.empty());
        std::set<ItemIndex> all(u.fold_in.items.begin(), u.fold_in.items.end());
        for (auto i : u.held_out) EXPECT_TRUE(all.insert(i).second) << "fold-in and held-out overlap";
        EXPECT_EQ(all, original_items(x, u.fold_in.user));
        const auto n = static_cast<double>(all.size());
        EXPECT_EQ(u.fold_in.items.size(), std::max<std::size_t>(1, std::lround(0.7 * n)));
      }
    }
    EXPECT_EQ(train.size() + eval.size() + s.skipped.size(), x.n_users());
  }
}

TEST(SplitStrong, RejectsBadArguments) {
  const auto x = uniform_matrix(10, 3);
  EXPECT_THROW(split_strong(x, 5, 5, 0.5, 1), std::invalid_argument);
  EXPECT_THROW(split_strong(x, 1, 1, 0.0, 1), std::invalid_argument);
  EXPECT_THROW(split_strong(x, 1, 1, 1.0, 1), std::invalid_argument);
}

TEST(SplitWeak, ThirtyPercentOfTenIsThree) {
  const auto s = split_weak(uniform_matrix(3, 10), 0.3, 5);
  ASSERT_EQ(s.test.size(), 3u);
  for (const auto& u : s.test) {
    EXPECT_EQ(u.fold_in.items.size(), 3u);
    EXPECT_EQ(u.held_out.size(), 7u);
  }
  EXPECT_EQ(s.train.nnz(), 9u);
}

TEST(SplitWeak, SingleItemUserStaysInTrainingOnly) {
  oracle::Matrix x = {{1, 1, 1, 1}, {0, 0, 1, 0}};
  const auto s = split_weak(testing::from_dense(x), 0.5, 2);
  ASSERT_EQ(s.test.size(), 1u);
  EXPECT_EQ(s.test[0].fold_in.items.size(), 2u);
  EXPECT_EQ(s.test[0].held_out.size(), 2u);
  ASSERT_EQ(s.skipped.size(), 1u);
  EXPECT_EQ(s.skipped[0], "u1");
  EXPECT_EQ(s.train.row(1).size(), 1u);
}

TEST(SplitWeak, PropertyPerUserPartition) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto x = random_matrix(seed + 100);
    const auto s = split_weak(x, 0.3, seed);
    for (const auto& u : s.test) {
      std::set<ItemIndex> all(u.fold_in.items.begin(), u.fold_in.items.end());
      for (auto i : u.held_out) EXPECT_TRUE(all.insert(i).second);
      EXPECT_EQ(all, original_items(x, u.fold_in.user));
      const auto train_row = s.train.row(*s.train.user_vocab().find(u.fold_in.user));
      EXPECT_TRUE(std::equal(train_row.items.begin(), train_row.items.end(), u.fold_in.items.begin(),
                             u.fold_in.items.end()));
    }
    EXPECT_EQ(s.train.n_users(), x.n_users());
  }
  EXPECT_THROW(split_weak(uniform_matrix(2, 2), 1.5, 1), std::invalid_argument);
}

TEST(SplitIo, RoundTripsThroughDirectory) {
  const auto x = random_matrix(9);
  const auto s = split_strong(x, 10, 15, 0.8, 3);
  const auto dir = std::filesystem::temp_directory_path() / "ease_split_io_test";
  std::filesystem::remove_all(dir);
  write_split(s, dir);
  const auto back = read_split(dir);
  EXPECT_EQ(back.mode, s.mode);
  EXPECT_EQ(back.seed, s.seed);
  EXPECT_EQ(back.train, s.train);
  ASSERT_EQ(back.test.size(), s.test.size());
  ASSERT_EQ(back.validation.size(), s.validation.size());
  for (std::size_t i = 0; i < s.test.size(); ++i) {
    EXPECT_EQ(back.test[i].fold_in.user, s.test[i].fold_in.user);
    EXPECT_EQ(back.test[i].fold_in.items, s.test[i].fold_in.items);
    EXPECT_EQ(back.test[i].fold_in.values, s.test[i].fold_in.values);
    EXPECT_EQ(back.test[i].held_out, s.test[i].held_out);
  }
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace ease
