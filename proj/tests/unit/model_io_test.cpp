#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "ease/error.hpp"
#include "ease/gram.hpp"
#include "ease/model_io.hpp"
#include "ease/solver.hpp"
#include "test_support.hpp"

namespace ease {
namespace {

namespace fs = std::filesystem;

class ModelIo : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("ease_model_io_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    model_ = solve(build_gram(testing::from_dense(oracle::random_binary(30, 6, 0.4, 3)), GramMode::centered), 2.0);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
  WeightModel model_;
};

TEST_F(ModelIo, RoundTripIsBitExact) {
  const auto path = dir_ / "m.ease";
  write_model(model_, path);
  const auto back = read_model(path);
  EXPECT_EQ(back.weights, model_.weights);
  EXPECT_EQ(back.lambda, model_.lambda);
  EXPECT_EQ(back.gram_mode, GramMode::centered);
  EXPECT_EQ(back.variant, Variant::full);
  EXPECT_EQ(back.items, model_.items);
  EXPECT_EQ(back.column_means, model_.column_means);
  EXPECT_EQ(back.column_stds, model_.column_stds);
}

TEST_F(ModelIo, ClampedVariantSurvives) {
  const auto path = dir_ / "c.ease";
  write_model(clamp_nonneg(model_), path);
  EXPECT_EQ(read_model(path).variant, Variant::clamped_nonneg);
}

TEST_F(ModelIo, RejectsBadMagic) {
  const auto path = dir_ / "m.ease";
  write_model(model_, path);
  {
    std::fstream f(path, std::ios::binary | std::ios::in | std::ios::out);
    f.write("XXXX", 4);
  }
  EXPECT_THROW(read_model(path), FormatError);
}

TEST_F(ModelIo, RejectsTruncatedPayload) {
  const auto path = dir_ / "m.ease";
  write_model(model_, path);
  fs::resize_file(path, fs::file_size(path) - 8);
  EXPECT_THROW(read_model(path), FormatError);
}

TEST_F(ModelIo, RejectsTrailingBytes) {
  const auto path = dir_ / "m.ease";
  write_model(model_, path);
  std::ofstream(path, std::ios::binary | std::ios::app).put('\0');
  EXPECT_THROW(read_model(path), FormatError);
}

TEST_F(ModelIo, RejectsSidecarFromAnotherVocabulary) {
  const auto a = dir_ / "a.ease";
  const auto b = dir_ / "b.ease";
  write_model(model_, a);
  auto other = model_;
  std::vector<std::string> ids = other.items.ids();
  ids[0] = "renamed";
  other.items = Vocabulary(ids);
  write_model(other, b);
  fs::copy_file(fs::path(b.string() + ".vocab.json"), fs::path(a.string() + ".vocab.json"),
                fs::copy_options::overwrite_existing);
  EXPECT_THROW(read_model(a), VocabMismatchError);
}

TEST_F(ModelIo, MissingFileIsAnError) { EXPECT_THROW(read_model(dir_ / "nope.ease"), Error); }

}  // namespace
}  // namespace ease
