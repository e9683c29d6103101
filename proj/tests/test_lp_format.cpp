#include "modelcore/lp_format.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "golden_models.hpp"
#include "modelcore/errors.hpp"

namespace modelcore {
namespace {

using testing::kGoldenCases;
using testing::lp_text;
using testing::make_lp_model;
using testing::read_file;

const std::filesystem::path kGoldenDir = MODELCORE_GOLDEN_DIR;

// Set MODELCORE_UPDATE_GOLDENS=1 to rewrite the files after an intended
// format change.
TEST(LpGoldenTest, MatchesCommittedFiles) {
  const bool update = std::getenv("MODELCORE_UPDATE_GOLDENS") != nullptr;
  for (const auto& golden : kGoldenCases) {
    const std::filesystem::path path = kGoldenDir / golden.file;
    const std::string text = golden.render();
    if (update) {
      std::ofstream(path, std::ios::binary) << text;
    }
    ASSERT_TRUE(std::filesystem::exists(path)) << path;
    EXPECT_EQ(text, read_file(path)) << golden.file;
  }
}

TEST(LpGoldenTest, IntroRowIsWrittenWithNames) {
  const std::string text = read_file(kGoldenDir / "intro.lp");
  EXPECT_NE(text.find(": x + 2 y + 3 z <= 1\n"), std::string::npos) << text;
}

TEST(LpWriterTest, EmptyModel) {
  Model model = make_lp_model();
  EXPECT_EQ(lp_text(model),
            "\\ LP format\n"
            "Minimize\n"
            " obj: 0\n"
            "Subject To\n"
            "Bounds\n"
            "End\n");
}

TEST(LpWriterTest, SectionsForEveryKind) {
  Model model = make_lp_model();
  const VariableIndex p = model.add_variable(-kInfinity, kInfinity, VariableDomain::Integer);
  const VariableIndex q = model.add_variable(-3.0, 4.0);
  const VariableIndex r = model.add_variable(2.0, 2.0);
  model.add_variable(0.0, 1.0, VariableDomain::Binary);
  ScalarQuadraticFunction row;
  row.add_quadratic_term(p, q, -1.5);
  row.add_affine_term(r, -1.0);
  row.add_constant(0.25);
  model.add_quadratic_constraint(row, ConstraintSense::LessEqual, 3.0);
  const VariableIndex members[] = {p, q};
  const double weights[] = {1.0, 2.0};
  model.add_sos_constraint(members, weights, SosType::SOS2);
  ScalarQuadraticFunction objective;
  objective.add_affine_term(q, -1.0);
  objective.add_quadratic_term(p, p, 3.0);
  objective.add_quadratic_term(p, q, 1.0);
  objective.add_constant(-7.5);
  model.set_objective(objective, ObjectiveSense::Maximize);
  EXPECT_EQ(lp_text(model),
            "\\ LP format\n"
            "Maximize\n"
            " obj: - x1 + [ 6 x0 ^2 + 2 x0 * x1 ] / 2 - 7.5\n"
            "Subject To\n"
            " q0: - x2 + [ - 1.5 x0 * x1 ] <= 2.75\n"
            "Bounds\n"
            " x0 free\n"
            " -3 <= x1 <= 4\n"
            " x2 = 2\n"
            " 0 <= x3 <= 1\n"
            "General\n"
            " x0\n"
            "Binary\n"
            " x3\n"
            "SOS\n"
            " s0: S2:: x0:1 x1:2\n"
            "End\n");
}

TEST(LpWriterTest, RowWithoutTermsNamesAColumn) {
  Model model = make_lp_model();
  model.add_variable(0.0, kInfinity, VariableDomain::Continuous, "x");
  model.add_linear_constraint(ScalarAffineFunction(), ConstraintSense::GreaterEqual, -1.0, "trivial");
  EXPECT_NE(lp_text(model).find(" trivial: 0 x >= -1\n"), std::string::npos) << lp_text(model);
}

TEST(LpWriterTest, SosSetsFollowVariableDeletion) {
  Model model = make_lp_model();
  const VariableIndex a = model.add_variable(0.0, 1.0, VariableDomain::Continuous, "a");
  const VariableIndex b = model.add_variable(0.0, 1.0, VariableDomain::Continuous, "b");
  const VariableIndex c = model.add_variable(0.0, 1.0, VariableDomain::Continuous, "c");
  const VariableIndex members[] = {b, c};
  const double weights[] = {1.0, 2.0};
  model.add_sos_constraint(members, weights, SosType::SOS1);
  model.delete_variable(a);
  const auto& backend = dynamic_cast<const ReferenceBackend&>(model.backend());
  EXPECT_EQ(backend.sos_rows()[0].columns, (std::vector<DenseIndex>{0, 1}));
  EXPECT_NE(lp_text(model).find(" s0: S1:: b:1 c:2\n"), std::string::npos);
}

TEST(LpWriterTest, DeletePathMatchesRebuild) {
  Model deleted = make_lp_model();
  const VariableIndex x = deleted.add_variable(0.0, kInfinity, VariableDomain::Continuous, "x");
  const VariableIndex y = deleted.add_variable(0.0, kInfinity, VariableDomain::Continuous, "y");
  const VariableIndex z = deleted.add_variable(0.0, kInfinity, VariableDomain::Continuous, "z");
  ScalarAffineFunction row;
  row.add_term(x, 1.0);
  row.add_term(z, 3.0);
  deleted.add_linear_constraint(row, ConstraintSense::LessEqual, 1.0, "keep");
  deleted.delete_variable(y);

  Model rebuilt = make_lp_model();
  const VariableIndex x2 = rebuilt.add_variable(0.0, kInfinity, VariableDomain::Continuous, "x");
  const VariableIndex z2 = rebuilt.add_variable(0.0, kInfinity, VariableDomain::Continuous, "z");
  ScalarAffineFunction row2;
  row2.add_term(x2, 1.0);
  row2.add_term(z2, 3.0);
  rebuilt.add_linear_constraint(row2, ConstraintSense::LessEqual, 1.0, "keep");

  EXPECT_EQ(lp_text(deleted), lp_text(rebuilt));
}

TEST(LpWriterTest, DeterministicAcrossWrites) {
  Model first = make_lp_model();
  Model second = make_lp_model();
  gen_fac(first, {.n = 2});
  gen_fac(second, {.n = 2});
  EXPECT_EQ(lp_text(first), lp_text(first));
  EXPECT_EQ(lp_text(first), lp_text(second));
}

TEST(LpWriterTest, OptimizeWritesConfiguredPath) {
  const auto path = std::filesystem::temp_directory_path() / "modelcore_writer_test.lp";
  std::filesystem::remove(path);
  Model model(std::make_unique<LpWriterBackend>(path));
  testing::build_intro_model(model);
  model.set_time_limit(0.0);
  model.optimize();
  EXPECT_EQ(read_file(path), read_file(kGoldenDir / "intro.lp"));
  std::filesystem::remove(path);
}

TEST(LpWriterTest, UnwritablePathIsIoError) {
  LpWriterBackend backend;
  EXPECT_THROW(backend.write_lp("/nonexistent-dir/for/sure/model.lp"), IoError);
  LpWriterBackend without_path;
  EXPECT_NO_THROW(without_path.optimize());
}

TEST(FormatNumberTest, Examples) {
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(1.0), "1");
  EXPECT_EQ(format_number(-2.5), "-2.5");
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(kInfinity), "+inf");
  EXPECT_EQ(format_number(-kInfinity), "-inf");
}

TEST(FormatNumberTest, RoundTripsExactly) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> uniform(-1e6, 1e6);
  for (int i = 0; i < 100000; ++i) {
    const double value = i % 2 == 0 ? uniform(rng) : std::ldexp(uniform(rng), static_cast<int>(rng() % 400) - 200);
    const std::string text = format_number(value);
    ASSERT_EQ(std::strtod(text.c_str(), nullptr), value) << text;
  }
}

}  // namespace
}  // namespace modelcore
