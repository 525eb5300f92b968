#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("octa_cli_test_" + name);
  fs::remove_all(p);
  return p;
}

int run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "\"" OCTA_CLI_PATH "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

nlohmann::json load(const fs::path& p) { return nlohmann::json::parse(slurp(p)); }

std::string dir_flag(const fs::path& p) { return "--output-dir \"" + p.string() + "\" "; }

}  // namespace

TEST(Cli, VerifySuitesPass) {
  const auto out = scratch("verify");
  EXPECT_EQ(run(dir_flag(out) + "verify --suite tz --m 2 --kmax 5 --trials 3"), 0);
  EXPECT_EQ(run(dir_flag(out) + "verify --suite all --kmax 4 --trials 2"), 0);
  const auto summary = load(out / "verify_summary.json");
  EXPECT_TRUE(summary["passed"].get<bool>());
  EXPECT_EQ(summary["suites"].size(), 4u);
  const auto manifest = load(out / "verify.manifest.json");
  EXPECT_EQ(manifest["command"], "verify");
  EXPECT_EQ(manifest["inputs"]["kmax"], 4);
  EXPECT_EQ(manifest["outputs"].size(), 5u);
}

TEST(Cli, ExitCodes) {
  const auto out = scratch("codes");
  EXPECT_EQ(run(dir_flag(out) + "verify --suite tz --kmax 9"), 2);
  EXPECT_EQ(run(dir_flag(out) + "verify --suite relamu --lambda 0.5,1/2"), 2);
  EXPECT_EQ(run(dir_flag(out) + "verify --suite relamu --lambda 1/3,2/3 --mu 1/2"), 0);
  EXPECT_EQ(run(dir_flag(out) + "verify --suite relamu --lambda 1/3,1/3"), 1);
  EXPECT_EQ(run(dir_flag(out) + "verify --suite nope"), 2);
  EXPECT_EQ(run(dir_flag(out) + "density --family two_by_two --sigma 1/2"), 2);
  EXPECT_EQ(run(dir_flag(out) + "density --family m_toroidal --m 2 --lambda 1/3,1/3 --mu 1/2,1/2"), 2);
  EXPECT_EQ(run(dir_flag(out) + "arctic --golden nope"), 2);
  EXPECT_EQ(run(dir_flag(out) + "arctic --golden fortress --alpha 0.5"), 2);
  EXPECT_EQ(run("--no-such-flag"), 2);
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("--help"), 0);
}

TEST(Cli, DensityWritesProfiles) {
  const auto out = scratch("density");
  ASSERT_EQ(run(dir_flag(out) + "density --family uniform --k 21 --scale times_k"), 0);
  for (const char* ext : {".csv", ".pgm", ".json"}) EXPECT_TRUE(fs::exists(out / (std::string("density_uniform_k21") + ext)));
  const auto meta = load(out / "density_uniform_k21.json");
  EXPECT_EQ(meta["k"], 21);
  EXPECT_NEAR(meta["layer_sum"].get<double>(), 21.0, 1e-9);
  const std::string pgm = slurp(out / "density_uniform_k21.pgm");
  EXPECT_EQ(pgm.substr(0, 2), "P5");

  ASSERT_EQ(run(dir_flag(out) + "density --family two_by_two --a 1 --b 2 --c 1 --d 1 --k 7 --mode exact --pgm p2"), 0);
  EXPECT_EQ(slurp(out / "density_two_by_two_k7.pgm").substr(0, 2), "P2");
  ASSERT_EQ(run(dir_flag(out) + "density --family m_toroidal --m 3 --a 1,2,3 --k 5"), 0);
  EXPECT_TRUE(fs::exists(out / "density_m_toroidal_k5.csv"));
}

TEST(Cli, ArcticGoldensMatchComputation) {
  const auto out = scratch("arctic");
  ASSERT_EQ(run(dir_flag(out) + "arctic --golden arctic_circle --compare computed --resolution 128"), 0);
  auto cmp = load(out / "comparison.json");
  EXPECT_EQ(cmp["status"], "unit-equivalent");
  EXPECT_NE(slurp(out / "curve.svg").find("<polyline"), std::string::npos);

  ASSERT_EQ(run(dir_flag(out) + "arctic --golden fortress --alpha 1/3 --compare computed --resolution 128"), 0);
  EXPECT_EQ(load(out / "comparison.json")["status"], "unit-equivalent");

  ASSERT_EQ(run(dir_flag(out) + "arctic --family two_by_two --sigma 1/2 --tau 1/2 --compare arctic_circle"), 0);
  EXPECT_EQ(load(out / "comparison.json")["status"], "unit-equivalent");

  ASSERT_EQ(run(dir_flag(out) + "arctic --family two_by_two --sigma 1/3 --tau 1/3 --compare arctic_circle"), 1);
  EXPECT_EQ(load(out / "comparison.json")["status"], "not unit-equivalent");
}

TEST(Cli, SymbolicFortressSkipsRaster) {
  const auto out = scratch("symbolic");
  ASSERT_EQ(run(dir_flag(out) + "arctic --golden fortress"), 0);
  EXPECT_TRUE(fs::exists(out / "curve_golden.json"));
  EXPECT_FALSE(fs::exists(out / "curve.svg"));
}

TEST(Cli, OutputDirFromEnvironment) {
  const auto out = scratch("env");
  ASSERT_EQ(run("arctic --golden arctic_circle --resolution 64", "OUTPUT_DIR=\"" + out.string() + "\""), 0);
  EXPECT_TRUE(fs::exists(out / "arctic.manifest.json"));
  const auto flag = scratch("env_flag");
  ASSERT_EQ(run(dir_flag(flag) + "arctic --golden arctic_circle --resolution 64", "OUTPUT_DIR=\"" + out.string() + "_x\""), 0);
  EXPECT_TRUE(fs::exists(flag / "arctic.manifest.json"));
  EXPECT_FALSE(fs::exists(out.string() + "_x"));
}

TEST(Cli, RerunsAreByteIdentical) {
  const auto a = scratch("rerun_a"), b = scratch("rerun_b");
  for (const auto& d : {a, b}) {
    ASSERT_EQ(run(dir_flag(d) + "--seed 11 verify --suite all --kmax 4 --trials 2"), 0);
    ASSERT_EQ(run(dir_flag(d) + "density --family two_by_two --a 2 --b 1 --c 3 --d 1 --k 8,9"), 0);
    ASSERT_EQ(run(dir_flag(d) + "arctic --golden fortress --alpha 1/2 --compare computed --resolution 96"), 0);
  }
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(a)) {
    ++files;
    const auto other = b / e.path().filename();
    ASSERT_TRUE(fs::exists(other)) << other;
    EXPECT_EQ(slurp(e.path()), slurp(other)) << e.path().filename();
  }
  EXPECT_GT(files, 10u);
  const auto manifest = load(a / "arctic.manifest.json");
  for (const auto& f : manifest["outputs"]) EXPECT_EQ(f["fnv1a64"].get<std::string>().size(), 16u);
}

TEST(Cli, SeedChangesVerifyInputs) {
  const auto a = scratch("seed_a"), b = scratch("seed_b");
  ASSERT_EQ(run(dir_flag(a) + "verify --suite tz --kmax 3 --trials 2 --seed 1"), 0);
  ASSERT_EQ(run(dir_flag(b) + "verify --suite tz --kmax 3 --trials 2 --seed 2"), 0);
  EXPECT_NE(slurp(a / "verify_tz.json"), slurp(b / "verify_tz.json"));
}
