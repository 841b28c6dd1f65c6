#include <sstream>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lstree/artifact.hpp"
#include "lstree/cli.hpp"

using namespace lstree;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const std::vector<std::string> kGoldenBuild{"build", "--seed-dataset", "gauss3", "--n", "300",
                                            "--seed", "4", "--k", "10", "--gamma", "30"};

}  // namespace

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(cli({}).code, exit_usage);
  EXPECT_EQ(cli({"frobnicate"}).code, exit_usage);
  EXPECT_EQ(cli({"build"}).code, exit_usage);
  EXPECT_EQ(cli({"build", "--input", "a.csv", "--seed-dataset", "gauss3"}).code, exit_usage);
  EXPECT_EQ(cli({"build", "--seed-dataset", "moons"}).code, exit_usage);
  EXPECT_EQ(cli({"print"}).code, exit_usage);
  const auto r = cli({"build", "--k"});
  EXPECT_EQ(r.code, exit_usage);
  EXPECT_NE(r.err.find("--gamma"), std::string::npos);  // help follows the error
}

TEST(Cli, DataErrorsExitTwo) {
  EXPECT_EQ(cli({"print", "--artifact", "/nonexistent/artifact.json"}).code, exit_data);
  fixtures::TempFile bad("0,1\n1,x\n");
  EXPECT_EQ(cli({"build", "--input", bad.str()}).code, exit_data);
  fixtures::TempFile tiny("0\n1\n2\n");
  const auto r = cli({"build", "--input", tiny.str(), "--k", "5"});
  EXPECT_EQ(r.code, exit_data);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, HelpExitsZero) {
  const auto r = cli({"--help"});
  EXPECT_EQ(r.code, exit_ok);
  EXPECT_NE(r.out.find("build"), std::string::npos);
}

TEST(Cli, BuildIsByteIdentical) {
  const auto a = cli(kGoldenBuild);
  const auto b = cli(kGoldenBuild);
  ASSERT_EQ(a.code, exit_ok) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(deserialize_artifact(a.out).n, 300u);
}

TEST(Cli, BuildPrintMatchesGolden) {
  fixtures::TempFile artifact("", ".json");
  auto args = kGoldenBuild;
  args.insert(args.end(), {"-o", artifact.str()});
  ASSERT_EQ(cli(args).code, exit_ok);
  const auto printed = cli({"print", "--artifact", artifact.str()});
  ASSERT_EQ(printed.code, exit_ok);
  EXPECT_EQ(printed.out, fixtures::read_file(LSTREE_GOLDEN_DIR "/gauss3_n300_seed4.txt"));
  EXPECT_EQ(printed.out.rfind("     alpha1  alpha2", 0), 0u);
}

TEST(Cli, LabelFirstK) {
  fixtures::TempFile artifact("", ".json");
  auto args = kGoldenBuild;
  args.insert(args.end(), {"-o", artifact.str()});
  ASSERT_EQ(cli(args).code, exit_ok);

  const auto r = cli({"label", "--artifact", artifact.str(), "--method", "first-k", "--k-clusters", "3"});
  ASSERT_EQ(r.code, exit_ok) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["n_clusters"], 3);
  EXPECT_EQ(doc["full_labels"].size(), 300u);
  EXPECT_EQ(doc["background_assigned"], false);

  EXPECT_EQ(cli({"label", "--artifact", artifact.str(), "--method", "first-k"}).code, exit_usage);
  EXPECT_EQ(cli({"label", "--artifact", artifact.str(), "--method", "first-k", "--k-clusters", "50"}).code,
            exit_data);
  EXPECT_EQ(cli({"label", "--artifact", artifact.str(), "--method", "upper-set"}).code, exit_usage);
}

TEST(Cli, LabelAssignsBackground) {
  fixtures::TempFile artifact("", ".json");
  auto args = kGoldenBuild;
  args.insert(args.end(), {"-o", artifact.str()});
  ASSERT_EQ(cli(args).code, exit_ok);
  const auto r = cli({"label", "--artifact", artifact.str(), "--assign-background", "--seed-dataset",
                      "gauss3", "--n", "300", "--seed", "4"});
  ASSERT_EQ(r.code, exit_ok) << r.err;
  const auto doc = json::parse(r.out);
  for (int label : doc["full_labels"].get<std::vector<int>>()) EXPECT_GE(label, 0);
  EXPECT_EQ(cli({"label", "--artifact", artifact.str(), "--assign-background", "--seed-dataset",
                 "gauss3", "--n", "301", "--seed", "4"})
                .code,
            exit_data);
}

TEST(Cli, LayoutAndCDBuild) {
  fixtures::TempFile points("0\n0.1\n0.2\n10\n10.1\n10.2\n");
  fixtures::TempFile artifact("", ".json");
  ASSERT_EQ(cli({"cd-build", "--input", points.str(), "--k", "2", "--alpha", "1", "-o", artifact.str()}).code,
            exit_ok);
  const auto printed = cli({"print", "--artifact", artifact.str()});
  EXPECT_NE(printed.out.find("children parent        r1        r2  size\n"), std::string::npos);
  const auto layout = cli({"layout", "--artifact", artifact.str()});
  ASSERT_EQ(layout.code, exit_ok);
  EXPECT_EQ(json::parse(layout.out)["scale"], "radius");
  EXPECT_EQ(cli({"layout", "--artifact", artifact.str(), "--scale", "kappa"}).code, exit_data);
  EXPECT_EQ(cli({"layout", "--artifact", artifact.str(), "--scale", "depth"}).code, exit_usage);
  const auto labels = cli({"label", "--artifact", artifact.str()});
  EXPECT_EQ(json::parse(labels.out)["n_clusters"], 2);
}

TEST(Cli, DistanceInput) {
  fixtures::TempFile d("0,1,5\n1,0,4\n5,4,0\n");
  const auto r = cli({"build", "--distances", d.str(), "--k", "1"});
  ASSERT_EQ(r.code, exit_ok) << r.err;
  const auto artifact = deserialize_artifact(r.out);
  EXPECT_EQ(artifact.geometric().density_kind, DensityKind::pseudo);
  EXPECT_FALSE(artifact.points_2d.has_value());
}
