#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "fuzzyspec/arcs.hpp"
#include "fuzzyspec/cli.hpp"
#include "fuzzyspec/errors.hpp"
#include "fuzzyspec/io.hpp"
#include "fuzzyspec/spectrum.hpp"

using namespace fuzzyspec;
namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("fuzzyspec_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }

  int run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    out_ = out.str();
    err_ = err.str();
    return code;
  }

  fs::path dir_;
  std::string out_, err_;
};

const char* kHalf = R"({"kind": "arcs", "arcs": [[0, 3.141592653589793]]})";
const char* kTrapezoid = R"({"kind": "preset", "name": "trapezoid"})";
const char* kThreeArcs = R"({"kind": "arcs", "arcs": [[0, 1], [2, 2.5], [4, 5.5]]})";

}  // namespace

TEST(Io, SpectrumRoundTripIsExact) {
  const HermitianSpectrum c = fourier_coefficients(MembershipFunction::preset("trapezoid"), 12);
  std::stringstream ss;
  io::write_spectrum(ss, c);
  const HermitianSpectrum back = io::read_spectrum(ss);
  ASSERT_EQ(back.coeffs.size(), c.coeffs.size());
  for (std::size_t k = 0; k < c.coeffs.size(); ++k) EXPECT_EQ(back.coeffs[k], c.coeffs[k]);
}

TEST(Io, NonlinearRoundTripIsExact) {
  const NonlinearSpectrum ns = c_to_s(fourier_coefficients(MembershipFunction::preset("trapezoid"), 6), 6);
  std::stringstream ss;
  io::write_nonlinear(ss, ns);
  EXPECT_TRUE(io::is_nonlinear_file(ss.str()));
  const NonlinearSpectrum back = io::read_nonlinear(ss);
  EXPECT_EQ(back.c0, ns.c0);
  for (std::size_t k = 0; k < ns.s.size(); ++k) EXPECT_EQ(back.s[k], ns.s[k]);
}

TEST(Io, MembershipErrorsNameTheField) {
  try {
    io::membership_from_json(R"({"kind": "piecewise_linear", "nodes": [[0, 0.1], [1, 0.2], [2, "x"]]})");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("nodes[2]"), std::string::npos) << e.what();
  }
  EXPECT_THROW(io::membership_from_json(R"({"kind": "blob"})"), ValidationError);
  EXPECT_THROW(io::membership_from_json("{"), ValidationError);
}

TEST(Io, MembershipJsonRoundTrip) {
  const MembershipFunction f =
      io::membership_from_json(R"({"kind": "piecewise_linear", "nodes": [[0, 0.2], [1, 0.9], [2.5, 0.6], [4, 0.1]]})");
  const MembershipFunction g = io::membership_from_json(io::membership_to_json(f));
  for (double t : {0.0, 0.5, 3.0, 5.0, 6.2}) EXPECT_EQ(f(t), g(t));
}

TEST(Io, ArcsAreCanonicalized) {
  const io::LoadedArcs a = io::arcs_from_json(R"({"arcs": [[1, 2], [3, 4]]})");
  EXPECT_TRUE(a.arcs.is_canonical());
  EXPECT_NEAR(a.rotation, -1.0, 1e-15);
  EXPECT_NEAR(a.arcs[1].xi, 2.0, 1e-15);
}

TEST_F(CliTest, SpectrumOfHalfCircle) {
  ASSERT_EQ(run({"spectrum", "--input", file("half.json", kHalf), "--max-k", "3"}), cli::kExitOk) << err_;
  std::istringstream in(out_);
  const HermitianSpectrum c = io::read_spectrum(in);
  EXPECT_NEAR(c.c0(), 0.5, 1e-15);
  EXPECT_NEAR(std::abs(c.coeffs[1] - cplx(0.0, 1.0 / kPi)), 0.0, 1e-15);
}

TEST_F(CliTest, PipelineIsComposableAndDeterministic) {
  const std::string in = file("three.json", kThreeArcs);
  ASSERT_EQ(run({"spectrum", "--input", in, "--max-k", "8"}), 0);
  const std::string spectrum = out_;
  ASSERT_EQ(run({"spectrum", "--input", in, "--max-k", "8"}), 0);
  EXPECT_EQ(out_, spectrum);
  ASSERT_EQ(run({"nonlinear", "--coeffs", file("c.csv", spectrum)}), 0) << err_;
  const std::string s_file = out_;
  ASSERT_EQ(run({"nonlinear", "--input", in, "--max-k", "8"}), 0);
  EXPECT_EQ(out_, s_file);
  ASSERT_EQ(run({"classify", "--coeffs", file("s.csv", s_file), "--max-k", "8"}), 0) << err_;
  EXPECT_NE(out_.find("finite order 3"), std::string::npos) << out_;
  ASSERT_EQ(run({"classify", "--coeffs", file("c2.csv", spectrum), "--max-k", "8"}), 0) << err_;
  EXPECT_NE(out_.find("finite order 3"), std::string::npos) << out_;
}

TEST_F(CliTest, DefuzzStructured) {
  ASSERT_EQ(run({"defuzz", "--input", file("t.json", kTrapezoid), "--order", "4"}), 0) << err_;
  const nlohmann::json j = nlohmann::json::parse(out_);
  EXPECT_EQ(j["kind"], "arcs");
  EXPECT_EQ(j["arcs"].size(), 4u);
  ASSERT_EQ(run({"defuzz", "--input", file("t.json", kTrapezoid), "--order", "2", "--lambda", "0.5",
                 "--format", "tabular"}),
            0);
  EXPECT_NE(out_.find("xi,eta"), std::string::npos);
}

TEST_F(CliTest, PlotData) {
  const fs::path plots = dir_ / "plots";
  ASSERT_EQ(run({"defuzz", "--input", file("t.json", kTrapezoid), "--order", "3", "--emit-plot-data", plots.string()}),
            0);
  EXPECT_TRUE(fs::exists(plots / "membership.csv"));
  EXPECT_TRUE(fs::exists(plots / "crisp_n3.csv"));
  EXPECT_TRUE(fs::exists(plots / "residuals.csv"));
}

TEST_F(CliTest, SweepAndVerify) {
  const std::string in = file("three.json", kThreeArcs);
  ASSERT_EQ(run({"sweep", "--input", in, "--order", "4", "--format", "tabular"}), 0) << err_;
  EXPECT_NE(out_.find("4,ok"), std::string::npos) << out_;
  ASSERT_EQ(run({"verify", "--input", in, "--arcs", file("a.json", R"({"arcs": [[0, 1], [2, 2.5], [4, 5.5]]})"),
                 "--format", "structured"}),
            0);
  EXPECT_TRUE(nlohmann::json::parse(out_)["pass"].get<bool>());
  ASSERT_EQ(run({"verify", "--input", in, "--arcs", file("b.json", R"({"arcs": [[0, 1.2], [2, 2.5], [4, 5.5]]})"),
                 "--format", "structured"}),
            0);
  EXPECT_FALSE(nlohmann::json::parse(out_)["pass"].get<bool>());
}

TEST_F(CliTest, PeriodizeAndPoisson) {
  ASSERT_EQ(run({"periodize", "--sigma", "0.5", "--grid", "64"}), 0) << err_;
  const MembershipFunction f = io::membership_from_json(out_);
  EXPECT_EQ(f.sample_values().size(), 64u);
  EXPECT_NEAR(f.sample_values()[0], 1.0, 1e-9);
  ASSERT_EQ(run({"poisson-check", "--sigma", "0.5", "--max-k", "4"}), 0) << err_;
  EXPECT_EQ(run({"periodize", "--sigma", "3"}), cli::kExitValidation);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({"frobnicate"}), cli::kExitUsage);
  EXPECT_EQ(run({"spectrum"}), cli::kExitUsage);
  EXPECT_EQ(run({"spectrum", "--input", (dir_ / "missing.json").string()}), cli::kExitValidation);
  EXPECT_EQ(run({"spectrum", "--input", file("bad.json", R"({"kind": "preset", "name": "nope"})")}),
            cli::kExitValidation);
  EXPECT_EQ(run({"classify", "--coeffs", file("neg.csv", "# c0: 0.5\nk,re,im\n0,1,0\n1,2,0\n")}), cli::kExitValidation);
  EXPECT_EQ(run({"spectrum", "--help"}), cli::kExitOk);
}

TEST_F(CliTest, NumericFailureExitCode) {
  // A one-panel Simpson budget cannot reach the tolerance.
  const std::string in = file("rc.json", R"({"kind": "preset", "name": "raised-cosine"})");
  EXPECT_EQ(run({"spectrum", "--input", in, "--tol", "1e-300"}), cli::kExitNumeric) << err_;
}

TEST_F(CliTest, ToleranceFromEnvironment) {
  const std::string in = file("rc.json", R"({"kind": "preset", "name": "raised-cosine"})");
  ::setenv(cli::kToleranceEnv, "1e-300", 1);
  const int code = run({"spectrum", "--input", in});
  ::unsetenv(cli::kToleranceEnv);
  EXPECT_EQ(code, cli::kExitNumeric);
  EXPECT_EQ(run({"spectrum", "--input", in}), cli::kExitOk);
}

TEST_F(CliTest, Binary) {
  const std::string in = file("half.json", kHalf);
  const std::string out = (dir_ / "c.csv").string();
  const std::string cmd = std::string(FUZZYSPEC_CLI_PATH) + " spectrum --input " + in + " --output " + out;
  EXPECT_EQ(std::system(cmd.c_str()), 0);
  std::ifstream f(out);
  EXPECT_EQ(io::read_spectrum(f).c0(), 0.5);
  const std::string bad = std::string(FUZZYSPEC_CLI_PATH) + " nosuch 2>/dev/null";
  const int status = std::system(bad.c_str());
  EXPECT_EQ(WEXITSTATUS(status), cli::kExitUsage);
}
