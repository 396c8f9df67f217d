#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "roughlub/postprocess.hpp"
#include "roughlub/solver.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "roughlub");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    const int code = roughlub::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        lines.push_back(line);
    }
    return lines;
}

std::vector<double> csv_numbers(const std::string& line) {
    std::vector<double> v;
    std::istringstream in(line);
    for (std::string cell; std::getline(in, cell, ',');) {
        v.push_back(std::stod(cell));
    }
    return v;
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("roughlub_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path write_config(const std::string& name, const std::string& text) {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p;
    }

    fs::path dir_;
};

}  // namespace

TEST_F(CliTest, CoeffsPrintsTriple) {
    auto r = invoke({"coeffs", "--n", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "N=2 A=1.08697 B=0.587386\n");
    r = invoke({"coeffs", "--n", "0"});
    EXPECT_EQ(r.out, "N=0 A=1.00000 B=0.500000\n");
    r = invoke({"coeffs", "--n", "-1"});
    EXPECT_EQ(r.code, 2);
    EXPECT_FALSE(r.err.empty());
}

TEST_F(CliTest, SolveWritesPressureFieldsAndManifest) {
    const auto cfg = write_config("case.cfg", "grid.nx = 8\ngrid.ny = 6\n");
    const auto out = dir_ / "run";
    const auto r = invoke({"solve", "--config", cfg.string(), "--out", out.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto lines = lines_of(slurp(out / "pressure.csv"));
    ASSERT_EQ(lines.size(), 2u + 9u * 7u);
    EXPECT_EQ(lines[0], "# nx=8 ny=6");
    EXPECT_EQ(lines[1], "x,y,p");
    EXPECT_EQ(csv_numbers(lines[2]), (std::vector<double>{0.0, 0.0, 0.0}));
    EXPECT_EQ(csv_numbers(lines[3])[0], 0.125);  // x varies fastest

    const auto manifest = lines_of(slurp(out / "manifest.txt"));
    int listed = 0;
    for (const auto& line : manifest) {
        if (line.starts_with("output=")) {
            const fs::path f = out / line.substr(7);
            EXPECT_TRUE(fs::exists(f)) << f;
            EXPECT_GT(fs::file_size(f), 0u) << f;
            ++listed;
        }
    }
    EXPECT_EQ(listed, 2);
}

TEST_F(CliTest, SolvePresetWritesFields) {
    const auto out = dir_ / "fig3";
    const auto r = invoke({"solve", "--scenario", "fig3", "--nx", "16", "--ny", "16", "--out",
                           out.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(fs::exists(out / "pressure.csv"));
    const auto fields = lines_of(slurp(out / "fields.csv"));
    ASSERT_EQ(fields.size(), 1u + 16u * 16u);
    EXPECT_EQ(fields[0], "x,y,n_psi,a,b,h1");
    const auto last = csv_numbers(fields.back());
    EXPECT_EQ(last[2], 2.0);
    EXPECT_NEAR(last[3], 1.08696, 5e-5);
}

TEST_F(CliTest, InputErrorsExitWithTwo) {
    EXPECT_EQ(invoke({"solve", "--config", (dir_ / "missing.cfg").string(), "--out", dir_.string()}).code, 2);
    EXPECT_EQ(invoke({"solve", "--out", dir_.string()}).code, 2);
    EXPECT_EQ(invoke({"solve", "--scenario", "fig7"}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    const auto bad = write_config("bad.cfg", "grid.nx = 8\nmystery = 1\n");
    const auto r = invoke({"solve", "--config", bad.string(), "--out", dir_.string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST_F(CliTest, SolverFailureExitsWithOne) {
    const auto cfg = write_config("tight.cfg", "grid.nx = 32\ngrid.ny = 32\nsolver.max_iter = 1\n");
    EXPECT_EQ(invoke({"solve", "--config", cfg.string(), "--out", dir_.string()}).code, 1);
}

TEST_F(CliTest, SolveIsDeterministic) {
    ASSERT_EQ(invoke({"solve", "--scenario", "fig2", "--out", (dir_ / "a").string()}).code, 0);
    ASSERT_EQ(invoke({"solve", "--scenario", "fig2", "--out", (dir_ / "b").string()}).code, 0);
    EXPECT_EQ(slurp(dir_ / "a" / "pressure.csv"), slurp(dir_ / "b" / "pressure.csv"));
    EXPECT_EQ(slurp(dir_ / "a" / "fields.csv"), slurp(dir_ / "b" / "fields.csv"));
}

TEST_F(CliTest, VelocityProfileRows) {
    const auto cfg = write_config("v.cfg", "grid.nx = 16\ngrid.ny = 16\nvelocity.ubx = 0.8\n");
    const auto r = invoke({"velocity", "--config", cfg.string(), "--x", "0.3", "--y", "0.45",
                           "--nz", "16"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto lines = lines_of(r.out);
    ASSERT_EQ(lines.size(), 18u);
    EXPECT_EQ(lines[0], "Z,ux,uy");
    EXPECT_EQ(csv_numbers(lines[1]), (std::vector<double>{0.0, 0.8, 0.0}));
    EXPECT_EQ(csv_numbers(lines.back()), (std::vector<double>{1.0, 0.0, 0.0}));

    // Smooth case: classical Couette-Poiseuille profile with the solver's gradient.
    roughlub::ScenarioConfig c;
    c.nx = c.ny = 16;
    c.u_b = {0.8, 0.0};
    const auto run = roughlub::run_reynolds(c);
    const roughlub::Vec2 g = roughlub::gradient_at(run.solution, run.discretization.grid, 0.3, 0.45);
    const double h1 = roughlub::evaluate_gap(c.gap, 0.3, 0.45);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto row = csv_numbers(lines[k]);
        const double z = row[0];
        EXPECT_NEAR(row[1], h1 * h1 / 2 * (z * z - z) * g.x + (1 - z) * 0.8, 1e-12);
        EXPECT_NEAR(row[2], h1 * h1 / 2 * (z * z - z) * g.y, 1e-12);
    }
    EXPECT_EQ(invoke({"velocity", "--config", cfg.string(), "--x", "0", "--y", "0.5"}).code, 2);
    EXPECT_EQ(invoke({"velocity", "--config", cfg.string(), "--x", "0.5", "--y", "0.5", "--nz", "4"}).code, 2);
}

TEST_F(CliTest, CompareReportsNonlocalEffect) {
    const auto out = dir_ / "cmp";
    const auto r = invoke({"compare", "--scenario", "fig3", "--nx", "32", "--ny", "32", "--out", out.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    for (const char* f : {"pressure_smooth.csv", "pressure_rough.csv", "difference.csv", "metrics.txt",
                          "manifest.txt"}) {
        EXPECT_TRUE(fs::exists(out / f)) << f;
    }
    const auto metrics = lines_of(slurp(out / "metrics.txt"));
    ASSERT_EQ(metrics.size(), 3u);
    EXPECT_TRUE(metrics[0].starts_with("l2="));
    EXPECT_TRUE(metrics[1].starts_with("linf="));
    ASSERT_TRUE(metrics[2].starts_with("l2_outside_rough="));
    EXPECT_GT(std::stod(metrics[2].substr(17)), 0.0);
}

TEST_F(CliTest, CompareSmallStripStillMatters) {
    const auto r = invoke({"compare", "--scenario", "fig5", "--out", (dir_ / "c5").string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto metrics = lines_of(slurp(dir_ / "c5" / "metrics.txt"));
    EXPECT_GT(std::stod(metrics[0].substr(3)), 1e-3);
    EXPECT_GT(std::stod(metrics[2].substr(17)), 1e-3);
}

TEST_F(CliTest, CompareZeroAmplitudeAndMissingRoughness) {
    const auto flat = write_config("flat.cfg", "grid.nx=16\ngrid.ny=16\nrough.region.1 = 0,0,1,1,amp=0,wav=2\n");
    const auto r = invoke({"compare", "--config", flat.string(), "--out", (dir_ / "flat").string()});
    ASSERT_EQ(r.code, 0) << r.err;
    for (const auto& line : lines_of(slurp(dir_ / "flat" / "metrics.txt"))) {
        EXPECT_LE(std::stod(line.substr(line.find('=') + 1)), 1e-9) << line;
    }
    const auto smooth = write_config("smooth.cfg", "grid.nx=8\ngrid.ny=8\n");
    EXPECT_EQ(invoke({"compare", "--config", smooth.string(), "--out", dir_.string()}).code, 2);
}
