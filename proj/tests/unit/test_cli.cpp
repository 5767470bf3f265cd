// Runs the ruledkit binary end to end and checks exit codes and outputs.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + std::string(RULEDKIT_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const char* name) { return std::string(RULEDKIT_DATA_DIR) + "/" + name; }

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch() {
    auto dir = fs::temp_directory_path() / ("ruledkit_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST(Cli, ValidateExitCodes) {
    auto ok = run("validate " + data("example2_net.json"));
    EXPECT_EQ(ok.code, 0);
    EXPECT_NE(ok.out.find("\"closed\":true"), std::string::npos);
    EXPECT_NE(ok.out.find("\"c1\":true"), std::string::npos);
    EXPECT_EQ(run("validate " + data("open_net.json")).code, 1);
    EXPECT_EQ(run("validate --net '[[0,1],[2'").code, 2);
    EXPECT_EQ(run("validate /nonexistent/file.json").code, 3);
}

TEST(Cli, InvariantsCsv) {
    auto dir = scratch();
    auto out = dir / "p.csv";
    ASSERT_EQ(run("invariants --curve " + data("example2_net.json") + " --field 'u-v,u+v' --samples 256 --out " +
                  out.string()).code,
              0);
    std::ifstream in(out);
    int lines = 0;
    for (std::string l; std::getline(in, l);) ++lines;
    EXPECT_EQ(lines, 257);
}

TEST(Cli, HelicoidDeltaConstantAndZeroField) {
    auto r = run("invariants --path helicoid --field '0.5*u, 0' --samples 8");
    ASSERT_EQ(r.code, 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        std::stringstream cells(line);
        std::string c;
        for (int i = 0; i < 6; ++i) std::getline(cells, c, ',');
        EXPECT_NEAR(std::stod(c), 0.5, 1e-9);
    }
    auto z = run("invariants --curve " + data("example2_net.json") + " --samples 4");
    EXPECT_NE(z.out.find(",0,0,developable"), std::string::npos);
}

TEST(Cli, Integrals) {
    auto r = run("integrals --curve " + data("example2_net.json") + " --field 'u-v,u+v'");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"pitch\":-0.58010476513"), std::string::npos);
    EXPECT_NE(run("integrals --curve " + data("example2_net.json")).out.find("\"pitch\":0"), std::string::npos);
    EXPECT_EQ(run("integrals --curve " + data("open_net.json")).code, 1);
    EXPECT_EQ(run("integrals --curve " + data("example2_net.json") + " --field 'u + * v'").code, 2);
    EXPECT_EQ(run("integrals --curve a.json --path great-circle").code, 2);
}

TEST(Cli, MeshAndDeterminism) {
    auto dir = scratch();
    const std::string base = "mesh --curve " + data("example2_net.json") + " --field 'u-v,u+v' --nt 16 --nw 2 ";
    ASSERT_EQ(run(base + "--w-range=-1:1 --out " + (dir / "a.obj").string()).code, 0);
    ASSERT_EQ(run(base + "--w-range=-1:1 --out " + (dir / "b.obj").string()).code, 0);
    EXPECT_EQ(slurp(dir / "a.obj"), slurp(dir / "b.obj"));
    EXPECT_EQ(run(base + "--w-range=1:-1").code, 2);
    EXPECT_EQ(run(base + "--w-range=abc").code, 2);
    EXPECT_EQ(run(base + "--format ply --out " + (dir / "c.ply").string()).code, 0);
    EXPECT_EQ(slurp(dir / "c.ply").rfind("ply\n", 0), 0u);
}

TEST(Cli, MalformedToleranceEnvironment) {
    EXPECT_EQ(run("validate " + data("example2_net.json"), "RULEDKIT_TOL=bogus=1").code, 2);
    EXPECT_EQ(run("validate " + data("example2_net.json"), "RULEDKIT_TOL=kappa_min=1e-6").code, 0);
}
