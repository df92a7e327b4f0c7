#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args, const std::string& env = {}) {
    const std::string cmd = env + (env.empty() ? "" : " ") + STEENCALC_CLI + std::string(" ") + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& f) { return std::string(STEENCALC_DATA_DIR) + "/" + f; }

std::string scratch(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("steencalc_cli_" + name);
    std::ofstream(path) << text;
    return path.string();
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, EvalTotalOnProjectivePlane) {
    const auto r = run("steenrod eval --variety " + data("p2.json") + " --class h --op total");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"result\":{\"h\":1,\"h^2\":1}}\n");
}

TEST(Cli, EvalSingleDegreeAndHomological) {
    auto r = run("steenrod eval --variety " + data("p2.json") + " --class h --op coh-k --k 1");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(parse(r)["result"], nlohmann::json({{"h^2", 1}}));
    // S^X = b(T)^{-1} S_X with b(T_P2) = (1+h)^3 = 1+h+h^2 mod 2
    r = run("steenrod eval --variety " + data("p2.json") + " --class 1 --op hom-total");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(parse(r)["result"], nlohmann::json({{"1", 1}, {"h", 1}}));
}

TEST(Cli, TorsorCheckOnExampleFiles) {
    auto r = run("torsor check --algebra " + data("kummer_f7_p3.json"));
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(parse(r)["result"]["torsor"].get<bool>());
    for (const auto& [k, v] : parse(r)["result"]["conditions"].items()) EXPECT_TRUE(v.get<bool>()) << k;
    r = run("torsor check --algebra " + data("cone_f5_p3.json"));
    EXPECT_EQ(r.code, 0);
    EXPECT_FALSE(parse(r)["result"]["torsor"].get<bool>());
}

TEST(Cli, TorsorDeform) {
    const auto r = run("torsor deform --algebra " + data("cone_f5_p3.json") + " --kmax 3");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(parse(r)["result"]["holds"].get<bool>());
    EXPECT_EQ(run("torsor deform --algebra " + data("cone_f5_p3.json") + " --kmax 0").code, 2);
}

TEST(Cli, KummerFactor) {
    // 2 is not a cube in F_7: t^3 - 2 is irreducible
    auto r = run("kummer factor --q 7 --p 3 --a 2");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(parse(r)["result"]["fiber"], nlohmann::json::parse(R"([{"degree":3,"count":1}])"));
    // 6 = 3^3: t^3 - 6 = (t - 3)(t - 5)(t - 6)
    r = run("kummer factor --q 7 --p 3 --a 6");
    EXPECT_EQ(parse(r)["result"]["fiber"], nlohmann::json::parse(R"([{"degree":1,"count":3}])"));
    EXPECT_EQ(run("kummer factor --q 7 --p 7 --a 2").code, 2);
    EXPECT_EQ(run("kummer factor --q 6 --p 3 --a 2").code, 2);
    EXPECT_EQ(run("kummer factor --q 7 --p 3 --a 0").code, 2);
}

TEST(Cli, KcomplexCheck) {
    const auto r = run("kcomplex check --q 7 --p 3 --a \"t+1\" --f \"t^2*(t-2)\"");
    EXPECT_EQ(r.code, 0);
    const auto j = parse(r)["result"];
    EXPECT_TRUE(j["anticommute"].get<bool>());
    EXPECT_EQ(j["divisor_f"], nlohmann::json({{"t", 2}, {"t+5", 1}}));
    // d_{t+1}{a, f} = f(-1) = 4 and d_{t-2}{a, f} = 1/a(2) = 5, neither a cube
    EXPECT_EQ(j["residues_af"], nlohmann::json({{"t+1", "4"}, {"t+5", "5"}}));
    EXPECT_EQ(run("kcomplex check --q 7 --p 3 --a \"1/(t-t)\" --f t").code, 2);
}

TEST(Cli, VerifyExitCodes) {
    EXPECT_EQ(run("steenrod verify --suite pthpower --seed 7").code, 0);
    // the literal twist law fails at p = 5
    EXPECT_EQ(run("steenrod verify --suite twist --seed 7").code, 1);
    EXPECT_EQ(run("steenrod verify --suite nope --seed 7").code, 2);
}

TEST(Cli, SeedEnvironmentOverridesFlag) {
    const auto a = parse(run("steenrod verify --suite fibers --seed 1", "STEENCALC_SEED=42"));
    const auto b = parse(run("steenrod verify --suite fibers --seed 42"));
    EXPECT_EQ(a["seed"], 42);
    auto a2 = a, b2 = b;
    a2.erase("wall_seconds");
    b2.erase("wall_seconds");
    EXPECT_EQ(a2, b2);
    EXPECT_EQ(run("steenrod verify --suite fibers", "STEENCALC_SEED=x").code, 2);
}

TEST(Cli, InputErrorsExitTwo) {
    const std::string p2 = data("p2.json");
    EXPECT_EQ(run("steenrod eval --variety " + p2 + " --class \"h +* 2\"").code, 2);
    EXPECT_EQ(run("steenrod eval --variety " + p2 + " --class k").code, 2);
    EXPECT_EQ(run("steenrod eval --variety " + p2 + " --class h --op coh-k").code, 2);
    EXPECT_EQ(run("steenrod eval --variety " + p2 + " --class h --op sideways").code, 2);
    EXPECT_EQ(run("steenrod eval --variety /nonexistent.json --class h").code, 2);
    EXPECT_EQ(run("steenrod eval --variety " + scratch("bad.json", "{ nope") + " --class h").code, 2);
    EXPECT_EQ(run("torsor check --algebra " + scratch("noalg.json", "{\"p\": 3}")).code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("steenrod eval --class h").code, 2);
}
