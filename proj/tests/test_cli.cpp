#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "ssp/ssp.hpp"

namespace {

struct Run {
    int code;
    std::string out;
};

const std::string data = SSP_DATA_DIR;

Run sspkit(const std::string& args) {
    std::string cmd = std::string(SSPKIT_PATH) + " " + args + " 2>/dev/null";
    Run r{-1, ""};
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    char buf[4096];
    for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) r.out.append(buf, n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

ssp::TransitionSystem load(const std::string& path) {
    std::ifstream in(path);
    return ssp::parse_ts(in);
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("sspkit_test_" + name)).string();
}

} // namespace

TEST_CASE("classify") {
    CHECK(sspkit("classify --type nop,inp").out == "§6 NP-complete\n");
    CHECK(sspkit("classify --type swap,out").out == "§10 polynomial\n");
    CHECK(sspkit("classify --type nop,res,used").out == "§4 polynomial\n");
    auto j = nlohmann::json::parse(sspkit("classify --type nop,inp --format json").out);
    CHECK(j["row"] == 6);
    CHECK(j["complexity"] == "NP-complete");
    CHECK(sspkit("classify --type nop,bogus").code > 2);
}

TEST_CASE("check-ssp exit codes and report") {
    CHECK(sspkit("check-ssp " + data + "/a2.ts --type nop,inp").code == 0);

    auto r = sspkit("check-ssp " + data + "/a1.ts --type nop,inp --format json");
    CHECK(r.code == 1);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["decision"] == "lacks_ssp");
    CHECK(j["witness_atom"] == nlohmann::json::array({"s0", "s1"}));
    CHECK(j["stats"].contains("nodes_expanded"));

    auto gen = temp_path("e1.ts");
    REQUIRE(sspkit("gen " + data + "/example1.cm -o " + gen).code == 0);
    CHECK(sspkit("check-ssp " + gen + " --type nop,inp --budget 1").code == 2);

    auto ok = sspkit("check-ssp " + data + "/a2.ts --type nop,inp --format json");
    auto rep = nlohmann::json::parse(ok.out);
    auto ts = load(data + "/a2.ts");
    for (const auto& reg : rep["regions"])
        CHECK(ssp::is_region(ts, ssp::BooleanType::parse("nop,inp"), ssp::region_from_json(ts, reg)));
}

TEST_CASE("JSON input mirrors the text format") {
    auto path = temp_path("a1.json");
    std::ofstream(path) << ssp::ts_to_json(load(data + "/a1.ts")).dump();
    CHECK(sspkit("check-ssp --json " + path + " --type nop,inp").code == 1);
}

TEST_CASE("input errors") {
    auto bad = temp_path("bad.ts");
    std::ofstream(bad) << "initial s0\ns0 a\n";
    CHECK(sspkit("check-ssp " + bad + " --type nop").code > 2);
    CHECK(sspkit("check-ssp " + data + "/a1.ts").code > 2);
    CHECK(sspkit("check-ssp /nonexistent.ts --type nop").code > 2);
    CHECK(sspkit("frobnicate").code > 2);
}

TEST_CASE("solve-atom") {
    auto r = sspkit("solve-atom " + data + "/a1.ts --type nop,set,swap,used --atom s0,s1 --format json");
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["region"]["sig"]["a"] == "swap");
    CHECK(sspkit("solve-atom " + data + "/a1.ts --type nop,inp --atom s0,s1").code == 1);
    CHECK(sspkit("solve-atom " + data + "/a1.ts --type nop,inp --atom s0,s1 --budget 0").code == 2);
    CHECK(sspkit("solve-atom " + data + "/a1.ts --type nop,inp --atom s0,zz").code > 2);
}

TEST_CASE("gen") {
    auto out = temp_path("gen.ts");
    auto r = sspkit("gen " + data + "/example1.cm -o " + out);
    CHECK(r.code == 0);
    CHECK(r.out.find("key atom: t_6_0,t_7_0") != std::string::npos);
    CHECK(load(out).num_states() == 45);

    r = sspkit("gen " + data + "/m4_unsat.cm -o " + out + " --format json");
    CHECK(nlohmann::json::parse(r.out)["states"] == 31);

    r = sspkit("gen --reduction nop-free " + data + "/example1.cm -o " + out + " --format json");
    auto meta = nlohmann::json::parse(r.out);
    CHECK(meta["key_atom"] == nlohmann::json::array({"g_0_2", "g_0_4"}));
    CHECK(meta["states"] == 1129);
    auto big = load(out);
    CHECK(ssp::parse_ts(ssp::serialize_ts(big)) == big);

    auto dot = sspkit("gen " + data + "/example1.cm --output-format dot");
    CHECK(dot.out.rfind("digraph ts {", 0) == 0);
}

TEST_CASE("transform") {
    auto r = sspkit("transform " + data + "/edge.ts --kind loop");
    CHECK(r.code == 0);
    CHECK(r.out == "initial s\ns bar_e s\ns e t\nt bar_e s\nt e t\n");
    CHECK(sspkit("transform " + data + "/edge.ts --kind backward").out == "initial s\ns e t\nt bar_e s\n");
    auto loop = temp_path("loop.ts");
    std::ofstream(loop) << "initial q\nq a q\n";
    CHECK(sspkit("transform " + loop + " --kind backward").code > 2);
}

TEST_CASE("witness") {
    auto out = temp_path("w.json");
    CHECK(sspkit("witness " + data + "/example1.cm --model X0,X4 -o " + out).code == 0);
    std::ifstream in(out);
    CHECK(nlohmann::json::parse(in).size() == 20);

    auto r = sspkit("witness --reduction nop-free " + data + "/example1.cm --model X0,X4 -o " + out +
                    " --format json");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["separative"] == true);
    CHECK(j["valid"] == j["regions"]);

    r = sspkit("witness --reduction nop-free --alpha-only " + data + "/example1.cm --model X0,X4 -o " + out +
               " --format json");
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["solves_key_atom"] == true);

    CHECK(sspkit("witness " + data + "/example1.cm --model X0,X1 -o " + out).code > 2);
}

TEST_CASE("oracle") {
    CHECK(sspkit("oracle " + data + "/example1.cm").out == "X0 X4\n");
    auto r = sspkit("oracle " + data + "/m4_unsat.cm");
    CHECK(r.out == "unsatisfiable\n");
    auto bad = temp_path("bad.cm");
    std::ofstream(bad) << "X0 X1 X2\n";
    CHECK(sspkit("oracle " + bad).code > 2);
}

TEST_CASE("verify") {
    auto r = sspkit("verify --suite classify");
    CHECK(r.code == 0);
    CHECK(r.out.find("256/256 types consistent") != std::string::npos);
    CHECK(sspkit("verify --suite core --scale small").code == 0);
    auto a = sspkit("verify --suite reductions --seed 7 --scale small");
    CHECK(a.code == 0);
    CHECK(sspkit("verify --suite nonsense").code > 2);
}
