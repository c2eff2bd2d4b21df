#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"

using Json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

// Spawn the CLI, capture stdout (stderr goes to /dev/null unless merged).
RunResult run(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string(CYL_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path schema_dir() { return fs::path(__FILE__).parent_path().parent_path() / "schemas"; }

Json load_schema(const std::string& name) {
    std::ifstream is(schema_dir() / name);
    REQUIRE(is.good());
    return Json::parse(is);
}

// Minimal structural validator: type / required / properties / items / enum.
// Covers exactly the vocabulary the shipped schemas use.
bool validates(const Json& value, const Json& schema, std::string& why) {
    if (schema.contains("enum")) {
        for (const auto& v : schema["enum"])
            if (v == value) return true;
        why = "value not in enum: " + value.dump();
        return false;
    }
    if (schema.contains("type")) {
        auto matches = [&](const std::string& t) {
            if (t == "object") return value.is_object();
            if (t == "array") return value.is_array();
            if (t == "string") return value.is_string();
            if (t == "number") return value.is_number();
            if (t == "integer") return value.is_number_integer();
            if (t == "boolean") return value.is_boolean();
            if (t == "null") return value.is_null();
            return false;
        };
        bool ok = false;
        if (schema["type"].is_string())
            ok = matches(schema["type"].get<std::string>());
        else
            for (const auto& t : schema["type"]) ok = ok || matches(t.get<std::string>());
        if (!ok) {
            why = "type mismatch at " + value.dump().substr(0, 80);
            return false;
        }
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>())) {
                    why = "missing required key " + key.get<std::string>();
                    return false;
                }
        if (schema.contains("properties"))
            for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
                if (value.contains(it.key()) && !validates(value[it.key()], it.value(), why)) return false;
    }
    if (value.is_array() && schema.contains("items"))
        for (const auto& v : value)
            if (!validates(v, schema["items"], why)) return false;
    return true;
}

void check_schema(const Json& value, const std::string& schema_file) {
    std::string why;
    bool ok = validates(value, load_schema(schema_file), why);
    CAPTURE(why);
    CHECK(ok);
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("cyl_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("analyze exit codes and report shape") {
    auto sgh = run("analyze \"Dt + 1i Dx + (0 + 1/2 i)\"");
    CHECK(sgh.code == 0);
    Json j = Json::parse(sgh.out);
    CHECK(j["verdict"] == "SGH");
    check_schema(j, "sgh_report.schema.json");
    CHECK(j["gap"]["approx"].get<double>() == doctest::Approx(0.5));

    auto not_sgh = run("analyze \"Dt + Dx\"");
    CHECK(not_sgh.code == 10);
    Json j2 = Json::parse(not_sgh.out);
    CHECK(j2["verdict"] == "NotSGH");
    CHECK(j2["witness"]["k"] == 0);
    check_schema(j2, "sgh_report.schema.json");

    auto bad = run("analyze \"Dt + $\"", true);
    CHECK(bad.code == 2);
    Json j3 = Json::parse(bad.out);
    check_schema(j3, "error.schema.json");
    CHECK(j3["error"]["type"] == "parse");
}

TEST_CASE("analyze --oracle cross-checks") {
    auto r = run("analyze \"p(Dx)=Dx^2; q(Dt)=Dt^2+1/2\" --oracle --box 20 20 2001");
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["oracle"]["consistent"] == true);
    CHECK(j["oracle"]["scan_min"].get<double>() == doctest::Approx(0.5).epsilon(1e-3));
}

TEST_CASE("analyze --rationalize handles decimals") {
    auto strict = run("analyze \"Dt + 0.5 Dx\"", true);
    CHECK(strict.code == 2);
    auto loose = run("analyze \"Dt + 0.5 Dx + (1+1i)\" --rationalize 1e-9");
    CHECK(loose.code == 0);
    Json j = Json::parse(loose.out);
    REQUIRE(j["warnings"].size() == 1);
    CHECK(j["warnings"][0].get<std::string>().find("1/2") != std::string::npos);
}

TEST_CASE("solve writes solution and report") {
    TempDir dir;
    auto out = (dir.path / "u.cylf").string();
    auto rep = (dir.path / "report.json").string();
    auto r = run("solve \"Dt + 1i Dx + (1 + 1/2 i)\" --manufacture gaussian_wave --grid 16,256,12 --out " + out +
                 " --report " + rep);
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    check_schema(j, "solve_report.schema.json");
    CHECK(j["recovery_error"].get<double>() <= 1e-8);
    CHECK(j["residual_inf"].get<double>() <= 1e-8);
    CHECK(fs::exists(out));
    CHECK(fs::exists(rep));
}

TEST_CASE("solve refuses non-SGH operators and writes nothing") {
    TempDir dir;
    auto out = (dir.path / "u.cylf").string();
    auto r = run("solve \"Dt + Dx\" --manufacture gaussian_wave --grid 8,64,8 --out " + out);
    CHECK(r.code == 10);
    Json j = Json::parse(r.out);
    CHECK(j["verdict"] == "NotSGH");
    CHECK(j["refused"] == true);
    CHECK(j["witness"]["k"] == 0);
    CHECK_FALSE(fs::exists(out)); // refusal happens before any write
    CHECK_FALSE(fs::exists(out + ".tmp"));
}

TEST_CASE("solve through the variable path reports the normal form") {
    auto r = run("solve \"Dt + (sin(t)+1) Dx + (1)\" --manufacture gaussian_wave --grid 32,256,12");
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["recovery_error"].get<double>() <= 1e-6);
    CHECK(j["sgh_report"]["method"] == "conjugated-to-constant");
    CHECK_FALSE(j["normal_form"].is_null());
}

TEST_CASE("transform file pipeline with kind checking") {
    TempDir dir;
    auto u = (dir.path / "u.cylf").string();
    auto spec = (dir.path / "spec.cylf").string();
    auto back = (dir.path / "back.cylf").string();

    // produce a field via solve
    run("solve \"Dt + 2 Dx + (1+1i)\" --manufacture gaussian_wave --grid 8,128,8 --out " + u);
    REQUIRE(fs::exists(u));

    auto fwd = run("transform --in " + u + " --which mixed --direction forward --out " + spec);
    CHECK(fwd.code == 0);
    check_schema(Json::parse(fwd.out), "transform_report.schema.json");

    auto inv = run("transform --in " + spec + " --which mixed --direction inverse --out " + back);
    CHECK(inv.code == 0);

    // kind mismatch: inverse-torus on a mixed spectrum
    auto bad = run("transform --in " + spec + " --which torus --direction inverse --out " + back, true);
    CHECK(bad.code == 2);
    Json j = Json::parse(bad.out);
    CHECK(j["error"]["type"] == "format");
    check_schema(j, "error.schema.json");
}

TEST_CASE("transform --roundtrip reports the inverse error") {
    auto r = run("transform --which mixed --roundtrip --grid 16,64,4 --seed 9");
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    check_schema(j, "transform_report.schema.json");
    CHECK(j["roundtrip_max_abs_diff"].get<double>() <= 1e-12);
}

TEST_CASE("diagnose emits certificates, seminorms and CSV") {
    TempDir dir;
    auto r = run("diagnose --builtin gaussian_wave --grid 8,256,8 --nmax 2 --betamax 1 --csv-dir " +
                 dir.path.string());
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    check_schema(j, "diagnose_report.schema.json");
    CHECK(j["certificates"].size() == 3 * 3 * 2); // (N=0..2) x (beta=0..1) x 3 types
    for (const auto& c : j["certificates"]) check_schema(c, "certificate.schema.json");
    CHECK(j["seminorms"]["p0"].get<double>() == doctest::Approx(1.0));
    CHECK(fs::exists(dir.path / "certificates.csv"));

    auto zero_grid = run("diagnose --builtin gaussian_wave --grid 7,64,4", true);
    CHECK(zero_grid.code == 2); // odd n_t rejected
}

TEST_CASE("diagnose --refine reports certificate stability") {
    auto r = run("diagnose --builtin gaussian_wave --grid 8,256,8 --nmax 2 --betamax 0 --refine");
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    REQUIRE(j.contains("refine"));
    // mixed/torus certificates of a Schwartz function are grid-stable; the
    // line certificate table includes growing entries only for non-Schwartz
    // inputs, so everything here stays within a tight band
    CHECK(j["refine"]["max_rel_change"].get<double>() <= 0.10);
    CHECK(j["refine"]["p0_diverging"] == false);
}

TEST_CASE("diagnose flags the tan-bump p0 divergence") {
    auto r = run("diagnose --builtin tanbump --grid 16,512,48 --nmax 1 --betamax 0 --refine");
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    REQUIRE(j.contains("refine"));
    CHECK(j["refine"]["p0_diverging"] == true);
    auto ladder = j["refine"]["p0_ladder"];
    REQUIRE(ladder.size() == 3);
    CHECK(ladder[0].get<double>() < ladder[1].get<double>());
    CHECK(ladder[1].get<double>() < ladder[2].get<double>());
}

TEST_CASE("demo runs the gallery") {
    auto r = run("demo");
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.is_array());
    CHECK(j.size() >= 10);
    int sgh = 0, notsgh = 0;
    for (const auto& e : j) {
        if (!e.contains("verdict")) continue;
        (e["verdict"] == "SGH" ? sgh : notsgh)++;
    }
    CHECK(sgh >= 4);
    CHECK(notsgh >= 3);
}
