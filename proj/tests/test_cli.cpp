#include <doctest.h>

#include <fstream>
#include <sstream>
#include <vector>

#include "specfm/cli.hpp"
#include "specfm/json_io.hpp"

using namespace specfm;

namespace {

struct CliResult {
    int exit_code;
    std::string out, err;
};

CliResult run(std::vector<std::string> args) {
    args.insert(args.begin(), "specfm");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(int(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

const std::string kData = SPECFM_DATA_DIR;
const std::string kFamilyS = kData + "/family.json";
const std::string kBandCoverS = kData + "/cover_band.json";
const std::string kStringCoverS = kData + "/cover_string.json";
const char* kFamily = kFamilyS.c_str();
const char* kBandCover = kBandCoverS.c_str();
const char* kStringCover = kStringCoverS.c_str();

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("discriminant in both formats carries the same data") {
    const CliResult js = run({"discriminant", "--family", kFamily});
    REQUIRE(js.exit_code == 0);
    const Json j = Json::parse(js.out);
    CHECK(j["degree"] == 6);
    REQUIRE(j["rational_roots"].size() == 1);
    CHECK(j["rational_roots"][0]["t"] == "0");

    const CliResult tb = run({"discriminant", "--family", kFamily, "--format", "table"});
    REQUIRE(tb.exit_code == 0);
    CHECK(tb.out.find(j["discriminant"].get<std::string>()) != std::string::npos);
    CHECK(tb.out.find("t = 0") != std::string::npos);
}

TEST_CASE("analyze emits the S(0,-1) verdict for the second example") {
    const CliResult r = run({"analyze", "--family", kFamily, "--cover", kStringCover});
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["flatness"]["verdict"] == "flat");
    CHECK(j["flatness"]["ideal_quotient_certificate"]["t_regular"] == true);
    bool saw = false;
    for (const auto& fa : j["special_fibres"]) {
        if (fa["t"] == "0") {
            saw = true;
            CHECK(fa["fm"][0]["variant"] == "string_sheaf");
            CHECK(fa["fm"][0]["params"] == "S(0,-1)");
            CHECK(fa["fm"][0]["rank"] == 2);
            CHECK(fa["fm"][0]["locally_free"] == false);
            CHECK(fa["fm"][0]["indecomposable"] == true);
        }
    }
    CHECK(saw);
    CHECK(j["s_flat_fm_family"] == true);
}

TEST_CASE("localize reports the band module") {
    const CliResult r =
        run({"localize", "--family", kFamily, "--cover", kBandCover, "--t", "0"});
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["local_type"]["kind"] == "band");
    CHECK(j["local_type"]["lambda"] == "lambda");
}

TEST_CASE("json output round trips through the parser") {
    const CliResult r = run({"analyze", "--family", kFamily, "--cover", kStringCover});
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.dump(2) + "\n" == r.out + (r.out.back() == '\n' ? "" : "\n"));
}

TEST_CASE("input errors exit with code 2") {
    CHECK(run({"analyze", "--family", "missing.json", "--cover", kStringCover}).exit_code == 2);
    CHECK(run({"analyze", "--family", kFamily, "--cover", kStringCover, "--lambda", "2"}).exit_code ==
          2);  // --lambda forbidden with non-lambda inputs
    CHECK(run({"analyze", "--family", kFamily, "--cover", kBandCover, "--lambda", "0"}).exit_code ==
          2);
    CHECK(run({"localize", "--family", kFamily, "--cover", kBandCover, "--t", "7"}).exit_code == 2);
}

TEST_CASE("fm and fibre-length agree with analyze") {
    const CliResult len =
        run({"fibre-length", "--family", kFamily, "--cover", kBandCover, "--t", "0"});
    REQUIRE(len.exit_code == 0);
    CHECK(Json::parse(len.out)["length"] == 3);

    const CliResult fm = run({"fm", "--family", kFamily, "--cover", kBandCover, "--t", "0"});
    REQUIRE(fm.exit_code == 0);
    const Json j = Json::parse(fm.out);
    bool band = false;
    for (const auto& s : j["fm"])
        if (s["variant"] == "band_bundle" && s["lambda"] == "lambda") band = true;
    CHECK(band);
}

TEST_CASE("malformed inputs produce diagnostics and exit 2") {
    // invalid JSON
    {
        std::ofstream f("/tmp/specfm_bad.json");
        f << "{not json";
    }
    CliResult r = run({"discriminant", "--family", "/tmp/specfm_bad.json"});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("invalid JSON") != std::string::npos);

    // malformed polynomial text carries a position
    {
        std::ofstream f("/tmp/specfm_badpoly.json");
        f << R"({"a2": "1 + ", "a4": "0", "a6": "1"})";
    }
    r = run({"discriminant", "--family", "/tmp/specfm_badpoly.json"});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("position") != std::string::npos);

    // unknown infinity component type
    {
        std::ofstream f("/tmp/specfm_badcover.json");
        f << R"({"gens": ["x + y", "x^2 + t*x + t"],
                 "infinity_components": [{"type": "mystery"}]})";
    }
    r = run({"analyze", "--family", kFamily, "--cover", "/tmp/specfm_badcover.json"});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("infinity component") != std::string::npos);
}

TEST_CASE("analyze surfaces undetermined outcomes with exit 3") {
    const std::string unclassified = kData + "/cover_unclassified.json";
    const CliResult r = run({"analyze", "--family", kFamily, "--cover", unclassified.c_str()});
    CHECK(r.exit_code == 3);
    const Json j = Json::parse(r.out);
    CHECK(j["s_flat_fm_family"] == false);
    bool undet = false;
    for (const auto& fa : j["special_fibres"])
        if (fa.contains("undetermined") && fa["undetermined"] == true) undet = true;
    CHECK(undet);
}

TEST_CASE("support exits 3 on cluster outcomes") {
    const CliResult r = run({"support", "--family", kFamily, "--cover", kStringCover});
    CHECK(r.exit_code == 3);  // generic fibre is a conjugate pair
    const Json j = Json::parse(r.out);
    CHECK(j["clusters"].size() == 1);
    CHECK(j["total_length"] == 2);
}

}  // TEST_SUITE
