#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "split_spectral/cli.hpp"

using split_spectral::cli::run;
using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json call_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = call(args);
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("check passes for small instances") {
  for (const auto& [m, g] : {std::pair{"1", "2"}, std::pair{"2", "2"}, std::pair{"3", "2"}, std::pair{"2", "3"}}) {
    const auto r = call({"check", "--m", m, "--g", g});
    CHECK(r.code == 0);
    CHECK(r.out.find("EXPECTED_FAIL  euler_pushforward_printed_deg_U") != std::string::npos);
    CHECK(r.out.find("\nFAIL") == std::string::npos);
  }
  const Json j = call_json({"check", "--m", "2", "--g", "2"});
  CHECK(j["ok"] == true);
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["summary"]["expected_fail"] == 1);
}

TEST_CASE("check output is byte-stable") {
  const auto a = call({"check", "--m", "2", "--g", "2", "--format", "json", "--seed", "9"});
  const auto b = call({"check", "--m", "2", "--g", "2", "--format", "json", "--seed", "9"});
  CHECK(a.out == b.out);
}

TEST_CASE("fiber-count") {
  auto r = call({"fiber-count", "--m", "2", "--g", "2", "--M", "2", "--group", "so"});
  CHECK(r.code == 0);
  CHECK(r.out == "28\n");
  r = call({"fiber-count", "--m", "2", "--g", "2", "--M", "2", "--group", "sp"});
  CHECK(r.out == "458752\n");  // 28 * 2^14
  const Json j = call_json({"fiber-count", "--m", "2", "--g", "2", "--M", "4", "--group", "so"});
  CHECK(j["count"] == "35");
}

TEST_CASE("sw from flags") {
  const Json j = call_json({"sw", "--m", "2", "--g", "2", "--F", "0x0:14", "--D", "00000000", "--w2v", "1"});
  CHECK(j["w1_Vplus"]["hex"] == "0x0");
  CHECK(j["w1_Vplus"]["len"] == 4);
  CHECK(j["w2_Vplus"] == 0);
  CHECK(j["w2_Vminus"] == 1);
  CHECK(j["corollary_agrees"] == true);
  const Json k = call_json({"sw", "--m", "2", "--g", "2", "--F", "0x8:14", "--D", "11111100"});
  CHECK(k["w1_Vplus"]["hex"] == "0x1");
  CHECK(k["w2_Vplus"] == 1);
  CHECK(k["D_class"] == "00000011");
  CHECK(k["M"] == 2);
}

TEST_CASE("sw from a JSON input file") {
  const auto path = std::filesystem::temp_directory_path() / "split_spectral_sw_input.json";
  {
    std::ofstream f(path);
    f << R"({"m": 2, "g": 2, "F": {"hex": "0x8", "len": 14}, "D": "00000000", "w2_total": 1,
             "eps_sigma": 0, "eps_sbar": 0})";
  }
  const Json j = call_json({"sw", "--input", path.string()});
  CHECK(j["w2_Vplus"] == 1);
  CHECK(j["w2_Vminus"] == 0);
  {
    std::ofstream f(path);
    f << R"({"m": 2, "g": 2, "F": "0x8:14"})";
  }
  CHECK(call({"sw", "--input", path.string()}).code == 1);
  {
    std::ofstream f(path);
    f << "{not json";
  }
  CHECK(call({"sw", "--input", path.string()}).code == 1);
  std::filesystem::remove(path);
}

TEST_CASE("validation errors exit 1 and name the precondition") {
  auto r = call({"sw", "--m", "2", "--g", "2", "--F", "0x0:13", "--D", "00000000"});
  CHECK(r.code == 1);
  CHECK(r.err.find("F has length 13") != std::string::npos);
  r = call({"sw", "--m", "2", "--g", "2", "--F", "0x0:14", "--D", "10000000"});
  CHECK(r.code == 1);
  CHECK(r.err.find("odd weight") != std::string::npos);
  r = call({"degrees", "--m", "2", "--g", "2", "--M", "3"});
  CHECK(r.code == 1);
  CHECK(r.err.find("M must be even") != std::string::npos);
  CHECK(call({"report", "--m", "2", "--g", "1"}).code == 1);
  CHECK(call({"check", "--m", "2", "--g", "2", "--bogus"}).code == 1);
  CHECK(call({"nonsense"}).code == 1);
  CHECK(call({}).code == 1);
  CHECK(call({"grade", "--group", "su"}).code == 1);
  CHECK(call({"sw", "--m", "2", "--g", "2", "--F", "0x0:14", "--D", "00000000", "--w2v", "2"}).code == 1);
  CHECK(call({"hitchin"}).code == 1);
}

TEST_CASE("help exits 0") {
  const auto r = call({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("fiber-count") != std::string::npos);
}

TEST_CASE("enumerate and its guard") {
  const Json j = call_json({"enumerate", "--N", "4"});
  CHECK(j["count"] == 4);
  CHECK(j["classes"][1]["rep"] == "0011");
  CHECK(call_json({"enumerate", "--m", "2", "--g", "2"})["count"] == 64);
  CHECK(call_json({"enumerate", "--N", "8", "--max-M", "0"})["count"] == 1);
  CHECK(call({"enumerate", "--N", "22"}).code == 1);
  ::setenv("SPLIT_SPECTRAL_MAX_ENUM", "6", 1);
  CHECK(call({"enumerate", "--N", "8"}).code == 1);
  ::setenv("SPLIT_SPECTRAL_MAX_ENUM", "abc", 1);
  CHECK(call({"enumerate", "--N", "4"}).code == 1);
  ::unsetenv("SPLIT_SPECTRAL_MAX_ENUM");
  CHECK(call({"enumerate", "--N", "8"}).code == 0);
}

TEST_CASE("degrees, grade and hitchin records") {
  const Json d = call_json({"degrees", "--m", "2", "--g", "2", "--M", "0"});
  CHECK(d["deg_U_plus"] == 6);
  CHECK(d["euler_pushforward"] == true);
  CHECK(d["euler_pushforward_printed_deg_U"] == false);
  CHECK(d["ledger_warnings"][0]["id"] == "deg_U");
  const Json g = call_json({"grade", "--group", "so", "--m", "2", "--g", "2"});
  CHECK(g["rows"].size() == 3);
  CHECK(g["total"] == "64");
  CHECK(g["reconciles"] == true);
  const Json h = call_json({"hitchin", "--m", "2"});
  CHECK(h["checks"]["all"] == true);
  CHECK(h["V_odd"]["exponents"] == Json::array({"-1", "1"}));
  const auto table = call({"grade", "--m", "2", "--g", "2"});
  CHECK(table.code == 0);
  CHECK(table.out.find("reconciles") != std::string::npos);
}

TEST_CASE("report matches the golden record for m = 2, g = 2") {
  const auto r = call({"report", "--m", "2", "--g", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  const std::filesystem::path golden = std::filesystem::path(GOLDEN_DIR) / "report_m2_g2.json";
  CHECK(r.out == slurp(golden));
  const Json j = Json::parse(r.out);
  const auto& geo = j["geometry"];
  CHECK(geo["g_S"] == 17);
  CHECK(geo["g_Sbar"] == 7);
  CHECK(geo["N"] == 8);
  std::vector<std::string> keys;
  for (const auto& [k, v] : geo.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"g_S", "g_Sbar", "N", "deg_K", "dim_prym", "dim_hitchin_base",
                                         "dim_prym2", "dim_so_fiber"});
  CHECK(j["typo_ledger"].size() == 3);
  CHECK(j["typo_ledger"][1]["printed_value"] == "6");
  CHECK(j["typo_ledger"][1]["adopted_value"] == "14");
}
