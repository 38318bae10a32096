#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cgk/cli.hpp"
#include "doctest.h"

using nlohmann::json;
namespace cli = cgk::cli;

namespace {

struct Fixture {
  std::string path;
  json data;
};

std::vector<Fixture> corpus() {
  std::vector<Fixture> out;
  for (const auto& e : std::filesystem::directory_iterator(CGK_FIXTURE_DIR))
    if (e.path().extension() == ".json") {
      std::ifstream in(e.path());
      out.push_back({e.path().string(), json::parse(in)});
    }
  std::sort(out.begin(), out.end(), [](const Fixture& a, const Fixture& b) { return a.path < b.path; });
  return out;
}

int run(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o, e;
  int code = cli::run(args, o, e);
  if (out) *out = o.str();
  return code;
}

}  // namespace

TEST_CASE("fixture corpus: Alexander, covers and signatures") {
  auto fx = corpus();
  REQUIRE(fx.size() >= 25);
  for (const auto& f : fx) {
    CAPTURE(f.path);
    const json& want = f.data["expect"];
    json a = cli::report({"alexander", "--knot", f.path});
    CHECK(a["result"]["alexander"] == want["alexander"]);
    for (const auto& [d, order] : want["cover_order"].items()) {
      if (order.get<long>() == 0) {
        CHECK(run({"cover", "--knot", f.path, "--d", d}) == cli::kPrecondition);
        continue;
      }
      json c = cli::report({"cover", "--knot", f.path, "--d", d});
      CHECK(c["result"]["order"].dump() == order.dump());
    }
    if (!want.contains("signature")) continue;
    for (const auto& s : want["signature"]) {
      json r = cli::report({"signature", "--knot", f.path, "--t", s["t"].get<std::string>()});
      CHECK(r["result"]["signature"] == s["value"]);
    }
  }
}

TEST_CASE("twisted double coefficients from the CLI") {
  for (long a : {2, 3, 5}) {
    std::ifstream in(std::string(CGK_FIXTURE_DIR) + "/twisted_double_a" + std::to_string(a) + ".json");
    json fx = json::parse(in);
    json r = cli::report({"obstruct-twisted-double", "--a", std::to_string(a)});
    const json& want = fx["expect"]["twisted_double_coefficients"];
    REQUIRE(r["result"]["by_value"].size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
      CHECK(r["result"]["by_value"][i]["j"] == want[i]["j"]);
      CHECK(r["result"]["by_value"][i]["coefficient"] == want[i]["value"]);
    }
  }
}

TEST_CASE("order-two fixtures") {
  for (const auto& f : corpus()) {
    if (!f.data["expect"].contains("order_two_coefficient")) continue;
    const json& k = f.data["knot"]["summands"];
    auto copies = [](const json& s) {
      // T_0 is written with an empty companion list.
      const json& cs = s["knot"]["companions"];
      return cs.empty() ? std::size_t{0} : cs[0]["summands"].size();
    };
    json r = cli::report({"obstruct-order2", "--i", std::to_string(copies(k[0])), "--j", std::to_string(copies(k[1]))});
    for (const auto& c : r["result"]["cases"])
      CHECK(c["coefficient"] == f.data["expect"]["order_two_coefficient"]);
  }
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::vector<std::string>> cmds{
      {"metabolizers", "--knot", std::string(CGK_FIXTURE_DIR) + "/sum_2_twisted_double_a1.json", "--d", "2"},
      {"cg-sigma", "--knot", std::string(CGK_FIXTURE_DIR) + "/twisted_double_a2.json", "--d", "2", "--p", "5"},
      {"obstruct-mutant-sum", "--n", "2"},
      {"su2", "--a", "4", "--grid", "50"},
      {"labelings", "--diagram", "PD[X[4,2,5,1], X[8,6,1,5], X[6,3,7,4], X[2,7,3,8]]", "--p", "5"}};
  for (const auto& c : cmds) {
    CAPTURE(c[0]);
    std::string x, y;
    CHECK(run(c, &x) == cli::kOk);
    CHECK(run(c, &y) == cli::kOk);
    CHECK(x == y);
    CHECK(cli::report(c).dump() == cli::report(c).dump());
  }
}

TEST_CASE("exit codes") {
  CHECK(run({"obstruct-twisted-double", "--a", "1"}) == cli::kPrecondition);
  CHECK(run({"signature", "--knot", std::string(CGK_FIXTURE_DIR) + "/torus_2_5.json", "--t", "1/10"}) ==
        cli::kPrecondition);
  CHECK(run({"labelings", "--diagram", "PD[X[1,2,3"}) == cli::kPrecondition);
  CHECK(run({"metabolizers", "--knot", std::string(CGK_FIXTURE_DIR) + "/sum_3_twisted_double_a2.json", "--d",
             "2", "--budget", "5"}) == cli::kBudget);
  CHECK(run({"no-such-command"}) != cli::kOk);
}

TEST_CASE("inline JSON specs and flat output") {
  std::string out;
  CHECK(run({"alexander", "--knot", R"({"kind":"twisted_double","a":1})"}, &out) == cli::kOk);
  CHECK(out.find("alexander: 2t^2-5t+2") != std::string::npos);
  CHECK(cli::load_spec(R"({"kind":"torus","p":2,"q":3})")["q"] == 3);
  CHECK(cli::load_spec(std::string(CGK_FIXTURE_DIR) + "/torus_2_3.json")["kind"] == "torus");
}
