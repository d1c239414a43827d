#include <doctest.h>

#include <filesystem>

#include <json.hpp>

#include "qsc/io.hpp"
#include "qsc/workflows.hpp"

using namespace qsc::workflows;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("qsc_wf_" + name);
  fs::remove_all(p);
  return p;
}

const qsc::design::IncidenceStructure& bh4() {
  static const auto d = qsc::design::blokhuis_haemers(4);
  return d;
}

}  // namespace

TEST_SUITE("workflows") {
  TEST_CASE("example13 summary") {
    auto ex = run_example13(bh4(), 2, qsc::code::kDefaultMaxEnumDim);
    ex.q = 4;
    const auto j = nlohmann::json::parse(ex.json());
    CHECK(j["design"]["lambda"] == 46);
    CHECK(j["intersection_numbers"] == nlohmann::json::array({8, 12}));
    CHECK(j["incidence_code"]["min_distance"] == 24);
    CHECK(j["transpose_code"]["doubly_even"] == false);
    CHECK(j["rains_bound"]["d"] == 12);
    CHECK(ex.text().find("[64,12,24]") != std::string::npos);

    const auto dir = scratch("ex13");
    const auto files = write_example13(ex, bh4(), dir.string());
    CHECK(files.size() == 7);
    const std::string first = qsc::io::read_file((dir / "summary.json").string());
    write_example13(ex, bh4(), dir.string());
    CHECK(qsc::io::read_file((dir / "summary.json").string()) == first);
    CHECK_FALSE(fs::exists(dir / "summary.json.tmp"));
    fs::remove_all(dir);
  }

  TEST_CASE("example14 classes and determinism") {
    const auto a = run_example14(bh4(), 4, 4, qsc::code::kDefaultMaxEnumDim);
    CHECK(a.ok());
    CHECK(a.violations() == 0);
    REQUIRE_FALSE(a.classes.empty());
    for (std::size_t i = 1; i < a.classes.size(); ++i) CHECK(a.classes[i - 1].fixed <= a.classes[i].fixed);
    CHECK(a.classes.front().fixed == qsc::orbit::FixedStructure{0, 16});
    std::size_t members = 0;
    for (const auto& c : a.classes) members += c.members.size();
    CHECK(members == a.analyses.size());

    const auto b = run_example14(bh4(), 4, 3, qsc::code::kDefaultMaxEnumDim);
    CHECK(a.json() == b.json());
    CHECK(a.text() == b.text());

    const auto j = nlohmann::json::parse(a.json());
    CHECK(j["block_graph"]["srg"] == nlohmann::json::array({336, 80, 28, 16}));
    for (const auto& cls : j["classes"]) {
      CHECK(cls["column_code"]["report"]["doubly_even"] == true);
      CHECK(cls["row_code"]["report"]["self_orthogonal"] == true);
    }

    const auto dir = scratch("ex14");
    const auto files = write_example14(a, dir.string());
    for (const auto& f : files) CHECK(fs::exists(dir / f));
    fs::remove_all(dir);
  }
}
