#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsc/qsc.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  qsc_string_free(s);
  return out;
}

struct DesignPtr {
  qsc_design* p = nullptr;
  ~DesignPtr() { qsc_design_free(p); }
};

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(qsc_version()).size() > 0);
  CHECK(std::string(qsc_status_name(QSC_ERR_PARSE)) == "parse error");
  CHECK(qsc_rains_bound(64) == 12);
  CHECK(std::string(qsc_optimality(32, 5, 16)) == "optimal");
  CHECK(std::string(qsc_optimality(10, 2, 3)) == "unknown");
}

TEST_CASE("errors map to status codes") {
  qsc_design* d = nullptr;
  CHECK(qsc_design_blokhuis_haemers(3, 1, &d) == QSC_ERR_INVALID_ARGUMENT);
  CHECK(d == nullptr);
  CHECK(std::string(qsc_last_error()).find("q") != std::string::npos);
  CHECK(qsc_design_parse("QSINC 1\nv=3 b=1\n0 9\n", &d) == QSC_ERR_PARSE);
  CHECK(qsc_design_read("/nonexistent/x.inc", &d) == QSC_ERR_IO);
  CHECK(qsc_design_verify(nullptr, 2, nullptr) == QSC_ERR_INVALID_ARGUMENT);
  CHECK(qsc_design_parse("QSINC 1\nv=4 b=2\n0 1\n0 1 2\n", &d) == QSC_OK);
  CHECK(qsc_design_verify(d, 2, nullptr) == QSC_ERR_VERIFICATION);
  qsc_design_free(d);
  qsc_srg_params s{};
  CHECK(qsc_tw_srg_params(28, 6, 2, 16, 12, &s) == QSC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("design round trip and report") {
  DesignPtr d;
  REQUIRE(qsc_design_blokhuis_haemers(4, 2, &d.p) == QSC_OK);
  CHECK(qsc_design_points(d.p) == 64);
  CHECK(qsc_design_blocks(d.p) == 336);
  qsc_design_params p{};
  REQUIRE(qsc_design_verify(d.p, 2, &p) == QSC_OK);
  CHECK(p.r == 126);
  int numbers[4] = {};
  size_t count = 0;
  REQUIRE(qsc_design_intersections(d.p, 2, numbers, 4, &count) == QSC_OK);
  CHECK(count == 2);
  CHECK(numbers[0] == 8);
  CHECK(numbers[1] == 12);

  char* text = nullptr;
  REQUIRE(qsc_design_to_text(d.p, &text) == QSC_OK);
  DesignPtr back;
  REQUIRE(qsc_design_parse(text, &back.p) == QSC_OK);
  qsc_string_free(text);
  int equal = 0;
  CHECK(qsc_design_equal(d.p, back.p, &equal) == QSC_OK);
  CHECK(equal == 1);

  DesignPtr comp;
  REQUIRE(qsc_design_complement(d.p, &comp.p) == QSC_OK);
  REQUIRE(qsc_design_verify(comp.p, 2, &p) == QSC_OK);
  CHECK(p.k == 40);

  char* json = nullptr;
  REQUIRE(qsc_design_report_json(d.p, 2, &json) == QSC_OK);
  const auto j = nlohmann::json::parse(take(json));
  CHECK(j["self_dual_containment"]["holds"] == true);
}

TEST_CASE("codes") {
  DesignPtr d;
  REQUIRE(qsc_design_blokhuis_haemers(4, 1, &d.p) == QSC_OK);
  qsc_code* c = nullptr;
  REQUIRE(qsc_code_from_incidence(d.p, 0, &c) == QSC_OK);
  int p = 0, n = 0, k = 0;
  REQUIRE(qsc_code_info(c, &p, &n, &k) == QSC_OK);
  CHECK(p == 2);
  CHECK(n == 64);
  CHECK(k == 12);
  std::vector<unsigned long long> dist(65);
  REQUIRE(qsc_code_weight_distribution(c, 28, 2, dist.data(), dist.size()) == QSC_OK);
  CHECK(dist[24] == 496);
  CHECK(qsc_code_weight_distribution(c, 10, 2, dist.data(), dist.size()) == QSC_ERR_GUARD);
  char* json = nullptr;
  CHECK(qsc_code_report_json(c, 11, 1, &json) == QSC_ERR_GUARD);
  REQUIRE(qsc_code_structure_json(c, &json) == QSC_OK);
  CHECK(nlohmann::json::parse(take(json))["min_distance"].is_null());
  REQUIRE(qsc_code_report_json(c, 28, 2, &json) == QSC_OK);
  CHECK(nlohmann::json::parse(take(json))["min_distance"] == 24);

  qsc_code* dual = nullptr;
  REQUIRE(qsc_code_dual(c, &dual) == QSC_OK);
  int so = 0;
  CHECK(qsc_code_self_orthogonal(c, &so) == QSC_OK);
  CHECK(so == 1);
  qsc_code* dd = nullptr;
  REQUIRE(qsc_code_dual(dual, &dd) == QSC_OK);
  int equal = 0;
  CHECK(qsc_code_equal(c, dd, &equal) == QSC_OK);
  CHECK(equal == 1);
  char* text = nullptr;
  REQUIRE(qsc_code_to_text(c, &text) == QSC_OK);
  qsc_code* back = nullptr;
  REQUIRE(qsc_code_parse(text, &back) == QSC_OK);
  qsc_string_free(text);
  CHECK(qsc_code_equal(c, back, &equal) == QSC_OK);
  CHECK(equal == 1);
  for (auto* x : {c, dual, dd, back}) qsc_code_free(x);

  const int rows[] = {1, 0, 1, 1, 0, 1, 1, 2};
  REQUIRE(qsc_code_span(rows, 2, 4, 3, &c) == QSC_OK);
  CHECK(qsc_code_self_orthogonal(c, &so) == QSC_OK);
  CHECK(so == 1);
  qsc_code_free(c);
}

TEST_CASE("involutions, orbit matrices and their codes") {
  DesignPtr d;
  REQUIRE(qsc_design_blokhuis_haemers(4, 1, &d.p) == QSC_OK);
  qsc_involutions* list = nullptr;
  REQUIRE(qsc_involutions_find(d.p, 4, 4, &list) == QSC_OK);
  REQUIRE(qsc_involutions_count(list) > 0);
  int f = -1, h = -1, fr = -1;
  qsc_perm* perm = nullptr;
  REQUIRE(qsc_involutions_get(list, 0, &f, &h, &fr, &perm) == QSC_OK);
  CHECK(qsc_perm_size(perm) == 64);
  CHECK(qsc_involutions_get(list, qsc_involutions_count(list), nullptr, nullptr, nullptr, nullptr) ==
        QSC_ERR_INVALID_ARGUMENT);
  char* json = nullptr;
  REQUIRE(qsc_involutions_json(list, &json) == QSC_OK);
  CHECK(nlohmann::json::parse(take(json)).size() == qsc_involutions_count(list));

  qsc_orbit_matrix* om = nullptr;
  const qsc_perm* gens[] = {perm};
  REQUIRE(qsc_orbit_matrix_compute(d.p, gens, 1, &om) == QSC_OK);
  int m = 0, n = 0;
  REQUIRE(qsc_orbit_matrix_dims(om, &m, &n) == QSC_OK);
  CHECK(m == (64 + f) / 2);
  long long violations = -1;
  REQUIRE(qsc_orbit_matrix_verify(om, d.p, 2, &violations, &json) == QSC_OK);
  CHECK(violations == 0);
  const auto rep = nlohmann::json::parse(take(json));
  CHECK(rep["equations"].size() == 8);

  qsc_code* c = nullptr;
  REQUIRE(qsc_orbit_matrix_code(om, d.p, QSC_AXIS_COLUMNS, 2, 1, &c, &json) == QSC_OK);
  CHECK(nlohmann::json::parse(take(json))["doubly_even_guaranteed"] == true);
  qsc_code_free(c);
  CHECK(qsc_orbit_matrix_equal_orbit_code(om, d.p, 2, &c) == QSC_ERR_INVALID_ARGUMENT);

  // Through the text format the partitions are lost: only the design equations are checked.
  char* text = nullptr;
  REQUIRE(qsc_orbit_matrix_to_text(om, &text) == QSC_OK);
  const auto path = std::filesystem::temp_directory_path() / "qsc_capi.om";
  REQUIRE(qsc_write_file(path.c_str(), text) == QSC_OK);
  qsc_string_free(text);
  qsc_orbit_matrix* om2 = nullptr;
  REQUIRE(qsc_orbit_matrix_read(path.c_str(), &om2) == QSC_OK);
  CHECK(qsc_orbit_matrix_entry(om2, 0, 0) == qsc_orbit_matrix_entry(om, 0, 0));
  REQUIRE(qsc_orbit_matrix_verify(om2, d.p, 1, &violations, &json) == QSC_OK);
  CHECK(nlohmann::json::parse(take(json))["equations"].size() == 4);
  std::filesystem::remove(path);

  std::vector<int> swapped(64);
  for (int i = 0; i < 64; ++i) swapped[i] = i;
  std::swap(swapped[0], swapped[1]);
  qsc_perm* bad = nullptr;
  REQUIRE(qsc_perm_create(swapped.data(), 64, &bad) == QSC_OK);
  const qsc_perm* bad_gens[] = {bad};
  qsc_orbit_matrix* om3 = nullptr;
  CHECK(qsc_orbit_matrix_compute(d.p, bad_gens, 1, &om3) == QSC_ERR_VERIFICATION);
  swapped[1] = 1;
  qsc_perm* notperm = nullptr;
  CHECK(qsc_perm_create(swapped.data(), 64, &notperm) == QSC_ERR_INVALID_ARGUMENT);

  qsc_perm_free(bad);
  qsc_perm_free(perm);
  qsc_orbit_matrix_free(om);
  qsc_orbit_matrix_free(om2);
  qsc_involutions_free(list);
}

TEST_CASE("srg pipeline") {
  qsc_code* c = nullptr;
  REQUIRE(qsc_code_read(QSC_FIXTURES "/quadric_28_6.gen", &c) == QSC_OK);
  qsc_graph* g = nullptr;
  qsc_srg_params sp{};
  REQUIRE(qsc_srg_from_code(c, &g, &sp) == QSC_OK);
  CHECK(sp.v == 64);
  CHECK(sp.k == 28);
  CHECK(sp.lambda == 12);
  CHECK(sp.mu == 12);
  qsc_srg_params emp{};
  int srg = 0;
  REQUIRE(qsc_graph_srg_params(g, &emp, &srg) == QSC_OK);
  CHECK(srg == 1);
  CHECK(emp.k == 28);
  qsc_design* d = nullptr;
  REQUIRE(qsc_graph_to_symmetric_design(g, &sp, &d) == QSC_OK);
  qsc_design_params p{};
  REQUIRE(qsc_design_verify(d, 2, &p) == QSC_OK);
  CHECK(p.b == 64);
  CHECK(p.lambda == 12);
  qsc_srg_params wrong = sp;
  wrong.mu = 11;
  qsc_design* d2 = nullptr;
  CHECK(qsc_graph_to_symmetric_design(g, &wrong, &d2) == QSC_ERR_INVALID_ARGUMENT);
  qsc_design_free(d);
  qsc_graph_free(g);
  qsc_code_free(c);
}

TEST_CASE("example13 workflow") {
  char* summary = nullptr;
  char* outputs = nullptr;
  REQUIRE(qsc_example13(4, 2, 28, nullptr, &summary, &outputs) == QSC_OK);
  CHECK(take(summary).find("[64,12,24]") != std::string::npos);
  CHECK(take(outputs).empty());
  CHECK(qsc_example13(5, 2, 28, nullptr, &summary, &outputs) == QSC_ERR_INVALID_ARGUMENT);
}
