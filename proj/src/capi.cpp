#include "qsc/qsc.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qsc/code.hpp"
#include "qsc/design.hpp"
#include "qsc/error.hpp"
#include "qsc/io.hpp"
#include "qsc/orbit.hpp"
#include "qsc/srg.hpp"
#include "qsc/workflows.hpp"

struct qsc_design {
  qsc::design::IncidenceStructure inc;
};
struct qsc_code {
  qsc::code::PrimeFieldCode code;
};
struct qsc_perm {
  qsc::orbit::Permutation perm;
};
struct qsc_orbit_matrix {
  qsc::orbit::OrbitMatrix om;
};
struct qsc_involutions {
  std::vector<qsc::orbit::Involution> list;
};
struct qsc_graph {
  qsc::srg::Graph graph;
};

namespace {

using nlohmann::ordered_json;

thread_local std::string last_error;

qsc_status status_of(qsc::ErrorKind k) {
  switch (k) {
    case qsc::ErrorKind::invalid_argument: return QSC_ERR_INVALID_ARGUMENT;
    case qsc::ErrorKind::parse: return QSC_ERR_PARSE;
    case qsc::ErrorKind::io: return QSC_ERR_IO;
    case qsc::ErrorKind::verification: return QSC_ERR_VERIFICATION;
    case qsc::ErrorKind::guard: return QSC_ERR_GUARD;
  }
  return QSC_ERR_INTERNAL;
}

template <class Fn>
qsc_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return QSC_OK;
  } catch (const qsc::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return QSC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return QSC_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  qsc::require(p != nullptr, qsc::ErrorKind::invalid_argument, std::string(what) + " is null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void put_string(char** out, const std::string& s) {
  if (out) *out = dup(s);
}

std::string join_lines(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += s + "\n";
  return out;
}

qsc::orbit::TheoremContext context_for(const qsc::design::IncidenceStructure& inc) {
  return {qsc::design::verify_design(inc, 2), qsc::design::intersection_profile(inc).qs_pair};
}

}  // namespace

extern "C" {

const char* qsc_version(void) { return QSC_VERSION_STRING; }

const char* qsc_last_error(void) { return last_error.c_str(); }

const char* qsc_status_name(qsc_status s) {
  switch (s) {
    case QSC_OK: return "ok";
    case QSC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case QSC_ERR_PARSE: return "parse error";
    case QSC_ERR_IO: return "i/o error";
    case QSC_ERR_VERIFICATION: return "verification failure";
    case QSC_ERR_GUARD: return "size guard exceeded";
    case QSC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void qsc_string_free(char* s) { std::free(s); }

qsc_status qsc_sha256_file(const char* path, char** hex) {
  return guarded([&] {
    need(path, "path");
    need(hex, "output");
    *hex = dup(qsc::io::sha256_hex(qsc::io::read_file(path)));
  });
}

qsc_status qsc_write_file(const char* path, const char* content) {
  return guarded([&] {
    need(path, "path");
    need(content, "content");
    qsc::io::write_file_atomic(path, content);
  });
}

// designs

qsc_status qsc_design_blokhuis_haemers(int q, int threads, qsc_design** out) {
  return guarded([&] {
    need(out, "output");
    *out = new qsc_design{qsc::design::blokhuis_haemers(q, threads)};
  });
}

qsc_status qsc_design_read(const char* path, qsc_design** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "output");
    *out = new qsc_design{qsc::design::read_incidence_file(path)};
  });
}

qsc_status qsc_design_parse(const char* text, qsc_design** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "output");
    std::istringstream in(text);
    *out = new qsc_design{qsc::design::read_incidence(in)};
  });
}

qsc_status qsc_design_to_text(const qsc_design* d, char** text) {
  return guarded([&] {
    need(d, "design");
    need(text, "output");
    *text = dup(qsc::design::incidence_to_string(d->inc));
  });
}

qsc_status qsc_design_write(const qsc_design* d, const char* path) {
  return guarded([&] {
    need(d, "design");
    need(path, "path");
    qsc::io::write_file_atomic(path, qsc::design::incidence_to_string(d->inc));
  });
}

void qsc_design_free(qsc_design* d) { delete d; }

int qsc_design_points(const qsc_design* d) { return d ? d->inc.v() : -1; }

int qsc_design_blocks(const qsc_design* d) { return d ? d->inc.b() : -1; }

qsc_status qsc_design_verify(const qsc_design* d, int t, qsc_design_params* out) {
  return guarded([&] {
    need(d, "design");
    const auto p = qsc::design::verify_design(d->inc, t);
    if (out) *out = {p.t, p.v, p.k, p.lambda, p.b, p.r};
  });
}

qsc_status qsc_design_intersections(const qsc_design* d, int threads, int* numbers, size_t capacity, size_t* count) {
  return guarded([&] {
    need(d, "design");
    const auto prof = qsc::design::intersection_profile(d->inc, threads);
    if (count) *count = prof.numbers.size();
    for (size_t i = 0; numbers && i < capacity && i < prof.numbers.size(); ++i) numbers[i] = prof.numbers[i];
  });
}

qsc_status qsc_design_complement(const qsc_design* d, qsc_design** out) {
  return guarded([&] {
    need(d, "design");
    need(out, "output");
    *out = new qsc_design{qsc::design::complement(d->inc)};
  });
}

qsc_status qsc_design_equal(const qsc_design* a, const qsc_design* b, int* equal) {
  return guarded([&] {
    need(a, "design");
    need(b, "design");
    need(equal, "output");
    *equal = a->inc == b->inc ? 1 : 0;
  });
}

qsc_status qsc_design_report_json(const qsc_design* d, int threads, char** json) {
  return guarded([&] {
    need(d, "design");
    need(json, "output");
    const auto p = qsc::design::verify_design(d->inc, 2);
    const auto prof = qsc::design::intersection_profile(d->inc, threads);
    const auto sdc = qsc::design::self_dual_containment_conditions(p, prof);
    ordered_json j;
    j["design"] = {{"t", p.t}, {"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"b", p.b}, {"r", p.r}};
    j["intersection_numbers"] = prof.numbers;
    j["quasi_symmetric"] = prof.quasi_symmetric();
    j["repeated_blocks"] = d->inc.repeated_blocks().size();
    j["self_dual_containment"] = {{"v_mod8", sdc.v_mod8},
                                  {"k_mod4", sdc.k_mod4},
                                  {"intersections_even", sdc.intersections_even},
                                  {"holds", sdc.holds()}};
    *json = dup(j.dump(2) + "\n");
  });
}

// codes

qsc_status qsc_code_from_incidence(const qsc_design* d, int transpose, qsc_code** out) {
  return guarded([&] {
    need(d, "design");
    need(out, "output");
    *out = new qsc_code{qsc::code::code_from_incidence(d->inc, transpose != 0)};
  });
}

qsc_status qsc_code_span(const int* rows, int k, int n, int p, qsc_code** out) {
  return guarded([&] {
    need(out, "output");
    qsc::require(k >= 0 && n > 0, qsc::ErrorKind::invalid_argument, "invalid code dimensions");
    if (k > 0) need(rows, "rows");
    std::vector<std::vector<int>> r(k, std::vector<int>(n));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < n; ++j) r[i][j] = rows[static_cast<size_t>(i) * n + j];
    *out = new qsc_code{qsc::code::PrimeFieldCode::span(r, p, n)};
  });
}

qsc_status qsc_code_read(const char* path, qsc_code** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "output");
    *out = new qsc_code{qsc::code::read_gen_file(path)};
  });
}

qsc_status qsc_code_parse(const char* text, qsc_code** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "output");
    std::istringstream in(text);
    *out = new qsc_code{qsc::code::read_gen(in)};
  });
}

qsc_status qsc_code_to_text(const qsc_code* c, char** text) {
  return guarded([&] {
    need(c, "code");
    need(text, "output");
    *text = dup(qsc::code::gen_to_string(c->code));
  });
}

qsc_status qsc_code_write(const qsc_code* c, const char* path) {
  return guarded([&] {
    need(c, "code");
    need(path, "path");
    qsc::io::write_file_atomic(path, qsc::code::gen_to_string(c->code));
  });
}

void qsc_code_free(qsc_code* c) { delete c; }

qsc_status qsc_code_info(const qsc_code* c, int* p, int* n, int* k) {
  return guarded([&] {
    need(c, "code");
    if (p) *p = c->code.p();
    if (n) *n = c->code.n();
    if (k) *k = c->code.k();
  });
}

qsc_status qsc_code_dual(const qsc_code* c, qsc_code** out) {
  return guarded([&] {
    need(c, "code");
    need(out, "output");
    *out = new qsc_code{qsc::code::dual(c->code)};
  });
}

qsc_status qsc_code_equal(const qsc_code* a, const qsc_code* b, int* equal) {
  return guarded([&] {
    need(a, "code");
    need(b, "code");
    need(equal, "output");
    *equal = a->code == b->code ? 1 : 0;
  });
}

qsc_status qsc_code_self_orthogonal(const qsc_code* c, int* result) {
  return guarded([&] {
    need(c, "code");
    need(result, "output");
    *result = qsc::code::is_self_orthogonal(c->code) ? 1 : 0;
  });
}

qsc_status qsc_code_weight_distribution(const qsc_code* c, int max_enum_dim, int threads, unsigned long long* counts,
                                        size_t capacity) {
  return guarded([&] {
    need(c, "code");
    need(counts, "counts");
    qsc::require(capacity >= static_cast<size_t>(c->code.n()) + 1, qsc::ErrorKind::invalid_argument,
                 "counts needs n + 1 entries");
    qsc::require(c->code.k() <= max_enum_dim, qsc::ErrorKind::guard,
                 "dimension " + std::to_string(c->code.k()) + " exceeds the enumeration guard " +
                     std::to_string(max_enum_dim));
    const auto dist = qsc::code::weight_distribution(c->code, threads);
    for (size_t w = 0; w < dist.size(); ++w) counts[w] = dist[w];
  });
}

qsc_status qsc_code_report_json(const qsc_code* c, int max_enum_dim, int threads, char** json) {
  return guarded([&] {
    need(c, "code");
    need(json, "output");
    *json = dup(qsc::code::report_to_json(qsc::code::analyze(c->code, max_enum_dim, threads)) + "\n");
  });
}

qsc_status qsc_code_structure_json(const qsc_code* c, char** json) {
  return guarded([&] {
    need(c, "code");
    need(json, "output");
    *json = dup(qsc::code::report_to_json(qsc::code::analyze_structure(c->code)) + "\n");
  });
}

int qsc_rains_bound(int n) {
  try {
    return qsc::code::rains_bound(n);
  } catch (const std::exception& e) {
    last_error = e.what();
    return -1;
  }
}

const char* qsc_optimality(int n, int k, int d) {
  return qsc::code::optimality_name(qsc::code::optimality_check(n, k, d));
}

// permutations, involutions, orbit matrices

qsc_status qsc_perm_create(const int* images, int n, qsc_perm** out) {
  return guarded([&] {
    need(out, "output");
    qsc::require(n >= 0, qsc::ErrorKind::invalid_argument, "negative permutation size");
    if (n > 0) need(images, "images");
    qsc::orbit::Permutation p(images, images + n);
    qsc::require(qsc::orbit::is_permutation(p, n), qsc::ErrorKind::invalid_argument, "not a permutation");
    *out = new qsc_perm{std::move(p)};
  });
}

qsc_status qsc_perm_read(const char* path, qsc_perm** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "output");
    *out = new qsc_perm{qsc::orbit::read_perm_file(path)};
  });
}

qsc_status qsc_perm_to_text(const qsc_perm* p, char** text) {
  return guarded([&] {
    need(p, "permutation");
    need(text, "output");
    *text = dup(qsc::orbit::perm_to_string(p->perm));
  });
}

qsc_status qsc_perm_write(const qsc_perm* p, const char* path) {
  return guarded([&] {
    need(p, "permutation");
    need(path, "path");
    qsc::io::write_file_atomic(path, qsc::orbit::perm_to_string(p->perm));
  });
}

int qsc_perm_size(const qsc_perm* p) { return p ? static_cast<int>(p->perm.size()) : -1; }

int qsc_perm_image(const qsc_perm* p, int i) {
  if (!p || i < 0 || i >= static_cast<int>(p->perm.size())) return -1;
  return p->perm[i];
}

void qsc_perm_free(qsc_perm* p) { delete p; }

qsc_status qsc_involutions_find(const qsc_design* d, int q, int threads, qsc_involutions** out) {
  return guarded([&] {
    need(d, "design");
    need(out, "output");
    *out = new qsc_involutions{qsc::orbit::find_involutions(q, d->inc, threads)};
  });
}

size_t qsc_involutions_count(const qsc_involutions* l) { return l ? l->list.size() : 0; }

qsc_status qsc_involutions_get(const qsc_involutions* l, size_t i, int* f, int* h, int* frobenius,
                               qsc_perm** point_perm) {
  return guarded([&] {
    need(l, "involution list");
    qsc::require(i < l->list.size(), qsc::ErrorKind::invalid_argument, "involution index out of range");
    const auto& inv = l->list[i];
    if (f) *f = inv.fixed.f;
    if (h) *h = inv.fixed.h;
    if (frobenius) *frobenius = inv.map.frobenius ? 1 : 0;
    if (point_perm) *point_perm = new qsc_perm{inv.action.point_perm};
  });
}

qsc_status qsc_involutions_json(const qsc_involutions* l, char** json) {
  return guarded([&] {
    need(l, "involution list");
    need(json, "output");
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < l->list.size(); ++i) {
      const auto& inv = l->list[i];
      arr.push_back({{"index", i},
                     {"fixed_points", inv.fixed.f},
                     {"fixed_blocks", inv.fixed.h},
                     {"frobenius", inv.map.frobenius},
                     {"A", std::vector<int>(inv.map.A.begin(), inv.map.A.end())},
                     {"t", std::vector<int>(inv.map.t.begin(), inv.map.t.end())}});
    }
    *json = dup(arr.dump(1) + "\n");
  });
}

void qsc_involutions_free(qsc_involutions* l) { delete l; }

qsc_status qsc_orbit_matrix_compute(const qsc_design* d, const qsc_perm* const* generators, size_t count,
                                    qsc_orbit_matrix** out) {
  return guarded([&] {
    need(d, "design");
    need(out, "output");
    if (count > 0) need(generators, "generators");
    const qsc::orbit::BlockIndex index(d->inc);
    std::vector<qsc::orbit::DesignAction> actions;
    for (size_t i = 0; i < count; ++i) {
      need(generators[i], "generator");
      actions.push_back(qsc::orbit::induced_action(d->inc, index, generators[i]->perm));
    }
    *out = new qsc_orbit_matrix{qsc::orbit::orbit_matrix(d->inc, actions)};
  });
}

qsc_status qsc_orbit_matrix_read(const char* path, qsc_orbit_matrix** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "output");
    *out = new qsc_orbit_matrix{qsc::orbit::read_om_file(path)};
  });
}

qsc_status qsc_orbit_matrix_to_text(const qsc_orbit_matrix* om, char** text) {
  return guarded([&] {
    need(om, "orbit matrix");
    need(text, "output");
    *text = dup(qsc::orbit::om_to_string(om->om));
  });
}

qsc_status qsc_orbit_matrix_write(const qsc_orbit_matrix* om, const char* path) {
  return guarded([&] {
    need(om, "orbit matrix");
    need(path, "path");
    qsc::io::write_file_atomic(path, qsc::orbit::om_to_string(om->om));
  });
}

qsc_status qsc_orbit_matrix_dims(const qsc_orbit_matrix* om, int* m, int* n) {
  return guarded([&] {
    need(om, "orbit matrix");
    if (m) *m = om->om.m();
    if (n) *n = om->om.n();
  });
}

int qsc_orbit_matrix_entry(const qsc_orbit_matrix* om, int i, int j) {
  if (!om || i < 0 || j < 0 || i >= om->om.m() || j >= om->om.n()) return -1;
  return om->om.gamma[i][j];
}

void qsc_orbit_matrix_free(qsc_orbit_matrix* om) { delete om; }

qsc_status qsc_orbit_matrix_verify(const qsc_orbit_matrix* om, const qsc_design* d, int threads,
                                   long long* violations, char** json) {
  return guarded([&] {
    need(om, "orbit matrix");
    need(d, "design");
    const auto params = qsc::design::verify_design(d->inc, 2);
    qsc::orbit::VerificationReport rep = qsc::orbit::verify_om(om->om, params);
    bool quotient = false;
    const bool partitions = !om->om.block_orbits.empty();
    if (partitions) {
      const auto prof = qsc::design::intersection_profile(d->inc, threads);
      if (prof.quasi_symmetric()) {
        const auto [x, y] = *prof.qs_pair;
        const auto bg = qsc::orbit::block_graph(d->inc, y);
        qsc::require(bg.srg.has_value(), qsc::ErrorKind::verification, "block graph is not strongly regular");
        const auto qm = qsc::orbit::quotient_matrix(bg.graph, om->om.block_orbits, *bg.srg);
        rep.merge(qm.report);
        rep.merge(qsc::orbit::verify_coupling(om->om, qm.R, x, y, params.k, threads));
        quotient = true;
      }
    }
    if (violations) *violations = static_cast<long long>(rep.violations.size());
    if (json) {
      ordered_json j;
      j["point_orbits"] = om->om.m();
      j["block_orbits"] = om->om.n();
      ordered_json eqs = ordered_json::array();
      for (const char* e : qsc::orbit::kDesignEquations) eqs.push_back(e);
      if (quotient)
        for (const char* e : qsc::orbit::kQuotientEquations) eqs.push_back(e);
      j["equations"] = eqs;
      j["checks"] = rep.checks;
      ordered_json by_eq = ordered_json::object();
      for (const auto& e : eqs) by_eq[e.get<std::string>()] = rep.count(e.get<std::string>());
      j["violations_by_equation"] = by_eq;
      ordered_json list = ordered_json::array();
      for (const auto& v : rep.violations)
        list.push_back({{"equation", v.equation}, {"i", v.i}, {"j", v.j}, {"lhs", v.lhs}, {"rhs", v.rhs}});
      j["violations"] = list;
      if (!partitions) j["note"] = "orbit partitions unavailable: quotient and coupling equations not checked";
      *json = dup(j.dump(2) + "\n");
    }
  });
}

qsc_status qsc_orbit_matrix_code(const qsc_orbit_matrix* om, const qsc_design* d, qsc_axis axis, int p,
                                 int drop_zero, qsc_code** out, char** info_json) {
  return guarded([&] {
    need(om, "orbit matrix");
    need(d, "design");
    need(out, "output");
    qsc::require(axis == QSC_AXIS_COLUMNS || axis == QSC_AXIS_ROWS, qsc::ErrorKind::invalid_argument, "bad axis");
    const auto oc = qsc::orbit::nonfixed_code(
        om->om, axis == QSC_AXIS_COLUMNS ? qsc::orbit::Axis::columns : qsc::orbit::Axis::rows, p, drop_zero != 0,
        context_for(d->inc));
    if (info_json) {
      ordered_json j = {{"axis", axis == QSC_AXIS_COLUMNS ? "columns" : "rows"},
                        {"p", p},
                        {"ambient_length", oc.ambient_length},
                        {"effective_length", oc.effective_length},
                        {"kept_coordinates", oc.kept_coordinates},
                        {"self_orthogonal_guaranteed", oc.self_orthogonal_guaranteed},
                        {"doubly_even_guaranteed", oc.doubly_even_guaranteed},
                        {"warnings", oc.warnings}};
      *info_json = dup(j.dump(2) + "\n");
    }
    *out = new qsc_code{oc.code};
  });
}

qsc_status qsc_orbit_matrix_equal_orbit_code(const qsc_orbit_matrix* om, const qsc_design* d, int p, qsc_code** out) {
  return guarded([&] {
    need(om, "orbit matrix");
    need(d, "design");
    need(out, "output");
    *out = new qsc_code{qsc::orbit::equal_orbit_code(om->om, p, context_for(d->inc))};
  });
}

// strongly regular graphs

qsc_status qsc_tw_srg_params(long long n, long long k, long long q, long long w1, long long w2, qsc_srg_params* out) {
  return guarded([&] {
    need(out, "output");
    const auto s = qsc::srg::tw_srg_params(n, k, q, w1, w2);
    *out = {s.v, s.K, s.lambda, s.mu};
  });
}

qsc_status qsc_srg_from_code(const qsc_code* c, qsc_graph** graph, qsc_srg_params* params) {
  return guarded([&] {
    need(c, "code");
    need(graph, "output");
    auto cg = qsc::srg::srg_from_code(c->code);
    if (params) *params = {cg.params.v, cg.params.K, cg.params.lambda, cg.params.mu};
    *graph = new qsc_graph{std::move(cg.graph)};
  });
}

qsc_status qsc_graph_srg_params(const qsc_graph* g, qsc_srg_params* out, int* strongly_regular) {
  return guarded([&] {
    need(g, "graph");
    const auto s = qsc::srg::strongly_regular_params(g->graph);
    if (strongly_regular) *strongly_regular = s ? 1 : 0;
    if (out && s) *out = {s->v, s->K, s->lambda, s->mu};
  });
}

qsc_status qsc_graph_to_text(const qsc_graph* g, char** text) {
  return guarded([&] {
    need(g, "graph");
    need(text, "output");
    *text = dup(qsc::srg::graph_to_string(g->graph));
  });
}

qsc_status qsc_graph_write(const qsc_graph* g, const char* path) {
  return guarded([&] {
    need(g, "graph");
    need(path, "path");
    qsc::io::write_file_atomic(path, qsc::srg::graph_to_string(g->graph));
  });
}

int qsc_graph_vertices(const qsc_graph* g) { return g ? g->graph.n() : -1; }

void qsc_graph_free(qsc_graph* g) { delete g; }

qsc_status qsc_graph_to_symmetric_design(const qsc_graph* g, const qsc_srg_params* params, qsc_design** out) {
  return guarded([&] {
    need(g, "graph");
    need(params, "parameters");
    need(out, "output");
    const qsc::srg::SrgParams p{params->v, params->k, params->lambda, params->mu};
    *out = new qsc_design{qsc::srg::graph_to_symmetric_design(g->graph, p)};
  });
}

// workflows

qsc_status qsc_example13(int q, int threads, int max_enum_dim, const char* report_dir, char** summary,
                         char** outputs) {
  return guarded([&] {
    const auto inc = qsc::design::blokhuis_haemers(q, threads);
    auto ex = qsc::workflows::run_example13(inc, threads, max_enum_dim);
    ex.q = q;
    std::vector<std::string> written;
    if (report_dir) written = qsc::workflows::write_example13(ex, inc, report_dir);
    put_string(summary, ex.text());
    put_string(outputs, join_lines(written));
  });
}

qsc_status qsc_example14(const qsc_design* d, int q, int threads, int max_enum_dim, const char* report_dir,
                         char** summary, char** outputs, int* ok) {
  return guarded([&] {
    need(d, "design");
    const auto ex = qsc::workflows::run_example14(d->inc, q, threads, max_enum_dim);
    std::vector<std::string> written;
    if (report_dir) written = qsc::workflows::write_example14(ex, report_dir);
    if (ok) *ok = ex.ok() ? 1 : 0;
    put_string(summary, ex.text());
    put_string(outputs, join_lines(written));
  });
}

}  // extern "C"
