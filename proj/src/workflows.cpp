#include "qsc/workflows.hpp"

#include <algorithm>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <map>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "qsc/error.hpp"
#include "qsc/io.hpp"
#include "qsc/parallel.hpp"

namespace qsc::workflows {

using nlohmann::ordered_json;

namespace {

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* yes_no(const std::optional<bool>& b) { return b ? yes_no(*b) : "-"; }

std::string code_params(const code::CodeReport& r) {
  std::string d = r.min_distance ? std::to_string(*r.min_distance) : "?";
  return "[" + std::to_string(r.n) + "," + std::to_string(r.k) + "," + d + "]";
}

code::CodeReport report_for(const code::PrimeFieldCode& c, int max_enum_dim, int threads) {
  if (c.k() <= max_enum_dim) return code::analyze(c, max_enum_dim, threads);
  return code::analyze_structure(c);
}

ordered_json report_json(const code::CodeReport& r) { return ordered_json::parse(code::report_to_json(r, -1)); }

ordered_json params_json(const design::DesignParams& p) {
  return {{"t", p.t}, {"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"b", p.b}, {"r", p.r}};
}

std::string distribution_text(const code::CodeReport& r) {
  if (!r.enumerated) return "not enumerated";
  std::string out;
  for (const auto& [w, c] : r.weight_distribution) {
    if (!out.empty()) out += " ";
    out += std::to_string(w) + "^" + std::to_string(c);
  }
  return out;
}

void write_text(const std::string& dir, const std::string& name, const std::string& content,
                std::vector<std::string>& written) {
  io::write_file_atomic((std::filesystem::path(dir) / name).string(), content);
  written.push_back(name);
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  require(!ec && std::filesystem::is_directory(dir), ErrorKind::io, "cannot create directory " + dir);
}

}  // namespace

Example13 run_example13(const design::IncidenceStructure& inc, int threads, int max_enum_dim) {
  Example13 ex;
  ex.params = design::verify_design(inc, 2);
  ex.profile = design::intersection_profile(inc, threads);
  ex.containment = design::self_dual_containment_conditions(ex.params, ex.profile);
  ex.repeated_blocks = static_cast<int>(inc.repeated_blocks().size());
  ex.incidence_code = code::code_from_incidence(inc, false);
  ex.transpose_code = code::code_from_incidence(inc, true);
  ex.incidence_report = report_for(ex.incidence_code, max_enum_dim, threads);
  ex.transpose_report = report_for(ex.transpose_code, max_enum_dim, threads);
  ex.rains = code::rains_bound(inc.v());
  return ex;
}

std::string Example13::json() const {
  ordered_json j;
  j["q"] = q == 0 ? ordered_json(nullptr) : ordered_json(q);
  j["design"] = params_json(params);
  j["intersection_numbers"] = profile.numbers;
  j["quasi_symmetric"] = profile.quasi_symmetric();
  j["repeated_blocks"] = repeated_blocks;
  j["self_dual_containment"] = {{"v_mod8", containment.v_mod8},
                                {"k_mod4", containment.k_mod4},
                                {"intersections_even", containment.intersections_even},
                                {"holds", containment.holds()}};
  j["incidence_code"] = report_json(incidence_report);
  j["transpose_code"] = report_json(transpose_report);
  j["rains_bound"] = {{"n", params.v}, {"d", rains}};
  return j.dump(2) + "\n";
}

std::string Example13::text() const {
  std::ostringstream s;
  s << fmt("design %d-(%d,%d,%d) b=%d r=%d\n", params.t, params.v, params.k, params.lambda, params.b, params.r);
  s << "intersection numbers:";
  for (int x : profile.numbers) s << " " << x;
  s << (profile.quasi_symmetric() ? " (quasi-symmetric)\n" : "\n");
  s << "repeated blocks: " << repeated_blocks << "\n";
  s << fmt("self-dual containment: v=0 mod 8 %s, k=0 mod 4 %s, intersections even %s\n",
           yes_no(containment.v_mod8), yes_no(containment.k_mod4), yes_no(containment.intersections_even));
  const std::pair<const char*, const code::CodeReport*> codes[] = {{"incidence code", &incidence_report},
                                                                     {"transpose code", &transpose_report}};
  for (const auto& [label, r] : codes) {
    s << fmt("%s: %s self-orthogonal %s, doubly even %s, singly even %s, optimality %s\n", label,
             code_params(*r).c_str(), yes_no(r->self_orthogonal), yes_no(r->doubly_even), yes_no(r->singly_even),
             code::optimality_name(r->optimality));
    s << "  weights: " << distribution_text(*r) << "\n";
  }
  s << fmt("rains bound for n=%d: %d\n", params.v, rains);
  return s.str();
}

std::vector<std::string> write_example13(const Example13& ex, const design::IncidenceStructure& inc,
                                         const std::string& dir) {
  ensure_dir(dir);
  std::vector<std::string> written;
  write_text(dir, "design.inc", design::incidence_to_string(inc), written);
  write_text(dir, "incidence_code.gen", code::gen_to_string(ex.incidence_code), written);
  write_text(dir, "incidence_code.json", code::report_to_json(ex.incidence_report) + "\n", written);
  write_text(dir, "transpose_code.gen", code::gen_to_string(ex.transpose_code), written);
  write_text(dir, "transpose_code.json", code::report_to_json(ex.transpose_report) + "\n", written);
  write_text(dir, "summary.json", ex.json(), written);
  write_text(dir, "summary.txt", ex.text(), written);
  return written;
}

namespace {

// Codes listed for each fixed-block count, with the optimality verdict.
struct ReferenceRow {
  int f;
  int h;
  std::vector<std::tuple<int, int, int>> codes;
};

const std::vector<ReferenceRow>& reference_rows() {
  static const std::vector<ReferenceRow> rows = {
      {0, 16, {{32, 5, 16}, {32, 4, 16}}},
      {4, 28, {{28, 6, 12}, {28, 5, 12}}},
      {8, 32, {{24, 4, 12}, {24, 3, 12}}},
  };
  return rows;
}

InvolutionAnalysis analyze_involution(const design::IncidenceStructure& inc, const orbit::Involution& inv,
                                      const design::DesignParams& params, const orbit::TheoremContext& ctx,
                                      const srg::Graph& bg, const srg::SrgParams& bg_params, int max_enum_dim) {
  InvolutionAnalysis a;
  a.inv = inv;
  const auto& act = inv.action;
  a.involutive = orbit::is_identity(orbit::compose(act.point_perm, act.point_perm)) &&
                 orbit::is_identity(orbit::compose(act.block_perm, act.block_perm));
  a.om = orbit::orbit_matrix(inc, std::span<const orbit::DesignAction>(&act, 1));
  a.equations = orbit::verify_om(a.om, params);
  const orbit::QuotientMatrix qm = orbit::quotient_matrix(bg, a.om.block_orbits, bg_params);
  a.equations.merge(qm.report);
  const auto [x, y] = *ctx.qs_pair;
  a.equations.merge(orbit::verify_coupling(a.om, qm.R, x, y, params.k, 1));
  a.representative_independent = orbit::representative_independent(inc, a.om);
  a.columns = orbit::nonfixed_code(a.om, orbit::Axis::columns, 2, true, ctx);
  a.rows = orbit::nonfixed_code(a.om, orbit::Axis::rows, 2, true, ctx);
  a.column_report = report_for(a.columns.code, max_enum_dim, 1);
  a.row_report = report_for(a.rows.code, max_enum_dim, 1);
  return a;
}

auto class_key(const InvolutionAnalysis& a) {
  const auto& c = a.column_report;
  const auto& r = a.row_report;
  return std::make_tuple(a.inv.fixed.f, a.inv.fixed.h, -c.k, c.n, c.min_distance.value_or(-1), c.weight_distribution,
                         -r.k, r.n, r.min_distance.value_or(-1), r.weight_distribution);
}

ordered_json orbit_code_json(const orbit::OrbitCode& oc, const code::CodeReport& r) {
  return {{"ambient_length", oc.ambient_length},
          {"effective_length", oc.effective_length},
          {"self_orthogonal_guaranteed", oc.self_orthogonal_guaranteed},
          {"doubly_even_guaranteed", oc.doubly_even_guaranteed},
          {"warnings", oc.warnings},
          {"report", report_json(r)}};
}

ordered_json map_json(const orbit::SemilinearMap& m) {
  return {{"frobenius", m.frobenius},
          {"A", std::vector<int>(m.A.begin(), m.A.end())},
          {"t", std::vector<int>(m.t.begin(), m.t.end())}};
}

ordered_json violations_json(const orbit::VerificationReport& rep) {
  ordered_json by_eq = ordered_json::object();
  for (const char* eq : orbit::kEquations) by_eq[eq] = rep.count(eq);
  return by_eq;
}

ordered_json reference_json(const InvolutionClass& cls, const code::CodeReport& col) {
  for (const auto& row : reference_rows()) {
    if (row.h != cls.fixed.h) continue;
    ordered_json codes = ordered_json::array();
    bool listed = false;
    for (const auto& [n, k, d] : row.codes) {
      const auto opt = code::optimality_check(n, k, d);
      codes.push_back({{"parameters", {n, k, d}}, {"optimality", code::optimality_name(opt)}});
      listed = listed || (col.n == n && col.k == k && col.min_distance == d);
    }
    return {{"matched_by", "fixed_blocks"},
            {"fixed_points", row.f},
            {"fixed_blocks", row.h},
            {"codes", codes},
            {"column_code_listed", listed}};
  }
  return nullptr;
}

}  // namespace

Example14 run_example14(const design::IncidenceStructure& inc, int q, int threads, int max_enum_dim) {
  Example14 ex;
  ex.q = q;
  ex.params = design::verify_design(inc, 2);
  const design::IntersectionProfile prof = design::intersection_profile(inc, threads);
  require(prof.quasi_symmetric(), ErrorKind::invalid_argument, "design is not quasi-symmetric");
  ex.qs_pair = *prof.qs_pair;
  const orbit::TheoremContext ctx{ex.params, prof.qs_pair};

  const orbit::BlockGraph bg = orbit::block_graph(inc, ex.qs_pair.second);
  require(bg.srg.has_value(), ErrorKind::verification, "block graph is not strongly regular");
  ex.block_graph_connected = bg.connected;
  ex.block_graph_srg = *bg.srg;

  const std::vector<orbit::Involution> found = orbit::find_involutions(q, inc, threads);
  ex.analyses.resize(found.size());
  parallel_chunks(found.size(), threads, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      ex.analyses[i] = analyze_involution(inc, found[i], ex.params, ctx, bg.graph, ex.block_graph_srg, max_enum_dim);
  });

  std::vector<std::size_t> order(ex.analyses.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return class_key(ex.analyses[a]) < class_key(ex.analyses[b]);
  });
  for (std::size_t idx : order) {
    const auto& a = ex.analyses[idx];
    if (ex.classes.empty() || class_key(ex.analyses[ex.classes.back().members.front()]) != class_key(a))
      ex.classes.push_back({a.inv.fixed, {}, 0, 0});
    auto& cls = ex.classes.back();
    cls.members.push_back(idx);
    ++(a.inv.map.frobenius ? cls.frobenius : cls.linear);
  }
  for (auto& cls : ex.classes) std::sort(cls.members.begin(), cls.members.end());
  return ex;
}

long long Example14::checks() const {
  long long n = 0;
  for (const auto& a : analyses) n += a.equations.checks;
  return n;
}

long long Example14::violations() const {
  long long n = 0;
  for (const auto& a : analyses) n += static_cast<long long>(a.equations.violations.size());
  return n;
}

long long Example14::violations(const std::string& equation) const {
  long long n = 0;
  for (const auto& a : analyses) n += a.equations.count(equation);
  return n;
}

bool Example14::ok() const {
  return std::all_of(analyses.begin(), analyses.end(), [](const InvolutionAnalysis& a) {
    return a.equations.ok() && a.involutive && a.representative_independent;
  });
}

std::string Example14::json() const {
  ordered_json j;
  j["q"] = q;
  j["design"] = params_json(params);
  j["intersection_numbers"] = {qs_pair.first, qs_pair.second};
  j["block_graph"] = {{"connected", block_graph_connected},
                      {"srg",
                       {block_graph_srg.v, block_graph_srg.K, block_graph_srg.lambda, block_graph_srg.mu}}};
  j["involutions"] = analyses.size();
  ordered_json eq;
  eq["checks"] = checks();
  eq["violations"] = violations();
  ordered_json by_eq = ordered_json::object();
  for (const char* e : orbit::kEquations) by_eq[e] = violations(e);
  eq["by_equation"] = by_eq;
  eq["all_involutive"] =
      std::all_of(analyses.begin(), analyses.end(), [](const InvolutionAnalysis& a) { return a.involutive; });
  eq["representative_independent"] = std::all_of(
      analyses.begin(), analyses.end(), [](const InvolutionAnalysis& a) { return a.representative_independent; });
  j["verification"] = eq;
  j["length_convention"] = "effective length = non-fixed orbits minus coordinates that are zero in every spanning vector";
  ordered_json classes_json = ordered_json::array();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto& cls = classes[c];
    const auto& rep = analyses[cls.members.front()];
    classes_json.push_back({{"class", c},
                            {"fixed_points", cls.fixed.f},
                            {"fixed_blocks", cls.fixed.h},
                            {"involutions", cls.members.size()},
                            {"linear", cls.linear},
                            {"frobenius", cls.frobenius},
                            {"representative", cls.members.front()},
                            {"point_orbits", rep.om.m()},
                            {"block_orbits", rep.om.n()},
                            {"column_code", orbit_code_json(rep.columns, rep.column_report)},
                            {"row_code", orbit_code_json(rep.rows, rep.row_report)},
                            {"reference", reference_json(cls, rep.column_report)}});
  }
  j["classes"] = classes_json;
  return j.dump(2) + "\n";
}

std::string Example14::text() const {
  std::ostringstream s;
  s << fmt("involutions of BH(%d): %d-(%d,%d,%d) design, b=%d, intersection numbers %d %d\n", q, params.t,
           params.v, params.k, params.lambda, params.b, qs_pair.first, qs_pair.second);
  s << fmt("block graph: SRG(%lld,%lld,%lld,%lld)%s\n", block_graph_srg.v, block_graph_srg.K,
           block_graph_srg.lambda, block_graph_srg.mu, block_graph_connected ? ", connected" : ", not connected");
  s << "involutions found: " << analyses.size() << "\n\n";

  auto table = [&](const char* title, bool columns) {
    s << title << "\n";
    s << fmt("%4s %4s %6s %6s %6s %8s %9s %-12s %4s %4s %10s %10s  %s\n", "f", "h", "count", "linear", "frob",
             "ambient", "effective", "code", "s.o.", "d.e.", "two-weight", "projective", "optimality");
    for (const auto& cls : classes) {
      const auto& a = analyses[cls.members.front()];
      const auto& oc = columns ? a.columns : a.rows;
      const auto& r = columns ? a.column_report : a.row_report;
      s << fmt("%4d %4d %6zu %6d %6d %8d %9d %-12s %4s %4s %10s %10s  %s\n", cls.fixed.f, cls.fixed.h,
               cls.members.size(), cls.linear, cls.frobenius, oc.ambient_length, oc.effective_length,
               code_params(r).c_str(), yes_no(r.self_orthogonal), yes_no(r.doubly_even), yes_no(r.two_weight),
               yes_no(r.projective), code::optimality_name(r.optimality));
    }
    s << "\n";
  };
  table("column codes of the non-fixed part", true);
  table("row codes of the non-fixed part", false);

  s << "column code weights\n";
  for (std::size_t c = 0; c < classes.size(); ++c)
    s << fmt("  class %zu (f=%d h=%d): ", c, classes[c].fixed.f, classes[c].fixed.h)
      << distribution_text(analyses[classes[c].members.front()].column_report) << "\n";
  s << "\n";

  s << "equations: " << checks() << " checks, " << violations() << " violations";
  for (const char* e : orbit::kEquations) s << " " << e << ":" << violations(e);
  s << "\n";
  s << "result: " << (ok() ? "ok" : "FAILED") << "\n";
  return s.str();
}

std::vector<std::string> write_example14(const Example14& ex, const std::string& dir) {
  ensure_dir(dir);
  std::vector<std::string> written;
  write_text(dir, "summary.txt", ex.text(), written);
  write_text(dir, "summary.json", ex.json(), written);

  std::vector<int> class_of(ex.analyses.size(), -1);
  for (std::size_t c = 0; c < ex.classes.size(); ++c)
    for (std::size_t m : ex.classes[c].members) class_of[m] = static_cast<int>(c);
  ordered_json all = ordered_json::array();
  for (std::size_t i = 0; i < ex.analyses.size(); ++i) {
    const auto& a = ex.analyses[i];
    all.push_back({{"index", i},
                   {"map", map_json(a.inv.map)},
                   {"fixed_points", a.inv.fixed.f},
                   {"fixed_blocks", a.inv.fixed.h},
                   {"class", class_of[i]},
                   {"involutive", a.involutive},
                   {"representative_independent", a.representative_independent},
                   {"checks", a.equations.checks},
                   {"violations", violations_json(a.equations)}});
  }
  write_text(dir, "involutions.json", all.dump(1) + "\n", written);

  for (std::size_t c = 0; c < ex.classes.size(); ++c) {
    const auto& cls = ex.classes[c];
    const auto& a = ex.analyses[cls.members.front()];
    const std::string stem = fmt("class%02zu_f%d_h%d", c, cls.fixed.f, cls.fixed.h);
    write_text(dir, stem + ".perm", orbit::perm_to_string(a.inv.action.point_perm), written);
    write_text(dir, stem + ".om", orbit::om_to_string(a.om), written);
    write_text(dir, stem + "_columns.gen", code::gen_to_string(a.columns.code), written);
    write_text(dir, stem + "_columns.json", orbit_code_json(a.columns, a.column_report).dump(2) + "\n", written);
    write_text(dir, stem + "_rows.gen", code::gen_to_string(a.rows.code), written);
    write_text(dir, stem + "_rows.json", orbit_code_json(a.rows, a.row_report).dump(2) + "\n", written);
  }
  return written;
}

}  // namespace qsc::workflows
