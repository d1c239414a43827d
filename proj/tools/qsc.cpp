// qsc command-line tool. Exit codes: 0 success, 1 verification failure,
// 2 usage or input error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsc/qsc.h"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

struct Failure {
  int code;
};

int exit_code_for(qsc_status s) {
  switch (s) {
    case QSC_OK: return kExitOk;
    case QSC_ERR_VERIFICATION:
    case QSC_ERR_INTERNAL: return kExitVerification;
    default: return kExitUsage;
  }
}

void check(qsc_status s) {
  if (s == QSC_OK) return;
  std::cerr << "qsc: " << qsc_status_name(s) << ": " << qsc_last_error() << "\n";
  throw Failure{exit_code_for(s)};
}

[[noreturn]] void usage_error(const std::string& msg) {
  std::cerr << "qsc: " << msg << "\n";
  throw Failure{kExitUsage};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Design = std::unique_ptr<qsc_design, Deleter<qsc_design, qsc_design_free>>;
using Code = std::unique_ptr<qsc_code, Deleter<qsc_code, qsc_code_free>>;
using Perm = std::unique_ptr<qsc_perm, Deleter<qsc_perm, qsc_perm_free>>;
using OrbitMatrix = std::unique_ptr<qsc_orbit_matrix, Deleter<qsc_orbit_matrix, qsc_orbit_matrix_free>>;
using Involutions = std::unique_ptr<qsc_involutions, Deleter<qsc_involutions, qsc_involutions_free>>;
using Graph = std::unique_ptr<qsc_graph, Deleter<qsc_graph, qsc_graph_free>>;

// Takes ownership of a string returned by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  qsc_string_free(s);
  return out;
}

struct Options {
  int threads = 1;
  int max_enum_dim = 28;
  std::string manifest;
};

class Session {
 public:
  explicit Session(std::vector<std::string> argv) : argv_(std::move(argv)) {}

  void input(const std::string& path) { inputs_.emplace_back(path, digest(path)); }
  void output(const std::string& path) { outputs_.emplace_back(path, digest(path)); }

  void write(const std::string& path, const std::string& content) {
    check(qsc_write_file(path.c_str(), content.c_str()));
    output(path);
  }

  void write_manifest(const std::string& path) const {
    if (path.empty()) return;
    ordered_json j;
    j["tool"] = "qsc";
    j["version"] = qsc_version();
    j["command"] = argv_;
    auto files = [](const auto& list) {
      ordered_json arr = ordered_json::array();
      for (const auto& [p, d] : list) arr.push_back({{"path", p}, {"sha256", d}});
      return arr;
    };
    j["inputs"] = files(inputs_);
    j["outputs"] = files(outputs_);
    check(qsc_write_file(path.c_str(), (j.dump(2) + "\n").c_str()));
  }

 private:
  static std::string digest(const std::string& path) {
    char* hex = nullptr;
    check(qsc_sha256_file(path.c_str(), &hex));
    return take(hex);
  }

  std::vector<std::string> argv_;
  std::vector<std::pair<std::string, std::string>> inputs_;
  std::vector<std::pair<std::string, std::string>> outputs_;
};

Design load_design(Session& s, const std::string& path) {
  qsc_design* d = nullptr;
  check(qsc_design_read(path.c_str(), &d));
  s.input(path);
  return Design(d);
}

Code load_code(Session& s, const std::string& path) {
  qsc_code* c = nullptr;
  check(qsc_code_read(path.c_str(), &c));
  s.input(path);
  return Code(c);
}

int infer_q(const qsc_design* d, int q) {
  if (q != 0) return q;
  switch (qsc_design_points(d)) {
    case 64: return 4;
    case 512: return 8;
    default: usage_error("cannot infer q from the number of points; pass --q");
  }
}

std::string params_text(const qsc_design_params& p) {
  std::ostringstream s;
  s << p.t << "-(" << p.v << "," << p.k << "," << p.lambda << ") design, b=" << p.b << ", r=" << p.r;
  return s.str();
}

std::vector<int> intersections(const qsc_design* d, int threads) {
  size_t count = 0;
  check(qsc_design_intersections(d, threads, nullptr, 0, &count));
  std::vector<int> out(count);
  check(qsc_design_intersections(d, threads, out.data(), out.size(), &count));
  return out;
}

std::string set_text(const std::vector<int>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

// Full report when the dimension fits the guard, structural report otherwise.
std::string code_report(const qsc_code* c, const Options& o, bool structure_only) {
  int k = 0;
  check(qsc_code_info(c, nullptr, nullptr, &k));
  char* json = nullptr;
  if (structure_only || k > o.max_enum_dim) {
    if (!structure_only)
      std::cerr << "qsc: dimension " << k << " exceeds the enumeration guard " << o.max_enum_dim
                << "; weight-dependent fields are null (raise QSC_MAX_ENUM_DIM to enumerate)\n";
    check(qsc_code_structure_json(c, &json));
  } else {
    check(qsc_code_report_json(c, o.max_enum_dim, o.threads, &json));
  }
  return take(json);
}

void emit_report(Session& s, const std::string& report, const std::string& out) {
  if (out.empty()) std::cout << report;
  else s.write(out, report);
}

std::string report_line(const std::string& report) {
  const auto j = ordered_json::parse(report);
  std::ostringstream s;
  s << "[" << j["length"] << "," << j["dimension"] << ",";
  if (j["min_distance"].is_null()) s << "?";
  else s << j["min_distance"];
  s << "] self-orthogonal " << j["self_orthogonal"] << ", doubly even " << j["doubly_even"] << ", two-weight "
    << j["two_weight"] << ", projective " << j["projective"] << ", optimality " << j["optimality"];
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  if (!args.empty()) args[0] = "qsc";
  Session session(args);
  Options opt;

  CLI::App app{"Quasi-symmetric designs, self-orthogonal codes and orbit matrices"};
  app.require_subcommand(1);
  app.add_option("--threads", opt.threads, "worker threads")->envname("QSC_THREADS")->check(CLI::Range(1, 256));
  app.add_option("--max-enum-dim", opt.max_enum_dim, "largest dimension enumerated for weight distributions")
      ->envname("QSC_MAX_ENUM_DIM")
      ->check(CLI::Range(1, 40));
  app.add_option("--manifest", opt.manifest, "write a run manifest to this file");
  app.set_version_flag("--version", std::string(qsc_version()));

  int q = 0;
  std::string in_path, out_path, json_path, gen_path, graph_path, design_path, dir;
  bool transpose = false, structure_only = false, drop_zero = false;
  int t = 2, p = 2;
  std::string axis = "columns";
  std::vector<std::string> perms;
  long long tw_n = 0, tw_k = 0, tw_q = 2, tw_w1 = 0, tw_w2 = 0;

  auto* construct = app.add_subcommand("construct", "construct a design");
  construct->require_subcommand(1);
  auto* bh = construct->add_subcommand("bh", "quasi-symmetric design on AG(3,q) from a Denniston arc");
  bh->add_option("--q", q, "field order (4 or 8)")->required();
  bh->add_option("-o,--output", out_path, "write the design (.inc)");

  auto* design = app.add_subcommand("design", "design utilities");
  design->require_subcommand(1);
  auto* verify = design->add_subcommand("verify", "verify a t-design and report its parameters");
  verify->add_option("DESIGN", in_path, ".inc file")->required();
  verify->add_option("--t", t, "strength (1 or 2)");
  verify->add_option("--json", json_path, "write a JSON report");

  auto* code = app.add_subcommand("code", "linear codes");
  code->require_subcommand(1);
  auto* from_inc = code->add_subcommand("from-incidence", "binary code spanned by the incidence matrix rows");
  from_inc->add_option("DESIGN", in_path, ".inc file")->required();
  from_inc->add_flag("--transpose", transpose, "use the point-by-block matrix");
  from_inc->add_option("-o,--output", out_path, "write the JSON report");
  from_inc->add_option("--gen", gen_path, "write the generator matrix (.gen)");
  from_inc->add_flag("--structure-only", structure_only, "skip codeword enumeration");
  auto* analyze = code->add_subcommand("analyze", "analyze a code given by a generator matrix");
  analyze->add_option("CODE", in_path, ".gen file")->required();
  analyze->add_option("-o,--output", out_path, "write the JSON report");
  analyze->add_flag("--structure-only", structure_only, "skip codeword enumeration");

  auto* inv = app.add_subcommand("involutions", "involutory semilinear automorphisms of BH(q)");
  inv->add_option("DESIGN", in_path, ".inc file")->required();
  inv->add_option("--q", q, "field order (inferred from v when omitted)");
  inv->add_option("-o,--output", out_path, "write the list as JSON");
  inv->add_option("--dir", dir, "write one representative .perm per (f, h)");

  auto* om = app.add_subcommand("orbitmat", "orbit matrices");
  om->add_option("DESIGN", in_path, ".inc file");
  om->add_option("--perm", perms, "generator (.perm), repeatable");
  om->add_option("-o,--output", out_path, "write the orbit matrix (.om)");
  om->add_option("--json", json_path, "write the verification report");
  auto* om_code = om->add_subcommand("code", "code of the non-fixed part of an orbit matrix");
  om_code->add_option("MATRIX", in_path, ".om file")->required();
  om_code->add_option("--design", design_path, "the design (.inc)")->required();
  om_code->add_option("--axis", axis, "columns or rows")->check(CLI::IsMember({"columns", "rows"}));
  om_code->add_option("--p", p, "prime (2, 3, 5 or 7)");
  om_code->add_flag("--drop-zero", drop_zero, "delete coordinates that are zero in every spanning vector");
  om_code->add_option("-o,--output", out_path, "write the JSON report");
  om_code->add_option("--gen", gen_path, "write the generator matrix (.gen)");
  om_code->add_option("--info", json_path, "write lengths, guarantees and warnings as JSON");

  auto* srg = app.add_subcommand("srg", "strongly regular graphs");
  srg->require_subcommand(1);
  auto* srg_code = srg->add_subcommand("from-code", "graph of a projective two-weight code");
  srg_code->add_option("CODE", in_path, ".gen file")->required();
  srg_code->add_option("--graph", graph_path, "write the graph");
  srg_code->add_option("--design", design_path, "write the symmetric design (needs lambda == mu)");
  srg_code->add_option("--json", json_path, "write the parameters as JSON");
  auto* srg_params = srg->add_subcommand("params", "SRG parameters of a two-weight code");
  srg_params->add_option("--n", tw_n)->required();
  srg_params->add_option("--k", tw_k)->required();
  srg_params->add_option("--q", tw_q);
  srg_params->add_option("--w1", tw_w1)->required();
  srg_params->add_option("--w2", tw_w2)->required();

  auto* ex13 = app.add_subcommand("example13", "incidence and transpose codes of BH(q)");
  ex13->add_option("--q", q, "field order")->default_val(4);
  ex13->add_option("-o,--output", dir, "report directory");

  auto* ex14 = app.add_subcommand("example14", "involutions, orbit matrices and their codes");
  ex14->add_option("DESIGN", in_path, ".inc file")->required();
  ex14->add_option("--q", q, "field order (inferred from v when omitted)");
  ex14->add_option("-o,--output", dir, "report directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  int rc = kExitOk;
  try {
    if (*bh) {
      qsc_design* raw = nullptr;
      check(qsc_design_blokhuis_haemers(q, opt.threads, &raw));
      Design d(raw);
      qsc_design_params dp{};
      check(qsc_design_verify(d.get(), 2, &dp));
      const auto numbers = intersections(d.get(), opt.threads);
      if (!out_path.empty()) {
        check(qsc_design_write(d.get(), out_path.c_str()));
        session.output(out_path);
      }
      std::cout << params_text(dp) << ", intersection numbers " << set_text(numbers) << "\n";
    } else if (*verify) {
      Design d = load_design(session, in_path);
      qsc_design_params dp{};
      check(qsc_design_verify(d.get(), t, &dp));
      const auto numbers = intersections(d.get(), opt.threads);
      std::cout << params_text(dp) << ", intersection numbers " << set_text(numbers)
                << (numbers.size() == 2 ? " (quasi-symmetric)" : "") << "\n";
      if (!json_path.empty()) {
        if (t != 2) usage_error("--json needs --t 2");
        char* json = nullptr;
        check(qsc_design_report_json(d.get(), opt.threads, &json));
        session.write(json_path, take(json));
      }
    } else if (*from_inc) {
      Design d = load_design(session, in_path);
      qsc_code* raw = nullptr;
      check(qsc_code_from_incidence(d.get(), transpose ? 1 : 0, &raw));
      Code c(raw);
      if (!gen_path.empty()) {
        check(qsc_code_write(c.get(), gen_path.c_str()));
        session.output(gen_path);
      }
      const std::string report = code_report(c.get(), opt, structure_only);
      emit_report(session, report, out_path);
      if (!out_path.empty()) std::cout << report_line(report) << "\n";
    } else if (*analyze) {
      Code c = load_code(session, in_path);
      const std::string report = code_report(c.get(), opt, structure_only);
      emit_report(session, report, out_path);
      if (!out_path.empty()) std::cout << report_line(report) << "\n";
    } else if (*inv) {
      Design d = load_design(session, in_path);
      const int qq = infer_q(d.get(), q);
      qsc_involutions* raw = nullptr;
      check(qsc_involutions_find(d.get(), qq, opt.threads, &raw));
      Involutions list(raw);
      const size_t n = qsc_involutions_count(list.get());
      struct Row {
        int linear = 0, frobenius = 0;
        size_t first = 0;
      };
      std::map<std::pair<int, int>, Row> rows;
      for (size_t i = 0; i < n; ++i) {
        int f = 0, h = 0, fr = 0;
        check(qsc_involutions_get(list.get(), i, &f, &h, &fr, nullptr));
        auto [it, fresh] = rows.try_emplace({f, h});
        if (fresh) it->second.first = i;
        ++(fr ? it->second.frobenius : it->second.linear);
      }
      std::cout << n << " involutions\n";
      std::printf("%6s %6s %8s %8s %10s\n", "f", "h", "count", "linear", "frobenius");
      for (const auto& [key, row] : rows)
        std::printf("%6d %6d %8d %8d %10d\n", key.first, key.second, row.linear + row.frobenius, row.linear,
                    row.frobenius);
      std::fflush(stdout);
      if (!out_path.empty()) {
        char* json = nullptr;
        check(qsc_involutions_json(list.get(), &json));
        session.write(out_path, take(json));
      }
      if (!dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec) usage_error("cannot create " + dir);
        for (const auto& [key, row] : rows) {
          qsc_perm* pr = nullptr;
          check(qsc_involutions_get(list.get(), row.first, nullptr, nullptr, nullptr, &pr));
          Perm perm(pr);
          const std::string path =
              (std::filesystem::path(dir) / ("f" + std::to_string(key.first) + "_h" + std::to_string(key.second) +
                                             ".perm"))
                  .string();
          check(qsc_perm_write(perm.get(), path.c_str()));
          session.output(path);
        }
      }
    } else if (*om_code) {
      qsc_orbit_matrix* raw = nullptr;
      check(qsc_orbit_matrix_read(in_path.c_str(), &raw));
      OrbitMatrix m(raw);
      session.input(in_path);
      Design d = load_design(session, design_path);
      qsc_code* craw = nullptr;
      char* info = nullptr;
      check(qsc_orbit_matrix_code(m.get(), d.get(), axis == "rows" ? QSC_AXIS_ROWS : QSC_AXIS_COLUMNS, p,
                                  drop_zero ? 1 : 0, &craw, &info));
      Code c(craw);
      const std::string info_json = take(info);
      for (const auto& w : ordered_json::parse(info_json)["warnings"])
        std::cerr << "qsc: warning: " << w.get<std::string>() << "\n";
      if (!json_path.empty()) session.write(json_path, info_json);
      if (!gen_path.empty()) {
        check(qsc_code_write(c.get(), gen_path.c_str()));
        session.output(gen_path);
      }
      const std::string report = code_report(c.get(), opt, false);
      emit_report(session, report, out_path);
      if (!out_path.empty()) std::cout << report_line(report) << "\n";
    } else if (*om) {
      if (in_path.empty()) usage_error("orbitmat needs a design file");
      if (perms.empty()) usage_error("orbitmat needs at least one --perm");
      Design d = load_design(session, in_path);
      std::vector<Perm> owned;
      std::vector<const qsc_perm*> gens;
      for (const auto& path : perms) {
        qsc_perm* pr = nullptr;
        check(qsc_perm_read(path.c_str(), &pr));
        session.input(path);
        owned.emplace_back(pr);
        gens.push_back(pr);
      }
      qsc_orbit_matrix* raw = nullptr;
      check(qsc_orbit_matrix_compute(d.get(), gens.data(), gens.size(), &raw));
      OrbitMatrix m(raw);
      if (!out_path.empty()) {
        check(qsc_orbit_matrix_write(m.get(), out_path.c_str()));
        session.output(out_path);
      }
      long long violations = 0;
      char* json = nullptr;
      check(qsc_orbit_matrix_verify(m.get(), d.get(), opt.threads, &violations, &json));
      const std::string report = take(json);
      if (!json_path.empty()) session.write(json_path, report);
      int rows = 0, cols = 0;
      check(qsc_orbit_matrix_dims(m.get(), &rows, &cols));
      const auto j = ordered_json::parse(report);
      std::cout << rows << " point orbits, " << cols << " block orbits; " << j["checks"] << " checks, "
                << violations << " violations\n";
      if (violations > 0) rc = kExitVerification;
    } else if (*srg_code) {
      Code c = load_code(session, in_path);
      qsc_graph* raw = nullptr;
      qsc_srg_params sp{};
      check(qsc_srg_from_code(c.get(), &raw, &sp));
      Graph g(raw);
      std::cout << "SRG(" << sp.v << "," << sp.k << "," << sp.lambda << "," << sp.mu << ")\n";
      if (!graph_path.empty()) {
        check(qsc_graph_write(g.get(), graph_path.c_str()));
        session.output(graph_path);
      }
      if (!design_path.empty()) {
        qsc_design* draw = nullptr;
        check(qsc_graph_to_symmetric_design(g.get(), &sp, &draw));
        Design d(draw);
        qsc_design_params dp{};
        check(qsc_design_verify(d.get(), 2, &dp));
        check(qsc_design_write(d.get(), design_path.c_str()));
        session.output(design_path);
        std::cout << "symmetric " << params_text(dp) << "\n";
      }
      if (!json_path.empty()) {
        ordered_json j = {{"v", sp.v}, {"k", sp.k}, {"lambda", sp.lambda}, {"mu", sp.mu}};
        session.write(json_path, j.dump(2) + "\n");
      }
    } else if (*srg_params) {
      qsc_srg_params sp{};
      check(qsc_tw_srg_params(tw_n, tw_k, tw_q, tw_w1, tw_w2, &sp));
      std::cout << "SRG(" << sp.v << "," << sp.k << "," << sp.lambda << "," << sp.mu << ")\n";
    } else if (*ex13) {
      char* summary = nullptr;
      char* outputs = nullptr;
      check(qsc_example13(q, opt.threads, opt.max_enum_dim, dir.empty() ? nullptr : dir.c_str(), &summary,
                          &outputs));
      std::cout << take(summary);
      std::istringstream names(take(outputs));
      for (std::string name; std::getline(names, name);)
        session.output((std::filesystem::path(dir) / name).string());
      if (!dir.empty() && opt.manifest.empty()) opt.manifest = (std::filesystem::path(dir) / "manifest.json").string();
    } else if (*ex14) {
      Design d = load_design(session, in_path);
      const int qq = infer_q(d.get(), q);
      char* summary = nullptr;
      char* outputs = nullptr;
      int ok = 0;
      check(qsc_example14(d.get(), qq, opt.threads, opt.max_enum_dim, dir.c_str(), &summary, &outputs, &ok));
      std::cout << take(summary);
      std::istringstream names(take(outputs));
      for (std::string name; std::getline(names, name);)
        session.output((std::filesystem::path(dir) / name).string());
      if (opt.manifest.empty()) opt.manifest = (std::filesystem::path(dir) / "manifest.json").string();
      if (!ok) rc = kExitVerification;
    }
    session.write_manifest(opt.manifest);
  } catch (const Failure& f) {
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "qsc: " << e.what() << "\n";
    return kExitVerification;
  }
  return rc;
}
