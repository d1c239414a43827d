#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qsc/code.hpp"
#include "qsc/design.hpp"
#include "qsc/orbit.hpp"
#include "qsc/srg.hpp"

namespace qsc::workflows {

// Incidence-code study of one quasi-symmetric design.
struct Example13 {
  int q = 0;  // 0 when the design was supplied rather than constructed
  design::DesignParams params;
  design::IntersectionProfile profile;
  design::SelfDualContainment containment;
  int repeated_blocks = 0;
  code::PrimeFieldCode incidence_code;
  code::PrimeFieldCode transpose_code;
  code::CodeReport incidence_report;
  code::CodeReport transpose_report;
  int rains = 0;

  std::string json() const;
  std::string text() const;
};

Example13 run_example13(const design::IncidenceStructure& inc, int threads, int max_enum_dim);

/// Writes design.inc, the two .gen/.json code pairs and summary.{txt,json};
/// returns the file names written, relative to `dir`.
std::vector<std::string> write_example13(const Example13& ex, const design::IncidenceStructure& inc,
                                         const std::string& dir);

struct InvolutionAnalysis {
  orbit::Involution inv;
  orbit::OrbitMatrix om;
  orbit::VerificationReport equations;  // all of orbit::kEquations
  bool involutive = false;
  bool representative_independent = false;
  orbit::OrbitCode columns;
  orbit::OrbitCode rows;
  code::CodeReport column_report;
  code::CodeReport row_report;
};

struct InvolutionClass {
  orbit::FixedStructure fixed;
  std::vector<std::size_t> members;  // indices into Example14::analyses, ascending
  int linear = 0;
  int frobenius = 0;
};

struct Example14 {
  int q = 0;
  design::DesignParams params;
  std::pair<int, int> qs_pair;
  bool block_graph_connected = false;
  srg::SrgParams block_graph_srg;
  std::vector<InvolutionAnalysis> analyses;  // enumeration order
  std::vector<InvolutionClass> classes;      // sorted by (f, h), then code parameters

  long long checks() const;
  long long violations() const;
  long long violations(const std::string& equation) const;
  /// Zero violations and every map an involution with representative-independent counts.
  bool ok() const;

  std::string json() const;
  std::string text() const;
};

Example14 run_example14(const design::IncidenceStructure& inc, int q, int threads, int max_enum_dim);

/// summary.{txt,json}, involutions.json and per-class .perm/.om/.gen/.json files.
std::vector<std::string> write_example14(const Example14& ex, const std::string& dir);

}  // namespace qsc::workflows
