#include "qsc/design.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "qsc/error.hpp"
#include "qsc/parallel.hpp"

namespace qsc::design {

IncidenceStructure::IncidenceStructure(int v, std::vector<std::vector<int>> blocks)
    : v_(v), blocks_(std::move(blocks)) {
  require(v >= 0, ErrorKind::invalid_argument, "negative point count");
  incidence_ = BitMatrix(blocks_.size(), static_cast<std::size_t>(v));
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const auto& blk = blocks_[i];
    for (std::size_t j = 0; j < blk.size(); ++j) {
      require(blk[j] >= 0 && blk[j] < v, ErrorKind::invalid_argument,
              "block " + std::to_string(i) + ": point index " + std::to_string(blk[j]) + " out of range [0," +
                  std::to_string(v) + ")");
      if (j > 0) {
        require(blk[j] != blk[j - 1], ErrorKind::invalid_argument,
                "block " + std::to_string(i) + ": duplicate point " + std::to_string(blk[j]));
        require(blk[j] > blk[j - 1], ErrorKind::invalid_argument, "block " + std::to_string(i) + " is not sorted");
      }
      incidence_.set(i, blk[j]);
    }
  }
}

std::vector<std::pair<int, int>> IncidenceStructure::repeated_blocks() const {
  std::map<std::vector<int>, int> first;
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < b(); ++i) {
    auto [it, inserted] = first.emplace(blocks_[i], i);
    if (!inserted) out.emplace_back(it->second, i);
  }
  return out;
}

DesignParams verify_design(const IncidenceStructure& inc, int t) {
  require(t == 1 || t == 2, ErrorKind::invalid_argument, "only t in {1, 2} is supported");
  require(inc.b() > 0 && inc.v() > 0, ErrorKind::verification, "empty incidence structure");

  const int k = static_cast<int>(inc.block(0).size());
  for (int i = 1; i < inc.b(); ++i)
    require(static_cast<int>(inc.block(i).size()) == k, ErrorKind::verification,
            "block " + std::to_string(i) + " has size " + std::to_string(inc.block(i).size()) + ", expected " +
                std::to_string(k));

  const BitMatrix points = inc.point_by_block();
  const int r = points.row_weight(0);
  for (int p = 1; p < inc.v(); ++p)
    require(points.row_weight(p) == r, ErrorKind::verification,
            "point " + std::to_string(p) + " lies on " + std::to_string(points.row_weight(p)) + " blocks, expected " +
                std::to_string(r));

  DesignParams out{t, inc.v(), k, r, inc.b(), r};
  if (t == 2) {
    require(inc.v() >= 2, ErrorKind::verification, "a 2-design needs at least two points");
    const int lambda = and_popcount(points.row(0), points.row(1));
    for (int p = 0; p < inc.v(); ++p)
      for (int q = p + 1; q < inc.v(); ++q) {
        const int c = and_popcount(points.row(p), points.row(q));
        require(c == lambda, ErrorKind::verification,
                "points {" + std::to_string(p) + "," + std::to_string(q) + "} lie on " + std::to_string(c) +
                    " common blocks, expected " + std::to_string(lambda));
      }
    out.lambda = lambda;
    require(k >= 2, ErrorKind::verification, "block size must be at least 2");
    require(static_cast<long long>(r) * (k - 1) == static_cast<long long>(lambda) * (inc.v() - 1),
            ErrorKind::verification, "r(k-1) != lambda(v-1)");
  }
  require(static_cast<long long>(inc.b()) * k == static_cast<long long>(inc.v()) * r, ErrorKind::verification,
          "bk != vr");
  return out;
}

IntersectionProfile intersection_profile(const IncidenceStructure& inc, int threads) {
  require(inc.b() >= 2, ErrorKind::invalid_argument, "intersection profile needs at least two blocks");
  const BitMatrix& m = inc.incidence();
  const std::size_t b = inc.b();
  const std::size_t chunks = chunk_count(b, threads);
  std::vector<std::vector<bool>> seen(chunks, std::vector<bool>(inc.v() + 1, false));
  parallel_chunks(b, threads, [&](std::size_t w, std::size_t begin, std::size_t end) {
    auto& mine = seen[w];
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t j = i + 1; j < b; ++j) mine[and_popcount(m.row(i), m.row(j))] = true;
  });
  IntersectionProfile prof;
  for (int s = 0; s <= inc.v(); ++s)
    if (std::any_of(seen.begin(), seen.end(), [s](const auto& v) { return v[s]; })) prof.numbers.push_back(s);
  if (prof.numbers.size() == 2) prof.qs_pair = std::pair{prof.numbers[0], prof.numbers[1]};
  return prof;
}

IncidenceStructure complement(const IncidenceStructure& inc) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(inc.b());
  for (int i = 0; i < inc.b(); ++i) {
    std::vector<int> blk;
    for (int p = 0; p < inc.v(); ++p)
      if (!inc.incidence().get(i, p)) blk.push_back(p);
    blocks.push_back(std::move(blk));
  }
  return IncidenceStructure(inc.v(), std::move(blocks));
}

IncidenceStructure sr_compose(const IncidenceStructure& d1, const DesignParams& d1_params,
                              const galois::LineSystem& lines,
                              std::span<const galois::QuotientLabeling> labelings) {
  require(!lines.classes.empty(), ErrorKind::invalid_argument, "resolvable design has no parallel classes");
  require(labelings.size() == lines.classes.size(), ErrorKind::invalid_argument,
          "need exactly one labelling per parallel class");
  const int k2 = static_cast<int>(lines.classes[0].lines.at(0).size());
  int v2 = 0;
  for (const auto& line : lines.classes[0].lines) v2 += static_cast<int>(line.size());
  require(v2 == d1.v() * k2, ErrorKind::invalid_argument,
          "dimension mismatch: v2=" + std::to_string(v2) + " but v1*k2=" + std::to_string(d1.v() * k2));

  std::vector<std::vector<int>> blocks;
  blocks.reserve(static_cast<std::size_t>(d1.b()) * lines.classes.size());
  for (std::size_t c = 0; c < lines.classes.size(); ++c) {
    const auto& cls = lines.classes[c];
    const auto& lab = labelings[c];
    require(static_cast<int>(cls.lines.size()) == d1.v(), ErrorKind::invalid_argument,
            "parallel class " + std::to_string(c) + " does not have v1 lines");
    // line_of_label[l] = index of the line whose points all carry label l
    std::vector<int> line_of_label(d1.v(), -1);
    for (std::size_t l = 0; l < cls.lines.size(); ++l) {
      const auto& line = cls.lines[l];
      require(static_cast<int>(line.size()) == k2, ErrorKind::invalid_argument, "resolvable design has mixed block sizes");
      const int label = lab.label.at(line.front());
      for (int p : line)
        require(lab.label.at(p) == label, ErrorKind::invalid_argument, "labelling is not constant on a line");
      require(label >= 0 && label < d1.v() && line_of_label[label] < 0, ErrorKind::invalid_argument,
              "labelling is not a bijection between lines and D1 points");
      line_of_label[label] = static_cast<int>(l);
    }
    for (const auto& blk : d1.blocks()) {
      std::vector<int> pts;
      for (int label : blk) {
        const auto& line = cls.lines[line_of_label[label]];
        pts.insert(pts.end(), line.begin(), line.end());
      }
      std::sort(pts.begin(), pts.end());
      blocks.push_back(std::move(pts));
    }
  }
  IncidenceStructure out(v2, std::move(blocks));

  // r2 is the class count; lambda2 is recounted from the lines.
  const int r2 = static_cast<int>(lines.classes.size());
  std::vector<std::vector<int>> all_lines;
  for (const auto& cls : lines.classes) all_lines.insert(all_lines.end(), cls.lines.begin(), cls.lines.end());
  const DesignParams p2 = verify_design(IncidenceStructure(v2, all_lines), 2);
  require(p2.r == r2, ErrorKind::verification, "resolvable design replication number mismatch");

  const DesignParams p = verify_design(out, 2);
  const int expected_lambda = d1_params.r * p2.lambda + d1_params.lambda * (p2.r - p2.lambda);
  require(p.k == d1_params.k * k2, ErrorKind::verification, "composed block size is not k1*k2");
  require(p.lambda == expected_lambda, ErrorKind::verification,
          "composed lambda " + std::to_string(p.lambda) + " differs from r1*lambda2 + lambda1*(r2-lambda2) = " +
              std::to_string(expected_lambda));
  return out;
}

IncidenceStructure arc_translate_design(int q) {
  const galois::AffineSpace plane(2, q);
  const std::vector<int> arc = galois::denniston_arc(q);
  std::vector<std::vector<int>> blocks;
  for (int u = 0; u < plane.size(); ++u) {
    const galois::AffinePoint shift = plane.point(u);
    std::vector<int> blk;
    for (int a : arc) blk.push_back(plane.index(plane.add(plane.point(a), shift)));
    std::sort(blk.begin(), blk.end());
    blocks.push_back(std::move(blk));
  }
  return IncidenceStructure(plane.size(), std::move(blocks));
}

IncidenceStructure blokhuis_haemers(int q, int threads) {
  require(q == 4 || q == 8, ErrorKind::invalid_argument,
          "Blokhuis-Haemers construction requires q a power of 2 with q >= 4 (supported: 4, 8), got q=" +
              std::to_string(q));
  const IncidenceStructure d1 = arc_translate_design(q);
  const DesignParams p1 = verify_design(d1, 2);
  require(p1.b == p1.v && p1.v == q * q && p1.k == q * (q - 1) / 2 && p1.lambda == q * (q - 2) / 4,
          ErrorKind::verification, "arc translates do not form a symmetric 2-(q^2, q(q-1)/2, q(q-2)/4) design");

  const galois::LineSystem lines = galois::ag3_lines(q);
  std::vector<galois::QuotientLabeling> labelings;
  for (const auto& cls : lines.classes) labelings.push_back(galois::quotient_labeling(q, cls.direction));
  IncidenceStructure out = sr_compose(d1, p1, lines, labelings);

  require(out.repeated_blocks().empty(), ErrorKind::verification, "construction produced repeated blocks");
  const IntersectionProfile prof = intersection_profile(out, threads);
  const std::pair<int, int> expected{q * q * (q - 2) / 4, q * q * (q - 1) / 4};
  require(prof.qs_pair == expected, ErrorKind::verification, "constructed design is not quasi-symmetric with x=" +
                                                                 std::to_string(expected.first) + ", y=" +
                                                                 std::to_string(expected.second));
  return out;
}

SelfDualContainment self_dual_containment_conditions(const DesignParams& p, const IntersectionProfile& prof) {
  SelfDualContainment c;
  c.v_mod8 = p.v % 8 == 0;
  c.k_mod4 = p.k % 4 == 0;
  c.intersections_even = std::all_of(prof.numbers.begin(), prof.numbers.end(), [](int s) { return s % 2 == 0; });
  return c;
}

namespace {

bool is_comment(const std::string& line) {
  return !line.empty() && line[0] == '#';
}

bool next_content_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_comment(line)) continue;
    return true;
  }
  return false;
}

[[noreturn]] void parse_error(int lineno, const std::string& what) {
  fail(ErrorKind::parse, "line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

IncidenceStructure read_incidence(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) fail(ErrorKind::parse, "empty input, expected 'QSINC 1' header");
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "QSINC 1") parse_error(lineno, "expected 'QSINC 1' header");

  if (!next_content_line(in, line, lineno)) parse_error(lineno, "missing 'v=<int> b=<int>' line");
  int v = -1, b = -1;
  {
    char tail = 0;
    if (std::sscanf(line.c_str(), "v=%d b=%d%c", &v, &b, &tail) != 2 || v < 0 || b < 0)
      parse_error(lineno, "malformed size line '" + line + "'");
  }

  std::vector<std::vector<int>> blocks;
  blocks.reserve(b);
  for (int i = 0; i < b; ++i) {
    if (!next_content_line(in, line, lineno)) parse_error(lineno, "expected " + std::to_string(b) + " blocks");
    std::istringstream ss(line);
    std::vector<int> blk;
    std::string tok;
    while (ss >> tok) {
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(tok, &used);
      } catch (const std::exception&) {
        parse_error(lineno, "bad point index '" + tok + "'");
      }
      if (used != tok.size()) parse_error(lineno, "bad point index '" + tok + "'");
      if (value < 0 || value >= v)
        parse_error(lineno, "point index " + std::to_string(value) + " out of range for v=" + std::to_string(v));
      if (!blk.empty() && value == blk.back()) parse_error(lineno, "duplicate point " + std::to_string(value));
      if (!blk.empty() && value < blk.back()) parse_error(lineno, "block indices are not sorted");
      blk.push_back(value);
    }
    blocks.push_back(std::move(blk));
  }
  while (next_content_line(in, line, lineno))
    if (line.find_first_not_of(" \t") != std::string::npos) parse_error(lineno, "trailing data after last block");
  return IncidenceStructure(v, std::move(blocks));
}

IncidenceStructure read_incidence_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::io, "cannot open " + path);
  return read_incidence(in);
}

void write_incidence(std::ostream& out, const IncidenceStructure& inc) {
  out << "QSINC 1\n" << "v=" << inc.v() << " b=" << inc.b() << "\n";
  for (const auto& blk : inc.blocks()) {
    for (std::size_t j = 0; j < blk.size(); ++j) out << (j ? " " : "") << blk[j];
    out << "\n";
  }
}

std::string incidence_to_string(const IncidenceStructure& inc) {
  std::ostringstream ss;
  write_incidence(ss, inc);
  return ss.str();
}

}  // namespace qsc::design
