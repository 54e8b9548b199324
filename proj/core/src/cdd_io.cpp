#include "monocone/cdd_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "monocone/error.hpp"
#include "monocone/subset_lattice.hpp"

namespace monocone {

namespace {

void write_header(std::ostream& out, const std::string& name, int n) {
  if (!name.empty()) out << "* cone: " << name << '\n';
  if (n > 0) out << "* systems n=" << n << '\n';
}

void write_block(std::ostream& out, const char* kind, std::size_t dim, const RationalMatrix& first,
                 const RationalMatrix& linear, bool origin_if_empty) {
  out << kind << '\n';
  if (!linear.empty()) {
    out << "linearity " << linear.size();
    for (std::size_t k = 0; k < linear.size(); ++k) out << ' ' << first.size() + k + 1;
    out << '\n';
  }
  const bool origin = origin_if_empty && first.empty() && linear.empty();
  out << "begin\n";
  out << first.size() + linear.size() + (origin ? 1 : 0) << ' ' << dim + 1 << " rational\n";
  auto row = [&](const RationalVector& r) {
    out << '0';
    for (const auto& x : r) out << ' ' << to_string(x);
    out << '\n';
  };
  for (const auto& r : first) row(r);
  for (const auto& r : linear) row(r);
  if (origin) {
    out << '1';
    for (std::size_t k = 0; k < dim; ++k) out << " 0";
    out << '\n';
  }
  out << "end\n";
}

struct Block {
  std::size_t dim = 0;
  int n = 0;
  std::string name;
  std::vector<RationalVector> rows;  // including the leading homogenizing entry
  std::set<std::size_t> linearity;   // 0-based
};

Block read_block(std::istream& in, const std::string& kind) {
  Block block;
  std::string line;
  bool seen_kind = false;
  bool in_body = false;
  bool have_size = false;
  std::size_t expected_rows = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;
    if (first[0] == '*') {
      auto pos = line.find("systems n=");
      if (pos != std::string::npos) {
        const char* begin = line.data() + pos + 10;
        auto [end, ec] = std::from_chars(begin, line.data() + line.size(), block.n);
        if (ec != std::errc() || end == begin || block.n < 1 || block.n > kMaxSystems) {
          throw ParseError("bad system count comment: " + line);
        }
      }
      pos = line.find("cone: ");
      if (pos != std::string::npos) block.name = line.substr(pos + 6);
      continue;
    }
    if (!in_body) {
      if (first == kind) {
        seen_kind = true;
      } else if (first == "H-representation" || first == "V-representation") {
        throw ParseError("expected " + kind + ", found " + first);
      } else if (first == "linearity") {
        std::size_t count = 0;
        if (!(tokens >> count)) throw ParseError("malformed linearity line");
        for (std::size_t k = 0; k < count; ++k) {
          std::size_t index = 0;
          if (!(tokens >> index) || index == 0) throw ParseError("malformed linearity line");
          block.linearity.insert(index - 1);
        }
      } else if (first == "begin") {
        if (!seen_kind) throw ParseError("'begin' before '" + kind + "'");
        in_body = true;
      }
      continue;
    }
    if (first == "end") {
      if (!have_size || block.rows.size() != expected_rows) throw ParseError("row count does not match the size line");
      for (std::size_t index : block.linearity) {
        if (index >= block.rows.size()) throw ParseError("linearity index beyond the last row");
      }
      return block;
    }
    if (!have_size) {
      std::string type;
      std::size_t columns = 0;
      std::istringstream size_line(line);
      if (!(size_line >> expected_rows >> columns >> type) || columns == 0) throw ParseError("malformed size line");
      if (type != "rational" && type != "integer") throw ParseError("number type '" + type + "' is not exact");
      block.dim = columns - 1;
      have_size = true;
      continue;
    }
    RationalVector row;
    row.push_back(parse_rational(first));
    std::string token;
    while (tokens >> token) row.push_back(parse_rational(token));
    if (row.size() != block.dim + 1) throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                                                      std::to_string(block.dim + 1));
    block.rows.push_back(std::move(row));
  }
  throw ParseError(seen_kind ? "missing 'end'" : "no " + kind + " block found");
}

int checked_n(int n, std::size_t dim) {
  if (n <= 0) return 0;
  if (n > kMaxSystems || coordinate_count(n) != dim) throw ParseError("'systems n=' comment does not match the dimension");
  return n;
}

}  // namespace

void write_cdd(std::ostream& out, const HRep& h) {
  h.validate();
  write_header(out, h.name, h.n);
  write_block(out, "H-representation", h.dim, h.inequalities, h.equalities, false);
}

void write_cdd(std::ostream& out, const VRep& v) {
  v.validate();
  write_header(out, v.name, v.n);
  write_block(out, "V-representation", v.dim, v.rays, v.lineality, true);
}

std::string to_cdd(const HRep& h) {
  std::ostringstream out;
  write_cdd(out, h);
  return out.str();
}

std::string to_cdd(const VRep& v) {
  std::ostringstream out;
  write_cdd(out, v);
  return out.str();
}

HRep read_cdd_hrep(std::istream& in) {
  Block block = read_block(in, "H-representation");
  HRep h;
  h.dim = block.dim;
  h.n = checked_n(block.n, block.dim);
  h.name = block.name;
  for (std::size_t r = 0; r < block.rows.size(); ++r) {
    if (sgn(block.rows[r][0]) != 0) throw ParseError("row " + std::to_string(r + 1) + " has b != 0; only cones are supported");
    RationalVector a(block.rows[r].begin() + 1, block.rows[r].end());
    if (is_zero(a)) continue;  // 0 >= 0 or 0 = 0
    (block.linearity.count(r) ? h.equalities : h.inequalities).push_back(std::move(a));
  }
  return h;
}

VRep read_cdd_vrep(std::istream& in) {
  Block block = read_block(in, "V-representation");
  VRep v;
  v.dim = block.dim;
  v.n = checked_n(block.n, block.dim);
  v.name = block.name;
  for (std::size_t r = 0; r < block.rows.size(); ++r) {
    RationalVector g(block.rows[r].begin() + 1, block.rows[r].end());
    if (sgn(block.rows[r][0]) != 0) {
      if (!is_zero(g)) throw ParseError("row " + std::to_string(r + 1) + " is a vertex other than the origin");
      continue;
    }
    if (is_zero(g)) continue;
    (block.linearity.count(r) ? v.lineality : v.rays).push_back(std::move(g));
  }
  return v;
}

HRep read_cdd_hrep_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_cdd_hrep(in);
}

VRep read_cdd_vrep_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_cdd_vrep(in);
}

}  // namespace monocone
