#include "linarr/projective.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace linarr {

Triple canonical_triple(const Triple& raw) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (raw[i].is_zero()) continue;
    if (raw[i].is_one()) return raw;
    const FieldElement inv = raw[i].inverse();
    Triple out;
    for (std::size_t j = 0; j < 3; ++j) out[j] = j == i ? FieldElement(1) : raw[j] * inv;
    return out;
  }
  throw std::invalid_argument("projective triple must not be all zero");
}

ProjectiveLine ProjectiveLine::from_form(const HomogeneousForm& f) {
  if (f.degree() != 1) throw std::invalid_argument("not a linear form: " + f.to_string());
  return ProjectiveLine(f.coefficient({1, 0, 0}), f.coefficient({0, 1, 0}), f.coefficient({0, 0, 1}));
}

Triple cross(const Triple& a, const Triple& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

FieldElement dot(const Triple& a, const Triple& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

ProjectivePoint meet(const ProjectiveLine& l1, const ProjectiveLine& l2) {
  if (l1 == l2) throw std::invalid_argument("meet of identical lines " + l1.equation());
  return ProjectivePoint(cross(l1.coords(), l2.coords()));
}

ProjectiveLine join(const ProjectivePoint& p1, const ProjectivePoint& p2) {
  if (p1 == p2) throw std::invalid_argument("join of identical points");
  return ProjectiveLine(cross(p1.coords(), p2.coords()));
}

bool incident(const ProjectivePoint& p, const ProjectiveLine& l) { return dot(p.coords(), l.coords()).is_zero(); }

std::vector<std::string> split_row(const std::string& row) {
  std::string body = row.substr(0, row.find('#'));
  std::vector<std::string> cells;
  const bool has_comma = body.find(',') != std::string::npos;
  if (has_comma) {
    std::stringstream ss(body);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      const auto b = cell.find_first_not_of(" \t\r");
      const auto e = cell.find_last_not_of(" \t\r");
      cells.push_back(b == std::string::npos ? std::string() : cell.substr(b, e - b + 1));
    }
  } else {
    std::istringstream ss(body);
    std::string cell;
    while (ss >> cell) cells.push_back(cell);
  }
  if (cells.size() == 1 && cells[0].empty()) cells.clear();
  return cells;
}

std::vector<Triple> read_triples_csv(std::istream& in) {
  std::vector<Triple> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto cells = split_row(line);
    if (cells.empty()) continue;
    if (cells.size() != 3) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 3 columns, got " +
                       std::to_string(cells.size()));
    }
    rows.push_back({FieldElement::parse(cells[0]), FieldElement::parse(cells[1]), FieldElement::parse(cells[2])});
  }
  return rows;
}

void write_triples_csv(std::ostream& out, const std::vector<Triple>& rows) {
  for (const auto& r : rows) out << r[0] << ", " << r[1] << ", " << r[2] << '\n';
}

}  // namespace linarr
