#include "linarr/arrangement.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>

namespace linarr {

void Arrangement::add(const ProjectiveLine& line, std::string label) {
  if (!add_unique(line, std::move(label))) {
    throw std::invalid_argument("duplicate line in arrangement: " + line.equation());
  }
}

bool Arrangement::add_unique(const ProjectiveLine& line, std::string label) {
  if (!index_.emplace(line, lines_.size()).second) return false;
  lines_.push_back(line);
  labels_.push_back(std::move(label));
  return true;
}

std::optional<std::size_t> Arrangement::index_of(const ProjectiveLine& line) const {
  auto it = index_.find(line);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Arrangement::index_of_label(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (label.empty() || it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

Arrangement Arrangement::subset(const std::vector<std::size_t>& indices) const {
  Arrangement out;
  for (auto i : indices) out.add(line(i), label(i));
  return out;
}

Arrangement Arrangement::read(std::istream& in) {
  Arrangement out;
  std::optional<std::size_t> declared;
  std::string row;
  std::size_t line_no = 0;
  while (std::getline(in, row)) {
    ++line_no;
    const auto cells = split_row(row);
    if (cells.empty()) continue;
    if (!declared) {
      if (cells.size() != 1 || cells[0].rfind("lines=", 0) != 0) {
        throw ParseError("line " + std::to_string(line_no) + ": expected header 'lines=<n>'");
      }
      declared = std::stoul(cells[0].substr(6));
      continue;
    }
    if (cells.size() != 3 && cells.size() != 4) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 3 coefficients and an optional label");
    }
    ProjectiveLine l(FieldElement::parse(cells[0]), FieldElement::parse(cells[1]), FieldElement::parse(cells[2]));
    if (!out.add_unique(l, cells.size() == 4 ? cells[3] : std::string())) {
      throw ParseError("line " + std::to_string(line_no) + ": duplicate line " + l.equation());
    }
  }
  if (!declared) throw ParseError("missing 'lines=<n>' header");
  if (*declared != out.size()) {
    throw ParseError("header declares " + std::to_string(*declared) + " lines, file has " +
                     std::to_string(out.size()));
  }
  return out;
}

void Arrangement::write(std::ostream& out) const {
  out << "lines=" << size() << '\n';
  for (std::size_t i = 0; i < size(); ++i) {
    out << lines_[i].to_string();
    if (!labels_[i].empty()) out << ", " << labels_[i];
    out << "  # " << lines_[i].equation() << '\n';
  }
}

std::vector<ProjectivePoint> SingularLocus::point_set() const {
  std::vector<ProjectivePoint> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.point);
  return out;
}

std::size_t WeakCombinatorics::pair_count() const {
  std::size_t total = 0;
  for (const auto& [m, c] : t) total += c * m * (m - 1) / 2;
  return total;
}

std::string WeakCombinatorics::to_string() const {
  std::string out = "(" + std::to_string(n) + ";";
  bool first = true;
  for (const auto& [m, c] : t) {
    out += (first ? " " : ", ") + std::string("t_") + std::to_string(m) + "=" + std::to_string(c);
    first = false;
  }
  return out + ")";
}

Arrangement build_family_12k7(int k) {
  if (k < 1) throw std::invalid_argument("A(12k+7) needs k >= 1, got " + std::to_string(k));
  const FieldElement e = FieldElement::sqrt3();
  Arrangement out;
  auto put = [&out](const FieldElement& a, const FieldElement& b, const FieldElement& c) {
    out.add_unique(ProjectiveLine(a, b, c));
  };
  for (long i = -(k + 1); i <= k + 1; ++i) {
    const FieldElement ie = e * FieldElement(i);
    put(2, 0, -ie);
    put(1, -e, ie);
    put(1, e, -ie);
  }
  for (long j = -(k - 1); j <= k - 1; ++j) {
    put(0, 2, -j);
    put(e, -1, j);
    put(e, 1, -j);
  }
  put(0, 0, 1);
  if (out.size() != static_cast<std::size_t>(12 * k + 7)) {
    throw std::logic_error("A(12k+7) construction produced " + std::to_string(out.size()) + " lines");
  }
  return out;
}

Arrangement build_a31_3() {
  const FieldElement e = FieldElement::sqrt3();
  const std::vector<Triple> base = {
      {1, 0, 0}, {1, 0, e},  {1, 0, -e},           {2, 0, e}, {2, 0, -e},
      {1, 0, FieldElement(2) * e}, {1, 0, FieldElement(-2) * e}, {0, 1, 0}, {0, 1, 1}, {0, 1, -1},
  };
  // Rotating the plane by t maps the line n.(x,y) + c = 0 to (R_t n).(x,y) + c = 0.
  const FieldElement half(mpq_class(1, 2));
  const std::vector<std::pair<FieldElement, FieldElement>> rotations = {
      {1, 0}, {half, half * e}, {-half, half * e}};
  Arrangement out;
  for (const auto& [cs, sn] : rotations) {
    for (const auto& l : base) {
      out.add(ProjectiveLine(cs * l[0] - sn * l[1], sn * l[0] + cs * l[1], l[2]));
    }
  }
  out.add(ProjectiveLine(0, 0, 1));
  return out;
}

SingularLocus singular_locus(const Arrangement& arrangement) {
  std::map<ProjectivePoint, std::set<std::size_t>> meets;
  const std::size_t n = arrangement.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto& s = meets[meet(arrangement.line(i), arrangement.line(j))];
      s.insert(i);
      s.insert(j);
    }
  }
  SingularLocus locus;
  locus.points.reserve(meets.size());
  for (auto& [p, s] : meets) locus.points.push_back({p, std::vector<std::size_t>(s.begin(), s.end())});
  return locus;
}

WeakCombinatorics weak_combinatorics(const SingularLocus& locus, std::size_t line_count) {
  WeakCombinatorics wc;
  wc.n = line_count;
  for (const auto& p : locus.points) ++wc.t[p.multiplicity()];
  return wc;
}

WeakCombinatorics weak_combinatorics(const Arrangement& arrangement) {
  return weak_combinatorics(singular_locus(arrangement), arrangement.size());
}

std::size_t points_on_line(const Arrangement& arrangement, const ProjectiveLine& line) {
  if (!arrangement.contains(line)) throw std::invalid_argument("line not in arrangement: " + line.equation());
  std::set<ProjectivePoint> points;
  for (const auto& other : arrangement.lines()) {
    if (other != line) points.insert(meet(line, other));
  }
  return points.size();
}

HomogeneousForm defining_polynomial(const Arrangement& arrangement) {
  HomogeneousForm q = HomogeneousForm::constant(1);
  for (const auto& l : arrangement.lines()) q = q * l.form();
  return q;
}

Arrangement transform(const Arrangement& arrangement, const std::array<Triple, 3>& matrix) {
  // Columns of the adjugate; l -> l * adj(M) is l * M^{-1} up to scale.
  const Triple c0 = cross(matrix[1], matrix[2]);
  const Triple c1 = cross(matrix[2], matrix[0]);
  const Triple c2 = cross(matrix[0], matrix[1]);
  if (dot(matrix[0], c0).is_zero()) throw std::invalid_argument("singular coordinate change");
  Arrangement out;
  for (std::size_t i = 0; i < arrangement.size(); ++i) {
    const Triple& l = arrangement.line(i).coords();
    out.add(ProjectiveLine(dot(l, c0), dot(l, c1), dot(l, c2)), arrangement.label(i));
  }
  return out;
}

}  // namespace linarr
