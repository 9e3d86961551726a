#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linarr/form.hpp"
#include "linarr/projective.hpp"

namespace linarr {

/// Ordered list of pairwise distinct projective lines with optional labels.
class Arrangement {
 public:
  Arrangement() = default;

  /// Appends a line; throws std::invalid_argument if it is already present.
  void add(const ProjectiveLine& line, std::string label = {});
  /// Appends unless the line is already present. Returns whether it was added.
  bool add_unique(const ProjectiveLine& line, std::string label = {});

  std::size_t size() const { return lines_.size(); }
  bool empty() const { return lines_.empty(); }
  const ProjectiveLine& line(std::size_t i) const { return lines_.at(i); }
  const std::vector<ProjectiveLine>& lines() const { return lines_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  void set_label(std::size_t i, std::string label) { labels_.at(i) = std::move(label); }

  std::optional<std::size_t> index_of(const ProjectiveLine& line) const;
  std::optional<std::size_t> index_of_label(const std::string& label) const;
  bool contains(const ProjectiveLine& line) const { return index_of(line).has_value(); }

  /// Sub-arrangement made of the given lines, in the given order.
  Arrangement subset(const std::vector<std::size_t>& indices) const;

  /// Text format: `lines=<n>` header, then rows `a, b, c[, label]`; `#` starts a comment.
  static Arrangement read(std::istream& in);
  void write(std::ostream& out) const;

 private:
  std::vector<ProjectiveLine> lines_;
  std::vector<std::string> labels_;
  std::map<ProjectiveLine, std::size_t> index_;
};

struct SingularPoint {
  ProjectivePoint point;
  std::vector<std::size_t> lines;  // sorted indices into the arrangement

  std::size_t multiplicity() const { return lines.size(); }
};

/// All points where at least two lines meet, sorted by canonical coordinates.
struct SingularLocus {
  std::vector<SingularPoint> points;

  std::size_t size() const { return points.size(); }
  std::vector<ProjectivePoint> point_set() const;
};

/// Multiplicity histogram (n; t_2, t_3, ...).
struct WeakCombinatorics {
  std::size_t n = 0;
  std::map<std::size_t, std::size_t> t;

  std::size_t count(std::size_t multiplicity) const {
    auto it = t.find(multiplicity);
    return it == t.end() ? 0 : it->second;
  }
  /// sum_i t_i * C(i, 2); equals C(n, 2) for any arrangement.
  std::size_t pair_count() const;
  std::string to_string() const;

  friend bool operator==(const WeakCombinatorics&, const WeakCombinatorics&) = default;
};

/// Lines 2x - e*i*z, x - e*y + i*e*z, x + e*y - i*e*z for |i| <= k+1,
/// 2y - j*z, e*x - y + j*z, e*x + y - j*z for |j| <= k-1, and z.
Arrangement build_family_12k7(int k);

/// Ten lines x, x +- e*z, 2x +- e*z, x +- 2e*z, y, y +- z, their affine
/// rotations about the origin by 60 and 120 degrees, and the line z.
/// The variant with 2x +- 3e*z, 2y, 2y +- z reproduces A(31,2) line for line.
Arrangement build_a31_3();

SingularLocus singular_locus(const Arrangement& arrangement);
WeakCombinatorics weak_combinatorics(const Arrangement& arrangement);
WeakCombinatorics weak_combinatorics(const SingularLocus& locus, std::size_t line_count);

/// Number of distinct points in which the other lines meet `line`.
std::size_t points_on_line(const Arrangement& arrangement, const ProjectiveLine& line);

/// Product of the linear forms; the empty arrangement gives 1.
HomogeneousForm defining_polynomial(const Arrangement& arrangement);

/// Applies the linear change of coordinates p -> M p to every line
/// (lines transform by the inverse transpose). M must be invertible.
Arrangement transform(const Arrangement& arrangement, const std::array<Triple, 3>& matrix);

}  // namespace linarr
