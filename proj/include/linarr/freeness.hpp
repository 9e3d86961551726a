#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "linarr/arrangement.hpp"

namespace linarr {

/// Multiset of three exponents, kept sorted ascending.
class ExponentTriple {
 public:
  ExponentTriple() = default;
  ExponentTriple(unsigned a, unsigned b, unsigned c);

  /// Accepts `{1,7,11}`, `1,7,11` or `1 7 11`.
  static ExponentTriple parse(const std::string& text);

  const std::array<unsigned, 3>& values() const { return values_; }
  unsigned sum() const { return values_[0] + values_[1] + values_[2]; }
  bool contains_pair(unsigned a, unsigned b) const;

  friend bool operator==(const ExponentTriple&, const ExponentTriple&) = default;
  std::string to_string() const;

 private:
  std::array<unsigned, 3> values_{0, 0, 0};
};

struct FreenessStep {
  std::size_t line = 0;  // index into the arrangement
  std::string label;
  std::size_t restriction_count = 0;  // |A''| on the partial arrangement
  ExponentTriple exponents;            // after the addition; meaningless when !valid
  bool valid = false;
};

struct FreenessCertificate {
  std::vector<FreenessStep> steps;
  bool verdict = false;
  std::optional<std::size_t> failing_step;

  const ExponentTriple& final_exponents() const { return steps.back().exponents; }
  nlohmann::json to_json() const;
};

/// Adds lines in `order` and checks each addition against the exponent rule:
/// with t = |A''|, the step is valid iff {1, t-1} is a sub-multiset of the
/// current exponents, which then become (E - {1, t-1}) with the remaining
/// exponent raised by one, plus {1, t-1}. One and two lines are free with
/// exponents {0,0,1} and {0,1,1}.
///
/// Stops at the first invalid step. Throws std::invalid_argument when `order`
/// is not a permutation of the arrangement's lines.
FreenessCertificate freeness_replay(const Arrangement& arrangement, const std::vector<std::size_t>& order);

/// Replays in the arrangement's own line order.
FreenessCertificate freeness_replay(const Arrangement& arrangement);

/// Named addition order, e.g. loaded from a table file.
struct AdditionTable {
  struct Row {
    std::string name;
    std::optional<ProjectiveLine> line;  // absent: match `name` against arrangement labels
    std::optional<ExponentTriple> exponents;                // recorded exp A'
    std::optional<std::array<unsigned, 2>> restriction;     // recorded exp A'', sorted
  };
  std::vector<Row> rows;

  /// Rows `name: linear form`, `name` or a bare linear form, optionally
  /// followed by `| {a,b,c}` and `| {u,v}` columns; `#` comments.
  static AdditionTable read(std::istream& in);
  /// Resolves rows to arrangement indices; throws std::invalid_argument on a
  /// row that names no line of the arrangement.
  std::vector<std::size_t> resolve(const Arrangement& arrangement) const;
};

}  // namespace linarr
