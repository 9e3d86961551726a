#pragma once

#include <array>
#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

#include "linarr/field.hpp"
#include "linarr/form.hpp"

namespace linarr {

using Triple = std::array<FieldElement, 3>;

/// Scales a nonzero triple so its first nonzero entry is 1. Throws
/// std::invalid_argument on the zero triple.
Triple canonical_triple(const Triple& raw);

namespace detail {

template <class Tag>
class ProjectiveTriple {
 public:
  explicit ProjectiveTriple(const Triple& raw) : coords_(canonical_triple(raw)) {}
  ProjectiveTriple(const FieldElement& a, const FieldElement& b, const FieldElement& c)
      : ProjectiveTriple(Triple{a, b, c}) {}

  const Triple& coords() const { return coords_; }
  const FieldElement& operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const ProjectiveTriple&, const ProjectiveTriple&) = default;
  friend auto operator<=>(const ProjectiveTriple& a, const ProjectiveTriple& b) {
    return a.coords_ <=> b.coords_;
  }

  std::string to_string() const {
    return coords_[0].to_string() + ", " + coords_[1].to_string() + ", " + coords_[2].to_string();
  }

 private:
  Triple coords_;
};

struct PointTag {};
struct LineTag {};

}  // namespace detail

/// Point of P^2 over Q(sqrt 3) in leading-1 canonical form.
using ProjectivePoint = detail::ProjectiveTriple<detail::PointTag>;

/// Line a*x + b*y + c*z = 0, canonicalized like points.
class ProjectiveLine : public detail::ProjectiveTriple<detail::LineTag> {
 public:
  using ProjectiveTriple::ProjectiveTriple;
  /// Accepts any nonzero linear form.
  static ProjectiveLine from_form(const HomogeneousForm& f);
  static ProjectiveLine parse(std::string_view text) { return from_form(HomogeneousForm::parse(text)); }
  HomogeneousForm form() const { return HomogeneousForm::linear((*this)[0], (*this)[1], (*this)[2]); }
  /// Readable equation such as `x - e*y + 2*e*z`.
  std::string equation() const { return form().to_string(); }
};

Triple cross(const Triple& a, const Triple& b);
FieldElement dot(const Triple& a, const Triple& b);

/// Intersection point of two distinct lines. Throws std::invalid_argument
/// when the lines coincide.
ProjectivePoint meet(const ProjectiveLine& l1, const ProjectiveLine& l2);
/// Line through two distinct points.
ProjectiveLine join(const ProjectivePoint& p1, const ProjectivePoint& p2);
bool incident(const ProjectivePoint& p, const ProjectiveLine& l);

/// Reads rows of three comma- or whitespace-separated field elements.
std::vector<Triple> read_triples_csv(std::istream& in);
void write_triples_csv(std::ostream& out, const std::vector<Triple>& rows);

/// Splits a data row on commas, or on whitespace when it has no comma.
/// Strips `#` comments; returns an empty vector for blank rows.
std::vector<std::string> split_row(const std::string& row);

}  // namespace linarr
