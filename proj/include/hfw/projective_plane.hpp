#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hfw/error.hpp"
#include "hfw/finite_field.hpp"

namespace hfw {

using PointId = std::uint32_t;
using LineId = std::uint32_t;

/// Point/line incidence structure; lines hold sorted point ids.
struct ProjectivePlane {
  std::uint32_t q = 0;
  std::uint32_t point_count = 0;
  std::vector<std::vector<PointId>> lines;
};

struct PlaneCheck {
  bool ok = false;
  std::string failure;  // first violated axiom, empty when ok
};

/// Checks the order-q parameters, that two points share exactly one line, that
/// two lines share exactly one point, and that four points exist with no
/// three collinear.
inline PlaneCheck check_plane_axioms(const ProjectivePlane& plane) {
  const std::uint64_t q = plane.q;
  const std::uint64_t expected = q * q + q + 1;
  auto bad = [](std::string why) { return PlaneCheck{false, std::move(why)}; };
  if (q < 2) return bad("order must be at least 2");
  if (plane.point_count != expected) return bad("point count is not q^2+q+1");
  if (plane.lines.size() != expected) return bad("line count is not q^2+q+1");
  const std::size_t np = plane.point_count;
  std::vector<std::vector<char>> on(plane.lines.size(), std::vector<char>(np, 0));
  for (std::size_t l = 0; l < plane.lines.size(); ++l) {
    const auto& line = plane.lines[l];
    if (line.size() != q + 1) return bad("line " + std::to_string(l) + " does not have q+1 points");
    for (PointId p : line) {
      if (p >= np) return bad("line " + std::to_string(l) + " has an out-of-range point");
      if (on[l][p]) return bad("line " + std::to_string(l) + " repeats a point");
      on[l][p] = 1;
    }
  }
  std::vector<std::uint32_t> pair_lines(np * np, 0);
  std::vector<LineId> through(np * np, 0);
  for (std::size_t l = 0; l < plane.lines.size(); ++l) {
    const auto& line = plane.lines[l];
    for (std::size_t i = 0; i < line.size(); ++i) {
      for (std::size_t j = 0; j < line.size(); ++j) {
        if (i == j) continue;
        ++pair_lines[line[i] * np + line[j]];
        through[line[i] * np + line[j]] = static_cast<LineId>(l);
      }
    }
  }
  for (std::size_t a = 0; a < np; ++a) {
    for (std::size_t b = a + 1; b < np; ++b) {
      if (pair_lines[a * np + b] != 1) {
        return bad("points " + std::to_string(a) + " and " + std::to_string(b) + " lie on " +
                   std::to_string(pair_lines[a * np + b]) + " common lines");
      }
    }
  }
  for (std::size_t l = 0; l < plane.lines.size(); ++l) {
    for (std::size_t m = l + 1; m < plane.lines.size(); ++m) {
      std::size_t common = 0;
      for (PointId p : plane.lines[l]) common += static_cast<std::size_t>(on[m][p]);
      if (common != 1) {
        return bad("lines " + std::to_string(l) + " and " + std::to_string(m) + " meet in " +
                   std::to_string(common) + " points");
      }
    }
  }
  // Quadrangle: with two points fixed, look for a third off their line and a
  // fourth off the three lines they span.
  const PointId a = 0, b = 1;
  auto collinear = [&](PointId x, PointId y, PointId z) { return on[through[x * np + y]][z] != 0; };
  for (PointId c = 2; c < np; ++c) {
    if (collinear(a, b, c)) continue;
    for (PointId d = 2; d < np; ++d) {
      if (d == c || collinear(a, b, d) || collinear(a, c, d) || collinear(b, c, d)) continue;
      return PlaneCheck{true, {}};
    }
  }
  return bad("no four points with no three collinear");
}

/// PG(2, q) over GF(q): points and lines are normalized homogeneous
/// coordinate triples (first nonzero entry 1), numbered in lexicographic order.
inline ProjectivePlane projective_plane(std::uint32_t q) {
  const FiniteField field(q);
  std::vector<std::array<std::uint32_t, 3>> triples;
  for (std::uint32_t x = 0; x < q; ++x) {
    for (std::uint32_t y = 0; y < q; ++y) {
      for (std::uint32_t z = 0; z < q; ++z) {
        const std::uint32_t lead = x != 0 ? x : (y != 0 ? y : z);
        if (lead == 1) triples.push_back({x, y, z});
      }
    }
  }
  ProjectivePlane plane;
  plane.q = q;
  plane.point_count = static_cast<std::uint32_t>(triples.size());
  for (const auto& l : triples) {
    std::vector<PointId> line;
    for (std::size_t p = 0; p < triples.size(); ++p) {
      const auto& pt = triples[p];
      const std::uint32_t dot =
          field.add(field.add(field.mul(l[0], pt[0]), field.mul(l[1], pt[1])), field.mul(l[2], pt[2]));
      if (dot == 0) line.push_back(static_cast<PointId>(p));
    }
    plane.lines.push_back(std::move(line));
  }
  const PlaneCheck check = check_plane_axioms(plane);
  require(check.ok, ErrorKind::construction_invariant_violated, "PG(2," + std::to_string(q) + "): " + check.failure);
  return plane;
}

/// Incidence lookups over a checked plane.
class PlaneIndex {
 public:
  explicit PlaneIndex(const ProjectivePlane& plane)
      : plane_(plane), np_(plane.point_count), on_(plane.lines.size() * plane.point_count, 0),
        through_(np_ * np_, 0) {
    for (std::size_t l = 0; l < plane.lines.size(); ++l) {
      const auto& line = plane.lines[l];
      for (PointId p : line) on_[l * np_ + p] = 1;
      for (PointId a : line) {
        for (PointId b : line) through_[a * np_ + b] = static_cast<LineId>(l);
      }
    }
  }

  bool on(LineId l, PointId p) const { return on_[l * np_ + p] != 0; }
  LineId line_through(PointId a, PointId b) const { return through_[a * np_ + b]; }
  /// The unique common point of two distinct lines.
  PointId meet(LineId l, LineId m) const {
    for (PointId p : plane_.lines[l]) {
      if (on(m, p)) return p;
    }
    fail(ErrorKind::construction_invariant_violated, "lines do not meet");
  }
  const ProjectivePlane& plane() const { return plane_; }

 private:
  ProjectivePlane plane_;
  std::size_t np_;
  std::vector<char> on_;
  std::vector<LineId> through_;
};

inline nlohmann::json to_json(const ProjectivePlane& plane) {
  return nlohmann::json{{"q", plane.q}, {"lines", plane.lines}};
}

/// Reads {"q": int, "lines": [[pointId...]...]}; the point count is taken as q^2+q+1.
inline ProjectivePlane plane_from_json(const nlohmann::json& j) {
  require(j.is_object() && j.contains("q") && j.at("q").is_number_integer() && j.contains("lines") &&
              j.at("lines").is_array(),
          ErrorKind::parse_error, "plane JSON needs integer \"q\" and array \"lines\"");
  ProjectivePlane plane;
  const auto q = j.at("q").get<std::int64_t>();
  require(q >= 0 && q <= 1000, ErrorKind::parse_error, "plane order out of range");
  plane.q = static_cast<std::uint32_t>(q);
  plane.point_count = plane.q * plane.q + plane.q + 1;
  for (const auto& line : j.at("lines")) {
    require(line.is_array(), ErrorKind::parse_error, "each line must be an array");
    std::vector<PointId> pts;
    for (const auto& p : line) {
      require(p.is_number_integer() && p.get<std::int64_t>() >= 0, ErrorKind::parse_error,
              "point ids must be non-negative integers");
      pts.push_back(p.get<PointId>());
    }
    std::sort(pts.begin(), pts.end());
    plane.lines.push_back(std::move(pts));
  }
  return plane;
}

}  // namespace hfw
