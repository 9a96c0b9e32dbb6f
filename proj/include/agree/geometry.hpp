#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "agree/graph.hpp"
#include "agree/rational.hpp"

namespace agree {

/// Closed interval [lo, hi] with lo <= hi. Degenerate (point) intervals are
/// allowed; an empty interval is never represented.
class Interval {
 public:
  Interval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Rational lo_;
  Rational hi_;
};

std::optional<Interval> intersect(const Interval& a, const Interval& b);

/// Cartesian product of closed intervals, one per axis.
class Box {
 public:
  explicit Box(std::vector<Interval> sides);

  std::size_t dimension() const { return sides_.size(); }
  const Interval& side(std::size_t axis) const { return sides_[axis]; }
  std::span<const Interval> sides() const { return sides_; }

  friend bool operator==(const Box&, const Box&) = default;

 private:
  std::vector<Interval> sides_;
};

/// Coordinate-wise intersection; nullopt when some axis is empty. Boxes
/// that only touch on a boundary intersect. Throws on dimension mismatch.
std::optional<Box> intersect_boxes(const Box& a, const Box& b);

/// Indexed family of boxes sharing one ambient dimension (n >= 1, d >= 1).
class Arrangement {
 public:
  Arrangement(std::size_t dimension, std::vector<Box> boxes);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return boxes_.size(); }
  const Box& box(std::size_t i) const { return boxes_[i]; }
  std::span<const Box> boxes() const { return boxes_; }

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  std::size_t dimension_;
  std::vector<Box> boxes_;
};

/// f_k = number of (k+1)-subsets with a common point, k = 0..n-1.
struct FVector {
  std::vector<std::int64_t> entries;

  /// Zero beyond the stored range.
  std::int64_t operator[](std::size_t k) const { return k < entries.size() ? entries[k] : 0; }

  friend bool operator==(const FVector&, const FVector&) = default;
};

Graph intersection_graph(const Arrangement& arr);

/// Maximum number of boxes sharing a point, searched over points whose
/// coordinates are lower endpoints.
std::size_t agreement_number(const Arrangement& arr);

Rational agreement_proportion(const Arrangement& arr);

FVector f_vector(const Arrangement& arr);

/// f-vector of a family in which some members may be absent. Absent members
/// belong to no intersecting subset; f_0 counts the present ones.
FVector f_vector(std::span<const std::optional<Box>> family);

/// Every three boxes contain an intersecting pair (checked on the boxes
/// themselves, not through the graph).
bool has_intersecting_pair_in_every_triple(const Arrangement& arr);

}  // namespace agree
