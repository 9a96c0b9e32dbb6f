#include "agree/geometry.hpp"

#include <algorithm>
#include <string>

#include "agree/error.hpp"

namespace agree {

Interval::Interval(Rational lo, Rational hi) : lo_(lo), hi_(hi) {
  if (hi_ < lo_) throw Error("interval [" + to_string(lo) + ", " + to_string(hi) + "] is empty");
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  const auto lo = std::max(a.lo(), b.lo());
  const auto hi = std::min(a.hi(), b.hi());
  if (hi < lo) return std::nullopt;
  return Interval(lo, hi);
}

Box::Box(std::vector<Interval> sides) : sides_(std::move(sides)) {
  if (sides_.empty()) throw Error("a box needs at least one side");
}

std::optional<Box> intersect_boxes(const Box& a, const Box& b) {
  if (a.dimension() != b.dimension()) {
    throw Error("dimension mismatch: " + std::to_string(a.dimension()) + " vs " +
                std::to_string(b.dimension()));
  }
  std::vector<Interval> sides;
  sides.reserve(a.dimension());
  for (std::size_t k = 0; k < a.dimension(); ++k) {
    auto side = intersect(a.side(k), b.side(k));
    if (!side) return std::nullopt;
    sides.push_back(*side);
  }
  return Box(std::move(sides));
}

Arrangement::Arrangement(std::size_t dimension, std::vector<Box> boxes)
    : dimension_(dimension), boxes_(std::move(boxes)) {
  if (dimension_ == 0) throw Error("arrangement dimension must be positive");
  if (boxes_.empty()) throw Error("arrangement needs at least one box");
  for (std::size_t i = 0; i < boxes_.size(); ++i) {
    if (boxes_[i].dimension() != dimension_) {
      throw Error("box " + std::to_string(i + 1) + " has " +
                  std::to_string(boxes_[i].dimension()) + " sides, expected " +
                  std::to_string(dimension_));
    }
  }
}

Graph intersection_graph(const Arrangement& arr) {
  Graph g(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i)
    for (std::size_t j = i + 1; j < arr.size(); ++j)
      if (intersect_boxes(arr.box(i), arr.box(j))) g.add_edge(i, j);
  return g;
}

namespace {

// Depth search one axis at a time: fix a lower endpoint on this axis among
// the surviving boxes, keep the boxes containing it, recurse.
void deepest_point(const Arrangement& arr, std::size_t axis, const std::vector<std::size_t>& alive,
                   std::size_t& best) {
  if (alive.size() <= best) return;
  if (axis == arr.dimension()) {
    best = alive.size();
    return;
  }
  std::vector<Rational> candidates;
  for (auto i : alive) candidates.push_back(arr.box(i).side(axis).lo());
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& x : candidates) {
    std::vector<std::size_t> next;
    for (auto i : alive)
      if (arr.box(i).side(axis).contains(x)) next.push_back(i);
    deepest_point(arr, axis + 1, next, best);
  }
}

void count_intersecting(std::span<const std::optional<Box>> family, std::size_t from,
                        const Box& running, std::size_t depth, std::vector<std::int64_t>& f) {
  for (std::size_t j = from; j < family.size(); ++j) {
    if (!family[j]) continue;
    auto next = intersect_boxes(running, *family[j]);
    if (!next) continue;
    ++f[depth];
    count_intersecting(family, j + 1, *next, depth + 1, f);
  }
}

}  // namespace

std::size_t agreement_number(const Arrangement& arr) {
  std::vector<std::size_t> all(arr.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::size_t best = 0;
  deepest_point(arr, 0, all, best);
  return best;
}

Rational agreement_proportion(const Arrangement& arr) {
  return Rational(static_cast<std::int64_t>(agreement_number(arr)),
                  static_cast<std::int64_t>(arr.size()));
}

FVector f_vector(std::span<const std::optional<Box>> family) {
  std::vector<std::int64_t> f(family.size(), 0);
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!family[i]) continue;
    ++f[0];
    count_intersecting(family, i + 1, *family[i], 1, f);
  }
  return FVector{std::move(f)};
}

FVector f_vector(const Arrangement& arr) {
  std::vector<std::optional<Box>> family(arr.boxes().begin(), arr.boxes().end());
  return f_vector(family);
}

bool has_intersecting_pair_in_every_triple(const Arrangement& arr) {
  const auto n = arr.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!intersect_boxes(arr.box(i), arr.box(j)) && !intersect_boxes(arr.box(i), arr.box(k)) &&
            !intersect_boxes(arr.box(j), arr.box(k))) {
          return false;
        }
      }
  return true;
}

}  // namespace agree
