#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "agree/eta_table.hpp"
#include "agree/geometry.hpp"
#include "agree/rational.hpp"

namespace agree {

enum class Face { lower, upper };

/// Box `box_index` is exposed by the hyperplane {x_axis = coordinate}
/// lying on the given face of that box. Indices are 0-based.
struct ExposureCertificate {
  std::size_t box_index = 0;
  std::size_t axis = 0;
  Face side = Face::lower;
  Rational coordinate;

  friend bool operator==(const ExposureCertificate&, const ExposureCertificate&) = default;
};

/// Checks both conditions directly: the hyperplane supports the box on the
/// stated face, and every box missing the hyperplane lies strictly on the
/// other side.
bool is_exposing(const Arrangement& arr, const ExposureCertificate& cert);

/// One certificate per (axis, face) in that order: on a lower face the box
/// with the largest lower endpoint, on an upper face the box with the
/// smallest upper endpoint (lowest index on ties).
std::vector<ExposureCertificate> exposure_candidates(const Arrangement& arr);

/// First entry of exposure_candidates, validated with is_exposing.
ExposureCertificate find_exposed(const Arrangement& arr);

struct Split {
  Arrangement remaining;                   // every box but the split one
  std::vector<std::optional<Box>> traces;  // split box intersected with each other box
  std::vector<std::size_t> provenance;     // original index of each entry above
};

/// Throws when the arrangement has a single box.
Split split(const Arrangement& arr, std::size_t index);

/// f_k(arr) == f_k(remaining) + f_{k-1}(traces) for the split at `index`.
bool verify_split_identity(const Arrangement& arr, std::size_t index, std::size_t k);

/// Same, splitting at the box chosen by find_exposed.
bool verify_split_identity(const Arrangement& arr, std::size_t k);

/// C(r,2) + (n - r) * eta(r-1, d-1), the unrolled edge-count recurrence.
std::int64_t e_upper_recurrence(std::size_t n, std::size_t r, std::size_t d,
                                const EtaTable& table);

/// C(r,2) + (n - r)(r - 1) / gamma_prev.
double e_upper_closed(std::size_t n, std::size_t r, std::size_t d, double gamma_prev);

}  // namespace agree
