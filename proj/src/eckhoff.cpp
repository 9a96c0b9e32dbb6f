#include "agree/eckhoff.hpp"

#include <string>

#include "agree/error.hpp"

namespace agree {

bool is_exposing(const Arrangement& arr, const ExposureCertificate& cert) {
  if (cert.box_index >= arr.size() || cert.axis >= arr.dimension()) return false;
  const auto& q = arr.box(cert.box_index).side(cert.axis);
  const auto& h = cert.coordinate;
  // Supporting: H meets Q and Q lies in the closed half-space on the face side.
  const bool supports = cert.side == Face::lower ? q.lo() == h : q.hi() == h;
  if (!supports) return false;
  for (std::size_t j = 0; j < arr.size(); ++j) {
    if (j == cert.box_index) continue;
    const auto& p = arr.box(j).side(cert.axis);
    if (p.contains(h)) continue;
    const bool opposite = cert.side == Face::lower ? p.hi() < h : p.lo() > h;
    if (!opposite) return false;
  }
  return true;
}

std::vector<ExposureCertificate> exposure_candidates(const Arrangement& arr) {
  std::vector<ExposureCertificate> out;
  for (std::size_t axis = 0; axis < arr.dimension(); ++axis) {
    std::size_t top = 0;
    std::size_t bottom = 0;
    for (std::size_t i = 1; i < arr.size(); ++i) {
      if (arr.box(i).side(axis).lo() > arr.box(top).side(axis).lo()) top = i;
      if (arr.box(i).side(axis).hi() < arr.box(bottom).side(axis).hi()) bottom = i;
    }
    out.push_back({top, axis, Face::lower, arr.box(top).side(axis).lo()});
    out.push_back({bottom, axis, Face::upper, arr.box(bottom).side(axis).hi()});
  }
  return out;
}

ExposureCertificate find_exposed(const Arrangement& arr) {
  auto cert = exposure_candidates(arr).front();
  if (!is_exposing(arr, cert)) throw Error("internal: extremal box failed exposure validation");
  return cert;
}

Split split(const Arrangement& arr, std::size_t index) {
  if (arr.size() < 2) throw Error("splitting needs at least two boxes");
  if (index >= arr.size()) throw Error("split index out of range");
  std::vector<Box> remaining;
  std::vector<std::optional<Box>> traces;
  std::vector<std::size_t> provenance;
  for (std::size_t j = 0; j < arr.size(); ++j) {
    if (j == index) continue;
    remaining.push_back(arr.box(j));
    traces.push_back(intersect_boxes(arr.box(index), arr.box(j)));
    provenance.push_back(j);
  }
  return {Arrangement(arr.dimension(), std::move(remaining)), std::move(traces),
          std::move(provenance)};
}

bool verify_split_identity(const Arrangement& arr, std::size_t index, std::size_t k) {
  if (k < 1 || k >= arr.size()) throw Error("split identity needs 1 <= k <= n-1");
  const auto parts = split(arr, index);
  return f_vector(arr)[k] == f_vector(parts.remaining)[k] + f_vector(parts.traces)[k - 1];
}

bool verify_split_identity(const Arrangement& arr, std::size_t k) {
  return verify_split_identity(arr, find_exposed(arr).box_index, k);
}

namespace {

void check_edge_bound_args(std::size_t n, std::size_t r, std::size_t d) {
  if (r < 2 || n < r) throw Error("edge bounds need n >= r >= 2");
  if (d < 1) throw Error("edge bounds need d >= 1");
}

std::int64_t pairs(std::size_t r) {
  return static_cast<std::int64_t>(r * (r - 1) / 2);
}

}  // namespace

std::int64_t e_upper_recurrence(std::size_t n, std::size_t r, std::size_t d,
                                const EtaTable& table) {
  check_edge_bound_args(n, r, d);
  if (n == r) return pairs(r);
  const auto step = static_cast<std::int64_t>(table.dimension_bound(r - 1, d - 1));
  std::int64_t bound = pairs(r);
  for (std::size_t m = r + 1; m <= n; ++m) bound += step;
  return bound;
}

double e_upper_closed(std::size_t n, std::size_t r, std::size_t d, double gamma_prev) {
  check_edge_bound_args(n, r, d);
  if (!(gamma_prev > 0)) throw Error("gamma(d-1) must be positive");
  return static_cast<double>(pairs(r)) +
         static_cast<double>(n - r) * static_cast<double>(r - 1) / gamma_prev;
}

}  // namespace agree
