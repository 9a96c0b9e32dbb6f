#include "agree/reference_suite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "agree/bounds.hpp"
#include "agree/boxicity.hpp"
#include "agree/eckhoff.hpp"
#include "agree/error.hpp"
#include "agree/fixtures.hpp"
#include "agree/geometry.hpp"
#include "agree/io.hpp"
#include "agree/report.hpp"
#include "agree/search.hpp"

namespace agree {
namespace {

using Outcome = std::pair<bool, std::string>;

class Suite {
 public:
  void check(std::string name, const std::function<Outcome()>& body) {
    CheckResult result{std::move(name), false, ""};
    try {
      auto [ok, detail] = body();
      result.passed = ok;
      result.detail = std::move(detail);
    } catch (const std::exception& e) {
      result.detail = std::string("error: ") + e.what();
    }
    results_.push_back(std::move(result));
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

template <class T>
Outcome equals(const T& got, const T& want) {
  std::ostringstream out;
  out << "got " << got << ", expected " << want;
  return {got == want, out.str()};
}

Outcome equals(const Rational& got, const Rational& want) {
  return {got == want, "got " + to_string(got) + ", expected " + to_string(want)};
}

Outcome near(double got, double want, double tol) {
  std::ostringstream out;
  out.precision(15);
  out << "got " << got << ", expected " << want << " within " << tol;
  return {std::abs(got - want) <= tol, out.str()};
}

Outcome all_of(std::initializer_list<Outcome> parts) {
  Outcome out{true, ""};
  for (const auto& [ok, detail] : parts) {
    out.first = out.first && ok;
    out.second += (out.second.empty() ? "" : "; ") + detail;
  }
  return out;
}

int decimals_of(const std::string& s) {
  const auto dot = s.find('.');
  return dot == std::string::npos ? 0 : static_cast<int>(s.size() - dot - 1);
}

Outcome boxicity_is(const Graph& g, std::size_t d, const std::optional<Graph>& same_graph_as) {
  const auto low = decide_boxicity_leq(g, d - 1);
  const auto high = decide_boxicity_leq(g, d);
  bool ok = low.verdict == Verdict::no && high.verdict == Verdict::yes;
  if (ok && high.witness) ok = intersection_graph(*high.witness) == g;
  if (ok && same_graph_as) ok = *same_graph_as == g;
  return {ok, "box <= " + std::to_string(d - 1) + ": " + verdict_name(low.verdict) + ", box <= " +
                  std::to_string(d) + ": " + verdict_name(high.verdict)};
}

}  // namespace

const std::vector<PublishedRow>& published_comparison() {
  static const std::vector<PublishedRow> rows = {
      {1, "0.5", "0.5"}, {2, "0.25", "0.23"}, {3, "0.167", "0.11"}, {4, "0.125", "0.05"}, {5, "0.1", "0.02"},
  };
  return rows;
}

std::string format_main_lower(std::size_t d, int decimals) {
  return round_half_even(to_double(main_lower_bound(d)), decimals);
}

std::string format_gamma_lower(std::size_t d, int decimals) {
  return round_down(gamma_lower(d), decimals);
}

std::string render_eta_table(const EtaTable& table) {
  static const char* expected[] = {"", "2", "5", "8", "13", "<=18"};
  std::ostringstream out;
  out << "r  eta(r)  expected\n";
  for (const auto& [r, entry] : table.entries()) {
    const auto found = entry.confirmed ? std::to_string(*entry.confirmed)
                                       : "<=" + std::to_string(entry.upper_bound);
    out << r << "  " << found;
    if (r < std::size(expected)) out << std::string(found.size() < 6 ? 8 - found.size() : 2, ' ') << expected[r];
    out << "\n";
  }
  return out.str();
}

std::string render_comparison_table(std::size_t d_max) {
  std::ostringstream out;
  out << "d  1/(2d)  expected  F^[d-1](1/2)  expected\n";
  const auto& published = published_comparison();
  for (std::size_t d = 1; d <= d_max; ++d) {
    const PublishedRow* row = d <= published.size() ? &published[d - 1] : nullptr;
    const auto main = format_main_lower(d, row ? decimals_of(row->main_lower) : 3);
    const auto gamma = format_gamma_lower(d, row ? decimals_of(row->gamma_lower) : 3);
    out << d << "  " << main << std::string(main.size() < 8 ? 8 - main.size() : 1, ' ')
        << (row ? row->main_lower : "-") << std::string(row ? 10 - row->main_lower.size() : 9, ' ')
        << gamma << std::string(gamma.size() < 14 ? 14 - gamma.size() : 1, ' ')
        << (row ? row->gamma_lower : "-") << "\n";
  }
  return out.str();
}

std::vector<CheckResult> run_reference_suite(const SuiteOptions& options) {
  Suite s;
  const auto z5 = fixtures::z5();
  const auto a38 = fixtures::fig38a();
  const auto b38 = fixtures::fig38b();
  const auto g38a = fixtures::fig38a_graph();
  const auto g38b = fixtures::fig38b_graph();
  const auto g134 = fixtures::fig134_graph();

  // Fixtures.
  s.check("z5: intersection graph is the 5-cycle", [&] {
    const auto g = intersection_graph(z5);
    return Outcome{canonical_form(g).certificate == canonical_form(cycle_graph(5)).certificate &&
                       g.edge_count() == 5 && degree_profile(g).max_degree == 2,
                   std::to_string(g.edge_count()) + " edges"};
  });
  s.check("z5: agreement number 2", [&] { return equals(agreement_number(z5), std::size_t{2}); });
  s.check("z5: agreement proportion 2/5", [&] { return equals(agreement_proportion(z5), Rational(2, 5)); });
  s.check("z5: (2,3)-agreeable", [&] {
    return Outcome{has_intersecting_pair_in_every_triple(z5) && is_agreeable(intersection_graph(z5), 2, 3), ""};
  });
  s.check("fig38a: boxes realize the drawn graph", [&] {
    return Outcome{intersection_graph(a38) == g38a, ""};
  });
  s.check("fig38a: 16 edges, 4-regular, omega 3, 8 triangles", [&] {
    const auto p = degree_profile(g38a);
    return all_of({equals(g38a.edge_count(), std::size_t{16}), equals(p.min_degree, std::size_t{4}),
                   equals(p.max_degree, std::size_t{4}), equals(clique_number(g38a), std::size_t{3}),
                   equals(count_cliques_of_size(g38a, 3), std::size_t{8})});
  });
  s.check("fig38a: f_1 = 16, f_2 = 8", [&] {
    const auto f = f_vector(a38);
    return all_of({equals(f[1], std::int64_t{16}), equals(f[2], std::int64_t{8})});
  });
  s.check("fig38b: boxes realize the drawn graph", [&] {
    return Outcome{intersection_graph(b38) == g38b, ""};
  });
  s.check("fig38b: 17 edges, max degree 5, omega 3, 10 triangles", [&] {
    return all_of({equals(g38b.edge_count(), std::size_t{17}),
                   equals(degree_profile(g38b).max_degree, std::size_t{5}),
                   equals(clique_number(g38b), std::size_t{3}), equals(agreement_number(b38), std::size_t{3}),
                   equals(count_cliques_of_size(g38b, 3), std::size_t{10})});
  });
  s.check("fig38b: f_1 = 17, f_2 = 10", [&] {
    const auto f = f_vector(b38);
    return all_of({equals(f[1], std::int64_t{17}), equals(f[2], std::int64_t{10})});
  });
  s.check("fig38a and fig38b graphs are not isomorphic", [&] {
    return Outcome{canonical_form(g38a).certificate != canonical_form(g38b).certificate, ""};
  });
  s.check("fig134: 13 vertices, 52 edges, 8-regular", [&] {
    const auto p = degree_profile(g134);
    return all_of({equals(g134.order(), std::size_t{13}), equals(g134.edge_count(), std::size_t{52}),
                   equals(p.min_degree, std::size_t{8}), equals(p.max_degree, std::size_t{8})});
  });
  s.check("fig134: omega 4, 39 four-cliques, proportion 4/13", [&] {
    const auto omega = clique_number(g134);
    return all_of({equals(omega, std::size_t{4}), equals(count_cliques_of_size(g134, 4), std::size_t{39}),
                   equals(Rational(static_cast<std::int64_t>(omega), 13), Rational(4, 13))});
  });
  s.check("5-cycle and K_r + K_r are (2,3)-agreeable", [&] {
    bool ok = is_agreeable(cycle_graph(5), 2, 3);
    for (std::size_t r = 1; r <= 5; ++r) ok = ok && is_agreeable(disjoint_union(complete_graph(r), complete_graph(r)), 2, 3);
    return Outcome{ok, ""};
  });
  s.check("k_partite 3 is the octahedron", [&] {
    const auto arr = std::get<Arrangement>(load_fixture("k_partite 3"));
    const auto g = intersection_graph(arr);
    return Outcome{g == fixtures::complete_multipartite_pairs(3) && g.edge_count() == 12 &&
                       degree_profile(g).min_degree == 4,
                   std::to_string(g.edge_count()) + " edges"};
  });

  // Exposure and splitting.
  s.check("exposure: A is exposed by y = 5/2", [&] {
    const auto arr = fixtures::exposure_example();
    const ExposureCertificate a{0, 1, Face::lower, Rational(5, 2)};
    const auto candidates = exposure_candidates(arr);
    const bool listed = std::find(candidates.begin(), candidates.end(), a) != candidates.end();
    return Outcome{is_exposing(arr, a) && listed && is_exposing(arr, find_exposed(arr)), ""};
  });
  s.check("fig38a: split at the exposed box leaves 7 boxes and 4 traces", [&] {
    const auto cert = find_exposed(a38);
    const auto parts = split(a38, cert.box_index);
    std::size_t present = 0;
    for (const auto& t : parts.traces) present += t.has_value();
    return all_of({equals(parts.remaining.size(), std::size_t{7}), equals(parts.traces.size(), std::size_t{7}),
                   equals(present, std::size_t{4})});
  });
  s.check("split identity on the figure arrangements, all k", [&] {
    bool ok = true;
    for (const auto* arr : {&z5, &a38, &b38}) {
      for (std::size_t k = 1; k < arr->size(); ++k) ok = ok && verify_split_identity(*arr, k);
    }
    return Outcome{ok, ""};
  });

  // Bounds.
  s.check("beta(2,3,1) = 1 - sqrt(2/3)", [&] { return near(beta_convex(2, 3, 1), 1.0 - std::sqrt(2.0 / 3.0), 1e-12); });
  s.check("beta(2,3,2) = 0", [&] {
    const auto exact = beta_convex_exact(2, 3, 2);
    return Outcome{exact && exact->value() == 0.0 && beta_convex(2, 3, 2) == 0.0,
                   exact ? exact->to_string() : "no exact form"};
  });
  s.check("1/(2d) for d = 1, 2, 3", [&] {
    return all_of({equals(main_lower_bound(1), Rational(1, 2)), equals(main_lower_bound(2), Rational(1, 4)),
                   equals(main_lower_bound(3), Rational(1, 6))});
  });
  s.check("F(1/2) = (5 - sqrt(13))/6", [&] {
    const auto exact = root_map_exact(Rational(1, 2));
    const auto text = exact.to_string();
    const auto [ok, detail] = near(root_map(0.5), (5.0 - std::sqrt(13.0)) / 6.0, 1e-12);
    return Outcome{ok && text == "(5 - sqrt(13))/6", text + "; " + detail};
  });
  s.check("comparison table matches the published values", [&] {
    bool ok = true;
    std::string detail;
    for (const auto& row : published_comparison()) {
      const auto main = format_main_lower(row.d, decimals_of(row.main_lower));
      const auto gamma = format_gamma_lower(row.d, decimals_of(row.gamma_lower));
      ok = ok && main == row.main_lower && gamma == row.gamma_lower;
      detail += (detail.empty() ? "" : " ") + main + "/" + gamma;
    }
    return Outcome{ok, detail};
  });
  s.check("edge lower bound: 5 for (5,2), 16 for (8,3)", [&] {
    return all_of({equals(edge_lower_bound(5, 2), Rational(5)), equals(edge_lower_bound(8, 3), Rational(16))});
  });
  s.check("r(r+3)/2: 2 at r=1, 14 at r=4", [&] {
    return all_of({equals(eta_quadratic_bound(1), std::size_t{2}), equals(eta_quadratic_bound(4), std::size_t{14})});
  });
  s.check("quadratic root / n tends to F(1/2)", [&] {
    return near(quadratic_min_root(1'000'000, 0.5) / 1e6, root_map(0.5), 1e-4);
  });

  // Eta table.
  EtaTable table;
  s.check("eta(1..4) = 2, 5, 8, 13 with validated witnesses", [&] {
    table = EtaTable::standard();
    std::string got;
    for (std::size_t r = 1; r <= 4; ++r) got += (got.empty() ? "" : ",") + std::to_string(table.confirmed(r));
    return equals(got, std::string("2,5,8,13"));
  });
  s.check("eta_upper: 5 at r=2 (degree gap), 8 at r=3 (parity)", [&] {
    const auto two = eta_upper(2, table);
    const auto three = eta_upper(3, table);
    return all_of({equals(two.bound, std::size_t{5}), equals(to_string(two.certificate.rule), std::string("degree-gap")),
                   equals(three.bound, std::size_t{8}), equals(to_string(three.certificate.rule), std::string("parity"))});
  });
  s.check("eta_upper(5) = 18 by parity", [&] {
    const auto five = eta_upper(5, table);
    return all_of({equals(five.bound, std::size_t{18}), equals(five.certificate.excluded_order, std::size_t{19}),
                   equals(to_string(five.certificate.rule), std::string("parity"))});
  });
  s.check("no agreeable graph on 6 vertices with omega <= 2", [&] {
    return equals(enumerate_agreeable(6, 2, table).survivors.size(), std::size_t{0});
  });
  s.check("the 5-cycle is among the 5-vertex graphs with omega <= 2", [&] {
    const auto cert = enumerate_agreeable(5, 2, table);
    const auto c5 = canonical_form(cycle_graph(5)).certificate;
    bool found = false;
    for (const auto& g : cert.survivors) found = found || canonical_form(g).certificate == c5;
    return Outcome{found, std::to_string(cert.survivors.size()) + " survivors"};
  });
  if (options.exhaustive) {
    s.check("no agreeable graph on 9 vertices with omega <= 3", [&] {
      const auto cert = exhaustion_certificate(3, table);
      return Outcome{cert.excluded_order == 9, cert.detail};
    });
  }

  // Boxicity.
  s.check("box(K_7) = 0", [&] { return equals(boxicity_report(complete_graph(7)).exact.value_or(99), std::size_t{0}); });
  s.check("Adiga bound on K_d(2) is d for d <= 8", [&] {
    bool ok = true;
    for (std::size_t d = 1; d <= 8; ++d) {
      const auto g = fixtures::complete_multipartite_pairs(d);
      ok = ok && adiga_ratio(g) == Rational(static_cast<std::int64_t>(d)) && adiga_lower_bound(g) == d;
    }
    return Outcome{ok, ""};
  });
  s.check("box(K_3(2)) = 3", [&] { return boxicity_is(fixtures::complete_multipartite_pairs(3), 3, std::nullopt); });
  s.check("box(K_4(2)) = 4 by matching bounds", [&] {
    const auto r = boxicity_report(fixtures::complete_multipartite_pairs(4));
    return Outcome{r.exact == 4 && r.lower == 4 && r.upper == 4, "lower " + std::to_string(r.lower) + ", upper " + std::to_string(r.upper)};
  });
  s.check("box(fig38a graph) = 2", [&] { return boxicity_is(g38a, 2, intersection_graph(a38)); });
  s.check("box(fig38b graph) = 2", [&] { return boxicity_is(g38b, 2, intersection_graph(b38)); });

  // Minimal proportions and the main bound.
  s.check("rho(2, 1) = 1/2 and rho(2, 2) = 2/5", [&] {
    return all_of({equals(min_agreement_proportion(2, 1, table).minimum, Rational(1, 2)),
                   equals(min_agreement_proportion(2, 2, table).minimum, Rational(2, 5))});
  });
  s.check("proportion >= 1/(2d) for (d=1, r<=3) and (d=2, r=2)", [&] {
    bool ok = true;
    std::string detail;
    for (const auto& [d, r] : {std::pair{1, 1}, {1, 2}, {1, 3}, {2, 2}}) {
      const auto c = verify_main_theorem(d, r, table);
      ok = ok && c.holds;
      detail += (detail.empty() ? "" : " ") + std::string("d=") + std::to_string(d) + ",r=" + std::to_string(r) +
                ":" + to_string(c.minimum);
    }
    return Outcome{ok, detail};
  });
  return s.take();
}

}  // namespace agree
