#include "majdist/verify.hpp"

#include <functional>
#include <map>

#include "majdist/errors.hpp"
#include "majdist/kr_koh.hpp"
#include "majdist/parallel.hpp"
#include "majdist/permutations.hpp"
#include "majdist/recurrences.hpp"
#include "majdist/schur.hpp"

namespace majdist {

std::string to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::all_pass:
      return "all-pass";
    case ReportStatus::mismatches:
      return "mismatches";
    case ReportStatus::conjecture_consistent:
      return "conjecture-consistent";
    case ReportStatus::conjecture_refuted:
      return "conjecture-refuted";
  }
  return "unknown";
}

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& f : cases) n += f.passed() ? 0 : 1;
  return n;
}

namespace {

using Points = std::vector<std::vector<int>>;

struct Ctx {
  int max;
  const SuiteBounds& bounds;
  OracleCache& cache;
};

Finding finding(std::string shape, Params params, std::string label, QPoly expected, QPoly actual,
                bool property_ok = true) {
  Finding f;
  f.shape = std::move(shape);
  f.params = std::move(params);
  f.label = std::move(label);
  f.equal = expected == actual;
  f.stats = shape_stats(actual);
  f.expected = std::move(expected);
  f.actual = std::move(actual);
  f.property_ok = property_ok;
  return f;
}

bool symmetric_unimodal(const QPoly& p) {
  const auto s = shape_stats(p);
  return s.symmetric && s.unimodal;
}

bool unimodal(const QPoly& p) { return shape_stats(p).unimodal; }

std::string shape_name(const std::vector<int>& outer, const std::vector<int>& inner = {}) {
  return format_shape(SkewShape(Partition(outer), Partition(inner)));
}

std::vector<int> parts_of(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

template <class Fn>
std::vector<Finding> sweep(const Points& points, int jobs, Fn&& fn) {
  auto chunks = parallel_map(points.size(), jobs, [&](std::size_t idx) { return fn(points[idx]); });
  std::vector<Finding> out;
  for (auto& chunk : chunks) {
    for (auto& f : chunk) out.push_back(std::move(f));
  }
  return out;
}

std::vector<Finding> suite_two_row(const Ctx& c) {
  Points pts;
  for (int n = 1; n <= c.max; ++n) {
    for (int k = 0; k <= n && n + k <= c.max; ++k) pts.push_back({n, k});
  }
  return sweep(pts, c.bounds.jobs, [&](const std::vector<int>& p) {
    const int n = p[0], k = p[1];
    std::vector<Finding> out;
    for (int i = 0; i <= k + 1; ++i) {
      QPoly actual = f_two_row(n, k, i);
      const bool ok = symmetric_unimodal(actual);
      out.push_back(finding(shape_name({n, k}), {{"n", n}, {"k", k}, {"i", i}}, "two_row",
                            c.cache.f({n, k}, i), std::move(actual), ok));
    }
    return out;
  });
}

std::vector<Finding> suite_hook_nk1(const Ctx& c) {
  Points pts;
  for (int n = 1; n + 2 <= c.max; ++n) {
    for (int k = 1; k <= n && n + k + 1 <= c.max; ++k) pts.push_back({n, k});
  }
  return sweep(pts, c.bounds.jobs, [&](const std::vector<int>& p) {
    const int n = p[0], k = p[1];
    std::vector<Finding> out;
    for (int i = 0; i <= k + 2; ++i) {
      QPoly actual = f_hook_nk1(n, k, i);
      const bool ok = symmetric_unimodal(actual);
      out.push_back(finding(shape_name({n, k, 1}), {{"n", n}, {"k", k}, {"i", i}}, "hook_nk1",
                            c.cache.f({n, k, 1}, i), std::move(actual), ok));
    }
    return out;
  });
}

// (n, k) \ (j) with n <= max and at most max cells. Shapes with j >= k are
// disconnected and depend only on (n - j, k), so n <= max loses nothing.
Points two_row_skew_points(int max) {
  Points pts;
  for (int n = 1; n <= max; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (int j = 0; j < n; ++j) {
        if (n + k - j <= max) pts.push_back({n, k, j});
      }
    }
  }
  return pts;
}

// Telescoping decomposition: partition-shape terms are nonnegative with darga
// (n - j + k) i, the others cancel against their mirror (c - 1, a + 1).
bool telescoping_ok(int n, int k, int j, int i, const QPoly& value) {
  const auto terms = telescoping_terms(n, k, j, i);
  QPoly sum;
  for (const auto& t : terms) {
    sum += t.value;
    if (t.is_partition()) {
      if (t.value.is_zero()) continue;
      const auto st = shape_stats(t.value);
      if (!t.value.has_nonnegative_coeffs() || st.darga != (n - j + k) * i) return false;
    } else if (t.value != -f_two_row_difference(t.second - 1, t.first + 1, i)) {
      return false;
    }
  }
  return sum == value;
}

std::vector<Finding> suite_two_row_skew(const Ctx& c) {
  return sweep(two_row_skew_points(c.max), c.bounds.jobs, [&](const std::vector<int>& p) {
    const int n = p[0], k = p[1], j = p[2];
    const auto& d = c.cache.get(SkewShape(Partition({n, k}), Partition({j})));
    std::vector<Finding> out;
    for (int i = 1; i <= n + k - j; ++i) {
      QPoly actual = f_two_row_skew(n, k, j, i);
      const bool ok = f_two_row_skew_rsum(n, k, j, i) == actual &&
                      telescoping_ok(n, k, j, i, actual) && unimodal(actual);
      out.push_back(finding(shape_name({n, k}, {j}), {{"n", n}, {"k", k}, {"j", j}, {"i", i}},
                            "two_row_skew", d.at(i), std::move(actual), ok));
    }
    return out;
  });
}

std::vector<Finding> suite_skew_rsum(const Ctx& c) {
  return sweep(two_row_skew_points(c.max), c.bounds.jobs, [&](const std::vector<int>& p) {
    const int n = p[0], k = p[1], j = p[2];
    const auto& split = c.cache.by_top_row_start(SkewShape(Partition({n, k}), Partition({j})));
    std::vector<Finding> out;
    for (int i = 1; i <= n + k - j; ++i) {
      for (int r = 1; r <= j + 1; ++r) {
        const auto it = split.find({r, i});
        out.push_back(finding(shape_name({n, k}, {j}),
                              {{"n", n}, {"k", k}, {"j", j}, {"i", i}, {"r", r}},
                              r == 1 ? "f_star" : "r_summand",
                              it == split.end() ? QPoly{} : it->second,
                              f_skew_r_summand(n, k, j, i, r)));
      }
    }
    return out;
  });
}

std::vector<Finding> suite_nk2(const Ctx& c) {
  Points pts;
  for (int n = 2; n + 4 <= c.max; ++n) {
    for (int k = 2; k <= n && n + k + 2 <= c.max; ++k) pts.push_back({n, k});
  }
  return sweep(pts, c.bounds.jobs, [&](const std::vector<int>& p) {
    const int n = p[0], k = p[1];
    std::vector<Finding> out;
    for (int i = 0; i <= k + 3; ++i) {
      QPoly actual = f_nk2(n, k, i);
      const bool ok = symmetric_unimodal(actual);
      out.push_back(finding(shape_name({n, k, 2}), {{"n", n}, {"k", k}, {"i", i}}, "nk2",
                            c.cache.f({n, k, 2}, i), std::move(actual), ok));
    }
    return out;
  });
}

Points partition_points(int lo, int hi) {
  Points pts;
  for (int n = lo; n <= hi; ++n) {
    for (const auto& p : partitions_of(n)) pts.push_back(parts_of(p));
  }
  return pts;
}

std::vector<Finding> suite_max_descents(const Ctx& c) {
  return sweep(partition_points(1, c.max), c.bounds.jobs, [&](const std::vector<int>& p) {
    const Partition lambda(p);
    const int d = lambda.size() - lambda.first();
    QPoly actual = f_max_descents(lambda);
    const bool ok = symmetric_unimodal(actual);
    return std::vector<Finding>{finding(format_partition(lambda), {{"i", d}}, "max_descents",
                                        c.cache.f(p, d), std::move(actual), ok)};
  });
}

std::vector<Finding> suite_three_row_full(const Ctx& c) {
  Points pts;
  for (int n = 1; n <= c.max; ++n) {
    for (int j = 0; j <= n && n + j <= c.max; ++j) {
      for (int k = 0; k <= j && n + j + k <= c.max; ++k) pts.push_back({n, j, k});
    }
  }
  return sweep(pts, c.bounds.jobs, [&](const std::vector<int>& p) {
    const int n = p[0], j = p[1], k = p[2];
    QPoly actual = f_three_row_full(n, j, k);
    const bool ok = symmetric_unimodal(actual);
    return std::vector<Finding>{finding(shape_name({n, j, k}), {{"n", n}, {"j", j}, {"k", k}},
                                        "three_row_full", c.cache.f({n, j, k}, j + k),
                                        std::move(actual), ok)};
  });
}

// beta with at most 6 parts and |beta| <= max; the shape is (k, beta').
std::vector<Finding> suite_max_descent_shift(const Ctx& c) {
  Points pts;
  for (int b = 0; b <= c.max; ++b) {
    for (const auto& beta : partitions_of(b)) {
      if (beta.length() > 6) continue;
      for (int k = std::max(beta.length(), 1); k <= 6; ++k) {
        auto p = parts_of(beta);
        p.insert(p.begin(), k);
        pts.push_back(p);
      }
    }
  }
  return sweep(pts, c.bounds.jobs, [&](const std::vector<int>& p) {
    const int k = p[0];
    const Partition beta(std::vector<int>(p.begin() + 1, p.end()));
    std::vector<int> shape = parts_of(conjugate(beta));
    shape.insert(shape.begin(), k);
    const int b = beta.size();
    QPoly oracle = c.cache.f(shape, b);
    const QPoly spec = ssyt_principal_spec(SkewShape(beta), k);
    const auto s = match_up_to_shift(oracle, spec);
    QPoly actual = s && *s >= 0 ? shift(spec, *s) : spec;
    const bool ok = s.has_value() && *s == b * (b + 1) / 2;
    return std::vector<Finding>{finding(format_partition(Partition(shape)),
                                        {{"k", k}, {"i", b}, {"shift", s.value_or(-1)}},
                                        "beta=" + format_partition(beta), std::move(oracle),
                                        std::move(actual), ok)};
  });
}

std::vector<Finding> suite_n33(const Ctx& c) {
  Points pts;
  for (int n = 3; n <= c.max; ++n) pts.push_back({n});
  return sweep(pts, c.bounds.jobs, [&](const std::vector<int>& p) {
    const int n = p[0];
    std::vector<Finding> out;
    for (int i = 2; i <= 6; ++i) {
      QPoly actual = f_n33(n, i);
      const bool ok = symmetric_unimodal(actual);
      out.push_back(finding(shape_name({n, 3, 3}), {{"n", n}, {"i", i}}, "n33",
                            c.cache.f({n, 3, 3}, i), std::move(actual), ok));
    }
    return out;
  });
}

std::vector<Finding> suite_stanley(const Ctx& c) {
  return sweep(partition_points(1, c.max), c.bounds.jobs, [&](const std::vector<int>& p) {
    const Partition lambda(p);
    return std::vector<Finding>{finding(format_partition(lambda), {}, "stanley",
                                        c.cache.get(SkewShape(lambda)).total,
                                        stanley_distribution(lambda))};
  });
}

std::vector<Finding> suite_two_row_total(const Ctx& c) {
  Points pts;
  for (int n = 1; n <= c.max; ++n) {
    for (int k = 0; 2 * k <= n; ++k) pts.push_back({n, k});
  }
  return sweep(pts, c.bounds.jobs, [&](const std::vector<int>& p) {
    const int n = p[0], k = p[1];
    QPoly actual = two_row_total(n, k);
    QPoly by_descents;
    for (int i = 0; i <= k; ++i) by_descents += f_two_row(n - k, k, i);
    const bool ok = by_descents == actual;
    return std::vector<Finding>{finding(shape_name({n - k, k}), {{"n", n}, {"k", k}},
                                        "two_row_total", c.cache.get(SkewShape(Partition({n - k, k}))).total,
                                        std::move(actual), ok)};
  });
}

std::vector<Finding> suite_a_polynomials(const Ctx& c) {
  std::vector<Finding> out;
  const APolynomialConfig config{c.bounds.permutation_limit, c.bounds.jobs};
  for (int n = 1; n <= c.max; ++n) {
    const auto direct = a_polynomials_direct(n, config);
    const auto via = a_polynomials_via_tableaux(n);
    for (int i = 0; i <= n / 2; ++i) {
      const auto d = direct.find(i);
      const auto v = via.find(i);
      if (d == direct.end() && v == via.end()) continue;
      QPoly actual = d == direct.end() ? QPoly{} : d->second;
      const bool ok = unimodal(actual) && (i == 0 || cocentricity(n, i));
      out.push_back(finding("", {{"n", n}, {"k", i}}, "A", v == via.end() ? QPoly{} : v->second,
                            std::move(actual), ok));
    }
  }
  return out;
}

std::vector<Finding> suite_cocentricity(const Ctx& c) {
  std::vector<Finding> out;
  for (int n = 1; n <= c.max; ++n) {
    for (int i = 1; 2 * i <= n; ++i) {
      out.push_back(finding("", {{"n", n}, {"i", i}}, "cocentricity", {}, {}, cocentricity(n, i)));
    }
  }
  return out;
}

std::vector<Finding> suite_kr(const Ctx& c) {
  return sweep(partition_points(1, c.max), c.bounds.jobs, [&](const std::vector<int>& p) {
    const Partition lambda(p);
    const int n = lambda.size();
    const auto& d = c.cache.get(SkewShape(lambda));
    std::vector<Finding> out;
    Integer total_at_one = 0;
    for (int k = 0; k <= n - lambda.first(); ++k) {
      bool identity = true;
      for (const auto& alpha : admissible_sequences(lambda, k)) {
        identity = identity && central_degree_identity(alpha, lambda, k);
      }
      QPoly actual = kr_kostka(lambda, k);
      total_at_one += actual.at_one();
      const QPoly& f = d.at(k);
      QPoly expected = f.is_zero() ? f : reciprocal_shift(f, n * (n - 1) / 2);
      out.push_back(finding(format_partition(lambda), {{"k", k}}, "kr_kostka", std::move(expected),
                            std::move(actual), identity));
    }
    out.push_back(finding(format_partition(lambda), {}, "frt_total",
                          QPoly::constant(frt_count(lambda)), QPoly::constant(total_at_one)));
    return out;
  });
}

std::vector<Finding> suite_koh(const Ctx& c) {
  Points pts;
  for (int n = 0; n <= c.max; ++n) {
    for (int a = 0; n + a <= c.max; ++a) pts.push_back({n, a});
  }
  return sweep(pts, c.bounds.jobs, [&](const std::vector<int>& p) {
    const int n = p[0], a = p[1];
    bool ok = true;
    QPoly actual;
    for (const auto& t : koh_terms(n, a)) {
      actual += t.value;
      if (t.value.is_zero()) continue;
      const auto st = shape_stats(t.value);
      ok = ok && st.symmetric && st.unimodal && st.darga == n * a;
    }
    return std::vector<Finding>{finding("", {{"n", n}, {"a", a}}, "koh", gauss_binomial(n + a, n),
                                        std::move(actual), ok)};
  });
}

std::vector<Finding> suite_lemma(const Ctx& c) {
  Points pts;
  for (int A = 1; A <= c.max; ++A) pts.push_back({A});
  return sweep(pts, c.bounds.jobs, [&](const std::vector<int>& p) {
    const int A = p[0];
    std::vector<Finding> out;
    for (int i = 1; i <= A; ++i) {
      for (int j = 0; j <= A; ++j) {
        auto sides = lemma_skew_sum(A, i, j);
        out.push_back(finding("", {{"A", A}, {"i", i}, {"j", j}}, "lemma", std::move(sides.rhs),
                              std::move(sides.lhs)));
      }
    }
    return out;
  });
}

std::vector<Finding> jacobi_trudi_case(const SkewShape& s, int m) {
  QPoly expected = ssyt_principal_spec(s, m);
  QPoly actual = jt_h_specialization(s, m);
  const bool ok = jt_e_specialization(s, m) == expected && symmetric_unimodal(actual);
  return {finding(format_shape(s), {{"m", m}}, s.is_straight() ? "straight" : "skew",
                  std::move(expected), std::move(actual), ok)};
}

std::vector<Finding> suite_jacobi_trudi(const Ctx& c) {
  Points pts;
  // Straight shapes as {0, parts...}; skew shapes as {1, index}.
  for (const auto& p : partition_points(0, c.max)) {
    auto q = p;
    q.insert(q.begin(), 0);
    pts.push_back(q);
  }
  const auto skews = normalized_skew_shapes(c.max);
  for (std::size_t idx = 0; idx < skews.size(); ++idx) {
    if (!skews[idx].is_straight()) pts.push_back({1, static_cast<int>(idx)});
  }
  return sweep(pts, c.bounds.jobs, [&](const std::vector<int>& p) {
    const SkewShape s = p[0] == 0 ? SkewShape(Partition(std::vector<int>(p.begin() + 1, p.end())))
                                  : skews[static_cast<std::size_t>(p[1])];
    std::vector<Finding> out;
    for (int m = 1; m <= 6; ++m) {
      auto f = jacobi_trudi_case(s, m);
      out.insert(out.end(), f.begin(), f.end());
    }
    return out;
  });
}

std::vector<Finding> suite_fstar_recurrence(const Ctx& c) {
  Points pts;
  for (int n = 1; n <= c.max; ++n) {
    for (int k = 1; k <= n; ++k) pts.push_back({n, k});
  }
  return sweep(pts, c.bounds.jobs, [&](const std::vector<int>& p) {
    const int n = p[0], k = p[1];
    std::vector<Finding> out;
    for (int j = 0; j < n; ++j) {
      for (int i = 2; i <= n + k; ++i) {
        auto r = fstar_recurrence(n, k, j, i);
        out.push_back(finding(shape_name({n, k}, {j}), {{"n", n}, {"k", k}, {"j", j}, {"i", i}},
                              r.label, std::move(r.lhs), std::move(r.rhs)));
      }
    }
    return out;
  });
}

std::vector<Finding> suite_nk2_recurrences(const Ctx& c) {
  Points pts;
  for (int n = 2; n + 4 <= c.max; ++n) {
    for (int k = 2; k <= n && n + k + 2 <= c.max; ++k) pts.push_back({n, k});
  }
  return sweep(pts, c.bounds.jobs, [&](const std::vector<int>& p) {
    const int n = p[0], k = p[1];
    std::vector<Finding> out;
    for (int i = 0; i <= n + k + 2; ++i) {
      for (auto& r : nk2_proof_identities(n, k, i, c.cache)) {
        out.push_back(finding(shape_name({n, k, 2}), {{"n", n}, {"k", k}, {"i", i}}, r.label,
                              std::move(r.lhs), std::move(r.rhs)));
      }
    }
    return out;
  });
}

Points three_row_points(int max) {
  Points pts;
  for (int N = 1; N <= max; ++N) {
    for (int l1 = 1; l1 <= N; ++l1) {
      for (int l2 = 0; l2 <= l1; ++l2) {
        const int l3 = N - l1 - l2;
        if (l3 >= 0 && l3 <= l2) pts.push_back({l1, l2, l3});
      }
    }
  }
  return pts;
}

std::vector<Finding> three_row_suite(const Ctx& c, bool printed) {
  return sweep(three_row_points(c.max), c.bounds.jobs, [&](const std::vector<int>& p) {
    std::vector<Finding> out;
    const int N = p[0] + p[1] + p[2];
    for (int i = 0; i < N; ++i) {
      auto r = three_row_recurrence(p[0], p[1], p[2], i, printed, c.cache);
      out.push_back(finding(format_partition(Partition(p)), {{"i", i}}, r.label, std::move(r.lhs),
                            std::move(r.rhs)));
    }
    return out;
  });
}

std::vector<Finding> suite_first_row(const Ctx& c) {
  return sweep(partition_points(1, c.max), c.bounds.jobs, [&](const std::vector<int>& p) {
    const Partition lambda(p);
    std::vector<Finding> out;
    for (int i = 0; i < lambda.size(); ++i) {
      auto r = first_row_recurrence(lambda, i, c.cache);
      out.push_back(finding(format_partition(lambda), {{"i", i}}, r.label, std::move(r.lhs),
                            std::move(r.rhs)));
    }
    return out;
  });
}

std::vector<Finding> conjecture_sweep(const Ctx& c, const Points& pts, const std::string& id,
                                      const std::function<std::vector<int>(const std::vector<int>&)>& shape,
                                      int i) {
  return sweep(pts, c.bounds.jobs, [&](const std::vector<int>& p) {
    Params params{{"n", p[0]}};
    if (p.size() > 1) params["k"] = p[1];
    const auto sh = shape(p);
    QPoly actual = conjecture_formula(id, params).value;
    return std::vector<Finding>{finding(shape_name(sh), params, id, c.cache.f(sh, i), std::move(actual))};
  });
}

Points range_points(int lo, int hi) {
  Points pts;
  for (int n = lo; n <= hi; ++n) pts.push_back({n});
  return pts;
}

std::vector<Finding> suite_conj_nn3(const Ctx& c) {
  return conjecture_sweep(c, range_points(3, c.max), "nn3_i3",
                          [](const std::vector<int>& p) { return std::vector<int>{p[0], p[0], 3}; }, 3);
}

std::vector<Finding> suite_conj_n44(const Ctx& c) {
  return conjecture_sweep(c, range_points(4, c.max), "n44_i3",
                          [](const std::vector<int>& p) { return std::vector<int>{p[0], 4, 4}; }, 3);
}

std::vector<Finding> suite_conj_nk3(const Ctx& c) {
  Points pts;
  for (int n = 3; n + 6 <= c.max; ++n) {
    for (int k = 3; k <= n && n + k + 3 <= c.max; ++k) pts.push_back({n, k});
  }
  return conjecture_sweep(c, pts, "nk3_i2",
                          [](const std::vector<int>& p) { return std::vector<int>{p[0], p[1], 3}; }, 2);
}

std::vector<Finding> suite_conj_n43(const Ctx& c) {
  return conjecture_sweep(c, range_points(4, c.max), "n43_i3",
                          [](const std::vector<int>& p) { return std::vector<int>{p[0], 4, 3}; }, 3);
}

std::vector<Finding> suite_conj_n53(const Ctx& c) {
  return conjecture_sweep(c, range_points(5, c.max), "n53_i3",
                          [](const std::vector<int>& p) { return std::vector<int>{p[0], 5, 3}; }, 3);
}

// One finding per shape; actual is the first non-unimodal polynomial, if any.
Finding skew_unimodal_case(const SkewShape& s, const OracleConfig& config) {
  const auto d = distribution(s, config);
  for (const auto& [i, p] : d.by_descents) {
    if (!unimodal(p)) return finding(format_shape(s), {{"i", i}}, "skew_unimodal", p, p, false);
  }
  return finding(format_shape(s), {}, "skew_unimodal", {}, {});
}

std::vector<Finding> suite_conj_skew_unimodal(const Ctx& c) {
  const auto shapes = normalized_skew_shapes(c.max);
  auto found = parallel_map(shapes.size(), c.bounds.jobs, [&](std::size_t idx) {
    return skew_unimodal_case(shapes[idx], c.bounds.oracle);
  });
  return found;
}

struct SuiteDef {
  FormulaStatus kind;
  int default_max;
  std::string grid;  // "{max}" is replaced by the bound
  std::function<std::vector<Finding>(const Ctx&)> run;
};

const std::map<std::string, SuiteDef>& suites() {
  using FS = FormulaStatus;
  static const std::map<std::string, SuiteDef> table = {
      {"two_row", {FS::theorem, 16, "shape (n,k), 0 <= k <= n, n + k <= {max}, 0 <= i <= k + 1", suite_two_row}},
      {"hook_nk1", {FS::theorem, 14, "shape (n,k,1), 1 <= k <= n, n + k + 1 <= {max}, 0 <= i <= k + 2", suite_hook_nk1}},
      {"two_row_skew", {FS::theorem, 13, "shape (n,k)/(j), 1 <= k <= n <= {max}, 0 <= j < n, n + k - j <= {max}, i >= 1", suite_two_row_skew}},
      {"skew_rsum", {FS::theorem, 12, "shape (n,k)/(j), n + k - j <= {max}, smallest top-row entry r = 1..j+1", suite_skew_rsum}},
      {"nk2", {FS::theorem, 14, "shape (n,k,2), 2 <= k <= n, n + k + 2 <= {max}, 0 <= i <= k + 3", suite_nk2}},
      {"max_descents", {FS::theorem, 11, "every partition of n <= {max}, i = n - lambda_1", suite_max_descents}},
      {"three_row_full", {FS::theorem, 14, "shape (n,j,k), n >= j >= k >= 0, n + j + k <= {max}, i = j + k", suite_three_row_full}},
      {"max_descent_shift", {FS::theorem, 8, "beta with at most 6 parts, |beta| <= {max}, shape (k, beta'), len(beta) <= k <= 6", suite_max_descent_shift}},
      {"n33", {FS::theorem, 8, "shape (n,3,3), 3 <= n <= {max}, 2 <= i <= 6", suite_n33}},
      {"stanley", {FS::theorem, 12, "every partition of n <= {max}, total over i", suite_stanley}},
      {"two_row_total", {FS::theorem, 16, "shape (n-k,k), 2k <= n <= {max}", suite_two_row_total}},
      {"a_polynomials", {FS::theorem, 10, "321-avoiding permutations of length n <= {max}", suite_a_polynomials}},
      {"cocentricity", {FS::theorem, 16, "two-row shapes of size n <= {max}, 1 <= i <= n/2", suite_cocentricity}},
      {"kr", {FS::theorem, 8, "every partition of n <= {max}, 0 <= k <= n - lambda_1", suite_kr}},
      {"koh", {FS::theorem, 14, "n, a >= 0, n + a <= {max}", suite_koh}},
      {"lemma_skew_sum", {FS::theorem, 20, "1 <= i <= A <= {max}, 0 <= j <= A", suite_lemma}},
      {"jacobi_trudi", {FS::theorem, 8, "straight and normalized skew shapes with <= {max} cells, 1 <= m <= 6", suite_jacobi_trudi}},
      {"fstar_recurrence", {FS::theorem, 10, "1 <= k <= n <= {max}, 0 <= j < n, 2 <= i <= n + k", suite_fstar_recurrence}},
      {"nk2_recurrences", {FS::theorem, 12, "shape (n,k,2), 2 <= k <= n, n + k + 2 <= {max}", suite_nk2_recurrences}},
      {"three_row_recurrence", {FS::theorem, 12, "shapes (l1,l2,l3) with <= {max} cells, corrected subset range", [](const Ctx& c) { return three_row_suite(c, false); }}},
      {"three_row_recurrence_printed", {FS::conjecture, 12, "shapes (l1,l2,l3) with <= {max} cells, every nonempty subset", [](const Ctx& c) { return three_row_suite(c, true); }}},
      {"first_row_recurrence", {FS::theorem, 10, "every partition of n <= {max}, 0 <= i < n", suite_first_row}},
      {"conj_nn3_i3", {FS::conjecture, 6, "shape (n,n,3), 3 <= n <= {max}, i = 3", suite_conj_nn3}},
      {"conj_n44_i3", {FS::conjecture, 6, "shape (n,4,4), 4 <= n <= {max}, i = 3", suite_conj_n44}},
      {"conj_nk3_i2", {FS::conjecture, 14, "shape (n,k,3), 3 <= k <= n, n + k + 3 <= {max}, i = 2", suite_conj_nk3}},
      {"conj_n43_i3", {FS::conjecture, 7, "shape (n,4,3), 4 <= n <= {max}, i = 3", suite_conj_n43}},
      {"conj_n53_i3", {FS::conjecture, 6, "shape (n,5,3), 5 <= n <= {max}, i = 3", suite_conj_n53}},
      {"conj_skew_unimodal", {FS::conjecture, 11, "normalized skew shapes with <= {max} cells, every i", suite_conj_skew_unimodal}},
  };
  return table;
}

const SuiteDef& suite(const std::string& id) {
  const auto it = suites().find(id);
  if (it == suites().end()) throw DomainError("unknown suite: " + id);
  return it->second;
}

ReportStatus status_of(FormulaStatus kind, bool all_passed) {
  if (kind == FormulaStatus::theorem) {
    return all_passed ? ReportStatus::all_pass : ReportStatus::mismatches;
  }
  return all_passed ? ReportStatus::conjecture_consistent : ReportStatus::conjecture_refuted;
}

}  // namespace

std::vector<std::string> suite_ids() {
  std::vector<std::string> out;
  for (const auto& [id, def] : suites()) out.push_back(id);
  return out;
}

int default_bound(const std::string& suite_id) { return suite(suite_id).default_max; }

std::string grid_description(const std::string& suite_id, int max) {
  std::string g = suite(suite_id).grid;
  const std::string token = "{max}";
  for (auto pos = g.find(token); pos != std::string::npos; pos = g.find(token)) {
    g.replace(pos, token.size(), std::to_string(max));
  }
  return g;
}

Report run_suite(const std::string& suite_id, const SuiteBounds& bounds) {
  const SuiteDef& def = suite(suite_id);
  const int max = bounds.max > 0 ? bounds.max : def.default_max;
  OracleCache cache(bounds.oracle);
  Report r;
  r.suite_id = suite_id;
  r.grid = grid_description(suite_id, max);
  r.kind = def.kind;
  r.cases = def.run(Ctx{max, bounds, cache});
  r.status = status_of(def.kind, r.failures() == 0);
  return r;
}

bool cocentricity(int n, int i) {
  if (n < 1 || i < 1) throw DomainError("cocentricity needs n >= 1 and i >= 1");
  for (int k = i; 2 * k <= n; ++k) {
    const QPoly f = f_two_row(n - k, k, i);
    if (f.is_zero()) continue;
    if (shape_stats(f).darga != n * i) return false;
  }
  return true;
}

Report sagan(int n, const SuiteBounds& bounds) {
  if (n < 1) throw DomainError("sagan needs n >= 1");
  Report r;
  r.suite_id = "sagan";
  r.grid = "A_{" + std::to_string(n) + ",k}; two-row skew shapes with <= " + std::to_string(n) +
           " cells";
  const APolynomialConfig config{bounds.permutation_limit, bounds.jobs};
  const auto direct = a_polynomials_direct(n, config);
  const auto via = a_polynomials_via_tableaux(n);
  for (int k = 0; k <= n / 2; ++k) {
    const auto d = direct.find(k);
    const auto v = via.find(k);
    if (d == direct.end() && v == via.end()) continue;
    QPoly actual = d == direct.end() ? QPoly{} : d->second;
    const bool ok = unimodal(actual);
    r.cases.push_back(finding("", {{"n", n}, {"k", k}}, "A", v == via.end() ? QPoly{} : v->second,
                              std::move(actual), ok));
  }
  std::vector<SkewShape> shapes;
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= a; ++b) {
      for (int j = 0; j <= b && j < a; ++j) {
        if (a + b - j <= n) shapes.push_back(SkewShape(Partition({a, b}), Partition({j})));
      }
    }
  }
  auto found = parallel_map(shapes.size(), bounds.jobs, [&](std::size_t idx) {
    return skew_unimodal_case(shapes[idx], bounds.oracle);
  });
  for (auto& f : found) r.cases.push_back(std::move(f));
  r.status = status_of(FormulaStatus::theorem, r.failures() == 0);
  return r;
}

}  // namespace majdist
