#include "fig/invariants.hpp"

#include "fig/functors.hpp"

namespace fig {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::inconclusive:
      return "inconclusive";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

PresentationBounds bounds_of(const Presentation& p) {
  PresentationBounds b;
  for (int d : p.generators.degrees)
    b.generators = max(b.generators, Degree(d));
  for (const auto& r : p.relations)
    b.relations = max(b.relations, Degree(r.degree));
  return b;
}

int tor_window(const PresentationBounds& b, int s, int truncation) {
  Degree top = b.generators + b.relations + (s - 1);
  if (s == 0)
    top = b.generators;
  if (top.is_neg_inf())
    return std::min(truncation, 0);
  return std::min(truncation, top.value() + 1);
}

namespace {

Degree twice_minus_one(Degree d) {
  return d.is_finite() ? Degree(2 * d.value() - 1) : d;
}

Check compare(std::string name, bool certified, Degree lhs, Degree rhs, std::string detail) {
  Check c{std::move(name), Status::inconclusive, std::move(detail)};
  if (certified)
    c.status = lhs <= rhs ? Status::pass : Status::fail;
  return c;
}

}  // namespace

DegreeReport degree_report(const Module& v, int s_max, std::optional<PresentationBounds> bounds) {
  const int N = v.truncation();
  DegreeReport r;
  r.truncation = N;
  r.s_max = s_max;
  std::vector<int> windows;
  for (int s = 0; s <= s_max; ++s)
    windows.push_back(bounds && s > 0 ? tor_window(*bounds, s, N) : N);
  auto tor = tor_koszul(v, s_max, windows);
  for (const auto& t : tor)
    r.hd.push_back(t.top());
  r.gd = r.hd[0];
  r.td = torsion_degree(v);
  r.reg = regularity(r.hd);
  r.certified.hd.assign(static_cast<std::size_t>(s_max) + 1, false);
  if (!bounds)
    return r;

  const Degree cap(N);
  r.certified.gd = bounds->generators <= cap;
  r.certified.hd[0] = r.certified.gd;
  for (int s = 1; s <= s_max; ++s) {
    // hd₁ ≤ gd(F¹) directly; higher s use hd_s ≤ gd(F⁰) + gd(F¹) + s − 1.
    Degree limit = s == 1 ? bounds->relations : bounds->generators + bounds->relations + (s - 1);
    r.certified.hd[s] = limit <= cap;
  }
  if (s_max >= 1)
    r.certified.td = r.certified.gd && r.certified.hd[1] && r.gd + r.hd[1] - 1 < cap;
  r.certified.reg = s_max >= 1;
  for (int s = 1; s <= s_max; ++s)
    r.certified.reg = r.certified.reg && r.certified.hd[s];
  return r;
}

std::vector<Check> verify_degree_bounds(const DegreeReport& r) {
  std::vector<Check> out;
  if (r.s_max < 1)
    return out;
  const bool base = r.certified.gd && r.certified.hd[1];
  const Degree gd = r.gd, hd1 = r.hd[1];
  out.push_back(compare("bounds.td", base && r.certified.td, r.td, gd + hd1 - 1,
                        "td=" + r.td.to_string() + " gd=" + gd.to_string() +
                            " hd1=" + hd1.to_string()));
  for (int s = 1; s <= r.s_max; ++s)
    out.push_back(compare("bounds.hd" + std::to_string(s), base && r.certified.hd[s], r.hd[s],
                          gd + hd1 + (s - 1),
                          "hd" + std::to_string(s) + "=" + r.hd[s].to_string() +
                              " gd=" + gd.to_string() + " hd1=" + hd1.to_string()));
  return out;
}

Check verify_regularity_bound(const DegreeReport& r) {
  return compare("regularity.bound", r.certified.reg && r.certified.td && r.certified.gd, r.reg,
                 max(twice_minus_one(r.gd), r.td),
                 "reg=" + r.reg.to_string() + " gd=" + r.gd.to_string() +
                     " td=" + r.td.to_string());
}

namespace {

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n)
    return 0;
  std::size_t c = 1;
  for (int i = 0; i < k; ++i)
    c = c * static_cast<std::size_t>(n - i) / static_cast<std::size_t>(i + 1);
  return c;
}

}  // namespace

FilteredResult is_filtered(const Module& v, std::optional<Degree> hd1_bound) {
  const int N = v.truncation();
  FilteredResult out;
  Module cur = v;
  while (!cur.is_zero()) {
    int m = 0;
    while (cur.dim(m) == 0)
      ++m;
    std::vector<Element> basis;
    for (std::size_t j = 0; j < cur.dim(m); ++j) {
      Element e{m, Matrix(cur.field(), cur.dim(m), 1)};
      e.coords.set(j, 0, 1L);
      basis.push_back(std::move(e));
    }
    Submodule s = submodule_span(cur, basis);
    // M(V_m)_n has dimension C(n, m)·dim V_m over any G.
    for (int n = m; n <= N && out.failure_degree < 0; ++n)
      if (s.parts[n].dim() != binomial(n, m) * cur.dim(m))
        out.failure_degree = n;
    if (out.failure_degree >= 0)
      break;
    out.layers.push_back(m);
    cur = quotient(cur, s, Validate::no).module;
  }

  const bool certified = hd1_bound && *hd1_bound <= Degree(N);
  int window = N;
  if (hd1_bound)
    window = hd1_bound->is_finite() ? std::min(N, std::max(hd1_bound->value() + 1, 0)) : 0;
  out.tor1_vanishes = tor_koszul(v, 1, {0, window})[1].top().is_neg_inf();

  if (out.failure_degree >= 0) {
    out.verdict = Verdict::no;
    if (out.failure_degree <= window || certified)
      out.cross_check = !out.tor1_vanishes;
  } else {
    out.verdict = certified ? Verdict::yes : Verdict::inconclusive;
    out.cross_check = out.tor1_vanishes;
  }
  return out;
}

FilteredShift smallest_filtered_shift(const Module& v, const DegreeReport& r,
                                      const PresentationBounds& b) {
  FilteredShift out;
  Degree bound = max(r.td, r.gd.is_finite() ? Degree(2 * r.gd.value() - 2) : r.gd) + 1;
  out.bound = bound.is_finite() ? std::max(bound.value(), 0) : 0;
  bool definite = true;
  for (int a = 0; a <= std::min(out.bound + 1, v.truncation()); ++a) {
    // Σ_a is exact and Σ_a M(m) is generated in degrees ≤ m, so hd₁(Σ_a V) ≤ gd(F¹).
    auto f = is_filtered(shift(v, a), b.relations);
    out.verdicts.push_back(f.verdict);
    if (f.verdict == Verdict::yes) {
      out.n_star = a;
      break;
    }
    definite = definite && f.verdict == Verdict::no;
  }
  if (!(r.certified.gd && r.certified.td) || !definite)
    return out;
  if (out.n_star)
    out.status = *out.n_star <= out.bound ? Status::pass : Status::fail;
  else if (static_cast<int>(out.verdicts.size()) == out.bound + 2)
    out.status = Status::fail;
  return out;
}

}  // namespace fig
