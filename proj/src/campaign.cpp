#include "fig/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "fig/functors.hpp"

namespace fig {

const char* to_string(SampleKind k) {
  switch (k) {
    case SampleKind::module:
      return "module";
    case SampleKind::torsion:
      return "torsion";
    case SampleKind::free_map:
      return "free_map";
    case SampleKind::morphism:
      return "morphism";
  }
  return "?";
}

// Torsion samples kill generator i from degree n_i + N_i on, N_i ≤ this.
constexpr int kMaxTorsionLength = 3;

int required_truncation(const CampaignConfig& cfg) {
  const int a = cfg.max_generator_degree, b = cfg.max_relation_degree, s = cfg.s_max;
  // Furthest shift searched: max{td, 2gd − 2} + 2 with td ≤ a + b − 1.
  const int furthest_shift = std::max(a + b + 1, 2 * a);
  return std::max({a + b + s - 1,            // hd_s windows
                   a + b,                    // td below the truncation
                   2 * a + 1,                // syzygy stop degree
                   furthest_shift + b,       // hd₁(Σ_a V) ≤ b visible in Σ_a V
                   a + std::max(a, b) + 2,   // hd₁ of morphism kernels
                   a + kMaxTorsionLength});  // torsion samples
}

void validate(const CampaignConfig& cfg) {
  if (cfg.samples < 0 || cfg.torsion_samples < 0 || cfg.map_samples < 0 || cfg.morphism_samples < 0)
    throw ConfigError("sample counts must be non-negative");
  if (cfg.primes.empty())
    throw ConfigError("at least one prime is required");
  for (auto p : cfg.primes)
    if (!is_prime_number(p))
      throw ConfigError(std::to_string(p) + " is not prime");
  if (cfg.groups.empty())
    throw ConfigError("at least one group is required");
  if (cfg.max_generators < 1 || cfg.max_relations < 0)
    throw ConfigError("max_generators must be at least 1 and max_relations non-negative");
  if (cfg.max_generator_degree < 0 || cfg.max_relation_degree < 0)
    throw ConfigError("degree caps must be non-negative");
  if (cfg.s_max < 1)
    throw ConfigError("s_max must be at least 1");
  const int need = required_truncation(cfg);
  if (cfg.truncation < need)
    throw ConfigError("truncation " + std::to_string(cfg.truncation) +
                      " cannot certify the configured caps; need at least " + std::to_string(need));
}

namespace {

Matrix random_vector(Rng& rng, const Field& f, std::size_t dim, bool nonzero) {
  Matrix v(f, dim, 1);
  do {
    for (std::size_t i = 0; i < dim; ++i)
      v.set(i, 0, static_cast<long>(rng.below(f.characteristic())));
  } while (nonzero && dim > 0 && v.is_zero());
  return v;
}

void add(std::vector<Check>& out, std::vector<Check> more) {
  for (auto& c : more)
    out.push_back(std::move(c));
}

Check check(std::string name, bool certified, bool ok, std::string detail) {
  Status s = !certified ? Status::inconclusive : ok ? Status::pass : Status::fail;
  return {std::move(name), s, std::move(detail)};
}

/// V_T has finite gd and td(V_T) = td(V).
Check torsion_check(const Module& v, const DegreeReport& r) {
  auto t = torsion_part(v, r.certified.td ? std::optional<Degree>(r.td) : std::nullopt);
  const Module& vt = t.torsion_part.module;
  Degree gd = generating_degree(vt), td = torsion_degree(vt);
  return check("torsion.part", t.certified, td == r.td && gd <= r.td,
               "td(V)=" + r.td.to_string() + " td(V_T)=" + td.to_string() +
                   " gd(V_T)=" + gd.to_string());
}

void module_checks(SampleRecord& rec, const CampaignConfig& cfg) {
  const Presentation& p = *rec.presentation;
  auto presented = from_presentation(p);
  const Module& v = presented.module;
  const auto b = bounds_of(p);
  const int N = v.truncation();
  auto r = degree_report(v, cfg.s_max, b);
  add(rec.checks, verify_degree_bounds(r));
  rec.checks.push_back(verify_regularity_bound(r));

  Module dv = derivative(v);
  if (!dv.is_zero()) {
    // DV is presented by D F¹ → D F⁰, generated in degrees ≤ gd(F⁰) − 1 < N.
    Degree gd_dv = generating_degree(dv);
    rec.checks.push_back(check("derivative.gd", r.certified.gd, gd_dv == r.gd - 1,
                               "gd(V)=" + r.gd.to_string() + " gd(DV)=" + gd_dv.to_string()));
  }
  Degree td_dv = torsion_degree(dv);
  Degree td_dv_bound = (b.generators - 1) + (b.relations - 1) - 1;
  rec.checks.push_back(check("derivative.td", td_dv_bound < Degree(N - 1), td_dv <= td_dv_bound,
                             "td(DV)=" + td_dv.to_string() + " bound=" + td_dv_bound.to_string()));

  rec.checks.push_back(torsion_check(v, r));

  auto f = is_filtered(v, b.relations);
  rec.checks.push_back(check("filtered.tor1_external", f.cross_check.has_value(),
                             f.cross_check.value_or(true),
                             std::string("peel=") + to_string(f.verdict) +
                                 " tor1_vanishes=" + (f.tor1_vanishes ? "true" : "false")));

  auto sh = smallest_filtered_shift(v, r, b);
  rec.checks.push_back({"filtered.shift", sh.status,
                        "n_star=" + (sh.n_star ? std::to_string(*sh.n_star) : std::string("none")) +
                            " bound=" + std::to_string(sh.bound)});
  rec.report = std::move(r);
  rec.shift = std::move(sh);
}

void torsion_sample(SampleRecord& rec, Rng& rng, const Field& f, const FiniteGroup& g,
                    const CampaignConfig& cfg) {
  Presentation p{f, g, cfg.truncation, {}, {}};
  for (int i = 0, c = rng.between(1, cfg.max_generators); i < c; ++i)
    p.generators.degrees.push_back(rng.between(0, cfg.max_generator_degree));
  Module free = free_module(p.generators, cfg.truncation, f, g);
  int kill = 0;
  for (std::size_t i = 0; i < p.generators.degrees.size(); ++i) {
    const int n = p.generators.degrees[i];
    const int d = n + rng.between(1, kMaxTorsionLength);
    kill = std::max(kill, d);
    // One injection generates all of M(n)_d, so this kills generator i from d on.
    Matrix rel(f, free.dim(d), 1);
    rel.set(free_offset(p.generators, i, d, g), 0, 1L);
    p.relations.push_back({d, rel});
  }
  if (rng.chance(1, 2)) {
    int d = rng.between(0, cfg.max_relation_degree);
    if (free.dim(d) > 0)
      p.relations.push_back({d, random_vector(rng, f, free.dim(d), true)});
  }
  rec.presentation = p;

  auto presented = from_presentation(p);
  const Module& v = presented.module;
  auto r = degree_report(v, 1, bounds_of(p));
  auto t = torsion_part(v);
  rec.checks.push_back(check("torsion.generators", kill <= cfg.truncation,
                             r.td <= Degree(kill) && t.torsion_part.module.dims() == v.dims(),
                             "td=" + r.td.to_string() + " max(n_i+N_i)=" + std::to_string(kill)));
  rec.checks.push_back(torsion_check(v, r));
  rec.report = std::move(r);
}

void free_map_sample(SampleRecord& rec, Rng& rng, const Field& f, const FiniteGroup& g,
                     const CampaignConfig& cfg) {
  FreeMap phi{f, g, cfg.truncation, {}, {}, {}};
  for (int i = 0, c = rng.between(1, cfg.max_generators); i < c; ++i)
    phi.source.degrees.push_back(rng.between(0, cfg.max_generator_degree));
  for (int i = 0, c = rng.between(1, cfg.max_generators); i < c; ++i)
    phi.target.degrees.push_back(rng.between(0, cfg.max_generator_degree));
  Module f0 = free_module(phi.target, cfg.truncation, f, g);
  for (int d : phi.source.degrees)
    phi.images.push_back(random_vector(rng, f, f0.dim(d), false));
  rec.map = phi;

  auto w = syzygy_witness(phi);
  std::string degrees;
  for (int d : w.generator_degrees)
    degrees += (degrees.empty() ? "" : ",") + std::to_string(d);
  rec.checks.push_back(check("syzygy.stop", w.certified, w.within_stop,
                             "degrees=[" + degrees + "] stop=" + w.stop_degree.to_string()));
  rec.checks.push_back(check("syzygy.respan", true, w.respans, ""));
  rec.checks.push_back(check("syzygy.minimal", true, w.minimal, ""));
  auto q = verify_degree_bounds(w.quotient);
  q.front().name = "syzygy.cokernel_td";
  rec.checks.push_back(q.front());
  rec.witness = std::move(w);
}

void morphism_sample(SampleRecord& rec, Rng& rng, const Field& f, const FiniteGroup& g,
                     const CampaignConfig& cfg) {
  const int N = cfg.truncation;
  Presentation u = sample_presentation(rng, f, g, cfg);
  Presentation v = sample_presentation(rng, f, g, cfg);
  Module fu = free_module(u.generators, N, f, g);
  Module fv = free_module(v.generators, N, f, g);
  std::vector<Element> lifted;
  for (int d : u.generators.degrees) {
    rec.images.push_back(random_vector(rng, f, fv.dim(d), false));
    lifted.push_back({d, rec.images.back()});
  }
  // Adding φ₀(relations of U) to V makes φ₀ descend to a morphism U → V.
  auto phi0 = free_map(u.generators, fu, fv, lifted);
  for (const auto& rel : u.relations)
    v.relations.push_back({rel.degree, phi0.maps[rel.degree] * rel.coords});
  rec.presentation = u;
  rec.target = v;

  auto pu = from_presentation(u);
  auto pv = from_presentation(v);
  std::vector<Element> images;
  for (const auto& x : lifted)
    images.push_back(project(pv, x));
  auto psi = free_map(u.generators, pu.free, pv.module, images);
  ModuleMorphism alpha;
  for (int n = 0; n <= N; ++n)
    alpha.maps.push_back(psi.maps[n] * pu.relations.parts[n].complement_lift());

  const auto bu = bounds_of(u), bv = bounds_of(v);
  const Degree mixed = max(bv.relations, bu.generators);
  const Degree gd_bound = bv.generators + mixed + 1;
  const Degree hd1_bound = max(bu.relations, bv.generators + mixed + 2);
  auto k = kernel_of(pu.module, pv.module, alpha);
  const int window = hd1_bound.is_finite() ? std::min(N, hd1_bound.value() + 1) : 0;
  auto tor = tor_koszul(k.module, 1, {N, window});
  Degree gd_k = tor[0].top(), hd1_k = tor[1].top();
  rec.checks.push_back(check("morphism.kernel",
                             gd_bound <= Degree(N) && hd1_bound <= Degree(N),
                             gd_k <= gd_bound && hd1_k <= hd1_bound,
                             "gd=" + gd_k.to_string() + " hd1=" + hd1_k.to_string() +
                                 " bounds=" + gd_bound.to_string() + "," + hd1_bound.to_string()));

  Presentation c = v;
  for (const auto& x : lifted)
    c.relations.push_back(x);
  const auto bc = bounds_of(c);
  auto rc = degree_report(from_presentation(c).module, 1, bc);
  rec.checks.push_back(check("morphism.cokernel", rc.certified.gd && rc.certified.hd[1],
                             rc.gd <= bc.generators && rc.hd[1] <= bc.relations,
                             "gd=" + rc.gd.to_string() + " hd1=" + rc.hd[1].to_string()));
  auto q = verify_degree_bounds(rc);
  q.front().name = "morphism.cokernel_td";
  rec.checks.push_back(q.front());
}

}  // namespace

Presentation sample_presentation(Rng& rng, const Field& field, const FiniteGroup& group,
                                 const CampaignConfig& cfg) {
  Presentation p{field, group, cfg.truncation, {}, {}};
  for (int i = 0, c = rng.between(1, cfg.max_generators); i < c; ++i)
    p.generators.degrees.push_back(rng.between(0, cfg.max_generator_degree));
  // A relation in its generator's own degree only cuts M(m) down to some
  // M(W), which is still filtered; start one degree up when the caps allow.
  int low = *std::min_element(p.generators.degrees.begin(), p.generators.degrees.end());
  if (low > cfg.max_relation_degree || cfg.max_relations == 0)
    return p;
  if (low < cfg.max_relation_degree)
    ++low;
  Module free = free_module(p.generators, cfg.truncation, field, group);
  for (int r = 0, c = rng.between(1, cfg.max_relations); r < c; ++r) {
    int d = rng.between(low, cfg.max_relation_degree);
    p.relations.push_back({d, random_vector(rng, field, free.dim(d), true)});
  }
  return p;
}

SampleRecord run_sample(const CampaignConfig& cfg, std::size_t index) {
  SampleRecord rec;
  rec.index = index;
  const std::size_t modules = static_cast<std::size_t>(cfg.samples);
  const std::size_t torsion = modules + static_cast<std::size_t>(cfg.torsion_samples);
  const std::size_t maps = torsion + static_cast<std::size_t>(cfg.map_samples);
  rec.kind = index < modules   ? SampleKind::module
             : index < torsion ? SampleKind::torsion
             : index < maps    ? SampleKind::free_map
                               : SampleKind::morphism;
  Rng rng(cfg.seed, index);
  const Field f = Field::prime(cfg.primes[rng.below(cfg.primes.size())]);
  const FiniteGroup& g = cfg.groups[rng.below(cfg.groups.size())];
  try {
    switch (rec.kind) {
      case SampleKind::module:
        rec.presentation = sample_presentation(rng, f, g, cfg);
        module_checks(rec, cfg);
        break;
      case SampleKind::torsion:
        torsion_sample(rec, rng, f, g, cfg);
        break;
      case SampleKind::free_map:
        free_map_sample(rec, rng, f, g, cfg);
        break;
      case SampleKind::morphism:
        morphism_sample(rec, rng, f, g, cfg);
        break;
    }
  } catch (const std::exception& e) {
    rec.checks.push_back({"internal.error", Status::fail, e.what()});
  }
  return rec;
}

CampaignReport run_campaign(const CampaignConfig& cfg, unsigned threads) {
  validate(cfg);
  const std::size_t count = static_cast<std::size_t>(cfg.samples + cfg.torsion_samples +
                                                     cfg.map_samples + cfg.morphism_samples);
  CampaignReport report;
  report.config = cfg;
  report.samples.resize(count);
  if (threads == 0)
    threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++)
      report.samples[i] = run_sample(cfg, i);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::min<std::size_t>(threads, count); ++t)
    pool.emplace_back(work);
  work();
  for (auto& t : pool)
    t.join();

  for (const auto& s : report.samples)
    for (const auto& c : s.checks) {
      Tally& t = report.tallies[c.name];
      auto bump = [&](Tally& x) {
        (c.status == Status::pass ? x.pass : c.status == Status::fail ? x.fail : x.inconclusive)++;
      };
      bump(t);
      bump(report.total);
    }
  return report;
}

}  // namespace fig
