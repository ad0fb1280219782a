#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fig/homology.hpp"
#include "fig/presentation.hpp"

namespace fig {

enum class Status { pass, fail, inconclusive };
const char* to_string(Status s);

/// A-priori bounds from a presentation F¹ → F⁰ → V → 0: gd(V) ≤ gd(F⁰) and
/// hd₁(V) ≤ gd(F¹), since Tor₁(V) embeds in H₀ of the relation submodule.
struct PresentationBounds {
  Degree generators;
  Degree relations;
};

PresentationBounds bounds_of(const Presentation& p);

/// Degree up to which Tor_s is computed: one past gd(F⁰) + gd(F¹) + s − 1,
/// capped at the truncation.
int tor_window(const PresentationBounds& b, int s, int truncation);

struct DegreeReport {
  int truncation = 0;
  int s_max = 0;
  Degree gd;
  Degree td;
  std::vector<Degree> hd;  // hd[s], hd[0] = gd
  Degree reg;

  struct Certified {
    bool gd = false;
    bool td = false;
    std::vector<bool> hd;
    bool reg = false;
  } certified;
};

/// Without bounds every Tor_s is computed to the truncation and nothing is
/// certified.
DegreeReport degree_report(const Module& v, int s_max,
                           std::optional<PresentationBounds> bounds = {});

struct Check {
  std::string name;
  Status status = Status::inconclusive;
  std::string detail;
};

/// td ≤ gd + hd₁ − 1 and hd_s ≤ gd + hd₁ + s − 1 for 1 ≤ s ≤ s_max.
std::vector<Check> verify_degree_bounds(const DegreeReport& r);

/// reg ≤ max{2gd − 1, td}.
Check verify_regularity_bound(const DegreeReport& r);

enum class Verdict { yes, no, inconclusive };
const char* to_string(Verdict v);

struct FilteredResult {
  Verdict verdict = Verdict::inconclusive;
  std::vector<int> layers;  // degree of each peeled layer M(V_m)
  int failure_degree = -1;  // first degree where M(V_m) → V is not injective
  bool tor1_vanishes = false;
  /// Peel versus Tor₁-vanishing (an external criterion), empty when the two
  /// ranges are not comparable.
  std::optional<bool> cross_check;
};

/// Peels M(V_m) → V at the lowest degree m while it is injective. A failure is
/// definitive; a full peel is certified when `hd1_bound` ≤ truncation.
FilteredResult is_filtered(const Module& v, std::optional<Degree> hd1_bound = {});

struct FilteredShift {
  std::optional<int> n_star;
  int bound = 0;  // max{td, 2gd − 2} + 1, at least 0
  Status status = Status::inconclusive;
  std::vector<Verdict> verdicts;  // is_filtered(Σ_a V) for a = 0, 1, …
};

/// Smallest a with Σ_a V filtered, searched up to one past the bound.
FilteredShift smallest_filtered_shift(const Module& v, const DegreeReport& r,
                                      const PresentationBounds& b);

}  // namespace fig
