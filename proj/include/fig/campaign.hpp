#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fig/noetherian.hpp"
#include "fig/random.hpp"

namespace fig {

inline constexpr const char* kVersion = "0.1.0";

struct ConfigError : Error {
  using Error::Error;
};

struct CampaignConfig {
  std::uint64_t seed = 1;
  int samples = 100;           // random presented modules
  int torsion_samples = 20;    // modules whose generators are all torsion
  int map_samples = 50;        // free maps, for syzygy witnesses
  int morphism_samples = 30;   // morphisms between presented modules
  std::vector<std::uint32_t> primes{2, 5};
  std::vector<FiniteGroup> groups{FiniteGroup::trivial()};
  int max_generators = 2;
  int max_generator_degree = 3;
  int max_relations = 2;
  int max_relation_degree = 4;
  int truncation = 12;
  int s_max = 3;

  bool operator==(const CampaignConfig&) const = default;
};

/// Smallest truncation at which every check the campaign runs is certified
/// for the configured degree caps.
int required_truncation(const CampaignConfig& cfg);
/// Throws ConfigError.
void validate(const CampaignConfig& cfg);

enum class SampleKind { module, torsion, free_map, morphism };
const char* to_string(SampleKind k);

struct SampleRecord {
  std::size_t index = 0;
  SampleKind kind = SampleKind::module;
  std::optional<Presentation> presentation;  // V, or the source of a morphism
  std::optional<Presentation> target;        // morphisms only
  std::vector<Matrix> images;                // morphisms: images of the source generators
  std::optional<FreeMap> map;
  std::optional<DegreeReport> report;
  std::optional<SyzygyWitness> witness;
  std::optional<FilteredShift> shift;
  std::vector<Check> checks;
};

struct Tally {
  std::size_t pass = 0, fail = 0, inconclusive = 0;
  bool operator==(const Tally&) const = default;
};

struct CampaignReport {
  CampaignConfig config;
  std::vector<SampleRecord> samples;  // by index
  std::map<std::string, Tally> tallies;
  Tally total;

  std::size_t failures() const { return total.fail; }
};

/// Presentation under the caps: 1..max_generators generators with degrees
/// uniform in [0, max_gd]; 1..max_relations nonzero relations with degrees
/// uniform in [lowest generator degree + 1, max_rel] and uniform coefficients.
Presentation sample_presentation(Rng& rng, const Field& field, const FiniteGroup& group,
                                 const CampaignConfig& cfg);

SampleRecord run_sample(const CampaignConfig& cfg, std::size_t index);

/// threads = 0 uses the hardware concurrency; the report does not depend on it.
CampaignReport run_campaign(const CampaignConfig& cfg, unsigned threads = 0);

}  // namespace fig
