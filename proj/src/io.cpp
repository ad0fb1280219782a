#include "fig/io.hpp"

#include <fstream>
#include <sstream>

namespace fig {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError(path.string() + ": cannot open");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // The byte offset is all nlohmann reports; turn it into line:column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i, ++col)
      if (text[i] == '\n') {
        ++line;
        col = 0;
      }
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": invalid JSON");
  }
}

std::string dump(const Json& j) {
  return j.dump(2) + "\n";
}

// Writing

Json to_json(const Field& f) {
  if (f.is_prime())
    return {{"prime", f.characteristic()}};
  return {{"rationals", true}};
}

Json to_json(const FiniteGroup& g) {
  switch (g.kind()) {
    case FiniteGroup::Kind::trivial:
      return {{"trivial", true}};
    case FiniteGroup::Kind::cyclic:
      return {{"cyclic", g.order()}};
    case FiniteGroup::Kind::table:
      break;
  }
  return {{"table", g.table()}, {"identity", g.identity()}};
}

Json to_json(const Degree& d) {
  if (d.is_neg_inf())
    return "-inf";
  return d.value();
}

namespace {

Json column_json(const Matrix& v) {
  Json out = Json::array();
  for (std::size_t r = 0; r < v.rows(); ++r)
    out.push_back(v.field().format(v.at(r, 0)));
  return out;
}

Json degrees_json(const std::vector<Degree>& ds) {
  Json out = Json::array();
  for (const auto& d : ds)
    out.push_back(to_json(d));
  return out;
}

Json tally_json(const Tally& t) {
  return {{"pass", t.pass}, {"fail", t.fail}, {"inconclusive", t.inconclusive}};
}

}  // namespace

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(m.field().format(m.at(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const Presentation& p) {
  Json rels = Json::array();
  for (const auto& r : p.relations)
    rels.push_back({{"degree", r.degree}, {"coeffs", column_json(r.coords)}});
  return {{"field", to_json(p.field)},
          {"group", to_json(p.group)},
          {"truncation", p.truncation},
          {"generators", p.generators.degrees},
          {"relations", rels}};
}

Json to_json(const FreeMap& phi) {
  Json images = Json::array();
  for (const auto& x : phi.images)
    images.push_back(column_json(x));
  return {{"field", to_json(phi.field)},
          {"group", to_json(phi.group)},
          {"truncation", phi.truncation},
          {"source", phi.source.degrees},
          {"target", phi.target.degrees},
          {"images", images}};
}

Json to_json(const CampaignConfig& c) {
  Json groups = Json::array();
  for (const auto& g : c.groups)
    groups.push_back(to_json(g));
  return {{"seed", c.seed},
          {"samples", c.samples},
          {"torsion_samples", c.torsion_samples},
          {"map_samples", c.map_samples},
          {"morphism_samples", c.morphism_samples},
          {"primes", c.primes},
          {"groups", groups},
          {"max_generators", c.max_generators},
          {"max_generator_degree", c.max_generator_degree},
          {"max_relations", c.max_relations},
          {"max_relation_degree", c.max_relation_degree},
          {"truncation", c.truncation},
          {"s_max", c.s_max}};
}

Json to_json(const DegreeReport& r) {
  Json hd_cert = Json::array();
  for (bool b : r.certified.hd)
    hd_cert.push_back(b);
  return {{"truncation", r.truncation},
          {"s_max", r.s_max},
          {"gd", to_json(r.gd)},
          {"td", to_json(r.td)},
          {"hd", degrees_json(r.hd)},
          {"reg", to_json(r.reg)},
          {"certified",
           {{"gd", r.certified.gd}, {"td", r.certified.td}, {"hd", hd_cert}, {"reg", r.certified.reg}}}};
}

Json to_json(const FilteredResult& f) {
  Json out = {{"verdict", to_string(f.verdict)},
              {"layers", f.layers},
              {"failure_degree", f.failure_degree < 0 ? Json(nullptr) : Json(f.failure_degree)},
              {"tor1_vanishes", f.tor1_vanishes}};
  out["cross_check"] = f.cross_check ? Json(*f.cross_check) : Json(nullptr);
  return out;
}

Json to_json(const FilteredShift& s) {
  Json verdicts = Json::array();
  for (auto v : s.verdicts)
    verdicts.push_back(to_string(v));
  return {{"n_star", s.n_star ? Json(*s.n_star) : Json(nullptr)},
          {"bound", s.bound},
          {"status", to_string(s.status)},
          {"verdicts", verdicts}};
}

Json to_json(const SyzygyWitness& w) {
  return {{"generator_degrees", w.generator_degrees},
          {"stop_degree", to_json(w.stop_degree)},
          {"certified", w.certified},
          {"within_stop", w.within_stop},
          {"respans", w.respans},
          {"minimal", w.minimal},
          {"kernel_dims", w.kernel_dims},
          {"cokernel", to_json(w.quotient)}};
}

Json to_json(const Stabilization& s) {
  return {{"degree", s.degree ? Json(*s.degree) : Json(nullptr)},
          {"torsion_free", s.torsion_free},
          {"failures", s.failures}};
}

Json to_json(const Module& v) {
  Json iota = Json::array(), actions = Json::array();
  for (int n = 0; n < v.truncation(); ++n)
    iota.push_back(to_json(v.iota(n)));
  for (int n = 0; n <= v.truncation(); ++n) {
    Json per = Json::array();
    for (const auto& a : v.actions(n))
      per.push_back(to_json(a));
    actions.push_back(std::move(per));
  }
  return {{"field", to_json(v.field())},
          {"group", to_json(v.group())},
          {"truncation", v.truncation()},
          {"dims", v.dims()},
          {"iota", iota},
          {"actions", actions}};
}

Json to_json(const OracleReport& r) {
  Json mismatches = Json::array();
  for (const auto& m : r.mismatches)
    mismatches.push_back({{"quantity", m.quantity},
                          {"degree", m.degree < 0 ? Json(nullptr) : Json(m.degree)},
                          {"optimized", m.optimized},
                          {"dense", m.dense}});
  return {{"agree", r.agree()}, {"functoriality", r.functoriality}, {"mismatches", mismatches}};
}

Json to_json(const CampaignReport& r) {
  Json checks = Json::object();
  for (const auto& [name, t] : r.tallies)
    checks[name] = tally_json(t);
  Json samples = Json::array();
  for (const auto& s : r.samples) {
    Json j = {{"index", s.index}, {"kind", to_string(s.kind)}};
    if (s.presentation)
      j[s.kind == SampleKind::morphism ? "source" : "presentation"] = to_json(*s.presentation);
    if (s.target)
      j["target"] = to_json(*s.target);
    if (!s.images.empty()) {
      Json images = Json::array();
      for (const auto& x : s.images)
        images.push_back(column_json(x));
      j["images"] = images;
    }
    if (s.map)
      j["map"] = to_json(*s.map);
    if (s.report)
      j["report"] = to_json(*s.report);
    if (s.witness)
      j["witness"] = to_json(*s.witness);
    if (s.shift)
      j["shift"] = to_json(*s.shift);
    Json cs = Json::array();
    for (const auto& c : s.checks)
      cs.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
    j["checks"] = cs;
    samples.push_back(std::move(j));
  }
  return {{"tool", "figtool"},
          {"version", kVersion},
          {"seed", r.config.seed},
          {"config", to_json(r.config)},
          {"total", tally_json(r.total)},
          {"checks", checks},
          {"samples", samples}};
}

std::string summary_csv(const CampaignReport& r) {
  std::ostringstream out;
  out << "check,pass,fail,inconclusive\n";
  for (const auto& [name, t] : r.tallies)
    out << name << ',' << t.pass << ',' << t.fail << ',' << t.inconclusive << '\n';
  out << "total," << r.total.pass << ',' << r.total.fail << ',' << r.total.inconclusive << '\n';
  return out.str();
}

// Reading

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError((path.empty() ? std::string("<root>") : path) + ": " + what);
}

std::string at_key(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string at_index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

void require_object(const Json& j, const std::string& path,
                    std::initializer_list<const char*> allowed) {
  if (!j.is_object())
    fail(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed)
      known = known || key == a;
    if (!known)
      fail(at_key(path, key), "unknown field");
  }
}

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.contains(key))
    fail(at_key(path, key), "missing");
  return j.at(key);
}

const Json& array_of(const Json& j, const std::string& path) {
  if (!j.is_array())
    fail(path, "expected an array");
  return j;
}

long long integer(const Json& j, const std::string& path, long long lo, long long hi) {
  if (!j.is_number_integer())
    fail(path, "expected an integer");
  long long v = j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(hi)
                    ? hi + 1
                    : j.get<long long>();
  if (v < lo || v > hi)
    fail(path, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

int small_int(const Json& j, const std::string& path, int lo = 0, int hi = 1 << 20) {
  return static_cast<int>(integer(j, path, lo, hi));
}

Field field_from(const Json& j, const std::string& path) {
  require_object(j, path, {"prime", "rationals"});
  if (j.contains("prime") == j.contains("rationals"))
    fail(path, "expected exactly one of \"prime\" or \"rationals\"");
  if (j.contains("rationals")) {
    if (j.at("rationals") != true)
      fail(at_key(path, "rationals"), "must be true");
    return Field::rationals();
  }
  const auto p = integer(j.at("prime"), at_key(path, "prime"), 2, (1LL << 31) - 1);
  if (!is_prime_number(static_cast<std::uint64_t>(p)))
    fail(at_key(path, "prime"), std::to_string(p) + " is not prime");
  return Field::prime(static_cast<std::uint32_t>(p));
}

FiniteGroup group_from(const Json& j, const std::string& path) {
  require_object(j, path, {"trivial", "cyclic", "table", "identity"});
  const int kinds = j.contains("trivial") + j.contains("cyclic") + j.contains("table");
  if (kinds != 1)
    fail(path, "expected exactly one of \"trivial\", \"cyclic\" or \"table\"");
  if (j.contains("identity") && !j.contains("table"))
    fail(at_key(path, "identity"), "only allowed with \"table\"");
  try {
    if (j.contains("trivial")) {
      if (j.at("trivial") != true)
        fail(at_key(path, "trivial"), "must be true");
      return FiniteGroup::trivial();
    }
    if (j.contains("cyclic"))
      return FiniteGroup::cyclic(small_int(j.at("cyclic"), at_key(path, "cyclic"), 1, 1 << 16));
    const std::string tp = at_key(path, "table");
    const Json& rows = array_of(j.at("table"), tp);
    std::vector<std::vector<int>> table;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Json& row = array_of(rows[r], at_index(tp, r));
      table.emplace_back();
      for (std::size_t c = 0; c < row.size(); ++c)
        table.back().push_back(small_int(row[c], at_index(at_index(tp, r), c)));
    }
    return FiniteGroup::from_table(std::move(table),
                                   small_int(member(j, "identity", path), at_key(path, "identity")));
  } catch (const GroupError& e) {
    fail(path, e.what());
  }
}

FreeModuleSpec degrees_from(const Json& j, const std::string& path, int truncation) {
  FreeModuleSpec spec;
  array_of(j, path);
  for (std::size_t i = 0; i < j.size(); ++i)
    spec.degrees.push_back(small_int(j[i], at_index(path, i), 0, truncation));
  return spec;
}

std::size_t free_dim(const FreeModuleSpec& spec, int n, const FiniteGroup& g) {
  std::size_t d = 0;
  for (int m : spec.degrees)
    d += hom_count(m, n, g);
  return d;
}

Matrix column_from(const Json& j, const std::string& path, const Field& f, std::size_t dim) {
  array_of(j, path);
  if (j.size() != dim)
    fail(path, "expected " + std::to_string(dim) + " coefficients, got " + std::to_string(j.size()));
  Matrix v(f, dim, 1);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::string p = at_index(path, i);
    if (!j[i].is_string())
      fail(p, "field elements are decimal strings");
    try {
      v.set(i, 0, f.parse(j[i].get<std::string>()));
    } catch (const FieldError& e) {
      fail(p, e.what());
    }
  }
  return v;
}

}  // namespace

Presentation presentation_from_json(const Json& j) {
  require_object(j, "", {"field", "group", "truncation", "generators", "relations"});
  Presentation p;
  p.field = field_from(member(j, "field", ""), "field");
  p.group = group_from(member(j, "group", ""), "group");
  p.truncation = small_int(member(j, "truncation", ""), "truncation", 0, 64);
  p.generators = degrees_from(member(j, "generators", ""), "generators", p.truncation);
  const Json& rels = array_of(member(j, "relations", ""), "relations");
  for (std::size_t i = 0; i < rels.size(); ++i) {
    const std::string path = at_index("relations", i);
    require_object(rels[i], path, {"degree", "coeffs"});
    const int d = small_int(member(rels[i], "degree", path), at_key(path, "degree"), 0, p.truncation);
    p.relations.push_back({d, column_from(member(rels[i], "coeffs", path), at_key(path, "coeffs"),
                                          p.field, free_dim(p.generators, d, p.group))});
  }
  return p;
}

FreeMap free_map_from_json(const Json& j) {
  require_object(j, "", {"field", "group", "truncation", "source", "target", "images"});
  FreeMap phi;
  phi.field = field_from(member(j, "field", ""), "field");
  phi.group = group_from(member(j, "group", ""), "group");
  phi.truncation = small_int(member(j, "truncation", ""), "truncation", 0, 64);
  phi.source = degrees_from(member(j, "source", ""), "source", phi.truncation);
  phi.target = degrees_from(member(j, "target", ""), "target", phi.truncation);
  const Json& images = array_of(member(j, "images", ""), "images");
  if (images.size() != phi.source.degrees.size())
    fail("images", "expected one image per source generator");
  for (std::size_t i = 0; i < images.size(); ++i)
    phi.images.push_back(column_from(images[i], at_index("images", i), phi.field,
                                     free_dim(phi.target, phi.source.degrees[i], phi.group)));
  return phi;
}

CampaignConfig config_from_json(const Json& j) {
  require_object(j, "", {"seed", "samples", "torsion_samples", "map_samples", "morphism_samples",
                         "primes", "groups", "max_generators", "max_generator_degree",
                         "max_relations", "max_relation_degree", "truncation", "s_max"});
  CampaignConfig c;
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned())
      fail("seed", "expected an unsigned 64-bit integer");
    c.seed = j.at("seed").get<std::uint64_t>();
  }
  auto opt_int = [&](const char* key, int& out) {
    if (j.contains(key))
      out = small_int(j.at(key), key, -(1 << 20));
  };
  opt_int("samples", c.samples);
  opt_int("torsion_samples", c.torsion_samples);
  opt_int("map_samples", c.map_samples);
  opt_int("morphism_samples", c.morphism_samples);
  opt_int("max_generators", c.max_generators);
  opt_int("max_generator_degree", c.max_generator_degree);
  opt_int("max_relations", c.max_relations);
  opt_int("max_relation_degree", c.max_relation_degree);
  opt_int("truncation", c.truncation);
  opt_int("s_max", c.s_max);
  if (j.contains("primes")) {
    const Json& ps = array_of(j.at("primes"), "primes");
    c.primes.clear();
    for (std::size_t i = 0; i < ps.size(); ++i)
      c.primes.push_back(static_cast<std::uint32_t>(integer(ps[i], at_index("primes", i), 0, (1LL << 31) - 1)));
  }
  if (j.contains("groups")) {
    const Json& gs = array_of(j.at("groups"), "groups");
    c.groups.clear();
    for (std::size_t i = 0; i < gs.size(); ++i)
      c.groups.push_back(group_from(gs[i], at_index("groups", i)));
  }
  return c;
}

}  // namespace fig
