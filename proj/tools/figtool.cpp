// figtool: invariants, bound campaigns, syzygy witnesses and oracle checks
// for truncated FI_G-modules.
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"

#include "fig/functors.hpp"
#include "fig/io.hpp"

using namespace fig;

namespace {

enum Exit { ok = 0, violation = 1, bad_input = 2, internal = 3 };

struct Options {
  std::string file;
  std::string config;
  std::string map;
  std::optional<int> truncation;
  std::optional<int> s_max;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  std::string out;
  std::string format = "json";
  int cap = kDenseCap;
  bool inject_fault = false;
};

using Rows = std::vector<std::pair<std::string, std::string>>;

void flatten(const Json& j, const std::string& prefix, Rows& rows) {
  auto scalar_array = [](const Json& a) {
    for (const auto& x : a)
      if (x.is_structured())
        return false;
    return true;
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (j.is_array() && !scalar_array(j)) {
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

std::string render(const Json& j, const std::string& format) {
  if (format == "json")
    return dump(j);
  Rows rows;
  flatten(j, "", rows);
  std::ostringstream out;
  if (format == "csv") {
    out << "key,value\n";
    for (const auto& [k, v] : rows)
      out << k << ','
          << (v.find_first_of(",\"") == std::string::npos ? v : Json(v).dump()) << '\n';
  } else {
    std::size_t width = 0;
    for (const auto& r : rows)
      width = std::max(width, r.first.size());
    for (const auto& [k, v] : rows)
      out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  }
  return out.str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw ParseError(path + ": cannot write");
  out << text;
}

Json header(const char* command) {
  return {{"tool", "figtool"}, {"version", kVersion}, {"command", command}};
}

Presentation load_presentation(const Options& o, PresentationBounds& bounds) {
  Presentation p = presentation_from_json(parse_json(read_file(o.file), o.file));
  // Bounds always come from the full presentation, so relations cut off by a
  // lower truncation leave the affected degrees uncertified.
  bounds = bounds_of(p);
  if (o.truncation) {
    p.truncation = *o.truncation;
    for (int d : p.generators.degrees)
      if (d > p.truncation)
        throw ParseError("--truncation " + std::to_string(p.truncation) +
                         " is below generator degree " + std::to_string(d));
    std::erase_if(p.relations, [&](const Element& r) { return r.degree > p.truncation; });
  }
  return p;
}

int tally_exit(const std::vector<Check>& checks, Json& out) {
  std::size_t fails = 0, warnings = 0;
  Json cs = Json::array();
  for (const auto& c : checks) {
    cs.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
    fails += c.status == Status::fail;
    warnings += c.status == Status::inconclusive;
  }
  out["checks"] = cs;
  if (warnings)
    std::cerr << "warning: " << warnings << " inconclusive check(s)\n";
  return fails ? violation : ok;
}

int inspect(const Options& o) {
  PresentationBounds b;
  Presentation p = load_presentation(o, b);
  const Module v = from_presentation(p).module;
  DegreeReport r = degree_report(v, o.s_max.value_or(3), b);
  Json out = header("inspect");
  out["presentation"] = to_json(p);
  out["dims"] = v.dims();
  out.update(to_json(r));
  out["torsion_dims"] = torsion_part(v).torsion.dims();
  out["filtered"] = to_json(is_filtered(v, b.relations));
  auto checks = verify_degree_bounds(r);
  checks.push_back(verify_regularity_bound(r));
  int status = tally_exit(checks, out);
  emit(render(out, o.format), o.out);
  return status;
}

int filtered_shift(const Options& o) {
  PresentationBounds b;
  Presentation p = load_presentation(o, b);
  const Module v = from_presentation(p).module;
  DegreeReport r = degree_report(v, 1, b);
  FilteredShift s = smallest_filtered_shift(v, r, b);
  Json out = header("filtered-shift");
  out["presentation"] = to_json(p);
  out["gd"] = to_json(r.gd);
  out["td"] = to_json(r.td);
  out.update(to_json(s));
  int status = tally_exit({{"filtered.shift", s.status, ""}}, out);
  emit(render(out, o.format), o.out);
  return status;
}

/// Zeroes the first stored transposition or group generator action on a
/// nonzero degree; a zero matrix cannot square to the identity.
void corrupt(Module& v) {
  for (int n = 1; n <= v.truncation(); ++n)
    if (v.dim(n) > 0 && !v.actions(n).empty()) {
      v.overwrite_action(n, 0, Matrix(v.field(), v.dim(n), v.dim(n)));
      return;
    }
  throw ParseError("--inject-fault: no stored action to corrupt");
}

int oracle_check(const Options& o) {
  PresentationBounds b;
  Presentation p = load_presentation(o, b);
  Module v = from_presentation(p).module;
  if (o.inject_fault)
    corrupt(v);
  OracleReport r = compare(v, o.cap);
  Json out = header("oracle-check");
  out["presentation"] = to_json(p);
  out.update(to_json(r));
  if (!r.agree()) {
    out["module"] = to_json(v);
    std::cerr << "oracle disagreement: " << r.mismatches.size() << " mismatch(es), "
              << r.functoriality.size() << " functoriality violation(s)\n";
  }
  emit(render(out, o.format), o.out);
  return r.agree() ? ok : violation;
}

int witness(const Options& o) {
  FreeMap phi = free_map_from_json(parse_json(read_file(o.map), o.map));
  if (o.truncation)
    throw ParseError("--truncation does not apply to witness; set it in the map file");
  SyzygyWitness w = syzygy_witness(phi);
  Json out = header("witness");
  out["map"] = to_json(phi);
  out.update(to_json(w));
  auto checks = std::vector<Check>{
      {"syzygy.stop", !w.certified ? Status::inconclusive : w.within_stop ? Status::pass : Status::fail, ""},
      {"syzygy.respan", w.respans ? Status::pass : Status::fail, ""},
      {"syzygy.minimal", w.minimal ? Status::pass : Status::fail, ""}};
  int status = tally_exit(checks, out);
  emit(render(out, o.format), o.out);
  return status;
}

int verify_bounds(const Options& o) {
  CampaignConfig cfg = config_from_json(parse_json(read_file(o.config), o.config));
  if (o.seed)
    cfg.seed = *o.seed;
  if (o.truncation)
    cfg.truncation = *o.truncation;
  if (o.s_max)
    cfg.s_max = *o.s_max;
  validate(cfg);
  CampaignReport r = run_campaign(cfg, o.threads);

  for (const auto& s : r.samples)
    for (const auto& c : s.checks)
      if (c.status == Status::fail) {
        Json sample = to_json(r).at("samples").at(s.index);
        std::cerr << "FAIL sample " << s.index << " " << c.name << ": " << c.detail << "\n"
                  << sample.dump() << "\n";
      }
  if (r.total.inconclusive)
    std::cerr << "warning: " << r.total.inconclusive << " inconclusive check(s)\n";

  const std::string csv = summary_csv(r);
  if (!o.out.empty()) {
    std::filesystem::path csv_path(o.out);
    csv_path.replace_extension(".csv");
    emit(dump(to_json(r)), o.out);
    emit(csv, csv_path.string());
  }
  if (o.out.empty() || o.format != "json") {
    if (o.format == "json")
      std::cout << dump(to_json(r));
    else if (o.format == "csv")
      std::cout << csv;
    else {
      std::size_t width = 5;
      for (const auto& [name, t] : r.tallies)
        width = std::max(width, name.size());
      auto row = [&](const std::string& name, const Tally& t) {
        std::cout << name << std::string(width - name.size() + 2, ' ') << std::setw(6) << t.pass
                  << std::setw(6) << t.fail << std::setw(14) << t.inconclusive << '\n';
      };
      std::cout << "check" << std::string(width - 3, ' ') << "  pass  fail  inconclusive\n";
      for (const auto& [name, t] : r.tallies)
        row(name, t);
      row("total", r.total);
    }
  }
  return r.failures() ? violation : ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of truncated FI_G-modules"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Options o;

  auto add_output = [&](CLI::App* c) {
    c->add_option("--out", o.out, "Write the report here instead of standard output");
    c->add_option("--format", o.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };
  auto add_truncation = [&](CLI::App* c) {
    c->add_option("--truncation", o.truncation, "Override the truncation N")
        ->check(CLI::Range(0, 64));
  };

  auto* ins = app.add_subcommand("inspect", "Degree report of a presented module");
  ins->add_option("file", o.file, "Presentation file")->required();
  add_truncation(ins);
  ins->add_option("--smax", o.s_max, "Largest homological degree s")->check(CLI::Range(1, 16));
  add_output(ins);

  auto* vb = app.add_subcommand("verify-bounds", "Run a seeded bound-checking campaign");
  vb->add_option("--config", o.config, "Campaign config file")->required();
  add_truncation(vb);
  vb->add_option("--smax", o.s_max, "Largest homological degree s")->check(CLI::Range(1, 16));
  vb->add_option("--seed", o.seed, "Campaign seed (overrides the config)");
  vb->add_option("--threads", o.threads, "Worker threads; 0 uses every core");
  add_output(vb);

  auto* wit = app.add_subcommand("witness", "Generators of the kernel of a free map");
  wit->add_option("--map", o.map, "Map file")->required();
  add_truncation(wit);
  add_output(wit);

  auto* fs = app.add_subcommand("filtered-shift", "Smallest shift that is filtered");
  fs->add_option("file", o.file, "Presentation file")->required();
  add_truncation(fs);
  add_output(fs);

  auto* oc = app.add_subcommand("oracle-check", "Compare against the dense oracle");
  oc->add_option("file", o.file, "Presentation file")->required();
  add_truncation(oc);
  oc->add_option("--cap", o.cap, "Largest truncation the oracle accepts")->check(CLI::Range(0, 8));
  oc->add_flag("--inject-fault", o.inject_fault, "Corrupt one action matrix before comparing");
  add_output(oc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return bad_input;
  }
  if (oc->parsed() && o.cap > kDenseCap)
    std::cerr << "warning: dense cap " << o.cap << " above " << kDenseCap << " may be slow\n";

  try {
    if (ins->parsed())
      return inspect(o);
    if (vb->parsed())
      return verify_bounds(o);
    if (wit->parsed())
      return witness(o);
    if (fs->parsed())
      return filtered_shift(o);
    return oracle_check(o);
  } catch (const Error& e) {
    // Parse errors, rejected configs, refused densification, and inputs that
    // parse but do not describe a valid module or map.
    std::cerr << "error: " << e.what() << "\n";
    return bad_input;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return internal;
  }
}
