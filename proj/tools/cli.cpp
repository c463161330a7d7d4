#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cache.hpp"
#include "modclass/classify.hpp"
#include "modclass/errors.hpp"
#include "modclass/green.hpp"
#include "modclass/limits.hpp"
#include "modclass/meataxe.hpp"
#include "modclass/serialize.hpp"

namespace modclass::cli {

namespace {

constexpr int kSchemaVersion = 1;

struct RunConfig {
  std::string group;
  std::uint32_t p = 0;
  std::uint32_t degree_bound = 6;
  std::size_t w = 0;
  std::uint32_t n = 0;
  std::string module_file;
  std::uint64_t seed = 0;
  std::string cache_dir;
  std::string format = "table";
  std::size_t max_group_order = 200;
  std::uint64_t max_field_size = std::uint64_t{1} << 20;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream text;
  text << in.rdbuf();
  Json j = Json::parse(text.str(), nullptr, false);
  if (j.is_discarded()) throw MathError("'" + path + "' is not valid JSON");
  return j;
}

GroupPtr load_group(const std::string& spec) {
  const auto names = catalog_names();
  if (std::find(names.begin(), names.end(), spec) != names.end()) return catalog_group(spec);
  if (!std::filesystem::exists(spec)) throw UsageError("'" + spec + "' is neither a catalog group nor a file");
  return group_from_json(read_json_file(spec));
}

Rep load_module(const std::string& path) {
  Json j = read_json_file(path);
  // Output documents of extend/restrict can be fed back in directly.
  if (j.is_object() && j.contains("module") && !j.contains("group")) j = j["module"];
  return module_from_json(j);
}

FieldPtr prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw MathError(std::to_string(p) + " is not prime");
  return make_field(p, 1);
}

Json subgroup_doc(const Subgroup& s) { return {{"order", s.order()}, {"elements", subgroup_to_json(s)}}; }

// ---- commands: each returns the result document ----

Json cmd_simples(const RunConfig& c) {
  const GroupPtr g = load_group(c.group);
  const SimpleSet set = simple_modules(g, prime_field(c.p), c.seed);
  Json mods = Json::array();
  for (std::size_t i = 0; i < set.modules.size(); ++i) {
    mods.push_back({{"index", i},
                    {"dim", set.modules[i].dim()},
                    {"end_degree", set.end_degrees[i]},
                    {"absolutely_simple", set.end_degrees[i] == 1},
                    {"module", module_to_json(set.modules[i])}});
  }
  return {{"group", group_to_json(g)}, {"p", c.p}, {"modules", std::move(mods)}};
}

Json cmd_count(const RunConfig& c) {
  const GroupPtr g = load_group(c.group);
  prime_field(c.p);
  const ClassificationReport r = count_absolutely_simple(g, c.p, c.seed);
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"dim", row.dim},
                    {"end_degree", row.end_degree},
                    {"fiber_size", row.fiber_size},
                    {"splitting_degree", row.splitting_degree}});
  }
  return {{"group", group_to_json(g)}, {"p", c.p},       {"rows", std::move(rows)},
          {"total", r.total},          {"oracle", r.oracle}, {"agree", r.agree},
          {"ok", r.agree}};
}

Json cmd_fiber(const RunConfig& c) {
  const GroupPtr g = load_group(c.group);
  const SimpleSet set = simple_modules(g, prime_field(c.p), c.seed);
  if (c.w >= set.modules.size()) {
    throw UsageError("simple module index " + std::to_string(c.w) + " out of range (there are " +
                     std::to_string(set.modules.size()) + ")");
  }
  const auto entries = fiber(set.modules[c.w], c.degree_bound, c.seed);
  Json list = Json::array();
  for (const auto& e : entries) {
    list.push_back({{"degree", e.entry.field->degree()},
                    {"orbit", e.galois_orbit_index},
                    {"dim", e.entry.module.dim()},
                    {"multiplicity", e.multiplicity},
                    {"absolutely_simple", e.entry.absolutely_simple},
                    {"absolutely_indecomposable", e.entry.absolutely_indecomposable},
                    {"module", module_to_json(e.entry.module)}});
  }
  return {{"group", group_to_json(g)}, {"p", c.p}, {"w", c.w}, {"bound", c.degree_bound},
          {"entries", std::move(list)}};
}

Json cmd_verify(const RunConfig& c) {
  const GroupPtr g = load_group(c.group);
  prime_field(c.p);
  const VerificationReport r = verify_classification(g, c.p, c.degree_bound, c.seed);
  Json clauses = Json::array();
  for (const auto& cl : r.clauses) {
    clauses.push_back({{"name", cl.name},
                       {"description", cl.description},
                       {"checks", cl.checks},
                       {"failures", cl.failures},
                       {"passed", cl.passed()},
                       {"notes", cl.notes}});
  }
  return {{"group", group_to_json(g)}, {"p", c.p},   {"bound", c.degree_bound}, {"seed", c.seed},
          {"sample_size", r.sample_size}, {"clauses", std::move(clauses)}, {"ok", r.passed()}};
}

Json cmd_decompose(const RunConfig& c) {
  const Rep v = load_module(c.module_file);
  const Decomposition d = decompose(v, c.seed);
  Json summands = Json::array();
  for (const auto& s : d.summands) {
    summands.push_back({{"dim", s.module.dim()},
                        {"multiplicity", s.multiplicity},
                        {"end_dim", end_degree(s.module)},
                        {"module", module_to_json(s.module)}});
  }
  return {{"dim", v.dim()}, {"summands", std::move(summands)}, {"basis_change", matrix_to_json(d.basis_change)}};
}

Json cmd_vertex(const RunConfig& c) {
  const Rep v = load_module(c.module_file);
  return {{"dim", v.dim()}, {"vertex", subgroup_doc(vertex(v, c.seed))}};
}

Json cmd_source(const RunConfig& c) {
  const Rep v = load_module(c.module_file);
  const Subgroup q = vertex(v, c.seed);
  return {{"dim", v.dim()}, {"vertex", subgroup_doc(q)}, {"source", module_to_json(source(v, q, c.seed))}};
}

Json cmd_green(const RunConfig& c) {
  const Rep v = load_module(c.module_file);
  const Subgroup q = vertex(v, c.seed);
  const Subgroup h = normalizer(q);
  const Rep gr = green_correspondent(v, q, h, c.seed);
  return {{"dim", v.dim()},
          {"vertex", subgroup_doc(q)},
          {"normalizer", subgroup_doc(h)},
          {"correspondent", module_to_json(gr)}};
}

Json cmd_extend(const RunConfig& c) {
  const Rep v = load_module(c.module_file);
  const FieldPtr l = make_field(v.field()->characteristic(), c.n);
  if (c.n % v.field()->degree() != 0) throw MathError(v.field()->name() + " is not a subfield of " + l->name());
  return {{"module", module_to_json(extend_scalars(v, l))}};
}

Json cmd_restrict(const RunConfig& c) {
  const Rep v = load_module(c.module_file);
  if (c.n == 0 || v.field()->degree() % c.n != 0) {
    throw MathError("GF(p^" + std::to_string(c.n) + ") is not a subfield of " + v.field()->name());
  }
  return {{"module", module_to_json(restrict_scalars(v, make_field(v.field()->characteristic(), c.n)))}};
}

// ---- rendering ----

class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& out) const {
    std::vector<std::size_t> width(rows_.front().size(), 0);
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      for (std::size_t i = 0; i < rows_[k].size(); ++i) {
        out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << rows_[k][i];
      }
      out << '\n';
      if (k == 0) {
        for (std::size_t i = 0; i < width.size(); ++i) out << (i ? "  " : "") << std::string(width[i], '-');
        out << '\n';
      }
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string str(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }
std::string yes_no(const Json& j) { return j.get<bool>() ? "yes" : "no"; }

std::string field_text(const Json& f) {
  return "GF(" + str(f["p"]) + (f["n"].get<int>() == 1 ? "" : "^" + str(f["n"])) + ")";
}

void print_module_summary(std::ostream& out, const Json& m) {
  out << "dim " << str(m["dim"]) << " over " << field_text(m["field"]) << '\n';
  for (std::size_t k = 0; k < m["generators"].size(); ++k) {
    out << "generator " << k + 1 << ":\n";
    for (const auto& row : m["generators"][k]) {
      out << "  ";
      for (const auto& e : row) {
        std::string s;
        for (const auto& c : e) s += str(c);
        out << ' ' << s;
      }
      out << '\n';
    }
  }
}

std::string subgroup_text(const Json& s) { return "order " + str(s["order"]); }

void render_table(const std::string& cmd, const Json& r, std::ostream& out) {
  if (cmd == "simples") {
    Table t({"index", "dim", "End degree", "absolutely simple"});
    for (const auto& m : r["modules"]) {
      t.add({str(m["index"]), str(m["dim"]), str(m["end_degree"]), yes_no(m["absolutely_simple"])});
    }
    t.print(out);
  } else if (cmd == "count") {
    Table t({"dim W", "End degree", "|fiber|", "splitting degree"});
    for (const auto& row : r["rows"]) {
      t.add({str(row["dim"]), str(row["end_degree"]), str(row["fiber_size"]), str(row["splitting_degree"])});
    }
    t.print(out);
    out << "total " << str(r["total"]) << ", p-regular classes " << str(r["oracle"]) << ", "
        << (r["agree"].get<bool>() ? "agree" : "DISAGREE") << '\n';
  } else if (cmd == "fiber") {
    Table t({"degree", "orbit", "dim", "multiplicity", "abs. simple", "abs. indecomposable"});
    for (const auto& e : r["entries"]) {
      t.add({str(e["degree"]), str(e["orbit"]), str(e["dim"]), str(e["multiplicity"]),
             yes_no(e["absolutely_simple"]), yes_no(e["absolutely_indecomposable"])});
    }
    t.print(out);
  } else if (cmd == "verify") {
    Table t({"clause", "checks", "failures", "result"});
    for (const auto& c : r["clauses"]) {
      t.add({str(c["name"]), str(c["checks"]), str(c["failures"]), c["passed"].get<bool>() ? "pass" : "FAIL"});
    }
    t.print(out);
    for (const auto& c : r["clauses"]) {
      for (const auto& n : c["notes"]) out << str(c["name"]) << ": " << str(n) << '\n';
    }
    out << (r["ok"].get<bool>() ? "all clauses pass" : "some clauses FAIL") << '\n';
  } else if (cmd == "decompose") {
    Table t({"summand", "dim", "multiplicity", "End dim"});
    for (std::size_t i = 0; i < r["summands"].size(); ++i) {
      const auto& s = r["summands"][i];
      t.add({std::to_string(i), str(s["dim"]), str(s["multiplicity"]), str(s["end_dim"])});
    }
    t.print(out);
  } else if (cmd == "vertex") {
    out << "vertex: " << subgroup_text(r["vertex"]) << '\n';
  } else if (cmd == "source") {
    out << "vertex: " << subgroup_text(r["vertex"]) << "\nsource: ";
    print_module_summary(out, r["source"]);
  } else if (cmd == "green") {
    out << "vertex: " << subgroup_text(r["vertex"]) << "\nnormalizer: " << subgroup_text(r["normalizer"])
        << "\ncorrespondent: ";
    print_module_summary(out, r["correspondent"]);
  } else {
    print_module_summary(out, r["module"]);
  }
}

using Command = std::function<Json(const RunConfig&)>;

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Modular representations of small finite groups: simple modules, decompositions, vertices "
               "and their behaviour under field extension"};
  app.require_subcommand(1);
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"table", "structured"}));
  app.add_option("--seed", c.seed, "Seed for the randomized algorithms");
  app.add_option("--cache-dir", c.cache_dir, "Directory of the result cache (disabled when empty)");
  app.add_option("--max-group-order", c.max_group_order, "Largest group order accepted")->check(CLI::PositiveNumber);
  app.add_option("--max-field-size", c.max_field_size, "Largest field size accepted")->check(CLI::PositiveNumber);

  std::vector<std::pair<CLI::App*, Command>> commands;
  auto group_cmd = [&](const char* name, const char* help, Command f) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("-g,--group", c.group, "Catalog group name or group file")->required();
    sub->add_option("-p,--prime", c.p, "Characteristic")->required();
    commands.emplace_back(sub, std::move(f));
    return sub;
  };
  auto module_cmd = [&](const char* name, const char* help, Command f) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("module", c.module_file, "Module file")->required();
    commands.emplace_back(sub, std::move(f));
    return sub;
  };

  group_cmd("simples", "Simple modules over the prime field", cmd_simples);
  group_cmd("count", "Count absolutely simple modules through the fibers over the simple modules", cmd_count);
  auto* fiber_sub = group_cmd("fiber", "Components of W over GF(p^n) for n up to the bound", cmd_fiber);
  fiber_sub->add_option("-w,--simple", c.w, "Index of the simple module (see 'simples')")->required();
  fiber_sub->add_option("-b,--bound", c.degree_bound, "Largest field degree")->check(CLI::PositiveNumber);
  auto* verify_sub = group_cmd("verify", "Check the classification statements on a group", cmd_verify);
  verify_sub->add_option("-b,--bound", c.degree_bound, "Largest field degree")->check(CLI::PositiveNumber);
  module_cmd("decompose", "Krull-Schmidt decomposition of a module", cmd_decompose);
  module_cmd("vertex", "Vertex of an indecomposable module", cmd_vertex);
  module_cmd("source", "Vertex and source of an indecomposable module", cmd_source);
  module_cmd("green", "Green correspondent in the normalizer of the vertex", cmd_green);
  module_cmd("extend", "Extension of scalars to GF(p^n)", cmd_extend)
      ->add_option("-n,--degree", c.n, "Degree of the target field")
      ->required()
      ->check(CLI::PositiveNumber);
  module_cmd("restrict", "Restriction of scalars to GF(p^n)", cmd_restrict)
      ->add_option("-n,--degree", c.n, "Degree of the target field")
      ->required()
      ->check(CLI::PositiveNumber);

  std::vector<std::string> argv_store{"modclass"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  std::string name;
  Command command;
  for (auto& [sub, f] : commands) {
    if (sub->parsed()) {
      name = sub->get_name();
      command = f;
    }
  }

  try {
    limits().max_group_order = c.max_group_order;
    limits().max_field_size = c.max_field_size;

    Json result;
    if (c.cache_dir.empty()) {
      result = command(c);
    } else {
      // The key names everything the result depends on, inputs by content.
      Json request = {{"command", name}, {"seed", c.seed}};
      if (!c.group.empty()) request["group"] = group_to_json(load_group(c.group));
      if (c.p != 0) request["p"] = c.p;
      if (name == "fiber" || name == "verify") request["bound"] = c.degree_bound;
      if (name == "fiber") request["w"] = c.w;
      if (!c.module_file.empty()) request["module"] = module_to_json(load_module(c.module_file));
      if (c.n != 0) request["n"] = c.n;
      Cache cache(c.cache_dir, err);
      result = cache.fetch_or_compute("modclass/" + std::to_string(kSchemaVersion) + "/" + request.dump(),
                                      [&] { return command(c); });
    }
    result["schema_version"] = kSchemaVersion;
    result["command"] = name;

    if (c.format == "structured") {
      out << result.dump(2) << '\n';
    } else {
      render_table(name, result, out);
    }
    return result.value("ok", true) ? 0 : 2;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace modclass::cli
