// endolat: command-line front end for the lattice/endomorphism toolkit.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "endolat/claims.hpp"
#include "endolat/corpus.hpp"
#include "endolat/error.hpp"
#include "endolat/io.hpp"
#include "endolat/monoid.hpp"
#include "endolat/properties.hpp"
#include "json.hpp"

using namespace endolat;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitViolation = 3;

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::kParse:
    case ErrorKind::kPrecondition:
      return kExitUsage;
    case ErrorKind::kTheoremViolated:
      return kExitViolation;
    default:
      return kExitValidation;
  }
}

struct Options {
  std::string format = "text";
  int jobs = 0;
  std::string monoid = "full";
  std::vector<std::string> claims;
  std::vector<std::string> properties;
};

bool records(Options const& o) { return o.format == "records"; }

// Keys keep insertion order so every record starts with schema and kind.
void emit(json const& j) {
  json out = {{"schema", 1}};
  if (j.contains("kind")) out["kind"] = j["kind"];
  for (auto const& [k, v] : j.items()) out[k] = v;
  std::cout << out.dump() << "\n";
}

json witness_json(Witness const& w) {
  json j = json::object();
  for (auto const& [k, v] : w) j[k] = v;
  return j;
}

std::string witness_text(Witness const& w) {
  std::string s;
  for (auto const& [k, v] : w) {
    if (!s.empty()) s += "; ";
    s += k + "=";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  }
  return s;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

// -- inputs --------------------------------------------------------------------

// "named:<example>", "group:<spec>", "-" for stdin, or a file path.
std::vector<LatticePtr> load(std::string const& input) {
  if (input.rfind("named:", 0) == 0) return {named_example(input.substr(6))};
  if (input.rfind("group:", 0) == 0) return {subgroup_lattice(input.substr(6))};
  if (input == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return parse_lattices(ss.str(), "<stdin>");
  }
  return read_lattice_file(input);
}

struct MonoidPolicy {
  enum Kind { kFull, kGenerated, kFile } kind = kFull;
  int k = 0;
  std::string path;
};

MonoidPolicy parse_policy(std::string const& s) {
  MonoidPolicy p;
  if (s == "full") return p;
  if (s.rfind("generated:", 0) == 0) {
    std::string num = s.substr(10);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos ||
        num.size() > 2) {
      throw Error(ErrorKind::kParse, "bad --monoid value '" + s + "'");
    }
    p.kind = MonoidPolicy::kGenerated;
    p.k = std::stoi(num);
    if (p.k > 2) {
      throw Error(ErrorKind::kPrecondition,
                  "generated:<k> supports k <= 2 (submonoids grow combinatorially)");
    }
    return p;
  }
  if (s.rfind("file:", 0) == 0 && s.size() > 5) {
    p.kind = MonoidPolicy::kFile;
    p.path = s.substr(5);
    return p;
  }
  throw Error(ErrorKind::kParse, "bad --monoid value '" + s +
                                     "' (expected full, generated:<k> or file:<path>)");
}

std::vector<EndoMonoid> monoids_for(LatticePtr const& L, MonoidPolicy const& p) {
  switch (p.kind) {
    case MonoidPolicy::kFull:
      return {full_endo_monoid(L)};
    case MonoidPolicy::kGenerated:
      return sweep_monoids(L, p.k, Exec::kParallel);
    case MonoidPolicy::kFile: {
      auto named = read_morphism_file(p.path, L);
      std::vector<LinearMorphism> gens;
      std::string name = "<";
      for (std::size_t i = 0; i < named.size(); ++i) {
        gens.push_back(named[i].morphism);
        name += (i ? "," : "") + named[i].name;
      }
      return {generate_submonoid(L, gens, name + ">")};
    }
  }
  return {};
}

// -- commands ------------------------------------------------------------------

int cmd_validate(std::vector<std::string> const& inputs, bool require_modular,
                 Options const& o) {
  int status = kExitOk;
  for (auto const& input : inputs) {
    std::vector<LatticePtr> lattices;
    try {
      lattices = load(input);
    } catch (Error const& e) {
      std::cerr << e.what() << "\n";
      status = std::max(status, exit_code_for(e.kind()));
      continue;
    }
    for (auto const& L : lattices) {
      ModularityResult mod = check_modular(*L);
      if (records(o)) {
        emit({{"kind", "validation"}, {"source", input}, {"lattice", L->name()},
              {"size", L->size()}, {"modular", mod.modular}});
      } else {
        std::cout << L->name() << ": " << L->size() << " elements, "
                  << (mod.modular ? "modular" : "not modular") << "\n";
      }
      if (require_modular && !mod.modular) {
        auto [a, b, x] = *mod.witness;
        std::cerr << input << ": lattice '" << L->name() << "' is not modular: a="
                  << L->element_name(a) << " b=" << L->element_name(b)
                  << " x=" << L->element_name(x) << "\n";
        status = std::max(status, kExitValidation);
      }
    }
  }
  return status;
}

int cmd_show(std::string const& input, Options const& o) {
  for (auto const& L : load(input)) {
    if (records(o)) {
      emit({{"kind", "lattice"}, {"lattice", json::parse(format_lattice_json(*L))}});
    } else {
      std::cout << format_lattice(*L);
    }
  }
  return kExitOk;
}

int cmd_analyze(std::string const& input, Options const& o) {
  MonoidPolicy policy = parse_policy(o.monoid);
  for (auto const& L : load(input)) {
    for (auto const& m : monoids_for(L, policy)) {
      PropertyReport r = analyze(m, o.properties);
      if (records(o)) {
        for (auto const& [id, v] : r.values) {
          json j = {{"kind", "property"}, {"lattice", r.lattice}, {"monoid", r.monoid},
                    {"property", id}, {"value", v.value},
                    {"witness", witness_json(v.witness)}, {"millis", r.millis[id]}};
          if (v.skipped_reason) j["skipped"] = *v.skipped_reason;
          if (!v.note.empty()) j["note"] = v.note;
          emit(j);
        }
        continue;
      }
      std::cout << "lattice " << r.lattice << " (" << L->size() << " elements)\n"
                << "monoid " << r.monoid << " order " << m.order() << "\n";
      if (r.degenerate) std::cout << "degenerate: one-element lattice\n";
      std::vector<std::string> const& order = o.properties.empty() ? property_ids() : o.properties;
      for (auto const& id : order) {
        PropertyValue const& v = r.values.at(id);
        std::cout << "  " << pad(id, 26);
        if (v.skipped_reason) {
          std::cout << "n/a (" << *v.skipped_reason << ")";
        } else {
          std::cout << (v.value ? "true" : "false");
          if (!v.witness.empty()) std::cout << "  [" << witness_text(v.witness) << "]";
        }
        if (!v.note.empty()) std::cout << "  -- " << v.note;
        std::cout << "\n";
      }
    }
  }
  return kExitOk;
}

int cmd_endos(std::string const& input, Options const& o) {
  for (auto const& L : load(input)) {
    if (!is_modular(*L)) {
      // Listing still makes sense, but composites may leave the set.
      auto maps = enumerate_endomorphisms(L);
      for (std::size_t i = 0; i < maps.size(); ++i) {
        std::cout << format_morphism("e" + std::to_string(i), maps[i]) << "\n";
      }
      std::cout << "count " << maps.size() << "\n";
      try {
        std::cout << format_cayley(full_endo_monoid(L));
      } catch (Error const& e) {
        std::cout << "no cayley table: " << e.what() << "\n";
      }
      continue;
    }
    EndoMonoid m = full_endo_monoid(L);
    if (records(o)) {
      for (int i = 0; i < m.order(); ++i) {
        json values = json::object();
        for (Element x = 0; x < L->size(); ++x) {
          values[L->element_name(x)] = L->element_name(m[i](x));
        }
        emit({{"kind", "morphism"}, {"lattice", L->name()}, {"index", i},
              {"values", values}, {"kernel", L->element_name(m[i].kernel())},
              {"image", L->element_name(m[i].image())}});
      }
      json rows = json::array();
      for (int i = 0; i < m.order(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.order(); ++j) row.push_back(m.compose(i, j));
        rows.push_back(row);
      }
      emit({{"kind", "cayley"}, {"monoid", m.name()}, {"order", m.order()}, {"table", rows}});
      continue;
    }
    for (int i = 0; i < m.order(); ++i) {
      std::cout << format_morphism("e" + std::to_string(i), m[i]) << "\n";
    }
    std::cout << "count " << m.order() << "\n" << format_cayley(m);
  }
  return kExitOk;
}

int cmd_quotient(std::string const& input, std::string const& rel, Options const& o) {
  MonoidPolicy policy = parse_policy(o.monoid);
  for (auto const& L : load(input)) {
    for (auto const& m : monoids_for(L, policy)) {
      Congruence c = rel == "delta" ? congruence_delta(m) : congruence_nabla(m);
      QuotientMonoid q = quotient(m.table(), c);
      bool regular = is_regular(q.table).regular;
      if (records(o)) {
        json rows = json::array();
        for (int i = 0; i < q.table.order; ++i) {
          json row = json::array();
          for (int j = 0; j < q.table.order; ++j) row.push_back(q.table.at(i, j));
          rows.push_back(row);
        }
        emit({{"kind", "quotient"}, {"lattice", L->name()}, {"monoid", m.name()},
              {"relation", rel}, {"classes", c.classes}, {"table", rows},
              {"regular", regular}});
        continue;
      }
      std::cout << "congruence " << rel << " on " << m.name() << " classes "
                << c.classes.size() << "\n"
                << format_congruence(c);
      std::vector<std::string> legend;
      for (auto const& cls : c.classes) {
        legend.push_back("[" + std::to_string(cls.front()) + "] " +
                         format_values(*L, m[cls.front()].values()));
      }
      std::cout << format_cayley(m.name() + "/" + rel, q.table, legend)
                << "regular " << (regular ? "yes" : "no") << "\n";
    }
  }
  return kExitOk;
}

json check_json(ClaimCheck const& c) {
  json hyps = json::array();
  for (auto const& [id, v] : c.hypotheses) hyps.push_back({{"property", id}, {"value", v}});
  json j = {{"claim", c.id}, {"verdict", to_string(c.verdict)}, {"hypotheses", hyps}};
  if (c.unmet) j["unmet"] = *c.unmet;
  if (!c.witness.empty()) j["witness"] = witness_json(c.witness);
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

void print_check(ClaimCheck const& c) {
  std::cout << "  " << pad(c.id, 24) << to_string(c.verdict);
  if (c.unmet) std::cout << " (" << *c.unmet << ")";
  if (!c.witness.empty()) std::cout << "  [" << witness_text(c.witness) << "]";
  if (!c.note.empty() && c.verdict == Verdict::kFail) std::cout << "  -- " << c.note;
  std::cout << "\n";
}

int report_violation(std::string const& lattice, std::string const& monoid,
                     ClaimCheck const& c) {
  std::cerr << "theorem violated: " << c.id << " on " << lattice << " / " << monoid
            << " [" << witness_text(c.witness) << "]\n";
  return kExitViolation;
}

int cmd_check(std::string const& input, Options const& o) {
  MonoidPolicy policy = parse_policy(o.monoid);
  int status = kExitOk;
  auto show = [&](LatticePtr const& L, std::string const& monoid, int order,
                  std::vector<ClaimCheck> const& checks) {
    if (!records(o)) {
      std::cout << "lattice " << L->name() << " monoid " << monoid << " order " << order
                << "\n";
    }
    for (auto const& c : checks) {
      if (records(o)) {
        json j = check_json(c);
        j["kind"] = "claim";
        j["lattice"] = L->name();
        j["monoid"] = monoid;
        emit(j);
      } else {
        print_check(c);
      }
      if (c.verdict == Verdict::kFail) status = report_violation(L->name(), monoid, c);
    }
  };
  for (auto const& L : load(input)) {
    if (!is_modular(*L)) {
      show(L, "-", 0, non_modular_checks(o.claims));
      continue;
    }
    for (auto const& m : monoids_for(L, policy)) show(L, m.name(), m.order(), run_all(m, o.claims));
  }
  return status;
}

int cmd_sweep(int min_n, int max_n, bool modular, bool named,
              std::vector<std::string> const& inputs, Options const& o) {
  MonoidPolicy policy = parse_policy(o.monoid);
  if (policy.kind == MonoidPolicy::kFile) {
    throw Error(ErrorKind::kPrecondition, "sweep accepts --monoid full or generated:<k>");
  }
  std::vector<LatticePtr> corpus;
  if (inputs.empty()) {
    for (auto& L : lattice_corpus(max_n, modular)) {
      if (L->size() >= min_n) corpus.push_back(std::move(L));
    }
  }
  for (auto const& input : inputs) {
    for (auto& L : load(input)) {
      if (L->size() >= min_n && L->size() <= max_n && (!modular || is_modular(*L))) {
        corpus.push_back(std::move(L));
      }
    }
  }
  if (named) {
    for (auto& L : named_examples()) {
      if (!modular || is_modular(*L)) corpus.push_back(std::move(L));
    }
  }
  SweepSpec spec;
  spec.min_n = min_n;
  spec.max_n = named ? kMaxElements : max_n;
  spec.modular_only = modular;
  spec.generators = policy.k;
  spec.claims = o.claims;
  SweepReport r = counterexample_search(spec, corpus, records(o));

  if (records(o)) {
    for (auto const& rec : r.records) {
      json j = check_json(rec.check);
      j["kind"] = "claim";
      j["lattice"] = rec.lattice;
      j["lattice_size"] = rec.lattice_size;
      j["monoid"] = rec.monoid;
      j["monoid_order"] = rec.monoid_order;
      emit(j);
    }
    json tally = json::object();
    for (auto const& [claim, counts] : r.tally) {
      json t = json::object();
      for (auto const& [v, n] : counts) t[to_string(v)] = n;
      tally[claim] = t;
    }
    emit({{"kind", "sweep_summary"}, {"lattices", r.lattices}, {"monoids", r.monoids},
          {"failures", r.failures.size()}, {"tally", tally}});
  } else {
    std::cout << "swept " << r.lattices << " lattices, " << r.monoids << " monoids\n"
              << "  " << pad("claim", 24) << pad("pass", 8) << pad("fail", 8)
              << "hypotheses_not_met\n";
    for (auto const& [claim, counts] : r.tally) {
      auto get = [&](Verdict v) {
        auto it = counts.find(v);
        return std::to_string(it == counts.end() ? 0 : it->second);
      };
      std::cout << "  " << pad(claim, 24) << pad(get(Verdict::kPass), 8)
                << pad(get(Verdict::kFail), 8) << get(Verdict::kHypothesesNotMet) << "\n";
    }
    for (auto const& f : r.failures) {
      std::cout << "FAIL " << f.lattice << " " << f.monoid << "\n";
      print_check(f.check);
    }
  }
  int status = kExitOk;
  for (auto const& f : r.failures) status = report_violation(f.lattice, f.monoid, f.check);
  return status;
}

int cmd_corpus(int max_n, bool modular, std::string const& out, Options const& o) {
  auto corpus = lattice_corpus(max_n, modular);
  if (records(o)) {
    for (auto const& L : corpus) {
      emit({{"kind", "lattice"}, {"lattice", json::parse(format_lattice_json(*L))}});
    }
    return kExitOk;
  }
  std::string text = format_corpus(corpus, max_n, modular);
  if (out.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Error(ErrorKind::kPrecondition, "cannot write '" + out + "'");
  f << text;
  std::cout << "wrote " << corpus.size() << " lattices to " << out << "\n";
  return kExitOk;
}

int cmd_claims_list(Options const& o) {
  for (auto const& c : claims()) {
    if (records(o)) {
      emit({{"kind", "claim_info"}, {"claim", c.id}, {"hypotheses", c.hypotheses}});
      continue;
    }
    std::string hyps;
    for (auto const& h : c.hypotheses) hyps += (hyps.empty() ? "" : ", ") + h;
    std::cout << pad(c.id, 24) << hyps << "\n";
  }
  return kExitOk;
}

int cmd_claims_describe(std::string const& id, Options const& o) {
  Claim const* c = find_claim(id);
  if (!c) throw Error(ErrorKind::kPrecondition, "unknown claim id '" + id + "'");
  if (records(o)) {
    emit({{"kind", "claim_info"}, {"claim", c->id}, {"statement", c->statement},
          {"hypotheses", c->hypotheses}});
    return kExitOk;
  }
  std::cout << c->id << "\n  " << c->statement << "\n  hypotheses:";
  for (auto const& h : c->hypotheses) std::cout << " " << h;
  std::cout << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite lattices, their linear endomorphisms and the theorem suite"};
  app.require_subcommand(1);
  // Global flags are also accepted after the subcommand name.
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "records"}));
  app.add_option("--jobs", o.jobs, "Worker threads (0 = runtime default)")
      ->check(CLI::NonNegativeNumber);

  auto add_monoid = [&](CLI::App* sub) {
    sub->add_option("--monoid", o.monoid, "full | generated:<k> | file:<path>");
  };
  auto add_claims = [&](CLI::App* sub) {
    sub->add_option("--claims", o.claims, "Claim ids (default: all)")->delimiter(',');
  };

  std::vector<std::string> inputs;
  std::string input;
  bool require_modular = false;
  auto* validate = app.add_subcommand("validate", "Parse and validate lattices");
  validate->add_option("inputs", inputs, "Files, named:<example>, group:<spec> or -")
      ->required();
  validate->add_flag("--require-modular", require_modular);

  auto* show = app.add_subcommand("show", "Print a lattice in the text format");
  show->add_option("input", input)->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "Evaluate the property battery");
  analyze_cmd->add_option("input", input)->required();
  analyze_cmd->add_option("--properties", o.properties, "Property ids (default: all)")
      ->delimiter(',');
  add_monoid(analyze_cmd);

  auto* endos = app.add_subcommand("endos", "List End(L) and its Cayley table");
  endos->add_option("input", input)->required();

  std::string rel;
  auto* quot = app.add_subcommand("quotient", "Quotient by the delta or nabla congruence");
  quot->add_option("input", input)->required();
  quot->add_option("--rel", rel)->required()->check(CLI::IsMember({"delta", "nabla"}));
  add_monoid(quot);

  auto* check = app.add_subcommand("check", "Run claims on one lattice");
  check->add_option("input", input)->required();
  add_claims(check);
  add_monoid(check);

  int min_n = 1, max_n = 6;
  bool modular = false, named = false;
  auto* sweep = app.add_subcommand("sweep", "Run claims over a corpus");
  sweep->add_option("--min-n", min_n)->check(CLI::Range(1, kMaxElements));
  sweep->add_option("--max-n", max_n)->check(CLI::Range(1, 10));
  sweep->add_flag("--modular", modular, "Modular lattices only");
  sweep->add_flag("--named", named, "Also sweep the named examples");
  sweep->add_option("--input", inputs, "Corpus files instead of generation");
  add_claims(sweep);
  add_monoid(sweep);

  std::string out;
  int corpus_n = 5;
  bool corpus_modular = false;
  auto* corpus = app.add_subcommand("corpus", "Generate all lattices up to a size");
  corpus->add_option("--max-n", corpus_n)->check(CLI::Range(1, 10));
  corpus->add_flag("--modular", corpus_modular);
  corpus->add_option("--out", out);

  std::string claim_id;
  auto* claims_cmd = app.add_subcommand("claims", "List or describe registered claims");
  claims_cmd->require_subcommand(1);
  auto* list = claims_cmd->add_subcommand("list", "List claim ids and hypotheses");
  auto* describe = claims_cmd->add_subcommand("describe", "Show one claim");
  describe->add_option("id", claim_id)->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (o.jobs > 0) set_num_threads(o.jobs);
    if (*validate) return cmd_validate(inputs, require_modular, o);
    if (*show) return cmd_show(input, o);
    if (*analyze_cmd) return cmd_analyze(input, o);
    if (*endos) return cmd_endos(input, o);
    if (*quot) return cmd_quotient(input, rel, o);
    if (*check) return cmd_check(input, o);
    if (*sweep) return cmd_sweep(min_n, max_n, modular, named, inputs, o);
    if (*corpus) return cmd_corpus(corpus_n, corpus_modular, out, o);
    if (*list) return cmd_claims_list(o);
    if (*describe) return cmd_claims_describe(claim_id, o);
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kExitUsage;
}
