#include "reducts/cli.hpp"

#include "json_output.hpp"
#include "reducts/error.hpp"
#include "reducts/term.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

namespace reducts::cli {
namespace {

enum class Format { Text, Json };

struct Options {
  Format format = Format::Text;
  std::vector<std::string> vars;
};

// Converts a term to its normal form, over the --vars order when given.
Anf load(const std::string& text, const Options& opts) {
  const Term term = parse(text);
  if (opts.vars.empty()) {
    return to_anf(term);
  }
  try {
    return to_anf(term, opts.vars);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw Error(std::string(e.what()) + " (in term '" + text + "')");
  }
}

std::vector<Anf> load_all(const std::vector<std::string>& texts, const Options& opts) {
  std::vector<Anf> out;
  for (const auto& t : texts) {
    out.push_back(load(t, opts));
  }
  return out;
}

std::string class_line(ReductNode node) {
  return std::string(identifier(node)) + " — " + std::string(display_name(node));
}

Json envelope(const std::string& command) {
  return {{"schema", kSchema}, {"command", command}};
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

int cmd_normalize(const std::vector<std::string>& terms, const Options& opts, std::ostream& out) {
  const auto anfs = load_all(terms, opts);
  if (opts.format == Format::Json) {
    Json doc = envelope("normalize");
    doc["results"] = Json::array();
    for (std::size_t i = 0; i < anfs.size(); ++i) {
      doc["results"].push_back({{"term", terms[i]}, {"anf", to_json(anfs[i])}});
    }
    emit(out, doc);
    return kExitOk;
  }
  for (const auto& f : anfs) {
    out << render_anf(f) << '\n';
  }
  return kExitOk;
}

int cmd_classify(const std::vector<std::string>& terms, bool trace, const Options& opts,
                 std::ostream& out) {
  const auto anfs = load_all(terms, opts);
  const ReductNode node = classify_reduct(anfs);
  std::vector<Trace> traces;
  if (trace) {
    for (const auto& f : anfs) {
      traces.push_back(certificate(f));
    }
  }
  if (opts.format == Format::Json) {
    Json doc = envelope("classify");
    doc["terms"] = terms;
    doc["class"] = to_json(node);
    if (trace) {
      doc["traces"] = Json::array();
      for (const auto& t : traces) {
        doc["traces"].push_back(to_json(t));
      }
    }
    emit(out, doc);
    return kExitOk;
  }
  out << class_line(node) << '\n';
  for (const auto& t : traces) {
    out << render_trace(t);
  }
  return kExitOk;
}

int cmd_compare(const std::vector<std::string>& first, const std::vector<std::string>& second,
                const Options& opts, std::ostream& out) {
  const auto a = load_all(first, opts);
  const auto b = load_all(second, opts);
  const Verdict v = interdefinability(a, b);
  if (opts.format == Format::Json) {
    Json doc = envelope("compare");
    doc["first"] = {{"terms", first}, {"class", to_json(classify_reduct(a))}};
    doc["second"] = {{"terms", second}, {"class", to_json(classify_reduct(b))}};
    doc["verdict"] = verdict_key(v);
    doc["text"] = describe(v);
    emit(out, doc);
    return kExitOk;
  }
  out << describe(v) << '\n';
  return kExitOk;
}

int cmd_lattice(bool dot, const Options& opts, std::ostream& out) {
  if (opts.format == Format::Json) {
    Json doc = envelope("lattice");
    doc.update(lattice_json());
    if (dot) {
      doc["dot"] = to_dot();
    }
    emit(out, doc);
    return kExitOk;
  }
  out << (dot ? to_dot() : to_table());
  return kExitOk;
}

int cmd_verify(const Options& opts, std::ostream& out) {
  const auto checks = identity_suite();
  const bool ok = all_hold(checks);
  if (opts.format == Format::Json) {
    Json doc = envelope("verify");
    doc["identities"] = Json::array();
    for (const auto& c : checks) {
      doc["identities"].push_back(to_json(c));
    }
    doc["passed"] = ok;
    emit(out, doc);
    return ok ? kExitOk : kExitDomain;
  }
  std::size_t counted = 0;
  std::size_t holding = 0;
  for (const auto& c : checks) {
    const char* tag = c.finding ? (c.holds ? "NOTE holds" : "NOTE fails") : (c.holds ? "PASS" : "FAIL");
    out << tag << "  " << c.name << '\n';
    if (!c.finding) {
      ++counted;
      holding += c.holds ? 1 : 0;
    }
  }
  out << holding << '/' << counted << " identities hold\n";
  return ok ? kExitOk : kExitDomain;
}

int cmd_stabilizer(const std::vector<std::string>& terms, unsigned atoms, const std::string& method,
                   bool elements, std::optional<std::size_t> max_work, const Options& opts,
                   std::ostream& out) {
  const auto anfs = load_all(terms, opts);
  const SearchMethod m = method == "exhaustive" ? SearchMethod::Exhaustive
                                                : SearchMethod::Backtracking;
  SearchLimits limits;
  if (max_work) {
    limits.max_nodes = *max_work;
  }
  FiniteGroup g(atoms, {});
  try {
    g = stabilizer(anfs, atoms, m, limits);
  } catch (const Error& e) {
    std::string list;
    for (const auto& t : terms) {
      list += (list.empty() ? "'" : ", '") + t + "'";
    }
    throw Error(std::string(e.what()) + " (stabilizer of [" + list + "] on " +
                std::to_string(atoms) + " atoms)");
  }
  if (opts.format == Format::Json) {
    Json doc = envelope("stabilizer");
    doc["terms"] = terms;
    doc["atoms"] = atoms;
    doc["method"] = method;
    doc["order"] = g.order();
    if (elements) {
      doc["elements"] = Json::array();
      for (const auto& p : g.elements()) {
        doc["elements"].push_back(to_json(p));
      }
    }
    emit(out, doc);
    return kExitOk;
  }
  out << "order " << g.order() << '\n';
  if (elements) {
    for (const auto& p : g.elements()) {
      out << to_json(p).dump() << '\n';
    }
  }
  return kExitOk;
}

int cmd_selftest(const std::vector<int>& ids, const Options& opts, std::ostream& out) {
  std::vector<CriterionResult> results;
  if (ids.empty()) {
    results = run_acceptance();
  } else {
    for (int id : ids) {
      results.push_back(run_criterion(id));
    }
  }
  const bool ok = std::all_of(results.begin(), results.end(),
                              [](const CriterionResult& r) { return r.passed; });
  if (opts.format == Format::Json) {
    Json doc = envelope("selftest");
    doc["criteria"] = Json::array();
    for (const auto& r : results) {
      doc["criteria"].push_back(to_json(r));
    }
    doc["passed"] = ok;
    emit(out, doc);
  } else {
    for (const auto& r : results) {
      out << render_result(r);
    }
    out << (ok ? "all criteria passed" : "some criteria failed") << '\n';
  }
  return ok ? kExitOk : kExitDomain;
}

std::vector<std::string> split_vars(const std::string& text) {
  std::vector<std::string> vars;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    vars.push_back(item);
  }
  return vars;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classify functional reducts of Boolean algebras", "reducts"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string vars;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--vars", vars, "Variable order for normal forms, e.g. x,y,z");

  std::vector<std::string> terms;
  std::vector<std::string> positional;

  auto* normalize = app.add_subcommand("normalize", "Print the canonical normal form of terms");
  normalize->add_option("terms", positional, "Terms")->required();

  bool trace = false;
  auto* classify = app.add_subcommand("classify", "Classify the reduct generated by the terms");
  classify->add_option("terms", positional, "Terms");
  classify->add_option("-t,--term", terms, "Term (repeatable)");
  classify->add_flag("--trace", trace, "Print a replayable certificate per term");

  std::vector<std::string> first;
  std::vector<std::string> second;
  auto* compare = app.add_subcommand("compare", "Compare two reducts");
  compare->add_option("-a", first, "Term of the first reduct (repeatable)")->required();
  compare->add_option("-b", second, "Term of the second reduct (repeatable)")->required();

  bool dot = false;
  auto* lattice = app.add_subcommand("lattice", "Print the lattice of the 13 classes");
  lattice->add_flag("--dot", dot, "Graph-description export");

  auto* verify = app.add_subcommand("verify", "Run the symbolic identity suite");

  unsigned atoms = 3;
  std::string method = "backtracking";
  bool elements = false;
  std::optional<std::size_t> max_work;
  auto* stab = app.add_subcommand("stabilizer", "Stabilizer group on a finite Boolean algebra");
  stab->add_option("-n,--atoms", atoms, "Atom count")->check(CLI::Range(1u, kMaxAtoms))
      ->capture_default_str();
  stab->add_option("-t,--term", terms, "Term (repeatable)");
  stab->add_option("--method", method, "Search method")
      ->check(CLI::IsMember({"exhaustive", "backtracking"}))
      ->capture_default_str();
  stab->add_flag("--elements", elements, "Print the group elements as image arrays");
  stab->add_option("--max-work", max_work, "Backtracking node limit")
      ->check(CLI::PositiveNumber);

  std::vector<int> criteria;
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_option("-c,--criterion", criteria, "Criterion number (repeatable)")
      ->check(CLI::Range(1, kCriterionCount));

  std::vector<std::string> argv_tail(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());
  try {
    app.parse(argv_tail);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Options opts;
  opts.format = format == "json" ? Format::Json : Format::Text;
  if (!vars.empty()) {
    opts.vars = split_vars(vars);
  }

  try {
    if (!opts.vars.empty()) {
      for (const auto& v : opts.vars) {
        if (!is_identifier(v)) {
          throw Error("--vars: invalid variable name '" + v + "' in '" + vars + "'");
        }
      }
    }
    if (normalize->parsed()) {
      return cmd_normalize(positional, opts, out);
    }
    if (classify->parsed()) {
      std::vector<std::string> all = positional;
      all.insert(all.end(), terms.begin(), terms.end());
      if (all.empty()) {
        err << "classify: at least one term is required\n";
        return kExitUsage;
      }
      return cmd_classify(all, trace, opts, out);
    }
    if (compare->parsed()) {
      return cmd_compare(first, second, opts, out);
    }
    if (lattice->parsed()) {
      return cmd_lattice(dot, opts, out);
    }
    if (verify->parsed()) {
      return cmd_verify(opts, out);
    }
    if (stab->parsed()) {
      return cmd_stabilizer(terms, atoms, method, elements, max_work, opts, out);
    }
    if (selftest->parsed()) {
      return cmd_selftest(criteria, opts, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n' << e.excerpt() << '\n';
    return kExitDomain;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

} // namespace reducts::cli
