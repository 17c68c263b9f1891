#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "declcmp/error.hpp"
#include "declcmp/oracle.hpp"
#include "declcmp/reduction.hpp"
#include "declcmp/serialize.hpp"

namespace declcmp::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string context;
  std::string relation;
  std::string reality;
  std::string format = "json";
  unsigned threads = 1;
  std::size_t cap = kDefaultMaterializeCap;
  bool deterministic = false;
  bool oracle = false;
  bool no_prune = false;

  std::string tuple;
  std::string lhs;
  std::string rhs;
  std::string dot;
  std::string attribute;
  bool list = false;
  bool count = false;
  bool strong = false;
  std::string cnf;
  std::string out_dir;
};

// Raised for usage problems found after parsing (missing files, bad flags).
struct UsageFailure {
  std::string message;
};

// Raised when the context does not pass validation.
struct InvalidContext {
  ValidationReport report;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::CapExceeded:
    case ErrorCode::EnumerationCapExceeded:
    case ErrorCode::TooManyVariables:
    case ErrorCode::WitnessVerificationFailed:
    case ErrorCode::TheoremViolation:
    case ErrorCode::InconsistentFlag:
      return kRuntime;
    default:
      return kUsage;
  }
}

Json issue_json(const ValidationIssue& i) {
  return {{"severity", std::string(to_string(i.severity))},
          {"kind", std::string(to_string(i.kind))},
          {"attribute", i.attribute},
          {"message", i.message}};
}

Json report_json(const ValidationReport& r) {
  Json issues = Json::array();
  for (const auto& i : r.issues) issues.push_back(issue_json(i));
  return {{"ok", r.ok()}, {"warnings", r.warning_count()}, {"issues", std::move(issues)}};
}

std::ifstream open_input(const std::string& path, const char* what) {
  if (path.empty()) throw UsageFailure{std::string("missing --") + what};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageFailure{std::string("cannot open ") + what + " file '" + path + "'"};
  return in;
}

Json read_json(const std::string& path, const char* what) {
  auto in = open_input(path, what);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string(what) + " file: " + e.what());
  }
}

class Session {
public:
  Session(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  int validate() {
    auto report = validate_context_json(read_json(o_.context, "context"));
    if (text()) {
      for (const auto& i : report.issues)
        out_ << to_string(i.severity) << ' ' << to_string(i.kind) << ' ' << i.attribute << ": "
             << i.message << '\n';
      out_ << (report.ok() ? "ok" : "invalid") << '\n';
    } else {
      emit(report_json(report));
    }
    return report.ok() ? kTrue : kFalse;
  }

  int list_generators() {
    const auto& G = gens();
    if (text()) {
      for (const auto& g : G.gens()) out_ << schema().format_tuple(g) << '\n';
      return kTrue;
    }
    Json list = Json::array();
    for (const auto& g : G.gens()) list.push_back(schema().format_tuple(g));
    emit({{"count", G.size()}, {"generators", std::move(list)}});
    return kTrue;
  }

  int closure_of() {
    auto x = schema().parse_tuple(o_.tuple);
    auto cl = closure(gens(), x);
    if (text())
      out_ << schema().format_tuple(cl) << '\n';
    else
      emit({{"tuple", schema().format_tuple(x)}, {"closure", schema().format_tuple(cl)}});
    return kTrue;
  }

  int abstract_fd() {
    AbstractFD fd{schema().parse_tuple(o_.lhs), schema().parse_tuple(o_.rhs)};
    auto cl = closure(gens(), fd.lhs);
    bool answer = check_abstract_fd(gens(), fd);
    if (text())
      out_ << (answer ? "true" : "false") << '\n';
    else
      emit({{"lhs", schema().format_tuple(fd.lhs)},
            {"rhs", schema().format_tuple(fd.rhs)},
            {"closure", schema().format_tuple(cl)},
            {"answer", answer}});
    return answer ? kTrue : kFalse;
  }

  int fd_under_reality() {
    auto fd = classical_fd();
    AnyReality g = Reality::equality(schema());
    if (!o_.reality.empty()) g = reality_from_json(schema(), read_json(o_.reality, "reality"));
    bool answer = check_fd_under_reality(gens(), as_reality(schema(), g), fd.lhs, fd.rhs);
    if (text())
      out_ << (answer ? "true" : "false") << '\n';
    else
      emit({{"lhs", schema().format_attributes(fd.lhs)},
            {"rhs", schema().name(fd.rhs)},
            {"reality", reality_to_json(schema(), g)},
            {"answer", answer}});
    return answer ? kTrue : kFalse;
  }

  int decide_problem(Problem p) {
    auto fd = classical_fd();
    SpfdOptions opts{!o_.no_prune, o_.threads, o_.deterministic};
    auto v = decide(p, gens(), fd, opts);
    auto j = verdict_to_json(schema(), v);
    int code = v.answer ? kTrue : kFalse;
    if (o_.oracle) {
      bool expected = brute_decide(p, gens(), fd, o_.cap);
      j["oracle"] = expected;
      j["oracle_agrees"] = expected == v.answer;
      if (expected != v.answer) code = kRuntime;
    }
    if (text()) {
      out_ << (v.answer ? "true" : "false") << '\n';
      if (v.witness) out_ << "witness " << reality_to_json(schema(), *v.witness).dump() << '\n';
      if (v.counterexample) out_ << "counterexample " << schema().format_tuple(*v.counterexample) << '\n';
    } else {
      emit(j);
    }
    return code;
  }

  int lattice_dot() {
    std::string dot;
    Json summary;
    if (!o_.attribute.empty()) {
      const auto& L = schema().lattice(schema().index_of(o_.attribute));
      dot = to_dot(L, o_.attribute);
      summary = {{"attribute", o_.attribute}, {"elements", L.size()}, {"edges", L.covers().size()}};
    } else {
      auto L = materialize(gens(), o_.cap);
      dot = to_dot(L);
      summary = {{"elements", L.size()}, {"edges", L.cover_edges().size()}};
    }
    if (o_.dot == "-") {
      out_ << dot;
      return kTrue;
    }
    std::ofstream f(o_.dot);
    if (!f) throw UsageFailure{"cannot write '" + o_.dot + "'"};
    f << dot;
    summary["dot"] = o_.dot;
    if (text())
      out_ << summary["elements"] << " elements, " << summary["edges"] << " edges -> " << o_.dot << '\n';
    else
      emit(summary);
    return kTrue;
  }

  int realities() {
    if (o_.list == o_.count) throw UsageFailure{"realities needs exactly one of --list and --count"};
    const auto& ctx = schema();
    std::uint64_t n = o_.strong ? enumerate_strong_realities(ctx).count()
                                : enumerate_realities(ctx).count();
    if (o_.count) {
      if (text())
        out_ << n << '\n';
      else
        emit({{"strong", o_.strong}, {"count", n}});
      return kTrue;
    }
    if (n > o_.cap)
      throw Error(ErrorCode::EnumerationCapExceeded,
                  std::to_string(n) + " realities exceed the cap of " + std::to_string(o_.cap));
    Json list = Json::array();
    auto add = [&](const AnyReality& g) {
      if (text()) {
        const auto& t = std::holds_alternative<StrongReality>(g)
                            ? std::get<StrongReality>(g).coprime_choice()
                            : std::get<Reality>(g).thresholds();
        out_ << ctx.format_tuple(t) << '\n';
      } else {
        list.push_back(reality_to_json(ctx, g));
      }
    };
    if (o_.strong) {
      auto e = enumerate_strong_realities(ctx);
      while (auto g = e.next()) add(*g);
    } else {
      auto e = enumerate_realities(ctx);
      while (auto g = e.next()) add(*g);
    }
    if (!text()) emit({{"strong", o_.strong}, {"count", n}, {"realities", std::move(list)}});
    return kTrue;
  }

  int reduce() {
    auto in = open_input(o_.cnf, "cnf");
    auto cnf = parse_dimacs(in);
    auto inst = reduce_3sat(cnf);
    fs::create_directories(o_.out_dir);
    const auto dir = fs::path(o_.out_dir);
    auto write = [&](const char* name, auto&& body) {
      std::ofstream f(dir / name);
      if (!f) throw UsageFailure{"cannot write into '" + o_.out_dir + "'"};
      body(f);
    };
    const auto& ctx = *inst.schema;
    Json fd = {{"lhs", ctx.format_attributes(inst.fd.lhs)}, {"rhs", ctx.name(inst.fd.rhs)}};
    write("context.json", [&](std::ostream& f) { f << context_to_json(ctx).dump(2) << '\n'; });
    write("relation.csv", [&](std::ostream& f) { write_relation(inst.relation, f); });
    write("fd.json", [&](std::ostream& f) { f << fd.dump(2) << '\n'; });
    if (text())
      out_ << "wrote " << ctx.size() << " attributes, " << inst.relation.size() << " tuples to "
           << o_.out_dir << '\n';
    else
      emit({{"out", o_.out_dir},
            {"variables", cnf.num_vars},
            {"clauses", cnf.clauses.size()},
            {"attributes", ctx.size()},
            {"tuples", inst.relation.size()},
            {"fd", fd}});
    return kTrue;
  }

private:
  bool text() const { return o_.format == "text"; }
  void emit(const Json& j) { out_ << j.dump(2) << '\n'; }

  const SchemaContext& schema() {
    if (!schema_) {
      auto in = open_input(o_.context, "context");
      schema_ = load_context(in);
      auto report = validate_context(*schema_);
      if (!report.ok()) throw InvalidContext{std::move(report)};
    }
    return *schema_;
  }

  const GeneratorSet& gens() {
    if (!gens_) {
      schema();
      auto in = open_input(o_.relation, "relation");
      auto rel = load_relation(schema_, in);
      gens_.emplace(generators(rel, o_.threads));
    }
    return *gens_;
  }

  ClassicalFD classical_fd() {
    if (o_.rhs.empty()) throw UsageFailure{"missing --rhs"};
    return ClassicalFD{schema().parse_attributes(o_.lhs), schema().index_of(o_.rhs)};
  }

  const Options& o_;
  std::ostream& out_;
  std::shared_ptr<const SchemaContext> schema_;
  std::optional<GeneratorSet> gens_;
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Declarative comparabilities: abstract lattices, realities and FD decision problems",
               "declcmp"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-c,--context", o.context, "Schema-context JSON file");
  app.add_option("-r,--relation", o.relation, "Relation CSV file (header row of attribute names)");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--threads", o.threads, "Worker threads for generators and the strong search")
      ->check(CLI::Range(1U, 256U));
  app.add_option("--cap", o.cap, "Element cap for lattice materialization and enumeration");
  app.add_flag("--deterministic", o.deterministic, "Sequential search order");
  app.add_flag("--oracle", o.oracle, "Cross-check decisions by brute force")->group("");
  app.add_flag("--no-prune", o.no_prune, "Exhaustive strong search without pruning")->group("");

  auto* validate = app.add_subcommand("validate", "Check the schema context");
  auto* gens = app.add_subcommand("generators", "List the comparison vectors of the relation");
  auto* clos = app.add_subcommand("closure", "Least abstract-lattice element above a tuple");
  clos->add_option("--tuple", o.tuple, "Comma-separated truth values in attribute order")->required();
  auto* afd = app.add_subcommand("afd", "Check an abstract FD x -> y");
  afd->add_option("--lhs", o.lhs, "Abstract tuple x")->required();
  afd->add_option("--rhs", o.rhs, "Abstract tuple y")->required();
  auto* fd = app.add_subcommand("fd", "Check a classical FD under a reality (equality by default)");
  fd->add_option("--lhs", o.lhs, "Comma-separated attribute names");
  fd->add_option("--rhs", o.rhs, "Attribute name")->required();
  fd->add_option("--reality", o.reality, "Reality JSON file");

  struct DecisionCommand {
    const char* name;
    const char* help;
    Problem problem;
    CLI::App* app = nullptr;
  };
  std::vector<DecisionCommand> decisions{
      {"certain", "Does X -> A hold under every reality?", Problem::Certain},
      {"possible", "Does X -> A hold under some reality?", Problem::Possible},
      {"strongly-certain", "Does X -> A hold under every strong reality?", Problem::StronglyCertain},
      {"strongly-possible", "Does X -> A hold under some strong reality?", Problem::StronglyPossible},
  };
  for (auto& d : decisions) {
    d.app = app.add_subcommand(d.name, d.help);
    d.app->add_option("--lhs", o.lhs, "Comma-separated attribute names");
    d.app->add_option("--rhs", o.rhs, "Attribute name")->required();
  }

  auto* lattice = app.add_subcommand("lattice", "Export the abstract lattice (or a truth lattice) as DOT");
  lattice->add_option("--dot", o.dot, "Output file, '-' for stdout")->required();
  lattice->add_option("--attribute", o.attribute, "Export this attribute's truth lattice instead");
  auto* real = app.add_subcommand("realities", "Enumerate realities");
  real->add_flag("--list", o.list, "List every reality");
  real->add_flag("--count", o.count, "Count realities");
  real->add_flag("--strong", o.strong, "Strong realities only");
  auto* red = app.add_subcommand("reduce-3sat", "Write the strong-possibility instance of a 3CNF");
  red->add_option("--cnf", o.cnf, "DIMACS CNF file")->required();
  red->add_option("--out", o.out_dir, "Output directory")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << Json{{"error", "UsageError"}, {"message", e.what()}}.dump() << '\n';
    return kUsage;
  }

  Session s(o, out);
  try {
    if (validate->parsed()) return s.validate();
    if (gens->parsed()) return s.list_generators();
    if (clos->parsed()) return s.closure_of();
    if (afd->parsed()) return s.abstract_fd();
    if (fd->parsed()) return s.fd_under_reality();
    for (const auto& d : decisions)
      if (d.app->parsed()) return s.decide_problem(d.problem);
    if (lattice->parsed()) return s.lattice_dot();
    if (real->parsed()) return s.realities();
    if (red->parsed()) return s.reduce();
  } catch (const UsageFailure& f) {
    err << Json{{"error", "UsageError"}, {"message", f.message}}.dump() << '\n';
    return kUsage;
  } catch (const InvalidContext& c) {
    Json j = report_json(c.report);
    j["error"] = "InvalidContext";
    err << j.dump() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << Json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << Json{{"error", "InternalError"}, {"message", e.what()}}.dump() << '\n';
    return kRuntime;
  }
  return kUsage;
}

} // namespace declcmp::cli
