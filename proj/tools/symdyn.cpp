#include <fstream>
#include <iostream>
#include <regex>

#include "CLI11.hpp"
#include "symdyn/errors.hpp"
#include "symdyn/json_io.hpp"

using namespace symdyn;
using io::json;

namespace {

struct Options {
  std::string system, partition, automaton, query = "halting", u, v, w, out, format = "json", what = "automaton";
  int budget_len = 10, budget_iter = 64, budget_depth = 4, maxlen = 4, eps = 1, depth = 1;
  std::string query_file;
};

Budget budget(const Options& o) { return Budget{o.budget_len, o.budget_iter, o.budget_depth}; }

std::filesystem::path base_of(const std::string& f) {
  auto p = std::filesystem::path(f).parent_path();
  return p.empty() ? std::filesystem::path(".") : p;
}

SystemPtr system_from(const std::string& spec) {
  if (spec.empty()) throw SpecError("--system is required");
  json j = !spec.empty() && spec[0] == '{' ? json::parse(spec) : io::read_file(spec);
  return io::load_system(j, base_of(spec));
}

json maybe_file(const std::string& s) {
  if (std::filesystem::exists(s)) return io::read_file(s);
  if (!s.empty() && (s[0] == '{' || s[0] == '[')) return json::parse(s);
  return json(s);
}

/// "[01]" is named "01", anything else by its text.
std::string cell_name(const std::string& expr) {
  static const std::regex single(R"(^\s*\[([^\]]*)\]\s*$)");
  std::smatch m;
  if (std::regex_match(expr, m, single)) {
    std::string s;
    for (char c : m[1].str())
      if (c != ' ') s.push_back(c);
    return s;
  }
  return expr;
}

Partition query_partition(const EffectiveSystem& f, const std::vector<std::string>& exprs, const std::vector<std::string>& names,
                          const std::string& rest) {
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < exprs.size(); ++i) {
    if (exprs[i].empty()) throw QueryError("--" + names[i] + " is required for this query");
    cells.push_back({cell_name(exprs[i]), io::parse_clopen(f.space(), exprs[i])});
  }
  return Partition::with_rest(f.space(), std::move(cells), rest);
}

void emit(const Options& o, const json& j) {
  if (o.out.empty()) {
    std::cout << j.dump() << "\n";
    return;
  }
  std::ofstream out(o.out, std::ios::app);
  out << j.dump() << "\n";
}

/// One query; returns its outcome for the exit status.
Outcome run_query(const SystemPtr& f, const Options& o, json& result) {
  const auto b = budget(o);
  auto with_letters = [&](const Verdict& v, const Partition& p) {
    result = io::dump_verdict(v, p.names());
    return v.outcome;
  };
  if (o.query == "halting") {
    auto p = query_partition(*f, {o.u, o.v}, {"u", "v"}, "rest");
    auto d = halting_automaton();
    d.alphabet = p.names();
    return with_letters(check_regular(*f, p, d, b), p);
  }
  if (o.query == "guarded") {
    auto p = query_partition(*f, {o.u, o.v, o.w}, {"u", "v", "w"}, "rest");
    auto d = guarded_automaton();
    d.alphabet = p.names();
    return with_letters(check_regular(*f, p, d, b), p);
  }
  if (o.query == "invariance") {
    auto p = query_partition(*f, {o.u}, {"u"}, "rest");
    auto m = invariance_automaton();
    m.alphabet = p.names();
    return with_letters(check_omega(f, p, m, b), p);
  }
  if (o.query == "regular" || o.query == "omega") {
    if (o.partition.empty() || o.automaton.empty()) throw QueryError("--partition and --automaton are required");
    auto p = io::load_partition(f->space(), maybe_file(o.partition), "/partition");
    if (o.query == "regular") return with_letters(check_regular(*f, p, io::load_dfa(maybe_file(o.automaton), "/automaton"), b), p);
    return with_letters(check_omega(f, p, io::load_muller(maybe_file(o.automaton), "/automaton"), b), p);
  }
  if (o.query == "reach") {
    auto u = io::parse_clopen(f->space(), o.u), v = io::parse_clopen(f->space(), o.v);
    auto d = decide_reach_shadowing(*f, u, v);
    result = {{"outcome", d.reachable ? "Holds" : "Fails"}, {"method", d.method}, {"rounds", d.rounds}, {"resolution", d.resolution}};
    if (d.steps >= 0) result["steps"] = d.steps;
    return d.reachable ? Outcome::Holds : Outcome::Fails;
  }
  if (o.query == "equicontinuity") {
    auto e = equicontinuity_modulus(*f, o.eps, b);
    result = {{"outcome", e.delta ? "Holds" : "Unknown"}, {"method", "partition-refinement"}, {"rounds", e.rounds},
              {"resolutions", e.resolutions}, {"atoms", e.atoms}};
    if (e.delta) result["delta"] = *e.delta;
    return e.delta ? Outcome::Holds : Outcome::Unknown;
  }
  throw QueryError("unknown query kind '" + o.query + "'");
}

int cmd_check(const Options& o) {
  if (o.query_file.empty()) {
    auto f = system_from(o.system);
    json r;
    auto out = run_query(f, o, r);
    emit(o, r);
    return out == Outcome::Unknown ? 2 : 0;
  }
  // QueryFile: {"system": ..., "budget": {...}, "queries": [{"query": ..., "u": ...}, ...]}
  json q = io::read_file(o.query_file);
  if (!q.contains("system")) throw SpecError("at /system: missing field 'system'");
  auto f = io::load_system(q["system"], base_of(o.query_file), "/system");
  if (!q.contains("queries") || !q["queries"].is_array()) throw SpecError("at /queries: expected an array");
  bool unknown = false;
  std::size_t k = 0;
  for (const auto& e : q["queries"]) {
    Options x = o;
    std::string path = "/queries/" + std::to_string(k++);
    auto get = [&](const char* key, std::string& dst) {
      if (e.contains(key)) dst = e[key].is_string() ? e[key].get<std::string>() : e[key].dump();
    };
    get("query", x.query);
    get("u", x.u);
    get("v", x.v);
    get("w", x.w);
    get("partition", x.partition);
    get("automaton", x.automaton);
    if (q.contains("budget")) {
      x.budget_len = q["budget"].value("max_len", x.budget_len);
      x.budget_iter = q["budget"].value("max_iter", x.budget_iter);
      x.budget_depth = q["budget"].value("max_depth", x.budget_depth);
    }
    x.eps = e.value("eps", x.eps);
    json r;
    try {
      unknown |= run_query(f, x, r) == Outcome::Unknown;
    } catch (const Error& err) {
      throw SpecError("at " + path + ": " + err.what());
    }
    emit(o, r);
  }
  return unknown ? 2 : 0;
}

int cmd_lang(const Options& o) {
  auto f = system_from(o.system);
  auto p = io::load_partition(f->space(), maybe_file(o.partition.empty() ? "depth1" : o.partition), "/partition");
  auto words = enumerate_language(*f, p, o.maxlen);
  json arr = json::array();
  for (const auto& w : words) arr.push_back(letters_to_string(p.names(), w));
  emit(o, {{"count", words.size()}, {"max_len", o.maxlen}, {"words", arr}});
  return 0;
}

int cmd_basin(const Options& o) {
  auto f = system_from(o.system);
  auto v = io::parse_clopen(f->space(), o.v.empty() ? o.u : o.v);
  auto b = basin(*f, v, budget(o));
  json r = {{"stabilised", b.set.has_value()}, {"iterations", b.iterations}};
  if (b.set) {
    r["m"] = b.m;
    r["basin"] = io::dump_clopen(*b.set);
    auto io_set = infinitely_often(*f, v, budget(o));
    if (io_set) r["infinitely_often"] = io::dump_clopen(*io_set);
  }
  emit(o, r);
  return b.set ? 0 : 2;
}

int cmd_export(const Options& o) {
  std::string text;
  json j;
  if (o.what == "automaton") {
    auto a = maybe_file(o.automaton.empty() ? "figure1" : o.automaton);
    bool omega = (a.is_string() && a.get<std::string>() == "figure3") ||
                 (a.is_object() && a.value("type", "dfa") != "dfa");
    if (omega) {
      auto m = io::load_muller(a, "/automaton");
      text = to_dot(m);
      j = io::dump_muller(m);
    } else {
      auto d = io::load_dfa(a, "/automaton");
      text = to_dot(d);
      j = io::dump_dfa(d);
    }
  } else if (o.what == "ball-graph") {
    auto f = system_from(o.system);
    auto p = io::load_partition(f->space(), maybe_file(o.partition.empty() ? "depth1" : o.partition), "/partition");
    auto ia = induced_automaton(*f, p, o.depth);
    text = to_dot(ia.graph);
    j = io::dump_graph(ia.graph);
    j["resolution"] = ia.resolution;
    j["exact"] = ia.exact;
  } else if (o.what == "partition") {
    auto f = system_from(o.system);
    j = io::dump_partition(io::load_partition(f->space(), maybe_file(o.partition.empty() ? "depth1" : o.partition), "/partition"));
    text = j.dump(2);
  } else {
    throw QueryError("unknown export target '" + o.what + "'");
  }
  std::string payload = o.format == "dot" ? text : j.dump(2) + "\n";
  if (o.out.empty()) std::cout << payload;
  else std::ofstream(o.out) << payload;
  return 0;
}

int cmd_table(const std::string& machine, int cutoff, int inputs, const std::string& out) {
  auto m = machine.empty() ? default_machine() : io::load_machine(io::read_file(machine), "/machine");
  auto t = build_table(m, inputs, cutoff);
  auto j = io::dump_table(t).dump(2) + "\n";
  if (out.empty()) std::cout << j;
  else std::ofstream(out) << j;
  return 0;
}

int cmd_guarded(const std::string& table, const Options& o) {
  auto t = table.empty() ? build_table(default_machine(), 8, 200) : io::load_table(io::read_file(table), "/table");
  auto x = chaotic_universal(t);
  bool unknown = false;
  for (int n = 1; n < t.inputs(); ++n) {
    auto v = guarded_halting_query(*x, n, budget(o));
    json r = io::dump_verdict(v, guarded_partition(*x, n).names());
    r["n"] = n;
    r["table"] = t.entries[static_cast<std::size_t>(n)] ? json(*t.entries[static_cast<std::size_t>(n)]) : json(nullptr);
    unknown |= v.outcome == Outcome::Unknown;
    emit(o, r);
  }
  return unknown ? 2 : 0;
}

int cmd_selftest() {
  int bad = 0;
  auto line = [&](bool ok, const std::string& what) {
    std::cout << (ok ? "PASS " : "FAIL ") << what << "\n";
    bad += !ok;
  };
  auto fs = full_shift(Alphabet({"0", "1"}));
  auto z = prepend_zero();
  auto c0 = ClopenSet::cylinder(z->space(), Word("\0", 1));
  auto b = basin(*z, c0, Budget{});
  line(b.set && b.set->is_whole() && b.m == 2, "basin of [0] under prepend_zero is X at m = 2");
  auto g = sft(Alphabet({"0", "1"}), {Word("\1\1", 2)});
  auto words = enumerate_language(*g, Partition::cylinders(g->space(), 1), 5);
  std::size_t len5 = 0;
  for (const auto& w : words) len5 += w.size() == 5;
  line(len5 == 13, "golden mean shift has 13 words of length 5");
  auto p = Partition::with_rest(fs->space(), {{"0", ClopenSet::cylinder(fs->space(), Word("\0", 1))}}, "1");
  auto v = check_omega(fs, p, [] {
    auto m = invariance_automaton();
    m.alphabet = {"0", "1"};
    return m;
  }(), Budget{});
  line(v.outcome == Outcome::Holds && v.lasso.has_value(), "full shift can stay in [0] forever");
  auto t = build_table(default_machine(), 6, 50);
  bool parity = true;
  for (int n = 0; n < 6; ++n) parity &= (n % 2 == 0) == t.entries[static_cast<std::size_t>(n)].has_value();
  line(parity, "default machine halts exactly on even inputs");
  return bad ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symdyn: model checking of effective symbolic systems"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* s) {
    s->add_option("--system", o.system, "system spec (file or inline JSON)");
    s->add_option("--partition", o.partition, "partition spec, file, or depthN");
    s->add_option("--out", o.out, "output file");
  };
  auto budgets = [&](CLI::App* s) {
    s->add_option("--budget-len", o.budget_len, "witness length budget");
    s->add_option("--budget-iter", o.budget_iter, "fixpoint iteration budget");
    s->add_option("--budget-depth", o.budget_depth, "ball resolution budget");
  };

  auto* check = app.add_subcommand("check", "run a model-checking query");
  common(check);
  budgets(check);
  check->add_option("--automaton", o.automaton, "automaton spec, file, or figure1|figure2|figure3");
  check->add_option("--query", o.query, "halting|guarded|invariance|regular|omega|reach|equicontinuity");
  check->add_option("--u", o.u, "clopen U");
  check->add_option("--v", o.v, "clopen V");
  check->add_option("--w", o.w, "clopen W");
  check->add_option("--eps", o.eps, "epsilon resolution");
  check->add_option("--query-file", o.query_file, "JSON file with a system and a list of queries");

  auto* lang = app.add_subcommand("lang", "enumerate the induced language");
  common(lang);
  lang->add_option("--maxlen", o.maxlen, "maximum word length");

  auto* bas = app.add_subcommand("basin", "basin of a clopen set");
  common(bas);
  budgets(bas);
  bas->add_option("--v", o.v, "clopen V");

  auto* gal = app.add_subcommand("gallery", "halting tables and universal systems");
  gal->require_subcommand(1);
  std::string machine, table;
  int cutoff = 200, inputs = 8;
  auto* build = gal->add_subcommand("build-table", "simulate a machine on unary inputs");
  build->add_option("--machine", machine, "machine spec (default: shipped parity machine)");
  build->add_option("--cutoff", cutoff, "step cutoff T");
  build->add_option("--inputs", inputs, "inputs 0..N-1");
  build->add_option("--out", o.out, "output file");
  auto* guarded = gal->add_subcommand("guarded", "guarded halting query on the chaotic universal subshift");
  guarded->add_option("--table", table, "halting-time table");
  guarded->add_option("--out", o.out, "output file");
  budgets(guarded);

  auto* exp = app.add_subcommand("export", "export automata, ball graphs, partitions");
  common(exp);
  exp->add_option("--what", o.what, "automaton|ball-graph|partition");
  exp->add_option("--format", o.format, "dot|json");
  exp->add_option("--automaton", o.automaton, "automaton spec");
  exp->add_option("--depth", o.depth, "ball resolution");

  auto* self = app.add_subcommand("selftest", "quick internal checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  try {
    if (check->parsed()) return cmd_check(o);
    if (lang->parsed()) return cmd_lang(o);
    if (bas->parsed()) return cmd_basin(o);
    if (build->parsed()) return cmd_table(machine, cutoff, inputs, o.out);
    if (guarded->parsed()) return cmd_guarded(table, o);
    if (exp->parsed()) return cmd_export(o);
    if (self->parsed()) return cmd_selftest();
  } catch (const Error& e) {
    std::cerr << "symdyn: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "symdyn: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
