#include "rcq/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rcq/calculus.hpp"
#include "rcq/calculus_check.hpp"
#include "rcq/coxeter.hpp"
#include "rcq/enumerate.hpp"
#include "rcq/error.hpp"
#include "rcq/graph.hpp"
#include "rcq/io.hpp"
#include "rcq/linrep.hpp"
#include "rcq/monoid.hpp"

namespace rcq::cli {

namespace {

constexpr std::uint64_t default_seed = 20'260'101;

struct Common {
  std::string format = "json";
  std::uint64_t budget = CoxGroup::default_budget;
  std::uint64_t seed = default_seed;
};

nlohmann::json read_json(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  try {
    return nlohmann::json::parse(in);
  } catch (nlohmann::json::parse_error const& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

ordered_json labels(OpTable const& T, std::vector<Elem> const& xs) {
  ordered_json a = ordered_json::array();
  for (Elem x : xs) {
    a.push_back(x < T.size() ? T.name(x) : std::to_string(x));
  }
  return a;
}

// Witnesses are element indices.
ordered_json flag_json(Flag const& f) {
  ordered_json j;
  j["holds"] = f.holds;
  if (!f.holds) {
    j["witness"] = f.witness;
  }
  return j;
}

ordered_json coords_json(OpTable const& T, Coords const& c) {
  ordered_json j = ordered_json::object();
  for (Elem s = 0; s < c.size(); ++s) {
    if (c[s] != 0) {
      j[T.name(s)] = c[s];
    }
  }
  return j;
}

ordered_json element_json(StructureMonoid const& M, MonoidElement const& g) {
  ordered_json j;
  j["coords"] = coords_json(M.table(), g.coords());
  j["word"] = M.format(g);
  return j;
}

void emit(std::ostream& out, Common const& c, ordered_json const& j, std::string const& text) {
  if (c.format == "text") {
    out << text << '\n';
  } else {
    out << j.dump() << '\n';
  }
}

void add_common(CLI::App* sub, Common& c, bool with_seed = false) {
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  sub->add_option("--budget", c.budget, "Upper bound on exhaustive work");
  if (with_seed) {
    sub->add_option("--seed", c.seed, "Seed for randomized checks");
  }
}

int cmd_verify(std::string const& path, Common const& c, std::ostream& out) {
  OpTable T = read_table_file(path);
  auto v = validate(T);
  ordered_json j;
  j["n"] = T.size();
  j["quasigroup"] = flag_json(v.quasigroup);
  j["rc"] = flag_json(v.rc);
  j["bijective"] = flag_json(v.bijective);
  if (v.lc) {
    j["lc"] = flag_json(*v.lc);
    j["involutive_pair"] = flag_json(*v.involutive_pair);
  }
  bool ok = v.ok();
  if (v.is_bijective_rc_quasigroup()) {
    auto rho = to_ybe(T);
    auto yr = validate_ybe(rho);
    j["ybe"] = {{"bijective", yr.bijective.holds},
                {"braid", yr.braid.holds},
                {"involutive", yr.involutive.holds},
                {"nondegenerate", yr.nondegenerate.holds}};
    auto br = validate_birack(to_birack(T));
    j["birack"] = {{"rack1", br.rack1.holds},     {"rack2", br.rack2.holds},
                   {"rack3", br.rack3.holds},     {"translations", br.translations.holds},
                   {"rack4", br.rack4.holds}};
    ok = ok && yr.ok() && br.ok();
  }
  CalculusCheckOptions opts;
  opts.seed = c.seed;
  opts.exhaustive_limit = c.budget;
  auto cr = check_calculus_identities(T, opts);
  ordered_json checks = ordered_json::object();
  for (auto const& chk : cr.checks) {
    ordered_json x;
    x["status"] = to_string(chk.status);
    if (chk.status == CheckStatus::failed) {
      x["witness"] = chk.witness;
    }
    if (!chk.note.empty()) {
      x["note"] = chk.note;
    }
    checks[chk.name] = x;
  }
  j["calculus"] = {{"checks", checks},
                   {"tuples", cr.tuples_checked},
                   {"exhaustive", cr.exhaustive},
                   {"seed", cr.seed}};
  ok = ok && cr.ok();
  j["ok"] = ok;
  std::ostringstream text;
  text << (ok ? "ok" : "FAILED") << " quasigroup=" << v.quasigroup.holds << " rc=" << v.rc.holds
       << " bijective=" << v.bijective.holds << " calculus=" << cr.ok() << " seed=" << cr.seed;
  emit(out, c, j, text.str());
  return ok ? ExitCode::ok : ExitCode::property_failure;
}

int cmd_convert(std::string const& path, std::string const& to, Common const& c,
                std::ostream& out) {
  nlohmann::json in = read_json(path);
  OpTable T;
  if (in.contains("op")) {
    T = table_from_json(in);
  } else if (in.contains("rho1")) {
    T = from_ybe(ybe_from_json(in));
  } else if (in.contains("up")) {
    T = from_birack(birack_from_json(in));
  } else {
    throw ParseError("input has none of \"op\", \"rho1\", \"up\"");
  }
  ordered_json j;
  if (to == "table") {
    j = table_to_json(T);
  } else if (to == "lop") {
    j = table_to_json(derive_left_operation(T.without_lop()), true);
  } else if (to == "ybe") {
    j = ybe_to_json(to_ybe(T));
  } else {
    j = birack_to_json(to_birack(T));
  }
  emit(out, c, j, j.dump(2));
  return ExitCode::ok;
}

int cmd_calc(std::string const& path, std::string const& fn, std::vector<std::string> const& args,
             Common const& c, std::ostream& out) {
  OpTable T = read_table_file(path);
  std::string joined;
  for (auto const& a : args) {
    joined += a + " ";
  }
  Tuple x = parse_word(T, joined);
  if (fn == "omega-tilde" || fn == "pi-tilde") {
    T = derive_left_operation(T.without_lop());
  }
  ordered_json j;
  std::string text;
  if (fn == "omega" || fn == "omega-tilde") {
    Elem r = fn == "omega" ? omega(T, x) : omega_tilde(T, x);
    j["result"] = T.name(r);
    text = T.name(r);
  } else {
    Tuple r;
    if (fn == "pi") {
      r = pi_word(T, x);
    } else if (fn == "pi-tilde") {
      r = pi_tilde_word(T, x);
    } else if (fn == "tilde") {
      r = tilde_vector(T, x);
    } else {
      r = invert_coordinates(T, x);
    }
    j["result"] = labels(T, r);
    text = format_word(T, r);
  }
  emit(out, c, j, text);
  return ExitCode::ok;
}

int cmd_monoid(std::string const& path, std::string const& op,
               std::vector<std::string> const& args, Common const& c, std::ostream& out) {
  OpTable T = read_table_file(path);
  StructureMonoid M(T);
  auto need = [&](std::size_t k) {
    if (args.size() != k) {
      throw ParseError("'" + op + "' expects " + std::to_string(k) + " word argument(s)");
    }
  };
  auto elem = [&](std::size_t i) { return M.element_from_word(parse_word(M.table(), args[i])); };
  ordered_json j;
  std::string text;
  if (op == "nf") {
    need(1);
    auto nf = M.greedy_normal_form(elem(0));
    ordered_json a = ordered_json::array();
    for (auto const& h : nf) {
      a.push_back(M.format(h));
      text += (text.empty() ? "" : " | ") + M.format(h);
    }
    if (nf.empty()) {
      text = "1";
    }
    j["normal_form"] = a;
  } else if (op == "coords") {
    need(1);
    auto g = elem(0);
    j = element_json(M, g);
    text = M.format(g);
  } else if (op == "eq") {
    need(2);
    bool eq = M.word_problem(parse_word(M.table(), args[0]), parse_word(M.table(), args[1]));
    j["equal"] = eq;
    text = eq ? "true" : "false";
  } else if (op == "group-eq") {
    need(2);
    auto g = M.group_element_from_word(parse_group_word(M.table(), args[0]));
    auto h = M.group_element_from_word(parse_group_word(M.table(), args[1]));
    j["equal"] = g == h;
    text = g == h ? "true" : "false";
  } else if (op == "divides") {
    need(2);
    bool d = M.left_divides(elem(0), elem(1));
    j["left_divides"] = d;
    text = d ? "true" : "false";
  } else if (op == "presentation") {
    need(0);
    ordered_json a = ordered_json::array();
    for (auto const& r : M.presentation()) {
      std::string rel = format_word(M.table(), r.lhs) + " = " + format_word(M.table(), r.rhs);
      a.push_back(rel);
      text += (text.empty() ? "" : "\n") + rel;
    }
    j["relations"] = a;
  } else {
    need(2);
    MonoidElement r = M.one();
    if (op == "lcm") {
      r = M.right_lcm(elem(0), elem(1));
    } else if (op == "gcd") {
      r = M.left_gcd(elem(0), elem(1));
    } else if (op == "mul") {
      r = M.multiply(elem(0), elem(1));
    } else if (op == "complement") {
      r = M.right_complement(elem(0), elem(1));
    } else if (op == "left-lcm") {
      r = M.left_lcm(elem(0), elem(1));
    } else if (op == "right-gcd") {
      r = M.right_gcd(elem(0), elem(1));
    } else {
      throw ParseError("unknown monoid operation '" + op + "'");
    }
    j = element_json(M, r);
    text = M.format(r);
  }
  emit(out, c, j, text);
  return ExitCode::ok;
}

int cmd_germ(std::string const& path, bool verify, Common const& c, std::ostream& out) {
  OpTable T = read_table_file(path);
  StructureMonoid M(T);
  CoxGroup G(M, c.budget);
  ordered_json j;
  j["n"] = M.rank();
  j["d"] = G.d();
  j["cox_order"] = G.order();
  j["exponent"] = G.exponent();
  j["iyb_order"] = G.iyb_quotient().order;
  bool ok = true;
  if (verify) {
    CoxGroup H(M, G.d() < 2 ? 2 : G.d(), c.budget);
    auto g = H.verify_germ_presentation();
    auto m = G.check_modular_istructure();
    auto w = G.wreath_embedding_check();
    j["checks"] = {{"germ_presentation", g.ok()},
                   {"modular_istructure", m.ok()},
                   {"wreath_embedding", w.ok()}};
    ok = g.ok() && m.ok() && w.ok();
  }
  std::ostringstream text;
  text << "n=" << M.rank() << " d=" << G.d() << " cox_order=" << G.order()
       << " exponent=" << j["exponent"] << " iyb_order=" << j["iyb_order"];
  emit(out, c, j, text.str());
  return ok ? ExitCode::ok : ExitCode::property_failure;
}

int cmd_rep(std::string const& path, std::string const& word, bool specialized, Common const& c,
            std::ostream& out) {
  OpTable T = read_table_file(path);
  StructureMonoid M(T);
  std::optional<CoxGroup> G;
  if (specialized) {
    G.emplace(M, c.budget);
  }
  auto prep = [&](MonomialMatrix m) { return G ? specialize(m, G->d()) : m; };
  auto mat_json = [&](MonomialMatrix const& m) {
    ordered_json x;
    x["exps"] = m.exps;
    x["perm"] = labels(M.table(), m.perm.images());
    return x;
  };
  ordered_json j;
  std::ostringstream text;
  if (!word.empty()) {
    auto g = M.group_element_from_word(parse_group_word(M.table(), word));
    auto m = prep(theta(g));
    j["matrix"] = mat_json(m);
    text << render(m);
    if (G) {
      j["order"] = matrix_order(m);
    }
  } else {
    ordered_json gens = ordered_json::object();
    for (Elem s = 0; s < M.rank(); ++s) {
      auto m = prep(theta_generator(M, s));
      gens[M.table().name(s)] = mat_json(m);
      text << M.table().name(s) << ":\n" << render(m);
    }
    j["generators"] = gens;
  }
  bool rel = relations_respected(M);
  j["relations_respected"] = rel;
  bool ok = rel;
  if (G) {
    j["modulus"] = G->d();
    auto f = check_specialized_faithfulness(*G);
    j["faithful"] = {{"generated", f.generated}, {"expected", f.expected}, {"ok", f.ok()}};
    ok = ok && f.ok();
  }
  emit(out, c, j, text.str());
  return ok ? ExitCode::ok : ExitCode::property_failure;
}

int cmd_enum(std::size_t n, bool up_to_iso, bool naive, std::size_t max_n, Common const& c,
             std::ostream& out) {
  std::size_t count = 0;
  auto show = [&](OpTable const& t) {
    ++count;
    if (c.format != "text") {
      out << table_to_json(t).dump() << '\n';
    }
  };
  if (naive) {
    for (auto const& t : enumerate_rc_quasigroups_naive(n, up_to_iso)) {
      show(t);
    }
  } else {
    for_each_rc_quasigroup(n, EnumerationOptions{max_n, up_to_iso}, show);
  }
  if (c.format == "text") {
    out << count << '\n';
  }
  return ExitCode::ok;
}

int cmd_export(std::string const& path, std::string const& kind, std::optional<std::uint64_t> power,
               Common const& c, std::ostream& out) {
  OpTable T = read_table_file(path);
  StructureMonoid M(T);
  GraphKind k = parse_graph_kind(kind);
  LabeledGraph g;
  if (k == GraphKind::divisor_lattice) {
    std::uint64_t p = power ? *power : M.class_number() - 1;
    g = divisor_lattice(M, p, c.budget);
  } else {
    CoxGroup G(M, c.budget);
    g = k == GraphKind::germ_cayley ? germ_cayley_graph(G) : full_cayley_graph(G);
  }
  if (c.format == "json") {
    ordered_json j;
    j["vertices"] = g.vertex_labels;
    ordered_json e = ordered_json::array();
    for (auto const& x : g.edges) {
      e.push_back({x.from, x.to, M.table().name(x.label)});
    }
    j["edges"] = e;
    out << j.dump() << '\n';
  } else {
    out << to_dot(g, M.table(), kind);
  }
  return ExitCode::ok;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations with RC-quasigroups, their structure monoids and groups"};
  app.require_subcommand(1);
  Common c;

  std::string file, to = "ybe", fn, op, word, kind;
  std::vector<std::string> rest;
  bool up_to_iso = false, naive = false, verify = false, specialized = false;
  std::size_t n = 0, max_n = 4;
  std::optional<std::uint64_t> power;

  auto* v = app.add_subcommand("verify", "Validate a table and check the calculus identities");
  v->add_option("table", file)->required();
  add_common(v, c, true);

  auto* cv = app.add_subcommand("convert", "Convert between table, solution and birack forms");
  cv->add_option("input", file)->required();
  cv->add_option("--to", to)->check(CLI::IsMember({"table", "lop", "ybe", "birack"}));
  add_common(cv, c);

  auto* ca = app.add_subcommand("calc", "Evaluate Omega-type monomials");
  ca->add_option("table", file)->required();
  ca->add_option("function", fn)
      ->required()
      ->check(CLI::IsMember({"omega", "omega-tilde", "pi", "pi-tilde", "tilde", "invert"}));
  ca->add_option("tuple", rest)->required();
  add_common(ca, c);

  auto* mo = app.add_subcommand("monoid", "Structure monoid operations");
  mo->add_option("table", file)->required();
  mo->add_option("operation", op)
      ->required()
      ->check(CLI::IsMember({"nf", "coords", "lcm", "gcd", "eq", "group-eq", "mul", "complement",
                             "left-lcm", "right-gcd", "divides", "presentation"}));
  mo->add_option("words", rest);
  add_common(mo, c);

  auto* ge = app.add_subcommand("germ", "Summary of the finite quotient");
  ge->add_option("table", file)->required();
  ge->add_flag("--verify", verify, "Also check the germ presentation and I-structure");
  add_common(ge, c);

  auto* re = app.add_subcommand("rep", "Monomial linear representation");
  re->add_option("table", file)->required();
  re->add_option("--element", word, "Group word; a trailing ' marks an inverse");
  re->add_flag("--specialize", specialized, "Specialize q to a primitive d-th root of unity");
  add_common(re, c);

  auto* en = app.add_subcommand("enum", "Enumerate RC-quasigroups of a given size");
  en->add_option("n", n)->required();
  en->add_flag("--up-to-iso", up_to_iso);
  en->add_flag("--naive", naive, "Filter all tables instead of searching");
  en->add_option("--max-n", max_n, "Largest size accepted");
  add_common(en, c);

  auto* ex = app.add_subcommand("export", "Graphviz export");
  ex->add_option("table", file)->required();
  ex->add_option("--kind", kind)
      ->required()
      ->check(CLI::IsMember({"divisor-lattice", "germ-cayley", "full-cayley"}));
  ex->add_option("--power", power, "Exponent p for the divisors of Delta^p");
  add_common(ex, c);
  ex->get_option("--format")->default_str("dot");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return ExitCode::ok;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::input_error;
  }

  try {
    if (*v) {
      return cmd_verify(file, c, out);
    }
    if (*cv) {
      return cmd_convert(file, to, c, out);
    }
    if (*ca) {
      return cmd_calc(file, fn, rest, c, out);
    }
    if (*mo) {
      return cmd_monoid(file, op, rest, c, out);
    }
    if (*ge) {
      return cmd_germ(file, verify, c, out);
    }
    if (*re) {
      return cmd_rep(file, word, specialized, c, out);
    }
    if (*en) {
      return cmd_enum(n, up_to_iso, naive, max_n, c, out);
    }
    if (*ex) {
      if (ex->count("--format") == 0) {
        c.format = "dot";
      }
      return cmd_export(file, kind, power, c, out);
    }
  } catch (BudgetError const& e) {
    err << "budget: " << e.what() << '\n';
    return ExitCode::budget_refusal;
  } catch (ParseError const& e) {
    err << "input: " << e.what() << '\n';
    return ExitCode::input_error;
  } catch (StructuralError const& e) {
    err << "input: " << e.what() << '\n';
    return ExitCode::input_error;
  } catch (Error const& e) {
    err << "property: " << e.what() << '\n';
    return ExitCode::property_failure;
  }
  return ExitCode::input_error;
}

}  // namespace rcq::cli
