// wittforge: batch calculators for quadratic-form invariants, Witt-ring
// decisions, Pfister decompositions, the Clifford 2-group G_n, and the
// essential-dimension bound tables.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "wittforge/serialize.hpp"

namespace wf = wittforge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct Output {
  bool machine = false;
  std::string path;  // empty = stdout

  void emit(const wf::Json& machine_doc, const std::string& human_text) const {
    const std::string body = machine ? machine_doc.dump() + "\n" : human_text;
    write(body);
  }
  void write(const std::string& body) const {
    if (path.empty()) {
      std::cout << body;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << body;
  }
};

std::string slurp_or_inline(const std::string& arg) {
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return arg;
  std::ifstream in(arg);
  if (!in) throw wf::ParseError("form/slots argument: cannot open file \"" + arg + "\"");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

wf::Json parse_json_arg(const std::string& arg) {
  try {
    return wf::Json::parse(slurp_or_inline(arg));
  } catch (const nlohmann::json::parse_error& e) {
    throw wf::ParseError(std::string("invalid JSON: ") + e.what());
  }
}

wf::BaseField parse_field_flag(const std::string& spec) {
  if (spec == "Q") return wf::BaseField::rationals();
  if (spec.rfind("Fp:", 0) == 0) {
    try {
      return wf::BaseField::prime_field(static_cast<std::uint32_t>(std::stoul(spec.substr(3))));
    } catch (const std::exception& e) {
      throw wf::ParseError(std::string("--field: ") + e.what());
    }
  }
  throw wf::ParseError("--field: expected Q or Fp:<p>");
}

wf::DiagonalForm load_form(const std::string& arg) {
  return wf::form_from_json(parse_json_arg(arg));
}

std::string bool_text(bool b) { return b ? "true\n" : "false\n"; }

std::string human_invariants(const wf::WittInvariants& inv) {
  std::ostringstream os;
  os << "field " << wf::to_string(inv.field) << "\n"
     << "dimension " << inv.dimension << "\n"
     << "signed discriminant " << wf::to_string(inv.signed_discriminant) << "\n";
  if (inv.field.is_rationals()) {
    os << "signature " << inv.signature << "\n";
    os << "hasse symbols";
    for (const auto& [v, s] : inv.hasse_symbols)
      os << " (" << wf::to_string(v) << ": " << (s > 0 ? "+1" : "-1") << ")";
    os << "\n";
  }
  return os.str();
}

std::string human_report(const wf::BoundReport& r) {
  std::ostringstream os;
  os << r.name << "(n=" << r.n << ") = ";
  if (r.exact)
    os << wf::to_string(r.value);
  else
    os << "[" << wf::to_string(r.enclosure.lo) << ", " << wf::to_string(r.enclosure.hi) << "]";
  if (r.vacuous) os << "  (vacuous)";
  os << "  [" << r.validity << "]\n";
  return os.str();
}

int run_selftest();

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wittforge: Witt rings, Pfister forms, Clifford 2-groups and"
               " essential-dimension bound calculators"};
  app.require_subcommand(1);

  std::string format = "human";
  std::string out_path;
  app.add_option("--format", format, "human|machine")->check(CLI::IsMember({"human", "machine"}));
  app.add_option("--out", out_path, "write output to a file");
  auto with_io = [&format, &out_path](CLI::App* sub) {
    sub->add_option("--format", format, "human|machine")
        ->check(CLI::IsMember({"human", "machine"}));
    sub->add_option("--out", out_path, "write output to a file");
    return sub;
  };

  std::vector<std::string> form_args;
  std::vector<std::string> slots_args;
  std::string field_spec = "Q";
  int level = 0;
  int n_arg = 0;
  bool force = false;

  auto* inv_cmd = with_io(app.add_subcommand("invariants", "classifying invariants of a form"));
  inv_cmd->add_option("--form", form_args, "form (inline JSON or file)")->required()->allow_extra_args(false);

  auto* weq_cmd = with_io(app.add_subcommand("witt-equiv", "Witt equivalence of two forms"));
  weq_cmd->add_option("--form", form_args, "two forms (repeat the flag)")->required()->allow_extra_args(false);

  auto* hyp_cmd = with_io(app.add_subcommand("hyperbolic", "is the form hyperbolic?"));
  hyp_cmd->add_option("--form", form_args)->required()->allow_extra_args(false);

  auto* ideal_cmd = with_io(app.add_subcommand("ideal", "membership of the Witt class in I^level"));
  ideal_cmd->add_option("--form", form_args)->required()->allow_extra_args(false);
  ideal_cmd->add_option("--level", level, "0..3")->required()->check(CLI::Range(0, 3));

  auto* expand_cmd = with_io(app.add_subcommand("pfister-expand", "expand Pfister slots to a form"));
  expand_cmd->add_option("--slots", slots_args, "slots (inline JSON or file)")->required()->allow_extra_args(false);
  expand_cmd->add_option("--field", field_spec, "Q or Fp:<p> (default Q)");

  auto* dec_cmd = with_io(app.add_subcommand("decompose", "signed Pfister decomposition in I^level"));
  dec_cmd->add_option("--form", form_args)->required()->allow_extra_args(false);
  dec_cmd->add_option("--level", level, "1 or 2")->required()->check(CLI::Range(1, 2));

  auto* phi_cmd = with_io(app.add_subcommand("phi", "assemble phi from 3-fold slots"));
  phi_cmd->add_option("--slots", slots_args, "3-fold slots (repeat, or one JSON array)")
      ->required()
      ->allow_extra_args(false);
  phi_cmd->add_option("--field", field_spec, "Q or Fp:<p> (default Q)");

  auto* cliff_cmd = with_io(app.add_subcommand("clifford", "structure of the 2-group G_n"));
  cliff_cmd->add_option("--n", n_arg, "ambient 2..30")->required()->check(CLI::Range(2, 30));

  auto* ed_cmd = with_io(app.add_subcommand("ed", "essential dimension of G_n"));
  ed_cmd->add_option("--n", n_arg, "ambient 2..30")->required()->check(CLI::Range(2, 30));

  auto* bounds_cmd = with_io(app.add_subcommand("bounds", "every bound the calculators state for n"));
  bounds_cmd->add_option("--n", n_arg)->required();
  bounds_cmd->add_flag("--force", force, "evaluate formulas outside their stated ranges");

  auto* table_cmd = with_io(app.add_subcommand("table", "reproduce the bound tables as TSV"));
  std::string which = "all";
  table_cmd->add_option("--which", which, "rost|spin|pfister3|all")
      ->check(CLI::IsMember({"rost", "spin", "pfister3", "all"}));

  auto* self_cmd = with_io(app.add_subcommand("selftest", "run the invariant suites at reduced scale"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  Output out;
  out.machine = format == "machine";
  out.path = out_path;

  try {
    if (*inv_cmd) {
      const wf::WittInvariants inv = wf::invariants(load_form(form_args.at(0)));
      out.emit(wf::invariants_to_json(inv), human_invariants(inv));
    } else if (*weq_cmd) {
      if (form_args.size() != 2) throw wf::ParseError("witt-equiv needs exactly two --form");
      const bool eq = wf::witt_equivalent(load_form(form_args[0]), load_form(form_args[1]));
      out.emit(wf::Json{{"witt_equivalent", eq}}, bool_text(eq));
    } else if (*hyp_cmd) {
      const bool h = wf::is_hyperbolic(load_form(form_args.at(0)));
      out.emit(wf::Json{{"hyperbolic", h}}, bool_text(h));
    } else if (*ideal_cmd) {
      const bool m = wf::ideal_membership(load_form(form_args.at(0)), level);
      out.emit(wf::Json{{"level", level}, {"member", m}}, bool_text(m));
    } else if (*expand_cmd) {
      const wf::BaseField f = parse_field_flag(field_spec);
      const wf::PfisterSlots slots = wf::slots_from_json(parse_json_arg(slots_args.at(0)), f);
      const wf::DiagonalForm q = wf::expand_pfister(slots);
      out.emit(wf::form_to_json(q), wf::to_string(q) + "\n");
    } else if (*dec_cmd) {
      const wf::DiagonalForm q = load_form(form_args.at(0));
      std::vector<wf::PfisterSlots> terms;
      if (level == 1)
        terms = wf::decompose_I1(q);
      else if (level == 2)
        terms = wf::decompose_I2(q);
      else
        throw wf::ParseError("decompose: --level must be 1 or 2");
      wf::Json arr = wf::Json::array();
      std::string human;
      for (const auto& t : terms) {
        arr.push_back(wf::slots_to_json(t));
        human += wf::to_string(t) + "\n";
      }
      if (terms.empty()) human = "(hyperbolic: empty decomposition)\n";
      out.emit(arr, human);
    } else if (*phi_cmd) {
      const wf::BaseField f = parse_field_flag(field_spec);
      std::vector<wf::PfisterSlots> triples;
      for (const std::string& s : slots_args) {
        const wf::Json j = parse_json_arg(s);
        if (j.is_array())
          for (const wf::Json& one : j) triples.push_back(wf::slots_from_json(one, f));
        else
          triples.push_back(wf::slots_from_json(j, f));
      }
      const wf::DiagonalForm phi = wf::assemble_phi(triples);
      const bool in_i3 = wf::ideal_membership(phi, 3);
      wf::Json doc{{"phi", wf::form_to_json(phi)},
                   {"dimension", phi.dimension()},
                   {"in_I3", in_i3}};
      std::ostringstream human;
      human << wf::to_string(phi) << "\ndimension " << phi.dimension() << "\nin I^3: "
            << (in_i3 ? "true" : "false") << "\n";
      out.emit(doc, human.str());
    } else if (*cliff_cmd) {
      const wf::GroupSummary s = wf::group_summary(n_arg);
      std::ostringstream human;
      human << "G_" << s.n << ": order " << s.order << ", center "
            << wf::to_string(s.center_kind) << " {";
      for (std::size_t i = 0; i < s.center_elements.size(); ++i)
        human << (i ? ", " : "") << wf::to_string(s.center_elements[i]);
      human << "}, commutator subgroup order " << s.commutator_subgroup_order << ", exponent "
            << s.exponent << ", ed " << s.ed_value << "\n";
      out.emit(wf::summary_to_json(s), human.str());
    } else if (*ed_cmd) {
      const std::int64_t ed = wf::ed_formula(wf::group_summary(n_arg));
      out.emit(wf::Json{{"n", n_arg}, {"ed", ed}},
               "ed(G_" + std::to_string(n_arg) + ") = " + std::to_string(ed) + "\n");
    } else if (*bounds_cmd) {
      wf::Json arr = wf::Json::array();
      std::string human;
      auto push = [&](const wf::BoundReport& r) {
        arr.push_back(wf::report_to_json(r));
        human += human_report(r);
      };
      push(wf::spin_lower(n_arg));
      if (n_arg >= 15 || force) {
        push(wf::spin_upper(n_arg, force));
        wf::BoundReport rep;
        rep.name = "spin_rep_dimension";
        rep.n = n_arg;
        rep.value = wf::spin_rep_dimension(n_arg);
        rep.validity = "generically free representation";
        push(rep);
      }
      if (n_arg % 4 == 0) push(wf::merkurjev_lower(n_arg));
      if (n_arg >= 3 && n_arg <= 14) {
        wf::BoundReport rost;
        rost.name = "rost_exact";
        rost.n = n_arg;
        rost.value = wf::rost_table(n_arg);
        rost.validity = "3 <= n <= 14";
        push(rost);
      }
      const int res8 = n_arg % 8;
      if ((n_arg >= 7 && (res8 == 0 || res8 == 1 || res8 == 7)) || n_arg >= 11)
        push(wf::chernousov_serre_lower(n_arg));
      if (n_arg % 4 == 0 && (n_arg >= 20 || force)) push(wf::hspin_value(n_arg, force));
      if (n_arg >= 15) {
        auto [lo, hi] = wf::tn_interval(n_arg);
        push(lo);
        push(hi);
      }
      if (n_arg >= 2 && n_arg % 2 == 0) {
        const wf::Pfister3Bound p = wf::pfister3_lower_bound(n_arg);
        push(p.report);
        human += "pfister3 least integer r: " + p.least_r.str() + "\n";
        arr.push_back(wf::Json{{"name", "pfister3_least_r"}, {"n", n_arg},
                               {"value", p.least_r.str()}});
      }
      out.emit(arr, human);
    } else if (*table_cmd) {
      std::string body;
      if (which == "rost")
        body = wf::emit_rost_table_tsv();
      else if (which == "spin")
        body = wf::emit_spin_sweep_tsv();
      else if (which == "pfister3")
        body = wf::emit_pfister3_sweep_tsv();
      else
        body = wf::emit_rost_table_tsv() + wf::emit_spin_sweep_tsv() +
               wf::emit_pfister3_sweep_tsv();
      out.write(body);
    } else if (*self_cmd) {
      return run_selftest();
    }
  } catch (const wf::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

namespace {

std::uint64_t selftest_seed() {
  if (const char* env = std::getenv("WITTFORGE_SEED")) return std::strtoull(env, nullptr, 10);
  return 20240809;
}

wf::FieldElem random_rational(std::mt19937_64& rng, int height = 50) {
  std::uniform_int_distribution<int> num(1, height), den(1, height), sgn(0, 1);
  return wf::FieldElem::rational(wf::Rational((sgn(rng) ? 1 : -1) * num(rng), den(rng)));
}

int run_selftest() {
  int failures = 0;
  auto suite = [&failures](const std::string& name, bool ok) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };
  std::mt19937_64 rng(selftest_seed());
  const wf::BaseField q = wf::BaseField::rationals();

  {  // Hilbert product formula, reduced scale
    bool ok = true;
    for (int i = 0; i < 200 && ok; ++i) {
      const wf::FieldElem a = random_rational(rng), b = random_rational(rng);
      const auto ca = wf::square_class_rational(a.value());
      const auto cb = wf::square_class_rational(b.value());
      std::set<wf::Int> primes{wf::Int(2)};
      primes.insert(ca.primes.begin(), ca.primes.end());
      primes.insert(cb.primes.begin(), cb.primes.end());
      int prod = wf::hilbert_symbol(a, b, wf::Place::real());
      for (const wf::Int& p : primes) prod *= wf::hilbert_symbol(a, b, wf::Place::finite(p));
      ok = prod == 1;
    }
    suite("hilbert-product-formula", ok);
  }
  {  // square class idempotence / multiplicativity
    bool ok = true;
    for (int i = 0; i < 100 && ok; ++i) {
      const wf::FieldElem a = random_rational(rng), b = random_rational(rng);
      ok = wf::square_class(wf::square_class(a)) == wf::square_class(a) &&
           wf::square_class(a * b) ==
               wf::square_class_mul(wf::square_class(a), wf::square_class(b));
    }
    suite("square-class-laws", ok);
  }
  {  // decompositions, reduced scale
    bool ok = true;
    std::uniform_int_distribution<std::size_t> dims(1, 4);
    for (int i = 0; i < 50 && ok; ++i) {
      const std::size_t dim = 2 * dims(rng);
      std::vector<wf::FieldElem> c;
      for (std::size_t k = 0; k < dim; ++k) c.push_back(random_rational(rng, 20));
      const wf::DiagonalForm form(q, c);
      auto sum = [&q](const std::vector<wf::PfisterSlots>& ts) {
        wf::DiagonalForm acc(q);
        for (const auto& t : ts) {
          wf::DiagonalForm e = wf::expand_pfister(t);
          if (t.sign < 0) e = wf::scale(e, -wf::FieldElem::one(q));
          acc = wf::direct_sum(acc, e);
        }
        return acc;
      };
      const auto t1 = wf::decompose_I1(form);
      ok = t1.size() <= dim && wf::witt_equivalent(sum(t1), form);
      if (ok && wf::ideal_membership(form, 2)) {
        const auto t2 = wf::decompose_I2(form);
        ok = t2.size() + 2 <= dim && wf::witt_equivalent(sum(t2), form);
      }
    }
    suite("pfister-decompositions", ok);
  }
  {  // phi assemblies, reduced scale
    bool ok = true;
    std::uniform_int_distribution<std::size_t> rs(1, 4);
    for (int i = 0; i < 20 && ok; ++i) {
      const std::size_t r = rs(rng);
      std::vector<wf::PfisterSlots> triples;
      for (std::size_t k = 0; k < r; ++k)
        triples.emplace_back(k < (r + 1) / 2 ? +1 : -1,
                             std::vector<wf::FieldElem>{random_rational(rng, 20),
                                                        random_rational(rng, 20),
                                                        random_rational(rng, 20)});
      const wf::DiagonalForm phi = wf::assemble_phi(triples);
      ok = phi.dimension() == (r % 2 ? 7 * r + 1 : 7 * r) && wf::ideal_membership(phi, 3);
    }
    suite("phi-assembly", ok);
  }
  {  // clifford structure, reduced scale
    bool ok = true;
    try {
      for (int n = 2; n <= 10; ++n) (void)wf::group_summary(n);  // throws on mismatch
    } catch (const std::exception&) {
      ok = false;
    }
    suite("clifford-brute-force", ok);
  }
  {  // bounds consistency
    bool ok = true;
    for (int n = 15; n <= 40 && ok; ++n) {
      ok = wf::spin_lower(n).value <= wf::spin_upper(n).value;
      if (ok && n % 4 == 0) ok = wf::merkurjev_lower(n).value <= wf::spin_upper(n).value;
    }
    for (int n = 12; n <= 40 && ok; n += 2) {
      const wf::RealWitness w = wf::r_plus(n, wf::RootParity::even);
      const wf::Pfister3Bound b = wf::pfister3_lower_bound(n);
      ok = w.lo >= (b.report.exact ? b.report.value : b.report.enclosure.hi);
    }
    suite("bound-orderings", ok);
  }
  return failures == 0 ? kExitOk : kExitDomain;
}

}  // namespace
