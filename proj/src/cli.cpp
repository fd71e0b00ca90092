#include "cyset/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "cyset/calculus.hpp"
#include "cyset/census.hpp"
#include "cyset/cycle_set.hpp"
#include "cyset/error.hpp"
#include "cyset/garside.hpp"
#include "cyset/germ.hpp"
#include "cyset/monomial.hpp"
#include "cyset/zappa.hpp"

namespace cyset {

namespace {

// Returned by a subcommand to signal a negative verdict (exit 1).
struct Verdict {
  bool ok;
};

CycleSet load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_cys(buffer.str());
}

std::vector<long long> parse_list(const std::string& text) {
  std::vector<long long> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "not an integer: '" + item + "'");
    }
    if (used != item.size()) throw Error(ErrorCode::ParseError, "not an integer: '" + item + "'");
    out.push_back(value);
  }
  return out;
}

Word parse_word(const CycleSet& s, const std::string& text) {
  Word w;
  for (long long x : parse_list(text)) {
    if (x < 1 || static_cast<std::size_t>(x) > s.size())
      throw Error(ErrorCode::IndexOutOfRange,
                  "letter " + std::to_string(x) + " not in 1.." + std::to_string(s.size()));
    w.push_back(static_cast<Index>(x - 1));
  }
  return w;
}

// "cp:2,1,1,0" gives the monoid element with that cp, anything else
// (optionally prefixed "w:") is a word.
MonomialElement parse_element(const CycleSet& s, const std::string& text) {
  if (text.rfind("cp:", 0) == 0) {
    ExponentVector c;
    for (long long x : parse_list(text.substr(3))) c.push_back(x);
    return cp_to_element(s, c);
  }
  return word_to_element(s, parse_word(s, text.rfind("w:", 0) == 0 ? text.substr(2) : text));
}

template <class Range>
std::string tuple_string(const Range& values, long long offset = 0) {
  std::string out = "(";
  bool first = true;
  for (const auto& v : values) {
    out += (first ? "" : ",") + std::to_string(static_cast<long long>(v) + offset);
    first = false;
  }
  return out + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_cycles(std::ostream& out, const CycleSet& s) {
  for (Index i = 0; i < s.size(); ++i)
    out << "psi(s_" << i + 1 << ")=" << s.psi(i).to_cycle_string() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cycle sets, their structure groups and germs", "cyset"};
  app.require_subcommand(1);

  std::string file, file2, word, w1, w2, a_text, b_text, side = "left", out_path;
  long long k = 1;
  std::optional<long long> modulus;
  bool mod_d = false, recompose = false, iso = false;
  std::size_t n = 0, cap = kDefaultCensusCap;

  auto* validate_cmd = app.add_subcommand("validate", "check the cycle-set law");
  validate_cmd->add_option("file", file, ".cys file")->required();

  auto* info_cmd = app.add_subcommand("info", "diagonal map, permutation group, class");
  info_cmd->add_option("file", file)->required();

  auto* pi_cmd = app.add_subcommand("pi", "Pi-expression, cp and length of a word");
  pi_cmd->add_option("file", file)->required();
  pi_cmd->add_option("--word", word, "comma-separated 1-based letters")->required();

  auto* equal_cmd = app.add_subcommand("equal", "word problem in the monoid or the germ");
  equal_cmd->add_option("file", file)->required();
  equal_cmd->add_option("--w1", w1)->required();
  equal_cmd->add_option("--w2", w2)->required();
  equal_cmd->add_flag("--mod-d", mod_d, "compare in the germ");

  std::vector<CLI::App*> lattice;
  for (const char* name : {"gcd", "lcm", "divides"}) {
    const std::string name_s = name;
    auto* cmd = app.add_subcommand(name, name_s == "divides" ? "whether a divides b in the monoid"
                                                             : name_s + " of two monoid elements");
    cmd->add_option("file", file)->required();
    cmd->add_option("--a", a_text, "word (1,2,3) or cp:c1,...,cn")->required();
    cmd->add_option("--b", b_text)->required();
    cmd->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
    lattice.push_back(cmd);
  }

  auto* delta_cmd = app.add_subcommand("delta", "Garside element power");
  delta_cmd->add_option("file", file)->required();
  delta_cmd->add_option("--k", k)->check(CLI::PositiveNumber);

  auto* class_cmd = app.add_subcommand("class", "Dehornoy class report");
  class_cmd->add_option("file", file)->required();

  auto* germ_cmd = app.add_subcommand("germ", "germ order and permutation-freeness");
  germ_cmd->add_option("file", file)->required();
  germ_cmd->add_option("--modulus", modulus, "multiple of the class");

  auto* retract_cmd = app.add_subcommand("retract", "retraction S^[k] as .cys");
  retract_cmd->add_option("file", file)->required();
  retract_cmd->add_option("--k", k)->required()->check(CLI::PositiveNumber);

  auto* zappa_cmd = app.add_subcommand("zappa", "Zappa-Szep composition of coprime classes");
  zappa_cmd->add_option("file1", file)->required();
  zappa_cmd->add_option("file2", file2)->required();

  auto* sylow_cmd = app.add_subcommand("sylow", "Sylow factors");
  sylow_cmd->add_option("file", file)->required();
  sylow_cmd->add_flag("--recompose", recompose, "fold the factors back and compare");

  auto* census_cmd = app.add_subcommand("census", "enumerate all cycle sets of size n");
  census_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  census_cmd->add_flag("--iso", iso, "one table per isomorphism class");
  census_cmd->add_option("--out", out_path, "census file (resumed or verified if present)");
  census_cmd->add_option("--cap", cap, "largest n allowed");

  auto* bounds_cmd = app.add_subcommand("bounds", "a_n and Landau g(n)");
  bounds_cmd->add_option("--n", n)->required()->check(CLI::Range(2, 60));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << "\n";
    return 2;
  }

  try {
    Verdict verdict{true};
    if (validate_cmd->parsed()) {
      const auto s = load(file);
      const auto r = validate(s);
      if (r.valid())
        out << "Valid\n";
      else
        out << "Invalid (witness " << r.witness->to_string() << ")\n";
      verdict.ok = r.valid();
    } else if (info_cmd->parsed()) {
      const auto s = load(file);
      const auto diag = diagonal_map(s);
      const auto group = perm_group(s, 0);
      const auto cls = dehornoy_class(s);
      out << "n=" << s.size() << "\n";
      out << "square_free=" << yes_no(diag.square_free) << "\n";
      out << "T=" << diag.t.to_cycle_string() << " o(T)=" << diag.order << "\n";
      out << "group_order=" << group.order << " abelian=" << yes_no(group.abelian)
          << " transitive=" << yes_no(group.transitive) << "\n";
      out << "orbits=";
      for (const auto& orbit : group.orbits) out << tuple_string(orbit, 1);
      out << "\n";
      out << "class=" << cls.d << "\n";
      out << "o(T)|d=" << yes_no(cls.checks.ot_divides_d) << " d|#G=" << yes_no(cls.checks.d_divides_group)
          << " #G|d^n=" << yes_no(cls.checks.group_divides_dn)
          << " primes(d)=primes(#G)=" << yes_no(cls.checks.same_primes)
          << " d|n!=" << yes_no(cls.checks.d_divides_factorial) << "\n";
    } else if (pi_cmd->parsed()) {
      const auto s = load(file);
      const auto w = parse_word(s, word);
      const auto g = word_to_element(s, w);
      out << "pi=" << tuple_string(pi_expression(s, w), 1) << "\n";
      out << "cp=" << tuple_string(g.cp) << "\n";
      out << "perm=" << g.perm.to_cycle_string() << "\n";
      out << "lambda=" << g.length() << "\n";
    } else if (equal_cmd->parsed()) {
      const auto s = load(file);
      const auto a = parse_word(s, w1), b = parse_word(s, w2);
      const bool eq = mod_d ? germ_words_equal(s, a, b, static_cast<Exponent>(class_of(s)))
                            : words_equal(s, a, b);
      out << (eq ? "true" : "false") << "\n";
      verdict.ok = eq;
    } else if (lattice[0]->parsed() || lattice[1]->parsed() || lattice[2]->parsed()) {
      const auto s = load(file);
      const auto a = parse_element(s, a_text), b = parse_element(s, b_text);
      const bool left = side == "left";
      if (lattice[2]->parsed()) {
        const bool d = left ? left_divides(a, b) : right_divides(a, b);
        out << (d ? "true" : "false") << "\n";
        verdict.ok = d;
      } else {
        const bool gcd = lattice[0]->parsed();
        const auto r = gcd ? (left ? gcd_left(s, a, b) : gcd_right(s, a, b))
                           : (left ? lcm_left(s, a, b) : lcm_right(s, a, b));
        out << r.to_string() << "\n";
      }
    } else if (delta_cmd->parsed()) {
      const auto s = load(file);
      out << delta(s, k).to_string() << "\n";
    } else if (class_cmd->parsed()) {
      const auto s = load(file);
      const auto r = dehornoy_class(s);
      out << "d=" << r.d << "\n";
      out << "per_generator=" << tuple_string(r.per_generator) << "\n";
      out << "o(T)=" << r.o_t << "\n";
      out << "group_order=" << r.g_order << "\n";
      out << "checks=" << (r.checks.all() ? "pass" : "FAIL") << "\n";
      verdict.ok = r.checks.all();
    } else if (germ_cmd->parsed()) {
      const auto s = load(file);
      const Germ g(s, modulus ? std::optional<Exponent>(*modulus) : std::nullopt);
      const auto c = g.closure();
      out << "modulus=" << g.modulus() << "\n";
      out << "order=" << c.size << " expected=" << g.order() << "\n";
      out << "permutation_free=" << yes_no(c.permutation_free()) << "\n";
      verdict.ok = c.permutation_free() && c.size == g.order();
    } else if (retract_cmd->parsed()) {
      out << format_cys(retraction(load(file), static_cast<std::uint64_t>(k)));
    } else if (zappa_cmd->parsed()) {
      const auto r = zappa_compose(load(file), load(file2));
      out << "d1=" << r.d1 << " d2=" << r.d2 << " u=" << r.u << " v=" << r.v << "\n";
      print_cycles(out, r.candidate);
      out << format_cys(r.candidate);
      if (r.valid())
        out << "valid\n";
      else
        out << "invalid (witness " << r.validation.witness->i + 1 << " " << r.validation.witness->j + 1
            << " " << r.validation.witness->u + 1 << ")\n";
      verdict.ok = r.valid();
    } else if (sylow_cmd->parsed()) {
      const auto s = load(file);
      const auto factors = sylow_decompose(s);
      for (const auto& f : factors) {
        out << "# prime " << f.prime << " class " << f.alpha() << " beta " << f.beta << "\n";
        out << format_cys(f.cycle_set) << "\n";
      }
      if (recompose) {
        const bool same = sylow_recompose(factors) == s;
        out << "round trip: " << (same ? "exact" : "differs") << "\n";
        verdict.ok = same;
      }
    } else if (census_cmd->parsed()) {
      const auto mode = iso ? CensusMode::UpToIso : CensusMode::Labeled;
      const auto rec = out_path.empty() ? census_stats(n, mode, cap) : census_to_file(n, mode, out_path, cap);
      out << "n=" << rec.n << "\n";
      out << "labeled=" << rec.total_count << "\n";
      if (rec.iso_count) out << "iso=" << *rec.iso_count << "\n";
      out << "dmax=" << rec.dmax << "\n";
      for (const auto& [d, count] : rec.class_histogram) out << "class " << d << ": " << count << "\n";
      out << "prime_power_fraction=" << rec.prime_power_fraction << "\n";
      for (const auto& c : rec.nd_checks)
        out << "N(n," << c.d << ")=" << c.count << " bound=" << c.bound << (c.holds() ? "" : " VIOLATED")
            << "\n";
      out << "violations=" << rec.violations.size() << "\n";
      for (const auto& v : rec.violations) out << "  " << v << "\n";
    } else if (bounds_cmd->parsed()) {
      const auto b = class_bounds(static_cast<unsigned>(n));
      out << "a_n=" << b.a_n << " g_n=" << b.landau_g << "\n";
    }
    return verdict.ok ? 0 : 1;
  } catch (const Error& e) {
    err << "ERR " << code_name(e.code()) << ": " << e.what() << "\n";
    return 1;
  }
}

}  // namespace cyset
