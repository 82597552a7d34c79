// SPDX-License-Identifier: Apache-2.0

#include "ncreal/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>

#include "ncreal/coding.hpp"
#include "ncreal/compression.hpp"
#include "ncreal/errors.hpp"
#include "ncreal/extraction.hpp"
#include "ncreal/field.hpp"
#include "ncreal/harness.hpp"

namespace ncreal {

namespace {

bool is_atom_char(char c) {
  return c != '(' && c != ')' && c != ',' && c != ' ' && c != '\t' && c != '\n';
}

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  SpecTerm parse_all() {
    SpecTerm t = parse_term();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  SpecTerm parse_term() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_atom_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected a name or value");
    SpecTerm term{std::string(text_.substr(start, pos_ - start)), {}, false};
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      term.call = true;
      ++pos_;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ')') {
        ++pos_;
        return term;
      }
      for (;;) {
        term.args.push_back(parse_term());
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (pos_ < text_.size() && text_[pos_] == ')') {
          ++pos_;
          break;
        }
        fail("expected ',' or ')'");
      }
    }
    return term;
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n')) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Index parse_natural(const std::string& text) {
  Index value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    throw ParseError("not a natural number: '" + text + "'");
  }
  return value;
}

void expect_arity(const SpecTerm& t, std::size_t n) {
  if (!t.call || t.args.size() != n) {
    throw ParseError("'" + t.head + "' takes " + std::to_string(n) + " argument(s): '" + t.str() +
                     "'");
  }
}

void expect_atom(const SpecTerm& t) {
  if (t.call) throw ParseError("expected a plain value, got '" + t.str() + "'");
}

Rational atom_rational(const SpecTerm& t) {
  expect_atom(t);
  return Rational::parse(t.head);
}

Index atom_natural(const SpecTerm& t) {
  expect_atom(t);
  return parse_natural(t.head);
}

std::vector<std::string> read_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::vector<std::string> records;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    records.push_back(line.substr(first, last - first + 1));
  }
  return records;
}

Rational rational_power(Rational base, Index exponent) {
  Rational result(1);
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

struct Settings {
  Index horizon = kDefaultSearchHorizon;
};

/// A sequence specification after evaluation. `real` is present when the
/// spec denotes a modulused real; `own` lists the moduli it carries.
struct Subject {
  Sequence sequence;
  std::optional<ModulusedReal> real;
  std::vector<Modulus> own;
};

Probe eval_probe(const SpecTerm& t) {
  if (!t.call) {
    for (const NamedProbe& p : probe_suite()) {
      if (p.name == t.head) return p.probe;
    }
  } else if (t.head == "affine") {
    expect_arity(t, 2);
    const Index a = atom_natural(t.args[0]);
    const Index b = atom_natural(t.args[1]);
    if (a == 0) throw ParseError("affine probe needs a >= 1");
    return Probe([a, b](Index n) { return a * n + b; });
  }
  throw ParseError("unknown probe '" + t.str() + "'");
}

Modulus eval_modulus(const SpecTerm& t, const Subject& subject) {
  if (t.head == "own") {
    Index i = 0;
    if (t.call) {
      expect_arity(t, 1);
      i = atom_natural(t.args[0]);
    }
    if (i >= subject.own.size()) {
      throw ParseError("spec carries " + std::to_string(subject.own.size()) +
                       " own modulus/moduli, asked for #" + std::to_string(i));
    }
    return subject.own[i];
  }
  if (!t.call && t.head == "identity") return Modulus::identity();
  if (t.head == "const") {
    expect_arity(t, 1);
    return Modulus::constant(atom_natural(t.args[0]));
  }
  if (t.head == "shift") {
    expect_arity(t, 1);
    return Modulus::shifted(atom_natural(t.args[0]));
  }
  if (t.head == "affine") {
    expect_arity(t, 2);
    return Modulus::affine(atom_natural(t.args[0]), atom_natural(t.args[1]));
  }
  throw ParseError("unknown modulus '" + t.str() + "'");
}

Subject from_real(const ModulusedReal& x) { return {x.approximant(), x, {x.modulus()}}; }

Subject eval_subject(const SpecTerm& t, const Settings& settings);

ModulusedReal eval_real(const SpecTerm& t, const Settings& settings) {
  Subject s = eval_subject(t, settings);
  if (!s.real) throw PreconditionViolated("'" + t.str() + "' does not denote a modulused real");
  return *s.real;
}

Polynomial coefficients_from(const SpecTerm& t, std::size_t first) {
  std::vector<Rational> cs;
  for (std::size_t i = first; i < t.args.size(); ++i) cs.push_back(atom_rational(t.args[i]));
  if (cs.empty()) throw ParseError("'" + t.head + "' needs at least one coefficient");
  return Polynomial::from_rationals(cs);
}

// Root of a rational polynomial on [lo, hi] as a real: approximant n is the
// bisection midpoint at precision n, within 2^-(n+1) of the root.
ModulusedReal polynomial_root(const Polynomial& p, const Rational& lo, const Rational& hi) {
  const auto sign = [&p](const Rational& t) {
    const std::optional<int> s = determine_sign(poly_eval(p, ModulusedReal::exact(t)));
    if (!s) throw SignUndecidable("bracket end " + t.str());
    return *s;
  };
  const SignedInterval bracket(lo, hi, sign(lo), sign(hi));
  return ModulusedReal(Sequence([p, bracket](Index n) { return refine_root(p, bracket, n); }),
                       Modulus::identity());
}

Subject eval_subject(const SpecTerm& t, const Settings& settings) {
  const std::string& h = t.head;
  if (h == "linear") {
    expect_arity(t, 2);
    const Rational a = atom_rational(t.args[0]);
    const Rational b = atom_rational(t.args[1]);
    return {Sequence([a, b](Index n) { return a * Rational(n) + b; }), std::nullopt, {}};
  }
  if (h == "geometric") {
    expect_arity(t, 3);
    const Rational limit = atom_rational(t.args[0]);
    const Rational c = atom_rational(t.args[1]);
    const Rational r = atom_rational(t.args[2]);
    return {Sequence([limit, c, r](Index n) { return limit + c * rational_power(r, n); }),
            std::nullopt,
            {}};
  }
  if (h == "const") {
    expect_arity(t, 1);
    return from_real(ModulusedReal::exact(atom_rational(t.args[0])));
  }
  if (h == "sqrt") {
    expect_arity(t, 1);
    return from_real(ModulusedReal::sqrt(atom_rational(t.args[0])));
  }
  if (h == "table") {
    expect_arity(t, 1);
    expect_atom(t.args[0]);
    auto values = std::make_shared<std::map<Index, Rational>>();
    for (const std::string& record : read_records(t.args[0].head)) {
      const auto space = record.find_first_of(" \t");
      if (space == std::string::npos) throw ParseError("table record needs 'index value'");
      const Index i = parse_natural(record.substr(0, space));
      const auto value_at = record.find_first_not_of(" \t", space);
      (*values)[i] = Rational::parse(record.substr(value_at));
    }
    return {Sequence::uncached([values](Index n) {
              const auto it = values->find(n);
              if (it == values->end()) {
                throw PreconditionViolated("table has no entry for index " + std::to_string(n));
              }
              return it->second;
            }),
            std::nullopt,
            {}};
  }
  if (h == "compress") {
    expect_arity(t, 3);
    const Subject inner = eval_subject(t.args[0], settings);
    CompressionResult c = compress(inner.sequence, atom_natural(t.args[1]),
                                   eval_probe(t.args[2]), settings.horizon);
    return {c.compressed, std::nullopt, {c.modulus}};
  }
  if (h == "anti-cauchy") {
    if (!t.call) throw ParseError("anti-cauchy takes a probe list: 'anti-cauchy(...)'");
    std::vector<Probe> probes;
    for (const SpecTerm& p : t.args) probes.push_back(eval_probe(p));
    AntiCauchyResult r = anti_cauchy(probes, settings.horizon);
    return {r.q, std::nullopt, r.moduli};
  }
  if (h == "quaternary") {
    if (!t.call) throw ParseError("quaternary takes an element list: 'quaternary(...)'");
    std::set<Index> elements;
    for (const SpecTerm& e : t.args) elements.insert(atom_natural(e));
    return {Sequence([elements](Index k) {
              return quaternary_value({elements.begin(), elements.upper_bound(k)});
            }),
            std::nullopt,
            {}};
  }
  if (h == "neg") {
    expect_arity(t, 1);
    return from_real(creal_neg(eval_real(t.args[0], settings)));
  }
  if (h == "add" || h == "mul") {
    expect_arity(t, 2);
    const ModulusedReal x = eval_real(t.args[0], settings);
    const ModulusedReal y = eval_real(t.args[1], settings);
    return from_real(h == "add" ? creal_add(x, y) : creal_mul(x, y));
  }
  if (h == "inv") {
    expect_arity(t, 1);
    return from_real(creal_inv(eval_real(t.args[0], settings)));
  }
  if (h == "poly") {
    if (!t.call || t.args.size() < 2) throw ParseError("poly takes (x, c0, c1, ...)");
    return from_real(poly_eval(coefficients_from(t, 1), eval_real(t.args[0], settings)));
  }
  if (h == "root") {
    if (!t.call || t.args.size() < 3) throw ParseError("root takes (lo, hi, c0, c1, ...)");
    return from_real(polynomial_root(coefficients_from(t, 2), atom_rational(t.args[0]),
                                     atom_rational(t.args[1])));
  }
  throw ParseError("unknown sequence spec '" + t.str() + "'");
}

Subject parse_subject(const std::string& text, const Settings& settings) {
  return eval_subject(SpecTerm::parse(text), settings);
}

void print_samples(std::ostream& out, const Sequence& x, Index count) {
  for (Index n = 0; n < count; ++n) out << n << ' ' << x(n) << '\n';
}

void print_table(std::ostream& out, const Modulus& g, Index count) {
  for (Index n = 0; n < count; ++n) out << n << ' ' << g(n) << '\n';
}

}  // namespace

SpecTerm SpecTerm::parse(std::string_view text) { return TermParser(text).parse_all(); }

std::string SpecTerm::str() const {
  if (!call) return head;
  std::string s = head + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) s += ",";
    s += args[i].str();
  }
  return s + ")";
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact constructions on nearly computable real sequences", "ncreal"};
  app.require_subcommand(1);
  Settings settings;
  app.add_option("--horizon", settings.horizon, "Index bound for all unbounded searches")
      ->capture_default_str();

  std::string spec, probe, modulus, file;
  Index natural = 0;
  Index precision = 0;
  Index count = 16;
  Index blocks = 6;
  Index check_horizon = kDefaultCheckHorizon;
  std::vector<std::string> probes;

  auto* sample = app.add_subcommand("sample", "Emit 'index value' samples of a sequence spec");
  sample->add_option("spec", spec)->required();
  sample->add_option("--count", count)->capture_default_str();

  auto* compress_cmd = app.add_subcommand("compress", "Compress a sequence above N along a probe");
  compress_cmd->add_option("spec", spec)->required();
  compress_cmd->add_option("N", natural)->required();
  compress_cmd->add_option("probe", probe)->required();
  compress_cmd->add_option("--count", count, "b samples to emit")->capture_default_str();
  compress_cmd->add_option("--blocks", blocks, "g values to emit")->capture_default_str();

  auto* diag = app.add_subcommand("diag", "Finite diagonal against a probe list");
  diag->add_option("probes", probes);
  diag->add_option("--count", count, "q samples to emit")->capture_default_str();
  diag->add_option("--blocks", blocks, "values per modulus to emit")->capture_default_str();

  auto* kc = app.add_subcommand("kc", "Prefix-free code for a lengths file");
  kc->add_option("lengths", file)->required();

  auto* w2l = app.add_subcommand("weights2lengths", "Code lengths for a weights file");
  w2l->add_option("weights", file)->required();

  auto* decode4 = app.add_subcommand("decode4", "Decode one bit of a quaternary support");
  decode4->add_option("spec", spec)->required();
  decode4->add_option("modulus", modulus)->required();
  decode4->add_option("bit", natural)->required();

  auto* embed = app.add_subcommand("embed", "Indicator sum over rationals below a real");
  embed->add_option("spec", spec)->required();
  embed->add_option("precision", precision)->required();

  auto* locate_cmd = app.add_subcommand("locate", "Locate a limit from labeled balls");
  locate_cmd->add_option("spec", spec)->required();
  locate_cmd->add_option("modulus", modulus)->required();
  locate_cmd->add_option("balls", file)->required();
  locate_cmd->add_option("precision", precision)->required();

  auto* check = app.add_subcommand("check", "Falsify a modulus on a finite window");
  check->add_option("spec", spec)->required();
  check->add_option("probe", probe)->required();
  check->add_option("modulus", modulus)->required();
  check->add_option("horizon", check_horizon)->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "Brute-force minimal modulus table");
  oracle->add_option("spec", spec)->required();
  oracle->add_option("probe", probe)->required();
  oracle->add_option("horizon", check_horizon)->capture_default_str();

  auto* field_eval = app.add_subcommand("field-eval", "Approximate a real expression");
  field_eval->add_option("expression", spec)->required();
  field_eval->add_option("precision", precision)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (sample->parsed()) {
      print_samples(out, parse_subject(spec, settings).sequence, count);
    } else if (compress_cmd->parsed()) {
      const Subject inner = parse_subject(spec, settings);
      const CompressionResult c =
          compress(inner.sequence, natural, eval_probe(SpecTerm::parse(probe)), settings.horizon);
      out << "# b\n";
      print_samples(out, c.compressed, count);
      out << "# g\n";
      print_table(out, c.modulus, blocks);
    } else if (diag->parsed()) {
      std::vector<Probe> ps;
      for (const std::string& p : probes) ps.push_back(eval_probe(SpecTerm::parse(p)));
      const AntiCauchyResult r = anti_cauchy(ps, settings.horizon);
      out << "# q\n";
      print_samples(out, r.q, count);
      for (std::size_t i = 0; i < r.moduli.size(); ++i) {
        out << "# g[" << i << "] " << probes[i] << '\n';
        print_table(out, r.moduli[i], blocks);
      }
    } else if (kc->parsed()) {
      PrefixCode code;
      for (const std::string& record : read_records(file)) {
        out << code.assign(parse_natural(record)).str() << '\n';
      }
    } else if (w2l->parsed()) {
      std::vector<Rational> weights;
      for (const std::string& record : read_records(file)) {
        weights.push_back(Rational::parse(record));
      }
      const Modulus f = lengths_from_weights(Sequence([weights](Index n) {
        if (n >= weights.size()) throw PreconditionViolated("weights file exhausted");
        return weights[n];
      }));
      for (Index n = 0; n < weights.size(); ++n) out << f(n) << '\n';
    } else if (decode4->parsed()) {
      const Subject s = parse_subject(spec, settings);
      const Modulus g = eval_modulus(SpecTerm::parse(modulus), s);
      out << (decode_quaternary(s.sequence, g, natural, settings.horizon) ? 1 : 0) << '\n';
    } else if (embed->parsed()) {
      out << embed_indicator_sum(eval_real(SpecTerm::parse(spec), settings), precision) << '\n';
    } else if (locate_cmd->parsed()) {
      const Subject s = parse_subject(spec, settings);
      const Modulus g = eval_modulus(SpecTerm::parse(modulus), s);
      std::vector<BallCode> balls;
      for (const std::string& record : read_records(file)) {
        balls.emplace_back(parse_natural(record));
      }
      const BallStream f = [balls](Index n) { return balls.at(n); };
      out << locate(s.sequence, g, f, precision, balls.size()) << '\n';
    } else if (check->parsed()) {
      const Subject s = parse_subject(spec, settings);
      const Modulus g = eval_modulus(SpecTerm::parse(modulus), s);
      for (const Violation& v :
           check_modulus(s.sequence, eval_probe(SpecTerm::parse(probe)), g, check_horizon)) {
        out << v << '\n';
      }
    } else if (oracle->parsed()) {
      const Subject s = parse_subject(spec, settings);
      const ModulusTable table =
          brute_min_modulus(s.sequence, eval_probe(SpecTerm::parse(probe)), check_horizon);
      out << "# horizon " << table.horizon << '\n';
      for (Index n = 0; n < table.entries.size(); ++n) {
        out << n << ' ' << table.entries[n] << '\n';
      }
    } else if (field_eval->parsed()) {
      out << eval_real(SpecTerm::parse(spec), settings).approx(precision) << '\n';
    }
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::overflow_error& e) {
    err << "error: Overflow: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: DomainError: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace ncreal
