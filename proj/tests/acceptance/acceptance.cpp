// SPDX-License-Identifier: Apache-2.0

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Usage: acceptance CLI_BINARY GOLDEN_DIR

#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <sys/wait.h>

#include "ncreal/coding.hpp"
#include "ncreal/compression.hpp"
#include "ncreal/errors.hpp"
#include "ncreal/extraction.hpp"
#include "ncreal/field.hpp"
#include "ncreal/harness.hpp"
#include "ncreal/modulus_algebra.hpp"
#include "modulus_instances.hpp"
#include "support.hpp"

namespace ncreal {
namespace {

/// Collects the first few failure notes of one criterion.
class Report {
 public:
  void fail(const std::string& note) {
    if (notes_.size() < 5) notes_.push_back(note);
    ++failures_;
  }
  bool ok() const { return failures_ == 0; }
  const std::vector<std::string>& notes() const { return notes_; }
  std::size_t failures() const { return failures_; }

 private:
  std::vector<std::string> notes_;
  std::size_t failures_ = 0;
};

using Criterion = void (*)(Report&, std::string& summary);

// 1. Conditions I-IV of compress on a_n = n and 20 random sequences.
void compression_suite(Report& report, std::string& summary) {
  std::mt19937_64 rng(1001);
  std::vector<std::pair<std::string, testing::ClosedFormIncreasing>> inputs{
      {"a_n = n", {Rational(0), Rational(1), Rational(0), Rational(0)}}};
  for (int i = 0; i < 20; ++i) {
    inputs.emplace_back("random #" + std::to_string(i), testing::ClosedFormIncreasing::random(rng));
  }
  const Index window = 64;
  std::size_t runs = 0;
  for (const auto& [label, f] : inputs) {
    const Sequence a([f](Index n) { return f(n); });
    for (Index threshold : {0, 1, 5}) {
      for (const NamedProbe& p : probe_suite()) {
        ++runs;
        const std::string where = label + ", N=" + std::to_string(threshold) + ", " + p.name;
        try {
          const CompressionResult c = compress(a, threshold, p.probe);
          const Probe s = p.probe;
          const testing::EagerCompression oracle([f](Index n) { return f(n); }, threshold,
                                                 [s](Index n) { return s(n); }, window + 1);
          for (Index j = 0; j <= window + 1; ++j) {
            if (c.compressed(j) != oracle.b[j]) report.fail(where + ": b differs from oracle at " + std::to_string(j));
          }
          // I: strictly increasing on the window; unbounded via the block bound.
          for (Index j = 0; j < window; ++j) {
            if (!(c.compressed(j) < c.compressed(j + 1))) report.fail(where + ": I at " + std::to_string(j));
          }
          for (Index n = 0; n <= 16; ++n) {
            if (c.compressed(s(c.modulus(n))) < Rational(threshold + n)) {
              report.fail(where + ": b_s(g(n)) < N+n at n=" + std::to_string(n));
            }
          }
          // II: entries at most N are kept.
          for (Index k = 0; k <= window; ++k) {
            if (a(k) <= Rational(threshold) && c.compressed(k) != a(k)) {
              report.fail(where + ": II at " + std::to_string(k));
            }
          }
          // III: gaps never grow.
          for (Index k = 0; k <= window; ++k) {
            for (Index l = k; l <= window; ++l) {
              if (c.compressed(l) - c.compressed(k) > a(l) - a(k)) {
                report.fail(where + ": III at " + std::to_string(k) + "," + std::to_string(l));
              }
            }
          }
          // IV: g is a modulus of the probe increments.
          if (!check_modulus(c.compressed, s, c.modulus, window).empty()) report.fail(where + ": IV");
        } catch (const std::exception& e) {
          report.fail(where + ": " + e.what());
        }
      }
    }
  }
  summary = std::to_string(runs) + " runs, horizon 64";
}

// 2. Finite diagonal against identity, n -> 2n and the triangular probe.
void diagonal_suite(Report& report, std::string& summary) {
  const auto suite = probe_suite();
  const std::vector<NamedProbe> chosen{suite[0], suite[1], suite[3]};
  std::vector<Probe> probes;
  for (const NamedProbe& p : chosen) probes.push_back(p.probe);
  const AntiCauchyResult r = anti_cauchy(probes);
  Index n = 0;
  while (r.q(n) <= Rational(10)) {
    if (!(r.q(n) < r.q(n + 1))) report.fail("q not strictly increasing at " + std::to_string(n));
    if (++n > kDefaultSearchHorizon) {
      report.fail("q stays <= 10 up to the search horizon");
      break;
    }
  }
  for (std::size_t i = 0; i < probes.size(); ++i) {
    const auto v = check_modulus(r.q, probes[i], r.moduli[i], 64);
    if (!v.empty()) report.fail("modulus for " + chosen[i].name + ": " + std::to_string(v.size()) + " violations");
  }
  std::ostringstream s;
  s << "q(" << n << ") = " << r.q(n) << " > 10; 3 moduli checked at horizon 64";
  summary = s.str();
}

// 3. Kraft-Chaitin assignment, overflow exactness and the weights round trip.
void kraft_chaitin_suite(Report& report, std::string& summary) {
  std::mt19937_64 rng(3003);
  std::size_t words = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Index max_len = std::uniform_int_distribution<Index>(2, 14)(rng);
    std::uniform_int_distribution<Index> len(1, max_len);
    PrefixCode code;
    Rational mass;
    std::vector<Index> lengths;
    for (int attempt = 0; attempt < 400; ++attempt) {
      const Index l = len(rng);
      const bool fits = mass + tolerance(l) <= Rational(1);
      bool threw = false;
      try {
        const BitString& w = code.assign(l);
        if (w.size() != l) report.fail("trial " + std::to_string(trial) + ": wrong length");
      } catch (const KraftOverflow& e) {
        threw = true;
        if (e.request() != lengths.size()) report.fail("overflow reports the wrong request");
      }
      if (threw == fits) {
        report.fail("trial " + std::to_string(trial) + ": overflow " + (threw ? "fired" : "missed") +
                    " at mass " + mass.str() + " + 2^-" + std::to_string(l));
      }
      if (!threw) {
        mass += tolerance(l);
        lengths.push_back(l);
      }
      if (code.kraft_mass() != mass) report.fail("kraft mass drifted");
    }
    const auto& ws = code.assignments();
    words += ws.size();
    for (std::size_t i = 0; i < ws.size(); ++i) {
      for (std::size_t j = i + 1; j < ws.size(); ++j) {
        if (prefix_comparable(ws[i], ws[j])) report.fail("prefix clash in trial " + std::to_string(trial));
      }
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    // Weights c_n 2^-(n+1) with 0 < c_n <= 1 have total below 1.
    std::vector<Rational> c;
    for (Index n = 0; n <= 40; ++n) {
      c.emplace_back(Integer(std::uniform_int_distribution<long>(1, 16)(rng)), Integer(16));
    }
    const Sequence b([c](Index n) { return c.at(n) * tolerance(n + 1); });
    try {
      const Modulus f = lengths_from_weights(b);
      std::vector<Index> lengths;
      for (Index n = 0; n <= 40; ++n) {
        lengths.push_back(f(n));
        if (n <= 32 && tolerance(f(n)) < b(n) / 2) report.fail("2^-f(n) < b_n/2 at " + std::to_string(n));
      }
      kc_assign(lengths);
    } catch (const std::exception& e) {
      report.fail(std::string("round trip: ") + e.what());
    }
  }
  summary = "100 streams, " + std::to_string(words) + " words; 100 weight round trips";
}

std::set<Index> below(const std::set<Index>& a, Index n) { return {a.begin(), a.upper_bound(n)}; }

// 4. Quaternary decoding of random finite sets.
void decoder_suite(Report& report, std::string& summary) {
  std::mt19937_64 rng(4004);
  std::size_t bits = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const std::set<Index> a = testing::random_subset(rng, 20, true);
    const Sequence exact([a](Index k) { return quaternary_value(below(a, k)); });
    const Sequence noisy([a](Index k) { return quaternary_value(below(a, k)) + tolerance(k + 1); });
    for (const Sequence& x : {exact, noisy}) {
      // Identity is valid: consecutive witnesses lie within 4^-n / 2 of
      // supports that differ by at most 4^-(n+1).
      const Modulus g = Modulus::identity();
      const SupportExtractor extractor(x);
      const Modulus lifted = strict_monotonize(g);
      for (Index n = 0; n <= 20; ++n) {
        ++bits;
        try {
          if (decode_quaternary(x, g, n) != (a.count(n) > 0)) report.fail("wrong bit " + std::to_string(n));
          for (Index m = lifted(2 * n + 3); m <= lifted(2 * n + 3) + 4; ++m) {
            if (below(extractor.support(m).elements, n) != below(a, n)) {
              report.fail("B_m & {0..n} != A & {0..n} at n=" + std::to_string(n));
            }
          }
        } catch (const std::exception& e) {
          report.fail(e.what());
        }
      }
    }
  }
  summary = std::to_string(bits) + " bits decoded";
}

// 5. Formula moduli pass; their off-by-one mutants are caught.
void modulus_algebra_suite(Report& report, std::string& summary) {
  std::size_t caught = 0;
  const auto instances = testing::formula_instances();
  for (const testing::FormulaInstance& f : instances) {
    const auto clean = f.check(false, 128);
    if (!clean.empty()) report.fail(f.name + ": " + std::to_string(clean.size()) + " violations");
    if (f.check(true, 128).empty()) {
      report.fail(f.name + ": mutant not detected");
    } else {
      ++caught;
    }
  }
  summary = std::to_string(instances.size()) + " formulas clean, " + std::to_string(caught) +
            " mutants caught at horizon 128";
}

// 6. Field laws, the square root of two, and result moduli.
void field_suite(Report& report, std::string& summary) {
  std::mt19937_64 rng(6006);
  const auto random_real = [&rng](Rational* value) {
    *value = testing::random_rational(rng, 50, 16);
    const Rational u = testing::random_rational(rng, 9, 9);
    return testing::wobbling(*value, u.abs() > Rational(1) ? u.reciprocal() : u);
  };
  const auto near_zero = [&report](const ModulusedReal& x, const std::string& what) {
    for (Index n = 0; n <= 40; ++n) {
      if (x.approx(n).abs() > tolerance(n)) {
        report.fail(what + " off at n=" + std::to_string(n));
        return;
      }
    }
    if (!check_real(x, 128).empty()) report.fail(what + " modulus falsified");
  };
  for (int trial = 0; trial < 20; ++trial) {
    Rational va, vb, vc;
    const ModulusedReal a = random_real(&va);
    const ModulusedReal b = random_real(&vb);
    const ModulusedReal c = random_real(&vc);
    near_zero(creal_add(creal_add(creal_add(a, b), c), creal_neg(creal_add(a, creal_add(b, c)))),
              "associativity");
    near_zero(creal_add(creal_mul(a, creal_add(b, c)),
                        creal_neg(creal_add(creal_mul(a, b), creal_mul(a, c)))),
              "distributivity");
    near_zero(creal_add(creal_mul(a, b), creal_neg(creal_mul(b, a))), "commutativity");
    if (!va.is_zero()) {
      near_zero(creal_add(creal_mul(a, creal_inv(a)), ModulusedReal::exact(Rational(-1))), "inverse");
    }
  }
  const Polynomial p = Polynomial::from_rationals({Rational(-2), Rational(0), Rational(1)});
  const Rational r = refine_root(p, SignedInterval(Rational(1), Rational(2), -1, 1), 30);
  const Rational residual = (r * r - 2).abs();
  if (residual > tolerance(27)) report.fail("|r^2 - 2| = " + residual.str());
  const ModulusedReal root2 = ModulusedReal::sqrt(Rational(2));
  for (const ModulusedReal& x : {creal_mul(root2, root2), creal_inv(root2), poly_eval(p, root2)}) {
    if (!check_real(x, 128).empty()) report.fail("result modulus falsified");
  }
  std::ostringstream s;
  s << "20 law triples at 2^-40; sqrt 2 ~ " << r << ", |r^2-2| <= 2^-27";
  summary = s.str();
}

// 7. Planted dense-ball instances and witness rejection.
void locator_suite(Report& report, std::string& summary) {
  int recovered = 0;
  for (long base : {17, 5, 33, 50, 61}) {
    const testing::Plant plant{Rational(base) / 64};
    try {
      const Rational y = locate(plant.from_below(), Modulus::identity(), plant.balls(), 6);
      if (plant.above(y - tolerance(6)) && !plant.above(y + tolerance(6))) {
        ++recovered;
      } else {
        report.fail("plant " + std::to_string(base) + "/64 missed: " + y.str());
      }
    } catch (const std::exception& e) {
      report.fail(e.what());
    }
  }
  const BallStream unit = [](Index) { return BallCode::from_parts(Rational(0), 0); };
  for (const Rational& z : {Rational(0), Rational(1), Rational(-1), Rational(1, 2)}) {
    try {
      label_ball(Sequence::constant(z), Modulus::identity(), unit, 0);
      report.fail("witness " + z.str() + " inside the closed unit ball was accepted");
    } catch (const WitnessInsideBall&) {
    }
  }
  summary = std::to_string(recovered) + "/5 plants within 2^-6; inside witnesses rejected";
}

std::string cli_binary;
std::string golden_dir;

std::string shell_quote(const std::string& s) { return "'" + s + "'"; }

// 8. CLI outputs against stored goldens.
void golden_suite(Report& report, std::string& summary) {
  std::size_t cases = 0;
  std::vector<std::filesystem::path> args_files;
  for (const auto& entry : std::filesystem::directory_iterator(golden_dir)) {
    if (entry.path().extension() == ".args") args_files.push_back(entry.path());
  }
  std::sort(args_files.begin(), args_files.end());
  std::set<std::string> verbs;
  for (const auto& path : args_files) {
    std::ifstream in(path);
    std::string command = "cd " + shell_quote(golden_dir) + " && " + shell_quote(cli_binary);
    std::string line;
    std::string verb;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      if (verb.empty()) verb = line;
      command += " " + shell_quote(line);
    }
    verbs.insert(verb);
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) {
      report.fail("cannot run " + command);
      continue;
    }
    std::string output;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
    const int status = pclose(pipe);
    std::filesystem::path expected_path = path;
    expected_path.replace_extension(".out");
    std::ifstream expected_in(expected_path, std::ios::binary);
    const std::string expected((std::istreambuf_iterator<char>(expected_in)), {});
    ++cases;
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
      report.fail(path.stem().string() + ": exit status " + std::to_string(status));
    }
    if (output != expected) report.fail(path.stem().string() + ": output differs from golden");
  }
  for (const char* verb : {"kc", "check", "oracle"}) {
    if (!verbs.count(verb)) report.fail(std::string("no golden case for ") + verb);
  }
  summary = std::to_string(cases) + " golden cases";
}

}  // namespace
}  // namespace ncreal

int main(int argc, char** argv) {
  using namespace ncreal;
  if (argc != 3) {
    std::cerr << "usage: acceptance CLI_BINARY GOLDEN_DIR\n";
    return 2;
  }
  cli_binary = std::filesystem::absolute(argv[1]).string();
  golden_dir = std::filesystem::absolute(argv[2]).string();
  const std::vector<std::pair<std::string, Criterion>> criteria{
      {"1 compression", compression_suite},   {"2 diagonal", diagonal_suite},
      {"3 kraft-chaitin", kraft_chaitin_suite}, {"4 decoder", decoder_suite},
      {"5 modulus-algebra", modulus_algebra_suite}, {"6 field", field_suite},
      {"7 locator", locator_suite},           {"8 cli-golden", golden_suite},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Report report;
    std::string summary;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(report, summary);
    } catch (const std::exception& e) {
      report.fail(std::string("uncaught: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %s: %s (%.1fs)\n", report.ok() ? "PASS" : "FAIL", name.c_str(),
                summary.c_str(), seconds);
    for (const std::string& note : report.notes()) std::printf("    %s\n", note.c_str());
    if (!report.ok()) {
      std::printf("    %zu failure(s)\n", report.failures());
      ++failed;
    }
  }
  return failed == 0 ? 0 : 1;
}
