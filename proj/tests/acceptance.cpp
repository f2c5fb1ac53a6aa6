// Acceptance suite: runs each criterion at its stated tolerance and prints
// one pass/fail line per criterion.  Usage: acceptance <cli-path> <corpus>.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "helpers.hpp"
#include "sigmastar/report.hpp"

using namespace sigmastar;
using namespace sigmastar::testing;

namespace {

std::string g_cli, g_corpus;
int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

void outcome(int n, const std::string& what, bool pass, long ms,
             const std::string& extra = "") {
  std::printf("[%s] criterion %2d: %s (%ld ms)%s%s\n", pass ? "PASS" : "FAIL",
              n, what.c_str(), ms, extra.empty() ? "" : " -- ",
              extra.c_str());
  if (!pass) ++g_failures;
}

struct World {
  GroupContext ctx;
  ChainComplex<Rational> complex;
  explicit World(const std::string& text, bool lyndon = false)
      : ctx(GroupContext::make(parse_presentation(text))),
        complex(lyndon ? lyndon_complex<Rational>(ctx)
                       : presentation_complex<Rational>(ctx)) {}
};

std::vector<LaurentComplex<Rational>> seeded_corpus(size_t n) {
  std::mt19937_64 rng(0x5eedu);
  std::vector<LaurentComplex<Rational>> out;
  while (out.size() < n) out.push_back(random_laurent_complex(rng));
  return out;
}

// 1. Oracle self-consistency: Ranicki agreement on 200 random complexes.
void criterion1() {
  Timer t;
  auto corpus = seeded_corpus(200);
  size_t agree = 0;
  for (const auto& c : corpus) agree += ranicki_verify(c).agree;
  bool pass = agree == corpus.size() && t.ms() < 60000;
  outcome(1, "oracle self-consistency on 200 random complexes", pass, t.ms(),
          std::to_string(agree) + "/200 agree");
}

// 2. Engine soundness and completeness against the oracle over k[Z].
void criterion2() {
  Timer t;
  GroupContext zctx = GroupContext::make(parse_presentation("gens t"));
  auto corpus = seeded_corpus(200);
  size_t unsound = 0, oracle_vanishing = 0, engine_certified = 0;
  for (const auto& lc : corpus) {
    auto dims = homology_dims_fraction_field(lc);
    bool oracle_zero = true;
    for (size_t d : dims) oracle_zero &= (d == 0);
    ChainComplex<Rational> gc = laurent_to_group_complex(zctx, lc);
    bool both = true;
    for (const Rational& dir : {Rational(1), Rational(-1)}) {
      Character chi{{dir}};
      auto nc = tensor_novikov(zctx, gc, chi);
      Verdict<Rational> v = attempt_contraction(zctx, nc, 0, gc.top());
      if (v.vanishes() && !oracle_zero) ++unsound;
      both &= v.vanishes();
    }
    if (oracle_zero) {
      ++oracle_vanishing;
      if (both) ++engine_certified;
    }
  }
  bool pass = unsound == 0 &&
              engine_certified * 10 >= oracle_vanishing * 9;
  outcome(2, "engine soundness (0 unsound) and >= 90% completeness", pass,
          t.ms(),
          "unsound " + std::to_string(unsound) + ", certified " +
              std::to_string(engine_certified) + "/" +
              std::to_string(oracle_vanishing));
}

struct CertifiedRun {
  std::string label;
  World* world;
  Character chi;
  bool cohom;
  size_t n;  // asserted cd for cohomology runs
  Verdict<Rational> verdict;
};

std::vector<CertifiedRun> certified_battery(std::vector<World*>& owned) {
  auto* z = new World("gens t");
  auto* z2 = new World("group Z2\ngens x y\nrel x y x^-1 y^-1", true);
  auto* bs12 = new World("gens a t\nrel t a t^-1 a^-2", true);
  auto* klein = new World("gens a t\nrel t a t^-1 a", true);
  owned = {z, z2, bs12, klein};
  std::vector<CertifiedRun> runs;
  auto add = [&](std::string label, World* w, Character chi, bool cohom,
                 size_t n) {
    CertifiedRun r{std::move(label), w, std::move(chi), cohom, n, {}};
    r.verdict = cohom
                    ? sigma_star_membership(w->ctx, w->complex, r.chi, n, 1)
                    : sigma_membership(w->ctx, w->complex, r.chi);
    runs.push_back(std::move(r));
  };
  add("Z sigma +", z, Character{{Rational(1)}}, false, 0);
  add("Z sigma -", z, Character{{Rational(-1)}}, false, 0);
  add("Z2 sigma (3,-2)", z2, Character{{Rational(3), Rational(-2)}}, false, 0);
  add("Z2 sigma (1,0)", z2, Character{{Rational(1), Rational(0)}}, false, 0);
  add("Z2 sigma (1,1)", z2, Character{{Rational(1), Rational(1)}}, false, 0);
  add("BS12 sigma -", bs12, Character{{Rational(-1)}}, false, 0);
  add("Klein H^2 +", klein, Character{{Rational(1)}}, true, 2);
  add("Klein H^2 -", klein, Character{{Rational(-1)}}, true, 2);
  add("Z2 H^2 (2,1)", z2, Character{{Rational(2), Rational(1)}}, true, 2);
  return runs;
}

// 3. Every emitted certificate passes independent re-verification.
void criterion3() {
  Timer t;
  std::vector<World*> owned;
  auto runs = certified_battery(owned);
  size_t total = 0, ok = 0;
  for (const auto& r : runs) {
    if (!r.verdict.vanishes() || !r.verdict.certificate) continue;
    ++total;
    const GroupContext& ctx = r.world->ctx;
    NovikovComplex<Rational> nc =
        r.cohom ? tensor_novikov(ctx, dualize(ctx, r.world->complex),
                                 r.chi.negated())
                : tensor_novikov(ctx, r.world->complex, r.chi);
    std::string why;
    if (verify_certificate(ctx, nc, *r.verdict.certificate, &why)) ++ok;
  }
  bool pass = total >= 9 && ok == total;
  outcome(3, "100% of emitted certificates re-verify", pass, t.ms(),
          std::to_string(ok) + "/" + std::to_string(total));
  for (auto* w : owned) delete w;
}

// 4. Openness: 50 random rational characters in each cone re-certify.
void criterion4() {
  Timer t;
  std::vector<World*> owned;
  auto runs = certified_battery(owned);
  std::mt19937_64 rng(0xC0FFEEu);
  size_t total = 0, ok = 0;
  for (const auto& r : runs) {
    if (!r.verdict.vanishes()) continue;
    for (int s = 0; s < 50; ++s) {
      ++total;
      auto psi = sample_in_cone(r.world->ctx, r.verdict.cone, r.chi, rng);
      if (!psi) continue;
      Verdict<Rational> again =
          r.cohom ? sigma_star_membership(r.world->ctx, r.world->complex,
                                          *psi, r.n, 1)
                  : sigma_membership(r.world->ctx, r.world->complex, *psi);
      if (again.vanishes()) ++ok;
    }
  }
  bool pass = total > 0 && ok == total;
  outcome(4, "openness: in-cone characters re-certify (100%)", pass, t.ms(),
          std::to_string(ok) + "/" + std::to_string(total));
  for (auto* w : owned) delete w;
}

// 5. Klein bottle cd-drop certifies both signs with a free kernel.
void criterion5() {
  Timer t;
  World klein("group Klein\ngens a t\nrel t a t^-1 a", true);
  Report r = cd_drop_report(klein.ctx, klein.complex, Character{{Rational(1)}},
                            2);
  bool pass = r.conclusion.find("cd(ker chi) = 1") != std::string::npos &&
              r.conclusion.find("kernel free") != std::string::npos &&
              !r.intersection_cone.empty();
  outcome(5, "Klein bottle: cd(ker) = 1 with free kernel, both signs", pass,
          t.ms(), r.conclusion);
}

// 6. BS(1,2): Sigma-membership for exactly one sign of chi_t.
void criterion6() {
  Timer t;
  World bs12("gens a t\nrel t a t^-1 a^-2", true);
  Character chi{{Rational(1)}};
  Verdict<Rational> plus = sigma_membership(bs12.ctx, bs12.complex, chi);
  Verdict<Rational> minus =
      sigma_membership(bs12.ctx, bs12.complex, chi.negated());
  bool one_vanishes = plus.vanishes() != minus.vanishes();
  const Verdict<Rational>& other = plus.vanishes() ? minus : plus;
  bool pass = one_vanishes && !other.vanishes();
  outcome(6, "BS(1,2): exactly one of +-chi_t lies in Sigma", pass, t.ms(),
          std::string("+: ") + verdict_name(plus.kind) +
              ", -: " + verdict_name(minus.kind));
}

// 7. BS(2,3): H_2 homology vanishes both signs by the one-relator rule,
//    while top cohomology is not certified for both signs.
void criterion7() {
  Timer t;
  World bs23("gens a t\nrel t^-1 a^2 t a^-3", true);
  Character chi{{Rational(1)}};
  Verdict<Rational> h2p = one_relator_h2_rule<Rational>(bs23.ctx, chi);
  Verdict<Rational> h2m =
      one_relator_h2_rule<Rational>(bs23.ctx, chi.negated());
  Verdict<Rational> cp = sigma_star_membership(bs23.ctx, bs23.complex, chi, 2, 1);
  Verdict<Rational> cm =
      sigma_star_membership(bs23.ctx, bs23.complex, chi.negated(), 2, 1);
  bool cohom_not_both = !(cp.vanishes() && cm.vanishes());
  bool some_undecided = cp.kind != VerdictKind::Vanishes ||
                        cm.kind != VerdictKind::Vanishes;
  bool pass = h2p.vanishes() && h2m.vanishes() && cohom_not_both &&
              some_undecided;
  outcome(7, "BS(2,3): H_2 vanishes both signs, H^2 does not certify both",
          pass, t.ms(),
          std::string("H^2 +: ") + verdict_name(cp.kind) +
              ", -: " + verdict_name(cm.kind));
}

// 8. Free group F2: Sigma-membership never certifies.
void criterion8() {
  Timer t;
  World f2("gens x y");
  std::mt19937_64 rng(0xF2F2u);
  size_t tried = 0, vanished = 0;
  while (tried < 20) {
    Character chi{{random_rational(rng), random_rational(rng)}};
    if (chi.is_zero()) continue;
    ++tried;
    if (sigma_membership(f2.ctx, f2.complex, chi).vanishes()) ++vanished;
  }
  outcome(8, "F2: Sigma-membership never certifies on 20 samples",
          vanished == 0, t.ms(), std::to_string(vanished) + " false claims");
}

// 9. Z^2 sphere covering with at most 8 cones in under 10 seconds.
void criterion9() {
  Timer t;
  World z2("group Z2\ngens x y\nrel x y x^-1 y^-1", true);
  QuotientMap q = quotient_map(
      z2.ctx, {{Integer(1), Integer(0)}, {Integer(0), Integer(1)}});
  CoabelianResult<Rational> res = cover_sphere(z2.ctx, z2.complex, q, 2, 16);
  size_t cones = 0;
  for (const auto& s : res.samples) cones += s.verdict.vanishes();
  bool pass = res.covered && cones <= 8 && t.ms() < 10000 &&
              res.conclusion.find("cd(N) <= 0") != std::string::npos;
  outcome(9, "Z^2: S^1 covered by <= 8 cones, cd(N) <= 0, < 10 s", pass,
          t.ms(), res.conclusion);
}

// 10. One-relator invariant: no code path emits a non-vanishing H_2 claim.
void criterion10() {
  Timer t;
  const char* corpus[] = {
      "gens a t\nrel t a t^-1 a^-2",          // BS(1,2)
      "gens a t\nrel t a t^-1 a^-3",          // BS(1,3)
      "gens a t\nrel t a t^-1 a^-4",          // BS(1,4)
      "gens a t\nrel t^-1 a^2 t a^-3",        // BS(2,3)
      "gens a t\nrel t^-1 a^2 t a^-5",        // BS(2,5)
      "gens a t\nrel t a t^-1 a",             // Klein bottle
      "gens x y\nrel x y x^-1 y^-1",          // Z^2
      "gens x y\nrel x x y^-1 y^-1 y^-1",     // trefoil
      "gens x y\nrel x x y^-1 y^-1 y^-1 y^-1 y^-1",  // (2,5) torus knot
      "gens a b c d\nrel a b a^-1 b^-1 c d c^-1 d^-1",  // genus-2 surface
  };
  std::mt19937_64 rng(0x1011u);
  size_t checks = 0, bad = 0;
  for (const char* text : corpus) {
    World w(text);
    size_t b = w.ctx.ab.free_rank;
    size_t sampled = 0;
    while (sampled < 10) {
      std::vector<Rational> v(b);
      for (auto& x : v) x = random_rational(rng);
      Character chi{v};
      if (chi.is_zero()) continue;
      ++sampled;
      ++checks;
      Verdict<Rational> rule = one_relator_h2_rule<Rational>(w.ctx, chi);
      if (!rule.vanishes()) ++bad;
      if (w.ctx.rs.complete && w.complex.top() == 2) {
        auto nc = tensor_novikov(w.ctx, w.complex, chi);
        Verdict<Rational> direct = attempt_contraction(w.ctx, nc, 2, 2);
        if (direct.kind == VerdictKind::NonVanishingCertified) ++bad;
      }
    }
  }
  outcome(10, "one-relator corpus: H_2 never claimed non-vanishing",
          bad == 0 && checks >= 100, t.ms(),
          std::to_string(checks) + " checks, " + std::to_string(bad) +
              " violations");
}

// 11. Byte-identical JSON across two CLI runs with the same inputs.
void criterion11() {
  Timer t;
  auto run = [&](const std::string& args, const std::string& outfile) {
    std::string cmd = g_cli + " " + args + " > " + outfile + " 2>/dev/null";
    return std::system(cmd.c_str());
  };
  auto slurp = [](const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  };
  std::vector<std::string> cases = {
      "sigma " + g_corpus + "/z2.grp --char 3,-2 --json --seed 42",
      "cd-drop " + g_corpus + "/klein.grp --char 1 --cd 2 --json --seed 42",
      "cover-sphere " + g_corpus + "/z2.grp --quotient I2 --budget 16 --json",
      "sigma " + g_corpus + "/bs12.grp --char -1 --json",
      "oracle ranicki " + g_corpus + "/cx.json --json",
  };
  bool pass = true;
  for (size_t i = 0; i < cases.size(); ++i) {
    std::string f1 = "/tmp/sigmastar_det_a" + std::to_string(i);
    std::string f2 = "/tmp/sigmastar_det_b" + std::to_string(i);
    run(cases[i], f1);
    run(cases[i], f2);
    std::string a = slurp(f1), b = slurp(f2);
    if (a.empty() || a != b) pass = false;
  }
  outcome(11, "deterministic byte-identical JSON across runs", pass, t.ms());
}

// Supplementary: CLI exit codes follow the contract (0 conclusive,
// 3 inconclusive, 2 input error) across the example corpus.
void exit_code_contract() {
  Timer t;
  auto code_of = [&](const std::string& args) {
    int st = std::system((g_cli + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(st);
  };
  struct Case {
    std::string args;
    int expect;
  };
  std::vector<Case> cases = {
      {"abelianize " + g_corpus + "/bs12.grp", 0},
      {"sigma " + g_corpus + "/bs12.grp --char -1", 0},
      {"sigma " + g_corpus + "/bs12.grp --char 1", 3},
      {"sigma " + g_corpus + "/f2.grp --char 1,1", 3},
      {"sigma " + g_corpus + "/z2.grp --char 3,-2", 0},
      {"cd-drop " + g_corpus + "/klein.grp --char 1 --cd 2", 0},
      {"cd-drop " + g_corpus + "/bs12.grp --char 1 --cd 2", 3},
      {"sigma-star " + g_corpus + "/klein.grp --char 1 --cd 2 --m 1", 0},
      {"cover-sphere " + g_corpus + "/z2.grp --quotient I2 --budget 16", 0},
      {"oracle ranicki " + g_corpus + "/cx.json", 0},
      {"rs " + g_corpus + "/z.grp --perm \"t=(1 2)\"", 0},
      {"sigma " + g_corpus + "/no_such_file.grp --char 1", 2},
      {"sigma " + g_corpus + "/z2.grp --char 1", 2},  // wrong dimension
  };
  std::string detail;
  bool pass = true;
  for (const auto& c : cases) {
    int got = code_of(c.args);
    if (got != c.expect) {
      pass = false;
      detail += c.args + " -> " + std::to_string(got) + " (want " +
                std::to_string(c.expect) + "); ";
    }
  }
  std::printf("[%s] supplement  : CLI exit-code contract (%ld ms)%s%s\n",
              pass ? "PASS" : "FAIL", t.ms(), detail.empty() ? "" : " -- ",
              detail.c_str());
  if (!pass) ++g_failures;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: acceptance <cli-path> <corpus-dir>\n");
    return 2;
  }
  g_cli = argv[1];
  g_corpus = argv[2];
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  exit_code_contract();
  if (g_failures) {
    std::printf("%d criteria FAILED\n", g_failures);
    return 1;
  }
  std::printf("all 11 criteria passed\n");
  return 0;
}
