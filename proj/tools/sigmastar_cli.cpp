// Command-line front end: parse presentations, run the engine and oracle,
// emit text or JSON reports.
//
// Exit codes: 0 success/conclusive, 2 input error, 3 inconclusive.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sigmastar/report.hpp"

using namespace sigmastar;

namespace {

struct RunConfig {
  std::string field = "q";  // "q" or "fp:<prime>"
  int kb_rules = 256;
  int kb_len = 32;
  long height_cap = 64;
  unsigned long seed = 1;
  bool json = false;
};

EngineOptions engine_options(const RunConfig& cfg) {
  EngineOptions opts;
  std::vector<long> sched;
  for (long m : opts.schedule)
    if (m <= cfg.height_cap) sched.push_back(m);
  if (sched.empty()) sched.push_back(cfg.height_cap);
  opts.schedule = sched;
  return opts;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::syntax_error, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<Rational> parse_char_vector(const std::string& s) {
  std::vector<Rational> v;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) v.push_back(parse_rational(tok));
  return v;
}

bool is_prime_u64(unsigned long long p) {
  if (p < 2) return false;
  for (unsigned long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void configure_field(const RunConfig& cfg) {
  if (cfg.field == "q") return;
  if (cfg.field.rfind("fp:", 0) == 0) {
    unsigned long long p = std::stoull(cfg.field.substr(3));
    if (!is_prime_u64(p))
      fail(errc::syntax_error, "fp modulus must be prime");
    Fp::set_modulus(p);
    return;
  }
  fail(errc::syntax_error, "field must be 'q' or 'fp:<prime>'");
}

bool field_is_q(const RunConfig& cfg) { return cfg.field == "q"; }

void emit(const RunConfig& cfg, const Report& r, const std::string& text) {
  if (cfg.json)
    std::cout << json_of_report(r).dump(2) << "\n";
  else
    std::cout << text;
}

int verdict_exit(const Report& r) {
  for (const auto& q : r.queries)
    if (q.verdict == std::string("Inconclusive")) return 3;
  return 0;
}

std::string render_report(const Report& r) {
  std::ostringstream os;
  os << "group " << r.group << "  field " << r.field << "  complex "
     << r.complex_kind
     << (r.exactness_known ? " (resolution)" : " (presentation 2-complex)")
     << "\n";
  if (r.cd_assertion) os << "asserted cd = " << *r.cd_assertion << "\n";
  for (const auto& q : r.queries) {
    os << "  chi = (";
    for (size_t i = 0; i < q.character.size(); ++i)
      os << (i ? "," : "") << to_string(q.character[i]);
    os << ") " << q.degree_kind << " degrees [" << q.deg_lo << ","
       << q.deg_hi << "]: " << q.verdict;
    if (q.verdict == std::string("Vanishes"))
      os << " (height " << to_string(q.height_used) << ", cone with "
         << q.cone.strict.size() << " constraints)";
    os << "\n";
  }
  os << "conclusion: " << r.conclusion << "\n";
  if (r.uncovered) {
    os << "uncovered direction: (";
    for (size_t i = 0; i < r.uncovered->size(); ++i)
      os << (i ? "," : "") << (*r.uncovered)[i].str();
    os << ")\n";
  }
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

GroupContext make_context(const RunConfig& cfg, const std::string& file) {
  Presentation p = parse_presentation(read_file(file));
  GroupContext ctx = GroupContext::make(std::move(p), cfg.kb_rules, cfg.kb_len);
  return ctx;
}

Character char_from_flag(const GroupContext& ctx, const std::string& flag) {
  return character_from_vector(ctx.ab, parse_char_vector(flag));
}

std::string basis_echo(const GroupContext& ctx) {
  std::ostringstream os;
  os << "character basis (generator images in the free part):\n";
  for (size_t g = 0; g < ctx.ab.ngens; ++g) {
    os << "  " << ctx.pres.generators[g] << " -> (";
    for (size_t j = 0; j < ctx.ab.free_rank; ++j)
      os << (j ? "," : "") << ctx.ab.proj_free[g][j].str();
    os << ")\n";
  }
  return os.str();
}

int cmd_abelianize(const RunConfig& cfg, const std::string& file) {
  GroupContext ctx = make_context(cfg, file);
  std::ostringstream os;
  os << "H1 = Z^" << ctx.ab.free_rank;
  for (const auto& d : ctx.ab.torsion_factors) os << " + Z/" << d.str();
  // name the basis when generators map exactly onto it
  std::vector<std::string> basis_names;
  for (size_t j = 0; j < ctx.ab.free_rank; ++j)
    for (size_t g = 0; g < ctx.ab.ngens; ++g) {
      bool is_ej = true;
      for (size_t k = 0; k < ctx.ab.free_rank; ++k)
        is_ej &= (ctx.ab.proj_free[g][k] == (k == j ? 1 : 0));
      if (is_ej) {
        basis_names.push_back(ctx.pres.generators[g]);
        break;
      }
    }
  if (basis_names.size() == ctx.ab.free_rank && !basis_names.empty()) {
    os << " (basis:";
    for (const auto& n : basis_names) os << " " << n;
    os << ")";
  }
  os << "\n" << basis_echo(ctx);
  if (cfg.json) {
    Json j;
    j["group"] = ctx.pres.name;
    j["freeRank"] = ctx.ab.free_rank;
    Json tf = Json::array();
    for (const auto& d : ctx.ab.torsion_factors)
      tf.push_back(std::stoll(d.str()));
    j["torsionFactors"] = tf;
    Json proj = Json::array();
    for (size_t g = 0; g < ctx.ab.ngens; ++g) {
      Json row = Json::array();
      for (const auto& x : ctx.ab.proj_free[g]) row.push_back(std::stoll(x.str()));
      proj.push_back(row);
    }
    j["projection"] = proj;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << os.str();
  }
  return 0;
}

template <typename F>
ChainComplex<F> pick_complex(const GroupContext& ctx) {
  if (ctx.pres.relators.size() == 1 &&
      !is_proper_power(ctx.pres.relators[0]))
    return lyndon_complex<F>(ctx);
  return presentation_complex<F>(ctx);
}

template <typename F>
int run_sigma(const RunConfig& cfg, const std::string& file,
              const std::string& chiflag) {
  GroupContext ctx = make_context(cfg, file);
  ChainComplex<F> c = pick_complex<F>(ctx);
  Report r = sigma_report(ctx, c, char_from_flag(ctx, chiflag),
                          engine_options(cfg));
  emit(cfg, r, basis_echo(ctx) + render_report(r));
  return verdict_exit(r);
}

template <typename F>
int run_sigma_star(const RunConfig& cfg, const std::string& file,
                   const std::string& chiflag, size_t n, size_t m) {
  GroupContext ctx = make_context(cfg, file);
  ChainComplex<F> c = pick_complex<F>(ctx);
  Report r = sigma_star_report(ctx, c, char_from_flag(ctx, chiflag), n, m,
                               engine_options(cfg));
  emit(cfg, r, basis_echo(ctx) + render_report(r));
  return verdict_exit(r);
}

template <typename F>
int run_cd_drop(const RunConfig& cfg, const std::string& file,
                const std::string& chiflag, size_t n) {
  GroupContext ctx = make_context(cfg, file);
  ChainComplex<F> c = pick_complex<F>(ctx);
  Report r =
      cd_drop_report(ctx, c, char_from_flag(ctx, chiflag), n, engine_options(cfg));
  emit(cfg, r, basis_echo(ctx) + render_report(r));
  return verdict_exit(r);
}

std::vector<std::vector<Integer>> parse_quotient(const GroupContext& ctx,
                                                 const std::string& spec) {
  size_t ngens = ctx.ab.ngens;
  std::vector<std::vector<Integer>> rows;
  if (spec.size() > 1 && (spec[0] == 'I' || spec[0] == 'i')) {
    size_t d = std::stoul(spec.substr(1));
    if (d != ngens)
      fail(errc::dimension_mismatch,
           "identity shorthand needs one generator per coordinate");
    for (size_t g = 0; g < ngens; ++g) {
      std::vector<Integer> row(d, 0);
      row[g] = 1;
      rows.push_back(row);
    }
    return rows;
  }
  std::istringstream is(spec);
  std::string rowtok;
  while (std::getline(is, rowtok, ';')) {
    std::vector<Integer> row;
    std::istringstream rs(rowtok);
    std::string x;
    while (std::getline(rs, x, ',')) row.push_back(Integer(x));
    rows.push_back(row);
  }
  return rows;
}

template <typename F>
int run_cover_sphere(const RunConfig& cfg, const std::string& file,
                     const std::string& quotient, size_t n, size_t budget) {
  GroupContext ctx = make_context(cfg, file);
  ChainComplex<F> c = pick_complex<F>(ctx);
  QuotientMap q = quotient_map(ctx, parse_quotient(ctx, quotient));
  Report r = coabelian_report(ctx, c, q, n, budget, engine_options(cfg));
  emit(cfg, r, basis_echo(ctx) + render_report(r));
  return r.uncovered ? 3 : 0;
}

PermRep parse_perms(const Presentation& p, const std::string& spec) {
  // "a=(1 2)(3);t=(1 3 2)"; omitted generators act as the identity.
  std::map<std::string, std::vector<std::vector<int>>> cycles_of;
  std::istringstream is(spec);
  std::string part;
  int npoints = 1;
  while (std::getline(is, part, ';')) {
    auto eq = part.find('=');
    if (eq == std::string::npos)
      fail(errc::syntax_error, "permutation spec needs gen=(cycles)");
    std::string gen = part.substr(0, eq);
    std::string body = part.substr(eq + 1);
    std::vector<std::vector<int>> cycles;
    size_t pos = 0;
    while ((pos = body.find('(', pos)) != std::string::npos) {
      size_t end = body.find(')', pos);
      if (end == std::string::npos)
        fail(errc::syntax_error, "unbalanced cycle");
      std::istringstream cs(body.substr(pos + 1, end - pos - 1));
      std::vector<int> cyc;
      int x;
      while (cs >> x) {
        cyc.push_back(x);
        npoints = std::max(npoints, x);
      }
      if (!cyc.empty()) cycles.push_back(cyc);
      pos = end + 1;
    }
    cycles_of[gen] = cycles;
  }
  PermRep rep(p.generators.size());
  for (size_t g = 0; g < p.generators.size(); ++g) {
    std::vector<int> perm(npoints);
    for (int i = 0; i < npoints; ++i) perm[i] = i;
    auto it = cycles_of.find(p.generators[g]);
    if (it != cycles_of.end())
      for (const auto& cyc : it->second)
        for (size_t k = 0; k < cyc.size(); ++k)
          perm[cyc[k] - 1] = cyc[(k + 1) % cyc.size()] - 1;
    rep[g] = perm;
  }
  return rep;
}

int cmd_rs(const RunConfig& cfg, const std::string& file,
           const std::string& permspec) {
  Presentation p = parse_presentation(read_file(file));
  SubgroupPresentation sub = reidemeister_schreier(p, parse_perms(p, permspec));
  if (cfg.json) {
    Json j;
    j["group"] = p.name;
    j["subgroup"] = sub.pres.name;
    Json gens = Json::array();
    for (size_t i = 0; i < sub.pres.generators.size(); ++i)
      gens.push_back(Json{{"name", sub.pres.generators[i]},
                          {"word", p.word_to_string(sub.embeddings[i])}});
    j["generators"] = gens;
    Json rels = Json::array();
    for (const auto& r : sub.pres.relators)
      rels.push_back(sub.pres.word_to_string(r));
    j["relators"] = rels;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "subgroup " << sub.pres.name << "\ngens";
    for (const auto& g : sub.pres.generators) std::cout << " " << g;
    std::cout << "\n";
    for (size_t i = 0; i < sub.pres.generators.size(); ++i)
      std::cout << "  " << sub.pres.generators[i] << " = "
                << p.word_to_string(sub.embeddings[i]) << "\n";
    for (const auto& r : sub.pres.relators)
      std::cout << "rel " << sub.pres.word_to_string(r) << "\n";
  }
  return 0;
}

template <typename F>
int run_oracle_ranicki(const RunConfig& cfg, const std::string& file) {
  Json j = Json::parse(read_file(file));
  LaurentComplex<F> c = laurent_complex_from_json<F>(j);
  RanickiRecord rec = ranicki_verify(c);
  auto dims = homology_dims_fraction_field(c);
  if (cfg.json) {
    Json out;
    out["finiteDomination"] = rec.finitely_dominated;
    out["novikovAcyclic"] = rec.novikov_acyclic;
    out["agree"] = rec.agree;
    Json dd = Json::array();
    for (size_t d : dims) dd.push_back(d);
    out["fractionFieldDims"] = dd;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "finite domination: " << (rec.finitely_dominated ? "true" : "false")
              << "; Novikov-acyclic: " << (rec.novikov_acyclic ? "true" : "false")
              << "; Ranicki: " << (rec.agree ? "AGREE" : "DISAGREE") << "\n";
  }
  return rec.agree ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified Novikov (co)homology vanishing for finitely "
               "presented groups"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  RunConfig cfg;
  app.add_option("--field", cfg.field, "coefficient field: q or fp:<prime>");
  app.add_option("--kb-rules", cfg.kb_rules, "Knuth-Bendix rule bound");
  app.add_option("--kb-len", cfg.kb_len, "Knuth-Bendix lhs length bound");
  app.add_option("--height-cap", cfg.height_cap,
                 "largest truncation-height multiple tried");
  app.add_option("--seed", cfg.seed,
                 "seed accepted so scripted reruns share a command line");
  app.add_flag("--json", cfg.json, "emit JSON reports");

  std::string file, chiflag, quotient = "I1", permspec, cxfile;
  size_t cd_n = 2, star_m = 1, budget = 16;

  auto* ab = app.add_subcommand("abelianize", "print H_1 and the character basis");
  ab->add_option("file", file)->required();

  auto* sg = app.add_subcommand("sigma", "Sigma-membership (Sikorav criterion)");
  sg->add_option("file", file)->required();
  sg->add_option("--char", chiflag, "character coordinates")->required();

  auto* ss = app.add_subcommand("sigma-star", "Sigma*_m membership");
  ss->add_option("file", file)->required();
  ss->add_option("--char", chiflag)->required();
  ss->add_option("--cd", cd_n, "asserted cohomological dimension");
  ss->add_option("--m", star_m, "invariant index m");

  auto* cd = app.add_subcommand("cd-drop", "two-sided top-degree check");
  cd->add_option("file", file)->required();
  cd->add_option("--char", chiflag)->required();
  cd->add_option("--cd", cd_n);

  auto* cs = app.add_subcommand("cover-sphere", "S(G,N) covering check");
  cs->add_option("file", file)->required();
  cs->add_option("--quotient", quotient, "rows per generator, or I<d>")
      ->required();
  cs->add_option("--cd", cd_n);
  cs->add_option("--budget", budget, "sphere sample budget");

  auto* rs = app.add_subcommand("rs", "Reidemeister-Schreier subgroup presentation");
  rs->add_option("file", file)->required();
  rs->add_option("--perm", permspec, "permutations, e.g. \"t=(1 2);a=()\"")
      ->required();

  auto* orc = app.add_subcommand("oracle", "univariate Laurent oracle");
  auto* ran = orc->add_subcommand("ranicki", "finite domination vs Novikov acyclicity");
  ran->add_option("file", cxfile)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    configure_field(cfg);
    if (ab->parsed()) return cmd_abelianize(cfg, file);
    if (sg->parsed())
      return field_is_q(cfg) ? run_sigma<Rational>(cfg, file, chiflag)
                             : run_sigma<Fp>(cfg, file, chiflag);
    if (ss->parsed())
      return field_is_q(cfg)
                 ? run_sigma_star<Rational>(cfg, file, chiflag, cd_n, star_m)
                 : run_sigma_star<Fp>(cfg, file, chiflag, cd_n, star_m);
    if (cd->parsed())
      return field_is_q(cfg) ? run_cd_drop<Rational>(cfg, file, chiflag, cd_n)
                             : run_cd_drop<Fp>(cfg, file, chiflag, cd_n);
    if (cs->parsed())
      return field_is_q(cfg)
                 ? run_cover_sphere<Rational>(cfg, file, quotient, cd_n, budget)
                 : run_cover_sphere<Fp>(cfg, file, quotient, cd_n, budget);
    if (rs->parsed()) return cmd_rs(cfg, file, permspec);
    if (orc->parsed())
      return field_is_q(cfg) ? run_oracle_ranicki<Rational>(cfg, cxfile)
                             : run_oracle_ranicki<Fp>(cfg, cxfile);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
