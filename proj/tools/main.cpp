// fqg: Wedderburn decompositions of F_q[G] from the command line.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fqg/engine.hpp"
#include "fqg/error.hpp"
#include "fqg/families.hpp"
#include "fqg/metacyclic.hpp"
#include "fqg/oracle.hpp"
#include "report.hpp"

namespace {

using namespace fqg;
using cli::Report;

constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitParse = 2;
constexpr int kExitNotSemisimple = 3;
constexpr int kExitNotMetabelian = 4;
constexpr int kExitInvariant = 5;
constexpr int kExitDiscrepancy = 6;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::NotPrime:
    case ErrorKind::InvalidTable:
    case ErrorKind::NoIdentity:
    case ErrorKind::NoInverse:
    case ErrorKind::NotAssociative:
    case ErrorKind::BadPresentation: return kExitParse;
    case ErrorKind::NotSemisimple:
    case ErrorKind::NotCoprime:
    case ErrorKind::EvenQ: return kExitNotSemisimple;
    case ErrorKind::NotMetabelian: return kExitNotMetabelian;
    case ErrorKind::AssertionFailure:
    case ErrorKind::InternalInconsistency: return kExitInvariant;
    default: return kExitOther;
  }
}

struct Job {
  std::string cayley;
  std::vector<std::uint64_t> metacyclic;
  unsigned d1 = 0, d2 = 0;
  std::uint64_t p = 0;
  unsigned a = 1;
  std::string out;
  std::size_t cap = kDefaultSubgroupCap;
  std::optional<std::uint64_t> seed;
  bool emit_idempotents = false;

  // families
  std::vector<std::string> family_names{"D1", "D2"};
  std::vector<unsigned> ms{2, 3, 4};
  std::vector<std::uint64_t> qs{3, 5, 7, 13};
};

struct Source {
  std::optional<FiniteGroup> group;
  std::string description;
  std::optional<MetacyclicParams> metacyclic;
  std::optional<std::pair<Family, unsigned>> family;
};

Source load(const Job& job) {
  const int given = !job.cayley.empty() + !job.metacyclic.empty() + (job.d1 > 0) + (job.d2 > 0);
  if (given != 1)
    throw Error(ErrorKind::ParseError, "give exactly one of --cayley, --metacyclic, --d1, --d2");
  Source s;
  if (!job.cayley.empty()) {
    s.group = read_cayley_file(job.cayley);
    s.description = "cayley " + job.cayley;
  } else if (!job.metacyclic.empty()) {
    const auto& v = job.metacyclic;
    MetacyclicParams P{v[0], v[1], v[2], v[3]};
    P.validate();
    s.group = metacyclic_group(P.n, P.t, P.k, P.r);
    s.metacyclic = P;
    s.description = "metacyclic " + std::to_string(P.n) + " " + std::to_string(P.t) + " " + std::to_string(P.k) +
                    " " + std::to_string(P.r);
  } else if (job.d1 > 0) {
    s.group = d1_group(job.d1);
    s.family = {Family::D1, job.d1};
    s.description = "d1 " + std::to_string(job.d1);
  } else {
    const std::uint64_t n = std::uint64_t{2} << job.d2;
    s.group = d2_group(job.d2);
    s.metacyclic = MetacyclicParams{n, 2, 2, n / 2 + 1};
    s.family = {Family::D2, job.d2};
    s.description = "d2 " + std::to_string(job.d2);
  }
  return s;
}

void header(Report& r, const std::string& command, const Source& s, const FieldTower& F, const Job& job) {
  r.set("format", "fqg-report 1");
  r.set("command", command);
  r.set("group.source", s.description);
  r.set("group.order", s.group->order());
  r.set("field.p", job.p);
  r.set("field.a", std::uint64_t{job.a});
  r.set("field.q", F.q());
  r.set("seed", job.seed ? std::to_string(*job.seed) : "none");
}

void print_table(std::ostream& os, const Decomposition& dec) {
  const auto& s = dec.summary;
  os << "F_" << s.q << "[G], |G| = " << s.group_order << "\n";
  os << "   d    l  alpha\n";
  for (const auto& [key, a] : s.alpha) {
    char line[64];
    std::snprintf(line, sizeof line, "%4llu %4llu %6llu\n", static_cast<unsigned long long>(key.first),
                  static_cast<unsigned long long>(key.second), static_cast<unsigned long long>(a));
    os << line;
  }
  os << "Wedderburn: " << cli::format_wedderburn(s) << "\n";
  os << "Aut: " << dec.aut.to_string() << "\n";
}

void summary_lines(Report& r, const std::string& prefix, const Decomposition& dec) {
  r.set(prefix + "summary", cli::format_summary(dec.summary.alpha));
  r.set(prefix + "summary.dimension", dec.summary.dimension());
  r.set(prefix + "wedderburn", cli::format_wedderburn(dec.summary));
  r.set(prefix + "aut", dec.aut.to_string());
  r.set(prefix + "components.count", dec.components.size());
}

void component_lines(Report& r, const Decomposition& dec) {
  for (std::size_t i = 0; i < dec.components.size(); ++i) {
    const auto& c = dec.components[i];
    const std::string k = "component." + std::to_string(i) + ".";
    r.set(k + "d", c.d);
    r.set(k + "l", c.l);
    r.set(k + "idempotent", cli::format_vector(c.idempotent));
  }
}

std::set<std::vector<Coeff>> as_set(const std::vector<AlgebraElement>& v) {
  std::set<std::vector<Coeff>> out;
  for (const auto& e : v) out.insert(e.c);
  return out;
}

std::vector<AlgebraElement> idempotents(const Decomposition& dec) {
  std::vector<AlgebraElement> out;
  for (const auto& c : dec.components) out.push_back(c.idempotent);
  return out;
}

DecomposeOptions options_of(const Job& job) {
  DecomposeOptions o;
  o.seed = job.seed;
  o.cap = job.cap;
  return o;
}

void write(const Report& r, const Job& job) {
  if (job.out.empty()) return;
  if (job.out == "-") {
    std::cout << r.str();
    return;
  }
  std::ofstream f(job.out, std::ios::binary);
  if (!f) throw Error(ErrorKind::ParseError, "cannot write " + job.out);
  f << r.str();
}

int run_decompose(const Job& job, bool with_idempotents) {
  const Source s = load(job);
  const FieldTower F = make_field(job.p, job.a);
  GroupAlgebra FG(*s.group, F);
  const auto dec = decompose(FG, options_of(job));
  print_table(std::cout, dec);
  if (with_idempotents)
    for (std::size_t i = 0; i < dec.components.size(); ++i)
      std::cout << "e" << i << " [d=" << dec.components[i].d << ", l=" << dec.components[i].l
                << "] = " << format(dec.components[i].idempotent) << "\n";
  Report r;
  header(r, with_idempotents ? "idempotents" : "decompose", s, F, job);
  summary_lines(r, "", dec);
  if (with_idempotents || job.emit_idempotents) component_lines(r, dec);
  r.set("status", "ok");
  write(r, job);
  return kExitOk;
}

int run_verify(const Job& job) {
  const Source s = load(job);
  const FieldTower F = make_field(job.p, job.a);
  GroupAlgebra FG(*s.group, F);
  Report r;
  header(r, "verify", s, F, job);
  auto fail = [&](const std::string& what) {
    r.set("status", "fail");
    r.set("failure", what);
    std::cout << "FAIL: " << what << "\n";
    write(r, job);
    return kExitInvariant;
  };

  auto opts = options_of(job);
  opts.check_ideal_dimensions = true;
  Decomposition dec;
  try {
    dec = decompose(FG, opts);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::AssertionFailure) throw;
    return fail(e.what());
  }
  print_table(std::cout, dec);
  summary_lines(r, "", dec);
  r.set("check.invariants", "pass");

  const auto oracle = center_split(FG);
  const auto classes = q_class_count(*s.group, F.q());
  r.set("oracle.count", oracle.size());
  r.set("oracle.q_classes", classes);
  if (oracle.size() != classes) return fail("center_split found " + std::to_string(oracle.size()) +
                                            " blocks, q_class_count is " + std::to_string(classes));
  const auto mine = idempotents(dec);
  const auto theirs = as_set(oracle);
  for (std::size_t i = 0; i < mine.size(); ++i)
    if (!theirs.count(mine[i].c)) return fail("component " + std::to_string(i) + " is not an oracle block: " +
                                              cli::format_vector(mine[i]));
  if (mine.size() != oracle.size()) return fail("engine has " + std::to_string(mine.size()) +
                                                " components, oracle " + std::to_string(oracle.size()));
  r.set("check.oracle", "pass");
  if (job.emit_idempotents) component_lines(r, dec);
  r.set("status", "ok");
  std::cout << "verify: ok\n";
  write(r, job);
  return kExitOk;
}

int run_compare(const Job& job) {
  const Source s = load(job);
  const FieldTower F = make_field(job.p, job.a);
  GroupAlgebra FG(*s.group, F);
  const auto dec = decompose(FG, options_of(job));
  print_table(std::cout, dec);
  Report r;
  header(r, "compare", s, F, job);
  summary_lines(r, "generic.", dec);
  bool agree = true;
  std::vector<std::string> paths;

  if (s.metacyclic) {
    paths.push_back("metacyclic");
    const auto fast = metacyclic_decompose(*s.metacyclic, F, options_of(job));
    summary_lines(r, "metacyclic.", fast.decomposition);
    const bool same_summary = fast.decomposition.summary == dec.summary;
    const bool same_set = as_set(idempotents(fast.decomposition)) == as_set(idempotents(dec));
    r.set_bool("metacyclic.summary_match", same_summary);
    r.set_bool("metacyclic.idempotents_match", same_set);
    agree = agree && same_summary && same_set;
    std::cout << "metacyclic path: " << (same_summary && same_set ? "agrees" : "DIFFERS") << "\n";
  }
  if (s.family) {
    paths.push_back("closed-form");
    const auto [f, m] = *s.family;
    const auto closed = closed_form(f, m, F.q());
    const auto closed_aut = aut_closed_form(f, m, F.q());
    r.set("closed.summary", cli::format_summary(closed.alpha));
    r.set("closed.summary.dimension", closed.dimension());
    r.set("closed.wedderburn", cli::format_wedderburn(closed));
    r.set("closed.aut", closed_aut.to_string());
    const bool same = closed == dec.summary && closed_aut == dec.aut;
    r.set_bool("closed.match", same);
    agree = agree && same;
    std::cout << "closed form: " << (same ? "agrees" : "DIFFERS") << "\n";
  }
  std::string list = "[";
  for (std::size_t i = 0; i < paths.size(); ++i) list += (i ? ", " : "") + paths[i];
  r.set("compare.paths", list + "]");
  r.set("status", agree ? "ok" : "discrepancy");
  write(r, job);
  return agree ? kExitOk : kExitDiscrepancy;
}

int run_families(const Job& job) {
  Report r;
  r.set("format", "fqg-report 1");
  r.set("command", "families");
  r.set("seed", job.seed ? std::to_string(*job.seed) : "none");
  std::size_t total = 0, mismatches = 0;
  for (const auto& name : job.family_names) {
    Family f;
    if (name == "D1" || name == "d1") f = Family::D1;
    else if (name == "D2" || name == "d2") f = Family::D2;
    else throw Error(ErrorKind::ParseError, "unknown family " + name);
    for (unsigned m : job.ms)
      for (std::uint64_t q : job.qs) {
        const auto c = compare_family(f, m, make_field(q, 1), options_of(job));
        const std::string k = "entry." + to_string(f) + "." + std::to_string(m) + "." + std::to_string(q) + ".";
        ++total;
        std::cout << to_string(f) << " m=" << m << " q=" << q << ": " << (c.agree() ? "agree" : "DIFFER") << "\n";
        r.set_bool(k + "match", c.agree());
        if (!c.agree()) {
          ++mismatches;
          r.set(k + "closed", cli::format_summary(c.closed.alpha));
          r.set(k + "closed.dimension", c.closed.dimension());
          r.set(k + "engine", cli::format_summary(c.engine.alpha));
          r.set(k + "closed.aut", c.closed_aut.to_string());
          r.set(k + "engine.aut", c.engine_aut.to_string());
        }
      }
  }
  r.set("entries", total);
  r.set("mismatches", mismatches);
  r.set("status", mismatches ? "discrepancy" : "ok");
  write(r, job);
  return mismatches ? kExitDiscrepancy : kExitOk;
}

void add_group_options(CLI::App* sub, Job& job) {
  sub->add_option("--cayley", job.cayley, "Cayley table file");
  sub->add_option("--metacyclic", job.metacyclic, "n t k r")->expected(4);
  sub->add_option("--d1", job.d1, "type D1 group of parameter m")->check(CLI::Range(1u, 7u));
  sub->add_option("--d2", job.d2, "type D2 group of parameter m")->check(CLI::Range(1u, 7u));
  sub->add_option("--p", job.p, "characteristic")->required();
  sub->add_option("--a", job.a, "field degree over F_p")->check(CLI::PositiveNumber);
  sub->add_option("--cap", job.cap, "subgroup enumeration cap");
  sub->add_flag("--emit-idempotents", job.emit_idempotents, "write coefficient vectors to the report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Primitive central idempotents and Wedderburn decompositions of F_q[G]"};
  app.require_subcommand(1);
  app.fallthrough();
  Job job;
  std::uint64_t seed = 0;
  app.add_option("--out", job.out, "report file ('-' for stdout)");
  auto* seed_opt = app.add_option("--seed", seed, "randomize choices that must not matter");

  auto* dec = app.add_subcommand("decompose", "Wedderburn table and Aut term");
  auto* idem = app.add_subcommand("idempotents", "decompose and print the idempotents");
  auto* ver = app.add_subcommand("verify", "invariants and oracle comparison");
  auto* cmp = app.add_subcommand("compare", "generic engine against the specialized paths");
  auto* fam = app.add_subcommand("families", "closed forms against the engine over a grid");
  for (auto* sub : {dec, idem, ver, cmp}) add_group_options(sub, job);
  fam->add_option("--family", job.family_names, "D1, D2");
  fam->add_option("--m", job.ms, "values of m")->check(CLI::Range(2u, 7u));
  fam->add_option("--q", job.qs, "odd primes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }
  if (seed_opt->count()) job.seed = seed;

  try {
    if (*dec) return run_decompose(job, false);
    if (*idem) return run_decompose(job, true);
    if (*ver) return run_verify(job);
    if (*cmp) return run_compare(job);
    return run_families(job);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOther;
  }
}
