// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "nbe/cli.hpp"
#include "nbe/oracle.hpp"
#include "nbe/parser.hpp"
#include "nbe/printer.hpp"
#include "nbe/semantics.hpp"
#include "support/generators.hpp"

using namespace nbe;
namespace t = nbe::testing;

namespace {

struct Outcome {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string note;

  void check(bool ok) {
    ++cases;
    if (!ok) ++failures;
  }
};

// Any exception counts as a failed case.
template <class F>
void guarded(Outcome& o, F&& body) {
  try {
    o.check(body());
  } catch (const std::exception& e) {
    o.check(false);
    if (o.note.empty()) o.note = e.what();
  }
}

// The shared corpus for criteria 2 and 5.
std::vector<t::Problem> corpus() {
  t::Rng rng(2024);
  t::GenOptions options;
  std::vector<t::Problem> out;
  for (int i = 0; i < 2000; ++i) out.push_back(t::random_problem(rng, options));
  return out;
}

Outcome fixed_point() {
  Outcome o;
  // Context entries range over types of depth 2, target types over depth 3.
  auto entry_types = t::all_types(2);
  std::vector<Ctx> ctxs{Ctx{}};
  for (const auto& a : entry_types) {
    ctxs.push_back(Ctx{a});
    for (const auto& b : entry_types) ctxs.push_back(Ctx{a, b});
  }
  auto targets = t::all_types(3);
  for (const auto& ctx : ctxs) {
    for (const auto& type : targets) {
      for (const auto& n : t::enumerate_nf(ctx, type, 7)) {
        guarded(o, [&] { return nf(ctx, embed_nf(n)) == n; });
      }
    }
  }
  return o;
}

Outcome oracle_agreement(const std::vector<t::Problem>& problems) {
  Outcome o;
  std::size_t total = 0, largest = 0;
  for (const auto& p : problems) {
    guarded(o, [&] { return nf(p.ctx, p.term) == oracle_nf(p.ctx, p.term); });
    total += term_size(p.term);
    largest = std::max(largest, term_size(p.term));
  }
  char buf[80];
  std::snprintf(buf, sizeof buf, "mean size %.1f, max %zu", double(total) / problems.size(), largest);
  o.note = buf;
  return o;
}

Outcome beta_eta_invariance() {
  Outcome o;
  t::Rng rng(7);
  t::GenOptions options;
  for (int i = 0; i < 500; ++i) {
    auto p = t::random_problem(rng, options);
    auto steps = 1 + t::below(rng, 10);
    auto mutated = mutate_beta_eta(p.ctx, p.term, rng(), steps);
    guarded(o, [&] { return nf(p.ctx, mutated) == nf(p.ctx, p.term); });
  }
  return o;
}

Outcome naturality() {
  Outcome o;
  t::Rng rng(8);
  t::GenOptions options;
  for (int i = 0; i < 500; ++i) {
    auto p = t::random_problem(rng, options);
    auto rho = t::random_renaming(rng, p.ctx);
    guarded(o, [&] { return rename_nf(nf(p.ctx, p.term), rho) == nf(rho.target(), rename_term(p.term, rho)); });
  }
  return o;
}

Outcome idempotence(const std::vector<t::Problem>& problems) {
  Outcome o;
  for (const auto& p : problems) {
    guarded(o, [&] {
      Nf n = nf(p.ctx, p.term);
      return nf(p.ctx, embed_nf(n)) == n;
    });
  }
  return o;
}

Outcome functor_laws() {
  Outcome o;
  t::Rng rng(9);
  t::GenOptions options;
  std::size_t terms = 0, neutrals = 0, normals = 0, sems = 0;
  while (terms < 500 || neutrals < 500 || normals < 500 || sems < 500) {
    auto p = t::random_problem(rng, options);
    auto rho1 = t::random_renaming(rng, p.ctx);
    auto rho2 = t::random_renaming(rng, rho1.target());
    auto both = rename_compose(rho2, rho1);
    auto id = rename_id(p.ctx);

    if (terms < 500) {
      ++terms;
      guarded(o, [&] {
        return rename_term(p.term, id) == p.term &&
               rename_term(rename_term(p.term, rho1), rho2) == rename_term(p.term, both);
      });
    }
    if (sems < 500) {
      ++sems;
      guarded(o, [&] {
        Sem v = eval(p.term, identity_env(p.ctx));
        return sem_rename(v, id) == v && sem_rename(sem_rename(v, rho1), rho2) == sem_rename(v, both);
      });
    }
    if (normals < 500) {
      if (auto n = t::random_nf(rng, p.ctx, t::random_type(rng, 3), 12)) {
        ++normals;
        guarded(o, [&] {
          return rename_nf(*n, id) == *n && rename_nf(rename_nf(*n, rho1), rho2) == rename_nf(*n, both);
        });
      }
    }
    if (neutrals < 500) {
      if (auto m = t::random_ne(rng, p.ctx, 8)) {
        ++neutrals;
        guarded(o, [&] {
          return rename_ne(*m, id) == *m && rename_ne(rename_ne(*m, rho1), rho2) == rename_ne(*m, both);
        });
      }
    }
  }
  return o;
}

Outcome golden_cli() {
  Outcome o;
  std::ifstream in(NBE_GOLDEN_DIR "/cli_golden.json");
  if (!in) {
    o.check(false);
    o.note = "golden file missing";
    return o;
  }
  for (const auto& c : nlohmann::json::parse(in)) {
    guarded(o, [&] {
      std::vector<std::string> args{"nbe"};
      for (const auto& a : c.at("args")) args.push_back(a.get<std::string>());
      std::vector<const char*> argv;
      for (const auto& a : args) argv.push_back(a.c_str());
      std::ostringstream out, err;
      int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
      return code == c.at("exit").get<int>() && out.str() == c.at("stdout").get<std::string>();
    });
  }
  return o;
}

Outcome round_trip() {
  Outcome o;
  t::Rng rng(10);
  t::GenOptions options;
  for (int i = 0; i < 1000; ++i) {
    auto p = t::random_problem(rng, options);
    guarded(o, [&] {
      auto named = t::name_ctx(p.ctx);
      return elaborate(named, parse_term(print_term(p.term, named))).term == p.term;
    });
  }
  return o;
}

Outcome church_performance() {
  Outcome o;
  auto term = elaborate(NamedCtx{}, parse_term(t::church_power_of_two(10)));
  auto start = std::chrono::steady_clock::now();
  Nf result = nf(Ctx{}, term.term);
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  auto expected = elaborate(NamedCtx{}, parse_term(t::church(1024)));
  o.check(result == nf(Ctx{}, expected.term));
  o.check(seconds < 5.0);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f s", seconds);
  o.note = buf;
  return o;
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int index, const char* name, const std::function<Outcome()>& body) {
    auto start = std::chrono::steady_clock::now();
    Outcome o = body();
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = o.failures == 0 && o.cases > 0;
    if (!pass) ++failed;
    std::printf("%s %d %s: %zu cases, %zu failures, %.2f s%s%s\n", pass ? "PASS" : "FAIL", index, name, o.cases,
                o.failures, seconds, o.note.empty() ? "" : ", ", o.note.c_str());
    std::fflush(stdout);
  };

  auto problems = corpus();
  report(1, "nf fixes normal forms", fixed_point);
  report(2, "nf agrees with the oracle", [&] { return oracle_agreement(problems); });
  report(3, "nf is invariant under beta-eta moves", beta_eta_invariance);
  report(4, "nf commutes with renaming", naturality);
  report(5, "nf is idempotent", [&] { return idempotence(problems); });
  report(6, "renaming functor laws", functor_laws);
  report(7, "golden CLI outputs", golden_cli);
  report(8, "parse after print is the identity", round_trip);
  report(9, "Church 2^10 under 5 s", church_performance);
  return failed == 0 ? 0 : 1;
}
