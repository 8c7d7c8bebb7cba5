#include <atomic>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gentle/ar_translate.hpp"
#include "gentle/bound_quiver.hpp"
#include "gentle/ext.hpp"
#include "gentle/fringe.hpp"
#include "gentle/hom_kiss.hpp"
#include "gentle/oracle.hpp"
#include "gentle/strings.hpp"
#include "gentle/tau_tilting.hpp"

using nlohmann::json;
using namespace gentle;

namespace {

struct Ctx {
  bool as_json = false;
  bool quiet = false;
  int jobs = 1;
};

// json keys come out alphabetically sorted, so output stays byte-stable
void emit(const Ctx& ctx, const std::string& command, const std::string& plain,
          json payload) {
  if (ctx.quiet) return;
  if (ctx.as_json) {
    payload["schema"] = "gentle-kiss/1";
    payload["command"] = command;
    std::cout << payload.dump(2) << "\n";
  } else {
    std::cout << plain;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BoundQuiver load(const std::string& path) { return parse_quiver(read_file(path)); }

std::string letter_lit(const BoundQuiver& q, const SignedLetter& l) {
  return q.arrows[l.arrow].id + (l.inv ? "^-" : "");
}

std::string tau_display(const BoundQuiver& q, const TauResult& t) {
  return t.zero ? "0" : to_literal(q, canonical(q, t.walk));
}

int run_validate(const Ctx& ctx, const std::string& file) {
  BoundQuiver q = load(file);
  GentleReport rep = validate_gentle(q);
  std::ostringstream plain;
  plain << "gentle: " << (rep.is_gentle ? "yes" : "no") << "\n";
  for (const std::string& v : rep.violations) plain << "violation: " << v << "\n";
  emit(ctx, "validate", plain.str(),
       json{{"gentle", rep.is_gentle},
            {"string_algebra", rep.is_string_algebra},
            {"violations", rep.violations}});
  return rep.is_gentle ? 0 : 1;
}

int run_strings(const Ctx& ctx, const std::string& file, int max_len) {
  BoundQuiver q = load(file);
  std::vector<StringWalk> all = enumerate_strings(q, max_len);
  std::ostringstream plain;
  std::vector<std::string> lits;
  for (const StringWalk& w : all) {
    lits.push_back(to_literal(q, w));
    plain << lits.back() << "\n";
  }
  emit(ctx, "strings", plain.str(), json{{"count", lits.size()}, {"strings", lits}});
  return 0;
}

int run_fringe(const Ctx& ctx, const std::string& file, const std::string& out_path) {
  FringedAlgebra f = fringe(load(file));
  std::string text = serialize_quiver(f.hat);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
  }
  ArrowCensus census = arrow_census(f);
  std::ostringstream plain;
  if (out_path.empty()) plain << text;
  plain << "# arrows: " << census.hat_arrows << " (expected " << census.expected << ")\n";
  emit(ctx, "fringe", plain.str(),
       json{{"serialized", text},
            {"arrows", census.hat_arrows},
            {"expected_arrows", census.expected}});
  return 0;
}

int run_tau(const Ctx& ctx, const std::string& file, const std::string& lit, bool fringed) {
  BoundQuiver q = load(file);
  StringWalk w = parse_string_literal(q, lit);
  if (fringed) {
    FringedAlgebra f = fringe(q);
    LongString ls = cohook_completion(f, w);
    std::string out = to_literal(f.hat, canonical(f.hat, ls.walk()));
    emit(ctx, "tau", out + "\n", json{{"string", lit}, {"fringed", true}, {"tau", out}});
    return 0;
  }
  TauResult t = tau(q, w);
  std::string out = tau_display(q, t);
  emit(ctx, "tau", out + "\n",
       json{{"string", lit}, {"fringed", false}, {"tau", out}, {"zero", t.zero}});
  return 0;
}

int run_kiss(const Ctx& ctx, const std::string& file, const std::string& xlit,
             const std::string& ylit) {
  BoundQuiver q = load(file);
  FringedAlgebra f = fringe(q);
  StringWalk x = parse_string_literal(q, xlit), y = parse_string_literal(q, ylit);
  LongString cx = cohook_completion(f, x), cy = cohook_completion(f, y);
  std::vector<Kiss> ks = kisses(f, cx, cy);
  std::ostringstream plain;
  json jks = json::array();
  for (const Kiss& k : ks) {
    plain << "x[" << k.in_src.lo << "," << k.in_src.hi << ") y[" << k.in_dst.lo << ","
          << k.in_dst.hi << ")" << (k.flipped ? " flipped" : "")
          << " sigma=" << letter_lit(f.hat, k.sigma) << " zeta=" << letter_lit(f.hat, k.zeta)
          << " theta=" << letter_lit(f.hat, k.theta)
          << " gamma=" << letter_lit(f.hat, k.gamma) << "\n";
    jks.push_back(json{{"src", {k.in_src.lo, k.in_src.hi}},
                       {"dst", {k.in_dst.lo, k.in_dst.hi}},
                       {"flipped", k.flipped},
                       {"sigma", letter_lit(f.hat, k.sigma)},
                       {"zeta", letter_lit(f.hat, k.zeta)},
                       {"theta", letter_lit(f.hat, k.theta)},
                       {"gamma", letter_lit(f.hat, k.gamma)}});
  }
  plain << "kisses: " << ks.size() << "\n";
  emit(ctx, "kiss", plain.str(),
       json{{"x", xlit}, {"y", ylit}, {"count", ks.size()}, {"kisses", jks}});
  return 0;
}

int run_homdim(const Ctx& ctx, const std::string& file, const std::string& xlit,
               const std::string& ylit, bool with_tau) {
  BoundQuiver q = load(file);
  StringWalk x = parse_string_literal(q, xlit), y = parse_string_literal(q, ylit);
  int dim = 0;
  if (with_tau) {
    FringedAlgebra f = fringe(q);
    dim = hom_tau_dim(f, x, y);
  } else {
    dim = static_cast<int>(hom_basis(q, x, y).size());
  }
  emit(ctx, "homdim", std::to_string(dim) + "\n",
       json{{"x", xlit}, {"y", ylit}, {"tau", with_tau}, {"dim", dim}});
  return 0;
}

int run_ext(const Ctx& ctx, const std::string& file, const std::string& ylit,
            const std::string& xlit) {
  BoundQuiver q = load(file);
  FringedAlgebra f = fringe(q);
  StringWalk y = parse_string_literal(q, ylit), x = parse_string_literal(q, xlit);
  std::vector<ExtensionSeq> basis = ext_basis(f, y, x);
  std::ostringstream plain;
  plain << "ext: " << basis.size() << "\n";
  json seqs = json::array();
  std::string xs = to_literal(q, canonical(q, x)), ys = to_literal(q, canonical(q, y));
  for (const ExtensionSeq& s : basis) {
    std::string mid = to_literal(q, s.mid1);
    if (s.mid2) mid += " (+) " + to_literal(q, *s.mid2);
    plain << "0 -> " << xs << " -> " << mid << " -> " << ys << " -> 0\n";
    json js{{"middle", to_literal(q, s.mid1)}, {"connecting", s.connecting}};
    if (s.mid2) js["middle2"] = to_literal(q, *s.mid2);
    if (s.connecting) js["arrow"] = q.arrows[s.arrow].id;
    seqs.push_back(js);
  }
  emit(ctx, "ext", plain.str(),
       json{{"y", ylit}, {"x", xlit}, {"dim", basis.size()}, {"sequences", seqs}});
  return 0;
}

int run_sttilt(const Ctx& ctx, const std::string& file) {
  BoundQuiver q = load(file);
  FringedAlgebra f = fringe(q);
  std::vector<Collection> cs = maximal_collections(f);
  std::ostringstream plain;
  std::vector<std::string> keys;
  for (const Collection& c : cs) {
    keys.push_back(collection_key(q, c));
    plain << keys.back() << "\n";
  }
  emit(ctx, "sttilt", plain.str(), json{{"count", keys.size()}, {"collections", keys}});
  return 0;
}

int run_poset(const Ctx& ctx, const std::string& file, const std::string& dot_path) {
  BoundQuiver q = load(file);
  FringedAlgebra f = fringe(q);
  TorsionPoset p = poset(f);
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) throw std::runtime_error("cannot write " + dot_path);
    out << poset_dot(q, p);
  }
  std::ostringstream plain;
  plain << "nodes: " << p.nodes.size() << "\n";
  plain << "covers: " << p.covers.size() << "\n";
  plain << "top: " << collection_key(q, p.nodes[p.top]) << "\n";
  plain << "bottom: " << collection_key(q, p.nodes[p.bottom]) << "\n";
  json covers = json::array();
  for (const TorsionPoset::Cover& c : p.covers)
    covers.push_back(json{{"upper", c.upper},
                          {"lower", c.lower},
                          {"exchanged_upper", item_key(q, c.upper_item)},
                          {"exchanged_lower", item_key(q, c.lower_item)},
                          {"kisses", c.kiss_count}});
  std::vector<std::string> keys;
  for (const Collection& c : p.nodes) keys.push_back(collection_key(q, c));
  emit(ctx, "poset", plain.str(),
       json{{"nodes", keys},
            {"covers", covers},
            {"top", collection_key(q, p.nodes[p.top])},
            {"bottom", collection_key(q, p.nodes[p.bottom])}});
  return 0;
}

int run_mc(const Ctx& ctx, const std::string& file, int coll_index, const std::string& arrow_id) {
  BoundQuiver q = load(file);
  FringedAlgebra f = fringe(q);
  std::vector<Collection> cs = maximal_collections(f);
  if (coll_index < 0 || coll_index >= static_cast<int>(cs.size()))
    throw std::runtime_error("collection index out of range (have " +
                             std::to_string(cs.size()) + ")");
  auto it = f.hat.arrow_index.find(arrow_id);
  if (it == f.hat.arrow_index.end())
    throw std::runtime_error("no arrow '" + arrow_id + "' in the fringed quiver");
  std::set<std::string> s_keys;
  for (const StringWalk& s : torsion_class_strings(f, cs[coll_index]))
    s_keys.insert(walk_key(q, s));
  StringWalk w = mc_walk(f, s_keys, it->second);
  std::string lit = to_literal(f.hat, canonical(f.hat, w));
  emit(ctx, "mc", lit + "\n",
       json{{"collection", collection_key(q, cs[coll_index])},
            {"arrow", arrow_id},
            {"walk", lit}});
  return 0;
}

int run_census(const Ctx& ctx, const std::string& file, bool all) {
  if (!all) throw CLI::ValidationError("census", "pass --all to run every collection");
  BoundQuiver q = load(file);
  FringedAlgebra f = fringe(q);
  std::vector<Collection> cs = maximal_collections(f);
  std::ostringstream plain;
  std::vector<std::string> keys;
  for (const Collection& c : cs) {
    verify_cang(f, c);  // throws CensusMismatch on failure
    keys.push_back(collection_key(q, c));
    plain << "ok " << keys.back() << "\n";
  }
  plain << "census: ok (" << cs.size() << " collections)\n";
  emit(ctx, "census", plain.str(), json{{"ok", true}, {"collections", keys}});
  return 0;
}

struct CheckSection {
  std::string name;
  long cases = 0;
  long failures = 0;
};

// batch pair comparisons; the only place --jobs buys anything
template <typename Fn>
long parallel_count_failures(int jobs, long n, Fn&& body) {
  if (jobs <= 1 || n < 4) {
    long fails = 0;
    for (long i = 0; i < n; ++i)
      if (!body(i)) ++fails;
    return fails;
  }
  std::atomic<long> fails{0};
  std::atomic<long> next{0};
  std::vector<std::thread> pool;
  int width = std::min<long>(jobs, n);
  for (int t = 0; t < width; ++t)
    pool.emplace_back([&] {
      for (long i = next.fetch_add(1); i < n; i = next.fetch_add(1))
        if (!body(i)) fails.fetch_add(1);
    });
  for (std::thread& th : pool) th.join();
  return fails.load();
}

int run_oracle_check(const Ctx& ctx, const std::string& file, int max_len) {
  BoundQuiver q = load(file);
  FringedAlgebra f = fringe(q);
  std::vector<StringWalk> strings = enumerate_strings(q, max_len);
  std::vector<oracle::Representation> reps;
  reps.reserve(strings.size());
  for (const StringWalk& w : strings) reps.push_back(oracle::rep_of_string(q, w));
  const long n = static_cast<long>(strings.size());

  std::vector<CheckSection> sections;

  {
    CheckSection s{"tau", n, 0};
    s.failures = parallel_count_failures(ctx.jobs, n, [&](long i) {
      TauResult t = tau(q, strings[i]);
      oracle::Representation lin = oracle::tau_linear(q, reps[i]);
      if (t.zero) return lin.total_dim() == 0;
      return dimension_vector(q, t.walk) == lin.dims;
    });
    sections.push_back(s);
  }
  {
    CheckSection s{"hom", n * n, 0};
    s.failures = parallel_count_failures(ctx.jobs, n * n, [&](long idx) {
      long i = idx / n, j = idx % n;
      return static_cast<long>(hom_basis(q, strings[i], strings[j]).size()) ==
             oracle::hom_dim_linear(q, reps[i], reps[j]);
    });
    sections.push_back(s);
  }
  {
    CheckSection s{"kiss", n * n, 0};
    s.failures = parallel_count_failures(ctx.jobs, n * n, [&](long idx) {
      long i = idx / n, j = idx % n;
      oracle::Representation tj = oracle::tau_linear(q, reps[j]);
      return hom_tau_dim(f, strings[i], strings[j]) ==
             oracle::hom_dim_linear(q, reps[i], tj);
    });
    sections.push_back(s);
  }
  {
    CheckSection s{"ext", n * n, 0};
    s.failures = parallel_count_failures(ctx.jobs, n * n, [&](long idx) {
      long y = idx / n, x = idx % n;
      int lin = oracle::ext1_dim_linear(q, reps[y], reps[x]);
      int basis = static_cast<int>(ext_basis(f, strings[y], strings[x]).size());
      int via = hom_tau_dim(f, strings[x], strings[y]) -
                static_cast<int>(injective_factoring_basis(f, strings[x], strings[y]).size());
      if (lin > hom_tau_dim(f, strings[x], strings[y])) return false;
      return basis == lin && via == lin;
    });
    sections.push_back(s);
  }
  {
    CheckSection s{"fac", 0, 0};
    try {
      std::vector<Collection> cs = maximal_collections(f);
      std::vector<StringWalk> targets;
      for (const StringWalk& w : strings)
        if (w.length() <= 3) targets.push_back(w);
      struct Job {
        const Collection* c;
        const StringWalk* y;
      };
      std::vector<Job> jobs_list;
      for (const Collection& c : cs)
        for (const StringWalk& y : targets) jobs_list.push_back({&c, &y});
      s.cases = static_cast<long>(jobs_list.size());
      s.failures = parallel_count_failures(ctx.jobs, s.cases, [&](long i) {
        const Collection& c = *jobs_list[i].c;
        std::vector<StringWalk> gens;
        std::vector<oracle::Representation> greps;
        for (const CollectionItem& it : c.items)
          if (!it.shifted) {
            gens.push_back(it.walk);
            greps.push_back(oracle::rep_of_string(q, it.walk));
          }
        return fac_contains(q, gens, *jobs_list[i].y) ==
               oracle::surjection_exists(q, greps, oracle::rep_of_string(q, *jobs_list[i].y));
      });
    } catch (const InfiniteTypeError&) {
      s.name = "fac (skipped: infinite type)";
    }
    sections.push_back(s);
  }

  std::ostringstream plain;
  bool ok = true;
  json jsec = json::array();
  for (const CheckSection& s : sections) {
    bool pass = s.failures == 0;
    ok = ok && pass;
    plain << s.name << ": " << (pass ? "pass" : "FAIL") << " (" << s.cases << " cases";
    if (!pass) plain << ", " << s.failures << " failures";
    plain << ")\n";
    jsec.push_back(json{{"name", s.name}, {"cases", s.cases}, {"failures", s.failures}});
  }
  plain << "oracle-check: " << (ok ? "pass" : "FAIL") << "\n";
  emit(ctx, "oracle-check", plain.str(), json{{"ok", ok}, {"sections", jsec}});
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial calculus of gentle algebras"};
  app.require_subcommand(1);

  Ctx ctx;
  app.add_flag("--json", ctx.as_json, "emit a gentle-kiss/1 json envelope");
  app.add_flag("--quiet", ctx.quiet, "suppress normal output");
  app.add_option("--jobs", ctx.jobs, "worker threads for batch comparisons")
      ->check(CLI::PositiveNumber);

  std::string file, lit_x, lit_y, out_path, dot_path, arrow_id, tau_string;
  int max_len = 0, coll_index = 0;
  bool with_tau = false, fringed = false, census_all = false;

  CLI::App* validate = app.add_subcommand("validate", "check the gentle conditions");
  validate->add_option("file", file)->required();

  CLI::App* strings_cmd = app.add_subcommand("strings", "list strings");
  strings_cmd->add_option("file", file)->required();
  strings_cmd->add_option("--max-len", max_len, "cap on the word length (0 = all)");

  CLI::App* fringe_cmd = app.add_subcommand("fringe", "fringed algebra");
  fringe_cmd->add_option("file", file)->required();
  fringe_cmd->add_option("-o,--out", out_path, "write the fringed quiver here");

  CLI::App* tau_cmd = app.add_subcommand("tau", "Auslander-Reiten translate");
  tau_cmd->add_option("file", file)->required();
  tau_cmd->add_option("--string", tau_string, "string literal")->required();
  tau_cmd->add_flag("--fringed", fringed, "cohook completion over the fringed quiver");

  CLI::App* kiss_cmd = app.add_subcommand("kiss", "kisses between cohook completions");
  kiss_cmd->add_option("file", file)->required();
  kiss_cmd->add_option("x", lit_x)->required();
  kiss_cmd->add_option("y", lit_y)->required();

  CLI::App* homdim_cmd = app.add_subcommand("homdim", "hom dimension");
  homdim_cmd->add_option("file", file)->required();
  homdim_cmd->add_option("x", lit_x)->required();
  homdim_cmd->add_option("y", lit_y)->required();
  homdim_cmd->add_flag("--tau", with_tau, "dim Hom(X, tau Y) instead");

  CLI::App* ext_cmd = app.add_subcommand("ext", "extension basis");
  ext_cmd->add_option("file", file)->required();
  ext_cmd->add_option("y", lit_y)->required();
  ext_cmd->add_option("x", lit_x)->required();

  CLI::App* sttilt_cmd = app.add_subcommand("sttilt", "maximal collections");
  sttilt_cmd->add_option("file", file)->required();

  CLI::App* poset_cmd = app.add_subcommand("poset", "torsion poset");
  poset_cmd->add_option("file", file)->required();
  poset_cmd->add_option("--dot", dot_path, "write a DOT digraph here");

  CLI::App* mc_cmd = app.add_subcommand("mc", "walk from an arrow and a torsion class");
  mc_cmd->add_option("file", file)->required();
  mc_cmd->add_option("--torsion-of", coll_index, "collection index (sttilt order)")
      ->required();
  mc_cmd->add_option("--arrow", arrow_id, "arrow id in the fringed quiver")->required();

  CLI::App* census_cmd = app.add_subcommand("census", "verify the walk census");
  census_cmd->add_option("file", file)->required();
  census_cmd->add_flag("--all", census_all, "run every collection");

  CLI::App* oracle_cmd = app.add_subcommand("oracle-check", "cross-validate with the oracle");
  oracle_cmd->add_option("file", file)->required();
  oracle_cmd->add_option("--max-len", max_len, "cap on the word length (0 = all)");

  // accept --json/--quiet/--jobs after the subcommand as well
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (*validate) return run_validate(ctx, file);
    if (*strings_cmd) return run_strings(ctx, file, max_len);
    if (*fringe_cmd) return run_fringe(ctx, file, out_path);
    if (*tau_cmd) return run_tau(ctx, file, tau_string, fringed);
    if (*kiss_cmd) return run_kiss(ctx, file, lit_x, lit_y);
    if (*homdim_cmd) return run_homdim(ctx, file, lit_x, lit_y, with_tau);
    if (*ext_cmd) return run_ext(ctx, file, lit_y, lit_x);
    if (*sttilt_cmd) return run_sttilt(ctx, file);
    if (*poset_cmd) return run_poset(ctx, file, dot_path);
    if (*mc_cmd) return run_mc(ctx, file, coll_index, arrow_id);
    if (*census_cmd) return run_census(ctx, file, census_all);
    if (*oracle_cmd) return run_oracle_check(ctx, file, max_len);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "gentle: usage: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "gentle: bound_quiver: " << e.what() << "\n";
    return 1;
  } catch (const StringError& e) {
    std::cerr << "gentle: strings: " << e.what() << "\n";
    return 1;
  } catch (const InfiniteTypeError& e) {
    std::cerr << "gentle: strings: infinite type: " << e.what() << "\n";
    return 1;
  } catch (const NotGentleError& e) {
    std::cerr << "gentle: fringe: " << e.what() << "\n";
    return 1;
  } catch (const CensusMismatch& e) {
    std::cerr << "gentle: tau_tilting: census mismatch: " << e.what() << "\n";
    return 1;
  } catch (const BidirectionalKiss& e) {
    std::cerr << "gentle: tau_tilting: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "gentle: error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
