#include "pg/examples.hpp"
#include "pg/parallel.hpp"
#include "pg/report.hpp"

#include "CLI11.hpp"

#include <cctype>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <utility>

using namespace pg;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError(0, "cannot write '" + path + "'");
  out << text;
}

std::vector<std::string> split_ws(const std::string& text) {
  std::istringstream ss(text);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Pregroup load_table(const std::string& path, const std::string& example) {
  if (!example.empty()) return make_example(split_ws(example));
  if (path.empty())
    throw ParseError(0, "no input table: give a file or --example");
  return Pregroup::parse(slurp(path));
}

GenSet pick_gens(const Universe& u, const std::string& gens,
                 const std::string& gens_file) {
  if (!gens_file.empty()) return GenSet::parse(u, slurp(gens_file));
  if (!gens.empty()) {
    std::vector<Elem> elems;
    for (const std::string& label : split_csv(gens)) {
      auto x = u.pregroup().element(label);
      if (!x) throw ParseError(0, "unknown element '" + label + "' in --gens");
      elems.push_back(*x);
    }
    return GenSet::of_elements(u, elems);
  }
  return GenSet::standard(u);
}

Ball get_ball(const Universe& u, const std::string& cache, int radius,
              const std::string& gens, const std::string& gens_file,
              std::size_t max_vertices) {
  if (!cache.empty()) {
    if (!gens_file.empty()) {
      GenSet s = GenSet::parse(u, slurp(gens_file));
      return Ball::load(u, slurp(cache), &s);
    }
    return Ball::load(u, slurp(cache), nullptr);
  }
  if (radius < 0)
    throw ParseError(0, "a ball is required: give --radius or --ball");
  return Ball::build(u, pick_gens(u, gens, gens_file), radius, max_vertices);
}

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pregroup toolkit: partial multiplication tables, universal-group words, Cayley balls"};
  app.require_subcommand(1);

  bool json = false;
  int threads = default_threads();
  std::uint64_t seed = 1;
  app.add_flag("--json", json, "one structured record per line");
  app.add_option("--threads", threads, "worker cap for internal scans");
  app.add_option("--seed", seed, "seed for randomized modes");

  // common per-subcommand inputs
  struct Common {
    std::string input, example;
    void attach(CLI::App* sub) {
      sub->add_option("input", input, "pregroup table file");
      sub->add_option("-e,--example", example,
                      "built-in table, e.g. 'free 2', 'group s3', "
                      "'amalgam 4 4 2', 'hnn-slice', 'random 17 8'");
      sub->fallthrough();
    }
  };

  struct BallOpts {
    std::string cache, gens, gens_file;
    int radius = -1;
    std::size_t max_vertices = 2'000'000;
    void attach(CLI::App* sub) {
      sub->add_option("-R,--radius", radius, "ball radius");
      sub->add_option("--gens", gens, "comma-separated generator labels");
      sub->add_option("--gens-file", gens_file, "generator file (gen <name> = <word>)");
      sub->add_option("--ball", cache, "load a serialized ball instead of building");
      sub->add_option("--max-vertices", max_vertices, "vertex cap for the build");
    }
  };

  // check
  auto* c_check = app.add_subcommand("check", "run axiom checks");
  Common in_check;
  in_check.attach(c_check);
  std::string axioms_arg = "p";
  int a2_len = 3, a2_exp = 4;
  BallOpts ball_check;
  c_check->add_option("--axioms", axioms_arg,
                      "comma list of P1..P6',A1..A5,H0; 'p' = table axioms; 'all'");
  c_check->add_option("--a2-len", a2_len, "A2 sequence length bound");
  c_check->add_option("--a2-exp", a2_exp, "A2 exponent bound");
  ball_check.attach(c_check);

  // bp
  auto* c_bp = app.add_subcommand("bp", "print the two-sided units B_P");
  Common in_bp;
  in_bp.attach(c_bp);

  // tree
  auto* c_tree = app.add_subcommand("tree", "order tree of the table");
  Common in_tree;
  in_tree.attach(c_tree);

  // word commands
  auto* c_reduce = app.add_subcommand("reduce", "reduce a word");
  auto* c_mul = app.add_subcommand("mul", "multiply two words");
  auto* c_eq = app.add_subcommand("eq", "equality in the universal group");
  auto* c_canon = app.add_subcommand("canon", "canonical representative");
  auto* c_len = app.add_subcommand("len", "length of a reduced word");
  auto* c_treelen = app.add_subcommand("treelen", "order-tree length of a word");
  Common in_reduce, in_mul, in_eq, in_canon, in_len, in_treelen;
  std::string word1, word2, strategy = "leftmost";
  const std::vector<std::pair<CLI::App*, Common*>> word_cmds = {
      {c_reduce, &in_reduce}, {c_mul, &in_mul},   {c_eq, &in_eq},
      {c_canon, &in_canon},   {c_len, &in_len},   {c_treelen, &in_treelen}};
  for (const auto& pr : word_cmds) {
    pr.second->attach(pr.first);
    pr.first->add_option("-w,--word", word1, "word, space-separated labels")
        ->required();
  }
  c_mul->add_option("-v,--other", word2, "second word")->required();
  c_eq->add_option("-v,--other", word2, "second word")->required();
  c_reduce->add_option("--strategy", strategy, "leftmost|rightmost|random")
      ->check(CLI::IsMember({"leftmost", "rightmost", "random"}));

  // enum
  auto* c_enum = app.add_subcommand("enum", "enumerate elements by reduced length");
  Common in_enum;
  in_enum.attach(c_enum);
  int enum_len = 2;
  std::size_t enum_budget = 200000;
  c_enum->add_option("--max-len", enum_len, "reduced length bound");
  c_enum->add_option("--budget", enum_budget, "enumeration budget");

  // ball
  auto* c_ball = app.add_subcommand("ball", "build a Cayley ball");
  Common in_ball;
  in_ball.attach(c_ball);
  BallOpts ball_ball;
  ball_ball.attach(c_ball);
  std::string ball_out;
  c_ball->add_option("-o,--out", ball_out, "write the serialized ball here");

  // delta
  auto* c_delta = app.add_subcommand("delta", "hyperbolicity estimates");
  Common in_delta;
  in_delta.attach(c_delta);
  BallOpts ball_delta;
  ball_delta.attach(c_delta);
  std::string delta_mode = "both";
  std::size_t tri_budget = 2'000'000, geo_cap = 64;
  c_delta->add_option("--mode", delta_mode, "4pt|thin|both")
      ->check(CLI::IsMember({"4pt", "thin", "both"}));
  c_delta->add_option("--budget", tri_budget, "triangle sample budget");
  c_delta->add_option("--geodesic-cap", geo_cap, "geodesic enumeration cap");

  // hconsts
  auto* c_h = app.add_subcommand("hconsts", "estimate the hyperbolicity constants");
  Common in_h;
  in_h.attach(c_h);
  BallOpts ball_h;
  ball_h.attach(c_h);
  std::size_t h_geo_cap = 64;
  c_h->add_option("--geodesic-cap", h_geo_cap, "geodesic enumeration cap");

  // lemmas
  auto* c_lem = app.add_subcommand("lemmas", "check the product-path bounds");
  Common in_lem;
  in_lem.attach(c_lem);
  BallOpts ball_lem;
  ball_lem.attach(c_lem);
  LemmaBudget lb;
  std::optional<int> ovr_c0, ovr_c1, ovr_c2x2, ovr_c3;
  c_lem->add_option("--d2-len", lb.d2_len, "factor-length cap for the pair scan");
  c_lem->add_option("--d3-len", lb.d3_len, "factor-length cap for the triangle scan");
  c_lem->add_option("--d4-samples", lb.d4_samples);
  c_lem->add_option("--d5-samples", lb.d5_samples);
  c_lem->add_option("--ham-samples", lb.ham_samples);
  c_lem->add_option("--class-cap", lb.class_cap);
  c_lem->add_option("--geodesic-cap", lb.geodesic_cap);
  c_lem->add_option("--enum-budget", lb.enum_budget);
  c_lem->add_option("--c0", ovr_c0, "override the measured C0");
  c_lem->add_option("--c1", ovr_c1, "override the measured C1");
  c_lem->add_option("--c2x2", ovr_c2x2, "override the measured doubled C2");
  c_lem->add_option("--c3", ovr_c3, "override the measured C3");

  // gen
  auto* c_gen = app.add_subcommand("gen", "emit a built-in table");
  std::vector<std::string> gen_spec;
  std::string gen_out;
  c_gen->add_option("spec", gen_spec, "e.g. free 2 | group s3 | amalgam 4 4 2")
      ->required();
  c_gen->add_option("-o,--out", gen_out, "output file (default stdout)");
  c_gen->fallthrough();

  // fuzz
  auto* c_fuzz = app.add_subcommand("fuzz", "random tables through the suites");
  std::size_t fuzz_count = 100;
  int fuzz_size = 8;
  bool fuzz_raw = false;
  std::size_t fuzz_products = 100;
  c_fuzz->add_option("--count", fuzz_count, "number of tables");
  c_fuzz->add_option("--size", fuzz_size, "target carrier size");
  c_fuzz->add_flag("--raw", fuzz_raw, "unvalidated tables (report only)");
  c_fuzz->add_option("--products", fuzz_products, "random products per table");
  c_fuzz->fallthrough();

  const auto t0 = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e);
    } catch (const CLI::ParseError& e) {
      app.exit(e);
      return 2;
    }

    if (c_check->parsed()) {
      Pregroup p = load_table(in_check.input, in_check.example);
      std::vector<Axiom> list;
      if (axioms_arg == "p" || axioms_arg.empty())
        list = p_axioms();
      else if (axioms_arg == "all")
        list = all_axioms();
      else
        for (const std::string& name : split_csv(axioms_arg))
          list.push_back(axiom_from(name));
      std::optional<Universe> u;
      std::optional<Ball> b;
      AxiomParams params;
      params.a2_max_len = a2_len;
      params.a2_max_exp = a2_exp;
      if (!ball_check.cache.empty() || ball_check.radius >= 0) {
        u.emplace(p);
        b.emplace(get_ball(*u, ball_check.cache, ball_check.radius,
                           ball_check.gens, ball_check.gens_file,
                           ball_check.max_vertices));
        params.ball = &*b;
      }
      bool all_hold = true;
      for (Axiom a : list) {
        AxiomVerdict v = check_axiom(p, a, params);
        all_hold = all_hold && v.holds;
        if (json) {
          std::cout << to_json(v).dump() << "\n";
        } else {
          std::cout << axiom_name(v.axiom) << (v.holds ? " holds" : " FAILS");
          if (!v.witness.empty()) std::cout << "  witness: " << join(v.witness, " ");
          if (!v.note.empty()) std::cout << "  note: " << v.note;
          std::cout << "\n";
        }
      }
      rc = all_hold ? 0 : 1;
    } else if (c_bp->parsed()) {
      Pregroup p = load_table(in_bp.input, in_bp.example);
      std::vector<std::string> labels;
      for (Elem x : bp(p)) labels.push_back(p.label(x));
      if (json) {
        ordered_json j;
        j["bp"] = labels;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << join(labels, " ") << "\n";
      }
    } else if (c_tree->parsed()) {
      Pregroup p = load_table(in_tree.input, in_tree.example);
      ordered_json j = tree_report(p);
      if (json) {
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "classes=" << j["classes"] << " identity_class="
                  << j["identity_class"]
                  << " is_tree=" << yn(j["is_tree"].get<bool>()) << "\n";
        const auto& blocks = j["blocks"];
        const auto& heights = j["heights"];
        for (std::size_t i = 0; i < blocks.size(); ++i) {
          std::cout << "class " << i << " h=" << heights[i] << ":";
          for (const auto& l : blocks[i]) std::cout << " " << l.get<std::string>();
          std::cout << "\n";
        }
        for (const auto& e : j["edges"])
          std::cout << "edge " << e[0] << " " << e[1] << "\n";
        if (j.contains("why")) std::cout << "why: " << j["why"].get<std::string>() << "\n";
      }
    } else if (c_reduce->parsed()) {
      Pregroup p = load_table(in_reduce.input, in_reduce.example);
      Universe u(p);
      Strategy s = strategy == "rightmost"  ? Strategy::rightmost
                   : strategy == "random"   ? Strategy::random
                                            : Strategy::leftmost;
      Word r = u.reduce(u.parse_word(word1), s, seed);
      if (json) {
        ordered_json j;
        j["reduced"] = u.print_word(r);
        std::cout << j.dump() << "\n";
      } else {
        std::cout << u.print_word(r) << "\n";
      }
    } else if (c_mul->parsed()) {
      Pregroup p = load_table(in_mul.input, in_mul.example);
      Universe u(p);
      Word r = u.multiply(u.reduce(u.parse_word(word1)),
                          u.reduce(u.parse_word(word2)));
      if (json) {
        ordered_json j;
        j["product"] = u.print_word(r);
        std::cout << j.dump() << "\n";
      } else {
        std::cout << u.print_word(r) << "\n";
      }
    } else if (c_eq->parsed()) {
      Pregroup p = load_table(in_eq.input, in_eq.example);
      Universe u(p);
      bool equal = u.equal(u.parse_word(word1), u.parse_word(word2));
      if (json) {
        ordered_json j;
        j["equal"] = equal;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << (equal ? "equal" : "different") << "\n";
      }
    } else if (c_canon->parsed()) {
      Pregroup p = load_table(in_canon.input, in_canon.example);
      Universe u(p);
      Word r = u.canonical(u.reduce(u.parse_word(word1)));
      if (json) {
        ordered_json j;
        j["canonical"] = u.print_word(r);
        std::cout << j.dump() << "\n";
      } else {
        std::cout << u.print_word(r) << "\n";
      }
    } else if (c_len->parsed()) {
      Pregroup p = load_table(in_len.input, in_len.example);
      Universe u(p);
      int l = u.chiswell_length(u.reduce(u.parse_word(word1)));
      if (json) {
        ordered_json j;
        j["length"] = l;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << l << "\n";
      }
    } else if (c_treelen->parsed()) {
      Pregroup p = load_table(in_treelen.input, in_treelen.example);
      Universe u(p);
      long l = u.tree_length(u.reduce(u.parse_word(word1)));
      if (json) {
        ordered_json j;
        j["tree_length"] = l;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << l << "\n";
      }
    } else if (c_enum->parsed()) {
      Pregroup p = load_table(in_enum.input, in_enum.example);
      Universe u(p);
      std::vector<Word> elems = u.enumerate_elements(enum_len, enum_budget);
      if (json) {
        ordered_json j;
        j["count"] = elems.size();
        ordered_json arr = ordered_json::array();
        for (const Word& w : elems) arr.push_back(u.print_word(w));
        j["elements"] = arr;
        std::cout << j.dump() << "\n";
      } else {
        for (const Word& w : elems) std::cout << u.print_word(w) << "\n";
      }
    } else if (c_ball->parsed()) {
      Pregroup p = load_table(in_ball.input, in_ball.example);
      Universe u(p);
      Ball b = get_ball(u, ball_ball.cache, ball_ball.radius, ball_ball.gens,
                        ball_ball.gens_file, ball_ball.max_vertices);
      if (!ball_out.empty()) spit(ball_out, b.serialize());
      ordered_json j = ball_report(b);
      if (json) {
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "pregroup=" << j["pregroup"].get<std::string>()
                  << " radius=" << j["radius"] << " gens="
                  << j["gens"].get<std::string>() << " vertices="
                  << j["vertices"] << " spheres=" << j["spheres"].dump()
                  << "\n";
      }
    } else if (c_delta->parsed()) {
      Pregroup p = load_table(in_delta.input, in_delta.example);
      Universe u(p);
      Ball b = get_ball(u, ball_delta.cache, ball_delta.radius, ball_delta.gens,
                        ball_delta.gens_file, ball_delta.max_vertices);
      if (delta_mode != "thin") {
        Delta4 d = delta_4pt(b, threads);
        ordered_json j = to_json(b, d);
        if (json)
          std::cout << j.dump() << "\n";
        else
          std::cout << "delta_4pt_x4=" << d.delta_x4
                    << " quadruples=" << d.quadruples
                    << " witness=" << j["witness"].dump() << "\n";
      }
      if (delta_mode != "4pt") {
        ThinBudget tb;
        tb.max_triangles = tri_budget;
        tb.geodesic_cap = geo_cap;
        tb.seed = seed;
        DeltaThin d = delta_thin(b, tb, threads);
        ordered_json j = to_json(b, d);
        if (json)
          std::cout << j.dump() << "\n";
        else
          std::cout << "delta_thin_x2=" << 2 * d.delta
                    << " triangles=" << d.triangles
                    << " exhaustive=" << yn(d.exhaustive)
                    << " geodesics_complete=" << yn(d.geodesics_complete)
                    << " witness=" << j["witness"].dump() << "\n";
      }
    } else if (c_h->parsed()) {
      Pregroup p = load_table(in_h.input, in_h.example);
      Universe u(p);
      Ball b = get_ball(u, ball_h.cache, ball_h.radius, ball_h.gens,
                        ball_h.gens_file, ball_h.max_vertices);
      ThinBudget tb;
      tb.geodesic_cap = h_geo_cap;
      tb.seed = seed;
      HConstants h = estimate_h_constants(b, tb);
      ordered_json j = to_json(h);
      if (json) {
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "radius=" << h.radius << " gens=" << h.gens << "\n";
        auto line = [&](const char* name, const ConstEntry& c) {
          std::cout << name << "=" << c.value << " exact=" << yn(c.exact);
          if (!c.witness.empty()) std::cout << " witness: " << c.witness;
          if (!c.note.empty()) std::cout << " note: " << c.note;
          std::cout << "\n";
        };
        line("C0", h.c0);
        line("C1", h.c1);
        line("C2_x2", h.c2);
        line("C3", h.c3);
      }
    } else if (c_lem->parsed()) {
      Pregroup p = load_table(in_lem.input, in_lem.example);
      Universe u(p);
      Ball b = get_ball(u, ball_lem.cache, ball_lem.radius, ball_lem.gens,
                        ball_lem.gens_file, ball_lem.max_vertices);
      lb.seed = seed;
      std::optional<HConstants> claimed;
      if (ovr_c0 || ovr_c1 || ovr_c2x2 || ovr_c3) {
        ThinBudget tb;
        tb.geodesic_cap = lb.geodesic_cap;
        tb.seed = seed;
        claimed = estimate_h_constants(b, tb);
        auto put = [](ConstEntry& e, const std::optional<int>& v) {
          if (v) {
            e.value = *v;
            e.note = "supplied";
            e.witness.clear();
          }
        };
        put(claimed->c0, ovr_c0);
        put(claimed->c1, ovr_c1);
        put(claimed->c2, ovr_c2x2);
        put(claimed->c3, ovr_c3);
      }
      LemmaReport r = check_lemma_bounds(b, lb, claimed ? &*claimed : nullptr);
      if (json) {
        std::cout << to_json(r).dump() << "\n";
      } else {
        std::cout << "C0=" << r.constants.c0.value
                  << " C1=" << r.constants.c1.value
                  << " C2_x2=" << r.constants.c2.value
                  << " C3=" << r.constants.c3.value
                  << (r.constants_overridden ? " (supplied)" : "") << "\n";
        for (const LemmaCheck* c :
             {&r.d1, &r.d2, &r.d3, &r.d4, &r.d5, &r.ham_a, &r.ham_b, &r.ham_c}) {
          std::cout << c->name << " measured=" << c->measured;
          if (c->bound >= 0) std::cout << " bound=" << c->bound;
          if (!c->bound_expr.empty()) std::cout << " (" << c->bound_expr << ")";
          std::cout << " instances=" << c->instances << " skipped=" << c->skipped
                    << " violations=" << c->violation_count;
          if (!c->witness.empty()) std::cout << " witness: " << c->witness;
          std::cout << "\n";
          for (const std::string& v : c->violations)
            std::cout << "  violation: " << v << "\n";
        }
        std::cout << "final_d=" << r.final_d << " attained_by=" << r.attained_by
                  << " ok=" << yn(r.ok()) << "\n";
      }
      rc = r.ok() ? 0 : 1;
    } else if (c_gen->parsed()) {
      Pregroup p = make_example(gen_spec);
      if (gen_out.empty())
        std::cout << p.serialize();
      else
        spit(gen_out, p.serialize());
    } else if (c_fuzz->parsed()) {
      bool all_hold = true;
      for (std::size_t i = 0; i < fuzz_count; ++i) {
        std::uint64_t s = seed + i;
        Pregroup p = fuzz_raw ? make_random_raw(s, fuzz_size)
                              : make_random_valid(s, fuzz_size);
        ordered_json verdicts = ordered_json::array();
        bool table_ok = true;
        std::optional<bool> p6_holds, p6p_holds;
        for (Axiom a : p_axioms()) {
          AxiomVerdict v = check_axiom(p, a);
          verdicts.push_back(to_json(v));
          if (a == Axiom::P6) p6_holds = v.holds;
          if (a == Axiom::P6p) p6p_holds = v.holds;
          if (!fuzz_raw && !v.holds && a != Axiom::P6 && a != Axiom::P6p)
            table_ok = false;
        }
        if (!fuzz_raw && p6_holds != p6p_holds) table_ok = false;
        // strategy agreement on random products
        std::size_t strat_fail = 0;
        if (!fuzz_raw) {
          Universe u(p);
          std::mt19937_64 rng(s * 0x9e3779b97f4a7c15ull + 7);
          for (std::size_t k = 0; k < fuzz_products; ++k) {
            std::vector<Elem> f;
            std::size_t len = 1 + rng() % 6;
            for (std::size_t t = 0; t < len; ++t)
              f.push_back(static_cast<Elem>(rng() % static_cast<std::uint64_t>(p.size())));
            Word w = word_of(f);
            Word a = u.reduce(w, Strategy::leftmost);
            Word bw = u.reduce(w, Strategy::rightmost);
            Word c = u.reduce(w, Strategy::random, s + k);
            if (a.size() != bw.size() || a.size() != c.size() ||
                !u.equivalent(a, bw) || !u.equivalent(a, c))
              ++strat_fail;
          }
          if (strat_fail > 0) table_ok = false;
        }
        all_hold = all_hold && table_ok;
        if (json) {
          ordered_json j;
          j["name"] = p.name();
          j["size"] = p.size();
          j["verdicts"] = verdicts;
          if (!fuzz_raw) j["strategy_failures"] = strat_fail;
          j["ok"] = table_ok;
          std::cout << j.dump() << "\n";
        } else {
          std::cout << p.name() << " size=" << p.size()
                    << (fuzz_raw ? "" : table_ok ? " ok" : " FAIL");
          for (const auto& v : verdicts)
            if (!v["holds"].get<bool>())
              std::cout << " " << v["axiom"].get<std::string>() << "=fails";
          std::cout << "\n";
        }
      }
      rc = all_hold ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  std::cerr << "time_ms=" << ms << "\n";
  return rc;
}
