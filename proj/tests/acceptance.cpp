// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Every tolerance and expected value is pinned right here.

#include "pg/axioms.hpp"
#include "pg/ball.hpp"
#include "pg/examples.hpp"
#include "pg/geometry.hpp"
#include "pg/lemmas.hpp"
#include "pg/words.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace pg;

namespace {

constexpr long kScanLimitMs = 1000;       // criterion 1
constexpr long kWordLimitMs = 60'000;     // criterion 3
constexpr long kDeltaLimitMs = 10'000;    // criterion 7
constexpr long kPathsLimitMs = 300'000;   // criterion 8

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome ok(std::string detail) { return {true, std::move(detail)}; }
Outcome bad(std::string detail) { return {false, std::move(detail)}; }

std::string num(long v) { return std::to_string(v); }

const std::vector<Pregroup>& stock_tables() {
  static const std::vector<Pregroup> tables = {
      make_free(1),
      make_free(2),
      make_group("s3", group_s3()),
      make_group("z4", group_cyclic(4)),
      make_amalgam_cyclic(2, 2, 1),
      make_amalgam_cyclic(4, 4, 2),
  };
  return tables;
}

// Shared fixture for criteria 8-10: one universe, one radius-5 ball over
// {a,b}, constants measured once, bound checks run once.
struct GluedFixture {
  Universe u{make_amalgam_cyclic(4, 4, 2)};
  std::optional<Ball> ball;
  std::optional<HConstants> hc;
  std::optional<LemmaReport> rep;
};

GluedFixture& glued() {
  static GluedFixture f;
  if (!f.ball) {
    const Pregroup& p = f.u.pregroup();
    GenSet s = GenSet::of_elements(f.u, {*p.element("a"), *p.element("b")});
    f.ball.emplace(Ball::build(f.u, s, 5));
    f.hc = estimate_h_constants(*f.ball);
  }
  return f;
}

const LemmaReport& glued_report() {
  GluedFixture& f = glued();
  if (!f.rep) f.rep = check_lemma_bounds(*f.ball);
  return *f.rep;
}

// ---------------------------------------------------------------- criterion 1
// Exhaustive base-axiom scans on the six stock tables, then 100 single-entry
// corruptions, every one detected with a witness that replays.
Outcome criterion1() {
  Timer timer;
  const auto& tables = stock_tables();
  for (const Pregroup& p : tables)
    for (Axiom a : p_axioms()) {
      AxiomVerdict v = check_axiom(p, a);
      if (!v.holds)
        return bad(p.name() + " fails " + axiom_name(a) + " on a clean table");
    }

  std::mt19937_64 rng(2024);
  int detected = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Pregroup& base = tables[static_cast<std::size_t>(trial) % tables.size()];
    const int n = base.size();
    std::vector<std::pair<Elem, Elem>> present, absent;
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        (base.defined(x, y) ? present : absent).push_back({x, y});

    const int mode = static_cast<int>(rng() % (absent.empty() ? 2 : 3));
    Pregroup mut = base;
    if (mode == 0) {  // change one defined cell to a different value
      auto [x, y] = present[rng() % present.size()];
      Elem z = base.product(x, y);
      Elem alt = static_cast<Elem>((z + 1 + static_cast<Elem>(rng() % (n - 1))) % n);
      mut = base.with_entry(x, y, alt);
    } else if (mode == 1) {  // erase one defined cell
      auto [x, y] = present[rng() % present.size()];
      mut = base.with_entry(x, y, std::nullopt);
    } else {  // define one absent cell
      auto [x, y] = absent[rng() % absent.size()];
      mut = base.with_entry(x, y, static_cast<Elem>(rng() % n));
    }

    bool caught = false;
    for (Axiom a : p_axioms()) {
      AxiomVerdict v = check_axiom(mut, a);
      if (v.holds) continue;
      if (!verify_witness(mut, a, v.witness))
        return bad("trial " + num(trial) + ": " + axiom_name(a) +
                   " witness does not replay");
      caught = true;
    }
    if (caught) ++detected;
  }
  if (detected != 100)
    return bad("only " + num(detected) + "/100 corruptions detected");
  if (timer.ms() >= kScanLimitMs)
    return bad("took " + num(timer.ms()) + " ms (limit " + num(kScanLimitMs) + ")");
  return ok("6 tables clean, 100/100 corruptions caught with replayable "
            "witnesses in " + num(timer.ms()) + " ms");
}

// ---------------------------------------------------------------- criterion 2
// Two-sided unit sets match the known answers exactly.
Outcome criterion2() {
  Pregroup am = make_amalgam_cyclic(4, 4, 2);
  std::vector<std::string> got;
  for (Elem x : bp(am)) got.push_back(am.label(x));
  if (got != std::vector<std::string>{"1", "a2"})
    return bad("glued amalgam unit set is not {1, a2}");

  Pregroup s3 = make_group("s3", group_s3());
  std::vector<Elem> all(6);
  for (Elem x = 0; x < 6; ++x) all[static_cast<std::size_t>(x)] = x;
  if (bp(s3) != all) return bad("group unit set is not the whole carrier");
  return ok("unit sets match: {1, a2} for the amalgam, all of P for s3");
}

// ---------------------------------------------------------------- criterion 3
// Word problem vs the group table: fold every product of length <= 4 through
// the dense s3 table and compare equality verdicts on all pairs.
Outcome criterion3() {
  Timer timer;
  GroupData g = group_s3();
  Universe u(make_group("s3", group_s3()));

  std::vector<Word> words;
  std::vector<int> oracle;
  for (int len = 1; len <= 4; ++len) {
    std::vector<Elem> f(static_cast<std::size_t>(len), 0);
    while (true) {
      int folded = f[0];
      for (int i = 1; i < len; ++i) folded = g.mul(folded, f[static_cast<std::size_t>(i)]);
      words.push_back(word_of(f));
      oracle.push_back(folded);
      int i = len - 1;
      for (; i >= 0; --i) {
        if (f[static_cast<std::size_t>(i)] < 5) {
          ++f[static_cast<std::size_t>(i)];
          std::fill(f.begin() + i + 1, f.end(), 0);
          break;
        }
      }
      if (i < 0) break;
    }
  }
  if (words.size() != 1554)  // 6 + 36 + 216 + 1296
    return bad("expected 1554 products, got " + num(static_cast<long>(words.size())));

  std::uint64_t pairs = 0, mismatches = 0;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j) {
      ++pairs;
      if (u.equal(words[i], words[j]) != (oracle[i] == oracle[j])) ++mismatches;
    }
  if (mismatches != 0)
    return bad(num(static_cast<long>(mismatches)) + " disagreements with the table oracle");
  if (timer.ms() >= kWordLimitMs)
    return bad("took " + num(timer.ms()) + " ms (limit " + num(kWordLimitMs) + ")");
  return ok(num(static_cast<long>(pairs)) + " pairs agree with the table oracle in " +
            num(timer.ms()) + " ms");
}

// ---------------------------------------------------------------- criterion 4
// Reduction strategies: identical lengths and interleaving-equivalent
// outputs on 10^4 random products per table.
Outcome criterion4() {
  std::uint64_t checked = 0;
  for (std::size_t ti = 0; ti < stock_tables().size(); ++ti) {
    const Pregroup& p = stock_tables()[ti];
    Universe u(p);
    std::mt19937_64 rng(41 + ti);
    for (int trial = 0; trial < 10'000; ++trial) {
      std::vector<Elem> f;
      const int len = 1 + static_cast<int>(rng() % 8);
      for (int i = 0; i < len; ++i)
        f.push_back(static_cast<Elem>(rng() % p.size()));
      Word raw = word_of(f);
      Word l = u.reduce(raw, Strategy::leftmost);
      Word r = u.reduce(raw, Strategy::rightmost);
      Word m = u.reduce(raw, Strategy::random, rng());
      if (l.size() != r.size() || l.size() != m.size())
        return bad(p.name() + " trial " + num(trial) + ": lengths diverge");
      if (!u.equivalent(l, r) || !u.equivalent(l, m))
        return bad(p.name() + " trial " + num(trial) +
                   ": strategy outputs not interleaving-equivalent");
      ++checked;
    }
  }
  return ok(num(static_cast<long>(checked)) + " random products, all strategies agree");
}

// ---------------------------------------------------------------- criterion 5
// The two interleaving scans agree on 1000 seeded random tables that satisfy
// the base axioms.
Outcome criterion5() {
  int with_violation = 0;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    Pregroup p = make_random_valid(seed, 6 + static_cast<int>(seed % 7));
    for (Axiom a : {Axiom::P1, Axiom::P2, Axiom::P3, Axiom::P4, Axiom::P5})
      if (!check_axiom(p, a).holds)
        return bad("seed " + num(static_cast<long>(seed)) + " (" + p.name() +
                   ") fails " + axiom_name(a));
    bool right = scan_p6(p), left = scan_p6_prime(p);
    if (right != left)
      return bad("seed " + num(static_cast<long>(seed)) + " (" + p.name() +
                 "): scans disagree");
    if (!right) ++with_violation;
  }
  return ok("1000 tables, scans agree everywhere (" + num(with_violation) +
            " with interleaving violations)");
}

// ---------------------------------------------------------------- criterion 6
// Reduced-length case split re-derived from the raw table on every element of
// reduced length <= 4 in the glued amalgam, plus the length-law probe.
Outcome criterion6() {
  Pregroup p = make_amalgam_cyclic(4, 4, 2);
  Universe u(p);
  auto two_sided_unit = [&](Elem x) {
    for (Elem z = 0; z < p.size(); ++z)
      if (!p.defined(z, x) || !p.defined(x, z)) return false;
    return true;
  };
  auto elems = u.enumerate_elements(4);
  if (elems.size() != 18)
    return bad("expected 18 elements of reduced length <= 4, got " +
               num(static_cast<long>(elems.size())));
  for (const Word& e : elems) {
    const int expect = e.size() > 1 ? static_cast<int>(e.size())
                                    : (two_sided_unit(e.f[0]) ? 0 : 1);
    if (u.chiswell_length(e) != expect)
      return bad("case split differs on " + u.print_word(e));
  }
  LyndonReport rep = u.lyndon_probe(elems);
  if (!rep.ok())
    return bad(num(static_cast<long>(rep.issues.size())) + " length-law failures");
  return ok("case split matches on all 18 elements; length laws hold over " +
            num(static_cast<long>(rep.pairs)) + " pairs, " +
            num(static_cast<long>(rep.triples)) + " triples");
}

// ---------------------------------------------------------------- criterion 7
// Tree-like balls: both hyperbolicity measurements vanish.
Outcome criterion7() {
  Timer timer;
  Universe f2(make_free(2));
  GenSet s2 = GenSet::of_elements(
      f2, {*f2.pregroup().element("x"), *f2.pregroup().element("y")});
  Ball bf = Ball::build(f2, s2, 4);
  Delta4 d4 = delta_4pt(bf);
  DeltaThin dt = delta_thin(bf);
  if (d4.delta_x4 != 0 || dt.delta != 0)
    return bad("free rank 2: delta_4pt_x4=" + num(d4.delta_x4) +
               " delta_thin=" + num(dt.delta));
  if (!dt.exhaustive || !dt.geodesics_complete)
    return bad("free rank 2: thinness scan was not exhaustive");

  Universe line(make_amalgam_cyclic(2, 2, 1));
  Ball bl = Ball::build(line, GenSet::standard(line), 5);
  Delta4 ld4 = delta_4pt(bl);
  DeltaThin ldt = delta_thin(bl);
  if (ld4.delta_x4 != 0 || ldt.delta != 0)
    return bad("line: delta_4pt_x4=" + num(ld4.delta_x4) +
               " delta_thin=" + num(ldt.delta));
  if (timer.ms() >= kDeltaLimitMs)
    return bad("took " + num(timer.ms()) + " ms (limit " + num(kDeltaLimitMs) + ")");
  return ok("both measurements are 0 on the rank-2 tree (" +
            num(static_cast<long>(bf.size())) + " vertices) and the line, in " +
            num(timer.ms()) + " ms");
}

// ---------------------------------------------------------------- criterion 8
// Every interleaving-equivalent pair of reduced products of length <= 3
// traces paths within Hausdorff distance C0 + 2*C1 (measured constants).
Outcome criterion8() {
  Timer timer;
  GluedFixture& f = glued();
  const Ball& b = *f.ball;
  const int bound = f.hc->c0.value + 2 * f.hc->c1.value;
  const int id1 = b.identity_vertex();

  std::uint64_t pairs = 0, violations = 0;
  int worst = 0;
  for (const Word& e : f.u.enumerate_elements(3)) {
    auto cls = f.u.enumerate_class(e);
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        auto fa = paths_of_product(b, id1, cls[i], 64);
        auto fb = paths_of_product(b, id1, cls[j], 64);
        int h = 0;
        for (const PathInBall& pa : fa)
          for (const PathInBall& pb : fb) h = std::max(h, hausdorff(b, pa, pb));
        worst = std::max(worst, h);
        ++pairs;
        if (h > bound) ++violations;
      }
  }
  if (pairs != 28)  // 4 classes of size 2, 4 classes of size 4
    return bad("expected 28 equivalent pairs, scanned " +
               num(static_cast<long>(pairs)));
  if (violations != 0)
    return bad(num(static_cast<long>(violations)) + " pairs exceed C0+2*C1 = " +
               num(bound));
  if (timer.ms() >= kPathsLimitMs)
    return bad("took " + num(timer.ms()) + " ms (limit " + num(kPathsLimitMs) + ")");

  const LemmaReport& rep = glued_report();
  if (rep.d2.instances != pairs || rep.d2.violation_count != 0)
    return bad("equivalent-pair bound check disagrees with the direct scan");
  return ok("28/28 pairs within C0+2*C1 = " + num(bound) + " (worst " +
            num(worst) + "), both routes, in " + num(timer.ms()) + " ms");
}

// ---------------------------------------------------------------- criterion 9
// Product-path triangles over all factors of length <= 2 are C0+3*C1-thin.
Outcome criterion9() {
  GluedFixture& f = glued();
  const LemmaReport& rep = glued_report();
  const int bound = f.hc->c0.value + 3 * f.hc->c1.value;
  if (rep.d3.bound != bound)
    return bad("triangle bound is " + num(rep.d3.bound) + ", expected C0+3*C1 = " +
               num(bound));
  if (rep.d3.instances + rep.d3.skipped != 100)  // 10 x 10 ordered pairs
    return bad("expected 100 (f, g) pairs, saw " +
               num(static_cast<long>(rep.d3.instances + rep.d3.skipped)));
  if (rep.d3.instances < 90)
    return bad("only " + num(static_cast<long>(rep.d3.instances)) +
               " pairs inside the exact region");
  if (rep.d3.violation_count != 0)
    return bad(num(static_cast<long>(rep.d3.violation_count)) +
               " triangles exceed the bound");
  return ok(num(static_cast<long>(rep.d3.instances)) +
            " triangles, all within C0+3*C1 = " + num(bound) + " (measured " +
            num(rep.d3.measured) + ")");
}

// --------------------------------------------------------------- criterion 10
// The three family conditions: generator families stay within distance 1,
// sampled subpath and triple conditions meet the common constant D, which is
// attained and never exceeded.
Outcome criterion10() {
  const LemmaReport& rep = glued_report();
  if (rep.ham_a.instances != 5)  // identity, a, b, and the two inverses
    return bad("condition (a) scanned " + num(static_cast<long>(rep.ham_a.instances)) +
               " families, expected 5");
  if (rep.ham_a.measured > 1)
    return bad("a generator family has diameter " + num(rep.ham_a.measured));
  if (rep.ham_b.instances != 1000)
    return bad("condition (b) sampled " + num(static_cast<long>(rep.ham_b.instances)) +
               "/1000 instances");
  if (rep.ham_c.instances != 1000)
    return bad("condition (c) sampled " + num(static_cast<long>(rep.ham_c.instances)) +
               "/1000 instances");
  for (const LemmaCheck* c : {&rep.ham_a, &rep.ham_b, &rep.ham_c}) {
    if (c->violation_count != 0)
      return bad("condition (" + c->name + ") reports violations");
    if (c->measured > rep.final_d)
      return bad("condition (" + c->name + ") exceeds D = " + num(rep.final_d));
  }
  const int expect = std::max(
      {rep.ham_a.measured, rep.ham_b.measured, rep.ham_c.measured});
  if (rep.final_d != expect || rep.attained_by.empty())
    return bad("D = " + num(rep.final_d) + " is not the attained maximum");
  return ok("D = " + num(rep.final_d) + " attained by (" + rep.attained_by +
            "); conditions (a) 5/5, (b) 1000/1000, (c) 1000/1000");
}

// --------------------------------------------------------------- criterion 11
// Growing the radius by 2 never changes data that was flagged exact.
Outcome criterion11() {
  struct Case {
    const Pregroup* p;
    bool ab_gens;
    int radius;
  };
  const auto& tables = stock_tables();
  const std::vector<Case> cases = {
      {&tables[0], false, 3}, {&tables[1], false, 2}, {&tables[2], false, 2},
      {&tables[3], false, 2}, {&tables[4], false, 4}, {&tables[5], true, 3},
  };
  long pairs_checked = 0;
  for (const Case& c : cases) {
    Universe u(*c.p);
    GenSet s = c.ab_gens
                   ? GenSet::of_elements(u, {*c.p->element("a"), *c.p->element("b")})
                   : GenSet::standard(u);
    Ball small = Ball::build(u, s, c.radius);
    Ball big = Ball::build(u, s, c.radius + 2);

    std::vector<int> map(static_cast<std::size_t>(small.size()));
    for (int id = 0; id < small.size(); ++id) {
      auto bid = big.find(small.word(id));
      if (!bid) return bad(c.p->name() + ": vertex missing after regrowth");
      if (big.dist0(*bid) != small.dist0(id))
        return bad(c.p->name() + ": dist0 changed for " +
                   u.print_word(small.word(id)));
      map[static_cast<std::size_t>(id)] = *bid;
    }
    for (int i = 0; i < small.size(); ++i)
      for (int j = 0; j < small.size(); ++j) {
        if (!small.exact(i, j)) continue;
        int bi = map[static_cast<std::size_t>(i)], bj = map[static_cast<std::size_t>(j)];
        if (big.dball(bi, bj) != small.dball(i, j) || !big.exact(bi, bj))
          return bad(c.p->name() + ": exact distance changed after regrowth");
        ++pairs_checked;
      }

    HConstants hs = estimate_h_constants(small);
    HConstants hb = estimate_h_constants(big);
    const std::pair<const ConstEntry*, const ConstEntry*> entries[] = {
        {&hs.c0, &hb.c0}, {&hs.c1, &hb.c1}, {&hs.c2, &hb.c2}, {&hs.c3, &hb.c3}};
    for (auto [se, be] : entries)
      if (se->exact && se->value != be->value)
        return bad(c.p->name() + ": an exact constant changed after regrowth");
  }
  return ok("6 tables, " + num(pairs_checked) +
            " exact distances and all exact constants stable under R+2");
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* label;
    Outcome (*fn)();
  };
  const Entry entries[] = {
      {1, "axiom scans and corruption detection", criterion1},
      {2, "two-sided unit sets", criterion2},
      {3, "word problem vs table oracle", criterion3},
      {4, "reduction strategy independence", criterion4},
      {5, "interleaving scan agreement", criterion5},
      {6, "length case split and length laws", criterion6},
      {7, "vanishing deltas on tree-like balls", criterion7},
      {8, "equivalent products trace close paths", criterion8},
      {9, "product-path triangles are thin", criterion9},
      {10, "family conditions meet a common constant", criterion10},
      {11, "exact data stable under ball regrowth", criterion11},
  };
  int failures = 0;
  for (const Entry& e : entries) {
    Outcome out;
    try {
      out = e.fn();
    } catch (const std::exception& ex) {
      out = bad(std::string("exception: ") + ex.what());
    }
    if (!out.pass) ++failures;
    std::printf("criterion %2d (%s): %s — %s\n", e.id, e.label,
                out.pass ? "PASS" : "FAIL", out.detail.c_str());
    std::fflush(stdout);
  }
  if (failures != 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
