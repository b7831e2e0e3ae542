#include "pg/examples.hpp"
#include "pg/pregroup.hpp"

#include "doctest.h"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

using namespace pg;

namespace {

std::vector<std::string> labels_of(const Pregroup& p, const std::vector<Elem>& v) {
  std::vector<std::string> out;
  for (Elem x : v) out.push_back(p.label(x));
  return out;
}

}  // namespace

TEST_CASE("free table has only the forced rows") {
  Pregroup p = make_free(1);
  CHECK(p.name() == "free1");
  CHECK(p.size() == 3);
  // identity row+column (5 distinct cells) plus x*X and X*x
  CHECK(p.table_entries() == 7);
  CHECK(p.defined(*p.element("x"), *p.element("X")));
  CHECK_FALSE(p.defined(*p.element("x"), *p.element("x")));
}

TEST_CASE("group tables are total") {
  Pregroup s3 = make_group("s3", group_s3());
  CHECK(s3.size() == 6);
  CHECK(s3.table_entries() == 36);
  // r * s = rs, s * r = r2s (the flip relation)
  Elem r = *s3.element("r"), s = *s3.element("s");
  CHECK(s3.label(s3.product(r, s)) == "rs");
  CHECK(s3.label(s3.product(s, r)) == "r2s");
}

TEST_CASE("amalgam carrier glues the shared subgroup once") {
  Pregroup p = make_amalgam_cyclic(4, 4, 2);
  CHECK(p.name() == "amalgam_z4_z4_z2");
  REQUIRE(p.size() == 6);
  CHECK(labels_of(p, {0, 1, 2, 3, 4, 5}) ==
        std::vector<std::string>{"1", "a", "a2", "a3", "b", "b3"});
  // a2 is b2: it multiplies both factors
  Elem a2 = *p.element("a2"), b = *p.element("b");
  CHECK(p.label(p.product(a2, b)) == "b3");
  // cross-factor products stay undefined
  CHECK_FALSE(p.defined(*p.element("a"), b));
  CHECK_FALSE(p.defined(b, *p.element("a3")));
}

TEST_CASE("serialize and parse round trip") {
  for (const Pregroup& p :
       {make_free(2), make_amalgam_cyclic(4, 4, 2), make_group("s3", group_s3()),
        make_hnn_slice_klein(), make_random_valid(11, 9)}) {
    Pregroup q = Pregroup::parse(p.serialize());
    CHECK(q == p);
  }
}

TEST_CASE("parse reports the offending line") {
  const char* text =
      "pregroup t\n"
      "elements 1 u v\n"
      "identity 1\n"
      "inv u v\n"
      "mul u w v\n"
      "end\n";
  CHECK_THROWS_WITH_AS(Pregroup::parse(text), "line 5: unknown name 'w'",
                       ParseError);
}

TEST_CASE("parse rejects conflicting entries") {
  const char* text =
      "pregroup t\n"
      "elements 1 u\n"
      "identity 1\n"
      "inv u u\n"
      "mul u u u\n"  // u*u = 1 is forced by the inverse row
      "end\n";
  CHECK_THROWS_AS(Pregroup::parse(text), ParseError);
}

TEST_CASE("parse rejects a broken involution") {
  const char* text =
      "pregroup t\n"
      "elements 1 u v w\n"
      "identity 1\n"
      "inv u v\n"
      "inv v w\n"
      "end\n";
  CHECK_THROWS_AS(Pregroup::parse(text), ParseError);
}

TEST_CASE("with_entry injects exactly one cell") {
  Pregroup p = make_amalgam_cyclic(4, 4, 2);
  Elem a = *p.element("a"), b = *p.element("b");
  Pregroup q = p.with_entry(a, b, *p.element("a2"));
  CHECK(q.table_entries() == p.table_entries() + 1);
  CHECK(q.defined(a, b));
  Pregroup r = p.with_entry(a, *p.element("a"), std::nullopt);
  CHECK(r.table_entries() == p.table_entries() - 1);
  CHECK_FALSE(r.defined(a, a));
}

TEST_CASE("permuted keeps the abstract table") {
  Pregroup p = make_amalgam_cyclic(4, 4, 2);
  std::vector<int> order{3, 5, 0, 2, 4, 1};
  Pregroup q = p.permuted(order);
  CHECK(q.size() == p.size());
  CHECK(q.identity() == 2);  // old 0 moved to position 2
  // products agree after relabeling
  for (Elem x = 0; x < p.size(); ++x)
    for (Elem y = 0; y < p.size(); ++y) {
      Elem qx = *q.element(p.label(x)), qy = *q.element(p.label(y));
      auto zp = p.try_product(x, y);
      auto zq = q.try_product(qx, qy);
      REQUIRE(zp.has_value() == zq.has_value());
      if (zp) CHECK(q.label(*zq) == p.label(*zp));
    }
  CHECK(bp(q).size() == bp(p).size());
}

TEST_CASE("bp finds the two-sided units") {
  Pregroup am = make_amalgam_cyclic(4, 4, 2);
  CHECK(labels_of(am, bp(am)) == std::vector<std::string>{"1", "a2"});

  Pregroup s3 = make_group("s3", group_s3());
  CHECK(bp(s3).size() == 6);

  Pregroup f2 = make_free(2);
  CHECK(labels_of(f2, bp(f2)) == std::vector<std::string>{"1"});

  Pregroup hnn = make_hnn_slice_klein();
  CHECK(labels_of(hnn, bp(hnn)) == std::vector<std::string>{"1", "p"});
}

TEST_CASE("left sets order the carrier") {
  Pregroup p = make_amalgam_cyclic(4, 4, 2);
  CHECK(labels_of(p, left_set(p, *p.element("a"))) ==
        std::vector<std::string>{"1", "a", "a2", "a3"});
  CHECK(labels_of(p, left_set(p, *p.element("b"))) ==
        std::vector<std::string>{"1", "a2", "b", "b3"});
  CHECK(left_set(p, *p.element("a2")).size() == 6);
}

TEST_CASE("interleaving axiom scan on clean tables") {
  for (const Pregroup& p :
       {make_free(2), make_amalgam_cyclic(4, 4, 2), make_group("s3", group_s3()),
        make_amalgam_cyclic(2, 2, 1)}) {
    CAPTURE(p.name());
    CHECK(scan_p6(p));
    CHECK(scan_p6_prime(p));
  }
}

TEST_CASE("interleaving axiom fails on the stable-letter slice") {
  Pregroup p = make_hnn_slice_klein();
  std::array<Elem, 3> w{};
  REQUIRE_FALSE(scan_p6(p, &w));
  // first witness in scan order: T * pt undefined, T*q and q^-1*pt defined
  CHECK(labels_of(p, {w[0], w[1], w[2]}) ==
        std::vector<std::string>{"T", "q", "pt"});
  CHECK_FALSE(p.defined(w[0], w[2]));
  CHECK(p.defined(w[0], w[1]));
  CHECK(p.defined(p.inverse(w[1]), w[2]));

  std::array<Elem, 3> wp{};
  REQUIRE_FALSE(scan_p6_prime(p, &wp));
  CHECK(labels_of(p, {wp[0], wp[1], wp[2]}) ==
        std::vector<std::string>{"qt", "T", "pt"});
  CHECK_FALSE(p.defined(wp[1], wp[2]));
  REQUIRE(p.defined(wp[0], wp[1]));
  Elem ax = p.product(wp[0], wp[1]);
  CHECK(p.label(ax) == "q");
  CHECK(p.defined(ax, wp[2]));
}
