#include "pg/axioms.hpp"
#include "pg/examples.hpp"

#include "doctest.h"

#include <cstdint>
#include <string>
#include <vector>

using namespace pg;

namespace {

std::vector<std::string> all_labels(const Pregroup& p) {
  std::vector<std::string> out;
  for (Elem x = 0; x < p.size(); ++x) out.push_back(p.label(x));
  return out;
}

}  // namespace

TEST_CASE("cyclic group data") {
  GroupData z4 = group_cyclic(4);
  CHECK(z4.labels == std::vector<std::string>{"1", "a", "a2", "a3"});
  CHECK(z4.mul(1, 3) == 0);
  CHECK(z4.mul(2, 3) == 1);
  GroupData z3c = group_cyclic(3, 'c');
  CHECK(z3c.labels == std::vector<std::string>{"1", "c", "c2"});
}

TEST_CASE("klein four and s3 data") {
  GroupData k = group_klein4();
  CHECK(k.labels == std::vector<std::string>{"1", "p", "q", "pq"});
  CHECK(k.mul(1, 2) == 3);
  CHECK(k.mul(3, 3) == 0);
  GroupData s3 = group_s3();
  CHECK(s3.labels == std::vector<std::string>{"1", "r", "r2", "s", "rs", "r2s"});
  // sr = r^2 s, non-abelian
  CHECK(s3.mul(3, 1) != s3.mul(1, 3));
}

TEST_CASE("free pregroup labels") {
  CHECK(all_labels(make_free(1)) == std::vector<std::string>{"1", "x", "X"});
  CHECK(all_labels(make_free(2)) ==
        std::vector<std::string>{"1", "x", "X", "y", "Y"});
  CHECK(make_free(2).name() == "free2");
  Pregroup f5 = make_free(5);
  CHECK(f5.size() == 11);
  CHECK(f5.element("x1").has_value());
}

TEST_CASE("hnn slice over the klein group") {
  Pregroup p = make_hnn_slice_klein();
  CHECK(p.name() == "hnn_slice_klein");
  CHECK(all_labels(p) == std::vector<std::string>{"1", "p", "q", "pq", "t", "pt",
                                                  "qt", "pqt", "T", "Tp", "Tq",
                                                  "Tpq"});
  // pt * T = p, T * pt undefined (p lands outside B)
  Elem pt = *p.element("pt"), T = *p.element("T");
  CHECK(p.label(p.product(pt, T)) == "p");
  CHECK_FALSE(p.defined(T, pt));
  // t * T = 1 and T * t = 1
  CHECK(p.product(*p.element("t"), T) == p.identity());
  CHECK(p.product(T, *p.element("t")) == p.identity());
}

TEST_CASE("amalgam embedding mismatch is rejected") {
  // gluing all of Z4 to all of Klein4 positionally is not an isomorphism
  CHECK_THROWS_WITH_AS(make_amalgam("bad", group_cyclic(4), group_klein4(),
                                    {0, 1, 2, 3}, {0, 1, 2, 3}),
                       doctest::Contains("amalgam embedding mismatch"),
                       ParseError);
  // {1, a} is not closed in Z4
  CHECK_THROWS_AS(
      make_amalgam("bad2", group_cyclic(4), group_cyclic(4), {0, 1}, {0, 1}),
      ParseError);
}

TEST_CASE("dispatcher forms") {
  CHECK(make_example({"free", "2"}) == make_free(2));
  CHECK(make_example({"group", "s3"}) == make_group("s3", group_s3()));
  CHECK(make_example({"group", "klein4"}) == make_group("klein4", group_klein4()));
  CHECK(make_example({"group", "z", "4"}) == make_group("z4", group_cyclic(4)));
  CHECK(make_example({"amalgam", "4", "4", "2"}) == make_amalgam_cyclic(4, 4, 2));
  CHECK(make_example({"hnn-slice"}) == make_hnn_slice_klein());
  CHECK(make_example({"random", "7", "12"}) == make_random_valid(7, 12));
  CHECK(make_example({"random", "7", "12", "raw"}) == make_random_raw(7, 12));
  CHECK_THROWS_AS(make_example({"nope"}), ParseError);
  CHECK_THROWS_AS(make_example({"free"}), ParseError);
}

TEST_CASE("seeded generators are deterministic") {
  for (std::uint64_t seed : {1ull, 2ull, 99ull}) {
    CHECK(make_random_valid(seed, 10) == make_random_valid(seed, 10));
    CHECK(make_random_raw(seed, 10) == make_random_raw(seed, 10));
  }
  CHECK_FALSE(make_random_valid(3, 10) == make_random_valid(4, 10));
}

TEST_CASE("random valid tables satisfy the base axioms") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Pregroup p = make_random_valid(seed, 8 + static_cast<int>(seed % 5));
    CAPTURE(seed);
    CAPTURE(p.name());
    for (Axiom a : {Axiom::P1, Axiom::P2, Axiom::P3, Axiom::P4, Axiom::P5}) {
      AxiomVerdict v = check_axiom(p, a);
      CHECK(v.holds);
    }
    // the two interleaving scans always agree, even when they fail
    CHECK(scan_p6(p) == scan_p6_prime(p));
  }
}
