#include "pg/examples.hpp"
#include "pg/words.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

using namespace pg;

namespace {

Word w(const Universe& u, const std::string& text) { return u.parse_word(text); }

}  // namespace

TEST_CASE("reduction basics") {
  Universe u(make_amalgam_cyclic(4, 4, 2));
  CHECK(u.print_word(u.reduce(w(u, "a a a a"))) == "1");
  CHECK(u.print_word(u.reduce(w(u, "a a b"))) == "b3");
  CHECK(u.print_word(u.reduce(w(u, "a b a3 a"))) == "a b");
  CHECK(u.is_reduced(w(u, "a b")));
  CHECK_FALSE(u.is_reduced(w(u, "a a")));
  CHECK_THROWS_AS(u.reduce(Word{}), std::invalid_argument);
}

TEST_CASE("strategies agree on length and element") {
  Universe u(make_amalgam_cyclic(4, 4, 2));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick(0, u.pregroup().size() - 1);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Elem> fs;
    int len = 1 + static_cast<int>(rng() % 7);
    for (int i = 0; i < len; ++i) fs.push_back(pick(rng));
    Word raw = word_of(fs);
    Word l = u.reduce(raw, Strategy::leftmost);
    Word r = u.reduce(raw, Strategy::rightmost);
    Word m = u.reduce(raw, Strategy::random, rng());
    CHECK(l.size() == r.size());
    CHECK(l.size() == m.size());
    CHECK(u.equal(l, r));
    CHECK(u.equal(l, m));
    CHECK(u.is_reduced(l));
  }
}

TEST_CASE("multiply and invert") {
  Universe u(make_amalgam_cyclic(4, 4, 2));
  CHECK(u.print_word(u.multiply(w(u, "a"), w(u, "a"))) == "a2");
  CHECK(u.print_word(u.multiply(w(u, "a2"), w(u, "b"))) == "b3");
  Word ab = w(u, "a b");
  CHECK(u.print_word(u.invert(ab)) == "b3 a3");
  CHECK(u.equal(u.multiply(ab, u.invert(ab)), w(u, "1")));
  CHECK(u.is_reduced(u.invert(ab)));
}

TEST_CASE("interleaving equivalence in the amalgam") {
  Universe u(make_amalgam_cyclic(4, 4, 2));
  Word ab = w(u, "a b"), a3b3 = w(u, "a3 b3");
  auto il = u.equivalent(ab, a3b3);
  REQUIRE(il.has_value());
  REQUIRE(il->a.size() == 1);
  CHECK(u.pregroup().label(il->a[0]) == "a2");
  CHECK_FALSE(u.equivalent(ab, w(u, "b a")).has_value());
  CHECK(u.equal(ab, a3b3));
  CHECK_FALSE(u.equal(ab, w(u, "b a")));
  CHECK_THROWS_AS(u.equivalent(w(u, "a a"), ab), std::invalid_argument);
}

TEST_CASE("canonical forms and class enumeration") {
  Universe u(make_amalgam_cyclic(4, 4, 2));
  Word ab = w(u, "a b");
  CHECK(u.canonical(w(u, "a3 b3")) == ab);
  CHECK(u.canonical(ab) == ab);
  auto cls = u.enumerate_class(ab);
  REQUIRE(cls.size() == 2);
  CHECK(u.print_word(cls[0]) == "a b");
  CHECK(u.print_word(cls[1]) == "a3 b3");
  CHECK(std::is_sorted(cls.begin(), cls.end()));

  auto cls3 = u.enumerate_class(w(u, "a b a"));
  CHECK(cls3.size() == 4);
  for (const Word& m : cls3) CHECK(u.equal(m, w(u, "a b a")));
  CHECK_THROWS_AS(u.enumerate_class(w(u, "a b a"), 2), std::runtime_error);
}

TEST_CASE("length functions") {
  Universe u(make_amalgam_cyclic(4, 4, 2));
  CHECK(u.chiswell_length(w(u, "1")) == 0);
  CHECK(u.chiswell_length(w(u, "a2")) == 0);  // a2 is a two-sided unit
  CHECK(u.chiswell_length(w(u, "a")) == 1);
  CHECK(u.chiswell_length(w(u, "a b")) == 2);
  CHECK(u.chiswell_length(w(u, "a b a3")) == 3);
  CHECK(u.tree_length(w(u, "a")) == 2);
  CHECK(u.tree_length(w(u, "a b")) == 4);

  Universe f(make_free(1));
  CHECK(f.tree_length(w(f, "x")) == 2);
  CHECK(f.tree_length(w(f, "x x")) == 4);
  CHECK(f.chiswell_length(w(f, "x x")) == 2);
}

TEST_CASE("element enumeration counts") {
  Universe am(make_amalgam_cyclic(4, 4, 2));
  // every reduced length n >= 2 contributes 4 classes: 4*2^(n-1) alternating
  // words, orbits of size 2^(n-1) under {1,a2} interleaving
  CHECK(am.enumerate_elements(1).size() == 6);
  CHECK(am.enumerate_elements(2).size() == 10);
  CHECK(am.enumerate_elements(3).size() == 14);
  CHECK(am.enumerate_elements(4).size() == 18);
  auto elems = am.enumerate_elements(2);
  CHECK(am.print_word(elems[0]) == "1");
  for (const Word& e : elems) CHECK(am.canonical(e) == e);

  Universe f2(make_free(2));
  CHECK(f2.enumerate_elements(2).size() == 17);
  CHECK(f2.enumerate_elements(4).size() == 161);
  CHECK_THROWS_AS(f2.enumerate_elements(4, 100), std::runtime_error);
}

TEST_CASE("length-law probe passes on the amalgam sample") {
  Universe u(make_amalgam_cyclic(4, 4, 2));
  auto sample = u.enumerate_elements(4);
  LyndonReport rep = u.lyndon_probe(sample);
  CHECK(rep.ok());
  // the probe closes the sample under identity and inversion
  std::set<Word> closure;
  closure.insert(w(u, "1"));
  for (const Word& e : sample) {
    closure.insert(e);
    closure.insert(u.invert(e));
  }
  std::size_t nn = closure.size();
  CHECK(rep.pairs == nn * nn);
  CHECK(rep.triples == nn * nn * nn);
}

TEST_CASE("length-law probe catches the stable-letter defect") {
  Universe u(make_hnn_slice_klein());
  std::vector<Word> sample{w(u, "t"), w(u, "pt"), w(u, "q")};
  LyndonReport rep = u.lyndon_probe(sample);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.issues[0].clause == "c(g,h)>=min(c(g,k),c(k,h))");
  CHECK(rep.issues[0].detail < 0);
}

TEST_CASE("word parsing") {
  Universe u(make_amalgam_cyclic(4, 4, 2));
  CHECK(u.print_word(w(u, "  a   b3 ")) == "a b3");
  CHECK_THROWS_WITH_AS(u.parse_word("a zz"), "unknown element 'zz' in word",
                       ParseError);
  CHECK_THROWS_AS(u.parse_word("   "), ParseError);
}
