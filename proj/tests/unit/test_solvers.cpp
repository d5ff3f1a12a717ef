#include <algorithm>

#include "doctest.h"
#include "pcpred/solvers.hpp"
#include "pcpred/testkit.hpp"

using namespace pcpred;

namespace {
constexpr Symbol a = 0, b = 1, c = 2;
constexpr Symbol H = 7;

SearchBound bound(std::size_t steps, std::size_t len, std::size_t cards) {
  SearchBound s;
  s.max_steps = steps;
  s.max_len = len;
  s.max_cards = cards;
  return s;
}
}  // namespace

TEST_CASE("rewrite_successors orders by cut then rule") {
  auto s = rewrite_successors({{{a}, {b}}}, {a, a});
  REQUIRE(s.size() == 2);
  CHECK(s[0] == Successor{{b, a}, 0, 0});
  CHECK(s[1] == Successor{{a, b}, 0, 1});
  auto e = rewrite_successors({{{}, {c}}}, {a});
  REQUIRE(e.size() == 2);
  CHECK(e[0] == Successor{{c, a}, 0, 0});
  CHECK(e[1] == Successor{{a, c}, 0, 1});
  CHECK(rewrite_successors({}, {a, b, c}).empty());
}

TEST_CASE("solve_sr") {
  const SrInstance s{{{{b, c}, {a}}, {{a, a}, {b}}}, {a, b, c}, {b}};
  auto r = solve_sr(s, bound(10, 10, 0));
  REQUIRE(r.found());
  CHECK(r.witness->size() == 2);
  CHECK(check_sr(s, *r.witness));

  auto same = solve_sr(SrInstance{{{{a}, {b}}}, {a, c}, {a, c}}, bound(0, 0, 0));
  REQUIRE(same.found());
  CHECK(same.witness->empty());

  CHECK_FALSE(solve_sr(SrInstance{{{{a}, {a, a}}}, {a}, {b}}, bound(5, 8, 0)).found());
}

TEST_CASE("solve_srh and solve_srh_prime") {
  auto r = solve_srh(SrhInstance{{{{a}, {b}}}, {a, a}, b}, bound(4, 4, 0));
  REQUIRE(r.found());
  CHECK(r.witness->size() == 1);
  auto z = solve_srh(SrhInstance{{}, {a, b}, b}, bound(4, 4, 0));
  REQUIRE(z.found());
  CHECK(z.witness->empty());
  CHECK_FALSE(solve_srh(SrhInstance{{}, {a}, b}, bound(4, 4, 0)).found());

  auto p = solve_srh_prime(SrhPrimeInstance{{{{a}, {b}}}, {a}, {b, c}}, bound(4, 4, 0));
  REQUIRE(p.found());
  CHECK(check_srh_prime(SrhPrimeInstance{{{{a}, {b}}}, {a}, {b, c}}, *p.witness));
  CHECK_FALSE(solve_srh_prime(SrhPrimeInstance{{{{a}, {b}}}, {a}, {}}, bound(4, 4, 0)).found());
}

TEST_CASE("solve_pcp") {
  const PcpInstance p{{{{a}, {}}, {{b}, {a}}, {{}, {b, b}}}};
  auto r = solve_pcp(p, bound(0, 16, 5));
  REQUIRE(r.found());
  CHECK(*r.witness == StackWitness{2, 1, 1, 0, 0});
  CHECK(check_pcp(p, *r.witness));
  CHECK_FALSE(solve_pcp(p, bound(0, 16, 4)).found());

  auto one = solve_pcp(PcpInstance{{{{a, b}, {a, b}}}}, bound(0, 4, 1));
  REQUIRE(one.found());
  CHECK(*one.witness == StackWitness{0});
  CHECK_FALSE(solve_pcp(PcpInstance{{{{a}, {b}}}}, bound(0, 16, 6)).found());
}

TEST_CASE("solve_mpcp") {
  auto e = solve_mpcp(MpcpInstance{{{a}, {a}}, {}}, bound(0, 8, 4));
  REQUIRE(e.found());
  CHECK(e.witness->empty());
  auto r = solve_mpcp(MpcpInstance{{{a}, {a, a}}, {{{a}, {}}}}, bound(0, 8, 4));
  REQUIRE(r.found());
  CHECK(*r.witness == StackWitness{1});
  CHECK_FALSE(solve_mpcp(MpcpInstance{{{a}, {b}}, {}}, bound(0, 8, 4)).found());
}

TEST_CASE("solve_cfp and solve_cfi") {
  auto r = solve_cfp(CfpInstance{{{{a}, {a}}}, H}, bound(0, 0, 3));
  REQUIRE(r.found());
  CHECK(*r.witness == StackWitness{0});
  CHECK_FALSE(solve_cfp(CfpInstance{{{{a, b}, {}}}, H}, bound(0, 0, 3)).found());

  auto i = solve_cfi(CfiInstance{{{{a}, {b}}}, {{{a}, {b}}}, H}, bound(0, 8, 3));
  REQUIRE(i.found());
  CHECK(*i.witness == CfiWitness{{0}, {0}});
}

TEST_CASE("paired_pcp recognises the two-grammar shape") {
  const CfiInstance g{{{{a}, {a, H, b, H}}}, {{{b}, {a, H, b, H}}}, H};
  auto p = paired_pcp(g);
  REQUIRE(p.has_value());
  CHECK(p->cards == std::vector<Card>{{{a}, {b}}});
  CHECK_FALSE(paired_pcp(CfiInstance{{{{a}, {b}}}, {{{a}, {b}}}, H}).has_value());
}

TEST_CASE("every solver witness is accepted by its checker") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    testkit::GenConfig g;
    g.seed = seed;
    g.alphabet_size = 2 + seed % 2;
    const SearchBound sb = bound(5, 6, 5);
    if (auto r = solve_pcp(testkit::gen_pcp(g), sb); r.found()) CHECK(check_pcp(testkit::gen_pcp(g), *r.witness));
    if (auto r = solve_mpcp(testkit::gen_mpcp(g), sb); r.found()) CHECK(check_mpcp(testkit::gen_mpcp(g), *r.witness));
    if (auto r = solve_sr(testkit::gen_srs(g), sb); r.found()) CHECK(check_sr(testkit::gen_srs(g), *r.witness));
    if (auto r = solve_srh(testkit::gen_srh(g), sb); r.found()) CHECK(check_srh(testkit::gen_srh(g), *r.witness));
    if (auto r = solve_srh_prime(testkit::gen_srh_prime(g), sb); r.found())
      CHECK(check_srh_prime(testkit::gen_srh_prime(g), *r.witness));
    const CfpInstance cfp{testkit::gen_pcp(g).cards, H};
    if (auto r = solve_cfp(cfp, bound(0, 0, 4)); r.found()) CHECK(check_cfp(cfp, *r.witness));
    testkit::GenConfig g2 = g;
    g2.seed = seed + 1000;
    const CfiInstance cfi{testkit::gen_pcp(g).cards, testkit::gen_pcp(g2).cards, H};
    if (auto r = solve_cfi(cfi, bound(0, 0, 3)); r.found()) CHECK(check_cfi(cfi, *r.witness));
  }
}

TEST_CASE("a larger bound finds the same witness") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    testkit::GenConfig g;
    g.seed = seed;
    const PcpInstance p = testkit::gen_pcp(g);
    auto small = solve_pcp(p, bound(0, 6, 4));
    auto large = solve_pcp(p, bound(0, 10, 6));
    if (small.found()) {
      REQUIRE(large.found());
      CHECK(*small.witness == *large.witness);
    }
    const SrInstance s = testkit::gen_srs(g);
    auto s1 = solve_sr(s, bound(3, 5, 0));
    auto s2 = solve_sr(s, bound(6, 8, 0));
    if (s1.found()) {
      REQUIRE(s2.found());
      CHECK(*s1.witness == *s2.witness);
    }
  }
}

TEST_CASE("solve_pcp agrees with exhaustive enumeration") {
  int found = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    testkit::GenConfig g;
    g.seed = seed;
    g.max_cards = 4;
    const PcpInstance p = seed % 2 ? testkit::gen_pcp_planted(g).instance : testkit::gen_pcp(g);
    const auto all = testkit::oracle_pcp(p, 5);
    // overhang never exceeds 5 cards of side length 2
    auto r = solve_pcp(p, bound(0, 10, 5));
    CHECK(r.found() == !all.empty());
    if (r.found()) {
      ++found;
      // oracle lists length-then-lex; the solver picks the last of the shortest
      auto last = all.begin();
      for (auto it = all.begin(); it != all.end() && it->size() == all.front().size(); ++it) last = it;
      CHECK(*r.witness == *last);
    }
  }
  CHECK(found > 100);
}

TEST_CASE("planted instances are solved") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    testkit::GenConfig g;
    g.seed = seed;
    g.max_cards = 4;
    auto p = testkit::gen_pcp_planted(g);
    auto r = solve_pcp(p.instance, bound(0, 8, p.plant.size()));
    REQUIRE(r.found());
    CHECK(r.witness->size() <= p.plant.size());
  }
}

TEST_CASE("solve_sr agrees with depth-bounded enumeration") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    testkit::GenConfig g;
    g.seed = seed;
    g.alphabet_size = 2;
    g.max_cards = 2;
    g.max_side_len = 2;
    SrInstance s = testkit::gen_srs(g);
    if (s.from.size() > 3) s.from.resize(3);
    if (s.to.size() > 3) s.to.resize(3);
    auto oracle = testkit::oracle_sr_distance(s, 4, 6);
    auto r = solve_sr(s, bound(4, 6, 0));
    CHECK(r.found() == oracle.has_value());
    if (r.found() && oracle) CHECK(r.witness->size() == *oracle);
  }
}
