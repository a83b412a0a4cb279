#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "morse_orbit/error.hpp"
#include "morse_orbit/group.hpp"
#include "support.hpp"

using namespace morse_orbit;
using namespace test_support;

TEST_CASE("permutation products act on the right") {
  auto a = perm(3, {{0, 1}});
  auto b = perm(3, {{1, 2}});
  // a then b: 0 -> 1 -> 2
  CHECK((a * b)(0) == 2);
  CHECK((a * b).to_cycle_string() == "(0 2 1)");
  CHECK((a * a.inverse()).is_identity());
  CHECK(Permutation::identity(4).to_cycle_string() == "()");
}

TEST_CASE("from_cycles rejects bad input") {
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 3}}), Error);
  CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
}

TEST_CASE("group orders match closure by brute force") {
  for (const char* spec : {"Sym(3)", "Sym(4)", "Sym(5)", "Alt(4)", "Alt(5)", "Dih(8)", "Dih(10)", "Q8", "SL(2,3)",
                           "Cyc(6)", "Cyc(2)xCyc(2)", "Sym(3)xCyc(3)", "gens:[(0 1)(2 3);(0 2)(1 3)]"}) {
    CAPTURE(spec);
    auto g = make_group(spec);
    CHECK(g->order() == oracle_group(spec).size());
  }
  CHECK(make_group("Sym(4)")->order() == 24);
  CHECK(make_group("Cyc(5)")->order() == 5);
  CHECK(make_group("gens:[(0 1)(2 3);(0 2)(1 3)]")->order() == 4);
}

TEST_CASE("identity first and tables agree with permutation arithmetic") {
  for (const char* spec : {"Sym(4)", "SL(2,3)", "Sym(7)"}) {
    CAPTURE(spec);
    auto g = make_group(spec);
    REQUIRE(g->element(0).is_identity());
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(g->order() - 1));
    for (int k = 0; k < 200; ++k) {
      Element a = pick(rng), b = pick(rng);
      CHECK(g->element(g->mul(a, b)) == g->element(a) * g->element(b));
      CHECK(g->element(g->inv(a)) == g->element(a).inverse());
      CHECK(g->element(g->conj(a, b)) == g->element(b).inverse() * g->element(a) * g->element(b));
    }
  }
}

TEST_CASE("element orders") {
  auto g = make_group("Sym(4)");
  std::map<std::size_t, int> histogram;
  for (Element e = 0; e < g->order(); ++e) ++histogram[g->element_order(e)];
  CHECK(histogram == std::map<std::size_t, int>{{1, 1}, {2, 9}, {3, 8}, {4, 6}});
}

TEST_CASE("group construction errors") {
  std::vector<Permutation> mixed{perm(3, {{0, 1}}), perm(4, {{0, 1}})};
  CHECK_THROWS_AS(generate_group(mixed), Error);
  try {
    generate_group(mixed);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeMismatch);
  }
  try {
    parse_group_spec("Sym(8)");
    FAIL("expected MaxOrderExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MaxOrderExceeded);
  }
  CHECK(parse_group_spec("Sym(8)", 50000).order() == 40320);
  auto g = make_group("Alt(4)");
  try {
    g->index_of(perm(4, {{0, 1}}));
    FAIL("expected NotAnElement");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAnElement);
  }
}

TEST_CASE("normalizers agree with the oracle") {
  auto g = make_group("Sym(4)");
  auto og = oracle_group("Sym(4)");
  for (const auto& gens : std::vector<std::vector<Permutation>>{
           {perm(4, {{0, 1}})},
           {perm(4, {{0, 1}, {2, 3}})},
           {perm(4, {{0, 1}}), perm(4, {{2, 3}})},
           {perm(4, {{0, 1, 2, 3}})},
           {perm(4, {{0, 1, 2}})}}) {
    auto h = generated(*g, gens);
    std::vector<Subgroup> chain{h};
    auto n = normalizer_of_chain(*g, chain);
    CHECK(to_oracle(*g, n) == oracle::normalizer(og, {to_oracle(*g, h)}));
  }
  CHECK(normalizer_of_chain(*g, {}).order() == 24);
}

TEST_CASE("conjugate_subgroup and normalizes") {
  auto g = make_group("Sym(4)");
  auto og = oracle_group("Sym(4)");
  auto h = generated(*g, {perm(4, {{0, 1}}), perm(4, {{2, 3}})});
  for (Element x = 0; x < g->order(); ++x) {
    auto c = conjugate_subgroup(*g, h, x);
    CHECK(to_oracle(*g, c) == oracle::conjugate(to_oracle(*g, h), g->element(x).images()));
    CHECK(normalizes(*g, x, h) == (c == h));
  }
}

TEST_CASE("product_subgroup and intersection") {
  auto g = make_group("Sym(4)");
  auto q = generated(*g, {perm(4, {{0, 1}})});
  auto p = generated(*g, {perm(4, {{2, 3}})});
  auto qp = product_subgroup(*g, q, p);
  CHECK(qp.order() == 4);
  CHECK(to_oracle(*g, qp) == oracle::product(to_oracle(*g, q), to_oracle(*g, p)));
  CHECK(intersection(q, p, g->order()).is_trivial());
  CHECK(intersection(qp, q, g->order()) == q);
}

TEST_CASE("number theory helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(p_part(24, 2) == 8);
  CHECK(p_part(24, 3) == 3);
  CHECK(p_part(24, 5) == 1);
  CHECK(is_p_power(1, 3));
  CHECK(is_p_power(27, 3));
  CHECK_FALSE(is_p_power(12, 2));
  CHECK(log_p(8, 2) == 3);
}

TEST_CASE("Sylow subgroups have the full p-part") {
  for (const auto& c : suite()) {
    CAPTURE(c.group);
    CAPTURE(c.prime);
    auto g = make_group(c.group);
    auto whole = Subgroup::whole(*g);
    auto s = sylow_subgroup(*g, whole, c.prime);
    CHECK(s.order() == oracle::p_part(g->order(), c.prime));
    CHECK(is_sylow_in(s, whole, c.prime));
    std::mt19937_64 rng(11);
    for (int k = 0; k < 5; ++k) {
      auto r = sylow_subgroup(*g, whole, c.prime, &rng);
      CHECK(r.order() == s.order());
    }
  }
}

TEST_CASE("random Sylow search reaches every Sylow subgroup") {
  // Sym(4) has 3 Sylow 2-subgroups and 4 Sylow 3-subgroups.
  auto g = make_group("Sym(4)");
  auto og = oracle_group("Sym(4)");
  std::mt19937_64 rng(3);
  for (auto [p, expected] : {std::pair{2u, 3u}, std::pair{3u, 4u}}) {
    std::set<Subgroup> seen;
    for (int k = 0; k < 200; ++k) seen.insert(sylow_subgroup(*g, Subgroup::whole(*g), p, &rng));
    std::size_t oracle_count = 0;
    for (const auto& h : oracle::nontrivial_p_subgroups(og, p))
      if (h.size() == oracle::p_part(24, p)) ++oracle_count;
    CHECK(oracle_count == expected);
    CHECK(seen.size() == expected);
  }
}

TEST_CASE("Sylow inside a proper subgroup") {
  auto g = make_group("Sym(4)");
  auto h = generated(*g, {perm(4, {{0, 1, 2}}), perm(4, {{0, 1}})});  // Sym(3) on 0..2
  auto s = sylow_subgroup(*g, h, 2);
  CHECK(s.order() == 2);
  CHECK(s.is_subset_of(h));
  auto outside = generated(*g, {perm(4, {{2, 3}})});
  try {
    is_sylow_in(outside, h, 2);
    FAIL("expected NotASubgroup");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotASubgroup);
  }
}

TEST_CASE("generating sets regenerate the subgroup") {
  auto g = make_group("Sym(4)");
  auto og = oracle_group("Sym(4)");
  for (const auto& h : oracle::all_subgroups(og)) {
    std::vector<Element> ids;
    for (const auto& x : h) ids.push_back(g->index_of(Permutation(x)));
    auto gens = generating_set(*g, subgroup_closure(*g, ids));
    CHECK(to_oracle(*g, subgroup_closure(*g, gens)) == h);
  }
  CHECK(oracle::all_subgroups(og).size() == 30);
}

TEST_CASE("describe_subgroup") {
  auto g = make_group("Sym(4)");
  CHECK(describe_subgroup(*g, generated(*g, {perm(4, {{0, 1}})})) == "<(0 1)>");
  CHECK(describe_subgroup(*g, Subgroup::trivial(*g)) == "<()>");
}
