#include <doctest.h>

#include <random>

#include "accred/analysis.hpp"
#include "accred/error.hpp"
#include "accred/families.hpp"
#include "accred/protocol.hpp"
#include "oracles.hpp"

using namespace accred;

namespace {

std::shared_ptr<const ProtocolScheme> scheme_of(const BinaryCode& c) {
  return std::make_shared<const ProtocolScheme>(build_scheme(c));
}

CoefficientSet ints(std::initializer_list<long> values) {
  std::vector<Rational> v;
  for (long x : values) v.emplace_back(x);
  return CoefficientSet(v);
}

// Dense y = encode(x) from the layout's encoding rows, independent of the simulator.
std::vector<Rational> encode(const StorageLayout& layout, const std::vector<Rational>& x) {
  std::vector<Rational> y(layout.node_count());
  for (std::size_t i = 0; i < y.size(); ++i) {
    for (const auto& [j, c] : layout.encoding_row(i)) y[i] += c * x[j];
  }
  return y;
}

Rational replay(const AccessPlan& plan, const std::vector<Rational>& y) {
  Rational s = 0;
  for (std::size_t a = 0; a < plan.server_ids.size(); ++a) {
    s += plan.decode_coefficients[a] * y[plan.server_ids[a]];
  }
  return s;
}

std::vector<Rational> random_x(std::mt19937_64& rng, std::size_t k) {
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 50);
  std::vector<Rational> x(k);
  for (auto& v : x) {
    v = Rational(num(rng), den(rng));
    v.canonicalize();
  }
  return x;
}

std::vector<Rational> random_w(std::mt19937_64& rng, const CoefficientSet& a, std::size_t k) {
  std::uniform_int_distribution<std::size_t> pick(0, a.size() - 1);
  std::vector<Rational> w(k);
  for (auto& v : w) v = a[pick(rng)];
  return w;
}

void check_well_formed(const AccessPlan& plan) {
  REQUIRE(plan.server_ids.size() == plan.decode_coefficients.size());
  for (std::size_t a = 0; a < plan.server_ids.size(); ++a) {
    CHECK(sgn(plan.decode_coefficients[a]) != 0);
    if (a > 0) CHECK(plan.server_ids[a - 1] < plan.server_ids[a]);
  }
}

std::vector<int> pm1_of(Word c, std::size_t p) {
  std::vector<int> w(p);
  for (std::size_t i = 0; i < p; ++i) w[i] = coordinate(c, p, i) ? -1 : 1;
  return w;
}

}  // namespace

TEST_CASE("scheme parameters") {
  const auto h = build_scheme(hamming_7_4());
  CHECK(h.parameters().k == 7);
  CHECK(h.parameters().n == 15);
  CHECK(h.parameters().l == 2);
  const auto hs = build_scheme(full_space(5));
  CHECK(hs.parameters().n == 21);
  CHECK(hs.parameters().l == 1);
  const auto one = build_scheme(full_space(1));
  CHECK(one.parameters().k == 1);
  CHECK(one.parameters().n == 2);
  CHECK(one.parameters().l == 1);

  const auto m = h.encoding_matrix();
  REQUIRE(m.size() == 7);
  CHECK(m[0].size() == 15);
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = 0; j < 7; ++j) CHECK(m[i][8 + j] == (i == j ? 1 : 0));
  }
  // coded columns are +-1 images of the hat words, Boolean 0 -> +1
  for (std::size_t j = 0; j < 8; ++j) {
    for (std::size_t i = 0; i < 7; ++i) {
      CHECK(m[i][j] == (coordinate(h.hat.words[j], 7, i) ? -1 : 1));
    }
  }
}

TEST_CASE("layout numbering") {
  const auto s = scheme_of(hamming_7_4());
  const auto layout = StorageLayout::uniform(s, 3);
  CHECK(layout.data_dimension() == 21);
  CHECK(layout.node_count() == 46);
  CHECK(layout.all_ones_node() == 45);
  CHECK(layout.coded_node(1, 0) == 15);
  CHECK(layout.systematic_node(1, 0) == 23);
  CHECK(layout.systematic_node(2, 6) == 44);
  CHECK(layout.encoding_row(23) == std::vector<std::pair<std::size_t, int>>{{7, 1}});
  CHECK(layout.encoding_row(45).size() == 21);
  CHECK(layout.pm1_access_bound() == 6);
  CHECK_THROWS_AS(layout.encoding_row(46), DomainError);

  const auto raw = StorageLayout::uncoded(5);
  CHECK(raw.node_count() == 6);
  CHECK(raw.systematic_node(0, 4) == 4);
}

TEST_CASE("pm1 plans on codewords and near codewords") {
  const auto s = scheme_of(hamming_7_4());
  const auto layout = StorageLayout::uniform(s, 1);
  const Word h0 = s->hat.words[3];
  const auto direct = plan_pm1(layout, pm1_of(h0, 7), 0);
  CHECK(direct.server_ids == std::vector<std::size_t>{3});
  CHECK(direct.decode_coefficients == std::vector<Rational>{1});

  const auto comp = plan_pm1(layout, pm1_of(complement(h0, 7), 7), 0);
  CHECK(comp.server_ids == std::vector<std::size_t>{3});
  CHECK(comp.decode_coefficients == std::vector<Rational>{-1});

  const Word near = h0 ^ (Word{1} << bit_of(7, 2));
  const auto two = plan_pm1(layout, pm1_of(near, 7), 0);
  CHECK(two.access_count() == 2);
  CHECK(two.expected_access == 2);

  const std::vector<int> bad{1, 0, 1, 1, 1, 1, 1};
  CHECK_THROWS_AS(plan_pm1(layout, bad, 0), DomainError);
}

TEST_CASE("pm1 plans are exact and within r+1 per block on every family") {
  std::mt19937_64 rng(31);
  for (Family f : kAllFamilies) {
    for (int i = family_min_index(f); i <= 2; ++i) {
      const auto s = scheme_of(family_code(f, i));
      const auto layout = StorageLayout::uniform(s, 3);
      const std::size_t k = layout.data_dimension();
      std::size_t worst = 0;
      for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> w(k);
        std::uniform_int_distribution<int> bit(0, 1);
        for (auto& v : w) v = bit(rng) ? 1 : -1;
        const auto x = random_x(rng, k);
        const auto plan = plan_pm1(layout, w);
        check_well_formed(plan);
        std::vector<Rational> wq(w.begin(), w.end());
        CHECK(replay(plan, encode(layout, x)) == oracle::dot(wq, x));
        CHECK(plan.access_count() <= plan.expected_access);
        worst = std::max(worst, plan.access_count());
      }
      CHECK(plan_pm1(layout, std::vector<int>(k, 1)).expected_access ==
            3 * static_cast<std::size_t>(s->access_bound));
      CHECK(worst <= 3 * static_cast<std::size_t>(s->access_bound));
    }
  }
}

TEST_CASE("pm1 bound is attained by a covering-radius word") {
  const auto s = scheme_of(family_code(Family::HamAmal, 2));
  const auto layout = StorageLayout::uniform(s, 1);
  const std::size_t p = s->block_length;
  // find a word at distance r from the code
  for (Word v = 0; v <= low_mask(p); ++v) {
    if (hamming_distance(v, s->nearest(v)) == s->covering_radius) {
      CHECK(plan_pm1(layout, pm1_of(v, p)).access_count() ==
            static_cast<std::size_t>(s->access_bound));
      break;
    }
  }
}

TEST_CASE("two-valued plans") {
  const auto s = scheme_of(hamming_7_4());
  const auto layout = StorageLayout::uniform(s, 2);
  std::mt19937_64 rng(32);
  const std::size_t k = layout.data_dimension();

  const auto w = random_w(rng, ints({-1, 1}), k);
  std::vector<int> wi;
  for (const auto& v : w) wi.push_back(static_cast<int>(v.get_num().get_si()));
  const auto pm = plan_pm1(layout, wi);
  const auto two = plan_two_valued(layout, w, Rational(1), Rational(-1));
  CHECK(two.server_ids == pm.server_ids);
  CHECK(two.decode_coefficients == pm.decode_coefficients);

  for (auto [a, b] : {std::pair{1, 0}, std::pair{3, 1}, std::pair{-2, 5}}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const auto wv = random_w(rng, ints({a, b}), k);
      const auto x = random_x(rng, k);
      const auto plan = plan_two_valued(layout, wv, Rational(a), Rational(b));
      check_well_formed(plan);
      CHECK(replay(plan, encode(layout, x)) == oracle::dot(wv, x));
      CHECK(plan.access_count() <= 2 * 2 + 1);
    }
  }
  CHECK_THROWS_WITH_AS(plan_two_valued(layout, w, Rational(1), Rational(1)),
                       "two-valued query needs distinct values", DomainError);
}

TEST_CASE("universal plans over several sets") {
  const auto s = scheme_of(hamming_7_4());
  const auto layout = StorageLayout::uniform(s, 10);
  const std::size_t k = layout.data_dimension();
  REQUIRE(k == 70);
  std::mt19937_64 rng(33);
  for (const auto& a : {ints({-1, 1}), ints({0, 1}), ints({1, 2, 3, 5}), ints({1, 2, 3, 4}),
                        CoefficientSet::parse("1/2,-3,7/3")}) {
    const auto d = decompose(a);
    const std::size_t bound = d.theta() * 2 * 10 + 1;
    for (int trial = 0; trial < 1000; ++trial) {
      const auto w = random_w(rng, a, k);
      const auto x = random_x(rng, k);
      const auto plan = plan_universal(layout, w, d);
      check_well_formed(plan);
      CHECK(plan.expected_access == bound);
      CHECK(plan.access_count() <= bound);
      CHECK(replay(plan, encode(layout, x)) == oracle::dot(w, x));
    }
  }
}

TEST_CASE("universal plan with the +-1 set matches the pm1 plan") {
  const auto s = scheme_of(hamming_7_4());
  const auto layout = StorageLayout::uniform(s, 4);
  const auto d = decompose(ints({-1, 1}));
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    const auto w = random_w(rng, ints({-1, 1}), layout.data_dimension());
    std::vector<int> wi;
    for (const auto& v : w) wi.push_back(static_cast<int>(v.get_num().get_si()));
    const auto u = plan_universal(layout, w, d);
    const auto p = plan_pm1(layout, wi);
    CHECK(u.server_ids == p.server_ids);
    CHECK(u.decode_coefficients == p.decode_coefficients);
  }
}

TEST_CASE("encoding does not depend on the coefficient set") {
  const auto a = build_scheme(hamming_7_4());
  const auto b = build_scheme(hamming_7_4());
  CHECK(a.encoding_matrix() == b.encoding_matrix());
  CHECK(a.hat.words == b.hat.words);
}

TEST_CASE("find_agreement") {
  std::mt19937_64 rng(35);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t theta = 1 + trial % 4;
    const std::size_t k = 1 + trial % 64;
    std::vector<std::vector<int>> levels(theta, std::vector<int>(k));
    for (auto& l : levels) {
      for (auto& v : l) v = bit(rng) ? 1 : -1;
    }
    const auto a = find_agreement(levels);
    REQUIRE(a.signs.size() == theta);
    CHECK(a.positions.size() * (std::size_t{1} << theta) >= k);
    for (std::size_t i = 0; i < theta; ++i) {
      for (std::size_t j : a.positions) CHECK(a.signs[i] * levels[i][j] == 1);
    }
  }
  // all levels equal
  const std::vector<int> same{1, -1, 1, 1, -1};
  const auto eq = find_agreement({same, same, same});
  CHECK(eq.positions.size() == 3);
  // 60% ones
  const auto sixty = find_agreement({{1, 1, 1, -1, -1}});
  CHECK(sixty.signs == std::vector<int>{1});
  CHECK(sixty.positions.size() == 3);
}

TEST_CASE("find_agreement reaches k/4 for two levels of length 64") {
  std::mt19937_64 rng(36);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::vector<int>> levels(2, std::vector<int>(64));
    for (auto& l : levels) {
      for (auto& v : l) v = bit(rng) ? 1 : -1;
    }
    std::size_t best = 0;
    for (int s0 : {-1, 1}) {
      for (int s1 : {-1, 1}) {
        std::size_t c = 0;
        for (std::size_t j = 0; j < 64; ++j) c += levels[0][j] == s0 && levels[1][j] == s1;
        best = std::max(best, c);
      }
    }
    CHECK(best >= 16);
    CHECK(find_agreement(levels).positions.size() >= 16);
  }
}

TEST_CASE("joint trivial plans") {
  const auto raw = StorageLayout::uncoded(16);
  std::mt19937_64 rng(37);
  const auto a = ints({1, 2, 3, 4});
  const auto d = decompose(a);
  REQUIRE(d.theta() == 2);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto w = random_w(rng, a, 16);
    const auto x = random_x(rng, 16);
    const auto plan = plan_joint_trivial(raw, w, d);
    check_well_formed(plan);
    CHECK(plan.expected_access == 13);
    CHECK(plan.access_count() <= 13);
    CHECK(replay(plan, encode(raw, x)) == oracle::dot(w, x));
  }

  const auto d01 = decompose(ints({0, 1}));
  const auto raw9 = StorageLayout::uncoded(9);
  for (int trial = 0; trial < 200; ++trial) {
    const auto w = random_w(rng, ints({0, 1}), 9);
    CHECK(plan_joint_trivial(raw9, w, d01).access_count() <= 9 - 5 + 1);
  }

  const std::vector<Rational> constant(16, Rational(3));
  const auto one = plan_joint_trivial(raw, constant, d);
  CHECK(one.server_ids == std::vector<std::size_t>{16});

  const auto coded = StorageLayout::uniform(scheme_of(hamming_7_4()), 1);
  CHECK_THROWS_AS(plan_joint_trivial(coded, std::vector<Rational>(7, Rational(1)), d), DomainError);
}

TEST_CASE("gcr plans") {
  const auto a = ints({1, 2, 3, 4});
  const auto d = decompose(a);
  std::mt19937_64 rng(38);

  SUBCASE("length-9 code") {
    const BinaryCode c = joint_example_code();
    const int r2 = generalized_covering_radius(c, 2);
    REQUIRE(r2 == 3);
    const auto layout = StorageLayout::uniform(scheme_of(c), 4);
    for (int trial = 0; trial < 500; ++trial) {
      const auto w = random_w(rng, a, 36);
      const auto x = random_x(rng, 36);
      const auto plan = plan_gcr(layout, w, d, r2);
      check_well_formed(plan);
      CHECK(plan.expected_access == 4 * 5 + 1);
      CHECK(plan.access_count() <= 21);
      CHECK(replay(plan, encode(layout, x)) == oracle::dot(w, x));
    }
    const auto s = build_scheme(c);
    const Rational nu = Rational(static_cast<long>(s.nodes_per_block())) / 9;
    const Rational lambda = Rational(r2 + 2) / 9;
    CHECK(nu == Rational(17, 9));
    CHECK(lambda == Rational(5, 9));
  }

  SUBCASE("Hamming code matches separate retrieval") {
    const BinaryCode h = hamming_7_4();
    const int r2 = generalized_covering_radius(h, 2);
    REQUIRE(r2 == 2);
    const auto layout = StorageLayout::uniform(scheme_of(h), 3);
    for (int trial = 0; trial < 300; ++trial) {
      const auto w = random_w(rng, a, 21);
      const auto x = random_x(rng, 21);
      const auto plan = plan_gcr(layout, w, d, r2);
      CHECK(plan.expected_access == plan_universal(layout, w, d).expected_access);
      CHECK(replay(plan, encode(layout, x)) == oracle::dot(w, x));
    }
  }

  SUBCASE("theta one coincides with pm1") {
    const auto pm = decompose(ints({-1, 1}));
    const auto s = scheme_of(family_code(Family::HamAmal, 1));
    const auto layout = StorageLayout::uniform(s, 2);
    for (int trial = 0; trial < 200; ++trial) {
      const auto w = random_w(rng, ints({-1, 1}), layout.data_dimension());
      const auto g = plan_gcr(layout, w, pm, s->covering_radius);
      const auto u = plan_universal(layout, w, pm);
      CHECK(g.server_ids == u.server_ids);
      CHECK(g.decode_coefficients == u.decode_coefficients);
    }
  }
}

TEST_CASE("combining protocols") {
  const auto p = combine_protocols({7, 15, 2}, {5, 21, 1}, 1, 1);
  CHECK(p.redundancy == 3);
  CHECK(p.access == Rational(1, 4));
  const auto same = combine_protocols({7, 15, 2}, {7, 15, 2}, 3, 5);
  CHECK(same.redundancy == Rational(15, 7));
  CHECK(same.access == Rational(2, 7));

  const BlockParameters h{7, 15, 2};
  const BlockParameters hs{5, 21, 1};
  const auto mid = convex_mix(h, hs, Rational(1, 2));
  CHECK(mid.redundancy == (Rational(15, 7) + Rational(21, 5)) / 2);
  CHECK(mid.access == (Rational(2, 7) + Rational(1, 5)) / 2);
  const auto third = convex_mix(h, hs, Rational(1, 3));
  CHECK(third.redundancy == Rational(1, 3) * Rational(15, 7) + Rational(2, 3) * Rational(21, 5));
  CHECK(convex_mix(h, hs, Rational(1)).redundancy == Rational(15, 7));
  CHECK_THROWS_AS(convex_mix(h, hs, Rational(3, 2)), DomainError);
}

TEST_CASE("interleaved layouts realize the combined pair") {
  const auto h = scheme_of(hamming_7_4());
  const auto hs = scheme_of(full_space(5));
  const auto layout = StorageLayout::interleaved(h, hs, 1, 1, 2);
  CHECK(layout.data_dimension() == 24);
  CHECK(layout.node_count() == 2 * (15 + 21) + 1);
  CHECK(layout.pm1_access_bound() == 2 * (2 + 1));
  std::mt19937_64 rng(39);
  const auto a = ints({1, 2, 3, 5});
  const auto d = decompose(a);
  for (int trial = 0; trial < 300; ++trial) {
    const auto w = random_w(rng, a, 24);
    const auto x = random_x(rng, 24);
    const auto plan = plan_universal(layout, w, d);
    CHECK(plan.access_count() <= plan.expected_access);
    CHECK(replay(plan, encode(layout, x)) == oracle::dot(w, x));
  }
}

TEST_CASE("non-systematic HalfSpace") {
  const auto s5 = std::make_shared<const ProtocolScheme>(build_nonsystematic_halfspace(5));
  CHECK(s5->parameters().n == 16);
  CHECK(s5->parameters().l == 1);
  CHECK(Rational(s5->parameters().n) / s5->parameters().k == Rational(16, 5));
  const auto s6 = build_nonsystematic_halfspace(6);
  CHECK(Rational(s6.parameters().n) / s6.parameters().k == Rational(16, 3));
  const auto s1 = build_nonsystematic_halfspace(1);
  CHECK(s1.parameters().n == 1);
  CHECK(s1.parameters().k == 1);

  const auto layout = StorageLayout::uniform(s5, 3);
  std::mt19937_64 rng(40);
  for (int trial = 0; trial < 300; ++trial) {
    const auto w = random_w(rng, ints({-1, 1}), 15);
    std::vector<int> wi;
    for (const auto& v : w) wi.push_back(static_cast<int>(v.get_num().get_si()));
    const auto x = random_x(rng, 15);
    const auto plan = plan_pm1(layout, wi);
    CHECK(plan.access_count() == 3);
    for (std::size_t id : plan.server_ids) CHECK(id < layout.all_ones_node());
    CHECK(replay(plan, encode(layout, x)) == oracle::dot(w, x));
  }
  CHECK_THROWS_AS(layout.systematic_node(0, 0), DomainError);
}

TEST_CASE("constructed instances satisfy the counting bound") {
  for (Family f : kAllFamilies) {
    for (int i = family_min_index(f); i <= 3; ++i) {
      const auto s = build_scheme(family_code(f, i));
      for (long t = 1; t <= 4; ++t) {
        const long k = t * s.parameters().k;
        const long n = t * s.parameters().n + 1;
        const long l = t * s.parameters().l;
        CHECK(check_counting_bound(n, k, l, 2));
        CHECK(oracle::counting_bound(n, k, l, 2));
      }
    }
  }
}
