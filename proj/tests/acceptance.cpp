#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "accred/analysis.hpp"
#include "accred/cli.hpp"
#include "accred/codes.hpp"
#include "accred/complexity.hpp"
#include "accred/families.hpp"
#include "accred/simulator.hpp"
#include "oracles.hpp"

using namespace accred;

namespace {

struct Instance {
  long n;
  long k;
  long l;
  long alphabet;
};

std::vector<Instance> g_instances;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

CoefficientSet ints(std::initializer_list<long> values) {
  std::vector<Rational> v;
  for (long x : values) v.emplace_back(x);
  return CoefficientSet(v);
}

Rational random_rational(std::mt19937_64& rng, long num_range, long den_range) {
  std::uniform_int_distribution<long> num(-num_range, num_range);
  std::uniform_int_distribution<long> den(1, den_range);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

std::vector<Rational> random_distinct(std::mt19937_64& rng, std::size_t m) {
  std::vector<Rational> v;
  while (v.size() < m) {
    const Rational q = random_rational(rng, 1000000, 1000);
    if (std::find(v.begin(), v.end(), q) == v.end()) v.push_back(q);
  }
  return v;
}

std::vector<Rational> random_w(std::mt19937_64& rng, const CoefficientSet& a, std::size_t k) {
  std::uniform_int_distribution<std::size_t> pick(0, a.size() - 1);
  std::vector<Rational> w(k);
  for (auto& v : w) v = a[pick(rng)];
  return w;
}

// "0.4" -> 40, "3.0" -> 300, "1" -> 100
long hundredths(const std::string& s) {
  const auto dot = s.find('.');
  long whole = std::stol(s.substr(0, dot));
  std::string frac = dot == std::string::npos ? "" : s.substr(dot + 1);
  frac.resize(2, '0');
  return whole * 100 + std::stol(frac);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

void record_scheme(const ProtocolScheme& s, long t, long alphabet = 2) {
  const auto p = s.parameters();
  g_instances.push_back({t * p.n + 1, t * p.k, t * p.l + 1, alphabet});
}

Outcome table_reproduction() {
  struct Row {
    const char* label;
    const char* nu;
    const char* lambda;
  };
  const std::vector<Row> published{
      {"Trivial", "1", "0.5"},          {"PiecewiseAmal_9", "1.17", "0.48"},
      {"PiecewiseAmal_7", "1.21", "0.47"}, {"NonlinAmal_9", "1.25", "0.46"},
      {"NonlinAmal_8", "1.27", "0.45"}, {"HamAmal_9", "1.32", "0.44"},
      {"HamAmal_8", "1.35", "0.43"},    {"HamAmal_6", "1.42", "0.42"},
      {"HamAmal_5", "1.47", "0.41"},    {"HamAmal_4", "1.53", "0.4"},
      {"HamAmal_3", "1.62", "0.38"},    {"HamAmal_2", "1.73", "0.36"},
      {"HamAmal_1", "1.89", "0.33"},    {"HamExp_0", "2.14", "0.29"},
      {"HamExp_1", "3.0", "0.25"},      {"HalfSpace_5", "4.2", "0.2"},
      {"HalfSpace_6", "6.33", "0.17"},
  };
  Outcome o;
  const char* argv[] = {"accred", "analysis", "table", "--cap", "10"};
  std::ostringstream out;
  std::ostringstream err;
  o.require(dispatch(5, argv, out, err) == 0, "command failed: " + err.str());
  std::stringstream csv(out.str());
  std::string line;
  std::getline(csv, line);
  std::vector<std::vector<std::string>> rows;
  while (std::getline(csv, line)) rows.push_back(split(line, ','));
  o.require(rows.size() == published.size(),
            "row count " + std::to_string(rows.size()) + " != " + std::to_string(published.size()));
  for (std::size_t i = 0; o.ok && i < rows.size(); ++i) {
    const auto& r = rows[i];
    const auto& e = published[i];
    o.require(r.size() == 5 && r[0] == e.label && hundredths(r[1]) == hundredths(e.nu) &&
                  hundredths(r[2]) == hundredths(e.lambda),
              "row " + std::to_string(i) + " got " + line + " expected " + e.label + " " + e.nu +
                  "/" + e.lambda);
  }
  for (const auto& r : rows) {
    if (r.size() < 5 || r[3] == "Trivial") continue;
    const Family f = parse_family(r[3]);
    const long p = family_length(f, std::stoi(r[4]));
    const long hat = family_hat_size(f, std::stoi(r[4]));
    const long radius = family_radius(f, std::stoi(r[4]));
    g_instances.push_back({hat + p + 1, p, radius + 2, 2});
  }
  return o;
}

Outcome covering_radii() {
  Outcome o;
  const BinaryCode h = hamming_7_4();
  o.require(covering_radius(h) == 1, "Hamming radius");
  std::vector<std::string> words;
  for (Word w : h.words()) {
    std::string s;
    for (std::size_t i = 0; i < h.length(); ++i) s += coordinate(w, h.length(), i) ? '1' : '0';
    words.push_back(s);
  }
  o.require(oracle::covering_radius(words) == 1, "Hamming radius (string oracle)");
  record_scheme(build_scheme(h), 1);
  for (Family f : {Family::HamAmal, Family::NonlinAmal, Family::PiecewiseAmal}) {
    for (int i = 0; i <= 3; ++i) {
      const BinaryCode c = family_code(f, i);
      o.require(covering_radius(c) == 1 + i,
                std::string(family_name(f)) + "_" + std::to_string(i) + " radius");
      record_scheme(build_scheme(c), 1);
    }
  }
  for (int i = 0; i <= 5; ++i) {
    const BinaryCode c = family_code(Family::HamExp, i);
    o.require(covering_radius(c) == 1, "HamExp_" + std::to_string(i) + " radius");
    record_scheme(build_scheme(c), 1);
  }
  return o;
}

Outcome generalized_radius() {
  Outcome o;
  const BinaryCode c = joint_example_code();
  const int r2 = generalized_covering_radius(c, 2);
  o.require(r2 == 3, "length-9 R2 = " + std::to_string(r2));
  const auto s = build_scheme(c);
  const Rational nu = Rational(static_cast<long>(s.nodes_per_block())) / 9;
  const Rational lambda = Rational(r2 + 2) / 9;
  o.require(nu == Rational(17, 9) && lambda == Rational(5, 9),
            "pair " + to_string(nu) + ", " + to_string(lambda));
  o.require(static_cast<long>(std::floor(to_double(nu) * 100)) == 188 &&
                static_cast<long>(std::floor(to_double(lambda) * 100)) == 55,
            "two-decimal pair");
  const int h2 = generalized_covering_radius(hamming_7_4(), 2);
  o.require(h2 == 2, "Hamming R2 = " + std::to_string(h2));
  g_instances.push_back({17 + 1, 9, r2 + 2 + 1, 4});
  return o;
}

Outcome complexity_values() {
  Outcome o;
  o.require(complexity(ints({1, 2, 3, 4})) == 2, "C({1,2,3,4})");
  o.require(complexity(ints({1, 2, 3, 5})) == 3, "C({1,2,3,5})");
  int subsets = 0;
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (std::popcount(mask) != 4) continue;
    std::vector<Rational> v;
    for (long j = 0; j < 8; ++j) {
      if (mask & (1u << j)) v.emplace_back(j);
    }
    const CoefficientSet a(v);
    o.require(complexity(a) == oracle::small_set_complexity(a.values()),
              "four-subset mask " + std::to_string(mask));
    ++subsets;
  }
  o.require(subsets == 70, "subset count");
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    o.require(complexity(CoefficientSet(random_distinct(rng, 3))) == 2, "random size-3 set");
  }
  for (long m = 5; m <= 8; ++m) {
    const Rational start = random_rational(rng, 1000, 100);
    Rational step = random_rational(rng, 1000, 100);
    if (sgn(step) == 0) step = 1;
    std::vector<Rational> v;
    for (long j = 0; j < m; ++j) v.push_back(start + step * j);
    o.require(complexity(CoefficientSet(v), ComplexityLimits{8}) == 3,
              "progression of size " + std::to_string(m));
  }
  return o;
}

Outcome end_to_end() {
  Outcome o;
  const auto scheme = std::make_shared<const ProtocolScheme>(build_scheme(hamming_7_4()));
  const auto layout = std::make_shared<const StorageLayout>(StorageLayout::uniform(scheme, 10));
  std::mt19937_64 rng(5);
  for (const auto& a : {ints({-1, 1}), ints({0, 1}), ints({1, 2, 3, 5})}) {
    const auto d = decompose(a);
    const std::size_t bound = static_cast<std::size_t>(complexity(a)) * 2 * 10 + 1;
    std::size_t worst = 0;
    for (int trial = 0; trial < 1000 && o.ok; ++trial) {
      std::vector<Rational> x(70);
      for (auto& v : x) v = random_rational(rng, 1000000, 1000);
      const auto w = random_w(rng, a, 70);
      const auto plan = plan_universal(*layout, w, d);

      StorageInstance<Rational> exact(layout, x);
      const auto re = verify_query(exact, w, plan);
      o.require(re.value == oracle::dot(w, x), "exact value mismatch");

      std::vector<double> xf;
      for (const auto& v : x) xf.push_back(to_double(v));
      StorageInstance<double> fl(layout, xf);
      const double got = fl.execute(plan);
      const double truth = to_double(oracle::dot(w, x));
      o.require(std::fabs(got - truth) <= 1e-9 * std::max(1.0, std::fabs(truth)),
                "float value outside 1e-9");
      o.require(re.access_count <= bound, "access " + std::to_string(re.access_count) + " > " +
                                              std::to_string(bound));
      worst = std::max(worst, re.access_count);
    }
    g_instances.push_back({151, 70, static_cast<long>(bound), static_cast<long>(a.size())});
    g_instances.push_back({151, 70, static_cast<long>(worst), static_cast<long>(a.size())});
  }
  return o;
}

Outcome joint_computation() {
  Outcome o;
  const auto raw = std::make_shared<const StorageLayout>(StorageLayout::uncoded(16));
  const auto a = ints({1, 2, 3, 4});
  const auto d = decompose(a);
  o.require(d.theta() == 2, "theta");
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 1000 && o.ok; ++trial) {
    std::vector<Rational> x(16);
    for (auto& v : x) v = random_rational(rng, 1000000, 1000);
    const auto w = random_w(rng, a, 16);
    StorageInstance<Rational> inst(raw, x);
    const auto report = verify_query(inst, w, plan_joint_trivial(*raw, w, d));
    o.require(report.ok && report.value == oracle::dot(w, x), "joint value");
    o.require(report.access_count <= 13, "access " + std::to_string(report.access_count));
    const auto agreement = find_agreement(split_weights(w, d).levels);
    o.require(agreement.positions.size() * 4 >= 16,
              "|B| = " + std::to_string(agreement.positions.size()));
  }
  g_instances.push_back({17, 16, 13, 4});
  return o;
}

Outcome counting_bound() {
  Outcome o;
  for (const auto& in : g_instances) {
    o.require(check_counting_bound(in.n, in.k, in.l, in.alphabet),
              "(" + std::to_string(in.n) + "," + std::to_string(in.k) + "," +
                  std::to_string(in.l) + "," + std::to_string(in.alphabet) + ")");
  }
  o.require(!check_counting_bound(4, 4, 1, 2), "negative control accepted");
  if (o.ok) o.detail = std::to_string(g_instances.size()) + " instances";
  return o;
}

Outcome monomial_mode() {
  Outcome o;
  const auto scheme = std::make_shared<const ProtocolScheme>(build_scheme(hamming_7_4()));
  const auto layout = std::make_shared<const StorageLayout>(StorageLayout::uniform(scheme, 10));
  const auto a = ints({0, 1, 2});
  const auto d = decompose(a);
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> mag(0.5, 2.0);
  std::bernoulli_distribution neg(0.3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> x(70);
    for (auto& v : x) v = neg(rng) ? -mag(rng) : mag(rng);
    const auto w = random_w(rng, a, 70);
    StorageInstance<double> inst(layout, x, StorageMode::monomial);
    const double got = inst.execute(plan_universal(*layout, w, d));
    double truth = 1.0;
    for (std::size_t j = 0; j < x.size(); ++j) truth *= std::pow(x[j], to_double(w[j]));
    o.require(std::fabs(got - truth) <= 1e-9 * std::max(1.0, std::fabs(truth)),
              "trial " + std::to_string(trial));
  }
  return o;
}

Outcome highest_complexity() {
  Outcome o;
  std::mt19937_64 rng(9);
  int highest = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const CoefficientSet a(random_distinct(rng, 5));
    if (complexity(a) == 4) {
      ++highest;
      o.require(is_almost_sidon(a), "complexity 4 set fails almost-Sidon");
    }
  }
  o.require(highest >= 95, std::to_string(highest) + "/100 have complexity 4");
  if (o.ok) o.detail = std::to_string(highest) + "/100";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"1 table reproduction", 1, table_reproduction},
      {"2 covering radii", 30, covering_radii},
      {"3 generalized covering radius", 60, generalized_radius},
      {"4 coefficient complexity", 120, complexity_values},
      {"5 end-to-end exactness", 600, end_to_end},
      {"6 joint computation", 600, joint_computation},
      {"7 counting bound", 600, counting_bound},
      {"8 monomial mode", 600, monomial_mode},
      {"9 highest complexity", 600, highest_complexity},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.limit_seconds) {
      o.ok = false;
      o.detail = "over the time limit";
    }
    if (!o.ok) ++failed;
    std::printf("%s %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.name, secs,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
