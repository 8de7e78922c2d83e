#include "cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "accred/analysis.hpp"
#include "accred/code_io.hpp"
#include "accred/complexity.hpp"
#include "accred/error.hpp"
#include "accred/families.hpp"
#include "accred/protocol.hpp"
#include "accred/simulator.hpp"

namespace accred::cli {
namespace {

BinaryCode load_code(const FamilyOptions& o) {
  if (!o.code_file.empty()) return read_code_file(o.code_file);
  return family_code(parse_family(o.family), o.index);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path);
  if (!file) throw DomainError("cannot write '" + path + "'");
  return file;
}

std::vector<Rational> read_weight_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open weight file '" + path + "'");
  std::stringstream text;
  text << in.rdbuf();
  std::string s = text.str();
  std::replace_if(s.begin(), s.end(), [](char c) { return c == '\n' || c == '\r' || c == '\t'; },
                  ' ');
  std::vector<Rational> w;
  std::istringstream tokens(s);
  std::string token;
  while (tokens >> token) {
    for (const auto& q : parse_rational_list(token)) w.push_back(q);
  }
  return w;
}

std::vector<Rational> random_weights(const CoefficientSet& set, std::size_t k, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, set.size() - 1);
  std::vector<Rational> w(k);
  for (auto& v : w) v = set[pick(rng)];
  return w;
}

std::vector<Rational> load_weights(const std::string& spec, const CoefficientSet& set,
                                   std::size_t k) {
  constexpr std::string_view kRandom = "random:";
  if (spec.rfind(kRandom, 0) == 0) {
    std::uint64_t seed = 0;
    try {
      seed = std::stoull(spec.substr(kRandom.size()));
    } catch (const std::exception&) {
      throw DomainError("bad seed in '" + spec + "'");
    }
    std::mt19937_64 rng(seed);
    return random_weights(set, k, rng);
  }
  auto w = read_weight_file(spec);
  if (w.size() != k) {
    throw DomainError("weight file has " + std::to_string(w.size()) + " entries, expected " +
                      std::to_string(k));
  }
  return w;
}

Rational random_rational(std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<long> num(-100, 100);
  std::uniform_int_distribution<long> den(1, 20);
  long a = num(rng);
  while (nonzero && a == 0) a = num(rng);
  Rational q(a, den(rng));
  q.canonicalize();
  return q;
}

void print_plan(std::ostream& out, const AccessPlan& plan) {
  out << "servers:";
  for (std::size_t id : plan.server_ids) out << ' ' << id;
  out << "\ncoefficients:";
  for (const auto& c : plan.decode_coefficients) out << ' ' << to_string(c);
  out << "\naccess: " << plan.access_count() << "\nbound: " << plan.expected_access << '\n';
}

std::string pair_text(const Rational& a, const Rational& b) {
  return to_string(a) + ' ' + to_string(b);
}

}  // namespace

void run_codes_radius(std::ostream& out, const std::string& file) {
  out << covering_radius(read_code_file(file)) << '\n';
}

void run_codes_gcr(std::ostream& out, const std::string& file, int t) {
  if (t < 1) throw DomainError("--t must be positive");
  out << generalized_covering_radius(read_code_file(file), static_cast<std::size_t>(t)) << '\n';
}

void run_codes_normal(std::ostream& out, const std::string& file) {
  const BinaryCode code = read_code_file(file);
  const int r = covering_radius(code);
  bool any = false;
  out << "radius " << r << '\n';
  for (std::size_t i = 0; i < code.length(); ++i) {
    const auto norm = coordinate_norm(code, i);
    const bool ok = norm && *norm <= 2 * r + 1;
    any = any || ok;
    out << "coordinate " << i << " norm " << (norm ? std::to_string(*norm) : "inf")
        << (ok ? " acceptable" : "") << '\n';
  }
  out << "normal " << (any ? "yes" : "no") << '\n';
}

void run_codes_family(std::ostream& out, const std::string& family, int index,
                      const std::string& emit_file) {
  const Family f = parse_family(family);
  const BinaryCode code = family_code(f, index);
  const FeasiblePair pair = family_pair(f, index);
  out << "label " << pair.label() << '\n'
      << "length " << code.length() << '\n'
      << "size " << code.size() << '\n'
      << "hat_size " << hat_subcode(code).size() << '\n'
      << "radius_closed_form " << family_radius(f, index) << '\n';
  if (code.length() <= EnumerationLimits{}.max_radius_length) {
    out << "radius " << covering_radius(code) << '\n';
  }
  out << "pair " << pair_text(pair.redundancy, pair.access) << '\n';
  if (!emit_file.empty()) {
    auto file = open_output(emit_file);
    write_code(file, code);
  }
}

void run_complexity_compute(std::ostream& out, const std::string& set, std::size_t limit) {
  out << complexity(CoefficientSet::parse(set), ComplexityLimits{limit}) << '\n';
}

void run_complexity_decompose(std::ostream& out, const std::string& set, std::size_t limit) {
  const CoefficientSet a = CoefficientSet::parse(set);
  const Decomposition d = decompose(a, ComplexityLimits{limit});
  nlohmann::ordered_json j;
  j["theta"] = d.theta();
  j["offset"] = to_string(d.offset);
  j["steps"] = nlohmann::json::array();
  for (const auto& z : d.steps) j["steps"].push_back(to_string(z));
  j["selectors"] = nlohmann::ordered_json::object();
  for (std::size_t e = 0; e < d.elements.size(); ++e) {
    j["selectors"][to_string(d.elements[e])] = d.selectors[e];
  }
  out << j.dump(2) << '\n';
}

void run_complexity_sidon(std::ostream& out, const std::string& set) {
  out << (is_almost_sidon(CoefficientSet::parse(set)) ? "true" : "false") << '\n';
}

void run_protocol_plan(std::ostream& out, const PlanOptions& o) {
  if (o.blocks < 1) throw DomainError("--t must be positive");
  const BinaryCode code = load_code(o.code);
  const auto scheme = std::make_shared<const ProtocolScheme>(build_scheme(code));
  const auto layout =
      StorageLayout::uniform(scheme, static_cast<std::size_t>(o.blocks));
  const CoefficientSet set = CoefficientSet::parse(o.set);
  const Decomposition d = decompose(set);
  const std::size_t k = layout.data_dimension();
  const auto w = load_weights(o.weights, set, k);
  const Rational p(static_cast<long>(scheme->block_length));
  const Rational ratio_n = Rational(static_cast<long>(scheme->nodes_per_block())) / p;
  const Rational theta(static_cast<long>(d.theta()));

  AccessPlan plan;
  std::size_t n = layout.node_count();
  Rational asym_nu = ratio_n;
  Rational asym_lambda;
  if (o.mode == "separate") {
    plan = plan_universal(layout, w, d);
    asym_lambda = theta * scheme->access_bound / p;
  } else if (o.mode == "joint") {
    const auto raw = StorageLayout::uncoded(k);
    plan = plan_joint_trivial(raw, w, d);
    n = raw.node_count();
    asym_nu = 1;
    Rational share(1);
    for (std::size_t i = 0; i < d.theta(); ++i) share /= 2;
    asym_lambda = 1 - share;
  } else if (o.mode == "gcr") {
    const int radius = generalized_covering_radius(code, d.theta());
    out << "generalized_radius " << radius << '\n';
    plan = plan_gcr(layout, w, d, radius);
    asym_lambda = (Rational(radius) + theta) / p;
  } else {
    throw DomainError("unknown mode '" + o.mode + "'");
  }
  out << "mode " << o.mode << "\ntheta " << d.theta() << "\nk " << k << "\nn " << n << '\n';
  print_plan(out, plan);
  const Rational kq(static_cast<long>(k));
  out << "finite_pair " << pair_text(Rational(static_cast<long>(n)) / kq,
                                     Rational(static_cast<long>(plan.expected_access)) / kq)
      << "\nasymptotic_pair " << pair_text(asym_nu, asym_lambda) << '\n';
}

bool run_simulate(std::ostream& out, const SimulateOptions& o) {
  if (o.blocks < 1) throw DomainError("--t must be positive");
  if (o.trials < 0) throw DomainError("--trials must be nonnegative");
  StorageMode mode;
  if (o.mode == "linear") {
    mode = StorageMode::linear;
  } else if (o.mode == "monomial") {
    mode = StorageMode::monomial;
  } else {
    throw DomainError("unknown mode '" + o.mode + "'");
  }
  if (o.backend != "exact" && o.backend != "float") {
    throw DomainError("unknown backend '" + o.backend + "'");
  }
  const bool exact = o.backend == "exact";

  const auto scheme = std::make_shared<const ProtocolScheme>(build_scheme(load_code(o.code)));
  const auto layout = std::make_shared<const StorageLayout>(
      StorageLayout::uniform(scheme, static_cast<std::size_t>(o.blocks)));
  const CoefficientSet set = CoefficientSet::parse(o.set);
  const Decomposition d = decompose(set);
  const std::size_t k = layout->data_dimension();

  std::ofstream csv;
  if (!o.emit_csv.empty()) {
    csv = open_output(o.emit_csv);
    csv << "trial,ok,access,bound,value,truth\n";
    csv << std::setprecision(17);
  }
  out << std::setprecision(17);

  std::mt19937_64 rng(o.seed);
  int passed = 0;
  std::size_t max_access = 0;
  std::size_t bound = 0;
  for (int trial = 0; trial < o.trials; ++trial) {
    std::vector<Rational> x(k);
    for (auto& v : x) v = random_rational(rng, mode == StorageMode::monomial);
    const auto w = random_weights(set, k, rng);
    const AccessPlan plan = plan_universal(*layout, w, d);

    bool ok = false;
    std::size_t access = 0;
    std::string value;
    std::string truth;
    if (exact) {
      StorageInstance<Rational> instance(layout, x, mode);
      const auto report = verify_query(instance, w, plan);
      ok = report.ok;
      access = report.access_count;
      bound = report.bound;
      value = to_string(report.value);
      truth = to_string(report.truth);
    } else {
      std::vector<double> xd(k);
      std::transform(x.begin(), x.end(), xd.begin(), [](const Rational& q) { return to_double(q); });
      StorageInstance<double> instance(layout, std::move(xd), mode);
      const auto report = verify_query(instance, w, plan);
      ok = report.ok;
      access = report.access_count;
      bound = report.bound;
      std::ostringstream v;
      std::ostringstream t;
      v << std::setprecision(17) << report.value;
      t << std::setprecision(17) << report.truth;
      value = v.str();
      truth = t.str();
    }
    passed += ok ? 1 : 0;
    max_access = std::max(max_access, access);
    if (!o.quiet) {
      out << "trial " << trial << (ok ? " ok" : " FAIL") << " access " << access << " bound "
          << bound << '\n';
    }
    if (csv.is_open()) {
      csv << trial << ',' << (ok ? 1 : 0) << ',' << access << ',' << bound << ',' << value << ','
          << truth << '\n';
    }
  }
  out << "summary trials " << o.trials << " passed " << passed << " max_access " << max_access
      << " bound " << bound << " k " << k << " n " << layout->node_count() << '\n';
  return passed == o.trials;
}

void run_analysis_table(std::ostream& out, const TableOptions& o) {
  const auto rows = generate_table(kAllFamilies, o.first, o.last, parse_rational(o.cap),
                                   o.truncate ? DecimalMode::truncate : DecimalMode::round);
  write_table_csv(out, rows);
}

void run_analysis_pareto(std::ostream& out, const TableOptions& o, bool hull) {
  const Rational cap = parse_rational(o.cap);
  std::vector<FeasiblePair> pairs;
  for (auto& p : candidate_pairs(kAllFamilies, o.first, o.last)) {
    if (p.redundancy <= cap) pairs.push_back(std::move(p));
  }
  const auto front = hull ? lower_hull(std::move(pairs)) : pareto_front(std::move(pairs));
  write_pairs_csv(out, front);
}

void run_analysis_bound(std::ostream& out, int m, double nu_min, double nu_max, int steps) {
  const auto grid = linear_grid(nu_min, nu_max, steps);
  write_curve_csv(out, bound_curve(grid, m));
}

}  // namespace accred::cli
