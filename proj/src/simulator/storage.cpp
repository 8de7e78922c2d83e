#include <cmath>
#include <string>
#include <type_traits>

#include "accred/error.hpp"
#include "accred/simulator.hpp"

namespace accred {
namespace {

constexpr double kRelativeTolerance = 1e-9;

long integer_exponent(const Rational& e) {
  if (e.get_den() != 1) {
    throw DomainError("exact monomial evaluation needs integer exponents, got " + to_string(e));
  }
  if (!e.get_num().fits_slong_p()) throw LimitExceeded("exponent too large");
  return e.get_num().get_si();
}

Rational power(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (sgn(base) == 0) throw DomainError("zero raised to a non-positive power");
  const unsigned long u = static_cast<unsigned long>(e < 0 ? -e : e);
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), u);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), u);
  Rational r = e > 0 ? Rational(num, den) : Rational(den, num);
  r.canonicalize();
  return r;
}

// (-1)^count for an exact count that must be an integer.
double parity_sign(const Rational& count) {
  if (count.get_den() != 1) throw DomainError("monomial result is not real");
  return mpz_odd_p(count.get_num().get_mpz_t()) ? -1.0 : 1.0;
}

Rational to_scalar(const Rational& q, Rational*) { return q; }
double to_scalar(const Rational& q, double*) { return to_double(q); }

template <class Scalar>
Scalar convert(const Rational& q) {
  return to_scalar(q, static_cast<Scalar*>(nullptr));
}

}  // namespace

template <class Scalar>
StorageInstance<Scalar>::StorageInstance(std::shared_ptr<const StorageLayout> layout,
                                         std::vector<Scalar> x, StorageMode mode)
    : layout_(std::move(layout)), x_(std::move(x)), mode_(mode) {
  if (!layout_) throw DomainError("storage needs a layout");
  if (x_.size() != layout_->data_dimension()) {
    throw DomainError("data has length " + std::to_string(x_.size()) + ", layout expects " +
                      std::to_string(layout_->data_dimension()));
  }
  const std::size_t n = layout_->node_count();
  if (mode_ == StorageMode::monomial) {
    for (std::size_t j = 0; j < x_.size(); ++j) {
      if (x_[j] == 0) throw DomainError("monomial storage needs nonzero data; x_" +
                                        std::to_string(j) + " = 0");
    }
  }
  if (mode_ == StorageMode::linear) {
    values_.assign(n, Scalar(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [j, c] : layout_->encoding_row(i)) values_[i] += Scalar(c) * x_[j];
    }
  } else if constexpr (std::is_same_v<Scalar, double>) {
    log_abs_.assign(n, 0.0);
    negatives_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [j, c] : layout_->encoding_row(i)) {
        log_abs_[i] += c * std::log(std::fabs(x_[j]));
        if (x_[j] < 0) negatives_[i] += c;
      }
    }
  } else {
    values_.assign(n, Scalar(1));
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [j, c] : layout_->encoding_row(i)) values_[i] *= power(x_[j], c);
    }
  }
}

template <class Scalar>
Scalar StorageInstance<Scalar>::server_value(std::size_t i) const {
  if (i >= server_count()) throw DomainError("server index out of range");
  if constexpr (std::is_same_v<Scalar, double>) {
    if (mode_ == StorageMode::monomial) {
      return (negatives_[i] % 2 != 0 ? -1.0 : 1.0) * std::exp(log_abs_[i]);
    }
  }
  return values_[i];
}

template <class Scalar>
Scalar StorageInstance<Scalar>::execute(const AccessPlan& plan) {
  if (plan.server_ids.size() != plan.decode_coefficients.size()) {
    throw DomainError("plan has mismatched ids and coefficients");
  }
  for (std::size_t id : plan.server_ids) {
    if (id >= server_count()) {
      throw DomainError("plan touches server " + std::to_string(id) + " of " +
                        std::to_string(server_count()));
    }
  }
  log_.push_back(plan.server_ids);

  if (mode_ == StorageMode::linear) {
    Scalar sum(0);
    for (std::size_t a = 0; a < plan.server_ids.size(); ++a) {
      sum += convert<Scalar>(plan.decode_coefficients[a]) * values_[plan.server_ids[a]];
    }
    return sum;
  }
  if constexpr (std::is_same_v<Scalar, double>) {
    double log_sum = 0.0;
    Rational winding(0);
    for (std::size_t a = 0; a < plan.server_ids.size(); ++a) {
      const std::size_t id = plan.server_ids[a];
      log_sum += to_double(plan.decode_coefficients[a]) * log_abs_[id];
      winding += plan.decode_coefficients[a] * negatives_[id];
    }
    return parity_sign(winding) * std::exp(log_sum);
  } else {
    Rational product(1);
    for (std::size_t a = 0; a < plan.server_ids.size(); ++a) {
      product *= power(values_[plan.server_ids[a]], integer_exponent(plan.decode_coefficients[a]));
    }
    return product;
  }
}

template <class Scalar>
Scalar direct_evaluation(const StorageInstance<Scalar>& instance, std::span<const Rational> w) {
  const auto& x = instance.data();
  if (w.size() != x.size()) throw DomainError("query length does not match the data dimension");
  if (instance.mode() == StorageMode::linear) {
    Scalar sum(0);
    for (std::size_t j = 0; j < x.size(); ++j) sum += convert<Scalar>(w[j]) * x[j];
    return sum;
  }
  if constexpr (std::is_same_v<Scalar, double>) {
    double log_sum = 0.0;
    Rational negatives(0);
    for (std::size_t j = 0; j < x.size(); ++j) {
      log_sum += to_double(w[j]) * std::log(std::fabs(x[j]));
      if (x[j] < 0) negatives += w[j];
    }
    return parity_sign(negatives) * std::exp(log_sum);
  } else {
    Rational product(1);
    for (std::size_t j = 0; j < x.size(); ++j) product *= power(x[j], integer_exponent(w[j]));
    return product;
  }
}

template <class Scalar>
QueryReport<Scalar> verify_query(StorageInstance<Scalar>& instance, std::span<const Rational> w,
                                 const AccessPlan& plan) {
  QueryReport<Scalar> report;
  report.truth = direct_evaluation(instance, w);
  report.value = instance.execute(plan);
  report.access_count = instance.access_log().back().size();
  report.bound = plan.expected_access;
  bool match = false;
  if constexpr (std::is_same_v<Scalar, double>) {
    match = std::fabs(report.value - report.truth) <=
            kRelativeTolerance * std::max(1.0, std::fabs(report.truth));
  } else {
    match = report.value == report.truth;
  }
  report.ok = match && report.access_count <= report.bound;
  return report;
}

template class StorageInstance<Rational>;
template class StorageInstance<double>;

template Rational direct_evaluation(const StorageInstance<Rational>&, std::span<const Rational>);
template double direct_evaluation(const StorageInstance<double>&, std::span<const Rational>);
template QueryReport<Rational> verify_query(StorageInstance<Rational>&, std::span<const Rational>,
                                            const AccessPlan&);
template QueryReport<double> verify_query(StorageInstance<double>&, std::span<const Rational>,
                                          const AccessPlan&);

}  // namespace accred
