#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "accred/protocol.hpp"
#include "accred/rational.hpp"

namespace accred {

enum class StorageMode { linear, monomial };

// In-memory servers for one data vector x. Scalar is Rational (exact) or double.
//
// Linear mode stores y_i = sum_j lambda_ij x_j. Monomial mode stores
// y_i = prod_j x_j^lambda_ij and needs every x_j nonzero. In double precision a
// monomial cell is kept as log|y_i| plus the signed count of negative factors,
// so fractional decode exponents still give a real result when one exists.
template <class Scalar>
class StorageInstance {
 public:
  StorageInstance(std::shared_ptr<const StorageLayout> layout, std::vector<Scalar> x,
                  StorageMode mode = StorageMode::linear);

  const StorageLayout& layout() const { return *layout_; }
  StorageMode mode() const { return mode_; }
  std::size_t server_count() const { return layout_->node_count(); }
  const std::vector<Scalar>& data() const { return x_; }

  // Stored value of server i (for monomial doubles, reassembled from log form).
  Scalar server_value(std::size_t i) const;

  // sum mu_j y_j or prod y_j^mu_j; records the touched servers.
  Scalar execute(const AccessPlan& plan);

  const std::vector<std::vector<std::size_t>>& access_log() const { return log_; }

 private:
  std::shared_ptr<const StorageLayout> layout_;
  std::vector<Scalar> x_;
  StorageMode mode_;
  std::vector<Scalar> values_;
  std::vector<double> log_abs_;
  std::vector<long> negatives_;
  std::vector<std::vector<std::size_t>> log_;
};

template <class Scalar>
struct QueryReport {
  Scalar value{};
  Scalar truth{};
  std::size_t access_count = 0;
  std::size_t bound = 0;
  bool ok = false;
};

// w.x (linear) or prod x_j^w_j (monomial), computed directly from the data.
template <class Scalar>
Scalar direct_evaluation(const StorageInstance<Scalar>& instance, std::span<const Rational> w);

// Executes the plan and compares against direct evaluation: exact equality for
// Rational, relative 1e-9 for double; the access count must not exceed the
// plan's advertised bound.
template <class Scalar>
QueryReport<Scalar> verify_query(StorageInstance<Scalar>& instance, std::span<const Rational> w,
                                 const AccessPlan& plan);

extern template class StorageInstance<Rational>;
extern template class StorageInstance<double>;

}  // namespace accred
