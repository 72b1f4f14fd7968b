#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace qcap {

struct Factor {
  std::string label;
  std::size_t dim = 1;

  bool operator==(const Factor&) const = default;
};

/// Ordered tensor factorization of a Hilbert space. Factor 0 is the most
/// significant index of the flattened basis (row-major Kronecker order).
class SystemLayout {
 public:
  SystemLayout() = default;
  SystemLayout(std::initializer_list<Factor> factors);
  explicit SystemLayout(std::vector<Factor> factors);

  /// Single-factor layout.
  static SystemLayout single(std::string label, std::size_t dim);

  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }

  std::size_t total_dim() const;
  std::vector<std::size_t> dims() const;
  std::vector<std::string> labels() const;

  bool contains(std::string_view label) const;
  /// Position of `label`; throws std::invalid_argument when absent.
  std::size_t index_of(std::string_view label) const;
  std::size_t dim_of(std::string_view label) const;

  /// Product of the dims of the given labels.
  std::size_t dim_of(const std::vector<std::string>& labels) const;

  /// Concatenation; throws std::invalid_argument naming the first colliding label.
  SystemLayout concat(const SystemLayout& other) const;

  /// Sub-layout with the given labels, kept in this layout's order.
  SystemLayout restrict_to(const std::vector<std::string>& labels) const;

  /// Copy with the factor `label` resized to `dim`.
  SystemLayout with_dim(std::string_view label, std::size_t dim) const;

  /// Labels joined with '|', e.g. "A|B|A'".
  std::string describe() const;

  bool operator==(const SystemLayout&) const = default;

 private:
  void validate() const;

  std::vector<Factor> factors_;
};

}  // namespace qcap
