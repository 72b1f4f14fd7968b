#include "qcap/layout.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace qcap {

SystemLayout::SystemLayout(std::initializer_list<Factor> factors) : factors_(factors) {
  validate();
}

SystemLayout::SystemLayout(std::vector<Factor> factors) : factors_(std::move(factors)) {
  validate();
}

SystemLayout SystemLayout::single(std::string label, std::size_t dim) {
  return SystemLayout({Factor{std::move(label), dim}});
}

void SystemLayout::validate() const {
  std::unordered_set<std::string> seen;
  for (const auto& f : factors_) {
    if (f.label.empty()) throw std::invalid_argument("layout factor with empty label");
    if (f.dim < 1) throw std::invalid_argument("layout factor '" + f.label + "' has dimension 0");
    if (!seen.insert(f.label).second)
      throw std::invalid_argument("duplicate layout label '" + f.label + "'");
  }
}

std::size_t SystemLayout::total_dim() const {
  std::size_t n = 1;
  for (const auto& f : factors_) n *= f.dim;
  return n;
}

std::vector<std::size_t> SystemLayout::dims() const {
  std::vector<std::size_t> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.dim);
  return out;
}

std::vector<std::string> SystemLayout::labels() const {
  std::vector<std::string> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.label);
  return out;
}

bool SystemLayout::contains(std::string_view label) const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [&](const Factor& f) { return f.label == label; });
}

std::size_t SystemLayout::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (factors_[i].label == label) return i;
  throw std::invalid_argument("unknown subsystem label '" + std::string(label) + "' in layout " +
                              describe());
}

std::size_t SystemLayout::dim_of(std::string_view label) const {
  return factors_[index_of(label)].dim;
}

std::size_t SystemLayout::dim_of(const std::vector<std::string>& labels) const {
  std::size_t n = 1;
  for (const auto& l : labels) n *= dim_of(l);
  return n;
}

SystemLayout SystemLayout::concat(const SystemLayout& other) const {
  for (const auto& f : other.factors_)
    if (contains(f.label))
      throw std::invalid_argument("label collision in tensor product: '" + f.label + "'");
  std::vector<Factor> joined = factors_;
  joined.insert(joined.end(), other.factors_.begin(), other.factors_.end());
  return SystemLayout(std::move(joined));
}

SystemLayout SystemLayout::restrict_to(const std::vector<std::string>& labels) const {
  for (const auto& l : labels) (void)index_of(l);
  std::vector<Factor> kept;
  for (const auto& f : factors_)
    if (std::find(labels.begin(), labels.end(), f.label) != labels.end()) kept.push_back(f);
  return SystemLayout(std::move(kept));
}

SystemLayout SystemLayout::with_dim(std::string_view label, std::size_t dim) const {
  auto copy = factors_;
  copy[index_of(label)].dim = dim;
  return SystemLayout(std::move(copy));
}

std::string SystemLayout::describe() const {
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += '|';
    s += factors_[i].label + "(" + std::to_string(factors_[i].dim) + ")";
  }
  return s.empty() ? "<empty>" : s;
}

}  // namespace qcap
