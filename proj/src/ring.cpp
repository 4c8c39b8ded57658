#include "charclass/ring.hpp"

#include <algorithm>
#include <set>

namespace charclass {

MonomialOrder MonomialOrder::block(std::vector<bool> front) {
  MonomialOrder order;
  if (std::find(front.begin(), front.end(), true) != front.end()) order.front_ = std::move(front);
  return order;
}

RingPtr Ring::make(std::vector<std::string> names, PrimeField field, MonomialOrder order) {
  std::set<std::string> seen;
  for (const auto& name : names)
    if (!seen.insert(name).second) throw UnsupportedError("duplicate variable name '" + name + "'");
  if (order.is_block() && order.front().size() != names.size())
    throw UnsupportedError("block order size does not match the variable count");
  return RingPtr(new Ring(std::move(names), field, std::move(order)));
}

RingPtr Ring::standard(std::size_t count, PrimeField field, const std::string& prefix) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) names.push_back(prefix + std::to_string(i));
  return make(std::move(names), field);
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

RingPtr Ring::with_order(MonomialOrder order) const { return make(names_, field_, std::move(order)); }

RingPtr Ring::with_variable(const std::string& name) const {
  auto names = names_;
  names.push_back(name);
  MonomialOrder order = order_;
  if (order.is_block()) {
    auto front = order.front();
    front.push_back(false);
    order = MonomialOrder::block(std::move(front));
  }
  return make(std::move(names), field_, std::move(order));
}

int Ring::compare_block(const Exponent* a, const Exponent* b) const noexcept {
  const auto& front = order_.front();
  const std::size_t n = names_.size();
  unsigned fa = 0, fb = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (front[i]) {
      fa += a[i + 1];
      fb += b[i + 1];
    }
  if (fa != fb) return fa > fb ? 1 : -1;
  for (std::size_t i = n; i >= 1; --i)
    if (front[i - 1] && a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  if (a[0] != b[0]) return a[0] > b[0] ? 1 : -1;
  for (std::size_t i = n; i >= 1; --i)
    if (!front[i - 1] && a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

}  // namespace charclass
