#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace birat {

/// Ordered list of variable names. The order fixes the graded-lex term
/// order: the first variable is the largest.
class Ring {
 public:
  explicit Ring(std::vector<std::string> variables);

  std::size_t size() const noexcept { return variables_.size(); }
  const std::string& variable(std::size_t i) const { return variables_.at(i); }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  friend bool operator==(const Ring& a, const Ring& b) { return a.variables_ == b.variables_; }

 private:
  std::vector<std::string> variables_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> variables);

/// True when both rings declare the same variables in the same order.
bool same_ring(const RingPtr& a, const RingPtr& b);

/// Variables of `a` followed by the variables of `b` not already in `a`.
RingPtr union_ring(const RingPtr& a, const RingPtr& b);

std::string describe(const Ring& ring);

/// Shared rings used throughout the library.
namespace rings {
const RingPtr& curve_t();        // [t]
const RingPtr& curve_xy();       // [x, y]
const RingPtr& curve_txy();      // [t, x, y]
const RingPtr& surface_t();      // [t1, t2, t3]
const RingPtr& surface_x();      // [X1, X2, X3, X4]
const RingPtr& surface_tx();     // [t1, t2, t3, X1, X2, X3, X4]
}  // namespace rings

}  // namespace birat
