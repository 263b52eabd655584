#include "birat/ring.hpp"

#include <algorithm>
#include <cctype>

#include "birat/errors.hpp"

namespace birat {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

Ring::Ring(std::vector<std::string> variables) : variables_(std::move(variables)) {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (!is_identifier(variables_[i])) throw RingError("invalid variable name '" + variables_[i] + "'");
    for (std::size_t j = 0; j < i; ++j) {
      if (variables_[j] == variables_[i]) throw RingError("duplicate variable '" + variables_[i] + "'");
    }
  }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return i;
  }
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> variables) {
  return std::make_shared<const Ring>(std::move(variables));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

RingPtr union_ring(const RingPtr& a, const RingPtr& b) {
  std::vector<std::string> vars = a->variables();
  for (const auto& v : b->variables()) {
    if (!a->contains(v)) vars.push_back(v);
  }
  return make_ring(std::move(vars));
}

std::string describe(const Ring& ring) {
  std::string out = "[";
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (i) out += ", ";
    out += ring.variable(i);
  }
  return out + "]";
}

namespace rings {

const RingPtr& curve_t() {
  static const RingPtr r = make_ring({"t"});
  return r;
}
const RingPtr& curve_xy() {
  static const RingPtr r = make_ring({"x", "y"});
  return r;
}
const RingPtr& curve_txy() {
  static const RingPtr r = make_ring({"t", "x", "y"});
  return r;
}
const RingPtr& surface_t() {
  static const RingPtr r = make_ring({"t1", "t2", "t3"});
  return r;
}
const RingPtr& surface_x() {
  static const RingPtr r = make_ring({"X1", "X2", "X3", "X4"});
  return r;
}
const RingPtr& surface_tx() {
  static const RingPtr r = make_ring({"t1", "t2", "t3", "X1", "X2", "X3", "X4"});
  return r;
}

}  // namespace rings

}  // namespace birat
