#include "hypcert/picard_lattice.hpp"

#include <algorithm>
#include <sstream>

#include "hypcert/errors.hpp"

namespace hypcert {

namespace {

bool same_universe(const std::shared_ptr<const PointUniverse>& a, const std::shared_ptr<const PointUniverse>& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void check_compatible(const DivisorClass& a, const DivisorClass& b) {
  if (a.universe() && b.universe()) {
    if (!same_universe(a.universe(), b.universe())) {
      throw ConfigError("divisor classes live on different blow-ups");
    }
    return;
  }
  // A class without a universe may only carry an H part.
  const DivisorClass& loose = a.universe() ? b : a;
  if (!loose.e().empty()) throw ConfigError("exceptional coefficients without a point universe");
}

}  // namespace

DivisorClass::DivisorClass(std::shared_ptr<const PointUniverse> universe, Integer h,
                           std::map<std::string, Integer> exceptional)
    : universe_(std::move(universe)), h_(std::move(h)) {
  for (auto& [id, m] : exceptional) {
    if (m == 0) continue;
    if (!universe_ || !std::binary_search(universe_->begin(), universe_->end(), id)) {
      throw ConfigError("unknown blown point '" + id + "'");
    }
    e_.emplace(id, std::move(m));
  }
}

DivisorClass DivisorClass::hyperplane(std::shared_ptr<const PointUniverse> universe) {
  return DivisorClass(std::move(universe), 1);
}

DivisorClass DivisorClass::exceptional(std::shared_ptr<const PointUniverse> universe, const std::string& point) {
  return DivisorClass(std::move(universe), 0, {{point, Integer(-1)}});
}

Integer DivisorClass::e(const std::string& point) const {
  auto it = e_.find(point);
  return it == e_.end() ? Integer(0) : it->second;
}

void DivisorClass::adopt_universe(const DivisorClass& other) {
  check_compatible(*this, other);
  if (!universe_) universe_ = other.universe_;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& rhs) {
  adopt_universe(rhs);
  h_ += rhs.h_;
  for (const auto& [id, m] : rhs.e_) {
    auto [it, inserted] = e_.emplace(id, m);
    if (!inserted) {
      it->second += m;
      if (it->second == 0) e_.erase(it);
    }
  }
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& rhs) { return *this += -rhs; }

DivisorClass& DivisorClass::operator*=(const Integer& k) {
  if (k == 0) {
    h_ = 0;
    e_.clear();
    return *this;
  }
  h_ *= k;
  for (auto& [id, m] : e_) m *= k;
  return *this;
}

DivisorClass DivisorClass::operator-() const {
  DivisorClass r = *this;
  r *= Integer(-1);
  return r;
}

Integer intersect(const DivisorClass& a, const DivisorClass& b) {
  check_compatible(a, b);
  Integer total = a.h() * b.h();
  const auto& small = a.e().size() <= b.e().size() ? a.e() : b.e();
  const auto& large = a.e().size() <= b.e().size() ? b.e() : a.e();
  for (const auto& [id, m] : small) {
    auto it = large.find(id);
    if (it != large.end()) total -= m * it->second;
  }
  return total;
}

DivisorClass canonical_class(const std::shared_ptr<const PointUniverse>& universe) {
  std::map<std::string, Integer> e;
  if (universe) {
    for (const auto& id : *universe) e.emplace(id, Integer(-1));
  }
  return DivisorClass(universe, -3, std::move(e));
}

DivisorClass canonical_class(const SurfaceConfig& cfg) { return canonical_class(cfg.universe()); }

Rational chi(const DivisorClass& d) {
  const DivisorClass k = canonical_class(d.universe());
  const Integer twice = intersect(d, d - k);
  if (twice % 2 != 0) {
    throw InvariantError("d.(d-K) is odd for " + to_string(d) + "; Euler characteristic not integral");
  }
  return Rational(1 + twice / 2);
}

DivisorClass strict_transform(const SurfaceConfig& cfg, std::size_t component) {
  if (component >= cfg.component_count()) throw ConfigError("component index out of range");
  std::map<std::string, Integer> e;
  for (const auto& id : cfg.points_on(component)) e.emplace(id, Integer(1));
  return DivisorClass(cfg.universe(), cfg.components()[component].degree, std::move(e));
}

std::string to_string(const DivisorClass& d) {
  std::ostringstream out;
  out << d.h().get_str() << "H";
  for (const auto& [id, m] : d.e()) {
    if (m > 0) {
      out << " - " << (m == 1 ? std::string() : m.get_str()) << "E[" << id << "]";
    } else {
      Integer a = -m;
      out << " + " << (a == 1 ? std::string() : a.get_str()) << "E[" << id << "]";
    }
  }
  return out.str();
}

}  // namespace hypcert
