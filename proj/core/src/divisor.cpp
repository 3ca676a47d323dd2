#include "conesing/divisor.hpp"

#include "conesing/error.hpp"

#include <algorithm>
#include <set>

namespace conesing {

MarkedPoint MarkedPoint::finite(Rational coordinate) {
  coordinate.canonicalize();
  return MarkedPoint(Kind::finite, std::move(coordinate), {});
}

MarkedPoint MarkedPoint::infinity() { return MarkedPoint(Kind::infinity, Rational(0), {}); }

MarkedPoint MarkedPoint::label(std::string name) {
  if (name.empty()) fail_parse("empty point label");
  return MarkedPoint(Kind::label, Rational(0), std::move(name));
}

std::string MarkedPoint::to_string() const {
  switch (kind_) {
    case Kind::finite:
      return conesing::to_string(coordinate_);
    case Kind::infinity:
      return "inf";
    case Kind::label:
      return "@" + name_;
  }
  return {};
}

bool operator==(const MarkedPoint& a, const MarkedPoint& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case MarkedPoint::Kind::finite:
      return a.coordinate_ == b.coordinate_;
    case MarkedPoint::Kind::infinity:
      return true;
    case MarkedPoint::Kind::label:
      return a.name_ == b.name_;
  }
  return false;
}

bool operator<(const MarkedPoint& a, const MarkedPoint& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
  switch (a.kind_) {
    case MarkedPoint::Kind::finite:
      return a.coordinate_ < b.coordinate_;
    case MarkedPoint::Kind::infinity:
      return false;
    case MarkedPoint::Kind::label:
      return a.name_ < b.name_;
  }
  return false;
}

QDivisor to_rational(const IntegralDivisor& d) {
  QDivisor out;
  for (const auto& [p, c] : d.terms()) out.add(p, Rational(c));
  return out;
}

CurveCouple::CurveCouple(QDivisor divisor) : divisor_(std::move(divisor)) {
  if (divisor_.degree() <= 0) {
    fail_precondition("NotAmple", "deg D = " + to_string(divisor_.degree()) + " must be positive");
  }
}

Rational degree(const QDivisor& d) { return d.degree(); }

IntegralDivisor floor_multiple(const QDivisor& d, const Integer& n) {
  IntegralDivisor out;
  for (const auto& [p, c] : d.terms()) out.add(p, floor(Rational(c * n)));
  return out;
}

Integer weil_index_at(const QDivisor& d, const MarkedPoint& p) { return denominator(d.coefficient(p)); }

Integer cartier_index_at(const QDivisor& d, const MarkedPoint& p) { return weil_index_at(d, p); }

Integer isotropy_order(const CurveCouple& c, const MarkedPoint& p) { return cartier_index_at(c.divisor(), p); }

Integer max_isotropy(const CurveCouple& c) {
  Integer best = 1;
  for (const auto& [p, coeff] : c.divisor().terms()) best = std::max(best, denominator(coeff));
  return best;
}

Integer period(const QDivisor& d) {
  Integer l = 1;
  for (const auto& [p, coeff] : d.terms()) l = lcm(l, denominator(coeff));
  return l;
}

QDivisor assign_coordinates(const QDivisor& d) {
  std::set<MarkedPoint> used;
  for (const auto& [p, c] : d.terms()) {
    if (!p.is_label()) used.insert(p);
  }
  // Candidate sequence 0, 1, inf, 2, 3, ...
  long next_finite = 0;
  bool inf_offered = false;
  auto next_free = [&]() {
    for (;;) {
      MarkedPoint candidate = (next_finite == 2 && !inf_offered) ? MarkedPoint::infinity() : pt(next_finite);
      if (candidate.is_infinity()) {
        inf_offered = true;
      } else {
        ++next_finite;
      }
      if (used.insert(candidate).second) return candidate;
    }
  };
  QDivisor out;
  for (const auto& [p, c] : d.terms()) {
    out.add(p.is_label() ? next_free() : p, c);
  }
  return out;
}

CurveCouple assign_coordinates(const CurveCouple& c) { return CurveCouple(assign_coordinates(c.divisor())); }

std::string NormalFormKey::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < fractional_parts.size(); ++i) {
    if (i) out += ",";
    out += conesing::to_string(fractional_parts[i]);
  }
  out += "]|" + conesing::to_string(degree);
  if (moduli_present) out += "|moduli";
  return out;
}

NormalForm normal_form(const CurveCouple& c) {
  struct Frac {
    Rational value;
    MarkedPoint at;
  };
  std::vector<Frac> fracs;
  Rational frac_sum = 0;
  for (const auto& [p, coeff] : c.divisor().terms()) {
    Rational f = fractional_part(coeff);
    if (f != 0) {
      fracs.push_back({f, p});
      frac_sum += f;
    }
  }
  // Equal values are equal reduced fractions, so the denominator/numerator
  // tie-breaks reduce to the stable original order.
  std::stable_sort(fracs.begin(), fracs.end(), [](const Frac& a, const Frac& b) {
    if (a.value != b.value) return a.value > b.value;
    if (denominator(a.value) != denominator(b.value)) return denominator(a.value) > denominator(b.value);
    return numerator(a.value) > numerator(b.value);
  });

  NormalFormKey key;
  key.degree = c.degree();
  key.moduli_present = fracs.size() > 3;
  for (const auto& f : fracs) key.fractional_parts.push_back(f.value);

  static const MarkedPoint canonical[3] = {pt(0), pt(1), pt_inf()};
  QDivisor d;
  for (std::size_t i = 0; i < fracs.size(); ++i) {
    d.add(key.moduli_present ? fracs[i].at : canonical[i], fracs[i].value);
  }
  d.add(pt_inf(), key.degree - frac_sum);
  return {CurveCouple(std::move(d)), std::move(key)};
}

CanonicalDataOnTilde canonical_data_on_tilde(const CurveCouple& c) {
  CanonicalDataOnTilde out;
  for (const auto& [p, coeff] : c.divisor().terms()) {
    out.strict_transforms.emplace_back(p, Integer(denominator(coeff) - 1));
  }
  return out;
}

Integer PrincipalDivisorOnCone::coefficient_at(const MarkedPoint& p) const {
  for (const auto& [q, c] : invariant_divisors) {
    if (q == p) return c;
  }
  return 0;
}

PrincipalDivisorOnCone principal_divisor_on_cone(const CurveCouple& c, const IntegralDivisor& h, const Integer& u) {
  if (h.degree() != 0) {
    fail_precondition("NonPrincipal", "deg H = " + to_string(h.degree()) + " is not zero");
  }
  std::set<MarkedPoint> support;
  for (const auto& [p, coeff] : c.divisor().terms()) support.insert(p);
  for (const auto& [p, coeff] : h.terms()) support.insert(p);

  PrincipalDivisorOnCone out;
  out.e0 = u;
  for (const auto& p : support) {
    Rational d = c.divisor().coefficient(p);
    Rational value = Rational(denominator(d)) * (Rational(u) * d + Rational(h.coefficient(p)));
    ensure(is_integral(value), "principal divisor on X~ has a non-integral coefficient");
    out.invariant_divisors.emplace_back(p, numerator(value));
  }
  return out;
}

}  // namespace conesing
