#pragma once

// Q-divisors on P^1, the couple (P^1, D) of a cone surface singularity,
// and the local index calculus attached to it.

#include "conesing/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace conesing {

/// A point of P^1: a finite affine coordinate, the point at infinity, or a
/// named point whose coordinate is assigned later (see assign_coordinates).
///
/// Points are totally ordered: finite (by coordinate) < infinity < labels (by name).
class MarkedPoint {
 public:
  enum class Kind { finite, infinity, label };

  static MarkedPoint finite(Rational coordinate);
  static MarkedPoint infinity();
  static MarkedPoint label(std::string name);

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::finite; }
  bool is_infinity() const noexcept { return kind_ == Kind::infinity; }
  bool is_label() const noexcept { return kind_ == Kind::label; }

  /// Only meaningful for finite points.
  const Rational& coordinate() const noexcept { return coordinate_; }
  /// Only meaningful for label points.
  const std::string& name() const noexcept { return name_; }

  /// "3/2", "inf" or "@name".
  std::string to_string() const;

  friend bool operator==(const MarkedPoint& a, const MarkedPoint& b);
  friend bool operator<(const MarkedPoint& a, const MarkedPoint& b);

 private:
  MarkedPoint(Kind kind, Rational coordinate, std::string name)
      : kind_(kind), coordinate_(std::move(coordinate)), name_(std::move(name)) {}

  Kind kind_;
  Rational coordinate_;
  std::string name_;
};

inline bool operator!=(const MarkedPoint& a, const MarkedPoint& b) { return !(a == b); }

/// Shorthand used throughout the tests and tools: pt(0), pt(1), pt_inf().
inline MarkedPoint pt(long x) { return MarkedPoint::finite(Rational(x)); }
inline MarkedPoint pt_inf() { return MarkedPoint::infinity(); }

/// Divisor with coefficients in a ring (Integer or Rational), zero terms never stored.
template <typename Coefficient>
class BasicDivisor {
 public:
  using Terms = std::map<MarkedPoint, Coefficient>;

  BasicDivisor() = default;
  BasicDivisor(std::initializer_list<std::pair<const MarkedPoint, Coefficient>> terms) {
    for (const auto& [p, c] : terms) add(p, c);
  }

  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Coefficient coefficient(const MarkedPoint& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Coefficient(0) : it->second;
  }

  void add(const MarkedPoint& p, const Coefficient& c) {
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  void set(const MarkedPoint& p, const Coefficient& c) {
    if (c == 0) {
      terms_.erase(p);
    } else {
      terms_[p] = c;
    }
  }

  BasicDivisor& operator+=(const BasicDivisor& other) {
    for (const auto& [p, c] : other.terms_) add(p, c);
    return *this;
  }
  BasicDivisor& operator-=(const BasicDivisor& other) {
    for (const auto& [p, c] : other.terms_) add(p, Coefficient(-c));
    return *this;
  }
  BasicDivisor& operator*=(const Coefficient& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [p, c] : terms_) c *= s;
    return *this;
  }

  friend BasicDivisor operator+(BasicDivisor a, const BasicDivisor& b) { return a += b; }
  friend BasicDivisor operator-(BasicDivisor a, const BasicDivisor& b) { return a -= b; }
  friend BasicDivisor operator*(const Coefficient& s, BasicDivisor a) { return a *= s; }
  friend bool operator==(const BasicDivisor& a, const BasicDivisor& b) { return a.terms_ == b.terms_; }

  Coefficient degree() const {
    Coefficient total = 0;
    for (const auto& [p, c] : terms_) total += c;
    return total;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [p, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + conesing::to_string(c) + ")[" + p.to_string() + "]";
    }
    return out;
  }

 private:
  Terms terms_;
};

/// D = sum (p_i/q_i) D_i on P^1, coefficients stored reduced.
using QDivisor = BasicDivisor<Rational>;
/// Integral divisors such as floor(nD) or div(f).
using IntegralDivisor = BasicDivisor<Integer>;

QDivisor to_rational(const IntegralDivisor& d);

/// The couple (P^1, D) with D ample, i.e. deg D > 0.
class CurveCouple {
 public:
  /// Throws Error(precondition, "NotAmple") when deg D <= 0.
  explicit CurveCouple(QDivisor divisor);

  const QDivisor& divisor() const noexcept { return divisor_; }
  Rational degree() const { return divisor_.degree(); }

  friend bool operator==(const CurveCouple& a, const CurveCouple& b) { return a.divisor_ == b.divisor_; }

 private:
  QDivisor divisor_;
};

Rational degree(const QDivisor& d);

/// floor(n D), taken pointwise.
IntegralDivisor floor_multiple(const QDivisor& d, const Integer& n);

/// Denominator of the coefficient at p (1 away from the support).
Integer weil_index_at(const QDivisor& d, const MarkedPoint& p);
/// On a smooth curve the local Cartier index equals the Weil index.
Integer cartier_index_at(const QDivisor& d, const MarkedPoint& p);

/// Order of the stabiliser of a non-vertex point of X lying over p.
Integer isotropy_order(const CurveCouple& c, const MarkedPoint& p);
/// max_i q_i, 1 when D is integral.
Integer max_isotropy(const CurveCouple& c);

/// lcm of all denominators of D.
Integer period(const QDivisor& d);

/// Replaces label points by finite coordinates 0, 1, inf, 2, 3, ... skipping
/// coordinates already used. Labels are processed in name order.
QDivisor assign_coordinates(const QDivisor& d);
CurveCouple assign_coordinates(const CurveCouple& c);

/// Isomorphism key of the cone singularity: sorted fractional parts plus degree.
struct NormalFormKey {
  std::vector<Rational> fractional_parts;  // descending, each in (0,1)
  Rational degree;
  bool moduli_present = false;  // more than three fractional points

  std::string to_string() const;
  friend bool operator==(const NormalFormKey&, const NormalFormKey&) = default;
};

struct NormalForm {
  CurveCouple couple;
  NormalFormKey key;
};

/// Canonical representative of the linear-equivalence class. Fractional parts
/// go to 0, 1, inf in descending order (when at most three), and the integral
/// part sits at inf. With four or more fractional points the positions are kept
/// and the key is flagged as carrying moduli.
NormalForm normal_form(const CurveCouple& c);

/// Coefficients of K on the model X~ along invariant divisors:
/// q_i - 1 along the strict transform over each stored point, -1 along E0,
/// in addition to the pullback of K_Y.
struct CanonicalDataOnTilde {
  std::vector<std::pair<MarkedPoint, Integer>> strict_transforms;
  Integer e0 = -1;
  bool includes_pullback_of_ky = true;
};
CanonicalDataOnTilde canonical_data_on_tilde(const CurveCouple& c);

/// div(f chi^u) on X~ for div_Y(f) = h.
struct PrincipalDivisorOnCone {
  Integer e0;
  std::vector<std::pair<MarkedPoint, Integer>> invariant_divisors;

  Integer coefficient_at(const MarkedPoint& p) const;
};

/// Throws Error(precondition, "NonPrincipal") if deg h != 0.
PrincipalDivisorOnCone principal_divisor_on_cone(const CurveCouple& c, const IntegralDivisor& h, const Integer& u);

}  // namespace conesing
