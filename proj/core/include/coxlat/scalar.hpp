#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>

namespace coxlat {

using Rational = mpq_class;

/*
  Element of the real field Q(r2, r3, r5), stored as 8 rational
  coordinates over the basis

      (1, r2, r3, r5, r6, r10, r15, r30)

  where rD denotes sqrt(D).  This field contains every bilinear-form
  entry -cos(pi/m) for m in {1,2,3,4,5,6} together with any rational
  bond value, so all root coordinates arising here stay exact.

  Comparisons use the real embedding with the positive square roots.
  sign() first tests exact zero on the coordinates, then refines an
  MPFR interval enclosure with directed rounding, doubling precision up
  to a hard cap of 1024 bits.  A nonzero element whose sign is still
  ambiguous at the cap indicates internal corruption and aborts.
*/
class Scalar {
 public:
  static constexpr int kBasis = 8;
  // Radicands in basis order.
  static constexpr std::array<int, kBasis> kRadicand = {1, 2,  3,  5,
                                                        6, 10, 15, 30};

  Scalar() = default;
  Scalar(long v) { c_[0] = v; }  // NOLINT: implicit for arithmetic comfort
  Scalar(const Rational& v) { c_[0] = v; }

  static Scalar rational(long num, long den);
  // sqrt(d) for d in {1,2,3,5,6,10,15,30}.
  static Scalar radical(int d);
  // cos(pi/m) for m in {1,...,6}; values outside the field are rejected.
  static Scalar cos_pi_over(int m);

  const std::array<Rational, kBasis>& coords() const { return c_; }
  Rational& coord(int i) { return c_[i]; }
  const Rational& coord(int i) const { return c_[i]; }

  bool is_zero() const;
  bool is_rational() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    return a * b.inverse();
  }

  bool operator==(const Scalar& o) const { return c_ == o.c_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // -1, 0 or +1, exactly.
  int sign() const;
  bool operator<(const Scalar& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const Scalar& o) const { return (*this - o).sign() <= 0; }
  bool operator>(const Scalar& o) const { return (*this - o).sign() > 0; }
  bool operator>=(const Scalar& o) const { return (*this - o).sign() >= 0; }

  // Canonical rendering: terms in basis order joined by " + "/" - ",
  // zero terms omitted, "0" for zero.  Equal scalars render identically.
  std::string str() const;
  // Accepts the canonical syntax plus bare radicals ("r2", "-r5").
  static Scalar parse(const std::string& text);

  double approx() const;

 private:
  std::array<Rational, kBasis> c_{};  // value-initialized to 0/1
};

// Total-order comparator (real embedding); usable as std::map key compare.
struct ScalarLess {
  bool operator()(const Scalar& a, const Scalar& b) const { return a < b; }
};

}  // namespace coxlat
