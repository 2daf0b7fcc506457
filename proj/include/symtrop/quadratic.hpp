#pragma once

#include <stdexcept>
#include <string>

#include "symtrop/rational.hpp"

namespace symtrop {

// Element a + b*sqrt(R) of the quadratic field Q(sqrt(R)).
// R must be a positive non-square so that representation is unique.
template <int R>
struct QSqrt {
  static_assert(R == 2 || R == 3 || R == 5, "supported radicands");
  Rat a, b;

  QSqrt() : a(0), b(0) {}
  QSqrt(Rat a_, Rat b_ = Rat(0)) : a(std::move(a_)), b(std::move(b_)) {}
  QSqrt(long v) : a(v), b(0) {}

  static QSqrt sqrt_radicand() { return QSqrt(Rat(0), Rat(1)); }

  friend QSqrt operator+(const QSqrt& x, const QSqrt& y) {
    return QSqrt(x.a + y.a, x.b + y.b);
  }
  friend QSqrt operator-(const QSqrt& x, const QSqrt& y) {
    return QSqrt(x.a - y.a, x.b - y.b);
  }
  friend QSqrt operator-(const QSqrt& x) { return QSqrt(-x.a, -x.b); }
  friend QSqrt operator*(const QSqrt& x, const QSqrt& y) {
    return QSqrt(x.a * y.a + Rat(R) * x.b * y.b, x.a * y.b + x.b * y.a);
  }
  QSqrt inverse() const {
    Rat norm = a * a - Rat(R) * b * b;
    if (sign(norm) == 0) throw std::domain_error("division by zero");
    return QSqrt(a / norm, -b / norm);
  }
  friend QSqrt operator/(const QSqrt& x, const QSqrt& y) {
    return x * y.inverse();
  }
  QSqrt& operator+=(const QSqrt& y) { return *this = *this + y; }
  QSqrt& operator-=(const QSqrt& y) { return *this = *this - y; }
  QSqrt& operator*=(const QSqrt& y) { return *this = *this * y; }
  QSqrt& operator/=(const QSqrt& y) { return *this = *this / y; }

  friend bool operator==(const QSqrt& x, const QSqrt& y) {
    return x.a == y.a && x.b == y.b;
  }

  std::string str() const { return rat_str(a) + "+" + rat_str(b) + "*sqrt(" + std::to_string(R) + ")"; }
};

template <int R>
int sign(const QSqrt<R>& x) {
  return sign_plus_sqrt(x.a, x.b, Rat(R));
}

using QSqrt2 = QSqrt<2>;
using QSqrt3 = QSqrt<3>;

inline int sign_qsqrt2(const QSqrt2& x) { return sign(x); }

}  // namespace symtrop
