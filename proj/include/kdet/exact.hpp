#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kdet/error.hpp"

namespace kdet {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <class T>
using Matrix = std::vector<std::vector<T>>;

// 64-bit integer that throws instead of wrapping. Used for the small lattice
// geometry of root polytopes, where every intermediate is a minor of a 0/±1
// matrix and stays tiny.
class CheckedInt {
 public:
  constexpr CheckedInt() = default;
  constexpr CheckedInt(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  constexpr std::int64_t value() const { return v_; }

  friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) overflow();
    return r;
  }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) overflow();
    return r;
  }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) overflow();
    return r;
  }
  // Exact division only; Bareiss guarantees divisibility.
  friend CheckedInt operator/(CheckedInt a, CheckedInt b) {
    if (b.v_ == 0 || (a.v_ == INT64_MIN && b.v_ == -1)) overflow();
    return a.v_ / b.v_;
  }
  CheckedInt operator-() const { return CheckedInt(0) - *this; }
  CheckedInt& operator+=(CheckedInt o) { return *this = *this + o; }
  CheckedInt& operator-=(CheckedInt o) { return *this = *this - o; }
  CheckedInt& operator*=(CheckedInt o) { return *this = *this * o; }

  friend constexpr auto operator<=>(CheckedInt, CheckedInt) = default;

 private:
  [[noreturn]] static void overflow() {
    throw Error(ErrorCode::ArithmeticOverflow, "64-bit lattice arithmetic overflowed");
  }
  std::int64_t v_ = 0;
};

inline CheckedInt abs(CheckedInt x) { return x < 0 ? -x : x; }

// Fraction-free Gaussian elimination (Bareiss). Every division is exact, so
// the result is the exact determinant for any integral scalar type.
template <class T>
T bareiss_determinant(Matrix<T> m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  bool negate = false;
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == T(0)) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == T(0)) ++p;
      if (p == n) return T(0);
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return negate ? T(0) - m[n - 1][n - 1] : m[n - 1][n - 1];
}

// Rank of a rational matrix (rows are vectors).
std::size_t rank(Matrix<Rational> rows);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> reduce_row_echelon(Matrix<Rational>& rows);

BigInt factorial(unsigned n);

std::string to_string(const BigInt& x);

}  // namespace kdet
