#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace kacq {

// Arbitrary-precision integer. Values that fit in int64 never touch GMP;
// anything larger is promoted transparently and demoted when it shrinks back.
class Integer {
 public:
  Integer() = default;
  Integer(long long v) : small_(v) {}  // NOLINT(google-explicit-constructor)
  Integer(long v) : small_(v) {}       // NOLINT(google-explicit-constructor)
  Integer(int v) : small_(v) {}        // NOLINT(google-explicit-constructor)
  explicit Integer(const mpz_class& v);
  static Integer parse(std::string_view text);

  Integer(const Integer& o) : small_(o.small_), big_(o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr) {}
  Integer(Integer&&) noexcept = default;
  Integer& operator=(const Integer& o);
  Integer& operator=(Integer&&) noexcept = default;

  bool is_zero() const { return !big_ && small_ == 0; }
  int sign() const;
  bool fits_int64() const { return !big_; }
  std::int64_t to_int64() const;  // throws if out of range
  mpz_class to_mpz() const;
  std::string str() const;

  Integer& operator+=(const Integer& o);
  Integer& operator-=(const Integer& o);
  Integer& operator*=(const Integer& o);
  // this += a * b
  void add_mul(const Integer& a, const Integer& b);
  void sub_mul(const Integer& a, const Integer& b);
  Integer operator-() const;

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend bool operator==(const Integer& a, const Integer& b);
  friend bool operator<(const Integer& a, const Integer& b);
  friend std::ostream& operator<<(std::ostream& os, const Integer& v);

 private:
  void set_big(mpz_class v);
  std::int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

}  // namespace kacq
