#include "kacq/integer.hpp"

#include <ostream>
#include <stdexcept>

namespace kacq {

namespace {

mpz_class widen(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

}  // namespace

Integer::Integer(const mpz_class& v) { set_big(v); }

Integer Integer::parse(std::string_view text) {
  mpz_class v;
  if (v.set_str(std::string(text), 10) != 0) throw std::invalid_argument("not an integer: " + std::string(text));
  return Integer(v);
}

Integer& Integer::operator=(const Integer& o) {
  if (this != &o) {
    small_ = o.small_;
    big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
  }
  return *this;
}

void Integer::set_big(mpz_class v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) {
    small_ = v.get_si();
    big_.reset();
  } else {
    small_ = 0;
    if (big_) {
      *big_ = std::move(v);
    } else {
      big_ = std::make_unique<mpz_class>(std::move(v));
    }
  }
}

int Integer::sign() const {
  if (big_) return sgn(*big_);
  return (small_ > 0) - (small_ < 0);
}

std::int64_t Integer::to_int64() const {
  if (big_) throw std::overflow_error("integer does not fit in 64 bits");
  return small_;
}

mpz_class Integer::to_mpz() const { return big_ ? *big_ : widen(small_); }

std::string Integer::str() const { return big_ ? big_->get_str() : std::to_string(small_); }

Integer& Integer::operator+=(const Integer& o) {
  std::int64_t r;
  if (!big_ && !o.big_ && !__builtin_add_overflow(small_, o.small_, &r)) {
    small_ = r;
    return *this;
  }
  set_big(to_mpz() + o.to_mpz());
  return *this;
}

Integer& Integer::operator-=(const Integer& o) {
  std::int64_t r;
  if (!big_ && !o.big_ && !__builtin_sub_overflow(small_, o.small_, &r)) {
    small_ = r;
    return *this;
  }
  set_big(to_mpz() - o.to_mpz());
  return *this;
}

Integer& Integer::operator*=(const Integer& o) {
  std::int64_t r;
  if (!big_ && !o.big_ && !__builtin_mul_overflow(small_, o.small_, &r)) {
    small_ = r;
    return *this;
  }
  set_big(to_mpz() * o.to_mpz());
  return *this;
}

void Integer::add_mul(const Integer& a, const Integer& b) {
  std::int64_t p, r;
  if (!big_ && !a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &p) &&
      !__builtin_add_overflow(small_, p, &r)) {
    small_ = r;
    return;
  }
  set_big(to_mpz() + a.to_mpz() * b.to_mpz());
}

void Integer::sub_mul(const Integer& a, const Integer& b) {
  std::int64_t p, r;
  if (!big_ && !a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &p) &&
      !__builtin_sub_overflow(small_, p, &r)) {
    small_ = r;
    return;
  }
  set_big(to_mpz() - a.to_mpz() * b.to_mpz());
}

Integer Integer::operator-() const {
  Integer z;
  z -= *this;
  return z;
}

bool operator==(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // big values are never representable as small
}

bool operator<(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return a.small_ < b.small_;
  return a.to_mpz() < b.to_mpz();
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.str(); }

}  // namespace kacq
