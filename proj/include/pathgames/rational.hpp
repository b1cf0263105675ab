#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace pathgames {

using Rat = mpq_class;

/// Exact rational with a symbolic +infinity. Finite arithmetic never rounds;
/// +inf absorbs addition and dominates every finite value in comparisons.
class ExtRational {
 public:
  ExtRational() : q_(0) {}
  ExtRational(long n) : q_(n) {}
  ExtRational(long n, long d) : q_(n, d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    q_.canonicalize();
  }
  explicit ExtRational(Rat q) : q_(std::move(q)) { q_.canonicalize(); }

  static ExtRational infinity() {
    ExtRational r;
    r.inf_ = true;
    return r;
  }

  // Accepts "p", "-p/q" and finite decimals like "0.25".
  static ExtRational parse(const std::string& text);

  bool is_infinite() const { return inf_; }
  bool is_zero() const { return !inf_ && q_ == 0; }
  bool is_negative() const { return !inf_ && q_ < 0; }

  const Rat& value() const {
    if (inf_) throw std::domain_error("value() on +infinity");
    return q_;
  }

  ExtRational operator+(const ExtRational& o) const {
    if (inf_ || o.inf_) return infinity();
    return ExtRational(Rat(q_ + o.q_));
  }
  ExtRational& operator+=(const ExtRational& o) { return *this = *this + o; }

  // inf - finite = inf; subtracting infinity is undefined.
  ExtRational operator-(const ExtRational& o) const {
    if (o.inf_) throw std::domain_error("cannot subtract +infinity");
    if (inf_) return infinity();
    return ExtRational(Rat(q_ - o.q_));
  }
  ExtRational operator-() const {
    if (inf_) throw std::domain_error("cannot negate +infinity");
    return ExtRational(Rat(-q_));
  }

  ExtRational operator*(const ExtRational& o) const {
    if (inf_ || o.inf_) {
      if (is_zero() || o.is_zero()) throw std::domain_error("0 * +infinity");
      if (is_negative() || o.is_negative())
        throw std::domain_error("negative * +infinity");
      return infinity();
    }
    return ExtRational(Rat(q_ * o.q_));
  }

  ExtRational reciprocal() const {
    if (inf_) return ExtRational(0);
    if (q_ == 0) throw std::domain_error("reciprocal of zero");
    return ExtRational(Rat(1 / q_));
  }

  bool operator==(const ExtRational& o) const {
    if (inf_ != o.inf_) return false;
    return inf_ || q_ == o.q_;
  }
  std::strong_ordering operator<=>(const ExtRational& o) const {
    if (inf_ && o.inf_) return std::strong_ordering::equal;
    if (inf_) return std::strong_ordering::greater;
    if (o.inf_) return std::strong_ordering::less;
    int c = cmp(q_, o.q_);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

  // Canonical form: "p/q" in lowest terms, "p" when the denominator is 1,
  // "inf" for +infinity.
  std::string str() const;

 private:
  bool inf_ = false;
  Rat q_;
};

std::string rat_str(const Rat& q);

}  // namespace pathgames
