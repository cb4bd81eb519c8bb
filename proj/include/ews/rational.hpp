#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ews {

/// Exact rational number over 64-bit integers, always kept normalized
/// (gcd(num,den)=1, den>0).  Used for coefficient sums where floating
/// point would make tie handling order-dependent.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Rational operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
  }
  Rational operator-() const { return Rational(-num_, den_); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return num_ * o.den_ < o.num_ * den_;
  }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  bool is_zero() const { return num_ == 0; }

  /// "p" when integral, "p/q" otherwise.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "p" or "p/q".
  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)),
                    std::stoll(s.substr(slash + 1)));
  }

private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace ews
