#ifndef AMALG_RATIONAL_HPP
#define AMALG_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace amalg {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Exact rational number. Invariants: denominator > 0, fraction in lowest
/// terms. All measures and costs are carried as Rational; decimal output is
/// presentation-only.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(std::int64_t n) : q_(n) {}  // NOLINT: implicit by design
  Rational(const BigInt& n) : q_(n) {}
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_ = boost::multiprecision::cpp_rational(num, den);
  }
  Rational(std::int64_t num, std::int64_t den)
      : Rational(BigInt(num), BigInt(den)) {}

  /// Accepts "p", "-p", "p/q".
  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(BigInt(s));
      return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::exception&) {
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
  }

  BigInt num() const { return numerator(q_); }
  BigInt den() const { return denominator(q_); }

  bool is_zero() const { return q_ == 0; }
  bool is_integer() const { return den() == 1; }

  Rational operator-() const { return Rational(-q_); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.q_ == 0) throw std::invalid_argument("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  std::string str() const {
    if (is_integer()) return num().str();
    return num().str() + "/" + den().str();
  }

  double approx() const { return static_cast<double>(q_); }

private:
  explicit Rational(boost::multiprecision::cpp_rational q) : q_(std::move(q)) {}
  boost::multiprecision::cpp_rational q_;
};

inline Rational reciprocal_factorial(int n) { return Rational(1, factorial(n)); }

}  // namespace amalg

#endif  // AMALG_RATIONAL_HPP
