#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace skewring {

/// Coefficient ring: a prime field GF(p), the rationals, or Z/n.
///
/// Z/n with n prime is a field; Z/n with n composite is only a ring, and
/// every operation that needs division (linear algebra, inverses) rejects it.
class Carrier {
 public:
  enum class Kind : std::uint8_t { prime_field, rational, modular };

  static Carrier gf(std::int64_t p);
  static Carrier rationals();
  static Carrier zmod(std::int64_t n);
  /// Parses "gf:2", "gf:3", "q", "zmod:4".
  static Carrier parse(std::string const& text);

  Kind kind() const { return kind_; }
  std::int64_t modulus() const { return modulus_; }
  bool is_field() const { return field_; }
  bool is_finite() const { return kind_ != Kind::rational; }
  /// Number of elements; only meaningful when is_finite().
  std::int64_t order() const { return modulus_; }
  std::string name() const;

  friend bool operator==(Carrier const&, Carrier const&) = default;

 private:
  Carrier(Kind k, std::int64_t m, bool field) : kind_(k), modulus_(m), field_(field) {}

  Kind kind_ = Kind::prime_field;
  std::int64_t modulus_ = 2;
  bool field_ = true;
};

bool is_prime(std::int64_t n);

class Scalar {
 public:
  using Rational = boost::rational<std::int64_t>;

  explicit Scalar(Carrier c) : carrier_(c) {}
  Scalar(Carrier c, std::int64_t value);
  Scalar(Carrier c, std::int64_t num, std::int64_t den);

  static Scalar zero(Carrier c) { return Scalar(c); }
  static Scalar one(Carrier c) { return Scalar(c, 1); }

  Carrier const& carrier() const { return carrier_; }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }

  /// Residue in [0, n) for modular carriers; numerator for rationals.
  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  Scalar& operator+=(Scalar const& o);
  Scalar& operator-=(Scalar const& o);
  Scalar& operator*=(Scalar const& o);
  Scalar operator-() const;

  /// Multiplicative inverse; throws std::domain_error on zero or a non-field carrier.
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, Scalar const& b) { return a += b; }
  friend Scalar operator-(Scalar a, Scalar const& b) { return a -= b; }
  friend Scalar operator*(Scalar a, Scalar const& b) { return a *= b; }
  friend bool operator==(Scalar const& a, Scalar const& b) {
    return a.carrier_ == b.carrier_ && a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(Scalar const& a, Scalar const& b) {
    return a.num_ != b.num_ ? a.num_ < b.num_ : a.den_ < b.den_;
  }

  std::string to_string() const;

 private:
  void check_same(Scalar const& o) const;
  void normalize_modular(std::int64_t v);
  void assign(Rational const& q);

  Carrier carrier_;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace skewring
