#include "skewring/scalar.hpp"

#include <stdexcept>

#include <fmt/format.h>

namespace skewring {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Carrier Carrier::gf(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(fmt::format("gf:{} is not a prime field", p));
  return Carrier(Kind::prime_field, p, true);
}

Carrier Carrier::rationals() { return Carrier(Kind::rational, 0, true); }

Carrier Carrier::zmod(std::int64_t n) {
  if (n < 2) throw std::invalid_argument(fmt::format("zmod:{} needs n >= 2", n));
  return Carrier(Kind::modular, n, is_prime(n));
}

Carrier Carrier::parse(std::string const& text) {
  if (text == "q" || text == "Q") return rationals();
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("unknown carrier '" + text + "'");
  std::string head = text.substr(0, colon);
  std::int64_t value = 0;
  try {
    std::size_t used = 0;
    value = std::stoll(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw std::invalid_argument("trailing");
  } catch (std::exception const&) {
    throw std::invalid_argument("malformed carrier '" + text + "'");
  }
  if (head == "gf") return gf(value);
  if (head == "zmod") return zmod(value);
  throw std::invalid_argument("unknown carrier '" + text + "'");
}

std::string Carrier::name() const {
  switch (kind_) {
    case Kind::prime_field: return fmt::format("gf:{}", modulus_);
    case Kind::rational: return "q";
    case Kind::modular: return fmt::format("zmod:{}", modulus_);
  }
  return "?";
}

Scalar::Scalar(Carrier c, std::int64_t value) : carrier_(c) {
  if (c.kind() == Carrier::Kind::rational) {
    num_ = value;
  } else {
    normalize_modular(value);
  }
}

Scalar::Scalar(Carrier c, std::int64_t num, std::int64_t den) : carrier_(c) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (c.kind() == Carrier::Kind::rational) {
    assign(Rational(num, den));
  } else {
    normalize_modular(num);
    if (den != 1) *this *= Scalar(c, den).inverse();
  }
}

void Scalar::normalize_modular(std::int64_t v) {
  std::int64_t m = carrier_.modulus();
  v %= m;
  if (v < 0) v += m;
  num_ = v;
  den_ = 1;
}

void Scalar::assign(Rational const& q) {
  num_ = q.numerator();
  den_ = q.denominator();
}

void Scalar::check_same(Scalar const& o) const {
  if (!(carrier_ == o.carrier_))
    throw std::invalid_argument("mismatched carriers: " + carrier_.name() + " vs " + o.carrier_.name());
}

Scalar& Scalar::operator+=(Scalar const& o) {
  check_same(o);
  if (carrier_.kind() == Carrier::Kind::rational) {
    assign(Rational(num_, den_) + Rational(o.num_, o.den_));
  } else {
    num_ += o.num_;
    if (num_ >= carrier_.modulus()) num_ -= carrier_.modulus();
  }
  return *this;
}

Scalar& Scalar::operator-=(Scalar const& o) {
  check_same(o);
  if (carrier_.kind() == Carrier::Kind::rational) {
    assign(Rational(num_, den_) - Rational(o.num_, o.den_));
  } else {
    num_ -= o.num_;
    if (num_ < 0) num_ += carrier_.modulus();
  }
  return *this;
}

Scalar& Scalar::operator*=(Scalar const& o) {
  check_same(o);
  if (carrier_.kind() == Carrier::Kind::rational) {
    assign(Rational(num_, den_) * Rational(o.num_, o.den_));
  } else {
    num_ = static_cast<std::int64_t>((static_cast<__int128>(num_) * o.num_) % carrier_.modulus());
  }
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r(carrier_);
  return r -= *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (!carrier_.is_field())
    throw std::domain_error("division in " + carrier_.name() + ", which is not a field");
  Scalar r(carrier_);
  if (carrier_.kind() == Carrier::Kind::rational) {
    r.assign(Rational(den_, num_));
    return r;
  }
  // extended Euclid
  std::int64_t m = carrier_.modulus();
  std::int64_t a = num_, b = m, x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  r.normalize_modular(x0);
  return r;
}

std::string Scalar::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return fmt::format("{}/{}", num_, den_);
}

}  // namespace skewring
