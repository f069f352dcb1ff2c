#include "wittcob/rational.hpp"

#include "wittcob/matrix.hpp"

#include <cctype>
#include <stdexcept>

namespace wittcob {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::int64_t reduce(std::int64_t value, std::int64_t modulus) {
  std::int64_t r = value % modulus;
  return r < 0 ? r + modulus : r;
}

std::int64_t common_modulus(const ModP& a, const ModP& b) {
  if (a.modulus() != 0 && b.modulus() != 0 && a.modulus() != b.modulus()) {
    throw std::invalid_argument("mixing elements of different prime fields");
  }
  return a.modulus() != 0 ? a.modulus() : b.modulus();
}

ModP make(std::int64_t value, std::int64_t modulus) {
  if (modulus == 0) return ModP(static_cast<int>(value));
  return ModP(value, modulus);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
  std::string_view unsigned_part = body;
  if (!unsigned_part.empty() && (unsigned_part.front() == '-' || unsigned_part.front() == '+')) {
    unsigned_part.remove_prefix(1);
  }
  const auto slash = unsigned_part.find('/');
  std::string_view num = unsigned_part.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : unsigned_part.substr(slash + 1);
  bool negative = !body.empty() && body.front() == '-';
  if (!den.empty() && (den.front() == '-' || den.front() == '+')) {
    negative = negative != (den.front() == '-');
    den.remove_prefix(1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) { return value.get_str(10); }
std::string to_string(const Integer& value) { return value.get_str(10); }

Gaussian operator/(const Gaussian& a, const Gaussian& b) {
  const Rational norm = b.re * b.re + b.im * b.im;
  if (sgn(norm) == 0) throw std::domain_error("division by zero in Q(i)");
  const Gaussian num = a * b.conj();
  return {Rational(num.re / norm), Rational(num.im / norm)};
}

Gaussian i_power(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {Rational(1), Rational(0)};
    case 1: return {Rational(0), Rational(1)};
    case 2: return {Rational(-1), Rational(0)};
    default: return {Rational(0), Rational(-1)};
  }
}

std::string to_string(const Gaussian& value) {
  if (value.is_real()) return to_string(value.re);
  return "(" + to_string(value.re) + (sgn(value.im) < 0 ? "" : "+") + to_string(value.im) + "i)";
}

ModP::ModP(std::int64_t value, std::int64_t modulus) : modulus_(modulus) {
  if (modulus < 2 || modulus >= (std::int64_t{1} << 31)) {
    throw std::invalid_argument("prime field modulus out of supported range");
  }
  value_ = reduce(value, modulus);
}

ModP ModP::inverse() const {
  if (modulus_ == 0) {
    if (value_ == 1 || value_ == -1) return *this;
    throw std::domain_error("inverse of an unbound field literal");
  }
  if (value_ == 0) throw std::domain_error("division by zero in F_p");
  std::int64_t r0 = modulus_, r1 = value_, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1; r0 = r1; r1 = t;
    t = s0 - q * s1; s0 = s1; s1 = t;
  }
  if (r0 != 1) throw std::domain_error("element not invertible modulo " + std::to_string(modulus_));
  return ModP(s0, modulus_);
}

ModP operator+(const ModP& a, const ModP& b) {
  const std::int64_t m = common_modulus(a, b);
  return make(m ? reduce(a.value_ + b.value_, m) : a.value_ + b.value_, m);
}

ModP operator-(const ModP& a, const ModP& b) {
  const std::int64_t m = common_modulus(a, b);
  return make(m ? reduce(a.value_ - b.value_, m) : a.value_ - b.value_, m);
}

ModP operator-(const ModP& a) { return make(a.modulus_ ? reduce(-a.value_, a.modulus_) : -a.value_, a.modulus_); }

ModP operator*(const ModP& a, const ModP& b) {
  const std::int64_t m = common_modulus(a, b);
  if (m == 0) return make(a.value_ * b.value_, 0);
  return make(reduce(reduce(a.value_, m) * reduce(b.value_, m), m), m);
}

ModP operator/(const ModP& a, const ModP& b) {
  const std::int64_t m = common_modulus(a, b);
  if (m == 0) return a * b.inverse();
  return a * ModP(b.value_, m).inverse();
}

bool operator==(const ModP& a, const ModP& b) {
  const std::int64_t m = common_modulus(a, b);
  if (m == 0) return a.value_ == b.value_;
  return reduce(a.value_, m) == reduce(b.value_, m);
}

std::string to_string(const QMatrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? ", " : "") + to_string(m(r, c));
    out += "]";
  }
  return out + "]";
}

}  // namespace wittcob
