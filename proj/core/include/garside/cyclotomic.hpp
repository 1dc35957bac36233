#ifndef GARSIDE_CYCLOTOMIC_HPP
#define GARSIDE_CYCLOTOMIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "garside/rational.hpp"

namespace garside {

// Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.
const std::vector<std::int64_t>& cyclotomic_polynomial(int m);

// An element of Q(zeta_m), stored as a rational polynomial in zeta of degree
// < phi(m), reduced modulo the m-th cyclotomic polynomial. All arithmetic is
// exact; no division is provided (the engine never needs field inverses).
class Cyc {
public:
  Cyc() : m_(1) {}
  explicit Cyc(int m) : m_(m) {}
  Cyc(int m, const Rational& c0) : m_(m) {
    if (!c0.is_zero()) coeffs_.assign(1, c0);
  }

  static Cyc zero(int m) { return Cyc(m); }
  static Cyc one(int m) { return Cyc(m, Rational(1)); }
  // zeta_m^k
  static Cyc root_power(int m, int k);
  // polynomial sum_i cs[i] * zeta^i
  static Cyc from_coeffs(int m, std::vector<Rational> cs);

  int order() const { return m_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  friend Cyc operator+(const Cyc& a, const Cyc& b);
  friend Cyc operator-(const Cyc& a, const Cyc& b);
  friend Cyc operator*(const Cyc& a, const Cyc& b);
  Cyc operator-() const;
  friend bool operator==(const Cyc& a, const Cyc& b) {
    return a.m_ == b.m_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  // Galois conjugation zeta -> zeta^k, gcd(k,m)=1.
  Cyc galois(int k) const;

  std::string str() const;
  void append_key(std::string& out) const;

private:
  void reduce(std::vector<Rational>& raw) const;
  void trim();

  int m_;
  std::vector<Rational> coeffs_;  // degree < phi(m); empty means 0
};

}  // namespace garside

#endif
