#include "garside/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace garside {

namespace {

// Exact division of integer polynomials with invertible leading coefficient.
// Used only to build cyclotomic polynomials from x^m - 1.
std::vector<std::int64_t> exact_div(std::vector<std::int64_t> a,
                                    const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> q(a.size() - b.size() + 1, 0);
  for (int i = (int)q.size() - 1; i >= 0; --i) {
    std::int64_t c = a[i + b.size() - 1] / b.back();
    q[i] = c;
    if (c != 0)
      for (size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
  }
  for (auto v : a)
    if (v != 0) throw std::logic_error("non-exact polynomial division");
  return q;
}

std::map<int, std::vector<std::int64_t>> g_phi;
std::mutex g_phi_mx;

// Requires all proper divisors already present in g_phi.
std::vector<std::int64_t> compute_locked(int m) {
  if (m == 1) return {-1, 1};
  std::vector<std::int64_t> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) num = exact_div(num, g_phi.at(d));
  return num;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int m) {
  if (m < 1) throw std::domain_error("cyclotomic order must be positive");
  std::lock_guard<std::mutex> lk(g_phi_mx);
  auto it = g_phi.find(m);
  if (it != g_phi.end()) return it->second;
  for (int d = 1; d <= m; ++d)
    if (m % d == 0 && !g_phi.count(d)) g_phi.emplace(d, compute_locked(d));
  return g_phi.at(m);
}

Cyc Cyc::root_power(int m, int k) {
  k %= m;
  if (k < 0) k += m;
  std::vector<Rational> cs(k + 1);
  cs[k] = Rational(1);
  return from_coeffs(m, std::move(cs));
}

Cyc Cyc::from_coeffs(int m, std::vector<Rational> cs) {
  Cyc c(m);
  c.reduce(cs);
  c.coeffs_ = std::move(cs);
  c.trim();
  return c;
}

void Cyc::reduce(std::vector<Rational>& raw) const {
  const auto& phi = cyclotomic_polynomial(m_);
  size_t deg = phi.size() - 1;  // monic, degree phi(m)
  if (raw.size() <= deg) return;
  for (size_t i = raw.size(); i-- > deg;) {
    Rational c = raw[i];
    if (c.is_zero()) continue;
    raw[i] = Rational(0);
    // x^i = x^(i-deg) * (x^deg - Phi)  (Phi monic of degree deg)
    for (size_t j = 0; j < deg; ++j) {
      if (phi[j] == 0) continue;
      raw[i - deg + j] -= c * Rational(phi[j]);
    }
  }
  raw.resize(deg);
}

void Cyc::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Cyc operator+(const Cyc& a, const Cyc& b) {
  Cyc r(a.m_);
  r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < r.coeffs_.size(); ++i) {
    Rational v;
    if (i < a.coeffs_.size()) v += a.coeffs_[i];
    if (i < b.coeffs_.size()) v += b.coeffs_[i];
    r.coeffs_[i] = v;
  }
  r.trim();
  return r;
}

Cyc operator-(const Cyc& a, const Cyc& b) { return a + (-b); }

Cyc Cyc::operator-() const {
  Cyc r(m_);
  r.coeffs_.resize(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = -coeffs_[i];
  return r;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
  if (a.is_zero() || b.is_zero()) return Cyc::zero(a.m_);
  std::vector<Rational> raw(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  Cyc r(a.m_);
  r.reduce(raw);
  r.coeffs_ = std::move(raw);
  r.trim();
  return r;
}

Cyc Cyc::galois(int k) const {
  std::vector<Rational> raw;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    size_t e = (i * (size_t)k) % m_;
    if (raw.size() <= e) raw.resize(e + 1);
    raw[e] += coeffs_[i];
  }
  return from_coeffs(m_, std::move(raw));
}

std::string Cyc::str() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!s.empty()) s += "+";
    s += coeffs_[i].str();
    if (i == 1) s += "z";
    if (i > 1) s += "z^" + std::to_string(i);
  }
  return s;
}

void Cyc::append_key(std::string& out) const {
  out += '[';
  for (const auto& c : coeffs_) {
    out += std::to_string(c.num());
    out += '/';
    out += std::to_string(c.den());
    out += ',';
  }
  out += ']';
}

}  // namespace garside
