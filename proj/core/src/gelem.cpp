#include "garside/gelem.hpp"

#include <stdexcept>

namespace garside {

Monomial Monomial::identity(int m, int n) {
  Monomial r;
  r.m = m;
  r.perm.resize(n);
  r.phase.assign(n, 0);
  for (int i = 0; i < n; ++i) r.perm[i] = i;
  return r;
}

Monomial Monomial::transposition(int m, int n, int i, int j) {
  Monomial r = identity(m, n);
  std::swap(r.perm[i], r.perm[j]);
  return r;
}

Monomial Monomial::reflected_transposition(int m, int n, int i, int j, int k) {
  Monomial r = identity(m, n);
  k = ((k % m) + m) % m;
  r.perm[i] = j;
  r.perm[j] = i;
  r.phase[i] = k;
  r.phase[j] = (m - k) % m;
  return r;
}

Monomial Monomial::diagonal(int m, int n, int i, int k) {
  Monomial r = identity(m, n);
  r.phase[i] = ((k % m) + m) % m;
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  // (a*b): e_j -> zeta^{b.phase[j]} e_{b.perm[j]} -> zeta^{b.phase[j]+a.phase[b.perm[j]]} e_{a.perm[b.perm[j]]}
  int n = a.dim();
  Monomial r;
  r.m = a.m;
  r.perm.resize(n);
  r.phase.resize(n);
  for (int j = 0; j < n; ++j) {
    r.perm[j] = a.perm[b.perm[j]];
    r.phase[j] = (b.phase[j] + a.phase[b.perm[j]]) % a.m;
  }
  return r;
}

Monomial Monomial::inverse() const {
  int n = dim();
  Monomial r;
  r.m = m;
  r.perm.resize(n);
  r.phase.resize(n);
  for (int j = 0; j < n; ++j) {
    r.perm[perm[j]] = j;
    r.phase[perm[j]] = (m - phase[j]) % m;
  }
  return r;
}

bool Monomial::is_identity() const {
  for (int j = 0; j < dim(); ++j)
    if (perm[j] != j || phase[j] != 0) return false;
  return true;
}

bool Monomial::is_reflection() const {
  int moved = -1, moved2 = -1;
  for (int j = 0; j < dim(); ++j) {
    if (perm[j] != j) {
      if (moved < 0)
        moved = j;
      else if (moved2 < 0)
        moved2 = j;
      else
        return false;
    }
  }
  if (moved < 0) {
    // diagonal: exactly one nontrivial phase
    int cnt = 0;
    for (int j = 0; j < dim(); ++j)
      if (phase[j] != 0) ++cnt;
    return cnt == 1;
  }
  if (moved2 < 0) return false;  // a permutation moves points in pairs at least
  if (perm[moved] != moved2 || perm[moved2] != moved) return false;
  for (int j = 0; j < dim(); ++j)
    if (j != moved && j != moved2 && phase[j] != 0) return false;
  // fixes the hyperplane x_moved = zeta^{-phase[moved]} x_moved2
  return (phase[moved] + phase[moved2]) % m == 0;
}

int Monomial::phase_sum() const {
  int s = 0;
  for (int j = 0; j < dim(); ++j) s = (s + phase[j]) % m;
  return s;
}

void Monomial::append_key(std::string& out) const {
  out += 'M';
  out += std::to_string(m);
  out += ':';
  for (int j = 0; j < dim(); ++j) {
    out += std::to_string(perm[j]);
    out += ',';
    out += std::to_string(phase[j]);
    out += ';';
  }
}

CycMatrix CycMatrix::identity(int m, int n) {
  CycMatrix r;
  r.m = m;
  r.n = n;
  r.a.assign((size_t)n * n, Cyc::zero(m));
  for (int i = 0; i < n; ++i) r.at(i, i) = Cyc::one(m);
  return r;
}

CycMatrix operator*(const CycMatrix& x, const CycMatrix& y) {
  CycMatrix r;
  r.m = x.m;
  r.n = x.n;
  r.a.assign((size_t)x.n * x.n, Cyc::zero(x.m));
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      const Cyc& xik = x.at(i, k);
      if (xik.is_zero()) continue;
      for (int j = 0; j < x.n; ++j) {
        const Cyc& ykj = y.at(k, j);
        if (ykj.is_zero()) continue;
        r.at(i, j) = r.at(i, j) + xik * ykj;
      }
    }
  return r;
}

bool CycMatrix::is_identity() const {
  return *this == identity(m, n);
}

bool CycMatrix::is_reflection() const {
  // B = M - I must have rank exactly 1: some entry nonzero, all 2x2 minors 0.
  CycMatrix B = *this;
  for (int i = 0; i < n; ++i) B.at(i, i) = B.at(i, i) - Cyc::one(m);
  bool nonzero = false;
  for (const auto& c : B.a)
    if (!c.is_zero()) {
      nonzero = true;
      break;
    }
  if (!nonzero) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          Cyc det = B.at(i, k) * B.at(j, l) - B.at(i, l) * B.at(j, k);
          if (!det.is_zero()) return false;
        }
  return true;
}

bool CycMatrix::has_order_two() const {
  return !is_identity() && (*this * *this).is_identity();
}

void CycMatrix::append_key(std::string& out) const {
  out += 'C';
  out += std::to_string(m);
  out += ':';
  for (const auto& c : a) c.append_key(out);
}

GroupElem gelem_mul(const GroupElem& a, const GroupElem& b) {
  if (a.index() != b.index()) throw std::logic_error("mixed element backends");
  if (std::holds_alternative<Monomial>(a))
    return std::get<Monomial>(a) * std::get<Monomial>(b);
  return std::get<CycMatrix>(a) * std::get<CycMatrix>(b);
}

GroupElem gelem_inverse(const GroupElem& a) {
  if (std::holds_alternative<Monomial>(a)) return std::get<Monomial>(a).inverse();
  // matrix inverse is never needed directly: the group engine tracks inverses
  throw std::logic_error("direct matrix inversion unsupported");
}

bool gelem_is_identity(const GroupElem& a) {
  return std::visit([](const auto& x) { return x.is_identity(); }, a);
}

bool gelem_is_reflection(const GroupElem& a) {
  return std::visit([](const auto& x) { return x.is_reflection(); }, a);
}

bool gelem_has_order_two(const GroupElem& a) {
  if (std::holds_alternative<Monomial>(a)) {
    const auto& x = std::get<Monomial>(a);
    return !x.is_identity() && (x * x).is_identity();
  }
  return std::get<CycMatrix>(a).has_order_two();
}

std::string gelem_key(const GroupElem& a) {
  std::string s;
  std::visit([&s](const auto& x) { x.append_key(s); }, a);
  return s;
}

}  // namespace garside
