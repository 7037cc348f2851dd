#include "currentrep/fppoly.hpp"

#include <algorithm>

#include "currentrep/error.hpp"

namespace currentrep {

FpPoly::FpPoly(std::uint32_t p_, std::vector<Fp> coeffs) : p(p_), c(std::move(coeffs)) {
  for (auto& v : c) v %= p;
  trim();
}

FpPoly FpPoly::monomial(std::uint32_t p, std::size_t k, Fp v) {
  std::vector<Fp> c(k + 1, 0);
  c[k] = v % p;
  return FpPoly(p, std::move(c));
}

void FpPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  FpPoly r;
  r.p = a.p;
  r.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = fp_add(a.coeff(i), b.coeff(i), a.p);
  r.trim();
  return r;
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  FpPoly r;
  r.p = a.p;
  r.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = fp_sub(a.coeff(i), b.coeff(i), a.p);
  r.trim();
  return r;
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  FpPoly r;
  r.p = a.p;
  if (a.is_zero() || b.is_zero()) return r;
  std::vector<std::uint64_t> acc(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) acc[i + j] += static_cast<std::uint64_t>(a.c[i]) * b.c[j];
  }
  r.c.resize(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r.c[i] = static_cast<Fp>(acc[i] % a.p);
  r.trim();
  return r;
}

FpPoly scale(const FpPoly& a, Fp s) {
  FpPoly r = a;
  for (auto& v : r.c) v = fp_mul(v, s, a.p);
  r.trim();
  return r;
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) raise(ErrorKind::InternalError, "polynomial division by zero");
  const std::uint32_t p = a.p;
  FpPoly r = a;
  FpPoly q;
  q.p = p;
  if (a.degree() < b.degree()) return {q, r};
  q.c.assign(a.c.size() - b.c.size() + 1, 0);
  Fp inv = fp_inv(b.lead(), p);
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Fp coef = fp_mul(r.c[k + b.degree()], inv, p);
    q.c[k] = coef;
    if (!coef) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[k + j] = fp_sub(r.c[k + j], fp_mul(coef, b.c[j], p), p);
  }
  r.trim();
  q.trim();
  return {q, r};
}

FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }
FpPoly operator/(const FpPoly& a, const FpPoly& b) { return divmod(a, b).first; }

FpPoly monic(const FpPoly& a) {
  if (a.is_zero()) return a;
  return scale(a, fp_inv(a.lead(), a.p));
}

FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

FpPoly derivative(const FpPoly& a) {
  FpPoly r;
  r.p = a.p;
  if (a.c.size() <= 1) return r;
  r.c.resize(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = fp_mul(a.c[i], static_cast<Fp>(i % a.p), a.p);
  r.trim();
  return r;
}

FpPoly powmod(FpPoly a, std::uint64_t e, const FpPoly& f) {
  FpPoly r = FpPoly::constant(f.p, 1) % f;
  a = a % f;
  while (e) {
    if (e & 1) r = (r * a) % f;
    e >>= 1;
    if (e) a = (a * a) % f;
  }
  return r;
}

Fp evaluate(const FpPoly& a, Fp x) {
  Fp r = 0;
  for (std::size_t i = a.c.size(); i-- > 0;) r = fp_add(fp_mul(r, x, a.p), a.c[i], a.p);
  return r;
}

namespace {

FpPoly pth_root(const FpPoly& f) {
  FpPoly r;
  r.p = f.p;
  for (std::size_t i = 0; i < f.c.size(); i += f.p) r.c.push_back(f.c[i]);
  r.trim();
  return r;
}

// a^(p^k) mod f by repeated Frobenius.
FpPoly frobenius_power(const FpPoly& a, int k, const FpPoly& f) {
  FpPoly r = a % f;
  for (int i = 0; i < k; ++i) r = powmod(r, f.p, f);
  return r;
}

}  // namespace

std::vector<std::pair<FpPoly, int>> squarefree_factorization(const FpPoly& f0) {
  std::vector<std::pair<FpPoly, int>> out;
  FpPoly f = monic(f0);
  if (f.degree() <= 0) return out;
  FpPoly c = gcd(f, derivative(f));
  FpPoly w = f / c;
  int i = 1;
  while (!w.is_one()) {
    FpPoly y = gcd(w, c);
    FpPoly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(monic(fac), i);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    for (auto& [g, k] : squarefree_factorization(pth_root(c))) out.emplace_back(g, k * static_cast<int>(f.p));
  }
  return out;
}

FpPoly radical(const FpPoly& f) {
  FpPoly r = FpPoly::constant(f.p, 1);
  for (auto& [g, k] : squarefree_factorization(f)) r = r * g;
  return r;
}

std::vector<std::pair<FpPoly, int>> distinct_degree_factorization(const FpPoly& f0, int max_degree) {
  std::vector<std::pair<FpPoly, int>> out;
  FpPoly f = monic(f0);
  const FpPoly x = FpPoly::x(f.p);
  FpPoly h = x % f;
  int d = 1;
  while (f.degree() >= 2 * d) {
    if (max_degree >= 0 && d > max_degree) return out;
    h = powmod(h, f.p, f);
    FpPoly g = gcd(h - x, f);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
    ++d;
  }
  if (f.degree() > 0 && (max_degree < 0 || f.degree() <= max_degree)) out.emplace_back(f, f.degree());
  return out;
}

std::vector<FpPoly> equal_degree_factorization(const FpPoly& f0, int d, std::mt19937_64& rng) {
  FpPoly f = monic(f0);
  if (f.degree() <= d) return {f};
  const std::uint32_t p = f.p;
  std::uniform_int_distribution<Fp> coef(0, p - 1);
  for (int attempt = 0; attempt < 500; ++attempt) {
    FpPoly a;
    a.p = p;
    a.c.resize(f.degree());
    for (auto& v : a.c) v = coef(rng);
    a.trim();
    if (a.degree() < 1) continue;
    FpPoly b;
    if (p == 2) {
      // trace map a + a^2 + ... + a^(2^(d-1))
      FpPoly t = a % f;
      b = t;
      for (int i = 1; i < d; ++i) {
        t = (t * t) % f;
        b = b + t;
      }
    } else {
      FpPoly t = a % f;
      FpPoly norm = t;
      for (int i = 1; i < d; ++i) {
        t = powmod(t, p, f);
        norm = (norm * t) % f;
      }
      b = powmod(norm, (p - 1) / 2, f) - FpPoly::constant(p, 1);
    }
    FpPoly g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      auto left = equal_degree_factorization(g, d, rng);
      auto right = equal_degree_factorization(f / g, d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
  raise(ErrorKind::InternalError, "equal-degree factorization did not split");
}

std::vector<std::pair<FpPoly, int>> factor(const FpPoly& f, std::mt19937_64& rng) {
  std::vector<std::pair<FpPoly, int>> out;
  for (auto& [g, k] : squarefree_factorization(f))
    for (auto& [h, d] : distinct_degree_factorization(g))
      for (auto& irr : equal_degree_factorization(h, d, rng)) out.emplace_back(irr, k);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.c < b.first.c;
  });
  return out;
}

bool is_irreducible(const FpPoly& f0) {
  FpPoly f = monic(f0);
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const FpPoly x = FpPoly::x(f.p);
  if (!(frobenius_power(x, n, f) == x % f)) return false;
  for (int q = 2; q <= n; ++q) {
    if (n % q || !is_prime(q)) continue;
    FpPoly h = frobenius_power(x, n / q, f) - x;
    if (!gcd(h, f).is_one()) return false;
  }
  return true;
}

FpPoly charpoly(const FpMatrix& a0) {
  if (!a0.square()) raise(ErrorKind::InternalError, "charpoly of a non-square matrix");
  const std::uint32_t p = a0.p();
  const std::size_t n = a0.rows();
  FpMatrix h = a0;
  for (std::size_t m = 1; m + 1 < n + 1 && m < n; ++m) {
    std::size_t piv = m;
    while (piv < n && h(piv, m - 1) == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      std::swap_ranges(h.row(piv), h.row(piv) + n, h.row(m));
      for (std::size_t r = 0; r < n; ++r) {
        Fp t = h(r, piv);
        h.set(r, piv, h(r, m));
        h.set(r, m, t);
      }
    }
    Fp inv = fp_inv(h(m, m - 1), p);
    for (std::size_t k = m + 1; k < n; ++k) {
      Fp u = fp_mul(h(k, m - 1), inv, p);
      if (!u) continue;
      kernel::axpy(h.row(k), h.row(m), p - u, n, p);
      for (std::size_t r = 0; r < n; ++r) h.set(r, m, fp_add(h(r, m), fp_mul(u, h(r, k), p), p));
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_{ik} (prod_{j=i}^{k-1} h_{j+1,j}) p_{i-1}
  std::vector<std::vector<Fp>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Fp> cur(k + 1, 0);
    const auto& prev = polys[k - 1];
    Fp hkk = h(k - 1, k - 1);
    for (std::size_t d = 0; d < prev.size(); ++d) {
      cur[d + 1] = fp_add(cur[d + 1], prev[d], p);
      cur[d] = fp_sub(cur[d], fp_mul(hkk, prev[d], p), p);
    }
    Fp prod = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      prod = fp_mul(prod, h(i, i - 1), p);
      if (!prod) break;
      Fp coef = fp_mul(h(i - 1, k - 1), prod, p);
      if (coef) {
        const auto& q = polys[i - 1];
        for (std::size_t d = 0; d < q.size(); ++d) cur[d] = fp_sub(cur[d], fp_mul(coef, q[d], p), p);
      }
    }
    polys[k] = std::move(cur);
  }
  return FpPoly(p, polys[n]);
}

FpPoly minpoly_of_vector(const FpMatrix& a, const FpVec& v) {
  const std::uint32_t p = a.p();
  const std::size_t n = a.rows();
  EchelonBasis basis(n, p);
  std::vector<std::vector<Fp>> polys;
  FpVec u = v;
  FpVec coeffs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    FpVec r = u;
    basis.reduce(r.data(), coeffs.data());
    std::vector<Fp> poly(k + 1, 0);
    poly[k] = 1;
    for (std::size_t i = 0; i < basis.dim(); ++i) {
      if (!coeffs[i]) continue;
      for (std::size_t d = 0; d < polys[i].size(); ++d)
        poly[d] = fp_sub(poly[d], fp_mul(coeffs[i], polys[i][d], p), p);
    }
    std::size_t piv = 0;
    while (piv < n && r[piv] == 0) ++piv;
    if (piv == n) return FpPoly(p, poly);
    Fp inv = fp_inv(r[piv], p);
    for (auto& c : poly) c = fp_mul(c, inv, p);
    FpVec scaled = r;
    kernel::scale(scaled.data(), inv, n, p);
    basis.insert(scaled);
    polys.push_back(std::move(poly));
    u = a.apply(u);
  }
  raise(ErrorKind::InternalError, "Krylov sequence did not terminate");
}

FpPoly minpoly(const FpMatrix& a) {
  const std::uint32_t p = a.p();
  const std::size_t n = a.rows();
  EchelonBasis basis(n * n, p);
  std::vector<std::vector<Fp>> polys;
  FpMatrix pw = FpMatrix::identity(n, p);
  FpVec coeffs(n * n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    FpVec r(pw.data(), pw.data() + n * n);
    basis.reduce(r.data(), coeffs.data());
    std::vector<Fp> poly(k + 1, 0);
    poly[k] = 1;
    for (std::size_t i = 0; i < basis.dim(); ++i) {
      if (!coeffs[i]) continue;
      for (std::size_t d = 0; d < polys[i].size(); ++d)
        poly[d] = fp_sub(poly[d], fp_mul(coeffs[i], polys[i][d], p), p);
    }
    std::size_t piv = 0;
    while (piv < r.size() && r[piv] == 0) ++piv;
    if (piv == r.size()) return FpPoly(p, poly);
    Fp inv = fp_inv(r[piv], p);
    for (auto& c : poly) c = fp_mul(c, inv, p);
    kernel::scale(r.data(), inv, r.size(), p);
    basis.insert(r);
    polys.push_back(std::move(poly));
    pw = pw * a;
  }
  raise(ErrorKind::InternalError, "minimal polynomial search did not terminate");
}

FpMatrix evaluate(const FpPoly& f, const FpMatrix& a) {
  const std::size_t n = a.rows();
  FpMatrix r(n, n, a.p());
  for (std::size_t i = f.c.size(); i-- > 0;) {
    r = r * a;
    for (std::size_t d = 0; d < n; ++d) r.add_to(d, d, f.c[i]);
  }
  return r;
}

}  // namespace currentrep
