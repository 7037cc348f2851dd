#include "currentrep/element.hpp"

#include <cmath>
#include <sstream>

#include "currentrep/error.hpp"

namespace currentrep {

CurrentElement::CurrentElement(AlgebraPtr alg) : alg_(std::move(alg)) {
  for (int i = 0; i <= alg_->m(); ++i) coeffs_.emplace_back(alg_->n(), alg_->n(), alg_->p());
}

CurrentElement CurrentElement::from_coeffs(AlgebraPtr alg, std::vector<FpMatrix> coeffs) {
  if (static_cast<int>(coeffs.size()) != alg->m() + 1)
    raise(ErrorKind::AlgebraMismatch, "expected m+1 coefficient matrices");
  for (const auto& c : coeffs) {
    if (c.rows() != static_cast<std::size_t>(alg->n()) || c.cols() != static_cast<std::size_t>(alg->n()) ||
        c.p() != alg->p())
      raise(ErrorKind::AlgebraMismatch, "coefficient matrix has the wrong shape or field");
    alg->local_coords(c);
  }
  CurrentElement x(alg);
  x.coeffs_ = std::move(coeffs);
  return x;
}

CurrentElement CurrentElement::from_coords(AlgebraPtr alg, const FpVec& coords) {
  if (static_cast<int>(coords.size()) != alg->dim()) raise(ErrorKind::AlgebraMismatch, "coordinate vector has wrong length");
  CurrentElement x(alg);
  for (int i = 0; i <= alg->m(); ++i) x.coeffs_[i] = alg->local_from_coords(coords.data() + i * alg->dim_g());
  return x;
}

CurrentElement CurrentElement::basis_element(AlgebraPtr alg, int k) {
  FpVec c(alg->dim(), 0);
  c.at(k) = 1;
  return from_coords(alg, c);
}

CurrentElement CurrentElement::random(AlgebraPtr alg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, static_cast<int>(alg->p()) - 1);
  FpVec c(alg->dim());
  for (auto& v : c) v = static_cast<std::uint8_t>(d(rng));
  return from_coords(std::move(alg), c);
}

CurrentElement CurrentElement::homogeneous(AlgebraPtr alg, const FpMatrix& x, int degree) {
  if (degree < 0 || degree > alg->m()) raise(ErrorKind::UnsupportedTruncation, "degree outside [0, m]");
  alg->local_coords(x);
  CurrentElement e(alg);
  e.coeffs_[degree] = x;
  return e;
}

FpVec CurrentElement::coords() const {
  FpVec out;
  out.reserve(alg_->dim());
  for (const auto& c : coeffs_) {
    FpVec l = alg_->local_coords(c);
    out.insert(out.end(), l.begin(), l.end());
  }
  return out;
}

bool CurrentElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

TruncPoly CurrentElement::entry(int r, int c) const {
  TruncPoly t(alg_->p(), alg_->m());
  for (int i = 0; i <= alg_->m(); ++i) t.set(i, coeffs_[i](r, c));
  return t;
}

std::string CurrentElement::to_string() const {
  std::ostringstream os;
  const FpVec c = coords();
  bool first = true;
  for (int k = 0; k < alg_->dim(); ++k) {
    if (!c[k]) continue;
    if (!first) os << " + ";
    first = false;
    if (c[k] != 1) os << static_cast<int>(c[k]) << "*";
    os << alg_->basis(k).label;
  }
  if (first) os << "0";
  return os.str();
}

void CurrentElement::check_same(const CurrentElement& o) const {
  if (!(alg_->desc() == o.alg_->desc())) raise(ErrorKind::AlgebraMismatch, "elements of different algebras");
}

CurrentElement& CurrentElement::operator+=(const CurrentElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CurrentElement& CurrentElement::operator-=(const CurrentElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CurrentElement CurrentElement::scaled(Fp s) const {
  CurrentElement r = *this;
  for (auto& c : r.coeffs_) c = c.scaled(s);
  return r;
}

bool operator==(const CurrentElement& a, const CurrentElement& b) {
  return a.alg_->desc() == b.alg_->desc() && a.coeffs_ == b.coeffs_;
}

std::vector<FpMatrix> truncated_product(const std::vector<FpMatrix>& a, const std::vector<FpMatrix>& b, int m) {
  const std::size_t n = a[0].rows();
  std::vector<FpMatrix> out(m + 1, FpMatrix(n, n, a[0].p()));
  for (int i = 0; i <= m; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= m; ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

CurrentElement bracket(const CurrentElement& x, const CurrentElement& y) {
  if (!(x.desc() == y.desc())) raise(ErrorKind::AlgebraMismatch, "bracket of elements of different algebras");
  const int m = x.desc().m;
  auto xy = truncated_product(x.coeffs(), y.coeffs(), m);
  auto yx = truncated_product(y.coeffs(), x.coeffs(), m);
  for (int i = 0; i <= m; ++i) xy[i] -= yx[i];
  return CurrentElement::from_coeffs(x.algebra(), std::move(xy));
}

CurrentElement p_map(const CurrentElement& x) {
  const int m = x.desc().m;
  std::vector<FpMatrix> acc = x.coeffs();
  for (std::uint32_t k = 1; k < x.desc().p; ++k) acc = truncated_product(acc, x.coeffs(), m);
  return CurrentElement::from_coeffs(x.algebra(), std::move(acc));
}

CurrentElement p_map_iterate(const CurrentElement& x, int k) {
  CurrentElement y = x;
  for (int i = 0; i < k; ++i) y = p_map(y);
  return y;
}

std::string element_class_name(ElementClass c) {
  switch (c) {
    case ElementClass::Nilpotent: return "nilpotent";
    case ElementClass::Semisimple: return "semisimple";
    case ElementClass::Mixed: return "mixed";
  }
  return "?";
}

ElementClass classify_element(const CurrentElement& x) {
  const auto& d = x.desc();
  const double size = static_cast<double>(d.n) * (d.m + 1);
  int bound = static_cast<int>(std::ceil(std::log(size) / std::log(static_cast<double>(d.p)) - 1e-9)) + 1;
  CurrentElement y = x;
  for (int i = 0; i < bound; ++i) {
    if (y.is_zero()) return ElementClass::Nilpotent;
    y = p_map(y);
  }
  if (y.is_zero()) return ElementClass::Nilpotent;
  // semisimple iff x lies in the span of x^{[p]^i}, i >= 1
  const int D = d.dim();
  EchelonBasis span(D, d.p);
  y = p_map(x);
  for (int i = 0; i <= D; ++i) {
    if (span.insert(y.coords()) < 0) break;
    y = p_map(y);
  }
  return span.contains(x.coords()) ? ElementClass::Semisimple : ElementClass::Mixed;
}

FpMatrix flatten(const CurrentElement& x) {
  const int n = x.desc().n, m = x.desc().m;
  const int B = m + 1;
  FpMatrix big(static_cast<std::size_t>(n) * B, static_cast<std::size_t>(n) * B, x.desc().p);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      for (int j = 0; j <= m; ++j)
        for (int i = j; i <= m; ++i) big.set(r * B + i, c * B + j, x.coeff(i - j)(r, c));
  return big;
}

namespace {

CurrentElement unflatten(const AlgebraPtr& alg, const FpMatrix& big) {
  const int n = alg->n(), m = alg->m();
  const int B = m + 1;
  std::vector<FpMatrix> coeffs(m + 1, FpMatrix(n, n, alg->p()));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      for (int i = 0; i <= m; ++i) coeffs[i].set(r, c, big(r * B + i, c * B));
  return CurrentElement::from_coeffs(alg, std::move(coeffs));
}

}  // namespace

JordanDecomposition jordan_decompose(const CurrentElement& x) {
  const std::uint32_t p = x.desc().p;
  const FpMatrix big = flatten(x);
  const FpPoly g = radical(minpoly(big));
  const FpPoly dg = derivative(g);
  FpMatrix s = big;
  for (int iter = 0; iter < 64; ++iter) {
    FpMatrix gs = evaluate(g, s);
    if (gs.is_zero()) break;
    s = s - gs * inverse(evaluate(dg, s));
    if (iter == 63) raise(ErrorKind::InternalError, "Newton iteration for the semisimple part did not converge");
  }
  (void)p;
  CurrentElement ss = unflatten(x.algebra(), s);
  return {ss, x - ss};
}

Fp kappa(const CurrentElement& x, const CurrentElement& y) {
  if (!(x.desc() == y.desc())) raise(ErrorKind::AlgebraMismatch, "kappa of elements of different algebras");
  const int m = x.desc().m;
  const std::uint32_t p = x.desc().p;
  Fp tr = 0;
  for (int i = 0; i <= m; ++i) {
    const FpMatrix prod = x.coeff(i) * y.coeff(m - i);
    for (std::size_t d = 0; d < prod.rows(); ++d) tr = fp_add(tr, prod(d, d), p);
  }
  return tr;
}

FpMatrix gram_matrix(const CurrentAlgebra& alg) {
  const int D = alg.dim(), m = alg.m();
  FpMatrix g(D, D, alg.p());
  for (int k = 0; k < D; ++k)
    for (int l = 0; l < D; ++l) {
      const auto& a = alg.basis(k);
      const auto& b = alg.basis(l);
      if (a.degree + b.degree == m) g.set(k, l, alg.trace_form(a.local, b.local));
    }
  return g;
}

FpMatrix ad_matrix(const CurrentElement& x) {
  const auto& alg = *x.algebra();
  const int D = alg.dim();
  const std::uint32_t p = alg.p();
  const FpVec c = x.coords();
  FpMatrix ad(D, D, p);
  for (int k = 0; k < D; ++k) {
    if (!c[k]) continue;
    for (int l = 0; l < D; ++l)
      for (auto [q, v] : alg.bracket(k, l)) ad.add_to(q, l, fp_mul(c[k], v, p));
  }
  return ad;
}

std::vector<CurrentElement> centralizer_basis(const CurrentElement& x) {
  const FpMatrix k = nullspace(ad_matrix(x));
  std::vector<CurrentElement> out;
  for (std::size_t i = 0; i < k.rows(); ++i) out.push_back(CurrentElement::from_coords(x.algebra(), k.row_vec(i)));
  return out;
}

bool is_regular(const CurrentElement& x) {
  const auto& d = x.desc();
  return static_cast<int>(centralizer_basis(x).size()) == (d.m + 1) * d.rank();
}

}  // namespace currentrep
