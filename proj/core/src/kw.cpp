#include "currentrep/kw.hpp"

#include <algorithm>

#include "currentrep/error.hpp"

namespace currentrep {

std::uint64_t abelian_cover_dim(const AlgebraDescriptor& d) {
  return ipow(d.p, abelian_cover_degree(d) * d.dim_g());
}

bool borel_admissible(const PChar& chi) {
  const auto& alg = *chi.algebra();
  for (int k = 0; k < alg.dim(); ++k) {
    const auto& b = alg.basis(k);
    if (b.type == BasisType::E && chi.on_basis(k)) return false;
    if (b.type == BasisType::H && b.degree == 0 && chi.on_basis(k)) return false;
  }
  return true;
}

PChar random_borel_admissible(const AlgebraPtr& alg, std::mt19937_64& rng) {
  std::uniform_int_distribution<Fp> d(0, alg->p() - 1);
  FpVec coords(alg->dim());
  for (int k = 0; k < alg->dim(); ++k) {
    const auto& b = alg->basis(k);
    // the dual element pairs f with e and the top-degree torus with the degree-0 torus
    const bool zero = b.type == BasisType::F || (b.type == BasisType::H && b.degree == alg->m());
    coords[k] = zero ? 0 : static_cast<std::uint8_t>(d(rng));
  }
  return PChar(CurrentElement::from_coords(alg, coords));
}

namespace {

void collect(const SimpleCatalog& cat, SimpleList& out) {
  for (std::size_t t = 0; t < cat.size(); ++t)
    for (int k = 0; k < cat.type(t).end_dim; ++k) out.dims.push_back(cat.type(t).absolute_dim());
  std::sort(out.dims.begin(), out.dims.end());
}

}  // namespace

SimpleList simples_of(const PChar& chi, std::uint64_t seed, std::size_t cover_limit, EnumerationMode mode) {
  const auto& d = chi.algebra()->desc();
  SimpleList out;
  SimpleCatalog cat;
  ChopOptions opts;
  opts.seed = seed;
  if (mode == EnumerationMode::Auto) {
    if (abelian_cover_dim(d) <= cover_limit)
      mode = EnumerationMode::AbelianCover;
    else if (borel_admissible(chi))
      mode = EnumerationMode::BabyVerma;
    else
      raise(ErrorKind::TooLarge, "no feasible module containing every simple for this character");
  }
  switch (mode) {
    case EnumerationMode::AbelianCover:
      out.method = "abelian-cover";
      chop(build_abelian_cover(chi), cat, opts);
      break;
    case EnumerationMode::BabyVerma:
      out.method = "baby-verma";
      for (const auto& l : enumerate_lambda(chi)) chop(build_baby_verma(chi, l), cat, opts);
      break;
    case EnumerationMode::Regular:
      out.method = "regular";
      chop(build_regular_module(chi), cat, opts);
      break;
    case EnumerationMode::Auto:
      break;
  }
  collect(cat, out);
  return out;
}

KwScan kw_scan(const AlgebraPtr& alg, int samples, std::uint64_t seed, std::size_t cover_limit) {
  const auto& d = alg->desc();
  KwScan scan;
  scan.desc = d;
  scan.kw1_bound = ipow(d.p, (d.m + 1) * d.num_positive_roots());
  const bool uniform = abelian_cover_dim(d) <= cover_limit;
  scan.sampling = uniform ? "uniform" : "borel-admissible";
  std::mt19937_64 rng(seed);
  std::vector<PChar> chis;
  if (auto h = regular_toral_element(*alg); h && d.m > 0) chis.push_back(PChar(CurrentElement::homogeneous(alg, *h, 0)));
  for (int i = 0; i < samples; ++i)
    chis.push_back(uniform ? PChar(CurrentElement::random(alg, rng)) : random_borel_admissible(alg, rng));
  const int regular_stab = (d.m + 1) * d.rank();
  for (std::size_t i = 0; i < chis.size(); ++i) {
    KwSample s;
    s.chi = chis[i];
    const int stab = stabilizer_dim(s.chi);
    s.orbit_dim = d.dim() - stab;
    s.regular = stab == regular_stab;
    s.divisor = ipow(d.p, s.orbit_dim / 2);
    SimpleList sl = simples_of(s.chi, seed + i, cover_limit);
    s.method = sl.method;
    s.simple_dims = sl.dims;
    for (std::size_t dim : s.simple_dims) {
      if (dim % s.divisor != 0) s.divisible = false;
      if (dim > scan.kw1_bound) ++scan.bound_exceeded;
      scan.max_dim = std::max(scan.max_dim, dim);
      if (s.regular && dim == scan.kw1_bound) scan.bound_attained = true;
    }
    if (!s.divisible || s.orbit_dim % 2) ++scan.violations;
    scan.samples.push_back(std::move(s));
  }
  return scan;
}

}  // namespace currentrep
