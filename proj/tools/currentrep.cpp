#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "currentrep/error.hpp"
#include "currentrep/kw.hpp"
#include "currentrep/serialize.hpp"
#include "currentrep/suites.hpp"

using namespace currentrep;

namespace {

constexpr int kUsage = 2;

struct AlgebraOpts {
  std::string kind = "sl";
  int n = 2;
  std::uint32_t p = 3;
  int m = 1;
};

void add_algebra_opts(CLI::App* app, AlgebraOpts& o) {
  app->add_option("--kind", o.kind, "sl or gl")->check(CLI::IsMember({"sl", "gl"}));
  app->add_option("-n", o.n, "matrix size")->required();
  app->add_option("-p", o.p, "characteristic")->required();
  app->add_option("-m", o.m, "truncation degree")->required();
}

std::vector<Fp> parse_values(const std::string& s) {
  std::vector<Fp> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(static_cast<Fp>(std::stoul(tok)));
    } catch (const std::exception&) {
      raise(ErrorKind::ParseError, "bad weight entry '" + tok + "'");
    }
  }
  return out;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) raise(ErrorKind::ParseError, "cannot write " + out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

std::string describe_algebra(const CurrentAlgebra& alg) {
  const auto& d = alg.desc();
  std::ostringstream os;
  os << "algebra " << d.name() << "\n"
     << "dim " << alg.dim() << "\n"
     << "dim g " << d.dim_g() << "\n"
     << "N " << d.num_positive_roots() << "\n"
     << "r " << d.rank() << "\n"
     << "dim z(g) " << d.dim_center() << "\n"
     << "index " << (d.m + 1) * d.rank() << "\n"
     << "baby Verma dim " << ipow(d.p, (d.m + 1) * d.num_positive_roots()) << "\n"
     << "basis";
  for (const auto& b : alg.basis()) os << ' ' << b.label;
  os << "\n";
  return os.str();
}

std::string describe_module(const ModuleRep& m) {
  std::ostringstream os;
  os << "module " << m.name << "\n"
     << "algebra " << m.alg->desc().name() << "\n"
     << "dim " << m.dim() << "\n"
     << "acting basis elements " << m.basis.size() << (m.over_full_algebra() ? " (full algebra)" : "") << "\n";
  if (m.over_full_algebra()) {
    auto ax = check_axioms(m);
    os << "axioms " << (ax.ok ? "ok" : "FAILED: " + ax.failure) << "\n";
  }
  try {
    os << "weight character " << character_to_json(weight_character(m)) << "\n";
  } catch (const Error& e) {
    os << "weight character unavailable (" << error_kind_name(e.kind()) << ")\n";
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"currentrep: representations of truncated current algebras of gl_n and sl_n"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  SuiteConfig cfg;
  AlgebraOpts vo;
  std::string format = "pretty", out;
  bool strict = false, no_timings = false;
  verify->add_option("suite", cfg.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  add_algebra_opts(verify, vo);
  verify->add_option("--seed", cfg.seed, "random seed");
  verify->add_option("--samples", cfg.samples, "samples per sampled claim")->check(CLI::PositiveNumber);
  verify->add_option("--limit", cfg.limit, "module dimension cap (overrides CURRENTREP_LIMIT)");
  verify->add_option("--format", format, "json, tsv or pretty")->check(CLI::IsMember({"json", "tsv", "pretty"}));
  verify->add_option("--out", out, "write the report here");
  verify->add_flag("--strict", strict, "treat skipped lines as failures");
  verify->add_flag("--no-timings", no_timings, "omit timings so reports are byte-identical");

  // inspect
  auto* inspect = app.add_subcommand("inspect", "summarize an algebra, element, p-character or module");
  inspect->require_subcommand(1);
  auto* ia = inspect->add_subcommand("algebra", "structure summary");
  std::string ia_kind;
  int ia_n = 0, ia_m = 0;
  std::uint32_t ia_p = 0;
  ia->add_option("kind", ia_kind)->required()->check(CLI::IsMember({"sl", "gl"}));
  ia->add_option("n", ia_n)->required();
  ia->add_option("p", ia_p)->required();
  ia->add_option("m", ia_m)->required();
  std::string in_file;
  auto* ie = inspect->add_subcommand("element", "element JSON summary");
  ie->add_option("file", in_file)->required();
  auto* ip = inspect->add_subcommand("pchar", "p-character from an element or p-character JSON");
  ip->add_option("file", in_file)->required();
  auto* im = inspect->add_subcommand("module", "module JSON summary");
  im->add_option("file", in_file)->required();

  // build
  auto* build = app.add_subcommand("build", "construct a module and print it as JSON");
  std::string what, lambda_s, chi_file, build_out;
  AlgebraOpts bo;
  bool compact = false, chop_it = false;
  std::uint64_t build_seed = 1;
  build->add_option("what", what)->required()->check(
      CLI::IsMember({"verma", "dual-verma", "zproj", "regular", "cover", "torus-projective"}));
  add_algebra_opts(build, bo);
  build->add_option("--lambda", lambda_s, "degree-0 weight values on h_1,...,h_r, comma separated");
  build->add_option("--chi", chi_file, "p-character JSON (verma, regular, cover); default 0");
  build->add_option("--out", build_out, "output path");
  build->add_option("--seed", build_seed, "seed for --chop");
  build->add_flag("--compact", compact, "digit-string matrices");
  build->add_flag("--chop", chop_it, "print the composition series instead of the module");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  try {
    if (*verify) {
      cfg.kind = parse_kind(vo.kind);
      cfg.n = vo.n;
      cfg.p = vo.p;
      cfg.m = vo.m;
      Report r = run_suite(cfg);
      emit(render(r, parse_format(format), !no_timings), out);
      if (!r.ok()) return 1;
      if (strict && r.skipped() > 0) return 1;
      return 0;
    }
    if (*ia) {
      auto alg = CurrentAlgebra::make(make_descriptor(parse_kind(ia_kind), ia_n, ia_p, ia_m));
      emit(describe_algebra(*alg), "");
      return 0;
    }
    if (*ie) {
      auto x = element_from_json(read_file(in_file));
      std::ostringstream os;
      os << "algebra " << x.desc().name() << "\n"
         << "class " << element_class_name(classify_element(x)) << "\n"
         << "regular " << (is_regular(x) ? "yes" : "no") << "\n"
         << x.to_string() << "\n";
      emit(os.str(), "");
      return 0;
    }
    if (*ip) {
      auto chi = pchar_from_json(read_file(in_file));
      std::ostringstream os;
      os << pchar_to_json(chi, 2) << "\n"
         << "stabilizer dim " << stabilizer_dim(chi) << "\n"
         << "orbit dim " << chi.algebra()->dim() - stabilizer_dim(chi) << "\n";
      emit(os.str(), "");
      return 0;
    }
    if (*im) {
      emit(describe_module(module_from_json(read_file(in_file))), "");
      return 0;
    }
    if (*build) {
      auto alg = CurrentAlgebra::make(make_descriptor(parse_kind(bo.kind), bo.n, bo.p, bo.m));
      std::vector<Fp> lam = lambda_s.empty() ? std::vector<Fp>(alg->rank(), 0) : parse_values(lambda_s);
      if (static_cast<int>(lam.size()) != alg->rank()) raise(ErrorKind::BadWeight, "--lambda needs rank g entries");
      for (auto& v : lam) v %= alg->p();
      PChar chi = PChar::zero(alg);
      if (!chi_file.empty()) {
        chi = pchar_from_json(read_file(chi_file));
        if (!(chi.algebra()->desc() == alg->desc())) raise(ErrorKind::AlgebraMismatch, "p-character is for another algebra");
      }
      ModuleRep mod;
      if (what == "verma") {
        LambdaWeight lw = restricted_weight(*alg, lam);
        if (!chi.is_zero()) {
          auto all = enumerate_lambda(chi);
          if (all.empty()) raise(ErrorKind::BadCharacter, "Lambda_chi is empty");
          lw = all.front();
          for (const auto& w : all)
            if (w.degree0() == lam) lw = w;
        }
        mod = build_baby_verma(chi, lw);
      } else if (what == "dual-verma") {
        mod = build_dual_verma(alg, restricted_weight(*alg, lam));
      } else if (what == "zproj") {
        mod = build_zproj(alg, lam).module;
      } else if (what == "regular") {
        mod = build_regular_module(chi);
      } else if (what == "cover") {
        mod = build_abelian_cover(chi);
      } else {
        mod = build_torus_projective(alg, lam);
      }
      if (chop_it) {
        SimpleCatalog cat;
        ChopOptions opts;
        opts.seed = build_seed;
        auto cs = chop(mod, cat, opts);
        emit(series_to_json(cs, cat, 2), build_out);
      } else {
        emit(module_to_json(mod, compact, compact ? -1 : 1), build_out);
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::InvalidDescriptor:
      case ErrorKind::ParseError:
      case ErrorKind::BadWeight:
      case ErrorKind::AlgebraMismatch:
      case ErrorKind::BadCharacter:
        return kUsage;
      case ErrorKind::TooLarge:
        std::cerr << "skipped\n";
        return strict ? 1 : 0;
      default:
        return 1;
    }
  }
  return 0;
}
