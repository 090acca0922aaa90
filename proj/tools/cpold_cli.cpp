// Command-line front end for the cpold library.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "cpold/cache.hpp"
#include "cpold/chern.hpp"
#include "cpold/enumgeo.hpp"
#include "cpold/error.hpp"
#include "cpold/orbits.hpp"
#include "cpold/rising.hpp"
#include "cpold/serialize.hpp"
#include "cpold/specialization.hpp"

namespace {

using namespace cpold;
using cpold::json::Json;

enum class Format { json, text };

struct Options {
  int n = 0, k = 0, m = 0, r = 0;
  long d = 0;
  std::string basis = "m";
  std::string type;
  std::string h;
  std::string method = "closed";
  std::string spec_file;
  std::string cache_dir;
  bool no_cache = false;
  bool factored = false;
  Format format = Format::json;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::invalid_input, "not an integer list: " + text);
    }
  }
  return out;
}

Json list_json(const std::vector<int>& v) { return Json(v); }

std::string list_text(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

class Runner {
 public:
  explicit Runner(const Options& o) : opt_(o) {
    if (opt_.no_cache) return;
    std::optional<std::filesystem::path> dir;
    if (!opt_.cache_dir.empty())
      dir = opt_.cache_dir;
    else
      dir = ChernCache::default_dir();
    if (dir) cache_.emplace(*dir);
  }

  ~Runner() {
    if (cache_)
      for (const auto& w : cache_->warnings()) std::cerr << "warning: " << w << '\n';
  }

  int chern() {
    const auto poly = chern_interpolated({opt_.n, opt_.k, parse_basis(opt_.basis)}, cache());
    if (text()) {
      std::cout << expansion_to_string(poly.terms, "d", opt_.factored) << '\n';
    } else {
      std::cout << json::to_json(poly).dump(2) << '\n';
    }
    return 0;
  }

  int chern_eval() {
    const MultiPoly top = chern_direct(opt_.n, opt_.d, TruncationPolicy{opt_.k, {}}).homogeneous_component(opt_.k);
    BasisExpansion<Rational> e;
    e.basis = parse_basis(opt_.basis);
    e.num_vars = opt_.n;
    if (!top.is_zero()) e = expand_in_basis(top, e.basis);
    if (text())
      std::cout << expansion_to_string(e) << '\n';
    else
      std::cout << Json{{"n", opt_.n}, {"k", opt_.k}, {"d", opt_.d}, {"value", json::to_json(e)}}.dump(2) << '\n';
    return 0;
  }

  int stirling_coeff() {
    std::ifstream in(opt_.spec_file);
    if (!in) throw Error(ErrorKind::invalid_input, "cannot read spec file " + opt_.spec_file);
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const std::exception& e) {
      throw Error(ErrorKind::invalid_input, std::string("spec file is not JSON: ") + e.what());
    }
    const RisingProductSpec spec = json::rising_spec_from_json(doc);
    const IntVector target = parse_int_list(opt_.h);
    const MultiPoly c = stirling_coefficient(spec, target);
    if (text()) {
      std::cout << (spec.num_params() == 1 ? c.to_unipoly().to_string(spec.params[0]) : c.to_string()) << '\n';
    } else {
      std::cout << Json{{"params", spec.params},
                        {"H", target},
                        {"coefficient", spec.num_params() == 1 ? json::to_json(c.to_unipoly()) : json::to_json(c)}}
                       .dump(2)
                << '\n';
    }
    return 0;
  }

  int orbits() {
    std::vector<OrbitType> types;
    if (opt_.type.empty()) {
      types = orbit_types(opt_.n);
    } else {
      types.push_back(parse_int_list(opt_.type));
      int sum = 0;
      for (int x : types.back()) sum += x;
      if (sum != opt_.n) throw Error(ErrorKind::invalid_input, "--type must be a composition of --n");
    }
    Json out = Json::array();
    for (const auto& u : types) {
      const auto members = enumerate_orbit(u, opt_.d);
      if (text()) {
        std::cout << list_text(u) << ":";
        for (const auto& v : members) std::cout << ' ' << list_text(v);
        std::cout << '\n';
      }
      Json list = Json::array();
      for (const auto& v : members) list.push_back(list_json(v));
      out.push_back(Json{{"type", list_json(u)}, {"orbits", list}});
    }
    if (!text()) std::cout << Json{{"n", opt_.n}, {"d", opt_.d}, {"types", out}}.dump(2) << '\n';
    return 0;
  }

  int sigma(bool has_d) {
    if (has_d) {
      const SigmaDegree s = sigma_degree(opt_.d, opt_.m, opt_.r);
      for (const auto& w : s.warnings) std::cerr << "warning: " << w << '\n';
      if (text())
        std::cout << s.value.to_string() << '\n';
      else
        std::cout << Json{{"d", opt_.d}, {"m", opt_.m}, {"r", opt_.r}, {"degree", json::to_json(s.value)},
                          {"warnings", s.warnings}}
                         .dump(2)
                  << '\n';
      return 0;
    }
    const UniPoly p = sigma_degree_symbolic(opt_.m, opt_.r, cache());
    if (text())
      std::cout << (opt_.factored ? factored_string(p) : p.to_string()) << '\n';
    else
      std::cout << Json{{"m", opt_.m}, {"r", opt_.r}, {"degree", json::to_json(p)}}.dump(2) << '\n';
    return 0;
  }

  int fano(bool chi) {
    auto compute = [&](FanoMethod method) {
      return chi ? fano_chi_lines(opt_.d, opt_.m, method) : fano_degree_lines(opt_.d, opt_.m, method);
    };
    const char* what = chi ? "chi" : "degree";
    if (opt_.method != "both") {
      const BigInt v = compute(opt_.method == "integral" ? FanoMethod::integral : FanoMethod::closed);
      if (text())
        std::cout << v.get_str() << '\n';
      else
        std::cout << Json{{"d", opt_.d}, {"m", opt_.m}, {"method", opt_.method}, {what, v.get_str()}}.dump(2) << '\n';
      return 0;
    }
    const BigInt closed = compute(FanoMethod::closed);
    const BigInt integral = compute(FanoMethod::integral);
    const bool agree = closed == integral;
    if (text()) {
      if (agree)
        std::cout << closed.get_str() << '\n';
      else
        std::cout << "closed " << closed.get_str() << "\nintegral " << integral.get_str() << '\n';
    } else {
      std::cout << Json{{"d", opt_.d}, {"m", opt_.m}, {"closed", closed.get_str()}, {"integral", integral.get_str()},
                        {"agree", agree}}
                       .dump(2)
                << '\n';
    }
    return agree ? 0 : 1;
  }

  int verify() {
    std::vector<std::pair<std::string, std::function<bool()>>> checks = {
        {"stirling-first-kind", [] {
           RisingProductSpec spec;
           spec.add({1}, 1, UniPoly(Rational(1)));
           for (int h = 1; h <= 4; ++h) {
             const UniPoly s = stirling_coefficient_univariate(spec, {h});
             for (long d = 0; d <= 8; ++d)
               if (s.evaluate(d) != Rational(stirling_first(d + 1, d + 1 - h))) return false;
           }
           return true;
         }},
        {"chern-oracle", [this] {
           for (int n = 1; n <= 3; ++n)
             for (int k = 1; k <= 3; ++k) {
               const auto poly = chern_interpolated({n, k, Basis::schur}, cache());
               for (long d = n * k + 1; d <= n * k + 2; ++d) {
                 const auto top = chern_direct(n, d, TruncationPolicy{k, {}}).homogeneous_component(k);
                 if (evaluate_at(poly, d) != expand_in_basis(top, Basis::schur)) return false;
               }
             }
           return true;
         }},
        {"euler-closed", [] {
           for (long d = 1; d <= 8; ++d) {
             const auto s = expand_in_basis(euler_class_c2(d), Basis::schur);
             for (const auto& [j, e] : euler_c2_closed(d)) {
               const Partition p = j == 0 ? Partition({static_cast<int>(d + 1)})
                                          : Partition({static_cast<int>(d + 1 - j), j});
               if (s.coefficient(p) != Rational(e)) return false;
             }
           }
           return true;
         }},
        {"fano-degree-methods", [] {
           for (int m = 3; m <= 6; ++m)
             for (long delta = 0; delta <= 3; ++delta) {
               const long d = 2L * m - 3 - delta;
               if (d < 3) continue;
               if (fano_degree_lines(d, m, FanoMethod::closed) != fano_degree_lines(d, m, FanoMethod::integral))
                 return false;
             }
           return true;
         }},
        {"fano-chi-methods", [] {
           for (int m = 4; m <= 6; ++m)
             for (long delta = 1; delta <= 2; ++delta) {
               const long d = 2L * m - 3 - delta;
               if (d < 3) continue;
               if (fano_chi_lines(d, m, FanoMethod::closed) != fano_chi_lines(d, m, FanoMethod::integral)) return false;
             }
           return true;
         }},
        {"orbit-factorization", [] {
           for (int n = 1; n <= 3; ++n)
             for (long d = 0; d <= 6; ++d)
               if (!orbit_factorization_check(n, d, TruncationPolicy{3, {}})) return false;
           return true;
         }},
        {"sigma-symbolic-vs-numeric", [this] {
           const UniPoly p = sigma_degree_symbolic(3, 1, cache());
           for (long d = 3; d <= 6; ++d)
             if (p.evaluate(d) != sigma_degree(d, 3, 1).value) return false;
           return true;
         }},
    };
    bool all = true;
    Json report = Json::array();
    for (const auto& [name, check] : checks) {
      bool ok = false;
      std::string note;
      try {
        ok = check();
      } catch (const std::exception& e) {
        note = e.what();
      }
      all = all && ok;
      if (text()) std::cout << (ok ? "PASS " : "FAIL ") << name << (note.empty() ? "" : " (" + note + ")") << '\n';
      report.push_back(Json{{"check", name}, {"pass", ok}});
    }
    if (!text()) std::cout << Json{{"checks", report}, {"all_pass", all}}.dump(2) << '\n';
    return all ? 0 : 1;
  }

 private:
  bool text() const { return opt_.format == Format::text; }
  ChernCache* cache() { return cache_ ? &*cache_ : nullptr; }

  const Options& opt_;
  std::optional<ChernCache> cache_;
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input:
    case ErrorKind::invalid_index:
      return 2;
    case ErrorKind::out_of_domain:
    case ErrorKind::empty_fano:
    case ErrorKind::unsupported_degree:
    case ErrorKind::unsupported:
    case ErrorKind::invalid_bound:
    case ErrorKind::not_symmetric:
    case ErrorKind::not_invertible:
      return 3;
    default:
      return 1;
  }
}

void emit_error(std::string_view kind, const std::string& message) {
  std::cerr << Json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chern classes of Pol^d(C^n), Stirling coefficients and Fano scheme invariants"};
  app.require_subcommand(1);
  Options opt;
  const std::map<std::string, Format> formats{{"json", Format::json}, {"text", Format::text}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "json or text")->transform(CLI::CheckedTransformer(formats));
  };
  auto cached = [&](CLI::App* sub) {
    sub->add_option("--cache-dir", opt.cache_dir, std::string("cache directory (default: $") + kCacheDirEnv + ")");
    sub->add_flag("--no-cache", opt.no_cache, "disable the persistent cache");
  };
  const auto positive = CLI::PositiveNumber;
  const auto nonneg = CLI::NonNegativeNumber;
  const auto basis_ids = CLI::IsMember({"m", "e", "s", "p", "monomial", "elementary", "schur", "power"});

  auto* chern = app.add_subcommand("chern", "c_k(Pol^d(C^n)) with coefficients as polynomials in d");
  chern->add_option("--n", opt.n)->required()->check(positive);
  chern->add_option("--k", opt.k)->required()->check(nonneg);
  chern->add_option("--basis", opt.basis)->check(basis_ids);
  chern->add_flag("--factored", opt.factored, "factor coefficients over Q for display");
  common(chern);
  cached(chern);

  auto* chern_eval = app.add_subcommand("chern-eval", "c_k(Pol^d(C^n)) at a concrete d");
  chern_eval->add_option("--n", opt.n)->required()->check(positive);
  chern_eval->add_option("--k", opt.k)->required()->check(nonneg);
  chern_eval->add_option("--d", opt.d)->required()->check(CLI::Range(-1L, 1000000L));
  chern_eval->add_option("--basis", opt.basis)->check(basis_ids);
  common(chern_eval);

  auto* stirling = app.add_subcommand("stirling-coeff", "Stirling coefficient of a rising product");
  stirling->add_option("--spec-file", opt.spec_file, "rising product spec (JSON)")->required();
  stirling->add_option("--exponent", opt.h, "exponent vector, e.g. 1,0,2")->required();
  common(stirling);

  auto* orbits = app.add_subcommand("orbits", "increasing weak partitions O_u(d) by orbit type");
  orbits->add_option("--n", opt.n)->required()->check(positive);
  orbits->add_option("--d", opt.d)->required()->check(nonneg);
  orbits->add_option("--type", opt.type, "orbit type u1,u2,... (default: all)");
  common(orbits);

  auto* sigma = app.add_subcommand("sigma-degree", "degree of the variety of hypersurfaces containing an r-plane");
  sigma->add_option("--m", opt.m)->required()->check(positive);
  sigma->add_option("--r", opt.r)->required()->check(nonneg);
  auto* sigma_d = sigma->add_option("--d", opt.d, "evaluate at d (omit for the polynomial)")->check(nonneg);
  sigma->add_flag("--factored", opt.factored);
  common(sigma);
  cached(sigma);

  auto* fano_deg = app.add_subcommand("fano-degree", "degree of the Fano scheme of lines");
  auto* fano_chi = app.add_subcommand("fano-chi", "Euler characteristic of the Fano scheme of lines");
  for (auto* sub : {fano_deg, fano_chi}) {
    sub->add_option("--d", opt.d)->required();
    sub->add_option("--m", opt.m)->required();
    sub->add_option("--method", opt.method)->check(CLI::IsMember({"closed", "integral", "both"}));
    common(sub);
  }

  auto* verify = app.add_subcommand("verify", "run the built-in cross-checks");
  common(verify);
  cached(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("usage", e.what());
    return 2;
  }

  try {
    Runner run(opt);
    if (*chern) return run.chern();
    if (*chern_eval) return run.chern_eval();
    if (*stirling) return run.stirling_coeff();
    if (*orbits) return run.orbits();
    if (*sigma) return run.sigma(sigma_d->count() > 0);
    if (*fano_deg) return run.fano(false);
    if (*fano_chi) return run.fano(true);
    if (*verify) return run.verify();
  } catch (const Error& e) {
    emit_error(to_string(e.kind()), e.what());
    return exit_code(e.kind());
  } catch (const nlohmann::json::exception& e) {
    emit_error("invalid-input", e.what());
    return 2;
  } catch (const std::exception& e) {
    emit_error("internal-error", e.what());
    return 1;
  }
  return 1;
}
