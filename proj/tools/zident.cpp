// zident: command-line front end to the zident library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "zident/alpha.hpp"
#include "zident/combinat.hpp"
#include "zident/dirichlet.hpp"
#include "zident/gammafun.hpp"
#include "zident/hasse.hpp"
#include "zident/mpnum.hpp"
#include "zident/zetafun.hpp"

using namespace zident;

namespace {

struct Shared {
  int prec = 30;
  int guard = -1;
  long K = -1;
  long N = -1;
  long m_max = -1;
  std::string out;
};

void add_shared(CLI::App* app, Shared& sh, int default_prec = 30) {
  sh.prec = default_prec;
  app->add_option("--prec", sh.prec, "target decimal digits")->capture_default_str()->check(CLI::Range(1, 100000));
  app->add_option("--guard", sh.guard, "guard digits (default: automatic)");
  app->add_option("--K", sh.K, "series terms (default: automatic)");
  app->add_option("--N", sh.N, "shift / direct terms (default: automatic)");
  app->add_option("--m-max", sh.m_max, "terms of the binomial expansions (default: automatic)");
  app->add_option("--out", sh.out, "write output to this file instead of stdout");
}

PrecisionContext context_of(const Shared& sh) { return make_context(sh.prec, sh.guard); }

// Accepts p/q (exact) or a decimal.
BigReal parse_real(const std::string& text, const PrecisionContext& ctx) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    mpq_class q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0) throw ParseError("invalid rational '" + text + "'", 0);
    q.canonicalize();
    return BigReal(q, ctx.bits());
  }
  BigComplex z = parse_complex(text, ctx);
  if (!z.is_real()) throw ParseError("expected a real number, got '" + text + "'", 0);
  return z.re();
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw DomainError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& os() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void print_result(std::ostream& os, const SeriesResult& r, int digits, const std::string& name = "value") {
  os << name << " = " << format_complex(r.value, digits) << "\n";
  os << "terms_used = " << r.terms_used << "\n";
  os << "tail_bound = " << format_real(r.tail_bound, 3) << (r.heuristic_tail ? " (heuristic)" : "") << "\n";
  if (!r.converged) os << "warning: tail bound exceeds 10^-" << digits << "\n";
}

void print_value(std::ostream& os, const BigComplex& v, int digits, const std::string& name = "value") {
  os << name << " = " << format_complex(v, digits) << "\n";
}

std::string chi_value_text(const DirichletCharacter& chi, long n) {
  long e = chi.exponent_at(n);
  if (e < 0) return "0";
  long g = std::gcd(e, chi.order);
  long num = e / g, den = chi.order / g;
  if (den == 1) return "1";
  if (den == 2) return "-1";
  if (den == 4) return num == 1 ? "i" : "-i";
  return "e(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

std::vector<long> table_ks() {
  std::vector<long> ks{0};
  for (long k = 1; k <= 2048; k *= 2) ks.push_back(k);
  return ks;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zident: high-precision gamma, zeta, L-function and eta evaluation"};
  app.require_subcommand(1);

  // gamma
  Shared g_sh;
  std::string g_s, g_w;
  auto* g = app.add_subcommand("gamma",
                               "Gamma(s) = (N+1)^s N! sum_k alpha_k(s) / ((s+k)(s+k+1)...(s+k+N)) with --N,\n"
                               "Gamma(s) = w^s Gamma(w) sum_k alpha_k(s) Gamma(s+k)/Gamma(s+k+w) with --w,\n"
                               "otherwise the first form after shifting Re s into [1,2]");
  add_shared(g, g_sh);
  g->add_option("--s", g_s, "argument (complex, e.g. 2.5 or 1+2i)")->required();
  g->add_option("--w", g_w, "real expansion parameter w > 0 for the general-w form");

  // zeta
  Shared z_sh;
  std::string z_s, z_method = "alpha";
  long z_lambda = 1;
  auto* z = app.add_subcommand("zeta",
                               "zeta(s). Methods:\n"
                               "  alpha    sum_{n<=N} n^-s + N!/Gamma(s) sum_k alpha_k(s) Gamma(s+k-1)/Gamma(s+k+N)\n"
                               "  em       Euler-Maclaurin with K Bernoulli terms and its remainder bound\n"
                               "  trigamma expansion in trigamma(N+1) and its derivatives\n"
                               "  shift    zeta(s) as the lambda-shifted Hurwitz series at s+lambda with c_a(lambda,j)\n"
                               "  combo    sum_lambda b_lambda zeta(s-lambda) and its single alpha series, Lambda=--lambda");
  add_shared(z, z_sh);
  z->add_option("--s", z_s, "argument (complex)")->required();
  z->add_option("--method", z_method, "alpha|em|trigamma|shift|combo")
      ->check(CLI::IsMember({"alpha", "em", "trigamma", "shift", "combo"}))
      ->capture_default_str();
  z->add_option("--lambda", z_lambda, "shift for 'shift', Lambda for 'combo'")->capture_default_str();

  // hurwitz
  Shared h_sh;
  std::string h_s, h_a;
  long h_lambda = 0;
  auto* h = app.add_subcommand("hurwitz",
                               "zeta(s-lambda, a) = sum_{n<N} (n+a)^(lambda-s)\n"
                               "  + Gamma(a')/Gamma(s) sum_k alpha_k(s) sum_j c_a'(lambda,j) Gamma(s+k-j-1)/Gamma(s+k-j+a'-1), a'=a+N");
  add_shared(h, h_sh);
  h->add_option("--s", h_s, "argument (complex)")->required();
  h->add_option("--a", h_a, "a > 0, decimal or p/q")->required();
  h->add_option("--lambda", h_lambda, "non-negative integer shift")->capture_default_str();

  // lfunc
  Shared l_sh;
  std::string l_chi, l_s = "", l_s0 = "0", l_method = "alpha";
  long l_lambda = 0;
  auto* l = app.add_subcommand("lfunc",
                               "L(s, chi). Methods:\n"
                               "  alpha   q^(lambda-s) sum_m chi(m) zeta(s-lambda, m/q) through the alpha series\n"
                               "  special L(-r,chi) exactly for s = -r, L(1,chi) for s = 1, or L(1-lambda,chi) with --lambda\n"
                               "  hasse   sum_m w_m(s0) sum_j chi(j+1) C(m,j) (j+1)^-s, any q\n"
                               "  interp  sum_m (-1)^m/m! sum_l s(m+1,l) L(s0+1-l,chi) sum_j (-1)^j C(m,j) (j+1)^-s, q <= 5");
  add_shared(l, l_sh);
  l->add_option("--chi", l_chi, "character label q.j (see 'chars')")->required();
  l->add_option("--s", l_s, "argument (complex)");
  l->add_option("--s0", l_s0, "expansion shift for hasse/interp (value is L(s+s0))")->capture_default_str();
  l->add_option("--lambda", l_lambda, "shift (alpha) or 1-s (special)")->capture_default_str();
  l->add_option("--method", l_method, "alpha|special|hasse|interp")
      ->check(CLI::IsMember({"alpha", "special", "hasse", "interp"}))
      ->capture_default_str();

  // eta
  Shared e_sh;
  std::string e_s, e_s0 = "0", e_lambda = "1", e_method = "hasse";
  auto* e = app.add_subcommand("eta",
                               "eta(s+s0) = sum_n (-1)^(n-1) n^-(s+s0). Methods:\n"
                               "  hasse           integral weights (Re s0 > -1) against sum_j (-1)^j C(m,j) (j+1)^-s\n"
                               "  stirling        weights (-1)^m/m! sum_l s(m+1,l) eta(s0+1-l), any s0\n"
                               "  amore           weights (lambda/(1+lambda))^(m+1) against h(n) = n^-s lambda^-n\n"
                               "  amore-factorial e^-lambda sum_m lambda^m sum_j (-1)^j / ((j+1)^s lambda^j (m-j)!)");
  add_shared(e, e_sh);
  e->add_option("--s", e_s, "argument (complex)")->required();
  e->add_option("--s0", e_s0, "expansion shift (hasse/stirling)")->capture_default_str();
  e->add_option("--lambda", e_lambda, "lambda > 0 (amore forms)")->capture_default_str();
  e->add_option("--method", e_method, "hasse|stirling|amore|amore-factorial")
      ->check(CLI::IsMember({"hasse", "stirling", "amore", "amore-factorial"}))
      ->capture_default_str();

  // chars
  Shared c_sh;
  long c_q = 3;
  auto* c = app.add_subcommand("chars",
                               "Dirichlet characters mod q with labels q.j, parity, primitivity and value tables;\n"
                               "values are printed as e(k/n) = exp(2 pi i k/n)");
  add_shared(c, c_sh);
  c->add_option("--q", c_q, "modulus")->required()->check(CLI::Range(1L, 100000L));

  // ca-table
  Shared t3_sh;
  long t3_lmax = 7;
  auto* t3 = app.add_subcommand("ca-table",
                                "c_a(lambda,j): c_a(0,0)=1, c_a(lambda+1,j) = (a-j-1) c_a(lambda,j) + j c_a(lambda,j-1)");
  add_shared(t3, t3_sh);
  t3->add_option("--lmax", t3_lmax, "largest lambda")->capture_default_str()->check(CLI::Range(0L, 200L));

  // tables
  Shared tb_sh;
  int tb_which = 1;
  std::string tb_s = "3";
  auto* tb = app.add_subcommand("tables",
                                "relative remainders at K in {0,1,2,4,...,2048}, N in {1,5,20,100}:\n"
                                "  1  (zeta(s) - N-shifted alpha series truncated after K terms) / zeta(s)\n"
                                "  2  (zeta(s) - Euler-Maclaurin with K Bernoulli terms) / zeta(s)\n"
                                "CSV columns K,R_N1,R_N5,R_N20,R_N100 with 10 significant digits;\n"
                                "--prec defaults to 220 for table 1 and 300 for table 2");
  add_shared(tb, tb_sh, 220);
  tb->add_option("--which", tb_which, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  tb->add_option("--s", tb_s, "argument")->capture_default_str();

  // asympt
  Shared a_sh;
  std::string a_which, a_a = "1", a_chi, a_s = "2";
  long a_m = 100;
  auto* as = app.add_subcommand("asympt",
                                "  jsum    sum_j (-1)^j C(m,j) (j+a)^-s against log(m)^(s-1) Gamma(a) / (m^a Gamma(s))\n"
                                "  chisum  sum_j chi(j+1) C(m,j) against (tau/q)(e(-1/q)(1+e(-1/q))^m + chi(-1)e(1/q)(1+e(1/q))^m)\n"
                                "          and the bound 2 q^(-1/2) C_q^m, C_q = |1+e(1/q)|");
  add_shared(as, a_sh, 20);
  as->add_option("--which", a_which, "jsum|chisum")->required()->check(CLI::IsMember({"jsum", "chisum"}));
  as->add_option("--m", a_m, "m >= 0")->required()->check(CLI::Range(0L, 10000000L));
  as->add_option("--a", a_a, "a > 0 (jsum)")->capture_default_str();
  as->add_option("--chi", a_chi, "character label (chisum)");
  as->add_option("--s", a_s, "s (jsum)")->capture_default_str();

  // euler-gamma
  Shared eg_sh;
  auto* eg = app.add_subcommand("euler-gamma",
                                "gamma = H_N - log(N+1) - N! sum_{k=1}^K alpha_k(0) / (k(k+1)...(k+N))");
  add_shared(eg, eg_sh);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*g) {
      auto ctx = context_of(g_sh);
      Output out(g_sh.out);
      BigComplex s = parse_complex(g_s, ctx);
      if (!g_w.empty()) {
        print_result(out.os(), gamma_w(s, parse_complex(g_w, ctx), g_sh.K, ctx), ctx.target_digits);
      } else if (g_sh.N >= 0) {
        print_result(out.os(), gamma_n(s, g_sh.N, g_sh.K, ctx), ctx.target_digits);
      } else {
        print_value(out.os(), gamma(s, ctx), ctx.target_digits);
      }
    } else if (*z) {
      auto ctx = context_of(z_sh);
      Output out(z_sh.out);
      BigComplex s = parse_complex(z_s, ctx);
      if (z_method == "alpha") {
        print_result(out.os(), riemann_zeta(s, z_sh.N, z_sh.K, ctx), ctx.target_digits);
      } else if (z_method == "em") {
        print_result(out.os(), euler_maclaurin_zeta(s, z_sh.N, z_sh.K, ctx), ctx.target_digits);
      } else if (z_method == "trigamma") {
        print_result(out.os(), zeta_trigamma(s, z_sh.N, z_sh.K, ctx), ctx.target_digits);
      } else if (z_method == "shift") {
        if (z_lambda < 0) throw DomainError("--lambda must be non-negative");
        print_result(out.os(), zeta_shifted(s + z_lambda, z_lambda, z_sh.N, z_sh.K, ctx), ctx.target_digits);
      } else {
        auto r = zeta_linear_combo(s, z_lambda, z_sh.N, z_sh.K, ctx);
        auto b = b_lambda_weights(z_lambda);
        out.os() << "b =";
        for (std::size_t i = 1; i < b.size(); ++i) out.os() << " " << b[i].get_str();
        out.os() << "\n";
        print_result(out.os(), r.lhs, ctx.target_digits, "sum_b_zeta");
        print_result(out.os(), r.rhs, ctx.target_digits, "alpha_series");
      }
    } else if (*h) {
      auto ctx = context_of(h_sh);
      Output out(h_sh.out);
      BigComplex s = parse_complex(h_s, ctx);
      BigReal a = parse_real(h_a, ctx);
      if (h_lambda == 0)
        print_result(out.os(), hurwitz_zeta(s, a, h_sh.N, h_sh.K, ctx), ctx.target_digits);
      else
        print_result(out.os(), hurwitz_shifted(s, h_lambda, a, h_sh.N, h_sh.K, ctx), ctx.target_digits);
    } else if (*l) {
      auto ctx = context_of(l_sh);
      Output out(l_sh.out);
      DirichletCharacter chi = character_from_label(l_chi);
      if (l_method == "special") {
        if (l_s.empty()) {
          print_value(out.os(), l_one_minus_lambda(l_lambda, chi, ctx), ctx.target_digits);
        } else {
          BigComplex s = parse_complex(l_s, ctx);
          if (!is_integer(s) || s.re().to_long() > 1)
            throw DomainError("special values need an integer s <= 1");
          long si = s.re().to_long();
          print_value(out.os(), si == 1 ? l_at_1(chi, ctx) : l_negative_integer(-si, chi, ctx), ctx.target_digits);
        }
      } else {
        if (l_s.empty()) throw DomainError("--s is required for this method");
        BigComplex s = parse_complex(l_s, ctx);
        BigComplex s0 = parse_complex(l_s0, ctx);
        if (l_method == "alpha")
          print_result(out.os(), l_shifted(s, l_lambda, chi, l_sh.N, l_sh.K, ctx), ctx.target_digits);
        else if (l_method == "hasse")
          print_result(out.os(), l_hasse(s, s0, chi, l_sh.m_max, ctx), ctx.target_digits);
        else
          print_result(out.os(), l_interpolation_q_le_5(s, s0, chi, l_sh.m_max, ctx), ctx.target_digits);
      }
    } else if (*e) {
      auto ctx = context_of(e_sh);
      Output out(e_sh.out);
      BigComplex s = parse_complex(e_s, ctx);
      BigComplex s0 = parse_complex(e_s0, ctx);
      if (e_method == "hasse")
        print_result(out.os(), eta_hasse(s, s0, e_sh.m_max, ctx, HasseBranch::integral), ctx.target_digits);
      else if (e_method == "stirling")
        print_result(out.os(), eta_hasse(s, s0, e_sh.m_max, ctx, HasseBranch::stirling), ctx.target_digits);
      else
        print_result(out.os(),
                     eta_amore(s, parse_real(e_lambda, ctx), e_sh.m_max, ctx,
                               e_method == "amore" ? AmoreForm::geometric : AmoreForm::factorial),
                     ctx.target_digits);
    } else if (*c) {
      auto ctx = context_of(c_sh);
      Output out(c_sh.out);
      auto chars = enumerate_characters(c_q);
      for (const auto& chi : chars) {
        out.os() << chi.label << "  parity=" << (chi.parity == 1 ? "even" : "odd")
                 << "  primitive=" << (chi.is_primitive ? "yes" : "no") << (chi.is_trivial ? "  trivial" : "");
        if (chi.is_primitive && !chi.is_trivial) out.os() << "  |tau|^2=" << format_real(norm(gauss_sum(chi, ctx)), 6);
        out.os() << "\n ";
        for (long n = 1; n <= c_q; ++n) out.os() << " " << chi_value_text(chi, n);
        out.os() << "\n";
      }
    } else if (*t3) {
      Output out(t3_sh.out);
      auto t = c_a_table(t3_lmax);
      for (long lam = 0; lam <= t3_lmax; ++lam)
        for (long j = 0; j <= lam; ++j)
          out.os() << lam << " " << j << " "
                   << c_a_display(lam, j, t[static_cast<std::size_t>(lam)][static_cast<std::size_t>(j)]) << "\n";
    } else if (*tb) {
      // The Euler-Maclaurin table reaches relative remainders near 1e-268; 220 digits cannot resolve them.
      if (tb_which == 2 && tb->count("--prec") == 0) tb_sh.prec = 300;
      auto ctx = context_of(tb_sh);
      Output out(tb_sh.out);
      std::vector<long> Ns{1, 5, 20, 100};
      auto ks = table_ks();
      auto tabs = remainder_tables(parse_complex(tb_s, ctx), Ns, ks, ctx);
      const auto& rows = tb_which == 1 ? tabs.alpha_series : tabs.euler_maclaurin;
      std::ostream& os = out.os();
      os << "K,R_N1,R_N5,R_N20,R_N100\n";
      for (const auto& row : rows) {
        os << row.K;
        for (long n : Ns) {
          const BigComplex& v = row.values.at(n);
          os << "," << (v.is_real() ? format_real(v.re(), 10) : format_complex(v, 10));
          if (row.flagged.count(n))
            std::cerr << "note: K=" << row.K << " N=" << n << " may carry rounding error above 1e-6\n";
        }
        os << "\n";
      }
    } else if (*as) {
      auto ctx = context_of(a_sh);
      Output out(a_sh.out);
      std::ostream& os = out.os();
      int d = ctx.target_digits;
      if (a_which == "jsum") {
        auto [exact, est] = j_sum_and_estimate(a_m, parse_real(a_a, ctx), parse_complex(a_s, ctx), ctx);
        print_value(os, exact, d, "exact");
        print_value(os, est, d, "estimate");
        if (est.is_zero()) os << "ratio = undefined\n";
        else print_value(os, exact / est, d, "ratio");
      } else {
        if (a_chi.empty()) throw DomainError("--chi is required for chisum");
        auto r = chi_sum_estimate(a_m, character_from_label(a_chi), ctx);
        print_value(os, r.exact, d, "exact");
        os << "exact_is_zero = " << (r.exact_is_zero ? "yes" : "no") << "\n";
        print_value(os, r.main_term, d, "main_term");
        os << "bound = " << format_real(r.bound, d) << "\n";
        print_value(os, r.asymptotic, d, "asymptotic");
        if (r.main_term.is_zero()) os << "ratio = undefined\n";
        else print_value(os, r.exact / r.main_term, d, "ratio");
      }
    } else if (*eg) {
      auto ctx = context_of(eg_sh);
      Output out(eg_sh.out);
      long N = eg_sh.N < 0 ? 20 : eg_sh.N;
      long K = eg_sh.K < 0 ? 2000 : eg_sh.K;
      print_result(out.os(), euler_gamma(N, K, ctx), ctx.target_digits);
    }
  } catch (const ParseError& err) {
    std::cerr << "parse error: " << err.what() << "\n";
    return 1;
  } catch (const PoleError& err) {
    std::cerr << "pole: " << err.what() << " (residue " << err.residue << ")\n";
    return 2;
  } catch (const DomainError& err) {
    std::cerr << "domain error: " << err.what() << "\n";
    return 2;
  } catch (const PrecisionError& err) {
    std::cerr << "precision error: " << err.what() << "\n";
    return 3;
  } catch (const ConsistencyError& err) {
    std::cerr << "consistency error: " << err.what() << "\n";
    return 3;
  }
  return 0;
}
