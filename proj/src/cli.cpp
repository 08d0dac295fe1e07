#include "padicsum/cli.hpp"

#include <omp.h>

#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "padicsum/bernoulli.hpp"
#include "padicsum/kernels.hpp"
#include "padicsum/sequences.hpp"
#include "padicsum/summation.hpp"

namespace padicsum::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr long kMaxSetSize = 1'000'000;

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  for (;;) {
    auto at = s.find(sep);
    parts.push_back(s.substr(0, at));
    if (at == std::string_view::npos) return parts;
    s.remove_prefix(at + 1);
  }
}

Json exponent_json(const ValExponent& e) { return e.is_infinite() ? Json("inf") : Json(e.value()); }

Json string_array(std::span<const BigInt> values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(v.get_str());
  return a;
}

std::string flatten(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : ",") + flatten(e);
    return "[" + s + "]";
  }
  if (v.is_object()) {
    std::string s;
    for (const auto& [key, e] : v.items()) s += (s.empty() ? "" : " ") + key + "=" + flatten(e);
    return s;
  }
  return v.dump();
}

enum class Format { human, machine };

/// One record per result item. Machine mode writes a self-contained JSON
/// object per line; human mode writes the same fields as key=value text.
class Emitter {
 public:
  Emitter(Format format, std::ostream& out) : format_(format), out_(out) {}

  void emit(const std::string& command, const Json& params, const Json& result, bool ok,
            const std::string& human = {}) {
    if (!ok) failed_ = true;
    if (format_ == Format::machine) {
      Json rec;
      rec["command"] = command;
      rec["params"] = params;
      rec["result"] = result;
      rec["ok"] = ok;
      out_ << rec.dump() << '\n';
      return;
    }
    out_ << (human.empty() ? command + ": " + flatten(result) : human);
    if (!ok) out_ << "  [FAILED]";
    out_ << '\n';
  }

  bool failed() const { return failed_; }

 private:
  Format format_;
  std::ostream& out_;
  bool failed_ = false;
};

Prime make_prime(long v) {
  if (v < 2 || !is_prime(static_cast<std::uint64_t>(v))) throw UsageError(std::to_string(v) + " is not a prime");
  return Prime(static_cast<std::uint64_t>(v));
}

std::vector<Prime> parse_primes(const std::string& spec) {
  std::vector<Prime> out;
  for (long v : parse_integer_set(spec)) out.push_back(make_prime(v));
  return out;
}

std::vector<BigInt> parse_coefficients(const std::string& spec) {
  std::vector<BigInt> out;
  for (auto part : split(spec, ',')) out.push_back(parse_integer(part));
  return out;
}

unsigned positive(long v, const char* what) {
  if (v < 1) throw UsageError(std::string(what) + " must be at least 1");
  return static_cast<unsigned>(v);
}

Json certificate_json(const SumCertificate& c) {
  Json r;
  r["kind"] = "certificate";
  r["series"] = c.series;
  r["k"] = c.k;
  r["N"] = c.N;
  r["x"] = c.x ? Json(to_string(*c.x)) : Json(nullptr);
  r["p"] = c.p.value();
  r["partial"] = to_string(c.partial);
  r["target"] = to_string(c.target);
  r["tail"] = to_string(c.tail);
  r["achieved_exponent"] = exponent_json(c.distance_exponent);
  r["bound_exponent"] = exponent_json(c.bound_exponent);
  return r;
}

// --- triples -------------------------------------------------------------

void cmd_triples(Emitter& em, long kmax_arg) {
  const unsigned kmax = positive(kmax_arg, "--kmax");
  Json params{{"kmax", kmax}};
  for (unsigned k = 1; k <= kmax; ++k) {
    const SummationTriple t = build_triple(k);
    Json layers = Json::array();
    for (const auto& l : t.A.layers()) layers.push_back(string_array(l.coeffs()));
    Json r;
    r["k"] = k;
    r["U"] = render(t.U);
    r["V"] = render(t.V);
    r["A"] = render(t.A);
    r["U_coeffs"] = string_array(t.U.coeffs());
    r["V_coeffs"] = string_array(t.V.coeffs());
    r["A_layers"] = layers;
    const std::string human = "U_" + std::to_string(k) + " = " + render(t.U) + "; V_" + std::to_string(k) + " = " +
                              render(t.V) + "; A_" + std::to_string(k - 1) + " = " + render(t.A);
    em.emit("triples", params, r, true, human);
  }
}

// --- verify --------------------------------------------------------------

void cmd_verify(Emitter& em, const std::string& k_spec, long n_max, const std::string& x_spec,
                const std::optional<std::string>& p_spec) {
  kernels::VerifyGrid grid;
  for (long k : parse_integer_set(k_spec)) grid.ks.push_back(positive(k, "--k"));
  grid.n_max = positive(n_max, "--n-max");
  grid.xs = parse_rational_set(x_spec);
  if (p_spec) grid.primes = parse_primes(*p_spec);

  Json params{{"k", k_spec}, {"n_max", grid.n_max}, {"x_set", x_spec}};
  if (p_spec) params["p_list"] = *p_spec;

  SummationFamily& family = shared_family();
  const auto identities = kernels::identity_grid_parallel(grid, family);
  std::vector<kernels::CertificateOutcome> certs;
  if (!grid.primes.empty()) certs = kernels::certificate_grid_parallel(grid, family);

  // Identity record for (k, N, x), then its certificates for each p.
  const std::size_t np = grid.primes.size();
  for (std::size_t i = 0; i < identities.size(); ++i) {
    const auto& c = identities[i];
    Json r{{"kind", "identity"}, {"k", c.k}, {"N", c.N}, {"x", to_string(c.x)},
           {"lhs", to_string(c.lhs)}, {"rhs", to_string(c.rhs)}};
    em.emit("verify", params, r, c.ok);
    for (std::size_t j = 0; j < np; ++j) {
      const auto& o = certs[i * np + j];
      if (o.certificate) {
        em.emit("verify", params, certificate_json(*o.certificate), o.ok());
      } else {
        Json rej{{"kind", "rejection"}, {"k", o.k}, {"N", o.N}, {"x", to_string(o.x)}, {"p", o.p},
                 {"reason", o.rejection}};
        em.emit("verify", params, rej, false);
      }
    }
  }
}

// --- sum -----------------------------------------------------------------

void cmd_sum(Emitter& em, std::optional<long> k_arg, const std::string& x_text,
             const std::optional<std::string>& c_spec) {
  const BigRat xr = parse_rational(x_text);
  if (!is_integer(xr)) throw UsageError("--x must be an integer for a p-adic invariant sum");
  const BigInt x = xr.get_num();

  std::vector<BigInt> C;
  if (c_spec) {
    C = parse_coefficients(*c_spec);
    if (k_arg && static_cast<std::size_t>(*k_arg) != C.size())
      throw UsageError("--k must equal the number of --C coefficients");
  } else {
    if (!k_arg) throw UsageError("sum needs --k or --C");
    const unsigned k = positive(*k_arg, "--k");
    C.assign(k, BigInt(0));
    C.back() = 1;
  }
  if (C.empty()) throw UsageError("--C must list at least one coefficient");

  Json params{{"k", C.size()}, {"x", to_string(x)}};
  if (c_spec) params["C"] = *c_spec;

  const SeriesPQ pq = build_P_Q(C);
  Json r;
  r["k"] = C.size();
  r["x"] = to_string(x);
  r["P"] = render(pq.P);
  r["Q"] = render(pq.Q);
  r["sum"] = to_string(BigRat(pq.Q.eval(x)));
  em.emit("sum", params, r, true);
}

// --- padic ---------------------------------------------------------------

void cmd_padic(Emitter& em, const std::string& value_text, long p_arg, long digits) {
  const BigRat q = parse_rational(value_text);
  const Prime p = make_prime(p_arg);
  if (digits < 1) throw UsageError("--digits must be at least 1");
  const PadicExpansion e = padic_expand(q, p, digits);

  Json ds = Json::array();
  for (auto d : e.digits) ds.push_back(d);
  Json r;
  r["value"] = to_string(q);
  r["p"] = p.value();
  r["zero"] = e.is_zero();
  r["valuation"] = e.valuation;
  r["digits"] = ds;
  r["in_Zp"] = in_convergence_domain(q, p);
  if (!in_convergence_domain(q, p)) r["note"] = "negative valuation: value lies outside Z_p";
  em.emit("padic", Json{{"value", value_text}, {"p", p.value()}, {"digits", digits}}, r, true);
}

// --- bernoulli -----------------------------------------------------------

struct BernoulliArgs {
  std::optional<long> nmax;
  std::optional<long> identity_k;
  std::optional<long> N;
  std::optional<std::string> p_list;
  std::vector<long> level;
  std::optional<std::string> poly;
};

void cmd_bernoulli(Emitter& em, const BernoulliArgs& a) {
  const int modes = (a.nmax ? 1 : 0) + (a.identity_k ? 1 : 0) + (!a.level.empty() ? 1 : 0);
  if (modes != 1) throw UsageError("bernoulli needs exactly one of --nmax, --identity, --level");

  if (a.nmax) {
    if (*a.nmax < 0) throw UsageError("--nmax must be non-negative");
    const auto table = bernoulli_numbers(static_cast<unsigned>(*a.nmax));
    for (std::size_t n = 0; n < table.size(); ++n) {
      Json r{{"n", n}, {"B", to_string(table[n])}, {"numerator", table[n].get_num().get_str()},
             {"denominator", table[n].get_den().get_str()}};
      em.emit("bernoulli", Json{{"nmax", *a.nmax}}, r, true);
    }
    return;
  }

  if (a.identity_k) {
    const unsigned k = positive(*a.identity_k, "--identity");
    if (!a.N) throw UsageError("--identity needs --N");
    const unsigned long N = positive(*a.N, "--N");
    const auto table = bernoulli_numbers(static_cast<unsigned>(N + k));
    Json params{{"identity", k}, {"N", N}};
    if (a.p_list) params["p_list"] = *a.p_list;
    const auto sides = bernoulli_identity_partial(k, N, table);
    Json r{{"kind", "identity"},
           {"k", k},
           {"N", N},
           {"lhs", to_string(sides.lhs)},
           {"rhs", to_string(sides.rhs)},
           {"target", to_string(volkenborn_poly(shared_family().V(k), table))}};
    em.emit("bernoulli", params, r, sides.lhs == sides.rhs);
    if (a.p_list)
      for (const auto& p : parse_primes(*a.p_list)) {
        const auto c = bernoulli_series_certificate(k, p, N, table);
        em.emit("bernoulli", params, certificate_json(c), c.ok);
      }
    return;
  }

  if (a.level.size() != 2) throw UsageError("--level takes two values: p m");
  if (!a.poly) throw UsageError("--level needs --poly c0,c1,...");
  const Prime p = make_prime(a.level[0]);
  const unsigned m = positive(a.level[1], "level m");
  const IntPoly P(parse_coefficients(*a.poly));
  const auto table = bernoulli_numbers(static_cast<unsigned>(std::max(0L, P.degree())));
  const BigRat level = volkenborn_level(P, p, m);
  const BigRat integral = volkenborn_poly(P, table);
  Json r{{"p", p.value()},
         {"m", m},
         {"poly", render(P)},
         {"level_value", to_string(level)},
         {"volkenborn", to_string(integral)},
         {"distance_exponent", exponent_json(padic_distance_exponent(level, integral, p))}};
  em.emit("bernoulli", Json{{"level", a.level}, {"poly", *a.poly}}, r, true);
}

// --- kurepa --------------------------------------------------------------

void cmd_kurepa(Emitter& em, std::optional<long> gcd_max, std::optional<long> digit_max) {
  if (!gcd_max && !digit_max) throw UsageError("kurepa needs --gcd-max and/or --digit-max");
  const auto limit = work_limit();
  KurepaReport report;
  Json params = Json::object();
  if (gcd_max) {
    if (*gcd_max < 2) throw UsageError("--gcd-max must be at least 2");
    if (static_cast<std::uint64_t>(*gcd_max) > limit) throw UsageError("--gcd-max exceeds PADICSUM_WORK_LIMIT");
    params["gcd_max"] = *gcd_max;
    const auto g = kurepa_gcd_scan(static_cast<std::uint64_t>(*gcd_max));
    report.gcd_bound = g.gcd_bound;
    report.gcd_ok_up_to = g.gcd_ok_up_to;
    report.first_gcd_failure = g.first_gcd_failure;
  }
  if (digit_max) {
    if (*digit_max < 2) throw UsageError("--digit-max must be at least 2");
    if (static_cast<std::uint64_t>(*digit_max) > limit) throw UsageError("--digit-max exceeds PADICSUM_WORK_LIMIT");
    params["digit_max"] = *digit_max;
    const auto d = kurepa_digit_scan(static_cast<std::uint64_t>(*digit_max));
    report.digit_bound = d.digit_bound;
    report.digit_checked_primes = d.digit_checked_primes;
    report.first_digit_failure = d.first_digit_failure;
  }
  auto opt = [](const std::optional<std::uint64_t>& v) { return v ? Json(*v) : Json(nullptr); };
  Json r;
  if (gcd_max) {
    r["gcd_bound"] = report.gcd_bound;
    r["gcd_ok_up_to"] = report.gcd_ok_up_to;
    r["first_gcd_failure"] = opt(report.first_gcd_failure);
  }
  if (digit_max) {
    r["digit_bound"] = report.digit_bound;
    r["digit_checked_primes"] = report.digit_checked_primes;
    r["first_digit_failure"] = opt(report.first_digit_failure);
  }
  em.emit("kurepa", params, r, report.holds());
}

// --- sequences -----------------------------------------------------------

void cmd_sequences(Emitter& em, long kmax_arg) {
  const unsigned kmax = positive(kmax_arg, "--kmax");
  const IntegerSequences s = integer_sequences(kmax);
  Json params{{"kmax", kmax}};
  auto one = [&](const char* name, const char* oeis, const std::vector<BigInt>& values) {
    Json r{{"name", name}, {"oeis", oeis}, {"values", string_array(values)}};
    std::string human = std::string(name) + " (" + oeis + "): ";
    for (std::size_t i = 0; i < values.size(); ++i) human += (i ? ", " : "") + values[i].get_str();
    em.emit("sequences", params, r, true, human);
  };
  one("-V_k(1)", "A014619", s.neg_v_at_one);
  one("-V_k(-1)", "A040027", s.neg_v_at_minus_one);
  one("U_k(1)", "A000587", s.u_at_one);
  one("-U_k(-1)", "A000110", s.neg_u_at_minus_one);
}

}  // namespace

std::vector<BigRat> parse_rational_set(std::string_view spec) {
  std::vector<BigRat> out;
  for (auto part : split(spec, ',')) {
    auto dots = part.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_rational(part));
      continue;
    }
    const BigInt lo = parse_integer(part.substr(0, dots));
    const BigInt hi = parse_integer(part.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty range '" + std::string(part) + "'");
    if (hi - lo >= kMaxSetSize) throw std::invalid_argument("range too large '" + std::string(part) + "'");
    for (BigInt v = lo; v <= hi; ++v) out.emplace_back(v);
  }
  return out;
}

std::vector<long> parse_integer_set(std::string_view spec) {
  std::vector<long> out;
  for (const auto& q : parse_rational_set(spec)) {
    if (!is_integer(q) || !q.get_num().fits_slong_p())
      throw std::invalid_argument("expected integers, got '" + to_string(q) + "'");
    out.push_back(q.get_num().get_si());
  }
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact factorial-series summation with p-adic certificates", "padicsum"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "human";
  app.add_option("--format", format, "human or machine (one JSON object per line)")
      ->check(CLI::IsMember({"human", "machine"}));
  int threads = 0;
  app.add_option("--threads", threads, "OpenMP threads for the parallel kernels (0 = runtime default)")
      ->check(CLI::NonNegativeNumber);

  long kmax = 0;
  auto* triples = app.add_subcommand("triples", "U_k, V_k and A_{k-1} for k = 1..kmax");
  triples->add_option("--kmax", kmax)->required();

  std::string k_spec, x_spec;
  long n_max = 0;
  std::optional<std::string> p_spec;
  auto* verify = app.add_subcommand("verify", "verify the finite identity over a grid, optionally with certificates");
  verify->add_option("--k", k_spec, "k values, e.g. 1..5 or 1,3")->required()->allow_extra_args(false);
  verify->add_option("--n-max", n_max)->required();
  verify->add_option("--x-set", x_spec, "x values, e.g. -3..3,1/2")->required()->allow_extra_args(false);
  verify->add_option("--p-list", p_spec, "primes for p-adic certificates");

  std::optional<long> sum_k;
  std::string sum_x;
  std::optional<std::string> sum_c;
  auto* sum = app.add_subcommand("sum", "p-adic invariant sum V_k(x), or Q(x) for a combination");
  sum->add_option("--k", sum_k);
  sum->add_option("--x", sum_x)->required();
  sum->add_option("--C", sum_c, "coefficients C_1,..,C_k");

  std::string padic_value;
  long padic_p = 0, padic_digits = 8;
  auto* padic = app.add_subcommand("padic", "truncated p-adic expansion of a rational");
  padic->add_option("--value", padic_value)->required();
  padic->add_option("--p", padic_p)->required();
  padic->add_option("--digits", padic_digits);

  BernoulliArgs bargs;
  auto* bern = app.add_subcommand("bernoulli", "Bernoulli table, Bernoulli series identity, or Volkenborn level sums");
  bern->add_option("--nmax", bargs.nmax);
  bern->add_option("--identity", bargs.identity_k, "k of the Bernoulli-weighted identity");
  bern->add_option("--N", bargs.N);
  bern->add_option("--p-list", bargs.p_list);
  bern->add_option("--level", bargs.level, "p m")->expected(2);
  bern->add_option("--poly", bargs.poly, "coefficients c0,c1,... (ascending powers)");

  std::optional<long> gcd_max, digit_max;
  auto* kurepa = app.add_subcommand("kurepa", "desk-scale Kurepa hypothesis scans");
  kurepa->add_option("--gcd-max", gcd_max);
  kurepa->add_option("--digit-max", digit_max);

  long seq_kmax = 0;
  auto* seqs = app.add_subcommand("sequences", "the four integer sequences U_k(+-1), V_k(+-1)");
  seqs->add_option("--kmax", seq_kmax)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  if (threads > 0) omp_set_num_threads(threads);
  Emitter em(format == "machine" ? Format::machine : Format::human, out);
  try {
    if (*triples) cmd_triples(em, kmax);
    if (*verify) cmd_verify(em, k_spec, n_max, x_spec, p_spec);
    if (*sum) cmd_sum(em, sum_k, sum_x, sum_c);
    if (*padic) cmd_padic(em, padic_value, padic_p, padic_digits);
    if (*bern) cmd_bernoulli(em, bargs);
    if (*kurepa) cmd_kurepa(em, gcd_max, digit_max);
    if (*seqs) cmd_sequences(em, seq_kmax);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const WorkLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return em.failed() ? kExitFailure : kExitOk;
}

}  // namespace padicsum::cli
