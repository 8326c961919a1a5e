#pragma once

// Command-line front end. Every subcommand builds a Report; --format picks the
// rendering and --output mirrors standard output into a file.
//
// Exit codes: 0 success, 2 usage error, 3 precondition failure, 4 oracle mismatch.

#include "modnum/curves.hpp"
#include "modnum/moduli.hpp"
#include "modnum/natcohom.hpp"
#include "modnum/oracle.hpp"
#include "modnum/p3cohom.hpp"
#include "modnum/report.hpp"
#include "modnum/surfaces.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace modnum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitOracleMismatch = 4;

struct Options {
  std::optional<std::int64_t> delta;
  std::optional<std::int64_t> s;
  std::optional<std::int64_t> sigma;
  std::optional<std::string> c2;
  std::optional<std::int64_t> n_min;
  std::optional<std::int64_t> n_max;
  std::optional<std::int64_t> beta;
  std::string format = "text";
  std::vector<std::uint64_t> primes;
  std::uint64_t seed = 1;
  std::int64_t max_s = 4;
  std::optional<std::int64_t> max_n;
  std::string output;
};

/// Thrown for inputs that parse but make no sense (maps to exit 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::int64_t require(const std::optional<std::int64_t>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  return *v;
}

inline BigInt parse_bigint(const std::string& text) {
  try {
    std::size_t pos = 0;
    const bool neg = !text.empty() && text[0] == '-';
    if (neg) pos = 1;
    if (pos >= text.size()) throw UsageError("empty integer");
    for (std::size_t i = pos; i < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9') throw UsageError("not an integer: " + text);
    }
    BigInt v(text.substr(pos));
    return neg ? BigInt(-v) : v;
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("not an integer: " + text);
  }
}

}  // namespace detail

inline Report cmd_surface(const Options& o) {
  const std::int64_t delta = detail::require(o.delta, "--delta");
  const auto x = hypersurface(delta);
  const std::int64_t n_min = o.n_min.value_or(0);
  const std::int64_t n_max = o.n_max.value_or(x.k + 4);
  if (n_min > n_max) throw UsageError("--n-min exceeds --n-max");

  Report r;
  r.command = "surface";
  r.input["delta"] = delta;
  r.input["n_min"] = n_min;
  r.input["n_max"] = n_max;
  r.table("surface", {"delta", "h_square", "k", "chi0"})
      .add_row({delta, x.h_square, x.k, cell(x.chi0)});

  std::optional<BigInt> c2;
  if (o.c2) {
    c2 = detail::parse_bigint(*o.c2);
    r.input["c2"] = *o.c2;
    r.table("expected_dimension", {"c2", "exp_dim"}).add_row({cell(*c2), cell(expected_dim(x, *c2))});
  }

  std::vector<std::string> cols{"n", "chi_OX", "chi_OX_restriction"};
  if (c2) cols.push_back("chi_E");
  auto& t = r.table("euler_characteristics", cols);
  for (std::int64_t n = n_min; n <= n_max; ++n) {
    std::vector<Json> row{n, cell(chi_OX(x, n)), cell(chi_OX_restriction(delta, n))};
    if (c2) row.push_back(cell(chi_E(x, *c2, n)));
    t.add_row(std::move(row));
  }
  return r;
}

inline Report cmd_curve(const Options& o) {
  const std::int64_t s = detail::require(o.s, "--s");
  const auto c = determinantal_curve(s);
  const auto inv = curve_invariants(c);
  const std::int64_t n_min = o.n_min.value_or(-2);
  const std::int64_t n_max = o.n_max.value_or(3 * s);
  if (n_min > n_max) throw UsageError("--n-min exceeds --n-max");

  Report r;
  r.command = "curve";
  r.input["s"] = s;
  r.input["n_min"] = n_min;
  r.input["n_max"] = n_max;
  r.table("curve", {"s", "degree", "genus", "resolution", "s_of_C", "e_of_C", "t_of_C",
                    "nstar_bound", "jsq_bound"})
      .add_row({s, c.degree, c.genus,
                "O(" + std::to_string(-s - 1) + ")^" + std::to_string(s) + " -> O(" +
                    std::to_string(-s) + ")^" + std::to_string(s + 1),
                inv.s_of_C, inv.e_of_C, inv.t_of_C.str(), inv.nstar_bound, inv.jsq_bound});
  auto& t = r.table("cohomology", {"n", "h0_J", "h1_J", "h2_J", "h3_J", "h0_OC", "h1_OC"});
  for (std::int64_t n = n_min; n <= n_max; ++n) {
    t.add_row({n, cell(h_ideal(c, 0, n)), cell(h_ideal(c, 1, n)), cell(h_ideal(c, 2, n)),
               cell(h_ideal(c, 3, n)), cell(h_curve_structure(c, 0, n)),
               cell(h_curve_structure(c, 1, n))});
  }
  return r;
}

inline Report cmd_construct(const Options& o) {
  const std::int64_t delta = detail::require(o.delta, "--delta");
  std::int64_t s = 0;
  std::int64_t sigma = 0;
  if (o.s && o.sigma) {
    s = *o.s;
    sigma = *o.sigma;
  } else if (!o.s && !o.sigma) {
    const auto p = optimal_parameters(delta);
    s = p.s;
    sigma = p.sigma;
  } else {
    throw UsageError("--s and --sigma must be given together");
  }
  const auto cert = certificate(delta, s, sigma);
  const auto curve = determinantal_curve(s);

  Report r;
  r.command = "construct";
  r.input["delta"] = delta;
  r.input["s"] = s;
  r.input["sigma"] = sigma;
  r.table("certificate", {"delta", "s", "sigma", "curve_degree", "cond_a", "cond_b", "cond_c",
                          "cond_d", "cond_e", "cond_f", "cond_g", "stable", "good", "c2",
                          "exp_dim"})
      .add_row({delta, s, sigma, cert.curve_degree, cert.cond_a, cert.cond_b, cert.cond_c,
                cert.cond_d, cert.cond_e, cert.cond_f, cert.cond_g, cert.stable, cert.good,
                cell(cert.c2), cell(cert.exp_dim)});
  r.table("criteria", {"h0_E_vanishes", "good_component", "jsq_vanishing"})
      .add_row({cor_d_stable(curve, delta, sigma), prop_f_good(curve, delta, sigma),
                lemma_i_vanishing(curve, delta, 2 * sigma + delta - 4)});
  return r;
}

inline Json interval_upper(const ComponentInterval& iv) {
  return iv.upper ? cell(*iv.upper) : Json("inf");
}

inline Report cmd_intervals(const Options& o) {
  const std::int64_t delta = detail::require(o.delta, "--delta");
  Report r;
  r.command = "intervals";
  r.input["delta"] = delta;
  auto& t = r.table("intervals", {"label", "lower", "lower_closed", "upper", "upper_closed",
                                  "first_integer", "last_integer", "integer_count", "empty",
                                  "valid", "stable_unknown"});
  for (auto label : {IntervalLabel::good_tail, IntervalLabel::ogrady,
                     IntervalLabel::two_component, IntervalLabel::semistable_two_component,
                     IntervalLabel::odd_c1_two_component}) {
    const auto iv = component_interval(label, delta);
    const bool bounded = iv.bounded();
    t.add_row({std::string(to_string(label)), cell(iv.lower), iv.lower_closed,
               interval_upper(iv), iv.upper_closed, cell(iv.first_integer()),
               bounded ? cell(iv.last_integer()) : Json("inf"),
               bounded ? cell(iv.integer_count()) : Json("inf"), iv.is_empty(), iv.valid,
               iv.stable_unknown});
  }
  return r;
}

inline Report cmd_thresholds(const Options&) {
  Report r;
  r.command = "thresholds";
  auto& t = r.table("thresholds",
                    {"label", "parity", "lower_bound", "min_delta", "first_nonempty", "statement"});
  struct Entry {
    IntervalLabel label;
    Parity parity;
    const char* statement;
  };
  const Entry entries[] = {
      {IntervalLabel::two_component, Parity::even, "good + larger component, c1=0"},
      {IntervalLabel::two_component, Parity::odd, "good + larger component, c1=0"},
      {IntervalLabel::semistable_two_component, Parity::even,
       "good + larger semistable component"},
      {IntervalLabel::semistable_two_component, Parity::odd,
       "good + larger semistable component"},
      {IntervalLabel::odd_c1_two_component, Parity::odd, "good + larger component, c1=1"},
      {IntervalLabel::odd_c1_two_component, Parity::even, "good + larger component, c1=1"},
  };
  for (const auto& e : entries) {
    const auto family = interval_family(e.label);
    t.add_row({std::string(to_string(e.label)), std::string(to_string(e.parity)), "parity",
               min_delta_nonempty(family, e.parity), first_nonempty_delta(family, e.parity),
               e.statement});
  }
  t.add_row({std::string(to_string(IntervalLabel::ogrady)), "any", "-",
             min_delta_nonempty_any_parity(&ogrady_interval),
             std::min(first_nonempty_delta(&ogrady_interval, Parity::even),
                      first_nonempty_delta(&ogrady_interval, Parity::odd)),
             "component of larger than expected dimension"});
  t.add_row({std::string(to_string(IntervalLabel::two_component)), "any", "universal",
             min_delta_nonempty_any_parity(&combined_two_component_interval),
             std::min(first_nonempty_delta(&combined_two_component_interval, Parity::even),
                      first_nonempty_delta(&combined_two_component_interval, Parity::odd)),
             "good + larger component, bound delta^3/4 - delta^2/2"});
  return r;
}

inline Report cmd_natural(const Options& o) {
  const std::int64_t delta = detail::require(o.delta, "--delta");
  if (!o.c2) throw UsageError("missing required flag --c2");
  const BigInt c2 = detail::parse_bigint(*o.c2);
  const auto x = hypersurface(delta);
  const std::int64_t n_min = o.n_min.value_or(x.k - 6);
  const std::int64_t n_max = o.n_max.value_or(6);
  if (n_min > n_max) throw UsageError("--n-min exceeds --n-max");
  const auto profile = hilbert_profile(x, c2, n_min, n_max, o.beta);

  Report r;
  r.command = "natural";
  r.input["delta"] = delta;
  r.input["c2"] = *o.c2;
  r.input["n_min"] = n_min;
  r.input["n_max"] = n_max;
  if (o.beta) r.input["beta"] = *o.beta;
  r.table("summary", {"delta", "k", "beta", "gamma", "natural_threshold"})
      .add_row({delta, x.k, profile.beta, cell(profile.gamma), cell(thm_a1_threshold(delta))});
  auto& t = r.table("profile", {"n", "h0", "h1", "h2", "chi"});
  for (const auto& row : profile.rows) {
    t.add_row({row.n, cell(row.h0), cell(row.h1), cell(row.h2), cell(row.chi)});
  }
  return r;
}

/// Runs the oracles; sets mismatch when any majority vote fails.
inline Report cmd_verify(const Options& o, bool& mismatch) {
  if (o.max_s < 1) throw UsageError("--max-s must be >= 1");
  std::vector<std::uint64_t> primes = o.primes.empty() ? std::vector<std::uint64_t>{101}
                                                       : o.primes;
  for (auto p : primes) {
    if (!oracle::is_prime(p) || p < 11) throw UsageError("--prime must be a prime >= 11");
  }
  const std::vector<std::uint64_t> seeds{o.seed, o.seed + 1, o.seed + 2};

  Report r;
  r.command = "verify";
  r.input["max_s"] = o.max_s;
  if (o.max_n) r.input["max_n"] = *o.max_n;
  r.input["seed"] = o.seed;
  Json jp = Json::array();
  for (auto p : primes) jp.push_back(p);
  r.input["primes"] = jp;

  auto& lines = r.table("line", {"n", "expected", "observed", "ok"});
  for (std::int64_t n = 0; n <= 15; ++n) {
    const BigInt expected = h_line(0, n);
    const std::uint64_t got = oracle::h0_line_oracle(n);
    const bool ok = expected == got;
    mismatch = mismatch || !ok;
    lines.add_row({n, cell(expected), got, ok});
  }

  auto seeds_text = [&]() {
    std::string s;
    for (auto sd : seeds) s += (s.empty() ? "" : "/") + std::to_string(sd);
    return s;
  };
  auto values_text = [](const oracle::SeedVote& v) {
    std::string s;
    for (auto x : v.values) s += (s.empty() ? "" : "/") + std::to_string(x);
    return s;
  };
  auto verdict = [&](const oracle::SeedVote& v) -> std::string {
    if (v.unanimous()) return "ok";
    if (v.majority()) return "ok-nongeneric-seed";
    mismatch = true;
    return "MISMATCH";
  };

  auto& ideal = r.table("ideal", {"s", "n", "prime", "expected", "values", "seeds", "verdict"});
  auto& square = r.table("ideal_square", {"s", "n", "prime", "expected", "products", "order_two",
                                          "seeds", "verdict"});
  for (std::int64_t s = 1; s <= o.max_s; ++s) {
    const auto c = determinantal_curve(s);
    const std::int64_t top = o.max_n.value_or(3 * s);
    for (auto p : primes) {
      for (std::int64_t n = 0; n <= top; ++n) {
        oracle::SeedVote vote;
        vote.seeds = seeds;
        vote.expected = static_cast<std::size_t>(to_int64(h_ideal(c, 0, n)));
        for (auto sd : seeds) {
          vote.values.push_back(oracle::h0_ideal_oracle(static_cast<int>(s), n, p, sd));
        }
        ideal.add_row({s, n, p, vote.expected, values_text(vote), seeds_text(), verdict(vote)});
      }
      for (std::int64_t n = 0; n < 2 * s && static_cast<std::uint64_t>(n) < p; ++n) {
        oracle::SeedVote products;
        oracle::SeedVote order_two;
        products.seeds = order_two.seeds = seeds;
        for (auto sd : seeds) {
          products.values.push_back(
              oracle::h0_ideal_square_oracle(static_cast<int>(s), n, p, sd));
          order_two.values.push_back(oracle::h0_order_two_oracle(static_cast<int>(s), n, p, sd));
        }
        const std::string v1 = verdict(products);
        const std::string v2 = verdict(order_two);
        square.add_row({s, n, p, 0, values_text(products), values_text(order_two), seeds_text(),
                        v1 == "MISMATCH" || v2 == "MISMATCH" ? "MISMATCH" : v2});
      }
    }
  }
  return r;
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact numerics for moduli of rank-2 bundles on hypersurfaces in P^3",
               "modnum"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Options o;
  app.add_option("--format", o.format, "Output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--output", o.output, "Also write the output to FILE");

  auto* surface = app.add_subcommand("surface", "Numerics of a degree-delta surface");
  surface->add_option("--delta", o.delta)->required();
  surface->add_option("--c2", o.c2);
  surface->add_option("--n-min", o.n_min);
  surface->add_option("--n-max", o.n_max);

  auto* curve = app.add_subcommand("curve", "Cohomology of a determinantal curve");
  curve->add_option("--s", o.s)->required();
  curve->add_option("--n-min", o.n_min);
  curve->add_option("--n-max", o.n_max);

  auto* construct = app.add_subcommand("construct", "Certificate for the Serre construction");
  construct->add_option("--delta", o.delta)->required();
  construct->add_option("--s", o.s);
  construct->add_option("--sigma", o.sigma);

  auto* intervals = app.add_subcommand("intervals", "c2 intervals for a given degree");
  intervals->add_option("--delta", o.delta)->required();

  auto* thresholds = app.add_subcommand("thresholds", "Degrees from which intervals are nonempty");

  auto* natural = app.add_subcommand("natural", "Natural-cohomology profile of E(n)");
  natural->add_option("--delta", o.delta)->required();
  natural->add_option("--c2", o.c2)->required();
  natural->add_option("--n-min", o.n_min);
  natural->add_option("--n-max", o.n_max);
  natural->add_option("--beta", o.beta);

  auto* verify = app.add_subcommand("verify", "Brute-force oracle checks over Z/p");
  verify->add_option("--prime", o.primes, "Prime modulus (repeatable)");
  verify->add_option("--seed", o.seed);
  verify->add_option("--max-s", o.max_s);
  verify->add_option("--max-n", o.max_n);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const auto format = *parse_format(o.format);
  bool mismatch = false;
  Report report;
  try {
    if (surface->parsed()) report = cmd_surface(o);
    else if (curve->parsed()) report = cmd_curve(o);
    else if (construct->parsed()) report = cmd_construct(o);
    else if (intervals->parsed()) report = cmd_intervals(o);
    else if (thresholds->parsed()) report = cmd_thresholds(o);
    else if (natural->parsed()) report = cmd_natural(o);
    else report = cmd_verify(o, mismatch);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  }

  const std::string text = render(report, format);
  out << text;
  if (!o.output.empty()) {
    std::ofstream file(o.output, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << o.output << "\n";
      return kExitUsage;
    }
    file << text;
  }
  return mismatch ? kExitOracleMismatch : kExitOk;
}

}  // namespace modnum::cli
