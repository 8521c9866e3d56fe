#include "kontsevich/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <stdexcept>

#include "kontsevich/errors.hpp"

namespace kontsevich {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::optional<std::int64_t> min_truncated_base(const NCPoly& source) {
  std::optional<std::int64_t> d_min;
  for (const auto& [w, c] : source.terms()) {
    bool has_series = false;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w.gen_at(i) == Gen::y && w.exp_at(i) < 0) {
        has_series = true;
        break;
      }
    if (!has_series) continue;
    const std::int64_t base = w.x_degree();
    if (!d_min || base < *d_min) d_min = base;
  }
  return d_min;
}

// First word, in canonical order, whose coefficients differ.
std::string first_mismatch(const NCPoly& formula, const NCPoly& oracle) {
  const Word* best = nullptr;
  auto consider = [&best](const Word& w) {
    if (!best || w < *best) best = &w;
  };
  for (const auto& [w, c] : formula.terms()) {
    const Int* oc = oracle.coeff(w);
    if (!oc || *oc != c) consider(w);
  }
  for (const auto& [w, c] : oracle.terms()) {
    const Int* fc = formula.coeff(w);
    if (!fc || *fc != c) consider(w);
  }
  if (!best) return "";
  const Int* fc = formula.coeff(*best);
  const Int* oc = oracle.coeff(*best);
  return "word " + format_word(*best) + ": formula=" + (fc ? fc->str() : "0") +
         " oracle=" + (oc ? oc->str() : "0");
}

VerifyReport capacity_report(std::string id, const std::string& what, Clock::time_point start) {
  VerifyReport rep;
  rep.id = std::move(id);
  rep.status = VerifyReport::Status::capacity;
  rep.detail = what;
  rep.seconds = elapsed(start);
  return rep;
}

}  // namespace

int VerifyReport::exit_code() const {
  switch (status) {
    case Status::pass: return 0;
    case Status::mismatch: return 1;
    default: return 2;
  }
}

const char* VerifyReport::status_name() const {
  switch (status) {
    case Status::pass: return "pass";
    case Status::mismatch: return "mismatch";
    case Status::uncertified: return "uncertified";
    default: return "capacity";
  }
}

TruncationPolicy auto_policy(const NCPoly& target, const NCPoly& source, int r) {
  TruncationPolicy policy;
  policy.y_degree_bound = target.max_abs_y_degree() + r;
  const auto d_min = min_truncated_base(source);
  if (d_min && policy.y_degree_bound > *d_min) {
    const std::int64_t gap = policy.y_degree_bound - *d_min;
    policy.series_cap = static_cast<int>((gap + r - 1) / r);
  }
  return policy;
}

VerifyReport verify_formula(int r, int n, const VerifyOptions& opts) {
  const auto start = Clock::now();
  VerifyReport rep;
  rep.id = "formula r=" + std::to_string(r) + " n=" + std::to_string(n) +
           (opts.streaming ? " (streaming)" : "");
  if (n < 1) throw std::invalid_argument("verify_formula: n must be >= 1");

  if (opts.streaming) {
    const Int expected_count = count_terms(r, n);
    const int workers = std::max(1, opts.threads);
    std::vector<CommPoly> partial(static_cast<std::size_t>(workers));
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(workers), 0);
    stream_xn(r, n, workers, [&](int id, Word&& w) {
      accumulate_commutative(partial[static_cast<std::size_t>(id)], w);
      ++counts[static_cast<std::size_t>(id)];
    });
    CommPoly image = std::move(partial[0]);
    Int streamed = counts[0];
    for (int t = 1; t < workers; ++t) {
      image += partial[static_cast<std::size_t>(t)];
      streamed += counts[static_cast<std::size_t>(t)];
    }
    rep.compared = image.term_count();
    if (streamed != expected_count) {
      rep.status = VerifyReport::Status::mismatch;
      rep.detail = "streamed " + streamed.str() + " terms, count_terms says " +
                   expected_count.str();
      rep.seconds = elapsed(start);
      return rep;
    }
    Int mass = 0;
    bool nonneg = true;
    for (const auto& [k, c] : image.terms()) {
      mass += c;
      if (c < 0) nonneg = false;
    }
    const CommPoly expected = cluster_recurrence(r, n);
    if (!nonneg || mass != expected_count || !(image == expected)) {
      rep.status = VerifyReport::Status::mismatch;
      rep.detail = "commutative image disagrees with exchange recurrence";
    } else {
      rep.status = VerifyReport::Status::pass;
    }
    rep.seconds = elapsed(start);
    return rep;
  }

  NCPoly formula, source;
  try {
    formula = assemble_xn(r, n, {opts.max_terms, opts.threads});
    source = n == 0 ? NCPoly() : assemble_xn(r, n - 1, {opts.max_terms, opts.threads});
  } catch (const CapacityError& e) {
    return capacity_report(rep.id, e.what(), start);
  }
  if (n == 0) {
    rep.status = VerifyReport::Status::pass;
    rep.compared = 1;
    rep.seconds = elapsed(start);
    return rep;
  }

  const TruncationPolicy policy = opts.policy ? *opts.policy : auto_policy(formula, source, r);
  OracleReport oracle_rep;
  const NCPoly oracle = apply_F_truncated(source, r, policy, &oracle_rep);
  rep.discarded = oracle_rep.discarded;
  rep.certified_window = policy.y_degree_bound;

  if (!oracle_rep.exact_up_to_bound()) {
    rep.status = VerifyReport::Status::uncertified;
    rep.detail = "window " + std::to_string(policy.y_degree_bound) +
                 " exceeds certified threshold " +
                 std::to_string(oracle_rep.exact_threshold());
    rep.seconds = elapsed(start);
    return rep;
  }
  if (!stability_check(source, r, policy.series_cap, policy.y_degree_bound)) {
    rep.status = VerifyReport::Status::mismatch;
    rep.detail = "stability check failed at K=" + std::to_string(policy.series_cap);
    rep.seconds = elapsed(start);
    return rep;
  }
  rep.compared = formula.term_count();
  if (oracle == formula) {
    rep.status = VerifyReport::Status::pass;
  } else {
    rep.status = VerifyReport::Status::mismatch;
    rep.detail = first_mismatch(formula, oracle);
  }
  rep.seconds = elapsed(start);
  return rep;
}

VerifyReport verify_lemma_main(int r, int n, const std::vector<int>& w_prime) {
  const auto start = Clock::now();
  VerifyReport rep;
  rep.id = "lemma r=" + std::to_string(r) + " n=" + std::to_string(n) + " |W'|=" +
           std::to_string(w_prime.size());
  const BContext ctx(r, n);
  const BContext ctx_up(r, n + 1);
  const std::uint64_t wmask = positions_to_mask(w_prime, ctx.positions());

  // Left side: sum over V with forced(V) within W' of the expansion word
  // restricted to W' minus forced(V).
  NCPoly lhs_src;
  const std::uint64_t v_count = std::uint64_t{1} << ctx.input_positions();
  for (std::uint64_t vmask = 0; vmask < v_count; ++vmask) {
    const GatePlan plan = gate_plan(ctx, vmask);
    if (plan.forced & ~wmask) continue;
    lhs_src.add_term(reduce(expand_F_tilde(ctx, vmask, wmask & ~plan.forced, plan)), 1);
  }

  // Right side: the full expansion at level n+1 with V = W'.
  NCPoly rhs;
  const GatePlan plan_up = gate_plan(ctx_up, wmask);
  std::uint64_t sub = plan_up.free;
  while (true) {
    rhs.add_term(reduce(expand_F_tilde(ctx_up, wmask, sub, plan_up)), 1);
    if (sub == 0) break;
    sub = (sub - 1) & plan_up.free;
  }

  const TruncationPolicy policy = auto_policy(rhs, lhs_src, r);
  OracleReport oracle_rep;
  const NCPoly lhs = apply_F_truncated(lhs_src, r, policy, &oracle_rep);
  rep.discarded = oracle_rep.discarded;
  rep.certified_window = policy.y_degree_bound;
  if (!oracle_rep.exact_up_to_bound()) {
    rep.status = VerifyReport::Status::uncertified;
    rep.detail = "window exceeds certified threshold";
    rep.seconds = elapsed(start);
    return rep;
  }
  rep.compared = rhs.term_count();
  if (lhs == rhs) {
    rep.status = VerifyReport::Status::pass;
  } else {
    rep.status = VerifyReport::Status::mismatch;
    rep.detail = first_mismatch(rhs, lhs);
  }
  rep.seconds = elapsed(start);
  return rep;
}

VerifyReport verify_lemma_all(int r, int n) {
  const auto start = Clock::now();
  VerifyReport rep;
  rep.id = "lemma r=" + std::to_string(r) + " n=" + std::to_string(n) + " all W'";
  const BContext ctx(r, n);
  const int c = ctx.positions();
  if (c > 25) return capacity_report(rep.id, "2^{c_n} cases out of reach", start);
  const std::uint64_t total = std::uint64_t{1} << c;
  for (std::uint64_t wmask = 0; wmask < total; ++wmask) {
    VerifyReport one = verify_lemma_main(r, n, mask_to_positions(wmask));
    rep.compared += one.compared;
    rep.discarded += one.discarded;
    if (!one.ok()) {
      rep.status = one.status;
      rep.detail = one.id + ": " + one.detail;
      rep.seconds = elapsed(start);
      return rep;
    }
  }
  rep.status = VerifyReport::Status::pass;
  rep.seconds = elapsed(start);
  return rep;
}

VerifyReport verify_bijection(int r, int n) {
  const auto start = Clock::now();
  VerifyReport rep;
  rep.id = "bijection r=" + std::to_string(r) + " n=" + std::to_string(n);
  const BContext ctx(r, n);
  const int c = ctx.positions();
  const int cp = ctx.input_positions();
  if (c > 25 || cp > 25)
    return capacity_report(rep.id, "subset lattice out of reach", start);

  using Pair = std::pair<std::uint64_t, std::uint64_t>;
  std::set<Pair> image;
  std::uint64_t pairs = 0;
  const std::uint64_t v_count = std::uint64_t{1} << cp;
  for (std::uint64_t vmask = 0; vmask < v_count; ++vmask) {
    const std::uint64_t forced = gate_plan(ctx, vmask).forced;
    const std::uint64_t free = ~forced & ((std::uint64_t{1} << c) - 1);
    std::uint64_t w = free;
    while (true) {
      const std::uint64_t w_prime = w | forced;
      // forward then back
      if ((w_prime & forced) != forced || (w_prime & ~forced) != w) {
        rep.status = VerifyReport::Status::mismatch;
        rep.detail = "roundtrip failed at V=" + std::to_string(vmask);
        rep.seconds = elapsed(start);
        return rep;
      }
      if (!image.insert({vmask, w_prime}).second) {
        rep.status = VerifyReport::Status::mismatch;
        rep.detail = "image collision at V=" + std::to_string(vmask);
        rep.seconds = elapsed(start);
        return rep;
      }
      ++pairs;
      if (w == 0) break;
      w = (w - 1) & free;
    }
  }
  // Surjectivity: every (V, W') with f(V) within W' must be hit.
  std::uint64_t target_size = 0;
  const std::uint64_t w_count = std::uint64_t{1} << c;
  for (std::uint64_t vmask = 0; vmask < v_count; ++vmask) {
    const std::uint64_t forced = gate_plan(ctx, vmask).forced;
    for (std::uint64_t wp = 0; wp < w_count; ++wp) {
      if ((wp & forced) != forced) continue;
      ++target_size;
      if (!image.count({vmask, wp})) {
        rep.status = VerifyReport::Status::mismatch;
        rep.detail = "pair not reached: V=" + std::to_string(vmask) +
                     " W'=" + std::to_string(wp);
        rep.seconds = elapsed(start);
        return rep;
      }
    }
  }
  rep.compared = pairs;
  rep.status = (pairs == target_size) ? VerifyReport::Status::pass
                                      : VerifyReport::Status::mismatch;
  if (!rep.ok()) rep.detail = "set sizes differ";
  rep.seconds = elapsed(start);
  return rep;
}

bool partition_identity_holds(int r, int c, unsigned seed, int trials) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<std::int64_t> alpha(static_cast<std::size_t>(c));
    std::vector<std::int64_t> beta(static_cast<std::size_t>(c));
    std::vector<int> h(static_cast<std::size_t>(c));  // 1 means H_i = {0,1}
    for (int i = 0; i < c; ++i) {
      alpha[static_cast<std::size_t>(i)] = entry(rng);
      beta[static_cast<std::size_t>(i)] = entry(rng);
      h[static_cast<std::size_t>(i)] = coin(rng);
    }
    auto word_for = [&](std::uint64_t delta) {
      TwoRowWord w;
      w.alpha = alpha;
      w.beta = beta;
      for (int i = 0; i < c; ++i)
        if ((delta >> i) & 1) w.beta[static_cast<std::size_t>(i)] -= r;
      return reduce(w);
    };
    NCPoly total;
    const std::uint64_t all = std::uint64_t{1} << c;
    for (std::uint64_t delta = 0; delta < all; ++delta) {
      bool allowed = true;
      for (int i = 0; i < c && allowed; ++i)
        if (((delta >> i) & 1) && !h[static_cast<std::size_t>(i)]) allowed = false;
      if (allowed) total.add_term(word_for(delta), 1);
    }
    NCPoly by_restriction;
    for (std::uint64_t v = 0; v < all; ++v) {
      bool zero = false;
      for (int i = 0; i < c && !zero; ++i)
        if (((v >> i) & 1) && !h[static_cast<std::size_t>(i)]) zero = true;
      if (!zero) by_restriction.add_term(word_for(v), 1);
    }
    if (!(total == by_restriction)) return false;
  }
  return true;
}

VerifyReport verify_positivity_unit(int r, int n, const VerifyOptions& opts) {
  const auto start = Clock::now();
  VerifyReport rep;
  rep.id = "positivity r=" + std::to_string(r) + " n=" + std::to_string(n);
  NCPoly formula;
  try {
    formula = assemble_xn(r, n, {opts.max_terms, opts.threads});
  } catch (const CapacityError& e) {
    return capacity_report(rep.id, e.what(), start);
  }
  rep.compared = formula.term_count();
  for (const auto& [w, c] : formula.terms()) {
    if (c != 1) {
      rep.status = VerifyReport::Status::mismatch;
      rep.detail = "coefficient " + c.str() + " at " + format_word(w);
      rep.seconds = elapsed(start);
      return rep;
    }
  }
  if (n >= 1) {
    NCPoly source;
    try {
      source = assemble_xn(r, n - 1, {opts.max_terms, opts.threads});
    } catch (const CapacityError& e) {
      return capacity_report(rep.id, e.what(), start);
    }
    const TruncationPolicy policy =
        opts.policy ? *opts.policy : auto_policy(formula, source, r);
    OracleReport oracle_rep;
    const NCPoly oracle = apply_F_truncated(source, r, policy, &oracle_rep);
    rep.discarded = oracle_rep.discarded;
    rep.certified_window = policy.y_degree_bound;
    if (oracle_rep.exact_up_to_bound()) {
      for (const auto& [w, c] : oracle.terms()) {
        if (c != 0 && c != 1) {
          rep.status = VerifyReport::Status::mismatch;
          rep.detail = "oracle coefficient " + c.str() + " at " + format_word(w);
          rep.seconds = elapsed(start);
          return rep;
        }
      }
    }
  }
  rep.status = VerifyReport::Status::pass;
  rep.seconds = elapsed(start);
  return rep;
}

VerifyReport verify_cz(int n_max) {
  const auto start = Clock::now();
  VerifyReport rep;
  rep.id = "cz n<=" + std::to_string(n_max);
  if (n_max < 2) throw std::invalid_argument("verify_cz: n_max must be >= 2");
  for (int n = 2; n <= n_max; ++n) {
    const CommPoly rec = cluster_recurrence(2, n);
    if (!(cz_formula(n) == rec)) {
      rep.status = VerifyReport::Status::mismatch;
      rep.detail = "closed formula differs from recurrence at n=" + std::to_string(n);
      rep.seconds = elapsed(start);
      return rep;
    }
    if (n >= 3 && !(commutative_specialize(enumerate_r2(n)) == rec)) {
      rep.status = VerifyReport::Status::mismatch;
      rep.detail = "enumeration image differs from recurrence at n=" + std::to_string(n);
      rep.seconds = elapsed(start);
      return rep;
    }
    rep.compared += rec.term_count();
  }
  rep.status = VerifyReport::Status::pass;
  rep.seconds = elapsed(start);
  return rep;
}

VerifyReport verify_exchange(int r, int n_max, std::size_t term_cap,
                             std::uint64_t op_budget) {
  const auto start = Clock::now();
  VerifyReport rep;
  rep.id = "exchange r=" + std::to_string(r) + " n<=" + std::to_string(n_max);
  std::vector<CommPoly> seq;
  seq.push_back(CommPoly::monomial({1, 0}));
  seq.push_back(CommPoly::monomial({0, 1}));
  int verified = 0;
  for (int m = 2; m <= n_max + 1; ++m) {
    CommPoly power;
    try {
      const CommPoly& prev = seq[static_cast<std::size_t>(m) - 1];
      power = CommPoly::constant(1);
      for (int i = 0; i < r; ++i) power = comm_mul_capped(power, prev, term_cap, op_budget);
      power += CommPoly::constant(1);
      seq.push_back(comm_exact_div(power, seq[static_cast<std::size_t>(m) - 2]));
      const CommPoly check = comm_mul_capped(seq[static_cast<std::size_t>(m)],
                                             seq[static_cast<std::size_t>(m) - 2],
                                             term_cap, op_budget);
      if (!(check == power)) {
        rep.status = VerifyReport::Status::mismatch;
        rep.detail = "relation fails at n=" + std::to_string(m - 1);
        rep.seconds = elapsed(start);
        return rep;
      }
    } catch (const CapacityError& e) {
      rep.status = VerifyReport::Status::capacity;
      rep.detail = "verified n<=" + std::to_string(verified) + "; step " +
                   std::to_string(m) + " stopped: " + e.what();
      rep.compared = static_cast<std::uint64_t>(verified);
      rep.seconds = elapsed(start);
      return rep;
    } catch (const InexactDivision& e) {
      rep.status = VerifyReport::Status::mismatch;
      rep.detail = e.what();
      rep.seconds = elapsed(start);
      return rep;
    }
    verified = m - 1;
  }
  rep.status = VerifyReport::Status::pass;
  rep.compared = static_cast<std::uint64_t>(verified);
  rep.seconds = elapsed(start);
  return rep;
}

}  // namespace kontsevich
