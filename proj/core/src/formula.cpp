#include "kontsevich/formula.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <thread>

#include "kontsevich/errors.hpp"

namespace kontsevich {

namespace {

using Rat = boost::multiprecision::cpp_rational;

std::uint64_t bit(int p) { return std::uint64_t{1} << (p - 1); }

std::uint64_t full_mask(int c) {
  return c == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << c) - 1;
}

void check_mask_width(int c, const char* what) {
  if (c > 63) throw CapacityError(std::string(what) + ": more than 63 positions");
}

}  // namespace

std::vector<int> GatePlan::forced_positions() const { return mask_to_positions(forced); }
std::vector<int> GatePlan::free_positions() const { return mask_to_positions(free); }

std::uint64_t positions_to_mask(const std::vector<int>& v, int c) {
  std::uint64_t m = 0;
  for (int p : v) {
    if (p < 1 || p > c) throw std::out_of_range("position outside [c]");
    m |= bit(p);
  }
  return m;
}

std::vector<int> mask_to_positions(std::uint64_t mask) {
  std::vector<int> out;
  for (int p = 1; mask; ++p, mask >>= 1)
    if (mask & 1) out.push_back(p);
  return out;
}

TwoRowWord restrict_Fz(const BContext& ctx, std::uint64_t vmask) {
  const int cp = ctx.input_positions();
  check_mask_width(cp, "restrict_Fz");
  if (vmask & ~full_mask(cp)) throw std::out_of_range("restrict_Fz: V outside [c_{n-1}]");
  const std::vector<int>& prev = ctx.row(ctx.n() - 1);
  TwoRowWord w;
  w.alpha.assign(static_cast<std::size_t>(cp) + 2, -1);
  w.alpha[0] = 1;
  w.beta.resize(static_cast<std::size_t>(cp) + 2);
  w.beta[0] = 0;
  w.beta[1] = 1;
  for (int i = 1; i <= cp; ++i)
    w.beta[static_cast<std::size_t>(i) + 1] =
        prev[static_cast<std::size_t>(i) - 1] - ((vmask >> (i - 1)) & 1 ? ctx.r() : 0);
  return w;
}

TwoRowWord restrict_Fz(const BContext& ctx, const std::vector<int>& v) {
  return restrict_Fz(ctx, positions_to_mask(v, ctx.input_positions()));
}

GatePlan gate_plan(const BContext& ctx, std::uint64_t vmask) {
  const int cp = ctx.input_positions();
  const int c = ctx.positions();
  check_mask_width(c, "gate_plan");
  if (vmask & ~full_mask(cp)) throw std::out_of_range("gate_plan: V outside [c_{n-1}]");

  std::uint64_t forced = 0;
  for (int j = 1; j <= cp; ++j) {
    if (!((vmask >> (j - 1)) & 1)) continue;
    int begin = ctx.block_begin(j);
    if (j == 1) begin = 1;  // the head block also covers position 1
    for (int p = begin; p <= ctx.block_end(j); ++p) forced |= bit(p);
  }
  // Delta gate: the last position of block j is forced when j itself is
  // unshifted, a V-run starts at j+1, and its b-substring is not in Exc.
  for (int j = 1; j < cp; ++j) {
    if ((vmask >> (j - 1)) & 1) continue;
    if (!((vmask >> j) & 1)) continue;
    int t = j + 1;
    while (t + 1 <= cp && ((vmask >> t) & 1)) ++t;
    if (!ctx.run_exceptional(j + 1, t)) forced |= bit(ctx.block_end(j));
  }

  GatePlan plan;
  plan.forced = forced;
  plan.free = full_mask(c) & ~forced;
  return plan;
}

GatePlan gate_plan(const BContext& ctx, const std::vector<int>& v) {
  return gate_plan(ctx, positions_to_mask(v, ctx.input_positions()));
}

TwoRowWord expand_F_tilde(const BContext& ctx, std::uint64_t vmask, std::uint64_t wmask,
                          const GatePlan& plan) {
  const int cp = ctx.input_positions();
  const int c = ctx.positions();
  if (wmask & ~plan.free) throw std::out_of_range("expand_F_tilde: W not within free set");
  const std::vector<int>& row_n = ctx.row(ctx.n());
  const std::vector<int>& prev = ctx.row(ctx.n() - 1);
  const int r = ctx.r();

  TwoRowWord out;
  out.alpha.assign(static_cast<std::size_t>(c) + 2, -1);
  out.alpha[0] = 1;
  out.beta.resize(static_cast<std::size_t>(c) + 2);
  out.beta[0] = 0;
  out.beta[1] = 1;

  const std::uint64_t shifted = plan.forced | wmask;
  for (int p = 1; p <= c; ++p)
    out.beta[static_cast<std::size_t>(p) + 1] =
        row_n[static_cast<std::size_t>(p) - 1] - ((shifted >> (p - 1)) & 1 ? r : 0);

  // Tops change only across the blocks of shifted input positions.
  for (int j = 1; j <= cp; ++j) {
    if (!((vmask >> (j - 1)) & 1)) continue;
    const int b = prev[static_cast<std::size_t>(j) - 1];
    const int end = ctx.block_end(j);
    if (j == 1) {
      // head: position 1 keeps -1, then b-1 zeros, then +1
      for (int p = 2; p < end; ++p) out.alpha[static_cast<std::size_t>(p)] = 0;
      out.alpha[static_cast<std::size_t>(end)] = 1;
    } else {
      for (int p = ctx.block_begin(j); p < end; ++p)
        out.alpha[static_cast<std::size_t>(p)] = 0;
      out.alpha[static_cast<std::size_t>(end)] = r - b;
    }
  }
  return out;
}

TwoRowWord expand_F_tilde(const BContext& ctx, const std::vector<int>& v,
                          const std::vector<int>& w) {
  const std::uint64_t vmask = positions_to_mask(v, ctx.input_positions());
  const std::uint64_t wmask = positions_to_mask(w, ctx.positions());
  return expand_F_tilde(ctx, vmask, wmask, gate_plan(ctx, vmask));
}

namespace {

NCPoly base_case_xn(int n) {
  NCPoly p;
  if (n == 0) {
    p.add_term(Word::generator(Gen::x, 1), 1);
  } else {
    // x_1 = xyx^{-1}
    Word w = Word::generator(Gen::x, 1);
    w.push(Gen::y, 1);
    w.push(Gen::x, -1);
    p.add_term(w, 1);
  }
  return p;
}

NCPoly base_case_x2(int r) {
  // x_2 = xyx^{-1}y^{-1}x^{-1} + xyx^{-1}y^{r-1}x^{-1}
  NCPoly p;
  for (int e : {-1, r - 1}) {
    Word w = Word::generator(Gen::x, 1);
    w.push(Gen::y, 1);
    w.push(Gen::x, -1);
    w.push(Gen::y, e);
    w.push(Gen::x, -1);
    p.add_term(w, 1);
  }
  return p;
}

}  // namespace

void stream_xn(int r, int n, int threads, const std::function<void(int, Word&&)>& emit) {
  if (r < 2) throw std::invalid_argument("stream_xn: r must be >= 2");
  if (n < 0) throw std::invalid_argument("stream_xn: n must be >= 0");
  if (n <= 2) {
    const NCPoly base = (n <= 1) ? base_case_xn(n) : base_case_x2(r);
    for (const auto& [w, c] : base.terms()) emit(0, Word(w));
    return;
  }

  const BContext ctx(r, n);
  const int cp = ctx.input_positions();
  check_mask_width(ctx.positions(), "stream_xn");
  check_mask_width(cp, "stream_xn");
  const std::uint64_t v_count = std::uint64_t{1} << cp;

  const int workers = std::max(1, threads);
  auto run = [&](int id) {
    for (std::uint64_t vmask = id; vmask < v_count;
         vmask += static_cast<std::uint64_t>(workers)) {
      const GatePlan plan = gate_plan(ctx, vmask);
      std::uint64_t w = plan.free;
      while (true) {
        emit(id, reduce(expand_F_tilde(ctx, vmask, w, plan)));
        if (w == 0) break;
        w = (w - 1) & plan.free;
      }
    }
  };

  if (workers == 1) {
    run(0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) pool.emplace_back(run, t);
  for (auto& th : pool) th.join();
}

NCPoly assemble_xn(int r, int n, const AssembleOptions& opts) {
  if (r < 2) throw std::invalid_argument("assemble_xn: r must be >= 2");
  if (n < 0) throw std::invalid_argument("assemble_xn: n must be >= 0");
  if (n >= 3) {
    const Int total = count_terms(r, n);
    if (total > opts.max_terms)
      throw CapacityError("assemble_xn: " + total.str() + " terms exceed cap " +
                          opts.max_terms.str() + " (use counting or streaming instead)");
  }
  const int workers = std::max(1, opts.threads);
  std::vector<NCPoly> parts(static_cast<std::size_t>(workers));
  stream_xn(r, n, workers, [&parts](int id, Word&& w) {
    parts[static_cast<std::size_t>(id)].add_term(w, 1);
  });
  NCPoly out = std::move(parts[0]);
  for (int t = 1; t < workers; ++t) out += parts[static_cast<std::size_t>(t)];
  return out;
}

Int count_terms(int r, int n) {
  if (r < 2) throw std::invalid_argument("count_terms: r must be >= 2");
  if (n < 0) throw std::invalid_argument("count_terms: n must be >= 0");
  if (n <= 1) return 1;
  if (n == 2) return 2;

  const BContext ctx(r, n);
  const int cp = ctx.input_positions();
  const Int c_n = c_seq(r, n);

  // Sum over V of 2^{c_n - |f(V)|} via a run DP: a maximal run e..i weighs
  // 2^{-(sum of b over the run + [run not in Exc])}, runs separated by gaps.
  std::vector<Rat> g(static_cast<std::size_t>(cp) + 1);
  auto g_at = [&g](int i) -> Rat {
    return i < 0 ? Rat(1) : g[static_cast<std::size_t>(i)];
  };
  g[0] = 1;
  for (int i = 1; i <= cp; ++i) {
    Rat acc = g_at(i - 1);
    for (int e = 1; e <= i; ++e) {
      const int s = ctx.cum(i) - ctx.cum(e - 1);
      const int gamma = ctx.run_exceptional(e, i) ? 0 : 1;
      acc += g_at(e - 2) / Rat(pow2(s + gamma));
    }
    g[static_cast<std::size_t>(i)] = std::move(acc);
  }

  const Rat total = g_at(cp) * Rat(pow2(static_cast<std::int64_t>(c_n)));
  if (denominator(total) != 1)
    throw std::logic_error("count_terms: non-integral total");
  return numerator(total);
}

NCPoly enumerate_r2(int n) {
  if (n < 3) throw std::invalid_argument("enumerate_r2: n must be >= 3");
  const int m = n - 1;  // number of inner columns
  check_mask_width(m, "enumerate_r2");
  NCPoly out;
  const std::uint64_t a_count = std::uint64_t{1} << (m - 1);
  for (std::uint64_t a_bits = 0; a_bits < a_count; ++a_bits) {
    // alpha_i = +1 iff bit i-2 of a_bits (alpha_1 is always -1)
    auto alpha_at = [&](int i) -> int {
      if (i == 1) return -1;
      return (a_bits >> (i - 2)) & 1 ? 1 : -1;
    };
    std::uint64_t forced = 0;  // positions with beta_i forced to -1
    for (int i = 1; i <= m; ++i) {
      if (alpha_at(i) == 1) forced |= bit(i);
      if (i + 1 <= m && alpha_at(i) == -1 && alpha_at(i + 1) == 1) forced |= bit(i);
    }
    const std::uint64_t free = full_mask(m) & ~forced;
    std::uint64_t sub = free;
    while (true) {
      // beta_i = +1 exactly on sub
      TwoRowWord w;
      w.alpha.resize(static_cast<std::size_t>(m) + 2);
      w.beta.resize(static_cast<std::size_t>(m) + 2);
      w.alpha[0] = 1;
      w.beta[0] = 0;
      w.beta[1] = 1;
      w.alpha[static_cast<std::size_t>(m) + 1] = -1;
      for (int i = 1; i <= m; ++i) {
        w.alpha[static_cast<std::size_t>(i)] = alpha_at(i);
        w.beta[static_cast<std::size_t>(i) + 1] = (sub >> (i - 1)) & 1 ? 1 : -1;
      }
      out.add_term(reduce(w), 1);
      if (sub == 0) break;
      sub = (sub - 1) & free;
    }
  }
  return out;
}

}  // namespace kontsevich
