#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kontsevich/bigint.hpp"
#include "kontsevich/formula.hpp"
#include "kontsevich/ncpoly.hpp"
#include "kontsevich/special.hpp"

namespace kontsevich {

struct VerifyReport {
  enum class Status { pass, mismatch, uncertified, capacity };

  std::string id;
  Status status = Status::mismatch;
  std::string detail;               // counterexample or capacity note
  std::uint64_t compared = 0;       // terms compared
  std::uint64_t discarded = 0;      // oracle discards
  std::int64_t certified_window = -1;  // |y-degree| bound certified exact
  double seconds = 0.0;

  bool ok() const { return status == Status::pass; }
  // pass -> 0, mismatch -> 1, uncertified/capacity -> 2
  int exit_code() const;
  const char* status_name() const;
};

struct VerifyOptions {
  std::optional<TruncationPolicy> policy;  // override auto-tuning
  Int max_terms = Int(20000000);
  int threads = 1;
  bool streaming = false;  // counts + commutative image only
};

// Auto-tuned truncation for mapping `source` forward and comparing against
// `target`: B = maxdeg_y(target) + r, K the smallest cap certifying B.
TruncationPolicy auto_policy(const NCPoly& target, const NCPoly& source, int r);

// F(x_{n-1}) under the truncated oracle must reproduce assemble_xn(r, n)
// exactly on the certified window.  Streaming mode checks the term count
// and the commutative image against the exchange recurrence instead.
VerifyReport verify_formula(int r, int n, const VerifyOptions& opts = {});

// Per-W' identity: F applied to the sum over V with f(V) within W' of the
// restricted expansion words equals the level-(n+1) expansion at V = W'.
VerifyReport verify_lemma_main(int r, int n, const std::vector<int>& w_prime);
VerifyReport verify_lemma_all(int r, int n);

// (V, W) -> (V, W union f(V)) and its inverse between
// {W disjoint from f(V)} and {W' containing f(V)}.
VerifyReport verify_bijection(int r, int n);

// Sum over V of T|_V recovers T on random instances with c positions.
bool partition_identity_holds(int r, int c, unsigned seed, int trials = 20);

// All formula coefficients equal one; oracle-certified image coefficients
// lie in {0, 1}.
VerifyReport verify_positivity_unit(int r, int n, const VerifyOptions& opts = {});

// cz_formula(n) == cluster_recurrence(2, n) for 2 <= n <= n_max, and both
// match the commutative image of the r = 2 enumeration for n >= 3.
VerifyReport verify_cz(int n_max);

// x_{n+1} x_{n-1} = x_n^r + 1 for the recurrence sequence, n = 1..n_max.
// Stops with a capacity verdict when a step would exceed the caps.
VerifyReport verify_exchange(int r, int n_max, std::size_t term_cap = 2000000,
                             std::uint64_t op_budget = 400000000);

}  // namespace kontsevich
