#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "kontsevich/combinator.hpp"
#include "kontsevich/ncpoly.hpp"

namespace kontsevich {

// Output positions [c_n] split into forced positions (exponent shifted by
// -r) and free positions (a two-way choice each).
struct GatePlan {
  std::uint64_t forced = 0;  // bit p-1 <=> position p forced
  std::uint64_t free = 0;

  std::vector<int> forced_positions() const;
  std::vector<int> free_positions() const;
};

std::uint64_t positions_to_mask(const std::vector<int>& v, int c);
std::vector<int> mask_to_positions(std::uint64_t mask);

// F(z_{n-2})|_V: top (1, -1, ..., -1) over c_{n-1}+2 columns, bottom
// (0, 1, b_{n-1,i} - r*[i in V]).
TwoRowWord restrict_Fz(const BContext& ctx, std::uint64_t vmask);
TwoRowWord restrict_Fz(const BContext& ctx, const std::vector<int>& v);

// Forced positions: the blocks of every input position in V, plus the last
// position of block i whenever i is not in V, i+1 starts a V-run, and that
// run's b-substring is not exceptional (the Delta gate).
GatePlan gate_plan(const BContext& ctx, std::uint64_t vmask);
GatePlan gate_plan(const BContext& ctx, const std::vector<int>& v);

// One summand of F~(F(z_{n-2})|_V): the output word whose shifted positions
// are forced(V) united with W.  Requires W within the plan's free set.
TwoRowWord expand_F_tilde(const BContext& ctx, std::uint64_t vmask, std::uint64_t wmask,
                          const GatePlan& plan);
TwoRowWord expand_F_tilde(const BContext& ctx, const std::vector<int>& v,
                          const std::vector<int>& w);

struct AssembleOptions {
  Int max_terms = Int(20000000);
  int threads = 1;
};

// x_n as an explicit polynomial: the double sum over V and W of reduced
// expansion words for n >= 3, and the direct iterates for n <= 2.
NCPoly assemble_xn(int r, int n, const AssembleOptions& opts = {});

// Number of terms, computed without materializing them.
Int count_terms(int r, int n);

// Streams every term of x_n.  Workers partition the outer subsets; emit is
// called as emit(worker, word) with worker in [0, threads).
void stream_xn(int r, int n, int threads, const std::function<void(int, Word&&)>& emit);

// Direct enumeration of x_n for r = 2 from the sign-condition description:
// alpha_1 = -1; alpha_i = 1 forces beta_i = -1; a descent -1,+1 at i, i+1
// forces beta_i = -1.
NCPoly enumerate_r2(int n);

}  // namespace kontsevich
