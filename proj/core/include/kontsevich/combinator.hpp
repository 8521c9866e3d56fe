#pragma once

#include <cstdint>
#include <vector>

#include "kontsevich/bigint.hpp"
#include "kontsevich/word.hpp"

namespace kontsevich {

// c_1 = 0, c_2 = 1, c_m = r*c_{m-1} - c_{m-2}.
Int c_seq(int r, int n);

// Alternating binomial form of c_n, valid for n >= 2; equals c_seq.
Int c_seq_binomial(int r, int n);

// Exponent row (b_{n,1}, ..., b_{n,c_n}) of z_n; entries are r-1 or r,
// starting with r-1.  Requires n >= 2.
std::vector<int> b_row(int r, int n);

// z_n = G^n(x) where G : (x, y) -> (xyx^{-1}, y^r x^{-1}); presented with
// top row (1, -1, ..., -1) and bottom row (0, 1, b_{n,1..c_n}).
TwoRowWord z_word(int r, int n);

// Strings over {r-1, r}.
using ExcString = std::vector<int>;

// g maps the entry r to r copies (r,...,r,r-1) and the entry r-1 to r-1
// copies of the same pattern; it acts entrywise and concatenates.
ExcString g_transform(int r, const ExcString& s);

// Membership in Exc = { g^{s_1}(r) ... g^{s_j}(r) : j >= 1, s_i >= 0 },
// decided by segmenting s into generator blocks.
bool is_exceptional(int r, const ExcString& s);

// The position-forcing map: subsets of [c_{n-1}] to subsets of [c_n].
// Both sides 1-based; input need not be sorted, output is sorted.
// Requires n >= 3 and V within [c_{n-1}].
std::vector<int> f_map(int r, int n, const std::vector<int>& v);

// Index bookkeeping for assembling x_n at fixed (r, n >= 3): c-values,
// b-rows, output-block boundaries over row n-1, and Exc membership of
// its substrings.  Built once, then shared read-only.
class BContext {
 public:
  BContext(int r, int n);

  int r() const { return r_; }
  int n() const { return n_; }

  // c_level as a machine integer; throws CapacityError if out of range.
  int c(int level) const;
  const std::vector<int>& row(int level) const;  // 2 <= level <= n

  int positions() const { return c_n_; }          // c_n
  int input_positions() const { return c_n1_; }   // c_{n-1}

  // cum(j) = b_{n-1,1} + ... + b_{n-1,j}; cum(0) = 0.
  int cum(int j) const { return cum_[static_cast<std::size_t>(j)]; }

  // Output positions covered by input position j: [block_begin, block_end].
  int block_begin(int j) const { return 2 + cum(j - 1); }
  int block_end(int j) const { return 1 + cum(j); }

  // Is (b_{n-1,e}, ..., b_{n-1,i}) exceptional?  1-based, e <= i.
  bool run_exceptional(int e, int i) const;

 private:
  int r_;
  int n_;
  int c_n_;
  int c_n1_;
  std::vector<long long> c_;               // c_1..c_n
  std::vector<std::vector<int>> rows_;     // rows 2..n
  std::vector<int> cum_;
  std::vector<std::vector<char>> exc_;     // exc_[e-1][i-e]
};

}  // namespace kontsevich
