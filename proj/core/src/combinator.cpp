#include "kontsevich/combinator.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "kontsevich/errors.hpp"

namespace kontsevich {

namespace {

void check_r(int r) {
  if (r < 2) throw std::invalid_argument("r must be >= 2");
}

void check_entries(int r, const ExcString& s) {
  for (int v : s)
    if (v != r && v != r - 1)
      throw std::invalid_argument("string entry must be r-1 or r");
}

// Generator blocks g^0(r), g^1(r), ... with length <= max_len.
std::vector<ExcString> generator_blocks(int r, std::size_t max_len) {
  std::vector<ExcString> blocks;
  ExcString cur{r};
  while (cur.size() <= max_len) {
    blocks.push_back(cur);
    ExcString next = g_transform(r, cur);
    if (next.size() <= cur.size()) break;  // r=1 would stall; excluded by check_r
    cur = std::move(next);
  }
  return blocks;
}

// reach[t] = prefix s[0..t) is a concatenation of generator blocks.
std::vector<char> block_reach(const ExcString& s, const std::vector<ExcString>& blocks) {
  std::vector<char> reach(s.size() + 1, 0);
  reach[0] = 1;
  for (std::size_t t = 0; t < s.size(); ++t) {
    if (!reach[t]) continue;
    for (const auto& b : blocks) {
      if (t + b.size() > s.size()) break;  // blocks sorted by length
      if (std::equal(b.begin(), b.end(), s.begin() + static_cast<std::ptrdiff_t>(t)))
        reach[t + b.size()] = 1;
    }
  }
  return reach;
}

}  // namespace

Int c_seq(int r, int n) {
  check_r(r);
  if (n < 1) throw std::invalid_argument("c_seq: n must be >= 1");
  Int prev = 0, cur = 1;  // c_1, c_2
  if (n == 1) return prev;
  for (int m = 3; m <= n; ++m) {
    Int next = r * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Int c_seq_binomial(int r, int n) {
  check_r(r);
  if (n < 2) throw std::invalid_argument("c_seq_binomial: n must be >= 2");
  Int sum = 0;
  for (std::int64_t i = 0; n - 2 - 2 * i >= 0; ++i) {
    Int term = binomial(n - 2 - i, i);
    if (term == 0) continue;
    Int p = 1;
    for (int k = 0; k < n - 2 - 2 * i; ++k) p *= r;
    sum += (i % 2 == 0 ? term : -term) * p;
  }
  return sum;
}

namespace {

int c_as_int(int r, int n) {
  Int c = c_seq(r, n);
  if (c > std::numeric_limits<int>::max() / 2)
    throw CapacityError("c_" + std::to_string(n) + " too large to materialize");
  return static_cast<int>(c);
}

}  // namespace

std::vector<int> b_row(int r, int n) {
  check_r(r);
  if (n < 2) throw std::invalid_argument("b_row: n must be >= 2");
  std::vector<int> row{r - 1};  // row 2
  for (int m = 3; m <= n; ++m) {
    std::vector<int> next;
    next.reserve(static_cast<std::size_t>(c_as_int(r, m)));
    next.push_back(r - 1);
    for (int b : row) {
      for (int k = 0; k < b - 1; ++k) next.push_back(r);
      next.push_back(r - 1);
    }
    row = std::move(next);
  }
  return row;
}

TwoRowWord z_word(int r, int n) {
  check_r(r);
  if (n < 1) throw std::invalid_argument("z_word: n must be >= 1");
  TwoRowWord z;
  z.alpha.push_back(1);
  z.beta.push_back(0);
  z.alpha.push_back(-1);
  z.beta.push_back(1);
  if (n >= 2) {
    for (int b : b_row(r, n)) {
      z.alpha.push_back(-1);
      z.beta.push_back(b);
    }
  }
  return z;
}

ExcString g_transform(int r, const ExcString& s) {
  check_r(r);
  check_entries(r, s);
  ExcString out;
  for (int v : s) {
    for (int k = 0; k < v - 1; ++k) out.push_back(r);
    out.push_back(r - 1);
  }
  return out;
}

bool is_exceptional(int r, const ExcString& s) {
  check_r(r);
  check_entries(r, s);
  if (s.empty()) return false;
  auto blocks = generator_blocks(r, s.size());
  return block_reach(s, blocks)[s.size()] != 0;
}

std::vector<int> f_map(int r, int n, const std::vector<int>& v) {
  check_r(r);
  if (n < 3) throw std::invalid_argument("f_map: n must be >= 3");
  const std::vector<int> row = b_row(r, n - 1);
  const int c_prev = static_cast<int>(row.size());

  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int p : sorted)
    if (p < 1 || p > c_prev) throw std::out_of_range("f_map: V not within [c_{n-1}]");

  std::vector<int> cum(static_cast<std::size_t>(c_prev) + 1, 0);
  for (int j = 1; j <= c_prev; ++j) cum[j] = cum[j - 1] + row[j - 1];

  std::vector<int> out;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j + 1 < sorted.size() && sorted[j + 1] == sorted[j] + 1) ++j;
    const int e = sorted[i];
    const int last = sorted[j];
    ExcString run(row.begin() + (e - 1), row.begin() + last);
    run.push_back(row[last - 1]);
    const int hi = 1 + cum[last];
    const int lo = is_exceptional(r, run) ? 1 + cum[e - 1] : cum[e - 1];
    for (int p = lo + 1; p <= hi; ++p) out.push_back(p);
    i = j + 1;
  }
  return out;
}

BContext::BContext(int r, int n) : r_(r), n_(n) {
  check_r(r);
  if (n < 3) throw std::invalid_argument("BContext: n must be >= 3");
  c_.resize(static_cast<std::size_t>(n) + 1);
  c_[1] = 0;
  if (n >= 2) c_[2] = 1;
  for (int m = 3; m <= n; ++m) {
    c_[m] = static_cast<long long>(r) * c_[m - 1] - c_[m - 2];
    if (c_[m] > (1 << 28)) throw CapacityError("BContext: c_n too large");
  }
  c_n_ = static_cast<int>(c_[n]);
  c_n1_ = static_cast<int>(c_[n - 1]);

  rows_.resize(static_cast<std::size_t>(n) + 1);
  rows_[2] = {r - 1};
  for (int m = 3; m <= n; ++m) {
    std::vector<int>& next = rows_[m];
    next.reserve(static_cast<std::size_t>(c_[m]));
    next.push_back(r - 1);
    for (int b : rows_[m - 1]) {
      for (int k = 0; k < b - 1; ++k) next.push_back(r);
      next.push_back(r - 1);
    }
  }

  const std::vector<int>& prev = rows_[n - 1];
  cum_.assign(static_cast<std::size_t>(c_n1_) + 1, 0);
  for (int j = 1; j <= c_n1_; ++j) cum_[j] = cum_[j - 1] + prev[j - 1];

  // Exc membership of every substring of row n-1, via one reach DP per start.
  auto blocks = generator_blocks(r, prev.size());
  exc_.resize(static_cast<std::size_t>(c_n1_));
  for (int e = 1; e <= c_n1_; ++e) {
    ExcString tail(prev.begin() + (e - 1), prev.end());
    auto reach = block_reach(tail, blocks);
    auto& row_flags = exc_[static_cast<std::size_t>(e - 1)];
    row_flags.resize(tail.size());
    for (std::size_t len = 1; len <= tail.size(); ++len)
      row_flags[len - 1] = reach[len];
  }
}

int BContext::c(int level) const {
  if (level < 1 || level > n_) throw std::out_of_range("BContext::c");
  return static_cast<int>(c_[static_cast<std::size_t>(level)]);
}

const std::vector<int>& BContext::row(int level) const {
  if (level < 2 || level > n_) throw std::out_of_range("BContext::row");
  return rows_[static_cast<std::size_t>(level)];
}

bool BContext::run_exceptional(int e, int i) const {
  if (e < 1 || i < e || i > c_n1_) throw std::out_of_range("BContext::run_exceptional");
  return exc_[static_cast<std::size_t>(e - 1)][static_cast<std::size_t>(i - e)] != 0;
}

}  // namespace kontsevich
