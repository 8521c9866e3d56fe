#include "kontsevich/word.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "kontsevich/errors.hpp"

namespace kontsevich {

namespace {

std::int32_t checked_exp(std::int64_t v) {
  if (v < std::numeric_limits<std::int32_t>::min() ||
      v > std::numeric_limits<std::int32_t>::max())
    throw std::overflow_error("word exponent out of range");
  return static_cast<std::int32_t>(v);
}

}  // namespace

TwoRowWord concat(const TwoRowWord& a, const TwoRowWord& b) {
  TwoRowWord out;
  out.alpha.reserve(a.alpha.size() + b.alpha.size());
  out.beta.reserve(a.beta.size() + b.beta.size());
  out.alpha = a.alpha;
  out.alpha.insert(out.alpha.end(), b.alpha.begin(), b.alpha.end());
  out.beta = a.beta;
  out.beta.insert(out.beta.end(), b.beta.begin(), b.beta.end());
  return out;
}

Word Word::generator(Gen g, std::int64_t exp) {
  Word w;
  w.push(g, exp);
  return w;
}

void Word::push(Gen g, std::int64_t exp) {
  if (exp == 0) return;
  if (exps_.empty()) {
    first_ = g;
    exps_.push_back(checked_exp(exp));
    return;
  }
  if (gen_at(exps_.size() - 1) == g) {
    std::int64_t merged = static_cast<std::int64_t>(exps_.back()) + exp;
    if (merged == 0) {
      exps_.pop_back();
      if (exps_.empty()) first_ = Gen::x;
    } else {
      exps_.back() = checked_exp(merged);
    }
  } else {
    exps_.push_back(checked_exp(exp));
  }
}

void Word::push(const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i) push(w.gen_at(i), w.exps_[i]);
}

std::int64_t Word::x_degree() const {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (gen_at(i) == Gen::x) d += exps_[i];
  return d;
}

std::int64_t Word::y_degree() const {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (gen_at(i) == Gen::y) d += exps_[i];
  return d;
}

std::size_t Word::hash() const {
  // FNV-1a over the syllable stream.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(exps_.empty() ? 2 : static_cast<std::uint64_t>(first_));
  for (std::int32_t e : exps_) mix(static_cast<std::uint64_t>(static_cast<std::uint32_t>(e)));
  return static_cast<std::size_t>(h);
}

std::strong_ordering compare(const Word& a, const Word& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto ga = static_cast<int>(a.gen_at(i));
    auto gb = static_cast<int>(b.gen_at(i));
    if (ga != gb) return ga <=> gb;
    if (a.exp_at(i) != b.exp_at(i)) return a.exp_at(i) <=> b.exp_at(i);
  }
  return a.size() <=> b.size();
}

Word group_mul(const Word& a, const Word& b) {
  Word out = a;
  out.push(b);
  return out;
}

Word reduce(const TwoRowWord& w) {
  if (w.alpha.size() != w.beta.size())
    throw std::invalid_argument("two-row word: row lengths differ");
  Word out;
  for (std::size_t i = 0; i < w.alpha.size(); ++i) {
    out.push(Gen::y, w.beta[i]);
    out.push(Gen::x, w.alpha[i]);
  }
  return out;
}

TwoRowWord to_two_row(const Word& w) {
  TwoRowWord out;
  std::size_t i = 0;
  std::int64_t pending_beta = 0;
  if (!w.empty() && w.gen_at(0) == Gen::y) {
    pending_beta = w.exp_at(0);
    i = 1;
  }
  while (i < w.size()) {
    out.beta.push_back(pending_beta);
    pending_beta = 0;
    out.alpha.push_back(w.exp_at(i));
    ++i;
    if (i < w.size()) {
      pending_beta = w.exp_at(i);
      ++i;
    }
  }
  if (pending_beta != 0) {
    out.beta.push_back(pending_beta);
    out.alpha.push_back(0);
  }
  return out;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += gen_char(w.gen_at(i));
    out += '^';
    out += std::to_string(w.exp_at(i));
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word out;
  std::size_t pos = 0;
  bool saw_token = false;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t') ++end;
    std::string_view tok = text.substr(pos, end - pos);
    pos = end;
    if (tok == "1") {  // identity factor
      saw_token = true;
      continue;
    }
    if (tok.size() < 3 || (tok[0] != 'x' && tok[0] != 'y') || tok[1] != '^')
      throw ParseError("bad word token: " + std::string(tok));
    std::int64_t exp = 0;
    auto [ptr, ec] = std::from_chars(tok.data() + 2, tok.data() + tok.size(), exp);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError("bad exponent in token: " + std::string(tok));
    out.push(tok[0] == 'x' ? Gen::x : Gen::y, exp);
    saw_token = true;
  }
  if (!saw_token) throw ParseError("empty word text");
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << format_word(w);
}

}  // namespace kontsevich
