#pragma once

// Reduced-word arithmetic in G_k = <a_1, ..., a_{k+1} | a_i^2 = e>.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gk/error.hpp"
#include "gk/gen_set.hpp"
#include "gk/limits.hpp"

namespace gk {

// Tree order k; the group has k+1 involutive generators indexed 1..k+1.
class GroupContext {
 public:
  explicit GroupContext(int k, const Limits& limits = default_limits) : k_(k) {
    if (k < 1) throw InvalidArgument("tree order k must be >= 1");
    if (k > limits.max_k) {
      throw BoundExceeded("tree order k=" + std::to_string(k) +
                          " exceeds configured bound " +
                          std::to_string(limits.max_k));
    }
  }

  int k() const noexcept { return k_; }
  int generator_count() const noexcept { return k_ + 1; }
  bool valid(int i) const noexcept { return i >= 1 && i <= k_ + 1; }
  GenSet generators() const { return GenSet::full(k_ + 1); }

  void check(int i) const {
    if (!valid(i)) throw InvalidGenerator(i, generator_count());
  }
  void check(GenSet s) const {
    if ((s - generators()) != GenSet{}) {
      throw InvalidGenerator(s.max(), generator_count());
    }
  }

  friend bool operator==(const GroupContext&, const GroupContext&) = default;

 private:
  int k_;
};

inline void require_same(const GroupContext& a, const GroupContext& b) {
  if (a != b) throw ContextMismatch(a.k(), b.k());
}

class Word;
Word reduce(std::span<const int> raw, const GroupContext& ctx);

// An element of G_k in its unique minimal form: no two adjacent letters equal.
class Word {
 public:
  explicit Word(const GroupContext& ctx) : ctx_(ctx) {}

  static Word identity(const GroupContext& ctx) { return Word(ctx); }
  static Word generator(const GroupContext& ctx, int i) {
    ctx.check(i);
    Word w(ctx);
    w.letters_.push_back(i);
    return w;
  }

  const GroupContext& context() const noexcept { return ctx_; }
  std::span<const int> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }
  int front() const { return letters_.front(); }
  int back() const { return letters_.back(); }

  friend bool operator==(const Word& a, const Word& b) {
    return a.ctx_ == b.ctx_ && a.letters_ == b.letters_;
  }

  // Length first, then lexicographic on generator indices.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(
        a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
        b.letters_.end());
  }

 private:
  friend Word reduce(std::span<const int> raw, const GroupContext& ctx);
  friend Word multiply(const Word& x, const Word& y);
  friend Word inverse(const Word& x);

  GroupContext ctx_;
  std::vector<int> letters_;
};

// Free reduction. A single stack pass reaches the same fixpoint as repeated
// deletion of adjacent equal pairs, since a_i a_i = e is the only relation.
inline Word reduce(std::span<const int> raw, const GroupContext& ctx) {
  Word w(ctx);
  w.letters_.reserve(raw.size());
  for (int i : raw) {
    ctx.check(i);
    if (!w.letters_.empty() && w.letters_.back() == i) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(i);
    }
  }
  return w;
}

inline Word reduce(std::initializer_list<int> raw, const GroupContext& ctx) {
  return reduce(std::span<const int>(raw.begin(), raw.size()), ctx);
}

inline Word multiply(const Word& x, const Word& y) {
  require_same(x.ctx_, y.ctx_);
  // Cancel the longest common boundary of x's tail and y's head.
  std::size_t cancel = 0;
  const std::size_t limit = std::min(x.length(), y.length());
  while (cancel < limit &&
         x.letters_[x.length() - 1 - cancel] == y.letters_[cancel]) {
    ++cancel;
  }
  Word out(x.ctx_);
  out.letters_.reserve(x.length() + y.length() - 2 * cancel);
  out.letters_.assign(x.letters_.begin(),
                      x.letters_.end() - static_cast<std::ptrdiff_t>(cancel));
  out.letters_.insert(out.letters_.end(),
                      y.letters_.begin() + static_cast<std::ptrdiff_t>(cancel),
                      y.letters_.end());
  return out;
}

inline Word operator*(const Word& x, const Word& y) { return multiply(x, y); }

// Every generator is an involution, so the inverse is the reversal.
inline Word inverse(const Word& x) {
  Word out(x.ctx_);
  out.letters_.assign(x.letters_.rbegin(), x.letters_.rend());
  return out;
}

// x^{-1} h x
inline Word conjugate(const Word& h, const Word& x) {
  return multiply(multiply(inverse(x), h), x);
}

// w_x(a_i): occurrences of a_i in the reduced form of x.
inline std::size_t letter_count(const Word& x, int i) {
  x.context().check(i);
  return static_cast<std::size_t>(
      std::count(x.letters().begin(), x.letters().end(), i));
}

// Sum of w_x(a_i) over i in A.
inline std::size_t letter_count(const Word& x, GenSet a) {
  x.context().check(a);
  return static_cast<std::size_t>(
      std::count_if(x.letters().begin(), x.letters().end(),
                    [a](int i) { return a.contains(i); }));
}

// Number of reduced words of length <= max_length: 1 + (k+1) sum_{j<L} k^j.
inline std::size_t count_words(const GroupContext& ctx,
                               std::size_t max_length) {
  std::size_t total = 1;
  std::size_t level = 0;
  for (std::size_t j = 1; j <= max_length; ++j) {
    level = (j == 1) ? static_cast<std::size_t>(ctx.generator_count())
                     : level * static_cast<std::size_t>(ctx.k());
    total += level;
  }
  return total;
}

// Visit every reduced word of length <= max_length in length-then-lex order.
template <typename Visitor>
void for_each_word(const GroupContext& ctx, std::size_t max_length,
                   Visitor&& visit) {
  std::vector<Word> level{Word::identity(ctx)};
  visit(level.front());
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    next.reserve(level.size() * static_cast<std::size_t>(ctx.k() + 1));
    for (const Word& w : level) {
      for (int i = 1; i <= ctx.generator_count(); ++i) {
        if (!w.is_identity() && w.back() == i) continue;
        next.push_back(multiply(w, Word::generator(ctx, i)));
        visit(next.back());
      }
    }
    level = std::move(next);
  }
}

inline std::vector<Word> enumerate_words(const GroupContext& ctx,
                                         std::size_t max_length) {
  std::vector<Word> out;
  out.reserve(count_words(ctx, max_length));
  for_each_word(ctx, max_length, [&](const Word& w) { out.push_back(w); });
  return out;
}

// "a1.a2.a1", or "e" for the identity.
inline std::string to_string(const Word& x) {
  if (x.is_identity()) return "e";
  std::string s;
  for (int i : x.letters()) {
    if (!s.empty()) s += '.';
    s += 'a';
    s += std::to_string(i);
  }
  return s;
}

// Inverse of to_string; the input need not be reduced.
inline Word parse_word(std::string_view text, const GroupContext& ctx) {
  if (text == "e") return Word::identity(ctx);
  std::vector<int> raw;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t dot = std::min(text.find('.', pos), text.size());
    const std::string_view tok = text.substr(pos, dot - pos);
    if (tok.size() < 2 || tok.front() != 'a') {
      throw InvalidArgument("malformed word token '" + std::string(tok) +
                            "' in '" + std::string(text) + "'");
    }
    int value = 0;
    for (char c : tok.substr(1)) {
      if (c < '0' || c > '9' || value > 1000) {
        throw InvalidArgument("malformed word token '" + std::string(tok) +
                              "'");
      }
      value = value * 10 + (c - '0');
    }
    raw.push_back(value);
    pos = dot + 1;
  }
  return reduce(raw, ctx);
}

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = static_cast<std::size_t>(w.context().k());
    for (int i : w.letters()) {
      h = h * 31 + static_cast<std::size_t>(i);
    }
    return h;
  }
};

}  // namespace gk
