#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polynil/integer.hpp"

namespace polynil {

/// Class row (c_1, ..., c_t) naming the polynilpotent variety N_{c_1,...,c_t}.
class ClassRow {
 public:
  explicit ClassRow(std::vector<unsigned> classes) : classes_(std::move(classes)) {
    if (classes_.empty()) throw InvalidInput("ClassRow: a class row needs at least one entry");
    for (unsigned c : classes_)
      if (c < 1) throw InvalidInput("ClassRow: every class must be >= 1");
  }

  /// Parses "c1,c2,...,ct".
  static ClassRow parse(std::string_view text) {
    std::vector<unsigned> classes;
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = text.find(',', pos);
      std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      if (tok.empty() || tok.size() > 9) throw InvalidInput("class row: bad entry '" + std::string(tok) + "'");
      unsigned value = 0;
      for (char ch : tok) {
        if (ch < '0' || ch > '9') throw InvalidInput("class row: bad entry '" + std::string(tok) + "'");
        value = value * 10 + static_cast<unsigned>(ch - '0');
      }
      classes.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return ClassRow(std::move(classes));
  }

  const std::vector<unsigned>& classes() const { return classes_; }
  std::size_t length() const { return classes_.size(); }
  unsigned first() const { return classes_.front(); }

  /// t >= 2 and c_1 = 1: the varieties that, like the metabelian one, kill the
  /// multiplier of every two-generator group.
  bool is_solvable_like() const { return classes_.size() >= 2 && classes_.front() == 1; }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < classes_.size(); ++i) out += (i ? "," : "") + std::to_string(classes_[i]);
    return out;
  }

  friend bool operator==(const ClassRow&, const ClassRow&) = default;
  friend auto operator<=>(const ClassRow&, const ClassRow&) = default;

 private:
  std::vector<unsigned> classes_;
};

inline int mobius(std::int64_t n) {
  if (n <= 0) throw InvalidInput("mobius: argument must be positive");
  int sign = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

namespace detail {

inline Integer witt_uncached(unsigned w, const Integer& d) {
  Integer sum = 0;
  for (unsigned e = 1; e <= w; ++e) {
    if (w % e != 0) continue;
    int mu = mobius(e);
    if (mu == 0) continue;
    Integer term = boost::multiprecision::pow(d, w / e);
    if (mu > 0) sum += term;
    else sum -= term;
  }
  if (sum % w != 0) throw std::logic_error("witt: Moebius sum not divisible by the weight");
  return sum / w;
}

class WittCache {
 public:
  Integer get(unsigned w, const Integer& d) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find({w, d}); it != table_.end()) return it->second;
    }
    Integer value = witt_uncached(w, d);
    std::unique_lock lock(mutex_);
    table_.emplace(std::make_pair(w, d), value);
    return value;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::pair<unsigned, Integer>, Integer> table_;
};

inline WittCache& witt_cache() {
  static WittCache cache;
  return cache;
}

}  // namespace detail

/// Witt number chi_w(d) = (1/w) sum_{e | w} mu(e) d^{w/e}: the number of basic
/// commutators of weight w on d generators. Memoized; safe to call concurrently.
inline Integer witt(unsigned w, const Integer& d) {
  if (w < 1) throw InvalidInput("witt: weight must be >= 1");
  if (d < 0) throw InvalidInput("witt: generator count must be >= 0");
  return detail::witt_cache().get(w, d);
}

/// f_i = chi_{c_t+1}( ... chi_{c_1+1}(i) ... ), innermost c_1.
inline Integer chi_chain(const ClassRow& row, const Integer& i) {
  if (i < 0) throw InvalidInput("chi_chain: index must be >= 0");
  Integer value = i;
  for (unsigned c : row.classes()) value = witt(c + 1, value);
  return value;
}

}  // namespace polynil
