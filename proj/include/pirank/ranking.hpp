#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "pirank/power_index.hpp"

namespace pirank {

/// Fixed-point decimal with exactly five fractional digits.
class Decimal5 {
 public:
  static constexpr std::int64_t kScale = 100000;

  constexpr Decimal5() = default;
  static constexpr Decimal5 from_scaled(std::int64_t units) {
    Decimal5 d;
    d.units_ = units;
    return d;
  }

  constexpr std::int64_t scaled() const noexcept { return units_; }
  double to_double() const { return static_cast<double>(units_) / kScale; }

  std::string str() const {
    const std::uint64_t mag = units_ < 0 ? static_cast<std::uint64_t>(-(units_ + 1)) + 1
                                         : static_cast<std::uint64_t>(units_);
    std::string frac = std::to_string(mag % kScale);
    frac.insert(0, 5 - frac.size(), '0');
    return (units_ < 0 ? "-" : "") + std::to_string(mag / kScale) + "." + frac;
  }

  friend constexpr auto operator<=>(Decimal5, Decimal5) = default;

 private:
  std::int64_t units_ = 0;
};

/// Nearest multiple of 1e-5, halves away from zero.
inline Decimal5 round5(const ExactValue& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  const BigInt mag = num < 0 ? BigInt(-num) : num;
  const BigInt units = (2 * mag * Decimal5::kScale + den) / (2 * den);
  const auto u = units.convert_to<std::int64_t>();
  return Decimal5::from_scaled(num < 0 ? -u : u);
}

struct PIScore {
  std::string argument;
  ExactValue pi_in;
  ExactValue pi_out;
  Decimal5 pi_in_5dp;
  Decimal5 pi_out_5dp;

  static PIScore from_exact(std::string argument, ExactValue in, ExactValue out) {
    PIScore s{std::move(argument), std::move(in), std::move(out), {}, {}};
    s.pi_in_5dp = round5(s.pi_in);
    s.pi_out_5dp = round5(s.pi_out);
    return s;
  }
};

inline std::vector<PIScore> to_pi_scores(const std::vector<ArgumentScore>& scores) {
  std::vector<PIScore> out;
  out.reserve(scores.size());
  for (const auto& s : scores) out.push_back(PIScore::from_exact(s.argument, s.pi_in, s.pi_out));
  return out;
}

enum class Comparison { greater, less, equivalent };

/// `rounded` compares the 5-decimal values, `exact` the rationals.
enum class CompareMode { rounded, exact };

namespace detail {
template <typename T>
Comparison lexicographic(const T& in1, const T& out1, const T& in2, const T& out2) {
  if (in1 > in2) return Comparison::greater;
  if (in1 < in2) return Comparison::less;
  if (out1 < out2) return Comparison::greater;
  if (out1 > out2) return Comparison::less;
  return Comparison::equivalent;
}
}  // namespace detail

/// Higher pi_in wins; on a tie, lower pi_out wins.
inline Comparison compare(const PIScore& a, const PIScore& b, CompareMode mode = CompareMode::rounded) {
  if (mode == CompareMode::exact) return detail::lexicographic(a.pi_in, a.pi_out, b.pi_in, b.pi_out);
  return detail::lexicographic(a.pi_in_5dp, a.pi_out_5dp, b.pi_in_5dp, b.pi_out_5dp);
}

/// Total preorder as an ordered list of equivalence classes, best first.
class Ranking {
 public:
  Ranking() = default;
  explicit Ranking(std::vector<std::vector<std::string>> classes) : classes_(std::move(classes)) {
    for (std::size_t c = 0; c < classes_.size(); ++c)
      for (const auto& a : classes_[c]) position_[a] = c;
  }

  const std::vector<std::vector<std::string>>& classes() const noexcept { return classes_; }
  std::size_t class_count() const noexcept { return classes_.size(); }
  std::size_t argument_count() const noexcept { return position_.size(); }

  std::size_t class_of(const std::string& a) const {
    auto it = position_.find(a);
    if (it == position_.end()) throw UnknownArgument(a);
    return it->second;
  }

  bool geq(const std::string& a, const std::string& b) const { return class_of(a) <= class_of(b); }
  bool strictly_better(const std::string& a, const std::string& b) const {
    return class_of(a) < class_of(b);
  }
  bool equivalent(const std::string& a, const std::string& b) const {
    return class_of(a) == class_of(b);
  }

  friend bool operator==(const Ranking& a, const Ranking& b) { return a.classes_ == b.classes_; }

 private:
  std::vector<std::vector<std::string>> classes_;
  std::map<std::string, std::size_t> position_;
};

inline Ranking rank(std::span<const PIScore> scores, CompareMode mode = CompareMode::rounded) {
  std::set<std::string> seen;
  for (const auto& s : scores)
    if (!seen.insert(s.argument).second) throw InvalidInput("duplicate score for '" + s.argument + "'");

  std::vector<const PIScore*> order;
  for (const auto& s : scores) order.push_back(&s);
  std::sort(order.begin(), order.end(), [mode](const PIScore* a, const PIScore* b) {
    const auto c = compare(*a, *b, mode);
    if (c != Comparison::equivalent) return c == Comparison::greater;
    return a->argument < b->argument;
  });

  std::vector<std::vector<std::string>> classes;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k == 0 || compare(*order[k - 1], *order[k], mode) != Comparison::equivalent)
      classes.emplace_back();
    classes.back().push_back(order[k]->argument);
  }
  return Ranking(std::move(classes));
}

/// Also checks that every argument of `af` has exactly one score.
inline Ranking rank(const ArgumentationFramework& af, std::span<const PIScore> scores,
                    CompareMode mode = CompareMode::rounded) {
  auto r = rank(scores, mode);
  const bool foreign = std::any_of(scores.begin(), scores.end(),
                                   [&af](const PIScore& s) { return !af.find(s.argument); });
  if (foreign || scores.size() != af.size())
    throw InvalidInput("scores do not cover the framework's arguments");
  return r;
}

/// "a = c > d = e > b"
inline std::string render_ranking(const Ranking& r) {
  std::string out;
  for (std::size_t c = 0; c < r.class_count(); ++c) {
    if (c != 0) out += " > ";
    for (std::size_t k = 0; k < r.classes()[c].size(); ++k) {
      if (k != 0) out += " = ";
      out += r.classes()[c][k];
    }
  }
  return out;
}

/// Top class 1.0 (lightest) down to 0.0 for the bottom class, evenly spaced.
inline std::map<std::string, double> greyscale(const Ranking& r) {
  std::map<std::string, double> shade;
  const std::size_t k = r.class_count();
  for (std::size_t c = 0; c < k; ++c) {
    const double s = k == 1 ? 1.0 : 1.0 - static_cast<double>(c) / static_cast<double>(k - 1);
    for (const auto& a : r.classes()[c]) shade[a] = s;
  }
  return shade;
}

/// Convenience: rank one framework under one semantics and index.
struct RankResult {
  std::vector<PIScore> scores;
  Ranking ranking;
};

inline RankResult rank_framework(const ArgumentationFramework& af, Semantics sigma, PowerIndex index,
                                 CompareMode mode = CompareMode::rounded,
                                 const Deadline& deadline = {}) {
  auto scores = to_pi_scores(score_all(af, sigma, index, deadline));
  auto ranking = rank(af, scores, mode);
  return {std::move(scores), std::move(ranking)};
}

/// argument, pi_in, pi_out, class index; header line first.
inline std::string scores_tsv(const std::vector<PIScore>& scores, const Ranking& r, bool exact) {
  std::string out = exact ? "argument\tpi_in\tpi_out\tclass\tpi_in_exact\tpi_out_exact\n"
                          : "argument\tpi_in\tpi_out\tclass\n";
  for (const auto& s : scores) {
    out += s.argument + "\t" + s.pi_in_5dp.str() + "\t" + s.pi_out_5dp.str() + "\t" +
           std::to_string(r.class_of(s.argument));
    if (exact) out += "\t" + to_fraction_string(s.pi_in) + "\t" + to_fraction_string(s.pi_out);
    out += "\n";
  }
  return out;
}

}  // namespace pirank
