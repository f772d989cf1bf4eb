#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pirank/af.hpp"
#include "pirank/deadline.hpp"
#include "pirank/semantics.hpp"

namespace pirank {

using BigInt = boost::multiprecision::cpp_int;
using ExactValue = boost::multiprecision::cpp_rational;

enum class Polarity { in, out };

inline std::string_view to_string(Polarity p) { return p == Polarity::in ? "in" : "out"; }

enum class PowerIndex { shapley, banzhaf, deegan_packel, johnston };

inline constexpr std::array kAllIndexes{PowerIndex::shapley, PowerIndex::banzhaf,
                                        PowerIndex::deegan_packel, PowerIndex::johnston};

inline std::string_view to_string(PowerIndex p) {
  switch (p) {
    case PowerIndex::shapley: return "shapley";
    case PowerIndex::banzhaf: return "banzhaf";
    case PowerIndex::deegan_packel: return "deegan-packel";
    case PowerIndex::johnston: return "johnston";
  }
  return "?";
}

inline std::optional<PowerIndex> parse_index(std::string_view name) {
  for (auto p : kAllIndexes)
    if (to_string(p) == name) return p;
  return std::nullopt;
}

/// 0/1 coalition game over the framework's arguments: v(S) = 1 iff S is
/// exactly one of the winning sets. Not closed under supersets.
class CharacteristicFunction {
 public:
  CharacteristicFunction(ArgumentationFramework af, ExtensionFamily winning, Polarity polarity)
      : af_(std::move(af)), winning_(std::move(winning)), polarity_(polarity),
        table_(std::size_t{1} << af_.size(), false) {
    if (winning_.frame() != af_.frame_id())
      throw ContractViolation("winning family belongs to a different framework");
    for (Mask m : winning_.masks()) table_[m] = true;
  }

  const ArgumentationFramework& framework() const noexcept { return af_; }
  const ExtensionFamily& winning() const noexcept { return winning_; }
  Polarity polarity() const noexcept { return polarity_; }
  std::size_t players() const noexcept { return af_.size(); }

  bool wins(Mask s) const { return table_[s]; }
  int operator()(Mask s) const { return table_[s] ? 1 : 0; }
  int operator()(const ArgSet& s) const {
    af_.require_own(s);
    return (*this)(s.bits());
  }

 private:
  ArgumentationFramework af_;
  ExtensionFamily winning_;
  Polarity polarity_;
  std::vector<bool> table_;
};

inline CharacteristicFunction characteristic(const ArgumentationFramework& af, Semantics sigma,
                                             Polarity polarity, const Deadline& deadline = {}) {
  auto family = enumerate(af, sigma, deadline);
  if (polarity == Polarity::out) family = out_family(af, family);
  return {af, std::move(family), polarity};
}

/// v(S u {i}) - v(S); requires i not in S.
inline int marginal(const CharacteristicFunction& v, Mask s, std::size_t i) {
  if (has_bit(s, i)) throw ContractViolation("player already belongs to the coalition");
  return v(s | bit(i)) - v(s);
}

inline int marginal(const CharacteristicFunction& v, const ArgSet& s, std::string_view i) {
  v.framework().require_own(s);
  return marginal(v, s.bits(), v.framework().index(i));
}

namespace detail {

inline BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

/// Nonzero marginal terms of player i, found by walking the winning sets only.
/// `visit(coalition_without_i, sign)` is called once per term.
template <typename Visit>
void for_each_pivot(const CharacteristicFunction& v, std::size_t i, Visit&& visit) {
  const Mask me = bit(i);
  for (Mask w : v.winning().masks()) {
    if ((w & me) != 0) {
      if (!v.wins(w & ~me)) visit(w & ~me, +1);
    } else if (!v.wins(w | me)) {
      visit(w, -1);
    }
  }
}

/// sum over k of counts[k] / k, for k >= 1.
inline ExactValue harmonic_sum(const std::vector<std::int64_t>& counts) {
  ExactValue total = 0;
  for (std::size_t k = 1; k < counts.size(); ++k)
    if (counts[k] != 0) total += ExactValue(counts[k], static_cast<std::int64_t>(k));
  return total;
}

}  // namespace detail

inline ExactValue shapley(const CharacteristicFunction& v, std::size_t i) {
  const std::size_t n = v.players();
  std::vector<std::int64_t> net(n, 0);
  detail::for_each_pivot(v, i, [&](Mask s, int sign) { net[popcount(s)] += sign; });
  BigInt numerator = 0;
  for (std::size_t s = 0; s < n; ++s)
    if (net[s] != 0) numerator += BigInt(net[s]) * detail::factorial(s) * detail::factorial(n - s - 1);
  return ExactValue(numerator, detail::factorial(n));
}

inline ExactValue banzhaf(const CharacteristicFunction& v, std::size_t i) {
  std::int64_t net = 0;
  detail::for_each_pivot(v, i, [&](Mask, int sign) { net += sign; });
  return ExactValue(BigInt(net), BigInt(1) << (v.players() - 1));
}

/// Members j of t whose removal leaves a losing coalition.
inline std::size_t kappa(const CharacteristicFunction& v, Mask t) {
  std::size_t critical = 0;
  for (auto j : members_of(t))
    if (!v.wins(t & ~bit(j))) ++critical;
  return critical;
}

inline std::size_t kappa(const CharacteristicFunction& v, const ArgSet& t) {
  v.framework().require_own(t);
  return kappa(v, t.bits());
}

/// Each nonzero marginal is divided by the number of critical members of
/// S u {i}; terms where that count is zero drop out.
inline ExactValue johnston(const CharacteristicFunction& v, std::size_t i) {
  std::vector<std::int64_t> net(v.players() + 1, 0);
  detail::for_each_pivot(v, i, [&](Mask s, int sign) {
    const std::size_t k = kappa(v, s | bit(i));
    if (k >= 1) net[k] += sign;
  });
  return detail::harmonic_sum(net);
}

/// Inclusion-minimal winning sets; {{}} when the empty set wins.
inline ExtensionFamily minimal_winning(const CharacteristicFunction& v) {
  return {v.framework().frame_id(), detail::minimal(v.winning().masks())};
}

/// Deegan-Packel with the empty coalition always counted in M(v). The sum
/// runs over nonempty S inside the union of the minimal winning coalitions
/// that contain i.
inline ExactValue deegan_packel(const CharacteristicFunction& v, std::size_t i) {
  const auto minimal = minimal_winning(v);
  std::size_t coalitions = minimal.size();
  if (!minimal.contains(Mask{0})) ++coalitions;

  Mask reach = 0;
  for (Mask m : minimal.masks())
    if (has_bit(m, i)) reach |= m;
  const Mask pool = reach & ~bit(i);

  std::vector<std::int64_t> net(v.players() + 1, 0);
  for (Mask s = pool; s != 0; s = (s - 1) & pool) net[popcount(s)] += marginal(v, s, i);
  return detail::harmonic_sum(net) / ExactValue(static_cast<std::int64_t>(coalitions));
}

inline ExactValue power_index(const CharacteristicFunction& v, PowerIndex index, std::size_t i) {
  if (i >= v.players()) throw ContractViolation("player index out of range");
  switch (index) {
    case PowerIndex::shapley: return shapley(v, i);
    case PowerIndex::banzhaf: return banzhaf(v, i);
    case PowerIndex::deegan_packel: return deegan_packel(v, i);
    case PowerIndex::johnston: return johnston(v, i);
  }
  return 0;
}

inline ExactValue power_index(const CharacteristicFunction& v, PowerIndex index, std::string_view id) {
  return power_index(v, index, v.framework().index(id));
}

struct ArgumentScore {
  std::string argument;
  ExactValue pi_in;
  ExactValue pi_out;
};

/// Index values over the in- and out-games, in argument order.
inline std::vector<ArgumentScore> score_all(const ArgumentationFramework& af, Semantics sigma,
                                            PowerIndex index, const Deadline& deadline = {}) {
  const auto in_family = enumerate(af, sigma, deadline);
  const CharacteristicFunction v_in(af, in_family, Polarity::in);
  const CharacteristicFunction v_out(af, out_family(af, in_family), Polarity::out);
  std::vector<ArgumentScore> out;
  out.reserve(af.size());
  for (std::size_t i = 0; i < af.size(); ++i) {
    deadline.check();
    out.push_back({af.argument(i), power_index(v_in, index, i), power_index(v_out, index, i)});
  }
  return out;
}

inline std::string to_fraction_string(const ExactValue& x) {
  const auto num = boost::multiprecision::numerator(x);
  const auto den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace pirank
