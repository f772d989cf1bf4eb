#pragma once

// Brute-force reference implementations used only by the tests. They work
// from the textbook definitions with plain loops and their own fraction type,
// sharing nothing with the library beyond reading the framework's attacks.

#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "pirank/af.hpp"
#include "pirank/power_index.hpp"

namespace oracle {

struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Frac() = default;
  Frac(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { normalise(); }

  void normalise() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const auto g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  Frac operator+(const Frac& o) const { return {num * o.den + o.num * den, den * o.den}; }
  Frac operator*(const Frac& o) const { return {num * o.num, den * o.den}; }
  Frac& operator+=(const Frac& o) { return *this = *this + o; }
  bool operator==(const Frac& o) const { return num == o.num && den == o.den; }

  pirank::ExactValue exact() const { return pirank::ExactValue(num, den); }
};

using Set = std::vector<bool>;

struct Graph {
  std::size_t n = 0;
  std::vector<std::vector<bool>> att;  // att[x][y]: x attacks y

  explicit Graph(const pirank::ArgumentationFramework& af) : n(af.size()), att(n, std::vector<bool>(n)) {
    for (const auto& [f, t] : af.attack_indices()) att[f][t] = true;
  }
};

inline Set from_code(std::size_t n, std::uint64_t code) {
  Set s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = (code >> i) & 1u;
  return s;
}

inline std::uint64_t to_code(const Set& s) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i]) c |= std::uint64_t{1} << i;
  return c;
}

inline bool subset(const Set& a, const Set& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

inline bool conflict_free(const Graph& g, const Set& s) {
  for (std::size_t x = 0; x < g.n; ++x)
    for (std::size_t y = 0; y < g.n; ++y)
      if (s[x] && s[y] && g.att[x][y]) return false;
  return true;
}

/// Some member of s attacks y.
inline bool hit(const Graph& g, const Set& s, std::size_t y) {
  for (std::size_t x = 0; x < g.n; ++x)
    if (s[x] && g.att[x][y]) return true;
  return false;
}

/// Every attacker of a is attacked by s.
inline bool defends(const Graph& g, const Set& s, std::size_t a) {
  for (std::size_t b = 0; b < g.n; ++b)
    if (g.att[b][a] && !hit(g, s, b)) return false;
  return true;
}

inline bool admissible(const Graph& g, const Set& s) {
  if (!conflict_free(g, s)) return false;
  for (std::size_t a = 0; a < g.n; ++a)
    if (s[a] && !defends(g, s, a)) return false;
  return true;
}

inline bool complete(const Graph& g, const Set& s) {
  if (!admissible(g, s)) return false;
  for (std::size_t a = 0; a < g.n; ++a)
    if (!s[a] && defends(g, s, a)) return false;
  return true;
}

inline bool stable(const Graph& g, const Set& s) {
  if (!conflict_free(g, s)) return false;
  for (std::size_t a = 0; a < g.n; ++a)
    if (!s[a] && !hit(g, s, a)) return false;
  return true;
}

/// In-sets as bit codes, in no particular order.
inline std::set<std::uint64_t> family(const pirank::ArgumentationFramework& af, pirank::Semantics sigma) {
  const Graph g(af);
  std::vector<Set> all;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << g.n); ++c) all.push_back(from_code(g.n, c));
  std::vector<Set> keep;
  using pirank::Semantics;
  for (const auto& s : all) {
    bool ok = false;
    switch (sigma) {
      case Semantics::conflict_free: ok = conflict_free(g, s); break;
      case Semantics::admissible: ok = admissible(g, s); break;
      case Semantics::stable: ok = stable(g, s); break;
      default: ok = complete(g, s); break;
    }
    if (ok) keep.push_back(s);
  }
  std::set<std::uint64_t> out;
  if (sigma == Semantics::preferred) {
    // Maximal admissible sets; a different route from maximal complete.
    std::vector<Set> adm;
    for (const auto& s : all)
      if (admissible(g, s)) adm.push_back(s);
    for (const auto& s : adm) {
      bool maximal = true;
      for (const auto& t : adm)
        if (s != t && subset(s, t)) maximal = false;
      if (maximal) out.insert(to_code(s));
    }
    return out;
  }
  if (sigma == Semantics::grounded) {
    for (const auto& s : keep) {
      bool least = true;
      for (const auto& t : keep) least = least && subset(s, t);
      if (least) out.insert(to_code(s));
    }
    return out;
  }
  for (const auto& s : keep) out.insert(to_code(s));
  return out;
}

inline Set attacked(const Graph& g, const Set& s) {
  Set out(g.n);
  for (std::size_t y = 0; y < g.n; ++y) out[y] = hit(g, s, y);
  return out;
}

/// Literal 0/1 game over player count n.
struct Game {
  std::size_t n = 0;
  std::set<std::uint64_t> winning;

  int v(std::uint64_t s) const { return winning.count(s) ? 1 : 0; }
  int marginal(std::uint64_t s, std::size_t i) const { return v(s | (std::uint64_t{1} << i)) - v(s); }
};

inline Game in_game(const pirank::ArgumentationFramework& af, pirank::Semantics sigma) {
  return {af.size(), family(af, sigma)};
}

inline Game out_game(const pirank::ArgumentationFramework& af, pirank::Semantics sigma) {
  const Graph g(af);
  Game game{af.size(), {}};
  for (auto code : family(af, sigma)) game.winning.insert(to_code(attacked(g, from_code(g.n, code))));
  return game;
}

inline std::int64_t fact(std::size_t k) {
  std::int64_t f = 1;
  for (std::size_t j = 2; j <= k; ++j) f *= static_cast<std::int64_t>(j);
  return f;
}

inline int popcnt(std::uint64_t s) { return __builtin_popcountll(s); }

/// Every S not containing i, in increasing code order.
template <typename F>
void for_each_coalition_without(std::size_t n, std::size_t i, F&& f) {
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
    if (!((s >> i) & 1u)) f(s);
}

inline Frac shapley(const Game& g, std::size_t i) {
  Frac total;
  for_each_coalition_without(g.n, i, [&](std::uint64_t s) {
    const auto k = static_cast<std::size_t>(popcnt(s));
    total += Frac(fact(k) * fact(g.n - k - 1), fact(g.n)) * Frac(g.marginal(s, i));
  });
  return total;
}

inline Frac banzhaf(const Game& g, std::size_t i) {
  Frac total;
  for_each_coalition_without(g.n, i, [&](std::uint64_t s) { total += Frac(g.marginal(s, i)); });
  return total * Frac(1, std::int64_t{1} << (g.n - 1));
}

inline int kappa(const Game& g, std::uint64_t t) {
  int k = 0;
  for (std::size_t j = 0; j < g.n; ++j)
    if (((t >> j) & 1u) && g.v(t & ~(std::uint64_t{1} << j)) == 0) ++k;
  return k;
}

inline Frac johnston(const Game& g, std::size_t i) {
  Frac total;
  for_each_coalition_without(g.n, i, [&](std::uint64_t s) {
    const int m = g.marginal(s, i);
    const int k = kappa(g, s | (std::uint64_t{1} << i));
    if (m != 0 && k >= 1) total += Frac(m, k);
  });
  return total;
}

inline std::set<std::uint64_t> minimal_winning(const Game& g) {
  std::set<std::uint64_t> out;
  for (auto w : g.winning) {
    bool minimal = true;
    for (auto u : g.winning)
      if (u != w && (u & ~w) == 0) minimal = false;
    if (minimal) out.insert(w);
  }
  return out;
}

inline Frac deegan_packel(const Game& g, std::size_t i) {
  auto mins = minimal_winning(g);
  auto padded = mins;
  padded.insert(0);
  std::uint64_t reach = 0;
  for (auto m : mins)
    if ((m >> i) & 1u) reach |= m;
  Frac total;
  for_each_coalition_without(g.n, i, [&](std::uint64_t s) {
    if (s != 0 && (s & ~reach) == 0) total += Frac(g.marginal(s, i), popcnt(s));
  });
  return total * Frac(1, static_cast<std::int64_t>(padded.size()));
}

inline Frac index_value(const Game& g, pirank::PowerIndex p, std::size_t i) {
  switch (p) {
    case pirank::PowerIndex::shapley: return shapley(g, i);
    case pirank::PowerIndex::banzhaf: return banzhaf(g, i);
    case pirank::PowerIndex::deegan_packel: return deegan_packel(g, i);
    case pirank::PowerIndex::johnston: return johnston(g, i);
  }
  return {};
}

}  // namespace oracle
