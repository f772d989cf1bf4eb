#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "pirank/af.hpp"

namespace pirank {

/// Argument names a..z, then a1, b1, ...
inline std::string default_argument_name(std::size_t i, const std::string& prefix = "") {
  std::string name = prefix + static_cast<char>('a' + i % 26);
  if (i >= 26) name += std::to_string(i / 26);
  return name;
}

/// Digraph on n arguments from an adjacency code: bit (i*n + j) is the attack i -> j.
inline ArgumentationFramework framework_from_code(std::size_t n, std::uint64_t code,
                                                  const std::string& prefix = "") {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(default_argument_name(i, prefix));
  std::vector<ArgumentationFramework::Attack> attacks;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((code >> (i * n + j)) & 1u) attacks.emplace_back(names[i], names[j]);
  return ArgumentationFramework(std::move(names), attacks, kHardArgumentCap);
}

/// True when no relabelling of the n arguments yields a smaller code.
inline bool is_canonical_code(std::size_t n, std::uint64_t code) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::uint64_t image = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if ((code >> (i * n + j)) & 1u) image |= std::uint64_t{1} << (perm[i] * n + perm[j]);
    if (image < code) return false;
  }
  return true;
}

/// Calls visit(af) for every digraph with 1..max_n arguments; with
/// `up_to_naming` only one representative per isomorphism class.
template <typename Visit>
void for_each_digraph(std::size_t max_n, bool up_to_naming, Visit&& visit) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    const std::uint64_t codes = std::uint64_t{1} << (n * n);
    for (std::uint64_t code = 0; code < codes; ++code) {
      if (up_to_naming && !is_canonical_code(n, code)) continue;
      visit(framework_from_code(n, code));
    }
  }
}

/// Random digraph: each non-loop pair attacks with probability p, each
/// self-attack with probability p/3.
template <typename Rng>
ArgumentationFramework random_digraph(Rng& rng, std::size_t n, double p, const std::string& prefix = "") {
  std::bernoulli_distribution edge(p), loop(p / 3.0);
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i == j ? loop(rng) : edge(rng)) code |= std::uint64_t{1} << (i * n + j);
  return framework_from_code(n, code, prefix);
}

/// n uniform in [min_n, max_n], edge density uniform in [0.15, 0.6].
template <typename Rng>
ArgumentationFramework random_framework(Rng& rng, std::size_t min_n, std::size_t max_n,
                                        const std::string& prefix = "") {
  std::uniform_int_distribution<std::size_t> size(min_n, max_n);
  std::uniform_real_distribution<double> density(0.15, 0.6);
  const std::size_t n = size(rng);
  return random_digraph(rng, n, density(rng), prefix);
}

template <typename Rng>
Isomorphism random_permutation(Rng& rng, const ArgumentationFramework& af) {
  auto image = af.arguments();
  std::shuffle(image.begin(), image.end(), rng);
  Isomorphism iso;
  for (std::size_t i = 0; i < af.size(); ++i) iso.mapping[af.argument(i)] = image[i];
  return iso;
}

}  // namespace pirank
