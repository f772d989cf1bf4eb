#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pirank/af.hpp"
#include "pirank/generate.hpp"
#include "pirank/ranking.hpp"
#include "pirank/semantics.hpp"

namespace pirank {

enum class Property {
  abstraction,
  independence,
  self_contradiction,
  cardinality_precedence,
  quality_precedence,
  non_attacked_equivalence,
  totality,
  scp,
  crp,
};

inline constexpr std::array kAllProperties{
    Property::abstraction,        Property::independence,           Property::self_contradiction,
    Property::cardinality_precedence, Property::quality_precedence, Property::non_attacked_equivalence,
    Property::totality,           Property::scp,                    Property::crp};

inline std::string_view to_string(Property p) {
  switch (p) {
    case Property::abstraction: return "abstraction";
    case Property::independence: return "independence";
    case Property::self_contradiction: return "self-contradiction";
    case Property::cardinality_precedence: return "cardinality-precedence";
    case Property::quality_precedence: return "quality-precedence";
    case Property::non_attacked_equivalence: return "non-attacked-equivalence";
    case Property::totality: return "totality";
    case Property::scp: return "scp";
    case Property::crp: return "crp";
  }
  return "?";
}

inline std::optional<Property> parse_property(std::string_view name) {
  for (auto p : kAllProperties)
    if (to_string(p) == name) return p;
  return std::nullopt;
}

/// `skipped` marks instances whose extension family is empty.
enum class Verdict { holds, violated, skipped };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds-on-instance";
    case Verdict::violated: return "violated";
    case Verdict::skipped: return "skipped-degenerate";
  }
  return "?";
}

struct Witness {
  ArgumentationFramework framework;
  std::pair<std::string, std::string> pair;
  std::optional<Isomorphism> isomorphism;
};

struct PropertyReport {
  Property property;
  Semantics semantics;
  PowerIndex index;
  Verdict verdict;
  std::optional<Witness> witness;
};

struct CheckOptions {
  CompareMode mode = CompareMode::rounded;
  /// Used by abstraction; a seeded random permutation otherwise.
  std::optional<Isomorphism> isomorphism;
  std::uint64_t seed = 0;
  Deadline deadline;
};

namespace detail {

/// Same framework with the argument list reordered to `order`.
inline ArgumentationFramework reorder(const ArgumentationFramework& af, std::vector<std::string> order) {
  std::vector<ArgumentationFramework::Attack> attacks;
  for (const auto& [f, t] : af.attack_indices()) attacks.emplace_back(af.argument(f), af.argument(t));
  return ArgumentationFramework(std::move(order), attacks, kHardArgumentCap);
}

template <typename Pred>
std::optional<std::pair<std::size_t, std::size_t>> first_pair(std::size_t n, Pred&& violated) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (violated(a, b)) return std::pair{a, b};
  return std::nullopt;
}

}  // namespace detail

inline PropertyReport check_property(const ArgumentationFramework& af, Semantics sigma, PowerIndex index,
                                     Property property, const CheckOptions& options = {}) {
  PropertyReport report{property, sigma, index, Verdict::holds, std::nullopt};
  const auto family = enumerate(af, sigma, options.deadline);
  if (family.empty()) {
    report.verdict = Verdict::skipped;
    return report;
  }
  const auto result = rank_framework(af, sigma, index, options.mode, options.deadline);
  const Ranking& r = result.ranking;
  const auto& name = [&af](std::size_t i) -> const std::string& { return af.argument(i); };
  const auto better = [&](std::size_t a, std::size_t b) { return r.strictly_better(name(a), name(b)); };

  std::optional<std::pair<std::size_t, std::size_t>> bad;
  std::optional<Isomorphism> iso_used;

  switch (property) {
    case Property::totality:
      bad = detail::first_pair(af.size(), [&](std::size_t a, std::size_t b) {
        return !r.geq(name(a), name(b)) && !r.geq(name(b), name(a));
      });
      break;

    case Property::abstraction: {
      Isomorphism iso;
      if (options.isomorphism) {
        iso = *options.isomorphism;
      } else {
        std::mt19937_64 rng(options.seed);
        iso = random_permutation(rng, af);
      }
      // Reordering as well makes the image use a different bit layout.
      auto image = apply_isomorphism(af, iso);
      auto order = image.arguments();
      std::sort(order.begin(), order.end());
      image = detail::reorder(image, std::move(order));
      const auto mapped = rank_framework(image, sigma, index, options.mode, options.deadline).ranking;
      bad = detail::first_pair(af.size(), [&](std::size_t a, std::size_t b) {
        return r.geq(name(a), name(b)) != mapped.geq(iso(name(a)), iso(name(b)));
      });
      iso_used = std::move(iso);
      break;
    }

    case Property::independence:
      for (const auto& component : connected_components(af)) {
        if (component.size() < 2) continue;
        const auto local = rank_framework(component, sigma, index, options.mode, options.deadline).ranking;
        for (const auto& a : component.arguments()) {
          for (const auto& b : component.arguments()) {
            if (!bad && local.geq(a, b) != r.geq(a, b)) bad = std::pair{af.index(a), af.index(b)};
          }
        }
        if (bad) break;
      }
      break;

    case Property::self_contradiction:
      bad = detail::first_pair(af.size(), [&](std::size_t a, std::size_t b) {
        return !af.self_attacking(a) && af.self_attacking(b) && !better(a, b);
      });
      break;

    case Property::cardinality_precedence:
      bad = detail::first_pair(af.size(), [&](std::size_t a, std::size_t b) {
        return popcount(af.attackers_mask(a)) < popcount(af.attackers_mask(b)) && !better(a, b);
      });
      break;

    case Property::quality_precedence:
      bad = detail::first_pair(af.size(), [&](std::size_t a, std::size_t b) {
        const auto a_attackers = members_of(af.attackers_mask(a));
        for (auto c : members_of(af.attackers_mask(b))) {
          const bool above_all = std::all_of(a_attackers.begin(), a_attackers.end(),
                                             [&](std::size_t d) { return better(c, d); });
          if (above_all) return !better(a, b);
        }
        return false;
      });
      break;

    case Property::non_attacked_equivalence:
      bad = detail::first_pair(af.size(), [&](std::size_t a, std::size_t b) {
        return af.attackers_mask(a) == 0 && af.attackers_mask(b) == 0 &&
               !r.equivalent(name(a), name(b));
      });
      break;

    case Property::scp:
      bad = detail::first_pair(af.size(), [&](std::size_t a, std::size_t b) {
        return acceptance_status(family, a) == Acceptance::sceptical &&
               acceptance_status(family, b) != Acceptance::sceptical && !better(a, b);
      });
      break;

    case Property::crp:
      bad = detail::first_pair(af.size(), [&](std::size_t a, std::size_t b) {
        return acceptance_status(family, a) != Acceptance::rejected &&
               acceptance_status(family, b) == Acceptance::rejected && !better(a, b);
      });
      break;
  }

  if (bad) {
    report.verdict = Verdict::violated;
    report.witness = Witness{af, {name(bad->first), name(bad->second)}, std::move(iso_used)};
  }
  return report;
}

/// Re-runs the check on the witness; true iff the violation reproduces.
inline bool reverify(const PropertyReport& report, CompareMode mode = CompareMode::rounded) {
  if (report.verdict != Verdict::violated || !report.witness) return false;
  CheckOptions options;
  options.mode = mode;
  options.isomorphism = report.witness->isomorphism;
  const auto again = check_property(report.witness->framework, report.semantics, report.index,
                                    report.property, options);
  return again.verdict == Verdict::violated && again.witness &&
         again.witness->pair == report.witness->pair;
}

enum class GroupComparison { geq, strict, neither };

inline std::string_view to_string(GroupComparison g) {
  switch (g) {
    case GroupComparison::geq: return "geq";
    case GroupComparison::strict: return "strict";
    case GroupComparison::neither: return "neither";
  }
  return "?";
}

/// Is there an injective f: s2 -> s1 with f(x) at least as good as x?
/// Matching the k-th best of s2 to the k-th best of s1 decides it.
inline GroupComparison group_compare(const ArgumentationFramework& af, const Ranking& r, const ArgSet& s1,
                                     const ArgSet& s2) {
  af.require_own(s1);
  af.require_own(s2);
  auto positions = [&](const ArgSet& s) {
    std::vector<std::size_t> p;
    for (const auto& a : af.names(s)) p.push_back(r.class_of(a));
    std::sort(p.begin(), p.end());
    return p;
  };
  const auto p1 = positions(s1), p2 = positions(s2);
  if (p2.size() > p1.size()) return GroupComparison::neither;
  bool strict = p2.size() < p1.size();
  for (std::size_t k = 0; k < p2.size(); ++k) {
    if (p1[k] > p2[k]) return GroupComparison::neither;
    if (p1[k] < p2[k]) strict = true;
  }
  return strict ? GroupComparison::strict : GroupComparison::geq;
}

// ---------------------------------------------------------------------------
// Counterexample search

enum class SearchOutcome { violated, holds_on_all_tested, budget_exhausted };

inline std::string_view to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::violated: return "violated";
    case SearchOutcome::holds_on_all_tested: return "holds-on-all-tested";
    case SearchOutcome::budget_exhausted: return "budget-exhausted";
  }
  return "?";
}

struct SearchOptions {
  std::size_t max_args = 6;
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  /// Every digraph up to this size is tried before sampling.
  std::size_t exhaustive_up_to = 4;
  CompareMode mode = CompareMode::rounded;
  Deadline deadline;
};

struct SearchReport {
  SearchOutcome outcome = SearchOutcome::holds_on_all_tested;
  std::optional<PropertyReport> report;
  std::size_t tested = 0;
  std::size_t skipped = 0;
};

inline constexpr std::size_t kMaxSearchArguments = 7;

/// First violation over all small digraphs (one per naming class), then over
/// seeded random digraphs with 2..max_args arguments.
inline SearchReport search_counterexample(Property property, Semantics sigma, PowerIndex index,
                                          const SearchOptions& options = {}) {
  if (options.max_args > kMaxSearchArguments || options.max_args == 0)
    throw InvalidInput("search supports 1.." + std::to_string(kMaxSearchArguments) + " arguments");

  SearchReport out;
  std::uint64_t candidate = 0;
  auto try_one = [&](const ArgumentationFramework& af) {
    CheckOptions check;
    check.mode = options.mode;
    check.seed = options.seed ^ (candidate++ * 0x9E3779B97F4A7C15ull);
    auto report = check_property(af, sigma, index, property, check);
    if (report.verdict == Verdict::skipped) {
      ++out.skipped;
      return false;
    }
    ++out.tested;
    if (report.verdict == Verdict::violated) {
      out.outcome = SearchOutcome::violated;
      out.report = std::move(report);
      return true;
    }
    return false;
  };

  try {
    const std::size_t exhaustive = std::min(options.exhaustive_up_to, options.max_args);
    for (std::size_t n = 1; n <= exhaustive; ++n) {
      const std::uint64_t codes = std::uint64_t{1} << (n * n);
      for (std::uint64_t code = 0; code < codes; ++code) {
        options.deadline.check();
        if (!is_canonical_code(n, code)) continue;
        if (try_one(framework_from_code(n, code))) return out;
      }
    }
    std::mt19937_64 rng(options.seed);
    for (std::size_t k = 0; k < options.samples; ++k) {
      options.deadline.check();
      if (try_one(random_framework(rng, std::min<std::size_t>(2, options.max_args), options.max_args)))
        return out;
    }
  } catch (const BudgetExceeded&) {
    out.outcome = SearchOutcome::budget_exhausted;
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::ordered_json to_json(const PropertyReport& r) {
  nlohmann::ordered_json j;
  j["property"] = to_string(r.property);
  j["semantics"] = to_string(r.semantics);
  j["index"] = to_string(r.index);
  j["verdict"] = to_string(r.verdict);
  if (r.witness) {
    nlohmann::ordered_json w;
    w["apx"] = serialize(r.witness->framework, Format::apx);
    w["pair"] = {r.witness->pair.first, r.witness->pair.second};
    if (r.witness->isomorphism) {
      nlohmann::ordered_json m = nlohmann::ordered_json::object();
      for (const auto& [from, to] : r.witness->isomorphism->mapping) m[from] = to;
      w["isomorphism"] = m;
    }
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

}  // namespace pirank
