#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pirank/error.hpp"

namespace pirank {

/// Bitset over the argument-list order: bit i is the i-th declared argument.
using Mask = std::uint32_t;

inline constexpr std::size_t kDefaultMaxArguments = 20;
/// Absolute ceiling for any configured limit; enumeration is 2^n.
inline constexpr std::size_t kHardArgumentCap = 24;

using FrameId = std::uint64_t;

inline bool is_valid_argument_id(std::string_view id) {
  return !id.empty() && std::all_of(id.begin(), id.end(), [](unsigned char c) {
           return std::isalnum(c) != 0 || c == '_';
         });
}

inline Mask bit(std::size_t i) { return Mask{1} << i; }
inline bool has_bit(Mask m, std::size_t i) { return ((m >> i) & 1u) != 0; }
inline std::size_t popcount(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

/// Indices of the set bits, ascending.
inline std::vector<std::size_t> members_of(Mask m) {
  std::vector<std::size_t> out;
  out.reserve(popcount(m));
  while (m != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

namespace detail {
inline FrameId next_frame_id() {
  static std::atomic<FrameId> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}
}  // namespace detail

/// A subset of one framework's arguments. Sets from different frameworks
/// never compare or combine; doing so is a contract violation.
class ArgSet {
 public:
  ArgSet(FrameId frame, Mask bits) : frame_(frame), bits_(bits) {}

  FrameId frame() const noexcept { return frame_; }
  Mask bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return popcount(bits_); }
  bool empty() const noexcept { return bits_ == 0; }
  bool contains(std::size_t index) const noexcept { return has_bit(bits_, index); }

  bool subset_of(const ArgSet& other) const {
    same_frame(other);
    return (bits_ & ~other.bits_) == 0;
  }

  friend bool operator==(const ArgSet& a, const ArgSet& b) {
    a.same_frame(b);
    return a.bits_ == b.bits_;
  }

  friend ArgSet operator|(const ArgSet& a, const ArgSet& b) {
    a.same_frame(b);
    return {a.frame_, a.bits_ | b.bits_};
  }
  friend ArgSet operator&(const ArgSet& a, const ArgSet& b) {
    a.same_frame(b);
    return {a.frame_, a.bits_ & b.bits_};
  }
  friend ArgSet operator-(const ArgSet& a, const ArgSet& b) {
    a.same_frame(b);
    return {a.frame_, a.bits_ & ~b.bits_};
  }

 private:
  void same_frame(const ArgSet& other) const {
    if (frame_ != other.frame_) throw ContractViolation("argument sets belong to different frameworks");
  }

  FrameId frame_;
  Mask bits_;
};

/// Immutable argument list plus attack relation. Argument order is
/// first-appearance order and doubles as the bitset index order.
class ArgumentationFramework {
 public:
  using Attack = std::pair<std::string, std::string>;

  ArgumentationFramework() : ArgumentationFramework({}, {}) {}

  ArgumentationFramework(std::vector<std::string> arguments, const std::vector<Attack>& attacks,
                         std::size_t max_arguments = kDefaultMaxArguments)
      : id_(detail::next_frame_id()), arguments_(std::move(arguments)) {
    const std::size_t limit = std::min(max_arguments, kHardArgumentCap);
    if (arguments_.size() > limit) throw LimitError(arguments_.size(), limit);
    for (std::size_t i = 0; i < arguments_.size(); ++i) {
      if (!is_valid_argument_id(arguments_[i]))
        throw InvalidInput("invalid argument id '" + arguments_[i] + "'");
      if (!index_.emplace(arguments_[i], i).second)
        throw InvalidInput("duplicate argument '" + arguments_[i] + "'");
    }
    attackers_.assign(arguments_.size(), 0);
    targets_.assign(arguments_.size(), 0);
    for (const auto& [from, to] : attacks) {
      const std::size_t f = index(from);
      const std::size_t t = index(to);
      if (has_bit(targets_[f], t))
        throw InvalidInput("duplicate attack (" + from + "," + to + ")");
      targets_[f] |= bit(t);
      attackers_[t] |= bit(f);
      attacks_.emplace_back(f, t);
    }
  }

  FrameId frame_id() const noexcept { return id_; }
  std::size_t size() const noexcept { return arguments_.size(); }
  bool empty() const noexcept { return arguments_.empty(); }
  const std::vector<std::string>& arguments() const& noexcept { return arguments_; }
  std::vector<std::string> arguments() && noexcept { return std::move(arguments_); }
  const std::string& argument(std::size_t i) const { return arguments_.at(i); }

  /// Attacks as index pairs, in declaration order.
  const std::vector<std::pair<std::size_t, std::size_t>>& attack_indices() const noexcept {
    return attacks_;
  }
  std::size_t attack_count() const noexcept { return attacks_.size(); }

  std::optional<std::size_t> find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index(std::string_view id) const {
    if (auto i = find(id)) return *i;
    throw UnknownArgument(std::string(id));
  }

  bool attacks(std::size_t from, std::size_t to) const { return has_bit(targets_.at(from), to); }
  bool self_attacking(std::size_t i) const { return attacks(i, i); }

  Mask attackers_mask(std::size_t i) const { return attackers_.at(i); }
  Mask targets_mask(std::size_t i) const { return targets_.at(i); }
  Mask full_mask() const noexcept {
    return arguments_.empty() ? Mask{0} : (~Mask{0} >> (32 - arguments_.size()));
  }

  ArgSet set(Mask bits) const {
    if ((bits & ~full_mask()) != 0) throw ContractViolation("mask exceeds framework arguments");
    return {id_, bits};
  }
  ArgSet set(std::initializer_list<std::string_view> ids) const {
    Mask m = 0;
    for (auto id : ids) m |= bit(index(id));
    return {id_, m};
  }
  ArgSet set(const std::vector<std::string>& ids) const {
    Mask m = 0;
    for (const auto& id : ids) m |= bit(index(id));
    return {id_, m};
  }
  ArgSet empty_set() const { return {id_, 0}; }
  ArgSet all() const { return {id_, full_mask()}; }

  void require_own(const ArgSet& s) const {
    if (s.frame() != id_) throw ContractViolation("argument set belongs to a different framework");
  }

  /// Member names in argument order.
  std::vector<std::string> names(Mask m) const {
    std::vector<std::string> out;
    for (auto i : members_of(m)) out.push_back(arguments_[i]);
    return out;
  }
  std::vector<std::string> names(const ArgSet& s) const {
    require_own(s);
    return names(s.bits());
  }

  /// Same argument order and same attack set.
  friend bool operator==(const ArgumentationFramework& a, const ArgumentationFramework& b) {
    return a.arguments_ == b.arguments_ && a.targets_ == b.targets_;
  }

 private:
  FrameId id_;
  std::vector<std::string> arguments_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Mask> attackers_;
  std::vector<Mask> targets_;
  std::vector<std::pair<std::size_t, std::size_t>> attacks_;
};

using AF = ArgumentationFramework;

// ---------------------------------------------------------------------------
// Input / output

namespace detail {

class ApxReader {
 public:
  explicit ApxReader(std::string_view text) : text_(text) {}

  ArgumentationFramework read(std::size_t max_arguments) {
    std::vector<std::string> args;
    std::set<std::string> declared;
    struct PendingAttack {
      std::string from, to;
      std::size_t line;
    };
    std::vector<PendingAttack> attacks;
    std::set<std::pair<std::string, std::string>> seen;

    for (skip_space(); pos_ < text_.size(); skip_space()) {
      const std::size_t fact_line = line_;
      const std::string head = identifier();
      if (head != "arg" && head != "att")
        throw ParseError(fact_line, "expected 'arg' or 'att', found '" + head + "'");
      expect('(');
      const std::string first = identifier();
      if (head == "arg") {
        expect(')');
        expect('.');
        if (!declared.insert(first).second)
          throw ParseError(fact_line, "duplicate argument '" + first + "'");
        args.push_back(first);
      } else {
        expect(',');
        const std::string second = identifier();
        expect(')');
        expect('.');
        if (!seen.emplace(first, second).second)
          throw ParseError(fact_line, "duplicate attack (" + first + "," + second + ")");
        attacks.push_back({first, second, fact_line});
      }
    }

    std::vector<ArgumentationFramework::Attack> pairs;
    for (const auto& a : attacks) {
      for (const auto* end : {&a.from, &a.to})
        if (!declared.count(*end))
          throw ParseError(a.line, "undeclared argument '" + *end + "' in attack");
      pairs.emplace_back(a.from, a.to);
    }
    return ArgumentationFramework(std::move(args), pairs, max_arguments);
  }

 private:
  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        if (c == '\n') ++line_;
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) {
      if (pos_ >= text_.size()) throw ParseError(line_, "unexpected end of input");
      throw ParseError(line_, std::string("unexpected character '") + text_[pos_] + "'");
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size())
      throw ParseError(line_, std::string("expected '") + c + "', found end of input");
    if (text_[pos_] != c)
      throw ParseError(line_, std::string("expected '") + c + "', found '" + text_[pos_] + "'");
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

}  // namespace detail

inline ArgumentationFramework parse_apx(std::string_view text,
                                        std::size_t max_arguments = kDefaultMaxArguments) {
  return detail::ApxReader(text).read(max_arguments);
}

inline ArgumentationFramework framework_from_json(const nlohmann::json& j,
                                                  std::size_t max_arguments = kDefaultMaxArguments) {
  if (!j.is_object() || !j.contains("arguments") || !j["arguments"].is_array())
    throw ParseError(0, "framework must be an object with an 'arguments' array");
  std::vector<std::string> args;
  for (const auto& a : j["arguments"]) {
    if (!a.is_string()) throw ParseError(0, "argument ids must be strings");
    args.push_back(a.get<std::string>());
  }
  std::vector<ArgumentationFramework::Attack> attacks;
  if (j.contains("attacks")) {
    if (!j["attacks"].is_array()) throw ParseError(0, "'attacks' must be an array");
    for (const auto& p : j["attacks"]) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
        throw ParseError(0, "each attack must be a pair of strings");
      attacks.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
  }
  // Count before construction so oversize inputs report the limit, not an id problem.
  const std::size_t limit = std::min(max_arguments, kHardArgumentCap);
  if (args.size() > limit) throw LimitError(args.size(), limit);
  try {
    return ArgumentationFramework(std::move(args), attacks, max_arguments);
  } catch (const UnknownArgument& e) {
    throw ParseError(0, std::string("undeclared argument in attack: ") + e.what());
  } catch (const LimitError&) {
    throw;
  } catch (const InvalidInput& e) {
    throw ParseError(0, e.what());
  }
}

inline ArgumentationFramework parse_json(std::string_view text,
                                         std::size_t max_arguments = kDefaultMaxArguments) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  return framework_from_json(j, max_arguments);
}

/// APX when the text does not start with '{', JSON otherwise.
inline ArgumentationFramework parse_framework(std::string_view text,
                                              std::size_t max_arguments = kDefaultMaxArguments) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text, max_arguments);
  return parse_apx(text, max_arguments);
}

enum class Format { apx, json };

inline nlohmann::ordered_json framework_to_json(const ArgumentationFramework& af) {
  nlohmann::ordered_json j;
  j["arguments"] = af.arguments();
  j["attacks"] = nlohmann::ordered_json::array();
  for (const auto& [f, t] : af.attack_indices())
    j["attacks"].push_back({af.argument(f), af.argument(t)});
  return j;
}

inline std::string serialize(const ArgumentationFramework& af, Format format) {
  if (format == Format::json) return framework_to_json(af).dump();
  std::string out;
  auto line = [&out](const std::string& fact) {
    if (!out.empty()) out += '\n';
    out += fact;
  };
  for (const auto& a : af.arguments()) line("arg(" + a + ").");
  for (const auto& [f, t] : af.attack_indices())
    line("att(" + af.argument(f) + "," + af.argument(t) + ").");
  return out;
}

// ---------------------------------------------------------------------------
// Structural operations

/// Arguments attacked by some member of `s` (written S+).
inline Mask attacked_by(const ArgumentationFramework& af, Mask s) {
  Mask out = 0;
  for (auto i : members_of(s)) out |= af.targets_mask(i);
  return out;
}

inline ArgSet attacked_by(const ArgumentationFramework& af, const ArgSet& s) {
  af.require_own(s);
  return af.set(attacked_by(af, s.bits()));
}

/// Arguments attacking some member of `s`.
inline Mask attackers_of(const ArgumentationFramework& af, Mask s) {
  Mask out = 0;
  for (auto i : members_of(s)) out |= af.attackers_mask(i);
  return out;
}

inline ArgSet direct_attackers(const ArgumentationFramework& af, std::string_view a) {
  return af.set(af.attackers_mask(af.index(a)));
}

/// Renaming of arguments. Applying it to a framework must hit every argument
/// exactly once.
struct Isomorphism {
  std::map<std::string, std::string> mapping;

  Isomorphism inverse() const {
    Isomorphism inv;
    for (const auto& [from, to] : mapping) {
      if (!inv.mapping.emplace(to, from).second)
        throw InvalidInput("mapping is not injective on '" + to + "'");
    }
    return inv;
  }

  const std::string& operator()(const std::string& id) const {
    auto it = mapping.find(id);
    if (it == mapping.end()) throw InvalidInput("mapping is not total: '" + id + "' unmapped");
    return it->second;
  }
};

inline ArgumentationFramework apply_isomorphism(const ArgumentationFramework& af,
                                                const Isomorphism& iso) {
  std::vector<std::string> renamed;
  std::set<std::string> image;
  for (const auto& a : af.arguments()) {
    const auto& b = iso(a);
    if (!image.insert(b).second) throw InvalidInput("mapping is not injective on '" + b + "'");
    renamed.push_back(b);
  }
  std::vector<ArgumentationFramework::Attack> attacks;
  for (const auto& [f, t] : af.attack_indices()) attacks.emplace_back(renamed[f], renamed[t]);
  return ArgumentationFramework(std::move(renamed), attacks, kHardArgumentCap);
}

/// Sub-framework on `keep`, argument order preserved.
inline ArgumentationFramework induced_subframework(const ArgumentationFramework& af, Mask keep) {
  std::vector<ArgumentationFramework::Attack> attacks;
  for (const auto& [f, t] : af.attack_indices())
    if (has_bit(keep, f) && has_bit(keep, t)) attacks.emplace_back(af.argument(f), af.argument(t));
  return ArgumentationFramework(af.names(keep), attacks, kHardArgumentCap);
}

/// Weakly connected components as argument masks, ordered by smallest member index.
inline std::vector<Mask> component_masks(const ArgumentationFramework& af) {
  std::vector<Mask> out;
  Mask unseen = af.full_mask();
  while (unseen != 0) {
    Mask comp = unseen & (~unseen + 1);
    for (Mask frontier = comp; frontier != 0;) {
      Mask next = 0;
      for (auto i : members_of(frontier)) next |= af.targets_mask(i) | af.attackers_mask(i);
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

inline std::vector<ArgumentationFramework> connected_components(const ArgumentationFramework& af) {
  std::vector<ArgumentationFramework> out;
  for (Mask m : component_masks(af)) out.push_back(induced_subframework(af, m));
  return out;
}

inline ArgumentationFramework disjoint_union(const ArgumentationFramework& a,
                                             const ArgumentationFramework& b,
                                             std::size_t max_arguments = kDefaultMaxArguments) {
  std::vector<std::string> args = a.arguments();
  for (const auto& x : b.arguments()) {
    if (a.find(x)) throw InvalidInput("argument id collision on '" + x + "'");
    args.push_back(x);
  }
  std::vector<ArgumentationFramework::Attack> attacks;
  for (const auto* af : {&a, &b})
    for (const auto& [f, t] : af->attack_indices())
      attacks.emplace_back(af->argument(f), af->argument(t));
  return ArgumentationFramework(std::move(args), attacks, max_arguments);
}

/// Fixtures shipped with the library.
namespace fixtures {

inline ArgumentationFramework fig9() {
  return ArgumentationFramework(
      {"a", "b", "c", "d", "e"},
      {{"a", "b"}, {"b", "c"}, {"b", "d"}, {"d", "b"}, {"e", "b"}, {"d", "e"}, {"e", "d"}});
}

/// Reinstatement and rebuttal attack.
inline ArgumentationFramework f8a() {
  return ArgumentationFramework({"a", "b", "c"}, {{"a", "b"}, {"b", "a"}, {"c", "b"}});
}

/// Reinstatement with rebuttal attack.
inline ArgumentationFramework f8b() {
  return ArgumentationFramework({"a", "b", "c"}, {{"b", "a"}, {"b", "c"}, {"c", "b"}});
}

}  // namespace fixtures

}  // namespace pirank
