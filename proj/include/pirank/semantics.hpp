#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pirank/af.hpp"
#include "pirank/deadline.hpp"

namespace pirank {

enum class Label { in, out, undec };

inline std::string_view to_string(Label l) {
  switch (l) {
    case Label::in: return "in";
    case Label::out: return "out";
    case Label::undec: return "undec";
  }
  return "?";
}

enum class Semantics { conflict_free, admissible, complete, grounded, preferred, stable };

inline constexpr std::array kAllSemantics{Semantics::conflict_free, Semantics::admissible,
                                          Semantics::complete,      Semantics::grounded,
                                          Semantics::preferred,     Semantics::stable};

inline std::string_view to_string(Semantics s) {
  switch (s) {
    case Semantics::conflict_free: return "conflict-free";
    case Semantics::admissible: return "admissible";
    case Semantics::complete: return "complete";
    case Semantics::grounded: return "grounded";
    case Semantics::preferred: return "preferred";
    case Semantics::stable: return "stable";
  }
  return "?";
}

inline std::optional<Semantics> parse_semantics(std::string_view name) {
  for (auto s : kAllSemantics)
    if (to_string(s) == name) return s;
  return std::nullopt;
}

/// Canonical member order: by size, then lexicographically by argument index.
inline bool canonical_less(Mask a, Mask b) {
  const auto pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  return has_bit(a, static_cast<std::size_t>(std::countr_zero(a ^ b)));
}

/// Deduplicated collection of argument sets of one framework.
class ExtensionFamily {
 public:
  ExtensionFamily(FrameId frame, std::vector<Mask> members) : frame_(frame), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end(), canonical_less);
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  FrameId frame() const noexcept { return frame_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const std::vector<Mask>& masks() const& noexcept { return members_; }
  std::vector<Mask> masks() && noexcept { return std::move(members_); }

  bool contains(Mask m) const {
    return std::binary_search(members_.begin(), members_.end(), m, canonical_less);
  }
  bool contains(const ArgSet& s) const {
    if (s.frame() != frame_) throw ContractViolation("argument set belongs to a different framework");
    return contains(s.bits());
  }

  std::vector<ArgSet> sets() const {
    std::vector<ArgSet> out;
    for (Mask m : members_) out.emplace_back(frame_, m);
    return out;
  }

  friend bool operator==(const ExtensionFamily& a, const ExtensionFamily& b) {
    return a.frame_ == b.frame_ && a.members_ == b.members_;
  }

 private:
  FrameId frame_;
  std::vector<Mask> members_;
};

/// Total labelling of a framework.
class Labelling {
 public:
  Labelling(FrameId frame, std::vector<Label> labels) : frame_(frame), labels_(std::move(labels)) {}

  FrameId frame() const noexcept { return frame_; }
  Label operator[](std::size_t i) const { return labels_.at(i); }
  const std::vector<Label>& labels() const noexcept { return labels_; }

  Mask mask_of(Label l) const {
    Mask m = 0;
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == l) m |= bit(i);
    return m;
  }
  ArgSet in_set() const { return {frame_, mask_of(Label::in)}; }
  ArgSet out_set() const { return {frame_, mask_of(Label::out)}; }
  ArgSet undec_set() const { return {frame_, mask_of(Label::undec)}; }

 private:
  FrameId frame_;
  std::vector<Label> labels_;
};

/// in = E, out = E+, undec = the rest. Arguments in E that E attacks stay in.
inline Labelling labelling_from_inset(const ArgumentationFramework& af, const ArgSet& in) {
  af.require_own(in);
  const Mask out = attacked_by(af, in.bits()) & ~in.bits();
  std::vector<Label> labels(af.size(), Label::undec);
  for (std::size_t i = 0; i < af.size(); ++i) {
    if (in.contains(i))
      labels[i] = Label::in;
    else if (has_bit(out, i))
      labels[i] = Label::out;
  }
  return {af.frame_id(), std::move(labels)};
}

/// Both reinstatement conditions: in arguments have only out attackers and
/// out arguments have an in attacker.
inline bool is_reinstatement_labelling(const ArgumentationFramework& af, const Labelling& l) {
  if (l.frame() != af.frame_id()) throw ContractViolation("labelling belongs to a different framework");
  const Mask in = l.mask_of(Label::in), out = l.mask_of(Label::out);
  for (std::size_t a = 0; a < af.size(); ++a) {
    if (has_bit(in, a) && (af.attackers_mask(a) & ~out) != 0) return false;
    if (has_bit(out, a) && (af.attackers_mask(a) & in) == 0) return false;
  }
  return true;
}

namespace detail {

inline bool conflict_free(const ArgumentationFramework& af, Mask s, Mask plus) {
  (void)af;
  return (plus & s) == 0;
}

inline bool admissible(const ArgumentationFramework& af, Mask s, Mask plus) {
  return conflict_free(af, s, plus) && (attackers_of(af, s) & ~plus) == 0;
}

/// Arguments all of whose attackers are in `plus`.
inline Mask defended(const ArgumentationFramework& af, Mask plus) {
  Mask d = 0;
  for (std::size_t a = 0; a < af.size(); ++a)
    if ((af.attackers_mask(a) & ~plus) == 0) d |= bit(a);
  return d;
}

inline bool complete(const ArgumentationFramework& af, Mask s, Mask plus) {
  return admissible(af, s, plus) && (defended(af, plus) & ~s) == 0;
}

inline bool stable(const ArgumentationFramework& af, Mask s, Mask plus) {
  return conflict_free(af, s, plus) && (s | plus) == af.full_mask();
}

inline std::vector<Mask> maximal(std::vector<Mask> sets) {
  std::vector<Mask> out;
  for (Mask s : sets) {
    const bool dominated = std::any_of(sets.begin(), sets.end(), [s](Mask t) {
      return t != s && (s & ~t) == 0;
    });
    if (!dominated) out.push_back(s);
  }
  return out;
}

inline std::vector<Mask> minimal(const std::vector<Mask>& sets) {
  std::vector<Mask> out;
  for (Mask s : sets) {
    const bool dominated = std::any_of(sets.begin(), sets.end(), [s](Mask t) {
      return t != s && (t & ~s) == 0;
    });
    if (!dominated) out.push_back(s);
  }
  return out;
}

}  // namespace detail

inline ArgSet grounded_fixpoint(const ArgumentationFramework& af) {
  Mask in = 0;
  Mask out = 0;
  for (;;) {
    Mask next_in = in;
    for (std::size_t a = 0; a < af.size(); ++a)
      if ((af.attackers_mask(a) & ~out) == 0) next_in |= bit(a);
    const Mask next_out = attacked_by(af, next_in);
    if (next_in == in && next_out == out) break;
    in = next_in;
    out = next_out;
  }
  return af.set(in);
}

/// In-sets of every labelling of the given semantics, by exhaustive subset scan.
inline ExtensionFamily enumerate(const ArgumentationFramework& af, Semantics sigma,
                                 const Deadline& deadline = {}) {
  if (sigma == Semantics::grounded) return {af.frame_id(), {grounded_fixpoint(af).bits()}};

  const std::uint64_t count = std::uint64_t{1} << af.size();
  std::vector<Mask> found;
  const Semantics scan = sigma == Semantics::preferred ? Semantics::complete : sigma;
  for (std::uint64_t raw = 0; raw < count; ++raw) {
    deadline.poll(raw);
    const Mask s = static_cast<Mask>(raw);
    const Mask plus = attacked_by(af, s);
    bool ok = false;
    switch (scan) {
      case Semantics::conflict_free: ok = detail::conflict_free(af, s, plus); break;
      case Semantics::admissible: ok = detail::admissible(af, s, plus); break;
      case Semantics::complete: ok = detail::complete(af, s, plus); break;
      case Semantics::stable: ok = detail::stable(af, s, plus); break;
      default: break;
    }
    if (ok) found.push_back(s);
  }
  if (sigma == Semantics::preferred) found = detail::maximal(std::move(found));
  return {af.frame_id(), std::move(found)};
}

inline bool satisfies(const ArgumentationFramework& af, const ArgSet& e, Semantics sigma) {
  af.require_own(e);
  const Mask s = e.bits();
  const Mask plus = attacked_by(af, s);
  switch (sigma) {
    case Semantics::conflict_free: return detail::conflict_free(af, s, plus);
    case Semantics::admissible: return detail::admissible(af, s, plus);
    case Semantics::complete: return detail::complete(af, s, plus);
    case Semantics::stable: return detail::stable(af, s, plus);
    case Semantics::grounded:
    case Semantics::preferred: return enumerate(af, sigma).contains(s);
  }
  return false;
}

enum class Acceptance { sceptical, credulous_only, rejected, degenerate };

inline std::string_view to_string(Acceptance a) {
  switch (a) {
    case Acceptance::sceptical: return "sceptical";
    case Acceptance::credulous_only: return "credulous-only";
    case Acceptance::rejected: return "rejected";
    case Acceptance::degenerate: return "degenerate";
  }
  return "?";
}

inline Acceptance acceptance_status(const ExtensionFamily& family, std::size_t index) {
  if (family.empty()) return Acceptance::degenerate;
  std::size_t hits = 0;
  for (Mask m : family.masks()) hits += has_bit(m, index) ? 1 : 0;
  if (hits == family.size()) return Acceptance::sceptical;
  return hits == 0 ? Acceptance::rejected : Acceptance::credulous_only;
}

inline Acceptance acceptance_status(const ArgumentationFramework& af, Semantics sigma,
                                    std::string_view a) {
  const auto i = af.index(a);
  return acceptance_status(enumerate(af, sigma), i);
}

/// { E+ : E in family }, deduplicated.
inline ExtensionFamily out_family(const ArgumentationFramework& af, const ExtensionFamily& family) {
  if (family.frame() != af.frame_id()) throw ContractViolation("family belongs to a different framework");
  std::vector<Mask> outs;
  outs.reserve(family.size());
  for (Mask m : family.masks()) outs.push_back(attacked_by(af, m));
  return {af.frame_id(), std::move(outs)};
}

inline std::string render_set(const ArgumentationFramework& af, Mask m) {
  std::string out = "{";
  bool first = true;
  for (const auto& name : af.names(m)) {
    if (!first) out += ',';
    out += name;
    first = false;
  }
  return out + "}";
}

/// `{},{a},{a,c}`
inline std::string render_family(const ArgumentationFramework& af, const ExtensionFamily& family) {
  std::string out;
  for (Mask m : family.masks()) {
    if (!out.empty()) out += ',';
    out += render_set(af, m);
  }
  return out;
}

}  // namespace pirank
