#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pirank/af.hpp"
#include "pirank/deadline.hpp"
#include "pirank/power_index.hpp"
#include "pirank/properties.hpp"
#include "pirank/ranking.hpp"
#include "pirank/semantics.hpp"

namespace pirank {

using Json = nlohmann::ordered_json;

enum class Task { extensions, labellings, rank, properties };

inline std::string_view to_string(Task t) {
  switch (t) {
    case Task::extensions: return "extensions";
    case Task::labellings: return "labellings";
    case Task::rank: return "rank";
    case Task::properties: return "properties";
  }
  return "?";
}

inline std::optional<Task> parse_task(std::string_view name) {
  for (auto t : {Task::extensions, Task::labellings, Task::rank, Task::properties})
    if (to_string(t) == name) return t;
  return std::nullopt;
}

/// Malformed or inconsistent solve request.
class RequestError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

struct SolveOptions {
  bool exact = false;
  std::size_t max_args = kDefaultMaxArguments;
};

struct SolveRequest {
  ArgumentationFramework framework;
  Semantics semantics = Semantics::complete;
  Task task = Task::rank;
  std::optional<PowerIndex> index;
  /// properties task only; empty means all.
  std::optional<Property> property;
  SolveOptions options;
};

namespace warnings {

inline std::string deegan_packel_trivial(Semantics s) {
  return "deegan-packel is not meaningful for " + std::string(to_string(s)) +
         ": the empty set is the only minimal winning coalition, so every argument scores 0";
}

inline std::string no_extension(Semantics s) {
  return "no " + std::string(to_string(s)) + " extension";
}

inline std::string degenerate_ranking(Semantics s) {
  return no_extension(s) + ": all scores are zero and the ranking is a single class";
}

inline const std::string kEmptyFramework = "empty framework";

}  // namespace warnings

/// Parses a request object. `server_max_args` caps the request's own limit.
inline SolveRequest parse_solve_request(const nlohmann::json& body,
                                        std::size_t server_max_args = kDefaultMaxArguments) {
  if (!body.is_object()) throw RequestError("request body must be a JSON object");
  auto text_field = [&body](const char* key) -> std::optional<std::string> {
    if (!body.contains(key) || body[key].is_null()) return std::nullopt;
    if (!body[key].is_string()) throw RequestError(std::string("'") + key + "' must be a string");
    return body[key].get<std::string>();
  };

  SolveRequest req;
  if (body.contains("options")) {
    const auto& o = body["options"];
    if (!o.is_object()) throw RequestError("'options' must be an object");
    if (o.contains("exact")) {
      if (!o["exact"].is_boolean()) throw RequestError("'options.exact' must be a boolean");
      req.options.exact = o["exact"].get<bool>();
    }
    if (o.contains("max_args")) {
      if (!o["max_args"].is_number_integer() || o["max_args"].get<std::int64_t>() < 0)
        throw RequestError("'options.max_args' must be a non-negative integer");
      req.options.max_args = o["max_args"].get<std::size_t>();
      if (req.options.max_args > kHardArgumentCap)
        throw RequestError("'options.max_args' exceeds the hard cap of " + std::to_string(kHardArgumentCap));
    }
  }
  req.options.max_args = std::min(req.options.max_args, server_max_args);

  const auto task = text_field("task");
  if (!task) throw RequestError("'task' is required");
  const auto parsed_task = parse_task(*task);
  if (!parsed_task) throw RequestError("unknown task '" + *task + "'");
  req.task = *parsed_task;

  const auto semantics = text_field("semantics");
  if (!semantics) throw RequestError("'semantics' is required");
  const auto parsed_semantics = parse_semantics(*semantics);
  if (!parsed_semantics) throw RequestError("unknown semantics '" + *semantics + "'");
  req.semantics = *parsed_semantics;

  if (const auto index = text_field("index")) {
    req.index = parse_index(*index);
    if (!req.index) throw RequestError("unknown index '" + *index + "'");
  }
  if (req.task == Task::rank && !req.index) throw RequestError("'index' is required for task 'rank'");

  if (const auto property = text_field("property"); property && *property != "all") {
    req.property = parse_property(*property);
    if (!req.property) throw RequestError("unknown property '" + *property + "'");
  }

  if (!body.contains("framework")) throw RequestError("'framework' is required");
  // LimitError passes through untouched so callers can map it separately.
  req.framework = framework_from_json(body["framework"], req.options.max_args);
  return req;
}

namespace detail {

inline Json names_json(const ArgumentationFramework& af, Mask m) {
  Json arr = Json::array();
  for (const auto& n : af.names(m)) arr.push_back(n);
  return arr;
}

/// Same spacing as greyscale(), rendered without going through double.
inline std::string shade_string(std::size_t cls, std::size_t classes) {
  if (classes <= 1) return Decimal5::from_scaled(Decimal5::kScale).str();
  const auto top = static_cast<std::int64_t>(classes - 1);
  return round5(ExactValue(top - static_cast<std::int64_t>(cls), top)).str();
}

}  // namespace detail

/// The deterministic part of a solve: {"task", "result", "warnings"}.
inline Json solve_payload(const SolveRequest& req, const Deadline& deadline = {}) {
  const auto& af = req.framework;
  Json warn = Json::array();
  Json result;
  result["semantics"] = to_string(req.semantics);
  if (af.empty()) warn.push_back(warnings::kEmptyFramework);

  switch (req.task) {
    case Task::extensions:
    case Task::labellings: {
      if (req.index) warn.push_back("index is ignored for task '" + std::string(to_string(req.task)) + "'");
      const auto family = enumerate(af, req.semantics, deadline);
      if (family.empty()) warn.push_back(warnings::no_extension(req.semantics));
      result["count"] = family.size();
      Json list = Json::array();
      for (Mask m : family.masks()) {
        if (req.task == Task::extensions) {
          list.push_back(detail::names_json(af, m));
        } else {
          const auto l = labelling_from_inset(af, af.set(m));
          Json row;
          row["in"] = detail::names_json(af, l.mask_of(Label::in));
          row["out"] = detail::names_json(af, l.mask_of(Label::out));
          row["undec"] = detail::names_json(af, l.mask_of(Label::undec));
          list.push_back(row);
        }
      }
      result[req.task == Task::extensions ? "extensions" : "labellings"] = list;
      break;
    }

    case Task::rank: {
      const PowerIndex index = *req.index;
      result["index"] = to_string(index);
      if (index == PowerIndex::deegan_packel &&
          (req.semantics == Semantics::conflict_free || req.semantics == Semantics::admissible))
        warn.push_back(warnings::deegan_packel_trivial(req.semantics));
      if (!af.empty() && enumerate(af, req.semantics, deadline).empty())
        warn.push_back(warnings::degenerate_ranking(req.semantics));

      const auto mode = req.options.exact ? CompareMode::exact : CompareMode::rounded;
      const auto ranked = rank_framework(af, req.semantics, index, mode, deadline);
      Json scores = Json::array();
      for (const auto& s : ranked.scores) {
        Json row;
        row["argument"] = s.argument;
        row["pi_in"] = s.pi_in_5dp.str();
        row["pi_out"] = s.pi_out_5dp.str();
        if (req.options.exact) {
          row["pi_in_exact"] = to_fraction_string(s.pi_in);
          row["pi_out_exact"] = to_fraction_string(s.pi_out);
        }
        row["class"] = ranked.ranking.class_of(s.argument);
        row["shade"] = detail::shade_string(ranked.ranking.class_of(s.argument), ranked.ranking.class_count());
        scores.push_back(row);
      }
      result["scores"] = scores;
      result["ranking"] = render_ranking(ranked.ranking);
      result["classes"] = ranked.ranking.classes();
      break;
    }

    case Task::properties: {
      const PowerIndex index = req.index.value_or(PowerIndex::shapley);
      result["index"] = to_string(index);
      CheckOptions check;
      check.mode = req.options.exact ? CompareMode::exact : CompareMode::rounded;
      check.deadline = deadline;
      Json reports = Json::array();
      std::vector<Property> which;
      if (req.property)
        which.push_back(*req.property);
      else
        which.assign(kAllProperties.begin(), kAllProperties.end());
      for (auto p : which) reports.push_back(to_json(check_property(af, req.semantics, index, p, check)));
      result["reports"] = reports;
      break;
    }
  }

  Json payload;
  payload["task"] = to_string(req.task);
  payload["result"] = result;
  payload["warnings"] = warn;
  return payload;
}

/// Payload plus wall-clock timing, as returned by the HTTP endpoint.
inline Json solve_response(const SolveRequest& req, const Deadline& deadline = {}) {
  const auto start = std::chrono::steady_clock::now();
  Json response = solve_payload(req, deadline);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  response["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  return response;
}

/// Removes the timing field so payloads from different runs compare byte for byte.
inline std::string payload_bytes(Json response) {
  response.erase("timing_ms");
  return response.dump();
}

}  // namespace pirank
