#pragma once

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pirank/http_service.hpp"
#include "pirank/service.hpp"

namespace pirank::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kSizeLimit = 3,
  kInvalidFlags = 4,
  kBudget = 5,
};

namespace detail {

inline std::vector<std::string> semantics_names() {
  std::vector<std::string> out;
  for (auto s : kAllSemantics) out.emplace_back(to_string(s));
  return out;
}

inline std::vector<std::string> index_names() {
  std::vector<std::string> out;
  for (auto p : kAllIndexes) out.emplace_back(to_string(p));
  return out;
}

inline std::vector<std::string> property_names(bool with_all) {
  std::vector<std::string> out;
  if (with_all) out.emplace_back("all");
  for (auto p : kAllProperties) out.emplace_back(to_string(p));
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void print_warnings(const Json& payload, std::ostream& err) {
  for (const auto& w : payload["warnings"]) err << "warning: " << w.get<std::string>() << "\n";
}

inline std::string rank_text(const Json& result) {
  std::ostringstream out;
  out << std::left << std::setw(12) << "argument" << std::setw(12) << "pi_in" << std::setw(12) << "pi_out"
      << "class\n";
  for (const auto& row : result["scores"]) {
    out << std::setw(12) << row["argument"].get<std::string>() << std::setw(12)
        << row["pi_in"].get<std::string>() << std::setw(12) << row["pi_out"].get<std::string>()
        << row["class"].get<std::size_t>() << "\n";
  }
  out << "ranking: " << result["ranking"].get<std::string>() << "\n";
  return out.str();
}

inline std::string family_text(const Json& result, bool labellings) {
  std::ostringstream out;
  auto set_text = [](const Json& names) {
    std::string s = "{";
    for (std::size_t k = 0; k < names.size(); ++k) s += (k ? "," : "") + names[k].get<std::string>();
    return s + "}";
  };
  if (labellings) {
    for (const auto& l : result["labellings"])
      out << "in=" << set_text(l["in"]) << " out=" << set_text(l["out"]) << " undec=" << set_text(l["undec"])
          << "\n";
  } else {
    for (const auto& e : result["extensions"]) out << set_text(e) << "\n";
  }
  return out.str();
}

}  // namespace detail

/// Runs the command line; output goes to `out`, diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank the arguments of abstract argumentation frameworks with power indexes", "pirank"};
  app.require_subcommand(1);

  std::string file, semantics = "complete", index = "shapley", format = "text", output, property = "all";
  std::string search;
  bool exact = false, count = false, labellings = false;
  std::size_t max_args = kDefaultMaxArguments, samples = 10000;
  std::uint64_t seed = 1;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::int64_t timeout_ms = 10000;

  auto add_semantics = [&](CLI::App* cmd) {
    cmd->add_option("--semantics,-s", semantics, "Dung semantics")
        ->check(CLI::IsMember(detail::semantics_names()));
  };
  auto add_index = [&](CLI::App* cmd) {
    cmd->add_option("--index,-i", index, "power index")->check(CLI::IsMember(detail::index_names()));
  };

  auto* rank_cmd = app.add_subcommand("rank", "score and rank every argument");
  rank_cmd->add_option("file", file, "framework in APX or JSON")->required();
  add_semantics(rank_cmd);
  add_index(rank_cmd);
  rank_cmd->add_option("--format,-f", format, "text, tsv or json")
      ->check(CLI::IsMember({"text", "tsv", "json"}));
  rank_cmd->add_flag("--exact", exact, "compare exact rationals and print them");
  rank_cmd->add_option("--output,-o", output, "write the result to this file");
  rank_cmd->add_option("--max-args", max_args, "argument limit")->check(CLI::Range(std::size_t{0}, kHardArgumentCap));

  auto* ext_cmd = app.add_subcommand("extensions", "list the extensions of a semantics");
  ext_cmd->add_option("file", file, "framework in APX or JSON")->required();
  add_semantics(ext_cmd);
  ext_cmd->add_option("--format,-f", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  ext_cmd->add_flag("--count", count, "print only the number of extensions");
  ext_cmd->add_flag("--labellings", labellings, "print in/out/undec labellings");
  ext_cmd->add_option("--max-args", max_args, "argument limit")->check(CLI::Range(std::size_t{0}, kHardArgumentCap));

  auto* prop_cmd = app.add_subcommand("properties", "check ranking properties or search for counterexamples");
  prop_cmd->add_option("file", file, "framework in APX or JSON");
  add_semantics(prop_cmd);
  add_index(prop_cmd);
  prop_cmd->add_option("--property,-p", property, "property id or 'all'")
      ->check(CLI::IsMember(detail::property_names(true)));
  prop_cmd->add_option("--format,-f", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  prop_cmd->add_flag("--exact", exact, "compare exact rationals");
  prop_cmd->add_option("--search", search, "search random frameworks for a violation of this property")
      ->check(CLI::IsMember(detail::property_names(false)));
  auto* max_opt = prop_cmd->add_option("--max-args", max_args, "argument limit (search: 1..7)")
                      ->check(CLI::Range(std::size_t{0}, kHardArgumentCap));
  prop_cmd->add_option("--samples", samples, "random frameworks to try after the exhaustive sweep");
  prop_cmd->add_option("--seed", seed, "random seed");

  auto* serve_cmd = app.add_subcommand("serve", "run the JSON solve service");
  serve_cmd->add_option("--host", host, "bind address");
  serve_cmd->add_option("--port", port, "port")->check(CLI::Range(1, 65535));
  serve_cmd->add_option("--max-args", max_args, "argument limit per request")
      ->check(CLI::Range(std::size_t{0}, kHardArgumentCap));
  serve_cmd->add_option("--timeout-ms", timeout_ms, "wall-clock budget per request")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidFlags;
  }

  std::ostringstream buffer;
  try {
    if (serve_cmd->parsed()) {
      ServiceConfig config;
      config.host = host;
      config.port = port;
      config.max_args = max_args;
      config.timeout = std::chrono::milliseconds(timeout_ms);
      SolveService service(config);
      if (!service.bind()) {
        err << "error: cannot bind " << host << ":" << port << "\n";
        return kFailure;
      }
      err << "listening on " << host << ":" << port << "\n";
      return service.listen_after_bind() ? kOk : kFailure;
    }

    if (prop_cmd->parsed() && !search.empty()) {
      const std::size_t search_args = max_opt->count() ? max_args : 6;
      if (search_args == 0 || search_args > kMaxSearchArguments) {
        err << "error: --max-args must be in 1.." << kMaxSearchArguments << " for --search\n";
        return kInvalidFlags;
      }
      SearchOptions options;
      options.max_args = search_args;
      options.samples = samples;
      options.seed = seed;
      options.mode = exact ? CompareMode::exact : CompareMode::rounded;
      const auto sigma = *parse_semantics(semantics);
      const auto pi = *parse_index(index);
      const auto report = search_counterexample(*parse_property(search), sigma, pi, options);
      if (format == "json") {
        Json j;
        j["outcome"] = to_string(report.outcome);
        j["tested"] = report.tested;
        j["skipped"] = report.skipped;
        j["report"] = report.report ? to_json(*report.report) : Json(nullptr);
        out << j.dump() << "\n";
      } else {
        out << search << " " << semantics << " " << index << ": " << to_string(report.outcome) << " (tested "
            << report.tested << ", skipped " << report.skipped << ")\n";
        if (report.report && report.report->witness) {
          const auto& w = *report.report->witness;
          out << "pair: " << w.pair.first << " " << w.pair.second << "\n";
          out << serialize(w.framework, Format::apx) << "\n";
        }
      }
      return kOk;
    }

    if (file.empty()) {
      err << "error: a framework file is required\n";
      return kInvalidFlags;
    }

    SolveRequest req;
    req.framework = parse_framework(detail::read_file(file), max_args);
    req.semantics = *parse_semantics(semantics);
    req.options.exact = exact;
    req.options.max_args = max_args;

    if (rank_cmd->parsed()) {
      req.task = Task::rank;
      req.index = parse_index(index);
      const auto payload = solve_payload(req);
      if (format == "json") {
        buffer << payload.dump() << "\n";
      } else {
        detail::print_warnings(payload, err);
        if (format == "tsv") {
          const auto mode = exact ? CompareMode::exact : CompareMode::rounded;
          const auto ranked = rank_framework(req.framework, req.semantics, *req.index, mode);
          buffer << scores_tsv(ranked.scores, ranked.ranking, exact);
          buffer << "# ranking: " << payload["result"]["ranking"].get<std::string>() << "\n";
        } else {
          buffer << detail::rank_text(payload["result"]);
        }
      }
    } else if (ext_cmd->parsed()) {
      req.task = labellings ? Task::labellings : Task::extensions;
      const auto payload = solve_payload(req);
      if (format == "json") {
        buffer << payload.dump() << "\n";
      } else {
        detail::print_warnings(payload, err);
        if (count)
          buffer << payload["result"]["count"].get<std::size_t>() << "\n";
        else
          buffer << detail::family_text(payload["result"], labellings);
      }
    } else if (prop_cmd->parsed()) {
      req.task = Task::properties;
      req.index = parse_index(index);
      if (property != "all") req.property = parse_property(property);
      const auto payload = solve_payload(req);
      if (format == "json") {
        buffer << payload.dump() << "\n";
      } else {
        detail::print_warnings(payload, err);
        for (const auto& r : payload["result"]["reports"]) {
          buffer << r["property"].get<std::string>() << "\t" << r["verdict"].get<std::string>();
          if (!r["witness"].is_null())
            buffer << "\t" << r["witness"]["pair"][0].get<std::string>() << ","
                   << r["witness"]["pair"][1].get<std::string>();
          buffer << "\n";
        }
      }
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const LimitError& e) {
    err << "error: " << e.what() << "\n";
    return kSizeLimit;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  if (!output.empty()) {
    std::ofstream f(output, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << output << "'\n";
      return kFailure;
    }
    f << buffer.str();
  } else {
    out << buffer.str();
  }
  return kOk;
}

}  // namespace pirank::cli
