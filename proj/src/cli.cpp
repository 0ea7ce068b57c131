#include "graphmonoid/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "graphmonoid/api.hpp"
#include "graphmonoid/error.hpp"

namespace graphmonoid::cli {

namespace {

using api::json;

std::string render_element(const json& element) {
  std::string out;
  for (const auto& term : element["terms"]) {
    if (!out.empty()) out += " + ";
    const auto mult = term["mult"].get<std::uint64_t>();
    if (mult != 1) out += std::to_string(mult) + "*";
    const auto& gen = term["gen"];
    if (gen["kind"] == "v") {
      out += "a_" + gen["v"].get<std::string>();
    } else {
      std::string ids;
      for (const auto& e : gen["S"]) ids += (ids.empty() ? "" : ",") + e.get<std::string>();
      out += "a_{" + gen["v"].get<std::string>() + ",{" + ids + "}}";
    }
  }
  return out.empty() ? "0" : out;
}

bool is_element(const json& j) {
  return j.is_object() && j.size() == 1 && j.contains("terms");
}

std::string scalar(const json& j) {
  return j.is_string() ? j.get<std::string>() : j.dump();
}

// Indented key/value rendering; elements are written as formal sums.
void render(const json& j, std::ostream& out, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_element(value)) {
        out << pad << key << ": " << render_element(value) << '\n';
      } else if (value.is_structured() && !value.empty()) {
        out << pad << key << ":\n";
        render(value, out, indent + 2);
      } else {
        out << pad << key << ": " << (value.is_structured() ? value.dump() : scalar(value)) << '\n';
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (is_element(value)) {
        out << pad << "- " << render_element(value) << '\n';
      } else if (value.is_structured()) {
        out << pad << "-\n";
        render(value, out, indent + 2);
      } else {
        out << pad << "- " << scalar(value) << '\n';
      }
    }
  } else {
    out << pad << scalar(j) << '\n';
  }
}

std::optional<std::size_t> budget_from_env(std::ostream& err) {
  const char* raw = std::getenv("GRAPHMONOID_BUDGET");
  if (raw == nullptr || *raw == '\0') return CompletionOptions{}.budget;
  std::size_t value = 0;
  const char* end = raw + std::char_traits<char>::length(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end || value == 0) {
    err << "error: GRAPHMONOID_BUDGET must be a positive integer, got '" << raw
        << "'\n";
    return std::nullopt;
  }
  return value;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  auto env_budget = budget_from_env(err);
  if (!env_budget) return 2;

  CLI::App app{"Graph monoid toolkit"};
  app.name("graphmonoid");
  app.fallthrough();
  app.require_subcommand(1);

  std::string format = "json";
  api::Options opts;
  opts.budget = *env_budget;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--budget", opts.budget,
                 "Completion budget in critical-pair reductions "
                 "(default from GRAPHMONOID_BUDGET, else 100000)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", opts.seed, "Seed for sampled corpora");

  std::string graph, element, lhs, rhs, source, target, morphism, system;
  std::size_t level = 0, degree = 3, samples = 50, max_degree = 5;
  std::function<json()> action;

  auto graph_opt = [&](CLI::App* c) {
    c->add_option("--graph", graph, "Graph JSON file")->required();
  };
  auto morphism_opts = [&](CLI::App* c) {
    c->add_option("--source", source, "Source graph JSON file")->required();
    c->add_option("--target", target, "Target graph JSON file")->required();
    c->add_option("--morphism", morphism, "Morphism JSON file")->required();
  };
  auto read = [](const std::string& path) { return io::read_file(path); };

  auto* c = app.add_subcommand("validate", "Check a graph and classify its vertices");
  graph_opt(c);
  c->callback([&] { action = [&] { return api::validate(read(graph)); }; });

  c = app.add_subcommand("present", "Generators and relations of the graph monoid");
  graph_opt(c);
  c->callback([&] { action = [&] { return api::present(read(graph)); }; });

  c = app.add_subcommand("normal-form", "Canonical form of an element");
  graph_opt(c);
  c->add_option("--element", element, "Element JSON file")->required();
  c->callback([&] {
    action = [&] { return api::normal_form(read(graph), read(element), opts); };
  });

  c = app.add_subcommand("equal", "Decide equality with a certificate");
  graph_opt(c);
  c->add_option("--lhs", lhs, "Element JSON file")->required();
  c->add_option("--rhs", rhs, "Element JSON file")->required();
  c->callback([&] {
    action = [&] { return api::equal(read(graph), read(lhs), read(rhs), opts); };
  });

  c = app.add_subcommand("desingularize", "Truncated desingularization");
  graph_opt(c);
  c->add_option("--level", level, "Tail length N")->required()->check(CLI::PositiveNumber);
  c->callback([&] {
    action = [&] { return api::desingularize(read(graph), level); };
  });

  auto* phi_cmd = app.add_subcommand("phi", "Map an element into the desingularization");
  {
    graph_opt(phi_cmd);
    phi_cmd->add_option("--element", element, "Element JSON file")->required();
    phi_cmd->add_option("--level", level, "Tail length N (default: smallest that fits)")
        ->check(CLI::PositiveNumber);
    phi_cmd->callback([&] {
      action = [&, phi_cmd] {
        std::optional<std::size_t> n;
        if (phi_cmd->count("--level") > 0) n = level;
        return api::phi(read(graph), read(element), n);
      };
    });
  }

  c = app.add_subcommand("psi", "Map an element of the desingularization back");
  graph_opt(c);
  c->add_option("--element", element, "Element JSON file over the desingularized graph")
      ->required();
  c->add_option("--level", level, "Tail length N")->required()->check(CLI::PositiveNumber);
  c->callback([&] {
    action = [&] { return api::psi(read(graph), read(element), level); };
  });

  c = app.add_subcommand("ck-check", "Decide whether a graph morphism is CK");
  morphism_opts(c);
  c->callback([&] {
    action = [&] { return api::ck_check(read(source), read(target), read(morphism)); };
  });

  c = app.add_subcommand("induced-map", "Monoid morphism induced by a CK-morphism");
  morphism_opts(c);
  c->callback([&] {
    action = [&] {
      return api::induced_map(read(source), read(target), read(morphism));
    };
  });

  c = app.add_subcommand("colimit", "Colimit of a chain of CK-morphisms");
  c->add_option("--system", system, "System JSON file")->required();
  c->callback([&] { action = [&] { return api::colimit(read(system)); }; });

  c = app.add_subcommand("continuity-check",
                         "Compare equality along a chain with equality at the top");
  c->add_option("--system", system, "System JSON file")->required();
  c->add_option("--degree", degree, "Exhaustive sample degree")->capture_default_str();
  c->callback([&] {
    action = [&] { return api::continuity_check(read(system), degree, opts); };
  });

  c = app.add_subcommand("oracle-check",
                         "Compare the word problem with path counts on a DAG");
  graph_opt(c);
  c->add_option("--samples", samples, "Number of element pairs")->capture_default_str();
  c->add_option("--max-degree", max_degree, "Largest sampled degree")->capture_default_str()
      ->check(CLI::PositiveNumber);
  c->callback([&] {
    action = [&] {
      return api::oracle_check(read(graph), samples, max_degree, opts);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    json result = action();
    if (format == "text")
      render(result, out, 0);
    else
      out << result.dump(2) << '\n';
    return 0;
  } catch (const BudgetExhausted& e) {
    err << "undecided: " << e.what() << '\n';
    return 3;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace graphmonoid::cli
