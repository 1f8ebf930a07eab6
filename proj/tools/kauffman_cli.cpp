/**
 * @file kauffman_cli.cpp
 * @brief Command-line front end: parses diagrams, selects engine and n,
 *        emits polynomials, and runs the cross-engine verification harness.
 *
 * Exit codes: 0 success (and verified match), 1 invalid configuration,
 * 2 malformed or unusable input, 3 engine mismatch under verification.
 */
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "diagram.hpp"
#include "fixtures.hpp"
#include "graphmodel.hpp"
#include "jaeger.hpp"
#include "kauffman_direct.hpp"
#include "laurent.hpp"

namespace {

using namespace kauffman;

/// One unit of work: a link diagram or a bare 4-valent graph.
struct Entry {
  bool is_graph = false;
  LinkDiagram diagram;
  FourValentGraph graph;
  std::string fixture;  ///< fixture name when run via --fixtures
};

/// Result of processing one entry.
struct Outcome {
  nlohmann::json object;
  std::string text;
  bool failed = false;
  bool mismatched = false;
};

LaurentPoly run_engine(const std::string& engine, const LinkDiagram& d, int n) {
  if (engine == "direct") return kauffman_skein(d, n);
  if (engine == "jaeger") return jaeger_kauffman(d, n);
  return kauffman_state_sum(d, n);
}

nlohmann::json value_json(const LaurentPoly& p) {
  return nlohmann::json{{"text", p.to_text()}, {"value", p.to_json()}};
}

/// Evaluates one entry with the requested engines; never throws.
Outcome process_entry(const Entry& e, const std::vector<std::string>& engines, int n) {
  Outcome out;
  nlohmann::json& j = out.object;
  if (!e.fixture.empty()) j["fixture"] = e.fixture;
  j["n"] = n;
  const std::string prefix = e.fixture.empty() ? "" : e.fixture + ": ";
  try {
    if (e.is_graph) {
      if (engines.size() == 1 && engines[0] != "graph")
        throw std::invalid_argument("engine '" + engines[0] +
                                    "' needs a link diagram, but the entry is a graph");
      const LaurentPoly p = graph_eval(e.graph, n);
      j["input"] = "graph";
      j["engine"] = "graph";
      j.update(value_json(p));
      out.text = prefix + p.to_text();
      return out;
    }
    j["input"] = "diagram";
    if (engines.size() == 1) {
      const LaurentPoly p = run_engine(engines[0], e.diagram, n);
      j["engine"] = engines[0];
      j.update(value_json(p));
      out.text = prefix + p.to_text();
      return out;
    }
    std::vector<LaurentPoly> values;
    nlohmann::json per;
    std::string parts;
    for (const std::string& engine : engines) {
      values.push_back(run_engine(engine, e.diagram, n));
      per[engine] = value_json(values.back());
      parts += (parts.empty() ? "" : "; ") + engine + "=" + values.back().to_text();
    }
    bool match = true;
    for (const LaurentPoly& v : values) match = match && v == values[0];
    j["engines"] = per;
    j["verdict"] = match ? "MATCH" : "MISMATCH";
    out.mismatched = !match;
    out.text = prefix + parts + "; verdict=" + (match ? "MATCH" : "MISMATCH");
  } catch (const std::exception& ex) {
    out.failed = true;
    out.object = nlohmann::json{{"error", ex.what()}};
    if (!e.fixture.empty()) out.object["fixture"] = e.fixture;
    out.text = prefix + std::string("error: ") + ex.what();
  }
  return out;
}

Entry entry_from_json_line(const std::string& line) {
  const nlohmann::json j = nlohmann::json::parse(line);
  Entry e;
  if (j.contains("over_slot")) {
    e.diagram = diagram_from_json(j);
  } else {
    e.is_graph = true;
    e.graph = graph_from_json(j);
  }
  return e;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Kauffman polynomial of unoriented link diagrams, computed by three "
      "independent engines (direct skein recursion, an oriented state sum, "
      "and a 4-valent graph state model).\n"
      "The environment variable SKEIN_MEMO_CAP bounds memo-cache entries "
      "(default unbounded)."};
  int n = 2;
  std::string engine = "all";
  std::string input_path;
  std::string pd_text;
  std::string format = "text";
  std::string dump_path;
  bool verify = false;
  bool fixtures = false;
  app.add_option("--n", n, "Rank parameter of SO(2n); must be >= 2")->capture_default_str();
  app.add_option("--engine", engine, "Engine: direct, jaeger, graph, or all")
      ->check(CLI::IsMember({"direct", "jaeger", "graph", "all"}))
      ->capture_default_str();
  app.add_option("--input", input_path,
                 "Batch file: one JSON diagram or graph per line; results stream "
                 "in input order");
  app.add_option("--pd", pd_text, "Inline planar-diagram code, e.g. \"X(1,4,2,3)\"");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--verify", verify,
               "Run every engine and report a match/mismatch verdict (exit 3 on "
               "mismatch)");
  app.add_option("--dump-states", dump_path,
                 "Write the oriented state table for the --pd diagram to this path");
  app.add_flag("--fixtures", fixtures, "Evaluate the built-in diagram corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return 1;
  }

  if (n < 2) {
    std::cerr << "error: --n must be at least 2\n";
    return 1;
  }
  const int sources = (app.count("--input") ? 1 : 0) + (app.count("--pd") ? 1 : 0) +
                      (fixtures ? 1 : 0);
  if (sources != 1) {
    std::cerr << "error: give exactly one of --input, --pd, --fixtures\n";
    return 1;
  }
  if (!dump_path.empty() && app.count("--pd") == 0) {
    std::cerr << "error: --dump-states needs an inline --pd diagram\n";
    return 1;
  }

  std::vector<std::string> engines;
  if (verify || engine == "all") {
    engines = {"direct", "jaeger", "graph"};
  } else {
    engines = {engine};
  }

  // Collect entries.
  std::vector<Entry> entries;
  std::vector<std::string> bad_lines;  // parse failures, reported in order
  std::vector<int> slot_of_entry;     // output slot for each parsed entry
  std::vector<Outcome> outcomes;
  int total_slots = 0;
  try {
    if (fixtures) {
      for (const std::string& name : fixture_names()) {
        Entry e;
        e.diagram = fixture(name);
        e.fixture = name;
        slot_of_entry.push_back(total_slots++);
        entries.push_back(std::move(e));
      }
    } else if (app.count("--pd")) {
      Entry e;
      e.diagram = parse_pd(pd_text);
      slot_of_entry.push_back(total_slots++);
      entries.push_back(std::move(e));
    } else {
      std::ifstream in(input_path);
      if (!in) {
        std::cerr << "error: cannot open " << input_path << "\n";
        return 1;
      }
      std::string line;
      while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const int slot = total_slots++;
        try {
          entries.push_back(entry_from_json_line(line));
          slot_of_entry.push_back(slot);
        } catch (const std::exception& ex) {
          bad_lines.resize(total_slots);
          bad_lines[slot] = ex.what();
        }
      }
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  bad_lines.resize(total_slots);
  outcomes.resize(total_slots);

  // Evaluate; batch entries may run concurrently, output stays in input order.
  const int m = static_cast<int>(entries.size());
#pragma omp parallel for schedule(dynamic) if (m > 1)
  for (int i = 0; i < m; ++i)
    outcomes[slot_of_entry[i]] = process_entry(entries[i], engines, n);

  bool any_failed = false;
  bool any_mismatch = false;
  for (int slot = 0; slot < total_slots; ++slot) {
    Outcome& out = outcomes[slot];
    if (!bad_lines[slot].empty()) {
      out.failed = true;
      out.object = nlohmann::json{{"error", bad_lines[slot]}};
      out.text = "error: " + bad_lines[slot];
    }
    any_failed = any_failed || out.failed;
    any_mismatch = any_mismatch || out.mismatched;
    if (format == "json") {
      std::cout << out.object.dump() << "\n";
    } else if (total_slots == 1 && !out.failed && out.object.contains("engines")) {
      // Single diagram, several engines: one labeled line each.
      for (const std::string& eng : engines)
        std::cout << eng << ": " << out.object["engines"][eng]["text"].get<std::string>()
                  << "\n";
      std::cout << "verdict: " << out.object["verdict"].get<std::string>() << "\n";
    } else {
      std::cout << out.text << "\n";
    }
  }

  if (!dump_path.empty() && !entries.empty()) {
    std::ofstream dump(dump_path);
    if (!dump) {
      std::cerr << "error: cannot write " << dump_path << "\n";
      return 1;
    }
    dump_states(entries[0].diagram, n, dump);
  }

  if (any_failed) return 2;
  if (any_mismatch) return 3;
  return 0;
}
