// skewctl: verify / analyze / gallery / corpus front end.
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "skewring/analysis.hpp"
#include "skewring/corpus.hpp"
#include "skewring/diagnostic.hpp"
#include "skewring/gallery.hpp"

using namespace skewring;

namespace {

std::string read_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(Json const& j, bool json) {
  if (json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << render_text(j);
}

// One corpus instance: GF(2) always, GF(3) when the brute force fits.
Json corpus_row(CorpusEntry const& e, std::uint64_t seed, std::size_t cap, int& exit) {
  Json row;
  row["origin"] = e.origin;
  row["input"] = to_json(e.action);
  Json runs = Json::array();
  for (auto c : {Carrier::gf(2), Carrier::gf(3)}) {
    AnalyzeOptions opt;
    opt.carrier = c;
    opt.seed = seed;
    opt.bruteforce_cap = cap;
    opt.sample = 50;
    auto r = analyze_action(e.action, opt);
    if (!r.json["algebra"]["bruteforce"]["ran"].get<bool>() && c.modulus() != 2) continue;
    Json s;
    s["carrier"] = c.name();
    for (auto k : {"minimal", "principal", "free", "s_simple", "max_commutative", "simple", "mode"}) s[k] = r.json[k];
    s["checks_pass"] = r.exit == exit_code::ok;
    if (r.exit != exit_code::ok) {
      s["checks"] = r.json["checks"];
      exit = std::max(exit, r.exit);
    }
    runs.push_back(s);
  }
  row["runs"] = runs;
  return row;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skew inverse semigroup rings: validation, simplicity, Steinberg algebras"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "JSON output");

  std::string file, carrier_text, gallery_name;
  std::optional<std::size_t> window;
  std::size_t bf_cap = 14, n = 50;
  std::uint64_t seed = 1;
  bool require_bf = false, timings = false, show_input = false;
  std::optional<std::string> carrier_opt;

  auto* verify = app.add_subcommand("verify", "validate a semigroup, action or groupoid JSON file");
  verify->add_option("file", file)->required();
  verify->add_option("--window", window, "OmegaPlus window override");
  verify->add_flag("--json", json);

  auto* analyze = app.add_subcommand("analyze", "decide simplicity with a full report");
  analyze->add_option("file", file)->required();
  analyze->add_option("--carrier", carrier_opt, "gf:p | q | zmod:n");
  analyze->add_option("--bruteforce-cap", bf_cap, "GF(2) dimension cap for the exhaustive ideal survey")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--window", window, "OmegaPlus window override")->check(CLI::PositiveNumber);
  analyze->add_option("--seed", seed);
  analyze->add_flag("--require-bruteforce", require_bf, "exit 3 when the survey is skipped");
  analyze->add_flag("--timings", timings, "include wall-clock timings");
  analyze->add_flag("--json", json);

  auto* gallery = app.add_subcommand("gallery", "rebuild and analyze a named example");
  gallery->add_option("name", gallery_name)->required();
  gallery->add_option("--carrier", carrier_opt);
  gallery->add_option("--window", window)->check(CLI::PositiveNumber);
  gallery->add_option("--seed", seed);
  gallery->add_flag("--input", show_input, "print the example input JSON instead");
  gallery->add_flag("--json", json);

  auto* corpus = app.add_subcommand("corpus", "generate random actions and cross-check every verdict");
  corpus->add_option("--n", n)->check(CLI::PositiveNumber);
  corpus->add_option("--seed", seed);
  corpus->add_option("--bruteforce-cap", bf_cap)->check(CLI::PositiveNumber);
  corpus->add_flag("--json", json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      auto r = verify_json(parse_json_text(read_file(file)), window);
      emit(r.json, json);
      return r.exit;
    }
    if (*analyze || *gallery) {
      Json input;
      AnalyzeOptions opt;
      if (*gallery) {
        auto e = gallery_entry(gallery_name, window);
        if (show_input) {
          std::cout << e.input.dump(2) << "\n";
          return 0;
        }
        input = e.input;
        opt.carrier = Carrier::parse(carrier_opt.value_or(e.carrier));
        window.reset();
      } else {
        input = parse_json_text(read_file(file));
        opt.carrier = Carrier::parse(carrier_opt.value_or(input.value("carrier", std::string("gf:2"))));
      }
      opt.bruteforce_cap = bf_cap;
      opt.seed = seed;
      opt.require_bruteforce = require_bf;
      opt.timings = timings;
      auto r = analyze_json(input, opt, window);
      if (*gallery) r.json["gallery"] = gallery_name;
      emit(r.json, json);
      return r.exit;
    }
    if (*corpus) {
      CorpusOptions co;
      co.count = n;
      co.seed = seed;
      co.bruteforce_cap = bf_cap;
      auto entries = generate_corpus(co);
      std::vector<std::future<std::pair<Json, int>>> jobs;
      for (auto const& e : entries)
        jobs.push_back(std::async(std::launch::async, [&e, seed, bf_cap] {
          int ex = 0;
          Json row = corpus_row(e, seed, bf_cap, ex);
          return std::make_pair(row, ex);
        }));
      Json out;
      out["seed"] = seed;
      out["requested"] = n;
      out["generated"] = entries.size();
      Json rows = Json::array();
      int exit = 0;
      std::size_t simple = 0, runs = 0, failing = 0;
      for (auto& j : jobs) {
        auto [row, ex] = j.get();
        exit = std::max(exit, ex);
        for (auto const& r : row["runs"]) {
          ++runs;
          if (r["simple"] == true) ++simple;
          if (r["checks_pass"] == false) ++failing;
        }
        rows.push_back(row);
      }
      out["runs"] = runs;
      out["simple_runs"] = simple;
      out["failing_runs"] = failing;
      if (json)
        out["instances"] = rows;
      emit(out, json);
      return exit;
    }
  } catch (ValidationError const& e) {
    Json j;
    j["valid"] = false;
    j["axiom"] = e.diagnostic().axiom;
    j["message"] = e.diagnostic().message;
    j["witness"] = e.diagnostic().witness;
    emit(j, json);
    return exit_code::invalid;
  } catch (ParseError const& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return exit_code::invalid;
  } catch (CapExceeded const& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return exit_code::cap_exceeded;
  } catch (std::domain_error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code::invalid;
  }
  return 0;
}
