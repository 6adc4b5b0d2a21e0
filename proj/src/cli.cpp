#include "posring/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "posring/io.hpp"

namespace posring {

using nlohmann::json;

namespace {

struct Options {
  std::string file;
  std::string mode;
  bool witness = false;
  bool json_out = false;
  bool text_out = false;
  int degree_cap = kDefaultDegreeCap;
  std::size_t cover_cap = kDefaultCoverCap;
  std::size_t subset_cap = kDefaultSubsetCap;
  unsigned jobs = 1;
  std::optional<int> scale_exponent;
};

std::string read_file(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::invalid_input, "cannot read " + path);
  buf << in.rdbuf();
  return buf.str();
}

json witness_json(const std::vector<IntPoly>& fs) {
  json a = json::array();
  for (const auto& f : fs) a.push_back(to_json(f));
  return a;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_solve(const Options& opt, std::ostream& out, std::ostream& err) {
  auto t0 = std::chrono::steady_clock::now();
  ProblemFile pf = parse_input(read_file(opt.file));
  const auto* eq = std::get_if<EquationProblem>(&pf);
  if (!eq) throw Error(Errc::schema, "input: expected an \"equation\" problem");

  Decision d = decide(eq->hs, opt.witness, opt.degree_cap);
  json r;
  r["status"] = to_string(d.status);
  r["reason"] = to_string(d.reason);
  if (d.certificate) r["certificate"] = to_json(*d.certificate);
  if (d.witness) {
    r["witness"] = witness_json(d.witness->fs);
    r["witness_degree"] = d.witness->degree;
  }
  r["witness_status"] = to_string(d.witness_status);
  json trace;
  trace["zero_entries"] = d.zero_entries;
  if (d.normalization) {
    trace["gcd_removed"] = to_json(d.normalization->gcd_removed);
    trace["x_divisions"] = d.normalization->x_divisions;
    trace["x_powers"] = d.normalization->x_powers;
  }
  r["trace"] = trace;
  r["timing"] = json{{"elapsed_ms", elapsed_ms(t0)}};
  out << emit_output(r, opt.text_out ? OutputFormat::text : OutputFormat::json);

  if (d.witness_status == WitnessStatus::not_found_within_cap) {
    err << "note: no witness within degree cap " << opt.degree_cap << " (the instance is solvable)\n";
  }
  return d.status == Status::solvable ? kExitYes : kExitNo;
}

json cover_json(const CoverSubset& c, const std::vector<std::size_t>& plus_map, const std::vector<std::size_t>& minus_map) {
  json a = json::array();
  for (const auto& [i, j] : c.pairs) a.push_back(json::array({plus_map[i] + 1, minus_map[j] + 1}));
  return a;
}

std::vector<std::size_t> iota_map(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = k;
  return v;
}

int cmd_wreath(const Options& opt, std::ostream& out, std::ostream& err) {
  auto t0 = std::chrono::steady_clock::now();
  ProblemFile pf = parse_input(read_file(opt.file));
  const auto* wp = std::get_if<WreathProblem>(&pf);
  if (!wp) throw Error(Errc::schema, "input: expected a \"wreath\" problem");
  const GeneratorSet& gens = wp->gens;

  GroupOptions go;
  go.degree_cap = opt.degree_cap;
  go.cover_cap = opt.cover_cap;
  go.subset_cap = opt.subset_cap;
  go.jobs = std::max(1u, opt.jobs);
  const OutputFormat fmt = opt.json_out || (opt.mode != "word" && !opt.text_out) ? OutputFormat::json : OutputFormat::text;

  json r;
  r["mode"] = opt.mode;
  if (opt.mode == "group") {
    GroupResult g = is_group(gens, go);
    r["verdict"] = g.is_group;
    if (g.cover) r["cover"] = cover_json(*g.cover, iota_map(gens.plus.size()), iota_map(gens.minus.size()));
    if (g.witness) r["witness"] = witness_json(g.witness->fs);
    r["witness_status"] = to_string(g.witness_status);
    r["covers_tried"] = g.covers_tried;
    r["timing"] = json{{"elapsed_ms", elapsed_ms(t0)}};
    out << emit_output(r, fmt);
    return g.is_group ? kExitYes : kExitNo;
  }

  IdentityResult id = identity_in_semigroup(gens, go);
  r["verdict"] = id.found;
  std::optional<Word> word;
  if (id.found) {
    json p = json::array(), m = json::array();
    for (auto i : id.plus_used) p.push_back(i + 1);
    for (auto j : id.minus_used) m.push_back(j + 1);
    r["subset"] = json{{"plus", p}, {"minus", m}};
    r["cover"] = cover_json(*id.group.cover, id.plus_used, id.minus_used);
    if (id.group.witness) {
      r["witness"] = witness_json(id.group.witness->fs);
      GeneratorSet sub = subset(gens, id.plus_used, id.minus_used);
      SynthesisOptions so;
      so.m = opt.scale_exponent;
      Word local = synthesize_identity_word(sub, *id.group.cover, id.group.witness->fs, so);
      Word global;
      for (const auto& l : local.letters) {
        global.letters.push_back({l.side, l.side == Side::plus ? id.plus_used[l.index] : id.minus_used[l.index]});
      }
      word = global;
      r["word"] = to_string(global);
      r["word_length"] = global.size();
      r["product_is_identity"] = word_product(gens, global).is_identity();
    }
    r["witness_status"] = to_string(id.group.witness_status);
  }
  r["timing"] = json{{"elapsed_ms", elapsed_ms(t0)}};

  if (opt.mode == "word") {
    if (!id.found) {
      if (fmt == OutputFormat::json) out << emit_output(r, fmt);
      err << "no identity word: the semigroup does not contain the identity\n";
      return kExitNo;
    }
    if (!word) {
      err << "cap: identity exists but no witness within degree cap " << opt.degree_cap << "\n";
      return kExitError;
    }
    if (fmt == OutputFormat::json) {
      out << emit_output(r, fmt);
    } else {
      out << to_string(*word) << "\n";
      out << "product = identity: " << (word_product(gens, *word).is_identity() ? "true" : "false") << "\n";
    }
    return kExitYes;
  }
  out << emit_output(r, fmt);
  return id.found ? kExitYes : kExitNo;
}

int default_degree_cap() {
  const char* env = std::getenv("POSRING_DEGREE_CAP");
  if (!env || !*env) return kDefaultDegreeCap;
  try {
    std::size_t used = 0;
    int v = std::stoi(env, &used);
    if (used != std::string(env).size() || v < 0) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw Error(Errc::invalid_input, std::string("POSRING_DEGREE_CAP is not a non-negative integer: ") + env);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  try {
    opt.degree_cap = default_degree_cap();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  CLI::App app{"Decide f_1 h_1 + ... + f_n h_n = 0 over N[X] \\ {0}, and the group and identity problems in Z wr Z.",
               "posring"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--degree-cap", opt.degree_cap, "Largest witness degree to try")->check(CLI::NonNegativeNumber);
    auto* j = sub->add_flag("--json", opt.json_out, "JSON report");
    sub->add_flag("--text", opt.text_out, "Plain text report")->excludes(j);
  };

  CLI::App* solve = app.add_subcommand("solve", "Decide solvability of one equation");
  solve->add_option("file", opt.file, "Problem file, or - for stdin")->required();
  solve->add_flag("--witness", opt.witness, "Search for an explicit solution");
  add_common(solve);

  CLI::App* wreath = app.add_subcommand("wreath", "Group / identity problem for generators (H, +-1)");
  wreath->add_option("file", opt.file, "Problem file, or - for stdin")->required();
  wreath->add_option("mode", opt.mode, "group | identity | word")
      ->required()
      ->check(CLI::IsMember({"group", "identity", "word"}));
  wreath->add_option("--cover-cap", opt.cover_cap, "Largest |I|*|J| for cover enumeration");
  wreath->add_option("--subset-cap", opt.subset_cap, "Largest generator count for subset enumeration");
  wreath->add_option("--jobs", opt.jobs, "Covers decided in parallel")->check(CLI::PositiveNumber);
  wreath->add_option("--scale-exponent", opt.scale_exponent, "Override the (1+X)^m exponent used for words");
  add_common(wreath);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? kExitYes : kExitError;
  }

  try {
    if (solve->parsed()) return cmd_solve(opt, out, err);
    return cmd_wreath(opt, out, err);
  } catch (const Error& e) {
    switch (e.code()) {
      case Errc::too_large:
      case Errc::search_space_too_large:
        err << "cap exceeded: " << e.what() << "\n";
        break;
      case Errc::schema:
        err << "input error: " << e.what() << "\n";
        break;
      default:
        err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    }
    return kExitError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace posring
