#pragma once

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "twobridge/complexity.hpp"
#include "twobridge/json_io.hpp"
#include "twobridge/normalize.hpp"
#include "twobridge/stable_map.hpp"
#include "twobridge/svg.hpp"
#include "twobridge/volume_table.hpp"

namespace twobridge {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int error = 1;
inline constexpr int hypothesis = 2;
} // namespace exit_code

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

inline Variant variant_from(const std::string& s) { return s == "f3" ? Variant::f3 : Variant::f2; }

inline void print_analysis(const ConwayWord& w, std::ostream& out) {
  const SchubertFraction f = fraction_of(w);
  out << "conway: " << format_conway(w) << "\n";
  out << "m: " << w.m() << "\n";
  out << "fraction: " << format_fraction(f) << "\n";
  out << "components: " << component_count(f) << "\n";
  out << "parity: p " << (f.p() % 2 == 0 ? "even" : "odd") << "\n";
  out << "all_b_even: " << (all_b_even(w) ? "true" : "false") << "\n";
  out << "reduced_alternating: " << (is_reduced_alternating(w) ? "true" : "false") << "\n";
  if (is_reduced_alternating(w)) {
    out << "twist_number: " << twist_number(w) << "\n";
  } else {
    out << "twist_number: n/a\n";
  }
}

inline Json certificate_json(const ConwayWord& w, const Certificate& c) {
  Json j;
  j["conway"] = format_conway(w);
  j["status"] = std::string(certificate_status_name(c.status));
  j["value"] = c.value ? Json(*c.value) : Json(nullptr);
  j["m"] = c.m;
  j["volume"] = c.volume;
  j["threshold"] = c.threshold;
  j["epsilon"] = c.epsilon;
  j["smc_lower"] = c.smc_lower;
  j["smc_upper"] = c.smc_upper;
  j["inconsistent"] = c.inconsistent;
  j["chain"] = c.chain;
  return j;
}

inline std::vector<std::string> read_word_list(const std::string& path) {
  std::vector<std::string> words;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    auto t = std::string(trim(line));
    if (!t.empty() && t.front() != '#') words.push_back(t);
  }
  return words;
}

} // namespace detail

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

namespace detail {

inline int run_batch(const std::vector<std::string>& words, const std::vector<std::string>& command, unsigned jobs,
                     std::ostream& out) {
  struct Result {
    int code;
    std::string out, err;
  };
  auto one = [&](const std::string& word) {
    std::vector<std::string> args = command;
    args.push_back(word);
    std::ostringstream o, e;
    const int code = run_cli(args, o, e);
    return Result{code, o.str(), e.str()};
  };
  std::vector<Result> results(words.size());
  jobs = std::max(1u, jobs);
  for (std::size_t start = 0; start < words.size(); start += jobs) {
    std::vector<std::future<Result>> wave;
    const std::size_t end = std::min(words.size(), start + jobs);
    for (std::size_t i = start; i < end; ++i) wave.push_back(std::async(std::launch::async, one, words[i]));
    for (std::size_t i = start; i < end; ++i) results[i] = wave[i - start].get();
  }
  int worst = exit_code::ok;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto& r = results[i];
    out << "## " << words[i] << " exit=" << r.code << "\n" << r.out << r.err;
    if (r.code == exit_code::error) worst = exit_code::error;
    if (r.code == exit_code::hypothesis && worst == exit_code::ok) worst = exit_code::hypothesis;
  }
  return worst;
}

} // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"two-bridge links and their stable maps into the plane", "twobridge"};
  app.require_subcommand(1);

  std::string word_text;
  std::string variant = "f2";
  std::string output;

  auto* analyze = app.add_subcommand("analyze", "fraction, components, parity and twist number");
  analyze->add_option("word", word_text, "Conway word, e.g. C(3,2,3)")->required();
  std::string other_text;
  bool allow_mirror = false;
  analyze->add_option("--equivalent-to", other_text, "compare the Schubert class with another word");
  analyze->add_flag("--allow-mirror", allow_mirror, "identify b(p,q) with b(p,-q) when comparing");

  auto* build = app.add_subcommand("build", "assemble a stable map model and print it as JSON");
  build->add_option("word", word_text, "Conway word")->required();
  build->add_option("--variant", variant, "f2 or f3")->check(CLI::IsMember({"f2", "f3"}));
  Granularity granularity;
  build->add_option("--strips-per-crossing", granularity.strips_per_crossing)->check(CLI::PositiveNumber);
  build->add_option("--extra-strips", granularity.extra_strips_per_region)->check(CLI::NonNegativeNumber);
  build->add_option("-o,--output", output, "output file (default stdout)");

  auto* certify = app.add_subcommand("certify", "check the smc = 2m certificate for a volume");
  certify->add_option("word", word_text, "Conway word")->required();
  double volume = 0.0;
  std::string table_path;
  double epsilon = default_epsilon;
  bool as_json = false;
  auto* vol_opt = certify->add_option("--volume", volume, "hyperbolic volume of the complement");
  auto* table_opt = certify->add_option("--volume-table", table_path, "CSV of label,reference,volume");
  vol_opt->excludes(table_opt);
  certify->add_option("--epsilon", epsilon, "margin for the strict inequality");
  certify->add_flag("--json", as_json, "print the certificate as JSON");

  auto* render = app.add_subcommand("render", "draw a curve, strip decomposition or model as SVG");
  render->add_option("word", word_text, "Conway word")->required();
  render->add_option("--variant", variant, "f2 or f3")->check(CLI::IsMember({"f2", "f3"}));
  std::string subject = "model";
  render->add_option("--subject", subject, "curve, strips or model")
      ->check(CLI::IsMember({"curve", "strips", "model"}));
  render->add_option("-o,--output", output, "output file (default stdout)");

  auto* normalize = app.add_subcommand("normalize", "find an equivalent word with every b_i even");
  normalize->add_option("word", word_text, "Conway word")->required();
  SearchBound bound;
  normalize->add_option("--max-sum", bound.max_sum)->check(CLI::PositiveNumber);
  normalize->add_option("--max-length", bound.max_length)->check(CLI::PositiveNumber);

  auto* batch = app.add_subcommand("batch", "run a subcommand over a file of Conway words");
  std::string input_path;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  batch->add_option("--input", input_path, "one Conway word per line, '#' comments")->required();
  batch->add_option("-j,--jobs", jobs)->check(CLI::PositiveNumber);
  batch->prefix_command();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code != 0 && !dynamic_cast<const CLI::CallForHelp*>(&e)) err << app.help();
    return code == 0 ? exit_code::ok : exit_code::error;
  }

  try {
    if (*batch) {
      std::vector<std::string> command = batch->remaining();
      if (command.empty() || command.front() == "batch") {
        err << "batch needs a subcommand other than batch\n" << batch->help();
        return exit_code::error;
      }
      return detail::run_batch(detail::read_word_list(input_path), command, jobs, out);
    }

    const ConwayWord word = [&] {
      try {
        return parse_conway(word_text);
      } catch (const Error& e) {
        throw Error(e.code(), "'" + word_text + "': " + e.what());
      }
    }();

    if (*analyze) {
      detail::print_analysis(word, out);
      if (!other_text.empty()) {
        const ConwayWord other = parse_conway(other_text);
        const bool same = schubert_equivalent(fraction_of(word), fraction_of(other), EquivalencePolicy{allow_mirror});
        out << "equivalent to " << format_conway(other) << (allow_mirror ? " (mirror allowed)" : "") << ": "
            << (same ? "true" : "false") << "\n";
      }
    } else if (*build) {
      detail::write_output(export_json(assemble_stable_map(word, detail::variant_from(variant), granularity)), output,
                           out);
    } else if (*certify) {
      if (!*vol_opt && !*table_opt) {
        err << "certify needs --volume or --volume-table\n" << certify->help();
        return exit_code::error;
      }
      std::string source = "--volume";
      if (*table_opt) {
        const VolumeTable table = ingest_volume_table(detail::read_file(table_path), table_path);
        const VolumeRecord* r = table.find_link(word);
        if (!r) {
          err << "error: " << format_conway(word) << ": no entry for this link in " << table_path << "\n";
          return exit_code::error;
        }
        volume = r->volume;
        source = r->label + " (" + r->source + ")";
      }
      const Certificate c = certify_smc(word, volume, epsilon);
      if (as_json) {
        Json j = detail::certificate_json(word, c);
        j["source"] = source;
        out << j.dump(2) << "\n";
      } else {
        out << certificate_status_name(c.status);
        if (c.value) out << " smc=" << *c.value;
        out << "\n";
        out << "volume source: " << source << "\n";
        for (const auto& line : c.chain) out << "  " << line << "\n";
        if (c.inconsistent) out << "warning: volume exceeds 4m v_oct; check the table entry\n";
      }
    } else if (*render) {
      const Variant v = detail::variant_from(variant);
      std::string svg;
      if (subject == "model") {
        svg = render_svg(assemble_stable_map(word, v));
      } else {
        ImmersedCurve curve = outer_smooth(build_plat_diagram(word));
        if (v == Variant::f3) curve = bigon_reduce(curve);
        svg = subject == "curve" ? render_svg(curve) : render_svg(strip_decompose(curve, v), word);
      }
      detail::write_output(svg, output, out);
    } else if (*normalize) {
      const NormalizeOutcome r = even_b_normalize(word, bound);
      if (!r.found()) {
        throw Error(ErrorCode::search_exhausted, describe_failure(word, r));
      }
      out << format_conway(*r.word) << "\n";
      out << "fraction: " << format_fraction(fraction_of(*r.word)) << "\n";
      const char* how = r.method == NormalizeMethod::unchanged            ? "unchanged"
                        : r.method == NormalizeMethod::exhaustive_search ? "search"
                                                                          : "even expansion";
      out << "method: " << how << "\n";
    }
    return exit_code::ok;
  } catch (const Error& e) {
    const std::string what = e.what();
    err << "error: ";
    if (what.find(word_text) == std::string::npos) err << "'" << word_text << "': ";
    err << what << "\n";
    return is_hypothesis_failure(e.code()) ? exit_code::hypothesis : exit_code::error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::error;
  }
}

} // namespace twobridge
