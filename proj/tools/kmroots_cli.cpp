// kmroots: root multiplicities and Dyck path bounds for the rank-2 symmetric
// hyperbolic Kac-Moody algebras.
//
// Roots are always given as --root <c0>,<c1>, the coefficients of
// (alpha_0, alpha_1). Diagnostics go to stderr; stdout carries only the JSON or
// CSV payload.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kmroots/counting.hpp"
#include "kmroots/peterson.hpp"
#include "kmroots/report_io.hpp"
#include "kmroots/sampler.hpp"

namespace {

using namespace kmroots;

enum class Format { Json, Csv };

struct Common {
  std::int64_t r = 3;
  bool json = false;
  bool csv = false;

  Format format(Format fallback) const {
    if (json && csv) throw Error("--json and --csv are mutually exclusive");
    if (json) return Format::Json;
    if (csv) return Format::Csv;
    return fallback;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--r", c.r, "Off-diagonal magnitude of the Cartan matrix (>= 3)")
      ->required();
  cmd->add_flag("--json", c.json, "Emit JSON");
  cmd->add_flag("--csv", c.csv, "Emit CSV");
}

std::string csv_cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (const auto& item : v) {
      if (!out.empty()) out += ' ';
      out += csv_cell(item);
    }
    return out;
  }
  return v.dump();
}

/// A flat object as a two-line CSV: keys, then values.
void print(const Json& j, Format format) {
  if (format == Format::Json) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::string header, values;
  for (const auto& [key, value] : j.items()) {
    if (!header.empty()) {
      header += ',';
      values += ',';
    }
    header += key;
    values += csv_cell(value);
  }
  std::cout << header << '\n' << values << '\n';
}

std::uint64_t parse_count(const std::string& text, const char* what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(std::string("malformed ") + what + ": '" + text + "'");
  }
  std::uint64_t value = 0;
  try {
    value = std::stoull(text);
  } catch (const std::exception&) {
    throw Error(std::string(what) + " out of range: '" + text + "'");
  }
  if (value == 0) throw Error(std::string(what) + " must be positive");
  return value;
}

void warn_if_not_imaginary(const Weight& root, const Rank2Cartan& cartan) {
  if (!root.is_zero() && classify(root, cartan) != RootClass::ImaginaryRoot) {
    std::cerr << "warning: " << root << " is not an imaginary root; the bound is only "
              << "meaningful for imaginary roots\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kac-Moody rank-2 root multiplicities and Dyck path bounds"};
  app.require_subcommand(1);
  app.footer(
      "Roots are --root <c0>,<c1> meaning c0*alpha_0 + c1*alpha_1.\n"
      "KMROOTS_THREADS sets the default worker count; --threads overrides it.");

  // mult
  Common mult_opts;
  std::string mult_root;
  auto* mult = app.add_subcommand("mult", "Exact root multiplicity (Peterson recursion)");
  add_common(mult, mult_opts);
  mult->add_option("--root", mult_root, "<c0>,<c1>")->required();

  // mult-table
  Common mt_opts;
  std::string mt_box;
  auto* mult_table =
      app.add_subcommand("mult-table", "CSV of every weight in a box with class and multiplicity");
  add_common(mult_table, mt_opts);
  mult_table->add_option("--box", mt_box, "<c0>,<c1> upper corner")->required();

  // bound
  Common bound_opts;
  std::string bound_root;
  int theorem = 2;
  bool list = false;
  std::string list_out;
  std::size_t list_limit = kDefaultListLimit;
  unsigned bound_threads = 0;
  auto* bound = app.add_subcommand("bound", "Exact filtered Dyck path counts");
  add_common(bound, bound_opts);
  bound->add_option("--root", bound_root, "<c0>,<c1> (coprime)")->required();
  bound->add_option("--theorem", theorem, "1: cond1, 2: cond1 and cond2")
      ->check(CLI::IsMember({1, 2}));
  bound->add_flag("--list", list, "Include the passing paths as words");
  bound->add_option("--list-out", list_out, "Write passing paths, one word per line");
  bound->add_option("--list-limit", list_limit, "Maximum number of listed paths");
  bound->add_option("--threads", bound_threads, "Worker threads (0: default)");

  // estimate
  Common est_opts;
  std::string est_root, est_samples, est_seed = "0";
  int est_theorem = 2;
  unsigned est_threads = 0;
  std::uint64_t est_chunk = kDefaultChunkSize;
  auto* estimate = app.add_subcommand("estimate", "Monte Carlo estimate of a bound");
  add_common(estimate, est_opts);
  estimate->add_option("--root", est_root, "<c0>,<c1> (coprime)")->required();
  estimate->add_option("--theorem", est_theorem, "1 or 2")->check(CLI::IsMember({1, 2}));
  estimate->add_option("--samples", est_samples, "Number of sampled paths")->required();
  estimate->add_option("--seed", est_seed, "Decimal or 0x-prefixed hex");
  estimate->add_option("--threads", est_threads, "Worker threads (0: default)");
  estimate->add_option("--chunk", est_chunk, "Samples per RNG substream");

  // validate
  Common val_opts;
  std::string word;
  auto* validate = app.add_subcommand("validate", "Report the predicates for one word");
  add_common(validate, val_opts);
  validate->add_option("--word", word, "Binary word, e.g. 1101000")->required();

  // table
  Common table_opts;
  std::string family = "staircase", roots_list, skip_above;
  std::int64_t max_n = 6;
  unsigned table_threads = 0;
  auto* tab = app.add_subcommand("table", "Multiplicities against both bounds");
  add_common(tab, table_opts);
  tab->add_option("--family", family, "staircase (n+1,n), antistaircase (n,n+1), or custom");
  tab->add_option("--roots", roots_list, "Custom roots: c0,c1;c0,c1;...");
  tab->add_option("--max-n", max_n, "Largest n for the families");
  tab->add_option("--skip-bounds-above", skip_above,
                  "Skip bounds when the Dyck path count exceeds this");
  tab->add_option("--threads", table_threads, "Worker threads (0: default)");

  // stats
  Common stats_opts;
  std::int64_t k = 0, distance = 0;
  std::string stats_samples, stats_seed = "0";
  unsigned stats_threads = 0;
  std::uint64_t stats_chunk = kDefaultChunkSize;
  auto* stats = app.add_subcommand("stats", "Mean visits at a distance from the diagonal");
  add_common(stats, stats_opts);
  stats->get_option("--r")->required(false);
  stats->add_option("--k", k, "Paths go to (k+1, k)")->required();
  stats->add_option("--distance", distance, "y - x of the counted points")->required();
  stats->add_option("--samples", stats_samples, "Number of sampled paths")->required();
  stats->add_option("--seed", stats_seed, "Decimal or 0x-prefixed hex");
  stats->add_option("--threads", stats_threads, "Worker threads (0: default)");
  stats->add_option("--chunk", stats_chunk, "Samples per RNG substream");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, std::cerr, std::cerr);
  }

  try {
    if (*mult) {
      const Rank2Cartan cartan(mult_opts.r);
      const Weight root = parse_weight(mult_root);
      if (root.is_zero()) throw Error("zero weight has no multiplicity");
      print(multiplicity_json(root, cartan, multiplicity(root, cartan)),
            mult_opts.format(Format::Json));
    } else if (*mult_table) {
      const Rank2Cartan cartan(mt_opts.r);
      if (mt_opts.json) throw Error("mult-table only emits CSV");
      write_multiplicity_csv(std::cout, parse_weight(mt_box), cartan);
    } else if (*bound) {
      const Rank2Cartan cartan(bound_opts.r);
      const Weight root = parse_weight(bound_root);
      warn_if_not_imaginary(root, cartan);
      BoundReportOptions options;
      options.enumeration.threads = bound_threads;
      options.list_limit = list_limit;
      const FilterLevel level = theorem == 1 ? FilterLevel::Thm1 : FilterLevel::Thm2;
      if (list || !list_out.empty()) options.list_level = level;
      BoundReport report = bound_report(root, cartan, options);
      if (!list_out.empty()) {
        std::ofstream out(list_out);
        if (!out) throw Error("cannot open " + list_out);
        for (const auto& d : *report.paths_listed) out << runs_to_word(d) << '\n';
        if (!list) report.paths_listed.reset();
      }
      Json j;
      j["theorem"] = std::to_string(theorem);
      j["bound"] = (theorem == 1 ? report.count_thm1 : report.count_thm2).get_str();
      j.update(bound_json(report));
      print(j, bound_opts.format(Format::Json));
    } else if (*estimate) {
      const Rank2Cartan cartan(est_opts.r);
      const Weight root = parse_weight(est_root);
      warn_if_not_imaginary(root, cartan);
      SamplingOptions options;
      options.threads = est_threads;
      options.chunk_size = est_chunk;
      if (est_chunk == 0) throw Error("--chunk must be positive");
      const auto report =
          estimate_bound(root, cartan, est_theorem == 1 ? FilterLevel::Thm1 : FilterLevel::Thm2,
                         parse_count(est_samples, "sample count"), parse_seed(est_seed),
                         options);
      print(estimate_json(report), est_opts.format(Format::Json));
    } else if (*validate) {
      const Rank2Cartan cartan(val_opts.r);
      print(validate_json(word, cartan), val_opts.format(Format::Json));
    } else if (*tab) {
      const Rank2Cartan cartan(table_opts.r);
      std::vector<std::pair<std::int64_t, Weight>> roots;
      if (family == "custom") {
        std::stringstream ss(roots_list);
        std::string item;
        std::int64_t index = 0;
        while (std::getline(ss, item, ';')) {
          if (!item.empty()) roots.emplace_back(++index, parse_weight(item));
        }
        if (roots.empty()) throw Error("--family custom needs --roots");
      } else {
        std::int64_t n = 0;
        for (auto& w : family_roots(parse_family(family), max_n)) roots.emplace_back(++n, w);
      }
      std::optional<BigInt> guard;
      if (!skip_above.empty()) guard = BigInt(parse_count(skip_above, "cost guard"));
      EnumerationOptions options;
      options.threads = table_threads;
      const auto rows = bound_table(roots, cartan, guard, options);
      if (table_opts.format(Format::Csv) == Format::Csv) {
        write_table_csv(std::cout, rows);
      } else {
        Json arr = Json::array();
        for (const auto& row : rows) {
          Json j;
          j["n"] = std::to_string(row.n);
          j["root"] = weight_json(row.root);
          j["multiplicity"] = row.multiplicity.get_str();
          if (row.bound1 && row.bound2) {
            j["bound1"] = row.bound1->get_str();
            j["bound2"] = row.bound2->get_str();
            j["gap1"] = BigInt(*row.bound1 - row.multiplicity).get_str();
            j["gap2"] = BigInt(*row.bound2 - row.multiplicity).get_str();
          } else {
            j["bound1"] = j["bound2"] = j["gap1"] = j["gap2"] = row.skip_reason;
          }
          arr.push_back(std::move(j));
        }
        std::cout << arr.dump(2) << '\n';
      }
    } else if (*stats) {
      SamplingOptions options;
      options.threads = stats_threads;
      options.chunk_size = stats_chunk;
      if (stats_chunk == 0) throw Error("--chunk must be positive");
      const auto stat = visits_statistic(k, distance, parse_count(stats_samples, "sample count"),
                                         parse_seed(stats_seed), options);
      print(visits_json(stat), stats_opts.format(Format::Json));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return EXIT_FAILURE;
  }
  return EXIT_SUCCESS;
}
