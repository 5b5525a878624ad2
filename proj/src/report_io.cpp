#include "kmroots/report_io.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>

namespace kmroots {

namespace {

std::string dec(std::uint64_t v) { return std::to_string(v); }
std::string dec(std::int64_t v) { return std::to_string(v); }
std::string dec(const BigInt& v) { return v.get_str(); }

BigInt parse_decimal(std::string_view text, const char* what) {
  const bool ok = !text.empty() && text.find_first_not_of("0123456789") == std::string_view::npos;
  if (!ok) throw Error(std::string("malformed ") + what + ": '" + std::string(text) + "'");
  return BigInt(std::string(text), 10);
}

}  // namespace

Weight parse_weight(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw Error("root must be written as <c0>,<c1>, got '" + std::string(text) + "'");
  }
  return Weight(parse_decimal(text.substr(0, comma), "root coordinate"),
                parse_decimal(text.substr(comma + 1), "root coordinate"));
}

std::uint64_t parse_seed(std::string_view text) {
  int base = 10;
  if (text.starts_with("0x") || text.starts_with("0X")) {
    base = 16;
    text.remove_prefix(2);
  }
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value, base);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
    throw Error("malformed seed: '" + std::string(text) + "'");
  }
  return value;
}

Json weight_json(const Weight& w) { return Json::array({dec(w.c0), dec(w.c1)}); }

Json multiplicity_json(const Weight& root, const Rank2Cartan& cartan, const BigInt& mult) {
  Json j;
  j["root"] = weight_json(root);
  j["r"] = dec(cartan.r());
  j["norm"] = dec(bilinear_form(root, root, cartan));
  j["class"] = to_string(classify(root, cartan));
  j["multiplicity"] = dec(mult);
  return j;
}

Json bound_json(const BoundReport& report) {
  Json j;
  j["root"] = weight_json(report.weight);
  j["r"] = dec(report.r);
  j["class"] = to_string(report.root_class);
  j["dyck_total"] = dec(report.dyck_total);
  j["count_thm1"] = dec(report.count_thm1);
  j["count_thm2"] = dec(report.count_thm2);
  j["elapsed_seconds"] = report.elapsed.count();
  if (report.paths_listed) {
    j["listed_filter"] = to_string(report.listed_level);
    Json words = Json::array();
    for (const auto& d : *report.paths_listed) words.push_back(runs_to_word(d));
    j["paths"] = std::move(words);
  }
  return j;
}

Json estimate_json(const EstimateReport& report) {
  Json j;
  j["root"] = weight_json(report.weight);
  j["r"] = dec(report.r);
  j["filter"] = to_string(report.filter);
  j["samples"] = dec(report.samples);
  j["hits"] = dec(report.hits);
  j["dyck_total"] = dec(report.dyck_total);
  j["fraction"] = format_significant(report.fraction);
  j["estimate"] = format_significant(report.estimate);
  j["std_error"] = format_significant(report.std_error);
  j["seed"] = dec(report.seed);
  j["chunk_size"] = dec(report.chunk_size);
  return j;
}

Json visits_json(const VisitStatistic& stat) {
  Json j;
  j["k"] = dec(stat.k);
  j["distance"] = dec(stat.distance);
  j["samples"] = dec(stat.samples);
  j["total_visits"] = dec(stat.total_visits);
  j["mean"] = format_significant(mpf_class(stat.mean));
  j["std_error"] = format_significant(mpf_class(stat.std_error));
  j["limit"] = dec(4 * stat.distance + 4);
  j["seed"] = dec(stat.seed);
  j["chunk_size"] = dec(stat.chunk_size);
  return j;
}

Json validate_json(std::string_view word, const Rank2Cartan& cartan) {
  const StringData data = word_to_runs(word);
  Json runs = Json::array();
  for (Run a : data.runs) runs.push_back(dec(a));
  const bool positive =
      std::all_of(data.runs.begin(), data.runs.end(), [](Run a) { return a >= 1; });

  Json j;
  j["word"] = std::string(word);
  j["r"] = dec(cartan.r());
  j["runs"] = std::move(runs);
  j["weight"] = weight_json(weight_of(data));
  j["littelmann_valid"] = littelmann_valid(data, cartan);
  j["is_dyck"] = is_dyck(data);
  if (positive) {
    j["cond1"] = cond1(data, cartan);
    if (data.runs.size() % 2 == 0) j["cond2"] = cond2(data, cartan);
  }
  return j;
}

Family parse_family(std::string_view text) {
  if (text == "staircase") return Family::Staircase;
  if (text == "antistaircase") return Family::Antistaircase;
  throw Error("unknown family '" + std::string(text) + "'");
}

std::vector<Weight> family_roots(Family family, std::int64_t max_n) {
  std::vector<Weight> out;
  for (std::int64_t n = 1; n <= max_n; ++n) {
    out.push_back(family == Family::Staircase ? Weight(n + 1, n) : Weight(n, n + 1));
  }
  return out;
}

std::vector<TableRow> bound_table(const std::vector<std::pair<std::int64_t, Weight>>& roots,
                                  const Rank2Cartan& cartan,
                                  std::optional<BigInt> max_dyck_paths,
                                  const EnumerationOptions& options) {
  MultiplicityTable table(cartan);
  std::vector<TableRow> rows;
  for (const auto& [n, root] : roots) {
    TableRow row;
    row.n = n;
    row.root = root;
    row.multiplicity = root.is_zero() ? BigInt(0) : multiplicity(root, table);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), root.c0.get_mpz_t(), root.c1.get_mpz_t());
    if (root.c0 < 1 || root.c1 < 1 || g != 1) {
      row.skip_reason = "n/a";
    } else if (max_dyck_paths && dyck_count(root.c0, root.c1) > *max_dyck_paths) {
      row.skip_reason = "skipped";
    } else {
      row.bound1 = bound1(root, cartan, options);
      row.bound2 = bound2(root, cartan, options);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows) {
  os << "n,root_c0,root_c1,multiplicity,bound1,bound2,gap1,gap2\n";
  for (const auto& row : rows) {
    os << row.n << ',' << row.root.c0.get_str() << ',' << row.root.c1.get_str() << ','
       << row.multiplicity.get_str() << ',';
    if (row.bound1 && row.bound2) {
      const BigInt gap1 = *row.bound1 - row.multiplicity;
      const BigInt gap2 = *row.bound2 - row.multiplicity;
      os << row.bound1->get_str() << ',' << row.bound2->get_str() << ',' << gap1.get_str()
         << ',' << gap2.get_str();
    } else {
      const std::string& s = row.skip_reason;
      os << s << ',' << s << ',' << s << ',' << s;
    }
    os << '\n';
  }
}

}  // namespace kmroots
