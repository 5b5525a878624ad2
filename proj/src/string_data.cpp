#include "kmroots/string_data.hpp"

#include <charconv>

namespace kmroots {

bool StringData::is_canonical() const {
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const Run lo = i == 0 ? 0 : 1;
    if (runs[i] < lo || runs[i] > kMaxRun) return false;
  }
  return true;
}

std::string StringData::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(runs[i]);
  }
  return out;
}

void require_binary_word(std::string_view word) {
  for (char ch : word) {
    if (ch != '0' && ch != '1') {
      throw Error(std::string("word contains non-binary character '") + ch + "'");
    }
  }
}

StringData word_to_runs(std::string_view word) {
  require_binary_word(word);
  StringData out;
  if (word.empty()) return out;
  if (word.front() == '0') out.runs.push_back(0);
  char current = word.front();
  Run length = 0;
  for (char ch : word) {
    if (ch == current) {
      ++length;
    } else {
      out.runs.push_back(length);
      current = ch;
      length = 1;
    }
  }
  out.runs.push_back(length);
  return out;
}

std::string runs_to_word(const StringData& data) {
  if (!data.is_canonical()) throw Error("non-canonical string data: " + data.to_string());
  std::string word;
  for (std::size_t i = 0; i < data.runs.size(); ++i) {
    word.append(static_cast<std::size_t>(data.runs[i]), i % 2 == 0 ? '1' : '0');
  }
  return word;
}

StringData parse_runs(std::string_view text) {
  StringData out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view field = text.substr(pos, comma - pos);
    Run value = 0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || end != field.data() + field.size() || field.empty()) {
      throw Error("malformed run list: '" + std::string(text) + "'");
    }
    out.runs.push_back(value);
    pos = comma + 1;
  }
  return out;
}

Weight weight_of(const StringData& data) {
  BigInt c0 = 0, c1 = 0;
  for (std::size_t i = 0; i < data.runs.size(); ++i) {
    (i % 2 == 0 ? c1 : c0) += static_cast<long>(data.runs[i]);
  }
  return Weight(c0, c1);
}

bool is_dyck(std::span<const Run> runs) {
  if (runs.empty() || runs.size() % 2 != 0) return false;
  __int128 n = 0, m = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (runs[i] < 1 || runs[i] > kMaxRun) return false;
    (i % 2 == 0 ? m : n) += runs[i];
  }
  __int128 x = 0, y = 0;
  for (std::size_t i = 0; i < runs.size(); i += 2) {
    y += runs[i];
    x += runs[i + 1];
    if (x * m > y * n) return false;
  }
  return true;
}

std::vector<SignedWeight> littelmann_roots(const Rank2Cartan& cartan, std::size_t count) {
  std::vector<SignedWeight> out;
  out.reserve(count);
  const BigInt r(static_cast<long>(cartan.r()));
  SignedWeight prev{0, -1};
  SignedWeight cur{1, 0};
  for (std::size_t j = 0; j < count; ++j) {
    out.push_back(cur);
    SignedWeight next{r * cur.c0 - prev.c0, r * cur.c1 - prev.c1};
    prev = std::move(cur);
    cur = std::move(next);
  }
  return out;
}

namespace {

// a_{j+2} beta_j <= a_{j+1} beta_{j+1}, with `lower` = beta_j, `upper` = beta_{j+1}.
bool littelmann_step(Run next_next, Run next, const SignedWeight& lower,
                     const SignedWeight& upper) {
  const BigInt a(static_cast<long>(next_next));
  const BigInt b(static_cast<long>(next));
  return a * lower.c0 <= b * upper.c0 && a * lower.c1 <= b * upper.c1;
}

class ValidWordCounter {
 public:
  ValidWordCounter(std::int64_t zeros, std::int64_t ones, const Rank2Cartan& cartan)
      : zeros_(zeros), ones_(ones),
        roots_(littelmann_roots(cartan, static_cast<std::size_t>(zeros + ones + 2))) {}

  BigInt run() {
    count_ = 0;
    runs_.clear();
    extend(zeros_, ones_);
    return count_;
  }

 private:
  void extend(std::int64_t zeros_left, std::int64_t ones_left) {
    if (zeros_left == 0 && ones_left == 0) {
      ++count_;
      return;
    }
    const std::size_t index = runs_.size();  // 0-based; even index = letter 1
    const std::int64_t available = index % 2 == 0 ? ones_left : zeros_left;
    const Run lo = index == 0 ? 0 : 1;
    for (Run a = lo; a <= available; ++a) {
      if (index >= 2 && !littelmann_step(a, runs_[index - 1], roots_[index - 2],
                                         roots_[index - 1])) {
        // Larger runs only make the left side bigger.
        break;
      }
      runs_.push_back(a);
      if (index % 2 == 0) {
        extend(zeros_left, ones_left - a);
      } else {
        extend(zeros_left - a, ones_left);
      }
      runs_.pop_back();
    }
  }

  std::int64_t zeros_;
  std::int64_t ones_;
  std::vector<SignedWeight> roots_;
  std::vector<Run> runs_;
  BigInt count_;
};

}  // namespace

bool littelmann_valid(const StringData& data, const Rank2Cartan& cartan) {
  if (data.runs.size() <= 2) return true;
  const auto roots = littelmann_roots(cartan, data.runs.size());
  for (std::size_t j = 0; j + 2 < data.runs.size(); ++j) {
    if (!littelmann_step(data.runs[j + 2], data.runs[j + 1], roots[j], roots[j + 1])) {
      return false;
    }
  }
  return true;
}

BigInt count_valid_string_data(const Weight& weight, const Rank2Cartan& cartan,
                               std::int64_t limit) {
  if (weight.c0 + weight.c1 > BigInt(static_cast<long>(limit))) {
    throw Error("weight " + weight.to_string() + " exceeds the word enumeration limit " +
                std::to_string(limit) + "; use kostant_count instead");
  }
  ValidWordCounter counter(weight.c0.get_si(), weight.c1.get_si(), cartan);
  return counter.run();
}

}  // namespace kmroots
