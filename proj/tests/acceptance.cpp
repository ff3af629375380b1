// Acceptance checks. Each criterion prints one PASS/FAIL line followed by
// indented details for anything that went wrong.
//
//   acceptance [--criterion 1..8|table3-all] [--extended] [--cache-dir DIR]
//
// Exit status is 0 when every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "agx/ag_index.hpp"
#include "agx/bounds.hpp"
#include "agx/cache.hpp"
#include "agx/canonical.hpp"
#include "agx/constructor.hpp"
#include "agx/enumeration.hpp"
#include "agx/error.hpp"
#include "agx/graph6.hpp"
#include "agx/transforms.hpp"
#include "cli.hpp"

namespace {

using namespace agx;

// Pinned tolerances and ranges.
constexpr double kGapTolerance = 5e-5;
constexpr double kDeltaTolerance = 5e-5;
constexpr int kSharpnessMaxOrder = 8;
constexpr int kConstructMaxOrder = 40;
constexpr int kConstructCrossCheckOrder = 8;
constexpr int kTable3RequiredOrder = 10;
constexpr int kPropertyMaxOrder = 7;
constexpr int kRelabelings = 100;
constexpr int kForestMaxOrder = 8;
constexpr std::uint64_t kSeed = 0x5eed2024;

struct Count {
  int n;
  int m;
  long long count;
};

struct Exceptional {
  int n;
  int m;
  const char* ag;
  const char* difference;
  double printed;
};

struct Cell {
  int n;
  int m;
  long long connected;
  long long nonconnected;
  bool shaded;
};

struct Printed {
  const char* name;
  double value;
};

// order, size, number of chemical graphs
constexpr Count kGraphCounts[] = {
    {1, 0, 1}, {2, 1, 1}, {3, 2, 1}, {3, 3, 1}, {4, 3, 3}, {4, 4, 2}, {4, 5, 1}, {4, 6, 1}, {5, 5, 6}, {5, 6, 6}, {5, 7, 4}, {5, 8, 2}, {5, 9, 1}, {6, 5, 14}, {6, 6, 20}, {6, 7, 22}, {6, 8, 20}, {6, 9, 15}, {7, 6, 38}, {7, 8, 82}, {8, 8, 188}, {10, 9, 883},
};

// order, size, AG of the extremal graph, bound minus AG, printed difference
const Exceptional kExceptional[] = {
    {1, 0, R"(0)", R"(-\frac{11}{4}+\frac{21}{4\sqrt{3}})", 0.2811},
    {2, 1, R"(1)", R"(\frac{1}{2})", 0.5000},
    {3, 2, R"(\frac{3}{\sqrt{2}})", R"(\frac{1}{2})", 0.5000},
    {3, 3, R"(3)", R"(\frac{1}{2})", 0.5000},
    {4, 3, R"(\frac{6}{\sqrt{3}})", R"(\frac{3}{4}-\frac{3}{4\sqrt{3}})", 0.3170},
    {4, 4, R"(1+\frac{2}{\sqrt{3}}+\frac{5}{\sqrt{6}})", R"(\frac{3}{2}+\frac{3}{\sqrt{2}}-\frac{2}{\sqrt{3}}-\frac{5}{\sqrt{6}})", 0.4254},
    {4, 5, R"(1+\frac{10}{\sqrt{6}})", R"(\frac{9}{2}-\frac{10}{\sqrt{6}})", 0.4175},
    {4, 6, R"(6)", R"(-\frac{11}{4}+\frac{21}{4\sqrt{3}})", 0.2811},
    {5, 5, R"(\frac{7}{2}+\frac{3}{\sqrt{2}})", R"(-\frac{3}{4}-\frac{3}{\sqrt{2}}+\frac{21}{4\sqrt{3}})", 0.1598},
    {5, 6, R"(\frac{5}{4}+\frac{3}{\sqrt{2}}+\frac{7}{4\sqrt{3}}+\frac{5}{\sqrt{6}})", R"(\frac{13}{4}-\frac{7}{4\sqrt{3}}-\frac{5}{\sqrt{6}})", 0.1984},
    {5, 7, R"(1+\frac{9}{\sqrt{2}})", R"(\frac{13}{2}-\frac{9}{\sqrt{2}})", 0.1360},
    {5, 8, R"(2+\frac{3}{\sqrt{2}}+\frac{7}{\sqrt{3}})", R"(\frac{13}{4}-\frac{3}{\sqrt{2}}-\frac{7}{4\sqrt{3}})", 0.1183},
    {5, 9, R"(3+\frac{21}{2\sqrt{3}})", R"(4+\frac{3}{\sqrt{2}}-\frac{21}{2\sqrt{3}})", 0.0591},
    {6, 5, R"(\frac{15}{4}+\frac{3}{\sqrt{2}})", R"(\frac{1}{4})", 0.2500},
    {6, 6, R"(\frac{5}{2}+\frac{3}{2\sqrt{2}}+\frac{15}{4\sqrt{3}}+\frac{5}{2\sqrt{6}})", R"(\frac{9}{2}-\frac{3}{2\sqrt{2}}-\frac{15}{4\sqrt{3}}-\frac{5}{2\sqrt{6}})", 0.2537},
    {6, 7, R"(\frac{7}{2}+\frac{6}{\sqrt{2}})", R"(\frac{5}{4}-\frac{6}{\sqrt{2}}+\frac{21}{4\sqrt{3}})", 0.0384},
    {6, 8, R"(\frac{9}{2}+\frac{7}{\sqrt{3}})", R"(2+\frac{3}{\sqrt{2}}-\frac{7}{\sqrt{3}})", 0.0799},
    {6, 9, R"(\frac{17}{4}+\frac{3}{\sqrt{2}}+\frac{21}{4\sqrt{3}})", R"(\frac{21}{4}-\frac{3}{\sqrt{2}}-\frac{21}{4\sqrt{3}})", 0.0976},
    {7, 6, R"(\frac{15}{4}+\frac{4}{\sqrt{3}}+\frac{7}{4\sqrt{3}})", R"(\frac{1}{2}-\frac{1}{2\sqrt{3}})", 0.2113},
    {7, 8, R"(\frac{5}{2}+\frac{9}{\sqrt{2}})", R"(\frac{13}{2}-\frac{9}{\sqrt{2}})", 0.1360},
    {8, 8, R"(5+\frac{6}{\sqrt{2}})", R"(\frac{5}{4}-\frac{6}{\sqrt{2}}+\frac{21}{4\sqrt{3}})", 0.0384},
    {10, 9, R"(\frac{15}{2}+\frac{11}{2\sqrt{3}})", R"(\frac{1}{4}-\frac{1}{4\sqrt{3}})", 0.1057},
};

// order, size, connected, non-connected, shaded (uniquely extremal below the bound)
constexpr Cell kExtremalCells[] = {
    {1, 0, 1, 0, true},
    {2, 1, 1, 0, true},
    {3, 2, 1, 0, true},
    {3, 3, 1, 0, true},
    {4, 3, 1, 0, true},
    {4, 4, 1, 0, true},
    {5, 4, 1, 0, false},
    {4, 5, 1, 0, true},
    {5, 5, 1, 0, true},
    {6, 5, 1, 0, true},
    {4, 6, 1, 0, true},
    {5, 6, 1, 0, true},
    {6, 6, 1, 0, true},
    {7, 6, 1, 0, true},
    {5, 7, 1, 0, true},
    {6, 7, 1, 0, true},
    {7, 7, 1, 0, false},
    {8, 7, 1, 0, false},
    {5, 8, 1, 0, true},
    {6, 8, 1, 0, true},
    {7, 8, 1, 0, true},
    {8, 8, 1, 0, true},
    {9, 8, 1, 0, false},
    {5, 9, 1, 0, true},
    {6, 9, 1, 0, true},
    {7, 9, 1, 0, false},
    {8, 9, 1, 0, false},
    {9, 9, 1, 0, false},
    {10, 9, 1, 0, true},
    {5, 10, 1, 0, false},
    {6, 10, 1, 0, false},
    {7, 10, 1, 0, false},
    {8, 10, 1, 0, false},
    {9, 10, 1, 0, false},
    {10, 10, 2, 0, false},
    {11, 10, 1, 0, false},
    {6, 11, 1, 0, false},
    {7, 11, 1, 0, false},
    {8, 11, 2, 0, false},
    {9, 11, 3, 0, false},
    {10, 11, 1, 0, false},
    {11, 11, 1, 0, false},
    {12, 11, 1, 1, false},
    {6, 12, 1, 0, false},
    {7, 12, 2, 0, false},
    {8, 12, 4, 0, false},
    {9, 12, 2, 0, false},
    {10, 12, 4, 0, false},
    {11, 12, 6, 0, false},
    {12, 12, 2, 0, false},
    {13, 12, 1, 0, false},
    {7, 13, 2, 0, false},
    {8, 13, 3, 0, false},
    {9, 13, 10, 0, false},
    {10, 13, 12, 0, false},
    {11, 13, 4, 0, false},
    {12, 13, 5, 1, false},
    {13, 13, 7, 1, false},
    {14, 13, 2, 1, false},
    {7, 14, 2, 0, false},
    {8, 14, 8, 0, false},
    {9, 14, 17, 0, false},
    {10, 14, 8, 1, false},
    {11, 14, 21, 1, false},
    {12, 14, 23, 1, false},
    {13, 14, 5, 1, false},
    {14, 14, 3, 1, false},
    {8, 15, 7, 0, false},
    {9, 15, 9, 0, false},
    {10, 15, 47, 0, false},
    {11, 15, 58, 1, false},
    {12, 15, 14, 1, false},
    {13, 15, 27, 2, false},
    {14, 15, 27, 3, false},
    {8, 16, 6, 0, false},
    {9, 16, 37, 0, false},
    {10, 16, 77, 0, false},
    {11, 16, 31, 1, false},
    {12, 16, 113, 2, false},
    {13, 16, 111, 4, false},
    {14, 16, 18, 2, false},
    {9, 17, 28, 0, false},
    {10, 17, 35, 0, false},
    {11, 17, 249, 0, false},
    {12, 17, 303, 3, false},
    {13, 17, 59, 4, false},
    {14, 17, 159, 11, false},
    {9, 18, 16, 0, false},
    {10, 18, 198, 0, false},
    {11, 18, 399, 0, false},
    {12, 18, 134, 2, false},
    {13, 18, 684, 8, false},
    {14, 18, 625, 20, false},
    {10, 19, 126, 0, false},
    {11, 19, 154, 0, false},
    {12, 19, 1550, 1, false},
    {13, 19, 1786, 9, false},
    {14, 19, 298, 11, false},
    {10, 20, 59, 1, false},
    {11, 20, 1246, 1, false},
    {12, 20, 2395, 1, false},
    {13, 20, 707, 7, false},
    {14, 20, 4620, 40, false},
    {11, 21, 719, 1, false},
    {12, 21, 845, 1, false},
    {13, 21, 10801, 4, false},
    {14, 21, 11855, 36, false},
    {11, 22, 265, 1, false},
    {12, 22, 8789, 3, false},
    {13, 22, 16433, 6, false},
    {14, 22, 4399, 20, false},
    {12, 23, 4721, 3, false},
    {13, 23, 5440, 4, false},
    {14, 23, 83399, 19, false},
    {12, 24, 1544, 3, false},
    {13, 24, 68804, 12, false},
    {14, 24, 125829, 28, false},
    {13, 25, 35678, 11, false},
    {14, 25, 40399, 14, false},
    {13, 26, 10778, 8, false},
    {14, 26, 590342, 55, false},
    {14, 27, 300361, 45, false},
    {14, 28, 88168, 25, false},
};

constexpr Printed kPrintedConstants[] = {
    {"rotation-a", 0.1479},
    {"rotation-b", 0.0128},
    {"chain-swap", 0.0207},
    {"adjacent-33-common-neighbor", 0.0593},
    {"adjacent-33-no-common-neighbor", 0.0089},
    {"adjacent-22", 0.0541},
    {"census-swap-t2", 0.0384},
    {"census-swap-t3", 0.0591},
    {"census-swap-mixed", 0.0975},
    {"component-edge-swap", 0.0193},
};

// Parses sums of terms p, \frac{p}{q}, \frac{p}{\sqrt{r}} and \frac{p}{q\sqrt{r}}.
class ClosedForm {
 public:
  explicit ClosedForm(std::string_view text) : s_(text) {}

  ExactValue parse() {
    ExactValue total;
    skip();
    if (pos_ == s_.size()) throw std::runtime_error("empty closed form");
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek('+')) {
        ++pos_;
      } else if (peek('-')) {
        sign = -1;
        ++pos_;
      }
      skip();
      total += term() * Rational(sign);
      skip();
    }
    return total;
  }

 private:
  ExactValue term() {
    if (!match("\\frac{")) return ExactValue(Rational(integer()));
    const long long p = integer();
    expect("}{");
    long long q = 1;
    int radical = 1;
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) q = integer();
    if (match("\\sqrt{")) {
      radical = static_cast<int>(integer());
      expect("}");
    }
    expect("}");
    // p / (q sqrt r) = p sqrt r / (q r)
    const Rational k(p, q * radical);
    switch (radical) {
      case 1: return ExactValue(k);
      case 2: return ExactValue::sqrt2(k);
      case 3: return ExactValue::sqrt3(k);
      case 6: return ExactValue::sqrt6(k);
      default: throw std::runtime_error("unsupported radical");
    }
  }

  long long integer() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw std::runtime_error("expected integer in " + std::string(s_));
    return std::stoll(std::string(s_.substr(start, pos_ - start)));
  }
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  bool match(std::string_view t) {
    if (s_.substr(pos_, t.size()) != t) return false;
    pos_ += t.size();
    return true;
  }
  void expect(std::string_view t) {
    if (!match(t)) throw std::runtime_error("expected " + std::string(t) + " in " + std::string(s_));
  }
  void skip() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

ExactValue closed_form(std::string_view text) { return ClosedForm(text).parse(); }

// (2n + 5m)/6, shifted by 3/sqrt2 - 13/6 or 21/(4 sqrt3) - 37/12 when 2m - n is 1 or 2 mod 3.
ExactValue reference_bound(int n, int m) {
  ExactValue ub(Rational(2 * n + 5 * m, 6));
  const int r = ((2 * m - n) % 3 + 3) % 3;
  if (r == 1) ub += ExactValue(ratio(-13, 6), ratio(3, 2));
  if (r == 2) ub += ExactValue(ratio(-37, 12), 0, ratio(7, 4));
  return ub;
}

bool connected_range(int n, int m) { return m >= n - 1 && m <= std::min(2 * n, n * (n - 1) / 2); }

bool shaded(int n, int m) {
  return std::any_of(std::begin(kExtremalCells), std::end(kExtremalCells),
                     [&](const Cell& c) { return c.n == n && c.m == m && c.shaded; });
}

std::string pair(int n, int m) { return "(" + std::to_string(n) + "," + std::to_string(m) + ")"; }

class Report {
 public:
  void fail(const std::string& detail) {
    ++failures_;
    if (details_.size() < 20) details_.push_back(detail);
  }
  void note(const std::string& detail) { notes_.push_back(detail); }
  void count() { ++checked_; }
  bool passed() const { return failures_ == 0; }

  void print(std::string_view name, double seconds) const {
    std::ostringstream line;
    line << (passed() ? "PASS " : "FAIL ") << name << ": " << checked_ << " checked, " << failures_
         << " failed (" << std::fixed;
    line.precision(1);
    line << seconds << " s)";
    std::cout << line.str() << '\n';
    for (const auto& d : details_) std::cout << "    " << d << '\n';
    for (const auto& d : notes_) std::cout << "    note: " << d << '\n';
    std::cout.flush();
  }

 private:
  long long checked_ = 0;
  long long failures_ = 0;
  std::vector<std::string> details_;
  std::vector<std::string> notes_;
};

std::vector<std::string> keys_of(const std::vector<ChemicalGraph>& gs) {
  std::vector<std::string> out;
  for (const auto& g : gs) out.push_back(canonical_key(g).key);
  std::sort(out.begin(), out.end());
  return out;
}

// 1. Graph counts through the `tables --which 1` command.
void graph_counts(Report& rep, const EnumOptions& opts) {
  std::vector<std::string> args{"agx", "tables", "--which", "1"};
  if (opts.cache_dir) args.insert(args.end(), {"--cache-dir", opts.cache_dir->string()});
  std::istringstream in;
  std::ostringstream out;
  std::ostringstream err;
  if (cli::run(args, in, out, err) != 0) {
    rep.fail("tables --which 1 failed: " + err.str());
    return;
  }
  std::map<std::pair<int, int>, long long> got;
  std::istringstream csv(out.str());
  std::string line;
  std::getline(csv, line);
  if (line != "n,m,count") rep.fail("unexpected header " + line);
  while (std::getline(csv, line)) {
    int n = 0;
    int m = 0;
    long long c = 0;
    if (std::sscanf(line.c_str(), "%d,%d,%lld", &n, &m, &c) == 3) got[{n, m}] = c;
  }
  if (got.size() != std::size(kGraphCounts)) rep.fail("expected 22 rows, got " + std::to_string(got.size()));
  for (const auto& c : kGraphCounts) {
    rep.count();
    const auto it = got.find({c.n, c.m});
    const long long value = it == got.end() ? -1 : it->second;
    if (value != c.count) rep.fail(pair(c.n, c.m) + ": " + std::to_string(value) + " != " + std::to_string(c.count));
  }
}

// 2. Unique maximizers of the exceptional pairs and their distance to the bound.
void exceptional_graphs(Report& rep, const EnumOptions& opts) {
  for (const auto& e : kExceptional) {
    rep.count();
    const std::string at = pair(e.n, e.m);
    if (!shaded(e.n, e.m)) rep.fail(at + " is not shaded in the extremal count table");
    const MaxResult r = brute_force_max(e.n, e.m, opts);
    const ExactValue ag = closed_form(e.ag);
    if (r.witnesses.size() != 1) rep.fail(at + ": " + std::to_string(r.witnesses.size()) + " maximizers");
    if (r.max != ag) rep.fail(at + ": maximum " + r.max.to_string() + " != " + ag.to_string());
    for (const auto& w : r.witnesses) {
      if (ag_value(w) != ag) rep.fail(at + ": witness AG differs");
    }
    const ExactValue ub = reference_bound(e.n, e.m);
    if (ub != sharp_bound(e.n, e.m).ub) rep.fail(at + ": library bound differs from the three-case formula");
    if (sharp_bound(e.n, e.m).sharp != ag) rep.fail(at + ": sharp_bound does not report the extremal value");
    const ExactValue gap = ub - ag;
    if (gap != closed_form(e.difference)) rep.fail(at + ": difference " + gap.to_string() + " != " + e.difference);
    if (std::abs(gap.to_double() - e.printed) > kGapTolerance) {
      rep.fail(at + ": difference " + gap.to_decimal(6) + " vs printed " + std::to_string(e.printed));
    }
  }
}

// 3. Bound attained exactly, with the maximizers being exactly G(n,m).
void sharpness(Report& rep, const EnumOptions& opts) {
  long long connected = 0;
  long long nonconnected = 0;
  for (int n = 2; n <= kSharpnessMaxOrder; ++n) {
    for (int m = n - 1; m <= std::min(2 * n, n * (n - 1) / 2); ++m) {
      if (shaded(n, m)) continue;
      rep.count();
      const std::string at = pair(n, m);
      const MaxResult r = brute_force_max(n, m, opts);
      if (r.max != upper_bound(n, m) || r.max != reference_bound(n, m)) {
        rep.fail(at + ": maximum " + r.max.to_string() + " != bound " + reference_bound(n, m).to_string());
      }
      const auto members = keys_of(enumerate_Gnm(n, m, Connectivity::All, opts));
      if (keys_of(r.witnesses) != members) {
        rep.fail(at + ": " + std::to_string(r.witnesses.size()) + " maximizers, " +
                 std::to_string(members.size()) + " members of G(n,m)");
      }
      for (const auto& w : r.witnesses) (is_connected(w) ? connected : nonconnected) += 1;
    }
  }
  rep.note(std::to_string(connected) + " connected and " + std::to_string(nonconnected) +
           " non-connected maximizers compared");
}

// 4. Constructed graphs reach the bound.
void construction(Report& rep, const EnumOptions& opts) {
  for (int n = 1; n <= kConstructMaxOrder; ++n) {
    for (int m = n - 1; m <= std::min(2 * n, n * (n - 1) / 2); ++m) {
      if (shaded(n, m)) continue;
      rep.count();
      const std::string at = pair(n, m);
      std::optional<ChemicalGraph> built;
      try {
        built = construct_extremal(n, m);
      } catch (const Error& e) {
        rep.fail(at + ": " + e.what());
        continue;
      }
      const ChemicalGraph& g = *built;
      if (g.order() != n || g.size() != m) rep.fail(at + ": wrong order or size");
      if (!is_connected(g)) rep.fail(at + ": not connected");
      if (!is_member_Gnm(g)) rep.fail(at + ": not in G(n,m)");
      if (ag_value(g) != upper_bound(n, m) || ag_value(g) != reference_bound(n, m)) rep.fail(at + ": AG below bound");
      if (n <= kConstructCrossCheckOrder) {
        const auto witnesses = keys_of(brute_force_max(n, m, opts).witnesses);
        if (!std::binary_search(witnesses.begin(), witnesses.end(), canonical_key(g).key)) {
          rep.fail(at + ": not among the brute-force maximizers");
        }
      }
    }
  }
}

void check_cell(Report& rep, const Cell& c, const EnumOptions& opts) {
  rep.count();
  const ExtremalCounts got = extremal_counts(c.n, c.m, opts);
  if (got.connected != c.connected || got.nonconnected != c.nonconnected) {
    rep.fail(pair(c.n, c.m) + ": " + std::to_string(got.connected) + "," + std::to_string(got.nonconnected) +
             " != " + std::to_string(c.connected) + "," + std::to_string(c.nonconnected));
  }
}

const Cell& cell(int n, int m) {
  for (const auto& c : kExtremalCells) {
    if (c.n == n && c.m == m) return c;
  }
  throw std::runtime_error("no cell " + pair(n, m));
}

// 5. Extremal counts for the required cells; (14,28) only with --extended.
void extremal_count_spots(Report& rep, const EnumOptions& opts, bool extended) {
  check_cell(rep, cell(12, 11), opts);
  check_cell(rep, cell(5, 4), opts);
  for (const auto& c : kExtremalCells) {
    if (c.shaded || c.n <= kTable3RequiredOrder) check_cell(rep, c, opts);
  }
  if (!extended) return;
  const auto start = std::chrono::steady_clock::now();
  try {
    const ExtremalCounts got = extremal_counts(14, 28, opts);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rep.note("(14,28) extended: " + std::to_string(got.connected) + "," + std::to_string(got.nonconnected) +
             " (printed 88168,25) in " + std::to_string(static_cast<int>(s)) + " s");
  } catch (const Error& e) {
    rep.note(std::string("(14,28) extended: ") + e.what());
  }
}

// All cells of the extremal count table.
void extremal_count_table(Report& rep, const EnumOptions& opts, bool extended) {
  for (const auto& c : kExtremalCells) {
    if (c.n == 14 && c.m == 28 && !extended) continue;
    check_cell(rep, c, opts);
  }
}

// 6. Gain constants against the printed values.
void gain_constants(Report& rep) {
  const auto constants = delta_constants();
  for (const auto& p : kPrintedConstants) {
    rep.count();
    const auto it = std::find_if(constants.begin(), constants.end(),
                                 [&](const DeltaConstant& c) { return c.name == p.name; });
    if (it == constants.end()) {
      rep.fail(std::string("missing ") + p.name);
      continue;
    }
    if (sign(it->value) <= 0) rep.fail(std::string(p.name) + " is not positive");
    const double diff = std::abs(it->value.to_double() - p.value);
    if (diff > kDeltaTolerance) {
      std::ostringstream s;
      s << p.name << ": " << it->value.to_decimal(7) << " vs printed " << p.value << " (off by " << diff << ")";
      rep.fail(s.str());
    }
  }
  for (MoveKind k : kGraphMoves) {
    if (sign(delta_lower_bound(k)) <= 0) rep.fail(std::string(to_string(k)) + " bound is not positive");
  }
  for (MoveKind k : kCensusMoves) {
    if (sign(delta_lower_bound(k)) <= 0) rep.fail(std::string(to_string(k)) + " bound is not positive");
  }
}

// 7. Invariants on every chemical graph of order at most 7.
void properties(Report& rep, const EnumOptions& opts) {
  std::mt19937_64 rng(kSeed);
  long long moves = 0;
  for (int n = 1; n <= kPropertyMaxOrder; ++n) {
    for (int m = 0; m <= std::min(2 * n, n * (n - 1) / 2); ++m) {
      const auto graphs = enumerate_chemical({n, m, Connectivity::All, Target::AllChemical}, opts);
      const ExactValue best = brute_force_max(n, m, opts).max;
      for (const auto& g : graphs) {
        rep.count();
        const std::string at = encode_graph6(g);
        const ExactValue ag = ag_value(g);
        if (exact_compare(ag, ExactValue(m)) < 0) rep.fail(at + ": AG below size");
        if (decode_graph6(at) != g) rep.fail(at + ": graph6 round trip");
        const CanonicalKey key = canonical_key(g);
        std::vector<int> perm(n);
        for (int t = 0; t < kRelabelings; ++t) {
          std::iota(perm.begin(), perm.end(), 0);
          std::shuffle(perm.begin(), perm.end(), rng);
          const ChemicalGraph h = g.relabeled(perm);
          if (canonical_key(h) != key) rep.fail(at + ": key changes under relabeling");
          if (decode_graph6(encode_graph6(h)) != h) rep.fail(at + ": graph6 round trip after relabeling");
        }
        for (MoveKind k : kGraphMoves) {
          for (const auto& mv : find_moves(g, k)) {
            ++moves;
            const ExactValue gain = ag_value(apply_move(g, mv)) - ag;
            if (exact_compare(gain, delta_lower_bound(k)) < 0) {
              rep.fail(at + ": " + std::string(to_string(k)) + " gains " + gain.to_decimal(6));
            }
          }
        }
        const ExactValue improved = ag_value(local_search(g));
        if (exact_compare(improved, ag) < 0) rep.fail(at + ": local search lowered AG");
        if (exact_compare(improved, best) > 0) rep.fail(at + ": local search beat the exhaustive maximum");
        if (connected_range(n, m) && exact_compare(improved, sharp_bound(n, m).sharp) > 0) {
          rep.fail(at + ": local search exceeded the sharp bound");
        }
      }
    }
  }
  rep.note(std::to_string(moves) + " moves applied");
}

// 8. Below n - 1 edges some maximizer is a union of extremal trees.
void forests(Report& rep, const EnumOptions& opts) {
  std::vector<ExactValue> tree_max(kForestMaxOrder + 1);
  for (int k = 1; k <= kForestMaxOrder; ++k) {
    for (const auto& t : enumerate_chemical({k, k - 1, Connectivity::Connected, Target::AllChemical}, opts)) {
      if (exact_compare(ag_value(t), tree_max[k]) > 0) tree_max[k] = ag_value(t);
    }
  }
  for (int n = 2; n <= kForestMaxOrder; ++n) {
    for (int m = 0; m <= n - 2; ++m) {
      rep.count();
      const MaxResult r = brute_force_max(n, m, opts);
      const bool found = std::any_of(r.witnesses.begin(), r.witnesses.end(), [&](const ChemicalGraph& w) {
        for (const auto& comp : components(w)) {
          const ChemicalGraph c = induced_subgraph(w, comp);
          if (c.size() != c.order() - 1 || ag_value(c) != tree_max[c.order()]) return false;
        }
        return true;
      });
      if (!found) rep.fail(pair(n, m) + ": no maximizer is a union of extremal trees");
    }
  }
}

struct Criterion {
  std::string id;
  std::string name;
  std::function<void(Report&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::string only;
  bool extended = false;
  EnumOptions opts;
  opts.cache_dir = default_cache_dir();
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      only = argv[++i];
    } else if (a == "--extended") {
      extended = true;
    } else if (a == "--cache-dir" && i + 1 < argc) {
      opts.cache_dir = argv[++i];
    } else {
      std::cerr << "usage: acceptance [--criterion 1..8|table3-all] [--extended] [--cache-dir DIR]\n";
      return 2;
    }
  }

  const std::vector<Criterion> all = {
      {"1", "criterion1 graph counts", [&](Report& r) { graph_counts(r, opts); }},
      {"2", "criterion2 exceptional pairs", [&](Report& r) { exceptional_graphs(r, opts); }},
      {"3", "criterion3 sharpness and characterization", [&](Report& r) { sharpness(r, opts); }},
      {"4", "criterion4 constructor", [&](Report& r) { construction(r, opts); }},
      {"5", "criterion5 extremal count spots", [&](Report& r) { extremal_count_spots(r, opts, extended); }},
      {"6", "criterion6 gain constants", [&](Report& r) { gain_constants(r); }},
      {"7", "criterion7 properties", [&](Report& r) { properties(r, opts); }},
      {"8", "criterion8 forests", [&](Report& r) { forests(r, opts); }},
      {"table3-all", "table3-all extremal count table", [&](Report& r) { extremal_count_table(r, opts, extended); }},
  };

  bool ok = true;
  bool ran = false;
  for (const auto& c : all) {
    if (only.empty() ? c.id == "table3-all" : c.id != only) continue;
    ran = true;
    Report rep;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(rep);
    } catch (const std::exception& e) {
      rep.fail(std::string("exception: ") + e.what());
    }
    rep.print(c.name, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    ok = ok && rep.passed();
  }
  if (!ran) {
    std::cerr << "unknown criterion " << only << '\n';
    return 2;
  }
  return ok ? 0 : 1;
}
