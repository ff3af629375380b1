#include "agx/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "agx/ag_index.hpp"
#include "agx/bounds.hpp"
#include "agx/canonical.hpp"
#include "agx/constructor.hpp"
#include "agx/graph6.hpp"
#include "agx/reference.hpp"
#include "agx/transforms.hpp"

namespace agx {

namespace {

constexpr double kGapTolerance = 5e-5;

std::string pair_text(int n, int m) {
  return "(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

long long max_size(int n) { return std::min<long long>(2LL * n, 1LL * n * (n - 1) / 2); }

// Collects failures; the check passes when none were recorded.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  void ok() { ++checked_; }
  void fail(const std::string& what) {
    ++checked_;
    if (failures_.size() < 5) failures_.push_back(what);
    ++failed_;
  }
  void expect(bool cond, const std::string& what) { cond ? ok() : fail(what); }

  CheckResult result() const {
    CheckResult r{name_, failed_ == 0 && checked_ > 0, {}};
    std::ostringstream d;
    d << checked_ << " checked";
    if (failed_ > 0) {
      d << ", " << failed_ << " failed:";
      for (const auto& f : failures_) d << " " << f;
    }
    r.detail = d.str();
    return r;
  }

 private:
  std::string name_;
  long long checked_ = 0;
  long long failed_ = 0;
  std::vector<std::string> failures_;
};

std::vector<std::string> keys_of(const std::vector<ChemicalGraph>& graphs) {
  std::vector<std::string> out;
  out.reserve(graphs.size());
  for (const auto& g : graphs) out.push_back(encode_graph6(g));
  std::sort(out.begin(), out.end());
  return out;
}

CheckResult graph_counts(const VerifyOptions& o) {
  Tally t("graph-counts");
  for (const auto& ref : reference_graph_counts()) {
    if (ref.n > o.max_n) continue;
    const auto got = enumerate_keys({ref.n, ref.m}, o.enumeration).size();
    t.expect(static_cast<long long>(got) == ref.count,
             pair_text(ref.n, ref.m) + "=" + std::to_string(got) + "!=" + std::to_string(ref.count));
  }
  return t.result();
}

CheckResult exceptional_graphs(const VerifyOptions& o) {
  Tally t("exceptional-graphs");
  const auto gaps = reference_bound_gaps();
  for (const auto& e : exceptional_values()) {
    if (e.n > o.max_n) continue;
    const MaxResult r = brute_force_max(e.n, e.m, o.enumeration);
    t.expect(r.witnesses.size() == 1, pair_text(e.n, e.m) + " witnesses=" + std::to_string(r.witnesses.size()));
    t.expect(r.max == e.ag, pair_text(e.n, e.m) + " max=" + r.max.to_string());
    const auto gap = std::find_if(gaps.begin(), gaps.end(), [&](const BoundGap& g) { return g.n == e.n && g.m == e.m; });
    const double diff = (bound_formula(e.n, e.m) - e.ag).to_double();
    t.expect(gap != gaps.end() && std::fabs(diff - gap->printed) <= kGapTolerance,
             pair_text(e.n, e.m) + " gap=" + std::to_string(diff));
  }
  return t.result();
}

CheckResult sharpness(const VerifyOptions& o) {
  Tally t("sharpness");
  for (int n = 2; n <= o.max_n; ++n) {
    for (int m = n - 1; m <= max_size(n); ++m) {
      const MaxResult r = brute_force_max(n, m, o.enumeration);
      const BoundReport b = sharp_bound(n, m);
      t.expect(r.max == b.sharp, pair_text(n, m) + " max=" + r.max.to_string());
      if (b.exceptional) {
        t.expect(r.witnesses.size() == 1, pair_text(n, m) + " not unique");
      } else {
        t.expect(keys_of(r.witnesses) == enumerate_keys({n, m, Connectivity::All, Target::Gnm}, o.enumeration),
                 pair_text(n, m) + " witnesses differ from G(n,m)");
      }
    }
  }
  return t.result();
}

CheckResult construction(const VerifyOptions& o) {
  Tally t("construction");
  for (int n = 1; n <= o.max_construct_n; ++n) {
    for (int m = n - 1; m <= max_size(n); ++m) {
      if (m < 0 || is_exceptional_pair(n, m)) continue;
      try {
        const ChemicalGraph g = construct_extremal(n, m);
        t.expect(is_connected(g) && is_member_Gnm(g) && ag_value(g) == upper_bound(n, m), pair_text(n, m));
      } catch (const std::exception& ex) {
        t.fail(pair_text(n, m) + " " + ex.what());
      }
    }
  }
  return t.result();
}

CheckResult extremal_count_cells(const VerifyOptions& o) {
  Tally t("extremal-counts");
  for (const auto& ref : reference_extremal_counts()) {
    if (ref.n > o.max_n) continue;
    const ExtremalCounts c = extremal_counts(ref.n, ref.m, o.enumeration);
    t.expect(c.connected == ref.connected && c.nonconnected == ref.nonconnected,
             pair_text(ref.n, ref.m) + "=" + std::to_string(c.connected) + "," + std::to_string(c.nonconnected));
  }
  return t.result();
}

CheckResult gain_bounds() {
  Tally t("gain-bounds");
  for (const auto& d : delta_constants()) t.expect(sign(d.value) > 0, std::string(d.name));
  return t.result();
}

CheckResult properties(const VerifyOptions& o) {
  Tally t("properties");
  std::mt19937_64 rng(20240601);
  for (int n = 1; n <= std::min(o.max_n, 7); ++n) {
    for (int m = 0; m <= max_size(n); ++m) {
      for (const auto& g : enumerate_chemical({n, m}, o.enumeration)) {
        const std::string key = encode_graph6(g);
        const ExactValue ag = ag_value(g);
        t.expect(exact_compare(ag, ExactValue(m)) >= 0, key + " AG<m");
        t.expect(decode_graph6(key) == g, key + " round-trip");
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = 0; i < o.relabelings; ++i) {
          std::shuffle(perm.begin(), perm.end(), rng);
          t.expect(canonical_key(g.relabeled(perm)).key == key, key + " relabel");
        }
        for (MoveKind kind : kGraphMoves) {
          for (const Move& mv : find_moves(g, kind)) {
            const ExactValue gain = ag_value(apply_move(g, mv)) - ag;
            t.expect(exact_compare(gain, delta_lower_bound(kind)) >= 0, key + " " + std::string(to_string(kind)));
          }
        }
        if (m >= n - 1) {
          t.expect(exact_compare(ag_value(local_search(g)), sharp_bound(n, m).sharp) <= 0, key + " local search");
        }
      }
    }
  }
  return t.result();
}

// Some maximizer for m <= n - 2 splits into components that are each extremal trees.
CheckResult forests(const VerifyOptions& o) {
  Tally t("forests");
  for (int n = 2; n <= o.max_n; ++n) {
    for (int m = 0; m <= n - 2; ++m) {
      const MaxResult r = brute_force_max(n, m, o.enumeration);
      const bool found = std::any_of(r.witnesses.begin(), r.witnesses.end(), [](const ChemicalGraph& g) {
        for (const auto& comp : components(g)) {
          const ChemicalGraph h = induced_subgraph(g, comp);
          if (h.size() != h.order() - 1 || ag_value(h) != sharp_bound(h.order(), h.size()).sharp) return false;
        }
        return true;
      });
      t.expect(found, pair_text(n, m));
    }
  }
  return t.result();
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  return {graph_counts(opts), exceptional_graphs(opts), sharpness(opts),  construction(opts),
          extremal_count_cells(opts), gain_bounds(), properties(opts), forests(opts)};
}

}  // namespace agx
