// Acceptance suite: runs every gate criterion and prints one line each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <functional>
#include <map>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "halfshift/boundary.hpp"
#include "halfshift/chain.hpp"
#include "halfshift/shapes.hpp"
#include "halfshift/weyl.hpp"
#include "oracles.hpp"

using namespace halfshift;

namespace {

struct Checker {
  bool ok = true;
  std::ostringstream detail;
  std::ostringstream info;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "    FAILED: " << what << "\n";
    }
  }
};

Root eps(int size, int a, int scale = 1) { return Root::epsilon(size, a, scale); }

const GrassmannianSpec kC8{Family::C, 8, 3};
const GrassmannianSpec kB8{Family::B, 8, 3};
const GrassmannianSpec kD7{Family::D, 7, 3};
const DoublePartition kBigC({5, 5, 4}, {8, 7, 4, 1});
const DoublePartition kD0({5, 4, 3}, {7, 6, 1}, 0);
const DoublePartition kD1({5, 4, 4}, {7, 6, 1}, 1);
const DoublePartition kD2({5, 4, 4}, {7, 6, 1}, 2);

// ---- criterion 1: worked-example kappa values and root multiples ----------
void criterion_worked_examples(Checker& c) {
  const auto start = std::chrono::steady_clock::now();

  struct Case {
    GrassmannianSpec spec;
    DoublePartition from, to;
    int kappa;
    Root beta;
  };
  const std::vector<Case> cases = {
      {kC8, kBigC, DoublePartition({5, 4, 4}, {8, 7, 4, 1}), 6,
       eps(8, 5) - eps(8, 3)},
      {kC8, kBigC, DoublePartition({5, 5, 4}, {8, 7, 4}), 7, eps(8, 1, 2)},
      {kC8, kBigC, DoublePartition({5, 5, 4}, {8, 6, 4, 1}), 8,
       eps(8, 7) - eps(8, 6)},
      {kC8, kBigC, DoublePartition({5, 5, 4}, {8, 7, 3, 1}), 14,
       eps(8, 4) - eps(8, 3)},
      {kB8, kBigC, DoublePartition({5, 5, 4}, {8, 7, 4}), 13, eps(8, 1)},
      {kB8, kBigC, DoublePartition({5, 5, 4}, {8, 6, 4, 1}), 7,
       eps(8, 7) - eps(8, 6)},
      {kB8, kBigC, DoublePartition({5, 5, 4}, {8, 7, 3, 1}), 13,
       eps(8, 4) - eps(8, 3)},
      {kD7, kD1, kD0, 6, eps(8, 3) - eps(8, 1)},
      {kD7, kD0, DoublePartition({5, 4, 3}, {7, 6}, 1), 5,
       eps(8, 2) + eps(8, 1)},
      {kD7, kD2, DoublePartition({5, 4, 4}, {7, 6}, 1), 11,
       eps(8, 2) + eps(8, 1)},
  };
  for (const auto& cs : cases) {
    const auto [kappa, beta] = kappa_phi_oracle(cs.spec, cs.from, cs.to);
    std::ostringstream tag;
    tag << cs.from.display() << " -> " << cs.to.display()
        << " in " << cs.spec.manifold_name() << " family "
        << family_char(cs.spec.family);
    c.expect(kappa == cs.kappa,
             tag.str() + ": kappa " + std::to_string(kappa) + " != " +
                 std::to_string(cs.kappa));
    c.expect(beta == cs.beta,
             tag.str() + ": beta " + beta.to_string() + " != " +
                 cs.beta.to_string());
    const auto report = coefficient(cs.spec, cs.from, cs.to);
    c.expect(report.kappa == cs.kappa, tag.str() + ": closed form disagrees");
  }

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  c.expect(secs < 1.0, "runtime " + std::to_string(secs) + "s exceeds 1s");
}

// ---- criterion 2: bijection and row-reading fidelity ----------------------
void criterion_bijection(Checker& c) {
  struct Case {
    GrassmannianSpec spec;
    DoublePartition part;
    std::vector<int> one_line;
  };
  const std::vector<Case> cases = {
      {kC8, kBigC, {2, 5, 6, -8, -7, -4, -1, 3}},
      {kD7, kD0, {-1, 4, 6, -8, -7, -2, 3, 5}},
      {kD7, kD1, {-3, 4, 6, -8, -7, -2, 1, 5}},
      {kD7, kD2, {3, 4, 6, -8, -7, -2, -1, 5}},
  };
  for (const auto& cs : cases) {
    const auto w = partition_to_permutation(cs.spec, cs.part);
    c.expect(w.values() == cs.one_line,
             cs.part.display() + " maps to the wrong permutation");
    c.expect(permutation_to_partition(cs.spec, w) == cs.part,
             cs.part.display() + " does not round-trip");
  }

  const ReducedWord w_lambda = {0, 3, 2, 1, 0, 6, 5, 4, 3, 2, 1, 0,
                                7, 6, 5, 4, 3, 2, 1, 0};
  const ReducedWord w_alpha = {4, 3, 2, 1, 6, 5, 4, 3, 2, 7, 6, 5, 4, 3};
  const ReducedWord word = row_reading_word(kC8, kBigC);
  c.expect(std::equal(w_lambda.begin(), w_lambda.end(), word.begin()),
           "lambda block of the row-reading word differs");
  c.expect(std::equal(w_alpha.begin(), w_alpha.end(),
                      word.begin() + w_lambda.size()),
           "alpha block of the row-reading word differs");
  c.expect(word.size() == w_lambda.size() + w_alpha.size(),
           "row-reading word has the wrong length");
}

// ---- criterion 3: three-way kappa agreement --------------------------------
// On every covering pair: the phi and sigma oracles must agree, and on box
// removals (where the closed-form table applies) the table must match both.
void criterion_three_way(Checker& c, long long& pairs, long long& removals) {
  pairs = removals = 0;
  auto sweep = [&](Family f, int max_n) {
    for (int n = 1; n <= max_n; ++n)
      for (int k = 0; k < n; ++k) {
        GrassmannianSpec spec{f, n, k};
        for (const auto& cell : enumerate_cells(spec)) {
          std::map<DoublePartition, Removal> removal_of;
          for (const auto& [rem, result] : enumerate_removals(spec, cell))
            removal_of.emplace(result, rem);
          for (const auto& [result, beta] : enumerate_coverings(spec, cell)) {
            ++pairs;
            const auto [phi_k, phi_beta] = kappa_phi_oracle(spec, cell, result);
            const auto sig = kappa_sigma_oracle(spec, cell, result);
            bool ok = phi_k == sig.kappa && phi_beta == beta;
            int closed = phi_k;
            if (auto it = removal_of.find(result); it != removal_of.end()) {
              ++removals;
              closed = kappa_closed_form(spec, cell, it->second);
              ok = ok && closed == phi_k;
            }
            if (!ok) {
              std::ostringstream tag;
              tag << "family " << family_char(f) << " n=" << n << " k=" << k
                  << " " << cell.display() << " -> "
                  << result.display() << ": closed " << closed << ", phi "
                  << phi_k << ", sigma " << sig.kappa;
              c.expect(false, tag.str());
            }
          }
        }
      }
  };
  sweep(Family::C, 6);
  sweep(Family::B, 6);
  sweep(Family::D, 5);
}

// ---- criterion 4: boundary squared, entries, mod-2 betti ------------------
// The smallest cell count at rank n is 2^n (k = 0, and k <= 1 for family D),
// so n <= 12 covers every spec whose count fits under the 5000-cell cap.
void criterion_boundary_squared(Checker& c, int& specs_checked) {
  specs_checked = 0;
  for (Family f : {Family::B, Family::C, Family::D})
    for (int n = 1; n <= 12; ++n)
      for (int k = 0; k < n; ++k) {
        GrassmannianSpec spec{f, n, k};
        if (spec.expected_cell_count() > static_cast<long long>(kDefaultCellCap))
          continue;
        ++specs_checked;
        try {
          // build_complex throws if boundary-squared is nonzero.
          const ChainComplex cx = build_complex(spec);
          for (const auto& b : cx.boundaries)
            for (const auto& t : b.entries)
              if (t.value != 2 && t.value != -2)
                c.expect(false, "entry not in {0,+-2} at " +
                                    spec.manifold_name());
          // All entries even, so the mod-2 boundary vanishes and the mod-2
          // betti number in each degree equals the cell count there.
        } catch (const std::exception& e) {
          c.expect(false, spec.manifold_name() + ": " + e.what());
        }
      }
}

// ---- criterion 5: real projective space cross-checks -----------------------
void criterion_classical(Checker& c) {
  auto check = [&](const GrassmannianSpec& spec,
                   const std::vector<std::pair<long long, std::vector<long long>>>&
                       expected,
                   const std::string& name) {
    const auto h = homology(spec);
    bool good = h.size() == expected.size();
    for (size_t i = 0; good && i < h.size(); ++i)
      good = h[i].betti == expected[i].first && h[i].torsion == expected[i].second;
    c.expect(good, name + " homology mismatch");
  };
  check({Family::C, 2, 1}, {{1, {}}, {0, {2}}, {0, {}}, {1, {}}},
        "IG(1,4) = RP^3");
  check({Family::C, 3, 2},
        {{1, {}}, {0, {2}}, {0, {}}, {0, {2}}, {0, {}}, {1, {}}},
        "IG(1,6) = RP^5");
}

// ---- criterion 6: word independence ----------------------------------------
void criterion_word_independence(Checker& c) {
  for (Family f : {Family::B, Family::C, Family::D})
    for (int n = 1; n <= 4; ++n)
      for (int k = 0; k < n; ++k) {
        GrassmannianSpec spec{f, n, k};
        const auto reference = homology(spec);
        for (unsigned trial = 0; trial < 10; ++trial) {
          const unsigned seed = 1000u * static_cast<unsigned>(n) + trial;
          try {
            const auto cx = build_complex_randomized(spec, seed);
            if (!(homology(cx) == reference)) {
              std::ostringstream tag;
              tag << "family " << family_char(f) << " n=" << n << " k=" << k
                  << " seed " << seed << ": homology changed";
              c.expect(false, tag.str());
            }
          } catch (const std::exception& e) {
            c.expect(false, spec.manifold_name() + std::string(": ") + e.what());
          }
        }
      }
}

// ---- criterion 7: smith normal form vs naive oracle ------------------------
void criterion_snf(Checker& c) {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> dim(1, 30);
  std::uniform_real_distribution<double> dens(0.02, 0.5);
  for (int trial = 0; trial < 1000; ++trial) {
    const int r = dim(rng), col = dim(rng);
    const auto entries = test::random_sparse_pm2(r, col, dens(rng), rng);
    const auto a = smith_normal_form(r, col, entries);
    const auto b = test::naive_smith(r, col, entries);
    if (a.rank != b.rank || a.invariant_factors != b.invariant_factors) {
      c.expect(false, "SNF disagreement at trial " + std::to_string(trial));
      return;
    }
  }
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int num, const std::string& name,
                    const std::function<void(Checker&)>& fn) {
    Checker c;
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " criterion " << num << ": "
              << name << " (" << secs << "s)\n"
              << c.info.str() << c.detail.str() << std::flush;
    if (!c.ok) ++failures;
  };

  report(1, "worked-example fidelity (kappa and root multiples)",
         criterion_worked_examples);
  report(2, "bijection and row-reading fidelity", criterion_bijection);
  report(3, "three-way kappa agreement, C/B n<=6 and D n<=5, all k",
         [&](Checker& c) {
           long long pairs = 0, removals = 0;
           criterion_three_way(c, pairs, removals);
           c.info << "    covering pairs tested: " << pairs << " (removals "
                  << removals << ", additional coverings "
                  << pairs - removals << ")\n";
         });
  report(4, "boundary squared = 0, entries in {0,+-2}, mod-2 betti = cells",
         [&](Checker& c) {
           int specs_checked = 0;
           criterion_boundary_squared(c, specs_checked);
           c.info << "    specs under the 5000-cell cap: " << specs_checked
                  << "\n";
         });
  report(5, "classical cross-checks RP^3 and RP^5", criterion_classical);
  report(6, "word independence of homology (10 seeded words, n<=4)",
         criterion_word_independence);
  report(7, "SNF invariant factors vs naive oracle (1000 matrices)",
         criterion_snf);

  if (failures == 0)
    std::cout << "all acceptance criteria passed\n";
  else
    std::cout << failures << " acceptance criteria FAILED\n";
  return failures;
}
