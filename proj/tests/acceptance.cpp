// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "narayana/analysis.hpp"
#include "narayana/bijections.hpp"
#include "narayana/generating.hpp"
#include "narayana/poset.hpp"
#include "narayana/tableau.hpp"

using namespace narayana;

namespace {

struct Outcome {
  bool pass = true;
  long cases = 0;
  std::string detail;

  void fail(const std::string& what) {
    if (pass) detail = what;
    pass = false;
  }
};

std::vector<std::pair<int, int>> rectangles(int max_cells) {
  std::vector<std::pair<int, int>> out;
  for (int m = 1; m <= max_cells; ++m) {
    for (int n = 1; n * m <= max_cells; ++n) out.emplace_back(n, m);
  }
  return out;
}

Outcome criterion_rectangular_identity() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (auto [n, m] : rectangles(16)) {
    ++o.cases;
    auto r = verify_main_theorem(n, m);
    if (!r.holds) o.fail(r.describe());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= 120.0) o.fail("runtime " + std::to_string(seconds) + "s");
  std::ostringstream s;
  s.precision(3);
  s << std::fixed << seconds << "s";
  if (o.pass) o.detail = s.str();
  return o;
}

Outcome criterion_sulanke() {
  Outcome o;
  for (auto [n, m] : rectangles(16)) {
    ++o.cases;
    auto r = verify_sulanke(n, m);
    if (!r.holds) o.fail(r.describe());
  }
  return o;
}

Outcome criterion_real_rooted() {
  Outcome o;
  for (auto [n, m] : rectangles(18)) {
    ++o.cases;
    const std::string key = "n=" + std::to_string(n) + ",m=" + std::to_string(m);
    const IntPolynomial p = narayana_polynomial(n, m);
    const PolynomialAnalysis a = analyze(p);
    if (!a.roots.real_rooted || a.roots.distinct_real_roots != a.roots.square_free_degree) {
      o.fail(key + " not real-rooted");
    }
    if (!a.newton.holds) o.fail(key + " Newton fails");
    if (!a.log_concave.holds) o.fail(key + " log-concavity fails");
    if (!a.unimodal.holds) o.fail(key + " unimodality fails");
    if (auto broken = implication_chain_violation(a)) o.fail(key + " " + *broken);
  }
  return o;
}

Outcome criterion_ferrers_eulerian() {
  Outcome o;
  for (const auto& shape : partitions_up_to(10)) {
    ++o.cases;
    auto r = verify_ferrers_eulerian(shape);
    if (!r.holds) o.fail(r.describe());
    if (!is_real_rooted(r.lhs)) o.fail(shape.to_string() + " W not real-rooted");
  }
  return o;
}

Outcome criterion_order_series() {
  Outcome o;
  std::vector<std::pair<std::string, LabeledPoset>> posets;
  for (const auto& shape : partitions_up_to(7)) {
    posets.emplace_back(shape.to_string(), column_strict_ferrers_poset(shape));
  }
  posets.emplace_back("antichain(3)", LabeledPoset::antichain(3));
  for (const auto& [name, poset] : posets) {
    ++o.cases;
    auto r = verify_order_gf(poset, 10);
    if (!r.holds || r.terms != 11) o.fail(r.describe(name));
    // The closed binomial form must agree with the series coefficients too.
    for (int k = 0; k <= 10; ++k) {
      BigInt formula = 0;
      for (int j = 0; j <= r.w.degree(); ++j) {
        formula += r.w.coefficient(j) * binomial(k - j + poset.size(), poset.size());
      }
      if (formula != r.brute_force[static_cast<std::size_t>(k)]) {
        o.fail(name + " binomial form differs at k=" + std::to_string(k));
      }
    }
  }
  return o;
}

Outcome criterion_phi_example() {
  Outcome o;
  o.cases = 1;
  const auto w = LatticeWord::parse("121113223233", 4, 3);
  const auto t = phi(w);
  const std::vector<std::vector<int>> expected{{1, 3, 4, 5}, {2, 7, 8, 10}, {6, 9, 11, 12}};
  if (t.rows() != expected) o.fail("phi gave " + t.to_string());
  if (!(phi_inverse(t) == w)) o.fail("phi_inverse gave " + phi_inverse(t).to_string());
  if (word_ascents(w) != 4 || tableau_descents(t) != 4) o.fail("asc/des differ from 4");
  return o;
}

Outcome criterion_perm_example() {
  Outcome o;
  o.cases = 1;
  const Partition shape({4, 2, 1});
  const auto omega = column_strict_labeling(shape);
  const std::vector<int> pi{4, 2, 1, 5, 6, 7, 3};
  const auto t = perm_to_tableau(pi, omega, shape);
  const std::vector<std::vector<int>> expected{{1, 4, 5, 6}, {2, 7}, {3}};
  if (t.rows() != expected) o.fail("perm_to_tableau gave " + t.to_string());
  if (sequence_descents(pi) != 3 || tableau_descents(t) != 3) o.fail("des differs from 3");
  return o;
}

Outcome criterion_oracles() {
  Outcome o;
  for (const auto& shape : partitions_up_to(12)) {
    ++o.cases;
    long count = 0;
    for_each_syt(shape, [&](const StandardTableau&) {
      ++count;
      return true;
    });
    if (syt_count_hook(shape) != count) o.fail(shape.to_string() + " hook count differs");
  }
  const long catalan[] = {1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 6; ++n) {
    ++o.cases;
    if (narayana_polynomial(n, 2).evaluate(BigInt(1)) != catalan[n - 1]) {
      o.fail("N(" + std::to_string(n) + ",2;1) differs");
    }
  }
  return o;
}

Outcome criterion_round_trips() {
  Outcome o;
  for (auto [n, m] : rectangles(14)) {
    ++o.cases;
    const std::string key = "n=" + std::to_string(n) + ",m=" + std::to_string(m);
    for_each_lattice_word(n, m, [&](const LatticeWord& w) {
      if (!(phi_inverse(phi(w)) == w)) o.fail(key + " phi_inverse(phi(w)) != w for " + w.to_string());
      const BallotPath p = word_to_path(w);
      if (!(path_to_word(p) == w)) o.fail(key + " path_to_word(word_to_path(w)) != w");
      if (path_ascents(p) != word_descents(w) || path_descents(p) != word_ascents(w)) {
        o.fail(key + " asc/des not swapped for " + w.to_string());
      }
      return o.pass;
    });
    for_each_syt(Partition::rectangle(m, n), [&](const StandardTableau& t) {
      if (!(phi(phi_inverse(t)) == t)) o.fail(key + " phi(phi_inverse(T)) != T for " + t.to_string());
      return o.pass;
    });
    for_each_ballot_path(n, m, [&](const BallotPath& p) {
      if (!(word_to_path(path_to_word(p)) == p)) o.fail(key + " word_to_path(path_to_word(P)) != P");
      return o.pass;
    });
  }
  return o;
}

Outcome criterion_analysis_oracles() {
  Outcome o;
  for (long a = -10; a <= 10; ++a) {
    if (a == 0) continue;
    for (long b = -10; b <= 10; ++b) {
      for (long c = -10; c <= 10; ++c) {
        ++o.cases;
        const bool expected = b * b - 4 * a * c >= 0;
        if (is_real_rooted(IntPolynomial{c, b, a}) != expected) {
          o.fail("quadratic " + IntPolynomial{c, b, a}.to_string());
        }
        for (long d = -10; d <= 10; ++d) {
          ++o.cases;
          const long disc = 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c -
                            4 * a * c * c * c - 27 * a * a * d * d;
          if (is_real_rooted(IntPolynomial{d, c, b, a}) != (disc >= 0)) {
            o.fail("cubic " + IntPolynomial{d, c, b, a}.to_string());
          }
        }
      }
    }
  }
  std::mt19937 rng(20240607);
  std::uniform_int_distribution<long> coeff(-20, 20);
  std::uniform_int_distribution<int> degree(1, 8);
  std::uniform_int_distribution<long> cut(-40, 40);
  for (int trial = 0; trial < 1000; ++trial) {
    ++o.cases;
    std::vector<BigInt> c;
    const int d = degree(rng);
    for (int i = 0; i <= d; ++i) c.emplace_back(coeff(rng));
    if (c.back() == 0) c.back() = 1;
    const IntPolynomial p = square_free_part(IntPolynomial(c));
    if (p.degree() < 1) continue;
    const SturmSequence s(p);
    std::vector<Rational> cuts;
    for (int i = 0; i < 5; ++i) cuts.emplace_back(cut(rng), 4);
    std::sort(cuts.begin(), cuts.end());
    std::vector<Bound> points{Bound::minus_infinity()};
    for (const auto& q : cuts) points.push_back(Bound::at(q));
    points.push_back(Bound::plus_infinity());
    int total = 0;
    for (std::size_t i = 1; i < points.size(); ++i) total += s.count(points[i - 1], points[i]);
    if (total != s.count(Bound::minus_infinity(), Bound::plus_infinity())) {
      o.fail("additivity fails for " + p.to_string());
    }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1 t^(m-1) N(n,m;t) = SYT descent polynomial, nm <= 16", criterion_rectangular_identity},
      {"AC2 ballot path asc/des equidistribution, nm <= 16", criterion_sulanke},
      {"AC3 N(n,m;t) real-rooted with Newton/log-concave/unimodal, nm <= 18", criterion_real_rooted},
      {"AC4 W(P_lambda) = SYT descent polynomial and real-rooted, |lambda| <= 10", criterion_ferrers_eulerian},
      {"AC5 order polynomial series, Ferrers posets <= 7 cells and antichain(3), k <= 10", criterion_order_series},
      {"AC6 phi on 121113223233", criterion_phi_example},
      {"AC7 perm_to_tableau on 4215673, shape (4,2,1)", criterion_perm_example},
      {"AC8 hook count = |SYT| for |lambda| <= 12; N(n,2;1) Catalan for n <= 6", criterion_oracles},
      {"AC9 phi and word_to_path round trips, nm <= 14", criterion_round_trips},
      {"AC10 real-rootedness vs discriminants; Sturm count additivity", criterion_analysis_oracles},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::printf("%s %s [%ld cases]%s%s\n", o.pass ? "PASS" : "FAIL", c.name, o.cases,
                o.detail.empty() ? "" : " ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
