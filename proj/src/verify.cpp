#include "qcanon/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "qcanon/cabling.hpp"
#include "qcanon/canonical.hpp"
#include "qcanon/diagrams.hpp"
#include "qcanon/error.hpp"
#include "qcanon/json_io.hpp"
#include "qcanon/rmatrix.hpp"
#include "qcanon/tensor.hpp"
#include "qcanon/weightmod.hpp"

namespace qcanon {

bool SuiteResult::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

std::vector<std::vector<int>> compositions(int max_sum) {
  std::vector<std::vector<int>> out;
  for (int total = 1; total <= max_sum; ++total) {
    std::vector<std::vector<int>> level;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left) -> void {
      if (left == 0) {
        level.push_back(cur);
        return;
      }
      for (int p = 1; p <= left; ++p) {
        cur.push_back(p);
        self(self, left - p);
        cur.pop_back();
      }
    };
    rec(rec, total);
    std::stable_sort(level.begin(), level.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

namespace {

std::string fmt(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string fmt(const std::vector<int>& lambda, int level) { return "lambda=" + fmt(lambda) + " l=" + std::to_string(level); }

int total(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

class Recorder {
public:
  explicit Recorder(SuiteResult& s) : suite_(s) {}

  void run(const std::string& name, const std::string& label, const std::function<bool()>& f) {
    CheckResult& c = find(name);
    ++c.cases;
    try {
      if (!f()) fail(c, label);
    } catch (const std::exception& e) {
      fail(c, label + ": " + e.what());
    }
  }

private:
  CheckResult& find(const std::string& name) {
    for (auto& c : suite_.checks) {
      if (c.name == name) return c;
    }
    suite_.checks.push_back({name, 0, 0, {}});
    return suite_.checks.back();
  }

  static void fail(CheckResult& c, const std::string& why) {
    if (c.failures++ == 0) c.first_failure = why;
  }

  SuiteResult& suite_;
};

std::vector<WeightModule> simples(const std::vector<int>& lambda) {
  std::vector<WeightModule> f;
  for (int l : lambda) f.push_back(make_simple(l));
  return f;
}

QScalar random_scalar(std::mt19937_64& rng, int span = 6, int coeff = 5) {
  std::uniform_int_distribution<int> e(-span, span);
  std::uniform_int_distribution<int> c(-coeff, coeff);
  std::uniform_int_distribution<int> terms(0, 4);
  QScalar p;
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) p += QScalar::monomial(c(rng), e(rng));
  return p;
}

// [E, F] = (K - K^-1)/(q - q^-1) on a weight space at the given level.
bool commutator_holds(const TensorModule& t, int level) {
  const WeightSpace w = t.weight_space(level);
  if (w.empty()) return true;
  const QMatrix ef = coproduct_matrix(t, Generator::E, level + 1) * coproduct_matrix(t, Generator::F, level);
  QMatrix fe(w.dim(), w.dim());
  if (level > 0) fe = coproduct_matrix(t, Generator::F, level - 1) * coproduct_matrix(t, Generator::E, level);
  QVector diag(w.dim(), quantum_int(w.weight()));
  return ef - fe == QMatrix::diagonal(diag);
}

// ---------------------------------------------------------------- qring

void suite_qring(Recorder& rec, int) {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 300; ++i) {
    const QScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    rec.run("ring axioms", "random triple " + std::to_string(i), [&] {
      return (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && a * b == b * a && (a + b) - b == a;
    });
    rec.run("bar is a ring involution", "random pair " + std::to_string(i), [&] {
      return bar(a * b) == bar(a) * bar(b) && bar(a + b) == bar(a) + bar(b) && bar(bar(a)) == a;
    });
    rec.run("serialization round-trip", "random " + std::to_string(i),
            [&] { return qscalar_from_json(Json::parse(to_json(a).dump())) == a; });
    QScalar p;
    for (const auto& [e, k] : random_scalar(rng).terms()) p += QScalar::monomial(k, -2 * (std::abs(e) / 2 + 1));
    rec.run("bar equation solver", "random " + std::to_string(i), [&] {
      const QScalar s = solve_bar_equation(p - bar(p));
      return s == p && in_qinv_ideal(s);
    });
  }
  for (int m = 0; m <= 8; ++m) {
    for (int n = 0; n <= 8; ++n) {
      rec.run("[m+n] = q^m[n] + q^-n[m]", std::to_string(m) + "," + std::to_string(n), [&] {
        return quantum_int(m + n) == QScalar::q_power(m) * quantum_int(n) + QScalar::q_power(-n) * quantum_int(m);
      });
    }
  }
  for (int n = 0; n <= 10; ++n) {
    rec.run("quantum numbers are bar-invariant", std::to_string(n), [&] {
      bool ok = bar(quantum_int(n)) == quantum_int(n) && bar(quantum_factorial(n)) == quantum_factorial(n);
      for (int k = 0; k <= n; ++k) ok = ok && bar(quantum_binomial(n, k)) == quantum_binomial(n, k);
      return ok;
    });
  }
}

// ---------------------------------------------------------------- weightmod

void suite_weightmod(Recorder& rec, int s) {
  for (int lambda = 0; lambda <= s; ++lambda) {
    const std::string label = "lambda=" + std::to_string(lambda);
    for (const auto& m : {make_simple(lambda), contragredient(make_simple(lambda))}) {
      rec.run("[E,F] = [h] on simple modules", label + (m.is_dual() ? " dual" : ""), [&] {
        const QMatrix e = m.matrix(Generator::E), f = m.matrix(Generator::F);
        QVector d;
        for (int k = 0; k <= m.top_slot(); ++k) d.push_back(quantum_int(m.weight(k)));
        const QMatrix q2 = QMatrix::diagonal(QVector(d.size(), QScalar::q_power(2)));
        return e * f - f * e == QMatrix::diagonal(d) && m.matrix(Generator::K) * e == q2 * e * m.matrix(Generator::K);
      });
    }
    rec.run("contragredient is involutive", label,
            [&] { return contragredient(contragredient(make_simple(lambda))) == make_simple(lambda); });
    rec.run("Shapovalov embedding intertwines E and F", label, [&] {
      const int level = lambda + 1;
      const QMatrix sh = shapovalov_embed(lambda, level);
      const WeightModule v = make_simple(lambda);
      const WeightModule mc = contragredient(make_verma_truncated(lambda, level));
      bool ok = sh.at(0, 0) == QScalar(1);
      for (Generator g : {Generator::E, Generator::F, Generator::K}) ok = ok && mc.matrix(g) * sh == sh * v.matrix(g);
      return ok;
    });
  }
  for (int lambda = -3; lambda <= s; ++lambda) {
    rec.run("[E,F] = [h] below the truncation of Verma modules", "lambda=" + std::to_string(lambda), [&] {
      const int level = 4;
      const WeightModule m = make_verma_truncated(lambda, level);
      const QMatrix c = m.matrix(Generator::E) * m.matrix(Generator::F) - m.matrix(Generator::F) * m.matrix(Generator::E);
      for (int k = 0; k < level; ++k) {
        for (int r = 0; r <= level; ++r) {
          const QScalar want = r == k ? quantum_int(m.weight(k)) : QScalar();
          if (c.at(static_cast<std::size_t>(r), static_cast<std::size_t>(k)) != want) return false;
        }
      }
      return true;
    });
  }
}

// ---------------------------------------------------------------- tensor

std::vector<BigInt> character_counts(const std::vector<int>& lambda) {
  std::vector<BigInt> poly{1};
  for (int l : lambda) {
    std::vector<BigInt> next(poly.size() + static_cast<std::size_t>(l), 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      for (int k = 0; k <= l; ++k) next[i + static_cast<std::size_t>(k)] += poly[i];
    }
    poly = std::move(next);
  }
  return poly;
}

void suite_tensor(Recorder& rec, int s) {
  for (const auto& lambda : compositions(s)) {
    const TensorModule t = tensor_product(simples(lambda));
    const auto counts = character_counts(lambda);
    for (int l = 0; l <= total(lambda); ++l) {
      const std::string label = fmt(lambda, l);
      rec.run("|P_lambda(l)| = weight multiplicity", label, [&] {
        return BigInt(static_cast<unsigned long>(enumerate_P(lambda, l).size())) == counts[static_cast<std::size_t>(l)];
      });
      rec.run("[E,F] = [h] on tensor products", label,
              [&] { return commutator_holds(t, l) && commutator_holds(t.contragredient(), l); });
      for (std::size_t split = 1; split < lambda.size(); ++split) {
        rec.run("coassociativity of the iterated coproduct", label + " split=" + std::to_string(split), [&] {
          bool ok = true;
          for (Generator g : {Generator::E, Generator::F}) {
            ok = ok && coproduct_matrix_split(t, g, l, split) == coproduct_matrix(t, g, l);
          }
          return ok;
        });
      }
    }
  }
}

// ---------------------------------------------------------------- ybe

bool intertwines(const TensorModule& t, int i, int level) {
  const WeightSpace w = t.weight_space(level);
  const TensorModule swapped = t.swapped(static_cast<std::size_t>(i - 1));
  const QMatrix r = rcheck_matrix(w, i).matrix;
  const QMatrix r_up = rcheck_matrix(t.weight_space(level - 1), i).matrix;
  const QMatrix r_down = rcheck_matrix(t.weight_space(level + 1), i).matrix;
  return r_up * coproduct_matrix(t, Generator::E, level) == coproduct_matrix(swapped, Generator::E, level) * r &&
         r_down * coproduct_matrix(t, Generator::F, level) == coproduct_matrix(swapped, Generator::F, level) * r;
}

void suite_ybe(Recorder& rec, int s) {
  std::vector<std::vector<int>> triples{{1, 1, 1}, {1, 2, 1}};
  for (const auto& lambda : compositions(s)) {
    if (lambda.size() == 3 && lambda != triples[0] && lambda != triples[1]) triples.push_back(lambda);
  }
  for (const auto& lambda : triples) {
    for (int l = 0; l <= total(lambda); ++l) {
      rec.run("braid relation R1 R2 R1 = R2 R1 R2", fmt(lambda, l), [&] {
        const WeightSpace w = simple_weight_space(lambda, l);
        return rcheck_longest(w, {1, 2, 1}).matrix == rcheck_longest(w, {2, 1, 2}).matrix;
      });
    }
  }
  for (const auto& lambda : compositions(s)) {
    const TensorModule t = tensor_product(simples(lambda));
    for (int l = 0; l <= total(lambda); ++l) {
      for (int i = 1; static_cast<std::size_t>(i) < lambda.size(); ++i) {
        rec.run("R-check intertwines the coproduct", fmt(lambda, l) + " i=" + std::to_string(i),
                [&] { return intertwines(t, i, l); });
      }
    }
  }
}

// ---------------------------------------------------------------- braiding

std::vector<std::vector<int>> words_for(std::size_t n) {
  if (n <= 4) return reduced_longest_words(n, 1000);
  std::set<std::vector<int>> w{canonical_longest_word(n)};
  for (std::uint64_t seed = 1; seed <= 3; ++seed) w.insert(random_longest_word(n, seed));
  return {w.begin(), w.end()};
}

void suite_braiding(Recorder& rec, int s) {
  for (const auto& lambda : compositions(s)) {
    const auto words = words_for(lambda.size());
    for (int l = 0; l <= total(lambda); ++l) {
      const std::string label = fmt(lambda, l);
      const WeightSpace w = simple_weight_space(lambda, l);
      if (lambda.size() >= 2) {
        rec.run("R-check^(n) is independent of the reduced word", label, [&] {
          const QMatrix first = rcheck_longest(w, words.front()).matrix;
          return std::all_of(words.begin() + 1, words.end(),
                             [&](const auto& word) { return rcheck_longest(w, word).matrix == first; });
        });
      }
      rec.run("R-check^(n) = sigma_0 R^(n)", label, [&] {
        return rcheck_longest(w, words.front()).matrix == sigma0(w).matrix * r_n_matrix(w, RecursionForm::Right).matrix;
      });
      rec.run("R^(n) = C^(n) Theta^(n)", label, [&] {
        const QMatrix ct = cartan_factor(w).matrix * theta_n_matrix(w).matrix;
        return r_n_matrix(w, RecursionForm::Right).matrix == ct && r_n_matrix(w, RecursionForm::Left).matrix == ct &&
               cartan_factor_recursive(w).matrix == cartan_factor(w).matrix;
      });
      rec.run("tau(Theta^(n)) = R-check^(n) (C^(n))^-1 sigma_0", label, [&] {
        const WeightSpace wc = dual_weight_space(lambda, l);
        tau_theta_n(wc);
        if (words.size() > 1) tau_theta_n(wc, words.back());
        return true;
      });
    }
  }
}

// ---------------------------------------------------------------- involution

void suite_involution(Recorder& rec, int s) {
  for (const auto& lambda : compositions(s)) {
    for (int l = 0; l <= total(lambda); ++l) {
      rec.run("psi^c is an involution", fmt(lambda, l),
              [&] { return psi_c(dual_weight_space(lambda, l)).is_involution(); });
      if (lambda.size() == 2) {
        rec.run("psi is an involution", fmt(lambda, l),
                [&] { return psi_tensor2(simple_weight_space(lambda, l)).is_involution(); });
      }
    }
  }
}

// ---------------------------------------------------------------- solver

bool unitriangular(const std::vector<BasisVector>& basis, bool upper) {
  for (std::size_t m = 0; m < basis.size(); ++m) {
    const QVector& c = basis[m].coords;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k == m) {
        if (c[k] != QScalar(1)) return false;
      } else if (!c[k].is_zero()) {
        if ((upper ? k < m : k > m) || !in_qinv_ideal(c[k])) return false;
      }
    }
  }
  return true;
}

void suite_solver(Recorder& rec, int s) {
  const QScalar eps = QScalar::q_power(-1);
  for (const auto& lambda : compositions(s)) {
    for (int l = 0; l <= total(lambda); ++l) {
      const std::string label = fmt(lambda, l);
      const WeightSpace wc = dual_weight_space(lambda, l);
      std::vector<BasisVector> basis;
      rec.run("dual canonical basis exists", label, [&] {
        basis = dual_canonical_basis(wc);
        return basis.size() == wc.dim();
      });
      if (basis.size() != wc.dim()) continue;
      const AntilinearMap psi = psi_c(wc);
      rec.run("dual canonical vectors are psi^c-fixed", label, [&] {
        return std::all_of(basis.begin(), basis.end(), [&](const BasisVector& b) { return psi(b.coords) == b.coords; });
      });
      rec.run("lex-unipotent with q^-1 Z[q^-1] coefficients", label, [&] { return unitriangular(basis, true); });
      rec.run("perturbations break psi^c-fixedness", label, [&] {
        for (std::size_t m = 0; m < basis.size(); ++m) {
          for (std::size_t k = m + 1; k < basis.size(); ++k) {
            const QVector x = basis[m].coords + eps * basis[k].coords;
            if (psi(x) == x) return false;
          }
        }
        return true;
      });
      if (lambda.size() == 1) {
        rec.run("one factor: dual canonical basis = dual monomials", label, [&] {
          return std::all_of(basis.begin(), basis.end(), [&](const BasisVector& b) {
            return b.coords == wc.unit(wc.position_of(b.index));
          });
        });
      }
      if (lambda.size() == 2) {
        rec.run("canonical basis pair: fixed, triangular, k > 0 support", label, [&] {
          const WeightSpace w = simple_weight_space(lambda, l);
          const auto c = canonical_basis_pair(w);
          const AntilinearMap p = psi_tensor2(w);
          return unitriangular(c, false) &&
                 std::all_of(c.begin(), c.end(), [&](const BasisVector& b) { return p(b.coords) == b.coords; });
        });
      }
    }
  }
}

// ---------------------------------------------------------------- duality

void suite_duality(Recorder& rec, int s) {
  for (const auto& lambda : compositions(s)) {
    if (lambda.size() != 2) continue;
    for (int l = 0; l <= total(lambda); ++l) {
      rec.run("canonical and dual canonical bases are dual", fmt(lambda, l), [&] {
        const auto c = canonical_basis_pair(simple_weight_space(lambda, l));
        const auto b = dual_canonical_basis(lambda, l);
        return pairing_matrix(c, b).is_identity();
      });
    }
  }
}

// ---------------------------------------------------------------- bijection

void suite_bijection(Recorder& rec, int s) {
  for (const auto& lambda : compositions(s)) {
    const auto counts = character_counts(lambda);
    for (int l = 0; l <= total(lambda) + 1; ++l) {
      const std::string label = fmt(lambda, l);
      const auto diagrams = enumerate_B(lambda, l);
      const auto indices = enumerate_P(lambda, l);
      rec.run("|B_l| = |P_lambda(l)| = dim V[mu]", label, [&] {
        const BigInt dim = l < static_cast<int>(counts.size()) ? counts[static_cast<std::size_t>(l)] : BigInt(0);
        return diagrams.size() == indices.size() && BigInt(static_cast<unsigned long>(indices.size())) == dim;
      });
      rec.run("every enumerated diagram is admissible", label, [&] {
        return std::all_of(diagrams.begin(), diagrams.end(), [](const ArcDiagram& d) { return validate_diagram(d).valid; });
      });
      rec.run("index map is a bijection onto P_lambda(l)", label, [&] {
        std::vector<MultiIndex> image;
        for (const auto& d : diagrams) image.push_back(index_of_diagram(d));
        std::sort(image.begin(), image.end());
        return image == indices;
      });
      rec.run("diagram_of_index inverts index_of_diagram", label, [&] {
        return std::all_of(diagrams.begin(), diagrams.end(), [&](const ArcDiagram& d) {
          const MultiIndex a = index_of_diagram(d);
          return diagram_of_index(lambda, a) == d && diagram_of_index_greedy(lambda, a) == d;
        });
      });
    }
  }
  // cabling of diagrams is onto the admissible diagrams of the coarse weights
  for (const auto& lambda : compositions(s)) {
    const std::vector<int> unit(static_cast<std::size_t>(total(lambda)), 1);
    for (int l = 0; l <= total(lambda); ++l) {
      rec.run("cable_diagram maps onto B_l", fmt(lambda, l), [&] {
        std::set<ArcDiagram> image;
        for (const auto& d : enumerate_B(unit, l)) {
          if (auto c = cable_diagram(d, lambda)) {
            if (!validate_diagram(*c).valid) return false;
            image.insert(*c);
          }
        }
        const auto target = enumerate_B(lambda, l);
        return std::vector<ArcDiagram>(image.begin(), image.end()) == target;
      });
    }
  }
}

// ---------------------------------------------------------------- singular

void suite_singular(Recorder& rec, int s) {
  for (const auto& lambda : compositions(s)) {
    for (int l = 0; l <= total(lambda); ++l) {
      const std::string label = fmt(lambda, l);
      rec.run("singular dual canonical vectors match singular diagrams", label, [&] {
        const WeightSpace wc = dual_weight_space(lambda, l);
        const auto sing = singular_subset(wc, dual_canonical_basis(wc));  // CountMismatch on failure
        std::vector<MultiIndex> from_basis;
        for (const auto& b : sing) from_basis.push_back(b.index);
        std::vector<MultiIndex> from_diagrams;
        for (const auto& d : filter_singular(enumerate_B(lambda, l))) from_diagrams.push_back(index_of_diagram(d));
        std::sort(from_diagrams.begin(), from_diagrams.end());
        return from_basis == from_diagrams && from_basis.size() == kernel_dim_E(wc);
      });
    }
  }
  // dim ker E on (M_mu^c (x) V)[mu + nu] = dim V[nu]
  for (const auto& lambda : compositions(std::min(s, 4))) {
    for (int mu : {-3, -1, 0, 2, 5}) {
      for (int l = 0; l <= total(lambda); ++l) {
        rec.run("singular vectors of M^c (x) V count weights of V",
                "mu=" + std::to_string(mu) + " " + fmt(lambda, l), [&] {
                  std::vector<WeightModule> f{contragredient(make_verma_truncated(mu, l))};
                  for (int x : lambda) f.push_back(make_simple(x));
                  const WeightSpace w = tensor_product(std::move(f)).weight_space(l);
                  return kernel_dim_E(w) == enumerate_P(lambda, l).size();
                });
      }
    }
  }
}

// ---------------------------------------------------------------- catalan

void suite_catalan(Recorder& rec, int s) {
  const std::size_t catalan[] = {1, 1, 2, 5, 14};
  for (int l = 1; l <= 4; ++l) {
    rec.run("invariant diagrams on 2l unit points are Catalan", "l=" + std::to_string(l), [&] {
      const std::vector<int> unit(static_cast<std::size_t>(2 * l), 1);
      return filter_invariant(enumerate_B(unit, l), unit, l).size() == catalan[l];
    });
  }
  for (const auto& lambda : compositions(s)) {
    if (total(lambda) % 2 != 0) continue;
    const int l = total(lambda) / 2;
    rec.run("invariant diagrams count the invariants", fmt(lambda, l), [&] {
      return filter_invariant(enumerate_B(lambda, l), lambda, l).size() ==
             kernel_dim_E(simple_weight_space(lambda, l));
    });
  }
}

// ---------------------------------------------------------------- cabling

void suite_cabling(Recorder& rec, int s) {
  rec.run("lambda=(2), l=1 maps with scalar 1 and kills the internal arc", "lambda=(2) l=1", [&] {
    const CablingReport r = theorem61_report({2}, 1);
    if (r.entries.size() != 2) return false;
    const auto& kept = r.entries[1];  // source (1,0)
    const auto& killed = r.entries[0];
    return killed.source == MultiIndex{0, 1} && killed.killed && kept.source == MultiIndex{1, 0} && !kept.killed &&
           kept.scalar == QScalar(1) && *kept.target == MultiIndex{1};
  });
  for (const auto& lambda : compositions(s)) {
    for (int l = 0; l <= total(lambda); ++l) {
      const std::string label = fmt(lambda, l);
      CablingReport r;
      rec.run("kill pattern matches the diagram rule", label, [&] {
        r = theorem61_report(lambda, l);
        return true;
      });
      rec.run("target index matches the collapsed diagram", label, [&] { return r.all_index_match; });
      rec.run("cabling scalars are monomial units", label, [&] { return r.all_scalars_unit; });
    }
  }
}

using SuiteFn = void (*)(Recorder&, int);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"qring", suite_qring},           {"weightmod", suite_weightmod}, {"tensor", suite_tensor},
      {"ybe", suite_ybe},               {"braiding", suite_braiding},       {"involution", suite_involution},
      {"solver", suite_solver},         {"duality", suite_duality},     {"bijection", suite_bijection},
      {"singular", suite_singular},     {"catalan", suite_catalan},     {"cabling", suite_cabling},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, int max_weight_sum) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    SuiteResult result{name, {}, 0.0};
    Recorder rec(result);
    const auto start = std::chrono::steady_clock::now();
    fn(rec, max_weight_sum);
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown suite \"" + name + "\"");
}

std::vector<SuiteResult> run_suites(const std::string& name, int max_weight_sum) {
  if (name != "all") return {run_suite(name, max_weight_sum)};
  std::vector<SuiteResult> out;
  for (const auto& n : suite_names()) out.push_back(run_suite(n, max_weight_sum));
  return out;
}

}  // namespace qcanon
