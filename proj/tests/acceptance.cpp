// Acceptance run: one PASS/FAIL line per criterion.  Exit status is the
// number of failing criteria.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <unistd.h>

#include "conifold/a_model.hpp"
#include "conifold/b_model.hpp"
#include "conifold/bryant_griffiths.hpp"
#include "conifold/cli.hpp"
#include "conifold/gluing.hpp"
#include "support/generators.hpp"

namespace {

using namespace conifold;
using conifold::testing::Generator;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) note = what;
    passed = passed && ok;
  }
};

int failures = 0;

void run(int number, const std::string& title, const std::function<Outcome()>& body) {
  Outcome o;
  auto start = Clock::now();
  try {
    o = body();
  } catch (const std::exception& e) {
    o.passed = false;
    o.note = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("criterion %d [%s]: %s (%.3f s)%s%s\n", number, title.c_str(), o.passed ? "PASS" : "FAIL", secs,
              o.note.empty() ? "" : " - ", o.note.c_str());
  std::fflush(stdout);
  if (!o.passed) ++failures;
}

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::vector<TransitionPresentation> random_presentations() {
  Generator g(20240611);
  std::vector<TransitionPresentation> out;
  for (int i = 0; i < 50; ++i) out.push_back(g.presentation(20, true));
  return out;
}

std::vector<TransitionPresentation> all_presentations() {
  auto all = conifold::testing::named_presentations();
  for (auto& p : random_presentations()) all.push_back(std::move(p));
  return all;
}

std::string describe(const TransitionPresentation& p) {
  std::ostringstream os;
  os << "k=" << p.k << " mu=" << p.mu() << " rho=" << p.rho();
  return os.str();
}

Outcome criterion_exact_sequence() {
  Outcome o;
  auto start = Clock::now();
  Generator g(20240611);
  int count = 0;
  for (int i = 0; i < 50; ++i) {
    TransitionPresentation p = g.presentation(20, true);
    ValidationReport r = validate(p);
    o.require(p.k <= 20, "k out of range");
    o.require(r.ok(), "validate failed for " + describe(p));
    o.require((p.A.transpose() * p.B).is_zero(), "A^t B != 0");
    o.require(p.mu() + p.rho() == p.k, "mu + rho != k");
    ++count;
  }
  double t = seconds_since(start);
  o.require(count >= 50, "fewer than 50 presentations");
  o.require(t < 1.0, "runtime " + std::to_string(t) + " s exceeds 1 s");
  return o;
}

Outcome criterion_glue() {
  Outcome o;
  for (const auto& p : all_presentations()) {
    GlueReport r = glue_check(p);
    o.require(r.ok(), "glue_check failed for " + describe(p));
  }
  return o;
}

Outcome criterion_monodromy_oracle() {
  Outcome o;
  for (const auto& p : all_presentations()) {
    ExtremalModel model(p, 1);
    for (std::size_t l = 0; l < p.rho(); ++l)
      o.require(monodromy_block(model, l) == residue_oracle(model, l),
                "monodromy block differs from series residue for " + describe(p));
  }
  return o;
}

Outcome criterion_picard_lefschetz() {
  Outcome o;
  std::vector<TransitionPresentation> cases = {conifold::testing::two_node_flop(), conifold::testing::three_node()};
  Generator g(77);
  for (int i = 0; i < 10; ++i) cases.push_back(g.presentation(8, false));

  for (const auto& p : cases) {
    for (std::size_t extra = 0; extra <= 1; ++extra) {
      SymplecticLattice L = standard_vanishing_lattice(p.mu(), p.mu() + extra);
      SphereSystem S = sphere_system(L, p.A);
      const std::size_t n = L.rank();
      IntMatrix N = pl_nilpotent_matrix(L, S);
      IntMatrix T = IntMatrix::identity(n) + N;
      o.require((N * N).is_zero(), "(T - I)^2 != 0 for " + describe(p));
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          IntVector ea(n), eb(n);
          ea[a] = 1;
          eb[b] = 1;
          o.require(cocycle_pairing(T.col(a), T.col(b)) == cocycle_pairing(ea, eb), "T does not preserve the pairing");
          o.require(picard_lefschetz(L, S, ea) == T.col(a), "picard_lefschetz differs from its matrix");
        }
      for (std::size_t i = 0; i < p.k; ++i)
        for (std::size_t j = 0; j < p.k; ++j)
          o.require((pl_nilpotent_matrix(L, S, {i}) * pl_nilpotent_matrix(L, S, {j})).is_zero(),
                    "N^(i) N^(j) != 0");
      for (std::size_t l = 0; l < p.mu(); ++l) {
        IntMatrix expected = monodromy_pairing(p, l);
        IntMatrix on_lattice = monodromy_pairing_on_lattice(L, p.A, l);
        for (std::size_t j = 0; j < p.mu(); ++j)
          for (std::size_t q = 0; q <= L.h; ++q) {
            Integer want = (q >= 1 && q <= p.mu()) ? expected(j, q - 1) : Integer(0);
            o.require(on_lattice(j, q) == want, "lattice pairing differs from A_l^t A_l for " + describe(p));
          }
      }
    }
  }
  o.require(monodromy_pairing(conifold::testing::two_node_flop(), 0) == IntMatrix::from_rows({{2}}),
            "A=(1,-1)^t does not give [2]");
  o.require(monodromy_pairing(conifold::testing::three_node(), 0) == IntMatrix::from_rows({{2, 1}, {1, 1}}),
            "three-node pairing is not [[2,1],[1,1]]");
  return o;
}

Outcome criterion_bryant_griffiths() {
  Outcome o;
  auto start = Clock::now();
  Generator g(4242);
  int count = 0;
  for (int i = 0; i < 20; ++i) {
    std::size_t h = static_cast<std::size_t>(g.uniform(1, 4));
    Prepotential u(g.weight_two_potential(h), h);
    BryantGriffithsConnection c = bryant_griffiths_connection(u);
    o.require(c.flat, "curvature does not vanish for u = " + to_string(u.u()));
    o.require(c.euler_relation, "Euler relation fails for u = " + to_string(u.u()));
    o.require(c.frame_consistent, "tables do not differentiate the frame for u = " + to_string(u.u()));
    ++count;
  }
  double t = seconds_since(start);
  o.require(count >= 20, "fewer than 20 potentials");
  o.require(t < 5.0, "runtime " + std::to_string(t) + " s exceeds 5 s");
  return o;
}

Outcome criterion_yukawa() {
  Outcome o;
  for (const auto& p : all_presentations()) {
    const std::size_t mu = p.mu();
    OmegaJets jets = minimal_jets(mu);
    auto omega = omega_expansion(p, jets);
    const std::size_t h = mu;
    for (std::size_t a = 0; a < mu; ++a) {
      const LogSeries& period = omega[h + 1 + a + 1];
      for (std::size_t b = 0; b < mu; ++b) {
        LogSeries db = period.derivative(b);
        for (std::size_t c = 0; c < mu; ++c)
          o.require(yukawa_principal(p, a, b, c) == db.derivative(c).singular_part(),
                    "Yukawa principal part differs from the period derivative for " + describe(p));
      }
    }
  }
  return o;
}

Outcome criterion_multiple_cover() {
  Outcome o;
  TruncatedSeries s = multiple_cover_series(4);
  const Rational expected[] = {Rational(1), Rational(1, 8), Rational(1, 27), Rational(1, 64)};
  for (int d = 1; d <= 4; ++d)
    o.require(s.coefficient({d}) == Scalar(expected[d - 1]), "degree " + std::to_string(d) + " coefficient");
  o.require(s.constant_term().is_zero(), "nonzero constant term");
  return o;
}

Outcome criterion_round_trip() {
  Outcome o;
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("conifold_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto write = [&](const fs::path& path, const nlohmann::json& doc) {
    std::ofstream out(path);
    out << doc.dump();
  };

  auto start = Clock::now();
  Generator g(99);
  std::vector<TransitionPresentation> sources = conifold::testing::named_presentations();
  for (int i = 0; i < 20; ++i) {
    PresentationFile file;
    file.presentation = i < 3 ? sources[static_cast<std::size_t>(i)] : g.presentation(8, true);
    file.order = static_cast<int>(g.uniform(0, 4));
    std::size_t nb = static_cast<std::size_t>(g.uniform(1, 3));
    file.base_rank = nb;
    file.gw = g.gw_list(nb, static_cast<std::size_t>(g.uniform(0, 6)));
    file.had_gw = true;
    if (g.coin()) {
      // A nontrivial lift of H_2(X) into H_2(Y).
      const std::size_t k = file.presentation.k;
      IntMatrix lift(k + nb, nb);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < nb; ++c) lift(r, c) = g.uniform(-1, 2);
      for (std::size_t c = 0; c < nb; ++c) lift(k + c, c) = 1;
      file.lift = lift;
    }
    fs::path x_path = dir / ("x" + std::to_string(i) + ".json");
    write(x_path, presentation_to_json(file));

    CommandResult forward = cmd_transform(x_path.string(), "x-to-y");
    o.require(forward.exit_code == 0, "x-to-y failed: " + forward.diagnostics);
    if (forward.exit_code != 0) continue;

    nlohmann::json y_doc = presentation_to_json(file);
    y_doc["gw"] = forward.output["gw"];
    y_doc["base_rank"] = forward.output["base_rank"];
    fs::path y_path = dir / ("y" + std::to_string(i) + ".json");
    write(y_path, y_doc);

    CommandResult back = cmd_transform(y_path.string(), "y-to-x");
    o.require(back.exit_code == 0, "y-to-x failed: " + back.diagnostics);
    if (back.exit_code != 0) continue;
    o.require(back.output["gw"] == presentation_to_json(file)["gw"], "round trip changed list " + std::to_string(i));
  }
  double t = seconds_since(start);
  fs::remove_all(dir);
  o.require(t < 1.0, "runtime " + std::to_string(t) + " s exceeds 1 s");
  return o;
}

}  // namespace

int main() {
  run(1, "exact sequence on 50 random presentations", criterion_exact_sequence);
  run(2, "glue verdicts on named and random presentations", criterion_glue);
  run(3, "monodromy blocks match series residues", criterion_monodromy_oracle);
  run(4, "Picard-Lefschetz suite", criterion_picard_lefschetz);
  run(5, "flatness of the special-geometry connection", criterion_bryant_griffiths);
  run(6, "Yukawa principal parts from two paths", criterion_yukawa);
  run(7, "multiple-cover coefficients", criterion_multiple_cover);
  run(8, "prepotential transform round trip", criterion_round_trip);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures;
}
