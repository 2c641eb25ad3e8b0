#pragma once

// The trivial logarithmic connection on (C + C^dual)^k over C^k, and the
// connections it induces on the A- and B-sides of a transition.

#include <string>
#include <vector>

#include "conifold/log_connection.hpp"
#include "conifold/transition.hpp"

namespace conifold {

/// Frame e_1..e_k, e^1..e^k; residue along y_i = 0 sends e_i to (1/z) e^i.
LogConnection trivial_log_connection(std::size_t k);

/// Pulls the trivial connection back along y = M t and projects orthogonally
/// (standard dot product) onto C^m + (C^m)^dual.  Forms are the rows of M.
/// Throws RankDeficient unless M has full column rank.
LogConnection induce_via_embedding(std::size_t k, const IntMatrix& M);

/// An identification of the coordinates y_i with linear forms on the
/// target, recorded rather than applied silently.
struct Substitution {
  std::string target;               // "v" or "w"
  std::vector<IntVector> forms;     // y_i = sum_p forms[i][p] * target_p
  bool z_is_two_pi_i = false;       // z^-1 replaced by lambda
};

struct GlueVerdict {
  bool passed = true;
  std::vector<std::string> mismatches;
};

struct GlueReport {
  GlueVerdict dubrovin;      // B-side against the extremal A-model residues
  GlueVerdict gauss_manin;   // A-side against the topological GM residues
  bool orthogonal = false;   // A^t B = 0
  std::vector<std::string> orthogonality_violations;
  bool invertible = false;   // det [A | B] != 0
  Integer determinant = 0;
  Substitution b_side;
  Substitution a_side;

  bool ok() const { return dubrovin.passed && gauss_manin.passed && orthogonal && invertible; }
};

/// Throws DimensionMismatch when the shapes are inconsistent; every other
/// failure is reported.
GlueReport glue_check(const TransitionPresentation& p);

}  // namespace conifold
