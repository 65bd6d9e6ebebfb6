#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plh/mixed.hpp"
#include "plh/presentation.hpp"

namespace plh {

/// Supports (a, c) and (b, d) of a two-chain, a < b < c < d.
struct ChainData {
  Rat a, b, c, d;
};

ChainData check_two_chain(const MixedProduct& f, const MixedProduct& g);
/// g(f(b)) >= c for a two-chain with f, g pushing right on their supports.
bool check_dyn_criterion(const MixedProduct& f, const MixedProduct& g);
/// The value g(f(b)) the criterion compares against c.
Rat dyn_value(const MixedProduct& f, const MixedProduct& g);

enum class Criterion { dyn, nested_left, nested_right, relations_only };
std::string criterion_name(Criterion c);

struct Hypothesis {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Relator check for a pair against both presentations of F. The marking used
/// is the first of (f, g), (f^-1, g^-1), (g, f), (g^-1, f^-1), in the a,b
/// presentation and then the A,B presentation, that passes. `exact` is false
/// when some relator could not be brought into a closed class and was checked
/// only at sample points.
struct RelationCheck {
  bool pass = false;
  bool exact = true;
  std::string marking;
  std::vector<RelatorCheck> relators;
};

RelationCheck check_F_relations(const MixedProduct& f, const MixedProduct& g);

struct FCertificate {
  Criterion criterion = Criterion::relations_only;
  std::vector<Hypothesis> hypotheses;
  RelationCheck relations;
  /// A point moved by [f, g].
  std::optional<Rat> noncommutation_witness;
  bool valid = false;
};

/// Relations plus non-commutation, no dynamical hypotheses.
FCertificate certify_F_pair(const MixedProduct& f, const MixedProduct& g);
FCertificate check_dyn_certificate(const MixedProduct& f, const MixedProduct& g);
FCertificate check_nested_left(const MixedProduct& f, const MixedProduct& g, const Rat& a, const Rat& b1,
                               const Rat& b2);
FCertificate check_nested_right(const MixedProduct& f, const MixedProduct& g, const Rat& a1, const Rat& a2,
                                const Rat& b);

/// The classic generators of F on [0,1], in the orientation that satisfies the
/// a,b presentation, transported affinely onto the bounded interval j.
std::pair<ETPL, ETPL> standard_F_generators(const IntervalQ& j);
/// The classic pair x0, x1 on [0,1] before any orientation choice.
std::pair<ETPL, ETPL> classic_F_pair();
/// True if standard_F_generators uses the inverses of the classic pair.
bool standard_F_uses_inverse();

/// s -> (p1 on left)(q2 on right), t -> (p2 on left)(q1 on right), where
/// (p1, p2) and (q1, q2) are standard F markings. Closures must be disjoint.
Assignment P_realization(const IntervalQ& left, const IntervalQ& right);
/// True iff w(s, t) is trivial in the realization on (0,1) and (2,3).
bool in_P_kernel(const Word& w);

/// x -> -x conjugate of f.
ETPL mirror(const ETPL& f);

}  // namespace plh
