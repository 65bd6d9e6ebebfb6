#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "plh/mixed.hpp"
#include "plh/periodic.hpp"
#include "plh/thompson.hpp"

namespace plh {

/// One checked identity of a certificate table.
struct Row {
  std::string name;
  bool pass = false;
  std::string detail;
  std::optional<Rat> witness;
};

bool all_pass(const std::vector<Row>& rows);

/// Row comparing f and g on j; on failure the witness is a point of j where
/// they differ (when one is found among simple rationals of j).
Row agreement_row(std::string name, const Map& f, const Map& g, const IntervalQ& j);

/// The partition of [1,2) into sixteen intervals of length 1/16.
struct SixteenPartition {
  /// J_i = [1 + (i-1)/16, 1 + i/16), 1 <= i <= 16.
  static IntervalQ J(int i);
  /// J_X as maximal half-open intervals, sorted.
  static std::vector<IntervalQ> J_union(std::vector<int> X);
};

struct Step2Pair {
  ETPL f;
  ETPL g;
};

struct Step2Report {
  /// Rows "Step 2 (1)" to "Step 2 (4)".
  std::vector<Row> conditions;
  std::vector<IntervalQ> gf_inverse_support;
  bool pass = false;

  /// Names of the failed conditions, comma separated.
  std::string failures() const;
};

Step2Report verify_step2(const ETPL& f, const ETPL& g);
/// f through (0,0), (1,5/4), (27/16,31/16), (2,2); g through (1,1),
/// (17/16,21/16), (7/4,2), (3,3). Verified on every call.
Step2Pair default_step2_pair();

Map to_map(const Letter& h);
Letter inverse(const Letter& h);

struct SquareRootBundle {
  ETPL f, g;
  Letter h1, h2, h3;
  MixedProduct lambda1, lambda2;
  /// Restrictions of l2 l1^-1 (p2, q1) and l1^-1 l2 (p1, q2).
  Map p1, p2, q1, q2;
  std::vector<IntervalQ> support_l2_l1inv, support_l1inv_l2;
  /// Two-chain, dyn criterion and relators for the squares of the lambdas.
  FCertificate squares;
  /// Conjugation cross-check and the support-component tables.
  std::vector<Row> checks;
  bool valid = false;
};

/// h1 and h2 must be compact ETPL maps supported in the interior of J6, or
/// compactified maps targeted at J6.
SquareRootBundle build_square_root_of_F(const Letter& h1, const Letter& h2,
                                        const Step2Pair& fg = default_step2_pair());

struct MainsubCertificate {
  std::vector<Row> rows;
  FCertificate nested_left;
  FCertificate nested_right;
  bool valid = false;
};

/// The ten restriction identities, recomputed from the bundle's lambdas.
MainsubCertificate certify_mainsub(const SquareRootBundle& b);

/// The P-realization generators s, t on (0,1) and (2,3), squeezed affinely into j.
std::pair<ETPL, ETPL> squeezed_P_pair(const IntervalQ& j);

struct EquationBundle {
  ETPL mu, nu, chi, xi;
  ETPL tau;
  ETPL psi, phi, kappa, y;
  ETPL alpha, beta;
  /// The inner commutator [tau y^-1, y^-1 tau^-1 y]; beta = tau c tau^-1.
  ETPL c;
  /// Fourteen component actions: six of alpha, eight of c.
  std::vector<Row> actions;
  std::vector<Row> identities;
  bool valid = false;
};

/// Inputs must be supported in (0,1).
EquationBundle kappa_y(const ETPL& mu, const ETPL& nu, const ETPL& chi, const ETPL& xi);

struct UncountableBundle {
  EquationBundle equation;
  SquareRootBundle root;
  /// k1 = l1^-1 l2 and k1' = l2 l1^-1.
  PiecewiseHomeo k1, k1_prime;
  /// w(k1, k1') on J10 as computed, the identity elsewhere.
  PiecewiseHomeo k2;
  std::vector<Row> rows;
  bool valid = false;
};

UncountableBundle uncountable_pipeline(const ETPL& mu, const ETPL& nu, const ETPL& chi, const ETPL& xi);

struct SkewRootBundle {
  std::vector<ETPL> h;
  /// h_i moved into [0,1/2] by x -> x/2.
  std::vector<ETPL> h_tilde;
  /// T_1..T_n, then T_{n+1} = x + 1/2.
  std::vector<PeriodicPL> T;
  std::vector<PeriodicPL> S;
  std::vector<Row> rows;
  bool valid = false;
};

SkewRootBundle skew_root_of_translation(const std::vector<ETPL>& h);
/// W(S_1..S_n) agrees with W(h~_1^-1..h~_n^-1) on [0,1/2] and with the
/// conjugate of W(h~_1..h~_n) on [1/2,1]. Generators are named S1..Sn.
Row skew_product_row(const SkewRootBundle& b, const Word& w);

struct LamplighterBundle {
  ETPL g1, g2;
  ETPL psi;
  ETPL T;
  std::vector<Row> rows;
  bool valid = false;
};

LamplighterBundle lamplighter_root(const ETPL& g1, const ETPL& g2, long k_range = 5);

/// Compact ETPL supported in [0,1] with k interior breakpoints, coordinates
/// multiples of 1/denominator.
ETPL random_unit_map(std::mt19937_64& rng, int k, long denominator = 64);

}  // namespace plh
