#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "plh/constructions.hpp"
#include "plh/root.hpp"

namespace plh {

/// Classic pair on (0,1) against F_ab, and F_AB transported through A -> a b^-1.
std::vector<Row> f_relator_suite();
std::vector<Row> step2_suite(const Step2Pair& fg = default_step2_pair());

/// Bundle with h1, h2 the squeezed P-realization on J6.
SquareRootBundle squeezed_P_bundle();
std::vector<Row> dyn_suite(const SquareRootBundle& b);
std::vector<Row> nested_suite(const SquareRootBundle& b);
std::vector<Row> mainsub_suite(const SquareRootBundle& b);

/// A random map x -> x + noise pushing right on (0,1), k interior breakpoints.
ETPL random_right_pusher(std::mt19937_64& rng, int k, long denominator = 64);
/// Random choice data for an n-th root of `base` anchored at `anchor`.
RootPL random_root(std::mt19937_64& rng, const ETPL& base, int n, const Rat& anchor);
Word random_word(std::mt19937_64& rng, const std::vector<std::string>& gens, int length);

/// One row per trial; inputs come from the seed, every check is exact.
std::vector<Row> equation_suite(std::uint64_t seed, int trials);
std::vector<Row> root_suite(std::uint64_t seed, int trials, int samples = 1000);
std::vector<Row> uncountable_suite(std::uint64_t seed, int trials);

std::vector<Row> kernel_suite();
std::vector<Row> skew_root_suite(std::uint64_t seed, int max_n = 3, int words = 5);
std::vector<Row> lamplighter_suite(std::uint64_t seed, int trials = 3);
std::vector<Row> hn_suite(long window = 8, std::uint64_t seed = 1);

}  // namespace plh
