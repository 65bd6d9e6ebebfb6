#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "plh/compactified.hpp"
#include "plh/etpl.hpp"
#include "plh/map.hpp"
#include "plh/piecewise.hpp"

namespace plh {

using Letter = std::variant<ETPL, CompactifiedMap>;

/// Unevaluated product of ETPL and compactified maps, applied left to right.
///
/// Evaluation is exact at any rational. The structural queries cut the line at
/// the pullbacks of the compactified targets and follow each cell through the
/// letters; a cell that meets a target must be carried onto it affinely.
class MixedProduct {
public:
  MixedProduct() = default;
  explicit MixedProduct(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  MixedProduct(const ETPL& f) : letters_{f} {}             // NOLINT(google-explicit-constructor)
  MixedProduct(const CompactifiedMap& f) : letters_{f} {}  // NOLINT(google-explicit-constructor)
  /// The parts of f as letters; they commute, having disjoint supports.
  explicit MixedProduct(const PiecewiseHomeo& f);

  const std::vector<Letter>& letters() const { return letters_; }
  bool all_etpl() const;
  Rat operator()(const Rat& x) const;
  Rat preimage(const Rat& y) const;

  /// Product of the ETPL letters alone.
  ETPL etpl_part() const;
  /// The product as a PiecewiseHomeo; throws "class-incompatible composition"
  /// unless every cell meeting a target returns to itself.
  PiecewiseHomeo analyze() const;

private:
  std::vector<Letter> letters_;
};

MixedProduct compose(const MixedProduct& f, const MixedProduct& g);
MixedProduct inverse(const MixedProduct& f);
MixedProduct power(const MixedProduct& f, long n);
/// Support components; cells carried off themselves count as moved. Throws
/// when a cell meets a target only partly.
std::vector<IntervalQ> support(const MixedProduct& f);
/// ETPL when all letters are ETPL, else the analyzed PiecewiseHomeo, else nullopt.
std::optional<Map> exact_form(const MixedProduct& f);

}  // namespace plh
