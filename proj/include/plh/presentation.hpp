#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "plh/map.hpp"
#include "plh/mixed.hpp"
#include "plh/word.hpp"

namespace plh {

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  Presentation() = default;
  /// Throws if a relator mentions an undeclared generator.
  Presentation(std::vector<std::string> generators, std::vector<Word> relators);
};

using Assignment = std::map<std::string, Map>;
using MixedAssignment = std::map<std::string, MixedProduct>;

Map evaluate_word(const Word& w, const Assignment& a);
MixedProduct evaluate_word_mixed(const Word& w, const MixedAssignment& a);

/// A rational moved by f, preferring breakpoints of small denominator; nullopt
/// iff f is the identity.
std::optional<Rat> moved_witness(const Map& f);
/// The rational of least denominator in the open interval j (ties: least |x|).
Rat simplest_rational(const IntervalQ& j);

struct RelatorCheck {
  Word relator;
  bool pass = false;
  std::optional<Rat> witness;
};

struct CheckReport {
  std::vector<RelatorCheck> relators;
  bool pass = false;
  /// True if all assigned generators pairwise commute.
  bool commuting = false;
};

CheckReport check_presentation(const Presentation& p, const Assignment& a);

/// "w", "w1", "w2", "w_printed", "w2_printed".
Word builtin_word(const std::string& name);
/// "F_AB", "F_ab".
Presentation builtin_presentation(const std::string& name);
/// A -> a b^-1, B -> b.
Substitution tietze_AB_to_ab();
/// Any of the above by name; throws on unknown names.
std::variant<Word, Presentation, Substitution> builtin(const std::string& name);

struct FormalRoot {
  Presentation presentation;
  /// Generators equal to the identity by a single-syllable relator.
  std::vector<std::string> trivial_generators;
  /// Pairs (root, original).
  std::vector<std::pair<std::string, std::string>> roots;
};

/// Adds a root y_i for each generator x_i and the relators x_i y_i^-2.
/// Roots are listed first, then the original generators.
FormalRoot formal_square_root(const Presentation& p);

}  // namespace plh
