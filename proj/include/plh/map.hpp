#pragma once

#include <string>
#include <variant>
#include <vector>

#include "plh/compactified.hpp"
#include "plh/etpl.hpp"
#include "plh/periodic.hpp"
#include "plh/piecewise.hpp"
#include "plh/root.hpp"

namespace plh {

/// A homeomorphism in one of the closed classes.
using Map = std::variant<ETPL, PeriodicPL, RootPL, CompactifiedMap, PiecewiseHomeo>;

/// "etpl", "periodic", "root", "compactified" or "piecewise".
std::string class_name(const Map& f);

Rat evaluate(const Map& f, const Rat& x);
Rat preimage(const Map& f, const Rat& y);

/// Apply f, then g. Translations join periodic maps; ETPL and compactified
/// maps join piecewise maps. Anything else across classes throws
/// "class-incompatible composition".
Map compose(const Map& f, const Map& g);
Map inverse(const Map& f);
/// Roots support exponents that are multiples or proper divisors of their degree.
Map power(const Map& f, long n);
Map canonicalize(const Map& f);
/// For periodic maps, the components within one period.
std::vector<IntervalQ> support(const Map& f);
/// Extensional equality; throws "incomparable classes" when no common class exists.
bool equals(const Map& f, const Map& g);
bool agree_on(const Map& f, const Map& g, const IntervalQ& j);
bool is_identity(const Map& f);

Map identity_map();

}  // namespace plh
