#pragma once

#include <vector>

#include "plh/constructions.hpp"
#include "plh/hallneumann.hpp"
#include "plh/presentation.hpp"
#include "plh/serialize.hpp"

namespace plh {

/// Words travel as their printed form.
Json to_json(const Word& w);
Word word_from_json(const Json& j);
Json to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);
Json to_json(const HNElement& x);
HNElement hn_from_json(const Json& j);

Json to_json(const Row& r);
Row row_from_json(const Json& j);
Json to_json(const std::vector<Row>& rows);
std::vector<Row> rows_from_json(const Json& j);

Json to_json(const Letter& h);
Letter letter_from_json(const Json& j);
Json to_json(const MixedProduct& m);
MixedProduct mixed_from_json(const Json& j);

/// Hypotheses and relator results as rows.
std::vector<Row> certificate_rows(const FCertificate& c);
Json to_json(const FCertificate& c);

Json to_json(const Step2Report& r);
Json to_json(const SquareRootBundle& b);
/// Rebuilds the bundle from the stored f, g, h1, h2 and checks that the stored
/// lambdas match the rebuilt ones.
SquareRootBundle square_root_bundle_from_json(const Json& j);
Json to_json(const MainsubCertificate& c);
Json to_json(const EquationBundle& b);
Json to_json(const UncountableBundle& b);
Json to_json(const SkewRootBundle& b);
Json to_json(const LamplighterBundle& b);

}  // namespace plh
