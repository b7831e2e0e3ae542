#pragma once

#include "pg/axioms.hpp"
#include "pg/lemmas.hpp"
#include "pg/order_tree.hpp"

#include "json.hpp"

namespace pg {

using ordered_json = nlohmann::ordered_json;

// JSON records for the CLI and for test fixtures. Half-integer quantities are
// emitted as doubled integers in *_x2 / *_x4 fields; witnesses are words.
ordered_json pregroup_report(const Pregroup& p);
ordered_json to_json(const AxiomVerdict& v);
ordered_json tree_report(const Pregroup& p);
ordered_json to_json(const Universe& u, const LyndonReport& r);
ordered_json ball_report(const Ball& b);
ordered_json to_json(const Ball& b, const Delta4& d);
ordered_json to_json(const Ball& b, const DeltaThin& d);
ordered_json to_json(const HConstants& h);
ordered_json to_json(const LemmaReport& r);

}  // namespace pg
