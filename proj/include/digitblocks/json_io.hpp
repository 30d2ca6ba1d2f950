#pragma once

// JSON forms of the public data types.
//
//   Word              {"base": 2, "digits": "011"}
//   SymbolicConstant  {"terms": [{"atom": "log_gamma_rat", "rho": "3/4", "coeff": "-1/1"}, ...]}
//   PartialSumResult  {"value", "terms", "tail_bound", "word", "kernel": {"type": ...}, "mode"}
//   PeriodicRule      {"preperiod": ["0/1", ...], "period": ["1/1", ...]}
//   Sequence          {"values": ["1/1", ...]}
//
// Rationals are always "p/q" strings on output; plain integers (as JSON
// numbers or strings) are accepted on input.

#include "json.hpp"

#include "digitblocks/digits.hpp"
#include "digitblocks/series.hpp"
#include "digitblocks/symbolic.hpp"
#include "digitblocks/transform.hpp"

namespace digitblocks {

using Json = nlohmann::ordered_json;

Json to_json(const Word& w);
Word word_from_json(const Json& j);

Json to_json(const Atom& a);
Atom atom_from_json(const Json& j);

Json to_json(const SymbolicConstant& c);
/// Canonicalizes whatever terms it is given.
SymbolicConstant symbolic_from_json(const Json& j);

Json to_json(const series::Kernel& k);
series::Kernel kernel_from_json(const Json& j);

Json to_json(const series::PartialSumResult& r);

Json to_json(const transform::PeriodicRule& r);
transform::PeriodicRule periodic_rule_from_json(const Json& j);

Json sequence_to_json(const transform::Sequence& s);
transform::Sequence sequence_from_json(const Json& j);

}  // namespace digitblocks
