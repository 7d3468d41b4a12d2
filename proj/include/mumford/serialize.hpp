#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "mumford/covering.hpp"
#include "mumford/groups.hpp"
#include "mumford/theta.hpp"

namespace mumford {

using Json = nlohmann::ordered_json;

/// Field given as {"p":3, "f":1, "e":1}; missing keys default to f = e = 1.
FieldParams params_from_json(const Json& j);
Json to_json(const FieldParams& params);

/// Laurent literal: a shorthand string ("t^-2 + 2"), a list of terms
/// [exp_num, exp_den, c_0, ..., c_{f-1}] with exponents in t-units, or an
/// object {"terms": [...], "prec": "q"} with absolute precision q in t-units.
LaurentElem laurent_from_json(const FieldParams& params, const Json& j);
Json to_json(const LaurentElem& x);

/// "inf" or a Laurent literal.
End end_from_json(const FieldParams& params, const Json& j);
Json to_json(const End& z);

Valu valu_from_json(const Json& j);
Json to_json(const Valu& v);
Json to_json(const ExtVal& v);
/// ord in pi-units as an exact valuation in t-units.
Json ord_json(const FieldParams& params, std::int64_t ord);

/// {"p":..,"f":..,"e":..,"a":[...],"lambda":[...]}.
BranchData branch_data_from_json(const Json& j);
Json to_json(const BranchData& bd);
Json to_json(const Verdict& v);

/// {"center": laurent, "level": n} with n in pi-units.
TreeVertex vertex_from_json(const FieldParams& params, const Json& j);
Json to_json(const TreeVertex& v);
Json to_json(const MirrorDistance& md);
Json to_json(const GeodesicScan& scan);
Json to_json(const HullTree& h);

Json to_json(const ThresholdTable& tt);
Json to_json(const Piece& piece);
Json to_json(const CoverCertificate& cert);
Json to_json(const ReductionReport& rep);
Json to_json(const ArtinSchreierResult& r);

Moebius moebius_from_json(const FieldParams& params, const Json& j);
Json to_json(const Moebius& g);

/// Generators as {"fixed": end, "eta": laurent} or {"matrix": [a, b, c, d]}.
GroupData group_from_json(const FieldParams& params, const Json& j);
Json to_json(const GroupData& g);
Json to_json(const WordNF& w);
Json to_json(const HutiReport& rep);

/// {"p", "f", "e", "generators" | ("P2", "eta"), optional "u", "L", "prec"}.
/// Without "u" the standard frame and an admissible u are chosen.
ThetaConfig theta_config_from_json(const Json& j, std::optional<int> L, std::optional<std::int64_t> prec);
Json to_json(const ThetaConfig& cfg);
Json to_json(const LambdaRecovery& rec);
Json to_json(const StabilityReport& rep, const FieldParams& params);

}  // namespace mumford
