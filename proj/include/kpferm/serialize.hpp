#pragma once

// JSON and text forms of the domain types. Scalars are exact fraction strings.
// Every parser throws Error(Parse) on malformed input and validates the
// domain invariants of what it builds.

#include "kpferm/grassmannian.hpp"
#include "kpferm/loopalg.hpp"
#include "kpferm/npoint.hpp"
#include "kpferm/quad.hpp"
#include "kpferm/subalgebras.hpp"
#include "kpferm/tau.hpp"
#include "kpferm/tseries.hpp"

#include "json.hpp"  // vendored nlohmann/json

#include <set>
#include <string>

namespace kpferm {

using Json = nlohmann::ordered_json;

/// Parses text as JSON; Error(Parse) on failure.
Json parse_json_text(const std::string& text);

Json to_json(const AffineCoords& a);
AffineCoords affine_from_json(const Json& j);

Json to_json(const QuadElement& x);
QuadElement quad_from_json(const Json& j);

Json to_json(const NeutralQuadElement& x);
NeutralQuadElement neutral_from_json(const Json& j);

Json to_json(const BandMatrix& m);
BandMatrix band_matrix_from_json(const Json& j);

Json to_json(const SquareMatrix& m);
SquareMatrix square_matrix_from_json(const Json& j);

Json to_json(const LoopElement& a);
LoopElement loop_from_json(const Json& j);

Json to_json(const EmbeddingData& e);
EmbeddingData embedding_from_json(const Json& j);

Json to_json(const TSeries& s);
TSeries tseries_from_json(const Json& j);

Json to_json(const NPointTable& t);
NPointTable npoint_from_json(const Json& j);

Json to_json(const PunctureData& p);
PunctureData puncture_from_json(const Json& j);

Json labels_to_json(const std::set<std::string>& labels);

std::string to_text(const TSeries& s);
/// One "j1,j2,...: value" line per non-zero cell.
std::string to_text(const NPointTable& t);
std::string to_text(const BandMatrix& m);
std::string labels_to_text(const std::set<std::string>& labels);

}  // namespace kpferm
