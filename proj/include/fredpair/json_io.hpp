#pragma once

#include "fredpair/chains.hpp"
#include "fredpair/classification.hpp"
#include "fredpair/generators.hpp"
#include "fredpair/quotient.hpp"

#include <json.hpp>

#include <string>

namespace fredpair {

/// Plain nlohmann json: object keys serialize sorted, so identical data
/// always dumps to identical bytes.
using Json = nlohmann::json;

/// Matrix: {"rows": r, "cols": c, "entries": [[...], ...]} with each
/// entry "p/q", or "n" for integers; plain JSON integers are accepted
/// on input.  Subspace: {"ambient": n, "basis": Matrix}, emitted in
/// canonical form.  Pair: {"x_dim", "y_dim", "S", "T"}.
/// Chain: {"dims", "boundaries", "complex"} with boundaries[i] mapping
/// space i+1 into space i.  SynthSpec: {"case", "number", "blocks"}.
Json to_json(const Rational& r);
Json to_json(const Matrix& m);
Json to_json(const Subspace& s);
Json to_json(const OperatorPair& pr);
Json to_json(const DefectProfile& d);
Json to_json(const Classification& c);
Json to_json(const IndexFormulas& f);
Json to_json(const FullDecomposition& d);
Json to_json(const CanonicalReport& r);
Json to_json(const ChainComplex& c);
Json to_json(const ChainReport& r);
Json to_json(const SynthSpec& s);
/// Standard pair fields for the induced pair plus "x_projection" and
/// "y_projection".
Json to_json(const QuotientPair& q);

/// Readers check presence and types field by field and throw
/// parse_error naming the offender; structural size mismatches (an
/// entries row of the wrong length, a basis wider than its ambient
/// space) surface as dimension_error from the constructed object.
Rational rational_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
Subspace subspace_from_json(const Json& j);
OperatorPair pair_from_json(const Json& j);
ChainComplex chain_from_json(const Json& j);
SynthSpec synth_spec_from_json(const Json& j);

/// Wraps nlohmann's parser, converting its exceptions (which carry
/// byte/line positions in the message) into parse_error.
Json parse_json_text(const std::string& text);
/// parse_error when the file cannot be read or does not parse.
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

} // namespace fredpair
