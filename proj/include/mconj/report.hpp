#pragma once

#include <string>

#include <json.hpp>

#include "mconj/bounds.hpp"
#include "mconj/determinantal.hpp"
#include "mconj/fuzz.hpp"
#include "mconj/hilbert.hpp"
#include "mconj/powers.hpp"
#include "mconj/regseq.hpp"
#include "mconj/resolution.hpp"

namespace mconj {

/// Report schema. Field order is fixed; integers too large for 64 bits are
/// emitted as decimal strings, and every rational as {"exact": "p/q",
/// "decimal": "..."}.
using Json = nlohmann::ordered_json;

Json integer_json(const Integer& value);
Json rational_json(const Rational& value);

Json to_json(const KPolynomial& k);
/// [[i, j, beta_ij], ...] in (i, j) order.
Json to_json(const BettiTable& table);
Json to_json(const ShiftSummary& summary);
Json to_json(const HilbertData& data);
Json to_json(const ConjectureReport& report);
Json to_json(const VandermondeCertificate& cert);
Json to_json(const DegreeMatrix& matrix);
Json to_json(const DeterminantalBounds& bounds);
Json to_json(const ShiftProfile& profile);
Json to_json(const ExtensionTrace& trace);
Json to_json(const PowerScan& scan);
Json to_json(const SlopeReport& report);
Json to_json(const AsymptoticMultiplicity& asym);
Json to_json(const LimitRatioReport& report);
Json to_json(const FuzzSummary& summary);
Json to_json(const FuzzResult& result);

/// Two-space indented text with a trailing newline.
std::string render(const Json& json);

}  // namespace mconj
