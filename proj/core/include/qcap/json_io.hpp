#pragma once

#include <string>
#include <string_view>

#include "qcap/channel.hpp"
#include "qcap/pdit.hpp"

namespace qcap {

// Complex matrices are encoded as a flat row-major array of [re, im] pairs.
//
// Channel: {"name": str, "in_dim": n, "out_dim": m, "kraus": [matrix, ...]}
// Pdit:    {"d": n, "shield_labels": [a, b], "shield_dims": [da, db],
//           "shield": matrix, "twists": [matrix, ...]}   (U_ij at i * d + j)
//
// Parsing throws std::invalid_argument on malformed documents; the decoded
// objects go through the usual validating constructors.

std::string channel_to_json(const QuantumChannel& ch, int indent = 2);
QuantumChannel channel_from_json(std::string_view text);

std::string pdit_to_json(const PditState& gamma, int indent = 2);
PditState pdit_from_json(std::string_view text);

}  // namespace qcap
