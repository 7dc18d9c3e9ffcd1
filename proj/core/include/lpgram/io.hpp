#pragma once

#include "lpgram/convert.hpp"
#include "lpgram/proof.hpp"
#include "lpgram/quadratic.hpp"

#include <optional>
#include <string>

namespace lpgram {

// JSON text interfaces.  Every *_from_json rejects malformed input with
// std::invalid_argument, and proofs and derivations are checked against
// their validators on the way in.

std::string grammar_to_json(const LpGrammar& g);
LpGrammar grammar_from_json(const std::string& text);

struct SystemFile {
  BvassamSystem system;
  std::optional<std::uint64_t> linear_bound;
};

std::string system_to_json(const BvassamSystem& sys,
                           std::optional<std::uint64_t> linear_bound = {});
SystemFile system_from_json(const std::string& text);

std::string proof_to_json(const ProofPtr& p);
ProofPtr proof_from_json(const std::string& text);

std::string derivation_to_json(const BvassamSystem& sys, const BvDerivPtr& d);
BvDerivPtr derivation_from_json(const BvassamSystem& sys,
                                const std::string& text);

std::string equiv_report_to_json(const std::string& instance,
                                 const std::string& direction,
                                 const EquivReport& rep);
std::string quadratic_report_to_json(const QuadraticCheck& rep);

// Throws std::runtime_error on filesystem errors.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace lpgram
