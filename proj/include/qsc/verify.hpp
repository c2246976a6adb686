#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsc/normalia.hpp"
#include "qsc/spectra.hpp"

namespace qsc {

struct VerifyConfig {
  std::string type = "A2";
  long height = 6;
  int degree_cap = 12;
  long margin = 2;
  std::optional<std::vector<int>> word;  // restrict context checks to one word
  int threads = 1;
};

struct CheckResult {
  std::string name;
  std::string scope;
  std::size_t instances = 0;
  bool passed = true;
  double seconds = 0.0;
  std::vector<std::string> failures;
  nlohmann::json counterexamples = nlohmann::json::array();
};

// {"n_1,...,n_l": coefficient} rendering of PBW coordinates
nlohmann::json pbw_vector_json(const PBWVector& v);

// registered check names, in the order they run under `verify`
std::vector<std::string> check_names();

// run one named check; throws rootsys_error for unknown names
CheckResult run_check(const std::string& name, const VerifyConfig& cfg);

std::vector<CheckResult> run_all_checks(const VerifyConfig& cfg);

nlohmann::json ledger_json(const std::vector<CheckResult>& results);
std::string ledger_text(const std::vector<CheckResult>& results);

// reduced words of the LS-suite contexts for a type (canonical words of the
// longest element by default)
std::vector<std::vector<int>> ls_context_words(const CartanDatum& cd);

} // namespace qsc
