#ifndef HHBOUNDS_CLI_REPORT_HPP
#define HHBOUNDS_CLI_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "hhbounds/bounds.hpp"
#include "hhbounds/coeffs.hpp"
#include "hhbounds/identity.hpp"
#include "hhbounds/means.hpp"
#include "hhbounds/quadrules.hpp"

namespace hhb::cli {

using nlohmann::json;

json to_json(const IdentityReport& r);
json to_json(const BoundReport& r);
json to_json(const MeansReport& r);
json to_json(const CoefficientSet& cs);

const std::vector<std::string>& identity_columns();
std::vector<std::string> csv_row(const IdentityReport& r);

const std::vector<std::string>& bound_columns();
std::vector<std::string> csv_row(const BoundReport& r);

const std::vector<std::string>& means_columns();
std::vector<std::string> csv_row(const MeansReport& r);

}  // namespace hhb::cli

#endif  // HHBOUNDS_CLI_REPORT_HPP
