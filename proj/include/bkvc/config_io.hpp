#pragma once

#include <string>
#include <string_view>

#include "bkvc/cutmodel.hpp"

namespace bkvc {

// Flat `key = value` text, one variable per line: the 35 cuts, mu, nu, xi,
// pi, pi1..pi6, lambda, lambda1..lambda6. Values print with full precision so
// a dump parses back to the identical configuration.
std::string dump_config(const Configuration& c);

// Accepts '#' comments and blank lines. Keys not present keep their defaults.
// Unknown or repeated keys and malformed numbers raise ParseError.
Configuration parse_config(std::string_view text);

Configuration read_config_file(const std::string& path);
void write_config_file(const std::string& path, const Configuration& c);

}  // namespace bkvc
