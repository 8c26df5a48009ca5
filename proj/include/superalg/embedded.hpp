#pragma once

#include <map>
#include <string>

namespace salg {

// Data files compiled into the library, keyed by path relative to data/
// (e.g. "identities/assoc.id").
const std::map<std::string, std::string>& embedded_files();

} // namespace salg
