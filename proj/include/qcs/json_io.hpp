#ifndef QCS_JSON_IO_HPP
#define QCS_JSON_IO_HPP

#include <json.hpp>

#include "qcs/construct.hpp"

// Blueprint <-> JSON: the interchange format between the CLI subcommands.

namespace qcs {

nlohmann::json blueprint_to_json(const Blueprint& bp);
Blueprint blueprint_from_json(const nlohmann::json& j);

}  // namespace qcs

#endif
