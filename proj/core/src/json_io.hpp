// Copyright 2026 Chaintune Contributors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

// Private helper; nlohmann types never appear in installed headers.

#pragma once

#include <filesystem>
#include <stdexcept>

#include "chaintune/detail/io.hpp"
#include "nlohmann/json.hpp"

namespace chaintune::detail {

/// Parse a JSON file; parse errors are rethrown with the path and the
/// parser's byte/line context in the message.
inline nlohmann::json parse_json_file(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& exc) {
        throw std::runtime_error(path.string() + ": " + exc.what());
    }
}

}  // namespace chaintune::detail
