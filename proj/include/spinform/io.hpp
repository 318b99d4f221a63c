// Copyright 2026 The Spinform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPINFORM_IO_HPP
#define SPINFORM_IO_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "spinform/bases.hpp"
#include "spinform/tensor_core.hpp"

namespace spinform::io {

inline constexpr const char *kStateFormat = "spinform.state/1";
inline constexpr const char *kOperatorFormat = "spinform.operator/1";
inline constexpr const char *kBasisFormat = "spinform.basis/1";

/// Malformed or inconsistent file contents.
class FormatError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct StateFile {
    PureState state;
    std::optional<std::string> label;
    std::optional<std::uint64_t> seed;
};

using OperatorFile = std::variant<GlobalOperator, LocalOperatorList>;

nlohmann::json complex_to_json(cplx z);
cplx complex_from_json(const nlohmann::json &j);

nlohmann::json state_to_json(const StateFile &file);
StateFile state_from_json(const nlohmann::json &j);

nlohmann::json operator_to_json(const OperatorFile &op);
OperatorFile operator_from_json(const nlohmann::json &j);

nlohmann::json basis_to_json(const BasisSet &basis);
BasisSet basis_from_json(const nlohmann::json &j);

nlohmann::json read_json(const std::filesystem::path &path);
void write_json(const std::filesystem::path &path, const nlohmann::json &j);

StateFile read_state(const std::filesystem::path &path);
void write_state(const std::filesystem::path &path, const StateFile &file);
OperatorFile read_operator(const std::filesystem::path &path);
void write_operator(const std::filesystem::path &path, const OperatorFile &op);
BasisSet read_basis(const std::filesystem::path &path);
void write_basis(const std::filesystem::path &path, const BasisSet &basis);

}  // namespace spinform::io

#endif  // SPINFORM_IO_HPP
