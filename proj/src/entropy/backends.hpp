// Copyright 2026 The qrstates Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QRS_SRC_ENTROPY_BACKENDS_HPP
#define QRS_SRC_ENTROPY_BACKENDS_HPP

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>

#include "qrs/entropy.hpp"

namespace qrs::entropy::backends {

std::unique_ptr<Backend> make_prng(std::uint64_t seed);
std::unique_ptr<Backend> make_os();
std::unique_ptr<Backend> make_device(const std::filesystem::path& path);
std::unique_ptr<Backend> make_remote(std::string endpoint, std::chrono::milliseconds timeout);

}  // namespace qrs::entropy::backends

#endif  // QRS_SRC_ENTROPY_BACKENDS_HPP
