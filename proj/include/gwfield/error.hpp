// Copyright 2026 The gwfield Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace gwf {

/// Broad failure category. The CLI maps these onto process exit codes.
enum class ErrorKind {
    InvalidArgument,  ///< precondition or schema violation (exit 2)
    Numerical,        ///< non-convergence, singular case (exit 3)
    Io,               ///< file system or parse failure (exit 4)
};

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message, std::string context = {})
        : std::runtime_error(message), kind_(kind), context_(std::move(context)) {
    }

    ErrorKind kind() const noexcept {
        return kind_;
    }
    const std::string &context() const noexcept {
        return context_;
    }

   private:
    ErrorKind kind_;
    std::string context_;
};

[[noreturn]] inline void fail_argument(const std::string &message, std::string context = {}) {
    throw Error(ErrorKind::InvalidArgument, message, std::move(context));
}

[[noreturn]] inline void fail_numerical(const std::string &message, std::string context = {}) {
    throw Error(ErrorKind::Numerical, message, std::move(context));
}

[[noreturn]] inline void fail_io(const std::string &message, std::string context = {}) {
    throw Error(ErrorKind::Io, message, std::move(context));
}

}  // namespace gwf
