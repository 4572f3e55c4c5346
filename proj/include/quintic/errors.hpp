/*
   Copyright 2026 The quintic-atlas authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace quintic {

// Violated precondition or malformed input; the caller's fault.
class domain_error : public std::invalid_argument {
   public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// A state the underlying theory rules out. Reaching one means a formula
// transcription or the theory itself is broken, never user input.
class internal_error : public std::logic_error {
   public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace quintic
