/*
Copyright 2026 the gencode authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
you may obtain a copy of the License at

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

namespace gencode {

// Failure categories; the CLI turns these into process exit codes.
enum class ErrorCategory { input = 1, convergence = 2, container = 3 };

class CodingError : public std::runtime_error {
public:
    CodingError(ErrorCategory category, const std::string& msg)
        : std::runtime_error(msg), category_(category) {}

    ErrorCategory category() const { return category_; }

private:
    ErrorCategory category_;
};

#define GENCODE_DEFINE_ERROR(NAME, CATEGORY)                                  \
    class NAME : public CodingError {                                         \
    public:                                                                   \
        explicit NAME(const std::string& msg)                                 \
            : CodingError(ErrorCategory::CATEGORY, std::string(#NAME ": ") +  \
                                                       msg) {}                \
    }

GENCODE_DEFINE_ERROR(NonPositiveProbability, input);
GENCODE_DEFINE_ERROR(SumNotOne, input);
GENCODE_DEFINE_ERROR(AlphabetTooSmall, input);
GENCODE_DEFINE_ERROR(AlphaOutOfRange, input);
GENCODE_DEFINE_ERROR(TOutOfRange, input);
GENCODE_DEFINE_ERROR(InadmissibleInput, input);
GENCODE_DEFINE_ERROR(UnknownSymbol, input);
GENCODE_DEFINE_ERROR(NoConvergence, convergence);
GENCODE_DEFINE_ERROR(KraftViolation, container);
GENCODE_DEFINE_ERROR(BadMagic, container);
GENCODE_DEFINE_ERROR(UnsupportedVersion, container);
GENCODE_DEFINE_ERROR(TruncatedStream, container);

#undef GENCODE_DEFINE_ERROR

}  // namespace gencode
