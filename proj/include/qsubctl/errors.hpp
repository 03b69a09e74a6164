// Copyright 2026 The qsubctl Authors
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

#ifndef QSUBCTL_ERRORS_HPP
#define QSUBCTL_ERRORS_HPP

#include <exception>
#include <string>
#include <utility>

namespace qsubctl {

/// Broad failure classes. The CLI maps these onto process exit codes.
enum class ErrorKind {
    Input,      // malformed or inconsistent user data
    Numerical,  // a numerical routine could not certify its result
    Budget,     // a configured size cap was hit
};

/// Root of every exception thrown by the library.
///
/// Pipelines that chain several stages tag errors with the stage name on the
/// way out, so `what()` reads "commutant: ..." rather than a bare message.
class Error : public std::exception {
   public:
    Error(std::string name, ErrorKind kind, std::string message)
        : name_(std::move(name)), kind_(kind), message_(std::move(message)) {
        rebuild();
    }

    const char *what() const noexcept override { return what_.c_str(); }

    const std::string &name() const noexcept { return name_; }
    const std::string &message() const noexcept { return message_; }
    const std::string &stage() const noexcept { return stage_; }
    ErrorKind kind() const noexcept { return kind_; }

    void set_stage(std::string stage) {
        if (stage_.empty()) {
            stage_ = std::move(stage);
            rebuild();
        }
    }

   private:
    void rebuild() {
        what_ = stage_.empty() ? name_ + ": " + message_ : stage_ + ": " + name_ + ": " + message_;
    }

    std::string name_;
    ErrorKind kind_;
    std::string message_;
    std::string stage_;
    std::string what_;
};

#define QSUBCTL_DEFINE_ERROR(Type, Kind)                                          \
    class Type : public Error {                                                  \
       public:                                                                   \
        explicit Type(std::string message) : Error(#Type, Kind, std::move(message)) {} \
    }

QSUBCTL_DEFINE_ERROR(DimensionError, ErrorKind::Input);
QSUBCTL_DEFINE_ERROR(ShapeError, ErrorKind::Input);
QSUBCTL_DEFINE_ERROR(LengthMismatch, ErrorKind::Input);
QSUBCTL_DEFINE_ERROR(EmptyGenerators, ErrorKind::Input);
QSUBCTL_DEFINE_ERROR(NonUnitary, ErrorKind::Input);
QSUBCTL_DEFINE_ERROR(InvalidArgument, ErrorKind::Input);
QSUBCTL_DEFINE_ERROR(SchemaError, ErrorKind::Input);
QSUBCTL_DEFINE_ERROR(ArithmeticError, ErrorKind::Input);
QSUBCTL_DEFINE_ERROR(NumericalError, ErrorKind::Numerical);
QSUBCTL_DEFINE_ERROR(GenericityFailure, ErrorKind::Numerical);
QSUBCTL_DEFINE_ERROR(InvarianceViolation, ErrorKind::Numerical);
QSUBCTL_DEFINE_ERROR(NotIrreducible, ErrorKind::Numerical);
QSUBCTL_DEFINE_ERROR(IncompleteDecomposition, ErrorKind::Numerical);
QSUBCTL_DEFINE_ERROR(BudgetExceeded, ErrorKind::Budget);

#undef QSUBCTL_DEFINE_ERROR

/// Runs `fn`, tagging any library error that escapes it with `stage`.
template <typename Fn>
decltype(auto) with_stage(const char *stage, Fn &&fn) {
    try {
        return std::forward<Fn>(fn)();
    } catch (Error &e) {
        e.set_stage(stage);
        throw;
    }
}

}  // namespace qsubctl

#endif  // QSUBCTL_ERRORS_HPP
