#pragma once

#include <stdexcept>
#include <string>

namespace specfm {

// Base class for all engine errors. `kind` is a short stable tag used by the
// CLI to pick exit codes (input vs. undetermined vs. internal).
class Error : public std::runtime_error {
public:
    enum class Kind {
        Input,         // malformed input, precondition violation
        Undetermined,  // mathematically honest "cannot decide over this field"
        Internal,      // invariant breakage, should not happen
    };

    Error(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

[[noreturn]] inline void fail_input(const std::string& msg) {
    throw Error(Error::Kind::Input, msg);
}

[[noreturn]] inline void fail_undetermined(const std::string& msg) {
    throw Error(Error::Kind::Undetermined, msg);
}

[[noreturn]] inline void fail_internal(const std::string& msg) {
    throw Error(Error::Kind::Internal, msg);
}

}  // namespace specfm
