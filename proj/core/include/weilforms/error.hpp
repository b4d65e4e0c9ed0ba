#pragma once

#include <stdexcept>
#include <string>

namespace weilforms {

// Error categories double as process exit codes for the command-line tool.
enum class ErrorKind { Input = 2, Math = 3, Precision = 4 };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string code, const std::string& message)
        : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& code() const noexcept { return code_; }
    int exit_code() const noexcept { return static_cast<int>(kind_); }

private:
    ErrorKind kind_;
    std::string code_;
};

[[noreturn]] inline void fail_input(const std::string& code, const std::string& msg) {
    throw Error(ErrorKind::Input, code, msg);
}
[[noreturn]] inline void fail_math(const std::string& code, const std::string& msg) {
    throw Error(ErrorKind::Math, code, msg);
}
[[noreturn]] inline void fail_precision(const std::string& code, const std::string& msg) {
    throw Error(ErrorKind::Precision, code, msg);
}

}  // namespace weilforms
