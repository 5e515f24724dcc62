#ifndef HECONE_ERRORS_HPP
#define HECONE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hecone {

// Error taxonomy shared by all modules.  The CLI maps code() onto exit
// statuses: invalid input -> 2, unsupported parameter range -> 3,
// internal consistency failure -> 4.
class Error : public std::runtime_error {
public:
    Error(std::string type, const std::string& msg)
        : std::runtime_error(type + ": " + msg), type_(std::move(type)) {}
    const std::string& type() const { return type_; }
    virtual int exit_code() const { return 2; }

private:
    std::string type_;
};

class InvalidCurve : public Error {
public:
    explicit InvalidCurve(const std::string& msg) : Error("InvalidCurve", msg) {}
};

class InvalidPoint : public Error {
public:
    explicit InvalidPoint(const std::string& msg) : Error("InvalidPoint", msg) {}
};

class InvalidDivisor : public Error {
public:
    explicit InvalidDivisor(const std::string& msg) : Error("InvalidDivisor", msg) {}
};

class InvalidInput : public Error {
public:
    explicit InvalidInput(const std::string& msg) : Error("InvalidInput", msg) {}
};

class NotImplemented : public Error {
public:
    explicit NotImplemented(const std::string& msg) : Error("NotImplemented", msg) {}
    int exit_code() const override { return 3; }
};

class Unsupported : public Error {
public:
    explicit Unsupported(const std::string& msg) : Error("Unsupported", msg) {}
    int exit_code() const override { return 3; }
};

class BadPrime : public Error {
public:
    explicit BadPrime(const std::string& msg) : Error("BadPrime", msg) {}
};

class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error("InternalError", msg) {}
    int exit_code() const override { return 4; }
};

} // namespace hecone

#endif
