#pragma once

#include <stdexcept>
#include <string>

namespace aibomkit {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownToken : public Error {
public:
    UnknownToken(std::string kind, std::string token)
        : Error("unknown " + kind + " token '" + token + "'")
        , kind_(std::move(kind))
        , token_(std::move(token)) {}

    const std::string& kind() const noexcept { return kind_; }
    const std::string& token() const noexcept { return token_; }

private:
    std::string kind_;
    std::string token_;
};

class BadTimestamp : public Error {
public:
    explicit BadTimestamp(const std::string& text)
        : Error("bad timestamp '" + text + "': expected YYYY-MM-DDThh:mm:ssZ") {}
};

class BadIri : public Error {
public:
    explicit BadIri(const std::string& text) : Error("bad IRI '" + text + "'") {}
};

class BadDecimal : public Error {
public:
    explicit BadDecimal(const std::string& text) : Error("bad decimal '" + text + "'") {}
};

class DuplicateId : public Error {
public:
    explicit DuplicateId(std::string id)
        : Error("duplicate spdxId '" + id + "'"), id_(std::move(id)) {}

    const std::string& id() const noexcept { return id_; }

private:
    std::string id_;
};

class SyntaxError : public Error {
public:
    using Error::Error;
};

class MissingType : public Error {
public:
    explicit MissingType(const std::string& where)
        : Error("object without \"type\" at " + where) {}
};

class UnknownFramework : public Error {
public:
    explicit UnknownFramework(const std::string& id) : Error("unknown framework '" + id + "'") {}
};

class UnknownFixture : public Error {
public:
    explicit UnknownFixture(const std::string& name) : Error("unknown fixture '" + name + "'") {}
};

}  // namespace aibomkit
