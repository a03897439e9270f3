#pragma once

#include <stdexcept>
#include <string>

namespace chm {

enum class Errc {
    order_too_small,
    negative_diagonal,
    bad_sign_length,
    bad_sign_value,
    not_positive,
    out_of_range,
    even_k,
    odd_order,
    no_k,
    unsupported_s,
    bad_block,
    family_order_mismatch,
    budget_exceeded,
    not_odd_integer,
    parse,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

/// Thrown by the generator text-format parser; column is 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t column, const std::string& what)
        : Error(Errc::parse, what + " (column " + std::to_string(column) + ")"), column_(column) {}
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

}  // namespace chm
