// SPDX-License-Identifier: Apache-2.0

#ifndef GSB_ERROR_HPP
#define GSB_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gsb {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// An operation that needs a leading term was handed the zero polynomial.
class ZeroPolynomialError : public Error {
public:
	using Error::Error;
};

/// Text input (word, polynomial, presentation) did not match the grammar.
class ParseError : public Error {
public:
	ParseError(const std::string &msg, std::size_t line, std::size_t column)
	: Error(msg + " (line " + std::to_string(line) + ", column " +
	        std::to_string(column) + ")")
	, line_(line), column_(column) {}

	std::size_t line() const noexcept { return line_; }
	std::size_t column() const noexcept { return column_; }

private:
	std::size_t line_;
	std::size_t column_;
};

/// The brute-force oracle would exceed its enumeration budget.
class BudgetRefusal : public Error {
public:
	using Error::Error;
};

} // namespace gsb

#endif
