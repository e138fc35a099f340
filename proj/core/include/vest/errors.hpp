#pragma once

#include <stdexcept>
#include <string>

namespace vest {

class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

#define VEST_ERROR(Name)                                                       \
	class Name : public Error {                                                \
	public:                                                                    \
		explicit Name(const std::string &what) : Error(#Name ": " + what) {}   \
	}

VEST_ERROR(ZeroDenominator);
VEST_ERROR(DegreeOverflow);
VEST_ERROR(ShapeMismatch);
VEST_ERROR(ChartMismatch);
VEST_ERROR(DegreeMismatch);
VEST_ERROR(AntisymmetryViolation);
VEST_ERROR(JacobiViolation);
VEST_ERROR(NilpotencyClassWrong);
VEST_ERROR(NotARepresentation);
VEST_ERROR(NotAGroupLaw);
VEST_ERROR(NonUnipotentJacobian);
VEST_ERROR(NonTermination);
VEST_ERROR(NotCocycle);
VEST_ERROR(NonContractibleIntersection);
VEST_ERROR(InvalidCover);
VEST_ERROR(UnknownVariable);
VEST_ERROR(UnknownInstance);
VEST_ERROR(ConfigError);

#undef VEST_ERROR

class ParseError : public Error {
public:
	ParseError(const std::string &msg, int line, int column)
	    : Error("ParseError at " + std::to_string(line) + ":" +
	            std::to_string(column) + ": " + msg),
	      line_(line), column_(column)
	{}
	int line() const { return line_; }
	int column() const { return column_; }

private:
	int line_;
	int column_;
};

} // namespace vest
