#ifndef HHV_TESTS_CORPUS_HPP
#define HHV_TESTS_CORPUS_HPP

#include <array>

namespace corpus {

// 50 expressions written in the printer's canonical style, so that
// print(parse(text)) == text exactly.
inline constexpr std::array<const char*, 50> kExpressions = {
    "x",
    "1",
    "0.5",
    "x^2",
    "x^0.5",
    "x^1.5",
    "x^-1",
    "x^-2.5",
    "ln(x)",
    "exp(x)",
    "sqrt(x)",
    "abs(x)",
    "-x",
    "-ln(x)",
    "x + 1",
    "x - 1",
    "2*x",
    "x/2",
    "1/x",
    "x + x^2",
    "x^2 - x",
    "3*x^2 + 2*x + 1",
    "x^2*ln(x)",
    "ln(x)/x",
    "ln(x)^2",
    "ln(x)^0.5",
    "exp(x/2)",
    "exp(-x)",
    "sqrt(x + 1)",
    "abs(x - 2)",
    "(x + 1)*(x - 1)",
    "(x + 1)/(x + 2)",
    "x*ln(x) - x",
    "1/(1 + x)",
    "1/(1 + x^2)",
    "x^3 - 3*x",
    "2/(x + 1)",
    "x^2/(1 + ln(x))",
    "exp(x)*ln(x)",
    "sqrt(x)*ln(x)",
    "x^2.5*ln(x)",
    "ln(x + sqrt(x))",
    "exp(ln(x)/2)",
    "abs(ln(x))",
    "x - x^0.5",
    "(ln(x) + 1)^2",
    "x^2 + 1/x^2",
    "-x^2 + 4*x - 4",
    "sqrt(1 + x^2)",
    "ln(x)*ln(x + 1)",
};

} // namespace corpus

#endif
