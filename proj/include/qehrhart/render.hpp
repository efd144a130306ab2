#pragma once

#include <string>

#include "qehrhart/series.hpp"
#include "qehrhart/xpoly.hpp"
#include "qehrhart/zpoly.hpp"

namespace qe {

/// Canonical text forms: terms in strictly decreasing degree, explicit *
/// and ^, and a non-unit denominator rendered as ( num ) / ( den ).

std::string render(const ZPoly& p, const std::string& var = "q");
std::string render(const QRat& r);
/// Polynomial in `var` with coefficients in q, e.g. "q*x + 1".
std::string render(const XPoly& f, const std::string& var = "x");
/// Numerator of a series as a polynomial in t, e.g. "1 - q^3*t^2".
std::string render_series_numerator(const SeriesTQ& s);

/// Inverse of render: parse an expression in q and `var` built from
/// integers, + - * / ^ and parentheses. Division is only allowed by
/// expressions free of `var`.
XPoly parse_xpoly(const std::string& text, const std::string& var = "x");
/// Expression in q alone.
QRat parse_qrat(const std::string& text);

}  // namespace qe
