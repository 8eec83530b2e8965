#pragma once

#include <string>

#include "trp/form.hpp"
#include "trp/pencil.hpp"

namespace trp {

/// Text curve document:
///   format_version 1
///   name <text>          (optional)
///   note <text>          (optional)
///   degree <d>
///   coef <a> <b> <c> <num> <den>     one line per nonzero coefficient of x^a y^b z^c
/// Blank lines and lines starting with '#' are ignored.  Fractions must be reduced with a
/// positive denominator; every exponent triple must sum to the degree.
struct CurveDocument {
    int format_version = 1;
    std::string name;
    std::string note;
    TernaryForm form;

    friend bool operator==(const CurveDocument&, const CurveDocument&) = default;
};

/// Throws ParseError with the line and column of the first problem.
CurveDocument parse_curve(const std::string& text);
/// Canonical text: coefficients by decreasing exponent triple.
std::string serialize_curve(const CurveDocument& doc);

/// Pencil document:
///   format_version 1
///   pencil_degree <k>
///   base <x> <y> <z>     rationals written p or p/q, one line per base point
///   generator f
///   coef ...             as in curve documents
///   generator g
///   coef ...
Pencil parse_pencil(const std::string& text);
std::string serialize_pencil(const Pencil& p);

/// Certificate document: verdict, critical parameter intervals, evaluated parameters, witness,
/// then the pencil document.
std::string serialize_certificate(const TotalRealityCertificate& cert, const Pencil& p);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace trp
