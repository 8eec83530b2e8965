#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trp/orientation.hpp"
#include "trp/pencil.hpp"
#include "trp/topology.hpp"

namespace trp {

inline constexpr const char* kVersion = "1.0.0";

enum class Format { text, machine };

/// FNV-1a digest of a document, as 16 hex digits.
std::string digest(const std::string& text);

/// One-line census such as "pseudo-line + 4 ovals, no nesting" or "0 components".
std::string topology_summary(const CurveTopology& t);

std::string topology_report(const CurveTopology& t, Format f);
std::string certificate_report(const TotalRealityCertificate& cert, const Pencil& p, Format f);
std::string search_report(const SearchReport& r, Format f);

struct QuinticReport {
    QuinticVerdict verdict;
    int components = 0;
    /// Present when a totally real pencil of degree 2 was found.
    std::optional<ComponentOrientation> orientation;
    std::vector<std::optional<OvalSign>> signs;
};
std::string quintic_report(const QuinticReport& q, Format f);

/// Wraps a report body with the command name, input digest, seed and version.
std::string run_report(const std::string& command, const std::string& input, std::uint64_t seed,
                       const std::string& body, Format f);

}  // namespace trp
