#pragma once

#include <string>

#include "wiso/metric_space.hpp"
#include "wiso/persistence.hpp"

namespace wiso {

/// Space files: JSON objects {"labels": [...], "distances": [[...], ...]} or
/// CSV with a label header line followed by the full symmetric matrix.
/// Serialization uses shortest round-trip formatting, so parse(serialize(X))
/// reproduces X bitwise.
FiniteMetricSpace parse_space_json(const std::string& text);
FiniteMetricSpace parse_space_csv(const std::string& text);
std::string space_to_json(const FiniteMetricSpace& X);
std::string space_to_csv(const FiniteMetricSpace& X);

/// Reads a space file, sniffing JSON vs CSV from the content.
FiniteMetricSpace read_space_file(const std::string& path);
void write_space_file(const FiniteMetricSpace& X, const std::string& path, bool as_csv);

/// Barcode text format: one `dim birth death` record per line, `inf` for an
/// infinite death.
std::string barcode_to_text(const Barcode& bc);
Barcode parse_barcode_text(const std::string& text);

/// True when the file content looks like a barcode rather than a space.
bool looks_like_barcode(const std::string& text);

std::string read_file(const std::string& path);

/// Shortest round-trip decimal form of a double (also used in reports).
std::string format_double(double v);

/// FNV-1a 64-bit content digest, hex encoded.
std::string content_digest(const std::string& bytes);

}  // namespace wiso
