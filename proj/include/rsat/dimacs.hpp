#pragma once

#include "rsat/formula.hpp"
#include "rsat/variant.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rsat {

/// Malformed DIMACS input. `line()` is 1-based; 0 means end of input.
class DimacsError : public std::invalid_argument {
public:
    DimacsError(std::size_t line, const std::string& what);
    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct DimacsFile {
    CnfInstance instance;
    /// From a `c variant <spec>` annotation.
    std::optional<VariantSpec> variant;
};

/// Reads a `p cnf` body plus the annotations
///   c mode sat|nae
///   c duplicates allowed|forbidden
///   c variant <spec>
///   c set-clauses <1-based indices>   (mixed instances only)
/// Defaults are mode sat and duplicates forbidden. With duplicates allowed,
/// clauses have multiset flavor. Throws DimacsError.
DimacsFile parse_dimacs_file(std::string_view text);
CnfInstance parse_dimacs(std::string_view text);

/// Canonical text: annotations, header, one clause per line with sorted
/// literals. parse_dimacs(emit_dimacs(f)) == f.
std::string emit_dimacs(const CnfInstance& inst, const std::optional<VariantSpec>& variant = std::nullopt);

/// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

} // namespace rsat
