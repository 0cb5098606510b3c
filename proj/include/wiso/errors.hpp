#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace wiso {

enum class Errc {
    asymmetric_matrix,
    nonzero_diagonal,
    negative_distance,
    zero_off_diagonal,
    triangle_violation,
    duplicate_label,
    size_mismatch,
    unsorted_table,
    decreasing_values,
    collapse_without_flag,
    cap_exceeded,
    m_exceeds_n,
    bad_dimension,
    dimension_mismatch,
    index_out_of_range,
    not_prime,
    non_strict_on_values,
    not_invertible_on_endpoints,
    infinite_mismatch,
    bad_input,
};

const char* errc_name(Errc c);

/// Base error for all library failures. `indices()` carries a witness where
/// one exists (e.g. the offending triple of a triangle violation).
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what, std::vector<int> indices = {})
        : std::runtime_error(what), code_(code), indices_(std::move(indices)) {}

    Errc code() const { return code_; }
    const std::vector<int>& indices() const { return indices_; }

private:
    Errc code_;
    std::vector<int> indices_;
};

inline bool is_cap_error(const Error& e) { return e.code() == Errc::cap_exceeded; }

[[noreturn]] void raise(Errc code, const std::string& what, std::vector<int> indices = {});

}  // namespace wiso
