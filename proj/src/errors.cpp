#include "wiso/errors.hpp"

namespace wiso {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::asymmetric_matrix: return "AsymmetricMatrix";
        case Errc::nonzero_diagonal: return "NonzeroDiagonal";
        case Errc::negative_distance: return "NegativeDistance";
        case Errc::zero_off_diagonal: return "ZeroOffDiagonal";
        case Errc::triangle_violation: return "TriangleViolation";
        case Errc::duplicate_label: return "DuplicateLabel";
        case Errc::size_mismatch: return "SizeMismatch";
        case Errc::unsorted_table: return "UnsortedTable";
        case Errc::decreasing_values: return "DecreasingValues";
        case Errc::collapse_without_flag: return "CollapseWithoutFlag";
        case Errc::cap_exceeded: return "CapExceeded";
        case Errc::m_exceeds_n: return "MExceedsN";
        case Errc::bad_dimension: return "BadDimension";
        case Errc::dimension_mismatch: return "DimensionMismatch";
        case Errc::index_out_of_range: return "IndexOutOfRange";
        case Errc::not_prime: return "NotPrime";
        case Errc::non_strict_on_values: return "NonStrictOnValues";
        case Errc::not_invertible_on_endpoints: return "NotInvertibleOnEndpoints";
        case Errc::infinite_mismatch: return "InfiniteMismatch";
        case Errc::bad_input: return "BadInput";
    }
    return "UnknownError";
}

void raise(Errc code, const std::string& what, std::vector<int> indices) {
    throw Error(code, std::string(errc_name(code)) + ": " + what, std::move(indices));
}

}  // namespace wiso
