#include "minorkit/detkit.hpp"

namespace minorkit {

std::string_view to_string(DetAlgo algo) {
    switch (algo) {
    case DetAlgo::cofactor: return "cofactor";
    case DetAlgo::bareiss: return "bareiss";
    case DetAlgo::condensation: return "condensation";
    }
    return "unknown";
}

DetAlgo parse_det_algo(std::string_view name) {
    if (name == "cofactor") return DetAlgo::cofactor;
    if (name == "bareiss") return DetAlgo::bareiss;
    if (name == "condensation") return DetAlgo::condensation;
    throw UsageError("unknown determinant algorithm '" + std::string(name) + "'");
}

} // namespace minorkit
