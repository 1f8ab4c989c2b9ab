#include "bigjump/tail_model.hpp"

#include <stdexcept>

namespace bigjump {

const char* to_string(Variant v) {
    switch (v) {
        case Variant::PurePareto: return "pure";
        case Variant::SmoothPareto: return "smooth";
    }
    return "?";
}

Variant variant_from_string(const std::string& s) {
    if (s == "pure" || s == "pure_pareto" || s == "PurePareto") return Variant::PurePareto;
    if (s == "smooth" || s == "smooth_pareto" || s == "SmoothPareto")
        return Variant::SmoothPareto;
    throw std::invalid_argument("unknown variant '" + s + "' (expected 'pure' or 'smooth')");
}

} // namespace bigjump
