#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "lomlab/circuits.hpp"
#include "lomlab/travels.hpp"

namespace lomlab {

/// How f is computed: from circuit sign vectors, or by counting k-neighborly plain travels.
enum class Engine { circuits, travels };

inline std::string_view to_string(Engine e) noexcept { return e == Engine::circuits ? "circuits" : "travels"; }

inline std::optional<Engine> parse_engine(std::string_view s) noexcept {
    if (s == "circuits") return Engine::circuits;
    if (s == "travels") return Engine::travels;
    return std::nullopt;
}

/// f_{M_A}(r,n,k) with the chosen engine. The circuits route uses the pruned search.
inline std::uint64_t f_count(const SignMatrix& a, int k, Engine engine) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    if (a.cols() < a.rows() + 1) throw dimension_error("counting needs n >= r+1");
    if (engine == Engine::travels) return f_via_travels(a, k);
    return circuit_counter(a).count_pruned(k);
}

}  // namespace lomlab
