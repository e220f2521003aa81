#pragma once

#include <optional>

#include "cyclotomic.hpp"
#include "laurent.hpp"
#include "rational.hpp"

namespace qhyper {

inline std::optional<LaurentZ> try_unit_inverse(const LaurentZ& c) {
    if (!c.is_unit_monomial()) return std::nullopt;
    return c.unit_inverse();
}

inline std::optional<RationalQ> try_unit_inverse(const RationalQ& c) {
    if (c.is_zero()) return std::nullopt;
    return c.inverse();
}

inline std::optional<CycloZ> try_unit_inverse(const CycloZ& c) {
    try {
        return c.unit_inverse();
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
}

}  // namespace qhyper
