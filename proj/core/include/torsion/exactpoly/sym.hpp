#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace torsion {

// Closed symbol alphabet. Declaration order is the variable order used by the
// graded-lexicographic monomial order (x is the highest variable).
enum class Sym : std::uint8_t {
  x, y, b2, b4, b6, b8, a1, a2, a3, a4, a6, delta, lambda, u, v, s, t
};

inline constexpr std::size_t kSymCount = 17;

inline constexpr std::array<Sym, kSymCount> kAllSyms = {
    Sym::x,  Sym::y,  Sym::b2, Sym::b4,    Sym::b6,     Sym::b8,
    Sym::a1, Sym::a2, Sym::a3, Sym::a4,    Sym::a6,     Sym::delta,
    Sym::lambda, Sym::u, Sym::v, Sym::s, Sym::t};

constexpr std::size_t index(Sym s) noexcept { return static_cast<std::size_t>(s); }

std::string_view name(Sym s) noexcept;
std::optional<Sym> parse_sym(std::string_view text) noexcept;

}  // namespace torsion
