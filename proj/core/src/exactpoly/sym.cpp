#include "torsion/exactpoly/sym.hpp"

namespace torsion {
namespace {

constexpr std::array<std::string_view, kSymCount> kNames = {
    "x",  "y",  "b2", "b4",    "b6",     "b8", "a1", "a2", "a3",
    "a4", "a6", "delta", "lambda", "u", "v", "s",  "t"};

}  // namespace

std::string_view name(Sym s) noexcept { return kNames[index(s)]; }

std::optional<Sym> parse_sym(std::string_view text) noexcept {
  for (std::size_t i = 0; i < kSymCount; ++i) {
    if (kNames[i] == text) return static_cast<Sym>(i);
  }
  return std::nullopt;
}

}  // namespace torsion
