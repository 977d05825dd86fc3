#include "ease/types.hpp"

#include <stdexcept>
#include <string>

namespace ease {

std::string_view to_string(GramMode mode) {
  switch (mode) {
    case GramMode::cooccurrence: return "cooccurrence";
    case GramMode::centered: return "centered";
    case GramMode::standardized: return "standardized";
  }
  return "unknown";
}

GramMode parse_gram_mode(std::string_view name) {
  if (name == "cooccurrence") return GramMode::cooccurrence;
  if (name == "centered") return GramMode::centered;
  if (name == "standardized") return GramMode::standardized;
  throw std::invalid_argument("unknown gram mode '" + std::string(name) + "'");
}

}  // namespace ease
