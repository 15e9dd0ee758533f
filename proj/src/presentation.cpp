#include "arck0/presentation.hpp"

namespace arck0 {

std::string to_string(const GroupPresentation &g) {
  std::string out;
  if (g.free_rank > 0)
    out = "Z^" + std::to_string(g.free_rank);
  std::size_t i = 0;
  while (i < g.invariant_factors.size()) {
    std::size_t j = i;
    while (j < g.invariant_factors.size() && g.invariant_factors[j] == g.invariant_factors[i])
      ++j;
    if (!out.empty())
      out += " + ";
    out += "(Z/" + g.invariant_factors[i].str() + ")^" + std::to_string(j - i);
    i = j;
  }
  return out.empty() ? "0" : out;
}

} // namespace arck0
