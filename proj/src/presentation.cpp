#include "fig/presentation.hpp"

namespace fig {

FreeModuleSpec Presentation::relation_spec() const {
  FreeModuleSpec spec;
  for (const auto& r : relations)
    spec.degrees.push_back(r.degree);
  return spec;
}

bool Presentation::operator==(const Presentation& other) const {
  if (!(field == other.field) || !(group == other.group) || truncation != other.truncation ||
      !(generators == other.generators) || relations.size() != other.relations.size())
    return false;
  for (std::size_t i = 0; i < relations.size(); ++i)
    if (relations[i].degree != other.relations[i].degree ||
        !(relations[i].coords == other.relations[i].coords))
      return false;
  return true;
}

PresentedModule from_presentation(const Presentation& p, std::size_t validate_dim) {
  for (const auto& r : p.relations) {
    if (r.degree < 0 || r.degree > p.truncation)
      throw TruncationExceeded("relation in degree " + std::to_string(r.degree) +
                               " beyond truncation " + std::to_string(p.truncation));
    const std::size_t expected =
        free_offset(p.generators, p.generators.degrees.size(), r.degree, p.group);
    if (r.coords.rows() != expected || r.coords.cols() != 1 || !(r.coords.field() == p.field))
      throw ContextMismatch("relation in degree " + std::to_string(r.degree) + " has " +
                            std::to_string(r.coords.rows()) + " coefficients, expected " +
                            std::to_string(expected));
  }
  Module free = free_module(p.generators, p.truncation, p.field, p.group);
  Submodule rels = submodule_span(free, p.relations);
  auto q = quotient(free, rels, Validate::no);
  if (validate_dim > 0) {
    auto problems = functor_violations(q.module, validate_dim);
    if (!problems.empty())
      throw InvalidModule("presented module fails the functor check: " + problems.front());
  }
  return {p, std::move(free), std::move(rels), std::move(q.module), std::move(q.map)};
}

Element project(const PresentedModule& presented, const Element& x) {
  return {x.degree, presented.projection.maps.at(x.degree) * x.coords};
}

}  // namespace fig
