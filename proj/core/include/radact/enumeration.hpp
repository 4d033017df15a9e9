#ifndef RADACT_ENUMERATION_HPP
#define RADACT_ENUMERATION_HPP

#include <cstddef>
#include <functional>
#include <optional>

#include "radact/act.hpp"

namespace radact {

// Visits every action of `monoid` on {0..size-1} whose restriction to
// {0..base.size()-1} is `base` (a subact), in lexicographic order of the
// free table cells. With no base every act of that size is visited. The
// visitor returns false to stop; the function returns false iff stopped.
bool for_each_action(const FiniteMonoid& monoid, const std::optional<FiniteAct>& base,
                     std::size_t size, const std::function<bool(const FiniteAct&)>& visit);

}  // namespace radact

#endif  // RADACT_ENUMERATION_HPP
