#pragma once

#include <limits>
#include <utility>

#include "msvc/graph.hpp"

namespace msvc::detail {

// Best ordering seen so far under the (cost, position vector) total order.
// Merging is order-independent, which keeps parallel reductions deterministic.
struct Incumbent {
  Cost cost = std::numeric_limits<Cost>::max();
  Ordering ordering;
  bool found = false;

  void offer(Cost c, Ordering&& ord) {
    if (!found || c < cost || (c == cost && lex_less_positions(ord, ordering))) {
      cost = c;
      ordering = std::move(ord);
      found = true;
    }
  }
  void merge(Incumbent&& other) {
    if (other.found) offer(other.cost, std::move(other.ordering));
  }
};

}  // namespace msvc::detail
